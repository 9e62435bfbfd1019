//! Buchberger-style completion for two-sided ideals in the free algebra,
//! deglex order, obstructions resolved by increasing degree.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap, HashMap};

use super::poly::{cmp_words, Letter, NcPoly, OrdWord, Word};
use crate::scalars::Field;

pub const DEFAULT_DEGREE_CAP: usize = 12;

#[derive(Clone, Debug)]
pub struct GbOptions {
    /// Obstructions whose overlap word is longer than this are dropped and
    /// the result is marked capped.
    pub degree_cap: usize,
    /// Hard limit on the number of live rules; exceeding it also caps.
    pub max_rules: usize,
    /// Rules flagged as coming from an associative table (group
    /// multiplication) do not need their mutual overlaps resolved.
    pub skip_table_overlaps: bool,
}

impl Default for GbOptions {
    fn default() -> Self {
        GbOptions { degree_cap: DEFAULT_DEGREE_CAP, max_rules: 2_000_000, skip_table_overlaps: true }
    }
}

#[derive(Clone)]
struct Rule<F> {
    poly: NcPoly<F>,
    table: bool,
}

#[derive(Clone, Debug, Default)]
pub struct GbStats {
    pub obstructions: usize,
    pub reductions_to_zero: usize,
    pub rules_added: usize,
    pub rules_removed: usize,
    pub max_degree_seen: usize,
}

/// Rewriting system in construction; also the finished result.
#[derive(Clone)]
pub struct GroebnerBasis<F> {
    letters: usize,
    rules: Vec<Option<Rule<F>>>,
    index: HashMap<Word, usize>,
    lengths: BTreeMap<usize, usize>,
    by_letter: Vec<Vec<usize>>,
    by_first: Vec<Vec<usize>>,
    by_last: Vec<Vec<usize>>,
    pub complete: bool,
    pub capped: bool,
    pub stats: GbStats,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Obstruction {
    degree: usize,
    seq: u64,
    left: usize,
    right: usize,
    overlap: usize,
}

impl<F: Field> GroebnerBasis<F> {
    fn empty(letters: usize) -> Self {
        GroebnerBasis {
            letters,
            rules: Vec::new(),
            index: HashMap::new(),
            lengths: BTreeMap::new(),
            by_letter: vec![Vec::new(); letters],
            by_first: vec![Vec::new(); letters],
            by_last: vec![Vec::new(); letters],
            complete: false,
            capped: false,
            stats: GbStats::default(),
        }
    }

    pub fn letters(&self) -> usize {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    /// Live rules ordered by leading word.
    pub fn polynomials(&self) -> Vec<&NcPoly<F>> {
        let mut v: Vec<&NcPoly<F>> = self.rules.iter().flatten().map(|r| &r.poly).collect();
        v.sort_by(|a, b| cmp_words(a.leading_word().unwrap(), b.leading_word().unwrap()));
        v
    }

    pub fn leading_words(&self) -> impl Iterator<Item = &Word> {
        self.index.keys()
    }

    /// Id of a rule whose leading word occurs in `w` at some position.
    fn find_divisor(&self, w: &[Letter]) -> Option<(usize, usize)> {
        for &len in self.lengths.keys() {
            if len > w.len() {
                break;
            }
            for start in 0..=w.len() - len {
                if let Some(&id) = self.index.get(&w[start..start + len]) {
                    return Some((id, start));
                }
            }
        }
        None
    }

    /// Does some leading word occur as a suffix of `w`?
    fn has_suffix_divisor(&self, w: &[Letter]) -> bool {
        for &len in self.lengths.keys() {
            if len > w.len() {
                break;
            }
            if self.index.contains_key(&w[w.len() - len..]) {
                return true;
            }
        }
        false
    }

    pub fn is_normal(&self, w: &[Letter]) -> bool {
        self.find_divisor(w).is_none()
    }

    /// Full normal form of `p`.
    pub fn reduce(&self, p: &NcPoly<F>) -> NcPoly<F> {
        if p.is_zero() {
            return p.clone();
        }
        let mut pending: BTreeMap<OrdWord, F> = p.terms().iter().map(|(w, c)| (OrdWord(w.clone()), c.clone())).collect();
        let mut out: Vec<(Word, F)> = Vec::new();
        while let Some((OrdWord(w), c)) = pending.pop_last() {
            if c.is_zero() {
                continue;
            }
            match self.find_divisor(&w) {
                None => out.push((w, c)),
                Some((id, start)) => {
                    let rule = &self.rules[id].as_ref().unwrap().poly;
                    let lw = rule.leading_word().unwrap().len();
                    let (left, right) = (&w[..start], &w[start + lw..]);
                    for (tw, tc) in &rule.terms()[1..] {
                        let mut x = Word::with_capacity(left.len() + tw.len() + right.len());
                        x.extend_from_slice(left);
                        x.extend_from_slice(tw);
                        x.extend_from_slice(right);
                        let d = tc.mul(&c).neg();
                        match pending.get_mut(&OrdWord(x.clone())) {
                            Some(v) => {
                                *v = v.add(&d);
                                if v.is_zero() {
                                    pending.remove(&OrdWord(x));
                                }
                            }
                            None => {
                                pending.insert(OrdWord(x), d);
                            }
                        }
                    }
                }
            }
        }
        NcPoly::from_sorted(out)
    }

    fn insert(&mut self, poly: NcPoly<F>, table: bool) -> usize {
        let lw = poly.leading_word().unwrap().clone();
        let id = self.rules.len();
        for &l in lw.iter().collect::<BTreeSet<_>>() {
            self.by_letter[l as usize].push(id);
        }
        self.by_first[lw[0] as usize].push(id);
        self.by_last[lw[lw.len() - 1] as usize].push(id);
        *self.lengths.entry(lw.len()).or_default() += 1;
        self.index.insert(lw, id);
        self.rules.push(Some(Rule { poly, table }));
        self.stats.rules_added += 1;
        id
    }

    fn remove(&mut self, id: usize) -> Rule<F> {
        let rule = self.rules[id].take().unwrap();
        let lw = rule.poly.leading_word().unwrap();
        self.index.remove(lw);
        let n = self.lengths.get_mut(&lw.len()).unwrap();
        *n -= 1;
        if *n == 0 {
            self.lengths.remove(&lw.len());
        }
        self.stats.rules_removed += 1;
        rule
    }

    /// Live rules whose leading word contains `w` as a factor.
    fn rules_containing(&self, w: &[Letter]) -> Vec<usize> {
        let pivot = w.iter().min_by_key(|&&l| self.by_letter[l as usize].len()).unwrap();
        self.by_letter[*pivot as usize]
            .iter()
            .copied()
            .filter(|&id| {
                self.rules[id].as_ref().is_some_and(|r| {
                    let lw = r.poly.leading_word().unwrap();
                    lw.len() >= w.len() && lw.windows(w.len()).any(|x| x == w)
                })
            })
            .collect()
    }

    /// Value of the overlap `u·v[k..] = u[..|u|-k]·v` as an S-polynomial.
    fn s_poly(&self, o: &Obstruction) -> Option<NcPoly<F>> {
        let a = &self.rules[o.left].as_ref()?.poly;
        let b = &self.rules[o.right].as_ref()?.poly;
        let u = a.leading_word().unwrap();
        let v = b.leading_word().unwrap();
        let one = F::one();
        let lhs = a.sandwich(&[], &v[o.overlap..], &one);
        let rhs = b.sandwich(&u[..u.len() - o.overlap], &[], &one);
        Some(lhs.sub(&rhs))
    }
}

/// Computes a reduced Gröbner basis of the two-sided ideal generated by
/// `relations`. Relations flagged `true` belong to an associative table.
pub fn groebner<F: Field>(letters: usize, relations: &[(NcPoly<F>, bool)], opts: &GbOptions) -> GroebnerBasis<F> {
    let mut gb = GroebnerBasis::empty(letters);
    let mut heap: BinaryHeap<Reverse<Obstruction>> = BinaryHeap::new();
    let mut seq = 0u64;
    let mut work: Vec<(NcPoly<F>, bool)> = Vec::new();

    let mut add = |gb: &mut GroebnerBasis<F>,
                   heap: &mut BinaryHeap<Reverse<Obstruction>>,
                   work: &mut Vec<(NcPoly<F>, bool)>,
                   p: &NcPoly<F>,
                   table: bool| {
        let r = gb.reduce(p);
        if r.is_zero() {
            gb.stats.reductions_to_zero += 1;
            return;
        }
        let r = r.monic();
        // a table rule stays a table rule only if untouched by reduction
        let table = table && r == p.monic();
        let lw = r.leading_word().unwrap().clone();
        for id in gb.rules_containing(&lw) {
            let old = gb.remove(id);
            work.push((old.poly, false));
        }
        let id = gb.insert(r, table);
        let n = lw.len();
        let mut partners = BTreeSet::new();
        for k in 1..n {
            partners.extend(gb.by_first[lw[k] as usize].iter().copied().filter(|&j| gb.rules[j].is_some()));
            partners.extend(gb.by_last[lw[k - 1] as usize].iter().copied().filter(|&j| gb.rules[j].is_some()));
        }
        for j in partners {
            let other = gb.rules[j].as_ref().unwrap();
            if opts.skip_table_overlaps && table && other.table {
                continue;
            }
            let v = other.poly.leading_word().unwrap();
            let m = v.len();
            // suffix of lw meets prefix of v, and suffix of v meets prefix of lw
            for k in 1..n.min(m) {
                if lw[n - k..] == v[..k] {
                    heap.push(Reverse(Obstruction { degree: n + m - k, seq, left: id, right: j, overlap: k }));
                    seq += 1;
                }
                if j != id && v[m - k..] == lw[..k] {
                    heap.push(Reverse(Obstruction { degree: n + m - k, seq, left: j, right: id, overlap: k }));
                    seq += 1;
                }
            }
        }
    };

    for (p, table) in relations {
        add(&mut gb, &mut heap, &mut work, p, *table);
        while let Some((q, t)) = work.pop() {
            add(&mut gb, &mut heap, &mut work, &q, t);
        }
    }

    while let Some(Reverse(o)) = heap.pop() {
        if gb.rules[o.left].is_none() || gb.rules[o.right].is_none() {
            continue;
        }
        if o.degree > opts.degree_cap || gb.len() > opts.max_rules {
            gb.capped = true;
            continue;
        }
        gb.stats.obstructions += 1;
        gb.stats.max_degree_seen = gb.stats.max_degree_seen.max(o.degree);
        let Some(s) = gb.s_poly(&o) else { continue };
        add(&mut gb, &mut heap, &mut work, &s, false);
        while let Some((q, t)) = work.pop() {
            add(&mut gb, &mut heap, &mut work, &q, t);
        }
    }

    // interreduce tails
    let ids: Vec<usize> = (0..gb.rules.len()).filter(|&i| gb.rules[i].is_some()).collect();
    for id in ids {
        let rule = gb.rules[id].as_ref().unwrap();
        let lead = NcPoly::from_sorted(vec![rule.poly.terms()[0].clone()]);
        let tail = NcPoly::from_sorted(rule.poly.terms()[1..].to_vec());
        let tail = gb.reduce(&tail);
        gb.rules[id].as_mut().unwrap().poly = lead.add(&tail);
    }
    gb.complete = !gb.capped;
    gb
}

/// Result of counting normal words.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dimension {
    Finite(usize),
    /// Counting stopped at the bound; the number is a lower bound.
    AtLeast(usize),
}

impl Dimension {
    pub fn value(&self) -> Option<usize> {
        match self {
            Dimension::Finite(n) => Some(*n),
            Dimension::AtLeast(_) => None,
        }
    }
}

impl std::fmt::Display for Dimension {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Dimension::Finite(n) => write!(f, "{n}"),
            Dimension::AtLeast(n) => write!(f, "infinite/unknown (>= {n})"),
        }
    }
}

/// Counts words irreducible by every leading word, up to `max_len` letters
/// and `max_count` words. The count is exact when every normal word is
/// shorter than `max_len` and the basis is complete.
pub fn count_normal_words<F: Field>(gb: &GroebnerBasis<F>, max_len: usize, max_count: usize) -> Dimension {
    let mut count = 1usize;
    let mut frontier: Vec<Word> = vec![Word::new()];
    let mut hit_bound = false;
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for l in 0..gb.letters as Letter {
                let mut x = w.clone();
                x.push(l);
                if !gb.has_suffix_divisor(&x) {
                    next.push(x);
                }
            }
        }
        count += next.len();
        if count > max_count {
            return Dimension::AtLeast(count);
        }
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }
    if !frontier.is_empty() {
        hit_bound = true;
    }
    if hit_bound || !gb.complete {
        Dimension::AtLeast(count)
    } else {
        Dimension::Finite(count)
    }
}

pub fn dimension_from_gb<F: Field>(gb: &GroebnerBasis<F>) -> Dimension {
    count_normal_words(gb, 64, 10_000_000)
}

/// Rechecks every overlap and inclusion; true when all resolve to zero.
pub fn verify<F: Field>(gb: &GroebnerBasis<F>) -> bool {
    let live: Vec<usize> = (0..gb.rules.len()).filter(|&i| gb.rules[i].is_some()).collect();
    for &i in &live {
        let u = gb.rules[i].as_ref().unwrap().poly.leading_word().unwrap();
        for &j in &live {
            let v = gb.rules[j].as_ref().unwrap().poly.leading_word().unwrap();
            if i != j && u.len() >= v.len() && u.windows(v.len()).any(|x| x == v.as_slice()) {
                return false;
            }
            for k in 1..u.len().min(v.len()) {
                if u[u.len() - k..] == v[..k] {
                    let o = Obstruction { degree: 0, seq: 0, left: i, right: j, overlap: k };
                    if !gb.reduce(&gb.s_poly(&o).unwrap()).is_zero() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Rational;

    fn w(ls: &[Letter]) -> NcPoly<Rational> {
        NcPoly::word(ls)
    }

    #[test]
    fn idempotent_generator() {
        let rels = vec![(w(&[0, 0]).sub(&w(&[0])), false)];
        let gb = groebner(1, &rels, &GbOptions::default());
        assert!(gb.complete);
        assert_eq!(gb.len(), 1);
        assert_eq!(dimension_from_gb(&gb), Dimension::Finite(2));
        assert!(gb.reduce(&rels[0].0).is_zero());
    }

    #[test]
    fn klein_four() {
        let one = NcPoly::constant(Rational::one());
        let rels = vec![
            (w(&[1, 0]).sub(&w(&[0, 1])), false),
            (w(&[0, 0]).sub(&one), false),
            (w(&[1, 1]).sub(&one), false),
        ];
        let gb = groebner(2, &rels, &GbOptions::default());
        assert!(gb.complete && verify(&gb));
        assert_eq!(dimension_from_gb(&gb), Dimension::Finite(4));
    }

    #[test]
    fn free_algebra_is_unbounded() {
        let gb = groebner::<Rational>(2, &[], &GbOptions::default());
        assert!(matches!(count_normal_words(&gb, 5, 1000), Dimension::AtLeast(_)));
    }

    #[test]
    fn needs_completion() {
        // x y = y, y x = x forces new overlaps
        let rels = vec![(w(&[0, 1]).sub(&w(&[1])), false), (w(&[1, 0]).sub(&w(&[0])), false)];
        let gb = groebner(2, &rels, &GbOptions::default());
        assert!(gb.complete && verify(&gb));
        for (p, _) in &rels {
            assert!(gb.reduce(p).is_zero());
        }
    }
}
