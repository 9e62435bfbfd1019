//! Presentations of `Br(W)`, its variants and `Br(W, ℒ)` as relation lists
//! over the alphabet `{g_w} ∪ {f_L} ∪ {e_H}`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::engine::{groebner, GbOptions, GroebnerBasis};
use super::poly::{Letter, NcPoly, Word};
use crate::group::{Elem, ReflectionGroup};
use crate::lattice::Lattice;
use crate::scalars::{parse_scalar, CycNumber, Field, ParamScalar, Rational, ScalarError, Var};

#[derive(Debug, Error)]
pub enum PresentationError {
    #[error("the lattice variant needs a lattice")]
    MissingLattice,
    #[error("polynomial Q missing for hyperplane orbit {0}")]
    MissingQ(usize),
    #[error("parameter {0} left unspecialized")]
    Unspecialized(String),
    #[error("coefficient {0} is not rational")]
    NotRational(String),
    #[error("unknown variant `{0}`")]
    UnknownVariant(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Variant {
    Chen,
    /// Adds `w e_H = e_H w = e_H` for the witness pairs of (1)'.
    ChenPrime,
    /// Adds `s e_H = e_H s = e_H` for the reflection pairs of (1)''.
    ChenDoublePrime,
    ChenBoth,
    /// `e_H Q(e_H) = 0` in place of `e_H² = δ e_H`, one `Q` per hyperplane
    /// orbit given by ascending coefficients.
    PolyQ { q: Vec<Vec<ParamScalar>>, absorption: bool },
    Lattice,
}

impl Variant {
    pub fn name(&self) -> &'static str {
        match self {
            Variant::Chen => "chen",
            Variant::ChenPrime => "chen+1p",
            Variant::ChenDoublePrime => "chen+1pp",
            Variant::ChenBoth => "chen+both",
            Variant::PolyQ { .. } => "polyQ",
            Variant::Lattice => "lattice",
        }
    }
}

impl FromStr for Variant {
    type Err = PresentationError;

    /// Parses the named variants; `polyQ` needs its polynomials supplied
    /// separately.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "chen" => Variant::Chen,
            "chen+1p" | "chen+1'" => Variant::ChenPrime,
            "chen+1pp" | "chen+1''" => Variant::ChenDoublePrime,
            "chen+both" => Variant::ChenBoth,
            "lattice" => Variant::Lattice,
            _ => return Err(PresentationError::UnknownVariant(s.into())),
        })
    }
}

/// Generators and relations. Letters are numbered `g_w` first, then `f_L`,
/// then `e_H`, so deglex compares `e > f > g`.
#[derive(Clone)]
pub struct Presentation<F> {
    pub names: Vec<String>,
    pub relations: Vec<NcPoly<F>>,
    /// Marks relations of an associative multiplication table.
    pub table: Vec<bool>,
    pub group_letters: usize,
    pub lattice_letters: usize,
}

impl<F: Field> Presentation<F> {
    pub fn letters(&self) -> usize {
        self.names.len()
    }

    pub fn relation_count(&self) -> usize {
        self.relations.len()
    }

    pub fn g(&self, w: Elem) -> Letter {
        w as Letter
    }

    pub fn f(&self, l: usize) -> Letter {
        (self.group_letters + l) as Letter
    }

    pub fn e(&self, h: usize) -> Letter {
        (self.group_letters + self.lattice_letters + h) as Letter
    }

    pub fn map<G: Field, E>(&self, f: impl Fn(&F) -> Result<G, E>) -> Result<Presentation<G>, E> {
        Ok(Presentation {
            names: self.names.clone(),
            relations: self.relations.iter().map(|p| p.try_map(&f)).collect::<Result<_, _>>()?,
            table: self.table.clone(),
            group_letters: self.group_letters,
            lattice_letters: self.lattice_letters,
        })
    }

    pub fn groebner(&self, opts: &GbOptions) -> GroebnerBasis<F> {
        let rels: Vec<(NcPoly<F>, bool)> = self.relations.iter().cloned().zip(self.table.iter().copied()).collect();
        groebner(self.letters(), &rels, opts)
    }

    pub fn render_poly(&self, p: &NcPoly<F>, scalar: &dyn Fn(&F) -> String) -> String {
        p.render(&self.names, scalar)
    }

    /// Text form: `gen <name>` lines followed by `rel <poly>` lines.
    pub fn to_text(&self, scalar: &dyn Fn(&F) -> String) -> String {
        let mut out = String::new();
        for n in &self.names {
            out.push_str(&format!("gen {n}\n"));
        }
        for (p, t) in self.relations.iter().zip(&self.table) {
            out.push_str(if *t { "table " } else { "rel " });
            out.push_str(&self.render_poly(p, scalar));
            out.push('\n');
        }
        out
    }
}

/// Values substituted for the formal parameters.
#[derive(Clone, Debug)]
pub struct Specialization {
    pub delta: Rational,
    /// Per reflection class; a single entry is broadcast to all classes.
    pub mu: Vec<Rational>,
    /// Per hyperplane orbit; a single entry is broadcast.
    pub lambda: Vec<Rational>,
}

impl Specialization {
    pub fn uniform(delta: Rational, mu: Rational) -> Self {
        Specialization { delta, mu: vec![mu.clone()], lambda: vec![mu] }
    }

    fn pick(v: &[Rational], i: usize) -> Option<&Rational> {
        if v.len() == 1 {
            v.first()
        } else {
            v.get(i)
        }
    }

    pub fn value(&self, var: Var) -> Option<CycNumber> {
        let r = match var {
            Var::Delta => Some(&self.delta),
            Var::Mu(c) => Self::pick(&self.mu, c as usize),
            Var::Lambda(o) => Self::pick(&self.lambda, o as usize),
        };
        r.cloned().map(CycNumber::from_rational)
    }

    pub fn describe(&self) -> String {
        let list = |v: &[Rational]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        format!("delta={} mu={} lambda={}", self.delta, list(&self.mu), list(&self.lambda))
    }
}

/// Evaluates a coefficient to a rational number.
pub fn specialize_scalar(c: &ParamScalar, spec: &Specialization) -> Result<Rational, PresentationError> {
    let v = c.specialize(&|x| spec.value(x))?;
    if let Some(var) = v.vars().first() {
        return Err(PresentationError::Unspecialized(format!("{var:?}")));
    }
    let k = v.as_constant().expect("no variables left");
    k.as_rational().cloned().ok_or_else(|| PresentationError::NotRational(k.render()))
}

impl Presentation<ParamScalar> {
    pub fn specialize(&self, spec: &Specialization) -> Result<Presentation<Rational>, PresentationError> {
        self.map(|c| specialize_scalar(c, spec))
    }
}

struct Builder {
    rels: Vec<NcPoly<ParamScalar>>,
    table: Vec<bool>,
}

impl Builder {
    fn push(&mut self, p: NcPoly<ParamScalar>, table: bool) {
        if !p.is_zero() {
            self.rels.push(p);
            self.table.push(table);
        }
    }
}

fn word(ls: &[Letter]) -> NcPoly<ParamScalar> {
    NcPoly::word(ls)
}

fn term(ls: &[Letter], c: ParamScalar) -> NcPoly<ParamScalar> {
    NcPoly::monomial(Word::from_slice(ls), c)
}

/// Builds the presentation with formal `δ`, `μ_c` (per reflection class)
/// and, for the lattice variant, `λ_o` (per hyperplane orbit) unless values
/// are supplied.
pub fn build_presentation(
    w: &ReflectionGroup,
    variant: &Variant,
    lattice: Option<&Lattice>,
) -> Result<Presentation<ParamScalar>, PresentationError> {
    let mu: Vec<ParamScalar> = (0..w.class_count()).map(ParamScalar::mu).collect();
    build_presentation_with(w, variant, lattice, &ParamScalar::delta(), &mu)
}

pub fn build_presentation_with(
    w: &ReflectionGroup,
    variant: &Variant,
    lattice: Option<&Lattice>,
    delta: &ParamScalar,
    mu: &[ParamScalar],
) -> Result<Presentation<ParamScalar>, PresentationError> {
    let lat = match variant {
        Variant::Lattice => Some(lattice.ok_or(PresentationError::MissingLattice)?),
        _ => None,
    };
    let ng = w.order();
    let nl = lat.map_or(0, |l| l.len());
    let nh = w.hyperplane_count();
    let mut names: Vec<String> = (0..ng).map(|i| format!("g{i}")).collect();
    names.extend((0..nl).map(|i| format!("f{i}")));
    names.extend((0..nh).map(|i| format!("e{i}")));
    let g = |x: Elem| x as Letter;
    let f = |l: usize| (ng + l) as Letter;
    let e = |h: usize| (ng + nl + h) as Letter;
    let one = NcPoly::constant(ParamScalar::one());
    let mut b = Builder { rels: Vec::new(), table: Vec::new() };

    b.push(word(&[g(0)]).sub(&one), false);
    for x in 1..ng {
        for y in 1..ng {
            let xy = w.mul(x, y);
            let rhs = if xy == 0 { one.clone() } else { word(&[g(xy)]) };
            b.push(word(&[g(x), g(y)]).sub(&rhs), true);
        }
    }
    for x in 1..ng {
        for h in 0..nh {
            b.push(word(&[g(x), e(h)]).sub(&word(&[e(w.act(x, h)), g(x)])), false);
        }
    }

    // Σ_{s(H2)=H1} μ_s g_s (· f_{H_s} in the lattice variant)
    let sum = |h1: usize, h2: usize, left: bool| -> NcPoly<ParamScalar> {
        let mut acc = NcPoly::zero();
        for r in w.reflections_mapping(h2, h1) {
            let refl = &w.reflections()[r];
            let c = mu[refl.class_id].clone();
            let mut letters = vec![g(refl.element)];
            if let Some(l) = lat {
                letters.push(f(l.atom(refl.hyperplane)));
            }
            if left {
                letters.insert(0, e(h1));
            } else {
                letters.push(e(h2));
            }
            acc = acc.add(&term(&letters, c));
        }
        acc
    };

    for h1 in 0..nh {
        for h2 in 0..nh {
            if h1 == h2 {
                continue;
            }
            if w.transverse(h1, h2).expect("distinct hyperplanes") {
                if h1 < h2 {
                    b.push(word(&[e(h1), e(h2)]).sub(&word(&[e(h2), e(h1)])), false);
                }
            } else {
                let lhs = word(&[e(h1), e(h2)]);
                b.push(lhs.sub(&sum(h1, h2, false)), false);
                b.push(lhs.sub(&sum(h1, h2, true)), false);
            }
        }
    }

    let quadratic = |h: usize| word(&[e(h), e(h)]).sub(&term(&[e(h)], delta.clone()));
    let absorb = |b: &mut Builder, x: Elem, h: usize| {
        b.push(word(&[e(h), g(x)]).sub(&word(&[e(h)])), false);
        b.push(word(&[g(x), e(h)]).sub(&word(&[e(h)])), false);
    };
    let absorb_own = |b: &mut Builder| {
        for h in 0..nh {
            for &r in w.reflections_fixing(h) {
                absorb(b, w.reflections()[r].element, h);
            }
        }
    };

    match variant {
        Variant::Chen | Variant::ChenPrime | Variant::ChenDoublePrime | Variant::ChenBoth => {
            for h in 0..nh {
                b.push(quadratic(h), false);
            }
            absorb_own(&mut b);
            if matches!(variant, Variant::ChenPrime | Variant::ChenBoth) {
                for (x, h) in w.chen_prime_pairs() {
                    absorb(&mut b, x, h);
                }
            }
            if matches!(variant, Variant::ChenDoublePrime | Variant::ChenBoth) {
                for (r, h) in w.chen_doubleprime_pairs() {
                    absorb(&mut b, w.reflections()[r].element, h);
                }
            }
        }
        Variant::PolyQ { q, absorption } => {
            for h in 0..nh {
                let o = w.hyperplanes()[h].orbit_id;
                let coeffs = q.get(o).ok_or(PresentationError::MissingQ(o))?;
                let mut p = NcPoly::zero();
                for (i, c) in coeffs.iter().enumerate() {
                    p = p.add(&term(&vec![e(h); i + 1], c.clone()));
                }
                b.push(p, false);
            }
            if *absorption {
                absorb_own(&mut b);
            }
        }
        Variant::Lattice => {
            let lat = lat.unwrap();
            for h in 0..nh {
                b.push(quadratic(h), false);
            }
            b.push(word(&[f(lat.bottom())]).sub(&one), false);
            for x in 1..ng {
                for l in 0..nl {
                    b.push(word(&[g(x), f(l)]).sub(&word(&[f(lat.act(x, l)), g(x)])), false);
                }
            }
            for l1 in 1..nl {
                for l2 in 1..nl {
                    b.push(word(&[f(l1), f(l2)]).sub(&word(&[f(lat.join(l1, l2))])), true);
                }
            }
            for h in 0..nh {
                for l in 1..nl {
                    b.push(word(&[e(h), f(l)]).sub(&word(&[f(l), e(h)])), false);
                }
                let fh = f(lat.atom(h));
                b.push(word(&[e(h), fh]).sub(&word(&[e(h)])), false);
                b.push(word(&[fh, e(h)]).sub(&word(&[e(h)])), false);
            }
        }
    }

    Ok(Presentation { names, relations: b.rels, table: b.table, group_letters: ng, lattice_letters: nl })
}

/// Parses the text form. Coefficients use the scalar syntax at the given
/// conductor; a term with no letters is the empty word.
pub fn parse_presentation(text: &str, conductor: u32) -> Result<Presentation<ParamScalar>, PresentationError> {
    let mut names: Vec<String> = Vec::new();
    let mut relations = Vec::new();
    let mut table = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| PresentationError::Parse { line: ln + 1, msg };
        if let Some(n) = line.strip_prefix("gen ") {
            names.push(n.trim().to_string());
        } else if let Some((kind, body)) = line.split_once(' ') {
            let is_table = match kind {
                "rel" => false,
                "table" => true,
                _ => return Err(err(format!("unknown directive `{kind}`"))),
            };
            let mut terms = Vec::new();
            for t in split_top_level(body) {
                let (c, rest) = split_coefficient(t.trim()).map_err(err)?;
                let c = parse_scalar(c, conductor).map_err(|x| err(x.to_string()))?;
                let mut w = Word::new();
                for name in rest.split('*').map(str::trim).filter(|x| !x.is_empty()) {
                    let id = names.iter().position(|n| n == name).ok_or_else(|| err(format!("unknown generator `{name}`")))?;
                    w.push(id as Letter);
                }
                terms.push((w, c));
            }
            relations.push(NcPoly::from_terms(terms));
            table.push(is_table);
        } else {
            return Err(err("expected `gen`, `rel` or `table`".into()));
        }
    }
    let group_letters = names.iter().take_while(|n| n.starts_with('g')).count();
    let lattice_letters = names[group_letters..].iter().take_while(|n| n.starts_with('f')).count();
    Ok(Presentation { names, relations, table, group_letters, lattice_letters })
}

fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

/// Splits `(c)*a*b` into `c` and `a*b`; a bare word gets coefficient 1.
fn split_coefficient(t: &str) -> Result<(&str, &str), String> {
    if !t.starts_with('(') {
        return Ok(("1", t));
    }
    let mut depth = 0;
    for (i, ch) in t.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    let rest = t[i + 1..].trim_start();
                    let rest = rest.strip_prefix('*').unwrap_or(rest);
                    return Ok((&t[1..i], rest));
                }
            }
            _ => {}
        }
    }
    Err(format!("unbalanced parentheses in `{t}`"))
}

impl fmt::Debug for Presentation<ParamScalar> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Presentation({} letters, {} relations)", self.letters(), self.relations.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::br1::br1_dimension;
    use crate::gb::{dimension_from_gb, verify, Dimension};
    use crate::group::GroupSpec;

    fn group(m: u32, p: u32, n: usize) -> ReflectionGroup {
        ReflectionGroup::build(&GroupSpec::g(m, p, n)).unwrap()
    }

    fn dim(w: &ReflectionGroup, v: Variant, delta: i64) -> Dimension {
        let p = build_presentation(w, &v, None).unwrap();
        let p = p.specialize(&Specialization::uniform(Rational::from_integer(delta), Rational::one())).unwrap();
        let gb = p.groebner(&GbOptions::default());
        assert!(gb.complete);
        dimension_from_gb(&gb)
    }

    #[test]
    fn alphabet_size() {
        let w = group(4, 2, 2);
        let p = build_presentation(&w, &Variant::Chen, None).unwrap();
        assert_eq!(p.letters(), 22);
        let pp = build_presentation(&w, &Variant::ChenDoublePrime, None).unwrap();
        assert!(pp.relation_count() > p.relation_count());
    }

    #[test]
    fn symmetric_group_matches_br1() {
        let w = group(1, 1, 3);
        assert!(w.transverse_pairs().is_empty());
        assert_eq!(dim(&w, Variant::Chen, 2), Dimension::Finite(br1_dimension(&w)));
    }

    #[test]
    fn poly_q_linear_matches_chen() {
        let w = group(1, 1, 3);
        let q = vec![vec![-ParamScalar::delta(), ParamScalar::one()]];
        let v = Variant::PolyQ { q, absorption: true };
        assert_eq!(dim(&w, v, 3), dim(&w, Variant::Chen, 3));
    }

    #[test]
    fn text_round_trip() {
        let w = group(1, 1, 3);
        let p = build_presentation(&w, &Variant::Chen, None).unwrap();
        let text = p.to_text(&|c| c.render(1));
        let q = parse_presentation(&text, 1).unwrap();
        assert_eq!(q.names, p.names);
        assert_eq!(q.relations, p.relations);
        assert_eq!(q.table, p.table);
    }

    #[test]
    fn unspecialized_is_an_error() {
        let w = group(1, 1, 3);
        let p = build_presentation(&w, &Variant::Chen, None).unwrap();
        let spec = Specialization { delta: Rational::from_integer(2), mu: vec![], lambda: vec![] };
        assert!(matches!(p.specialize(&spec), Err(PresentationError::Unspecialized(_))));
    }

    #[test]
    fn reduction_examples() {
        let w = group(1, 1, 3);
        let p = build_presentation(&w, &Variant::Chen, None)
            .unwrap()
            .specialize(&Specialization::uniform(Rational::from_integer(2), Rational::one()))
            .unwrap();
        let gb = p.groebner(&GbOptions::default());
        assert!(verify(&gb));
        let e0 = p.e(0);
        let ee = NcPoly::word(&[e0, e0]);
        let target = NcPoly::monomial(Word::from_slice(&[e0]), Rational::from_integer(2));
        assert_eq!(gb.reduce(&ee), gb.reduce(&target));
        for x in 0..w.order() {
            let p2 = NcPoly::<Rational>::word(&[x as Letter, w.inv(x) as Letter]);
            assert_eq!(gb.reduce(&p2), NcPoly::constant(Rational::one()));
        }
        for r in &p.relations {
            assert!(gb.reduce(r).is_zero());
        }
    }
}
