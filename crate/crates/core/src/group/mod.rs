//! Finite complex reflection groups given by exact matrices: enumeration,
//! reflections, the hyperplane arrangement and its geometry.

mod io;

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use num::integer::lcm;

use crate::linalg::Matrix;
use crate::scalars::{CycNumber, Rational};

pub use io::{parse_group_file, write_group_file};

/// Index of an element in the group's enumeration.
pub type Elem = usize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("group too large or infinite (more than {0} elements)")]
    TooLarge(usize),
    #[error("invalid group specification: {0}")]
    Spec(String),
    #[error("matrix is not invertible")]
    Singular,
    #[error("hyperplane not in the arrangement")]
    UnknownHyperplane,
    #[error("the two hyperplanes coincide")]
    SameHyperplane,
    #[error("element does not stabilise the hyperplane")]
    NotStabilising,
}

#[derive(Clone, Debug)]
pub enum GroupSpec {
    /// The monomial group `G(de, e, n)`, given as `(d, e, n)`.
    Imprimitive { d: u32, e: u32, n: usize },
    Explicit { conductor: u32, dim: usize, generators: Vec<Matrix<CycNumber>> },
}

impl GroupSpec {
    /// Parses `G:m,p,n`, meaning `G(m,p,n)` with `p | m` (the `G:` prefix
    /// is optional). So `G:4,2,2` is the order-16 group.
    pub fn parse(s: &str) -> Result<Self, GroupError> {
        let body = s.trim().strip_prefix("G:").unwrap_or(s.trim());
        let parts: Vec<&str> = body.split(',').map(str::trim).collect();
        let bad = || GroupError::Spec(format!("expected G:m,p,n, got `{s}`"));
        if parts.len() != 3 {
            return Err(bad());
        }
        let m: u32 = parts[0].parse().map_err(|_| bad())?;
        let p: u32 = parts[1].parse().map_err(|_| bad())?;
        let n: usize = parts[2].parse().map_err(|_| bad())?;
        if m == 0 || p == 0 || n == 0 {
            return Err(GroupError::Spec("m, p, n must be at least 1".into()));
        }
        if m % p != 0 {
            return Err(GroupError::Spec(format!("p = {p} does not divide m = {m}")));
        }
        Ok(GroupSpec::Imprimitive { d: m / p, e: p, n })
    }

    pub fn imprimitive(d: u32, e: u32, n: usize) -> Self {
        GroupSpec::Imprimitive { d, e, n }
    }

    /// `G(m, p, n)` in the usual notation, i.e. `m = de`, `p = e`.
    pub fn g(m: u32, p: u32, n: usize) -> Self {
        assert!(p > 0 && m % p == 0, "p must divide m");
        GroupSpec::Imprimitive { d: m / p, e: p, n }
    }

    pub fn label(&self) -> String {
        match self {
            GroupSpec::Imprimitive { d, e, n } => format!("G({},{},{})", d * e, e, n),
            GroupSpec::Explicit { dim, generators, .. } => {
                format!("explicit(dim {dim}, {} generators)", generators.len())
            }
        }
    }

    fn generators(&self) -> Result<(u32, usize, Vec<Matrix<CycNumber>>), GroupError> {
        match self {
            GroupSpec::Explicit { conductor, dim, generators } => {
                if *conductor == 0 {
                    return Err(GroupError::Spec("conductor must be positive".into()));
                }
                for g in generators {
                    if g.rows() != *dim || g.cols() != *dim {
                        return Err(GroupError::Spec("generator has the wrong size".into()));
                    }
                }
                Ok((*conductor, *dim, generators.clone()))
            }
            GroupSpec::Imprimitive { d, e, n } => {
                let (d, e, n) = (*d, *e, *n);
                if d == 0 || e == 0 || n == 0 {
                    return Err(GroupError::Spec("d, e, n must be at least 1".into()));
                }
                let m = d * e;
                let zeta = |k: i64, order: u32| CycNumber::root_of_unity(order, k).unwrap();
                let mut gens = Vec::new();
                if n == 1 {
                    let mut g = Matrix::identity(1);
                    g.set(0, 0, zeta(1, d));
                    gens.push(g);
                } else {
                    for i in 0..n - 1 {
                        gens.push(permutation_matrix(n, i, i + 1));
                    }
                    let mut sp = permutation_matrix(n, 0, 1);
                    sp.set(0, 1, zeta(-1, m));
                    sp.set(1, 0, zeta(1, m));
                    gens.push(sp);
                    if d > 1 {
                        let mut t = Matrix::identity(n);
                        t.set(0, 0, zeta(1, d));
                        gens.push(t);
                    }
                }
                Ok((m, n, gens))
            }
        }
    }
}

fn permutation_matrix(n: usize, a: usize, b: usize) -> Matrix<CycNumber> {
    let mut m = Matrix::identity(n);
    m.set(a, a, CycNumber::zero());
    m.set(b, b, CycNumber::zero());
    m.set(a, b, CycNumber::one());
    m.set(b, a, CycNumber::one());
    m
}

#[derive(Clone, Debug)]
pub struct Reflection {
    pub element: Elem,
    pub hyperplane: usize,
    pub order: usize,
    pub class_id: usize,
}

#[derive(Clone, Debug)]
pub struct Hyperplane {
    /// Row linear form with first nonzero entry 1.
    pub form: Vec<CycNumber>,
    pub orbit_id: usize,
}

/// A codimension-2 intersection with every hyperplane containing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flat2 {
    pub hyperplanes: Vec<usize>,
}

impl Flat2 {
    pub fn is_crossing_edge(&self) -> bool {
        self.hyperplanes.len() == 2
    }
}

pub struct ReflectionGroup {
    spec: GroupSpec,
    conductor: u32,
    dim: usize,
    elements: Vec<Matrix<CycNumber>>,
    generators: Vec<Elem>,
    mul: Vec<u32>,
    inv: Vec<Elem>,
    orders: Vec<usize>,
    reflections: Vec<Reflection>,
    reflection_of: Vec<Option<usize>>,
    hyperplanes: Vec<Hyperplane>,
    /// `action[w * |A| + h]` is the index of `w(H_h)`.
    action: Vec<u32>,
    class_count: usize,
    orbit_count: usize,
    /// Reflections fixing each hyperplane, sorted by element index.
    fixing: Vec<Vec<usize>>,
    flats: Vec<Flat2>,
    flat_of_pair: HashMap<(usize, usize), usize>,
}

pub const DEFAULT_GROUP_CAP: usize = 1_000_000;

fn key(m: &Matrix<CycNumber>, conductor: u32) -> Vec<Rational> {
    let mut k = Vec::new();
    for i in 0..m.rows() {
        for x in m.row(i) {
            k.extend_from_slice(x.promote(conductor).expect("entry lies in the group field").coeffs());
        }
    }
    k
}

fn form_key(f: &[CycNumber], conductor: u32) -> Vec<Rational> {
    f.iter().flat_map(|x| x.promote(conductor).unwrap().coeffs().to_vec()).collect()
}

fn canonical_form(row: &[CycNumber]) -> Vec<CycNumber> {
    let lead = row.iter().find(|x| !x.is_zero()).expect("nonzero form").inv().unwrap();
    row.iter().map(|x| x * &lead).collect()
}

impl ReflectionGroup {
    pub fn build(spec: &GroupSpec) -> Result<Self, GroupError> {
        Self::build_with_cap(spec, DEFAULT_GROUP_CAP)
    }

    pub fn build_with_cap(spec: &GroupSpec, cap: usize) -> Result<Self, GroupError> {
        let (mut conductor, dim, gens) = spec.generators()?;
        for g in &gens {
            for i in 0..dim {
                for x in g.row(i) {
                    conductor = lcm(conductor, x.conductor());
                }
            }
            if g.inverse().is_none() {
                return Err(GroupError::Singular);
            }
        }
        let mut gens: Vec<Matrix<CycNumber>> =
            gens.into_iter().map(|g| g.map(|x| x.promote(conductor).unwrap())).collect();
        gens.sort_by(|a, b| {
            a.to_rows().iter().flatten().zip(b.to_rows().iter().flatten()).fold(
                std::cmp::Ordering::Equal,
                |acc, (x, y)| acc.then_with(|| x.lex_cmp(y)),
            )
        });
        gens.dedup_by(|a, b| a == b);
        gens.retain(|g| !g.is_identity());

        // Breadth-first closure under right multiplication by generators.
        let mut elements = vec![Matrix::identity(dim)];
        let mut index: HashMap<Vec<Rational>, usize> = HashMap::new();
        index.insert(key(&elements[0], conductor), 0);
        let mut right: Vec<Vec<u32>> = Vec::new();
        let mut parent: Vec<(usize, usize)> = vec![(0, usize::MAX)];
        let mut queue = VecDeque::from([0usize]);
        while let Some(a) = queue.pop_front() {
            let mut row = Vec::with_capacity(gens.len());
            for (gi, g) in gens.iter().enumerate() {
                let p = elements[a].mul(g);
                let k = key(&p, conductor);
                let idx = match index.get(&k) {
                    Some(&i) => i,
                    None => {
                        let i = elements.len();
                        if i >= cap {
                            return Err(GroupError::TooLarge(cap));
                        }
                        index.insert(k, i);
                        elements.push(p);
                        parent.push((a, gi));
                        queue.push_back(i);
                        i
                    }
                };
                row.push(idx as u32);
            }
            right.push(row);
        }
        let n = elements.len();
        let generators: Vec<Elem> = (0..gens.len()).map(|gi| right[0][gi] as usize).collect();

        // mul[a][b] = mul[a][parent(b)] * gen(b), filled in enumeration order of b.
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            mul[a * n] = a as u32;
        }
        for b in 1..n {
            let (pb, gi) = parent[b];
            for a in 0..n {
                let ap = mul[a * n + pb] as usize;
                mul[a * n + b] = right[ap][gi];
            }
        }
        let mut inv = vec![0; n];
        for a in 0..n {
            inv[a] = (0..n).find(|&b| mul[a * n + b] == 0).expect("group element has an inverse");
        }
        let mut orders = vec![1; n];
        for (a, o) in orders.iter_mut().enumerate() {
            let mut x = a;
            while x != 0 {
                x = mul[x * n + a] as usize;
                *o += 1;
            }
        }

        let mut g = ReflectionGroup {
            spec: spec.clone(),
            conductor,
            dim,
            elements,
            generators,
            mul,
            inv,
            orders,
            reflections: Vec::new(),
            reflection_of: vec![None; n],
            hyperplanes: Vec::new(),
            action: Vec::new(),
            class_count: 0,
            orbit_count: 0,
            fixing: Vec::new(),
            flats: Vec::new(),
            flat_of_pair: HashMap::new(),
        };
        g.find_reflections();
        g.extend_conductor();
        g.find_flats();
        Ok(g)
    }

    fn find_reflections(&mut self) {
        let n = self.order();
        let id = Matrix::<CycNumber>::identity(self.dim);
        let mut hyper_index: HashMap<Vec<Rational>, usize> = HashMap::new();
        let mut forms: Vec<Vec<CycNumber>> = Vec::new();
        let mut refl = Vec::new();
        for w in 1..n {
            let d = self.elements[w].sub(&id);
            if d.rank() != 1 {
                continue;
            }
            let row = (0..self.dim).map(|i| d.row(i)).find(|r| r.iter().any(|x| !x.is_zero())).unwrap();
            let form = canonical_form(row);
            let k = form_key(&form, self.conductor);
            let h = *hyper_index.entry(k).or_insert_with(|| {
                forms.push(form.clone());
                forms.len() - 1
            });
            refl.push((w, h));
        }
        let nh = forms.len();
        let mut action = vec![0u32; n * nh];
        for w in 0..n {
            let wi = &self.elements[self.inv[w]];
            for (h, f) in forms.iter().enumerate() {
                let row = Matrix::from_rows(vec![f.clone()]).mul(wi);
                let img = canonical_form(row.row(0));
                let k = form_key(&img, self.conductor);
                action[w * nh + h] = hyper_index[&k] as u32;
            }
        }
        self.action = action;

        // Hyperplane orbits, numbered by smallest member.
        let mut orbit = vec![usize::MAX; nh];
        let mut count = 0;
        for h in 0..nh {
            if orbit[h] != usize::MAX {
                continue;
            }
            for w in 0..n {
                orbit[self.action[w * nh + h] as usize] = count;
            }
            count += 1;
        }
        self.orbit_count = count;
        self.hyperplanes = forms.into_iter().zip(orbit).map(|(form, orbit_id)| Hyperplane { form, orbit_id }).collect();

        // Reflection classes by conjugation orbits.
        let mut class_of: HashMap<Elem, usize> = HashMap::new();
        let mut classes = 0;
        for &(w, _) in &refl {
            if class_of.contains_key(&w) {
                continue;
            }
            for x in 0..n {
                class_of.insert(self.conj(x, w), classes);
            }
            classes += 1;
        }
        self.class_count = classes;
        self.reflections = refl
            .into_iter()
            .map(|(w, h)| Reflection { element: w, hyperplane: h, order: self.orders[w], class_id: class_of[&w] })
            .collect();
        for (i, r) in self.reflections.iter().enumerate() {
            self.reflection_of[r.element] = Some(i);
        }
        self.fixing = vec![Vec::new(); nh];
        for (i, r) in self.reflections.iter().enumerate() {
            self.fixing[r.hyperplane].push(i);
        }
    }

    /// Enlarges the field so that it also contains the character values of
    /// every `N_0 / W_0`.
    fn extend_conductor(&mut self) {
        let mut m = self.conductor;
        for o in 0..self.orbit_count {
            let h0 = self.orbit_representative(o);
            let (w0, n0) = self.stabilizer_and_normalizer(h0).unwrap();
            let w0: HashSet<Elem> = w0.into_iter().collect();
            for &x in &n0 {
                let mut k = 1u32;
                let mut y = x;
                while !w0.contains(&y) {
                    y = self.mul(y, x);
                    k += 1;
                }
                m = lcm(m, k);
            }
        }
        if m != self.conductor {
            self.conductor = m;
            for e in &mut self.elements {
                *e = e.map(|x| x.promote(m).unwrap());
            }
            for h in &mut self.hyperplanes {
                h.form = h.form.iter().map(|x| x.promote(m).unwrap()).collect();
            }
        }
    }

    fn find_flats(&mut self) {
        let nh = self.hyperplanes.len();
        for a in 0..nh {
            for b in a + 1..nh {
                if self.flat_of_pair.contains_key(&(a, b)) {
                    continue;
                }
                let contained: Vec<usize> = (0..nh)
                    .filter(|&c| {
                        c == a
                            || c == b
                            || Matrix::from_rows(vec![
                                self.hyperplanes[a].form.clone(),
                                self.hyperplanes[b].form.clone(),
                                self.hyperplanes[c].form.clone(),
                            ])
                            .rank()
                                == 2
                    })
                    .collect();
                let id = self.flats.len();
                for (i, &x) in contained.iter().enumerate() {
                    for &y in &contained[i + 1..] {
                        self.flat_of_pair.insert((x, y), id);
                    }
                }
                self.flats.push(Flat2 { hyperplanes: contained });
            }
        }
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn label(&self) -> String {
        self.spec.label()
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Dimension of the span of the hyperplane forms.
    pub fn rank(&self) -> usize {
        if self.hyperplanes.is_empty() {
            return 0;
        }
        Matrix::from_rows(self.hyperplanes.iter().map(|h| h.form.clone()).collect()).rank()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> Elem {
        0
    }

    pub fn matrix(&self, w: Elem) -> &Matrix<CycNumber> {
        &self.elements[w]
    }

    pub fn elements(&self) -> &[Matrix<CycNumber>] {
        &self.elements
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.order() + b] as usize
    }

    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a]
    }

    /// `x w x⁻¹`.
    pub fn conj(&self, x: Elem, w: Elem) -> Elem {
        self.mul(self.mul(x, w), self.inv[x])
    }

    pub fn element_order(&self, w: Elem) -> usize {
        self.orders[w]
    }

    pub fn pow(&self, w: Elem, k: i64) -> Elem {
        let base = if k < 0 { self.inv[w] } else { w };
        (0..k.unsigned_abs()).fold(0, |acc, _| self.mul(acc, base))
    }

    /// Looks up the index of a matrix, if it belongs to the group.
    pub fn find(&self, m: &Matrix<CycNumber>) -> Option<Elem> {
        self.elements.iter().position(|e| e == m)
    }

    pub fn reflections(&self) -> &[Reflection] {
        &self.reflections
    }

    /// The reflection record of an element, if it is a reflection.
    pub fn reflection_index(&self, w: Elem) -> Option<usize> {
        self.reflection_of[w]
    }

    pub fn class_count(&self) -> usize {
        self.class_count
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn hyperplane_count(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn orbit_count(&self) -> usize {
        self.orbit_count
    }

    pub fn orbit(&self, o: usize) -> Vec<usize> {
        (0..self.hyperplanes.len()).filter(|&h| self.hyperplanes[h].orbit_id == o).collect()
    }

    /// Smallest hyperplane index in orbit `o`.
    pub fn orbit_representative(&self, o: usize) -> usize {
        self.hyperplanes.iter().position(|h| h.orbit_id == o).expect("orbit exists")
    }

    pub fn hyperplane_of_form(&self, form: &[CycNumber]) -> Option<usize> {
        if form.len() != self.dim || form.iter().all(CycNumber::is_zero) {
            return None;
        }
        let f = canonical_form(form);
        self.hyperplanes.iter().position(|h| h.form == f)
    }

    /// `w(H)`.
    pub fn act(&self, w: Elem, h: usize) -> usize {
        self.action[w * self.hyperplanes.len() + h] as usize
    }

    /// `w(H)` for a hyperplane given by a form; errors if not in the
    /// arrangement.
    pub fn hyperplane_action(&self, w: Elem, form: &[CycNumber]) -> Result<Vec<CycNumber>, GroupError> {
        let h = self.hyperplane_of_form(form).ok_or(GroupError::UnknownHyperplane)?;
        Ok(self.hyperplanes[self.act(w, h)].form.clone())
    }

    /// Reflections (indices into `reflections()`) whose hyperplane is `h`.
    pub fn reflections_fixing(&self, h: usize) -> &[usize] {
        &self.fixing[h]
    }

    /// The pointwise stabiliser `W_H`, sorted.
    pub fn pointwise_stabilizer(&self, h: usize) -> Vec<Elem> {
        let mut v = vec![0];
        v.extend(self.fixing[h].iter().map(|&r| self.reflections[r].element));
        v.sort();
        v
    }

    /// `(W_0, N_0)` for the hyperplane `h`.
    pub fn stabilizer_and_normalizer(&self, h: usize) -> Result<(Vec<Elem>, Vec<Elem>), GroupError> {
        if h >= self.hyperplanes.len() {
            return Err(GroupError::UnknownHyperplane);
        }
        let n0 = (0..self.order()).filter(|&w| self.act(w, h) == h).collect();
        Ok((self.pointwise_stabilizer(h), n0))
    }

    /// The reflection in `W_H` with nontrivial eigenvalue `exp(2πi/m_H)`.
    pub fn distinguished_reflection(&self, h: usize) -> Elem {
        let m = self.fixing[h].len() + 1;
        let target = CycNumber::root_of_unity(m as u32, 1).unwrap();
        let shift = CycNumber::from_integer(self.dim as i64 - 1);
        self.fixing[h]
            .iter()
            .map(|&r| self.reflections[r].element)
            .find(|&w| &self.elements[w].trace() - &shift == target)
            .expect("cyclic W_H has a generator with the primitive eigenvalue")
    }

    /// Canonical representative (smallest index) of the coset `w W_H`.
    pub fn coset_rep(&self, w: Elem, h: usize) -> Elem {
        let mut best = w;
        for &r in &self.fixing[h] {
            best = best.min(self.mul(w, self.reflections[r].element));
        }
        best
    }

    /// Canonical representatives of `W / W_H`, ascending.
    pub fn coset_reps(&self, h: usize) -> Vec<Elem> {
        (0..self.order()).filter(|&w| self.coset_rep(w, h) == w).collect()
    }

    /// For each `H` in the orbit of `h0`, the smallest `g` with `g(H_0) = H`.
    pub fn orbit_transversal(&self, h0: usize) -> HashMap<usize, Elem> {
        let mut out = HashMap::new();
        for w in 0..self.order() {
            out.entry(self.act(w, h0)).or_insert(w);
        }
        out
    }

    pub fn flats(&self) -> &[Flat2] {
        &self.flats
    }

    /// The codimension-2 flat `H_a ∩ H_b`.
    pub fn flat_of(&self, a: usize, b: usize) -> Option<&Flat2> {
        let k = if a < b { (a, b) } else { (b, a) };
        self.flat_of_pair.get(&k).map(|&i| &self.flats[i])
    }

    pub fn transverse(&self, a: usize, b: usize) -> Result<bool, GroupError> {
        if a == b {
            return Err(GroupError::SameHyperplane);
        }
        let f = self.flat_of(a, b).ok_or(GroupError::UnknownHyperplane)?;
        Ok(f.is_crossing_edge())
    }

    pub fn transverse_pairs(&self) -> Vec<(usize, usize)> {
        let nh = self.hyperplanes.len();
        let mut out = Vec::new();
        for a in 0..nh {
            for b in a + 1..nh {
                if self.transverse(a, b).unwrap() {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// All pairwise transverse subsets of size `r`, each sorted.
    pub fn transverse_collections(&self, r: usize) -> Vec<Vec<usize>> {
        let nh = self.hyperplanes.len();
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(g: &ReflectionGroup, start: usize, r: usize, nh: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == r {
                out.push(cur.clone());
                return;
            }
            for h in start..nh {
                if cur.iter().all(|&c| g.transverse(c, h).unwrap()) {
                    cur.push(h);
                    rec(g, h + 1, r, nh, cur, out);
                    cur.pop();
                }
            }
        }
        rec(self, 0, r, nh, &mut cur, &mut out);
        out
    }

    /// Whether `Ker(w - 1) ∩ H` equals `H_1 ∩ H_2` for some distinct,
    /// non-transverse `H_1, H_2`.
    pub fn chen_prime_witness(&self, w: Elem, h: usize) -> Result<bool, GroupError> {
        if self.act(w, h) != h {
            return Err(GroupError::NotStabilising);
        }
        let id = Matrix::<CycNumber>::identity(self.dim);
        let mut rows = self.elements[w].sub(&id).to_rows();
        rows.push(self.hyperplanes[h].form.clone());
        let span = Matrix::from_rows(rows);
        if span.rank() != 2 {
            return Ok(false);
        }
        let (basis, _) = span.rref();
        let basis: Vec<Vec<CycNumber>> = basis.to_rows().into_iter().take(2).collect();
        let inside = self
            .hyperplanes
            .iter()
            .filter(|x| {
                let mut rows = basis.clone();
                rows.push(x.form.clone());
                Matrix::from_rows(rows).rank() == 2
            })
            .count();
        Ok(inside >= 3)
    }

    /// All `(reflection, hyperplane)` with `s(H) = H`, `H_s ≠ H`, and `H_s`,
    /// `H` not transverse.
    pub fn chen_doubleprime_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (ri, r) in self.reflections.iter().enumerate() {
            for h in 0..self.hyperplanes.len() {
                if h != r.hyperplane && self.act(r.element, h) == h && !self.transverse(r.hyperplane, h).unwrap() {
                    out.push((ri, h));
                }
            }
        }
        out
    }

    /// All `(w, H)` with `w(H) = H` satisfying the witness condition.
    pub fn chen_prime_pairs(&self) -> Vec<(Elem, usize)> {
        let mut out = Vec::new();
        for w in 0..self.order() {
            for h in 0..self.hyperplanes.len() {
                if self.act(w, h) == h && self.chen_prime_witness(w, h).unwrap() {
                    out.push((w, h));
                }
            }
        }
        out
    }

    /// Reflections `s` with `s(H_2) = H_1`.
    pub fn reflections_mapping(&self, h2: usize, h1: usize) -> Vec<usize> {
        (0..self.reflections.len()).filter(|&r| self.act(self.reflections[r].element, h2) == h1).collect()
    }

    /// Whether every reflection has order 2.
    pub fn is_two_reflection_group(&self) -> bool {
        self.reflections.iter().all(|r| r.order == 2)
    }

    /// Whether the elements of `set` commute pairwise.
    pub fn is_abelian_set(&self, set: &[Elem]) -> bool {
        set.iter().all(|&a| set.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }
}

impl fmt::Debug for ReflectionGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (order {}, {} reflections, {} hyperplanes)",
            self.label(),
            self.order(),
            self.reflections.len(),
            self.hyperplanes.len()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(m: u32, p: u32, n: usize) -> ReflectionGroup {
        ReflectionGroup::build(&GroupSpec::g(m, p, n)).unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(g(4, 2, 2).order(), 16);
        assert_eq!(g(1, 1, 3).order(), 6);
        assert_eq!(g(3, 3, 3).order(), 54);
        assert_eq!(g(3, 1, 1).order(), 3);
    }

    #[test]
    fn reflections_of_g422() {
        let w = g(4, 2, 2);
        assert_eq!(w.reflections().len(), 6);
        assert_eq!(w.class_count(), 3);
        assert_eq!(w.orbit_count(), 3);
        assert!(w.transverse_pairs().is_empty());
    }

    #[test]
    fn s4_transversality() {
        let w = g(1, 1, 4);
        assert_eq!(w.transverse_pairs().len(), 3);
        assert_eq!(w.transverse_collections(2).len(), 3);
        assert!(w.transverse_collections(3).is_empty());
    }

    #[test]
    fn table_matches_matrices() {
        let w = g(4, 2, 2);
        for a in 0..w.order() {
            for b in 0..w.order() {
                assert_eq!(w.matrix(a).mul(w.matrix(b)), *w.matrix(w.mul(a, b)));
            }
        }
    }

    #[test]
    fn rank_one_group_has_no_flats() {
        let w = g(5, 1, 1);
        assert_eq!(w.hyperplane_count(), 1);
        assert!(w.flats().is_empty());
        assert!(w.chen_doubleprime_pairs().is_empty());
    }

    #[test]
    fn spec_parsing() {
        assert!(matches!(GroupSpec::parse("G:4,2,2"), Ok(GroupSpec::Imprimitive { d: 2, e: 2, n: 2 })));
        assert!(GroupSpec::parse("G:4,3,2").is_err());
        assert!(GroupSpec::parse("G:0,1,2").is_err());
        assert!(GroupSpec::parse("G:1,2").is_err());
    }

    #[test]
    fn distinguished_reflection_generates() {
        let w = g(3, 1, 2);
        for h in 0..w.hyperplane_count() {
            let s = w.distinguished_reflection(h);
            assert_eq!(w.element_order(s), w.pointwise_stabilizer(h).len());
        }
    }
}
