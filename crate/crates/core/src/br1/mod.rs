//! The level-one quotient `Br_1(W)` realised by explicit structure
//! constants on the basis `{w} ⊔ {c e_H : c ∈ W/W_H}`.

mod checks;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::group::{Elem, ReflectionGroup};
use crate::scalars::{ParamScalar, Var};

pub use checks::{
    cfw_relation_check, ideal_generators, verify_associativity, verify_associativity_with, vogel_identity_check,
    AssocReport, CfwMap, CfwReport, IdealGenerator, VogelReport, EXHAUSTIVE_TRIPLE_LIMIT, SAMPLED_TRIPLES,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Br1Basis {
    Group(Elem),
    /// `c e_H` with `c` the smallest element of its coset `c W_H`.
    Idem { coset: Elem, hyperplane: usize },
}

/// Values of `δ` and of `μ` per reflection class.
#[derive(Clone, Debug)]
pub struct Br1Params {
    pub delta: ParamScalar,
    pub mu: Vec<ParamScalar>,
}

impl Br1Params {
    pub fn formal(w: &ReflectionGroup) -> Self {
        Br1Params { delta: ParamScalar::delta(), mu: (0..w.class_count()).map(ParamScalar::mu).collect() }
    }

    /// `μ_s = λ_{orbit of H_s}`, the setting of the two-parameter quotient
    /// for 2-reflection groups.
    pub fn mu_from_lambda(w: &ReflectionGroup) -> Self {
        let mut mu = vec![ParamScalar::zero(); w.class_count()];
        for r in w.reflections() {
            mu[r.class_id] = ParamScalar::lambda(w.hyperplanes()[r.hyperplane].orbit_id);
        }
        Br1Params { delta: ParamScalar::delta(), mu }
    }

    pub fn specialize_all(&self, assignment: &dyn Fn(Var) -> Option<crate::scalars::CycNumber>) -> Self {
        Br1Params {
            delta: self.delta.specialize(assignment).expect("no pole"),
            mu: self.mu.iter().map(|m| m.specialize(assignment).expect("no pole")).collect(),
        }
    }
}

/// Sparse combination of basis indices.
#[derive(Clone, Default, PartialEq)]
pub struct AlgElement {
    terms: BTreeMap<usize, ParamScalar>,
}

impl AlgElement {
    pub fn zero() -> Self {
        AlgElement { terms: BTreeMap::new() }
    }

    pub fn basis(i: usize) -> Self {
        Self::term(i, ParamScalar::one())
    }

    pub fn term(i: usize, c: ParamScalar) -> Self {
        let mut e = Self::zero();
        e.add_term(i, c);
        e
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &ParamScalar)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn coefficient(&self, i: usize) -> ParamScalar {
        self.terms.get(&i).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, i: usize, c: ParamScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&i) {
            Some(v) => {
                *v = &*v + &c;
                if v.is_zero() {
                    self.terms.remove(&i);
                }
            }
            None => {
                self.terms.insert(i, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(*k, v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        AlgElement { terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect() }
    }

    pub fn scale(&self, c: &ParamScalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        AlgElement { terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect() }
    }

    pub fn specialize(&self, assignment: &dyn Fn(Var) -> Option<crate::scalars::CycNumber>) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(*k, v.specialize(assignment).expect("no pole"));
        }
        out
    }
}

impl fmt::Debug for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(k, v)| format!("({v})*b{k}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

pub struct Br1Algebra<'g> {
    group: &'g ReflectionGroup,
    params: Br1Params,
    basis: Vec<Br1Basis>,
    idem_index: HashMap<(Elem, usize), usize>,
}

/// `|W| + Σ_{orbits} |A_0| · |W| / |W_{H_0}|`, from enumerated data.
pub fn br1_dimension(w: &ReflectionGroup) -> usize {
    let mut total = w.order();
    for o in 0..w.orbit_count() {
        let h0 = w.orbit_representative(o);
        total += w.orbit(o).len() * w.order() / w.pointwise_stabilizer(h0).len();
    }
    total
}

impl<'g> Br1Algebra<'g> {
    pub fn new(group: &'g ReflectionGroup) -> Self {
        Self::with_params(group, Br1Params::formal(group))
    }

    pub fn with_params(group: &'g ReflectionGroup, params: Br1Params) -> Self {
        assert_eq!(params.mu.len(), group.class_count(), "one μ per reflection class");
        let mut basis: Vec<Br1Basis> = (0..group.order()).map(Br1Basis::Group).collect();
        let mut idem_index = HashMap::new();
        for h in 0..group.hyperplane_count() {
            for c in group.coset_reps(h) {
                idem_index.insert((c, h), basis.len());
                basis.push(Br1Basis::Idem { coset: c, hyperplane: h });
            }
        }
        Br1Algebra { group, params, basis, idem_index }
    }

    pub fn group(&self) -> &'g ReflectionGroup {
        self.group
    }

    pub fn params(&self) -> &Br1Params {
        &self.params
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Br1Basis] {
        &self.basis
    }

    pub fn mu_of(&self, reflection: usize) -> &ParamScalar {
        &self.params.mu[self.group.reflections()[reflection].class_id]
    }

    /// Basis index of `w e_H` for any `w` (canonicalised).
    pub fn idem_index(&self, w: Elem, h: usize) -> usize {
        self.idem_index[&(self.group.coset_rep(w, h), h)]
    }

    pub fn one(&self) -> AlgElement {
        AlgElement::basis(0)
    }

    pub fn g(&self, w: Elem) -> AlgElement {
        AlgElement::basis(w)
    }

    pub fn e(&self, h: usize) -> AlgElement {
        AlgElement::basis(self.idem_index(0, h))
    }

    pub fn scalar(&self, c: ParamScalar) -> AlgElement {
        AlgElement::term(0, c)
    }

    /// `φ_H = Σ_{Ker(s-1)=H} μ_s s`.
    pub fn phi(&self, h: usize) -> AlgElement {
        let mut out = AlgElement::zero();
        for &r in self.group.reflections_fixing(h) {
            out.add_term(self.group.reflections()[r].element, self.mu_of(r).clone());
        }
        out
    }

    /// Product of two basis elements as `(index, coefficient)` pairs.
    pub fn basis_product(&self, i: usize, j: usize) -> Vec<(usize, ParamScalar)> {
        let w = self.group;
        match (self.basis[i], self.basis[j]) {
            (Br1Basis::Group(a), Br1Basis::Group(b)) => vec![(w.mul(a, b), ParamScalar::one())],
            (Br1Basis::Group(a), Br1Basis::Idem { coset, hyperplane }) => {
                vec![(self.idem_index(w.mul(a, coset), hyperplane), ParamScalar::one())]
            }
            (Br1Basis::Idem { coset, hyperplane }, Br1Basis::Group(b)) => {
                let h = w.act(w.inv(b), hyperplane);
                vec![(self.idem_index(w.mul(coset, b), h), ParamScalar::one())]
            }
            (Br1Basis::Idem { coset: c1, hyperplane: h1 }, Br1Basis::Idem { coset: c2, hyperplane: h2 }) => {
                let hp = w.act(w.inv(c2), h1);
                let c = w.mul(c1, c2);
                if hp == h2 {
                    return vec![(self.idem_index(c, h2), self.params.delta.clone())];
                }
                if w.transverse(hp, h2).unwrap() {
                    return Vec::new();
                }
                let mut acc: BTreeMap<usize, ParamScalar> = BTreeMap::new();
                for r in w.reflections_mapping(h2, hp) {
                    let k = self.idem_index(w.mul(c, w.reflections()[r].element), h2);
                    let e = acc.entry(k).or_default();
                    *e = &*e + self.mu_of(r);
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            }
        }
    }

    pub fn multiply(&self, a: &AlgElement, b: &AlgElement) -> AlgElement {
        let mut out = AlgElement::zero();
        for (i, x) in a.terms() {
            for (j, y) in b.terms() {
                let xy = x * y;
                for (k, c) in self.basis_product(i, j) {
                    out.add_term(k, if c.is_one() { xy.clone() } else { &xy * &c });
                }
            }
        }
        out
    }

    pub fn commutator(&self, a: &AlgElement, b: &AlgElement) -> AlgElement {
        self.multiply(a, b).sub(&self.multiply(b, a))
    }

    pub fn describe(&self, i: usize) -> String {
        match self.basis[i] {
            Br1Basis::Group(w) => format!("g{w}"),
            Br1Basis::Idem { coset, hyperplane } => format!("g{coset}*e{hyperplane}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;

    fn build(m: u32, p: u32, n: usize) -> ReflectionGroup {
        ReflectionGroup::build(&GroupSpec::g(m, p, n)).unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(br1_dimension(&build(4, 2, 2)), 64);
        assert_eq!(br1_dimension(&build(1, 1, 3)), 15);
        assert_eq!(br1_dimension(&build(3, 3, 3)), 297);
        let w = build(4, 2, 2);
        assert_eq!(Br1Algebra::new(&w).dim(), 64);
    }

    #[test]
    fn idempotent_relations() {
        let w = build(4, 2, 2);
        let a = Br1Algebra::new(&w);
        for h in 0..w.hyperplane_count() {
            let e = a.e(h);
            assert_eq!(a.multiply(&e, &e), e.scale(&ParamScalar::delta()));
            for &r in w.reflections_fixing(h) {
                let s = a.g(w.reflections()[r].element);
                assert_eq!(a.multiply(&s, &e), e);
                assert_eq!(a.multiply(&e, &s), e);
            }
        }
    }

    #[test]
    fn transverse_products_vanish() {
        let w = build(1, 1, 4);
        let a = Br1Algebra::new(&w);
        for (x, y) in w.transverse_pairs() {
            assert!(a.multiply(&a.e(x), &a.e(y)).is_zero());
            assert!(a.multiply(&a.e(y), &a.e(x)).is_zero());
        }
    }

    #[test]
    fn semidirect_relation() {
        let w = build(4, 2, 2);
        let a = Br1Algebra::new(&w);
        for x in 0..w.order() {
            for h in 0..w.hyperplane_count() {
                let lhs = a.multiply(&a.multiply(&a.g(x), &a.e(h)), &a.g(w.inv(x)));
                assert_eq!(lhs, a.e(w.act(x, h)));
            }
        }
    }

    #[test]
    fn unit_is_two_sided() {
        let w = build(1, 1, 3);
        let a = Br1Algebra::new(&w);
        for i in 0..a.dim() {
            let b = AlgElement::basis(i);
            assert_eq!(a.multiply(&a.one(), &b), b);
            assert_eq!(a.multiply(&b, &a.one()), b);
        }
    }

    #[test]
    fn coset_representatives_agree() {
        let w = build(3, 1, 2);
        for h in 0..w.hyperplane_count() {
            for c in 0..w.order() {
                for x in w.pointwise_stabilizer(h) {
                    assert_eq!(w.coset_rep(c, h), w.coset_rep(w.mul(c, x), h));
                }
            }
        }
    }
}
