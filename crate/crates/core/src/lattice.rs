//! The lattice of full reflection subgroups, its Möbius algebra and the
//! semidirect product `W ⋉ kℒ`.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{Elem, ReflectionGroup};
use crate::scalars::ParamScalar;

pub const DEFAULT_LATTICE_CAP: usize = 10_000;

#[derive(Debug, Error)]
pub enum LatticeError {
    #[error("lattice has more than {0} elements")]
    TooLarge(usize),
    #[error("subset is not closed under joins or the group action")]
    NotClosed,
}

/// A full reflection subgroup, indexed by its hyperplanes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FullSubgroup {
    pub id: usize,
    pub hyperplanes: Vec<usize>,
    pub elements: Vec<Elem>,
}

#[derive(Clone, Debug)]
pub struct Lattice {
    nodes: Vec<FullSubgroup>,
    by_set: HashMap<Vec<usize>, usize>,
    join: Vec<usize>,
    action: Vec<usize>,
    atoms: Vec<usize>,
    order: usize,
}

/// Subgroup generated by all reflections with hyperplane in `hs`.
fn generated(w: &ReflectionGroup, hs: &[usize]) -> Vec<Elem> {
    let gens: Vec<Elem> = hs
        .iter()
        .flat_map(|&h| w.reflections_fixing(h).iter().map(|&r| w.reflections()[r].element))
        .collect();
    let mut seen = vec![false; w.order()];
    seen[0] = true;
    let mut out = vec![0];
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for &g in &gens {
            let y = w.mul(x, g);
            if !seen[y] {
                seen[y] = true;
                out.push(y);
                queue.push_back(y);
            }
        }
    }
    out.sort();
    out
}

/// Serializable form of a lattice: hyperplane sets, join table, W-orbits
/// and atoms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeDump {
    pub group: String,
    pub nodes: Vec<Vec<usize>>,
    pub join: Vec<Vec<usize>>,
    pub orbits: Vec<Vec<usize>>,
    pub atoms: Vec<usize>,
}

/// Smallest full reflection subgroup containing `W_H` for every `H` in `hs`:
/// returns its hyperplane set and elements.
pub fn full_closure(w: &ReflectionGroup, hs: &[usize]) -> (Vec<usize>, Vec<Elem>) {
    let mut set: Vec<usize> = hs.to_vec();
    set.sort();
    set.dedup();
    loop {
        let elems = generated(w, &set);
        let mut next: Vec<usize> = elems.iter().filter_map(|&x| w.reflection_index(x)).map(|r| w.reflections()[r].hyperplane).collect();
        next.sort();
        next.dedup();
        if next == set {
            return (set, elems);
        }
        set = next;
    }
}

impl Lattice {
    pub fn build(w: &ReflectionGroup) -> Result<Self, LatticeError> {
        Self::build_with_cap(w, DEFAULT_LATTICE_CAP)
    }

    pub fn build_with_cap(w: &ReflectionGroup, cap: usize) -> Result<Self, LatticeError> {
        let mut nodes: Vec<FullSubgroup> = Vec::new();
        let mut by_set: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut intern = |nodes: &mut Vec<FullSubgroup>, hs: Vec<usize>, elements: Vec<Elem>| -> Result<usize, LatticeError> {
            if let Some(&i) = by_set.get(&hs) {
                return Ok(i);
            }
            if nodes.len() >= cap {
                return Err(LatticeError::TooLarge(cap));
            }
            let id = nodes.len();
            by_set.insert(hs.clone(), id);
            nodes.push(FullSubgroup { id, hyperplanes: hs, elements });
            Ok(id)
        };
        intern(&mut nodes, Vec::new(), vec![0])?;
        let mut atoms = Vec::new();
        for h in 0..w.hyperplane_count() {
            let (hs, el) = full_closure(w, &[h]);
            atoms.push(intern(&mut nodes, hs, el)?);
        }
        // close under joins with atoms; every full subgroup is a join of atoms
        let mut i = 0;
        while i < nodes.len() {
            for h in 0..w.hyperplane_count() {
                if nodes[i].hyperplanes.binary_search(&h).is_ok() {
                    continue;
                }
                let mut hs = nodes[i].hyperplanes.clone();
                hs.push(h);
                let (hs, el) = full_closure(w, &hs);
                intern(&mut nodes, hs, el)?;
            }
            i += 1;
        }
        let by_set: HashMap<Vec<usize>, usize> = nodes.iter().map(|n| (n.hyperplanes.clone(), n.id)).collect();
        let n = nodes.len();
        let mut join = vec![0; n * n];
        for a in 0..n {
            for b in a..n {
                let mut hs = nodes[a].hyperplanes.clone();
                hs.extend_from_slice(&nodes[b].hyperplanes);
                hs.sort();
                hs.dedup();
                let j = if by_set.contains_key(&hs) { by_set[&hs] } else { by_set[&full_closure(w, &hs).0] };
                join[a * n + b] = j;
                join[b * n + a] = j;
            }
        }
        let mut action = vec![0; w.order() * n];
        for g in 0..w.order() {
            for l in 0..n {
                let mut hs: Vec<usize> = nodes[l].hyperplanes.iter().map(|&h| w.act(g, h)).collect();
                hs.sort();
                action[g * n + l] = *by_set.get(&hs).ok_or(LatticeError::NotClosed)?;
            }
        }
        Ok(Lattice { nodes, by_set, join, action, atoms, order: w.order() })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[FullSubgroup] {
        &self.nodes
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        (0..self.len()).max_by_key(|&i| self.nodes[i].hyperplanes.len()).unwrap()
    }

    /// The node `W_H`.
    pub fn atom(&self, h: usize) -> usize {
        self.atoms[h]
    }

    pub fn find(&self, hyperplanes: &[usize]) -> Option<usize> {
        let mut hs = hyperplanes.to_vec();
        hs.sort();
        hs.dedup();
        self.by_set.get(&hs).copied()
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b]
    }

    /// `w L w⁻¹`.
    pub fn act(&self, w: Elem, l: usize) -> usize {
        self.action[w * self.len() + l]
    }

    /// Partition of the nodes into W-orbits, each sorted, ordered by
    /// smallest member.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for l in 0..self.len() {
            if seen[l] {
                continue;
            }
            let mut orb: Vec<usize> = (0..self.order).map(|g| self.act(g, l)).collect();
            orb.sort();
            orb.dedup();
            for &x in &orb {
                seen[x] = true;
            }
            out.push(orb);
        }
        out
    }

    pub fn dump(&self, group: &str) -> LatticeDump {
        let n = self.len();
        LatticeDump {
            group: group.to_string(),
            nodes: self.nodes.iter().map(|x| x.hyperplanes.clone()).collect(),
            join: (0..n).map(|a| (0..n).map(|b| self.join(a, b)).collect()).collect(),
            orbits: self.orbits(),
            atoms: self.atoms.clone(),
        }
    }

    /// Whether `subset` contains the bottom and all atoms and is closed
    /// under joins and the group action, i.e. is admissible.
    pub fn is_admissible_sublattice(&self, subset: &[usize]) -> bool {
        let mut mark = vec![false; self.len()];
        for &x in subset {
            if x >= self.len() {
                return false;
            }
            mark[x] = true;
        }
        mark[0]
            && self.atoms.iter().all(|&a| mark[a])
            && subset.iter().all(|&a| subset.iter().all(|&b| mark[self.join(a, b)]))
            && subset.iter().all(|&a| (0..self.order).all(|g| mark[self.act(g, a)]))
    }
}

/// Element of the Möbius algebra `kℒ`.
#[derive(Clone, Default, PartialEq)]
pub struct MoebiusElement(pub BTreeMap<usize, ParamScalar>);

impl MoebiusElement {
    pub fn basis(l: usize) -> Self {
        MoebiusElement(BTreeMap::from([(l, ParamScalar::one())]))
    }

    pub fn mul(&self, other: &Self, lat: &Lattice) -> Self {
        let mut out: BTreeMap<usize, ParamScalar> = BTreeMap::new();
        for (&a, x) in &self.0 {
            for (&b, y) in &other.0 {
                let v = out.entry(lat.join(a, b)).or_insert_with(ParamScalar::zero);
                *v = &*v + &(x * y);
            }
        }
        out.retain(|_, v| !v.is_zero());
        MoebiusElement(out)
    }
}

/// Element of `W ⋉ kℒ` on the basis `w·f_L`.
#[derive(Clone, Default, PartialEq)]
pub struct SemidirectElement(BTreeMap<(Elem, usize), ParamScalar>);

impl SemidirectElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(w: Elem, l: usize, c: ParamScalar) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert((w, l), c);
        }
        SemidirectElement(m)
    }

    /// `w·f_L`.
    pub fn basis(w: Elem, l: usize) -> Self {
        Self::term(w, l, ParamScalar::one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Elem, usize), &ParamScalar)> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_term(&mut self, w: Elem, l: usize, c: ParamScalar) {
        let v = self.0.entry((w, l)).or_insert_with(ParamScalar::zero);
        *v = &*v + &c;
        if v.is_zero() {
            self.0.remove(&(w, l));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(w, l), c) in &other.0 {
            out.add_term(w, l, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&ParamScalar::from_integer(-1)))
    }

    pub fn scale(&self, c: &ParamScalar) -> Self {
        SemidirectElement(self.0.iter().map(|(k, v)| (*k, v * c)).filter(|(_, v)| !v.is_zero()).collect())
    }
}

impl fmt::Debug for SemidirectElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|((w, l), c)| format!("({c})*w{w}*f{l}")).collect();
        write!(f, "{}", if parts.is_empty() { "0".into() } else { parts.join(" + ") })
    }
}

/// `(w₁f_{L₁})(w₂f_{L₂}) = w₁w₂ f_{w₂⁻¹(L₁) ∨ L₂}`.
pub fn semidirect_multiply(
    w: &ReflectionGroup,
    lat: &Lattice,
    a: &SemidirectElement,
    b: &SemidirectElement,
) -> SemidirectElement {
    let mut out = SemidirectElement::zero();
    for (&(w1, l1), x) in &a.0 {
        for (&(w2, l2), y) in &b.0 {
            let l = lat.join(lat.act(w.inv(w2), l1), l2);
            out.add_term(w.mul(w1, w2), l, x * y);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;

    fn group(m: u32, p: u32, n: usize) -> ReflectionGroup {
        ReflectionGroup::build(&GroupSpec::g(m, p, n)).unwrap()
    }

    /// All hyperplane subsets closed in the sense that the generated
    /// subgroup has no further reflection hyperplanes and contains the
    /// full `W_H` of each of them.
    fn subset_oracle(w: &ReflectionGroup) -> usize {
        let nh = w.hyperplane_count();
        let mut count = 0;
        for mask in 0u64..(1 << nh) {
            let hs: Vec<usize> = (0..nh).filter(|&h| mask >> h & 1 == 1).collect();
            let elems = generated(w, &hs);
            let mut refl_h: Vec<usize> =
                elems.iter().filter_map(|&x| w.reflection_index(x)).map(|r| w.reflections()[r].hyperplane).collect();
            refl_h.sort();
            refl_h.dedup();
            if refl_h == hs {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn symmetric_group_lattice() {
        let w = group(1, 1, 3);
        let lat = Lattice::build(&w).unwrap();
        assert_eq!(lat.len(), 5);
        assert_eq!(subset_oracle(&w), 5);
        let (a, b) = (lat.atom(0), lat.atom(1));
        assert_eq!(lat.join(a, b), lat.top());
        assert_eq!(lat.nodes()[lat.top()].elements.len(), 6);
    }

    #[test]
    fn rank_one() {
        let w = group(3, 1, 1);
        assert_eq!(Lattice::build(&w).unwrap().len(), 2);
    }

    #[test]
    fn g422_matches_oracle() {
        let w = group(4, 2, 2);
        let lat = Lattice::build(&w).unwrap();
        assert_eq!(lat.len(), subset_oracle(&w));
        assert_eq!(lat.len(), 14);
    }

    #[test]
    fn join_laws_and_action() {
        let w = group(4, 2, 2);
        let lat = Lattice::build(&w).unwrap();
        let n = lat.len();
        for a in 0..n {
            assert_eq!(lat.join(a, a), a);
            assert_eq!(lat.join(0, a), a);
            for b in 0..n {
                assert_eq!(lat.join(a, b), lat.join(b, a));
                for c in 0..n {
                    assert_eq!(lat.join(lat.join(a, b), c), lat.join(a, lat.join(b, c)));
                }
                for g in 0..w.order() {
                    assert_eq!(lat.act(g, lat.join(a, b)), lat.join(lat.act(g, a), lat.act(g, b)));
                }
            }
        }
        assert!(lat.is_admissible_sublattice(&(0..n).collect::<Vec<_>>()));
        assert!(!lat.is_admissible_sublattice(&[0]));
    }

    #[test]
    fn conjugation_identity_from_distinguished_reflections() {
        for w in [group(4, 2, 2), group(3, 1, 2), group(3, 3, 3)] {
            let lat = Lattice::build(&w).unwrap();
            for h in 0..w.hyperplane_count() {
                let s = w.distinguished_reflection(h);
                for h0 in 0..w.hyperplane_count() {
                    for i in 0..w.element_order(s) as i64 {
                        let moved = w.act(w.pow(s, -i), h0);
                        assert_eq!(
                            lat.join(lat.atom(h), lat.atom(h0)),
                            lat.join(lat.atom(moved), lat.atom(h))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn semidirect_equivariance_and_associativity() {
        let w = group(4, 2, 2);
        let lat = Lattice::build(&w).unwrap();
        let n = lat.len();
        for g in 0..w.order() {
            for l in 0..n {
                let lhs = semidirect_multiply(
                    &w,
                    &lat,
                    &semidirect_multiply(&w, &lat, &SemidirectElement::basis(g, 0), &SemidirectElement::basis(0, l)),
                    &SemidirectElement::basis(w.inv(g), 0),
                );
                assert_eq!(lhs, SemidirectElement::basis(0, lat.act(g, l)));
            }
        }
        let basis: Vec<SemidirectElement> =
            (0..w.order()).flat_map(|g| (0..n).map(move |l| (g, l))).map(|(g, l)| SemidirectElement::basis(g, l)).collect();
        for a in basis.iter().step_by(7) {
            for b in basis.iter().step_by(5) {
                for c in basis.iter().step_by(3) {
                    let ab = semidirect_multiply(&w, &lat, a, b);
                    let bc = semidirect_multiply(&w, &lat, b, c);
                    assert_eq!(semidirect_multiply(&w, &lat, &ab, c), semidirect_multiply(&w, &lat, a, &bc));
                }
            }
        }
    }

    #[test]
    fn dump_round_trips_through_json() {
        let w = ReflectionGroup::build(&crate::group::GroupSpec::g(1, 1, 3)).unwrap();
        let lat = Lattice::build(&w).unwrap();
        let d = lat.dump(&w.label());
        assert_eq!(d.nodes.len(), 5);
        let back: LatticeDump = serde_json::from_str(&serde_json::to_string(&d).unwrap()).unwrap();
        assert_eq!(back, d);
    }
}
