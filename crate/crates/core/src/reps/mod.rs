//! Level-one representations `M̃ = kW ⊗_{kN₀} M` of `Br_1(W)`.

mod checks;
pub mod g422;

use std::collections::{BTreeMap, HashMap, VecDeque};

use thiserror::Error;

use crate::br1::Br1Params;
use crate::group::{Elem, ReflectionGroup};
use crate::linalg::Matrix;
use crate::scalars::{CycNumber, ParamScalar};

pub use checks::{
    chen_conditions_on_module, classify_level1, commutant_dimension, commutant_dimension_at, induced_character,
    verify_module_relations, ChenConditions, ClassRow, Classification, RelationReport,
};

#[derive(Debug, Error)]
pub enum RepError {
    #[error("N0/W0 is not abelian for hyperplane {0}; supply theta as matrices")]
    Nonabelian(usize),
    #[error("theta is not trivial on W0")]
    NotTrivialOnW0,
    #[error("theta is not a homomorphism on N0")]
    NotHomomorphism,
    #[error("element {0} does not normalise W0")]
    NotInNormalizer(Elem),
    #[error("coset representative {0} does not map H0 to its hyperplane")]
    BadCosetRep(Elem),
    #[error("specialization hits a pole")]
    Pole,
}

/// A one-dimensional character of `N₀` trivial on `W₀`.
#[derive(Clone, Debug)]
pub struct QuotientCharacter {
    pub h0: usize,
    pub label: usize,
    /// Values on every element of `N₀`.
    pub values: BTreeMap<Elem, CycNumber>,
}

impl QuotientCharacter {
    pub fn value(&self, n: Elem) -> Option<&CycNumber> {
        self.values.get(&n)
    }
}

/// A representation of `N₀` trivial on `W₀`, as matrices on all of `N₀`.
#[derive(Clone, Debug)]
pub struct Theta {
    pub h0: usize,
    pub label: String,
    pub dim: usize,
    images: HashMap<Elem, Matrix<CycNumber>>,
}

impl Theta {
    pub fn image(&self, n: Elem) -> Option<&Matrix<CycNumber>> {
        self.images.get(&n)
    }

    pub fn from_character(ch: &QuotientCharacter) -> Self {
        Theta {
            h0: ch.h0,
            label: ch.label.to_string(),
            dim: 1,
            images: ch.values.iter().map(|(&n, v)| (n, Matrix::from_rows(vec![vec![v.clone()]]))).collect(),
        }
    }

    /// Extends images of generators of `N₀` to all of `N₀`, checking
    /// well-definedness and triviality on `W₀`.
    pub fn from_generator_images(
        w: &ReflectionGroup,
        h0: usize,
        label: &str,
        gens: &[(Elem, Matrix<CycNumber>)],
    ) -> Result<Self, RepError> {
        let dim = gens.first().map_or(1, |(_, m)| m.rows());
        for (g, _) in gens {
            if w.act(*g, h0) != h0 {
                return Err(RepError::NotInNormalizer(*g));
            }
        }
        let mut images: HashMap<Elem, Matrix<CycNumber>> = HashMap::from([(0, Matrix::identity(dim))]);
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for (g, m) in gens {
                let y = w.mul(x, *g);
                let my = images[&x].mul(m);
                match images.get(&y) {
                    Some(old) if *old != my => return Err(RepError::NotHomomorphism),
                    Some(_) => {}
                    None => {
                        images.insert(y, my);
                        queue.push_back(y);
                    }
                }
            }
        }
        let (w0, n0) = w.stabilizer_and_normalizer(h0).expect("valid hyperplane");
        if images.len() != n0.len() {
            return Err(RepError::NotHomomorphism);
        }
        if w0.iter().any(|x| !images[x].is_identity()) {
            return Err(RepError::NotTrivialOnW0);
        }
        Ok(Theta { h0, label: label.to_string(), dim, images })
    }
}

/// All characters of `N₀/W₀` via a polycyclic series of the quotient:
/// `q_1, …, q_m` with relative orders `r_i`, each character fixed by its
/// values on the `q_i`. Labels enumerate exponent tuples lexicographically,
/// label 0 being trivial.
pub fn quotient_characters(w: &ReflectionGroup, h0: usize) -> Result<Vec<QuotientCharacter>, RepError> {
    let (w0, n0) = w.stabilizer_and_normalizer(h0).expect("valid hyperplane");
    let coset = |x: Elem| w.coset_rep(x, h0);
    for &a in &n0 {
        for &b in &n0 {
            if coset(w.mul(a, b)) != coset(w.mul(b, a)) {
                return Err(RepError::Nonabelian(h0));
            }
        }
    }
    let reps: Vec<Elem> = {
        let mut v: Vec<Elem> = n0.iter().map(|&x| coset(x)).collect();
        v.sort();
        v.dedup();
        v
    };
    let qmul = |a: Elem, b: Elem| coset(w.mul(a, b));
    let qorder = |a: Elem| {
        let (mut x, mut k) = (a, 1);
        while x != 0 {
            x = qmul(x, a);
            k += 1;
        }
        k
    };
    let exponent = reps.iter().map(|&q| qorder(q)).fold(1usize, num::integer::lcm);

    // polycyclic generators, greedily by largest relative order
    let mut span: Vec<Elem> = vec![0];
    let mut gens: Vec<(Elem, usize)> = Vec::new();
    while span.len() < reps.len() {
        let rel_order = |q: Elem| {
            let (mut x, mut k) = (q, 1);
            while !span.contains(&x) {
                x = qmul(x, q);
                k += 1;
            }
            k
        };
        let (q, r) = reps
            .iter()
            .filter(|q| !span.contains(q))
            .map(|&q| (q, rel_order(q)))
            .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
            .unwrap();
        let mut next = span.clone();
        let mut power = q;
        for _ in 1..r {
            next.extend(span.iter().map(|&s| qmul(s, power)));
            power = qmul(power, q);
        }
        next.sort();
        next.dedup();
        span = next;
        gens.push((q, r));
    }

    // exponent tuples of every quotient element
    let mut tuple_of: HashMap<Elem, Vec<usize>> = HashMap::from([(0, vec![0; gens.len()])]);
    let mut frontier = vec![(0usize, vec![0usize; gens.len()])];
    for (i, &(q, r)) in gens.iter().enumerate() {
        let mut next = Vec::new();
        for (x, t) in &frontier {
            let mut y = *x;
            for k in 0..r {
                let mut tt = t.clone();
                tt[i] = k;
                tuple_of.insert(y, tt.clone());
                next.push((y, tt));
                y = qmul(y, q);
            }
        }
        frontier = next;
    }
    // q_i^{r_i} written in the earlier generators
    let power_tuple: Vec<Vec<usize>> = gens
        .iter()
        .map(|&(q, r)| {
            let mut y = 0;
            for _ in 0..r {
                y = qmul(y, q);
            }
            tuple_of[&y].clone()
        })
        .collect();

    // exponents a_i with χ(q_i) = ζ_E^{a_i}
    let mut assignments: Vec<Vec<usize>> = vec![Vec::new()];
    for (i, &(_, r)) in gens.iter().enumerate() {
        let mut next = Vec::new();
        for a in &assignments {
            let target: usize = (0..i).map(|j| a[j] * power_tuple[i][j]).sum::<usize>() % exponent;
            for x in 0..exponent {
                if (r * x) % exponent == target {
                    let mut b = a.clone();
                    b.push(x);
                    next.push(b);
                }
            }
        }
        assignments = next;
    }

    let mut out = Vec::new();
    for (label, a) in assignments.iter().enumerate() {
        let mut values = BTreeMap::new();
        for &n in &n0 {
            let t = &tuple_of[&coset(n)];
            let k: usize = t.iter().zip(a).map(|(e, x)| e * x).sum::<usize>() % exponent;
            values.insert(n, CycNumber::root_of_unity(exponent as u32, k as i64).expect("positive exponent"));
        }
        debug_assert!(w0.iter().all(|x| values[x].is_one()));
        out.push(QuotientCharacter { h0, label, values });
    }
    Ok(out)
}

/// `M̃` with blocks `V_H = g_H ⊗ M` for `H` in the orbit of `H₀`.
#[derive(Clone, Debug)]
pub struct InducedModule {
    pub h0: usize,
    pub orbit_id: usize,
    pub theta: Theta,
    /// Orbit hyperplanes in block order; `orbit[0] = H₀`.
    pub orbit: Vec<usize>,
    pub coset_reps: Vec<Elem>,
    pub params: Br1Params,
    block_of: HashMap<usize, usize>,
    group: Vec<Matrix<CycNumber>>,
    idempotents: Vec<Matrix<ParamScalar>>,
}

impl InducedModule {
    pub fn dim(&self) -> usize {
        self.orbit.len() * self.theta.dim
    }

    /// Matrix of the group element `w` (columns are images of basis vectors).
    pub fn group_matrix(&self, w: Elem) -> &Matrix<CycNumber> {
        &self.group[w]
    }

    pub fn group_matrix_param(&self, w: Elem) -> Matrix<ParamScalar> {
        self.group[w].map(|c| ParamScalar::from_cyc(c.clone()))
    }

    /// `p_H`; zero outside the orbit of `H₀`.
    pub fn p(&self, h: usize) -> &Matrix<ParamScalar> {
        &self.idempotents[h]
    }

    pub fn block(&self, h: usize) -> Option<usize> {
        self.block_of.get(&h).copied()
    }
}

/// Induces `theta`, with `coset_reps[i]` mapping `H₀` to the `i`-th orbit
/// hyperplane (ascending) when given; otherwise the smallest such element.
pub fn induce(
    w: &ReflectionGroup,
    theta: &Theta,
    params: &Br1Params,
    coset_reps: Option<&[(usize, Elem)]>,
) -> Result<InducedModule, RepError> {
    let h0 = theta.h0;
    let (w0, _) = w.stabilizer_and_normalizer(h0).expect("valid hyperplane");
    if w0.iter().any(|x| theta.image(*x).is_none_or(|m| !m.is_identity())) {
        return Err(RepError::NotTrivialOnW0);
    }
    let orbit_id = w.hyperplanes()[h0].orbit_id;
    let mut orbit = w.orbit(orbit_id);
    orbit.retain(|&h| h != h0);
    orbit.insert(0, h0);
    let transversal = w.orbit_transversal(h0);
    let mut reps: Vec<Elem> = orbit.iter().map(|h| transversal[h]).collect();
    if let Some(given) = coset_reps {
        for &(h, g) in given {
            if w.act(g, h0) != h {
                return Err(RepError::BadCosetRep(g));
            }
            if let Some(i) = orbit.iter().position(|&x| x == h) {
                reps[i] = g;
            }
        }
    }
    let block_of: HashMap<usize, usize> = orbit.iter().enumerate().map(|(i, &h)| (h, i)).collect();
    let d = theta.dim;
    let n = orbit.len() * d;

    let group: Vec<Matrix<CycNumber>> = (0..w.order())
        .map(|x| {
            let mut m = Matrix::zero(n, n);
            for (j, &h) in orbit.iter().enumerate() {
                let i = block_of[&w.act(x, h)];
                let inner = w.mul(w.mul(w.inv(reps[i]), x), reps[j]);
                let t = theta.image(inner).expect("element of N0");
                for a in 0..d {
                    for b in 0..d {
                        m.set(i * d + a, j * d + b, t.get(a, b).clone());
                    }
                }
            }
            m
        })
        .collect();
    let to_param = |m: &Matrix<CycNumber>| m.map(|c| ParamScalar::from_cyc(c.clone()));

    // p_{H0}: δ on V_{H0}; Σ_{u(H)=H0} μ_u u on V_H
    let mut p0 = Matrix::<ParamScalar>::zero(n, n);
    for a in 0..d {
        p0.set(a, a, params.delta.clone());
    }
    for (j, &h) in orbit.iter().enumerate().skip(1) {
        for r in w.reflections_mapping(h, h0) {
            let refl = &w.reflections()[r];
            let mu = &params.mu[refl.class_id];
            let g = &group[refl.element];
            for a in 0..d {
                for b in 0..d {
                    let col = j * d + b;
                    let v = g.get(a, col);
                    if !v.is_zero() {
                        let cur = p0.get(a, col).clone();
                        p0.set(a, col, &cur + &(mu * &ParamScalar::from_cyc(v.clone())));
                    }
                }
            }
        }
    }
    let mut idempotents = vec![Matrix::<ParamScalar>::zero(n, n); w.hyperplane_count()];
    for (i, &h) in orbit.iter().enumerate() {
        let g = reps[i];
        idempotents[h] = to_param(&group[g]).mul(&p0).mul(&to_param(&group[w.inv(g)]));
    }
    Ok(InducedModule {
        h0,
        orbit_id,
        theta: theta.clone(),
        orbit,
        coset_reps: reps,
        params: params.clone(),
        block_of,
        group,
        idempotents,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;

    fn group(m: u32, p: u32, n: usize) -> ReflectionGroup {
        ReflectionGroup::build(&GroupSpec::g(m, p, n)).unwrap()
    }

    #[test]
    fn character_counts() {
        let w = group(4, 2, 2);
        for o in 0..w.orbit_count() {
            let h = w.orbit_representative(o);
            let chars = quotient_characters(&w, h).unwrap();
            assert_eq!(chars.len(), 4);
            assert!(chars[0].values.values().all(|v| v.is_one()));
        }
        let w = group(3, 3, 3);
        assert_eq!(quotient_characters(&w, 0).unwrap().len(), 3);
        let w = group(1, 1, 3);
        assert_eq!(quotient_characters(&w, 0).unwrap().len(), 1);
    }

    #[test]
    fn characters_are_multiplicative() {
        for w in [group(4, 2, 2), group(4, 1, 2), group(3, 3, 3), group(1, 1, 4)] {
            for o in 0..w.orbit_count() {
                let h = w.orbit_representative(o);
                let (_, n0) = w.stabilizer_and_normalizer(h).unwrap();
                let chars = quotient_characters(&w, h).unwrap();
                for ch in &chars {
                    for &a in &n0 {
                        for &b in &n0 {
                            assert_eq!(ch.values[&w.mul(a, b)], &ch.values[&a] * &ch.values[&b]);
                        }
                    }
                }
                for i in 0..chars.len() {
                    for j in 0..i {
                        assert!(n0.iter().any(|n| chars[i].values[n] != chars[j].values[n]));
                    }
                }
            }
        }
    }

    #[test]
    fn induced_dimension_and_blocks() {
        let w = group(1, 1, 3);
        let theta = Theta::from_character(&quotient_characters(&w, 0).unwrap()[0]);
        let m = induce(&w, &theta, &Br1Params::formal(&w), None).unwrap();
        assert_eq!(m.dim(), 3);
        let w = group(4, 2, 2);
        let h0 = w.orbit_representative(0);
        let theta = Theta::from_character(&quotient_characters(&w, h0).unwrap()[1]);
        let m = induce(&w, &theta, &Br1Params::formal(&w), None).unwrap();
        for x in 0..w.order() {
            for &h in &m.orbit {
                let j = m.block(h).unwrap();
                let i = m.block(w.act(x, h)).unwrap();
                for r in 0..m.dim() {
                    if r != i {
                        assert!(m.group_matrix(x).get(r, j).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn theta_from_matrices_rejects_nontrivial_w0() {
        let w = group(1, 1, 3);
        let h0 = 0;
        let (w0, _) = w.stabilizer_and_normalizer(h0).unwrap();
        let s = w0[1];
        let bad = Theta::from_generator_images(&w, h0, "sign", &[(s, Matrix::from_rows(vec![vec![CycNumber::from_integer(-1)]]))]);
        assert!(matches!(bad, Err(RepError::NotTrivialOnW0)));
        let ok = Theta::from_generator_images(&w, h0, "triv", &[(s, Matrix::identity(1))]).unwrap();
        assert_eq!(ok.dim, 1);
    }
}
