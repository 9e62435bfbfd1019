use serde::Serialize;

use super::{induce, quotient_characters, InducedModule, RepError, Theta};
use crate::br1::{br1_dimension, Br1Params};
use crate::group::{Elem, ReflectionGroup};
use crate::linalg::Matrix;
use crate::scalars::{CycNumber, Field, ParamScalar, Rational, Var};

#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub families: Vec<(String, bool)>,
    pub passed: bool,
}

fn param(m: &InducedModule, x: Elem) -> Matrix<ParamScalar> {
    m.group_matrix_param(x)
}

/// `Σ_{u(H2)=H1} μ_u ρ(u)`.
fn reflection_sum(w: &ReflectionGroup, m: &InducedModule, h2: usize, h1: usize) -> Matrix<ParamScalar> {
    let n = m.dim();
    let mut acc = Matrix::zero(n, n);
    for r in w.reflections_mapping(h2, h1) {
        let refl = &w.reflections()[r];
        acc = acc.add(&param(m, refl.element).scale(&m.params.mu[refl.class_id]));
    }
    acc
}

/// Checks the defining relations of `Br_1(W)` on `m` as exact matrix
/// identities.
pub fn verify_module_relations(w: &ReflectionGroup, m: &InducedModule) -> RelationReport {
    let nh = w.hyperplane_count();
    let delta = &m.params.delta;
    let mut families = Vec::new();

    let group_ok = (0..w.order())
        .all(|x| w.generators().iter().all(|&g| m.group_matrix(x).mul(m.group_matrix(g)) == *m.group_matrix(w.mul(x, g))));
    families.push(("group".to_string(), group_ok && m.group_matrix(0).is_identity()));

    let semidirect = w.generators().iter().all(|&g| {
        let (a, b) = (param(m, g), param(m, w.inv(g)));
        (0..nh).all(|h| a.mul(m.p(h)).mul(&b) == *m.p(w.act(g, h)))
    });
    families.push(("semidirect".to_string(), semidirect));

    let quadratic = (0..nh).all(|h| m.p(h).mul(m.p(h)) == m.p(h).scale(delta));
    families.push(("quadratic".to_string(), quadratic));

    let absorption = (0..nh).all(|h| {
        w.reflections_fixing(h).iter().all(|&r| {
            let s = param(m, w.reflections()[r].element);
            s.mul(m.p(h)) == *m.p(h) && m.p(h).mul(&s) == *m.p(h)
        })
    });
    families.push(("absorption".to_string(), absorption));

    let mut left = true;
    let mut right = true;
    for h1 in 0..nh {
        for h2 in 0..nh {
            if h1 == h2 {
                continue;
            }
            let prod = m.p(h1).mul(m.p(h2));
            let sum = reflection_sum(w, m, h2, h1);
            left &= prod == sum.mul(m.p(h2));
            right &= prod == m.p(h1).mul(&sum);
        }
    }
    families.push(("distinct-pairs-left".to_string(), left));
    families.push(("distinct-pairs-right".to_string(), right));

    let passed = families.iter().all(|(_, ok)| *ok);
    RelationReport { families, passed }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ChenConditions {
    pub holds_1prime: bool,
    pub holds_1doubleprime: bool,
}

fn absorbs(m: &InducedModule, x: Elem, h: usize) -> bool {
    let g = m.group_matrix_param(x);
    let p = m.p(h);
    g.mul(p) == *p && p.mul(&g) == *p
}

/// Whether the extra relations (1)' and (1)'' hold on `m`.
pub fn chen_conditions_on_module(w: &ReflectionGroup, m: &InducedModule) -> ChenConditions {
    let holds_1doubleprime =
        w.chen_doubleprime_pairs().into_iter().all(|(r, h)| absorbs(m, w.reflections()[r].element, h));
    let holds_1prime = w.chen_prime_pairs().into_iter().all(|(x, h)| absorbs(m, x, h));
    ChenConditions { holds_1prime, holds_1doubleprime }
}

/// Matrix of `X ↦ XA − AX` on row-major `d×d` unknowns.
fn commutator_equations<F: Field>(a: &Matrix<F>) -> Matrix<F> {
    let d = a.rows();
    let mut eq = Matrix::<F>::zero(d * d, d * d);
    for i in 0..d {
        for j in 0..d {
            let row = i * d + j;
            // (XA)_{ij} = Σ_k X_{ik} A_{kj}; (AX)_{ij} = Σ_k A_{ik} X_{kj}
            for k in 0..d {
                let c = eq.get(row, i * d + k).add(a.get(k, j));
                eq.set(row, i * d + k, c);
                let c = eq.get(row, k * d + j).sub(a.get(i, k));
                eq.set(row, k * d + j, c);
            }
        }
    }
    eq
}

fn stack<F: Field>(blocks: &[Matrix<F>]) -> Matrix<F> {
    let cols = blocks[0].cols();
    let rows: Vec<Vec<F>> = blocks.iter().flat_map(|b| b.to_rows()).filter(|r| r.iter().any(|x| !x.is_zero())).collect();
    if rows.is_empty() {
        return Matrix::zero(0, cols);
    }
    Matrix::from_rows(rows)
}

/// Dimension of the commutant of `m` over the field of rational functions
/// in the parameters: first the commutant of the group over the cyclotomic
/// field, then the `p_H` conditions on that subspace.
pub fn commutant_dimension(w: &ReflectionGroup, m: &InducedModule) -> usize {
    let d = m.dim();
    let gens: Vec<Matrix<CycNumber>> = w.generators().iter().map(|&g| commutator_equations(m.group_matrix(g))).collect();
    let basis = stack(&gens).nullspace();
    if basis.is_empty() {
        return 0;
    }
    let basis: Vec<Matrix<ParamScalar>> = basis
        .iter()
        .map(|v| Matrix::from_fn(d, d, |i, j| ParamScalar::from_cyc(v[i * d + j].clone())))
        .collect();
    // columns: coefficients of the group-commutant basis
    let mut rows: Vec<Vec<ParamScalar>> = Vec::new();
    for h in 0..w.hyperplane_count() {
        let p = m.p(h);
        if p.is_zero() {
            continue;
        }
        let images: Vec<Matrix<ParamScalar>> = basis.iter().map(|b| b.mul(p).sub(&p.mul(b))).collect();
        for i in 0..d {
            for j in 0..d {
                let row: Vec<ParamScalar> = images.iter().map(|x| x.get(i, j).clone()).collect();
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        return basis.len();
    }
    basis.len() - Matrix::from_rows(rows).rank()
}

/// Commutant dimension after substituting rational values for the
/// parameters; the generic value is the minimum over enough samples.
pub fn commutant_dimension_at(
    w: &ReflectionGroup,
    m: &InducedModule,
    assignment: &dyn Fn(Var) -> Option<CycNumber>,
) -> Result<usize, RepError> {
    let d = m.dim();
    let mut blocks: Vec<Matrix<CycNumber>> =
        w.generators().iter().map(|&g| commutator_equations(m.group_matrix(g))).collect();
    for h in 0..w.hyperplane_count() {
        let p = m.p(h).try_map(|c| {
            c.specialize(assignment).ok().and_then(|v| v.as_constant()).ok_or(RepError::Pole)
        })?;
        blocks.push(commutator_equations(&p));
    }
    Ok(d * d - stack(&blocks).rank())
}

/// Character of `Ind_{N₀}^W θ` at `x` from the coset formula.
pub fn induced_character(w: &ReflectionGroup, theta: &Theta, x: Elem) -> CycNumber {
    let (_, n0) = w.stabilizer_and_normalizer(theta.h0).expect("valid hyperplane");
    let mut acc = CycNumber::zero();
    for g in 0..w.order() {
        let c = w.mul(w.mul(w.inv(g), x), g);
        if let Some(t) = theta.image(c) {
            acc = &acc + &t.trace();
        }
    }
    let k = CycNumber::from_rational(Rational::new(1, n0.len() as i64));
    &acc * &k
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassRow {
    pub orbit_id: usize,
    pub h0: usize,
    pub theta_label: String,
    pub dim: usize,
    pub holds_1prime: bool,
    pub holds_1doubleprime: bool,
    pub commutant_dim: usize,
    pub relations_ok: bool,
    #[serde(skip)]
    pub traces: Vec<ParamScalar>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub group: String,
    pub rows: Vec<ClassRow>,
    pub traces_distinct: bool,
    pub sum_of_squares: usize,
    pub expected: usize,
    pub complete: bool,
    pub skipped_orbits: Vec<usize>,
}

impl Classification {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("orbit_id,theta_label,dim,holds_1prime,holds_1doubleprime,commutant_dim\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                r.orbit_id, r.theta_label, r.dim, r.holds_1prime, r.holds_1doubleprime, r.commutant_dim
            ));
        }
        out
    }

    pub fn sum_matches(&self) -> bool {
        self.complete && self.sum_of_squares == self.expected
    }
}

/// All level-one irreducibles `(𝒜₀, θ)` with abelian `N₀/W₀`; orbits with a
/// nonabelian quotient are listed as skipped.
pub fn classify_level1(w: &ReflectionGroup, params: &Br1Params) -> Classification {
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for o in 0..w.orbit_count() {
        let h0 = w.orbit_representative(o);
        let chars = match quotient_characters(w, h0) {
            Ok(c) => c,
            Err(_) => {
                skipped.push(o);
                continue;
            }
        };
        for ch in &chars {
            let theta = Theta::from_character(ch);
            let m = induce(w, &theta, params, None).expect("characters are trivial on W0");
            let cond = chen_conditions_on_module(w, &m);
            let mut traces: Vec<ParamScalar> =
                (0..w.order()).map(|x| ParamScalar::from_cyc(m.group_matrix(x).trace())).collect();
            traces.extend((0..w.hyperplane_count()).map(|h| m.p(h).trace()));
            rows.push(ClassRow {
                orbit_id: o,
                h0,
                theta_label: theta.label.clone(),
                dim: m.dim(),
                holds_1prime: cond.holds_1prime,
                holds_1doubleprime: cond.holds_1doubleprime,
                commutant_dim: commutant_dimension(w, &m),
                relations_ok: verify_module_relations(w, &m).passed,
                traces,
            });
        }
    }
    let traces_distinct = (0..rows.len()).all(|i| (0..i).all(|j| rows[i].traces != rows[j].traces));
    let sum_of_squares = rows.iter().map(|r| r.dim * r.dim).sum();
    Classification {
        group: w.label(),
        rows,
        traces_distinct,
        sum_of_squares,
        expected: br1_dimension(w) - w.order(),
        complete: skipped.is_empty(),
        skipped_orbits: skipped,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;

    fn group(m: u32, p: u32, n: usize) -> ReflectionGroup {
        ReflectionGroup::build(&GroupSpec::g(m, p, n)).unwrap()
    }

    #[test]
    fn g422_classification() {
        let w = group(4, 2, 2);
        let c = classify_level1(&w, &Br1Params::formal(&w));
        assert_eq!(c.rows.len(), 12);
        assert!(c.rows.iter().all(|r| r.dim == 2 && r.commutant_dim == 1 && r.relations_ok));
        assert!(c.traces_distinct);
        assert_eq!(c.sum_of_squares, 48);
        assert!(c.sum_matches());
    }

    #[test]
    fn s4_classification_and_transverse_vanishing() {
        let w = group(1, 1, 4);
        let c = classify_level1(&w, &Br1Params::formal(&w));
        assert_eq!(c.rows.len(), 2);
        assert!(c.rows.iter().all(|r| r.dim == 6 && r.commutant_dim == 1 && r.relations_ok));
        assert!(c.sum_matches());
        let (a, b) = w.transverse_pairs()[0];
        for ch in quotient_characters(&w, 0).unwrap() {
            let m = induce(&w, &Theta::from_character(&ch), &Br1Params::formal(&w), None).unwrap();
            assert!(m.p(a).mul(m.p(b)).is_zero());
        }
    }

    #[test]
    fn restriction_is_induced_character() {
        let w = group(3, 3, 3);
        for ch in quotient_characters(&w, 0).unwrap() {
            let theta = Theta::from_character(&ch);
            let m = induce(&w, &theta, &Br1Params::formal(&w), None).unwrap();
            for x in 0..w.order() {
                assert_eq!(m.group_matrix(x).trace(), induced_character(&w, &theta, x));
            }
        }
    }

    #[test]
    fn coset_rep_choice_does_not_change_traces() {
        let w = group(4, 2, 2);
        let h0 = w.orbit_representative(0);
        let params = Br1Params::formal(&w);
        let ch = &quotient_characters(&w, h0).unwrap()[1];
        let theta = Theta::from_character(ch);
        let a = induce(&w, &theta, &params, None).unwrap();
        let alt: Vec<(usize, Elem)> = a
            .orbit
            .iter()
            .map(|&h| (h, (0..w.order()).rev().find(|&g| w.act(g, h0) == h).unwrap()))
            .collect();
        let b = induce(&w, &theta, &params, Some(&alt)).unwrap();
        assert!(verify_module_relations(&w, &b).passed);
        for x in 0..w.order() {
            assert_eq!(a.group_matrix(x).trace(), b.group_matrix(x).trace());
        }
        for h in 0..w.hyperplane_count() {
            assert_eq!(a.p(h).trace(), b.p(h).trace());
        }
    }

    #[test]
    fn commutant_of_a_direct_sum() {
        // two non-isomorphic modules side by side have a 2-dimensional commutant
        let w = group(4, 2, 2);
        let h0 = w.orbit_representative(0);
        let params = Br1Params::formal(&w);
        let chars = quotient_characters(&w, h0).unwrap();
        let a = induce(&w, &Theta::from_character(&chars[1]), &params, None).unwrap();
        let b = induce(&w, &Theta::from_character(&chars[2]), &params, None).unwrap();
        let mut blocks: Vec<Matrix<CycNumber>> = w
            .generators()
            .iter()
            .map(|&g| commutator_equations(&a.group_matrix(g).direct_sum(b.group_matrix(g))))
            .collect();
        let at = |_: Var| Some(CycNumber::from_integer(3));
        for h in 0..w.hyperplane_count() {
            let pa = a.p(h).map(|c| c.specialize(&at).unwrap().as_constant().unwrap());
            let pb = b.p(h).map(|c| c.specialize(&at).unwrap().as_constant().unwrap());
            blocks.push(commutator_equations(&pa.direct_sum(&pb)));
        }
        assert_eq!(16 - stack(&blocks).rank(), 2);
        assert_eq!(commutant_dimension_at(&w, &a, &at).unwrap(), 1);
    }
}
