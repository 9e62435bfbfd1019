//! Identity checks run inside `Br_1(W)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{AlgElement, Br1Algebra, Br1Params};
use crate::group::{Elem, GroupError, ReflectionGroup};
use crate::scalars::ParamScalar;

/// Triple counts up to this bound are checked exhaustively.
pub const EXHAUSTIVE_TRIPLE_LIMIT: usize = 10_000_000;
pub const SAMPLED_TRIPLES: usize = 100_000;

#[derive(Debug, Clone, Serialize)]
pub struct AssocReport {
    pub status: String,
    pub dim: usize,
    pub exhaustive: bool,
    pub triples_checked: usize,
    pub seed: Option<u64>,
    pub counterexample: Option<[String; 3]>,
}

impl AssocReport {
    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

pub fn verify_associativity(alg: &Br1Algebra, seed: u64) -> AssocReport {
    verify_associativity_with(alg, seed, EXHAUSTIVE_TRIPLE_LIMIT, SAMPLED_TRIPLES)
}

pub fn verify_associativity_with(alg: &Br1Algebra, seed: u64, exhaustive_limit: usize, samples: usize) -> AssocReport {
    let n = alg.dim();
    let exhaustive = n.saturating_mul(n).saturating_mul(n) <= exhaustive_limit;
    let mut report = AssocReport {
        status: "pass".into(),
        dim: n,
        exhaustive,
        triples_checked: 0,
        seed: (!exhaustive).then_some(seed),
        counterexample: None,
    };
    let prod = |a: &AlgElement, j: usize| alg.multiply(a, &AlgElement::basis(j));
    let lprod = |i: usize, b: &AlgElement| alg.multiply(&AlgElement::basis(i), b);
    let fail = |i: usize, j: usize, k: usize, report: &mut AssocReport| {
        report.status = "fail".into();
        report.counterexample = Some([alg.describe(i), alg.describe(j), alg.describe(k)]);
    };
    if exhaustive {
        let table: Vec<Vec<AlgElement>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut e = AlgElement::zero();
                        for (k, c) in alg.basis_product(i, j) {
                            e.add_term(k, c);
                        }
                        e
                    })
                    .collect()
            })
            .collect();
        let apply_right = |a: &AlgElement, k: usize| {
            let mut out = AlgElement::zero();
            for (t, c) in a.terms() {
                out = out.add(&table[t][k].scale(c));
            }
            out
        };
        let apply_left = |i: usize, b: &AlgElement| {
            let mut out = AlgElement::zero();
            for (t, c) in b.terms() {
                out = out.add(&table[i][t].scale(c));
            }
            out
        };
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    report.triples_checked += 1;
                    if apply_right(&table[i][j], k) != apply_left(i, &table[j][k]) {
                        fail(i, j, k, &mut report);
                        return report;
                    }
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let (i, j, k) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            report.triples_checked += 1;
            let lhs = prod(&lprod(i, &AlgElement::basis(j)), k);
            let rhs = lprod(i, &prod(&AlgElement::basis(j), k));
            if lhs != rhs {
                fail(i, j, k, &mut report);
                return report;
            }
        }
    }
    report
}

#[derive(Debug, Clone)]
pub struct IdealGenerator {
    pub hyperplanes: Vec<usize>,
    /// The product `e_{H_1} ⋯ e_{H_r}` evaluated in `Br_1(W)`; zero for
    /// `r ≥ 2`.
    pub image_in_br1: AlgElement,
}

/// Generators `e_{H_1} ⋯ e_{H_r}` of `I_r`, one per transverse collection.
pub fn ideal_generators(alg: &Br1Algebra, r: usize) -> Vec<IdealGenerator> {
    alg.group()
        .transverse_collections(r)
        .into_iter()
        .map(|hs| {
            let image = hs.iter().fold(alg.one(), |acc, &h| alg.multiply(&acc, &alg.e(h)));
            IdealGenerator { hyperplanes: hs, image_in_br1: image }
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct VogelReport {
    pub status: String,
    pub hyperplanes_checked: usize,
    pub failures: Vec<String>,
}

impl VogelReport {
    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

/// Checks `t_H² − (α+β) t_H + (αβ/2)(1 + s_H) = 0` and `t_H s_H = s_H t_H = t_H`
/// for `t_H = λ_H(1 + s_H) − e_H`, `α = 2λ_H − δ`, `β = 2λ_H`, with
/// `μ_{s_H} = λ_H`. `lambda` overrides every `λ_H` when given.
pub fn vogel_identity_check(w: &ReflectionGroup, lambda: Option<&ParamScalar>) -> Result<VogelReport, GroupError> {
    if !w.is_two_reflection_group() {
        return Err(GroupError::Spec("not a 2-reflection group".into()));
    }
    let params = match lambda {
        Some(l) => Br1Params { delta: ParamScalar::delta(), mu: vec![l.clone(); w.class_count()] },
        None => Br1Params::mu_from_lambda(w),
    };
    let alg = Br1Algebra::with_params(w, params);
    let delta = ParamScalar::delta();
    let two = ParamScalar::from_integer(2);
    let mut failures = Vec::new();
    for h in 0..w.hyperplane_count() {
        let s = w.reflections()[w.reflections_fixing(h)[0]].element;
        let lam = match lambda {
            Some(l) => l.clone(),
            None => ParamScalar::lambda(w.hyperplanes()[h].orbit_id),
        };
        let one_plus_s = alg.one().add(&alg.g(s));
        let t = one_plus_s.scale(&lam).sub(&alg.e(h));
        let alpha = &(&two * &lam) - &delta;
        let beta = &two * &lam;
        let quad = alg
            .multiply(&t, &t)
            .sub(&t.scale(&(&alpha + &beta)))
            .add(&one_plus_s.scale(&(&(&alpha * &beta) / &two)));
        if !quad.is_zero() {
            failures.push(format!("quadratic relation fails at hyperplane {h}: {quad:?}"));
        }
        if alg.multiply(&t, &alg.g(s)) != t || alg.multiply(&alg.g(s), &t) != t {
            failures.push(format!("t_H s_H = s_H t_H = t_H fails at hyperplane {h}"));
        }
    }
    Ok(VogelReport {
        status: if failures.is_empty() { "pass" } else { "fail" }.into(),
        hyperplanes_checked: w.hyperplane_count(),
        failures,
    })
}

/// How the generators `e_r` of the simply-laced presentation are sent into
/// `Br_1(W)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CfwMap {
    /// `e_r ↦ μ_r⁻¹ e_{H_r}`, with the presentation's `δ` equal to `δ/μ_r`.
    /// Reduces to the literal map at `μ = 1`.
    Scaled,
    /// `e_r ↦ e_{H_r}` and the same `δ`.
    Literal,
}

#[derive(Debug, Clone, Serialize)]
pub struct CfwReport {
    pub status: String,
    pub map: CfwMap,
    pub simple_reflections: Vec<Elem>,
    /// `(relation name, pass)`.
    pub relations: Vec<(String, bool)>,
}

impl CfwReport {
    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

/// Verifies the simply-laced Brauer relations in `Br_1(W)`, taking the
/// group's generators as the simple reflections and reading adjacency off
/// `order(rs) = 3`.
pub fn cfw_relation_check(w: &ReflectionGroup, params: &Br1Params, map: CfwMap) -> Result<CfwReport, GroupError> {
    let simple: Vec<Elem> = w.generators().to_vec();
    for &r in &simple {
        if w.reflection_index(r).is_none() || w.element_order(r) != 2 {
            return Err(GroupError::Spec("generators are not reflections of order 2".into()));
        }
    }
    let adjacent = |r: Elem, s: Elem| -> Result<bool, GroupError> {
        match w.element_order(w.mul(r, s)) {
            2 => Ok(false),
            3 => Ok(true),
            k => Err(GroupError::Spec(format!("order(rs) = {k}: diagram is not simply laced"))),
        }
    };
    let alg = Br1Algebra::with_params(w, params.clone());
    let mu = |r: Elem| alg.mu_of(w.reflection_index(r).unwrap()).clone();
    let big_e = |r: Elem| {
        let h = w.reflections()[w.reflection_index(r).unwrap()].hyperplane;
        match map {
            CfwMap::Scaled => alg.e(h).scale(&mu(r).inv().expect("μ must be nonzero")),
            CfwMap::Literal => alg.e(h),
        }
    };
    let delta_for = |r: Elem| match map {
        CfwMap::Scaled => &params.delta / &mu(r),
        CfwMap::Literal => params.delta.clone(),
    };
    let m = |a: &AlgElement, b: &AlgElement| alg.multiply(a, b);
    let g = |x: Elem| alg.g(x);

    let names = ["RSre", "RSer", "HSee", "HCee", "HCer", "RNrre", "HNrer", "RNrre'", "HNrer'"];
    let mut ok = [true; 9];
    for &r in &simple {
        let er = big_e(r);
        ok[0] &= m(&g(r), &er) == er;
        ok[1] &= m(&er, &g(r)) == er;
        ok[2] &= m(&er, &er) == er.scale(&delta_for(r));
        for &s in &simple {
            if s == r {
                continue;
            }
            let es = big_e(s);
            if adjacent(r, s)? {
                let rs = w.mul(r, s);
                let rsr = w.mul(rs, r);
                ok[5] &= m(&g(rs), &er) == m(&es, &er);
                ok[6] &= m(&m(&g(s), &er), &g(s)) == m(&m(&g(r), &es), &g(r));
                ok[7] &= m(&g(rsr), &es) == m(&er, &es);
                ok[8] &= m(&g(rsr), &es) == m(&er, &g(w.mul(w.mul(s, r), s)));
            } else {
                ok[3] &= m(&er, &es) == m(&es, &er);
                ok[4] &= m(&er, &g(s)) == m(&g(s), &er);
            }
        }
    }
    let relations: Vec<(String, bool)> = names.iter().zip(ok).map(|(n, b)| (n.to_string(), b)).collect();
    Ok(CfwReport {
        status: if ok.iter().all(|&b| b) { "pass" } else { "fail" }.into(),
        map,
        simple_reflections: simple,
        relations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;

    fn build(m: u32, p: u32, n: usize) -> ReflectionGroup {
        ReflectionGroup::build(&GroupSpec::g(m, p, n)).unwrap()
    }

    #[test]
    fn associativity_small() {
        let w = build(1, 1, 3);
        let r = verify_associativity(&Br1Algebra::new(&w), 1);
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.triples_checked, 15 * 15 * 15);
    }

    #[test]
    fn vogel_s3() {
        let w = build(1, 1, 3);
        assert!(vogel_identity_check(&w, None).unwrap().passed());
        assert!(vogel_identity_check(&w, Some(&ParamScalar::zero())).unwrap().passed());
        assert!(vogel_identity_check(&build(3, 1, 1), None).is_err());
    }

    #[test]
    fn cfw_a2() {
        let w = build(1, 1, 3);
        let p = Br1Params::formal(&w);
        assert!(cfw_relation_check(&w, &p, CfwMap::Scaled).unwrap().passed());
        let literal = cfw_relation_check(&w, &p, CfwMap::Literal).unwrap();
        assert!(!literal.passed());
        let one = p.specialize_all(&|v| matches!(v, crate::scalars::Var::Mu(_)).then(crate::scalars::CycNumber::one));
        assert!(cfw_relation_check(&w, &one, CfwMap::Literal).unwrap().passed());
    }

    #[test]
    fn ideal_generators_s4() {
        let w = build(1, 1, 4);
        let a = Br1Algebra::new(&w);
        let gens = ideal_generators(&a, 2);
        assert_eq!(gens.len(), 3);
        assert!(gens.iter().all(|g| g.image_in_br1.is_zero()));
        assert_eq!(ideal_generators(&a, 1).len(), 6);
    }
}
