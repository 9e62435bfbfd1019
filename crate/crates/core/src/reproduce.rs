//! The full list of reproducible claims, run as one pass/fail matrix.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::br1::{
    br1_dimension, cfw_relation_check, verify_associativity, verify_associativity_with, vogel_identity_check,
    Br1Algebra, Br1Params, CfwMap,
};
use crate::flatness::{kohno_check_br1, kohno_check_lattice_brauer, kohno_check_lattice_group, LambdaReading};
use crate::gb::{build_presentation, dimension_from_gb, Dimension, GbOptions, Specialization, Variant};
use crate::group::{GroupSpec, ReflectionGroup};
use crate::lattice::Lattice;
use crate::linalg::Matrix;
use crate::reps::g422::G422;
use crate::reps::{chen_conditions_on_module, classify_level1};
use crate::scalars::{CycNumber, ParamScalar, Rational};

#[derive(Clone, Debug, Serialize)]
pub struct Claim {
    pub key: String,
    pub passed: bool,
    pub detail: String,
}

impl Claim {
    fn new(key: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Claim { key: key.into(), passed, detail: detail.into() }
    }
}

#[derive(Clone, Debug)]
pub struct ReproduceOptions {
    /// Restricts the run to claims about one group.
    pub group: Option<GroupSpec>,
    /// Restricts the run to the Gröbner dimension of one variant.
    pub variant: Option<Variant>,
    pub seed: u64,
    pub gb: GbOptions,
}

impl Default for ReproduceOptions {
    fn default() -> Self {
        ReproduceOptions { group: None, variant: None, seed: 1, gb: GbOptions::default() }
    }
}

fn build(spec: &GroupSpec) -> ReflectionGroup {
    ReflectionGroup::build(spec).expect("built-in group")
}

/// Dimension of a variant at `δ`, `μ ≡ 1`.
pub fn gb_dimension(w: &ReflectionGroup, variant: &Variant, delta: &Rational, opts: &GbOptions) -> Dimension {
    let spec = Specialization::uniform(delta.clone(), Rational::one());
    let lat = (*variant == Variant::Lattice).then(|| Lattice::build(w).expect("lattice"));
    let p = build_presentation(w, variant, lat.as_ref()).expect("presentation").specialize(&spec).expect("rational");
    dimension_from_gb(&p.groebner(opts))
}

/// Rationals in `(0, 10]` with small denominators.
pub fn random_deltas(seed: u64, count: usize) -> Vec<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let d = rng.gen_range(1..=7i64);
            Rational::new(rng.gen_range(1..=10 * d), d)
        })
        .collect()
}

/// The printed matrices of `s, t, u, s', t', u'` on `V_s(ζ)`, `ζ = i^k`.
pub fn g422_table(k: i64) -> [Matrix<CycNumber>; 6] {
    let z = |j: i64| CycNumber::root_of_unity(4, j * k).expect("conductor 4");
    let o = CycNumber::zero;
    let m = |a, b, c, d| Matrix::from_rows(vec![vec![a, b], vec![c, d]]);
    [
        m(z(0), o(), o(), z(2)),
        m(o(), z(0), z(0), o()),
        m(o(), z(-1), z(1), o()),
        m(z(2), o(), o(), z(0)),
        m(o(), z(2), z(2), o()),
        m(o(), z(1), z(-1), o()),
    ]
}

/// `p_s` and `p_{s'}` at `μ ≡ 1`: `δ` on the home block and the sum
/// `1+ζ+ζ²+ζ³` in the off-diagonal slot, where the reflections sending the
/// other hyperplane to the home one land.
pub fn g422_idempotents(k: i64) -> [Matrix<ParamScalar>; 2] {
    let sum = (0..4).fold(CycNumber::zero(), |acc, j| &acc + &CycNumber::root_of_unity(4, j * k).unwrap());
    let (d, s, o) = (ParamScalar::delta(), ParamScalar::from_cyc(sum), ParamScalar::zero());
    [
        Matrix::from_rows(vec![vec![d.clone(), s.clone()], vec![o.clone(), o.clone()]]),
        Matrix::from_rows(vec![vec![o.clone(), o], vec![s, d]]),
    ]
}

/// `diag(δ, Σ)` and `diag(Σ, δ)`, as printed.
pub fn g422_idempotents_printed(k: i64) -> [Matrix<ParamScalar>; 2] {
    let sum = (0..4).fold(CycNumber::zero(), |acc, j| &acc + &CycNumber::root_of_unity(4, j * k).unwrap());
    let (d, s, o) = (ParamScalar::delta(), ParamScalar::from_cyc(sum), ParamScalar::zero());
    [
        Matrix::from_rows(vec![vec![d.clone(), o.clone()], vec![o.clone(), s.clone()]]),
        Matrix::from_rows(vec![vec![s, o.clone()], vec![o, d]]),
    ]
}

fn ones(w: &ReflectionGroup) -> Br1Params {
    Br1Params { delta: ParamScalar::delta(), mu: vec![ParamScalar::one(); w.class_count()] }
}

fn gb_claims(out: &mut Vec<Claim>, w: &ReflectionGroup, variants: &[(Variant, Option<usize>)], opts: &ReproduceOptions) {
    let two = Rational::from_integer(2);
    for (v, expected) in variants {
        let d = gb_dimension(w, v, &two, &opts.gb);
        let passed = match expected {
            Some(e) => d == Dimension::Finite(*e),
            None => d.value().is_some(),
        };
        let exp = expected.map_or(String::new(), |e| format!(" (expected {e})"));
        out.push(Claim::new(format!("gb/{}/{}", w.label(), v.name()), passed, format!("dimension {d}{exp}")));
    }
}

fn stability_claim(out: &mut Vec<Claim>, w: &ReflectionGroup, variants: &[(Variant, Option<usize>)], opts: &ReproduceOptions) {
    let two = Rational::from_integer(2);
    let deltas = random_deltas(opts.seed, 2);
    let mut ok = true;
    let mut detail = Vec::new();
    for (v, _) in variants {
        let base = gb_dimension(w, v, &two, &opts.gb);
        for d in &deltas {
            let x = gb_dimension(w, v, d, &opts.gb);
            ok &= x == base;
            detail.push(format!("{} at delta={d}: {x}", v.name()));
        }
    }
    out.push(Claim::new(format!("gb-stability/{}", w.label()), ok, detail.join("; ")));
}

fn formula_claim(out: &mut Vec<Claim>, w: &ReflectionGroup, expected: Option<usize>, opts: &ReproduceOptions) {
    let formula = br1_dimension(w);
    let gb = gb_dimension(w, &Variant::Chen, &Rational::from_integer(2), &opts.gb);
    let transverse = !w.transverse_pairs().is_empty();
    let passed = (transverse || gb == Dimension::Finite(formula)) && expected.is_none_or(|e| e == formula);
    let note = if transverse { " (transverse pairs: formula is Br_1 only)" } else { "" };
    out.push(Claim::new(format!("dim-formula/{}", w.label()), passed, format!("formula {formula}, GB {gb}{note}")));
}

fn golden_claims(out: &mut Vec<Claim>) {
    let g = G422::build();
    let w = &g.group;
    let refl = g.reflections();
    let (hs, hs2) = (g.hyperplane(refl[0]), g.hyperplane(refl[3]));
    for k in 0..4 {
        let m = g.module(k, &ones(w)).expect("module");
        let table = g422_table(k);
        let group_ok = refl.iter().zip(&table).all(|(&r, t)| m.group_matrix(r) == t);
        let [ps, ps2] = g422_idempotents(k);
        let p_ok = *m.p(hs) == ps && *m.p(hs2) == ps2;
        let [pp, pp2] = g422_idempotents_printed(k);
        let printed = *m.p(hs) == pp && *m.p(hs2) == pp2;
        out.push(Claim::new(
            format!("g422-matrices/zeta=i^{k}"),
            group_ok && p_ok,
            format!("group matrices {group_ok}, p_s/p_s' {p_ok}, printed diagonal form {printed}"),
        ));
        let c = chen_conditions_on_module(w, &g.module(k, &Br1Params::formal(w)).expect("module"));
        let want_pp = (2 * k) % 4 == 0;
        let want_p = k == 0;
        out.push(Claim::new(
            format!("g422-conditions/zeta=i^{k}"),
            c.holds_1doubleprime == want_pp && c.holds_1prime == want_p,
            format!("(1)'' {} (1)' {}", c.holds_1doubleprime, c.holds_1prime),
        ));
    }
}

fn reps_claims(out: &mut Vec<Claim>, w: &ReflectionGroup) {
    let c = classify_level1(w, &Br1Params::formal(w));
    let rel = c.rows.iter().all(|r| r.relations_ok);
    let comm = c.rows.iter().all(|r| r.commutant_dim == 1);
    out.push(Claim::new(
        format!("reps/{}", w.label()),
        rel && comm && c.traces_distinct && c.complete,
        format!(
            "{} modules, relations {rel}, commutant 1 {comm}, traces distinct {}",
            c.rows.len(),
            c.traces_distinct
        ),
    ));
    out.push(Claim::new(
        format!("sum-of-squares/{}", w.label()),
        c.sum_matches(),
        format!("{} vs br1 - |W| = {}", c.sum_of_squares, c.expected),
    ));
}

fn assoc_claim(out: &mut Vec<Claim>, w: &ReflectionGroup, seed: u64, exhaustive: bool) {
    let alg = Br1Algebra::new(w);
    let r = if exhaustive { verify_associativity_with(&alg, seed, usize::MAX, 0) } else { verify_associativity(&alg, seed) };
    let detail = format!("dim {}, {} triples, exhaustive {}", r.dim, r.triples_checked, r.exhaustive);
    out.push(Claim::new(format!("assoc/{}", w.label()), r.passed() && r.exhaustive == exhaustive, detail));
}

fn flat_claims(out: &mut Vec<Claim>, w: &ReflectionGroup, lattice: bool, opts: &ReproduceOptions) {
    let r = kohno_check_br1(w, &Br1Params::formal(w));
    out.push(Claim::new(format!("flat-chen/{}", w.label()), r.passed, format!("{} flats", r.flats.len())));
    if !lattice {
        return;
    }
    let lat = Lattice::build(w).expect("lattice");
    for reading in [LambdaReading::PowerOfMu, LambdaReading::PerReflection] {
        let r = kohno_check_lattice_group(w, &lat, reading);
        out.push(Claim::new(format!("flat-lattice-group/{}/{reading:?}", w.label()), r.passed, ""));
    }
    let spec = Specialization::uniform(Rational::from_integer(2), Rational::one());
    match kohno_check_lattice_brauer(w, &lat, &spec, &opts.gb) {
        Ok(r) => out.push(Claim::new(
            format!("flat-lattice-brauer/{}", w.label()),
            r.passed,
            r.note.unwrap_or_default(),
        )),
        Err(e) => out.push(Claim::new(format!("flat-lattice-brauer/{}", w.label()), false, e.to_string())),
    }
}

fn vogel_claim(out: &mut Vec<Claim>, w: &ReflectionGroup) {
    let (ok, detail) = match vogel_identity_check(w, None) {
        Ok(r) => (r.passed(), format!("{} hyperplanes", r.hyperplanes_checked)),
        Err(e) => (false, e.to_string()),
    };
    out.push(Claim::new(format!("vogel/{}", w.label()), ok, detail));
}

fn cfw_claim(out: &mut Vec<Claim>, name: &str, w: &ReflectionGroup) {
    let (ok, detail) = match cfw_relation_check(w, &Br1Params::formal(w), CfwMap::Scaled) {
        Ok(r) => (r.passed(), format!("{} relation families", r.relations.len())),
        Err(e) => (false, e.to_string()),
    };
    out.push(Claim::new(format!("cfw/{name}"), ok, detail));
}

fn chen_variants(w: &ReflectionGroup) -> Vec<(Variant, Option<usize>)> {
    let known = |v: usize| (w.label() == "G(4,2,2)").then_some(v);
    vec![
        (Variant::Chen, known(64)),
        (Variant::ChenDoublePrime, known(40)),
        (Variant::ChenPrime, known(28)),
    ]
}

/// Runs every claim, or the subset selected by `opts`.
pub fn reproduce(opts: &ReproduceOptions) -> Vec<Claim> {
    let mut out = Vec::new();
    let g = |m, p, n| build(&GroupSpec::g(m, p, n));

    if let Some(v) = &opts.variant {
        let w = opts.group.as_ref().map_or_else(|| g(4, 2, 2), build);
        let expected = chen_variants(&w).into_iter().find(|(x, _)| x == v).and_then(|(_, e)| e);
        gb_claims(&mut out, &w, &[(v.clone(), expected)], opts);
        return out;
    }
    if let Some(spec) = &opts.group {
        let w = build(spec);
        let small = w.order() <= 64;
        let expected = match spec {
            GroupSpec::Imprimitive { d: 1, e, n: 3 } => Some((3 * e * e * (2 + 3 * e)) as usize),
            _ => None,
        };
        formula_claim(&mut out, &w, expected, opts);
        reps_claims(&mut out, &w);
        assoc_claim(&mut out, &w, opts.seed, br1_dimension(&w).pow(3) <= 1_000_000);
        flat_claims(&mut out, &w, small, opts);
        if w.is_two_reflection_group() {
            vogel_claim(&mut out, &w);
        }
        return out;
    }

    let g422 = g(4, 2, 2);
    let variants = chen_variants(&g422);
    gb_claims(&mut out, &g422, &variants, opts);
    stability_claim(&mut out, &g422, &variants, opts);

    formula_claim(&mut out, &g422, Some(64), opts);
    formula_claim(&mut out, &g(3, 3, 3), Some(297), opts);
    formula_claim(&mut out, &g(5, 5, 3), Some(1275), opts);
    for e in 3..=6 {
        formula_claim(&mut out, &g(e, e, 2), None, opts);
    }

    golden_claims(&mut out);

    let mut rep_groups = vec![g(4, 2, 2), g(2, 2, 3), g(3, 3, 3), g(4, 4, 3), g(1, 1, 3), g(1, 1, 4)];
    rep_groups.extend((2..=6).map(|e| g(e, e, 2)));
    for w in &rep_groups {
        reps_claims(&mut out, w);
    }

    assoc_claim(&mut out, &g422, opts.seed, true);
    assoc_claim(&mut out, &g(1, 1, 3), opts.seed, true);
    assoc_claim(&mut out, &g(3, 3, 3), opts.seed, false);

    flat_claims(&mut out, &g422, true, opts);
    flat_claims(&mut out, &g(1, 1, 3), true, opts);
    flat_claims(&mut out, &g(3, 3, 3), false, opts);
    flat_claims(&mut out, &g(1, 1, 4), false, opts);
    for e in 2..=6 {
        flat_claims(&mut out, &g(e, e, 2), false, opts);
    }

    for w in [g(1, 1, 3), g(1, 1, 4), g(4, 2, 2)] {
        vogel_claim(&mut out, &w);
    }
    for e in 2..=6 {
        vogel_claim(&mut out, &g(e, e, 2));
    }

    cfw_claim(&mut out, "A2", &g(1, 1, 3));
    cfw_claim(&mut out, "A3", &g(1, 1, 4));
    cfw_claim(&mut out, "D4", &g(2, 2, 4));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_deltas_are_in_range_and_seeded() {
        let a = random_deltas(7, 5);
        assert_eq!(a, random_deltas(7, 5));
        let ten = Rational::from_integer(10);
        assert!(a.iter().all(|d| !d.is_negative() && !d.is_zero() && *d <= ten));
    }

    #[test]
    fn printed_idempotents_agree_off_the_trivial_character() {
        for k in 1..4 {
            assert_eq!(g422_idempotents(k), g422_idempotents_printed(k));
        }
        assert_ne!(g422_idempotents(0), g422_idempotents_printed(0));
    }

    #[test]
    fn variant_subset() {
        let opts = ReproduceOptions { variant: Some(Variant::ChenPrime), ..Default::default() };
        let claims = reproduce(&opts);
        assert_eq!(claims.len(), 1);
        assert!(claims[0].passed && claims[0].detail.starts_with("dimension 28"));
    }
}
