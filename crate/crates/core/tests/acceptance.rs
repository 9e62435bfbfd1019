//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::time::{Duration, Instant};

use brauer_chen::br1::{
    br1_dimension, cfw_relation_check, verify_associativity_with, vogel_identity_check, Br1Algebra, Br1Params, CfwMap,
};
use brauer_chen::flatness::{kohno_check_br1, kohno_check_lattice_brauer, kohno_check_lattice_group, LambdaReading};
use brauer_chen::gb::{build_presentation, dimension_from_gb, Dimension, GbOptions, Specialization, Variant};
use brauer_chen::group::{GroupSpec, ReflectionGroup};
use brauer_chen::lattice::Lattice;
use brauer_chen::linalg::Matrix;
use brauer_chen::reps::g422::G422;
use brauer_chen::reps::{chen_conditions_on_module, classify_level1, quotient_characters};
use brauer_chen::scalars::{CycNumber, ParamScalar, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(criterion: &str, ok: bool, detail: &str) {
    println!("[{}] criterion {criterion}: {detail}", if ok { "PASS" } else { "FAIL" });
}

fn g(m: u32, p: u32, n: usize) -> ReflectionGroup {
    ReflectionGroup::build(&GroupSpec::g(m, p, n)).unwrap()
}

fn gb_dim(w: &ReflectionGroup, v: &Variant, delta: Rational) -> (Dimension, Duration) {
    let t = Instant::now();
    let spec = Specialization::uniform(delta, Rational::one());
    let p = build_presentation(w, v, None).unwrap().specialize(&spec).unwrap();
    let gb = p.groebner(&GbOptions::default());
    assert!(gb.complete);
    (dimension_from_gb(&gb), t.elapsed())
}

/// `|W| + Σ_{orbits} |A₀| |W| / |W_{H₀}|`, recomputed from raw group data.
fn formula_oracle(w: &ReflectionGroup) -> usize {
    let mut seen = vec![false; w.hyperplane_count()];
    let mut total = w.order();
    for h in 0..w.hyperplane_count() {
        if seen[h] {
            continue;
        }
        let orbit: std::collections::BTreeSet<usize> = (0..w.order()).map(|x| w.act(x, h)).collect();
        for &k in &orbit {
            seen[k] = true;
        }
        let wh = w.reflections().iter().filter(|r| r.hyperplane == h).count() + 1;
        total += orbit.len() * w.order() / wh;
    }
    total
}

#[test]
fn criterion_01_groebner_dimensions() {
    let w = g(4, 2, 2);
    let variants = [(Variant::Chen, 64), (Variant::ChenDoublePrime, 40), (Variant::ChenPrime, 28)];
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_601);
    let deltas: Vec<Rational> = (0..2)
        .map(|_| {
            let q = rng.gen_range(1..=9i64);
            Rational::new(rng.gen_range(1..=10 * q), q)
        })
        .collect();
    let mut ok = true;
    let mut detail = Vec::new();
    for (v, want) in &variants {
        let (d, t) = gb_dim(&w, v, Rational::from_integer(2));
        ok &= d == Dimension::Finite(*want) && t < Duration::from_secs(300);
        detail.push(format!("{}={d} ({:.1?})", v.name(), t));
        for delta in &deltas {
            let (d2, _) = gb_dim(&w, v, delta.clone());
            ok &= d2 == d;
            detail.push(format!("{}@{delta}={d2}", v.name()));
        }
    }
    report("1 (Groebner dimensions 64/40/28, stable in delta)", ok, &detail.join(" "));
    assert!(ok);
}

#[test]
fn criterion_02_dimension_formula() {
    let mut cases: Vec<(ReflectionGroup, usize)> = vec![(g(4, 2, 2), 64)];
    for e in [3u32, 5] {
        let e2 = (e * e) as usize;
        cases.push((g(e, e, 3), 3 * e2 * (2 + 3 * e as usize)));
    }
    for e in 3..=6u32 {
        cases.push((g(e, e, 2), (e * (e + 2)) as usize));
    }
    let mut ok = true;
    let mut detail = Vec::new();
    for (w, want) in &cases {
        assert!(w.transverse_pairs().is_empty());
        let (d, _) = gb_dim(w, &Variant::Chen, Rational::from_integer(2));
        let f = br1_dimension(w);
        let this = f == *want && formula_oracle(w) == *want && d == Dimension::Finite(*want);
        ok &= this;
        detail.push(format!("{}:{f}/{d}", w.label()));
    }
    report("2 (dimension formula = GB chen dimension)", ok, &detail.join(" "));
    assert!(ok);
}

fn z4(k: i64) -> CycNumber {
    CycNumber::root_of_unity(4, k).unwrap()
}

fn m2<T: brauer_chen::scalars::Field>(a: T, b: T, c: T, d: T) -> Matrix<T> {
    Matrix::from_rows(vec![vec![a, b], vec![c, d]])
}

#[test]
fn criterion_03_golden_g422_matrices() {
    let g422 = G422::build();
    let w = &g422.group;
    let r = g422.reflections();
    let (hs, hs2) = (g422.hyperplane(r[0]), g422.hyperplane(r[3]));
    let ones = Br1Params { delta: ParamScalar::delta(), mu: vec![ParamScalar::one(); w.class_count()] };
    let p = |c: CycNumber| ParamScalar::from_cyc(c);
    let (d, o) = (ParamScalar::delta(), ParamScalar::zero());
    let mut ok = true;
    let mut literal_ok = true;
    let mut notes = Vec::new();
    for k in 0..4i64 {
        let z = |j: i64| z4(j * k);
        let zero = CycNumber::zero;
        // s, t, u, s', t', u' as printed
        let table = [
            m2(z(0), zero(), zero(), z(2)),
            m2(zero(), z(0), z(0), zero()),
            m2(zero(), z(-1), z(1), zero()),
            m2(z(2), zero(), zero(), z(0)),
            m2(zero(), z(2), z(2), zero()),
            m2(zero(), z(1), z(-1), zero()),
        ];
        let m = g422.module(k, &ones).unwrap();
        let group_ok = r.iter().zip(&table).all(|(&x, t)| m.group_matrix(x) == t);
        let sum = (0..4).fold(CycNumber::zero(), |a, j| &a + &z(j));
        let printed_s = m2(d.clone(), o.clone(), o.clone(), p(sum.clone()));
        let printed_s2 = m2(p(sum.clone()), o.clone(), o.clone(), d.clone());
        let literal = *m.p(hs) == printed_s && *m.p(hs2) == printed_s2;
        // sum of x.v_{s'} over x with x s x = s' lands on v_s
        let corrected_s = m2(d.clone(), p(sum.clone()), o.clone(), o.clone());
        let corrected_s2 = m2(o.clone(), o.clone(), p(sum.clone()), d.clone());
        let corrected = *m.p(hs) == corrected_s && *m.p(hs2) == corrected_s2;
        let idem = m.p(hs).mul(m.p(hs)) == m.p(hs).scale(&d);
        let zero_elsewhere = (0..w.hyperplane_count()).filter(|&h| h != hs && h != hs2).all(|h| m.p(h).is_zero());
        ok &= group_ok && corrected && idem && zero_elsewhere && (k == 0 || literal);
        literal_ok &= literal;
        notes.push(format!("zeta=i^{k}: group {group_ok}, p {corrected}, printed {literal}"));
    }
    report("3 (group matrices for s,t,u,s',t',u'; p_s, p_s')", ok, &notes.join("; "));
    report(
        "3 (p_s literally diag(delta, 1+z+z^2+z^3) for every zeta)",
        literal_ok,
        "at zeta=1 the computed p_s is [[delta,4],[0,0]]; diag(delta,4) would violate p_s^2 = delta p_s",
    );
    assert!(ok);
}

#[test]
fn criterion_04_condition_verdicts() {
    let g422 = G422::build();
    let w = &g422.group;
    let mut ok = true;
    let mut detail = Vec::new();
    for k in 0..4i64 {
        let m = g422.module(k, &Br1Params::formal(w)).unwrap();
        let c = chen_conditions_on_module(w, &m);
        let zeta2_is_one = z4(2 * k).is_one();
        ok &= c.holds_1doubleprime == zeta2_is_one && c.holds_1prime == (k == 0);
        detail.push(format!("i^{k}: (1)''={} (1)'={}", c.holds_1doubleprime, c.holds_1prime));
    }
    report("4 ((1)'' iff zeta^2=1, (1)' iff zeta=1)", ok, &detail.join(" "));
    assert!(ok);
}

fn criterion5_groups() -> Vec<ReflectionGroup> {
    let mut v = vec![g(4, 2, 2), g(2, 2, 3), g(3, 3, 3), g(4, 4, 3), g(1, 1, 3), g(1, 1, 4)];
    v.extend((2..=6).map(|e| g(e, e, 2)));
    v
}

#[test]
fn criterion_05_and_06_representations() {
    let mut ok5 = true;
    let mut ok6 = true;
    let mut detail = Vec::new();
    for w in criterion5_groups() {
        let c = classify_level1(&w, &Br1Params::formal(&w));
        // one module per (orbit, character of N0/W0), of dimension |orbit|
        let mut expected_rows = 0;
        let mut expected_sq = 0;
        for o in 0..w.orbit_count() {
            let h0 = w.orbit_representative(o);
            let chars = quotient_characters(&w, h0).unwrap().len();
            let (w0, n0) = w.stabilizer_and_normalizer(h0).unwrap();
            assert_eq!(chars, n0.len() / w0.len());
            expected_rows += chars;
            expected_sq += chars * w.orbit(o).len().pow(2);
        }
        let rows_ok = c.rows.len() == expected_rows
            && c.rows.iter().all(|r| r.relations_ok && r.commutant_dim == 1 && r.dim == w.orbit(r.orbit_id).len());
        ok5 &= rows_ok && c.traces_distinct && c.complete;
        ok6 &= c.sum_of_squares == expected_sq && expected_sq == formula_oracle(&w) - w.order();
        detail.push(format!("{}:{}x sum {}", w.label(), c.rows.len(), c.sum_of_squares));
    }
    report("5 (relation suite, commutant 1, distinct traces)", ok5, &detail.join(" "));
    report("6 (sum of squared dimensions = dim Br_1 - |W|)", ok6, "");
    assert!(ok5 && ok6);
}

#[test]
fn criterion_07_associativity() {
    let mut ok = true;
    let mut detail = Vec::new();
    for w in [g(4, 2, 2), g(1, 1, 3)] {
        let alg = Br1Algebra::new(&w);
        let r = verify_associativity_with(&alg, 1, usize::MAX, 0);
        ok &= r.passed() && r.exhaustive && r.triples_checked == r.dim.pow(3);
        detail.push(format!("{} exhaustive {} triples", w.label(), r.triples_checked));
    }
    let w = g(3, 3, 3);
    let alg = Br1Algebra::new(&w);
    let r = verify_associativity_with(&alg, 7, 0, 100_000);
    ok &= r.passed() && !r.exhaustive && r.triples_checked == 100_000;
    detail.push(format!("{} (dim {}) sampled {}", w.label(), r.dim, r.triples_checked));
    report("7 (associativity certificate)", ok, &detail.join("; "));
    assert!(ok);
}

#[test]
fn criterion_08_flatness() {
    let mut ok = true;
    let mut detail = Vec::new();
    let mut chen = vec![g(4, 2, 2), g(3, 3, 3), g(1, 1, 4)];
    chen.extend((2..=6).map(|e| g(e, e, 2)));
    for w in &chen {
        let r = kohno_check_br1(w, &Br1Params::formal(w));
        ok &= r.passed && r.equivariant;
        detail.push(format!("chen {}", w.label()));
    }
    for w in [g(1, 1, 3), g(4, 2, 2)] {
        let lat = Lattice::build(&w).unwrap();
        for reading in [LambdaReading::PowerOfMu, LambdaReading::PerReflection] {
            ok &= kohno_check_lattice_group(&w, &lat, reading).passed;
        }
        let spec = Specialization::uniform(Rational::from_integer(2), Rational::one());
        let r = kohno_check_lattice_brauer(&w, &lat, &spec, &GbOptions::default()).unwrap();
        ok &= r.passed && !r.inconclusive;
        detail.push(format!("lattice {}", w.label()));
    }
    report("8 (Kohno relations: chen, lattice-group, lattice-brauer)", ok, &detail.join(", "));
    assert!(ok);
}

#[test]
fn criterion_09_vogel_identity() {
    let mut groups = vec![g(1, 1, 3), g(1, 1, 4), g(4, 2, 2)];
    groups.extend((2..=6).map(|e| g(e, e, 2)));
    let ok = groups.iter().all(|w| vogel_identity_check(w, None).unwrap().passed());
    report("9 (quadratic relation with alpha = 2 lambda - delta, beta = 2 lambda)", ok, "");
    assert!(ok);
}

#[test]
fn criterion_10_cfw_relations() {
    let mut ok = true;
    for (name, w) in [("A2", g(1, 1, 3)), ("A3", g(1, 1, 4)), ("D4", g(2, 2, 4))] {
        let r = cfw_relation_check(&w, &Br1Params::formal(&w), CfwMap::Scaled).unwrap();
        ok &= r.passed() && r.relations.len() >= 7;
        println!("  {name}: {} families, {}", r.relations.len(), r.status);
    }
    report("10 (simply-laced Brauer relations for A2, A3, D4)", ok, "");
    assert!(ok);
}
