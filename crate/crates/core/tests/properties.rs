//! Property tests for the algebraic invariants.

use std::sync::OnceLock;

use brauer_chen::br1::Br1Algebra;
use brauer_chen::gb::{build_presentation, GroebnerBasis, GbOptions, NcPoly, Specialization, Variant, Word};
use brauer_chen::group::{GroupSpec, ReflectionGroup};
use brauer_chen::lattice::{semidirect_multiply, Lattice, SemidirectElement};
use brauer_chen::reps::{induce, quotient_characters, Theta};
use brauer_chen::br1::Br1Params;
use brauer_chen::scalars::{parse_scalar, CycNumber, ParamScalar, Rational};
use proptest::prelude::*;

fn g422() -> &'static ReflectionGroup {
    static W: OnceLock<ReflectionGroup> = OnceLock::new();
    W.get_or_init(|| ReflectionGroup::build(&GroupSpec::g(4, 2, 2)).unwrap())
}

fn g333() -> &'static ReflectionGroup {
    static W: OnceLock<ReflectionGroup> = OnceLock::new();
    W.get_or_init(|| ReflectionGroup::build(&GroupSpec::g(3, 3, 3)).unwrap())
}

fn lattice() -> &'static Lattice {
    static L: OnceLock<Lattice> = OnceLock::new();
    L.get_or_init(|| Lattice::build(g422()).unwrap())
}

fn s3_gb() -> &'static (GroebnerBasis<Rational>, usize) {
    static G: OnceLock<(GroebnerBasis<Rational>, usize)> = OnceLock::new();
    G.get_or_init(|| {
        let w = ReflectionGroup::build(&GroupSpec::g(1, 1, 3)).unwrap();
        let p = build_presentation(&w, &Variant::Chen, None)
            .unwrap()
            .specialize(&Specialization::uniform(Rational::from_integer(3), Rational::new(1, 2)))
            .unwrap();
        let n = p.letters();
        (p.groebner(&GbOptions::default()), n)
    })
}

fn cyc(conductor: u32) -> impl Strategy<Value = CycNumber> {
    prop::collection::vec((-5i64..=5, 1i64..=4), conductor as usize).prop_map(move |v| {
        let coeffs: Vec<Rational> = v.into_iter().map(|(n, d)| Rational::new(n, d)).collect();
        let mut x = CycNumber::zero();
        for (k, c) in coeffs.iter().enumerate() {
            let t = &CycNumber::root_of_unity(conductor, k as i64).unwrap() * &CycNumber::from_rational(c.clone());
            x = &x + &t;
        }
        x
    })
}

fn rat_poly(letters: usize) -> impl Strategy<Value = NcPoly<Rational>> {
    prop::collection::vec((prop::collection::vec(0..letters as u16, 0..4), -3i64..=3), 0..5).prop_map(|terms| {
        NcPoly::from_terms(terms.into_iter().map(|(w, c)| (Word::from_vec(w), Rational::from_integer(c))))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cyclotomic_field_laws(a in cyc(12), b in cyc(12), c in cyc(12)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn mixed_conductors_promote(a in cyc(3), b in cyc(4)) {
        let p = &a * &b;
        prop_assert_eq!(12 % p.conductor(), 0);
        prop_assert_eq!(&p - &(&b * &a), CycNumber::zero());
    }

    #[test]
    fn rational_functions_cancel(n in -6i64..=6, k in 1i64..=3) {
        let d = ParamScalar::delta();
        let m = ParamScalar::mu(0);
        let num = &(&d * &d) - &(&m * &m);
        let f = &num / &(&d + &m);
        let back = &f * &(&d + &m);
        prop_assert_eq!(back, num);
        let c = ParamScalar::from_integer(n);
        prop_assert_eq!(&(&c * &m).pow(k).unwrap() / &m.pow(k).unwrap(), c.pow(k).unwrap());
    }

    #[test]
    fn group_action_is_an_action(x in 0usize..54, y in 0usize..54, h in 0usize..9) {
        let w = g333();
        prop_assert_eq!(w.act(w.mul(x, y), h), w.act(x, w.act(y, h)));
        prop_assert_eq!(w.mul(x, w.inv(x)), 0);
    }

    #[test]
    fn distinguished_reflections_are_equivariant(x in 0usize..16, h in 0usize..6) {
        let w = g422();
        let s = w.distinguished_reflection(h);
        prop_assert_eq!(w.conj(x, s), w.distinguished_reflection(w.act(x, h)));
    }

    #[test]
    fn br1_is_associative_on_random_triples(i in 0usize..64, j in 0usize..64, k in 0usize..64) {
        let w = g422();
        let alg = Br1Algebra::new(w);
        let (a, b, c) = (brauer_chen::br1::AlgElement::basis(i), brauer_chen::br1::AlgElement::basis(j), brauer_chen::br1::AlgElement::basis(k));
        prop_assert_eq!(alg.multiply(&alg.multiply(&a, &b), &c), alg.multiply(&a, &alg.multiply(&b, &c)));
    }

    #[test]
    fn lattice_join_is_a_semilattice(a in 0usize..14, b in 0usize..14, c in 0usize..14, x in 0usize..16) {
        let l = lattice();
        prop_assert_eq!(l.join(a, b), l.join(b, a));
        prop_assert_eq!(l.join(l.join(a, b), c), l.join(a, l.join(b, c)));
        prop_assert_eq!(l.join(a, a), a);
        prop_assert_eq!(l.join(a, l.bottom()), a);
        prop_assert_eq!(l.act(x, l.join(a, b)), l.join(l.act(x, a), l.act(x, b)));
    }

    #[test]
    fn semidirect_product_is_associative(
        w1 in 0usize..16, w2 in 0usize..16, w3 in 0usize..16,
        l1 in 0usize..14, l2 in 0usize..14, l3 in 0usize..14,
    ) {
        let (w, l) = (g422(), lattice());
        let (a, b, c) = (SemidirectElement::basis(w1, l1), SemidirectElement::basis(w2, l2), SemidirectElement::basis(w3, l3));
        let m = |x: &SemidirectElement, y: &SemidirectElement| semidirect_multiply(w, l, x, y);
        prop_assert_eq!(m(&m(&a, &b), &c), m(&a, &m(&b, &c)));
    }

    #[test]
    fn induced_modules_are_homomorphisms(x in 0usize..54, y in 0usize..54, t in 0usize..3) {
        let w = g333();
        let ch = &quotient_characters(w, 0).unwrap()[t];
        let m = induce(w, &Theta::from_character(ch), &Br1Params::formal(w), None).unwrap();
        prop_assert!(m.group_matrix(w.mul(x, y)) == &m.group_matrix(x).mul(m.group_matrix(y)));
    }

    #[test]
    fn reduction_is_linear_and_idempotent(a in rat_poly(9), b in rat_poly(9)) {
        let (gb, _) = s3_gb();
        let ra = gb.reduce(&a);
        prop_assert_eq!(gb.reduce(&ra), ra.clone());
        prop_assert_eq!(gb.reduce(&a.add(&b)), ra.add(&gb.reduce(&b)));
        for (w, _) in ra.terms() {
            prop_assert!(gb.is_normal(w));
        }
    }

    #[test]
    fn ideal_members_reduce_to_zero(a in rat_poly(9), b in rat_poly(9)) {
        let (gb, _) = s3_gb();
        for r in gb.polynomials() {
            prop_assert!(gb.reduce(&a.mul(r).mul(&b)).is_zero());
        }
    }

    #[test]
    fn scalars_render_and_parse_back(a in cyc(4), n in -4i64..=4, k in 0i64..=2) {
        let x = &(&ParamScalar::from_cyc(a) + &ParamScalar::delta().pow(k).unwrap()) * &ParamScalar::mu(0).pow(1).unwrap()
            + ParamScalar::from_integer(n);
        let text = x.render(4);
        prop_assert_eq!(parse_scalar(&text, 4).unwrap(), x);
    }
}
