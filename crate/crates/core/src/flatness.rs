//! Kohno relations `[t_Z, t_H] = 0` for the three connections: Chen's form in
//! `Br_1(W)`, the lattice form in `W ⋉ kℒ` and the combined form in
//! `Br(W, ℒ)` checked by reduction against a Gröbner basis.

use serde::Serialize;

use crate::br1::{AlgElement, Br1Algebra, Br1Params};
use crate::gb::{
    build_presentation, dimension_from_gb, GbOptions, GroebnerBasis, Letter, NcPoly, PresentationError,
    Specialization, Variant, Word,
};
use crate::group::{Elem, ReflectionGroup};
use crate::lattice::{semidirect_multiply, Lattice, SemidirectElement};
use crate::scalars::{ParamScalar, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flavor {
    Chen,
    LatticeGroup,
    LatticeBrauer,
}

impl Flavor {
    pub fn name(&self) -> &'static str {
        match self {
            Flavor::Chen => "chen",
            Flavor::LatticeGroup => "lattice-group",
            Flavor::LatticeBrauer => "lattice-brauer",
        }
    }
}

/// How the coefficients `λ_H^{(i)}`, `i > 0`, of the lattice connection are
/// read: as powers `μ_{s_H}^i`, or as the parameter `μ_{s_H^i}` of the
/// reflection `s_H^i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LambdaReading {
    PowerOfMu,
    PerReflection,
}

#[derive(Clone, Debug, Serialize)]
pub struct FlatCheck {
    pub hyperplanes: Vec<usize>,
    pub crossing_edge: bool,
    /// `(H, [t_Z, t_H] = 0)` for each `H ⊃ Z`.
    pub commutators: Vec<(usize, bool)>,
    /// On crossing edges: every summand of `t_{H_1}` commutes with every
    /// summand of `t_{H_2}`.
    pub summands_commute: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FlatnessReport {
    pub flavor: Flavor,
    pub group: String,
    pub flats: Vec<FlatCheck>,
    pub equivariant: bool,
    /// Named identities used in the proofs, with verdicts.
    pub identities: Vec<(String, bool)>,
    pub passed: bool,
    /// Set when a Gröbner basis could not be completed.
    pub inconclusive: bool,
    pub note: Option<String>,
}

impl FlatnessReport {
    fn finish(mut self) -> Self {
        self.passed = !self.inconclusive
            && self.equivariant
            && self.flats.iter().all(|f| f.commutators.iter().all(|(_, ok)| *ok) && f.summands_commute != Some(false));
        self
    }
}

/// `t_H = φ_H − e_H` in `Br_1(W)`.
pub fn chen_coefficient(alg: &Br1Algebra, h: usize) -> AlgElement {
    alg.phi(h).sub(&alg.e(h))
}

/// `φ_Z = Σ_{H ⊃ Z} φ_H`.
pub fn phi_z(alg: &Br1Algebra, flat: &[usize]) -> AlgElement {
    flat.iter().fold(AlgElement::zero(), |acc, &h| acc.add(&alg.phi(h)))
}

/// Reflections with hyperplane in the flat and fixing `h0` setwise.
fn setwise_fixers(w: &ReflectionGroup, flat: &[usize], h0: usize) -> Vec<usize> {
    flat.iter()
        .flat_map(|&h| w.reflections_fixing(h).iter().copied())
        .filter(|&r| w.act(w.reflections()[r].element, h0) == h0)
        .collect()
}

pub fn kohno_check_br1(w: &ReflectionGroup, params: &Br1Params) -> FlatnessReport {
    let alg = Br1Algebra::with_params(w, params.clone());
    let nh = w.hyperplane_count();
    let t: Vec<AlgElement> = (0..nh).map(|h| chen_coefficient(&alg, h)).collect();

    let equivariant = w.generators().iter().all(|&g| {
        (0..nh).all(|h| alg.multiply(&alg.multiply(&alg.g(g), &t[h]), &alg.g(w.inv(g))) == t[w.act(g, h)])
    });

    let mut flats = Vec::new();
    let mut literal = true;
    let mut corrected = true;
    for f in w.flats() {
        let tz = f.hyperplanes.iter().fold(AlgElement::zero(), |acc, &h| acc.add(&t[h]));
        let commutators = f.hyperplanes.iter().map(|&h| (h, alg.commutator(&tz, &t[h]).is_zero())).collect();
        let summands_commute = f.is_crossing_edge().then(|| {
            let (a, b) = (f.hyperplanes[0], f.hyperplanes[1]);
            let parts = |h: usize| {
                let mut v: Vec<AlgElement> =
                    w.reflections_fixing(h).iter().map(|&r| alg.g(w.reflections()[r].element)).collect();
                v.push(alg.e(h));
                v
            };
            parts(a).iter().all(|x| parts(b).iter().all(|y| alg.commutator(x, y).is_zero()))
        });
        if !f.is_crossing_edge() {
            let pz = phi_z(&alg, &f.hyperplanes);
            for &h0 in &f.hyperplanes {
                let e0 = alg.e(h0);
                let all: AlgElement = f.hyperplanes.iter().fold(AlgElement::zero(), |acc, &h| acc.add(&alg.e(h)));
                literal &= alg.multiply(&e0, &all) == alg.multiply(&e0, &pz);
                let others: AlgElement = f
                    .hyperplanes
                    .iter()
                    .filter(|&&h| h != h0)
                    .fold(AlgElement::zero(), |acc, &h| acc.add(&alg.e(h)));
                let mut fix = AlgElement::zero();
                for r in setwise_fixers(w, &f.hyperplanes, h0) {
                    fix.add_term(w.reflections()[r].element, alg.mu_of(r).clone());
                }
                let rhs = alg.multiply(&e0, &pz.sub(&fix));
                let rhs_right = alg.multiply(&pz.sub(&fix), &e0);
                corrected &= alg.multiply(&e0, &others) == rhs && alg.multiply(&others, &e0) == rhs_right;
            }
        }
        flats.push(FlatCheck { hyperplanes: f.hyperplanes.clone(), crossing_edge: f.is_crossing_edge(), commutators, summands_commute });
    }
    FlatnessReport {
        flavor: Flavor::Chen,
        group: w.label(),
        flats,
        equivariant,
        identities: vec![
            ("e0*sum_e = e0*phi_Z (all H)".into(), literal),
            ("e0*sum_{H!=H0} e_H = e0*(phi_Z - setwise fixers of H0)".into(), corrected),
        ],
        passed: false,
        inconclusive: false,
        note: None,
    }
    .finish()
}

/// `t_H = Σ_{0≤i<m_H} λ_H^{(i)} s_H^i f_H` in `W ⋉ kℒ`, with `λ_H^{(0)}` the
/// orbit parameter `λ`.
pub fn lattice_group_coefficient(
    w: &ReflectionGroup,
    lat: &Lattice,
    h: usize,
    mu: &[ParamScalar],
    reading: LambdaReading,
) -> SemidirectElement {
    let s = w.distinguished_reflection(h);
    let m = w.pointwise_stabilizer(h).len();
    let class = |x: Elem| w.reflections()[w.reflection_index(x).expect("reflection")].class_id;
    let fh = lat.atom(h);
    let mut t = SemidirectElement::term(0, fh, ParamScalar::lambda(w.hyperplanes()[h].orbit_id));
    for i in 1..m {
        let si = w.pow(s, i as i64);
        let c = match reading {
            LambdaReading::PowerOfMu => mu[class(s)].pow(i as i64).expect("positive power"),
            LambdaReading::PerReflection => mu[class(si)].clone(),
        };
        t.add_term(si, fh, c);
    }
    t
}

pub fn kohno_check_lattice_group(w: &ReflectionGroup, lat: &Lattice, reading: LambdaReading) -> FlatnessReport {
    let mu: Vec<ParamScalar> = (0..w.class_count()).map(ParamScalar::mu).collect();
    let nh = w.hyperplane_count();
    let t: Vec<SemidirectElement> = (0..nh).map(|h| lattice_group_coefficient(w, lat, h, &mu, reading)).collect();
    let mul = |a: &SemidirectElement, b: &SemidirectElement| semidirect_multiply(w, lat, a, b);
    let comm = |a: &SemidirectElement, b: &SemidirectElement| mul(a, b).sub(&mul(b, a));
    let equivariant = w.generators().iter().all(|&g| {
        let (x, y) = (SemidirectElement::basis(g, 0), SemidirectElement::basis(w.inv(g), 0));
        (0..nh).all(|h| mul(&mul(&x, &t[h]), &y) == t[w.act(g, h)])
    });
    // f_H f_{H0} = f_{s_H^{-i}(H0)} f_H
    let conj_identity = (0..nh).all(|h| {
        let s = w.distinguished_reflection(h);
        (0..nh).all(|h0| {
            (0..w.element_order(s) as i64)
                .all(|i| lat.join(lat.atom(h), lat.atom(h0)) == lat.join(lat.atom(w.act(w.pow(s, -i), h0)), lat.atom(h)))
        })
    });
    let equivariant_choice = (0..nh).all(|h| {
        let s = w.distinguished_reflection(h);
        (0..w.order()).all(|g| w.conj(g, s) == w.distinguished_reflection(w.act(g, h)))
    });
    let flats = w
        .flats()
        .iter()
        .map(|f| {
            let tz = f.hyperplanes.iter().fold(SemidirectElement::zero(), |acc, &h| acc.add(&t[h]));
            FlatCheck {
                hyperplanes: f.hyperplanes.clone(),
                crossing_edge: f.is_crossing_edge(),
                commutators: f.hyperplanes.iter().map(|&h| (h, comm(&tz, &t[h]).is_zero())).collect(),
                summands_commute: None,
            }
        })
        .collect();
    FlatnessReport {
        flavor: Flavor::LatticeGroup,
        group: w.label(),
        flats,
        equivariant,
        identities: vec![
            ("f_H f_H0 = f_{s_H^-i(H0)} f_H".into(), conj_identity),
            ("w s_H w^-1 = s_{w(H)}".into(), equivariant_choice),
        ],
        passed: false,
        inconclusive: false,
        note: Some(format!("lambda reading: {reading:?}")),
    }
    .finish()
}

/// Data for the combined connection in `Br(W, ℒ)` at a rational
/// specialization.
pub struct LatticeBrauer<'a> {
    pub group: &'a ReflectionGroup,
    pub lattice: &'a Lattice,
    pub gb: GroebnerBasis<Rational>,
    pub spec: Specialization,
    ng: usize,
    nl: usize,
}

impl<'a> LatticeBrauer<'a> {
    pub fn new(
        w: &'a ReflectionGroup,
        lat: &'a Lattice,
        spec: &Specialization,
        opts: &GbOptions,
    ) -> Result<Self, PresentationError> {
        let p = build_presentation(w, &Variant::Lattice, Some(lat))?.specialize(spec)?;
        let gb = p.groebner(opts);
        Ok(LatticeBrauer { group: w, lattice: lat, gb, spec: spec.clone(), ng: w.order(), nl: lat.len() })
    }

    pub fn g(&self, x: Elem) -> Letter {
        x as Letter
    }

    pub fn f(&self, l: usize) -> Letter {
        (self.ng + l) as Letter
    }

    pub fn e(&self, h: usize) -> Letter {
        (self.ng + self.nl + h) as Letter
    }

    fn word(&self, ls: &[Letter], c: Rational) -> NcPoly<Rational> {
        NcPoly::monomial(Word::from_slice(ls), c)
    }

    fn mu(&self, r: usize) -> Rational {
        let class = self.group.reflections()[r].class_id;
        let v = &self.spec.mu;
        if v.len() == 1 { v[0].clone() } else { v[class].clone() }
    }

    fn lambda(&self, h: usize) -> Rational {
        let o = self.group.hyperplanes()[h].orbit_id;
        let v = &self.spec.lambda;
        if v.len() == 1 { v[0].clone() } else { v[o].clone() }
    }

    /// `φ_H f_H = (λ_H + Σ_{Ker(s-1)=H} μ_s s) f_H`.
    pub fn phi_f(&self, h: usize) -> NcPoly<Rational> {
        let fh = self.f(self.lattice.atom(h));
        let mut p = self.word(&[fh], self.lambda(h));
        for &r in self.group.reflections_fixing(h) {
            p = p.add(&self.word(&[self.g(self.group.reflections()[r].element), fh], self.mu(r)));
        }
        p
    }

    /// `t_H = (φ_H − e_H) f_H`.
    pub fn t(&self, h: usize) -> NcPoly<Rational> {
        self.phi_f(h).sub(&self.word(&[self.e(h), self.f(self.lattice.atom(h))], Rational::one()))
    }

    /// `ψ_Z = Σ_{H ⊃ Z} φ_H f_H`.
    pub fn psi_z(&self, flat: &[usize]) -> NcPoly<Rational> {
        flat.iter().fold(NcPoly::zero(), |acc, &h| acc.add(&self.phi_f(h)))
    }

    pub fn reduces_to_zero(&self, p: &NcPoly<Rational>) -> bool {
        self.gb.reduce(p).is_zero()
    }
}

pub fn kohno_check_lattice_brauer(
    w: &ReflectionGroup,
    lat: &Lattice,
    spec: &Specialization,
    opts: &GbOptions,
) -> Result<FlatnessReport, PresentationError> {
    let lb = LatticeBrauer::new(w, lat, spec, opts)?;
    let nh = w.hyperplane_count();
    let t: Vec<NcPoly<Rational>> = (0..nh).map(|h| lb.t(h)).collect();
    let comm = |a: &NcPoly<Rational>, b: &NcPoly<Rational>| a.mul(b).sub(&b.mul(a));
    let equivariant = w.generators().iter().all(|&g| {
        (0..nh).all(|h| {
            let conj = NcPoly::word(&[lb.g(g)]).mul(&t[h]).mul(&NcPoly::word(&[lb.g(w.inv(g))]));
            lb.reduces_to_zero(&conj.sub(&t[w.act(g, h)]))
        })
    });
    let mut literal = true;
    let mut corrected = true;
    let mut flats = Vec::new();
    for f in w.flats() {
        let tz = f.hyperplanes.iter().fold(NcPoly::zero(), |acc, &h| acc.add(&t[h]));
        let commutators = f.hyperplanes.iter().map(|&h| (h, lb.reduces_to_zero(&comm(&tz, &t[h])))).collect();
        if !f.is_crossing_edge() {
            let psi = lb.psi_z(&f.hyperplanes);
            let lam_f = f.hyperplanes.iter().fold(NcPoly::zero(), |acc, &h| {
                acc.add(&lb.word(&[lb.f(lat.atom(h))], lb.lambda(h)))
            });
            for &h0 in &f.hyperplanes {
                let e0 = NcPoly::word(&[lb.e(h0)]);
                let all = f.hyperplanes.iter().fold(NcPoly::zero(), |acc, &h| acc.add(&NcPoly::word(&[lb.e(h)])));
                literal &= lb.reduces_to_zero(&e0.mul(&all).sub(&e0.mul(&psi.sub(&lam_f))));
                let others = f
                    .hyperplanes
                    .iter()
                    .filter(|&&h| h != h0)
                    .fold(NcPoly::zero(), |acc, &h| acc.add(&NcPoly::word(&[lb.e(h)])));
                let mut moved = NcPoly::zero();
                for &h in &f.hyperplanes {
                    for &r in w.reflections_fixing(h) {
                        let s = w.reflections()[r].element;
                        if w.act(s, h0) != h0 {
                            moved = moved.add(&lb.word(&[lb.g(s), lb.f(lat.atom(h))], lb.mu(r)));
                        }
                    }
                }
                corrected &= lb.reduces_to_zero(&e0.mul(&others).sub(&e0.mul(&moved)))
                    && lb.reduces_to_zero(&others.mul(&e0).sub(&moved.mul(&e0)));
            }
        }
        flats.push(FlatCheck { hyperplanes: f.hyperplanes.clone(), crossing_edge: f.is_crossing_edge(), commutators, summands_commute: None });
    }
    let inconclusive = !lb.gb.complete;
    let note = Some(format!(
        "{}; GB size {}, complete {}, dimension {}",
        spec.describe(),
        lb.gb.len(),
        lb.gb.complete,
        dimension_from_gb(&lb.gb)
    ));
    Ok(FlatnessReport {
        flavor: Flavor::LatticeBrauer,
        group: w.label(),
        flats,
        equivariant,
        identities: vec![
            ("e0*sum_e = e0*(psi_Z - sum lambda_H f_H) (all H)".into(), literal),
            ("e0*sum_{H!=H0} e_H = e0*sum_{s(H0)!=H0} mu_s s f_{H_s}".into(), corrected),
        ],
        passed: false,
        inconclusive,
        note,
    }
    .finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;

    fn group(m: u32, p: u32, n: usize) -> ReflectionGroup {
        ReflectionGroup::build(&GroupSpec::g(m, p, n)).unwrap()
    }

    #[test]
    fn chen_flavor_symmetric_group() {
        let w = group(1, 1, 3);
        let r = kohno_check_br1(&w, &Br1Params::formal(&w));
        assert!(r.passed && r.equivariant);
        assert!(!r.identities[0].1 && r.identities[1].1, "{:?}", r.identities);
    }

    #[test]
    fn chen_flavor_s4_has_crossing_edges() {
        let w = group(1, 1, 4);
        let r = kohno_check_br1(&w, &Br1Params::formal(&w));
        assert!(r.passed);
        assert!(r.flats.iter().any(|f| f.crossing_edge && f.summands_commute == Some(true)));
    }

    #[test]
    fn rank_one_is_vacuous() {
        let w = group(3, 1, 1);
        let r = kohno_check_br1(&w, &Br1Params::formal(&w));
        assert!(r.flats.is_empty() && r.passed);
        let lat = Lattice::build(&w).unwrap();
        assert!(kohno_check_lattice_group(&w, &lat, LambdaReading::PerReflection).passed);
    }

    #[test]
    fn corrected_identity_on_g422() {
        let w = group(4, 2, 2);
        let r = kohno_check_br1(&w, &Br1Params::formal(&w));
        assert!(r.passed);
        assert!(!r.identities[0].1);
        assert!(r.identities[1].1);
    }

    #[test]
    fn lattice_group_both_readings() {
        let w = group(1, 1, 3);
        let lat = Lattice::build(&w).unwrap();
        for reading in [LambdaReading::PowerOfMu, LambdaReading::PerReflection] {
            let r = kohno_check_lattice_group(&w, &lat, reading);
            assert!(r.passed, "{reading:?}");
            assert!(r.identities.iter().all(|(_, ok)| *ok));
        }
    }

    #[test]
    fn lattice_brauer_symmetric_group() {
        let w = group(1, 1, 3);
        let lat = Lattice::build(&w).unwrap();
        let spec = Specialization::uniform(Rational::from_integer(2), Rational::one());
        let r = kohno_check_lattice_brauer(&w, &lat, &spec, &GbOptions::default()).unwrap();
        assert!(!r.inconclusive);
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn lattice_brauer_detects_a_broken_connection() {
        let w = group(1, 1, 3);
        let lat = Lattice::build(&w).unwrap();
        let spec = Specialization::uniform(Rational::from_integer(2), Rational::one());
        let lb = LatticeBrauer::new(&w, &lat, &spec, &GbOptions::default()).unwrap();
        let bad = |h: usize| NcPoly::<Rational>::word(&[lb.e(h)]);
        let tz = (0..3).fold(NcPoly::zero(), |acc, h| acc.add(&bad(h)));
        let c = tz.mul(&bad(0)).sub(&bad(0).mul(&tz));
        assert!(!lb.reduces_to_zero(&c));
        let tz = (0..3).fold(NcPoly::zero(), |acc, h| acc.add(&lb.t(h)));
        assert!(lb.reduces_to_zero(&tz.mul(&lb.t(0)).sub(&lb.t(0).mul(&tz))));
    }
}
