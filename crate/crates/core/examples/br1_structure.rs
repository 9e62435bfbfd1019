//! The algebra Br_1(W) from structure constants: products, φ_H, and the
//! associativity certificate.

use brauer_chen::br1::{br1_dimension, verify_associativity, Br1Algebra};
use brauer_chen::group::{GroupSpec, ReflectionGroup};

fn main() {
    let w = ReflectionGroup::build(&GroupSpec::g(4, 2, 2)).unwrap();
    let alg = Br1Algebra::new(&w);
    println!("{}: dim Br_1 = {} (formula {})", w.label(), alg.dim(), br1_dimension(&w));

    let (h0, h1) = (0, 1);
    let e0 = alg.e(h0);
    println!("e0 * e0 = {:?}", alg.multiply(&e0, &e0));
    println!("e0 * e1 = {:?}", alg.multiply(&e0, &alg.e(h1)));
    println!("phi_0 = {:?}", alg.phi(h0));
    let s = w.distinguished_reflection(h0);
    println!("s_H0 * e0 = {:?}", alg.multiply(&alg.g(s), &e0));

    for i in (0..alg.dim()).step_by(16) {
        println!("basis {i}: {}", alg.describe(i));
    }
    let r = verify_associativity(&alg, 1);
    println!("associativity: {} ({} triples, exhaustive {})", r.status, r.triples_checked, r.exhaustive);
}
