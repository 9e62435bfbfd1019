//! Reflections, hyperplane orbits, codimension-2 flats and transversality.
//!
//! cargo run --example group_geometry -- G:3,3,3

use brauer_chen::group::{GroupSpec, ReflectionGroup};

fn main() {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "G:4,2,2".into());
    let w = ReflectionGroup::build(&GroupSpec::parse(&arg).unwrap()).unwrap();
    println!("{}: order {}, rank {}, conductor {}", w.label(), w.order(), w.rank(), w.conductor());
    println!("{} reflections in {} classes", w.reflections().len(), w.class_count());
    for o in 0..w.orbit_count() {
        let h0 = w.orbit_representative(o);
        let (w0, n0) = w.stabilizer_and_normalizer(h0).unwrap();
        println!(
            "orbit {o}: hyperplanes {:?}, |W_H| = {}, |N0/W0| = {}, s_H = g{}",
            w.orbit(o),
            w0.len(),
            n0.len() / w0.len(),
            w.distinguished_reflection(h0)
        );
    }
    for f in w.flats() {
        println!("flat {:?}{}", f.hyperplanes, if f.is_crossing_edge() { " (crossing)" } else { "" });
    }
    println!("transverse pairs: {:?}", w.transverse_pairs());
    println!("(1)'' pairs: {}", w.chen_doubleprime_pairs().len());
    println!("(1)' witnesses: {}", w.chen_prime_pairs().len());
}
