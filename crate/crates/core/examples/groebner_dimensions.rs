//! Gröbner-basis dimensions of the Chen-type presentations for G(4,2,2).
//!
//! cargo run --release --example groebner_dimensions [-- G:m,p,n]

use std::time::Instant;

use brauer_chen::gb::{build_presentation, dimension_from_gb, GbOptions, Specialization, Variant};
use brauer_chen::group::{GroupSpec, ReflectionGroup};
use brauer_chen::scalars::Rational;

fn main() {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "G:4,2,2".into());
    let w = ReflectionGroup::build(&GroupSpec::parse(&spec).expect("group spec")).expect("group");
    println!("{}: |W| = {}, {} hyperplanes", w.label(), w.order(), w.hyperplane_count());
    let at = Specialization::uniform(Rational::from_integer(2), Rational::one());
    for v in [Variant::Chen, Variant::ChenDoublePrime, Variant::ChenPrime, Variant::ChenBoth] {
        let t = Instant::now();
        let p = build_presentation(&w, &v, None).unwrap().specialize(&at).unwrap();
        let gb = p.groebner(&GbOptions::default());
        println!(
            "{:<10} relations {:>6}  gb {:>6}  complete {}  dimension {}  ({:.2?}, {} obstructions)",
            v.name(),
            p.relation_count(),
            gb.len(),
            gb.complete,
            dimension_from_gb(&gb),
            t.elapsed(),
            gb.stats.obstructions
        );
    }
}
