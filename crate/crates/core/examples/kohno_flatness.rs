//! Kohno relations for the Chen, lattice-group and lattice-Brauer connections.
//!
//! cargo run --release --example kohno_flatness -- G:4,2,2

use std::time::Instant;

use brauer_chen::br1::Br1Params;
use brauer_chen::flatness::{kohno_check_br1, kohno_check_lattice_brauer, kohno_check_lattice_group, LambdaReading};
use brauer_chen::gb::{GbOptions, Specialization};
use brauer_chen::group::{GroupSpec, ReflectionGroup};
use brauer_chen::lattice::Lattice;
use brauer_chen::scalars::Rational;

fn main() {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "G:4,2,2".into());
    let w = ReflectionGroup::build(&GroupSpec::parse(&arg).expect("group")).expect("build");
    let lat = Lattice::build(&w).expect("lattice");
    println!("{}: {} hyperplanes, {} flats, lattice of size {}", w.label(), w.hyperplane_count(), w.flats().len(), lat.len());

    let t = Instant::now();
    let r = kohno_check_br1(&w, &Br1Params::formal(&w));
    println!("chen            passed={} equivariant={} ({:.2?})", r.passed, r.equivariant, t.elapsed());
    for (name, ok) in &r.identities {
        println!("  {name}: {ok}");
    }

    for reading in [LambdaReading::PowerOfMu, LambdaReading::PerReflection] {
        let t = Instant::now();
        let r = kohno_check_lattice_group(&w, &lat, reading);
        println!("lattice-group   passed={} {:?} ({:.2?})", r.passed, reading, t.elapsed());
    }

    let t = Instant::now();
    let spec = Specialization::uniform(Rational::from_integer(2), Rational::one());
    let r = kohno_check_lattice_brauer(&w, &lat, &spec, &GbOptions::default()).expect("presentation");
    println!("lattice-brauer  passed={} inconclusive={} ({:.2?})", r.passed, r.inconclusive, t.elapsed());
    if let Some(n) = &r.note {
        println!("  {n}");
    }
    for (name, ok) in &r.identities {
        println!("  {name}: {ok}");
    }
}
