//! All level-one irreducibles (orbit, θ) of Br_1(W), as a CSV table.
//!
//! cargo run --release --example level1_classification -- G:3,3,3

use brauer_chen::br1::Br1Params;
use brauer_chen::group::{GroupSpec, ReflectionGroup};
use brauer_chen::reps::classify_level1;

fn main() {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "G:4,2,2".into());
    let w = ReflectionGroup::build(&GroupSpec::parse(&arg).unwrap()).unwrap();
    let c = classify_level1(&w, &Br1Params::formal(&w));
    print!("{}", c.to_csv());
    println!("sum of squares {} = dim Br_1 - |W| = {}: {}", c.sum_of_squares, c.expected, c.sum_matches());
    println!("characters pairwise distinct: {}", c.traces_distinct);
}
