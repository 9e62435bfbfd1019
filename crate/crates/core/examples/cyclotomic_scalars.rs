//! Exact scalars: cyclotomic numbers and rational functions in δ, μ, λ.

use brauer_chen::scalars::{parse_scalar, CycNumber, ParamScalar, Rational};

fn main() {
    // ζ₈² = i, and 1 + i + i² + i³ = 0
    let z8 = CycNumber::root_of_unity(8, 1).unwrap();
    let i = CycNumber::root_of_unity(4, 1).unwrap();
    println!("zeta_8^2 = {}   (i = {})", z8.pow(2).unwrap().render_at(8).unwrap(), i.render_at(8).unwrap());
    let sum = (0..4).fold(CycNumber::zero(), |a, k| &a + &i.pow(k).unwrap());
    println!("1 + i + i^2 + i^3 = {sum}");

    // mixing conductors promotes to the lcm
    let w = CycNumber::root_of_unity(3, 1).unwrap();
    let prod = &w * &i;
    println!("zeta_3 * i has conductor {}: {}", prod.conductor(), prod.render());
    println!("1/(1 + zeta_3) = {}", (&CycNumber::one() + &w).inv().unwrap().render());

    // rational functions in the parameters
    let delta = ParamScalar::delta();
    let mu = ParamScalar::mu(0);
    let f = &(&delta * &mu) / &(&delta - &mu);
    println!("f = {f}");
    let g = parse_scalar("(d^2 - m0^2)/(d + m0)", 1).unwrap();
    println!("(d^2 - m0^2)/(d + m0) = {g}");

    let r: Rational = "-6/8".parse().unwrap();
    println!("-6/8 = {r}");
}
