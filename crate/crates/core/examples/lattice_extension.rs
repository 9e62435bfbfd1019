//! The lattice of full reflection subgroups, its Möbius algebra and the
//! semidirect product W ⋉ kℒ.

use brauer_chen::group::{GroupSpec, ReflectionGroup};
use brauer_chen::lattice::{semidirect_multiply, Lattice, MoebiusElement, SemidirectElement};

fn main() {
    let w = ReflectionGroup::build(&GroupSpec::g(4, 2, 2)).unwrap();
    let lat = Lattice::build(&w).unwrap();
    println!("{}: {} full reflection subgroups", w.label(), lat.len());
    for n in lat.nodes() {
        println!("  L{}: hyperplanes {:?}, order {}", n.id, n.hyperplanes, n.elements.len());
    }
    println!("orbits: {:?}", lat.orbits());

    let (a, b) = (lat.atom(0), lat.atom(1));
    println!("W_H0 v W_H1 = L{}", lat.join(a, b));
    let prod = MoebiusElement::basis(a).mul(&MoebiusElement::basis(b), &lat);
    println!("f_a f_b = {:?}", prod.0.keys().collect::<Vec<_>>());

    // (w f_L)(w' f_L') = w w' f_{w'^-1(L) v L'}
    let s = w.distinguished_reflection(2);
    let x = SemidirectElement::basis(s, a);
    let y = SemidirectElement::basis(s, b);
    println!("(s f_a)(s f_b) = {:?}", semidirect_multiply(&w, &lat, &x, &y));
}
