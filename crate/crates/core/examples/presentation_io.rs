//! Presentations as text: write, read back, complete, and reduce words.

use brauer_chen::gb::{build_presentation, dimension_from_gb, parse_presentation, GbOptions, NcPoly, Specialization, Variant};
use brauer_chen::group::{GroupSpec, ReflectionGroup};
use brauer_chen::scalars::Rational;

fn main() {
    let w = ReflectionGroup::build(&GroupSpec::g(1, 1, 3)).unwrap();
    let p = build_presentation(&w, &Variant::Chen, None).unwrap();
    let text = p.to_text(&|c| c.render(w.conductor()));
    println!("{}", text.lines().take(12).collect::<Vec<_>>().join("\n"));
    println!("... {} lines", text.lines().count());

    let back = parse_presentation(&text, w.conductor()).unwrap();
    assert_eq!(back.relations, p.relations);
    let spec = Specialization::uniform(Rational::from_integer(3), Rational::new(1, 2));
    let q = back.specialize(&spec).unwrap();
    let gb = q.groebner(&GbOptions::default());
    println!("GB: {} rules, complete {}, dimension {}", gb.len(), gb.complete, dimension_from_gb(&gb));

    // e_0 e_0 reduces to δ e_0
    let e0 = q.e(0);
    let r = gb.reduce(&NcPoly::word(&[e0, e0]));
    println!("e0*e0 -> {}", q.render_poly(&r, &|c| c.to_string()));
}
