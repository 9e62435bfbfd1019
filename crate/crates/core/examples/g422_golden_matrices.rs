//! The modules V_s(ζ) of G(4,2,2) for the four characters z = stu ↦ ζ.

use brauer_chen::br1::Br1Params;
use brauer_chen::linalg::Matrix;
use brauer_chen::reps::g422::{G422, REFLECTION_NAMES};
use brauer_chen::reps::chen_conditions_on_module;
use brauer_chen::scalars::{CycNumber, ParamScalar};

fn show_cyc(m: &Matrix<CycNumber>) -> String {
    let r: Vec<String> = m.to_rows().iter().map(|row| row.iter().map(|x| x.render_at(4).unwrap()).collect::<Vec<_>>().join(", ")).collect();
    format!("[{}]", r.join("; "))
}

fn show(m: &Matrix<ParamScalar>) -> String {
    let r: Vec<String> = m.to_rows().iter().map(|row| row.iter().map(|x| x.render(4)).collect::<Vec<_>>().join(", ")).collect();
    format!("[{}]", r.join("; "))
}

fn main() {
    let g = G422::build();
    let w = &g.group;
    let ones = Br1Params { delta: ParamScalar::delta(), mu: vec![ParamScalar::one(); w.class_count()] };
    for k in 0..4 {
        println!("zeta = z^{k} (z = i)");
        let m = g.module(k, &ones).unwrap();
        for (name, r) in REFLECTION_NAMES.iter().zip(g.reflections()) {
            println!("  {name:>2} -> {}", show_cyc(m.group_matrix(r)));
        }
        let r = g.reflections();
        println!("  p_s  = {}", show(m.p(g.hyperplane(r[0]))));
        println!("  p_s' = {}", show(m.p(g.hyperplane(r[3]))));
        let c = chen_conditions_on_module(w, &g.module(k, &Br1Params::formal(w)).unwrap());
        println!("  (1)'' {}  (1)' {}", c.holds_1doubleprime, c.holds_1prime);
    }
}
