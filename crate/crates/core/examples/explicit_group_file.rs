//! Groups given by explicit generator matrices in the text format.

use brauer_chen::br1::br1_dimension;
use brauer_chen::group::{parse_group_file, write_group_file, ReflectionGroup};
use brauer_chen::linalg::Matrix;
use brauer_chen::scalars::CycNumber;

fn main() {
    // the rank-2 group generated by diag(1,-1), the swap and [[0,-i],[i,0]]
    let text = "\
conductor 4
dim 2
generator
1, 0
0, -1
generator
0, 1
1, 0
generator
0, -z
z, 0
";
    let spec = parse_group_file(text).unwrap();
    let w = ReflectionGroup::build(&spec).unwrap();
    println!("order {}, {} reflections, dim Br_1 = {}", w.order(), w.reflections().len(), br1_dimension(&w));

    let gens: Vec<Matrix<CycNumber>> = w.generators().iter().map(|&g| w.matrix(g).clone()).collect();
    print!("{}", write_group_file(w.conductor(), &gens));
}
