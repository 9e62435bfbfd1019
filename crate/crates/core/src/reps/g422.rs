//! The worked rank-2 example: `G(4,2,2)` generated by
//! `s = diag(1,-1)`, `t = [[0,1],[1,0]]`, `u = [[0,-i],[i,0]]`, with the
//! modules `V_s(ζ)` induced from `z = stu ↦ ζ`.

use super::{induce, quotient_characters, InducedModule, RepError, Theta};
use crate::br1::Br1Params;
use crate::group::{Elem, GroupSpec, ReflectionGroup};
use crate::linalg::Matrix;
use crate::scalars::CycNumber;

pub const REFLECTION_NAMES: [&str; 6] = ["s", "t", "u", "s'", "t'", "u'"];

pub struct G422 {
    pub group: ReflectionGroup,
    pub s: Elem,
    pub t: Elem,
    pub u: Elem,
    /// `z = stu`, generating the centre.
    pub z: Elem,
}

fn zeta4(k: i64) -> CycNumber {
    CycNumber::root_of_unity(4, k).expect("conductor 4")
}

impl G422 {
    pub fn build() -> Self {
        let (o, l, i) = (CycNumber::zero(), CycNumber::one(), zeta4(1));
        let m = |a: [&CycNumber; 4]| Matrix::from_rows(vec![vec![a[0].clone(), a[1].clone()], vec![a[2].clone(), a[3].clone()]]);
        let neg = |x: &CycNumber| -x;
        let gens = vec![m([&l, &o, &o, &neg(&l)]), m([&o, &l, &l, &o]), m([&o, &neg(&i), &i, &o])];
        let group = ReflectionGroup::build(&GroupSpec::Explicit { conductor: 4, dim: 2, generators: gens.clone() })
            .expect("finite group");
        let find = |x: &Matrix<CycNumber>| group.find(x).expect("generator");
        let (s, t, u) = (find(&gens[0]), find(&gens[1]), find(&gens[2]));
        let z = group.mul(group.mul(s, t), u);
        G422 { group, s, t, u, z }
    }

    /// `s, t, u, s' = tst, t' = sts, u' = sus`.
    pub fn reflections(&self) -> [Elem; 6] {
        let w = &self.group;
        let c = |x: Elem, y: Elem| w.mul(w.mul(x, y), x);
        [self.s, self.t, self.u, c(self.t, self.s), c(self.s, self.t), c(self.s, self.u)]
    }

    pub fn hyperplane(&self, r: Elem) -> usize {
        let w = &self.group;
        w.reflections()[w.reflection_index(r).expect("reflection")].hyperplane
    }

    /// `V_s(ζ)` for `ζ = i^k`, with basis `v_s, v_{s'} = t v_s`.
    pub fn module(&self, k: i64, params: &Br1Params) -> Result<InducedModule, RepError> {
        let w = &self.group;
        let hs = self.hyperplane(self.s);
        let zeta = zeta4(k);
        let ch = quotient_characters(w, hs)?
            .into_iter()
            .find(|c| c.value(self.z) == Some(&zeta))
            .expect("a character for each fourth root of unity");
        let hs2 = self.hyperplane(self.reflections()[3]);
        induce(w, &Theta::from_character(&ch), params, Some(&[(hs2, self.t)]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z_is_central_of_order_four() {
        let g = G422::build();
        let w = &g.group;
        assert_eq!(w.order(), 16);
        assert_eq!(w.element_order(g.z), 4);
        assert!((0..w.order()).all(|x| w.mul(x, g.z) == w.mul(g.z, x)));
        let r = g.reflections();
        let mut sorted = r.to_vec();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 6);
        assert_eq!(r[3], w.mul(w.mul(g.u, g.s), g.u));
    }
}
