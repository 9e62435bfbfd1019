//! Simply-laced Brauer relations and the Vogel quadratic relation in Br_1.

use brauer_chen::br1::{cfw_relation_check, vogel_identity_check, Br1Params, CfwMap};
use brauer_chen::group::{GroupSpec, ReflectionGroup};

fn main() {
    for (name, spec) in [("A2", GroupSpec::g(1, 1, 3)), ("A3", GroupSpec::g(1, 1, 4)), ("D4", GroupSpec::g(2, 2, 4))] {
        let w = ReflectionGroup::build(&spec).unwrap();
        for map in [CfwMap::Scaled, CfwMap::Literal] {
            let r = cfw_relation_check(&w, &Br1Params::formal(&w), map).unwrap();
            let failing: Vec<&str> = r.relations.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.as_str()).collect();
            println!("{name} {map:?}: {} {:?}", r.status, failing);
        }
    }
    for spec in [GroupSpec::g(1, 1, 4), GroupSpec::g(4, 2, 2), GroupSpec::g(5, 5, 2)] {
        let w = ReflectionGroup::build(&spec).unwrap();
        let r = vogel_identity_check(&w, None).unwrap();
        println!("vogel {}: {}", w.label(), r.status);
    }
}
