//! The decision tree on a handful of surfaces, with the rules it cites.

use ellsurf::isotrivial::{build_product_quotient, classify_action};
use ellsurf::orbifold::{BranchPoint, EAction, GroupActionData};
use ellsurf::verdict::MinimalModelClass;
use ellsurf::{evaluate, FiberConfiguration, FiberKind, FiberType, SurfaceDescription};

fn main() {
    let i1 = |n| vec![FiberType::simple(FiberKind::I(n)); 36];
    let mut doubled = i1(1);
    doubled.extend(vec![FiberType::multiple(2).unwrap(); 4]);
    let pq = build_product_quotient(2).unwrap();
    let k3 = build_product_quotient(1).unwrap();
    let o4 = BranchPoint::new(4, EAction::Order4).unwrap();
    let inv = BranchPoint::new(2, EAction::Involution).unwrap();
    let z4 = GroupActionData::new(4, 0, vec![o4, o4, o4, o4, inv, inv, inv, inv]).unwrap();
    let z4_fibers = classify_action(&z4).fibers;

    let cases = [
        ("36 I1", SurfaceDescription::new(FiberConfiguration::new(0, i1(1)))),
        ("36 I1 + 4 x 2I0", SurfaceDescription::new(FiberConfiguration::new(0, doubled))),
        ("(C x E)/±1, g(C) = 2", SurfaceDescription::new(pq.config).with_action(pq.action)),
        ("Kummer", SurfaceDescription::new(k3.config).with_class(MinimalModelClass::K3)),
        (
            "Z/4, non-standard",
            SurfaceDescription::new(FiberConfiguration::new(0, z4_fibers).isotrivial(true)).with_action(z4),
        ),
    ];
    for (name, s) in cases {
        let r = evaluate(&s).unwrap();
        let [o, q, n] = r.answers();
        println!("{name:<22} omega {o:<7} q~ {q:<7} symdiff {n:<7} pi1 finite {}", r.pi1_finite);
        for c in &r.case_trace {
            println!("    [{}]", c.rule);
        }
    }
}
