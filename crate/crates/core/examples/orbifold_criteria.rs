//! Multiple-fiber arithmetic: the base twist, the q~ criterion, Hurwitz data
//! of a Galois cover and the number of involution points.

use ellsurf::orbifold::{
    involution_count, lambda_and_base_twist, qtilde_criterion, BranchPoint, EAction, GroupActionData,
};
use ellsurf::{FiberConfiguration, FiberKind, FiberType};

fn main() {
    for mults in [vec![], vec![2, 2], vec![2, 3, 6], vec![2, 2, 2, 2], vec![3, 3, 3]] {
        let mut fibers = vec![FiberType::simple(FiberKind::I(1)); 24];
        fibers.extend(mults.iter().map(|&m| FiberType::multiple(m).unwrap()));
        let c = FiberConfiguration::new(0, fibers);
        let (lambda, pseff) = lambda_and_base_twist(&c);
        println!(
            "multiplicities {mults:?}: lambda = {lambda}, f*Omega_B(D) pseudoeffective: {pseff}, q~ criterion: {:?}",
            qtilde_criterion(&c)
        );
    }

    // Z/6 over P1: one point fixed by translations of order 6, involutions elsewhere.
    let t = BranchPoint::new(6, EAction::Translation).unwrap();
    let inv = BranchPoint::new(2, EAction::Involution).unwrap();
    let a = GroupActionData::new(6, 0, vec![t, inv, inv, inv]).unwrap();
    let z = involution_count(&a);
    println!(
        "\nZ/6 cover: g(C) = {}, deg R_t = {}, #Z = {} (>= 2g(C) - 1: {})",
        a.curve_genus(),
        a.deg_rt(),
        z.count,
        z.meets_bound
    );
    match GroupActionData::new(4, 0, vec![inv]) {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
}
