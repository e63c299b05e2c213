//! Vertical-divisor certificates: for the singular fibers of standard
//! isotrivial fibrations no divisor in the twisted class meets the local
//! constraints, while a nodal fiber with room to spare is feasible.

use ellsurf::feasibility::{
    check_witness, fiber_case_table, vertical_feasibility, FeasibilityStatus, VerticalSectionProblem,
};
use ellsurf::kodaira::fiber_model;
use ellsurf::{FiberKind, FiberType, Rational};

fn main() {
    for row in fiber_case_table(6) {
        println!(
            "{:<4} k = {}: {}",
            row.kind.to_string(),
            row.verdict.k,
            if row.verdict.is_infeasible() { "infeasible" } else { "feasible" }
        );
    }

    let p = VerticalSectionProblem::new(
        vec![fiber_model(FiberType::simple(FiberKind::I(3)))],
        Rational::from_integer(2.into()),
        2,
    )
    .unwrap();
    if let FeasibilityStatus::Feasible { witness } = vertical_feasibility(&p).status {
        println!(
            "\nI3 with a = 2, k = 2: components {:?}, fiber multiple {}, general fibers {} (re-checked: {})",
            witness.components[0].iter().map(ToString::to_string).collect::<Vec<_>>(),
            witness.fiber_multiples[0],
            witness.general_fibers,
            check_witness(&p, &witness)
        );
    }
}
