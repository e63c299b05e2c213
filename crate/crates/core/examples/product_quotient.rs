//! The quotients (C × E)/±1 for hyperelliptic C and their verdicts.

use ellsurf::isotrivial::build_product_quotient;
use ellsurf::kodaira::numerical_invariants;
use ellsurf::verdict::MinimalModelClass;
use ellsurf::{evaluate, SurfaceDescription};

fn main() {
    for g1 in 1..=5 {
        let pq = build_product_quotient(g1).unwrap();
        let inv = numerical_invariants(&pq.config).unwrap();
        let mut s = SurfaceDescription::new(pq.config).with_action(pq.action);
        if g1 == 1 {
            s = s.with_class(MinimalModelClass::K3);
        }
        let r = evaluate(&s).unwrap();
        println!(
            "g(C) = {g1}: {} x I0*, chi = {}, kappa = {}, answers {:?}, pi1 finite: {}",
            2 * g1 + 2,
            inv.chi,
            inv.kappa,
            r.answers().map(|a| a.to_string()),
            r.pi1_finite
        );
    }
}
