//! Invariant symmetric differentials on C × E that survive on the resolved
//! quotient: none without twist, some once the twist is large enough.
//!
//! `cargo run --release --example sakai_vanishing` is noticeably faster.

use std::time::Instant;

use ellsurf::symdiff::{guaranteed_vanishing, invariant_basis, invariant_dim, sakai_check, HyperellipticModel};

fn main() {
    for g in [2, 3] {
        let start = Instant::now();
        let dims: Vec<usize> = (1..=8).map(|i| sakai_check(g, i).unwrap()).collect();
        println!("genus {g}, i = 1..8: {dims:?} ({:.2}s)", start.elapsed().as_secs_f64());
    }

    let m = HyperellipticModel::standard(2).unwrap();
    println!("\ngenus 2 with twist j: dimension / size of the invariant product basis");
    for j in 0..=2 {
        let row: Vec<String> = (0..=6)
            .map(|i| {
                let forced = guaranteed_vanishing(2, 6, i, j).unwrap();
                format!(
                    "{}/{}{}",
                    invariant_dim(&m, i, j).unwrap(),
                    invariant_basis(2, i, j).len(),
                    if forced { "*" } else { "" }
                )
            })
            .collect();
        println!("  j = {j}: {}", row.join("  "));
    }
    println!("  (* = vanishing forced by the degree count)");
}
