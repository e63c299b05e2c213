//! Local holomorphy at an A1 point: which invariant differentials extend over
//! the exceptional curve, and how they factor through M = z1 dz2 - z2 dz1.

use ellsurf::symdiff::{blowup_holomorphy, m_divide, obstruction_profile, pullback, Chart, LocalDifferential, MForm};
use ellsurf::Rational;

fn mono(a: u32, b: u32, l: u32, i: u32) -> LocalDifferential {
    LocalDifferential::monomial(Rational::from_integer(1.into()), a, b, l, i)
}

fn main() {
    let m = MForm.as_differential();
    let examples = [
        ("dz1·dz2", mono(0, 0, 1, 2)),
        ("M", m.clone()),
        ("z1^2·dz2^2", mono(2, 0, 0, 2)),
        ("dz1^2·M^2", mono(0, 0, 2, 2).mul(&MForm.power(2))),
        ("z1·dz1 + z2·dz2", mono(1, 0, 1, 1).add(&mono(0, 1, 0, 1))),
    ];
    for (name, w) in examples {
        let a = pullback(&w, Chart::A).unwrap();
        let poles = a.pole_terms().count();
        println!(
            "{name:<18} i = {}  holomorphic: {:<5}  chart A pole terms: {poles}  M-quotient: {}",
            w.degree(),
            blowup_holomorphy(&w).unwrap(),
            (1..=w.degree()).rev().find_map(|t| m_divide(&w, t).map(|e| format!("M^{t}·({e})"))).unwrap_or("-".into())
        );
    }

    println!("\nleast admissible vanishing order n_min(i, j):");
    for i in [2, 4, 6, 10] {
        let row: Vec<String> = (0..=3).map(|j| obstruction_profile(i, j).0.to_string()).collect();
        println!("  i = {i:>2}: j = 0..3 -> {}", row.join(", "));
    }
}
