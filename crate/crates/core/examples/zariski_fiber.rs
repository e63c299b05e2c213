//! Zariski decomposition of divisors supported on fiber components.
//!
//! Run with `cargo run --example zariski_fiber`.

use std::sync::Arc;

use ellsurf::kodaira::fiber_model;
use ellsurf::lattice::zariski_decompose;
use ellsurf::{CurveConfig, FiberKind, FiberType, QDivisor};

fn main() {
    // Two (-1)-curves meeting once, with a (-2)-curve hanging off the second.
    let config = Arc::new(CurveConfig::from_int_gram(&[vec![-1, 1, 0], vec![1, -1, 1], vec![0, 1, -2]]).unwrap());
    let d = QDivisor::from_ints(config, &[3, 1, 1]).unwrap();
    let z = zariski_decompose(&d).unwrap();
    println!("D = {d}\nP = {}\nN = {}\n", z.positive, z.negative);

    // The non-reduced part of I2* sits on the chain of double curves.
    let m = fiber_model(FiberType::simple(FiberKind::IStar(2)));
    let d0 = m.d0_divisor();
    let z = zariski_decompose(&d0).unwrap();
    println!("I2*: D0 = {d0}");
    println!("     P  = {}\n     N  = {}", z.positive, z.negative);
    assert!(z.satisfies_conditions(&d0));
}
