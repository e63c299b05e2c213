//! The Kodaira catalog: Euler numbers, multiplicities and singular points of
//! the reduced fibers, then the invariants of a few configurations.

use ellsurf::kodaira::{catalog, euler_number, fiber_model, numerical_invariants};
use ellsurf::{FiberConfiguration, FiberKind, FiberType};

fn main() {
    println!("{:<6} {:>3} {:>5}  {:<28} singular points", "fiber", "e", "comps", "multiplicities");
    for t in catalog(3) {
        let m = fiber_model(t);
        println!(
            "{:<6} {:>3} {:>5}  {:<28} {}",
            t.to_string(),
            euler_number(t),
            m.mult_vector.len(),
            format!("{:?}", m.mult_vector),
            m.z_scheme_length()
        );
    }

    println!();
    let configs = [
        ("rational elliptic, 12 I1", FiberConfiguration::new(0, vec![FiberType::simple(FiberKind::I(1)); 12])),
        ("K3, 24 I1", FiberConfiguration::new(0, vec![FiberType::simple(FiberKind::I(1)); 24])),
        (
            "II* + II over P1",
            FiberConfiguration::new(0, vec![FiberType::simple(FiberKind::IIStar), FiberType::simple(FiberKind::II)]),
        ),
        ("genus 1 base, 12 I1 + 3I0", {
            let mut f = vec![FiberType::simple(FiberKind::I(1)); 12];
            f.push(FiberType::multiple(3).unwrap());
            FiberConfiguration::new(1, f)
        }),
    ];
    for (name, c) in configs {
        let inv = numerical_invariants(&c).unwrap();
        println!("{name:<28} e = {:<3} chi = {} lambda = {} kappa = {}", inv.e, inv.chi, inv.lambda, inv.kappa);
    }
}
