//! Orbifold arithmetic of multiple fibers and Galois covers of the base.

use std::fmt;

use num::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::arith::{qi, Rational};
use crate::kodaira::{self, FiberConfiguration};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrbifoldError {
    #[error("group order must be at least 1")]
    InvalidOrder,
    #[error("stabilizer order {0} must be at least 2")]
    InvalidStabilizer(u32),
    #[error("stabilizer order {stab} does not divide the group order {order}")]
    StabilizerNotDividing { stab: u32, order: u32 },
    #[error("{action} stabilizer must have order {expected}, got {got}")]
    ActionOrder { action: EAction, expected: &'static str, got: u32 },
    #[error("Hurwitz formula inconsistent: 2g(C) - 2 = {rhs}")]
    Inconsistent { rhs: i64 },
}

/// How a point stabilizer acts on the elliptic factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum EAction {
    Translation,
    /// `z ↦ -z`
    Involution,
    /// `z ↦ i·z` on the square lattice
    Order4,
    /// `z ↦ ±ζ·z` on the hexagonal lattice
    Order6,
}

impl fmt::Display for EAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            EAction::Translation => "translation",
            EAction::Involution => "involution",
            EAction::Order4 => "order4",
            EAction::Order6 => "order6",
        };
        f.write_str(s)
    }
}

/// Branch point of `C → C/G = B` with its stabilizer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BranchPoint {
    pub stab_order: u32,
    pub action: EAction,
}

impl BranchPoint {
    pub fn new(stab_order: u32, action: EAction) -> Result<Self, OrbifoldError> {
        if stab_order < 2 {
            return Err(OrbifoldError::InvalidStabilizer(stab_order));
        }
        let bad = |expected| OrbifoldError::ActionOrder { action, expected, got: stab_order };
        match action {
            EAction::Involution if stab_order != 2 => return Err(bad("2")),
            EAction::Order4 if stab_order != 4 => return Err(bad("4")),
            EAction::Order6 if stab_order != 3 && stab_order != 6 => return Err(bad("3 or 6")),
            _ => {}
        }
        Ok(Self { stab_order, action })
    }
}

/// Galois data of a diagonal quotient `(C × E)/G` over `B = C/G`.
///
/// `curve_genus` and `deg_rt` are derived by [`hurwitz_genus`] at
/// construction and are always consistent with the branch data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupActionData {
    group_order: u32,
    base_genus: u32,
    branch: Vec<BranchPoint>,
    curve_genus: u32,
    deg_rt: u64,
}

impl GroupActionData {
    pub fn new(group_order: u32, base_genus: u32, branch: Vec<BranchPoint>) -> Result<Self, OrbifoldError> {
        let mut a = Self { group_order, base_genus, branch, curve_genus: 0, deg_rt: 0 };
        let (g, deg_rt) = hurwitz(&a)?;
        a.curve_genus = g;
        a.deg_rt = deg_rt;
        Ok(a)
    }

    pub fn group_order(&self) -> u32 {
        self.group_order
    }

    pub fn base_genus(&self) -> u32 {
        self.base_genus
    }

    pub fn branch(&self) -> &[BranchPoint] {
        &self.branch
    }

    pub fn curve_genus(&self) -> u32 {
        self.curve_genus
    }

    /// Degree of the ramification divisor over translation branch points.
    pub fn deg_rt(&self) -> u64 {
        self.deg_rt
    }
}

fn hurwitz(a: &GroupActionData) -> Result<(u32, u64), OrbifoldError> {
    let d = a.group_order;
    if d == 0 {
        return Err(OrbifoldError::InvalidOrder);
    }
    let d64 = i64::from(d);
    let mut rhs = d64 * (2 * i64::from(a.base_genus) - 2);
    let mut deg_rt = 0u64;
    for b in &a.branch {
        if b.stab_order < 2 {
            return Err(OrbifoldError::InvalidStabilizer(b.stab_order));
        }
        if !d.is_multiple_of(b.stab_order) {
            return Err(OrbifoldError::StabilizerNotDividing { stab: b.stab_order, order: d });
        }
        // the orbit has d/m points, each ramified with index m
        let contribution = d64 / i64::from(b.stab_order) * (i64::from(b.stab_order) - 1);
        rhs += contribution;
        if b.action == EAction::Translation {
            deg_rt += contribution as u64;
        }
    }
    if rhs % 2 != 0 || rhs < -2 {
        return Err(OrbifoldError::Inconsistent { rhs });
    }
    Ok((((rhs + 2) / 2) as u32, deg_rt))
}

/// Genus of `C` from `2g(C) - 2 = d(2g(B) - 2) + Σ d(1 - 1/m)`.
pub fn hurwitz_genus(a: &GroupActionData) -> Result<u32, OrbifoldError> {
    hurwitz(a).map(|(g, _)| g)
}

/// `#Z` together with the comparison against `2g(C) - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InvolutionCount {
    pub count: i64,
    pub meets_bound: bool,
}

/// `#Z = 2g(C) - 2 + 2d - deg R_t` from its three inputs.
pub fn involution_count_from(group_order: u32, curve_genus: u32, deg_rt: u64) -> InvolutionCount {
    let g = i64::from(curve_genus);
    let count = 2 * g - 2 + 2 * i64::from(group_order) - deg_rt as i64;
    InvolutionCount { count, meets_bound: count >= 2 * g - 1 }
}

/// Number of points of `C` whose stabilizer acts on `E` as `z ↦ -z`.
///
/// The closed form assumes a rational base; for such data it agrees with
/// counting the involution orbits directly.
pub fn involution_count(a: &GroupActionData) -> InvolutionCount {
    involution_count_from(a.group_order, a.curve_genus, a.deg_rt)
}

/// `λ` and whether `f*Ω_B(D)` is pseudoeffective, i.e. `2g(B) - 2 + λ ≥ 0`.
pub fn lambda_and_base_twist(c: &FiberConfiguration) -> (Rational, bool) {
    let lambda = kodaira::lambda(c);
    let degree = qi(2 * i64::from(c.base_genus) - 2) + &lambda;
    (lambda, !degree.is_negative())
}

/// Sufficient criterion for `q̃ > 0`; never answers no.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum QTilde {
    Yes,
    Unknown,
}

pub fn qtilde_criterion(c: &FiberConfiguration) -> QTilde {
    let (lambda, _) = lambda_and_base_twist(c);
    if c.base_genus >= 1 || lambda >= qi(2) || c.euler().is_zero() {
        QTilde::Yes
    } else {
        QTilde::Unknown
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q;
    use crate::kodaira::{FiberKind, FiberType};

    fn with_mults(g: u32, ms: &[u32], extra: Vec<FiberType>) -> FiberConfiguration {
        let mut fibers: Vec<FiberType> = ms.iter().map(|&m| FiberType::multiple(m).unwrap()).collect();
        fibers.extend(extra);
        FiberConfiguration::new(g, fibers)
    }

    fn inv(n: usize) -> Vec<BranchPoint> {
        vec![BranchPoint::new(2, EAction::Involution).unwrap(); n]
    }

    #[test]
    fn base_twist_examples() {
        assert_eq!(lambda_and_base_twist(&with_mults(0, &[2, 2, 2, 2], vec![])), (qi(2), true));
        assert_eq!(lambda_and_base_twist(&with_mults(0, &[2, 2, 2], vec![])), (q(3, 2), false));
        assert_eq!(lambda_and_base_twist(&with_mults(1, &[], vec![])), (qi(0), true));
    }

    #[test]
    fn qtilde_examples() {
        let i1 = vec![FiberType::simple(FiberKind::I(1)); 12];
        assert_eq!(qtilde_criterion(&with_mults(0, &[2, 3, 6], i1.clone())), QTilde::Yes);
        assert_eq!(qtilde_criterion(&with_mults(2, &[], i1.clone())), QTilde::Yes);
        assert_eq!(qtilde_criterion(&with_mults(0, &[2, 2], i1)), QTilde::Unknown);
        // almost smooth: e = 0 forces χ = 0
        assert_eq!(qtilde_criterion(&with_mults(0, &[2, 2], vec![])), QTilde::Yes);
    }

    #[test]
    fn hurwitz_examples() {
        let a = GroupActionData::new(2, 0, inv(6)).unwrap();
        assert_eq!(a.curve_genus(), 2);
        let a = GroupActionData::new(3, 1, vec![]).unwrap();
        assert_eq!(a.curve_genus(), 1);
        assert_eq!(GroupActionData::new(2, 0, inv(5)), Err(OrbifoldError::Inconsistent { rhs: 1 }));
        assert!(matches!(GroupActionData::new(2, 0, vec![]), Err(OrbifoldError::Inconsistent { rhs: -4 })));
    }

    #[test]
    fn branch_validation() {
        assert!(BranchPoint::new(3, EAction::Involution).is_err());
        assert!(BranchPoint::new(2, EAction::Order4).is_err());
        assert!(BranchPoint::new(3, EAction::Order6).is_ok());
        assert!(BranchPoint::new(1, EAction::Translation).is_err());
        let t3 = BranchPoint::new(3, EAction::Translation).unwrap();
        assert_eq!(
            GroupActionData::new(4, 0, vec![t3]),
            Err(OrbifoldError::StabilizerNotDividing { stab: 3, order: 4 })
        );
    }

    #[test]
    fn involution_count_examples() {
        assert_eq!(involution_count_from(2, 2, 0).count, 6);
        assert_eq!(involution_count_from(2, 1, 0).count, 4);
        assert_eq!(involution_count_from(4, 2, 2).count, 8);
        let a = GroupActionData::new(2, 0, inv(6)).unwrap();
        let z = involution_count(&a);
        assert_eq!(z.count, 6);
        assert!(z.meets_bound);
    }

    #[test]
    fn translation_ramification() {
        // d = 6, four involution orbits of length 3 and one order-3
        // translation orbit of length 2: 2g - 2 = -12 + 4·3 + 4 = 4
        let mut branch = inv(4);
        branch.push(BranchPoint::new(3, EAction::Translation).unwrap());
        let a = GroupActionData::new(6, 0, branch).unwrap();
        assert_eq!(a.curve_genus(), 3);
        assert_eq!(a.deg_rt(), 4);
        // direct count: 4 orbits of 3 points each
        assert_eq!(involution_count(&a).count, 12);
    }
}
