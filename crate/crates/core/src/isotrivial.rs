//! Isotrivial fibrations as diagonal quotients `(C × E)/G`.

use serde::Serialize;
use thiserror::Error;

use crate::kodaira::{Assumptions, FiberConfiguration, FiberKind, FiberType};
use crate::orbifold::{BranchPoint, EAction, GroupActionData, OrbifoldError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IsotrivialError {
    #[error("genus of the first factor must be at least 1, got {0}")]
    InvalidGenus(u32),
    #[error(transparent)]
    Orbifold(#[from] OrbifoldError),
}

/// Fibers of the quotient and whether the fibration is standard.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ActionClassification {
    pub fibers: Vec<FiberType>,
    pub standard: bool,
    pub notes: Vec<String>,
}

/// Singular fibers of `(C × E)/G → B`, one per branch point.
///
/// Translation stabilizers give multiple fibers `mI0`, involutions give `I0*`.
/// Order 4 and order 6 stabilizers make the fibration non-standard; the fiber
/// recorded for them is the relatively minimal type whose log resolution the
/// quotient produces (`III` for `z ↦ iz`, `IV` for `ζ`, `II` for `-ζ`).
pub fn classify_action(a: &GroupActionData) -> ActionClassification {
    let mut fibers = Vec::with_capacity(a.branch().len());
    let mut notes = Vec::new();
    let mut standard = true;
    for (k, b) in a.branch().iter().enumerate() {
        match b.action {
            EAction::Translation => {
                fibers.push(FiberType::multiple(b.stab_order).expect("stabilizer order >= 2"));
            }
            EAction::Involution => fibers.push(FiberType::simple(FiberKind::IStar(0))),
            EAction::Order4 => {
                standard = false;
                fibers.push(FiberType::simple(FiberKind::III));
                notes.push(format!(
                    "branch point {k}: Z/4 acting by z -> iz gives two singularities of type A_{{1,4}} \
                     and one A_{{1,2}}; the resolved fiber is not relatively minimal (contracts to III)"
                ));
            }
            EAction::Order6 => {
                standard = false;
                let (kind, label) = if b.stab_order == 3 { (FiberKind::IV, "zeta") } else { (FiberKind::II, "-zeta") };
                fibers.push(FiberType::simple(kind));
                notes.push(format!(
                    "branch point {k}: z -> {label}z on the hexagonal curve; the resolved fiber is \
                     a log resolution of type {kind}, not relatively minimal"
                ));
            }
        }
    }
    ActionClassification { fibers, standard, notes }
}

/// The quotient `(E1 × E2)/⟨i × (-1)⟩` for hyperelliptic `E1` of genus `g1`
/// and its Galois data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductQuotient {
    pub config: FiberConfiguration,
    pub action: GroupActionData,
}

pub fn build_product_quotient(g1: u32) -> Result<ProductQuotient, IsotrivialError> {
    if g1 < 1 {
        return Err(IsotrivialError::InvalidGenus(g1));
    }
    let branch = vec![BranchPoint::new(2, EAction::Involution)?; (2 * g1 + 2) as usize];
    let action = GroupActionData::new(2, 0, branch)?;
    let fibers = classify_action(&action).fibers;
    let config = FiberConfiguration {
        base_genus: 0,
        fibers,
        isotrivial: true,
        cm_flag: None,
        assumptions: Assumptions { standard: Some(true), ..Assumptions::default() },
    };
    Ok(ProductQuotient { config, action })
}
