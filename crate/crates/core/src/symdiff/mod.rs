//! Twisted symmetric differentials on `C × E` for hyperelliptic `C`, the
//! local obstruction at the `A₁` points of `(C × E)/±1`, and the tensor
//! powers of the odd-polynomial module.
//!
//! Local conventions: near a fixed point the involution is
//! `(z₁, z₂) ↦ (-z₁, -z₂)`, with `z₁ = y` on `C` and `s_{j,k} = z₂^k` on `E`;
//! `dx/y ↦ -dx/y` and `z₂^k ↦ (-1)^k z₂^k`.

mod curve;
mod global;
mod kummer;
mod local;

use thiserror::Error;

pub use curve::{curve_basis, elliptic_orders, EllipticLocalSection, HyperellipticModel, TwistedBasisElement};
pub use global::{
    guaranteed_vanishing, invariant_basis, invariant_dim, invariant_dim_capped, sakai_check, ProductBasisElement,
    DEFAULT_DESK_CAP,
};
pub use kummer::{candidate_image, hilbert_function, kummer_tensor_power, tensor_power_image, KummerTag, Residual};
pub use local::{
    blowup_holomorphy, m_divide, obstruction_profile, pullback, Chart, ChartExponents, ChartForm, Exponents,
    LocalDifferential, MForm,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymdiffError {
    #[error("h must have even degree 2g + 2 with g >= 2, got degree {0}")]
    BadDegree(usize),
    #[error("h is not squarefree")]
    NotSquarefree,
    #[error("marked roots must be exactly the distinct roots of h")]
    RootMismatch,
    #[error("differential is not invariant under (z1, z2) -> (-z1, -z2)")]
    NotInvariant,
    #[error("symmetric degree {i} exceeds the desk-scale cap {cap}")]
    CapExceeded { i: u32, cap: u32 },
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
}
