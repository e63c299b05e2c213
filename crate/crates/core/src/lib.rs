//! Exact positivity decisions for the cotangent bundle of elliptic surfaces.
//!
//! Given the singular-fiber data of an elliptic fibration `f: X -> B`, this
//! crate decides whether `Ω_X` is pseudoeffective, whether some quasi-étale
//! cover of `X` is irregular, and whether `X` carries nonzero symmetric
//! differentials, and it checks the vanishing statements behind those answers
//! by exact computation at desk scale.
//!
//! The modules mirror the layers of the computation:
//!
//! - [`lattice`]: intersection forms of curve configurations and the Zariski
//!   decomposition of effective divisors supported on them.
//! - [`kodaira`]: the catalog of Kodaira fibers and the numerical invariants
//!   `e`, `χ`, `λ`, `κ` of a fiber configuration.
//! - [`orbifold`]: multiple-fiber arithmetic, Hurwitz bookkeeping for Galois
//!   covers of the base, and the involution locus count.
//! - [`isotrivial`]: diagonal group actions on `C × E` and the product-quotient
//!   family.
//! - [`symdiff`]: twisted symmetric differentials on hyperelliptic × elliptic
//!   products, the local obstruction at `A₁` points, and the Kummer tensor
//!   powers.
//! - [`feasibility`]: exact numerical certificates that `I_Z^k ⊗ (ω_{X/B}(-D))^k`
//!   has no sections.
//! - [`verdict`]: the decision tree producing a [`verdict::VerdictReport`].
//! - [`io_cli`]: surface documents, report emission and the command line.
//!
//! All arithmetic is exact; see [`Rational`].

pub mod arith;
pub mod feasibility;
pub mod io_cli;
pub mod isotrivial;
pub mod kodaira;
pub mod lattice;
pub mod linalg;
pub mod orbifold;
pub mod symdiff;
pub mod verdict;

pub use arith::Rational;
pub use kodaira::{FiberConfiguration, FiberKind, FiberType, NumericalInvariants};
pub use lattice::{CurveConfig, QDivisor, ZariskiPair};
pub use verdict::{evaluate, Status, SurfaceDescription, VerdictReport};
