//! Numerical certificates that `I_Z^k ⊗ (ω_{X/B}(-D))^k` has no sections.
//!
//! `ω_{X/B}(-D)` is numerically `aF - D₀` with `a = χ(O_X)`. A section of the
//! `k`-th twisted power has a vertical divisor `Σ c_i C_i + tF` in that class,
//! with multiplicity at least `k·r` at every point of `Z` whose ideal lies in
//! `m^r`. When no nonnegative rational coefficients satisfy these linear
//! constraints, the space of sections is zero. A feasible point is only a
//! numerical witness, never a section.

mod fm;

use num::Zero;
use serde::Serialize;
use thiserror::Error;

pub use fm::{Constraint, LinearSystem};

use crate::arith::{q, qi, Rational};
use crate::kodaira::{euler_number, fiber_model, FiberConfiguration, FiberKind, FiberModel, FiberType, KodairaError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FeasibilityError {
    #[error(transparent)]
    Kodaira(#[from] KodairaError),
    #[error("power k must be at least 1")]
    ZeroPower,
}

/// Target class `k(aF - Σ D₀,b)` with local multiplicity constraints at the
/// singular points of the listed fibers.
#[derive(Clone, Debug)]
pub struct VerticalSectionProblem {
    pub fibers: Vec<FiberModel>,
    pub a: Rational,
    pub k: u32,
}

impl VerticalSectionProblem {
    pub fn new(fibers: Vec<FiberModel>, a: Rational, k: u32) -> Result<Self, FeasibilityError> {
        if k == 0 {
            return Err(FeasibilityError::ZeroPower);
        }
        Ok(Self { fibers, a, k })
    }

    /// All non-multiple fibers of `c`, with `a = χ`. Multiple fibers `mI₀`
    /// carry no singular points and only add fiber classes, so they are
    /// absorbed into the general-fiber count.
    pub fn from_configuration(c: &FiberConfiguration, k: u32) -> Result<Self, FeasibilityError> {
        let e = c.euler();
        if !e.is_multiple_of(12) {
            return Err(KodairaError::NonIntegralEuler { e }.into());
        }
        let fibers = c.fibers.iter().filter(|f| !f.is_multiple()).map(|&f| fiber_model(f)).collect();
        Self::new(fibers, qi((e / 12) as i64), k)
    }

    /// One fiber of the given kind with its own share `a = e/12`.
    pub fn single_fiber(kind: FiberKind, k: u32) -> Result<Self, FeasibilityError> {
        let t = FiberType::simple(kind);
        Self::new(vec![fiber_model(t)], q(euler_number(t) as i64, 12), k)
    }

    fn layout(&self) -> Vec<usize> {
        // start index of each fiber block: components, then s_b
        let mut starts = Vec::with_capacity(self.fibers.len());
        let mut next = 0;
        for f in &self.fibers {
            starts.push(next);
            next += f.mult_vector.len() + 1;
        }
        starts
    }

    fn nvars(&self) -> usize {
        self.fibers.iter().map(|f| f.mult_vector.len() + 1).sum::<usize>() + 1
    }

    /// The linear system over `(c_{b,·}, s_b)_b, t`.
    pub fn system(&self) -> LinearSystem {
        let n = self.nvars();
        let k = qi(i64::from(self.k));
        let unit = |idx: usize, c: Rational| {
            let mut v = vec![Rational::zero(); n];
            v[idx] = c;
            v
        };
        let mut sys = LinearSystem::new(n);
        let mut total = vec![Rational::zero(); n];
        for (f, &start) in self.fibers.iter().zip(&self.layout()) {
            let r = f.mult_vector.len();
            let s_idx = start + r;
            let d0 = f.d0_divisor();
            // c_i = s·μ_i - k·d0_i
            for i in 0..r {
                let mut row = unit(start + i, qi(1));
                row[s_idx] = -qi(f.mult_vector[i].into());
                sys.eq(row, -(&k * &d0.coeffs()[i]));
                sys.ge(unit(start + i, qi(1)), Rational::zero());
            }
            for z in &f.znodes {
                let mut row = vec![Rational::zero(); n];
                if z.components.len() == 1 {
                    row[start + z.components[0]] = qi(2);
                } else {
                    for &c in &z.components {
                        row[start + c] += qi(1);
                    }
                }
                sys.ge(row, &k * qi(z.local.ideal_order().into()));
            }
            total[s_idx] = qi(1);
        }
        total[n - 1] = qi(1);
        sys.eq(total, &k * &self.a);
        sys.ge(unit(n - 1, qi(1)), Rational::zero());
        sys
    }
}

/// A numerical solution: component coefficients per fiber, the fiber-class
/// multiple `s_b` of each block and the number `t` of general fibers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    #[serde(serialize_with = "ser_nested")]
    pub components: Vec<Vec<Rational>>,
    #[serde(with = "crate::arith::serde_rational_vec")]
    pub fiber_multiples: Vec<Rational>,
    #[serde(with = "crate::arith::serde_rational")]
    pub general_fibers: Rational,
}

fn ser_nested<S: serde::Serializer>(v: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for row in v {
        let strs: Vec<String> = row.iter().map(crate::arith::fmt_rational).collect();
        seq.serialize_element(&strs)?;
    }
    seq.end()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum FeasibilityStatus {
    /// Numerically possible; not a proof that a section exists.
    Feasible { witness: Witness },
    /// No vertical divisor meets the constraints: there are no sections.
    Infeasible,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FeasibilityVerdict {
    pub k: u32,
    #[serde(flatten)]
    pub status: FeasibilityStatus,
}

impl FeasibilityVerdict {
    pub fn is_infeasible(&self) -> bool {
        self.status == FeasibilityStatus::Infeasible
    }
}

pub fn vertical_feasibility(p: &VerticalSectionProblem) -> FeasibilityVerdict {
    let status = match p.system().solve() {
        None => FeasibilityStatus::Infeasible,
        Some(x) => {
            let mut components = Vec::new();
            let mut fiber_multiples = Vec::new();
            for (f, &start) in p.fibers.iter().zip(&p.layout()) {
                let r = f.mult_vector.len();
                components.push(x[start..start + r].to_vec());
                fiber_multiples.push(x[start + r].clone());
            }
            let general_fibers = x.last().cloned().unwrap_or_else(Rational::zero);
            FeasibilityStatus::Feasible { witness: Witness { components, fiber_multiples, general_fibers } }
        }
    };
    FeasibilityVerdict { k: p.k, status }
}

/// Re-checks a witness term by term against the class and every constraint,
/// independently of the linear system.
pub fn check_witness(p: &VerticalSectionProblem, w: &Witness) -> bool {
    if w.components.len() != p.fibers.len() || w.fiber_multiples.len() != p.fibers.len() {
        return false;
    }
    let k = qi(i64::from(p.k));
    if w.general_fibers < Rational::zero() {
        return false;
    }
    let mut total = w.general_fibers.clone();
    for ((f, c), s) in p.fibers.iter().zip(&w.components).zip(&w.fiber_multiples) {
        if c.len() != f.mult_vector.len() || c.iter().any(|x| *x < Rational::zero()) {
            return false;
        }
        // Σ c_i C_i + k·D₀ is s times the fiber
        let d0 = f.d0_divisor();
        for ((ci, &mu), d) in c.iter().zip(&f.mult_vector).zip(d0.coeffs()) {
            if ci + &k * d != s * qi(mu.into()) {
                return false;
            }
        }
        for z in &f.znodes {
            let mult: Rational = if z.components.len() == 1 {
                qi(2) * &c[z.components[0]]
            } else {
                z.components.iter().map(|&i| c[i].clone()).sum()
            };
            if mult < &k * qi(z.local.ideal_order().into()) {
                return false;
            }
        }
        total += s;
    }
    total == &k * &p.a
}

/// Fiber kinds that occur as singular fibers of standard isotrivial
/// fibrations besides multiple smooth fibers.
pub const ISOTRIVIAL_KINDS: [FiberKind; 4] = [FiberKind::II, FiberKind::III, FiberKind::IV, FiberKind::IStar(0)];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseRow {
    #[serde(serialize_with = "ser_display")]
    pub kind: FiberKind,
    pub verdict: FeasibilityVerdict,
}

fn ser_display<S: serde::Serializer>(k: &FiberKind, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(k)
}

/// Single-fiber problems for each of [`ISOTRIVIAL_KINDS`] and `k = 1..=kmax`.
pub fn fiber_case_table(kmax: u32) -> Vec<CaseRow> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = ISOTRIVIAL_KINDS
            .iter()
            .map(|&kind| {
                scope.spawn(move || {
                    (1..=kmax)
                        .map(|k| {
                            let p = VerticalSectionProblem::single_fiber(kind, k).expect("k >= 1");
                            CaseRow { kind, verdict: vertical_feasibility(&p) }
                        })
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("case worker panicked")).collect()
    })
}
