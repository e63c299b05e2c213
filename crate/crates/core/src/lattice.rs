//! Intersection theory on finite curve configurations.
//!
//! A [`CurveConfig`] is a list of curves together with their exact intersection
//! matrix; a [`QDivisor`] is a rational combination of those curves. The main
//! entry point is [`zariski_decompose`], which splits an effective divisor into
//! its nef and negative parts.
//!
//! Nefness is always checked against the listed curves only. Every divisor this
//! crate feeds in is vertical (supported on fiber components), and a curve
//! outside the support meets an effective vertical divisor non-negatively, so
//! for those inputs this is the honest notion. For divisors with horizontal
//! components the result is only "nef relative to the configuration".

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num::{BigInt, Signed, Zero};
use thiserror::Error;

use crate::arith::{primitive_integer_vector, Rational};
use crate::linalg;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("intersection matrix is not square or not symmetric")]
    NotSymmetric,
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("duplicate curve label `{0}`")]
    DuplicateLabel(String),
    #[error("divisors live on different curve configurations")]
    MismatchedConfig,
    #[error("expected {expected} coefficients, got {got}")]
    CoefficientCount { expected: usize, got: usize },
    #[error("curve index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("divisor is not effective")]
    NotEffective,
    #[error("candidate negative support {support:?} is not negative definite")]
    NotNegativeDefinite { support: Vec<usize> },
    #[error("solved negative part has a negative coefficient on curve {curve}")]
    NegativeCoefficient { curve: usize },
}

/// Curves and their intersection matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveConfig {
    labels: Vec<String>,
    gram: Vec<Vec<Rational>>,
}

impl CurveConfig {
    pub fn new(labels: Vec<String>, gram: Vec<Vec<Rational>>) -> Result<Self, LatticeError> {
        let r = gram.len();
        if gram.iter().any(|row| row.len() != r) {
            return Err(LatticeError::NotSymmetric);
        }
        for i in 0..r {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(LatticeError::NotSymmetric);
                }
            }
        }
        if labels.len() != r {
            return Err(LatticeError::LabelCount { expected: r, got: labels.len() });
        }
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(LatticeError::DuplicateLabel(l.clone()));
            }
        }
        Ok(Self { labels, gram })
    }

    /// Integer intersection matrix with labels `C0, C1, ...`.
    pub fn from_int_gram(gram: &[Vec<i64>]) -> Result<Self, LatticeError> {
        let labels = (0..gram.len()).map(|i| format!("C{i}")).collect();
        let gram = gram.iter().map(|row| row.iter().map(|&x| Rational::from_integer(x.into())).collect()).collect();
        Self::new(labels, gram)
    }

    /// Block-diagonal union of configurations; labels get `prefix{k}.` added.
    pub fn disjoint_union(parts: &[&CurveConfig], prefix: &str) -> Self {
        let r: usize = parts.iter().map(|p| p.len()).sum();
        let mut gram = vec![vec![Rational::zero(); r]; r];
        let mut labels = Vec::with_capacity(r);
        let mut off = 0;
        for (k, p) in parts.iter().enumerate() {
            for i in 0..p.len() {
                labels.push(format!("{prefix}{k}.{}", p.labels[i]));
                for j in 0..p.len() {
                    gram[off + i][off + j] = p.gram[i][j].clone();
                }
            }
            off += p.len();
        }
        Self { labels, gram }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn gram(&self) -> &[Vec<Rational>] {
        &self.gram
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.gram[i][j]
    }

    fn submatrix(&self, subset: &[usize]) -> Vec<Vec<Rational>> {
        subset.iter().map(|&i| subset.iter().map(|&j| self.gram[i][j].clone()).collect()).collect()
    }
}

/// A rational divisor supported on the curves of a configuration.
#[derive(Clone, Debug)]
pub struct QDivisor {
    config: Arc<CurveConfig>,
    coeffs: Vec<Rational>,
}

impl PartialEq for QDivisor {
    fn eq(&self, other: &Self) -> bool {
        same_config(&self.config, &other.config) && self.coeffs == other.coeffs
    }
}

impl Eq for QDivisor {}

fn same_config(a: &Arc<CurveConfig>, b: &Arc<CurveConfig>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl QDivisor {
    pub fn new(config: Arc<CurveConfig>, coeffs: Vec<Rational>) -> Result<Self, LatticeError> {
        if coeffs.len() != config.len() {
            return Err(LatticeError::CoefficientCount { expected: config.len(), got: coeffs.len() });
        }
        Ok(Self { config, coeffs })
    }

    pub fn from_ints(config: Arc<CurveConfig>, coeffs: &[i64]) -> Result<Self, LatticeError> {
        Self::new(config, coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero(config: Arc<CurveConfig>) -> Self {
        let coeffs = vec![Rational::zero(); config.len()];
        Self { config, coeffs }
    }

    pub fn config(&self) -> &Arc<CurveConfig> {
        &self.config
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_effective(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Indices of curves with nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&i| !self.coeffs[i].is_zero()).collect()
    }

    /// `D · C_i` for the `i`-th listed curve.
    pub fn dot_curve(&self, i: usize) -> Rational {
        self.coeffs.iter().zip(&self.config.gram).map(|(c, row)| c * &row[i]).sum()
    }

    pub fn scaled(&self, t: &Rational) -> Self {
        Self { config: self.config.clone(), coeffs: self.coeffs.iter().map(|c| c * t).collect() }
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, LatticeError> {
        if !same_config(&self.config, &other.config) {
            return Err(LatticeError::MismatchedConfig);
        }
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Self { config: self.config.clone(), coeffs })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, LatticeError> {
        if !same_config(&self.config, &other.config) {
            return Err(LatticeError::MismatchedConfig);
        }
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Self { config: self.config.clone(), coeffs })
    }
}

impl fmt::Display for QDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .zip(self.config.labels())
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, l)| format!("{}·{l}", crate::arith::fmt_rational(c)))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// `D1 · D2 = coeffs(D1)ᵀ · gram · coeffs(D2)`.
pub fn intersection_number(d1: &QDivisor, d2: &QDivisor) -> Result<Rational, LatticeError> {
    if !same_config(&d1.config, &d2.config) {
        return Err(LatticeError::MismatchedConfig);
    }
    let g = &d1.config.gram;
    let mut total = Rational::zero();
    for (i, a) in d1.coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in d2.coeffs.iter().enumerate() {
            if !b.is_zero() && !g[i][j].is_zero() {
                total += a * b * &g[i][j];
            }
        }
    }
    Ok(total)
}

/// Sign classification of an intersection submatrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Definiteness {
    NegativeDefinite,
    /// Negative semidefinite and singular; the kernel basis is given as
    /// primitive integer vectors (indexed like the subset).
    NegativeSemidefinite(Vec<Vec<BigInt>>),
    Other,
}

/// Classifies the Gram submatrix on `subset` by symmetric elimination on its
/// negative. The empty subset is negative definite.
pub fn definiteness(config: &CurveConfig, subset: &[usize]) -> Result<Definiteness, LatticeError> {
    if let Some(&bad) = subset.iter().find(|&&i| i >= config.len()) {
        return Err(LatticeError::IndexOutOfRange(bad));
    }
    let sub = config.submatrix(subset);
    let mut a: Vec<Vec<Rational>> = sub.iter().map(|r| r.iter().map(|x| -x).collect()).collect();
    let mut alive: Vec<usize> = (0..subset.len()).collect();

    // -G is positive semidefinite iff this elimination never meets a negative
    // diagonal entry, or a zero diagonal entry with a nonzero row.
    while let Some(pos) = alive.iter().position(|&p| a[p][p].is_positive()) {
        let p = alive.swap_remove(pos);
        let piv = a[p][p].clone();
        for &r in &alive {
            if a[r][p].is_zero() {
                continue;
            }
            let f = &a[r][p] / &piv;
            for &c in &alive {
                let delta = &f * &a[p][c];
                a[r][c] -= delta;
            }
        }
    }
    for &r in &alive {
        if !a[r][r].is_zero() {
            return Ok(Definiteness::Other);
        }
        if alive.iter().any(|&c| !a[r][c].is_zero()) {
            return Ok(Definiteness::Other);
        }
    }
    if alive.is_empty() {
        return Ok(Definiteness::NegativeDefinite);
    }
    let kernel = linalg::nullspace(&sub, subset.len()).iter().map(|v| primitive_integer_vector(v)).collect();
    Ok(Definiteness::NegativeSemidefinite(kernel))
}

/// `D = P + N` with `P` nef on the listed curves, `N ≥ 0` on a negative
/// definite support, and `P · N_j = 0` for every component of `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZariskiPair {
    pub positive: QDivisor,
    pub negative: QDivisor,
}

impl ZariskiPair {
    /// Checks the defining conditions against `d`: `P + N = D`, `P` nef on
    /// every curve, `N` effective with negative definite support, and
    /// `P · N_j = 0` on that support.
    pub fn satisfies_conditions(&self, d: &QDivisor) -> bool {
        let Ok(sum) = self.positive.checked_add(&self.negative) else {
            return false;
        };
        let support = self.negative.support();
        sum == *d
            && (0..d.config.len()).all(|i| !self.positive.dot_curve(i).is_negative())
            && self.negative.is_effective()
            && definiteness(&d.config, &support).is_ok_and(|x| x == Definiteness::NegativeDefinite)
            && support.iter().all(|&j| self.positive.dot_curve(j).is_zero())
    }
}

/// Zariski decomposition of an effective divisor.
///
/// Starts from the curves `D` meets negatively, solves for the negative part
/// on that support, and enlarges the support by every curve the remainder
/// still meets negatively. The support grows strictly, so there are at most
/// `r` rounds.
pub fn zariski_decompose(d: &QDivisor) -> Result<ZariskiPair, LatticeError> {
    if !d.is_effective() {
        return Err(LatticeError::NotEffective);
    }
    let config = d.config.clone();
    let r = config.len();
    let mut support: Vec<usize> = (0..r).filter(|&i| d.dot_curve(i).is_negative()).collect();
    if support.is_empty() {
        return Ok(ZariskiPair { positive: d.clone(), negative: QDivisor::zero(config) });
    }
    loop {
        if definiteness(&config, &support)? != Definiteness::NegativeDefinite {
            return Err(LatticeError::NotNegativeDefinite { support });
        }
        let sub = config.submatrix(&support);
        let rhs: Vec<Rational> = support.iter().map(|&j| d.dot_curve(j)).collect();
        let sol = linalg::solve(&sub, &rhs).expect("negative definite system is invertible");
        let mut n = vec![Rational::zero(); r];
        for (&j, v) in support.iter().zip(sol) {
            if v.is_negative() {
                return Err(LatticeError::NegativeCoefficient { curve: j });
            }
            n[j] = v;
        }
        let negative = QDivisor { config: config.clone(), coeffs: n };
        let positive = d.checked_sub(&negative)?;
        let violating: Vec<usize> = (0..r).filter(|&i| positive.dot_curve(i).is_negative()).collect();
        if violating.is_empty() {
            return Ok(ZariskiPair { positive, negative });
        }
        support.extend(violating);
        support.sort_unstable();
    }
}

/// The `t ≥ 0` with `P ≡ t·fiber` on the configuration, if any.
///
/// Numerical equivalence to a fiber multiple means `P` is numerically trivial
/// on every listed curve and its coefficient vector is proportional to the
/// fiber's. Pass one fiber at a time.
pub fn nef_part_fiber_multiple(p: &QDivisor, fiber: &QDivisor) -> Option<Rational> {
    if !same_config(&p.config, &fiber.config) {
        return None;
    }
    if (0..p.config.len()).any(|i| !p.dot_curve(i).is_zero()) {
        return None;
    }
    if p.is_zero() {
        return Some(Rational::zero());
    }
    let k = fiber.coeffs.iter().position(|c| !c.is_zero())?;
    let t = &p.coeffs[k] / &fiber.coeffs[k];
    let proportional = p.coeffs.iter().zip(&fiber.coeffs).all(|(a, b)| *a == &t * b);
    (proportional && !t.is_negative()).then_some(t)
}
