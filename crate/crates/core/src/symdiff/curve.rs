//! The hyperelliptic factor `y² = h(x)` and the elliptic local sections.

use num::{One, Zero};
use serde::Serialize;

use super::SymdiffError;
use crate::arith::{qi, Rational};

/// Dense univariate polynomial, coefficients in increasing degree.
pub(crate) type Poly = Vec<Rational>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub(crate) fn poly_mul(a: &[Rational], b: &[Rational]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub(crate) fn poly_eval(p: &[Rational], x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

fn derivative(p: &[Rational]) -> Poly {
    trim(p.iter().enumerate().skip(1).map(|(k, c)| c * qi(k as i64)).collect())
}

fn poly_rem(a: &[Rational], b: &[Rational]) -> Poly {
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let lead = b[db].clone();
    while r.len() > db && !r.is_empty() {
        let shift = r.len() - 1 - db;
        let f = r.last().expect("nonempty") / &lead;
        for (k, c) in b.iter().enumerate() {
            r[shift + k] -= &f * c;
        }
        r = trim(r);
    }
    r
}

fn poly_gcd_degree(a: &[Rational], b: &[Rational]) -> usize {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = poly_rem(&a, &b);
        a = b;
        b = r;
    }
    a.len().saturating_sub(1)
}

/// Taylor coefficients of `p(r + t)` in `t`.
fn shift(p: &[Rational], r: &Rational) -> Poly {
    // repeated synthetic division
    let mut coeffs = p.to_vec();
    let n = coeffs.len();
    for i in 0..n {
        for k in (i..n - 1).rev() {
            let add = &coeffs[k + 1] * r;
            coeffs[k] += add;
        }
    }
    coeffs
}

/// Hyperelliptic curve `y² = h(x)` with `deg h = 2g + 2` and all roots
/// rational and marked; the twist divisor is `∞₊ + ∞₋`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperellipticModel {
    genus: u32,
    h: Poly,
    roots: Vec<Rational>,
}

impl HyperellipticModel {
    /// `h = Π (x - r)` over the given roots.
    pub fn from_roots(roots: Vec<Rational>) -> Result<Self, SymdiffError> {
        let h = roots.iter().fold(vec![Rational::one()], |acc, r| poly_mul(&acc, &[-r.clone(), Rational::one()]));
        Self::new(h, roots)
    }

    /// `y² = x(x-1)⋯(x-2g-1)`.
    pub fn standard(genus: u32) -> Result<Self, SymdiffError> {
        Self::from_roots((0..2 * i64::from(genus) + 2).map(qi).collect())
    }

    /// Checks that `h` is squarefree of even degree `2g + 2 ≥ 6` and that the
    /// marked roots are exactly its roots.
    pub fn new(h: Vec<Rational>, roots: Vec<Rational>) -> Result<Self, SymdiffError> {
        let h = trim(h);
        let deg = h.len().saturating_sub(1);
        if deg < 6 || !deg.is_multiple_of(2) {
            return Err(SymdiffError::BadDegree(deg));
        }
        if poly_gcd_degree(&h, &derivative(&h)) != 0 {
            return Err(SymdiffError::NotSquarefree);
        }
        let distinct = roots.iter().enumerate().all(|(i, r)| !roots[..i].contains(r));
        if roots.len() != deg || !distinct || roots.iter().any(|r| !poly_eval(&h, r).is_zero()) {
            return Err(SymdiffError::RootMismatch);
        }
        Ok(Self { genus: (deg / 2 - 1) as u32, h, roots })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn h(&self) -> &[Rational] {
        &self.h
    }

    /// Weierstrass points `(r, 0)`; these are the fixed points of `y ↦ -y`.
    pub fn roots(&self) -> &[Rational] {
        &self.roots
    }

    /// Local data at the Weierstrass point over `root`, in the coordinate
    /// `z₁ = y`, for expansions up to (excluding) `z₁`-degree `prec`.
    pub(crate) fn local_chart(&self, root: &Rational, prec: u32) -> LocalCurveChart {
        // x = r + φ(u), u = z₁² = y²; φ inverts t ↦ h(r + t)
        let len = (prec as usize).div_ceil(2).max(1);
        let c = shift(&self.h, root);
        debug_assert!(c[0].is_zero());
        let c1_inv = c[1].recip();
        let mut phi = vec![Rational::zero(); len];
        // each pass fixes one more coefficient of φ
        for _ in 0..len {
            let mut next = vec![Rational::zero(); len];
            if len > 1 {
                next[1] = Rational::one();
            }
            let mut power = phi.clone();
            for cm in c.iter().skip(2) {
                power = truncated_mul(&power, &phi, len);
                for (n, p) in next.iter_mut().zip(&power) {
                    *n -= cm * p;
                }
            }
            phi = next.into_iter().map(|x| x * &c1_inv).collect();
        }
        let mut x_series = phi.clone();
        x_series[0] += root;
        // dx/y = 2φ'(u) dz₁
        let mut dxy = vec![Rational::zero(); len];
        for m in 0..len {
            if m + 1 < len {
                dxy[m] = &phi[m + 1] * qi(2 * (m as i64 + 1));
            }
        }
        // the coefficient of u^{len-1} in φ' needs φ up to degree len
        if len >= 1 {
            dxy[len - 1] = extended_phi_coeff(&c, &phi, len) * qi(2 * len as i64);
        }
        LocalCurveChart { len, x_series, dxy }
    }
}

/// Coefficient of `u^len` in `φ`, from one further fixed-point pass.
fn extended_phi_coeff(c: &[Rational], phi: &[Rational], len: usize) -> Rational {
    let mut ext = phi.to_vec();
    ext.push(Rational::zero());
    let n = len + 1;
    let mut next = vec![Rational::zero(); n];
    if n > 1 {
        next[1] = Rational::one();
    }
    let mut power = ext.clone();
    for cm in c.iter().skip(2) {
        power = truncated_mul(&power, &ext, n);
        for (x, p) in next.iter_mut().zip(&power) {
            *x -= cm * p;
        }
    }
    &next[len] / &c[1]
}

pub(crate) fn truncated_mul(a: &[Rational], b: &[Rational], len: usize) -> Poly {
    let mut out = vec![Rational::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// `x` and `dx/y` near a Weierstrass point as series in `u = z₁²`.
#[derive(Clone, Debug)]
pub(crate) struct LocalCurveChart {
    pub len: usize,
    pub x_series: Poly,
    pub dxy: Poly,
}

impl LocalCurveChart {
    /// `x^a (dx/y)^l` as a series in `u`, truncated to `len` terms.
    pub fn section_series(&self, a: u32, l: u32) -> Poly {
        let mut out = vec![Rational::zero(); self.len];
        out[0] = Rational::one();
        for _ in 0..a {
            out = truncated_mul(&out, &self.x_series, self.len);
        }
        for _ in 0..l {
            out = truncated_mul(&out, &self.dxy, self.len);
        }
        out
    }
}

/// The section `x^a y^b (dx/y)^l` of `ω_C^l(j(∞₊ + ∞₋))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TwistedBasisElement {
    pub a: u32,
    pub b: u32,
    pub l: u32,
    pub j: u32,
}

/// Basis of `H⁰(C, ω_C^l(j(∞₊ + ∞₋)))`: all `x^a y^b (dx/y)^l` with
/// `b ∈ {0, 1}` and `a + b(g + 1) ≤ l(g - 1) + j`.
pub fn curve_basis(g: u32, l: u32, j: u32) -> Vec<TwistedBasisElement> {
    let budget = i64::from(l) * (i64::from(g) - 1) + i64::from(j);
    let mut out = Vec::new();
    for b in 0..2u32 {
        let room = budget - i64::from(b) * (i64::from(g) + 1);
        for a in 0..=room.max(-1) {
            out.push(TwistedBasisElement { a: a as u32, b, l, j });
        }
    }
    out
}

/// Vanishing orders at the marked point of a basis of `H⁰(E, O(jA_E))`:
/// `{0, …, j-2} ∪ {j}`. For `j = 0` this is the constant section, `{0}`.
pub fn elliptic_orders(j: u32) -> Vec<u32> {
    if j == 0 {
        return vec![0];
    }
    let mut v: Vec<u32> = (0..j.saturating_sub(1)).collect();
    v.push(j);
    v
}

/// The local model `z₂^k` of the section `s_{j,k}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct EllipticLocalSection {
    pub j: u32,
    pub k: u32,
}

impl EllipticLocalSection {
    pub fn basis(j: u32) -> Vec<Self> {
        elliptic_orders(j).into_iter().map(|k| Self { j, k }).collect()
    }

    /// Sign under `z₂ ↦ -z₂`.
    pub fn parity(&self) -> u32 {
        self.k % 2
    }
}
