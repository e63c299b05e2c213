//! Invariant twisted symmetric differentials on `C × E` that descend
//! holomorphically to the resolved quotient by `(i_C, -1)`.

use std::collections::BTreeMap;

use num::Zero;
use serde::Serialize;

use super::curve::{curve_basis, elliptic_orders, HyperellipticModel, TwistedBasisElement};
use super::local::{push_monomial_chart_a, ChartExponents};
use super::SymdiffError;
use crate::arith::Rational;
use crate::linalg::EchelonBasis;

/// Largest symmetric degree accepted by default; only a runtime guard.
pub const DEFAULT_DESK_CAP: u32 = 10;

/// A global basis element `x^a y^b (dx/y)^l · s_{j,k} · dz₂^{i-l}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ProductBasisElement {
    pub curve: TwistedBasisElement,
    pub k: u32,
}

/// Invariant product basis of `H⁰(C × E, SⁱΩ ⊗ O(jA))`.
///
/// Under `(x, y, z₂) ↦ (x, -y, -z₂)` the element picks up `(-1)^{b + l}` from
/// the curve factor, `(-1)^k` from `s_{j,k}` and `(-1)^{i-l}` from `dz₂^{i-l}`.
pub fn invariant_basis(g: u32, i: u32, j: u32) -> Vec<ProductBasisElement> {
    let mut out = Vec::new();
    for l in 0..=i {
        for curve in curve_basis(g, l, j) {
            for k in elliptic_orders(j) {
                if (curve.b + k + i).is_multiple_of(2) {
                    out.push(ProductBasisElement { curve, k });
                }
            }
        }
    }
    out
}

/// Pole coefficients, over both charts, of the localization of `e` at the
/// fixed point over a Weierstrass point, keyed by chart and exponents.
fn local_poles(e: &ProductBasisElement, series: &[Rational], i: u32) -> BTreeMap<(u8, ChartExponents), Rational> {
    let TwistedBasisElement { b, l, .. } = e.curve;
    let mut chart_a = BTreeMap::new();
    let mut chart_b = BTreeMap::new();
    for (m, c) in series.iter().enumerate() {
        let alpha = 2 * m as u32 + b;
        // graded parts of order ≥ i never have poles
        if alpha + e.k >= i {
            break;
        }
        if c.is_zero() {
            continue;
        }
        push_monomial_chart_a(&mut chart_a, (alpha, e.k, l), i, c);
        push_monomial_chart_a(&mut chart_b, (e.k, alpha, i - l), i, c);
    }
    let mut out = BTreeMap::new();
    for (tag, form) in [(0u8, chart_a), (1u8, chart_b)] {
        for (key, c) in form {
            if key.0 < 0 {
                out.insert((tag, key), c);
            }
        }
    }
    out
}

/// Dimension of the invariant elements of `H⁰(C × E, SⁱΩ ⊗ O(jA))` that pass
/// [`super::blowup_holomorphy`] at every fixed point `(w, 0)`, `w` a
/// Weierstrass point, with `A = p_C*(∞₊ + ∞₋) + p_E*0`.
pub fn invariant_dim(model: &HyperellipticModel, i: u32, j: u32) -> Result<usize, SymdiffError> {
    invariant_dim_capped(model, i, j, DEFAULT_DESK_CAP)
}

pub fn invariant_dim_capped(model: &HyperellipticModel, i: u32, j: u32, cap: u32) -> Result<usize, SymdiffError> {
    if i > cap {
        return Err(SymdiffError::CapExceeded { i, cap });
    }
    let basis = invariant_basis(model.genus(), i, j);
    let cols = basis.len();
    let mut conditions = EchelonBasis::new(cols);
    for root in model.roots() {
        let chart = model.local_chart(root, i);
        let mut rows: BTreeMap<(u8, ChartExponents), Vec<Rational>> = BTreeMap::new();
        for (col, e) in basis.iter().enumerate() {
            let series = chart.section_series(e.curve.a, e.curve.l);
            for (key, c) in local_poles(e, &series, i) {
                rows.entry(key).or_insert_with(|| vec![Rational::zero(); cols])[col] = c;
            }
        }
        for row in rows.into_values() {
            conditions.insert(row);
            if conditions.is_full() {
                return Ok(0);
            }
        }
    }
    Ok(cols - conditions.rank())
}

/// Sakai's computation: invariant symmetric differentials without twist on
/// the standard genus-`g` model.
pub fn sakai_check(g: u32, i: u32) -> Result<usize, SymdiffError> {
    let model = HyperellipticModel::standard(g)?;
    invariant_dim(&model, i, 0)
}

/// Whether the degree count `(i - 2j)(2g - 1) > i(2g - 2)`, `i ≥ 2j`, forces
/// invariant twisted differentials to vanish when at least `2g - 1` fixed
/// points are available.
pub fn guaranteed_vanishing(g: u32, zcount: u32, i: u32, j: u32) -> Result<bool, SymdiffError> {
    let need = (2 * i64::from(g) - 1).max(0);
    if i64::from(zcount) < need {
        return Err(SymdiffError::PreconditionFailed(format!(
            "{zcount} involution points, need at least 2g - 1 = {need}"
        )));
    }
    let (g, i, j) = (i64::from(g), i64::from(i), i64::from(j));
    Ok(i >= 2 * j && (i - 2 * j) * (2 * g - 1) > i * (2 * g - 2))
}
