//! Exact rational feasibility of `{x : Ax = b, Cx ≥ d}` by Gaussian
//! elimination of the equalities and Fourier–Motzkin elimination of the rest.

use std::collections::BTreeMap;

use num::{Signed, Zero};

use crate::arith::Rational;
use crate::linalg::rref;

/// `coeffs · x  (= | ≥)  rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub rhs: Rational,
}

#[derive(Clone, Debug, Default)]
pub struct LinearSystem {
    pub nvars: usize,
    pub equalities: Vec<Constraint>,
    pub inequalities: Vec<Constraint>,
}

impl LinearSystem {
    pub fn new(nvars: usize) -> Self {
        Self { nvars, ..Self::default() }
    }

    pub fn eq(&mut self, coeffs: Vec<Rational>, rhs: Rational) {
        debug_assert_eq!(coeffs.len(), self.nvars);
        self.equalities.push(Constraint { coeffs, rhs });
    }

    pub fn ge(&mut self, coeffs: Vec<Rational>, rhs: Rational) {
        debug_assert_eq!(coeffs.len(), self.nvars);
        self.inequalities.push(Constraint { coeffs, rhs });
    }

    /// Exact check of every constraint at `x`.
    pub fn satisfied_by(&self, x: &[Rational]) -> bool {
        let dot = |c: &Constraint| c.coeffs.iter().zip(x).map(|(a, b)| a * b).sum::<Rational>();
        x.len() == self.nvars
            && self.equalities.iter().all(|c| dot(c) == c.rhs)
            && self.inequalities.iter().all(|c| dot(c) >= c.rhs)
    }

    /// A feasible point, or `None` when the system has no rational solution.
    /// Deterministic: the same system always yields the same point.
    pub fn solve(&self) -> Option<Vec<Rational>> {
        let n = self.nvars;
        // x = x0 + Σ_f x_f e_f over free variables f after eliminating equalities
        let aug: Vec<Vec<Rational>> =
            self.equalities.iter().map(|c| c.coeffs.iter().cloned().chain([c.rhs.clone()]).collect()).collect();
        let (r, pivots) = rref(&aug);
        if pivots.last() == Some(&n) {
            return None;
        }
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        // x_p = r[row][n] - Σ_f r[row][f] x_f
        let express = |x_free: &[Rational]| -> Vec<Rational> {
            let mut x = vec![Rational::zero(); n];
            for (f, v) in free.iter().zip(x_free) {
                x[*f] = v.clone();
            }
            for (row, &p) in r.iter().zip(&pivots) {
                let mut v = row[n].clone();
                for (k, &f) in free.iter().enumerate() {
                    v -= &row[f] * &x_free[k];
                }
                x[p] = v;
            }
            x
        };
        // substitute into the inequalities over the free variables
        let m = free.len();
        let mut ineqs = Vec::with_capacity(self.inequalities.len());
        for c in &self.inequalities {
            let mut coeffs = vec![Rational::zero(); m];
            let mut rhs = c.rhs.clone();
            for (k, &f) in free.iter().enumerate() {
                coeffs[k] += &c.coeffs[f];
            }
            for (row, &p) in r.iter().zip(&pivots) {
                if c.coeffs[p].is_zero() {
                    continue;
                }
                rhs -= &c.coeffs[p] * &row[n];
                for (k, &f) in free.iter().enumerate() {
                    coeffs[k] -= &c.coeffs[p] * &row[f];
                }
            }
            ineqs.push(Constraint { coeffs, rhs });
        }
        let x_free = fourier_motzkin(m, ineqs)?;
        let x = express(&x_free);
        debug_assert!(self.satisfied_by(&x));
        Some(x)
    }
}

/// Scales so the first nonzero coefficient has absolute value one.
fn normalize(c: Constraint) -> Constraint {
    match c.coeffs.iter().find(|x| !x.is_zero()) {
        Some(lead) => {
            let s = lead.abs().recip();
            Constraint { coeffs: c.coeffs.iter().map(|x| x * &s).collect(), rhs: c.rhs * s }
        }
        None => c,
    }
}

/// Keeps only the strongest right-hand side per coefficient vector.
fn dedupe(cs: Vec<Constraint>) -> Option<Vec<Constraint>> {
    let mut best: BTreeMap<Vec<Rational>, Rational> = BTreeMap::new();
    for c in cs {
        let c = normalize(c);
        if c.coeffs.iter().all(Zero::is_zero) {
            if c.rhs.is_positive() {
                return None;
            }
            continue;
        }
        best.entry(c.coeffs)
            .and_modify(|r| {
                if c.rhs > *r {
                    *r = c.rhs.clone();
                }
            })
            .or_insert(c.rhs);
    }
    Some(best.into_iter().map(|(coeffs, rhs)| Constraint { coeffs, rhs }).collect())
}

/// Solves `{x ∈ Q^m : c·x ≥ d}`; eliminates the last variable first and
/// back-substitutes, taking the largest lower bound, else the smallest upper
/// bound, else zero.
fn fourier_motzkin(m: usize, ineqs: Vec<Constraint>) -> Option<Vec<Rational>> {
    let mut stages = Vec::with_capacity(m + 1);
    let mut cur = dedupe(ineqs)?;
    for v in (0..m).rev() {
        let (mut lower, mut upper, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for c in cur.iter().cloned() {
            if c.coeffs[v].is_positive() {
                lower.push(c);
            } else if c.coeffs[v].is_negative() {
                upper.push(c);
            } else {
                rest.push(c);
            }
        }
        for lo in &lower {
            for up in &upper {
                // lo: a x_v + ... ≥ b (a > 0), up: -c x_v + ... ≥ d (c > 0)
                let a = lo.coeffs[v].clone();
                let c = -up.coeffs[v].clone();
                let coeffs = lo.coeffs.iter().zip(&up.coeffs).map(|(x, y)| x * &c + y * &a).collect();
                rest.push(Constraint { coeffs, rhs: &lo.rhs * &c + &up.rhs * &a });
            }
        }
        stages.push(cur);
        cur = dedupe(rest)?;
    }
    // all variables eliminated and every residual constraint is 0 ≥ d, d ≤ 0
    let mut x = vec![Rational::zero(); m];
    for v in 0..m {
        let stage = &stages[m - 1 - v];
        let mut lo: Option<Rational> = None;
        let mut hi: Option<Rational> = None;
        for c in stage {
            let a = &c.coeffs[v];
            if a.is_zero() {
                continue;
            }
            // constraints at this stage involve only x_0..=x_v
            let rest: Rational = c.coeffs[..v].iter().zip(&x[..v]).map(|(p, q)| p * q).sum();
            let bound = (&c.rhs - rest) / a;
            if a.is_positive() {
                lo = Some(lo.map_or(bound.clone(), |l| if bound > l { bound.clone() } else { l }));
            } else {
                hi = Some(hi.map_or(bound.clone(), |h| if bound < h { bound.clone() } else { h }));
            }
        }
        x[v] = match (lo, hi) {
            (Some(l), Some(h)) if l > h => return None,
            (Some(l), _) => l,
            (None, Some(h)) => h,
            (None, None) => Rational::zero(),
        };
    }
    Some(x)
}
