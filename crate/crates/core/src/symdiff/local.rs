//! Symmetric differentials near an `A₁` fixed point and their pullback to the
//! minimal resolution of `C²/±1`.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};
use serde::Serialize;

use super::SymdiffError;
use crate::arith::{fmt_rational, qi, Rational};

/// Exponents `(α, β, l)` of `z₁^α z₂^β dz₁^l dz₂^{i-l}`.
pub type Exponents = (u32, u32, u32);

/// A polynomial symmetric differential `Σ c·z₁^α z₂^β dz₁^l dz₂^{i-l}` of
/// fixed symmetric degree `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LocalDifferential {
    i: u32,
    terms: BTreeMap<Exponents, Rational>,
}

impl LocalDifferential {
    pub fn zero(i: u32) -> Self {
        Self { i, terms: BTreeMap::new() }
    }

    pub fn monomial(c: Rational, alpha: u32, beta: u32, l: u32, i: u32) -> Self {
        let mut w = Self::zero(i);
        w.add_term(alpha, beta, l, c);
        w
    }

    /// Panics if `l > i`.
    pub fn add_term(&mut self, alpha: u32, beta: u32, l: u32, c: Rational) {
        assert!(l <= self.i, "dz₁ exponent {l} exceeds symmetric degree {}", self.i);
        if c.is_zero() {
            return;
        }
        let key = (alpha, beta, l);
        let entry = self.terms.entry(key).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn degree(&self) -> u32 {
        self.i
    }

    pub fn terms(&self) -> &BTreeMap<Exponents, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Invariant under `(z₁, z₂) ↦ (-z₁, -z₂)`: `α + β + i` even per term.
    pub fn is_invariant(&self) -> bool {
        self.terms.keys().all(|&(a, b, _)| (a + b + self.i).is_multiple_of(2))
    }

    /// Decomposition `ω = Σ ω_n` by vanishing order `n = α + β`.
    pub fn graded_parts(&self) -> BTreeMap<u32, LocalDifferential> {
        let mut out: BTreeMap<u32, LocalDifferential> = BTreeMap::new();
        for (&(a, b, l), c) in &self.terms {
            out.entry(a + b).or_insert_with(|| Self::zero(self.i)).add_term(a, b, l, c.clone());
        }
        out
    }

    /// Smallest `n` with `ω_n ≠ 0`.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, b, _)| a + b).min()
    }

    pub fn scaled(&self, s: &Rational) -> Self {
        let mut out = Self::zero(self.i);
        for (&(a, b, l), c) in &self.terms {
            out.add_term(a, b, l, c * s);
        }
        out
    }

    /// Panics on differing symmetric degrees.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.i, other.i, "symmetric degrees differ");
        let mut out = self.clone();
        for (&(a, b, l), c) in &other.terms {
            out.add_term(a, b, l, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scaled(&-Rational::one()))
    }

    /// Product in the symmetric algebra; degrees add.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.i + other.i);
        for (&(a1, b1, l1), c1) in &self.terms {
            for (&(a2, b2, l2), c2) in &other.terms {
                out.add_term(a1 + a2, b1 + b2, l1 + l2, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, t: u32) -> Self {
        let mut out = Self::monomial(Rational::one(), 0, 0, 0, 0);
        for _ in 0..t {
            out = out.mul(self);
        }
        out
    }

    /// Exchange `z₁ ↔ z₂`.
    pub fn swapped(&self) -> Self {
        let mut out = Self::zero(self.i);
        for (&(a, b, l), c) in &self.terms {
            out.add_term(b, a, self.i - l, c.clone());
        }
        out
    }
}

impl fmt::Display for LocalDifferential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(a, b, l), c) in &self.terms {
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let abs = c.abs();
            let mut factors = Vec::new();
            for (name, e) in [("z1", a), ("z2", b), ("dz1", l), ("dz2", self.i - l)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            if factors.is_empty() || !abs.is_one() {
                factors.insert(0, fmt_rational(&abs));
            }
            write!(f, "{}", factors.join("·"))?;
        }
        Ok(())
    }
}

/// The twisted one-form `M = z₁dz₂ - z₂dz₁`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MForm;

impl MForm {
    pub fn as_differential(self) -> LocalDifferential {
        let mut w = LocalDifferential::zero(1);
        w.add_term(1, 0, 0, Rational::one());
        w.add_term(0, 1, 1, -Rational::one());
        w
    }

    pub fn power(self, t: u32) -> LocalDifferential {
        self.as_differential().pow(t)
    }
}

/// The two affine charts of the resolution of `C²/±1`:
/// `A`: `p = z₁², q = z₂/z₁`; `B`: `p = z₂², q = z₁/z₂`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Chart {
    A,
    B,
}

/// Exponents `(s, t, v)` of `p^s q^t dp^{i-v} dq^v`.
pub type ChartExponents = (i64, u32, u32);

/// A symmetric differential in chart coordinates; `p` may carry negative
/// exponents (poles along the exceptional curve).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartForm {
    pub i: u32,
    pub terms: BTreeMap<ChartExponents, Rational>,
}

impl ChartForm {
    pub fn is_holomorphic(&self) -> bool {
        self.terms.keys().all(|&(s, _, _)| s >= 0)
    }

    pub fn pole_terms(&self) -> impl Iterator<Item = (&ChartExponents, &Rational)> {
        self.terms.iter().filter(|((s, _, _), _)| *s < 0)
    }
}

fn binomial(n: u32, k: u32) -> Rational {
    let mut r = Rational::one();
    for m in 0..k {
        r = r * qi(i64::from(n - m)) / qi(i64::from(m + 1));
    }
    r
}

/// Adds the chart-`A` image of one invariant monomial to `out`:
/// with `z₂ = z₁q`, `dz₂ = q dz₁ + z₁ dq` and `z₁^m dz₁^k = 2^{-k} p^{(m-k)/2} dp^k`,
/// the `dq^s` part of `z₁^α z₂^β dz₁^l dz₂^{i-l}` is
/// `C(i-l, s) 2^{s-i} p^{(α+β-i)/2 + s} q^{β+i-l-s} dp^{i-s} dq^s`.
pub(crate) fn push_monomial_chart_a(
    out: &mut BTreeMap<ChartExponents, Rational>,
    (alpha, beta, l): Exponents,
    i: u32,
    c: &Rational,
) {
    let base = (i64::from(alpha) + i64::from(beta) - i64::from(i)) / 2;
    for s in 0..=(i - l) {
        let coeff = c * binomial(i - l, s) / qi(1i64 << (i - s));
        let key = (base + i64::from(s), beta + i - l - s, s);
        let e = out.entry(key).or_insert_with(Rational::zero);
        *e += coeff;
        if e.is_zero() {
            out.remove(&key);
        }
    }
}

pub fn pullback(w: &LocalDifferential, chart: Chart) -> Result<ChartForm, SymdiffError> {
    if !w.is_invariant() {
        return Err(SymdiffError::NotInvariant);
    }
    let src = match chart {
        Chart::A => w.clone(),
        Chart::B => w.swapped(),
    };
    let mut terms = BTreeMap::new();
    for (&e, c) in src.terms() {
        push_monomial_chart_a(&mut terms, e, src.degree(), c);
    }
    Ok(ChartForm { i: w.degree(), terms })
}

/// Whether an invariant differential extends holomorphically over the
/// exceptional curve of the minimal resolution of `C²/±1`.
pub fn blowup_holomorphy(w: &LocalDifferential) -> Result<bool, SymdiffError> {
    Ok(pullback(w, Chart::A)?.is_holomorphic() && pullback(w, Chart::B)?.is_holomorphic())
}

/// `(n_min, i mod 2)`: graded parts of a differential that induces a
/// holomorphic one downstairs satisfy `n ≥ n_min` and `n ≡ i (mod 2)`.
pub fn obstruction_profile(i: u32, j: u32) -> (u32, u32) {
    let mut n = i.saturating_sub(2 * j);
    if n % 2 != i % 2 {
        n += 1;
    }
    (n, i % 2)
}

/// Exact quotient `η` with `η·M^t = w`, or `None`.
pub fn m_divide(w: &LocalDifferential, t: u32) -> Option<LocalDifferential> {
    let mut cur = w.clone();
    for _ in 0..t {
        cur = divide_once(&cur)?;
    }
    Some(cur)
}

/// Division by `M` in lex order `z₁ > z₂ > dz₁ > dz₂`; the leading term of
/// `M` is `z₁dz₂`, and `{M}` is trivially a Gröbner basis, so the remainder
/// vanishes iff `M` divides.
fn divide_once(w: &LocalDifferential) -> Option<LocalDifferential> {
    if w.is_zero() {
        return Some(LocalDifferential::zero(w.degree().saturating_sub(1)));
    }
    if w.degree() == 0 {
        return None;
    }
    let m = MForm.as_differential();
    let mut rem = w.clone();
    let mut quot = LocalDifferential::zero(w.degree() - 1);
    let lex = |&(a, b, l): &Exponents, i: u32| (a, b, l, i - l);
    loop {
        let Some((&key, c)) = rem.terms().iter().max_by_key(|(k, _)| lex(k, rem.degree())) else {
            return Some(quot);
        };
        let (a, b, l) = key;
        // leading monomial must be divisible by z₁·dz₂
        if a == 0 || rem.degree() - l == 0 {
            return None;
        }
        let q_term = LocalDifferential::monomial(c.clone(), a - 1, b, l, w.degree() - 1);
        rem = rem.sub(&q_term.mul(&m));
        quot = quot.add(&q_term);
    }
}
