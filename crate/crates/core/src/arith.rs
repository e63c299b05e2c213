//! Rational helpers shared by every module.

use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};

/// Exact rational number used throughout the crate.
pub type Rational = BigRational;

/// `n / d` as a [`Rational`]. Panics if `d == 0`.
pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer `n` as a [`Rational`].
pub fn qi(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Formats as `p/q`, or `p` when the denominator is one.
pub fn fmt_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p`, `p/q` or `-p/q`. Whitespace around the value is ignored.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).ok()?;
            let d = BigInt::from_str(d.trim()).ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => BigInt::from_str(s).ok().map(Rational::from_integer),
    }
}

/// Returns the value as `i64` when it is an integer that fits.
pub fn to_i64(x: &Rational) -> Option<i64> {
    if !x.is_integer() {
        return None;
    }
    i64::try_from(x.numer()).ok()
}

/// Scales a nonzero rational vector to the primitive integer vector with a
/// positive first nonzero entry.
pub fn primitive_integer_vector(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| num::integer::lcm(acc, x.denom().clone()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| num::integer::gcd(acc, x.clone()));
    if g.is_zero() {
        return ints;
    }
    let sign = match ints.iter().find(|x| !x.is_zero()) {
        Some(first) if first.is_negative() => -BigInt::one(),
        _ => BigInt::one(),
    };
    ints.into_iter().map(|x| x / &g * &sign).collect()
}

/// Serde adapter storing a [`Rational`] as a `"p/q"` string.
pub mod serde_rational {
    use super::{fmt_rational, parse_rational, Rational};
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_rational(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).ok_or_else(|| D::Error::custom(format!("invalid rational `{s}`")))
    }
}

/// Serde adapter for `Vec<Rational>` as a list of `"p/q"` strings.
pub mod serde_rational_vec {
    use super::{fmt_rational, parse_rational, Rational};
    use serde::{de::Error, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for x in v {
            seq.serialize_element(&fmt_rational(x))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|s| parse_rational(s).ok_or_else(|| D::Error::custom(format!("invalid rational `{s}`"))))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("3/6"), Some(q(1, 2)));
        assert_eq!(parse_rational(" -4 "), Some(qi(-4)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
        assert_eq!(fmt_rational(&q(-6, 4)), "-3/2");
        assert_eq!(fmt_rational(&qi(7)), "7");
    }

    #[test]
    fn primitive_vector() {
        let v = primitive_integer_vector(&[q(-1, 2), q(-1, 1), qi(0)]);
        assert_eq!(v, vec![BigInt::from(1), BigInt::from(2), BigInt::from(0)]);
    }
}
