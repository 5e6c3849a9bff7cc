//! Exact scalar helpers: the generalized binomial coefficient, factorials,
//! and the decimal / `p/q` text encodings used in machine-readable output.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serializer;

use crate::{Error, ExactInt, ExactRat, Result};

/// Generalized binomial coefficient.
///
/// Zero when `d < 0`; otherwise `c(c-1)...(c-d+1) / d!`, which is a
/// polynomial in `c` and therefore also defined (and signed) for negative
/// `c`. For `0 <= c < d` the product passes through zero, so the usual
/// "zero when `c < d`" convention holds for nonnegative `c`.
pub fn binomial(c: i64, d: i64) -> ExactInt {
    if d < 0 {
        return BigInt::zero();
    }
    if c >= 0 && d > c {
        return BigInt::zero();
    }
    // symmetric shortcut only for nonnegative upper arguments
    let d = if c >= 0 && d > c - d { c - d } else { d };
    let mut acc = BigInt::one();
    for t in 0..d {
        // acc == binom(c, t) here, and binom(c, t) * (c - t) is divisible by t + 1
        acc *= BigInt::from(c - t);
        acc /= BigInt::from(t + 1);
    }
    acc
}

/// `n! / (n-i)!`.
pub fn falling_factorial(n: u64, i: u64) -> Result<ExactInt> {
    if i > n {
        return Err(Error::domain(format!(
            "falling factorial needs i <= n (n={n}, i={i})"
        )));
    }
    Ok((n - i + 1..=n).fold(BigInt::one(), |acc, f| acc * BigInt::from(f)))
}

pub fn factorial(n: u64) -> ExactInt {
    (1..=n).fold(BigInt::one(), |acc, f| acc * BigInt::from(f))
}

/// `(-1)^e` for any integer exponent.
pub fn sign_pow(e: i64) -> ExactInt {
    if e.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

pub fn rat(num: impl Into<ExactInt>, den: impl Into<ExactInt>) -> ExactRat {
    ExactRat::new(num.into(), den.into())
}

pub fn rat_int(v: impl Into<ExactInt>) -> ExactRat {
    ExactRat::from_integer(v.into())
}

/// The integer value of `r` if its denominator is one.
pub fn rat_to_int(r: &ExactRat) -> Option<ExactInt> {
    r.is_integer().then(|| r.numer().clone())
}

pub fn parse_int(s: &str) -> Result<ExactInt> {
    s.trim()
        .parse::<BigInt>()
        .map_err(|e| Error::Parse(format!("{s:?}: {e}")))
}

/// Lowest-terms encoding: `"p"` for integers, `"p/q"` (with `q > 1`) otherwise.
pub fn format_rat(r: &ExactRat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Accepts `"p"` or `"p/q"` with `q != 0`; the result is normalized.
pub fn parse_rat(s: &str) -> Result<ExactRat> {
    let s = s.trim();
    match s.split_once('/') {
        None => Ok(ExactRat::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let p = parse_int(p)?;
            let q = parse_int(q)?;
            if q.is_zero() {
                return Err(Error::Parse(format!("{s:?}: zero denominator")));
            }
            Ok(ExactRat::new(p, q))
        }
    }
}

#[cfg(test)]
fn gcd(a: &ExactInt, b: &ExactInt) -> ExactInt {
    use num_integer::Integer;
    use num_traits::Signed;
    a.abs().gcd(&b.abs())
}

pub(crate) fn ser_ints<S: Serializer>(
    v: &[ExactInt],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn b(c: i64, d: i64) -> i64 {
        i64::try_from(binomial(c, d)).unwrap()
    }

    // Independent route: sum of the Pascal triangle for c >= 0, and the
    // upper-negation law written out by hand for c < 0.
    fn binom_oracle(c: i64, d: i64) -> i128 {
        if d < 0 {
            return 0;
        }
        let mut num: i128 = 1;
        let mut den: i128 = 1;
        for t in 0..d {
            num *= (c - t) as i128;
            den *= (t + 1) as i128;
        }
        num / den
    }

    #[test]
    fn spec_examples() {
        assert_eq!(b(5, 2), 10);
        assert_eq!(b(3, 5), 0);
        assert_eq!(b(0, -1), 0);
        assert_eq!(b(-1, 2), 1);
        assert_eq!(b(-2, 1), -2);
    }

    #[test]
    fn edge_values() {
        assert_eq!(b(0, 0), 1);
        assert_eq!(b(-7, 0), 1);
        assert_eq!(b(-1, 3), -1);
        assert_eq!(b(-3, 2), 6);
        assert_eq!(b(10, 10), 1);
        assert_eq!(binomial(100, 50).to_string(), "100891344545564193334812497256");
    }

    #[test]
    fn falling_factorials() {
        assert_eq!(falling_factorial(4, 2).unwrap(), BigInt::from(12));
        assert_eq!(falling_factorial(9, 0).unwrap(), BigInt::from(1));
        assert_eq!(falling_factorial(6, 6).unwrap(), BigInt::from(720));
        assert!(matches!(falling_factorial(2, 3), Err(Error::Domain(_))));
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
    }

    #[test]
    fn rat_encoding() {
        assert_eq!(format_rat(&rat(6, -4)), "-3/2");
        assert_eq!(format_rat(&rat(8, 4)), "2");
        assert_eq!(parse_rat(" 10/-4 ").unwrap(), rat(-5, 2));
        assert_eq!(parse_rat("7").unwrap(), rat_int(7));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_int("12x").is_err());
        assert_eq!(sign_pow(-3), BigInt::from(-1));
        assert_eq!(sign_pow(4), BigInt::from(1));
    }

    proptest! {
        #[test]
        fn matches_product_oracle(c in -20i64..=20, d in -3i64..=12) {
            prop_assert_eq!(binomial(c, d), BigInt::from(binom_oracle(c, d)));
        }

        #[test]
        fn pascal_rule(c in -40i64..=40, d in 1i64..=20) {
            prop_assert_eq!(binomial(c, d), binomial(c - 1, d - 1) + binomial(c - 1, d));
        }

        #[test]
        fn symmetry(c in 0i64..=60, t in 0.0f64..=1.0) {
            let d = ((c as f64) * t).round() as i64;
            prop_assert_eq!(binomial(c, d), binomial(c, c - d));
        }

        #[test]
        fn upper_negation(c in -40i64..=40, d in 0i64..=20) {
            prop_assert_eq!(binomial(c, d) * sign_pow(d), binomial(d - c - 1, d));
        }

        #[test]
        fn int_text_round_trip(v in any::<i128>(), shift in 0u32..200) {
            let x = BigInt::from(v) << shift;
            prop_assert_eq!(parse_int(&x.to_string()).unwrap(), x);
        }

        #[test]
        fn rat_field_ops_cross_multiply(
            a in -50i64..=50, bd in 1i64..=50, c in -50i64..=50, dd in 1i64..=50
        ) {
            let x = rat(a, bd);
            let y = rat(c, dd);
            prop_assert_eq!(&x + &y, rat(a * dd + c * bd, bd * dd));
            prop_assert_eq!(&x * &y, rat(a * c, bd * dd));
            // lowest terms, positive denominator
            prop_assert!(x.denom() > &BigInt::zero());
            prop_assert_eq!(gcd(x.numer(), x.denom()), BigInt::one());
            if c != 0 {
                let inv = y.recip();
                prop_assert_eq!(&inv * &y, rat_int(1));
                prop_assert_eq!(inv, rat(dd, c));
            }
            prop_assert_eq!(parse_rat(&format_rat(&x)).unwrap(), x);
        }
    }
}
