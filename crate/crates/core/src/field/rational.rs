//! Rational helpers: parsing, exact formatting, perfect-square detection.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::FieldError;

pub type Rational = BigRational;

/// Shorthand for `n/d` with small integers.
pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_rational(s: &str) -> Result<Rational, FieldError> {
    let s = s.trim();
    let bad = || FieldError::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(p))
        }
    }
}

/// Always `p/q`, with the denominator written even when it is 1.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Exact square root of a non-negative rational, if it is a perfect square.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = int_sqrt(r.numer())?;
    let d = int_sqrt(r.denom())?;
    Some(BigRational::new(n, d))
}

fn int_sqrt(n: &BigInt) -> Option<BigInt> {
    let s = n.sqrt();
    (&s * &s == *n).then_some(s)
}

/// Writes a nonzero rational `r` as `sign * c^2 * n` with `n` a squarefree
/// positive integer and `c` a positive rational. Returns `(sign, c, n)`.
///
/// Uses trial division, which is fine for the parameter sizes used here.
pub fn squarefree_decomposition(r: &Rational) -> (i8, Rational, BigInt) {
    assert!(!r.is_zero(), "squarefree decomposition of zero");
    let sign = if r.is_negative() { -1 } else { 1 };
    // |p/q| = |p q| / q^2
    let pq = (r.numer() * r.denom()).abs();
    let (root, free) = split_square(&pq);
    let c = BigRational::new(root, r.denom().abs());
    (sign, c, free)
}

/// `n = root^2 * free` with `free` squarefree.
fn split_square(n: &BigInt) -> (BigInt, BigInt) {
    let mut rest = n.clone();
    let mut root = BigInt::one();
    let mut free = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        let mut count = 0u32;
        while rest.is_multiple_of(&p) {
            rest /= &p;
            count += 1;
        }
        for _ in 0..count / 2 {
            root *= &p;
        }
        if count % 2 == 1 {
            free *= &p;
        }
        p += 1;
    }
    free *= rest;
    (root, free)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("-5/7").unwrap(), rat(-5, 7));
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(format_rational(&int(3)), "3/1");
        assert_eq!(format_rational(&rat(10, -14)), "-5/7");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn squares() {
        assert_eq!(rational_sqrt(&rat(9, 25)), Some(rat(3, 5)));
        assert_eq!(rational_sqrt(&rat(2, 1)), None);
        assert_eq!(rational_sqrt(&rat(-4, 1)), None);
    }

    #[test]
    fn squarefree() {
        let (s, c, n) = squarefree_decomposition(&rat(-9, 5));
        assert_eq!(s, -1);
        assert_eq!(n, BigInt::from(5));
        // -9/5 = -(3/5)^2 * 5
        assert_eq!(c, rat(3, 5));
        let (s, c, n) = squarefree_decomposition(&int(72));
        assert_eq!((s, c, n), (1, int(6), BigInt::from(2)));
    }
}
