//! Checked integer arithmetic and exact-rational helpers shared by all
//! kernels. Nothing here ever rounds through floating point.

use num::BigRational;

use crate::error::{Error, Result};

/// Exact rational type used for slopes, thresholds and dimension bounds.
pub type Rat = BigRational;

/// Build a rational p/q from machine integers (q != 0).
pub fn rat(p: i128, q: i128) -> Rat {
    assert!(q != 0, "rational with zero denominator");
    Rat::new(p.into(), q.into())
}

pub fn rat_int(p: i128) -> Rat {
    Rat::from_integer(p.into())
}

/// Render a rational canonically: `p` for integers, `p/q` otherwise (q > 0).
pub fn rat_to_string(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn add(a: i128, b: i128, ctx: &'static str) -> Result<i128> {
    a.checked_add(b).ok_or(Error::Overflow(ctx))
}

pub fn sub(a: i128, b: i128, ctx: &'static str) -> Result<i128> {
    a.checked_sub(b).ok_or(Error::Overflow(ctx))
}

pub fn mul(a: i128, b: i128, ctx: &'static str) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow(ctx))
}

/// a*b + c, checked.
pub fn mul_add(a: i128, b: i128, c: i128, ctx: &'static str) -> Result<i128> {
    add(mul(a, b, ctx)?, c, ctx)
}

/// Floor division with b != 0 (rounds toward negative infinity).
pub fn div_floor(a: i128, b: i128) -> i128 {
    let q = a / b;
    if (a % b != 0) && ((a < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}

/// Ceiling division with b != 0.
pub fn div_ceil(a: i128, b: i128) -> i128 {
    let q = a / b;
    if (a % b != 0) && ((a < 0) == (b < 0)) {
        q + 1
    } else {
        q
    }
}

/// Floor of the square root of a nonnegative integer.
pub fn isqrt(n: i128) -> i128 {
    assert!(n >= 0, "isqrt of negative number");
    (n as u128).isqrt() as i128
}

/// Exact square root if `n` is a perfect square.
pub fn perfect_sqrt(n: i128) -> Option<i128> {
    if n < 0 {
        return None;
    }
    let s = isqrt(n);
    (s * s == n).then_some(s)
}

/// Sign of p + q*sqrt(d) for nonsquare d > 0, decided without real
/// arithmetic: when the two terms have opposite signs, compare p^2 against
/// q^2 d (equality is impossible since d is not a square).
pub fn surd_sign(p: i128, q: i128, d: i128) -> Result<std::cmp::Ordering> {
    use std::cmp::Ordering::*;
    assert!(
        d > 0 && perfect_sqrt(d).is_none(),
        "surd_sign wants nonsquare d > 0"
    );
    if q == 0 {
        return Ok(p.cmp(&0));
    }
    if p == 0 {
        return Ok(q.cmp(&0));
    }
    if p > 0 && q > 0 {
        return Ok(Greater);
    }
    if p < 0 && q < 0 {
        return Ok(Less);
    }
    let p_sq = mul(p, p, "surd_sign")?;
    let qq_d = mul(mul(q, q, "surd_sign")?, d, "surd_sign")?;
    Ok(if p > 0 {
        // p > 0 > q: positive iff p^2 > q^2 d
        if p_sq > qq_d { Greater } else { Less }
    } else {
        // q > 0 > p: positive iff q^2 d > p^2
        if qq_d > p_sq { Greater } else { Less }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cmp::Ordering::*;

    #[test]
    fn floor_ceil_division() {
        assert_eq!(div_floor(7, 2), 3);
        assert_eq!(div_floor(-7, 2), -4);
        assert_eq!(div_floor(7, -2), -4);
        assert_eq!(div_ceil(7, 2), 4);
        assert_eq!(div_ceil(-7, 2), -3);
        assert_eq!(div_ceil(121, 12), 11);
    }

    #[test]
    fn integer_sqrt() {
        assert_eq!(isqrt(0), 0);
        assert_eq!(isqrt(48), 6);
        assert_eq!(isqrt(49), 7);
        assert_eq!(perfect_sqrt(49), Some(7));
        assert_eq!(perfect_sqrt(48), None);
        assert_eq!(perfect_sqrt(-4), None);
    }

    #[test]
    fn surd_sign_cases() {
        // 3 - 2*sqrt(2) > 0 because 9 > 8
        assert_eq!(surd_sign(3, -2, 2).unwrap(), Greater);
        // 2 - 2*sqrt(2) < 0 because 4 < 8
        assert_eq!(surd_sign(2, -2, 2).unwrap(), Less);
        assert_eq!(surd_sign(-3, 2, 2).unwrap(), Less);
        assert_eq!(surd_sign(-2, 2, 2).unwrap(), Greater);
        assert_eq!(surd_sign(0, 1, 5).unwrap(), Greater);
        assert_eq!(surd_sign(-1, 0, 5).unwrap(), Less);
    }

    #[test]
    fn overflow_is_an_error() {
        assert_eq!(mul(i128::MAX, 2, "t"), Err(crate::error::Error::Overflow("t")));
        assert!(add(i128::MAX, -1, "t").is_ok());
    }
}
