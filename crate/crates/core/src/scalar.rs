//! Exact rational coefficients and the integer combinatorics used throughout.

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn big(n: BigInt) -> Scalar {
    Scalar::from_integer(n)
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// `(-1)^e` as a scalar.
pub fn sign(e: u32) -> Scalar {
    if e % 2 == 0 {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

pub fn factorial(n: u32) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Binomial coefficient; zero when `k > n` or `n < 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Multinomial coefficient `n! / (s_1! s_2! ...)`; zero unless the parts sum to `n`.
pub fn multinomial(n: u32, parts: &[u32]) -> BigInt {
    if parts.iter().sum::<u32>() != n {
        return BigInt::zero();
    }
    parts
        .iter()
        .fold(factorial(n), |acc, &p| acc / factorial(p))
}

/// Renders as `num/den`, denominator always present. Used by the JSON forms.
pub fn to_fraction_string(c: &Scalar) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

/// Renders as `num` for integers and `num/den` otherwise.
pub fn to_display_string(c: &Scalar) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn parse_scalar(src: &str) -> Option<Scalar> {
    let src = src.trim();
    match src.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Scalar::new(n, d))
            }
        }
        None => src.parse::<BigInt>().ok().map(Scalar::from_integer),
    }
}

/// Returns the integer value if `c` is an integer that fits in `i64`.
pub fn as_i64(c: &Scalar) -> Option<i64> {
    if c.is_integer() {
        c.numer().to_i64()
    } else {
        None
    }
}

pub fn is_unit(c: &Scalar) -> bool {
    c.abs().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials_and_multinomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(multinomial(4, &[2, 1, 1]), BigInt::from(12));
        assert_eq!(multinomial(4, &[2, 1]), BigInt::zero());
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(10), BigInt::from(3_628_800));
    }

    #[test]
    fn fraction_strings() {
        assert_eq!(to_fraction_string(&int(1)), "1/1");
        assert_eq!(to_fraction_string(&ratio(-2, 4)), "-1/2");
        assert_eq!(to_display_string(&ratio(6, 3)), "2");
        assert_eq!(parse_scalar("-3/6"), Some(ratio(-1, 2)));
        assert_eq!(parse_scalar("1/0"), None);
        assert_eq!(parse_scalar("x"), None);
    }
}
