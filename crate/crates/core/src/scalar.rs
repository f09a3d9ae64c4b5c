//! Exact scalars: arbitrary-precision rationals and Gaussian rationals.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Arbitrary-precision rational, always kept in lowest terms.
pub type Scalar = BigRational;

/// Complex number with exact rational real and imaginary parts.
pub type Gauss = Complex<Scalar>;

pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn gauss(re: Scalar, im: Scalar) -> Gauss {
    Complex::new(re, im)
}

pub fn gauss_int(re: i64, im: i64) -> Gauss {
    Complex::new(int(re), int(im))
}

/// The imaginary unit.
pub fn unit_i() -> Gauss {
    Complex::new(Scalar::zero(), Scalar::one())
}

pub fn real(v: Scalar) -> Gauss {
    Complex::new(v, Scalar::zero())
}

/// Parses `"7"`, `"-3"` or `"3/2"` into an exact rational.
pub fn parse_scalar(text: &str) -> Result<Scalar, Error> {
    let text = text.trim();
    let bad = || Error::InvalidScalar(text.to_string());
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Scalar::new(num, den))
}

/// Lossy conversion used only by the floating-point Binet code.
pub fn to_f64(v: &Scalar) -> f64 {
    let num = v.numer();
    let den = v.denom();
    match (big_to_f64(num), big_to_f64(den)) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            // both parts overflow f64; scale down by a shared power of two
            let shift = num.bits().max(den.bits()).saturating_sub(1000);
            let n = big_to_f64(&(num >> shift)).unwrap_or(f64::NAN);
            let d = big_to_f64(&(den >> shift)).unwrap_or(f64::NAN);
            n / d
        }
    }
}

fn big_to_f64(v: &BigInt) -> Option<f64> {
    num_traits::ToPrimitive::to_f64(v)
}

/// Renders a Gaussian rational as `a+bi` / `a-bi`, always showing both parts.
pub struct GaussDisplay<'a>(pub &'a Gauss);

impl fmt::Display for GaussDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let z = self.0;
        let sign = if z.im.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}i", z.re, sign, z.im.abs())
    }
}
