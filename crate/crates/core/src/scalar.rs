//! Scalar trait for the generic elimination core, plus constructors and
//! string conversions for the two concrete scalar types.

use std::fmt::{Debug, Display};
use std::ops::Neg;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Num, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::{GaussianRational, Rational};

/// Field scalar usable by the elimination routines.
///
/// Implementations must be exact: `a + b`, `a * b`, `a / b` are required to
/// satisfy the field axioms with no rounding. `conjugate` is the identity on
/// real scalars and complex conjugation on `ℚ(i)`.
pub trait Scalar:
    Num + Clone + PartialEq + Neg<Output = Self> + Debug + Display + Send + Sync + 'static
{
    fn conjugate(&self) -> Self;
}

impl Scalar for Rational {
    fn conjugate(&self) -> Self {
        self.clone()
    }
}

impl Scalar for GaussianRational {
    fn conjugate(&self) -> Self {
        self.conj()
    }
}

/// Rational `n/d` from machine integers. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// Gaussian rational from integer real and imaginary parts.
pub fn gauss(re: i64, im: i64) -> GaussianRational {
    GaussianRational::new(rat_int(re), rat_int(im))
}

/// The imaginary unit.
pub fn gauss_i() -> GaussianRational {
    gauss(0, 1)
}

/// Embed a rational into `ℚ(i)`.
pub fn to_gauss(r: &Rational) -> GaussianRational {
    GaussianRational::new(r.clone(), Rational::zero())
}

/// True if the imaginary part vanishes.
pub fn is_real(z: &GaussianRational) -> bool {
    z.im.is_zero()
}

/// Extract the rational value of a Gaussian rational, failing if it has a
/// nonzero imaginary part.
pub fn expect_real(z: &GaussianRational, what: &str) -> Result<Rational> {
    if is_real(z) {
        Ok(z.re.clone())
    } else {
        Err(Error::NotReal(format!("{what}: {z}")))
    }
}

/// Render a rational as `p/q`, or just `p` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `p` or `p/q` into a rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parse_int = |t: &str| {
        BigInt::from_str(t.trim())
            .map_err(|_| Error::InvalidParameter(format!("not an integer: {t:?}")))
    };
    match s.split_once('/') {
        None => Ok(Rational::from(parse_int(s)?)),
        Some((num, den)) => {
            let d = parse_int(den)?;
            if d.is_zero() {
                return Err(Error::InvalidParameter(format!(
                    "zero denominator in {s:?}"
                )));
            }
            Ok(Rational::new(parse_int(num)?, d))
        }
    }
}

/// Sign of a rational as -1, 0, or 1.
pub fn sign(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}
