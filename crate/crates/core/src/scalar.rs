//! Scalar abstraction shared by the series and closed-form pipelines.
//!
//! Coefficient arithmetic runs either exactly (`num_rational::BigRational`)
//! or in double precision (`f64`) behind the [`Coeff`] trait. Exact mode
//! keeps the composition-law identities assertable at zero tolerance;
//! float mode is what the CLI uses for everyday seeds.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, NumAssign, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};
use std::fmt::{Debug, Display};
use std::str::FromStr;

/// On-disk form of a single coefficient: rationals serialize as `"p/q"`
/// strings (no precision loss), floats as plain JSON numbers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoeffValue {
    Number(f64),
    Text(String),
}

/// A coefficient scalar: exact rational or double-precision float.
pub trait Coeff:
    Clone + Debug + Display + PartialEq + PartialOrd + Num + NumAssign + Signed + 'static
{
    /// True when arithmetic carries no rounding error.
    const EXACT: bool;

    fn from_integer(v: i64) -> Self;
    fn from_bigint(v: &BigInt) -> Self;
    fn to_f64(&self) -> f64;

    /// Equality for classification: exact scalars compare exactly, floats
    /// within `rel_tol` relative (ties count as equal).
    fn approx_eq(&self, other: &Self, rel_tol: f64) -> bool;

    fn to_coeff_value(&self) -> CoeffValue;
    fn from_coeff_value(v: &CoeffValue) -> Result<Self, String>;
}

impl Coeff for f64 {
    const EXACT: bool = false;

    fn from_integer(v: i64) -> Self {
        v as f64
    }

    fn from_bigint(v: &BigInt) -> Self {
        v.to_f64().unwrap_or(f64::INFINITY)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn approx_eq(&self, other: &Self, rel_tol: f64) -> bool {
        if self == other {
            return true;
        }
        (self - other).abs() <= rel_tol * self.abs().max(other.abs())
    }

    fn to_coeff_value(&self) -> CoeffValue {
        CoeffValue::Number(*self)
    }

    fn from_coeff_value(v: &CoeffValue) -> Result<Self, String> {
        match v {
            CoeffValue::Number(x) => Ok(*x),
            CoeffValue::Text(s) => parse_rational(s)
                .map(|r| Coeff::to_f64(&r))
                .or_else(|_| s.parse::<f64>().map_err(|e| e.to_string())),
        }
    }
}

impl Coeff for BigRational {
    const EXACT: bool = true;

    fn from_integer(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_bigint(v: &BigInt) -> Self {
        BigRational::from_integer(v.clone())
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn approx_eq(&self, other: &Self, _rel_tol: f64) -> bool {
        self == other
    }

    fn to_coeff_value(&self) -> CoeffValue {
        CoeffValue::Text(self.to_string())
    }

    fn from_coeff_value(v: &CoeffValue) -> Result<Self, String> {
        match v {
            CoeffValue::Text(s) => parse_rational(s),
            CoeffValue::Number(x) => BigRational::from_f64(*x)
                .ok_or_else(|| format!("cannot represent {x} as a rational")),
        }
    }
}

/// Parses `"p"`, `"-p"`, or `"p/q"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    BigRational::from_str(s.trim()).map_err(|e| format!("invalid rational {s:?}: {e}"))
}
