use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::rational::Rational;
use crate::error::{Error, Result};

/// Number of fractional decimal digits kept by interval results unless the
/// caller asks for something else.
pub const DEFAULT_PRECISION: u32 = 60;

/// A closed interval `[low, high]` with exact rational endpoints.
///
/// Results of interval arithmetic are rounded outward to `precision`
/// fractional digits, so each operation widens the enclosure by at most
/// `2·10^-precision` beyond the exact image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecimalInterval {
    low: Rational,
    high: Rational,
    label: Option<String>,
    precision: u32,
}

fn pow10(digits: u32) -> BigInt {
    BigInt::from(10u32).pow(digits)
}

pub(crate) fn round_down(x: &Rational, digits: u32) -> Rational {
    let scale = pow10(digits);
    let scaled = (x.numer() * &scale).div_floor(x.denom());
    Rational::new(scaled, scale).expect("nonzero scale")
}

pub(crate) fn round_up(x: &Rational, digits: u32) -> Rational {
    let scale = pow10(digits);
    let scaled = -((-(x.numer() * &scale)).div_floor(x.denom()));
    Rational::new(scaled, scale).expect("nonzero scale")
}

impl DecimalInterval {
    pub fn new(low: Rational, high: Rational, label: Option<String>, precision: u32) -> Result<Self> {
        if low > high {
            return Err(Error::InvalidValue(format!("interval [{low}, {high}] has low > high")));
        }
        Ok(DecimalInterval {
            low,
            high,
            label,
            precision,
        })
    }

    /// Midpoint digits `mid` with `fraction_digits` digits after the point and
    /// radius of half a unit in the last place.
    pub fn from_midpoint(mid: Rational, fraction_digits: u32, label: Option<String>, precision: u32) -> Result<Self> {
        let radius = Rational::new(1, pow10(fraction_digits) * 2)?;
        let low = &mid - &radius;
        let high = &mid + &radius;
        if fraction_digits >= precision {
            Self::new(
                round_down(&low, precision),
                round_up(&high, precision),
                label,
                precision,
            )
        } else {
            Self::new(low, high, label, precision)
        }
    }

    /// Outward-rounded interval around exact endpoints.
    pub(crate) fn rounded(low: Rational, high: Rational, precision: u32) -> Self {
        DecimalInterval {
            low: round_down(&low, precision),
            high: round_up(&high, precision),
            label: None,
            precision,
        }
    }

    pub fn low(&self) -> &Rational {
        &self.low
    }

    pub fn high(&self) -> &Rational {
        &self.high
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn width(&self) -> Rational {
        &self.high - &self.low
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn contains_zero(&self) -> bool {
        !self.low.is_positive() && !self.high.is_negative()
    }

    pub fn is_point(&self) -> bool {
        self.low == self.high
    }

    /// Certified floor, or `PrecisionExhausted` when an integer lies in the
    /// interval without being its only point.
    pub fn floor(&self) -> Result<BigInt> {
        let lo = self.low.floor();
        if lo == self.high.floor() {
            Ok(lo)
        } else {
            Err(Error::precision(format!("floor of {self} is ambiguous")))
        }
    }

    pub fn add(&self, other: &DecimalInterval) -> DecimalInterval {
        let p = self.precision.max(other.precision);
        Self::rounded(&self.low + &other.low, &self.high + &other.high, p)
    }

    pub fn neg(&self) -> DecimalInterval {
        DecimalInterval {
            low: -&self.high,
            high: -&self.low,
            label: None,
            precision: self.precision,
        }
    }

    pub fn mul(&self, other: &DecimalInterval) -> DecimalInterval {
        let p = self.precision.max(other.precision);
        let products = [
            &self.low * &other.low,
            &self.low * &other.high,
            &self.high * &other.low,
            &self.high * &other.high,
        ];
        let lo = products.iter().min().expect("four products").clone();
        let hi = products.iter().max().expect("four products").clone();
        Self::rounded(lo, hi, p)
    }

    pub fn recip(&self) -> Result<DecimalInterval> {
        if self.contains_zero() {
            if self.is_point() {
                return Err(Error::DivisionByZero);
            }
            return Err(Error::precision(format!(
                "cannot divide by {self}, which contains zero"
            )));
        }
        Ok(Self::rounded(self.high.recip()?, self.low.recip()?, self.precision))
    }
}

/// `x` rendered with `digits` fractional digits, rounded toward negative infinity.
pub(crate) fn decimal_string(x: &Rational, digits: u32) -> String {
    let scaled = (x.numer() * pow10(digits)).div_floor(x.denom());
    let negative = scaled < BigInt::zero();
    let mut s = if negative {
        (-&scaled).to_string()
    } else {
        scaled.to_string()
    };
    if digits > 0 {
        while s.len() <= digits as usize {
            s.insert(0, '0');
        }
        s.insert(s.len() - digits as usize, '.');
    }
    if negative {
        s.insert(0, '-');
    }
    s
}

impl fmt::Display for DecimalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = self.precision.min(30);
        let hi = -round_down(&-&self.high, digits);
        write!(
            f,
            "[{}, {}]",
            decimal_string(&self.low, digits),
            decimal_string(&hi, digits)
        )?;
        if let Some(label) = &self.label {
            write!(f, ":{label}")?;
        }
        Ok(())
    }
}
