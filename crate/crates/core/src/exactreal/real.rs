use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::interval::{round_down, round_up, DecimalInterval, DEFAULT_PRECISION};
use super::quadratic::{surd_sign, QuadraticIrrational};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Three-valued answer for questions an interval may not settle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Truth {
    Yes,
    No,
    Unknown,
}

impl Truth {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Truth::Yes
        } else {
            Truth::No
        }
    }
}

/// The number tower every real quantity lives in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RealValue {
    Rational(Rational),
    Quadratic(QuadraticIrrational),
    Interval(DecimalInterval),
}

/// `(p + s·√d) / r` with `s` possibly zero; the working form for exact arithmetic.
struct SurdParts {
    p: BigInt,
    s: BigInt,
    r: BigInt,
}

impl SurdParts {
    fn into_value(self, d: u64) -> Result<RealValue> {
        if self.s.is_zero() {
            Ok(RealValue::Rational(Rational::new(self.p, self.r)?))
        } else {
            Ok(RealValue::Quadratic(QuadraticIrrational::new(
                self.p, self.s, d, self.r,
            )?))
        }
    }
}

impl RealValue {
    pub fn integer(n: i64) -> Self {
        RealValue::Rational(Rational::from(n))
    }

    pub fn rational(numerator: i64, denominator: i64) -> Result<Self> {
        Ok(RealValue::Rational(Rational::new(numerator, denominator)?))
    }

    /// `(p + s·√d) / r`; fails when `s = 0` or `d` is not square-free.
    pub fn quadratic(p: i64, s: i64, d: u64, r: i64) -> Result<Self> {
        Ok(RealValue::Quadratic(QuadraticIrrational::new(p, s, d, r)?))
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, RealValue::Interval(_))
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            RealValue::Rational(r) => Some(r),
            _ => None,
        }
    }

    pub fn as_quadratic(&self) -> Option<&QuadraticIrrational> {
        match self {
            RealValue::Quadratic(q) => Some(q),
            _ => None,
        }
    }

    /// The radicand, for quadratic values.
    pub fn surd(&self) -> Option<u64> {
        self.as_quadratic().map(QuadraticIrrational::d)
    }

    fn parts(&self) -> Option<SurdParts> {
        match self {
            RealValue::Rational(q) => Some(SurdParts {
                p: q.numer().clone(),
                s: BigInt::zero(),
                r: q.denom().clone(),
            }),
            RealValue::Quadratic(q) => Some(SurdParts {
                p: q.p().clone(),
                s: q.s().clone(),
                r: q.r().clone(),
            }),
            RealValue::Interval(_) => None,
        }
    }

    fn common_surd(&self, other: &RealValue) -> Result<u64> {
        match (self.surd(), other.surd()) {
            (Some(a), Some(b)) if a != b => Err(Error::IncompatibleSurds(a, b)),
            (Some(a), _) | (_, Some(a)) => Ok(a),
            (None, None) => Ok(0),
        }
    }

    fn interval_precision(&self, other: &RealValue) -> u32 {
        match (self, other) {
            (RealValue::Interval(a), RealValue::Interval(b)) => a.precision().max(b.precision()),
            (RealValue::Interval(a), _) | (_, RealValue::Interval(a)) => a.precision(),
            _ => DEFAULT_PRECISION,
        }
    }

    /// A certified enclosure with `precision` fractional digits.
    pub fn enclose(&self, precision: u32) -> DecimalInterval {
        match self {
            RealValue::Rational(q) => {
                DecimalInterval::new(q.clone(), q.clone(), None, precision).expect("point interval")
            }
            RealValue::Quadratic(q) => {
                let guard = precision + 4;
                let lo_surd = q.scaled_surd_floor(guard);
                let scale = BigInt::from(10u32).pow(guard);
                let base = q.p() * &scale;
                let den = q.r() * &scale;
                let low = Rational::new(&base + &lo_surd, den.clone()).expect("r > 0");
                let high = Rational::new(base + lo_surd + 1, den).expect("r > 0");
                DecimalInterval::new(round_down(&low, precision), round_up(&high, precision), None, precision)
                    .expect("ordered enclosure")
            }
            RealValue::Interval(iv) => iv.clone(),
        }
    }

    pub fn neg(&self) -> RealValue {
        match self {
            RealValue::Rational(q) => RealValue::Rational(-q),
            RealValue::Quadratic(q) => RealValue::Quadratic(q.neg()),
            RealValue::Interval(iv) => RealValue::Interval(iv.neg()),
        }
    }

    pub fn try_add(&self, other: &RealValue) -> Result<RealValue> {
        if let (RealValue::Rational(a), RealValue::Rational(b)) = (self, other) {
            return Ok(RealValue::Rational(a + b));
        }
        match (self.parts(), other.parts()) {
            (Some(a), Some(b)) => {
                let d = self.common_surd(other)?;
                SurdParts {
                    p: &a.p * &b.r + &b.p * &a.r,
                    s: &a.s * &b.r + &b.s * &a.r,
                    r: a.r * b.r,
                }
                .into_value(d)
            }
            _ => {
                let p = self.interval_precision(other);
                Ok(RealValue::Interval(self.enclose(p).add(&other.enclose(p))))
            }
        }
    }

    pub fn try_sub(&self, other: &RealValue) -> Result<RealValue> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &RealValue) -> Result<RealValue> {
        if let (RealValue::Rational(a), RealValue::Rational(b)) = (self, other) {
            return Ok(RealValue::Rational(a * b));
        }
        match (self.parts(), other.parts()) {
            (Some(a), Some(b)) => {
                let d = self.common_surd(other)?;
                SurdParts {
                    p: &a.p * &b.p + &a.s * &b.s * BigInt::from(d),
                    s: &a.p * &b.s + &b.p * &a.s,
                    r: a.r * b.r,
                }
                .into_value(d)
            }
            _ => {
                let p = self.interval_precision(other);
                Ok(RealValue::Interval(self.enclose(p).mul(&other.enclose(p))))
            }
        }
    }

    pub fn recip(&self) -> Result<RealValue> {
        match self {
            RealValue::Rational(q) => Ok(RealValue::Rational(q.recip()?)),
            RealValue::Quadratic(q) => {
                let d = BigInt::from(q.d());
                SurdParts {
                    p: q.r() * q.p(),
                    s: -(q.r() * q.s()),
                    r: q.p() * q.p() - q.s() * q.s() * d,
                }
                .into_value(q.d())
            }
            RealValue::Interval(iv) => Ok(RealValue::Interval(iv.recip()?)),
        }
    }

    pub fn try_div(&self, other: &RealValue) -> Result<RealValue> {
        self.try_mul(&other.recip()?)
    }

    /// Multiplication by an integer; never fails.
    pub fn mul_int(&self, k: i64) -> RealValue {
        match self {
            RealValue::Rational(q) => RealValue::Rational(q * &Rational::from(k)),
            RealValue::Quadratic(q) => {
                if k == 0 {
                    return RealValue::integer(0);
                }
                let k = BigInt::from(k);
                RealValue::Quadratic(
                    QuadraticIrrational::new(q.p() * &k, q.s() * &k, q.d(), q.r().clone())
                        .expect("nonzero multiple of a surd"),
                )
            }
            RealValue::Interval(iv) => {
                let k = RealValue::integer(k).enclose(iv.precision());
                RealValue::Interval(iv.mul(&k))
            }
        }
    }

    pub fn add_int(&self, k: i64) -> RealValue {
        self.try_add(&RealValue::integer(k))
            .expect("adding an integer is always defined")
    }

    /// Greatest integer not exceeding the value.
    pub fn floor(&self) -> Result<BigInt> {
        match self {
            RealValue::Rational(q) => Ok(q.floor()),
            RealValue::Quadratic(q) => Ok(q.floor()),
            RealValue::Interval(iv) => iv.floor(),
        }
    }

    pub fn ceil(&self) -> Result<BigInt> {
        Ok(-self.neg().floor()?)
    }

    /// `x - floor(x)`.
    pub fn frac(&self) -> Result<RealValue> {
        match self {
            RealValue::Rational(q) => Ok(RealValue::Rational(q.frac())),
            RealValue::Quadratic(q) => {
                let f = q.floor();
                Ok(RealValue::Quadratic(
                    QuadraticIrrational::new(q.p() - f * q.r(), q.s().clone(), q.d(), q.r().clone())
                        .expect("shifting keeps the surd"),
                ))
            }
            RealValue::Interval(iv) => {
                let f = Rational::from_integer(iv.floor()?);
                Ok(RealValue::Interval(DecimalInterval::new(
                    iv.low() - &f,
                    iv.high() - &f,
                    None,
                    iv.precision(),
                )?))
            }
        }
    }

    /// Sign of the value as an ordering against zero.
    pub fn sign(&self) -> Result<Ordering> {
        match self {
            RealValue::Rational(q) => Ok(q.numer().sign().cmp(&num_bigint::Sign::NoSign)),
            RealValue::Quadratic(q) => Ok(surd_sign(q.p(), q.s(), q.d())),
            RealValue::Interval(iv) => {
                if iv.low().is_positive() {
                    Ok(Ordering::Greater)
                } else if iv.high().is_negative() {
                    Ok(Ordering::Less)
                } else if iv.low().is_zero() && iv.high().is_zero() {
                    Ok(Ordering::Equal)
                } else {
                    Err(Error::precision(format!("sign of {iv} is undetermined")))
                }
            }
        }
    }

    /// Exact total order on exact values; certified by disjointness on intervals.
    pub fn compare(&self, other: &RealValue) -> Result<Ordering> {
        if self.is_exact() && other.is_exact() {
            return match self.try_sub(other) {
                Ok(diff) => diff.sign(),
                // 1, √a and √b are linearly independent, so the values differ
                // and finer enclosures eventually separate them.
                Err(Error::IncompatibleSurds(..)) => Ok(separate(self, other)),
                Err(e) => Err(e),
            };
        }
        let p = self.interval_precision(other);
        let (a, b) = (self.enclose(p), other.enclose(p));
        if a.high() < b.low() {
            Ok(Ordering::Less)
        } else if a.low() > b.high() {
            Ok(Ordering::Greater)
        } else if a.is_point() && b.is_point() && a.low() == b.low() {
            Ok(Ordering::Equal)
        } else {
            Err(Error::precision(format!("cannot separate {a} from {b}")))
        }
    }

    pub fn is_integer(&self) -> Truth {
        match self {
            RealValue::Rational(q) => Truth::from_bool(q.is_integer()),
            RealValue::Quadratic(_) => Truth::No,
            RealValue::Interval(iv) => {
                if iv.is_point() {
                    Truth::from_bool(iv.low().is_integer())
                } else if Rational::from_integer(iv.low().ceil()) > *iv.high() {
                    Truth::No
                } else {
                    Truth::Unknown
                }
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            RealValue::Rational(q) => q.to_f64(),
            RealValue::Quadratic(q) => q.to_f64(),
            RealValue::Interval(iv) => ((iv.low() + iv.high()) * Rational::new(1, 2).expect("1/2")).to_f64(),
        }
    }
}

impl From<Rational> for RealValue {
    fn from(q: Rational) -> Self {
        RealValue::Rational(q)
    }
}

impl From<QuadraticIrrational> for RealValue {
    fn from(q: QuadraticIrrational) -> Self {
        RealValue::Quadratic(q)
    }
}

impl From<DecimalInterval> for RealValue {
    fn from(iv: DecimalInterval) -> Self {
        RealValue::Interval(iv)
    }
}

impl From<i64> for RealValue {
    fn from(n: i64) -> Self {
        RealValue::integer(n)
    }
}

/// Orders two distinct exact values by refining enclosures until they separate.
fn separate(a: &RealValue, b: &RealValue) -> Ordering {
    let mut precision = DEFAULT_PRECISION;
    loop {
        let (x, y) = (a.enclose(precision), b.enclose(precision));
        if x.high() < y.low() {
            return Ordering::Less;
        }
        if x.low() > y.high() {
            return Ordering::Greater;
        }
        precision *= 2;
    }
}

impl fmt::Display for RealValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealValue::Rational(q) => q.fmt(f),
            RealValue::Quadratic(q) => q.fmt(f),
            RealValue::Interval(iv) => iv.fmt(f),
        }
    }
}

impl serde::Serialize for RealValue {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
