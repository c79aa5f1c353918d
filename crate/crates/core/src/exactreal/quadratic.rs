use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// `(p + s·√d) / r` with `d` square-free, `s ≠ 0`, `r > 0` and `gcd(p, s, r) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticIrrational {
    p: BigInt,
    s: BigInt,
    d: u64,
    r: BigInt,
}

pub(crate) fn is_square_free(d: u64) -> bool {
    let mut f = 2u64;
    while f.saturating_mul(f) <= d {
        if d.is_multiple_of(f * f) {
            return false;
        }
        f += 1;
    }
    true
}

/// Splits `d` into `(f, d')` with `d = f²·d'` and `d'` square-free.
pub(crate) fn square_free_split(mut d: u64) -> (u64, u64) {
    let mut outside = 1u64;
    let mut f = 2u64;
    while f.saturating_mul(f) <= d {
        while d.is_multiple_of(f * f) {
            d /= f * f;
            outside *= f;
        }
        f += 1;
    }
    (outside, d)
}

impl QuadraticIrrational {
    pub fn new(p: impl Into<BigInt>, s: impl Into<BigInt>, d: u64, r: impl Into<BigInt>) -> Result<Self> {
        let (mut p, mut s, mut r) = (p.into(), s.into(), r.into());
        if d < 2 || !is_square_free(d) {
            return Err(Error::InvalidValue(format!(
                "sqrt {d}: radicand must be square-free and at least 2"
            )));
        }
        if s.is_zero() {
            return Err(Error::InvalidValue(
                "surd coefficient is zero; the value is rational".into(),
            ));
        }
        if r.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if r.is_negative() {
            p = -p;
            s = -s;
            r = -r;
        }
        let g = p.gcd(&s).gcd(&r);
        if !g.is_one() {
            p /= &g;
            s /= &g;
            r /= &g;
        }
        Ok(QuadraticIrrational { p, s, d, r })
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn s(&self) -> &BigInt {
        &self.s
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn r(&self) -> &BigInt {
        &self.r
    }

    pub fn is_positive(&self) -> bool {
        surd_sign(&self.p, &self.s, self.d) == Ordering::Greater
    }

    pub fn floor(&self) -> BigInt {
        floor_surd(&self.p, &self.s, self.d, &self.r)
    }

    pub fn neg(&self) -> QuadraticIrrational {
        QuadraticIrrational {
            p: -&self.p,
            s: -&self.s,
            d: self.d,
            r: self.r.clone(),
        }
    }

    /// Enclosure `[lo, lo + 1]` of `s·√d·10^digits`, returned as `lo`.
    pub(crate) fn scaled_surd_floor(&self, digits: u32) -> BigInt {
        let scale = BigInt::from(10u32).pow(digits);
        let radicand = &self.s * &self.s * BigInt::from(self.d) * &scale * &scale;
        let root = radicand.sqrt();
        if self.s.is_positive() {
            root
        } else {
            -root - 1
        }
    }

    pub fn to_f64(&self) -> f64 {
        let p = self.p.to_f64().unwrap_or(f64::NAN);
        let s = self.s.to_f64().unwrap_or(f64::NAN);
        let r = self.r.to_f64().unwrap_or(f64::NAN);
        (p + s * (self.d as f64).sqrt()) / r
    }
}

/// Sign of `p + s·√d` for square-free `d ≥ 2`, decided by squaring.
pub(crate) fn surd_sign(p: &BigInt, s: &BigInt, d: u64) -> Ordering {
    let ps = p.sign();
    let ss = s.sign();
    use num_bigint::Sign::*;
    match (ps, ss) {
        (_, NoSign) => p.cmp(&BigInt::zero()),
        (NoSign, _) => s.cmp(&BigInt::zero()),
        (Plus, Plus) => Ordering::Greater,
        (Minus, Minus) => Ordering::Less,
        (Plus, Minus) => (p * p).cmp(&(s * s * BigInt::from(d))),
        (Minus, Plus) => (s * s * BigInt::from(d)).cmp(&(p * p)),
    }
}

/// `floor((p + s·√d) / r)` for `r > 0`, `s ≠ 0`, `d` not a perfect square.
pub(crate) fn floor_surd(p: &BigInt, s: &BigInt, d: u64, r: &BigInt) -> BigInt {
    if let (Some(p), Some(s), Some(r)) = (p.to_i64(), s.to_i64(), r.to_i64()) {
        if let Some(v) = floor_surd_small(p, s, d, r) {
            return BigInt::from(v);
        }
    }
    let radicand = s * s * BigInt::from(d);
    let root = radicand.sqrt();
    // √(s²d) is irrational, so floor(s√d) is root or -root-1.
    let t = if s.is_positive() { root } else { -root - 1 };
    (p + t).div_floor(r)
}

fn floor_surd_small(p: i64, s: i64, d: u64, r: i64) -> Option<i128> {
    floor_surd_i128(p as i128, s as i128, d, r as i128)
}

/// `floor((p + s·√d) / r)` in machine integers, `None` on overflow.
pub(crate) fn floor_surd_i128(p: i128, s: i128, d: u64, r: i128) -> Option<i128> {
    let s2 = s.unsigned_abs().checked_mul(s.unsigned_abs())?;
    let radicand = s2.checked_mul(d as u128)?;
    let root = i128::try_from(radicand.sqrt()).ok()?;
    let t = if s > 0 { root } else { -root - 1 };
    Some(Integer::div_floor(&p.checked_add(t)?, &r))
}

impl fmt::Display for QuadraticIrrational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.s.is_negative() { '-' } else { '+' };
        write!(f, "({}{}{}*sqrt {})/{}", self.p, sign, self.s.abs(), self.d, self.r)
    }
}
