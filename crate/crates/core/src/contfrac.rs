//! Continued fractions `[0; a_1, a_2, …]`, their continuants, and the
//! Ostrowski (greedy) expansion of an integer.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactreal::{square_free_split, QuadraticIrrational, Rational, RealValue};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CfKind {
    FiniteExact,
    PeriodicExact { preperiod_len: usize, period_len: usize },
    Truncated,
}

/// Partial quotients `a_1, a_2, …` of a number in `(0, 1)`.
///
/// Periodic expansions store the preperiod followed by one period and index
/// into it cyclically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CFExpansion {
    quotients: Vec<u64>,
    kind: CfKind,
    value: Option<RealValue>,
}

fn checked_quotient(x: BigInt) -> Result<u64> {
    x.to_u64()
        .filter(|&a| a >= 1)
        .ok_or(Error::Overflow("partial quotient"))
}

/// `[0; prefix…, tail]` for a positive real `tail`.
pub fn with_tail(prefix: &[u64], tail: &RealValue) -> Result<RealValue> {
    // Convergent recurrences seeded with p_{-1}=1, q_{-1}=0, p_0=0, q_0=1.
    let (mut p_prev, mut p) = (BigInt::one(), BigInt::zero());
    let (mut q_prev, mut q) = (BigInt::zero(), BigInt::one());
    for &a in prefix {
        let a = BigInt::from(a);
        let p_next = &a * &p + &p_prev;
        let q_next = &a * &q + &q_prev;
        p_prev = std::mem::replace(&mut p, p_next);
        q_prev = std::mem::replace(&mut q, q_next);
    }
    let big = |x: BigInt| RealValue::Rational(Rational::from_integer(x));
    let num = tail.try_mul(&big(p))?.try_add(&big(p_prev))?;
    let den = tail.try_mul(&big(q))?.try_add(&big(q_prev))?;
    num.try_div(&den)
}

impl CFExpansion {
    /// A finite expansion `[0; a_1, …, a_n]`; a trailing 1 is folded into its
    /// predecessor so the stored form is canonical.
    pub fn finite(mut quotients: Vec<u64>) -> Result<Self> {
        if quotients.is_empty() || quotients.contains(&0) {
            return Err(Error::InvalidValue(
                "partial quotients must be positive and nonempty".into(),
            ));
        }
        while quotients.len() > 1 && *quotients.last().expect("nonempty") == 1 {
            quotients.pop();
            *quotients.last_mut().expect("nonempty") += 1;
        }
        if quotients == [1] {
            return Err(Error::DensityOutOfRange("[0; 1] equals 1".into()));
        }
        let (last, init) = quotients.split_last().expect("nonempty");
        let value = with_tail(init, &RealValue::integer(*last as i64))?;
        Ok(CFExpansion {
            quotients,
            kind: CfKind::FiniteExact,
            value: Some(value),
        })
    }

    /// `[0; preperiod…, period, period, …]`.
    pub fn periodic(preperiod: Vec<u64>, period: Vec<u64>) -> Result<Self> {
        if period.is_empty() || preperiod.contains(&0) || period.contains(&0) {
            return Err(Error::InvalidValue(
                "partial quotients must be positive; period nonempty".into(),
            ));
        }
        // y = [b_1; b_2, …, b_k, y] solves Q_k y² + (Q_{k-1} − P_k) y − P_{k-1} = 0.
        let (mut hp, mut h) = (BigInt::zero(), BigInt::one());
        let (mut kp, mut k) = (BigInt::one(), BigInt::zero());
        for &b in &period {
            let b = BigInt::from(b);
            let hn = &b * &h + &hp;
            let kn = &b * &k + &kp;
            hp = std::mem::replace(&mut h, hn);
            kp = std::mem::replace(&mut k, kn);
        }
        let lin = &kp - &h;
        let disc = &lin * &lin + BigInt::from(4) * &k * &hp;
        let disc = disc
            .to_u64()
            .ok_or(Error::Overflow("periodic expansion discriminant"))?;
        let (outside, d) = square_free_split(disc);
        let tail = if d == 1 {
            RealValue::Rational(Rational::new(-lin + BigInt::from(outside), BigInt::from(2) * &k)?)
        } else {
            RealValue::Quadratic(QuadraticIrrational::new(-lin, outside, d, BigInt::from(2) * &k)?)
        };
        let value = with_tail(&preperiod, &tail)?;
        let preperiod_len = preperiod.len();
        let period_len = period.len();
        let mut quotients = preperiod;
        quotients.extend(period);
        Ok(CFExpansion {
            quotients,
            kind: CfKind::PeriodicExact {
                preperiod_len,
                period_len,
            },
            value: Some(value),
        })
    }

    pub fn kind(&self) -> CfKind {
        self.kind
    }

    /// The number this expansion was computed from or describes exactly.
    pub fn value(&self) -> Option<&RealValue> {
        self.value.as_ref()
    }

    /// The stored quotients: all of them for finite expansions, preperiod
    /// plus one period for periodic ones.
    pub fn stored_quotients(&self) -> &[u64] {
        &self.quotients
    }

    /// Number of available quotients; `None` for periodic (unbounded) expansions.
    pub fn available(&self) -> Option<usize> {
        match self.kind {
            CfKind::PeriodicExact { .. } => None,
            _ => Some(self.quotients.len()),
        }
    }

    /// `a_i` for `i ≥ 1`.
    pub fn quotient(&self, i: usize) -> Option<u64> {
        if i == 0 {
            return None;
        }
        match self.kind {
            CfKind::PeriodicExact {
                preperiod_len,
                period_len,
            } => {
                let j = i - 1;
                if j < preperiod_len {
                    Some(self.quotients[j])
                } else {
                    Some(self.quotients[preperiod_len + (j - preperiod_len) % period_len])
                }
            }
            _ => self.quotients.get(i - 1).copied(),
        }
    }

    fn require(&self, i: usize) -> Result<u64> {
        self.quotient(i).ok_or(Error::InsufficientQuotients {
            needed: i,
            available: self.quotients.len(),
        })
    }

    /// Continuants `q_0 … q_count`.
    pub fn continuants(&self, count: usize) -> Result<Continuants> {
        let mut q = Vec::with_capacity(count + 1);
        q.push(1u64);
        for i in 1..=count {
            let a = self.require(i)?;
            let prev2 = if i >= 2 { q[i - 2] } else { 0 };
            let next = a
                .checked_mul(q[i - 1])
                .and_then(|x| x.checked_add(prev2))
                .ok_or(Error::Overflow("continuant"))?;
            q.push(next);
        }
        Ok(Continuants { q })
    }

    /// Continuants `q_0, q_1, …` up to and including the first one exceeding
    /// `limit`, or as far as the expansion goes.
    pub fn continuants_through(&self, limit: u64) -> Result<Continuants> {
        let mut q = vec![1u64];
        let mut i = 1;
        while *q.last().expect("nonempty") <= limit {
            let Some(a) = self.quotient(i) else { break };
            let prev2 = if i >= 2 { q[i - 2] } else { 0 };
            let next = a
                .checked_mul(q[i - 1])
                .and_then(|x| x.checked_add(prev2))
                .ok_or(Error::Overflow("continuant"))?;
            q.push(next);
            i += 1;
        }
        Ok(Continuants { q })
    }

    /// Convergent numerators `p_0 … p_count` (`p_0 = 0`, `p_1 = 1`).
    pub fn numerators(&self, count: usize) -> Result<Vec<u64>> {
        let mut p = vec![0u64];
        for i in 1..=count {
            let a = self.require(i)?;
            let next = if i == 1 {
                1
            } else {
                a.checked_mul(p[i - 1])
                    .and_then(|x| x.checked_add(p[i - 2]))
                    .ok_or(Error::Overflow("convergent numerator"))?
            };
            p.push(next);
        }
        Ok(p)
    }
}

impl fmt::Display for CFExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[u64]| xs.iter().map(u64::to_string).collect::<Vec<_>>().join(", ");
        match self.kind {
            CfKind::FiniteExact => write!(f, "[0; {}]", join(&self.quotients)),
            CfKind::Truncated => write!(f, "[0; {}, ...]", join(&self.quotients)),
            CfKind::PeriodicExact { preperiod_len, .. } => {
                let (pre, per) = self.quotients.split_at(preperiod_len);
                if pre.is_empty() {
                    write!(f, "[0; ({})*]", join(per))
                } else {
                    write!(f, "[0; {}, ({})*]", join(pre), join(per))
                }
            }
        }
    }
}

fn require_unit_interval(x: &RealValue) -> Result<()> {
    if x.sign()? != Ordering::Greater || x.compare(&RealValue::integer(1))? != Ordering::Less {
        return Err(Error::DensityOutOfRange(format!("{x} is not strictly between 0 and 1")));
    }
    Ok(())
}

/// `floor((P + √D)/Q)` for nonsquare `D` and `Q ≠ 0`.
fn surd_floor(p: &BigInt, root_floor: &BigInt, q: &BigInt) -> BigInt {
    if q.is_positive() {
        (p + root_floor).div_floor(q)
    } else {
        let sum: BigInt = p + root_floor;
        -(Integer::div_floor(&sum, &-q) + BigInt::one())
    }
}

/// Continued fraction of `x ∈ (0, 1)`: finite for rationals, periodic for
/// quadratic irrationals whose period shows up within `max_terms` quotients.
pub fn cf_expand(x: &RealValue, max_terms: usize) -> Result<CFExpansion> {
    if max_terms == 0 {
        return Err(Error::InvalidArgument("max_terms must be positive".into()));
    }
    if !x.is_exact() {
        return Err(Error::IntervalNotSupported);
    }
    require_unit_interval(x)?;
    match x {
        RealValue::Rational(r) => {
            let (mut n, mut d) = (r.numer().clone(), r.denom().clone());
            let mut quotients = Vec::new();
            while !n.is_zero() {
                if quotients.len() == max_terms {
                    return Ok(CFExpansion {
                        quotients,
                        kind: CfKind::Truncated,
                        value: Some(x.clone()),
                    });
                }
                let (a, rem) = d.div_rem(&n);
                quotients.push(checked_quotient(a)?);
                d = std::mem::replace(&mut n, rem);
            }
            Ok(CFExpansion {
                quotients,
                kind: CfKind::FiniteExact,
                value: Some(x.clone()),
            })
        }
        RealValue::Quadratic(q) => {
            // Rewrite x as (P + √D)/Q with Q | D − P².
            let sign = if q.s().is_negative() {
                -BigInt::one()
            } else {
                BigInt::one()
            };
            let p_t = q.p() * &sign;
            let r_t = q.r() * &sign;
            let s_abs = q.s().abs();
            let mut big_p = &p_t * r_t.abs();
            let mut big_q = &r_t * r_t.abs();
            let big_d = &s_abs * &s_abs * BigInt::from(q.d()) * &r_t * &r_t;
            let root = big_d.sqrt();

            let mut a = surd_floor(&big_p, &root, &big_q);
            debug_assert!(a.is_zero());
            let mut seen: HashMap<(BigInt, BigInt), usize> = HashMap::new();
            let mut quotients = Vec::new();
            loop {
                let next_p = &a * &big_q - &big_p;
                let next_q = (&big_d - &next_p * &next_p) / &big_q;
                big_p = next_p;
                big_q = next_q;
                let index = quotients.len();
                if let Some(&start) = seen.get(&(big_p.clone(), big_q.clone())) {
                    return Ok(CFExpansion {
                        quotients,
                        kind: CfKind::PeriodicExact {
                            preperiod_len: start,
                            period_len: index - start,
                        },
                        value: Some(x.clone()),
                    });
                }
                if index == max_terms {
                    return Ok(CFExpansion {
                        quotients,
                        kind: CfKind::Truncated,
                        value: Some(x.clone()),
                    });
                }
                seen.insert((big_p.clone(), big_q.clone()), index);
                a = surd_floor(&big_p, &root, &big_q);
                quotients.push(checked_quotient(a.clone())?);
            }
        }
        RealValue::Interval(_) => Err(Error::IntervalNotSupported),
    }
}

/// The continuants `q_0, q_1, …` of an expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Continuants {
    q: Vec<u64>,
}

impl Continuants {
    pub fn as_slice(&self) -> &[u64] {
        &self.q
    }

    pub fn get(&self, i: usize) -> Option<u64> {
        self.q.get(i).copied()
    }

    pub fn len(&self) -> usize {
        self.q.len()
    }

    pub fn is_empty(&self) -> bool {
        self.q.is_empty()
    }

    /// Largest index `i` with `q_i < m`, preferring the larger index on ties.
    pub fn largest_below(&self, m: u64) -> Option<usize> {
        self.q.iter().rposition(|&q| q < m)
    }
}

pub fn continuants(cf: &CFExpansion, count: usize) -> Result<Continuants> {
    cf.continuants(count)
}

/// Ostrowski digits `z_0, z_1, …, z_t`, least significant first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OstrowskiDigits {
    digits: Vec<u64>,
}

impl OstrowskiDigits {
    /// Trailing zeros are dropped so the last stored digit is the leading one.
    pub fn new(mut digits: Vec<u64>) -> Self {
        while digits.last() == Some(&0) {
            digits.pop();
        }
        OstrowskiDigits { digits }
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn digit(&self, i: usize) -> u64 {
        self.digits.get(i).copied().unwrap_or(0)
    }

    /// Index of the leading nonzero digit.
    pub fn t(&self) -> Option<usize> {
        self.digits.len().checked_sub(1)
    }

    /// Nonzero `(index, digit)` pairs, highest index first.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.digits
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &z)| z != 0)
            .map(|(i, &z)| (i, z))
    }

    /// `Σ z_i·q_i`.
    pub fn value(&self, cf: &CFExpansion) -> Result<u64> {
        let q = cf.continuants(self.digits.len().saturating_sub(1))?;
        self.digits
            .iter()
            .zip(q.as_slice())
            .try_fold(0u64, |acc, (&z, &qi)| {
                z.checked_mul(qi).and_then(|x| x.checked_add(acc))
            })
            .ok_or(Error::Overflow("Ostrowski value"))
    }
}

impl fmt::Display for OstrowskiDigits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        if self.digits.is_empty() {
            f.write_str("0")?;
        }
        for &z in self.digits.iter().rev() {
            if z > 9 {
                write!(f, "[{z}]")?;
            } else {
                write!(f, "{z}")?;
            }
        }
        f.write_str(")_\u{3b1}")
    }
}

/// Greedy expansion of `m ≥ 1` over the continuants of `cf`.
pub fn ostrowski_expand(m: u64, cf: &CFExpansion) -> Result<OstrowskiDigits> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    let q = cf.continuants_through(m)?;
    if q.as_slice().last().is_none_or(|&top| top <= m) {
        return Err(Error::InsufficientQuotients {
            needed: q.len(),
            available: cf.quotients.len(),
        });
    }
    ostrowski_with(m, &q)
}

/// Greedy expansion given continuants whose last entry exceeds `m`.
pub fn ostrowski_with(m: u64, q: &Continuants) -> Result<OstrowskiDigits> {
    let top = q
        .as_slice()
        .iter()
        .rposition(|&qi| qi <= m)
        .ok_or_else(|| Error::InvalidArgument(format!("{m} is below every continuant")))?;
    let mut digits = vec![0u64; top + 1];
    let mut rem = m;
    // Walking indices downward uses q_1 before q_0 when both are 1.
    for i in (0..=top).rev() {
        let qi = q.as_slice()[i];
        digits[i] = rem / qi;
        rem -= digits[i] * qi;
    }
    debug_assert_eq!(rem, 0);
    Ok(OstrowskiDigits::new(digits))
}

/// `0 ≤ z_i ≤ a_i` for `i ≥ 1`, `z_0 ≤ a_1 − 1`, and `z_i = a_i ⇒ z_{i−1} = 0`.
pub fn validate_ostrowski(digits: &OstrowskiDigits, cf: &CFExpansion) -> bool {
    for (i, &z) in digits.digits().iter().enumerate() {
        if i == 0 {
            match cf.quotient(1) {
                Some(a1) if z < a1 => {}
                Some(_) => return false,
                None => return z == 0,
            }
            continue;
        }
        let Some(a) = cf.quotient(i) else { return false };
        if z > a {
            return false;
        }
        if z == a && digits.digit(i - 1) != 0 {
            return false;
        }
    }
    true
}

/// `‖x‖ = min{x − ⌊x⌋, ⌈x⌉ − x}`.
pub fn nearest_int_distance(x: &RealValue) -> Result<RealValue> {
    let f = x.frac()?;
    let g = RealValue::integer(1).try_sub(&f)?;
    Ok(if f.compare(&g)? == Ordering::Greater { g } else { f })
}

/// Exhaustively checks `‖sα‖ > ‖q_t α‖` for `0 < |s| < q_{t+1}`, `|s| ≠ q_t`.
pub fn check_spacing(cf: &CFExpansion, t: usize) -> Result<bool> {
    let alpha = cf.value().ok_or(Error::RequiresIrrational)?;
    if alpha.as_quadratic().is_none() {
        return Err(Error::RequiresIrrational);
    }
    let q = cf.continuants(t + 1)?;
    let (qt, qnext) = (q.as_slice()[t], q.as_slice()[t + 1]);
    let reference = nearest_int_distance(&alpha.mul_int(qt as i64))?;
    for s in 1..qnext {
        if s == qt {
            continue;
        }
        // ‖−sα‖ = ‖sα‖, so positive s cover both signs.
        let d = nearest_int_distance(&alpha.mul_int(s as i64))?;
        if d.compare(&reference)? != Ordering::Greater {
            return Ok(false);
        }
    }
    Ok(true)
}
