use std::cmp::Ordering;
use std::fmt;

use super::real::{RealValue, Truth};
use crate::error::{Error, Result};

/// A real number read modulo 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CirclePoint(pub RealValue);

impl CirclePoint {
    pub fn new(value: RealValue) -> Self {
        CirclePoint(value)
    }

    pub fn value(&self) -> &RealValue {
        &self.0
    }

    /// `x ≡ y`, i.e. `x - y ∈ ℤ`.
    pub fn congruent(&self, other: &CirclePoint) -> Result<Truth> {
        Ok(self.0.try_sub(&other.0)?.is_integer())
    }

    fn congruent_certain(&self, other: &CirclePoint) -> Result<bool> {
        match self.congruent(other)? {
            Truth::Yes => Ok(true),
            Truth::No => Ok(false),
            Truth::Unknown => Err(Error::precision(format!(
                "cannot decide whether {} and {} are congruent mod 1",
                self.0, other.0
            ))),
        }
    }
}

impl From<RealValue> for CirclePoint {
    fn from(v: RealValue) -> Self {
        CirclePoint(v)
    }
}

/// Whether `x` lies on the counter-clockwise arc from `w` to `y`.
///
/// Points congruent to either endpoint are in order.
pub fn in_order(w: &CirclePoint, x: &CirclePoint, y: &CirclePoint) -> Result<bool> {
    if x.congruent_certain(w)? || x.congruent_certain(y)? {
        return Ok(true);
    }
    let u = x.0.try_sub(&w.0)?.frac()?;
    let v = y.0.try_sub(&w.0)?.frac()?;
    Ok(u.compare(&v)? != Ordering::Greater)
}

/// An arc of ℝ/ℤ with open or closed endpoints; empty when the endpoints coincide.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arc {
    pub left: CirclePoint,
    pub right: CirclePoint,
    pub left_closed: bool,
    pub right_closed: bool,
}

impl Arc {
    pub fn new(left: CirclePoint, right: CirclePoint, left_closed: bool, right_closed: bool) -> Self {
        Arc {
            left,
            right,
            left_closed,
            right_closed,
        }
    }

    /// `(w, y]`
    pub fn open_closed(w: RealValue, y: RealValue) -> Self {
        Arc::new(w.into(), y.into(), false, true)
    }

    /// `[w, y)`
    pub fn closed_open(w: RealValue, y: RealValue) -> Self {
        Arc::new(w.into(), y.into(), true, false)
    }

    /// `(w, y)`
    pub fn open(w: RealValue, y: RealValue) -> Self {
        Arc::new(w.into(), y.into(), false, false)
    }

    /// `[w, y]`
    pub fn closed(w: RealValue, y: RealValue) -> Self {
        Arc::new(w.into(), y.into(), true, true)
    }

    pub fn contains(&self, x: &CirclePoint) -> Result<bool> {
        if self.left.congruent_certain(&self.right)? {
            return Ok(false);
        }
        if x.congruent_certain(&self.left)? {
            return Ok(self.left_closed);
        }
        if x.congruent_certain(&self.right)? {
            return Ok(self.right_closed);
        }
        in_order(&self.left, x, &self.right)
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}, {}{}",
            if self.left_closed { '[' } else { '(' },
            self.left.0,
            self.right.0,
            if self.right_closed { ']' } else { ')' }
        )
    }
}

/// Membership of `x` in `arc`.
pub fn arc_contains(arc: &Arc, x: &CirclePoint) -> Result<bool> {
    arc.contains(x)
}
