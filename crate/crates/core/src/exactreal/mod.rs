//! Exact comparisons, floors, fractional parts and circle arcs over
//! rationals, quadratic irrationals and certified decimal intervals.

mod circle;
mod interval;
mod literal;
mod quadratic;
mod rational;
mod real;

pub use circle::{arc_contains, in_order, Arc, CirclePoint};
pub use interval::{DecimalInterval, DEFAULT_PRECISION};
pub use quadratic::QuadraticIrrational;
pub use rational::Rational;
pub use real::{RealValue, Truth};

pub(crate) use quadratic::{floor_surd_i128, square_free_split};

use num_bigint::BigInt;
use std::cmp::Ordering;

use crate::error::Result;

pub fn floor(x: &RealValue) -> Result<BigInt> {
    x.floor()
}

pub fn frac(x: &RealValue) -> Result<RealValue> {
    x.frac()
}

pub fn compare(x: &RealValue, y: &RealValue) -> Result<Ordering> {
    x.compare(y)
}

pub fn is_integer(x: &RealValue) -> Truth {
    x.is_integer()
}
