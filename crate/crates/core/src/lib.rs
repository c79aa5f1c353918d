//! Exact Beatty sequences and characteristic words.
//!
//! * [`exactreal`]: rationals, quadratic irrationals and certified decimal
//!   intervals, with circle arcs on ℝ/ℤ.
//! * [`beatty`]: terms, arc-based membership, counting and offset normalization
//!   of `B(α, α′) = (⌊(n − α′)/α⌋)_{n ≥ 1}`.
//! * [`fraenkel`]: when two Beatty sequences tile ℕ (or ℤ), decided exactly and
//!   cross-checked by finite-window oracles.
//! * [`contfrac`]: continued fractions, continuants and Ostrowski digits.
//! * [`sturmian`]: characteristic words and their factorization into
//!   continuant-length prefixes.
//! * [`cli`] and [`svg`]: the command-line front end.

pub mod beatty;
pub mod cli;
pub mod contfrac;
pub mod error;
pub mod exactreal;
pub mod fraenkel;
pub mod sturmian;
pub mod svg;

pub use error::{Error, Result};
pub use exactreal::{Arc, CirclePoint, DecimalInterval, QuadraticIrrational, Rational, RealValue, Truth};
