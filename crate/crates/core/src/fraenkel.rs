//! When `B(α, α′)` and `B(β, β′)` tile ℕ, or their two-sided versions tile ℤ:
//! the conditions decided exactly, plus finite-window oracles.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::beatty::{to_i64, BeattySpec, TermEvaluator};
use crate::error::{Error, Result};
use crate::exactreal::{Rational, RealValue, Truth};

/// The two sequences under test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TilePair {
    pub a: BeattySpec,
    pub b: BeattySpec,
}

impl TilePair {
    pub fn new(a: BeattySpec, b: BeattySpec) -> Self {
        TilePair { a, b }
    }

    /// Parses `α, α′, β, β′`.
    pub fn parse(alpha: &str, alpha_offset: &str, beta: &str, beta_offset: &str) -> Result<Self> {
        Ok(TilePair {
            a: BeattySpec::parse(alpha, alpha_offset)?,
            b: BeattySpec::parse(beta, beta_offset)?,
        })
    }

    pub fn swapped(&self) -> TilePair {
        TilePair {
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }
}

/// Outcome of a condition check.
///
/// `failed` lists the clauses that certainly fail; `undecided` lists those an
/// interval input left open. `witness` is a `k` making `kα + α′` an integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub tiles: Truth,
    pub failed: Vec<&'static str>,
    pub undecided: Vec<&'static str>,
    pub witness: Option<BigInt>,
}

impl Verdict {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("verdicts serialize")
    }
}

pub(crate) fn truth_name(t: Truth) -> &'static str {
    match t {
        Truth::Yes => "yes",
        Truth::No => "no",
        Truth::Unknown => "unknown",
    }
}

/// Integers that fit `i64` become JSON numbers, larger ones strings.
pub(crate) fn json_integer(k: &BigInt) -> serde_json::Value {
    match k.to_i64() {
        Some(v) => v.into(),
        None => k.to_string().into(),
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(None)?;
        map.serialize_entry("tiles", truth_name(self.tiles))?;
        map.serialize_entry("failed", &self.failed)?;
        if let Some(k) = &self.witness {
            map.serialize_entry("witness", &json_integer(k))?;
        }
        if !self.undecided.is_empty() {
            map.serialize_entry("undecided", &self.undecided)?;
        }
        map.end()
    }
}

#[derive(Default)]
struct Tally {
    failed: Vec<&'static str>,
    undecided: Vec<&'static str>,
    witness: Option<BigInt>,
}

impl Tally {
    fn record(&mut self, id: &'static str, holds: Truth) {
        match holds {
            Truth::Yes => {}
            Truth::No => self.failed.push(id),
            Truth::Unknown => self.undecided.push(id),
        }
    }

    fn verdict(self) -> Verdict {
        let tiles = if !self.failed.is_empty() {
            Truth::No
        } else if !self.undecided.is_empty() {
            Truth::Unknown
        } else {
            Truth::Yes
        };
        Verdict {
            tiles,
            failed: self.failed,
            undecided: self.undecided,
            witness: self.witness,
        }
    }
}

/// Turns a comparison that an interval could not settle into `Unknown`.
fn settle(r: Result<bool>) -> Result<Truth> {
    match r {
        Ok(b) => Ok(Truth::from_bool(b)),
        Err(Error::PrecisionExhausted(_)) => Ok(Truth::Unknown),
        Err(e) => Err(e),
    }
}

fn both(x: Truth, y: Truth) -> Truth {
    match (x, y) {
        (Truth::No, _) | (_, Truth::No) => Truth::No,
        (Truth::Yes, Truth::Yes) => Truth::Yes,
        _ => Truth::Unknown,
    }
}

fn cmp(x: &RealValue, y: &RealValue) -> Result<Ordering> {
    x.compare(y)
}

/// Some `k` in the allowed range with `kα + α′ ∈ ℤ`, found exactly.
///
/// Writing `α = (p + s√d)/r` and `α′ = (p′ + s′√d)/r′`, integrality forces
/// `k·s/r + s′/r′ = 0`, so the only candidate is `k = −s′r/(sr′)`.
fn integral_solution(alpha: &RealValue, offset: &RealValue, k_min: Option<i64>) -> Result<Option<BigInt>> {
    let a = alpha.as_quadratic().ok_or(Error::RequiresIrrational)?;
    let k = match offset {
        RealValue::Rational(_) => BigInt::zero(),
        RealValue::Quadratic(o) if o.d() == a.d() => {
            let num = -(o.s() * a.r());
            let den = a.s() * o.r();
            let (k, rem) = num.div_rem(&den);
            if !rem.is_zero() {
                return Ok(None);
            }
            k
        }
        // √d and √d′ are independent over ℚ, so kα + α′ is never rational.
        RealValue::Quadratic(_) => return Ok(None),
        RealValue::Interval(_) => return Err(Error::IntervalNotSupported),
    };
    if k_min.is_some_and(|lo| k < BigInt::from(lo)) {
        return Ok(None);
    }
    let value = match k.to_i64() {
        Some(small) => alpha.mul_int(small).try_add(offset)?,
        None => alpha
            .try_mul(&RealValue::Rational(Rational::from_integer(k.clone())))?
            .try_add(offset)?,
    };
    Ok((value.is_integer() == Truth::Yes).then_some(k))
}

/// `⌈q·x⌉`, or `None` when an interval leaves it open.
fn ceil_scaled(x: &RealValue, q: &BigInt) -> Result<Option<BigInt>> {
    let scaled = x.try_mul(&RealValue::Rational(Rational::from_integer(q.clone())))?;
    match scaled.ceil() {
        Ok(c) => Ok(Some(c)),
        Err(Error::PrecisionExhausted(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Decides whether the pair tiles ℕ.
///
/// Condition ids: `1` (0 < α < 1), `2` (α + β = 1), `3` (0 ≤ α + α′ ≤ 1),
/// `4a` (α′ + β′ = 0) and `4b` (kα + α′ ∉ ℤ for k ≥ 2) when α is irrational,
/// `5a` (1/q ≤ α + α′) and `5b` (⌈qα′⌉ + ⌈qβ′⌉ = 1) when α = a/q.
pub fn check_conditions(pair: &TilePair) -> Result<Verdict> {
    let (alpha, alpha_off) = (pair.a.alpha(), pair.a.offset());
    let (beta, beta_off) = (pair.b.alpha(), pair.b.offset());
    let zero = RealValue::integer(0);
    let one = RealValue::integer(1);
    let mut tally = Tally::default();

    let c1 = both(
        settle(cmp(alpha, &zero).map(|o| o == Ordering::Greater))?,
        settle(cmp(alpha, &one).map(|o| o == Ordering::Less))?,
    );
    tally.record("1", c1);
    let c2 = settle(cmp(alpha, &beta.neg().add_int(1)).map(|o| o == Ordering::Equal))?;
    tally.record("2", c2);

    match alpha {
        RealValue::Rational(a) => {
            let q = a.denom().clone();
            let ca = ceil_scaled(alpha_off, &q)?;
            let cb = ceil_scaled(beta_off, &q)?;
            // Offsets rounded up to denominator q leave every condition unchanged.
            let norm_a = match &ca {
                Some(c) => RealValue::Rational(Rational::new(c.clone(), q.clone())?),
                None => alpha_off.clone(),
            };
            let sum = alpha.try_add(&norm_a)?;
            let c3 = both(
                settle(cmp(&sum, &zero).map(|o| o != Ordering::Less))?,
                settle(cmp(&sum, &one).map(|o| o != Ordering::Greater))?,
            );
            tally.record("3", c3);
            let inv_q = RealValue::Rational(Rational::new(1, q.clone())?);
            tally.record("5a", settle(cmp(&inv_q, &sum).map(|o| o != Ordering::Greater))?);
            let c5b = match (ca, cb) {
                (Some(ca), Some(cb)) => {
                    let holds = &ca + &cb == BigInt::from(1);
                    let reduced = Rational::new(ca + cb, q.clone())? == Rational::new(1, q)?;
                    debug_assert_eq!(holds, reduced, "both forms of 5b must agree");
                    Truth::from_bool(holds)
                }
                _ => Truth::Unknown,
            };
            tally.record("5b", c5b);
        }
        RealValue::Quadratic(_) => {
            let c3 = both(
                settle(cmp(alpha, &alpha_off.neg()).map(|o| o != Ordering::Less))?,
                settle(cmp(alpha, &alpha_off.neg().add_int(1)).map(|o| o != Ordering::Greater))?,
            );
            tally.record("3", c3);
            tally.record(
                "4a",
                settle(cmp(alpha_off, &beta_off.neg()).map(|o| o == Ordering::Equal))?,
            );
            let c4b = match integral_solution(alpha, alpha_off, Some(2)) {
                Ok(Some(k)) => {
                    tally.witness = Some(k);
                    Truth::No
                }
                Ok(None) => Truth::Yes,
                Err(Error::IntervalNotSupported) => Truth::Unknown,
                Err(e) => return Err(e),
            };
            tally.record("4b", c4b);
        }
        RealValue::Interval(_) => {
            let sum = alpha.try_add(alpha_off)?;
            let c3 = both(
                settle(cmp(&sum, &zero).map(|o| o != Ordering::Less))?,
                settle(cmp(&sum, &one).map(|o| o != Ordering::Greater))?,
            );
            tally.record("3", c3);
            // Whether α is rational, and so which of 4 and 5 applies, is unknowable here.
            for id in ["4a", "4b", "5a", "5b"] {
                tally.record(id, Truth::Unknown);
            }
        }
    }
    Ok(tally.verdict())
}

/// Decides whether the two-sided sequences `(⌊(n − α′)/α⌋)_{n ∈ ℤ}` tile ℤ.
///
/// Condition ids: `z1` (α + β = 1), `z2` (α′ + β′ ∈ ℤ) and `z3` (kα + α′ ∉ ℤ
/// for every integer k), the last reporting its witness.
pub fn check_conditions_z(pair: &TilePair) -> Result<Verdict> {
    let (alpha, alpha_off) = (pair.a.alpha(), pair.a.offset());
    let (beta, beta_off) = (pair.b.alpha(), pair.b.offset());
    for v in [alpha, alpha_off, beta, beta_off] {
        if !v.is_exact() {
            return Err(Error::IntervalNotSupported);
        }
    }
    if alpha.as_quadratic().is_none() || beta.as_quadratic().is_none() {
        return Err(Error::RequiresIrrational);
    }
    let mut tally = Tally::default();
    let z1 = cmp(alpha, &beta.neg().add_int(1))? == Ordering::Equal;
    tally.record("z1", Truth::from_bool(z1));
    let z2 = match alpha_off.try_add(beta_off) {
        Ok(sum) => sum.is_integer(),
        Err(Error::IncompatibleSurds(..)) => Truth::No,
        Err(e) => return Err(e),
    };
    tally.record("z2", z2);
    match integral_solution(alpha, alpha_off, None)? {
        Some(k) => {
            tally.witness = Some(k);
            tally.record("z3", Truth::No);
        }
        None => tally.record("z3", Truth::Yes),
    }
    Ok(tally.verdict())
}

/// First violation found by a window oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TilingStatus {
    Tiles,
    DoublyCovered(i64),
    Uncovered(i64),
    /// A term `k ≤ 0`, which cannot occur in a tiling of ℕ.
    NonPositive(i64),
}

/// Result of checking a window `[window_start, window_end]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TilingReport {
    pub window_start: i64,
    pub window_end: i64,
    pub status: TilingStatus,
}

impl TilingReport {
    pub fn tiles(&self) -> bool {
        self.status == TilingStatus::Tiles
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("reports serialize")
    }
}

impl Serialize for TilingReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(None)?;
        if self.window_start != 1 {
            map.serialize_entry("start", &self.window_start)?;
        }
        map.serialize_entry("window", &self.window_end)?;
        let (name, k) = match self.status {
            TilingStatus::Tiles => ("tiles", None),
            TilingStatus::DoublyCovered(k) => ("doubly_covered", Some(k)),
            TilingStatus::Uncovered(k) => ("uncovered", Some(k)),
            TilingStatus::NonPositive(k) => ("non_positive", Some(k)),
        };
        map.serialize_entry("status", name)?;
        if let Some(k) = k {
            map.serialize_entry("k", &k)?;
        }
        map.end()
    }
}

/// Terms of one sequence in index order, which is also ascending order.
struct Stream {
    eval: TermEvaluator,
    n: i64,
    head: i64,
}

impl Stream {
    fn starting_at(spec: &BeattySpec, n: i64) -> Result<Self> {
        let eval = TermEvaluator::new(spec)?;
        let head = eval.term(n)?;
        Ok(Stream { eval, n, head })
    }

    fn advance(&mut self) -> Result<()> {
        self.n += 1;
        self.head = self.eval.term(self.n)?;
        Ok(())
    }
}

/// Merges the two ascending streams and reports the smallest violation in
/// `[start, end]`, assuming neither stream has terms below `start`.
fn merge(mut a: Stream, mut b: Stream, start: i64, end: i64) -> Result<TilingStatus> {
    let mut expected = start;
    loop {
        let s = if a.head <= b.head { &mut a } else { &mut b };
        let v = s.head;
        if v > end {
            return Ok(if expected <= end {
                TilingStatus::Uncovered(expected)
            } else {
                TilingStatus::Tiles
            });
        }
        match v.cmp(&expected) {
            Ordering::Less => return Ok(TilingStatus::DoublyCovered(v)),
            Ordering::Greater => return Ok(TilingStatus::Uncovered(expected)),
            Ordering::Equal => expected += 1,
        }
        s.advance()?;
    }
}

/// Checks that the two sequences tile `[1, window_end]`: every term is
/// positive and each `k` in the window is hit exactly once.
pub fn brute_force_tiling(pair: &TilePair, window_end: i64) -> Result<TilingReport> {
    if window_end < 1 {
        return Err(Error::InvalidArgument(format!(
            "window end {window_end} must be at least 1"
        )));
    }
    let a = Stream::starting_at(&pair.a, 1)?;
    let b = Stream::starting_at(&pair.b, 1)?;
    let lowest = a.head.min(b.head);
    let status = if lowest < 1 {
        TilingStatus::NonPositive(lowest)
    } else {
        merge(a, b, 1, window_end)?
    };
    Ok(TilingReport {
        window_start: 1,
        window_end,
        status,
    })
}

/// Smallest index whose two-sided term is at least `k`: `⌈kα + α′⌉`.
fn first_index_reaching(spec: &BeattySpec, k: i64) -> Result<i64> {
    to_i64(spec.alpha().mul_int(k).try_add(spec.offset())?.ceil()?)
}

/// Checks that the two-sided sequences tile `[start, end]`.
pub fn brute_force_tiling_z(pair: &TilePair, start: i64, end: i64) -> Result<TilingReport> {
    if start > end {
        return Err(Error::InvalidArgument(format!("empty window [{start}, {end}]")));
    }
    let a = Stream::starting_at(&pair.a, first_index_reaching(&pair.a, start)?)?;
    let b = Stream::starting_at(&pair.b, first_index_reaching(&pair.b, start)?)?;
    debug_assert!(a.head >= start && b.head >= start);
    Ok(TilingReport {
        window_start: start,
        window_end: end,
        status: merge(a, b, start, end)?,
    })
}

/// Orders the pair so the first spec has the smaller `(α, α′)`.
pub fn symmetry_normal_form(pair: &TilePair) -> Result<TilePair> {
    let key = cmp(pair.a.alpha(), pair.b.alpha())?.then(cmp(pair.a.offset(), pair.b.offset())?);
    Ok(if key == Ordering::Greater {
        pair.swapped()
    } else {
        pair.clone()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(a: &str, ao: &str, b: &str, bo: &str) -> TilePair {
        TilePair::parse(a, ao, b, bo).unwrap()
    }

    const THREE_MINUS_E: &str = "~0.281718171540954764639712528647337502242752906300040425033032:3-e";
    const E_MINUS_TWO: &str = "~0.718281828459045235360287471352662497757247093699959574966968:e-2";

    fn golden_pair(ao: &str, bo: &str) -> TilePair {
        pair("(-1+1*sqrt 5)/2", ao, "(3-1*sqrt 5)/2", bo)
    }

    #[test]
    fn verdict_examples() {
        let v = check_conditions(&pair("1/2", "0", "1/2", "1/2")).unwrap();
        assert_eq!(v.tiles, Truth::Yes);
        assert!(v.failed.is_empty());
        assert_eq!(check_conditions(&golden_pair("0", "0")).unwrap().tiles, Truth::Yes);
        let v = check_conditions(&pair("1/2", "0", "1/2", "0")).unwrap();
        assert_eq!(v.tiles, Truth::No);
        assert_eq!(v.failed, vec!["5b"]);
        assert_eq!(v.to_json().to_string(), r#"{"tiles":"no","failed":["5b"]}"#);
    }

    #[test]
    fn witness_for_4b() {
        // α′ = 1 − 3α makes 3α + α′ = 1
        let v = check_conditions(&golden_pair("(5-3*sqrt 5)/2", "(-5+3*sqrt 5)/2")).unwrap();
        assert_eq!(v.tiles, Truth::No);
        assert!(v.failed.contains(&"4b"));
        assert_eq!(v.witness, Some(BigInt::from(3)));
    }

    #[test]
    fn interval_inputs_give_unknown() {
        let v = check_conditions(&pair(THREE_MINUS_E, "2/5", E_MINUS_TWO, "-2/5")).unwrap();
        assert_eq!(v.tiles, Truth::Unknown);
        assert!(v.failed.is_empty());
    }

    #[test]
    fn z_examples() {
        assert_eq!(
            check_conditions_z(&golden_pair("3/10", "-3/10")).unwrap().tiles,
            Truth::Yes
        );
        let v = check_conditions_z(&golden_pair("0", "0")).unwrap();
        assert_eq!(v.failed, vec!["z3"]);
        assert_eq!(v.witness, Some(BigInt::zero()));
        let root2 = pair("-1+1*sqrt 2", "1/3", "2-1*sqrt 2", "2/3");
        assert_eq!(check_conditions_z(&root2).unwrap().tiles, Truth::Yes);
        assert_eq!(
            check_conditions_z(&pair("1/2", "0", "1/2", "1/2")),
            Err(Error::RequiresIrrational)
        );
    }

    #[test]
    fn oracle_examples() {
        let fig = pair(THREE_MINUS_E, "2/5", E_MINUS_TWO, "-2/5");
        assert!(brute_force_tiling(&fig, 16).unwrap().tiles());
        let evens = brute_force_tiling(&pair("1/2", "0", "1/2", "0"), 10).unwrap();
        assert_eq!(evens.status, TilingStatus::Uncovered(1));
        assert_eq!(
            evens.to_json().to_string(),
            r#"{"window":10,"status":"uncovered","k":1}"#
        );
        let thirds = pair("2/3", "0", "1/3", "1/3");
        let report = brute_force_tiling(&thirds, 100).unwrap();
        assert_eq!(report.tiles(), check_conditions(&thirds).unwrap().tiles == Truth::Yes);
    }

    #[test]
    fn oracle_flags_nonpositive_terms() {
        // α + α′ > 1 puts ⌊(1 − α′)/α⌋ = 0 in the sequence
        let p = pair("1/2", "3/4", "1/2", "-1/4");
        assert_eq!(brute_force_tiling(&p, 10).unwrap().status, TilingStatus::NonPositive(0));
        assert_eq!(check_conditions(&p).unwrap().tiles, Truth::No);
    }

    #[test]
    fn z_oracle_examples() {
        assert!(brute_force_tiling_z(&golden_pair("3/10", "-3/10"), -500, 500)
            .unwrap()
            .tiles());
        let report = brute_force_tiling_z(&golden_pair("0", "0"), -500, 500).unwrap();
        // (k + 1)α ∈ ℤ at k = −1 leaves −1 uncovered; kα ∈ ℤ at k = 0 covers 0 twice
        assert_eq!(report.status, TilingStatus::Uncovered(-1));
        let report = brute_force_tiling_z(&golden_pair("0", "0"), 0, 500).unwrap();
        assert_eq!(report.status, TilingStatus::DoublyCovered(0));
        let root2 = pair("-1+1*sqrt 2", "1/3", "2-1*sqrt 2", "2/3");
        assert!(brute_force_tiling_z(&root2, -500, 500).unwrap().tiles());
    }

    #[test]
    fn symmetry_examples() {
        for p in [
            pair("1/2", "0", "1/2", "1/2"),
            golden_pair("0", "0"),
            pair("2/3", "0", "1/3", "1/3"),
        ] {
            let n = symmetry_normal_form(&p).unwrap();
            assert_eq!(check_conditions(&n).unwrap().tiles, check_conditions(&p).unwrap().tiles);
            assert_eq!(
                check_conditions(&p.swapped()).unwrap().tiles,
                check_conditions(&p).unwrap().tiles
            );
            assert_eq!(symmetry_normal_form(&p.swapped()).unwrap(), n);
        }
    }
}
