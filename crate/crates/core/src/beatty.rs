//! Beatty sequences `B(α, α′) = (⌊(n − α′)/α⌋)_{n ≥ 1}`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exactreal::{floor_surd_i128, Arc, CirclePoint, Rational, RealValue};

pub(crate) fn to_i64(x: BigInt) -> Result<i64> {
    x.to_i64().ok_or(Error::Overflow("integer result"))
}

/// A Beatty sequence given by its density `alpha > 0` and offset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BeattySpec {
    alpha: RealValue,
    offset: RealValue,
}

impl BeattySpec {
    pub fn new(alpha: RealValue, offset: RealValue) -> Result<Self> {
        if alpha.sign()? != Ordering::Greater {
            return Err(Error::DensityOutOfRange(format!("density {alpha} is not positive")));
        }
        Ok(BeattySpec { alpha, offset })
    }

    /// Parses both literals.
    pub fn parse(alpha: &str, offset: &str) -> Result<Self> {
        BeattySpec::new(alpha.parse()?, offset.parse()?)
    }

    pub fn alpha(&self) -> &RealValue {
        &self.alpha
    }

    pub fn offset(&self) -> &RealValue {
        &self.offset
    }

    fn require_unit_density(&self) -> Result<()> {
        if self.alpha.compare(&RealValue::integer(1))? != Ordering::Less {
            return Err(Error::DensityOutOfRange(format!(
                "density {} must lie strictly between 0 and 1",
                self.alpha
            )));
        }
        Ok(())
    }

    /// The `n`-th term `⌊(n − α′)/α⌋`.
    pub fn term(&self, n: i64) -> Result<i64> {
        if n < 1 {
            return Err(Error::InvalidArgument(format!("term index {n} must be at least 1")));
        }
        TermEvaluator::new(self)?.term(n)
    }

    /// The arc `(−α−α′, −α′]` that `kα` must hit for `k` to be a member.
    pub fn membership_arc(&self) -> Result<Arc> {
        let right = self.offset.neg();
        let left = right.try_sub(&self.alpha)?;
        Ok(Arc::open_closed(left, right))
    }

    /// Whether `k` occurs in the sequence, decided by the arc criterion:
    /// `kα + α′ > 0` and `kα ∈ (−α−α′, −α′]`. Needs `0 < α < 1`.
    pub fn membership(&self, k: i64) -> Result<bool> {
        MembershipTest::new(self)?.contains(k)
    }

    /// `|B(α, α′) ∩ (−∞, k)| = max{0, ⌈kα + α′⌉ − 1}`.
    pub fn count_below(&self, k: i64) -> Result<u64> {
        let ceiling: BigInt = self.alpha.mul_int(k).try_add(&self.offset)?.ceil()? - 1;
        Ok(ceiling.to_u64().unwrap_or(0))
    }

    /// For `α = a/q`, replaces `α′` by `⌈qα′⌉/q`; the sequence is unchanged.
    pub fn normalize_rational_offset(&self) -> Result<BeattySpec> {
        let alpha = self.alpha.as_rational().ok_or(Error::NotRationalDensity)?;
        let q = alpha.denom().clone();
        let scaled = self
            .offset
            .try_mul(&RealValue::Rational(Rational::from_integer(q.clone())))?;
        let offset = Rational::new(scaled.ceil()?, q)?;
        Ok(BeattySpec {
            alpha: self.alpha.clone(),
            offset: RealValue::Rational(offset),
        })
    }

    /// Every term `≤ bound`, in index order.
    pub fn enumerate(&self, bound: i64) -> Result<Vec<i64>> {
        if bound < 1 {
            return Err(Error::InvalidArgument(format!("bound {bound} must be at least 1")));
        }
        let eval = TermEvaluator::new(self)?;
        let mut out = Vec::new();
        for n in 1.. {
            let t = eval.term(n)?;
            if t > bound {
                break;
            }
            out.push(t);
        }
        Ok(out)
    }
}

pub fn term(spec: &BeattySpec, n: i64) -> Result<i64> {
    spec.term(n)
}

pub fn membership(spec: &BeattySpec, k: i64) -> Result<bool> {
    spec.membership(k)
}

pub fn count_below(spec: &BeattySpec, k: i64) -> Result<u64> {
    spec.count_below(k)
}

pub fn normalize_rational_offset(spec: &BeattySpec) -> Result<BeattySpec> {
    spec.normalize_rational_offset()
}

pub fn enumerate(spec: &BeattySpec, bound: i64) -> Result<Vec<i64>> {
    spec.enumerate(bound)
}

/// `k·x + y` for exact `x`, `y` over at most one surd, stored as
/// `(a·k + b + (c·k + e)·√d) / r` in machine integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct LinearForm {
    a: i128,
    b: i128,
    c: i128,
    e: i128,
    d: u64,
    r: i128,
}

/// `(p, s, d, r)` with value `(p + s√d)/r`, `s = d = 0` for rationals.
fn small_parts(x: &RealValue) -> Option<(i128, i128, u64, i128)> {
    match x {
        RealValue::Rational(q) => {
            let (n, d) = q.to_i64_pair()?;
            Some((n as i128, 0, 0, d as i128))
        }
        RealValue::Quadratic(q) => Some((
            q.p().to_i64()? as i128,
            q.s().to_i64()? as i128,
            q.d(),
            q.r().to_i64()? as i128,
        )),
        RealValue::Interval(_) => None,
    }
}

impl LinearForm {
    pub(crate) fn new(x: &RealValue, y: &RealValue) -> Option<Self> {
        let (px, sx, dx, rx) = small_parts(x)?;
        let (py, sy, dy, ry) = small_parts(y)?;
        let d = match (dx, dy) {
            (0, d) | (d, 0) => d,
            (a, b) if a == b => a,
            _ => return None,
        };
        Some(LinearForm {
            a: px.checked_mul(ry)?,
            b: py.checked_mul(rx)?,
            c: sx.checked_mul(ry)?,
            e: sy.checked_mul(rx)?,
            d,
            r: rx.checked_mul(ry)?,
        })
    }

    /// `⌊k·x + y⌋`, `None` on overflow.
    pub(crate) fn floor(&self, k: i64) -> Option<i128> {
        let k = k as i128;
        let p = self.a.checked_mul(k)?.checked_add(self.b)?;
        let s = self.c.checked_mul(k)?.checked_add(self.e)?;
        if s == 0 {
            Some(Integer::div_floor(&p, &self.r))
        } else {
            floor_surd_i128(p, s, self.d, self.r)
        }
    }

    /// `⌈k·x + y⌉`, `None` on overflow.
    pub(crate) fn ceil(&self, k: i64) -> Option<i128> {
        let k = k as i128;
        let p = self.a.checked_mul(k)?.checked_add(self.b)?;
        let s = self.c.checked_mul(k)?.checked_add(self.e)?;
        let f = if s == 0 {
            Integer::div_floor(&p.checked_neg()?, &self.r)
        } else {
            floor_surd_i128(p.checked_neg()?, s.checked_neg()?, self.d, self.r)?
        };
        f.checked_neg()
    }
}

/// Membership tester with the arc precomputed, for sweeping many `k`.
///
/// Small exact inputs take a machine-integer path through the counting
/// identity: `k` is a term exactly when `⌈(k+1)α + α′⌉ − ⌈kα + α′⌉ = 1` and
/// `kα + α′ > 0`. Everything else goes through the arc criterion.
#[derive(Clone, Debug)]
pub struct MembershipTest {
    alpha: RealValue,
    offset: RealValue,
    arc: Arc,
    fast: Option<LinearForm>,
}

impl MembershipTest {
    pub fn new(spec: &BeattySpec) -> Result<Self> {
        spec.require_unit_density()?;
        Ok(MembershipTest {
            alpha: spec.alpha.clone(),
            offset: spec.offset.clone(),
            arc: spec.membership_arc()?,
            fast: LinearForm::new(&spec.alpha, &spec.offset),
        })
    }

    pub fn contains(&self, k: i64) -> Result<bool> {
        if let Some(form) = &self.fast {
            if let (Some(lo), Some(hi), Some(f)) = (form.ceil(k), form.ceil(k.wrapping_add(1)), form.floor(k)) {
                if k < i64::MAX {
                    // kα + α′ > 0 iff its floor is ≥ 0 and it is not exactly 0.
                    let positive = f > 0 || (f == 0 && lo == 1);
                    return Ok(positive && hi - lo == 1);
                }
            }
        }
        self.contains_by_arc(k)
    }

    /// The arc criterion alone, without the integer shortcut.
    pub fn contains_by_arc(&self, k: i64) -> Result<bool> {
        let k_alpha = self.alpha.mul_int(k);
        if k_alpha.try_add(&self.offset)?.sign()? != Ordering::Greater {
            return Ok(false);
        }
        self.arc.contains(&CirclePoint(k_alpha))
    }
}

/// Evaluates `⌊(n − α′)/α⌋` for many `n`, with an integer fast path for
/// small rational specs.
#[derive(Clone, Debug)]
pub struct TermEvaluator {
    kind: EvalKind,
}

// Built once per sequence, so the size gap between variants is immaterial.
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug)]
enum EvalKind {
    /// `⌊(n·c − d)/e⌋`, `e > 0`.
    Small { c: i128, d: i128, e: i128 },
    /// `⌊n·slope − shift⌋`, through `fast` while it does not overflow.
    General {
        slope: RealValue,
        shift: RealValue,
        fast: Option<LinearForm>,
    },
}

impl TermEvaluator {
    pub fn new(spec: &BeattySpec) -> Result<Self> {
        if let (Some(a), Some(o)) = (spec.alpha.as_rational(), spec.offset.as_rational()) {
            if let (Some((an, ad)), Some((on, od))) = (a.to_i64_pair(), o.to_i64_pair()) {
                let (an, ad, on, od) = (an as i128, ad as i128, on as i128, od as i128);
                // (n − on/od)/(an/ad) = (n·od − on)·ad / (an·od)
                if let (Some(c), Some(d), Some(e)) = (od.checked_mul(ad), on.checked_mul(ad), an.checked_mul(od)) {
                    return Ok(TermEvaluator {
                        kind: EvalKind::Small { c, d, e },
                    });
                }
            }
        }
        let slope = spec.alpha.recip()?;
        let shift = spec.offset.try_mul(&slope)?;
        let fast = LinearForm::new(&slope, &shift.neg());
        Ok(TermEvaluator {
            kind: EvalKind::General { slope, shift, fast },
        })
    }

    pub fn term(&self, n: i64) -> Result<i64> {
        match &self.kind {
            EvalKind::Small { c, d, e } => {
                let num = (n as i128)
                    .checked_mul(*c)
                    .and_then(|x| x.checked_sub(*d))
                    .ok_or(Error::Overflow("term"))?;
                i64::try_from(Integer::div_floor(&num, e)).map_err(|_| Error::Overflow("term"))
            }
            EvalKind::General { slope, shift, fast } => {
                if let Some(t) = fast.and_then(|f| f.floor(n)) {
                    return i64::try_from(t).map_err(|_| Error::Overflow("term"));
                }
                to_i64(slope.mul_int(n).try_sub(shift)?.floor()?)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(alpha: &str, offset: &str) -> BeattySpec {
        BeattySpec::parse(alpha, offset).unwrap()
    }

    const THREE_MINUS_E: &str = "~0.281718171540954764639712528647337502242752906300040425033032:3-e";

    #[test]
    fn term_examples() {
        assert_eq!(spec(THREE_MINUS_E, "2/5").term(1).unwrap(), 2);
        assert_eq!(spec("1/2", "0").term(3).unwrap(), 6);
        assert_eq!(spec("(-1+1*sqrt 5)/2", "0").term(1).unwrap(), 1);
        assert!(spec("1/2", "0").term(0).is_err());
    }

    #[test]
    fn membership_examples() {
        assert!(spec(THREE_MINUS_E, "2/5").membership(2).unwrap());
        let evens = spec("1/2", "0");
        assert!(evens.membership(4).unwrap());
        assert!(!evens.membership(3).unwrap());
        assert!(spec("(-1+1*sqrt 5)/2", "0").membership(1).unwrap());
        assert!(matches!(
            spec("3/2", "0").membership(1),
            Err(Error::DensityOutOfRange(_))
        ));
        assert!(matches!(spec("1", "0").membership(1), Err(Error::DensityOutOfRange(_))));
    }

    #[test]
    fn count_below_examples() {
        assert_eq!(spec("1/2", "0").count_below(7).unwrap(), 3);
        assert_eq!(spec(THREE_MINUS_E, "2/5").count_below(10).unwrap(), 3);
        assert_eq!(spec("1/2", "0").count_below(0).unwrap(), 0);
    }

    #[test]
    fn normalize_examples() {
        let n = spec("1/3", "1/4").normalize_rational_offset().unwrap();
        assert_eq!(n, spec("1/3", "1/3"));
        assert_eq!(
            spec("2/5", "2/5").normalize_rational_offset().unwrap(),
            spec("2/5", "2/5")
        );
        assert_eq!(
            spec("1/2", "-1/10").normalize_rational_offset().unwrap(),
            spec("1/2", "0")
        );
        assert_eq!(
            spec("(-1+1*sqrt 5)/2", "0").normalize_rational_offset(),
            Err(Error::NotRationalDensity)
        );
    }

    #[test]
    fn enumerate_examples() {
        // ⌊3.6/(3 − e)⌋ = 12; the often-quoted 13 belongs to the complement B(e − 2, −2/5)
        assert_eq!(spec(THREE_MINUS_E, "2/5").enumerate(16).unwrap(), vec![2, 5, 9, 12, 16]);
        let e_minus_two = "~0.718281828459045235360287471352662497757247093699959574966968:e-2";
        assert_eq!(spec(e_minus_two, "-2/5").enumerate(8).unwrap(), vec![1, 3, 4, 6, 7, 8]);
        assert_eq!(spec("1/2", "0").enumerate(7).unwrap(), vec![2, 4, 6]);
        // densities above 1 repeat terms
        assert_eq!(spec("3/2", "0").enumerate(3).unwrap(), vec![0, 1, 2, 2, 3]);
    }

    #[test]
    fn rejects_nonpositive_density() {
        assert!(matches!(BeattySpec::parse("0", "0"), Err(Error::DensityOutOfRange(_))));
        assert!(matches!(
            BeattySpec::parse("-1/2", "0"),
            Err(Error::DensityOutOfRange(_))
        ));
    }

    #[test]
    fn machine_paths_match_exact_arithmetic() {
        for (alpha, offset) in [
            ("(-1+1*sqrt 5)/2", "0"),
            ("-1+1*sqrt 2", "(1-1*sqrt 2)/3"),
            ("7/19", "-5/3"),
        ] {
            let s = spec(alpha, offset);
            let test = MembershipTest::new(&s).unwrap();
            assert!(test.fast.is_some());
            let eval = TermEvaluator::new(&s).unwrap();
            let slope = s.alpha().recip().unwrap();
            let shift = s.offset().try_mul(&slope).unwrap();
            for k in -60..400 {
                assert_eq!(
                    test.contains(k).unwrap(),
                    test.contains_by_arc(k).unwrap(),
                    "{alpha} {offset} k={k}"
                );
                let exact = to_i64(slope.mul_int(k).try_sub(&shift).unwrap().floor().unwrap()).unwrap();
                assert_eq!(eval.term(k).unwrap(), exact);
            }
        }
    }

    #[test]
    fn fast_and_general_paths_agree() {
        let s = spec("7/19", "-5/3");
        let fast = TermEvaluator::new(&s).unwrap();
        let general = TermEvaluator {
            kind: EvalKind::General {
                slope: s.alpha().recip().unwrap(),
                shift: s.offset().try_mul(&s.alpha().recip().unwrap()).unwrap(),
                fast: None,
            },
        };
        assert!(matches!(fast.kind, EvalKind::Small { .. }));
        for n in 1..500 {
            assert_eq!(fast.term(n).unwrap(), general.term(n).unwrap());
        }
    }
}
