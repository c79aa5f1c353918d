//! Characteristic words `C_m = c_1 c_2 … c_m` with `c_k = [k ∈ B(α)]`, and
//! their factorization into continuant-length prefixes.

mod word;

pub use word::Word;

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

use crate::beatty::{BeattySpec, MembershipTest};
use crate::contfrac::{cf_expand, ostrowski_with, CFExpansion, Continuants};
use crate::error::{Error, Result};
use crate::exactreal::{square_free_split, QuadraticIrrational, Rational, RealValue};

/// Quotients examined before giving up on period detection.
pub const MAX_CF_TERMS: usize = 4096;

/// Lazily extended prefix of the characteristic word of `α`.
#[derive(Clone, Debug)]
pub struct CharacteristicWord {
    alpha: RealValue,
    test: MembershipTest,
    bits: Word,
}

impl CharacteristicWord {
    pub fn new(alpha: &RealValue) -> Result<Self> {
        let spec = BeattySpec::new(alpha.clone(), RealValue::integer(0))?;
        Ok(CharacteristicWord {
            alpha: alpha.clone(),
            test: MembershipTest::new(&spec)?,
            bits: Word::new(),
        })
    }

    pub fn alpha(&self) -> &RealValue {
        &self.alpha
    }

    /// Makes sure `c_1 … c_m` are computed.
    pub fn ensure(&mut self, m: usize) -> Result<()> {
        while self.bits.len() < m {
            let k = self.bits.len() as i64 + 1;
            self.bits.push(self.test.contains(k)?);
        }
        Ok(())
    }

    /// `C_m`.
    pub fn prefix(&mut self, m: usize) -> Result<Word> {
        self.ensure(m)?;
        Ok(self.bits.prefix(m))
    }

    /// Everything computed so far.
    pub fn computed(&self) -> &Word {
        &self.bits
    }

    /// Concatenates `C_{len}^{z}` over the factors.
    pub fn expand(&mut self, d: &Decomposition) -> Result<Word> {
        let longest = d.factors.iter().map(|f| f.len).max().unwrap_or(0);
        self.ensure(to_usize(longest)?)?;
        let mut out = Word::with_capacity(to_usize(d.total_len())?);
        for f in &d.factors {
            let piece = self.bits.prefix(to_usize(f.len)?);
            for _ in 0..f.exponent {
                out.extend_word(&piece);
            }
        }
        Ok(out)
    }
}

fn to_usize(x: u64) -> Result<usize> {
    usize::try_from(x).map_err(|_| Error::Overflow("word length"))
}

/// `C_m` for `0 < α < 1`.
pub fn char_word(alpha: &RealValue, m: usize) -> Result<Word> {
    CharacteristicWord::new(alpha)?.prefix(m)
}

/// One factor `C_len^exponent`; `index` names the continuant `q_index = len`
/// when the factor comes from an Ostrowski expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Factor {
    pub index: Option<usize>,
    pub len: u64,
    pub exponent: u64,
}

impl Serialize for Factor {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(2))?;
        match self.index {
            Some(i) => map.serialize_entry("i", &i)?,
            None => map.serialize_entry("len", &self.len)?,
        }
        map.serialize_entry("z", &self.exponent)?;
        map.end()
    }
}

/// `C_m` written as a product of prefixes, highest continuant first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Decomposition {
    pub factors: Vec<Factor>,
}

impl Decomposition {
    pub fn total_len(&self) -> u64 {
        self.factors.iter().map(|f| f.len * f.exponent).sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("decompositions serialize")
    }
}

impl Serialize for Decomposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.factors.len()))?;
        for f in &self.factors {
            seq.serialize_element(f)?;
        }
        seq.end()
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("()");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|x| match x.index {
                Some(i) => format!("C_{{q{i}}}^{}", x.exponent),
                None => format!("C_{}^{}", x.len, x.exponent),
            })
            .collect();
        f.write_str(&parts.join(" * "))
    }
}

fn require_unit_density(alpha: &RealValue) -> Result<()> {
    if alpha.sign()? != Ordering::Greater || alpha.compare(&RealValue::integer(1))? != Ordering::Less {
        return Err(Error::DensityOutOfRange(format!(
            "{alpha} is not strictly between 0 and 1"
        )));
    }
    Ok(())
}

/// Continued fraction, continuants and word cache for one density, for
/// sweeping many `m` without recomputation.
#[derive(Clone, Debug)]
pub struct Sturmian {
    cf: CFExpansion,
    word: CharacteristicWord,
}

impl Sturmian {
    pub fn new(alpha: &RealValue) -> Result<Self> {
        if !alpha.is_exact() {
            return Err(Error::IntervalNotSupported);
        }
        require_unit_density(alpha)?;
        Ok(Sturmian {
            cf: cf_expand(alpha, MAX_CF_TERMS)?,
            word: CharacteristicWord::new(alpha)?,
        })
    }

    pub fn alpha(&self) -> &RealValue {
        self.word.alpha()
    }

    pub fn cf(&self) -> &CFExpansion {
        &self.cf
    }

    pub fn word(&mut self) -> &mut CharacteristicWord {
        &mut self.word
    }

    /// Continuants up to the first one exceeding `limit`.
    pub fn continuants_through(&self, limit: u64) -> Result<Continuants> {
        self.cf.continuants_through(limit)
    }

    /// Ostrowski factors for irrational `α`; `C_q^{⌊m/q⌋} C_{m mod q}` for `α = a/q`.
    pub fn decompose(&self, m: u64) -> Result<Decomposition> {
        if m == 0 {
            return Err(Error::InvalidArgument("m must be at least 1".into()));
        }
        if let Some(r) = self.alpha().as_rational() {
            return Ok(periodic_decomposition(r, m));
        }
        let q = self.cf.continuants_through(m)?;
        if q.as_slice().last().is_none_or(|&top| top <= m) {
            return Err(Error::InsufficientQuotients {
                needed: q.len(),
                available: self.cf.stored_quotients().len(),
            });
        }
        let digits = ostrowski_with(m, &q)?;
        let factors = digits
            .nonzero()
            .map(|(i, z)| Factor {
                index: Some(i),
                len: q.as_slice()[i],
                exponent: z,
            })
            .collect();
        Ok(Decomposition { factors })
    }

    pub fn expand(&mut self, d: &Decomposition) -> Result<Word> {
        self.word.expand(d)
    }

    pub fn prefix(&mut self, m: usize) -> Result<Word> {
        self.word.prefix(m)
    }

    /// `C_{q_i} = C_{q_{i−1}}^{a_i} C_{q_{i−2}}`, bit for bit.
    pub fn check_qi_recurrence(&mut self, i: usize) -> Result<bool> {
        if i < 2 {
            return Err(Error::InvalidArgument(format!(
                "recurrence index {i} must be at least 2"
            )));
        }
        let q = self.cf.continuants(i)?;
        let a = self.cf.quotient(i).expect("continuants checked availability");
        let qs = q.as_slice();
        let full = self.word.prefix(to_usize(qs[i])?)?;
        let rhs = self
            .word
            .prefix(to_usize(qs[i - 1])?)?
            .repeat(to_usize(a)?)
            .concat(&self.word.prefix(to_usize(qs[i - 2])?)?);
        Ok(full == rhs)
    }

    /// `C_m = C_{q_t} C_{m − q_t}` with `q_t` the largest continuant below `m`.
    pub fn check_prefix_lemma(&mut self, m: u64) -> Result<bool> {
        let q = self.cf.continuants_through(m)?;
        let t = q
            .largest_below(m)
            .ok_or_else(|| Error::InvalidArgument(format!("no continuant is below {m}")))?;
        let qt = q.as_slice()[t];
        let whole = self.word.prefix(to_usize(m)?)?;
        let split = self
            .word
            .prefix(to_usize(qt)?)?
            .concat(&self.word.prefix(to_usize(m - qt)?)?);
        Ok(whole == split)
    }
}

fn periodic_decomposition(alpha: &Rational, m: u64) -> Decomposition {
    let q = alpha.denom().to_u64().unwrap_or(u64::MAX);
    let mut factors = Vec::new();
    if m / q > 0 {
        factors.push(Factor {
            index: None,
            len: q,
            exponent: m / q,
        });
    }
    if !m.is_multiple_of(q) {
        factors.push(Factor {
            index: None,
            len: m % q,
            exponent: 1,
        });
    }
    Decomposition { factors }
}

pub fn brown_decompose(alpha: &RealValue, m: u64) -> Result<Decomposition> {
    Sturmian::new(alpha)?.decompose(m)
}

pub fn expand_decomposition(d: &Decomposition, alpha: &RealValue) -> Result<Word> {
    CharacteristicWord::new(alpha)?.expand(d)
}

pub fn check_qi_recurrence(alpha: &RealValue, i: usize) -> Result<bool> {
    Sturmian::new(alpha)?.check_qi_recurrence(i)
}

pub fn check_prefix_lemma(alpha: &RealValue, m: u64) -> Result<bool> {
    Sturmian::new(alpha)?.check_prefix_lemma(m)
}

/// Images of the two letters under a morphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub one: Word,
    pub zero: Word,
}

impl Morphism {
    pub fn new(one: Word, zero: Word) -> Self {
        Morphism { one, zero }
    }

    /// `1 → 10`, `0 → 1`, which fixes the golden-ratio characteristic word.
    pub fn fibonacci() -> Self {
        Morphism {
            one: "10".parse().expect("literal word"),
            zero: "1".parse().expect("literal word"),
        }
    }
}

pub fn apply_morphism(w: &Word, images: &Morphism) -> Word {
    let mut out = Word::new();
    for bit in w.iter() {
        out.extend_word(if bit { &images.one } else { &images.zero });
    }
    out
}

/// An irrational `x` just below `α = [0; a_1, …, a_n]` whose characteristic
/// word agrees with that of `α` on its first `m` letters.
///
/// Uses the odd-length form of the expansion, so the tail lowers the value,
/// and tail `[M; M, M, …]` with `M = 2(m + 1)`. The result is checked
/// against `[0; a_1, …, a_n, m + 1]` and against `C_m(α)` before returning.
pub fn rational_perturbation(alpha: &Rational, m: usize) -> Result<RealValue> {
    let alpha_value = RealValue::Rational(alpha.clone());
    require_unit_density(&alpha_value)?;
    let cf = cf_expand(&alpha_value, usize::MAX)?;
    let mut quotients = cf.stored_quotients().to_vec();
    if quotients.len() % 2 == 0 {
        let last = quotients.last_mut().expect("nonempty");
        *last -= 1;
        quotients.push(1);
    }
    let big_m = 2 * (m as u64 + 1);
    let disc = big_m
        .checked_mul(big_m)
        .and_then(|x| x.checked_add(4))
        .ok_or(Error::Overflow("perturbation tail"))?;
    let (outside, d) = square_free_split(disc);
    let tail = RealValue::Quadratic(QuadraticIrrational::new(
        BigInt::from(big_m),
        BigInt::from(outside),
        d,
        BigInt::from(2),
    )?);
    let x = crate::contfrac::with_tail(&quotients, &tail)?;

    let bound = crate::contfrac::with_tail(&quotients, &RealValue::integer(m as i64 + 1))?;
    let below_alpha = x.compare(&alpha_value)? == Ordering::Less;
    let above_bound = x.compare(&bound)? == Ordering::Greater;
    if !(below_alpha && above_bound) {
        return Err(Error::InvalidValue(format!(
            "perturbation {x} is not between {bound} and {alpha}"
        )));
    }
    if char_word(&x, m)? != char_word(&alpha_value, m)? {
        return Err(Error::InvalidValue(format!("perturbation {x} changes C_{m}")));
    }
    Ok(x)
}

/// Number of ones in `C_m`, from the counting identity: `|B(α) ∩ [1, m]|`.
pub fn ones_in_prefix(alpha: &RealValue, m: i64) -> Result<u64> {
    let spec = BeattySpec::new(alpha.clone(), RealValue::integer(0))?;
    // Terms of B(α, 0) are ≥ ⌊1/α⌋ ≥ 1, so everything below m + 1 lies in [1, m].
    spec.count_below(m + 1)
}

/// `⌊(k+1)α⌋ − ⌊kα⌋`, the floor-difference form of `c_k`.
pub fn floor_difference(alpha: &RealValue, k: i64) -> Result<bool> {
    let hi = alpha.mul_int(k + 1).floor()?;
    let lo = alpha.mul_int(k).floor()?;
    Ok((hi - lo).is_odd())
}
