//! Brute-force oracles and random generators shared by the integration tests.
#![allow(dead_code)]

use std::cmp::Ordering;

use beatty::beatty::BeattySpec;
use beatty::contfrac::CFExpansion;
use beatty::fraenkel::TilePair;
use beatty::RealValue;
use num_traits::ToPrimitive;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub const THREE_MINUS_E: &str = "~0.281718171540954764639712528647337502242752906300040425033032:3-e";
pub const E_MINUS_TWO: &str = "~0.718281828459045235360287471352662497757247093699959574966968:e-2";

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn r(n: i64, d: i64) -> RealValue {
    RealValue::rational(n, d).unwrap()
}

pub fn golden() -> RealValue {
    RealValue::quadratic(-1, 1, 5, 2).unwrap()
}

pub fn root2_minus_1() -> RealValue {
    RealValue::quadratic(-1, 1, 2, 1).unwrap()
}

/// `[0; 3, 3, 3, …] = (√13 − 3)/2`.
pub fn threes() -> RealValue {
    CFExpansion::periodic(vec![], vec![3]).unwrap().value().unwrap().clone()
}

/// `[0; 1, 2, 2, 2, …] = √2/2`.
pub fn one_then_twos() -> RealValue {
    CFExpansion::periodic(vec![1], vec![2])
        .unwrap()
        .value()
        .unwrap()
        .clone()
}

/// `[0; 1, 2, 1, 2, …] = √3 − 1`.
pub fn root3_minus_1() -> RealValue {
    RealValue::quadratic(-1, 1, 3, 1).unwrap()
}

/// The fixed irrationals used by the sweeps, with names.
pub fn fixed_irrationals() -> Vec<(&'static str, RealValue)> {
    vec![
        ("golden", golden()),
        ("sqrt2-1", root2_minus_1()),
        ("[0;3*]", threes()),
        ("[0;1,2*]", one_then_twos()),
        ("sqrt3-1", root3_minus_1()),
    ]
}

/// Terms `⌊(n − α′)/α⌋` for `n = 1, 2, …` below `limit`, by exact arithmetic
/// with no shortcuts.
pub fn terms_below(alpha: &RealValue, offset: &RealValue, limit: i64) -> Vec<i64> {
    let slope = alpha.recip().unwrap();
    let mut out = Vec::new();
    for n in 1.. {
        let t = RealValue::integer(n)
            .try_sub(offset)
            .unwrap()
            .try_mul(&slope)
            .unwrap()
            .floor()
            .unwrap()
            .to_i64()
            .unwrap();
        if t >= limit {
            break;
        }
        out.push(t);
    }
    out
}

/// Tiling of `[1, n]` decided by counting coverage of every integer.
pub fn tiles_window(pair: &TilePair, n: i64) -> bool {
    let mut cover = vec![0u8; n as usize + 1];
    for spec in [&pair.a, &pair.b] {
        let terms = spec.enumerate(n).unwrap();
        for t in terms {
            if t < 1 {
                return false;
            }
            cover[t as usize] += 1;
        }
    }
    cover[1..].iter().all(|&c| c == 1)
}

/// A uniformly scattered quadratic irrational in `(0, 1)`.
pub fn random_quadratic_unit(rng: &mut ChaCha8Rng) -> RealValue {
    const RADICANDS: [u64; 10] = [2, 3, 5, 6, 7, 10, 11, 13, 14, 15];
    let d = RADICANDS[rng.gen_range(0..RADICANDS.len())];
    let s = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
    let r = rng.gen_range(1..=7);
    let p = rng.gen_range(-20..=20);
    RealValue::quadratic(p, s, d, r).unwrap().frac().unwrap()
}

/// A rational in `[lo, hi]` with denominator at most `den`.
pub fn random_rational_between(rng: &mut ChaCha8Rng, lo: &RealValue, hi: &RealValue, den: i64) -> RealValue {
    loop {
        let q = rng.gen_range(1..=den);
        let lo_n = lo.mul_int(q).ceil().unwrap().to_i64().unwrap();
        let hi_n = hi.mul_int(q).floor().unwrap().to_i64().unwrap();
        if lo_n <= hi_n {
            return r(rng.gen_range(lo_n..=hi_n), q);
        }
    }
}

pub fn spec(alpha: RealValue, offset: RealValue) -> BeattySpec {
    BeattySpec::new(alpha, offset).unwrap()
}

pub fn less(a: &RealValue, b: &RealValue) -> bool {
    a.compare(b).unwrap() == Ordering::Less
}
