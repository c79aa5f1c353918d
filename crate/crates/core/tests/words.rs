//! Continued fractions, Ostrowski digits and characteristic words.

mod common;

use std::cmp::Ordering;

use beatty::contfrac::{cf_expand, ostrowski_expand, validate_ostrowski, CFExpansion};
use beatty::sturmian::{brown_decompose, char_word, expand_decomposition, ones_in_prefix, Sturmian};
use beatty::RealValue;
use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn rational_expansions_round_trip(n in 1i64..10_000, d in 2i64..10_000) {
        prop_assume!(n < d);
        let x = r(n, d);
        let cf = cf_expand(&x, 4096).unwrap();
        let rebuilt = CFExpansion::finite(cf.stored_quotients().to_vec()).unwrap();
        prop_assert_eq!(rebuilt.value().unwrap(), &x);
    }
}

fn expansion(x: &RealValue) -> CFExpansion {
    cf_expand(x, 4096).unwrap()
}

#[test]
fn convergents_approximate_well() {
    let mut xs: Vec<RealValue> = fixed_irrationals().into_iter().map(|(_, x)| x).collect();
    xs.push(r(355, 1131));
    for x in xs {
        let cf = expansion(&x);
        // Keep q_i² within i64.
        let limit = cf.available().unwrap_or(usize::MAX);
        let q_all = cf.continuants_through(100_000_000).unwrap();
        let count = (q_all.len() - 1).min(limit);
        let q = cf.continuants(count).unwrap();
        let p = cf.numerators(count).unwrap();
        for (i, &pi) in p.iter().enumerate().skip(1) {
            let (pi, qi) = (pi as i64, q.get(i).unwrap() as i64);
            let err = x.try_sub(&r(pi, qi)).unwrap();
            let err = if err.sign().unwrap() == Ordering::Less {
                err.neg()
            } else {
                err
            };
            let bound = r(1, qi * qi);
            let last_exact = cf.available() == Some(i);
            if last_exact {
                assert_eq!(err.sign().unwrap(), Ordering::Equal);
            } else {
                assert_eq!(err.compare(&bound).unwrap(), Ordering::Less, "{x} i {i}");
            }
        }
    }
}

#[test]
fn continuants_grow_at_least_like_fibonacci() {
    for (name, x) in fixed_irrationals() {
        let q = expansion(&x).continuants_through(1 << 58).unwrap();
        let q = q.as_slice();
        for i in 0..q.len() - 2 {
            assert!(q[i + 2] >= q[i + 1] + q[i], "{name} i {i}");
        }
    }
}

#[test]
fn greedy_digits_are_valid() {
    for x in [golden(), root2_minus_1()] {
        let cf = expansion(&x);
        for m in 1..=100_000u64 {
            let digits = ostrowski_expand(m, &cf).unwrap();
            assert!(validate_ostrowski(&digits, &cf), "m {m}");
            assert_eq!(digits.value(&cf).unwrap(), m);
        }
    }
}

#[test]
fn decomposition_digits_match_ostrowski() {
    for (name, x) in fixed_irrationals() {
        let cf = expansion(&x);
        let st = Sturmian::new(&x).unwrap();
        for m in 1..=5_000u64 {
            let d = st.decompose(m).unwrap();
            let mut from_brown: Vec<(usize, u64)> = d.factors.iter().map(|f| (f.index.unwrap(), f.exponent)).collect();
            let mut from_digits: Vec<(usize, u64)> = ostrowski_expand(m, &cf).unwrap().nonzero().collect();
            from_brown.sort_unstable();
            from_digits.sort_unstable();
            assert_eq!(from_brown, from_digits, "{name} m {m}");
        }
    }
}

#[test]
fn brown_identity_for_golden_and_root_two() {
    for x in [golden(), root2_minus_1()] {
        let mut st = Sturmian::new(&x).unwrap();
        let word = st.prefix(100_000).unwrap();
        for m in 1..=100_000u64 {
            let d = st.decompose(m).unwrap();
            assert_eq!(st.expand(&d).unwrap(), word.prefix(m as usize), "{x} m {m}");
        }
    }
}

#[test]
fn free_functions_agree_with_the_context() {
    let x = threes();
    for m in [1u64, 2, 3, 10, 33, 109, 500] {
        let d = brown_decompose(&x, m).unwrap();
        assert_eq!(
            expand_decomposition(&d, &x).unwrap(),
            char_word(&x, m as usize).unwrap()
        );
    }
}

#[test]
fn rational_words_are_periodic() {
    for q in 2..=30i64 {
        for a in 1..q {
            if num_integer::gcd(a, q) != 1 {
                continue;
            }
            let alpha = r(a, q);
            let period = char_word(&alpha, q as usize).unwrap();
            let long = char_word(&alpha, 20 * q as usize).unwrap();
            for k in 1..=20usize {
                assert_eq!(long.prefix(k * q as usize), period.repeat(k), "{a}/{q} k {k}");
            }
        }
    }
}

#[test]
fn ones_count_terms() {
    let mut alphas: Vec<RealValue> = fixed_irrationals().into_iter().map(|(_, x)| x).collect();
    alphas.extend([r(2, 5), r(7, 19), r(1, 2)]);
    for alpha in alphas {
        let word = char_word(&alpha, 3000).unwrap();
        let terms = terms_below(&alpha, &RealValue::integer(0), 3001);
        for m in [1usize, 2, 7, 50, 999, 3000] {
            let ones = word.prefix(m).count_ones() as u64;
            let in_range = terms.iter().filter(|&&t| 1 <= t && t <= m as i64).count() as u64;
            assert_eq!(ones, in_range, "{alpha} m {m}");
            assert_eq!(ones_in_prefix(&alpha, m as i64).unwrap(), ones);
        }
    }
}

/// `C_m = C_{q_t} C_{m − q_t}` holds for every `m ≥ 2` except the first
/// continuant `q ≥ 2`, where `C_q` ends in its first 1 while `C_{q_0} C_{q − 1}`
/// is still all zeros.
#[test]
fn prefix_lemma_holds_except_at_the_first_nontrivial_continuant() {
    for (name, x) in fixed_irrationals() {
        let mut st = Sturmian::new(&x).unwrap();
        let first = *st
            .continuants_through(2)
            .unwrap()
            .as_slice()
            .iter()
            .find(|&&q| q >= 2)
            .unwrap();
        for m in 2..=20_000u64 {
            assert_eq!(st.check_prefix_lemma(m).unwrap(), m != first, "{name} m {m}");
        }
    }
}
