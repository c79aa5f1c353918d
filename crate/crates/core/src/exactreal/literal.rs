//! Textual literals: `3/7`, `-2`, `0.4`, `(-1+1*sqrt 5)/2` and interval
//! literals `~2.718281828:e` (midpoint digits, half-ulp radius, optional label).

use std::str::FromStr;

use num_bigint::BigInt;

use super::interval::{DecimalInterval, DEFAULT_PRECISION};
use super::quadratic::{square_free_split, QuadraticIrrational};
use super::rational::Rational;
use super::real::RealValue;
use crate::error::{Error, Result};

fn parse_int(input: &str, text: &str) -> Result<BigInt> {
    let t = text.strip_prefix('+').unwrap_or(text);
    if t.is_empty() || !t.trim_start_matches('-').chars().all(|c| c.is_ascii_digit()) {
        return Err(Error::parse(input, format!("expected an integer, found {text:?}")));
    }
    t.parse::<BigInt>().map_err(|e| Error::parse(input, e.to_string()))
}

/// Parses `[-]digits[.digits]`, returning the value and the fractional digit count.
fn parse_decimal(input: &str, text: &str) -> Result<(Rational, u32)> {
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text.strip_prefix('+').unwrap_or(text)),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(Error::parse(input, "empty number"));
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(Error::parse(input, format!("malformed decimal {text:?}")));
    }
    let digits = format!("{whole}{frac}");
    let mut n: BigInt = if digits.is_empty() {
        BigInt::from(0)
    } else {
        digits.parse().map_err(|_| Error::parse(input, "malformed decimal"))?
    };
    if negative {
        n = -n;
    }
    let places = frac.len() as u32;
    Ok((Rational::new(n, BigInt::from(10u32).pow(places))?, places))
}

fn parse_interval(input: &str, body: &str, precision: u32) -> Result<RealValue> {
    let (number, label) = match body.split_once(':') {
        Some((n, l)) => (n.trim(), Some(l.trim().to_string()).filter(|l| !l.is_empty())),
        None => (body.trim(), None),
    };
    let (mid, places) = parse_decimal(input, number)?;
    Ok(RealValue::Interval(DecimalInterval::from_midpoint(
        mid, places, label, precision,
    )?))
}

fn parse_quadratic(input: &str, compact: &str) -> Result<RealValue> {
    // Split off an optional denominator after a parenthesised numerator.
    let (numerator, denominator) = if let Some(rest) = compact.strip_prefix('(') {
        let close = rest
            .rfind(')')
            .ok_or_else(|| Error::parse(input, "unbalanced parenthesis"))?;
        let tail = &rest[close + 1..];
        let r = match tail.strip_prefix('/') {
            Some(r) => parse_int(input, r)?,
            None if tail.is_empty() => BigInt::from(1),
            None => return Err(Error::parse(input, format!("unexpected {tail:?} after ')'"))),
        };
        (&rest[..close], r)
    } else {
        (compact, BigInt::from(1))
    };

    let at = numerator
        .find("sqrt")
        .ok_or_else(|| Error::parse(input, "missing sqrt"))?;
    let radicand: u64 = numerator[at + 4..]
        .parse()
        .map_err(|_| Error::parse(input, "radicand must be a nonnegative integer"))?;
    let before = numerator[..at].strip_suffix('*').unwrap_or(&numerator[..at]);

    // `before` is `[p](+|-)[s]` or `[s]`.
    let split = before
        .char_indices()
        .skip(1)
        .filter(|&(_, c)| c == '+' || c == '-')
        .map(|(i, _)| i)
        .last();
    let (p_text, s_text) = match split {
        Some(i) => (&before[..i], &before[i..]),
        None => ("", before),
    };
    let p = if p_text.is_empty() {
        BigInt::from(0)
    } else {
        parse_int(input, p_text)?
    };
    let mut s = match s_text {
        "" | "+" => BigInt::from(1),
        "-" => BigInt::from(-1),
        t => parse_int(input, t)?,
    };

    if radicand == 0 {
        return Ok(RealValue::Rational(Rational::new(p, denominator)?));
    }
    let (outside, d) = square_free_split(radicand);
    s *= outside;
    if d == 1 {
        return Ok(RealValue::Rational(Rational::new(p + s, denominator)?));
    }
    Ok(RealValue::Quadratic(QuadraticIrrational::new(p, s, d, denominator)?))
}

impl RealValue {
    /// Parses a literal, giving interval literals `precision` fractional digits.
    pub fn parse_with_precision(input: &str, precision: u32) -> Result<RealValue> {
        let normalized = input.trim().replace('\u{2212}', "-");
        if let Some(body) = normalized.strip_prefix('~') {
            return parse_interval(input, body, precision);
        }
        let compact: String = normalized.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::parse(input, "empty literal"));
        }
        if compact.contains("sqrt") {
            return parse_quadratic(input, &compact);
        }
        if let Some((n, d)) = compact.split_once('/') {
            return Ok(RealValue::Rational(Rational::new(
                parse_int(input, n)?,
                parse_int(input, d)?,
            )?));
        }
        Ok(RealValue::Rational(parse_decimal(input, &compact)?.0))
    }
}

impl FromStr for RealValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RealValue::parse_with_precision(s, DEFAULT_PRECISION)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.parse::<RealValue>()? {
            RealValue::Rational(q) => Ok(q),
            _ => Err(Error::parse(s, "not a rational literal")),
        }
    }
}
