//! Circle diagram of a tiling pair: the arcs `A = (−α−α′, −α′]` and
//! `B = [β′, β+β′)` on ℝ/ℤ together with the points `kα`.
//!
//! Arc membership is decided exactly; only the drawing is rounded.

use std::f64::consts::TAU;
use std::fmt::Write;

use crate::error::Result;
use crate::exactreal::{Arc, CirclePoint, Rational, RealValue};
use crate::fraenkel::TilePair;

/// Significant digits carried into the floating-point drawing.
const RENDER_DIGITS: u32 = 30;

const SIZE: f64 = 440.0;
const CENTER: f64 = 220.0;
const RADIUS: f64 = 150.0;
const ARC_A_RADIUS: f64 = 166.0;
const ARC_B_RADIUS: f64 = 134.0;
const LABEL_RADIUS: f64 = 190.0;

/// Where `kα` falls.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PointClass {
    pub k: i64,
    pub in_a: bool,
    pub in_b: bool,
}

impl PointClass {
    fn css(&self) -> &'static str {
        match (self.in_a, self.in_b) {
            (true, true) => "in-both",
            (true, false) => "in-a",
            (false, true) => "in-b",
            (false, false) => "in-neither",
        }
    }
}

/// `A`, the arc hit by `kα` when `k ∈ B(α, α′)`.
pub fn arc_a(pair: &TilePair) -> Result<Arc> {
    pair.a.membership_arc()
}

/// `B`, the arc hit by `kα` when `k ∈ B(β, β′)` and `α + β = 1`.
pub fn arc_b(pair: &TilePair) -> Result<Arc> {
    let left = pair.b.offset().clone();
    let right = pair.b.alpha().try_add(&left)?;
    Ok(Arc::closed_open(left, right))
}

/// Exact arc membership of `kα` for `0 ≤ k ≤ k_max`.
pub fn classify_points(pair: &TilePair, k_max: u32) -> Result<Vec<PointClass>> {
    let (a, b) = (arc_a(pair)?, arc_b(pair)?);
    (0..=i64::from(k_max))
        .map(|k| {
            let x = CirclePoint(pair.a.alpha().mul_int(k));
            Ok(PointClass {
                k,
                in_a: a.contains(&x)?,
                in_b: b.contains(&x)?,
            })
        })
        .collect()
}

/// Position on ℝ/ℤ in `[0, 1)` as a float, via a rational enclosure.
fn turns(x: &RealValue) -> f64 {
    let low: Rational = x.enclose(RENDER_DIGITS).low().clone();
    low.frac().to_f64()
}

fn coord(v: f64) -> String {
    let s = format!("{v:.6}");
    if s == "-0.000000" {
        "0.000000".to_string()
    } else {
        s
    }
}

fn polar(t: f64, r: f64) -> (String, String) {
    let angle = TAU * t;
    (coord(CENTER + r * angle.cos()), coord(CENTER - r * angle.sin()))
}

fn draw_arc(out: &mut String, arc: &Arc, radius: f64, class: &str, name: &str) -> Result<()> {
    if arc.left.congruent(&arc.right)? == crate::exactreal::Truth::Yes {
        return Ok(());
    }
    let (t0, t1) = (turns(arc.left.value()), turns(arc.right.value()));
    let span = (t1 - t0).rem_euclid(1.0);
    let (x0, y0) = polar(t0, radius);
    let (x1, y1) = polar(t1, radius);
    let large = u8::from(span > 0.5);
    writeln!(
        out,
        r#"  <path class="{class}" d="M {x0} {y0} A {r} {r} 0 {large} 0 {x1} {y1}" fill="none" stroke-width="4"/>"#,
        r = coord(radius)
    )
    .expect("writing to a string");
    for (t, closed) in [(t0, arc.left_closed), (t1, arc.right_closed)] {
        let (x, y) = polar(t, radius);
        let fill = if closed { "currentColor" } else { "white" };
        writeln!(
            out,
            r#"  <circle class="{class} {}" cx="{x}" cy="{y}" r="4" fill="{fill}" stroke="currentColor"/>"#,
            if closed { "closed" } else { "open" }
        )
        .expect("writing to a string");
    }
    let (lx, ly) = polar(t0 + span / 2.0, radius + if radius > RADIUS { 14.0 } else { -14.0 });
    writeln!(out, r#"  <text class="{class}-label" x="{lx}" y="{ly}">{name}</text>"#).expect("writing to a string");
    Ok(())
}

/// The diagram as a standalone SVG document; identical inputs give identical bytes.
pub fn circle_svg(pair: &TilePair, k_max: u32) -> Result<String> {
    let points = classify_points(pair, k_max)?;
    let mut out = String::new();
    let size = coord(SIZE);
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    )
    .expect("writing to a string");
    out.push_str(concat!(
        "  <style>",
        ".arc-a{color:#c0392b;stroke:#c0392b}",
        ".arc-b{color:#2471a3;stroke:#2471a3}",
        ".in-a{fill:#c0392b}.in-b{fill:#2471a3}.in-both{fill:#8e44ad}.in-neither{fill:#7f8c8d}",
        "text{font-family:sans-serif;font-size:11px;text-anchor:middle;dominant-baseline:middle}",
        "</style>\n"
    ));
    writeln!(
        out,
        r#"  <circle cx="{c}" cy="{c}" r="{r}" fill="none" stroke="black" stroke-width="1"/>"#,
        c = coord(CENTER),
        r = coord(RADIUS)
    )
    .expect("writing to a string");
    draw_arc(&mut out, &arc_a(pair)?, ARC_A_RADIUS, "arc-a", "A")?;
    draw_arc(&mut out, &arc_b(pair)?, ARC_B_RADIUS, "arc-b", "B")?;
    for p in &points {
        let t = turns(&pair.a.alpha().mul_int(p.k));
        let (x, y) = polar(t, RADIUS);
        let (lx, ly) = polar(t, LABEL_RADIUS);
        writeln!(
            out,
            r#"  <circle class="point {}" data-k="{}" cx="{x}" cy="{y}" r="3"/>"#,
            p.css(),
            p.k
        )
        .expect("writing to a string");
        writeln!(out, r#"  <text x="{lx}" y="{ly}">{}</text>"#, p.k).expect("writing to a string");
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cmp::Ordering;

    const THREE_MINUS_E: &str = "~0.281718171540954764639712528647337502242752906300040425033032:3-e";
    const E_MINUS_TWO: &str = "~0.718281828459045235360287471352662497757247093699959574966968:e-2";

    fn three_minus_e_pair() -> TilePair {
        TilePair::parse(THREE_MINUS_E, "2/5", E_MINUS_TWO, "-2/5").unwrap()
    }

    #[test]
    fn three_minus_e_points_in_arc_a() {
        let in_a: Vec<i64> = classify_points(&three_minus_e_pair(), 16)
            .unwrap()
            .into_iter()
            .filter(|p| p.k >= 1 && p.in_a)
            .map(|p| p.k)
            .collect();
        assert_eq!(in_a, vec![2, 5, 9, 12, 16]);
    }

    #[test]
    fn half_pair_alternates() {
        let pair = TilePair::parse("1/2", "0", "1/2", "1/2").unwrap();
        for p in classify_points(&pair, 10).unwrap() {
            assert_eq!(p.in_a, p.k % 2 == 0);
            assert_eq!(p.in_b, p.k % 2 == 1);
        }
    }

    #[test]
    fn golden_points_agree_with_membership() {
        let pair = TilePair::parse("(-1+1*sqrt 5)/2", "0", "(3-1*sqrt 5)/2", "0").unwrap();
        for p in classify_points(&pair, 20).unwrap().into_iter().skip(1) {
            assert!(p.in_a ^ p.in_b, "k = {} lies in exactly one arc", p.k);
            let positive = |s: &crate::beatty::BeattySpec| {
                s.alpha().mul_int(p.k).try_add(s.offset()).unwrap().sign().unwrap() == Ordering::Greater
            };
            if positive(&pair.a) {
                assert_eq!(p.in_a, pair.a.membership(p.k).unwrap());
            }
            if positive(&pair.b) {
                assert_eq!(p.in_b, pair.b.membership(p.k).unwrap());
            }
        }
    }

    #[test]
    fn output_is_deterministic() {
        let first = circle_svg(&three_minus_e_pair(), 16).unwrap();
        assert_eq!(first, circle_svg(&three_minus_e_pair(), 16).unwrap());
        assert!(first.starts_with("<svg"));
        assert_eq!(first.matches("class=\"point ").count(), 17);
    }
}
