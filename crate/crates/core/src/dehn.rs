//! Counting closed surfaces after Dehn filling.
//!
//! The count is the general bound for closed genus-g surfaces plus one term
//! for each possible number `b` of boundary circles on the filled torus,
//! `b = 1..=Q` with `Q = floor(4 pi (g - 1) / (L - 2 pi))` for a filling slope
//! of length `L > 2 pi`. The only floating point is in `Q`, evaluated with
//! outward rounding so that a reported `Q` is certain.

use crate::bounds::{cubic_exponent, general_count_for, pow, BoundReport, Factor, Inputs};
use crate::farey::Slope;
use crate::{Error, Result};
use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

const PI_LO: f64 = PI;

fn pi_hi() -> f64 {
    next_up(PI)
}

fn next_up(x: f64) -> f64 {
    if x.is_nan() || x == f64::INFINITY {
        return x;
    }
    if x == 0.0 {
        return f64::from_bits(1);
    }
    let bits = x.to_bits();
    f64::from_bits(if x > 0.0 { bits + 1 } else { bits - 1 })
}

fn next_down(x: f64) -> f64 {
    -next_up(-x)
}

/// Length of a slope on the cusp: a float, or an exact rational multiple of pi.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SlopeLength {
    Real(f64),
    PiMultiple { num: i64, den: i64 },
}

impl SlopeLength {
    pub fn approx(&self) -> f64 {
        match *self {
            SlopeLength::Real(x) => x,
            SlopeLength::PiMultiple { num, den } => num as f64 / den as f64 * PI,
        }
    }
}

impl fmt::Display for SlopeLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SlopeLength::Real(x) => write!(f, "{x}"),
            SlopeLength::PiMultiple { num, den: 1 } => write!(f, "{num}pi"),
            SlopeLength::PiMultiple { num, den } => write!(f, "{num}/{den}pi"),
        }
    }
}

impl FromStr for SlopeLength {
    type Err = Error;
    /// Accepts `6.70`, `4pi`, `4*pi`, `9/2pi` and `pi`.
    fn from_str(s: &str) -> Result<SlopeLength> {
        let bad = || Error::Parse(format!("`{s}` is not a length"));
        let t = s.trim().to_ascii_lowercase().replace(' ', "");
        if let Some(coef) = t.strip_suffix("pi") {
            let coef = coef.strip_suffix('*').unwrap_or(coef);
            let (num, den) = match coef.split_once('/') {
                Some((a, b)) => (
                    a.parse::<i64>().map_err(|_| bad())?,
                    b.parse::<i64>().map_err(|_| bad())?,
                ),
                None if coef.is_empty() => (1, 1),
                None => (coef.parse::<i64>().map_err(|_| bad())?, 1),
            };
            if den <= 0 || num <= 0 {
                return Err(bad());
            }
            return Ok(SlopeLength::PiMultiple { num, den });
        }
        let x: f64 = t.parse().map_err(|_| bad())?;
        if !x.is_finite() || x <= 0.0 {
            return Err(bad());
        }
        Ok(SlopeLength::Real(x))
    }
}

/// Combinatorial lower bound on the length of a slope `p/q`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LengthBound {
    /// `3.35 n |q| / (3 (n - chi_pi))`.
    pub length: f64,
    /// `5.627 (1 - chi_pi / n)`; when `|q|` exceeds it, the length exceeds 2 pi.
    pub threshold: f64,
    pub applicable: bool,
}

pub fn slope_length_lower_bound(n: u64, chi_pi: i64, q: i64) -> Result<LengthBound> {
    if (n as i64) <= chi_pi {
        return Err(Error::OutOfDomain(format!(
            "need n > chi(Pi), got n = {n}, chi = {chi_pi}"
        )));
    }
    if q == 0 {
        return Err(Error::OutOfDomain("the meridian slope has q = 0".into()));
    }
    let n_f = n as f64;
    let length = 3.35 * n_f * q.unsigned_abs() as f64 / (3.0 * (n_f - chi_pi as f64));
    let threshold = 5.627 * (1.0 - chi_pi as f64 / n_f);
    Ok(LengthBound {
        length,
        threshold,
        applicable: q.unsigned_abs() as f64 > threshold,
    })
}

/// `floor(4 pi (g - 1) / (L - 2 pi))`, the largest boundary count summed over.
pub fn boundary_budget_q(genus: u64, length: SlopeLength) -> Result<u64> {
    if genus == 0 {
        return Err(Error::OutOfDomain("genus must be at least 1".into()));
    }
    let g1 = genus - 1;
    match length {
        SlopeLength::PiMultiple { num, den } => {
            // 4 pi (g-1) / (r pi - 2 pi) = 4 (g-1) den / (num - 2 den).
            let excess = num as i128 - 2 * den as i128;
            if excess <= 0 {
                return Err(Error::HypothesisFailed(format!(
                    "slope length {length} is not greater than 2pi"
                )));
            }
            Ok((4 * g1 as i128 * den as i128 / excess) as u64)
        }
        SlopeLength::Real(l) => {
            let two_pi_hi = next_up(2.0 * pi_hi());
            if l <= two_pi_hi {
                return Err(Error::HypothesisFailed(format!(
                    "slope length {l} is not certainly greater than 2pi"
                )));
            }
            if g1 == 0 {
                return Ok(0);
            }
            let num_lo = next_down(4.0 * g1 as f64 * PI_LO);
            let num_hi = next_up(4.0 * g1 as f64 * pi_hi());
            let den_lo = next_down(l - two_pi_hi);
            let den_hi = next_up(l - next_down(2.0 * PI_LO));
            let lo = next_down(num_lo / den_hi);
            let hi = next_up(num_hi / den_lo);
            if lo.floor() == hi.floor() {
                Ok(lo.floor() as u64)
            } else {
                Err(Error::AmbiguousFloor { lo, hi })
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FillingQuery {
    pub n: u64,
    pub genus: u64,
    pub x: u64,
    pub slope: Slope,
    pub length: SlopeLength,
}

impl FillingQuery {
    /// Uses the combinatorial lower bound as the slope length, rounded down
    /// so the resulting count stays an upper bound.
    pub fn with_derived_length(
        n: u64,
        genus: u64,
        x: u64,
        slope: Slope,
        chi_pi: i64,
    ) -> Result<FillingQuery> {
        let bound = slope_length_lower_bound(n, chi_pi, slope.q)?;
        Ok(FillingQuery {
            n,
            genus,
            x,
            slope,
            length: SlopeLength::Real(next_down(bound.length)),
        })
    }
}

/// One summand of the filling count, before evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DehnTerm {
    /// Boundary circles on the filled torus; 0 for the closed-surface term.
    pub b: u64,
    pub chi: i64,
    /// Exponent of `2 X (g+1)`.
    pub classes_exponent: u64,
    /// Exponent of `6n`.
    pub curves_exponent: u64,
}

fn validate(fq: &FillingQuery) -> Result<u64> {
    if fq.genus < 2 {
        return Err(Error::OutOfDomain(format!(
            "genus must be at least 2, got {}",
            fq.genus
        )));
    }
    if fq.n == 0 {
        return Err(Error::OutOfDomain(
            "the diagram needs at least one crossing".into(),
        ));
    }
    if fq.x == 0 {
        return Err(Error::OutOfDomain("X must be positive".into()));
    }
    if fq.slope.q == 0 {
        return Err(Error::HypothesisFailed(
            "the filling slope must not be the meridian".into(),
        ));
    }
    boundary_budget_q(fq.genus, fq.length)
}

/// The terms of the sum without evaluating them.
pub fn dehn_filling_terms(fq: &FillingQuery) -> Result<Vec<DehnTerm>> {
    let q = validate(fq)?;
    let g = fq.genus as i64;
    let closed = 2 - 2 * g;
    let mut terms = vec![DehnTerm {
        b: 0,
        chi: closed,
        classes_exponent: (-4 * closed + 2) as u64,
        curves_exponent: cubic_exponent(closed),
    }];
    for b in 1..=q {
        let k = 2 * g + b as i64 - 2;
        let k = k as i128;
        terms.push(DehnTerm {
            b,
            chi: closed - b as i64,
            classes_exponent: (8 * g + 4 * b as i64 - 6) as u64,
            curves_exponent: (800 * k * k * k + 80 * k * k) as u64,
        });
    }
    Ok(terms)
}

/// Exact value of the filling count.
pub fn dehn_filling_bound(fq: &FillingQuery) -> Result<BoundReport> {
    let terms = dehn_filling_terms(fq)?;
    let q = terms.len() as u64 - 1;
    let g = fq.genus;
    let closed = general_count_for(fq.n, 2 - 2 * g as i64, g, fq.x)?;
    let classes = 2 * fq.x * (g + 1);
    let rest: Vec<BoundReport> = terms[1..]
        .par_iter()
        .map(|t| {
            let factors = vec![
                Factor {
                    name: "classes".into(),
                    base: classes,
                    exponent: t.classes_exponent,
                },
                Factor {
                    name: "curves".into(),
                    base: 6 * fq.n,
                    exponent: t.curves_exponent,
                },
            ];
            let value = factors.iter().map(|f| pow(f.base, f.exponent)).product();
            let inputs = Inputs {
                n: fq.n,
                chi: t.chi,
                genus: Some(g),
                boundary: Some(t.b),
                orientable: Some(true),
                x: Some(fq.x),
                ..Inputs::default()
            };
            BoundReport {
                bound: "filling_term".into(),
                inputs,
                value,
                factors,
                terms: Vec::new(),
            }
        })
        .collect();
    let mut all = Vec::with_capacity(rest.len() + 1);
    all.push(closed);
    all.extend(rest);
    let inputs = Inputs {
        n: fq.n,
        chi: 2 - 2 * g as i64,
        genus: Some(g),
        x: Some(fq.x),
        slope: Some(fq.slope.to_string()),
        length: Some(fq.length.to_string()),
        boundary_budget: Some(q),
        ..Inputs::default()
    };
    Ok(BoundReport::from_terms("dehn", inputs, all))
}
