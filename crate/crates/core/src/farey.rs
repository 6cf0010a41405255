//! Slopes on a torus and the Farey tree of even-numerator slopes.
//!
//! Slopes with even numerator, joined when their intersection number is 2,
//! form a tree. Halving numerators identifies it with the odd-denominator
//! part of the Farey graph, where the path to the root is found by repeatedly
//! stepping to the unique odd-denominator Farey neighbour of smaller height.
//! Each edge of the path from `0/1` to a target adds one band to a
//! nonorientable surface in `T² × I`.

use crate::{Error, Result};
use num_integer::Integer;
use serde::{Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

/// Reduced slope `p/q` with `q >= 0`; `1/0` is the only slope with `q = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Slope {
    pub p: i64,
    pub q: i64,
}

impl Slope {
    pub const ZERO: Slope = Slope { p: 0, q: 1 };
    pub const INFINITY: Slope = Slope { p: 1, q: 0 };

    pub fn new(p: i64, q: i64) -> Result<Slope> {
        if p == 0 && q == 0 {
            return Err(Error::Parse("0/0 is not a slope".into()));
        }
        if p.gcd(&q) != 1 {
            return Err(Error::Parse(format!("{p}/{q} is not reduced")));
        }
        Ok(Slope::normalized(p, q))
    }

    fn normalized(p: i64, q: i64) -> Slope {
        if q < 0 || (q == 0 && p < 0) {
            Slope { p: -p, q: -q }
        } else {
            Slope { p, q }
        }
    }

    fn signed_intersection(&self, other: &Slope) -> i128 {
        self.p as i128 * other.q as i128 - self.q as i128 * other.p as i128
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for Slope {
    type Err = Error;
    fn from_str(s: &str) -> Result<Slope> {
        let bad = || Error::Parse(format!("`{s}` is not a slope p/q"));
        let (p, q) = match s.trim().split_once('/') {
            Some((p, q)) => (
                p.trim().parse().map_err(|_| bad())?,
                q.trim().parse().map_err(|_| bad())?,
            ),
            None => (s.trim().parse().map_err(|_| bad())?, 1),
        };
        Slope::new(p, q)
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `|p_a q_b - q_a p_b|`.
pub fn intersection_number(a: &Slope, b: &Slope) -> u64 {
    a.signed_intersection(b).unsigned_abs() as u64
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FareyPath {
    pub base: Slope,
    pub vertices: Vec<Slope>,
}

impl FareyPath {
    pub fn edge_count(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn target(&self) -> Slope {
        *self.vertices.last().expect("path has a start")
    }
}

/// The unique path from `0/1` to `target` through even-numerator slopes,
/// consecutive slopes meeting twice.
pub fn farey_path(target: Slope) -> Result<FareyPath> {
    if target.p % 2 != 0 {
        return Err(Error::NotEvenSlope(target.to_string()));
    }
    let halved = Slope {
        p: target.p / 2,
        q: target.q,
    };
    let mut chain = if halved.p < 0 {
        root_chain(Slope {
            p: -halved.p,
            q: halved.q,
        })
        .into_iter()
        .map(|s| Slope { p: -s.p, q: s.q })
        .collect()
    } else {
        root_chain(halved)
    };
    chain.reverse();
    let vertices = chain
        .into_iter()
        .map(|s| Slope { p: 2 * s.p, q: s.q })
        .collect();
    Ok(FareyPath {
        base: Slope::ZERO,
        vertices,
    })
}

/// As [`farey_path`] after a change of basis taking `base` to `0/1`. The
/// target must meet `base` an even number of times.
pub fn farey_path_from(base: Slope, target: Slope) -> Result<FareyPath> {
    if base == Slope::ZERO {
        return farey_path(target);
    }
    let (a, b) = (base.p, base.q);
    // x a + y b = 1, so [[b, -a], [x, y]] lies in SL(2, Z) and sends base to 0/1.
    let ext = a.extended_gcd(&b);
    let (x, y) = if ext.gcd == 1 {
        (ext.x, ext.y)
    } else {
        (-ext.x, -ext.y)
    };
    let forward = |s: Slope| Slope::normalized(b * s.p - a * s.q, x * s.p + y * s.q);
    let back = |s: Slope| Slope::normalized(y * s.p + a * s.q, -x * s.p + b * s.q);
    let moved = forward(target);
    if moved.p % 2 != 0 {
        return Err(Error::NotEvenSlope(format!(
            "{target} meets base {base} an odd number of times"
        )));
    }
    let path = farey_path(moved)?;
    Ok(FareyPath {
        base,
        vertices: path.vertices.into_iter().map(back).collect(),
    })
}

/// Chain from a nonnegative odd-denominator slope down to `0/1`.
fn root_chain(mut s: Slope) -> Vec<Slope> {
    let mut chain = vec![s];
    while s != Slope::ZERO {
        s = odd_parent(s);
        chain.push(s);
    }
    chain
}

fn odd_parent(s: Slope) -> Slope {
    let (a, b) = (s.p, s.q);
    if b == 1 {
        return Slope { p: a - 1, q: 1 };
    }
    // Left Farey parent c/d has a d - b c = 1 with 0 < d < b; the right one
    // is (a - c)/(b - d). Exactly one has odd denominator.
    let d = a.extended_gcd(&b).x.rem_euclid(b);
    let c = (a * d - 1) / b;
    if d % 2 == 1 {
        Slope { p: c, q: d }
    } else {
        Slope { p: a - c, q: b - d }
    }
}

/// Nonorientable surface built by stacking one band per path edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BandSurface {
    pub genus: u64,
    pub chi: i64,
    pub boundary_slopes: [Slope; 2],
}

pub fn band_surface(path: &FareyPath) -> Result<BandSurface> {
    let k = path.edge_count();
    if k == 0 {
        return Err(Error::BoundaryParallel);
    }
    for w in path.vertices.windows(2) {
        if intersection_number(&w[0], &w[1]) != 2 {
            return Err(Error::InvariantViolation(format!(
                "{} and {} do not meet twice",
                w[0], w[1]
            )));
        }
    }
    Ok(BandSurface {
        genus: k as u64,
        chi: -(k as i64),
        boundary_slopes: [path.vertices[0], path.target()],
    })
}
