//! Brute-force enumeration of closed curves on a chunk side, for comparing
//! actual counts with the `(6n)^k` overcount.

use crate::bigint;
use crate::bounds::pow;
use crate::chunk::{ChunkEdge, ChunkSide};
use crate::curves::{
    assign_letters_to_curve, least_dihedral, zero_area_disk_taxonomy, Combination, Curve,
    ZeroAreaClass,
};
use crate::diagram::Diagram;
use crate::{Error, Result};
use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::time::{Duration, Instant};

/// Largest hit budget accepted without an explicit override.
pub const DESK_SCALE_MAX_HITS: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationOptions {
    pub max_hits: usize,
    /// Restrict to interior edges, ignoring truncation edges.
    pub interior_only: bool,
    /// Lift the desk-scale guard on `max_hits`.
    pub allow_large: bool,
}

impl EnumerationOptions {
    pub fn new(max_hits: usize) -> EnumerationOptions {
        EnumerationOptions {
            max_hits,
            interior_only: false,
            allow_large: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnumerationResult {
    /// Side and surface component, e.g. `+0`.
    pub side: String,
    pub crossings: usize,
    pub max_hits: usize,
    pub interior_only: bool,
    /// Distinct canonical combinations of length `2..=max_hits`.
    pub count: u64,
    /// Combinations whose first routing passes the local normality filter.
    pub normal_candidates: u64,
    pub by_length: BTreeMap<usize, u64>,
    /// Keyed by canonical S/B word.
    pub by_word: BTreeMap<String, u64>,
    #[serde(serialize_with = "bigint::serialize")]
    pub bound: BigUint,
    /// `count / bound`.
    pub ratio: f64,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Rough memory needed, in bytes, from the branching factor of the side.
pub fn memory_estimate(side: &ChunkSide, max_hits: usize) -> f64 {
    let branching = side
        .walks
        .iter()
        .map(Vec::len)
        .max()
        .unwrap_or(1)
        .saturating_sub(1)
        .max(1) as f64;
    side.edge_count() as f64 * branching.powi(max_hits.saturating_sub(1) as i32) * 48.0
}

fn pack(hits: &[usize]) -> u128 {
    hits.iter()
        .fold(hits.len() as u128, |acc, &h| (acc << 8) | h as u128)
}

/// Depth-first search over closed transverse walks whose least hit is `e0`.
/// Calls `visit` with the hits and the face after each hit.
fn closed_walks(
    side: &ChunkSide,
    allowed: &[usize],
    e0: usize,
    max_hits: usize,
    visit: &mut impl FnMut(&[usize], &[usize]),
) {
    let mut hits = vec![e0];
    let mut faces = Vec::with_capacity(max_hits);
    for &g in &side.edge_faces[e0] {
        faces.clear();
        faces.push(side.other_face(e0, g));
        extend(side, allowed, e0, g, max_hits, &mut hits, &mut faces, visit);
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    side: &ChunkSide,
    allowed: &[usize],
    e0: usize,
    g: usize,
    max_hits: usize,
    hits: &mut Vec<usize>,
    faces: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize], &[usize]),
) {
    let cur = *faces.last().expect("nonempty");
    if hits.len() >= 2 && cur == g {
        visit(hits, faces);
    }
    if hits.len() == max_hits {
        return;
    }
    for &h in &allowed_in_walk(side, allowed, cur) {
        if h < e0 {
            continue;
        }
        hits.push(h);
        faces.push(side.other_face(h, cur));
        extend(side, allowed, e0, g, max_hits, hits, faces, visit);
        hits.pop();
        faces.pop();
    }
}

fn allowed_in_walk(side: &ChunkSide, allowed: &[usize], face: usize) -> Vec<usize> {
    let mut w: Vec<usize> = side.walks[face]
        .iter()
        .copied()
        .filter(|h| allowed.binary_search(h).is_ok())
        .collect();
    w.sort_unstable();
    w.dedup();
    w
}

fn allowed_edges(side: &ChunkSide, interior_only: bool) -> Vec<usize> {
    (0..side.edge_count())
        .filter(|&e| !interior_only || matches!(side.edges[e], ChunkEdge::Interior { .. }))
        .collect()
}

struct Partial {
    count: u64,
    normal: u64,
    by_length: BTreeMap<usize, u64>,
    by_word: BTreeMap<String, u64>,
}

/// Counts canonical cyclic hit sequences of length `2..=max_hits` that close
/// up as transverse curves. Runs in parallel over start edges; the result
/// does not depend on the number of workers.
pub fn enumerate_combinations(
    side: &ChunkSide,
    diagram: &Diagram,
    opts: &EnumerationOptions,
) -> Result<EnumerationResult> {
    if opts.max_hits > DESK_SCALE_MAX_HITS && !opts.allow_large {
        return Err(Error::DeskScaleExceeded(opts.max_hits, DESK_SCALE_MAX_HITS));
    }
    if side.edge_count() > 255 {
        return Err(Error::DeskScaleExceeded(side.edge_count(), 255));
    }
    let start = Instant::now();
    let allowed = allowed_edges(side, opts.interior_only);
    let max_hits = opts.max_hits;
    let partials: Vec<Partial> = allowed
        .par_iter()
        .map(|&e0| {
            let mut seen = HashSet::new();
            let mut p = Partial {
                count: 0,
                normal: 0,
                by_length: BTreeMap::new(),
                by_word: BTreeMap::new(),
            };
            closed_walks(side, &allowed, e0, max_hits, &mut |hits, faces| {
                if !seen.insert(pack(&least_dihedral(hits))) {
                    return;
                }
                let curve = Curve {
                    hits: hits.to_vec(),
                    faces: faces.to_vec(),
                };
                p.count += 1;
                *p.by_length.entry(hits.len()).or_default() += 1;
                if curve.is_locally_normal(side, diagram) {
                    p.normal += 1;
                }
                let word = assign_letters_to_curve(side, &curve, false)
                    .expect("plain letters always assign");
                *p.by_word.entry(word.word).or_default() += 1;
            });
            p
        })
        .collect();

    let mut count = 0;
    let mut normal_candidates = 0;
    let mut by_length = BTreeMap::new();
    let mut by_word = BTreeMap::new();
    for p in partials {
        count += p.count;
        normal_candidates += p.normal;
        for (k, v) in p.by_length {
            *by_length.entry(k).or_default() += v;
        }
        for (k, v) in p.by_word {
            *by_word.entry(k).or_default() += v;
        }
    }
    let n = side.crossing_count() as u64;
    let bound = pow(6 * n, max_hits as u64);
    let ratio = if count == 0 {
        0.0
    } else {
        10f64.powf((count as f64).log10() - bigint::log10(&bound))
    };
    Ok(EnumerationResult {
        side: format!("{}{}", side.side, side.component),
        crossings: side.crossing_count(),
        max_hits,
        interior_only: opts.interior_only,
        count,
        normal_candidates,
        by_length,
        by_word,
        bound,
        ratio,
        elapsed: start.elapsed(),
    })
}

/// All distinct combinations, canonical and sorted, for small budgets.
pub fn list_combinations(side: &ChunkSide, opts: &EnumerationOptions) -> Result<Vec<Combination>> {
    if opts.max_hits > DESK_SCALE_MAX_HITS && !opts.allow_large {
        return Err(Error::DeskScaleExceeded(opts.max_hits, DESK_SCALE_MAX_HITS));
    }
    let allowed = allowed_edges(side, opts.interior_only);
    let mut set = BTreeSet::new();
    for &e0 in &allowed {
        closed_walks(side, &allowed, e0, opts.max_hits, &mut |hits, _| {
            set.insert(Combination {
                hits: least_dihedral(hits),
            });
        });
    }
    Ok(set.into_iter().collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZeroAreaCensus {
    pub side: String,
    pub meridianal: bool,
    /// Distinct locally normal four-hit curves examined.
    pub candidates: u64,
    pub classes: BTreeMap<String, u64>,
    /// Curves rejected because an arc leaves a quad through the side it
    /// entered.
    pub not_meridianal: u64,
    /// Zero-area words outside the five classes; expected empty.
    pub unclassified: Vec<String>,
}

/// Classifies the boundary words of all locally normal four-hit curves,
/// which are exactly the curves bounding zero-area disks.
pub fn zero_area_census(side: &ChunkSide, diagram: &Diagram, meridianal: bool) -> ZeroAreaCensus {
    let allowed = allowed_edges(side, false);
    let mut curves = BTreeSet::new();
    for &e0 in &allowed {
        closed_walks(side, &allowed, e0, 4, &mut |hits, faces| {
            if hits.len() == 4 {
                let c = Curve {
                    hits: hits.to_vec(),
                    faces: faces.to_vec(),
                };
                if c.is_locally_normal(side, diagram) {
                    curves.insert(c.canonical());
                }
            }
        });
    }
    let mut classes: BTreeMap<String, u64> = ZeroAreaClass::ALL
        .iter()
        .map(|c| (c.name().to_string(), 0))
        .collect();
    let mut not_meridianal = 0;
    let mut unclassified = BTreeSet::new();
    for c in &curves {
        let word = match assign_letters_to_curve(side, c, meridianal) {
            Ok(w) => w,
            Err(Error::NotMeridianal(_)) => {
                not_meridianal += 1;
                continue;
            }
            Err(e) => unreachable!("letters for a routed curve: {e}"),
        };
        match zero_area_disk_taxonomy(&word) {
            Ok(Some(class)) => *classes.get_mut(class.name()).expect("all classes present") += 1,
            _ => {
                unclassified.insert(word.word);
            }
        }
    }
    ZeroAreaCensus {
        side: format!("{}{}", side.side, side.component),
        meridianal,
        candidates: curves.len() as u64,
        classes,
        not_meridianal,
        unclassified: unclassified.into_iter().collect(),
    }
}
