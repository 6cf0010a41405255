//! Combinations of edge hits on a chunk side and the curves they determine.
//!
//! A curve meets every edge transversely, so each hit moves it from one face
//! of the edge to the other. Given the cyclic hit sequence, choosing the face
//! before the first hit fixes every later face, which leaves at most two
//! candidate routings.

mod area;
mod letters;

pub use area::{
    area, budgets, classify_area, gauss_bonnet_check, zero_area_disk_taxonomy, AreaCategory,
    Budgets, Piece, ZeroAreaClass,
};
pub use letters::{assign_letters, assign_letters_to_curve, NormalCurveWord};

use crate::chunk::{ChunkEdge, ChunkFace, ChunkSide};
use crate::diagram::Diagram;
use crate::{Error, Result};
use serde::Serialize;

/// Cyclic sequence of local edge indices on one chunk side.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Combination {
    pub hits: Vec<usize>,
}

impl Combination {
    pub fn new(hits: Vec<usize>) -> Result<Combination> {
        if hits.len() < 2 {
            return Err(Error::TooShort(hits.len()));
        }
        Ok(Combination { hits })
    }

    pub fn len(&self) -> usize {
        self.hits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hits.is_empty()
    }

    /// Least rotation over both traversal directions.
    pub fn canonical(&self) -> Combination {
        Combination {
            hits: least_dihedral(&self.hits),
        }
    }

    /// Parses names like `e3 t1.2 e5` (see [`ChunkSide::edge_name`]).
    pub fn parse(text: &str, side: &ChunkSide, diagram: &Diagram) -> Result<Combination> {
        let mut hits = Vec::new();
        for tok in text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
        {
            let idx = (0..side.edge_count())
                .find(|&i| side.edge_name(i, diagram) == tok)
                .ok_or_else(|| Error::Parse(format!("unknown chunk edge `{tok}`")))?;
            hits.push(idx);
        }
        Combination::new(hits)
    }
}

/// Least rotation of `seq` or of its reversal.
pub fn least_dihedral<T: Ord + Clone>(seq: &[T]) -> Vec<T> {
    let forward = least_rotation(seq);
    let mut rev = seq.to_vec();
    rev.reverse();
    let backward = least_rotation(&rev);
    forward.min(backward)
}

pub fn least_rotation<T: Ord + Clone>(seq: &[T]) -> Vec<T> {
    let m = seq.len();
    let best = (0..m)
        .min_by(|&a, &b| {
            (0..m)
                .map(|i| &seq[(a + i) % m])
                .cmp((0..m).map(|i| &seq[(b + i) % m]))
        })
        .unwrap_or(0);
    seq[best..].iter().chain(&seq[..best]).cloned().collect()
}

/// One arc of a curve: it lies in `face` and runs from hit `from` to the
/// next hit `to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Segment {
    pub face: usize,
    pub from: usize,
    pub to: usize,
}

/// A closed curve on a chunk side: `faces[i]` holds the arc leaving
/// `hits[i]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Curve {
    pub hits: Vec<usize>,
    pub faces: Vec<usize>,
}

impl Curve {
    pub fn segments(&self) -> Vec<Segment> {
        let m = self.hits.len();
        (0..m)
            .map(|i| Segment {
                face: self.faces[i],
                from: self.hits[i],
                to: self.hits[(i + 1) % m],
            })
            .collect()
    }

    /// The hit sequence read back off the segments.
    pub fn combination(&self) -> Combination {
        Combination {
            hits: self.segments().iter().map(|s| s.from).collect(),
        }
    }

    /// Canonical form of the curve as an unoriented cyclic sequence of
    /// (hit, following face) pairs.
    pub fn canonical(&self) -> Curve {
        let m = self.hits.len();
        let fwd: Vec<(usize, usize)> = (0..m).map(|i| (self.hits[i], self.faces[i])).collect();
        // Reversed, the face following hit i is the one that preceded it.
        let bwd: Vec<(usize, usize)> = (0..m)
            .rev()
            .map(|i| (self.hits[i], self.faces[(i + m - 1) % m]))
            .collect();
        let best = least_rotation(&fwd).min(least_rotation(&bwd));
        Curve {
            hits: best.iter().map(|p| p.0).collect(),
            faces: best.iter().map(|p| p.1).collect(),
        }
    }

    /// Arcs do not return to the edge they left, and region arcs do not join
    /// a truncation edge to an interior edge meeting it at a corner, nor to
    /// another truncation edge of the same quad. The last only happens on
    /// diagrams where a region meets one crossing twice.
    pub fn is_locally_normal(&self, side: &ChunkSide, diagram: &Diagram) -> bool {
        self.segments().iter().all(|s| {
            if s.from == s.to {
                return false;
            }
            if !matches!(side.faces[s.face], ChunkFace::Region { .. }) {
                return true;
            }
            match (side.edges[s.from], side.edges[s.to]) {
                (ChunkEdge::Truncation { crossing, corner }, ChunkEdge::Interior { edge })
                | (ChunkEdge::Interior { edge }, ChunkEdge::Truncation { crossing, corner }) => {
                    edge != diagram.edge_of(4 * crossing + corner)
                        && edge != diagram.edge_of(4 * crossing + (corner + 1) % 4)
                }
                (
                    ChunkEdge::Truncation { crossing: a, .. },
                    ChunkEdge::Truncation { crossing: b, .. },
                ) => a != b,
                _ => true,
            }
        })
    }
}

/// Routes a combination through faces. Errors if no routing exists, or if
/// two routings exist that are genuinely different curves.
pub fn curve_from_combination(side: &ChunkSide, c: &Combination) -> Result<Curve> {
    if c.hits.len() < 2 {
        return Err(Error::TooShort(c.hits.len()));
    }
    if let Some(&bad) = c.hits.iter().find(|&&h| h >= side.edge_count()) {
        return Err(Error::Parse(format!("edge index {bad} out of range")));
    }
    let routings: Vec<Curve> = side.edge_faces[c.hits[0]]
        .iter()
        .filter_map(|&before| route(side, &c.hits, before))
        .collect();
    match routings.as_slice() {
        [] => {
            let m = c.hits.len();
            let (a, b) = (0..m)
                .map(|i| (c.hits[i], c.hits[(i + 1) % m]))
                .find(|&(a, b)| {
                    !side.edge_faces[a]
                        .iter()
                        .any(|f| side.edge_faces[b].contains(f))
                })
                .unwrap_or((c.hits[0], c.hits[1]));
            Err(Error::NonAdjacentHits(format!("#{a}"), format!("#{b}")))
        }
        [one] => Ok(one.clone()),
        [a, b] if a.canonical() == b.canonical() => Ok(a.clone()),
        _ => Err(Error::AmbiguousFace),
    }
}

fn route(side: &ChunkSide, hits: &[usize], before: usize) -> Option<Curve> {
    let mut cur = side.other_face(hits[0], before);
    let mut faces = Vec::with_capacity(hits.len());
    faces.push(cur);
    for &h in &hits[1..] {
        if !side.edge_faces[h].contains(&cur) {
            return None;
        }
        cur = side.other_face(h, cur);
        faces.push(cur);
    }
    (cur == before).then(|| Curve {
        hits: hits.to_vec(),
        faces,
    })
}
