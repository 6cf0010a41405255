use super::{curve_from_combination, least_dihedral, Combination, Curve};
use crate::chunk::{ChunkEdge, ChunkFace, ChunkSide};
use crate::{Error, Result};
use serde::Serialize;
use std::fmt;

/// Cyclic S/B/P word of a curve, stored in canonical rotation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct NormalCurveWord {
    pub word: String,
    pub s: usize,
    pub b: usize,
    pub p: usize,
}

impl NormalCurveWord {
    /// Builds a word from letters in cyclic order.
    pub fn from_letters(letters: &[char]) -> Result<NormalCurveWord> {
        let mut counts = [0usize; 3];
        for &c in letters {
            match c {
                'S' => counts[0] += 1,
                'B' => counts[1] += 1,
                'P' => counts[2] += 1,
                _ => return Err(Error::Parse(format!("letter `{c}` is not S, B or P"))),
            }
        }
        Ok(NormalCurveWord {
            word: least_dihedral(letters).into_iter().collect(),
            s: counts[0],
            b: counts[1],
            p: counts[2],
        })
    }

    pub fn parse(text: &str) -> Result<NormalCurveWord> {
        let letters: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        NormalCurveWord::from_letters(&letters)
    }

    /// Number of edge hits: a P stands for two.
    pub fn hits(&self) -> usize {
        self.s + self.b + 2 * self.p
    }
}

impl fmt::Display for NormalCurveWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word)
    }
}

/// Routes the combination and labels its hits.
pub fn assign_letters(
    side: &ChunkSide,
    c: &Combination,
    meridianal: bool,
) -> Result<NormalCurveWord> {
    let curve = curve_from_combination(side, c)?;
    assign_letters_to_curve(side, &curve, meridianal)
}

/// Interior hits are S. Truncation hits come in pairs joined by an arc across
/// a quad; each pair is BB, or in meridianal mode P when the arc cuts off a
/// single corner. A meridianal word containing any B has its P's relabeled BB.
pub fn assign_letters_to_curve(
    side: &ChunkSide,
    curve: &Curve,
    meridianal: bool,
) -> Result<NormalCurveWord> {
    let m = curve.hits.len();
    let corner = |i: usize| match side.edges[curve.hits[i]] {
        ChunkEdge::Truncation { corner, .. } => Some(corner),
        ChunkEdge::Interior { .. } => None,
    };
    let in_quad = |i: usize| matches!(side.faces[curve.faces[i]], ChunkFace::Quad { .. });

    // Start where no quad arc wraps around the end of the sequence.
    let start = (0..m).find(|&i| !in_quad((i + m - 1) % m)).unwrap_or(0);
    let mut letters = Vec::with_capacity(m);
    let mut i = 0;
    while i < m {
        let at = (start + i) % m;
        match corner(at) {
            None => {
                letters.push('S');
                i += 1;
            }
            Some(k) => {
                debug_assert!(in_quad(at), "truncation hit must lead into its quad");
                let next = (at + 1) % m;
                let k2 = corner(next).expect("quad arcs join truncation edges");
                if !meridianal {
                    letters.extend(['B', 'B']);
                } else if k == k2 {
                    return Err(Error::NotMeridianal(format!(
                        "arc enters and leaves quad {} through the same side",
                        side_crossing(side, curve.hits[at])
                    )));
                } else if (k + 2) % 4 == k2 {
                    letters.extend(['B', 'B']);
                } else {
                    letters.push('P');
                }
                i += 2;
            }
        }
    }
    if meridianal && letters.contains(&'B') && letters.contains(&'P') {
        letters = letters
            .into_iter()
            .flat_map(|c| if c == 'P' { vec!['B', 'B'] } else { vec![c] })
            .collect();
    }
    NormalCurveWord::from_letters(&letters)
}

fn side_crossing(side: &ChunkSide, edge: usize) -> usize {
    match side.edges[edge] {
        ChunkEdge::Truncation { crossing, .. } => crossing,
        ChunkEdge::Interior { edge } => edge,
    }
}
