//! Decorated chunk boundaries.
//!
//! Cutting along the projection surface leaves, for each surface component,
//! a plus side and a minus side. Each side carries one interior edge per
//! diagram edge, one truncation quad per crossing with four truncation edges
//! around it, and faces made of the diagram regions and the quads.
//!
//! Truncation edge `(v, k)` sits at corner `k` of crossing `v`, between slots
//! `k` and `k + 1`, so it separates quad `v` from the region containing
//! half-edge `4v + k`.

use crate::diagram::{Diagram, DiagramError};
use crate::{Error, Result};
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Plus,
    Minus,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Plus => "+",
            Side::Minus => "-",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ChunkEdge {
    /// Follows diagram edge `edge`.
    Interior { edge: usize },
    /// Side `corner` of the quad truncating `crossing`.
    Truncation { crossing: usize, corner: usize },
}

impl ChunkEdge {
    pub fn is_truncation(&self) -> bool {
        matches!(self, ChunkEdge::Truncation { .. })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ChunkFace {
    Region { face: usize },
    Quad { crossing: usize },
}

/// One side of a chunk. Edges and faces use local indices: interior edges
/// come first (in diagram edge order), then four truncation edges per quad.
/// Regions come first among faces, then quads.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChunkSide {
    pub side: Side,
    pub component: usize,
    pub interior_edges: Vec<usize>,
    pub quads: Vec<usize>,
    pub edges: Vec<ChunkEdge>,
    pub faces: Vec<ChunkFace>,
    /// Boundary walk of each face as local edge indices.
    pub walks: Vec<Vec<usize>>,
    /// The two faces on either side of each local edge.
    pub edge_faces: Vec<[usize; 2]>,
}

impl ChunkSide {
    pub fn crossing_count(&self) -> usize {
        self.quads.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Face across `edge` from `face`.
    pub fn other_face(&self, edge: usize, face: usize) -> usize {
        let [a, b] = self.edge_faces[edge];
        if a == face {
            b
        } else {
            a
        }
    }

    pub fn local_truncation(&self, quad_index: usize, corner: usize) -> usize {
        self.interior_edges.len() + 4 * quad_index + corner
    }

    /// Canonical display name such as `e4` or `t2.1` (crossing 2, corner 1).
    pub fn edge_name(&self, edge: usize, diagram: &Diagram) -> String {
        match self.edges[edge] {
            ChunkEdge::Interior { edge } => format!("e{}", diagram.edges[edge].label),
            ChunkEdge::Truncation { crossing, corner } => format!("t{crossing}.{corner}"),
        }
    }

    /// Interior, truncation and total edge counts.
    pub fn census(&self) -> EdgeCensus {
        let interior = self.interior_edges.len();
        let truncation = self.edges.len() - interior;
        EdgeCensus {
            interior,
            truncation,
            total: interior + truncation,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EdgeCensus {
    pub interior: usize,
    pub truncation: usize,
    pub total: usize,
}

/// How interior edges of one region on the plus side glue to the minus side:
/// each edge moves one step along the region's boundary, in a direction fixed
/// by the region.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegionGluing {
    pub face: usize,
    /// Diagram edges around the region, in plus-side walk order.
    pub edges: Vec<usize>,
    /// `+1` if edge `i` glues to edge `i + 1`, `-1` if to edge `i - 1`.
    pub shift: i8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChunkDecomposition {
    pub sides: Vec<ChunkSide>,
    pub gluing: Vec<RegionGluing>,
    /// For every diagram edge, the crossing whose arc it glues to on the plus
    /// and on the minus side.
    pub crossing_arc_classes: Vec<[usize; 2]>,
}

impl ChunkDecomposition {
    pub fn side(&self, side: Side, component: usize) -> Option<&ChunkSide> {
        self.sides
            .iter()
            .find(|s| s.side == side && s.component == component)
    }

    /// Image on the minus side of diagram edge `edge` seen from `face` on the
    /// plus side.
    pub fn glue(&self, face: usize, edge: usize) -> Option<usize> {
        let g = self.gluing.iter().find(|g| g.face == face)?;
        let i = g.edges.iter().position(|&e| e == edge)?;
        let m = g.edges.len() as isize;
        Some(g.edges[(i as isize + g.shift as isize).rem_euclid(m) as usize])
    }

    /// Inverse of [`glue`](Self::glue).
    pub fn unglue(&self, face: usize, edge: usize) -> Option<usize> {
        let g = self.gluing.iter().find(|g| g.face == face)?;
        let i = g.edges.iter().position(|&e| e == edge)?;
        let m = g.edges.len() as isize;
        Some(g.edges[(i as isize - g.shift as isize).rem_euclid(m) as usize])
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("chunk decomposition serializes")
    }
}

/// Builds both sides of every chunk. The diagram must be alternating and
/// checkerboard colorable; it is cellular on its derived surface by
/// construction.
pub fn build_chunks(d: &Diagram) -> Result<ChunkDecomposition> {
    let report = d.validate(false, None);
    if !report.admits_chunks() {
        return Err(Error::PreconditionFailed(format!(
            "chunks need an alternating, cellular, checkerboard colorable diagram (alternating: {:?}, checkerboard: {:?})",
            report.alternating, report.checkerboard_colorable
        )));
    }
    d.checkerboard_coloring()
        .map_err(|e: DiagramError| Error::PreconditionFailed(e.to_string()))?;

    let mut sides = Vec::new();
    for (ci, comp) in d.surface_components.iter().enumerate() {
        for side in [Side::Plus, Side::Minus] {
            sides.push(build_side(d, ci, side, &comp.crossings, &comp.faces));
        }
    }

    let mut gluing = Vec::with_capacity(d.faces.len());
    for (f, face) in d.faces.iter().enumerate() {
        let edges: Vec<usize> = face.darts.iter().map(|&h| d.edge_of(h)).collect();
        // The edge arriving under at the next crossing glues forward.
        let arrival = d.opposite(face.darts[0]);
        let shift = if d.is_over(arrival) { -1 } else { 1 };
        gluing.push(RegionGluing {
            face: f,
            edges,
            shift,
        });
    }

    let crossing_arc_classes = d
        .edges
        .iter()
        .map(|e| {
            let (under, over) = if d.is_over(e.ends[0]) {
                (e.ends[1], e.ends[0])
            } else {
                (e.ends[0], e.ends[1])
            };
            [under / 4, over / 4]
        })
        .collect();

    Ok(ChunkDecomposition {
        sides,
        gluing,
        crossing_arc_classes,
    })
}

fn build_side(
    d: &Diagram,
    component: usize,
    side: Side,
    crossings: &[usize],
    faces: &[usize],
) -> ChunkSide {
    let interior_edges: Vec<usize> = (0..d.edges.len())
        .filter(|&k| crossings.binary_search(&(d.edges[k].ends[0] / 4)).is_ok())
        .collect();
    let quads = crossings.to_vec();
    let ni = interior_edges.len();

    let mut edges: Vec<ChunkEdge> = interior_edges
        .iter()
        .map(|&edge| ChunkEdge::Interior { edge })
        .collect();
    for &crossing in &quads {
        for corner in 0..4 {
            edges.push(ChunkEdge::Truncation { crossing, corner });
        }
    }
    let local_interior = |k: usize| interior_edges.binary_search(&k).expect("edge in component");
    let local_quad = |v: usize| quads.binary_search(&v).expect("crossing in component");
    let local_face = |f: usize| faces.binary_search(&f).expect("face in component");

    let mut chunk_faces = Vec::new();
    let mut walks = Vec::new();
    for &f in faces {
        let mut walk = Vec::with_capacity(2 * d.faces[f].len());
        for &h in &d.faces[f].darts {
            walk.push(ni + 4 * local_quad(h / 4) + h % 4);
            walk.push(local_interior(d.edge_of(h)));
        }
        if side == Side::Minus {
            walk.reverse();
        }
        chunk_faces.push(ChunkFace::Region { face: f });
        walks.push(walk);
    }
    for (qi, &crossing) in quads.iter().enumerate() {
        let mut walk: Vec<usize> = (0..4).map(|k| ni + 4 * qi + k).collect();
        if side == Side::Minus {
            walk.reverse();
        }
        chunk_faces.push(ChunkFace::Quad { crossing });
        walks.push(walk);
    }

    let mut edge_faces = vec![[usize::MAX; 2]; edges.len()];
    for (i, e) in edges.iter().enumerate() {
        edge_faces[i] = match *e {
            ChunkEdge::Interior { edge } => {
                let [a, b] = d.edge_faces(edge);
                let (a, b) = (local_face(a), local_face(b));
                [a.min(b), a.max(b)]
            }
            ChunkEdge::Truncation { crossing, corner } => [
                local_face(d.face_of(4 * crossing + corner)),
                faces.len() + local_quad(crossing),
            ],
        };
    }

    ChunkSide {
        side,
        component,
        interior_edges,
        quads,
        edges,
        faces: chunk_faces,
        walks,
        edge_faces,
    }
}

/// Per-side `(2n, 4n, 6n)` counts.
pub fn edge_census(c: &ChunkDecomposition) -> Vec<(Side, usize, EdgeCensus)> {
    c.sides
        .iter()
        .map(|s| (s.side, s.component, s.census()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::fixtures::*;
    use crate::diagram::parse_pd;

    fn chunks(pd: &str) -> (Diagram, ChunkDecomposition) {
        let d = parse_pd(pd).unwrap();
        let c = build_chunks(&d).unwrap();
        (d, c)
    }

    #[test]
    fn trefoil_counts() {
        let (_, c) = chunks(TREFOIL);
        assert_eq!(c.sides.len(), 2);
        for s in &c.sides {
            assert_eq!(
                s.census(),
                EdgeCensus {
                    interior: 6,
                    truncation: 12,
                    total: 18
                }
            );
            assert_eq!(s.quads.len(), 3);
            assert_eq!(s.faces.len(), 5 + 3);
        }
    }

    #[test]
    fn curl_and_figure_eight_counts() {
        let (_, c) = chunks(CURL);
        assert_eq!(
            c.sides[0].census(),
            EdgeCensus {
                interior: 2,
                truncation: 4,
                total: 6
            }
        );
        assert_eq!(c.sides[0].quads.len(), 1);
        let (_, c) = chunks(FIGURE_EIGHT);
        for s in &c.sides {
            assert_eq!((s.census().interior, s.census().truncation), (8, 16));
        }
    }

    #[test]
    fn nonalternating_rejected() {
        let d = parse_pd("X(1,4,2,5) X(3,6,4,1) X(2,6,3,5)").unwrap();
        assert!(matches!(
            build_chunks(&d),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn walks_match_edge_incidence() {
        for pd in [TREFOIL, FIGURE_EIGHT, CURL, GRANNY] {
            let (d, c) = chunks(pd);
            for s in &c.sides {
                let mut seen = vec![0usize; s.edges.len()];
                for (f, walk) in s.walks.iter().enumerate() {
                    for &e in walk {
                        seen[e] += 1;
                        assert!(s.edge_faces[e].contains(&f));
                    }
                    if let ChunkFace::Region { face } = s.faces[f] {
                        assert_eq!(walk.len(), 2 * d.faces[face].len());
                        // Interior and truncation edges alternate.
                        for i in 0..walk.len() {
                            let a = s.edges[walk[i]].is_truncation();
                            let b = s.edges[walk[(i + 1) % walk.len()]].is_truncation();
                            assert_ne!(a, b);
                        }
                    } else {
                        assert_eq!(walk.len(), 4);
                        assert!(walk.iter().all(|&e| s.edges[e].is_truncation()));
                    }
                }
                assert!(seen.iter().all(|&k| k == 2));
            }
        }
    }

    #[test]
    fn minus_side_mirrors_plus() {
        let (_, c) = chunks(FIGURE_EIGHT);
        let (p, m) = (&c.sides[0], &c.sides[1]);
        assert_eq!(p.edges, m.edges);
        assert_eq!(p.edge_faces, m.edge_faces);
        for (a, b) in p.walks.iter().zip(&m.walks) {
            let mut r = b.clone();
            r.reverse();
            assert_eq!(a, &r);
        }
    }

    #[test]
    fn crossing_arcs_collect_four_edges() {
        for pd in [TREFOIL, FIGURE_EIGHT, CURL] {
            let (d, c) = chunks(pd);
            let mut per = vec![[0usize; 2]; d.crossing_count()];
            for cls in &c.crossing_arc_classes {
                per[cls[0]][0] += 1;
                per[cls[1]][1] += 1;
            }
            assert!(per.iter().all(|p| *p == [2, 2]), "{pd}: {per:?}");
        }
    }

    #[test]
    fn gluing_respects_crossing_arcs_and_round_trips() {
        for pd in [TREFOIL, FIGURE_EIGHT, CURL, GRANNY] {
            let (d, c) = chunks(pd);
            let colors = d.checkerboard_coloring().unwrap();
            for g in &c.gluing {
                assert_eq!(g.edges.len(), d.faces[g.face].len());
                for &e in &g.edges {
                    let image = c.glue(g.face, e).unwrap();
                    assert_eq!(
                        c.crossing_arc_classes[e][0],
                        c.crossing_arc_classes[image][1]
                    );
                    assert_eq!(c.unglue(g.face, image), Some(e));
                }
            }
            // The rotation direction is a function of the face color.
            let mut by_color = std::collections::BTreeMap::new();
            for g in &c.gluing {
                let prev = by_color.insert(colors[g.face], g.shift);
                assert!(prev.is_none() || prev == Some(g.shift), "{pd}");
            }
        }
    }

    #[test]
    fn census_formula() {
        let (_, c) = chunks(TREFOIL);
        assert!(edge_census(&c)
            .iter()
            .all(|&(_, _, e)| (e.interior, e.truncation, e.total) == (6, 12, 18)));
    }

    #[test]
    fn split_diagram_gets_a_chunk_per_component() {
        let (_, c) = chunks("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3) X(7,7,8,8)");
        assert_eq!(c.sides.len(), 4);
        let counts: Vec<_> = c.sides.iter().map(|s| s.census().total).collect();
        assert_eq!(counts, vec![18, 18, 6, 6]);
    }
}
