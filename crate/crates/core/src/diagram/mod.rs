//! Link diagrams on closed orientable surfaces.
//!
//! A diagram is stored as a combinatorial map. Every crossing owns four
//! half-edges, numbered `4 * crossing + slot`, with slots listed
//! counterclockwise. Edges pair half-edges, and the rotation at each crossing
//! determines the faces, the genus of the projection surface, and hence
//! everything downstream.
//!
//! ```text
//!        slot 2
//!          |
//! slot 3 --+-- slot 1      PD: X(a, b, c, d) = slots (0, 1, 2, 3)
//!          |               strand (a, c) passes under
//!        slot 0
//! ```

mod gauss;
mod pd;
mod validate;

pub use gauss::parse_gauss;
pub use pd::parse_pd;
pub use validate::{ValidationReport, Verdict};

use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

/// Half-edge (dart) index: `4 * crossing + slot`.
pub type HalfEdge = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("malformed token `{0}`")]
    MalformedToken(String),
    #[error("diagram has no crossings")]
    Empty,
    #[error("edge label {label} appears {count} time(s), expected exactly 2")]
    LabelCount { label: u64, count: usize },
    #[error("strand does not close up: {0}")]
    OpenStrand(String),
    #[error("diagram is not checkerboard colorable: {0}")]
    NotCheckerboardColorable(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    White,
    Shaded,
}

impl Color {
    pub fn flip(self) -> Color {
        match self {
            Color::White => Color::Shaded,
            Color::Shaded => Color::White,
        }
    }
}

/// A 4-valent crossing. `slots` holds the edge labels counterclockwise and
/// `over` the opposite slot pair carrying the overstrand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Crossing {
    pub id: usize,
    pub slots: [u64; 4],
    pub over: [usize; 2],
}

impl Crossing {
    /// PD convention: slots 0 and 2 form the understrand.
    pub fn from_pd(id: usize, slots: [u64; 4]) -> Crossing {
        Crossing {
            id,
            slots,
            over: [1, 3],
        }
    }

    pub fn is_over(&self, slot: usize) -> bool {
        slot % 2 == self.over[0] % 2
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub label: u64,
    /// The two half-edges, smaller id first.
    pub ends: [HalfEdge; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Face {
    /// Boundary walk, starting at the lowest half-edge.
    pub darts: Vec<HalfEdge>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }
}

/// A connected component of the diagram graph, which we take to fill one
/// component of the projection surface.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurfaceComponent {
    pub crossings: Vec<usize>,
    pub faces: Vec<usize>,
    pub genus: usize,
}

impl SurfaceComponent {
    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * self.genus as i64
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinkComponent {
    /// Edge indices in traversal order.
    pub edges: Vec<usize>,
    /// Half-edges through which the strand enters each crossing it meets.
    pub passages: Vec<HalfEdge>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diagram {
    pub crossings: Vec<Crossing>,
    pub edges: Vec<Edge>,
    pub faces: Vec<Face>,
    pub genus: usize,
    pub surface_components: Vec<SurfaceComponent>,
    pub link_components: Vec<LinkComponent>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coloring: Option<Vec<Color>>,
    #[serde(skip)]
    edge_of: Vec<usize>,
    #[serde(skip)]
    face_of: Vec<usize>,
}

impl Diagram {
    /// Builds the combinatorial map from crossings whose slots reference edge
    /// labels. Every label must occur exactly twice.
    pub fn from_crossings(crossings: Vec<Crossing>) -> Result<Diagram, DiagramError> {
        if crossings.is_empty() {
            return Err(DiagramError::Empty);
        }
        let mut occurrences: BTreeMap<u64, Vec<HalfEdge>> = BTreeMap::new();
        for (i, c) in crossings.iter().enumerate() {
            for (s, &label) in c.slots.iter().enumerate() {
                occurrences.entry(label).or_default().push(4 * i + s);
            }
        }
        let mut edges = Vec::with_capacity(occurrences.len());
        for (&label, ends) in &occurrences {
            if ends.len() != 2 {
                return Err(DiagramError::LabelCount {
                    label,
                    count: ends.len(),
                });
            }
            edges.push(Edge {
                label,
                ends: [ends[0], ends[1]],
            });
        }
        let crossings: Vec<Crossing> = crossings
            .into_iter()
            .enumerate()
            .map(|(i, c)| Crossing { id: i, ..c })
            .collect();

        let mut edge_of = vec![0; 4 * crossings.len()];
        for (k, e) in edges.iter().enumerate() {
            edge_of[e.ends[0]] = k;
            edge_of[e.ends[1]] = k;
        }

        let mut d = Diagram {
            crossings,
            edges,
            faces: Vec::new(),
            genus: 0,
            surface_components: Vec::new(),
            link_components: Vec::new(),
            coloring: None,
            edge_of,
            face_of: Vec::new(),
        };
        d.trace_faces();
        d.split_surface_components();
        d.trace_strands();
        Ok(d)
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn half_edge_count(&self) -> usize {
        4 * self.crossings.len()
    }

    pub fn edge_of(&self, h: HalfEdge) -> usize {
        self.edge_of[h]
    }

    pub fn face_of(&self, h: HalfEdge) -> usize {
        self.face_of[h]
    }

    /// The half-edge at the other end of `h`'s edge.
    pub fn opposite(&self, h: HalfEdge) -> HalfEdge {
        let e = &self.edges[self.edge_of[h]];
        if e.ends[0] == h {
            e.ends[1]
        } else {
            e.ends[0]
        }
    }

    /// Next half-edge of the face walk: cross the edge, then turn left.
    pub fn face_successor(&self, h: HalfEdge) -> HalfEdge {
        let a = self.opposite(h);
        4 * (a / 4) + (a % 4 + 3) % 4
    }

    pub fn is_over(&self, h: HalfEdge) -> bool {
        self.crossings[h / 4].is_over(h % 4)
    }

    /// The two faces on either side of edge `k` (possibly equal).
    pub fn edge_faces(&self, k: usize) -> [usize; 2] {
        let e = &self.edges[k];
        [self.face_of[e.ends[0]], self.face_of[e.ends[1]]]
    }

    /// Euler characteristic of the whole projection surface.
    pub fn surface_euler_characteristic(&self) -> i64 {
        self.surface_components
            .iter()
            .map(SurfaceComponent::euler_characteristic)
            .sum()
    }

    /// Index of the surface component containing crossing `c`.
    pub fn component_of_crossing(&self, c: usize) -> usize {
        self.surface_components
            .iter()
            .position(|s| s.crossings.binary_search(&c).is_ok())
            .expect("every crossing lies in a component")
    }

    fn trace_faces(&mut self) {
        let total = self.half_edge_count();
        let mut face_of = vec![usize::MAX; total];
        let mut faces = Vec::new();
        for start in 0..total {
            if face_of[start] != usize::MAX {
                continue;
            }
            let mut darts = Vec::new();
            let mut h = start;
            loop {
                face_of[h] = faces.len();
                darts.push(h);
                h = self.face_successor(h);
                if h == start {
                    break;
                }
            }
            faces.push(Face { darts });
        }
        self.faces = faces;
        self.face_of = face_of;
    }

    fn split_surface_components(&mut self) {
        let n = self.crossings.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in &self.edges {
            let (a, b) = (
                find(&mut parent, e.ends[0] / 4),
                find(&mut parent, e.ends[1] / 4),
            );
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for c in 0..n {
            let r = find(&mut parent, c);
            groups.entry(r).or_default().push(c);
        }
        let mut comps = Vec::new();
        for crossings in groups.into_values() {
            let faces: Vec<usize> = (0..self.faces.len())
                .filter(|&f| {
                    crossings
                        .binary_search(&(self.faces[f].darts[0] / 4))
                        .is_ok()
                })
                .collect();
            let v = crossings.len() as i64;
            let e = 2 * v;
            let f = faces.len() as i64;
            let twice_genus = 2 - (v - e + f);
            debug_assert!(twice_genus >= 0 && twice_genus % 2 == 0);
            comps.push(SurfaceComponent {
                crossings,
                faces,
                genus: (twice_genus / 2) as usize,
            });
        }
        self.genus = comps.iter().map(|c| c.genus).sum();
        self.surface_components = comps;
    }

    fn trace_strands(&mut self) {
        let mut seen = vec![false; self.edges.len()];
        let mut comps = Vec::new();
        for start in 0..self.edges.len() {
            if seen[start] {
                continue;
            }
            // Follow the PD orientation where it is visible: slot 0 is the
            // incoming understrand, slot 2 the outgoing one.
            let [h0, h1] = self.edges[start].ends;
            let mut enter = if h0 % 4 == 0 || h1 % 4 == 2 { h0 } else { h1 };
            let mut edges = Vec::new();
            let mut passages = Vec::new();
            let mut edge = start;
            loop {
                seen[edge] = true;
                edges.push(edge);
                passages.push(enter);
                let exit = 4 * (enter / 4) + (enter % 4 + 2) % 4;
                edge = self.edge_of[exit];
                enter = self.opposite(exit);
                if edge == start {
                    break;
                }
            }
            comps.push(LinkComponent { edges, passages });
        }
        self.link_components = comps;
    }

    /// Two-colors the faces so that the two sides of every edge differ. In
    /// each surface component the face holding the lowest half-edge is white.
    pub fn checkerboard_color(&self) -> Result<Diagram, DiagramError> {
        let coloring = self.checkerboard_coloring()?;
        let mut d = self.clone();
        d.coloring = Some(coloring);
        Ok(d)
    }

    pub(crate) fn checkerboard_coloring(&self) -> Result<Vec<Color>, DiagramError> {
        let mut adjacent: Vec<Vec<(usize, u64)>> = vec![Vec::new(); self.faces.len()];
        for (k, e) in self.edges.iter().enumerate() {
            let [a, b] = self.edge_faces(k);
            if a == b {
                return Err(DiagramError::NotCheckerboardColorable(format!(
                    "face {a} lies on both sides of edge {}",
                    e.label
                )));
            }
            adjacent[a].push((b, e.label));
            adjacent[b].push((a, e.label));
        }
        let mut color: Vec<Option<Color>> = vec![None; self.faces.len()];
        for root in 0..self.faces.len() {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(Color::White);
            let mut stack = vec![root];
            while let Some(f) = stack.pop() {
                let c = color[f].unwrap();
                for &(g, label) in &adjacent[f] {
                    match color[g] {
                        None => {
                            color[g] = Some(c.flip());
                            stack.push(g);
                        }
                        Some(cg) if cg == c => {
                            return Err(DiagramError::NotCheckerboardColorable(format!(
                                "faces {f} and {g} meet along edge {label} and are forced to the same color"
                            )))
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        Ok(color.into_iter().map(Option::unwrap).collect())
    }

    /// Pretty JSON; identical diagrams serialize to identical bytes.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("diagram serializes")
    }
}
