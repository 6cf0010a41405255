//! Combinatorics of chunk decompositions for alternating link diagrams on
//! surfaces, with exact evaluation of the resulting surface-count bounds.
//!
//! The pipeline runs diagram → chunk boundary → normal-curve combinations →
//! letters and combinatorial area, alongside closed-form bounds evaluated with
//! big integers, the Farey-tree construction of nonorientable surfaces in
//! `T² × I`, and the Dehn-filling count.

pub mod bigint;
pub mod bounds;
pub mod chunk;
pub mod curves;
pub mod dehn;
pub mod diagram;
mod error;
pub mod farey;
pub mod oracle;

pub use bounds::{AmbientCase, AmbientContext, BoundReport, Representativity, SurfaceClass};
pub use chunk::{ChunkDecomposition, ChunkEdge, ChunkSide, Side};
pub use curves::{Combination, NormalCurveWord};
pub use diagram::{parse_gauss, parse_pd, Color, Diagram, DiagramError, ValidationReport, Verdict};
pub use error::{Error, Result};
pub use farey::{FareyPath, Slope};
