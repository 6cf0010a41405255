use crate::diagram::DiagramError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("out of domain: {0}")]
    OutOfDomain(String),
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
    #[error("Gauss-Bonnet violation: total area {total} (pi/2 units), expected {expected}")]
    GaussBonnetViolation { total: i64, expected: i64 },
    #[error("combination needs at least 2 hits, got {0}")]
    TooShort(usize),
    #[error("consecutive hits {0} and {1} share no face")]
    NonAdjacentHits(String, String),
    #[error("hit sequence admits two routings through different faces")]
    AmbiguousFace,
    #[error("not meridianal: {0}")]
    NotMeridianal(String),
    #[error("constant X is required for this ambient case")]
    MissingX,
    #[error("representativity must be asserted > 4 for the {0} case")]
    RepresentativityUnasserted(String),
    #[error("floor is ambiguous: Q lies in [{lo}, {hi}]")]
    AmbiguousFloor { lo: f64, hi: f64 },
    #[error("slope {0} does not have an even numerator")]
    NotEvenSlope(String),
    #[error("path is empty: the surface is boundary parallel")]
    BoundaryParallel,
    #[error("max_hits {0} exceeds the desk-scale limit of {1}")]
    DeskScaleExceeded(usize, usize),
    #[error("bad input: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Diagram(DiagramError::NotCheckerboardColorable(_)) => {
                "not_checkerboard_colorable"
            }
            Error::Diagram(DiagramError::MalformedToken(_)) => "malformed_token",
            Error::Diagram(DiagramError::Empty) => "empty_diagram",
            Error::Diagram(DiagramError::LabelCount { .. }) => "label_count",
            Error::Diagram(DiagramError::OpenStrand(_)) => "open_strand",
            Error::PreconditionFailed(_) => "precondition_failed",
            Error::OutOfDomain(_) => "out_of_domain",
            Error::HypothesisFailed(_) => "hypothesis_failed",
            Error::InvariantViolation(_) => "invariant_violation",
            Error::GaussBonnetViolation { .. } => "gauss_bonnet_violation",
            Error::TooShort(_) => "too_short",
            Error::NonAdjacentHits(..) => "non_adjacent_hits",
            Error::AmbiguousFace => "ambiguous_face",
            Error::NotMeridianal(_) => "not_meridianal",
            Error::MissingX => "missing_x",
            Error::RepresentativityUnasserted(_) => "representativity_unasserted",
            Error::AmbiguousFloor { .. } => "ambiguous_floor",
            Error::NotEvenSlope(_) => "not_even_slope",
            Error::BoundaryParallel => "boundary_parallel",
            Error::DeskScaleExceeded(..) => "desk_scale_exceeded",
            Error::Parse(_) => "parse_error",
        }
    }

    /// Domain errors are well-formed requests the mathematics rejects; the
    /// rest are malformed input.
    pub fn is_domain(&self) -> bool {
        !matches!(
            self,
            Error::Parse(_)
                | Error::Diagram(
                    DiagramError::MalformedToken(_)
                        | DiagramError::Empty
                        | DiagramError::LabelCount { .. }
                        | DiagramError::OpenStrand(_)
                )
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
