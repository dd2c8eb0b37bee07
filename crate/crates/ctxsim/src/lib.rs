//! Context-dependent dissimilarity between boolean-attribute cases.
//!
//! A case is a named vector of boolean attribute values. The collection of
//! cases at hand — the context — determines a probability `p` for each
//! attribute, which maps to an entropy weight `h(p) = -log2(1 - 2p + 2p^2)`.
//! The dissimilarity between two cases is the sum of the weights of the
//! attributes on which they differ, so the same pair of cases can move
//! closer or further apart as the surrounding collection changes.
//!
//! ```
//! use ctxsim::{build_context, dissimilarity, AttributeSchema, CaseVector};
//!
//! let schema = AttributeSchema::new(["north", "central", "communist", "neutral"])?;
//! let cases = vec![
//!     CaseVector::new("Austria", vec![false, true, false, true]),
//!     CaseVector::new("Sweden", vec![true, false, false, true]),
//!     CaseVector::new("Poland", vec![false, false, true, false]),
//!     CaseVector::new("Hungary", vec![false, true, true, false]),
//! ];
//! let ctx = build_context(schema, &cases)?;
//! let d = dissimilarity(&ctx, &cases[0], &cases[1])?;
//! assert!((d - 1.678).abs() < 5e-4);
//! # Ok::<(), ctxsim::Error>(())
//! ```
//!
//! The [`streaming`] module estimates the same per-attribute probabilities
//! online, with an optional step-size floor that lets old observations fade
//! when the context drifts.

pub mod context;
pub mod distance;
pub mod streaming;
pub mod weights;

pub use context::{build_context, estimate_probabilities, AttributeSchema, CaseVector, ContextModel};
pub use distance::{
    dissimilarity, dissimilarity_matrix, group_with, hamming, rank_by_dissimilarity,
    value_mismatch, weighted_hamming, DissimilarityMatrix, Grouping, RankedCandidate,
    RankingResult, TIE_TOLERANCE,
};
pub use streaming::StreamingEstimator;
pub use weights::{
    attribute_weight, expected_path_length, joint_expected_path_length, similarity_weight,
    Probability, Weight,
};

use thiserror::Error;

/// Errors reported by this crate.
#[derive(Debug, Error, PartialEq)]
pub enum Error {
    #[error("probability {0} is outside [0, 1]")]
    ProbabilityOutOfRange(f64),

    #[error("case count must be at least 1")]
    ZeroCaseCount,

    #[error("case collection is empty")]
    EmptyCases,

    #[error("attribute name is empty")]
    EmptyAttributeName,

    #[error("duplicate attribute name `{0}`")]
    DuplicateAttribute(String),

    #[error("case `{case}` has {found} values, expected {expected}")]
    CaseLengthMismatch {
        case: String,
        expected: usize,
        found: usize,
    },

    #[error("vector lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("weight list has {weights} entries, vectors have {values}")]
    WeightLengthMismatch { weights: usize, values: usize },

    #[error("candidate list is empty")]
    EmptyCandidates,

    #[error("alpha floor count must be at least 1")]
    ZeroAlphaFloor,

    #[error("estimator has no observations yet")]
    NoObservations,
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
