//! Integer-rectifiable 0- and 1-currents on metric graphs.
//!
//! A graph carries a length scale: either plain rational lengths or
//! rational multiples of π (the Hawaiian Earring model uses `2π/n` circles).
//! All positions and radii are rationals in scale units, so restriction,
//! slicing and the chain-representation algorithm are exact; π materializes
//! only in mass enclosures.

pub mod chain;
pub mod current;
pub mod graph;
pub mod represent;

pub use chain::{GraphChain0, GraphChain1, GraphPath, PathStep};
pub use current::{GraphCurrent0, GraphCurrent1};
pub use graph::{ArcSet, GraphMap, GraphPoint, MetricGraph, Scale};
pub use represent::{current_to_chain1, winding_vector, ChainRepCertificates};

use crate::rational::format_rational;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CurrentError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("edge lengths must be positive")]
    NonpositiveLength,
    #[error("vertex index out of range")]
    BadVertex,
    #[error("edge index out of range")]
    BadEdge,
    #[error("interval endpoints must satisfy 0 <= a < b <= 1")]
    BadInterval,
    #[error("slice radius {0} is not generic: it hits a vertex, a multiplicity breakpoint, or a tangency")]
    NonGenericRadius(String),
    #[error("no generic slice radius found in the admissible window")]
    NoGenericRadius,
    #[error("graph map is not piecewise affine onto edges")]
    BadMap,
    #[error("multiplicity is not constant on circle {0}: the current has boundary there")]
    NonConstantWinding(u32),
    #[error("graph is not the truncated circle-bouquet model")]
    NotHawaiian,
    #[error("ball of radius {0} around a cover center is not a tree")]
    BallNotContractible(String),
    #[error("cover construction failed: support escapes the remaining balls")]
    CoverFailure,
    #[error("epsilon must be positive")]
    NonpositiveEpsilon,
    #[error("path step is discontinuous")]
    DiscontinuousPath,
    #[error("invalid current JSON: {0}")]
    BadJson(String),
}

pub(crate) fn fmt_rat(r: &crate::rational::Rational) -> String {
    format_rational(r)
}
