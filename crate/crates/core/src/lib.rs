//! Closed geodesics on a hyperbolic pair of pants: combinatorics of their
//! cyclic words, counting via a finite transition graph, exact holonomy,
//! a crossing-number oracle, and census bounds.
//!
//! The crate is `no_std` (with `alloc`); everything that needs an OS lives
//! in the companion command-line crate.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod census;
pub mod complex;
pub(crate) mod cyclic;
pub mod graph;
pub mod group;
pub mod hyperbolic;
pub mod mobius;
pub mod schottky;
pub mod word;

pub use census::{
    pants_lower_bound, run_census, surface_lower_bound, Census, CensusError, CensusOptions,
    CensusQuery, CensusRecord, HypothesisViolated, SurfaceBound, SurfaceParams,
};
pub use complex::{EdgeKind, Hexagon, OrientedEdge, Orientation, PantsComplex, Vertex};
pub use graph::{ArcLabel, BudgetExceeded, CyclicPath, EdgeGraph};
pub use group::{word_to_group, FreeGroupElement, FreeLetter};
pub use hyperbolic::{
    build_holonomy, geodesic_length, solve_hexagon, Holonomy, LengthError, MetricError,
    PantsMetric,
};
pub use mobius::{IdealPoint, Mat2};
pub use schottky::{
    build_domain, build_domain_offset, count_self_crossings, self_crossing_count,
    trace_geodesic, GeodesicPiece, OracleError, SchottkyDomain, TracedGeodesic, Wall,
};
pub use word::{CyclicWord, Decomposition, Subword, WordError};
