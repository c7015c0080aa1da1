//! Perfect matchings of dimer models.
//!
//! A perfect matching picks exactly one arrow from every face boundary. This
//! crate enumerates matchings, reads off their boundary values and the
//! positroid they span, and realises the partial order on matchings with a
//! fixed boundary value through height functions and face flips.

pub mod cover;
pub mod error;
pub mod matching;
pub mod paths;
pub mod poset;
pub mod positroid;

pub use cover::exact_covers;
pub use error::MatchingError;
pub use matching::{boundary_value, enumerate_matchings, matchings_with_boundary, Matching};
pub use paths::{path_degrees_from, path_degrees_to, UNREACHABLE};
pub use poset::{
    down_flip, extreme_matchings, flip, flip_neighbours, height, support_subgraph, up_flip,
    HeightFunction, SupportSubgraph,
};
pub use positroid::{
    gale_geq, positroid, positroid_contains_necklace_test, shifted_order, PositroidSet,
};
