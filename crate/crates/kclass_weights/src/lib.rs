//! K-theory classes of matching modules, computed combinatorially.
//!
//! Three independent routes lead to the matching attached to a vertex `j`:
//! the downstream wedges of arrows cut out by strands, the inverse of the
//! lattice map `η`, and minimal matching-degrees of directed paths from `j`.
//! This crate provides the first and third, together with the class of an
//! arbitrary matching module and the arrow weights that rewrite it.

pub mod error;
pub mod kclass;
pub mod oracle;
pub mod wedge;

pub use error::KClassError;
pub use kclass::{
    kclass_of_matching, standardised_class, weight_of_matching, weight_table, weights, wt_d,
    WeightTable, Weights,
};
pub use oracle::projective_matching_oracle;
pub use wedge::{
    downstream_wedge, muller_speyer_matching, muller_speyer_matchings, upstream_matching, Wedge,
    Wedges,
};
