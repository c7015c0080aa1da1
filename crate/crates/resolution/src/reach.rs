//! Reachable sets `S(μ, i, d)`.

use dimer_core::Dimer;
use matchings::{path_degrees_to, Matching};
use serde::Serialize;

/// The vertices with a directed path to `vertex` of matching-degree `degree`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReachableSet {
    pub matching: Matching,
    pub vertex: usize,
    pub degree: u32,
    /// Sorted vertex indices.
    pub members: Vec<usize>,
}

impl ReachableSet {
    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }
}

/// `S(μ, i, d) = {j : min deg_μ of a path j → i is at most d}`.
///
/// Every face cycle has degree 1, so a vertex reachable in degree `D` is also
/// reachable in every degree above `D`.
pub fn reachable_set(d: &Dimer, m: &Matching, i: usize, degree: u32) -> ReachableSet {
    let dist = path_degrees_to(d, m, i);
    ReachableSet {
        matching: m.clone(),
        vertex: i,
        degree,
        members: (0..d.num_vertices())
            .filter(|&j| dist[j] <= degree)
            .collect(),
    }
}

/// The largest minimal path degree between any two vertices.
pub fn saturation(d: &Dimer, m: &Matching) -> u32 {
    (0..d.num_vertices())
        .flat_map(|i| path_degrees_to(d, m, i))
        .max()
        .unwrap_or(0)
}
