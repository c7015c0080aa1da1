//! Downstream wedges of arrows and the matchings they define.
//!
//! Two strands cross at each internal arrow `α`. Their parts after the crossing
//! (the downstream tendrils) run to the boundary and, together with a boundary
//! interval, enclose the downstream wedge of `α`: the tiles on the side of `h α`.
//! At a boundary arrow only the strand starting there leaves the crossing, so a
//! single tendril bounds the wedge.

use std::collections::HashMap;

use dimer_core::{opposite, Dimer};
use matchings::Matching;
use serde::Serialize;
use strands::{strands, Region, RegionGraph, Strand};

use crate::error::KClassError;

/// The tiles in the downstream wedge of an arrow, as sorted vertex indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Wedge {
    pub arrow: usize,
    pub tiles: Vec<usize>,
}

impl Wedge {
    pub fn contains(&self, v: usize) -> bool {
        self.tiles.binary_search(&v).is_ok()
    }
}

/// Precomputed strands and region graph for computing many wedges.
pub struct Wedges<'a> {
    d: &'a Dimer,
    graph: RegionGraph,
    strands: Vec<Strand>,
    /// `(arrow, face)` passage to (strand index, position along the strand).
    passage: HashMap<(usize, usize), (usize, usize)>,
}

impl<'a> Wedges<'a> {
    pub fn new(d: &'a Dimer) -> Result<Wedges<'a>, KClassError> {
        let strands = strands(d)?;
        let mut passage = HashMap::new();
        for (s, strand) in strands.iter().enumerate() {
            for (t, p) in strand.passages().enumerate() {
                passage.insert(p, (s, t));
            }
        }
        Ok(Wedges {
            d,
            graph: RegionGraph::new(d),
            strands,
            passage,
        })
    }

    /// The downstream wedge of arrow `a`.
    pub fn wedge(&self, a: usize) -> Wedge {
        let d = self.d;
        let mut cut = vec![false; self.graph.num_corners()];
        for f in d.faces_of(a) {
            // Every passage lies on a boundary strand in a consistent model.
            if let Some(&(s, t)) = self.passage.get(&(a, f)) {
                self.graph
                    .cut_passages(d, self.strands[s].passages_from(t), &mut cut);
            }
        }
        let reached = self.graph.flood_tiles(&cut, Region::Tile(d.head(a)));
        Wedge {
            arrow: a,
            tiles: (0..d.num_vertices()).filter(|&v| reached[v]).collect(),
        }
    }

    pub fn all(&self) -> Vec<Wedge> {
        (0..self.d.num_arrows()).map(|a| self.wedge(a)).collect()
    }
}

pub fn downstream_wedge(d: &Dimer, a: usize) -> Result<Wedge, KClassError> {
    Ok(Wedges::new(d)?.wedge(a))
}

fn matching_from_wedges(d: &Dimer, wedges: &[Wedge], j: usize) -> Result<Matching, KClassError> {
    let m = Matching::from_indices(
        d.num_arrows(),
        wedges.iter().filter(|w| w.contains(j)).map(|w| w.arrow),
    );
    m.check(d).map_err(|source| KClassError::NotAMatching {
        vertex: d.vertex_name(j),
        source,
    })?;
    Ok(m)
}

/// `𝔪_j`: the arrows whose downstream wedge contains `j`.
pub fn muller_speyer_matching(d: &Dimer, j: usize) -> Result<Matching, KClassError> {
    matching_from_wedges(d, &Wedges::new(d)?.all(), j)
}

/// `𝔪_j` for every vertex `j`, sharing one wedge computation.
pub fn muller_speyer_matchings(d: &Dimer) -> Result<Vec<Matching>, KClassError> {
    let wedges = Wedges::new(d)?.all();
    (0..d.num_vertices())
        .map(|j| matching_from_wedges(d, &wedges, j))
        .collect()
}

/// `𝔪_j^∨`: the arrows whose upstream wedge contains `j`.
///
/// Upstream wedges of a model are the downstream wedges of its opposite, which
/// keeps vertex, arrow and face indices, so the matching transfers unchanged.
pub fn upstream_matching(d: &Dimer, j: usize) -> Result<Matching, KClassError> {
    let op = Dimer::new(opposite(d.model())).expect("the opposite of a valid model is valid");
    muller_speyer_matching(&op, j)
}
