//! Flips, height functions and the order on matchings with a fixed boundary value.

use std::collections::VecDeque;

use dimer_core::Dimer;
use serde::Serialize;

use crate::cover::exact_covers;
use crate::error::MatchingError;
use crate::matching::{boundary_value, matchings_with_boundary, Matching};

/// Integer function on quiver vertices, zero on the boundary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HeightFunction {
    pub values: Vec<i64>,
}

impl HeightFunction {
    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&h| h == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.values.iter().all(|&h| h >= 0)
    }

    /// Vertices where the function is nonzero.
    pub fn support(&self) -> Vec<usize> {
        (0..self.values.len())
            .filter(|&v| self.values[v] != 0)
            .collect()
    }
}

fn require_internal(d: &Dimer, j: usize) -> Result<(), MatchingError> {
    if d.is_boundary_vertex(j) {
        Err(MatchingError::NotInternal(d.vertex_id(j)))
    } else {
        Ok(())
    }
}

/// Arrows out of and into `j`.
fn star(d: &Dimer, j: usize) -> (Vec<usize>, Vec<usize>) {
    let out = (0..d.num_arrows()).filter(|&a| d.tail(a) == j).collect();
    let into = (0..d.num_arrows()).filter(|&a| d.head(a) == j).collect();
    (out, into)
}

/// `μ + d𝟙_j`: trades all arrows out of `j` for all arrows into `j`, when that stays 0/1-valued.
///
/// The result lies below `μ` in the height order.
pub fn down_flip(d: &Dimer, m: &Matching, j: usize) -> Option<Matching> {
    let (out, into) = star(d, j);
    trade(m, &out, &into)
}

/// `μ − d𝟙_j`: trades all arrows into `j` for all arrows out of `j`, when that stays 0/1-valued.
pub fn up_flip(d: &Dimer, m: &Matching, j: usize) -> Option<Matching> {
    let (out, into) = star(d, j);
    trade(m, &into, &out)
}

fn trade(m: &Matching, remove: &[usize], add: &[usize]) -> Option<Matching> {
    if !remove.iter().all(|&a| m.contains(a)) || add.iter().any(|&a| m.contains(a)) {
        return None;
    }
    let mut next = m.clone();
    for &a in remove.iter().chain(add) {
        next.toggle(a);
    }
    Some(next)
}

/// The flip of `μ` at internal vertex `j` in whichever direction is valid.
pub fn flip(d: &Dimer, m: &Matching, j: usize) -> Result<Option<Matching>, MatchingError> {
    require_internal(d, j)?;
    Ok(down_flip(d, m, j).or_else(|| up_flip(d, m, j)))
}

/// All matchings one flip away, paired with the flipped vertex.
pub fn flip_neighbours(d: &Dimer, m: &Matching) -> Vec<(usize, Matching)> {
    d.internal_vertices()
        .filter_map(|j| {
            down_flip(d, m, j)
                .or_else(|| up_flip(d, m, j))
                .map(|n| (j, n))
        })
        .collect()
}

/// The height `h` with `h = 0` on the boundary and `h(head a) − h(tail a) = μ_ref(a) − μ(a)`.
pub fn height(
    d: &Dimer,
    m: &Matching,
    reference: &Matching,
) -> Result<HeightFunction, MatchingError> {
    let (bm, br) = (boundary_value(d, m), boundary_value(d, reference));
    if bm != br {
        return Err(MatchingError::BoundaryMismatch(bm, br));
    }
    let step = |a: usize| reference.value(a) - m.value(a);
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); d.num_vertices()];
    for a in 0..d.num_arrows() {
        incident[d.tail(a)].push(a);
        incident[d.head(a)].push(a);
    }
    let mut values: Vec<Option<i64>> = vec![None; d.num_vertices()];
    let mut queue = VecDeque::new();
    for v in (0..d.num_vertices()).filter(|&v| d.is_boundary_vertex(v)) {
        values[v] = Some(0);
        queue.push_back(v);
    }
    while let Some(v) = queue.pop_front() {
        let hv = values[v].expect("queued vertices have values");
        for &a in &incident[v] {
            let (w, hw) = if d.tail(a) == v {
                (d.head(a), hv + step(a))
            } else {
                (d.tail(a), hv - step(a))
            };
            if values[w].is_none() {
                values[w] = Some(hw);
                queue.push_back(w);
            }
        }
    }
    let values: Vec<i64> = values.into_iter().map(|h| h.unwrap_or(0)).collect();
    for a in 0..d.num_arrows() {
        if values[d.head(a)] - values[d.tail(a)] != step(a) {
            return Err(MatchingError::HeightInconsistent(d.arrow_id(a)));
        }
    }
    Ok(HeightFunction { values })
}

fn saturate(
    d: &Dimer,
    mut m: Matching,
    step: fn(&Dimer, &Matching, usize) -> Option<Matching>,
) -> Matching {
    'outer: loop {
        for j in d.internal_vertices() {
            if let Some(next) = step(d, &m, j) {
                m = next;
                continue 'outer;
            }
        }
        return m;
    }
}

/// The minimal and maximal matchings with boundary value `subset`.
///
/// `μ ≤ μ′` iff `height(μ′, μ) ≥ 0`. The minimum is reached by down flips
/// and the maximum by up flips from any matching with this boundary value.
pub fn extreme_matchings(d: &Dimer, subset: &[u32]) -> Result<(Matching, Matching), MatchingError> {
    let start = matchings_with_boundary(d, subset)
        .into_iter()
        .next()
        .ok_or_else(|| MatchingError::NotInPositroid(subset.to_vec()))?;
    Ok((
        saturate(d, start.clone(), down_flip),
        saturate(d, start, up_flip),
    ))
}

/// The part of the dual graph where matchings with a given boundary value can differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupportSubgraph {
    /// Tiles where the height of the minimum relative to the maximum is nonzero.
    pub support: Vec<usize>,
    /// Internal arrows with an endpoint in the support, increasing.
    pub edges: Vec<usize>,
    /// Faces containing one of the edges, increasing.
    pub nodes: Vec<usize>,
}

impl SupportSubgraph {
    /// Perfect matchings of the subgraph, as sorted arrow-index lists.
    pub fn matchings(&self, d: &Dimer) -> Vec<Vec<usize>> {
        let node_pos = |f: usize| self.nodes.binary_search(&f).ok();
        let ends: Vec<Vec<usize>> = self
            .edges
            .iter()
            .map(|&a| d.faces_of(a).filter_map(node_pos).collect())
            .collect();
        let mut choices = vec![Vec::new(); self.nodes.len()];
        for (e, nodes) in ends.iter().enumerate() {
            for &x in nodes {
                choices[x].push(e);
            }
        }
        exact_covers(self.nodes.len(), &ends, &choices)
            .into_iter()
            .map(|cover| cover.into_iter().map(|e| self.edges[e]).collect())
            .collect()
    }

    /// `μ ∩ E`: the matched edges of the subgraph.
    pub fn restrict(&self, m: &Matching) -> Vec<usize> {
        self.edges
            .iter()
            .copied()
            .filter(|&a| m.contains(a))
            .collect()
    }
}

pub fn support_subgraph(d: &Dimer, subset: &[u32]) -> Result<SupportSubgraph, MatchingError> {
    let (min, max) = extreme_matchings(d, subset)?;
    let h = height(d, &min, &max)?;
    let support = h.support();
    let in_support = |v: usize| h.values[v] != 0;
    let edges: Vec<usize> = d
        .internal_arrows()
        .filter(|&a| in_support(d.tail(a)) || in_support(d.head(a)))
        .collect();
    let mut nodes: Vec<usize> = edges.iter().flat_map(|&a| d.faces_of(a)).collect();
    nodes.sort_unstable();
    nodes.dedup();
    Ok(SupportSubgraph {
        support,
        edges,
        nodes,
    })
}
