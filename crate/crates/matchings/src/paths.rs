//! Minimal matching-degree of directed paths.

use std::collections::VecDeque;

use dimer_core::Dimer;

use crate::matching::Matching;

/// Marker for vertices with no directed path to the target.
pub const UNREACHABLE: u32 = u32::MAX;

fn zero_one_bfs(num_vertices: usize, start: usize, steps: &[Vec<(usize, u32)>]) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE; num_vertices];
    dist[start] = 0;
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for &(w, weight) in &steps[v] {
            let candidate = dist[v] + weight;
            if candidate < dist[w] {
                dist[w] = candidate;
                if weight == 0 {
                    queue.push_front(w);
                } else {
                    queue.push_back(w);
                }
            }
        }
    }
    dist
}

/// `D(i)`: the least number of `μ`-arrows on a directed path from `source` to `i`.
pub fn path_degrees_from(d: &Dimer, m: &Matching, source: usize) -> Vec<u32> {
    let mut steps: Vec<Vec<(usize, u32)>> = vec![Vec::new(); d.num_vertices()];
    for a in 0..d.num_arrows() {
        steps[d.tail(a)].push((d.head(a), m.value(a) as u32));
    }
    zero_one_bfs(d.num_vertices(), source, &steps)
}

/// `D(j)`: the least number of `μ`-arrows on a directed path from `j` to `target`.
///
/// Arrows weigh 1 if matched and 0 otherwise. Computed by a 0-1 breadth-first
/// search over reversed arrows starting at `target`.
pub fn path_degrees_to(d: &Dimer, m: &Matching, target: usize) -> Vec<u32> {
    let mut steps: Vec<Vec<(usize, u32)>> = vec![Vec::new(); d.num_vertices()];
    for a in 0..d.num_arrows() {
        steps[d.head(a)].push((d.tail(a), m.value(a) as u32));
    }
    zero_one_bfs(d.num_vertices(), target, &steps)
}
