//! Adjacency of the regions cut out by the strands.
//!
//! The complement of the strands in the disc consists of tiles (one per quiver
//! vertex) and face regions (one per face). A strand segment running through
//! face `f` from arrow `a` to `succ_f(a)` cuts off the corner of `f` at the
//! vertex `h a`. That segment is the only border between region `f` and tile
//! `h a` there. So the region graph has one edge per corner, and cutting a set
//! of strand segments means deleting their corner edges.

use dimer_core::{Color, Dimer};

use crate::strand::Strand;

/// A node of the region graph: tiles first, then faces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Region {
    Tile(usize),
    Face(usize),
}

#[derive(Clone, Debug)]
pub struct RegionGraph {
    num_tiles: usize,
    /// Offset of each face's corners in the corner numbering.
    offsets: Vec<usize>,
    /// Per node, the incident corners as (corner, neighbour node).
    adjacency: Vec<Vec<(usize, usize)>>,
    num_corners: usize,
}

impl RegionGraph {
    pub fn new(d: &Dimer) -> RegionGraph {
        let num_tiles = d.num_vertices();
        let mut offsets = Vec::with_capacity(d.num_faces());
        let mut adjacency = vec![Vec::new(); num_tiles + d.num_faces()];
        let mut corner = 0;
        for f in 0..d.num_faces() {
            offsets.push(corner);
            for &a in d.cycle(f) {
                let tile = d.head(a);
                let face_node = num_tiles + f;
                adjacency[face_node].push((corner, tile));
                adjacency[tile].push((corner, face_node));
                corner += 1;
            }
        }
        RegionGraph {
            num_tiles,
            offsets,
            adjacency,
            num_corners: corner,
        }
    }

    pub fn num_corners(&self) -> usize {
        self.num_corners
    }

    fn node(&self, r: Region) -> usize {
        match r {
            Region::Tile(v) => v,
            Region::Face(f) => self.num_tiles + f,
        }
    }

    /// The corner cut by the segment in face `f` leaving arrow `a`.
    pub fn corner(&self, d: &Dimer, a: usize, f: usize) -> usize {
        self.offsets[f] + d.position_in(f, a)
    }

    /// Marks the corners of the given passages as cut.
    pub fn cut_passages(
        &self,
        d: &Dimer,
        passages: impl IntoIterator<Item = (usize, usize)>,
        cut: &mut [bool],
    ) {
        for (a, f) in passages {
            cut[self.corner(d, a, f)] = true;
        }
    }

    /// Nodes reachable from `seed` without crossing a cut corner; returns tile membership.
    pub fn flood_tiles(&self, cut: &[bool], seed: Region) -> Vec<bool> {
        let reached = self.flood(cut, seed);
        reached[..self.num_tiles].to_vec()
    }

    pub fn flood(&self, cut: &[bool], seed: Region) -> Vec<bool> {
        let mut seen = vec![false; self.adjacency.len()];
        let start = self.node(seed);
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &(c, y) in &self.adjacency[x] {
                if !cut[c] && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }

    pub fn is_reached(&self, reached: &[bool], r: Region) -> bool {
        reached[self.node(r)]
    }
}

/// The two regions on either side of the segment of passage `(a, f)`, as (left, right).
///
/// In a white (clockwise) face the tile `h a` lies to the left of the strand
/// and the face region to the right; in a black face it is the other way round.
pub fn sides_of_passage(d: &Dimer, a: usize, f: usize) -> (Region, Region) {
    let tile = Region::Tile(d.head(a));
    let face = Region::Face(f);
    match d.color(f) {
        Color::White => (tile, face),
        Color::Black => (face, tile),
    }
}

/// Tiles on the left of a strand, found by cutting along it and flooding from its left side.
///
/// Returns `None` if the strand does not separate the disc.
pub fn left_tiles(d: &Dimer, graph: &RegionGraph, s: &Strand) -> Option<Vec<bool>> {
    let mut cut = vec![false; graph.num_corners()];
    graph.cut_passages(d, s.passages(), &mut cut);
    let (a, f) = s.passages().next()?;
    let (left, right) = sides_of_passage(d, a, f);
    let reached = graph.flood(&cut, left);
    if graph.is_reached(&reached, right) {
        return None;
    }
    Some(reached[..d.num_vertices()].to_vec())
}
