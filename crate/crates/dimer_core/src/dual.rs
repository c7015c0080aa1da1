//! The bipartite graph dual to a dimer model, and the type `(k, n)`.

use serde::Serialize;

use crate::dimer::Dimer;
use crate::error::DimerError;
use crate::model::Color;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualNode {
    pub face: u32,
    pub color: Color,
}

/// An edge of the dual, one per internal arrow, joining its black and white faces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualEdge {
    pub arrow: u32,
    pub black: u32,
    pub white: u32,
}

/// A half-edge of the dual, one per boundary arrow, attached to the arrow's only face.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HalfEdge {
    pub arrow: u32,
    pub face: u32,
    pub color: Color,
    pub label: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BipartiteDual {
    pub nodes: Vec<DualNode>,
    pub edges: Vec<DualEdge>,
    pub half_edges: Vec<HalfEdge>,
    /// One tile per quiver vertex, by vertex id.
    pub tiles: Vec<u32>,
}

impl BipartiteDual {
    pub fn count_nodes(&self, c: Color) -> usize {
        self.nodes.iter().filter(|n| n.color == c).count()
    }
}

pub fn bipartite_dual(d: &Dimer) -> BipartiteDual {
    let nodes = (0..d.num_faces())
        .map(|f| DualNode {
            face: d.face_id(f),
            color: d.color(f),
        })
        .collect();
    let edges = d
        .internal_arrows()
        .map(|a| DualEdge {
            arrow: d.arrow_id(a),
            black: d.face_id(
                d.face_of(a, Color::Black)
                    .expect("internal arrow has a black face"),
            ),
            white: d.face_id(
                d.face_of(a, Color::White)
                    .expect("internal arrow has a white face"),
            ),
        })
        .collect();
    let half_edges = d
        .boundary_arrows()
        .iter()
        .map(|&a| {
            let f = d.boundary_face(a);
            HalfEdge {
                arrow: d.arrow_id(a),
                face: d.face_id(f),
                color: d.color(f),
                label: d.label(a).expect("boundary arrow"),
            }
        })
        .collect();
    let tiles = (0..d.num_vertices()).map(|v| d.vertex_id(v)).collect();
    BipartiteDual {
        nodes,
        edges,
        half_edges,
        tiles,
    }
}

/// The type `(k, n)`: `k = #white - #black + #(half-edges at black nodes)`, `n = #half-edges`.
pub fn type_of(d: &Dimer) -> Result<(usize, usize), DimerError> {
    let dual = bipartite_dual(d);
    let black_half = dual
        .half_edges
        .iter()
        .filter(|h| h.color == Color::Black)
        .count();
    let k = dual.count_nodes(Color::White) as i64 - dual.count_nodes(Color::Black) as i64
        + black_half as i64;
    let n = dual.half_edges.len();
    usize::try_from(k)
        .ok()
        .filter(|&k| k <= n)
        .map(|k| (k, n))
        .ok_or_else(|| DimerError::Argument(format!("strand count k = {k} lies outside 0..={n}")))
}
