//! A validated dimer model with the derived tables every algorithm needs.

use crate::error::DimerError;
use crate::model::{Color, DimerModel, Topology};
use crate::validate::{clockwise_ends, validate};

/// A dimer model that has passed every axiom, indexed densely.
///
/// Vertices, arrows and faces are addressed by their position in the
/// underlying [`DimerModel`] vectors. Use [`Dimer::vertex_id`] and friends to
/// translate back to file ids.
#[derive(Clone, Debug)]
pub struct Dimer {
    model: DimerModel,
    topo: Topology,
    /// For each arrow, its (face, position) in the black face (slot 0) and white face (slot 1).
    slots: Vec<[Option<(usize, usize)>; 2]>,
    label: Vec<Option<u32>>,
    by_label: Vec<usize>,
    n: usize,
}

impl Dimer {
    /// Validates `model` and builds the derived tables.
    pub fn new(model: DimerModel) -> Result<Dimer, DimerError> {
        let report = validate(&model)?;
        if !report.passed {
            return Err(DimerError::Invalid(Box::new(report)));
        }
        let topo = Topology::build(&model)?;
        let mut slots = vec![[None, None]; model.arrows.len()];
        for (a, occ) in topo.occurrences.iter().enumerate() {
            for &(f, pos) in occ {
                slots[a][topo.colors[f].slot()] = Some((f, pos));
            }
        }
        let label: Vec<Option<u32>> = model.arrows.iter().map(|a| a.boundary_label).collect();
        let n = report.n;
        let mut by_label = vec![0; n];
        for (a, l) in label.iter().enumerate() {
            if let Some(l) = l {
                by_label[*l as usize - 1] = a;
            }
        }
        Ok(Dimer {
            model,
            topo,
            slots,
            label,
            by_label,
            n,
        })
    }

    pub fn model(&self) -> &DimerModel {
        &self.model
    }

    pub fn into_model(self) -> DimerModel {
        self.model
    }

    pub fn num_vertices(&self) -> usize {
        self.model.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.model.arrows.len()
    }

    pub fn num_faces(&self) -> usize {
        self.model.faces.len()
    }

    /// Number of boundary arrows, which is also the number of marked points.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tail(&self, a: usize) -> usize {
        self.topo.tail[a]
    }

    pub fn head(&self, a: usize) -> usize {
        self.topo.head[a]
    }

    pub fn color(&self, f: usize) -> Color {
        self.topo.colors[f]
    }

    pub fn cycle(&self, f: usize) -> &[usize] {
        &self.topo.cycles[f]
    }

    pub fn is_boundary_arrow(&self, a: usize) -> bool {
        self.label[a].is_some()
    }

    pub fn is_boundary_vertex(&self, v: usize) -> bool {
        self.model.vertices[v].is_boundary
    }

    pub fn internal_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.num_vertices()).filter(|&v| !self.is_boundary_vertex(v))
    }

    pub fn internal_arrows(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.num_arrows()).filter(|&a| !self.is_boundary_arrow(a))
    }

    /// Boundary label of arrow `a`, if it is a boundary arrow.
    pub fn label(&self, a: usize) -> Option<u32> {
        self.label[a]
    }

    /// The boundary arrow carrying label `i` (1-based).
    pub fn boundary_arrow(&self, i: u32) -> usize {
        self.by_label[i as usize - 1]
    }

    /// The face of colour `c` containing arrow `a`, if any.
    pub fn face_of(&self, a: usize, c: Color) -> Option<usize> {
        self.slots[a][c.slot()].map(|(f, _)| f)
    }

    /// Faces containing `a`: black first, then white.
    pub fn faces_of(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.slots[a].iter().flatten().map(|&(f, _)| f)
    }

    /// The unique face of a boundary arrow.
    pub fn boundary_face(&self, a: usize) -> usize {
        self.faces_of(a).next().expect("every arrow lies in a face")
    }

    /// The other face containing `a`, for an internal arrow lying in `f`.
    pub fn other_face(&self, a: usize, f: usize) -> Option<usize> {
        self.faces_of(a).find(|&g| g != f)
    }

    /// The arrow following `a` in the boundary cycle of face `f`.
    pub fn succ(&self, f: usize, a: usize) -> usize {
        let (_, pos) = self.slots[a][self.color(f).slot()].expect("arrow lies in face");
        let cyc = &self.topo.cycles[f];
        cyc[(pos + 1) % cyc.len()]
    }

    /// Position of arrow `a` in the boundary cycle of face `f`.
    pub fn position_in(&self, f: usize, a: usize) -> usize {
        self.slots[a][self.color(f).slot()]
            .expect("arrow lies in face")
            .1
    }

    /// The arrow preceding `a` in the boundary cycle of face `f`.
    pub fn pred(&self, f: usize, a: usize) -> usize {
        let (_, pos) = self.slots[a][self.color(f).slot()].expect("arrow lies in face");
        let cyc = &self.topo.cycles[f];
        cyc[(pos + cyc.len() - 1) % cyc.len()]
    }

    /// Vertices met by the boundary cycle of face `f`, listed as arrow tails in cycle order.
    pub fn face_vertices(&self, f: usize) -> Vec<usize> {
        self.topo.cycles[f].iter().map(|&a| self.tail(a)).collect()
    }

    /// A boundary arrow points clockwise around the disc iff it lies in a white face.
    pub fn is_clockwise(&self, a: usize) -> bool {
        self.is_boundary_arrow(a) && self.color(self.boundary_face(a)) == Color::White
    }

    /// Tiles on either side of boundary arrow `a`, as (clockwise start, clockwise end).
    pub fn clockwise_ends(&self, a: usize) -> (usize, usize) {
        clockwise_ends(&self.topo, a).expect("boundary arrow")
    }

    pub fn vertex_id(&self, v: usize) -> u32 {
        self.model.vertices[v].id
    }

    pub fn arrow_id(&self, a: usize) -> u32 {
        self.model.arrows[a].id
    }

    pub fn face_id(&self, f: usize) -> u32 {
        self.model.faces[f].id
    }

    pub fn vertex_index(&self, id: u32) -> Option<usize> {
        self.topo.vertex_index.get(&id).copied()
    }

    pub fn arrow_index(&self, id: u32) -> Option<usize> {
        self.topo.arrow_index.get(&id).copied()
    }

    pub fn face_index(&self, id: u32) -> Option<usize> {
        self.topo.face_index.get(&id).copied()
    }

    /// Display name of a vertex: its `name` field if present, else its id.
    pub fn vertex_name(&self, v: usize) -> String {
        let vx = &self.model.vertices[v];
        vx.name.clone().unwrap_or_else(|| vx.id.to_string())
    }

    /// Vertex index by display name or by decimal id.
    pub fn find_vertex(&self, key: &str) -> Option<usize> {
        if let Some(v) = self
            .model
            .vertices
            .iter()
            .position(|v| v.name.as_deref() == Some(key))
        {
            return Some(v);
        }
        key.parse::<u32>().ok().and_then(|id| self.vertex_index(id))
    }

    /// Boundary arrows in label order 1..n.
    pub fn boundary_arrows(&self) -> &[usize] {
        &self.by_label
    }

    /// Whether every boundary arrow lies in a face of colour `c`.
    pub fn is_standardised(&self, c: Color) -> bool {
        self.by_label
            .iter()
            .all(|&a| self.color(self.boundary_face(a)) == c)
    }
}
