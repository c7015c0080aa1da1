//! The serialisable dimer-model record and its structural index.
//!
//! A [`DimerModel`] is plain data mirroring the JSON file format. Ids are
//! opaque; [`Topology`] maps them to dense indices (positions in the vectors)
//! and is the only place where id references are resolved.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::StructuralError;

/// Face colour. Black faces are oriented anticlockwise, white faces clockwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn swap(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }

    /// Slot index used by per-arrow face tables: black is 0, white is 1.
    pub fn slot(self) -> usize {
        match self {
            Color::Black => 0,
            Color::White => 1,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Color::Black => "black",
            Color::White => "white",
        }
    }
}

impl std::str::FromStr for Color {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "black" => Ok(Color::Black),
            "white" => Ok(Color::White),
            other => Err(format!(
                "unknown colour `{other}` (expected black or white)"
            )),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub id: u32,
    pub is_boundary: bool,
    /// Optional human-readable name (for example a Plücker label), ignored by all computations.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub id: u32,
    pub tail: u32,
    pub head: u32,
    pub is_boundary: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub boundary_label: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub id: u32,
    pub color: Color,
    pub boundary_cycle: Vec<u32>,
}

/// A quiver with faces embedded in the disc.
///
/// Planarity is encoded only through the face cycles and the boundary cycle;
/// no coordinates are stored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimerModel {
    pub vertices: Vec<Vertex>,
    pub arrows: Vec<Arrow>,
    pub faces: Vec<Face>,
}

/// Dense-index view of a structurally well-formed model.
///
/// Built by [`Topology::build`], which rejects dangling ids, duplicate ids and
/// face cycles that do not close up. Everything here is expressed in indices
/// into `model.vertices`, `model.arrows` and `model.faces`.
#[derive(Clone, Debug)]
pub struct Topology {
    pub tail: Vec<usize>,
    pub head: Vec<usize>,
    pub cycles: Vec<Vec<usize>>,
    pub colors: Vec<Color>,
    /// For each arrow, every (face, position) at which it occurs.
    pub occurrences: Vec<Vec<(usize, usize)>>,
    pub vertex_index: HashMap<u32, usize>,
    pub arrow_index: HashMap<u32, usize>,
    pub face_index: HashMap<u32, usize>,
}

fn index_ids<I: Iterator<Item = u32>>(
    kind: &'static str,
    ids: I,
) -> Result<HashMap<u32, usize>, StructuralError> {
    let mut map = HashMap::new();
    for (ix, id) in ids.enumerate() {
        if map.insert(id, ix).is_some() {
            return Err(StructuralError::DuplicateId { kind, id });
        }
    }
    Ok(map)
}

impl Topology {
    pub fn build(model: &DimerModel) -> Result<Topology, StructuralError> {
        let vertex_index = index_ids("vertex", model.vertices.iter().map(|v| v.id))?;
        let arrow_index = index_ids("arrow", model.arrows.iter().map(|a| a.id))?;
        let face_index = index_ids("face", model.faces.iter().map(|f| f.id))?;

        let lookup_vertex = |arrow: u32, v: u32| {
            vertex_index
                .get(&v)
                .copied()
                .ok_or(StructuralError::UnknownVertex { arrow, vertex: v })
        };
        let mut tail = Vec::with_capacity(model.arrows.len());
        let mut head = Vec::with_capacity(model.arrows.len());
        for a in &model.arrows {
            tail.push(lookup_vertex(a.id, a.tail)?);
            head.push(lookup_vertex(a.id, a.head)?);
        }

        let mut cycles = Vec::with_capacity(model.faces.len());
        let mut occurrences = vec![Vec::new(); model.arrows.len()];
        for (fx, f) in model.faces.iter().enumerate() {
            if f.boundary_cycle.is_empty() {
                return Err(StructuralError::EmptyFace { face: f.id });
            }
            let mut cycle = Vec::with_capacity(f.boundary_cycle.len());
            for (pos, &aid) in f.boundary_cycle.iter().enumerate() {
                let ax = *arrow_index.get(&aid).ok_or(StructuralError::UnknownArrow {
                    face: f.id,
                    arrow: aid,
                })?;
                occurrences[ax].push((fx, pos));
                cycle.push(ax);
            }
            for pos in 0..cycle.len() {
                let a = cycle[pos];
                let b = cycle[(pos + 1) % cycle.len()];
                if head[a] != tail[b] {
                    return Err(StructuralError::OpenCycle {
                        face: f.id,
                        arrow: model.arrows[a].id,
                        next: model.arrows[b].id,
                    });
                }
            }
            cycles.push(cycle);
        }
        let colors = model.faces.iter().map(|f| f.color).collect();
        Ok(Topology {
            tail,
            head,
            cycles,
            colors,
            occurrences,
            vertex_index,
            arrow_index,
            face_index,
        })
    }
}

impl DimerModel {
    /// Smallest id strictly greater than every vertex id.
    pub fn next_vertex_id(&self) -> u32 {
        self.vertices.iter().map(|v| v.id + 1).max().unwrap_or(0)
    }

    pub fn next_arrow_id(&self) -> u32 {
        self.arrows.iter().map(|a| a.id + 1).max().unwrap_or(0)
    }

    pub fn next_face_id(&self) -> u32 {
        self.faces.iter().map(|f| f.id + 1).max().unwrap_or(0)
    }
}
