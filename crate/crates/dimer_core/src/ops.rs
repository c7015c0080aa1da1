//! Opposite models and standardisation by boundary digons.

use crate::dimer::Dimer;
use crate::model::{Arrow, Color, DimerModel, Face};

/// The opposite quiver with faces: arrows and face cycles reversed, colours swapped.
///
/// All ids and boundary labels are kept, so `opposite(&opposite(m)) == m`.
pub fn opposite(model: &DimerModel) -> DimerModel {
    let arrows = model
        .arrows
        .iter()
        .map(|a| Arrow {
            tail: a.head,
            head: a.tail,
            ..a.clone()
        })
        .collect();
    let faces = model
        .faces
        .iter()
        .map(|f| {
            let mut cycle = f.boundary_cycle.clone();
            cycle.reverse();
            Face {
                id: f.id,
                color: f.color.swap(),
                boundary_cycle: cycle,
            }
        })
        .collect();
    DimerModel {
        vertices: model.vertices.clone(),
        arrows,
        faces,
    }
}

/// Makes every boundary arrow lie in a face of colour `target`.
///
/// Each boundary arrow `a: u -> v` in a face of the other colour becomes
/// internal, and a digon face of colour `target` made of `a` and a new
/// boundary arrow `v -> u` is glued along it. The new arrow takes over the
/// boundary label. New arrow and face ids are appended after the existing
/// ones in increasing label order; no vertex is added.
pub fn standardise(d: &Dimer, target: Color) -> DimerModel {
    let mut model = d.model().clone();
    let mut next_arrow = model.next_arrow_id();
    let mut next_face = model.next_face_id();
    for &a in d.boundary_arrows() {
        if d.color(d.boundary_face(a)) == target {
            continue;
        }
        let old = model.arrows[a].clone();
        let new = Arrow {
            id: next_arrow,
            tail: old.head,
            head: old.tail,
            is_boundary: true,
            boundary_label: old.boundary_label,
        };
        model.arrows[a].is_boundary = false;
        model.arrows[a].boundary_label = None;
        model.faces.push(Face {
            id: next_face,
            color: target,
            boundary_cycle: vec![old.id, new.id],
        });
        model.arrows.push(new);
        next_arrow += 1;
        next_face += 1;
    }
    model
}
