//! The standard dimer model of the uniform positroid of type `(k, n)`.
//!
//! Quiver vertices are the cells `(r, c)` of an `(n-k) × k` grid plus one extra
//! boundary tile `z`. Every unit square of cell centres is split by a diagonal
//! into a white and a black triangle. The top row and the left column are
//! closed off by two faces through `z`. Frozen (boundary) vertices are the
//! last row, the last column and `z`, which gives `n` of them and
//! `k(n-k) + 1` vertices in total.

use crate::error::DimerError;
use crate::model::{Arrow, Color, DimerModel, Face, Topology, Vertex};
use crate::validate::clockwise_ends;

pub fn build_uniform(k: usize, n: usize) -> Result<DimerModel, DimerError> {
    if k == 0 || k >= n {
        return Err(DimerError::Argument(format!(
            "build_uniform needs 1 <= k < n, got k = {k}, n = {n}"
        )));
    }
    // The type comes out as the number of columns.
    let (rows, cols) = (n - k, k);
    let cell = |r: usize, c: usize| (r * cols + c) as u32;
    let z = (rows * cols) as u32;

    let mut vertices: Vec<Vertex> = (0..rows)
        .flat_map(|r| (0..cols).map(move |c| (r, c)))
        .map(|(r, c)| Vertex {
            id: cell(r, c),
            is_boundary: r == rows - 1 || c == cols - 1,
            name: None,
        })
        .collect();
    vertices.push(Vertex {
        id: z,
        is_boundary: true,
        name: None,
    });

    let mut arrows: Vec<Arrow> = Vec::new();
    let mut add = |tail: u32, head: u32, is_boundary: bool| {
        let id = arrows.len() as u32;
        arrows.push(Arrow {
            id,
            tail,
            head,
            is_boundary,
            boundary_label: None,
        });
        id
    };
    // Horizontal arrows run rightwards, vertical arrows downwards and diagonals
    // back up-left, so each half-square is an oriented triangle.
    let mut horizontal = vec![vec![0u32; cols.saturating_sub(1)]; rows];
    for (r, row) in horizontal.iter_mut().enumerate() {
        for (c, slot) in row.iter_mut().enumerate() {
            *slot = add(cell(r, c), cell(r, c + 1), r == rows - 1);
        }
    }
    let mut vertical = vec![vec![0u32; cols]; rows.saturating_sub(1)];
    for (r, row) in vertical.iter_mut().enumerate() {
        for (c, slot) in row.iter_mut().enumerate() {
            *slot = add(cell(r, c), cell(r + 1, c), c == cols - 1);
        }
    }
    let mut diagonal = vec![vec![0u32; cols.saturating_sub(1)]; rows.saturating_sub(1)];
    for (r, row) in diagonal.iter_mut().enumerate() {
        for (c, slot) in row.iter_mut().enumerate() {
            *slot = add(cell(r + 1, c + 1), cell(r, c), false);
        }
    }
    let top_exit = add(cell(0, cols - 1), z, true);
    let left_exit = add(cell(rows - 1, 0), z, true);
    let entry = add(z, cell(0, 0), false);

    let mut faces = Vec::new();
    let mut face = |color: Color, boundary_cycle: Vec<u32>| {
        let id = faces.len() as u32;
        faces.push(Face {
            id,
            color,
            boundary_cycle,
        });
    };
    for r in 0..rows - 1 {
        for c in 0..cols - 1 {
            face(
                Color::White,
                vec![horizontal[r][c], vertical[r][c + 1], diagonal[r][c]],
            );
            face(
                Color::Black,
                vec![vertical[r][c], horizontal[r + 1][c], diagonal[r][c]],
            );
        }
    }
    let mut top: Vec<u32> = horizontal[0].clone();
    top.extend([top_exit, entry]);
    face(Color::Black, top);
    let mut left: Vec<u32> = vertical.iter().map(|row| row[0]).collect();
    left.extend([left_exit, entry]);
    face(Color::White, left);

    let mut model = DimerModel {
        vertices,
        arrows,
        faces,
    };
    label_clockwise(&mut model, top_exit)?;
    Ok(model)
}

/// Assigns labels `1..n` to the boundary arrows, walking the disc boundary
/// clockwise from `start`.
pub fn label_clockwise(model: &mut DimerModel, start: u32) -> Result<(), DimerError> {
    let topo = Topology::build(model)?;
    let boundary: Vec<usize> = (0..model.arrows.len())
        .filter(|&a| model.arrows[a].is_boundary)
        .collect();
    let mut next_from = std::collections::HashMap::new();
    for &a in &boundary {
        let (from, _) = clockwise_ends(&topo, a).ok_or_else(|| {
            DimerError::Argument(format!(
                "boundary arrow {} has no unique face",
                model.arrows[a].id
            ))
        })?;
        next_from.insert(from, a);
    }
    let mut a = *topo
        .arrow_index
        .get(&start)
        .ok_or_else(|| DimerError::Argument(format!("unknown start arrow {start}")))?;
    for label in 1..=boundary.len() as u32 {
        model.arrows[a].boundary_label = Some(label);
        let (_, to) = clockwise_ends(&topo, a).expect("boundary arrow");
        a = *next_from
            .get(&to)
            .ok_or_else(|| DimerError::Argument("boundary arrows do not form a cycle".into()))?;
    }
    Ok(())
}
