//! Bundled example models.
//!
//! * `triangle`: three boundary tiles and one clockwise white face.
//! * `gr37`: a type (3,7) model with three internal tiles, seven boundary
//!   tiles, eighteen arrows and nine faces, whose strand permutation is
//!   `1↦5, 2↦4, 3↦1, 4↦6, 5↦7, 6↦2, 7↦3`. Vertex names are the source labels.
//! * `inconsistent`: a type (1,3) model that satisfies every face axiom but
//!   whose strands cross twice in the same direction.
//! * `uniform-k-n`: the output of [`build_uniform`].

use crate::error::DimerError;
use crate::io::from_json;
use crate::model::{Arrow, Color, DimerModel, Face, Vertex};
use crate::uniform::build_uniform;

const GR37_JSON: &str = include_str!("../fixtures/gr37.json");

/// The uniform shapes shipped with the fixture set.
pub const UNIFORM_SHAPES: [(usize, usize); 4] = [(1, 3), (2, 4), (2, 5), (3, 6)];

fn vertex(id: u32, is_boundary: bool, name: &str) -> Vertex {
    Vertex {
        id,
        is_boundary,
        name: Some(name.to_string()),
    }
}

fn arrow(id: u32, tail: u32, head: u32, label: Option<u32>) -> Arrow {
    Arrow {
        id,
        tail,
        head,
        is_boundary: label.is_some(),
        boundary_label: label,
    }
}

fn face(id: u32, color: Color, cycle: &[u32]) -> Face {
    Face {
        id,
        color,
        boundary_cycle: cycle.to_vec(),
    }
}

pub fn triangle() -> DimerModel {
    DimerModel {
        vertices: vec![
            vertex(0, true, "a"),
            vertex(1, true, "b"),
            vertex(2, true, "c"),
        ],
        arrows: vec![
            arrow(0, 0, 1, Some(1)),
            arrow(1, 1, 2, Some(2)),
            arrow(2, 2, 0, Some(3)),
        ],
        faces: vec![face(0, Color::White, &[0, 1, 2])],
    }
}

pub fn gr37() -> DimerModel {
    from_json(GR37_JSON).expect("bundled gr37 fixture parses")
}

pub fn inconsistent() -> DimerModel {
    let (q1, q2, q3, q11, q12, q13) = (0, 1, 2, 3, 4, 5);
    DimerModel {
        vertices: vec![
            vertex(q1, true, "1"),
            vertex(q2, true, "2"),
            vertex(q3, true, "3"),
            vertex(q11, false, "11"),
            vertex(q12, false, "12"),
            vertex(q13, false, "13"),
        ],
        arrows: vec![
            arrow(0, q11, q1, None),
            arrow(1, q1, q12, None),
            arrow(2, q12, q11, None),
            arrow(3, q12, q2, None),
            arrow(4, q2, q13, None),
            arrow(5, q13, q12, None),
            arrow(6, q13, q3, None),
            arrow(7, q3, q11, None),
            arrow(8, q11, q13, None),
            arrow(9, q1, q3, Some(2)),
            arrow(10, q3, q2, Some(3)),
            arrow(11, q2, q1, Some(1)),
        ],
        faces: vec![
            face(0, Color::Black, &[1, 2, 0]),
            face(1, Color::Black, &[4, 5, 3]),
            face(2, Color::Black, &[7, 8, 6]),
            face(3, Color::White, &[8, 5, 2]),
            face(4, Color::White, &[9, 7, 0]),
            face(5, Color::White, &[10, 4, 6]),
            face(6, Color::White, &[11, 1, 3]),
        ],
    }
}

pub fn uniform(k: usize, n: usize) -> Result<DimerModel, DimerError> {
    build_uniform(k, n)
}

/// Every bundled fixture with its file stem.
pub fn bundled() -> Vec<(String, DimerModel)> {
    let mut out = vec![
        ("triangle".to_string(), triangle()),
        ("gr37".to_string(), gr37()),
        ("inconsistent".to_string(), inconsistent()),
    ];
    for (k, n) in UNIFORM_SHAPES {
        out.push((
            format!("uniform-{k}-{n}"),
            build_uniform(k, n).expect("valid shape"),
        ));
    }
    out
}

/// Looks up a bundled fixture by stem; `uniform-k-n` accepts any valid shape.
pub fn by_name(name: &str) -> Option<DimerModel> {
    match name {
        "triangle" => Some(triangle()),
        "gr37" => Some(gr37()),
        "inconsistent" => Some(inconsistent()),
        _ => {
            let rest = name.strip_prefix("uniform-")?;
            let (k, n) = rest.split_once('-')?;
            build_uniform(k.parse().ok()?, n.parse().ok()?).ok()
        }
    }
}
