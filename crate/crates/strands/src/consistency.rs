//! The global Postnikov axioms on strands.

use std::collections::HashMap;

use dimer_core::Dimer;
use serde::Serialize;

use crate::strand::{strands, Strand};

/// Two crossings shared by a pair of strands and met in the same order by both.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParallelWitness {
    /// Strand names: `"i"` for the strand starting at marked point `i`, `"closed-c"` for closed strand `c`.
    pub strands: (String, String),
    pub arrows: (u32, u32),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    /// No strand crosses itself.
    pub b1_passed: bool,
    /// Strand names paired with an arrow they cross twice.
    pub b1_witnesses: Vec<(String, u32)>,
    /// No two strands cross twice in the same direction.
    pub b2_passed: bool,
    pub b2_witnesses: Vec<ParallelWitness>,
    /// Zig-zag cycles that never reach the boundary, as arrow-id sequences.
    pub closed_strands: Vec<Vec<u32>>,
    pub passed: bool,
}

/// A strand as a sequence of crossed arrows, open (boundary to boundary) or closed (cyclic).
struct Curve {
    name: String,
    arrows: Vec<usize>,
    closed: bool,
}

/// Zig-zag cycles made of the passages not used by any boundary strand.
fn closed_curves(d: &Dimer, open: &[Strand]) -> Vec<Vec<usize>> {
    let mut used = vec![[false; 2]; d.num_arrows()];
    let slot = |f: usize| d.color(f).slot();
    for s in open {
        for (a, f) in s.passages() {
            used[a][slot(f)] = true;
        }
    }
    let mut cycles = Vec::new();
    for a0 in d.internal_arrows() {
        for f0 in d.faces_of(a0).collect::<Vec<_>>() {
            if used[a0][slot(f0)] {
                continue;
            }
            let mut cycle = Vec::new();
            let (mut a, mut f) = (a0, f0);
            // Every passage has a unique successor and predecessor, so this returns to the start.
            while !used[a][slot(f)] {
                used[a][slot(f)] = true;
                cycle.push(a);
                a = d.succ(f, a);
                match d.other_face(a, f) {
                    Some(g) => f = g,
                    None => break,
                }
            }
            cycles.push(cycle);
        }
    }
    cycles
}

/// Checks the self-crossing (b1) and parallel double-crossing (b2) axioms.
///
/// Boundary arrows sit at marked points, where one strand starts and another
/// ends. They do not count as self-crossings, but for (b2) the two strands
/// meeting at a marked point are regarded as crossing there. A closed strand
/// runs both ways between any two of its crossings, so two crossings with any
/// other strand always violate (b2).
pub fn check_postnikov(d: &Dimer) -> ConsistencyReport {
    let open = match strands(d) {
        Ok(s) => s,
        Err(_) => {
            return ConsistencyReport {
                b1_passed: false,
                b1_witnesses: vec![],
                b2_passed: false,
                b2_witnesses: vec![],
                closed_strands: vec![],
                passed: false,
            }
        }
    };
    let closed = closed_curves(d, &open);
    let mut curves: Vec<Curve> = open
        .iter()
        .map(|s| Curve {
            name: s.start_label.to_string(),
            arrows: s.arrows.clone(),
            closed: false,
        })
        .collect();
    curves.extend(closed.iter().enumerate().map(|(c, arrows)| Curve {
        name: format!("closed-{}", c + 1),
        arrows: arrows.clone(),
        closed: true,
    }));

    let mut b1_witnesses = Vec::new();
    for c in &curves {
        let mut seen = vec![false; d.num_arrows()];
        for &a in &c.arrows {
            if !d.is_boundary_arrow(a) && std::mem::replace(&mut seen[a], true) {
                b1_witnesses.push((c.name.clone(), d.arrow_id(a)));
            }
        }
    }

    let positions: Vec<HashMap<usize, usize>> = curves
        .iter()
        .map(|c| c.arrows.iter().enumerate().map(|(t, &a)| (a, t)).collect())
        .collect();
    let mut b2_witnesses = Vec::new();
    for (x, cx) in curves.iter().enumerate() {
        for (y, cy) in curves.iter().enumerate().skip(x + 1) {
            let common: Vec<usize> = cx
                .arrows
                .iter()
                .copied()
                .filter(|a| positions[y].contains_key(a))
                .collect();
            let parallel =
                |p: &[usize]| cx.closed || cy.closed || positions[y][&p[0]] < positions[y][&p[1]];
            for pair in common.windows(2).filter(|p| parallel(p)) {
                b2_witnesses.push(ParallelWitness {
                    strands: (cx.name.clone(), cy.name.clone()),
                    arrows: (d.arrow_id(pair[0]), d.arrow_id(pair[1])),
                });
            }
        }
    }

    let b1_passed = b1_witnesses.is_empty();
    let b2_passed = b2_witnesses.is_empty();
    let closed_strands: Vec<Vec<u32>> = closed
        .iter()
        .map(|c| c.iter().map(|&a| d.arrow_id(a)).collect())
        .collect();
    let passed = b1_passed && b2_passed && closed_strands.is_empty();
    ConsistencyReport {
        b1_passed,
        b1_witnesses,
        b2_passed,
        b2_witnesses,
        closed_strands,
        passed,
    }
}
