//! Source and target labels of tiles, and the boundary necklaces.

use dimer_core::{Dimer, Subset};
use serde::Serialize;

use crate::consistency::check_postnikov;
use crate::regions::{left_tiles, RegionGraph};
use crate::strand::{strands, Strand, StrandError};

/// Per-vertex labels, indexed by vertex index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabelTable {
    pub source: Vec<Subset>,
    pub target: Vec<Subset>,
}

fn require_consistent(d: &Dimer) -> Result<(), StrandError> {
    let report = check_postnikov(d);
    if report.passed {
        Ok(())
    } else {
        Err(StrandError::Inconsistent(format!(
            "b1 {}, b2 {}, closed strands {}",
            report.b1_passed,
            report.b2_passed,
            report.closed_strands.len()
        )))
    }
}

/// `labels[j]` = marked points `i` such that tile `j` lies left of `strand_for(i)`.
fn labels_by(d: &Dimer, ordered: &[Strand]) -> Result<Vec<Subset>, StrandError> {
    let graph = RegionGraph::new(d);
    let mut labels = vec![Vec::new(); d.num_vertices()];
    for (idx, s) in ordered.iter().enumerate() {
        let left = left_tiles(d, &graph, s).ok_or(StrandError::NotSeparating {
            start: s.start_label,
        })?;
        for (j, &is_left) in left.iter().enumerate() {
            if is_left {
                labels[j].push(idx as u32 + 1);
            }
        }
    }
    Ok(labels)
}

/// `I_j`: the marked points whose starting strand has tile `j` on its left.
pub fn source_labels(d: &Dimer) -> Result<Vec<Subset>, StrandError> {
    require_consistent(d)?;
    labels_by(d, &strands(d)?)
}

/// `I_j^∨`: the marked points whose ending strand has tile `j` on its left.
pub fn target_labels(d: &Dimer) -> Result<Vec<Subset>, StrandError> {
    require_consistent(d)?;
    let mut by_end = strands(d)?;
    by_end.sort_by_key(|s| s.end_label);
    labels_by(d, &by_end)
}

pub fn label_table(d: &Dimer) -> Result<LabelTable, StrandError> {
    Ok(LabelTable {
        source: source_labels(d)?,
        target: target_labels(d)?,
    })
}

/// The boundary tile attached to marked point `i`: the tile reached by
/// crossing boundary arrow `i` clockwise.
pub fn necklace_tile(d: &Dimer, i: u32) -> usize {
    d.clockwise_ends(d.boundary_arrow(i)).1
}

/// Source and target necklaces: entry `i - 1` is the label of [`necklace_tile`]`(i)`.
pub fn necklaces(d: &Dimer) -> Result<(Vec<Subset>, Vec<Subset>), StrandError> {
    let table = label_table(d)?;
    let tiles: Vec<usize> = (1..=d.n() as u32).map(|i| necklace_tile(d, i)).collect();
    Ok((
        tiles.iter().map(|&v| table.source[v].clone()).collect(),
        tiles.iter().map(|&v| table.target[v].clone()).collect(),
    ))
}
