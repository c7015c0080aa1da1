//! Strand extraction by the zig-zag rule.

use dimer_core::{Color, Dimer};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StrandError {
    #[error("strand starting at {start} does not reach the boundary")]
    Unterminated { start: u32 },
    #[error("strand starting at {start} does not separate the disc into two sides")]
    NotSeparating { start: u32 },
    #[error("model is not consistent: {0}")]
    Inconsistent(String),
}

/// One strand, from marked point `start_label` to marked point `end_label`.
///
/// `arrows` lists the arrows crossed in order, beginning with the boundary
/// arrow labelled `start_label` and ending with the one labelled `end_label`.
/// Between crossing `arrows[t]` and `arrows[t + 1]` the strand runs through
/// face `faces[t]`, turning around the corner at the head of `arrows[t]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strand {
    pub start_label: u32,
    pub end_label: u32,
    pub arrows: Vec<usize>,
    pub faces: Vec<usize>,
}

/// Serialisable crossing record: arrow id and the colour of the face the strand turns through next.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Crossing {
    pub arrow: u32,
    pub turn: Option<Color>,
}

impl Strand {
    /// Pairs `(arrow, face)`: the strand crosses `arrow` and then runs through `face`.
    pub fn passages(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arrows.iter().copied().zip(self.faces.iter().copied())
    }

    /// Passages from the `t`-th crossing onwards.
    pub fn passages_from(&self, t: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.passages().skip(t)
    }

    pub fn crossing_sequence(&self, d: &Dimer) -> Vec<Crossing> {
        self.arrows
            .iter()
            .enumerate()
            .map(|(t, &a)| Crossing {
                arrow: d.arrow_id(a),
                turn: self.faces.get(t).map(|&f| d.color(f)),
            })
            .collect()
    }
}

/// Follows the strand that starts at marked point `i`.
///
/// After crossing arrow `a` into face `f` the strand crosses `succ_f(a)`; if
/// that arrow is internal it continues into its other face. Face colours
/// therefore alternate along the strand.
pub fn strand_from(d: &Dimer, i: u32) -> Result<Strand, StrandError> {
    let mut a = d.boundary_arrow(i);
    let mut f = d.boundary_face(a);
    let mut arrows = vec![a];
    let mut faces = Vec::new();
    // Each arrow is crossed at most twice overall, so a longer walk is a bug.
    for _ in 0..=2 * d.num_arrows() {
        faces.push(f);
        a = d.succ(f, a);
        arrows.push(a);
        match d.other_face(a, f) {
            Some(g) => f = g,
            None => {
                return Ok(Strand {
                    start_label: i,
                    end_label: d.label(a).expect("arrow with one face is a boundary arrow"),
                    arrows,
                    faces,
                })
            }
        }
    }
    Err(StrandError::Unterminated { start: i })
}

/// All strands, indexed by start label: entry `i - 1` starts at `i`.
pub fn strands(d: &Dimer) -> Result<Vec<Strand>, StrandError> {
    (1..=d.n() as u32).map(|i| strand_from(d, i)).collect()
}

/// `pi[i - 1] = j` iff the strand starting at `i` ends at `j`.
pub fn strand_permutation(d: &Dimer) -> Result<Vec<u32>, StrandError> {
    Ok(strands(d)?.iter().map(|s| s.end_label).collect())
}

/// Strands indexed by end label: entry `i - 1` ends at `i`.
pub fn strands_by_end(d: &Dimer) -> Result<Vec<Strand>, StrandError> {
    let mut all = strands(d)?;
    all.sort_by_key(|s| s.end_label);
    Ok(all)
}
