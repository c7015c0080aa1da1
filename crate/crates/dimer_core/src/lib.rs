//! Dimer models with boundary on the disc.
//!
//! A dimer model is a quiver with faces: vertices (tiles), arrows, and faces
//! coloured black (anticlockwise cycles) or white (clockwise cycles). Internal
//! arrows lie in one face of each colour and boundary arrows in exactly one
//! face. Boundary arrows carry the marked-point labels `1..n`, increasing
//! clockwise around the disc.
//!
//! [`DimerModel`] is the serialisable record. [`Dimer`] is a validated,
//! densely indexed view that the rest of the workspace computes with.

pub mod dimer;
pub mod dual;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod model;
pub mod ops;
pub mod uniform;
pub mod validate;

pub use dimer::Dimer;
pub use dual::{bipartite_dual, type_of, BipartiteDual};
pub use error::{DimerError, StructuralError};
pub use io::{from_json, load, save, to_json};
pub use model::{Arrow, Color, DimerModel, Face, Vertex};
pub use ops::{opposite, standardise};
pub use uniform::build_uniform;
pub use validate::{validate, ModelReport};

/// A k-subset of marked points, kept sorted.
pub type Subset = Vec<u32>;

/// Parses a subset written as `1,3,5`, `{1,3,5}` or `135` (single digits only in the last form).
pub fn parse_subset(text: &str) -> Result<Subset, DimerError> {
    let t = text
        .trim()
        .trim_start_matches('{')
        .trim_end_matches('}')
        .trim();
    let mut out: Vec<u32> = if t.is_empty() {
        Vec::new()
    } else if t.contains(',') || t.contains(' ') {
        t.split([',', ' '])
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.trim()
                    .parse::<u32>()
                    .map_err(|e| DimerError::Argument(format!("bad subset entry `{s}`: {e}")))
            })
            .collect::<Result<_, _>>()?
    } else {
        t.chars()
            .map(|c| {
                c.to_digit(10)
                    .ok_or_else(|| DimerError::Argument(format!("bad subset `{text}`")))
            })
            .collect::<Result<_, _>>()?
    };
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Formats a subset as `{1,3,5}`.
pub fn format_subset(s: &[u32]) -> String {
    let parts: Vec<String> = s.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// All `k`-subsets of `1..=n` in lexicographic order.
pub fn k_subsets(k: usize, n: usize) -> Vec<Subset> {
    fn go(start: u32, n: u32, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Subset>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            if (n - x + 1) as usize + cur.len() < k {
                break;
            }
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n as u32, k, &mut Vec::new(), &mut out);
    out
}

/// Complement of `s` in `1..=n`.
pub fn complement(s: &[u32], n: usize) -> Subset {
    (1..=n as u32).filter(|x| !s.contains(x)).collect()
}
