//! The matching type, enumeration and boundary values.

use std::fmt;

use dimer_core::{Dimer, Subset};
use serde::{Serialize, Serializer};

use crate::cover::exact_covers;
use crate::error::MatchingError;

/// A perfect matching, stored as a membership mask over arrow indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    mask: Vec<bool>,
}

impl Matching {
    /// Builds a matching from arrow indices without checking the face condition.
    pub fn from_indices(num_arrows: usize, arrows: impl IntoIterator<Item = usize>) -> Matching {
        let mut mask = vec![false; num_arrows];
        for a in arrows {
            mask[a] = true;
        }
        Matching { mask }
    }

    /// Builds and checks a matching from arrow ids.
    pub fn from_ids(d: &Dimer, ids: &[u32]) -> Result<Matching, MatchingError> {
        let mut arrows = Vec::with_capacity(ids.len());
        for &id in ids {
            arrows.push(d.arrow_index(id).ok_or(MatchingError::UnknownArrow(id))?);
        }
        let m = Matching::from_indices(d.num_arrows(), arrows);
        m.check(d)?;
        Ok(m)
    }

    /// Fails unless every face contains exactly one arrow of the set.
    pub fn check(&self, d: &Dimer) -> Result<(), MatchingError> {
        for f in 0..d.num_faces() {
            let count = d.cycle(f).iter().filter(|&&a| self.mask[a]).count();
            if count != 1 {
                return Err(MatchingError::NotAMatching(d.face_id(f), count));
            }
        }
        Ok(())
    }

    pub fn contains(&self, a: usize) -> bool {
        self.mask[a]
    }

    /// 1 on matched arrows, 0 elsewhere.
    pub fn value(&self, a: usize) -> i64 {
        i64::from(self.mask[a])
    }

    pub fn len(&self) -> usize {
        self.mask.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn num_arrows(&self) -> usize {
        self.mask.len()
    }

    /// Matched arrow indices in increasing order.
    pub fn arrows(&self) -> Vec<usize> {
        (0..self.mask.len()).filter(|&a| self.mask[a]).collect()
    }

    /// Matched arrow ids, sorted.
    pub fn ids(&self, d: &Dimer) -> Vec<u32> {
        let mut ids: Vec<u32> = self.arrows().into_iter().map(|a| d.arrow_id(a)).collect();
        ids.sort_unstable();
        ids
    }

    /// The arrow of face `f` in the matching.
    pub fn arrow_in(&self, d: &Dimer, f: usize) -> usize {
        *d.cycle(f)
            .iter()
            .find(|&&a| self.mask[a])
            .expect("a matching meets every face")
    }

    pub(crate) fn toggle(&mut self, a: usize) {
        self.mask[a] = !self.mask[a];
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.arrows()).finish()
    }
}

/// Serialises as the sorted list of arrow indices; use [`Matching::ids`] for ids.
impl Serialize for Matching {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.arrows().serialize(s)
    }
}

/// All perfect matchings, in canonical order.
///
/// Faces are covered in increasing index order and each face tries its arrows
/// in boundary-cycle order, so the list is stable across runs.
pub fn enumerate_matchings(d: &Dimer) -> Vec<Matching> {
    let edges: Vec<Vec<usize>> = (0..d.num_arrows())
        .map(|a| d.faces_of(a).collect())
        .collect();
    let choices: Vec<Vec<usize>> = (0..d.num_faces()).map(|f| d.cycle(f).to_vec()).collect();
    exact_covers(d.num_faces(), &edges, &choices)
        .into_iter()
        .map(|arrows| Matching::from_indices(d.num_arrows(), arrows))
        .collect()
}

/// Marked points `i` whose boundary arrow is clockwise and matched, or anticlockwise and unmatched.
pub fn boundary_value(d: &Dimer, m: &Matching) -> Subset {
    (1..=d.n() as u32)
        .filter(|&i| {
            let a = d.boundary_arrow(i);
            d.is_clockwise(a) == m.contains(a)
        })
        .collect()
}

/// The matchings with boundary value `subset`, in canonical order.
pub fn matchings_with_boundary(d: &Dimer, subset: &[u32]) -> Vec<Matching> {
    let mut want = subset.to_vec();
    want.sort_unstable();
    enumerate_matchings(d)
        .into_iter()
        .filter(|m| boundary_value(d, m) == want)
        .collect()
}
