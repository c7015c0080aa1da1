//! Rotation of a matching lowering the degree of a reachable set.

use dimer_core::Dimer;
use matchings::{path_degrees_to, Matching};

use crate::error::ResolutionError;

/// `ν = (μ ∖ X) ∪ Y` with `X = {α∈μ : D(tα)=d, D(hα)=d−1}` and
/// `Y = {β∉μ : D(tβ)=d−1, D(hβ)=d}`, where `D` is the minimal path degree toward `i`.
///
/// The result satisfies `S(μ, i, d) = S(ν, i, d − 1)`.
pub fn rotate_matching(
    d: &Dimer,
    m: &Matching,
    i: usize,
    degree: u32,
) -> Result<Matching, ResolutionError> {
    if degree == 0 {
        return Err(ResolutionError::DegreeZero);
    }
    let dist = path_degrees_to(d, m, i);
    let at = |v: usize, x: u32| dist[v] == x;
    let nu = Matching::from_indices(
        d.num_arrows(),
        (0..d.num_arrows()).filter(|&a| {
            let (t, h) = (d.tail(a), d.head(a));
            if m.contains(a) {
                !(at(t, degree) && at(h, degree - 1))
            } else {
                at(t, degree - 1) && at(h, degree)
            }
        }),
    );
    nu.check(d).map_err(|_| ResolutionError::NotAMatching {
        vertex: d.vertex_name(i),
        degree,
    })?;
    Ok(nu)
}
