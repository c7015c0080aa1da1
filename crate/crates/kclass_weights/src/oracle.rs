//! The matching of a projective module from minimal path degrees.

use dimer_core::Dimer;
use matchings::{path_degrees_from, Matching, UNREACHABLE};

use crate::error::KClassError;

/// The matching `{α : D(tα) + μ₀(α) − D(hα) = 1}`, where `D(i)` is the least
/// number of `μ₀`-arrows on a directed path from `j` to `i`.
///
/// The result does not depend on the reference matching `μ₀`.
pub fn projective_matching_oracle(
    d: &Dimer,
    reference: &Matching,
    j: usize,
) -> Result<Matching, KClassError> {
    let dist = path_degrees_from(d, reference, j);
    if let Some(v) = dist.iter().position(|&x| x == UNREACHABLE) {
        return Err(KClassError::Unreachable(format!(
            "{} (misses {})",
            d.vertex_name(j),
            d.vertex_name(v)
        )));
    }
    let slack =
        |a: usize| i64::from(dist[d.tail(a)]) + reference.value(a) - i64::from(dist[d.head(a)]);
    let m = Matching::from_indices(
        d.num_arrows(),
        (0..d.num_arrows()).filter(|&a| slack(a) == 1),
    );
    m.check(d).map_err(|source| KClassError::NotAMatching {
        vertex: d.vertex_name(j),
        source,
    })?;
    Ok(m)
}
