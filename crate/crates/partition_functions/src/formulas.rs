//! Partition-function formulas summing over matchings with a fixed boundary value.

use dimer_core::{Color, Dimer};
use kclass_weights::{kclass_of_matching, weight_of_matching, wt_d};
use lattice_maps::{eta_unchecked, lattice_point_of_matching, KClass};
use matchings::{matchings_with_boundary, Matching};
use num_bigint::BigInt;
use num_traits::One;

use crate::error::PartitionError;
use crate::poly::{Basis, Exponent, LaurentPoly};

fn sorted_subset(d: &Dimer, subset: &[u32]) -> Result<Vec<u32>, PartitionError> {
    let k = dimer_core::type_of(d)
        .map(|(k, _)| k)
        .unwrap_or(subset.len());
    let mut s = subset.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.len() != k || subset.len() != k || s.iter().any(|&i| i == 0 || i as usize > d.n()) {
        return Err(PartitionError::WrongSize {
            subset: subset.to_vec(),
            expected: k,
            got: subset.len(),
        });
    }
    Ok(s)
}

fn require_standardised(d: &Dimer, color: Color) -> Result<(), PartitionError> {
    if d.is_standardised(color) {
        Ok(())
    } else {
        Err(PartitionError::NotStandardised(color))
    }
}

fn sum_over(d: &Dimer, subset: &[u32], exponent: impl Fn(&Matching) -> KClass) -> LaurentPoly {
    let mut p = LaurentPoly::zero(Basis::Vertices);
    for m in matchings_with_boundary(d, subset) {
        p.add_term(
            Exponent::from_dense(&exponent(&m).coefficients),
            BigInt::one(),
        );
    }
    p
}

/// `MS°(I) = x^{−wt_D} Σ_{∂μ=I} x^{wt°(μ)}` on a white-standardised model.
pub fn ms_formula_white(d: &Dimer, subset: &[u32]) -> Result<LaurentPoly, PartitionError> {
    require_standardised(d, Color::White)?;
    let subset = sorted_subset(d, subset)?;
    let shift = wt_d(d);
    Ok(sum_over(d, &subset, |m| &weight_of_matching(d, m) - &shift))
}

/// `x^{[P_I°]} Σ_{∂μ=I} x^{−[N_μ]}` with `[P_I°] = Σ_{i∈I} p_{hα_i}`, on a white-standardised model.
pub fn ms_formula_white_v2(d: &Dimer, subset: &[u32]) -> Result<LaurentPoly, PartitionError> {
    require_standardised(d, Color::White)?;
    let subset = sorted_subset(d, subset)?;
    let mut p_i = KClass::zero(d.num_vertices());
    for &i in &subset {
        p_i.add_unit(d.head(d.boundary_arrow(i)), 1);
    }
    Ok(sum_over(d, &subset, |m| &p_i - &kclass_of_matching(d, m)))
}

/// `MS•(I) = x^{−wt_D} Σ_{∂μ=I} x^{wt•(μ)}` on a black-standardised model.
pub fn ms_formula_black(d: &Dimer, subset: &[u32]) -> Result<LaurentPoly, PartitionError> {
    require_standardised(d, Color::Black)?;
    let subset = sorted_subset(d, subset)?;
    let shift = wt_d(d);
    Ok(sum_over(d, &subset, |m| &weight_of_matching(d, m) - &shift))
}

/// `Σ_{∂μ=I} x^{−η(μ)}`; fails if no matching has boundary value `I`.
pub fn musp_twist_expression(d: &Dimer, subset: &[u32]) -> Result<LaurentPoly, PartitionError> {
    let subset = sorted_subset(d, subset)?;
    let p = sum_over(d, &subset, |m| {
        -&eta_unchecked(d, &lattice_point_of_matching(m))
    });
    if p.is_zero() {
        return Err(PartitionError::NotInPositroid(subset));
    }
    Ok(p)
}
