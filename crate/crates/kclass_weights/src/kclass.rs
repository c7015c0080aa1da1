//! Classes of matching modules and the weights of matchings.

use dimer_core::{Color, Dimer};
use lattice_maps::KClass;
use matchings::{boundary_value, Matching};
use serde::Serialize;

use crate::error::KClassError;

/// `[N_μ] = Σ_j p_j − Σ_{γ∉μ} p_{hγ} + Σ_{γ∈μ internal} p_{tγ}`.
pub fn kclass_of_matching(d: &Dimer, m: &Matching) -> KClass {
    let mut k = KClass::all_ones(d.num_vertices());
    for a in 0..d.num_arrows() {
        if !m.contains(a) {
            k.add_unit(d.head(a), -1);
        } else if !d.is_boundary_arrow(a) {
            k.add_unit(d.tail(a), 1);
        }
    }
    k
}

/// `wt_D = Σ_{j internal} p_j`.
pub fn wt_d(d: &Dimer) -> KClass {
    let mut k = KClass::zero(d.num_vertices());
    for j in d.internal_vertices() {
        k.add_unit(j, 1);
    }
    k
}

/// `Σ_{γ internal} wt_μ(γ)` with `wt_μ(γ) = −p_{tγ}` if `γ ∈ μ` and `p_{hγ}` otherwise.
///
/// This is `wt°(μ)` on a white-standardised model and `wt•(μ)` on a black-standardised one.
pub fn weight_of_matching(d: &Dimer, m: &Matching) -> KClass {
    let mut k = KClass::zero(d.num_vertices());
    for a in d.internal_arrows() {
        if m.contains(a) {
            k.add_unit(d.tail(a), -1);
        } else {
            k.add_unit(d.head(a), 1);
        }
    }
    k
}

/// Per internal arrow, the classes of its truncated black and white cycles.
#[derive(Clone, Debug, Serialize)]
pub struct WeightTable {
    pub num_vertices: usize,
    /// Internal arrow indices, increasing.
    pub arrows: Vec<usize>,
    /// `wtMS°(γ) = Σ_{j ∈ bl′₀(γ)} p_j`: the black cycle through `γ` without `tγ, hγ`.
    pub white: Vec<KClass>,
    /// `wtMS•(γ) = Σ_{j ∈ wh′₀(γ)} p_j`: the white cycle through `γ` without `tγ, hγ`.
    pub black: Vec<KClass>,
}

impl WeightTable {
    fn lookup(&self, a: usize) -> Option<usize> {
        self.arrows.binary_search(&a).ok()
    }

    /// `Σ_{γ∈μ internal} wtMS(γ)` using the table for `color`.
    pub fn sum_over(&self, m: &Matching, color: Color) -> KClass {
        let table = match color {
            Color::White => &self.white,
            Color::Black => &self.black,
        };
        let mut k = KClass::zero(self.num_vertices);
        for a in m.arrows() {
            if let Some(i) = self.lookup(a) {
                k = &k + &table[i];
            }
        }
        k
    }
}

fn truncated_cycle(d: &Dimer, a: usize, face_color: Color) -> KClass {
    let f = d
        .face_of(a, face_color)
        .expect("internal arrows lie in faces of both colours");
    let mut k = KClass::zero(d.num_vertices());
    for v in d.face_vertices(f) {
        if v != d.tail(a) && v != d.head(a) {
            k.add_unit(v, 1);
        }
    }
    k
}

pub fn weight_table(d: &Dimer) -> WeightTable {
    let arrows: Vec<usize> = d.internal_arrows().collect();
    WeightTable {
        num_vertices: d.num_vertices(),
        white: arrows
            .iter()
            .map(|&a| truncated_cycle(d, a, Color::Black))
            .collect(),
        black: arrows
            .iter()
            .map(|&a| truncated_cycle(d, a, Color::White))
            .collect(),
        arrows,
    }
}

/// The weights of a matching on a standardised model.
#[derive(Clone, Debug, Serialize)]
pub struct Weights {
    /// The colour of the faces holding the boundary arrows.
    pub standardised: Color,
    /// `wt°(μ)` or `wt•(μ)` according to `standardised`.
    pub wt: KClass,
    pub wt_d: KClass,
}

/// `wt°(μ)` (white-standardised models) or `wt•(μ)` (black-standardised models), with `wt_D`.
pub fn weights(d: &Dimer, m: &Matching) -> Result<Weights, KClassError> {
    let standardised = if d.is_standardised(Color::White) {
        Color::White
    } else if d.is_standardised(Color::Black) {
        Color::Black
    } else {
        return Err(KClassError::Unstandardised);
    };
    Ok(Weights {
        standardised,
        wt: weight_of_matching(d, m),
        wt_d: wt_d(d),
    })
}

/// The class of `N_μ` rewritten for a model standardised in colour `color`:
/// `wt_D + Σ_{i∈∂μ} p_{hα_i} − wt°(μ)` for white, `wt_D + Σ_{i∉∂μ} p_{hβ_i} − wt•(μ)` for black.
pub fn standardised_class(d: &Dimer, m: &Matching, color: Color) -> Result<KClass, KClassError> {
    if !d.is_standardised(color) {
        return Err(KClassError::NotStandardised(color));
    }
    let boundary = boundary_value(d, m);
    let mut k = &wt_d(d) - &weight_of_matching(d, m);
    for i in 1..=d.n() as u32 {
        if boundary.contains(&i) == (color == Color::White) {
            k.add_unit(d.head(d.boundary_arrow(i)), 1);
        }
    }
    Ok(k)
}
