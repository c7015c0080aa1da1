//! The maps `η` and `β` and the checks built on them.

use dimer_core::Dimer;
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::LatticeError;
use crate::lattice::{lattice_basis, vertex_labels, IntegerMatrix, KClass, LatticePoint};
use crate::linalg::{image_equals_kernel, rank, smith_invariants, solve_integer, to_big};

/// `η(f) = deg(f) Σ_j p_j − Σ_γ (deg(f) − f(γ)) p_{hγ} + Σ_{γ internal} f(γ) p_{tγ}`, without checking `f`.
pub fn eta_unchecked(d: &Dimer, f: &LatticePoint) -> KClass {
    let mut k = KClass::all_ones(d.num_vertices());
    for c in k.coefficients.iter_mut() {
        *c *= f.deg;
    }
    for a in 0..d.num_arrows() {
        k.add_unit(d.head(a), -(f.deg - f.values[a]));
        if !d.is_boundary_arrow(a) {
            k.add_unit(d.tail(a), f.values[a]);
        }
    }
    k
}

/// `η(f)` for a lattice point `f`; fails if `f` violates a face sum.
pub fn eta(d: &Dimer, f: &LatticePoint) -> Result<KClass, LatticeError> {
    f.check(d)?;
    Ok(eta_unchecked(d, f))
}

/// The matrix of `η` on the lattice basis, with its Smith invariants.
#[derive(Clone, Debug, Serialize)]
pub struct EtaMatrix {
    pub basis: Vec<LatticePoint>,
    pub matrix: IntegerMatrix,
    /// Nonzero Smith invariant factors.
    pub invariant_factors: Vec<i64>,
    /// Square with all invariant factors equal to 1.
    pub unimodular: bool,
}

pub fn eta_matrix(d: &Dimer) -> EtaMatrix {
    let basis = lattice_basis(d);
    let columns: Vec<KClass> = basis.iter().map(|b| eta_unchecked(d, b)).collect();
    let entries: Vec<Vec<i64>> = (0..d.num_vertices())
        .map(|j| columns.iter().map(|c| c.coefficients[j]).collect())
        .collect();
    let matrix = IntegerMatrix {
        row_labels: vertex_labels(d),
        col_labels: (0..basis.len()).map(|b| format!("basis[{b}]")).collect(),
        entries,
    };
    let factors = smith_invariants(&matrix.to_big(), matrix.cols());
    let invariant_factors: Vec<i64> = factors
        .iter()
        .map(|x| x.to_i64().unwrap_or(i64::MAX))
        .collect();
    let unimodular = matrix.rows() == matrix.cols()
        && factors.len() == matrix.rows()
        && factors.iter().all(One::is_one);
    EtaMatrix {
        basis,
        matrix,
        invariant_factors,
        unimodular,
    }
}

pub fn is_eta_unimodular(d: &Dimer) -> bool {
    eta_matrix(d).unimodular
}

/// `β[S_i] = p_i − Σ_{ta=i} p_{ha} + Σ_{ha=i, a internal} p_{ta} − χ_i p_i`, with `χ_i = 1` iff `i` is internal.
pub fn beta_column(d: &Dimer, i: usize) -> KClass {
    let mut k = KClass::unit(d.num_vertices(), i);
    for a in 0..d.num_arrows() {
        if d.tail(a) == i {
            k.add_unit(d.head(a), -1);
        }
        if d.head(a) == i && !d.is_boundary_arrow(a) {
            k.add_unit(d.tail(a), 1);
        }
    }
    if !d.is_boundary_vertex(i) {
        k.add_unit(i, -1);
    }
    k
}

/// The matrix of `β`, column `i` being `β[S_i]`.
pub fn beta_matrix(d: &Dimer) -> IntegerMatrix {
    let cols: Vec<KClass> = (0..d.num_vertices()).map(|i| beta_column(d, i)).collect();
    IntegerMatrix {
        row_labels: vertex_labels(d),
        col_labels: (0..d.num_vertices())
            .map(|i| format!("S[{}]", d.vertex_name(i)))
            .collect(),
        entries: (0..d.num_vertices())
            .map(|j| cols.iter().map(|c| c.coefficients[j]).collect())
            .collect(),
    }
}

/// Outcome of the cluster ensemble checks, with a witness string per failure.
#[derive(Clone, Debug, Serialize)]
pub struct EnsembleReport {
    /// `η(d𝟙_j) = β[S_j]` for every vertex.
    pub eta_d_equals_beta: bool,
    /// `rk η(f) = deg f` on the lattice basis.
    pub rank_is_degree: bool,
    /// The kernel of `β` is spanned by the all-ones vector.
    pub exact_at_source: bool,
    /// The image of `β` is the kernel of `rk`.
    pub exact_at_target: bool,
    pub unimodular: bool,
    pub invariant_factors: Vec<i64>,
    pub witnesses: Vec<String>,
    pub passed: bool,
}

pub fn check_cluster_ensemble(d: &Dimer) -> EnsembleReport {
    let nv = d.num_vertices();
    let mut witnesses = Vec::new();

    let mut eta_d_equals_beta = true;
    for j in 0..nv {
        let lhs = eta_unchecked(d, &LatticePoint::coboundary_of_vertex(d, j));
        if lhs != beta_column(d, j) {
            eta_d_equals_beta = false;
            witnesses.push(format!(
                "eta(d 1[{}]) differs from beta[S[{}]]",
                d.vertex_name(j),
                d.vertex_name(j)
            ));
        }
    }

    let em = eta_matrix(d);
    let mut rank_is_degree = true;
    for (b, f) in em.basis.iter().enumerate() {
        let r = eta_unchecked(d, f).rank();
        if r != f.deg {
            rank_is_degree = false;
            witnesses.push(format!("basis[{b}] has degree {} but rank {r}", f.deg));
        }
    }

    let beta = beta_matrix(d).to_big();
    let ones: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]; nv];
    let exact_at_source = image_equals_kernel(&beta, nv, &ones, 1);
    if !exact_at_source {
        witnesses.push(format!(
            "beta has rank {}, expected {}",
            rank(&beta, nv),
            nv.saturating_sub(1)
        ));
    }
    let rk = to_big(&[vec![1; nv]]);
    let exact_at_target = image_equals_kernel(&rk, nv, &beta, nv);
    if !exact_at_target {
        let factors = smith_invariants(&beta, nv);
        witnesses.push(format!(
            "image of beta differs from the kernel of rk (invariant factors {})",
            factors
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        ));
    }
    if !em.unimodular {
        witnesses.push(format!(
            "eta matrix is {}x{} with invariant factors {:?}",
            em.matrix.rows(),
            em.matrix.cols(),
            em.invariant_factors
        ));
    }
    let passed =
        eta_d_equals_beta && rank_is_degree && exact_at_source && exact_at_target && em.unimodular;
    EnsembleReport {
        eta_d_equals_beta,
        rank_is_degree,
        exact_at_source,
        exact_at_target,
        unimodular: em.unimodular,
        invariant_factors: em.invariant_factors,
        witnesses,
        passed,
    }
}

/// The lattice points `η⁻¹(p_j)`, one per vertex.
pub fn eta_inverse_basis(d: &Dimer) -> Result<Vec<LatticePoint>, LatticeError> {
    let em = eta_matrix(d);
    if !em.unimodular {
        return Err(LatticeError::NotUnimodular(
            em.invariant_factors
                .iter()
                .map(ToString::to_string)
                .collect(),
        ));
    }
    let a = em.matrix.to_big();
    (0..d.num_vertices())
        .map(|j| {
            let mut rhs = vec![BigInt::zero(); d.num_vertices()];
            rhs[j] = BigInt::one();
            let x = solve_integer(&a, em.matrix.cols(), &rhs)
                .ok_or_else(|| LatticeError::NoPreimage(d.vertex_name(j)))?;
            let mut point = LatticePoint::zero(d);
            for (c, b) in x.iter().zip(&em.basis) {
                point = &point + &b.scale(c.to_i64().expect("coefficients fit in i64"));
            }
            Ok(point)
        })
        .collect()
}
