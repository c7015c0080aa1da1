//! Merged cells and the graded pieces of the resolution.

use dimer_core::{Color, Dimer};
use kclass_weights::kclass_of_matching;
use lattice_maps::linalg::{rank, solve_rational, to_big};
use lattice_maps::KClass;
use matchings::Matching;
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::reach::{reachable_set, saturation};

/// The union of the two faces through an internal matched arrow `β`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MergedFace {
    pub arrow: usize,
    /// The head of the relation: `t β`.
    pub head: usize,
    /// Unmatched arrows of the black face through `β`.
    pub plus: Vec<usize>,
    /// Unmatched arrows of the white face through `β`.
    pub minus: Vec<usize>,
}

/// The cells of the merged complex `Q^μ` beyond its vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MergedComplex {
    /// Arrows not in the matching.
    pub arrows: Vec<usize>,
    pub faces: Vec<MergedFace>,
}

pub fn merged_complex_data(d: &Dimer, m: &Matching) -> MergedComplex {
    let side = |beta: usize, c: Color| -> Vec<usize> {
        let f = d
            .face_of(beta, c)
            .expect("internal arrows lie in faces of both colours");
        d.cycle(f).iter().copied().filter(|&a| a != beta).collect()
    };
    MergedComplex {
        arrows: (0..d.num_arrows()).filter(|&a| !m.contains(a)).collect(),
        faces: d
            .internal_arrows()
            .filter(|&b| m.contains(b))
            .map(|b| MergedFace {
                arrow: b,
                head: d.tail(b),
                plus: side(b, Color::Black),
                minus: side(b, Color::White),
            })
            .collect(),
    }
}

/// The complex `C2 → C1 → C0 → C−1` computing the degree-`d` part of the resolution at vertex `i`.
#[derive(Clone, Debug, Serialize)]
pub struct GradedComplexPiece {
    pub vertex: usize,
    pub degree: u32,
    /// `C0`: the reachable set.
    pub support: Vec<usize>,
    /// `C1`: unmatched arrows with head in the support.
    pub arrows: Vec<usize>,
    /// `C2`: matched internal arrows whose merged face has head in the support.
    pub faces: Vec<usize>,
    /// `δ2`, rows indexed by `arrows`, columns by `faces`.
    pub delta2: Vec<Vec<i64>>,
    /// `δ1(α) = tα − hα`, rows indexed by `support`, columns by `arrows`.
    pub delta1: Vec<Vec<i64>>,
    /// `δ0(j) = 1`, a single row.
    pub delta0: Vec<Vec<i64>>,
}

fn matmul(a: &[Vec<i64>], b: &[Vec<i64>], inner: usize, cols: usize) -> Vec<Vec<i64>> {
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

impl GradedComplexPiece {
    pub fn dims(&self) -> [usize; 4] {
        [self.faces.len(), self.arrows.len(), self.support.len(), 1]
    }

    /// Whether consecutive maps compose to zero.
    pub fn is_complex(&self) -> bool {
        let [c2, c1, c0, _] = self.dims();
        let zero = |m: Vec<Vec<i64>>| m.iter().flatten().all(|&x| x == 0);
        zero(matmul(&self.delta1, &self.delta2, c1, c2))
            && zero(matmul(&self.delta0, &self.delta1, c0, c1))
    }

    /// Ranks of `δ2, δ1, δ0` over the rationals.
    pub fn ranks(&self) -> [usize; 3] {
        let [c2, c1, c0, _] = self.dims();
        [
            rank(&to_big(&self.delta2), c2),
            rank(&to_big(&self.delta1), c1),
            rank(&to_big(&self.delta0), c0),
        ]
    }

    /// Homology dimensions in homological degrees 2, 1, 0 and −1.
    pub fn homology(&self) -> [usize; 4] {
        let [c2, c1, c0, cm] = self.dims();
        let [r2, r1, r0] = self.ranks();
        [c2 - r2, c1 - r1 - r2, c0 - r0 - r1, cm - r0]
    }

    pub fn is_exact(&self) -> bool {
        self.homology() == [0; 4]
    }

    /// `dim C0 − dim C1 + dim C2`.
    pub fn euler(&self) -> i64 {
        let [c2, c1, c0, _] = self.dims();
        c0 as i64 - c1 as i64 + c2 as i64
    }
}

pub fn graded_piece(d: &Dimer, m: &Matching, i: usize, degree: u32) -> GradedComplexPiece {
    let s = reachable_set(d, m, i, degree);
    let merged = merged_complex_data(d, m);
    let arrows: Vec<usize> = merged
        .arrows
        .iter()
        .copied()
        .filter(|&a| s.contains(d.head(a)))
        .collect();
    let faces: Vec<&MergedFace> = merged.faces.iter().filter(|f| s.contains(f.head)).collect();
    let arrow_row = |a: usize| arrows.binary_search(&a).ok();
    let mut delta2 = vec![vec![0; faces.len()]; arrows.len()];
    for (c, f) in faces.iter().enumerate() {
        for (list, sign) in [(&f.plus, 1), (&f.minus, -1)] {
            for &a in list.iter() {
                if let Some(r) = arrow_row(a) {
                    delta2[r][c] += sign;
                }
            }
        }
    }
    let support_row = |v: usize| s.members.binary_search(&v).ok();
    let mut delta1 = vec![vec![0; arrows.len()]; s.members.len()];
    for (c, &a) in arrows.iter().enumerate() {
        if let Some(r) = support_row(d.tail(a)) {
            delta1[r][c] += 1;
        }
        if let Some(r) = support_row(d.head(a)) {
            delta1[r][c] -= 1;
        }
    }
    GradedComplexPiece {
        vertex: i,
        degree,
        delta0: vec![vec![1; s.members.len()]],
        support: s.members,
        arrows,
        faces: faces.iter().map(|f| f.arrow).collect(),
        delta2,
        delta1,
    }
}

/// A graded piece that is not an exact complex.
#[derive(Clone, Debug, Serialize)]
pub struct PieceFailure {
    pub vertex: String,
    pub degree: u32,
    pub homology: [usize; 4],
    pub is_complex: bool,
}

/// Exactness of all graded pieces up to `d_max`, with the Euler characteristic cross-check.
#[derive(Clone, Debug, Serialize)]
pub struct ResolutionReport {
    pub saturation: u32,
    pub d_max: u32,
    pub pieces_checked: usize,
    pub failures: Vec<PieceFailure>,
    /// The class of `N_μ` satisfies `Σ_{j∈S(μ,i,d)} [N_μ]_j = dim C0 − dim C1 + dim C2` for every piece.
    pub euler_consistent: bool,
    /// The class solving `Σ_{j∈S(μ,i,d)} x_j = 1` over all pieces, when that system determines it.
    pub recovered_class: Option<KClass>,
    /// `recovered_class` equals the class of `N_μ`.
    pub euler_matches_kclass: bool,
    pub passed: bool,
}

/// Checks every piece for `0 ≤ d ≤ d_max` (default: saturation + 1).
pub fn check_resolution(d: &Dimer, m: &Matching, d_max: Option<u32>) -> ResolutionReport {
    let sat = saturation(d, m);
    let d_max = d_max.unwrap_or(sat + 1);
    let kclass = kclass_of_matching(d, m);
    let nv = d.num_vertices();
    let mut failures = Vec::new();
    let mut euler_consistent = true;
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut pieces_checked = 0;
    for i in 0..nv {
        for degree in 0..=d_max {
            let piece = graded_piece(d, m, i, degree);
            pieces_checked += 1;
            let is_complex = piece.is_complex();
            if !is_complex || !piece.is_exact() {
                failures.push(PieceFailure {
                    vertex: d.vertex_name(i),
                    degree,
                    homology: piece.homology(),
                    is_complex,
                });
            }
            let from_class: i64 = piece.support.iter().map(|&j| kclass.coefficients[j]).sum();
            euler_consistent &= from_class == piece.euler();
            let mut row = vec![0; nv];
            for &j in &piece.support {
                row[j] = 1;
            }
            rows.push(row);
        }
    }
    rows.sort();
    rows.dedup();
    let system = to_big(&rows);
    let recovered_class = (rank(&system, nv) == nv)
        .then(|| solve_rational(&system, nv, &vec![BigInt::one(); rows.len()]))
        .flatten()
        .and_then(|x| {
            x.iter()
                .map(|q| q.is_integer().then(|| q.to_integer().to_i64()).flatten())
                .collect::<Option<Vec<i64>>>()
        })
        .map(|coefficients| KClass { coefficients });
    let euler_matches_kclass = recovered_class.as_ref() == Some(&kclass);
    let passed = failures.is_empty() && euler_consistent && euler_matches_kclass && d_max >= sat;
    ResolutionReport {
        saturation: sat,
        d_max,
        pieces_checked,
        failures,
        euler_consistent,
        recovered_class,
        euler_matches_kclass,
        passed,
    }
}
