//! The matching lattice and its elements.

use std::ops::{Add, Neg, Sub};

use dimer_core::Dimer;
use matchings::Matching;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::LatticeError;
use crate::linalg::{kernel_basis, to_big};

/// An integer function on arrows with the same sum `deg` around every face.
///
/// `values` is indexed by arrow index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LatticePoint {
    pub values: Vec<i64>,
    pub deg: i64,
}

impl LatticePoint {
    pub fn zero(d: &Dimer) -> LatticePoint {
        LatticePoint {
            values: vec![0; d.num_arrows()],
            deg: 0,
        }
    }

    /// The indicator of a matching, of degree 1.
    pub fn of_matching(m: &Matching) -> LatticePoint {
        LatticePoint {
            values: (0..m.num_arrows()).map(|a| m.value(a)).collect(),
            deg: 1,
        }
    }

    /// The coboundary `d𝟙_j`: +1 on arrows into `j`, −1 on arrows out of `j`, degree 0.
    pub fn coboundary_of_vertex(d: &Dimer, j: usize) -> LatticePoint {
        let values = (0..d.num_arrows())
            .map(|a| i64::from(d.head(a) == j) - i64::from(d.tail(a) == j))
            .collect();
        LatticePoint { values, deg: 0 }
    }

    /// Fails unless every face sums to `deg`.
    pub fn check(&self, d: &Dimer) -> Result<(), LatticeError> {
        for f in 0..d.num_faces() {
            let sum: i64 = d.cycle(f).iter().map(|&a| self.values[a]).sum();
            if sum != self.deg {
                return Err(LatticeError::FaceSum {
                    face: d.face_id(f),
                    sum,
                    deg: self.deg,
                });
            }
        }
        Ok(())
    }

    /// The matching this point is the indicator of, if it is 0/1-valued of degree 1.
    pub fn to_matching(&self) -> Option<Matching> {
        if self.deg != 1 || self.values.iter().any(|&v| v != 0 && v != 1) {
            return None;
        }
        Some(Matching::from_indices(
            self.values.len(),
            (0..self.values.len()).filter(|&a| self.values[a] == 1),
        ))
    }

    pub fn scale(&self, c: i64) -> LatticePoint {
        LatticePoint {
            values: self.values.iter().map(|v| v * c).collect(),
            deg: self.deg * c,
        }
    }
}

impl Add for &LatticePoint {
    type Output = LatticePoint;
    fn add(self, o: &LatticePoint) -> LatticePoint {
        LatticePoint {
            values: self
                .values
                .iter()
                .zip(&o.values)
                .map(|(x, y)| x + y)
                .collect(),
            deg: self.deg + o.deg,
        }
    }
}

impl Sub for &LatticePoint {
    type Output = LatticePoint;
    fn sub(self, o: &LatticePoint) -> LatticePoint {
        self + &o.scale(-1)
    }
}

/// An element of the K-theory lattice, in the basis of indecomposable projectives `p_j`.
///
/// `coefficients` is indexed by vertex index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct KClass {
    pub coefficients: Vec<i64>,
}

impl KClass {
    pub fn zero(num_vertices: usize) -> KClass {
        KClass {
            coefficients: vec![0; num_vertices],
        }
    }

    /// The class `p_j` of the projective at vertex `j`.
    pub fn unit(num_vertices: usize, j: usize) -> KClass {
        let mut k = KClass::zero(num_vertices);
        k.coefficients[j] = 1;
        k
    }

    /// `Σ_j p_j`.
    pub fn all_ones(num_vertices: usize) -> KClass {
        KClass {
            coefficients: vec![1; num_vertices],
        }
    }

    /// Adds `c · p_j`.
    pub fn add_unit(&mut self, j: usize, c: i64) {
        self.coefficients[j] += c;
    }

    /// The rank: the sum of all coefficients.
    pub fn rank(&self) -> i64 {
        self.coefficients.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(|&c| c == 0)
    }
}

impl Add for &KClass {
    type Output = KClass;
    fn add(self, o: &KClass) -> KClass {
        KClass {
            coefficients: self
                .coefficients
                .iter()
                .zip(&o.coefficients)
                .map(|(x, y)| x + y)
                .collect(),
        }
    }
}

impl Sub for &KClass {
    type Output = KClass;
    fn sub(self, o: &KClass) -> KClass {
        self + &(-o)
    }
}

impl Neg for &KClass {
    type Output = KClass;
    fn neg(self) -> KClass {
        KClass {
            coefficients: self.coefficients.iter().map(|x| -x).collect(),
        }
    }
}

/// A dense integer matrix with named rows and columns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntegerMatrix {
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    pub entries: Vec<Vec<i64>>,
}

impl IntegerMatrix {
    pub fn rows(&self) -> usize {
        self.row_labels.len()
    }

    pub fn cols(&self) -> usize {
        self.col_labels.len()
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        self.entries.iter().map(|row| row[j]).collect()
    }

    pub fn to_big(&self) -> Vec<Vec<BigInt>> {
        to_big(&self.entries)
    }
}

pub(crate) fn vertex_labels(d: &Dimer) -> Vec<String> {
    (0..d.num_vertices())
        .map(|v| format!("p[{}]", d.vertex_name(v)))
        .collect()
}

/// A basis of the matching lattice, in Hermite normal form over the coordinates `(deg, values)`.
///
/// The lattice is the integer kernel of `(deg, f) ↦ (Σ_{a∈∂F} f(a) − deg)_F`.
pub fn lattice_basis(d: &Dimer) -> Vec<LatticePoint> {
    let cols = 1 + d.num_arrows();
    let constraint: Vec<Vec<i64>> = (0..d.num_faces())
        .map(|f| {
            let mut row = vec![0; cols];
            row[0] = -1;
            for &a in d.cycle(f) {
                row[1 + a] += 1;
            }
            row
        })
        .collect();
    kernel_basis(&to_big(&constraint), cols)
        .into_iter()
        .map(|v| {
            let ints: Vec<i64> = v
                .iter()
                .map(|x| x.to_i64().expect("basis entries fit in i64"))
                .collect();
            LatticePoint {
                deg: ints[0],
                values: ints[1..].to_vec(),
            }
        })
        .collect()
}

/// The indicator of `μ` as a lattice point of degree 1.
pub fn lattice_point_of_matching(m: &Matching) -> LatticePoint {
    LatticePoint::of_matching(m)
}
