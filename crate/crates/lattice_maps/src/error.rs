use thiserror::Error;

#[derive(Debug, Error)]
pub enum LatticeError {
    #[error("face {face} sums to {sum}, expected the degree {deg}")]
    FaceSum { face: u32, sum: i64, deg: i64 },
    #[error("the matching-lattice map is not unimodular (invariant factors {0:?})")]
    NotUnimodular(Vec<String>),
    #[error("no integral preimage of p[{0}]")]
    NoPreimage(String),
}
