//! Laurent polynomials with integer coefficients over a declared basis.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::PartitionError;

/// What the exponent coordinates index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// Quiver vertices, so exponents are K-theory classes.
    Vertices,
    /// Arrows, so exponents are edge-weight vectors.
    Arrows,
}

/// A sparse exponent vector: sorted `(index, power)` pairs with nonzero powers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Exponent(Vec<(usize, i64)>);

impl Exponent {
    pub fn from_dense(v: &[i64]) -> Exponent {
        Exponent(
            v.iter()
                .enumerate()
                .filter(|(_, &p)| p != 0)
                .map(|(i, &p)| (i, p))
                .collect(),
        )
    }

    pub fn to_dense(&self, len: usize) -> Vec<i64> {
        let mut v = vec![0; len];
        for &(i, p) in &self.0 {
            v[i] = p;
        }
        v
    }

    pub fn entries(&self) -> &[(usize, i64)] {
        &self.0
    }

    /// Sum of all powers.
    pub fn total(&self) -> i64 {
        self.0.iter().map(|&(_, p)| p).sum()
    }

    pub fn add(&self, other: &Exponent) -> Exponent {
        let mut m: BTreeMap<usize, i64> = self.0.iter().copied().collect();
        for &(i, p) in &other.0 {
            *m.entry(i).or_insert(0) += p;
        }
        Exponent(m.into_iter().filter(|&(_, p)| p != 0).collect())
    }

    pub fn neg(&self) -> Exponent {
        Exponent(self.0.iter().map(|&(i, p)| (i, -p)).collect())
    }
}

/// `Σ c_e x^e`, with no zero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    basis: Basis,
    terms: BTreeMap<Exponent, BigInt>,
}

impl LaurentPoly {
    pub fn zero(basis: Basis) -> LaurentPoly {
        LaurentPoly {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(basis: Basis, exponent: Exponent, coefficient: BigInt) -> LaurentPoly {
        let mut p = LaurentPoly::zero(basis);
        p.add_term(exponent, coefficient);
        p
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    /// Sum of all coefficients: the number of matchings when every coefficient counts one.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn add_term(&mut self, exponent: Exponent, coefficient: BigInt) {
        let entry = self.terms.entry(exponent).or_insert_with(BigInt::zero);
        *entry += coefficient;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> Result<LaurentPoly, PartitionError> {
        if self.basis != other.basis {
            return Err(PartitionError::BasisMismatch(self.basis, other.basis));
        }
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn mul(&self, other: &LaurentPoly) -> Result<LaurentPoly, PartitionError> {
        if self.basis != other.basis {
            return Err(PartitionError::BasisMismatch(self.basis, other.basis));
        }
        let mut out = LaurentPoly::zero(self.basis);
        for (e, c) in &self.terms {
            for (f, d) in &other.terms {
                out.add_term(e.add(f), c * d);
            }
        }
        Ok(out)
    }

    /// Multiplies by the monomial `x^e`.
    pub fn shift(&self, e: &Exponent) -> LaurentPoly {
        LaurentPoly {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(f, c)| (f.add(e), c.clone()))
                .collect(),
        }
    }

    /// Renders with each exponent as `{index:power,...}`, mapping indices through `label`.
    pub fn render(&self, label: impl Fn(usize) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (n, (e, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if n > 0 {
                out.push_str(&format!(" {sign} "));
            } else if c.is_negative() {
                out.push('-');
            }
            let mag = c.abs();
            if !mag.is_one() {
                out.push_str(&format!("{mag}*"));
            }
            let parts: Vec<String> =
                e.0.iter()
                    .map(|&(i, p)| format!("{}:{p}", label(i)))
                    .collect();
            out.push_str(&format!("x^{{{}}}", parts.join(",")));
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(|i| i.to_string()))
    }
}

#[derive(Serialize)]
#[serde(untagged)]
enum Number {
    Small(i64),
    Big(String),
}

fn number(x: &BigInt) -> Number {
    x.to_i64()
        .map_or_else(|| Number::Big(x.to_string()), Number::Small)
}

#[derive(Serialize)]
struct TermOut {
    exponent: BTreeMap<usize, i64>,
    coefficient: Number,
}

#[derive(Serialize)]
struct PolyOut {
    basis: Basis,
    terms: Vec<TermOut>,
}

/// Serialises as `{"basis": ..., "terms": [{"exponent": {index: power}, "coefficient": c}]}`.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyOut {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermOut {
                    exponent: e.0.iter().copied().collect(),
                    coefficient: number(c),
                })
                .collect(),
        }
        .serialize(s)
    }
}

/// Evaluates the polynomial with `x_i ↦ values[i]`.
pub fn specialize(
    poly: &LaurentPoly,
    values: &[BigRational],
) -> Result<BigRational, PartitionError> {
    let mut total = BigRational::zero();
    for (e, c) in poly.terms() {
        let mut term = BigRational::from_integer(c.clone());
        for &(i, p) in e.entries() {
            let v = values.get(i).ok_or(PartitionError::MissingValue(i))?;
            if v.is_zero() {
                return Err(PartitionError::ZeroValue(i));
            }
            let base = if p < 0 { v.recip() } else { v.clone() };
            for _ in 0..p.unsigned_abs() {
                term *= &base;
            }
        }
        total += term;
    }
    Ok(total)
}
