//! Weighted matching counts per boundary value and the Plücker relations.

use std::collections::BTreeMap;

use dimer_core::{format_subset, k_subsets, type_of, Dimer, Subset};
use matchings::{boundary_value, enumerate_matchings};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::error::PartitionError;

/// Exact values indexed by the `k`-subsets of `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluckerVector {
    pub k: usize,
    pub n: usize,
    pub values: BTreeMap<Subset, BigRational>,
}

impl PluckerVector {
    pub fn get(&self, s: &[u32]) -> BigRational {
        let mut key = s.to_vec();
        key.sort_unstable();
        self.values
            .get(&key)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }
}

/// Serialises as `{"k": k, "n": n, "values": {"1,3": "p/q", ...}}`.
impl Serialize for PluckerVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out {
            k: usize,
            n: usize,
            values: BTreeMap<String, String>,
        }
        Out {
            k: self.k,
            n: self.n,
            values: self
                .values
                .iter()
                .map(|(key, v)| (format_subset(key), v.to_string()))
                .collect(),
        }
        .serialize(s)
    }
}

/// Weight 1 on every arrow.
pub fn unit_weights(d: &Dimer) -> Vec<BigRational> {
    vec![BigRational::one(); d.num_arrows()]
}

/// Positive rationals `p/q` with `1 ≤ p, q ≤ 20`, drawn from a seeded generator.
pub fn random_weights(d: &Dimer, seed: u64) -> Vec<BigRational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..d.num_arrows())
        .map(|_| {
            BigRational::new(
                BigInt::from(rng.gen_range(1..=20)),
                BigInt::from(rng.gen_range(1..=20)),
            )
        })
        .collect()
}

/// Arrow-indexed weights from an arrow-id map; every arrow needs a weight.
pub fn weights_from_map(
    d: &Dimer,
    map: &BTreeMap<u32, BigRational>,
) -> Result<Vec<BigRational>, PartitionError> {
    if let Some(&id) = map.keys().find(|&&id| d.arrow_index(id).is_none()) {
        return Err(PartitionError::UnknownArrow(id));
    }
    (0..d.num_arrows())
        .map(|a| {
            map.get(&d.arrow_id(a))
                .cloned()
                .ok_or(PartitionError::MissingWeight(d.arrow_id(a)))
        })
        .collect()
}

/// `Z_I = Σ_{∂μ=I} Π_{γ∈μ} w(γ)` for every `k`-subset `I`, zero off the positroid.
pub fn boundary_measurement(
    d: &Dimer,
    weights: &[BigRational],
) -> Result<PluckerVector, PartitionError> {
    if let Some(a) = (0..d.num_arrows()).find(|&a| !weights[a].is_positive()) {
        return Err(PartitionError::NonPositiveWeight(d.arrow_id(a)));
    }
    let (k, n) = type_of(d).unwrap_or((0, d.n()));
    let mut values: BTreeMap<Subset, BigRational> = k_subsets(k, n)
        .into_iter()
        .map(|s| (s, BigRational::zero()))
        .collect();
    for m in enumerate_matchings(d) {
        let product: BigRational = m.arrows().into_iter().map(|a| weights[a].clone()).product();
        *values
            .entry(boundary_value(d, &m))
            .or_insert_with(BigRational::zero) += product;
    }
    Ok(PluckerVector { k, n, values })
}

/// Outcome of checking the three-term Plücker relations.
#[derive(Clone, Debug, Serialize)]
pub struct PluckerReport {
    pub checked: usize,
    /// Each failing relation as `S|a,b,c,d`.
    pub failures: Vec<String>,
    pub passed: bool,
}

/// Checks `Z_{Sac} Z_{Sbd} = Z_{Sab} Z_{Scd} + Z_{Sad} Z_{Sbc}` for all `a<b<c<d` and
/// `(k−2)`-subsets `S` disjoint from them.
pub fn check_plucker_relations(v: &PluckerVector) -> Result<PluckerReport, PartitionError> {
    let keys: Vec<&Subset> = v.values.keys().collect();
    let expected = k_subsets(v.k, v.n);
    if keys.len() != expected.len() || keys.iter().zip(&expected).any(|(a, b)| *a != b) {
        return Err(PartitionError::BadKeys { k: v.k, n: v.n });
    }
    let mut checked = 0;
    let mut failures = Vec::new();
    if v.k >= 2 && v.n >= 4 {
        for quad in k_subsets(4, v.n) {
            let (a, b, c, d) = (quad[0], quad[1], quad[2], quad[3]);
            for s in k_subsets(v.k - 2, v.n) {
                if s.iter().any(|x| quad.contains(x)) {
                    continue;
                }
                let z = |p: u32, q: u32| {
                    let mut key = s.clone();
                    key.extend([p, q]);
                    v.get(&key)
                };
                checked += 1;
                if z(a, c) * z(b, d) != z(a, b) * z(c, d) + z(a, d) * z(b, c) {
                    failures.push(format!("{}|{a},{b},{c},{d}", format_subset(&s)));
                }
            }
        }
    }
    let passed = failures.is_empty();
    Ok(PluckerReport {
        checked,
        failures,
        passed,
    })
}
