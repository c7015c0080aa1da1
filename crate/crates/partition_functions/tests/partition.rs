use std::collections::BTreeMap;

use dimer_core::{
    complement, fixtures, k_subsets, opposite, standardise, type_of, Color, Dimer, DimerModel,
};
use lattice_maps::{eta, lattice_point_of_matching};
use matchings::{matchings_with_boundary, positroid, Matching};
use num_bigint::BigInt;
use num_rational::BigRational;
use partition_functions::*;
use proptest::prelude::*;

/// Seed used for the recorded random-weight regression.
const SEED: u64 = 7;

fn dimer(m: DimerModel) -> Dimer {
    Dimer::new(m).unwrap()
}

fn white(m: DimerModel) -> Dimer {
    dimer(standardise(&dimer(m), Color::White))
}

fn q(p: i64, r: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(r))
}

#[test]
fn uniform_24_subset_13_has_two_terms() {
    let d = white(fixtures::uniform(2, 4).unwrap());
    let p = ms_formula_white(&d, &[1, 3]).unwrap();
    assert_eq!(p.num_terms(), 2);
    assert_eq!(p.to_string(), "x^{0:-1,1:1,2:1} + x^{0:-1,3:1,4:1}");
}

#[test]
fn uniform_24_specialization_regression() {
    // MS°({1,3}) evaluated at x_j = Z_{I_j} for the seeded random weights.
    let d = white(fixtures::uniform(2, 4).unwrap());
    let p = ms_formula_white(&d, &[1, 3]).unwrap();
    let z = boundary_measurement(&d, &random_weights(&d, SEED)).unwrap();
    let labels = strands::source_labels(&d).unwrap();
    let values: Vec<BigRational> = labels.iter().map(|s| z.get(s)).collect();
    assert_eq!(specialize(&p, &values).unwrap(), q(52, 85));
}

#[test]
fn triangle_single_monomials() {
    let d = dimer(fixtures::triangle());
    let p = ms_formula_white(&d, &[2]).unwrap();
    assert_eq!(p.num_terms(), 1);
    assert_eq!(p, ms_formula_white_v2(&d, &[2]).unwrap());
    let op = dimer(opposite(d.model()));
    assert_eq!(p, ms_formula_black(&op, &[1, 3]).unwrap());
}

#[test]
fn subsets_off_the_positroid_give_zero() {
    let d = white(fixtures::gr37());
    assert!(ms_formula_white(&d, &[2, 3, 4]).unwrap().is_zero());
    assert!(matches!(
        musp_twist_expression(&d, &[2, 3, 4]),
        Err(PartitionError::NotInPositroid(_))
    ));
}

#[test]
fn standardisation_and_size_are_enforced() {
    let gr37 = dimer(fixtures::gr37());
    assert!(matches!(
        ms_formula_white(&gr37, &[1, 3, 5]),
        Err(PartitionError::NotStandardised(Color::White))
    ));
    let d = white(fixtures::gr37());
    assert!(matches!(
        ms_formula_black(&d, &[1, 3, 5]),
        Err(PartitionError::NotStandardised(Color::Black))
    ));
    assert!(matches!(
        ms_formula_white(&d, &[1, 3]),
        Err(PartitionError::WrongSize { .. })
    ));
}

#[test]
fn gr37_twist_expression_contains_the_drawn_matching() {
    let d = dimer(fixtures::gr37());
    let m = Matching::from_ids(&d, &[4, 8, 10, 16, 17]).unwrap();
    let k = eta(&d, &lattice_point_of_matching(&m)).unwrap();
    let neg: Vec<i64> = k.coefficients.iter().map(|c| -c).collect();
    let p = musp_twist_expression(&d, &[1, 3, 5]).unwrap();
    assert!(p.terms().any(|(e, _)| e == &Exponent::from_dense(&neg)));
    assert_eq!(
        p.coefficient_sum(),
        BigInt::from(matchings_with_boundary(&d, &[1, 3, 5]).len())
    );
}

#[test]
fn gr37_unit_weight_measurement_counts_matchings() {
    let d = dimer(fixtures::gr37());
    let z = boundary_measurement(&d, &unit_weights(&d)).unwrap();
    let counts: BTreeMap<String, String> = z
        .values
        .iter()
        .map(|(k, v)| (dimer_core::format_subset(k), v.to_string()))
        .collect();
    let doubles = ["125", "136", "147", "237", "247", "347"];
    let triples = ["135", "137", "157", "257", "357"];
    let zeros = ["234", "456", "457", "467", "567"];
    for s in k_subsets(3, 7) {
        let key = s.iter().map(|x| x.to_string()).collect::<String>();
        let want = if doubles.contains(&key.as_str()) {
            "2"
        } else if triples.contains(&key.as_str()) {
            "3"
        } else if zeros.contains(&key.as_str()) {
            "0"
        } else {
            "1"
        };
        assert_eq!(counts[&dimer_core::format_subset(&s)], want, "{key}");
    }
}

#[test]
fn measurement_rejects_bad_weights() {
    let d = dimer(fixtures::triangle());
    let mut w = unit_weights(&d);
    w[1] = q(0, 1);
    assert!(matches!(
        boundary_measurement(&d, &w),
        Err(PartitionError::NonPositiveWeight(1))
    ));
    let map: BTreeMap<u32, BigRational> = [(0, q(1, 1)), (1, q(2, 1))].into_iter().collect();
    assert!(matches!(
        weights_from_map(&d, &map),
        Err(PartitionError::MissingWeight(2))
    ));
}

#[test]
fn perturbed_vectors_fail_and_k1_passes_vacuously() {
    let d = dimer(fixtures::uniform(2, 4).unwrap());
    let mut z = boundary_measurement(&d, &random_weights(&d, SEED)).unwrap();
    assert!(check_plucker_relations(&z).unwrap().passed);
    *z.values.get_mut(&vec![1, 3]).unwrap() += q(1, 1);
    let r = check_plucker_relations(&z).unwrap();
    assert!(!r.passed && r.failures.len() == 1);
    z.values.remove(&vec![1, 3]);
    assert!(matches!(
        check_plucker_relations(&z),
        Err(PartitionError::BadKeys { .. })
    ));
    let t = dimer(fixtures::triangle());
    let r = check_plucker_relations(&boundary_measurement(&t, &unit_weights(&t)).unwrap()).unwrap();
    assert!(r.passed && r.checked == 0);
}

#[test]
fn plucker_relations_hold_for_seeded_weights() {
    for (k, n) in [(2, 4), (2, 5), (3, 6)] {
        let d = dimer(fixtures::uniform(k, n).unwrap());
        for seed in 0..5 {
            let r = check_plucker_relations(
                &boundary_measurement(&d, &random_weights(&d, seed)).unwrap(),
            )
            .unwrap();
            assert!(
                r.passed && r.checked > 0,
                "uniform({k},{n}) seed {seed}: {:?}",
                r.failures
            );
        }
    }
}

fn consistent_fixture() -> impl Strategy<Value = DimerModel> {
    prop_oneof![
        Just(fixtures::triangle()),
        Just(fixtures::gr37()),
        (1usize..4, 2usize..7).prop_filter_map("1 <= k < n", |(k, n)| fixtures::uniform(k, n).ok()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn white_formulas_agree_and_dualise(m in consistent_fixture()) {
        let d = white(m);
        let op = dimer(opposite(d.model()));
        let (k, n) = type_of(&d).unwrap();
        for i in k_subsets(k, n) {
            let a = ms_formula_white(&d, &i).unwrap();
            prop_assert_eq!(&a, &ms_formula_white_v2(&d, &i).unwrap());
            prop_assert_eq!(&a, &ms_formula_black(&op, &complement(&i, n)).unwrap());
            for (e, _) in ms_formula_white_v2(&d, &i).unwrap().terms() {
                prop_assert_eq!(e.total(), k as i64 - 1);
            }
        }
    }

    #[test]
    fn twist_exponents_have_rank_minus_one(m in consistent_fixture()) {
        let d = dimer(m);
        for i in positroid(&d) {
            let p = musp_twist_expression(&d, &i).unwrap();
            prop_assert_eq!(p.coefficient_sum(), BigInt::from(matchings_with_boundary(&d, &i).len()));
            for (e, _) in p.terms() {
                prop_assert_eq!(e.total(), -1);
            }
        }
    }

    #[test]
    fn measurements_satisfy_plucker_relations(m in consistent_fixture(), seed in 0u64..1000) {
        let d = dimer(m);
        let z = boundary_measurement(&d, &random_weights(&d, seed)).unwrap();
        let p = positroid(&d);
        for (key, v) in &z.values {
            prop_assert_eq!(v == &BigRational::from_integer(BigInt::from(0)), !p.contains(key));
        }
        prop_assert!(check_plucker_relations(&z).unwrap().passed);
    }
}
