use std::collections::{BTreeSet, HashSet, VecDeque};

use dimer_core::fixtures;
use dimer_core::{k_subsets, parse_subset, type_of, Dimer, DimerModel};
use matchings::*;
use proptest::prelude::*;

const N37: usize = 46;
const N24: usize = 7;
const M13: usize = 2;
/// The 3-subsets of 1..7 that are not boundary values on gr37.
const GR37_MISSING: [&str; 5] = ["234", "456", "457", "467", "567"];

fn dimer(m: DimerModel) -> Dimer {
    Dimer::new(m).unwrap()
}

fn s(text: &str) -> Vec<u32> {
    parse_subset(text).unwrap()
}

/// The thick arrows of the perfect matching drawn on gr37.
fn gr37_drawn_matching(d: &Dimer) -> Matching {
    Matching::from_ids(d, &[4, 8, 10, 16, 17]).unwrap()
}

#[test]
fn regression_counts() {
    assert_eq!(enumerate_matchings(&dimer(fixtures::triangle())).len(), 3);
    assert_eq!(enumerate_matchings(&dimer(fixtures::gr37())).len(), N37);
    let u24 = dimer(fixtures::uniform(2, 4).unwrap());
    assert_eq!(enumerate_matchings(&u24).len(), N24);
    assert_eq!(matchings_with_boundary(&u24, &s("13")).len(), M13);
}

#[test]
fn enumeration_is_complete_and_duplicate_free() {
    // Brute force over all arrow subsets of the right size on small models.
    for m in [
        fixtures::triangle(),
        fixtures::uniform(2, 4).unwrap(),
        fixtures::uniform(1, 3).unwrap(),
    ] {
        let d = dimer(m);
        let listed = enumerate_matchings(&d);
        let mut brute = Vec::new();
        for bits in 0u64..(1 << d.num_arrows()) {
            let m = Matching::from_indices(
                d.num_arrows(),
                (0..d.num_arrows()).filter(|&a| bits >> a & 1 == 1),
            );
            if m.check(&d).is_ok() {
                brute.push(m);
            }
        }
        let as_set: BTreeSet<_> = listed.iter().cloned().collect();
        assert_eq!(as_set.len(), listed.len());
        assert_eq!(as_set, brute.into_iter().collect());
    }
}

#[test]
fn gr37_drawn_matching_has_boundary_135() {
    let d = dimer(fixtures::gr37());
    let m = gr37_drawn_matching(&d);
    assert_eq!(boundary_value(&d, &m), s("135"));
    assert!(enumerate_matchings(&d).contains(&m));
    assert!(matchings_with_boundary(&d, &s("135")).contains(&m));
    assert!(!flip_neighbours(&d, &m).is_empty());
}

#[test]
fn triangle_boundary_values() {
    let d = dimer(fixtures::triangle());
    let m = Matching::from_ids(&d, &[1]).unwrap();
    assert_eq!(boundary_value(&d, &m), vec![2]);
    assert_eq!(
        positroid(&d),
        [vec![1], vec![2], vec![3]].into_iter().collect()
    );
    for v in 0..3 {
        assert!(
            flip(&d, &m, v).is_err(),
            "triangle has no internal vertices"
        );
    }
}

#[test]
fn positroids_of_fixtures() {
    let u24 = dimer(fixtures::uniform(2, 4).unwrap());
    assert_eq!(positroid(&u24), k_subsets(2, 4).into_iter().collect());
    let d = dimer(fixtures::gr37());
    let missing: BTreeSet<_> = GR37_MISSING.iter().map(|t| s(t)).collect();
    let want: BTreeSet<_> = k_subsets(3, 7)
        .into_iter()
        .filter(|j| !missing.contains(j))
        .collect();
    assert_eq!(positroid(&d), want);
    assert!(matchings_with_boundary(&d, &s("234")).is_empty());
    assert!(!matchings_with_boundary(&d, &s("123")).is_empty());
}

#[test]
fn necklace_test_rejects_wrong_sizes() {
    let d = dimer(fixtures::gr37());
    assert!(matches!(
        positroid_contains_necklace_test(&d, &s("12")),
        Err(MatchingError::WrongSize { .. })
    ));
    assert!(positroid_contains_necklace_test(&dimer(fixtures::triangle()), &[2]).unwrap());
    assert!(
        positroid_contains_necklace_test(&dimer(fixtures::uniform(2, 4).unwrap()), &s("13"))
            .unwrap()
    );
}

#[test]
fn clockwise_shifted_gale_order_would_disagree_on_gr37() {
    // Pins the direction of the shifted order: the increasing order starting at i
    // misclassifies some subsets, the decreasing one does not.
    let d = dimer(fixtures::gr37());
    let (necklace, _) = strands::necklaces(&d).unwrap();
    let p = positroid(&d);
    let increasing = |i: u32| -> Vec<u32> { (0..7).map(|t| (i - 1 + t) % 7 + 1).collect() };
    let disagreements = k_subsets(3, 7)
        .into_iter()
        .filter(|j| {
            let test = necklace
                .iter()
                .enumerate()
                .all(|(x, e)| gale_geq(j, e, &increasing(x as u32 + 1)));
            test != p.contains(j)
        })
        .count();
    assert!(disagreements > 0);
}

#[test]
fn extremes_of_m13_are_distinct_and_support_bijects() {
    let d = dimer(fixtures::uniform(2, 4).unwrap());
    let (min, max) = extreme_matchings(&d, &s("13")).unwrap();
    assert_ne!(min, max);
    // min <= max means height(max, min) >= 0.
    let h = height(&d, &max, &min).unwrap();
    assert!(h.is_nonnegative() && !h.is_zero());
    let g = support_subgraph(&d, &s("13")).unwrap();
    assert_eq!(g.matchings(&d).len(), M13);
}

#[test]
fn unique_matching_gives_equal_extremes_and_empty_support() {
    let d = dimer(fixtures::gr37());
    let (min, max) = extreme_matchings(&d, &s("123")).unwrap();
    assert_eq!(min, max);
    let g = support_subgraph(&d, &s("123")).unwrap();
    assert!(g.support.is_empty() && g.edges.is_empty() && g.nodes.is_empty());
    assert!(matches!(
        extreme_matchings(&d, &s("234")),
        Err(MatchingError::NotInPositroid(_))
    ));
    assert!(matches!(
        support_subgraph(&d, &s("456")),
        Err(MatchingError::NotInPositroid(_))
    ));
}

#[test]
fn height_requires_equal_boundaries() {
    let d = dimer(fixtures::gr37());
    let all = enumerate_matchings(&d);
    let a = &all[0];
    let b = all
        .iter()
        .find(|m| boundary_value(&d, m) != boundary_value(&d, a))
        .unwrap();
    assert!(matches!(
        height(&d, a, b),
        Err(MatchingError::BoundaryMismatch(..))
    ));
}

fn consistent_fixture() -> impl Strategy<Value = DimerModel> {
    prop_oneof![
        Just(fixtures::triangle()),
        Just(fixtures::gr37()),
        (1usize..4, 2usize..7).prop_filter_map("1 <= k < n, small", |(k, n)| {
            if k < n && k * (n - k) <= 9 {
                fixtures::uniform(k, n).ok()
            } else {
                None
            }
        }),
    ]
}

/// Matchings with fixed boundary value, grouped.
fn classes(d: &Dimer) -> Vec<(Vec<u32>, Vec<Matching>)> {
    positroid(d)
        .into_iter()
        .map(|i| (i.clone(), matchings_with_boundary(d, &i)))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn boundary_values_have_k_elements(m in consistent_fixture()) {
        let d = dimer(m);
        let (k, _) = type_of(&d).unwrap();
        for mu in enumerate_matchings(&d) {
            prop_assert_eq!(boundary_value(&d, &mu).len(), k);
        }
    }

    #[test]
    fn necklace_test_agrees_with_enumeration(m in consistent_fixture()) {
        let d = dimer(m);
        let (k, n) = type_of(&d).unwrap();
        let p = positroid(&d);
        for j in k_subsets(k, n) {
            prop_assert_eq!(positroid_contains_necklace_test(&d, &j).unwrap(), p.contains(&j), "{:?}", j);
        }
    }

    #[test]
    fn flips_are_involutive_unit_height_steps(m in consistent_fixture()) {
        let d = dimer(m);
        for mu in enumerate_matchings(&d) {
            prop_assert!(height(&d, &mu, &mu).unwrap().is_zero());
            for (j, nu) in flip_neighbours(&d, &mu) {
                prop_assert!(nu.check(&d).is_ok());
                prop_assert_eq!(boundary_value(&d, &nu), boundary_value(&d, &mu));
                prop_assert_eq!(flip(&d, &nu, j).unwrap(), Some(mu.clone()));
                let h = height(&d, &mu, &nu).unwrap();
                prop_assert_eq!(h.support(), vec![j]);
                prop_assert_eq!(h.values[j].abs(), 1);
            }
        }
    }

    #[test]
    fn extremes_bound_everything_and_flip_graph_is_connected(m in consistent_fixture()) {
        let d = dimer(m);
        for (i, class) in classes(&d) {
            let (min, max) = extreme_matchings(&d, &i).unwrap();
            for mu in &class {
                prop_assert!(height(&d, mu, &min).unwrap().is_nonnegative());
                prop_assert!(height(&d, &max, mu).unwrap().is_nonnegative());
            }
            // Breadth-first search from the minimum reaches every matching with this boundary value.
            let mut seen: HashSet<Matching> = HashSet::from([min.clone()]);
            let mut queue = VecDeque::from([min.clone()]);
            while let Some(mu) = queue.pop_front() {
                for (_, nu) in flip_neighbours(&d, &mu) {
                    if seen.insert(nu.clone()) {
                        queue.push_back(nu);
                    }
                }
            }
            prop_assert_eq!(seen.len(), class.len());
        }
    }

    #[test]
    fn matchings_agree_off_the_height_support(m in consistent_fixture()) {
        let d = dimer(m);
        for (_, class) in classes(&d) {
            for a in &class {
                for b in &class {
                    let h = height(&d, a, b).unwrap();
                    for arrow in 0..d.num_arrows() {
                        let touches = h.values[d.tail(arrow)] != 0 || h.values[d.head(arrow)] != 0;
                        if !touches {
                            prop_assert_eq!(a.contains(arrow), b.contains(arrow));
                        }
                    }
                    // Each face through the support has its matched arrow incident with the support.
                    for f in 0..d.num_faces() {
                        if d.face_vertices(f).iter().any(|&v| h.values[v] != 0) {
                            let x = a.arrow_in(&d, f);
                            prop_assert!(h.values[d.tail(x)] != 0 || h.values[d.head(x)] != 0);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn support_subgraph_bijects_by_intersection(m in consistent_fixture()) {
        let d = dimer(m);
        for (i, class) in classes(&d) {
            let g = support_subgraph(&d, &i).unwrap();
            let sub: BTreeSet<Vec<usize>> = g.matchings(&d).into_iter().collect();
            let restricted: BTreeSet<Vec<usize>> = class.iter().map(|mu| g.restrict(mu)).collect();
            prop_assert_eq!(restricted.len(), class.len());
            prop_assert_eq!(restricted, sub);
        }
    }
}
