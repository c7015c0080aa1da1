use dimer_core::fixtures::{self, UNIFORM_SHAPES};
use dimer_core::{
    bipartite_dual, build_uniform, from_json, opposite, standardise, to_json, type_of, validate,
    Color, Dimer, DimerError, StructuralError,
};
use proptest::prelude::*;

fn dimer(model: dimer_core::DimerModel) -> Dimer {
    Dimer::new(model).expect("fixture validates")
}

#[test]
fn triangle_validates_with_n_3() {
    let r = validate(&fixtures::triangle()).unwrap();
    assert!(r.passed, "{}", r.summary());
    assert_eq!(r.n, 3);
}

#[test]
fn gr37_validates_with_n_7() {
    let m = fixtures::gr37();
    assert_eq!(
        (m.vertices.len(), m.arrows.len(), m.faces.len()),
        (10, 18, 9)
    );
    let r = validate(&m).unwrap();
    assert!(r.passed, "{}", r.summary());
    assert_eq!(r.n, 7);
}

#[test]
fn inconsistent_fixture_is_a_valid_dimer_model() {
    let r = validate(&fixtures::inconsistent()).unwrap();
    assert!(r.passed, "{}", r.summary());
    assert_eq!(r.n, 3);
}

#[test]
fn dual_counts() {
    let gr = dimer(fixtures::gr37());
    let dual = bipartite_dual(&gr);
    assert_eq!(dual.count_nodes(Color::White), 4);
    assert_eq!(dual.count_nodes(Color::Black), 5);
    assert_eq!(dual.half_edges.len(), 7);
    assert_eq!(dual.edges.len(), 11);
    let tri = bipartite_dual(&dimer(fixtures::triangle()));
    assert_eq!(
        (
            tri.count_nodes(Color::White),
            tri.count_nodes(Color::Black),
            tri.half_edges.len()
        ),
        (1, 0, 3)
    );
    let op = bipartite_dual(&dimer(opposite(&fixtures::gr37())));
    assert_eq!(
        (op.count_nodes(Color::White), op.count_nodes(Color::Black)),
        (5, 4)
    );
}

#[test]
fn dual_edges_join_black_to_white_and_keep_labels() {
    let gr = dimer(fixtures::gr37());
    let dual = bipartite_dual(&gr);
    for e in &dual.edges {
        let b = gr.face_index(e.black).unwrap();
        let w = gr.face_index(e.white).unwrap();
        assert_eq!((gr.color(b), gr.color(w)), (Color::Black, Color::White));
    }
    for h in &dual.half_edges {
        let a = gr.arrow_index(h.arrow).unwrap();
        assert_eq!(gr.label(a), Some(h.label));
    }
}

#[test]
fn types_of_fixtures() {
    assert_eq!(type_of(&dimer(fixtures::gr37())).unwrap(), (3, 7));
    assert_eq!(type_of(&dimer(fixtures::triangle())).unwrap(), (1, 3));
    assert_eq!(
        type_of(&dimer(opposite(&fixtures::gr37()))).unwrap(),
        (4, 7)
    );
    assert_eq!(type_of(&dimer(fixtures::inconsistent())).unwrap(), (1, 3));
}

#[test]
fn opposite_is_an_involution_with_identical_ids() {
    let m = fixtures::gr37();
    assert_eq!(opposite(&opposite(&m)), m);
}

#[test]
fn opposite_triangle_is_black_anticlockwise() {
    let op = opposite(&fixtures::triangle());
    assert_eq!(op.faces[0].color, Color::Black);
    assert_eq!(op.faces[0].boundary_cycle, vec![2, 1, 0]);
    assert_eq!((op.arrows[0].tail, op.arrows[0].head), (1, 0));
    assert!(validate(&op).unwrap().passed);
}

#[test]
fn standardise_adds_one_digon_per_offending_arrow() {
    let gr = dimer(fixtures::gr37());
    let offending = gr
        .boundary_arrows()
        .iter()
        .filter(|&&a| !gr.is_clockwise(a))
        .count();
    assert_eq!(offending, 4);
    let st = standardise(&gr, Color::White);
    assert_eq!(st.vertices.len(), gr.num_vertices());
    assert_eq!(st.arrows.len(), gr.num_arrows() + offending);
    assert_eq!(st.faces.len(), gr.num_faces() + offending);
    for (old, new) in gr.model().vertices.iter().zip(&st.vertices) {
        assert_eq!(old, new);
    }
    for (old, new) in gr.model().arrows.iter().zip(&st.arrows) {
        assert_eq!((old.id, old.tail, old.head), (new.id, new.tail, new.head));
    }
    let sd = dimer(st);
    assert!(sd.is_standardised(Color::White));
    assert_eq!(type_of(&sd).unwrap(), (3, 7));
    // New ids follow label order.
    let new_labels: Vec<u32> = sd.model().arrows[18..]
        .iter()
        .map(|a| a.boundary_label.unwrap())
        .collect();
    assert_eq!(new_labels, vec![1, 3, 5, 7]);
}

#[test]
fn standardise_leaves_standardised_models_unchanged_and_is_idempotent() {
    let tri = dimer(fixtures::triangle());
    assert_eq!(standardise(&tri, Color::White), fixtures::triangle());
    for color in [Color::White, Color::Black] {
        let once = dimer(standardise(&dimer(fixtures::gr37()), color));
        let twice = standardise(&once, color);
        assert_eq!(&twice, once.model());
    }
}

#[test]
fn uniform_models_validate_with_expected_sizes() {
    for (k, n) in UNIFORM_SHAPES
        .into_iter()
        .chain([(3, 7), (1, 2), (4, 6), (1, 5), (4, 5)])
    {
        let m = build_uniform(k, n).unwrap();
        let r = validate(&m).unwrap();
        assert!(r.passed, "uniform({k},{n}): {}", r.summary());
        assert_eq!(m.vertices.len(), k * (n - k) + 1);
        assert_eq!(type_of(&dimer(m)).unwrap(), (k, n));
    }
}

#[test]
fn uniform_rejects_out_of_range_k() {
    assert!(matches!(build_uniform(0, 4), Err(DimerError::Argument(_))));
    assert!(matches!(build_uniform(4, 4), Err(DimerError::Argument(_))));
}

#[test]
fn json_round_trip_is_identity() {
    for (_, m) in fixtures::bundled() {
        assert_eq!(from_json(&to_json(&m)).unwrap(), m);
    }
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("gr37.json");
    dimer_core::save(&fixtures::gr37(), &path).unwrap();
    assert_eq!(dimer_core::load(&path).unwrap(), fixtures::gr37());
}

#[test]
fn boundary_labels_only_on_boundary_arrows_in_json() {
    let text = to_json(&fixtures::triangle());
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    for a in value["arrows"].as_array().unwrap() {
        assert_eq!(
            a.get("boundary_label").is_some(),
            a["is_boundary"].as_bool().unwrap()
        );
    }
    let gr: serde_json::Value = serde_json::from_str(&to_json(&fixtures::gr37())).unwrap();
    let internal = gr["arrows"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|a| a.get("boundary_label").is_none())
        .count();
    assert_eq!(internal, 11);
}

#[test]
fn unknown_vertex_is_a_structural_error() {
    let mut m = fixtures::triangle();
    m.arrows[0].head = 42;
    let err = from_json(&to_json(&m)).unwrap_err();
    assert!(matches!(
        err,
        DimerError::Structural(StructuralError::UnknownVertex {
            arrow: 0,
            vertex: 42
        })
    ));
}

#[test]
fn open_face_cycle_is_a_structural_error() {
    let mut m = fixtures::triangle();
    m.faces[0].boundary_cycle = vec![0, 2, 1];
    let err = from_json(&to_json(&m)).unwrap_err();
    assert!(matches!(
        err,
        DimerError::Structural(StructuralError::OpenCycle { .. })
    ));
}

#[test]
fn malformed_json_reports_location() {
    match from_json("{\n  \"vertices\": [,]\n}") {
        Err(DimerError::Parse { line, .. }) => assert_eq!(line, 2),
        other => panic!("expected parse error, got {other:?}"),
    }
}

#[test]
fn axiom_failures_are_reported_with_offenders() {
    // Recolouring a face breaks face multiplicity and the clockwise boundary order.
    let mut m = fixtures::gr37();
    m.faces[0].color = Color::Black;
    let r = validate(&m).unwrap();
    assert!(!r.passed);
    assert!(!r.check("face_multiplicity").unwrap().passed);
    // Swapping two labels breaks cyclic order only.
    let mut m = fixtures::gr37();
    m.arrows[0].boundary_label = Some(5);
    m.arrows[6].boundary_label = Some(4);
    let r = validate(&m).unwrap();
    assert!(!r.check("boundary_cycle").unwrap().passed);
    assert!(r.check("incidence_graph").unwrap().passed);
    // A loop.
    let mut m = fixtures::triangle();
    m.arrows.push(dimer_core::Arrow {
        id: 9,
        tail: 0,
        head: 0,
        is_boundary: false,
        boundary_label: None,
    });
    let r = validate(&m).unwrap();
    assert_eq!(r.check("no_loops").unwrap().offending, vec![9]);
    assert!(!r.check("euler_characteristic").unwrap().passed);
}

#[test]
fn dimer_new_rejects_invalid_models() {
    let mut m = fixtures::triangle();
    m.vertices[0].is_boundary = false;
    assert!(matches!(Dimer::new(m), Err(DimerError::Invalid(_))));
}

fn any_fixture() -> impl Strategy<Value = dimer_core::DimerModel> {
    prop_oneof![
        Just(fixtures::triangle()),
        Just(fixtures::gr37()),
        Just(fixtures::inconsistent()),
        (1usize..6, 2usize..8).prop_filter_map("1 <= k < n", |(k, n)| build_uniform(k, n).ok()),
    ]
}

proptest! {
    #[test]
    fn euler_characteristic_is_one(m in any_fixture()) {
        prop_assert_eq!(m.vertices.len() as i64 - m.arrows.len() as i64 + m.faces.len() as i64, 1);
    }

    #[test]
    fn opposite_type_is_complementary(m in any_fixture()) {
        let (k, n) = type_of(&dimer(m.clone())).unwrap();
        prop_assert_eq!(type_of(&dimer(opposite(&m))).unwrap(), (n - k, n));
    }

    #[test]
    fn standardise_preserves_type_and_validity(m in any_fixture(), white in any::<bool>()) {
        let color = if white { Color::White } else { Color::Black };
        let d = dimer(m);
        let s = dimer(standardise(&d, color));
        prop_assert!(s.is_standardised(color));
        prop_assert_eq!(type_of(&s).unwrap(), type_of(&d).unwrap());
        prop_assert_eq!(&standardise(&s, color), s.model());
    }

    #[test]
    fn uniform_vertex_count(k in 1usize..6, extra in 1usize..6) {
        let n = k + extra;
        prop_assert_eq!(build_uniform(k, n).unwrap().vertices.len(), k * (n - k) + 1);
    }
}
