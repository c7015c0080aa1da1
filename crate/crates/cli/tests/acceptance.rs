//! Acceptance criteria, each checked exactly and reported as one PASS/FAIL line.

use std::collections::BTreeMap;

use dimer_cli::checks::{self, Check};
use dimer_core::fixtures::{self, UNIFORM_SHAPES};
use dimer_core::{format_subset, parse_subset, type_of, Dimer};
use matchings::{boundary_value, Matching};
use strands::{source_labels, strand_permutation, target_labels};

fn load(name: &str) -> Dimer {
    Dimer::new(fixtures::by_name(name).expect("bundled fixture")).expect("valid fixture")
}

/// triangle, gr37 and the bundled uniform shapes.
fn consistent_fixtures() -> Vec<(String, Dimer)> {
    let mut out = vec![
        ("triangle".to_string(), load("triangle")),
        ("gr37".to_string(), load("gr37")),
    ];
    for (k, n) in UNIFORM_SHAPES {
        let name = format!("uniform-{k}-{n}");
        out.push((name.clone(), load(&name)));
    }
    out
}

/// Runs `check` on each named fixture; returns whether all passed and the failing names.
fn on_all(names: &[&str], check: fn(&Dimer) -> Check) -> (bool, String) {
    let failed: Vec<&str> = names
        .iter()
        .copied()
        .filter(|n| !check(&load(n)).passed())
        .collect();
    (
        failed.is_empty(),
        if failed.is_empty() {
            String::new()
        } else {
            format!("failed on {}", failed.join(", "))
        },
    )
}

fn on_consistent(check: fn(&Dimer) -> Check) -> (bool, String) {
    let fx = consistent_fixtures();
    let names: Vec<&str> = fx.iter().map(|(n, _)| n.as_str()).collect();
    on_all(&names, check)
}

fn labels_by_name(d: &Dimer, labels: &[Vec<u32>]) -> BTreeMap<String, String> {
    (0..d.num_vertices())
        .map(|v| (d.vertex_name(v), format_subset(&labels[v])))
        .collect()
}

fn expected(pairs: &[(&str, &str)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .map(|(n, s)| (n.to_string(), format_subset(&parse_subset(s).unwrap())))
        .collect()
}

fn criterion_1() -> (bool, String) {
    let d = load("gr37");
    let m = Matching::from_ids(&d, &[4, 8, 10, 16, 17]).unwrap();
    let b = boundary_value(&d, &m);
    (
        b == vec![1, 3, 5],
        format!("boundary {}", format_subset(&b)),
    )
}

fn criterion_3() -> (bool, String) {
    let d = load("gr37");
    let ty = type_of(&d).unwrap();
    let perm = strand_permutation(&d).unwrap();
    (
        ty == (3, 7) && perm == vec![5, 4, 1, 6, 7, 2, 3],
        format!("type {ty:?}, permutation {perm:?}"),
    )
}

fn criterion_4() -> (bool, String) {
    let d = load("gr37");
    let source = expected(&[
        ("124", "134"),
        ("234", "123"),
        ("345", "127"),
        ("456", "167"),
        ("256", "367"),
        ("267", "356"),
        ("127", "345"),
        ("247", "135"),
        ("245", "137"),
        ("257", "357"),
    ]);
    let target = expected(&[
        ("124", "156"),
        ("234", "145"),
        ("345", "345"),
        ("456", "235"),
        ("256", "123"),
        ("267", "127"),
        ("127", "167"),
        ("247", "157"),
        ("245", "135"),
        ("257", "137"),
    ]);
    let s_ok = labels_by_name(&d, &source_labels(&d).unwrap()) == source;
    let t_ok = labels_by_name(&d, &target_labels(&d).unwrap()) == target;
    (
        s_ok && t_ok,
        format!("source {}, target {}", ok(s_ok), ok(t_ok)),
    )
}

fn ok(b: bool) -> &'static str {
    if b {
        "match"
    } else {
        "differ"
    }
}

fn criterion_7() -> (bool, String) {
    let (consistent, msg) = on_consistent(checks::eta_unimodular);
    let bad = checks::eta_unimodular(&load("inconsistent"));
    let rejected = !bad.passed();
    let factors = bad.witness["invariant_factors"]
        .as_array()
        .map_or(0, Vec::len);
    let size = &bad.witness["size"];
    (
        consistent && rejected,
        format!(
            "{msg} inconsistent fixture: {}x{} matrix with {factors} invariant factors",
            size[0], size[1]
        ),
    )
}

fn criterion_8() -> (bool, String) {
    let (consistent, msg) = on_consistent(checks::cluster_ensemble);
    let rejected = !checks::cluster_ensemble(&load("inconsistent")).passed();
    (
        consistent && rejected,
        format!("{msg} inconsistent fixture rejected: {rejected}"),
    )
}

fn criterion_12() -> (bool, String) {
    let names = ["gr37", "uniform-2-4"];
    let (a, m1) = on_all(&names, checks::ms_formulas_agree);
    let (b, m2) = on_all(&names, checks::ms_duality);
    (a && b, format!("{m1} {m2}"))
}

fn criterion_14(seed: u64) -> (bool, String) {
    let names = ["uniform-2-4", "uniform-2-5", "uniform-3-6"];
    let mut relations = 0;
    let mut failed = Vec::new();
    for name in names {
        let c = checks::plucker_draws(&load(name), seed);
        relations += c.witness["draws"]
            .as_array()
            .unwrap()
            .iter()
            .map(|d| d["relations_checked"].as_u64().unwrap())
            .sum::<u64>();
        if !c.passed() {
            failed.push(name);
        }
    }
    (
        failed.is_empty(),
        format!(
            "{relations} relations over {} draws; failed {:?}",
            3 * checks::PLUCKER_DRAWS,
            failed
        ),
    )
}

/// Number, title, and a check returning pass/fail with a detail line.
type Criterion = (u32, &'static str, Box<dyn Fn() -> (bool, String)>);

#[test]
fn acceptance() {
    let criteria: Vec<Criterion> = vec![
        (
            1,
            "boundary value of the drawn gr37 matching",
            Box::new(criterion_1),
        ),
        (
            2,
            "every matching has k boundary values",
            Box::new(|| on_consistent(checks::boundary_sizes)),
        ),
        (3, "gr37 type and strand permutation", Box::new(criterion_3)),
        (4, "gr37 source and target labels", Box::new(criterion_4)),
        (
            5,
            "projective matchings agree three ways",
            Box::new(|| on_consistent(checks::ms_matchings_agree)),
        ),
        (
            6,
            "projective matching boundaries are labels",
            Box::new(|| on_consistent(checks::ms_boundaries)),
        ),
        (
            7,
            "eta unimodular exactly on consistent fixtures",
            Box::new(criterion_7),
        ),
        (
            8,
            "cluster ensemble exact exactly on consistent fixtures",
            Box::new(criterion_8),
        ),
        (
            9,
            "module classes agree three ways",
            Box::new(|| on_all(&["gr37", "uniform-2-4"], checks::kclass_three_way)),
        ),
        (
            10,
            "every graded piece exact",
            Box::new(|| {
                on_all(
                    &["triangle", "uniform-2-4", "gr37"],
                    checks::resolution_exact,
                )
            }),
        ),
        (
            11,
            "rotation identity on gr37",
            Box::new(|| on_all(&["gr37"], checks::rotation_identity)),
        ),
        (
            12,
            "partition function rearrangement and duality",
            Box::new(criterion_12),
        ),
        (
            13,
            "flip extremes, connectivity and support bijection",
            Box::new(|| on_all(&["gr37", "uniform-2-4"], checks::flip_structure)),
        ),
        (
            14,
            "Plücker relations and positroid support",
            Box::new(|| criterion_14(0)),
        ),
    ];
    let mut failures = Vec::new();
    for (n, title, run) in &criteria {
        let (passed, detail) = run();
        let status = if passed { "PASS" } else { "FAIL" };
        println!("criterion {n:>2}: {status}  {title}  {}", detail.trim());
        if !passed {
            failures.push(*n);
        }
    }
    println!(
        "criterion 15: NOTE  equality with geometric twisted Plücker coordinates needs external twist formulas; \
         criteria 12 to 14 stand in for it"
    );
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
