//! One function per subcommand, each returning a JSON result and a text rendering.

use std::collections::BTreeMap;
use std::path::Path;

use dimer_core::{
    build_uniform, fixtures, format_subset, opposite, parse_subset, save, standardise, to_json,
    type_of, validate, Color, Dimer, DimerModel,
};
use kclass_weights::{downstream_wedge, kclass_of_matching, muller_speyer_matchings};
use lattice_maps::{
    check_cluster_ensemble, eta, eta_matrix, lattice_basis, lattice_point_of_matching, KClass,
};
use matchings::{
    boundary_value, enumerate_matchings, extreme_matchings, matchings_with_boundary, positroid,
    Matching,
};
use num_traits::ToPrimitive;
use partition_functions::{
    boundary_measurement, check_plucker_relations, ms_formula_black, ms_formula_white,
    musp_twist_expression, LaurentPoly,
};
use resolution::{check_resolution, reachable_set, rotate_matching};
use serde_json::{json, Map, Value};
use strands::{
    check_postnikov, necklaces, source_labels, strand_permutation, strands, target_labels,
};

use crate::checks;
use crate::error::CliError;
use crate::input::{
    load_weights, parse_arrow, parse_matching, parse_vertex, resolve_dimer, resolve_model,
};

/// What a subcommand produced.
#[derive(Debug)]
pub enum Output {
    /// A report: printed inside the versioned JSON envelope, or as `text`.
    Report {
        result: Value,
        text: String,
        success: bool,
    },
    /// A model document, printed verbatim in either format.
    Model(String),
}

fn report(result: Value, text: impl Into<String>, success: bool) -> Output {
    Output::Report {
        result,
        text: text.into(),
        success,
    }
}

type Outcome = Result<Output, CliError>;

fn ids(d: &Dimer, m: &Matching) -> Vec<u32> {
    m.ids(d)
}

fn id_list(ids: &[u32]) -> String {
    ids.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn vertex_json(d: &Dimer, v: usize) -> Value {
    json!({ "id": d.vertex_id(v), "name": d.vertex_name(v) })
}

/// Nonzero coefficients keyed by vertex id.
fn class_json(d: &Dimer, k: &KClass) -> BTreeMap<u32, i64> {
    (0..d.num_vertices())
        .filter(|&v| k.coefficients[v] != 0)
        .map(|v| (d.vertex_id(v), k.coefficients[v]))
        .collect()
}

fn class_text(d: &Dimer, k: &KClass) -> String {
    let parts: Vec<String> = class_json(d, k)
        .iter()
        .map(|(id, c)| format!("{id}:{c}"))
        .collect();
    format!("{{{}}}", parts.join(","))
}

/// A vertex-basis polynomial with exponents keyed and sorted by vertex id.
fn poly_json(d: &Dimer, p: &LaurentPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(e, c)| {
            let exponent: BTreeMap<u32, i64> = e
                .entries()
                .iter()
                .map(|&(i, p)| (d.vertex_id(i), p))
                .collect();
            let coefficient = c
                .to_i64()
                .map_or_else(|| Value::from(c.to_string()), Value::from);
            json!({ "exponent": exponent, "coefficient": coefficient })
        })
        .collect();
    json!({ "basis": p.basis(), "text": poly_text(d, p), "terms": terms })
}

fn poly_text(d: &Dimer, p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let parts: Vec<String> = p
        .terms()
        .map(|(e, c)| {
            let exponent: BTreeMap<u32, i64> = e
                .entries()
                .iter()
                .map(|&(i, p)| (d.vertex_id(i), p))
                .collect();
            let body: Vec<String> = exponent.iter().map(|(id, p)| format!("{id}:{p}")).collect();
            let coefficient = if c == &1.into() {
                String::new()
            } else {
                format!("{c}*")
            };
            format!("{coefficient}x^{{{}}}", body.join(","))
        })
        .collect();
    parts.join(" + ").replace("+ -", "- ")
}

fn write_or_print(model: &DimerModel, out: Option<&Path>) -> Outcome {
    match out {
        Some(path) => {
            save(model, path)?;
            Ok(report(
                json!({ "written": path.display().to_string() }),
                format!("wrote {}", path.display()),
                true,
            ))
        }
        None => Ok(Output::Model(to_json(model))),
    }
}

pub fn cmd_validate(file: &str) -> Outcome {
    let model = resolve_model(file)?;
    let r = validate(&model).map_err(dimer_core::DimerError::from)?;
    let text = if r.passed {
        format!("valid dimer model with {} marked points", r.n)
    } else {
        format!("invalid: {}", r.summary())
    };
    Ok(report(
        serde_json::to_value(&r).expect("serialisable"),
        text,
        r.passed,
    ))
}

pub fn cmd_type(file: &str) -> Outcome {
    let d = resolve_dimer(file)?;
    let (k, n) = type_of(&d)?;
    Ok(report(
        json!({ "k": k, "n": n }),
        format!("({k}, {n})"),
        true,
    ))
}

pub fn cmd_build_uniform(k: usize, n: usize, out: &Path) -> Outcome {
    let model = build_uniform(k, n)?;
    save(&model, out)?;
    let counts = json!({
        "path": out.display().to_string(),
        "k": k,
        "n": n,
        "vertices": model.vertices.len(),
        "arrows": model.arrows.len(),
        "faces": model.faces.len(),
    });
    Ok(report(
        counts,
        format!("wrote uniform ({k}, {n}) model to {}", out.display()),
        true,
    ))
}

pub fn cmd_opposite(file: &str, out: Option<&Path>) -> Outcome {
    let d = resolve_dimer(file)?;
    write_or_print(&opposite(d.model()), out)
}

pub fn cmd_standardise(file: &str, color: Color, out: Option<&Path>) -> Outcome {
    let d = resolve_dimer(file)?;
    write_or_print(&standardise(&d, color), out)
}

pub fn cmd_strands(file: &str) -> Outcome {
    let d = resolve_dimer(file)?;
    let all = strands(&d)?;
    let perm = strand_permutation(&d)?;
    let mut text = Vec::new();
    let list: Vec<Value> = all
        .iter()
        .map(|s| {
            let arrows: Vec<u32> = s.arrows.iter().map(|&a| d.arrow_id(a)).collect();
            text.push(format!("{} -> {}: arrows {}", s.start_label, s.end_label, id_list(&arrows)));
            json!({ "start": s.start_label, "end": s.end_label, "crossings": s.crossing_sequence(&d) })
        })
        .collect();
    let permutation: BTreeMap<String, u32> = perm
        .iter()
        .enumerate()
        .map(|(i, &j)| ((i + 1).to_string(), j))
        .collect();
    Ok(report(
        json!({ "n": d.n(), "permutation": permutation, "strands": list }),
        text.join("\n"),
        true,
    ))
}

pub fn cmd_labels(file: &str, target: bool) -> Outcome {
    let d = resolve_dimer(file)?;
    let labels = if target {
        target_labels(&d)?
    } else {
        source_labels(&d)?
    };
    let rows: Vec<Value> = (0..d.num_vertices())
        .map(|v| json!({ "vertex": vertex_json(&d, v), "label": format_subset(&labels[v]) }))
        .collect();
    let text: Vec<String> = (0..d.num_vertices())
        .map(|v| format!("{}: {}", d.vertex_name(v), format_subset(&labels[v])))
        .collect();
    let kind = if target { "target" } else { "source" };
    Ok(report(
        json!({ "kind": kind, "labels": rows }),
        text.join("\n"),
        true,
    ))
}

pub fn cmd_check(file: &str) -> Outcome {
    let d = resolve_dimer(file)?;
    let r = check_postnikov(&d);
    let text = if r.passed {
        "consistent".to_string()
    } else {
        format!(
            "inconsistent: b1 {}, b2 {}, {} closed strands",
            if r.b1_passed { "holds" } else { "fails" },
            if r.b2_passed { "holds" } else { "fails" },
            r.closed_strands.len()
        )
    };
    Ok(report(
        serde_json::to_value(&r).expect("serialisable"),
        text,
        r.passed,
    ))
}

pub fn cmd_matchings(file: &str, boundary: Option<&str>) -> Outcome {
    let d = resolve_dimer(file)?;
    let all = match boundary {
        Some(text) => matchings_with_boundary(&d, &parse_subset(text)?),
        None => enumerate_matchings(&d),
    };
    let list: Vec<Value> = all
        .iter()
        .map(|m| json!({ "arrows": ids(&d, m), "boundary": format_subset(&boundary_value(&d, m)) }))
        .collect();
    let text: Vec<String> = all
        .iter()
        .map(|m| {
            format!(
                "{} -> {}",
                id_list(&ids(&d, m)),
                format_subset(&boundary_value(&d, m))
            )
        })
        .collect();
    Ok(report(
        json!({ "count": all.len(), "matchings": list }),
        text.join("\n"),
        true,
    ))
}

pub fn cmd_positroid(file: &str) -> Outcome {
    let d = resolve_dimer(file)?;
    let (k, n) = type_of(&d)?;
    let p = positroid(&d);
    let (source, target) = necklaces(&d)?;
    let subsets: Vec<String> = p.iter().map(|s| format_subset(s)).collect();
    let result = json!({
        "k": k,
        "n": n,
        "size": p.len(),
        "subsets": subsets,
        "source_necklace": source.iter().map(|s| format_subset(s)).collect::<Vec<_>>(),
        "target_necklace": target.iter().map(|s| format_subset(s)).collect::<Vec<_>>(),
    });
    Ok(report(
        result,
        format!("{} subsets: {}", p.len(), subsets.join(" ")),
        true,
    ))
}

pub fn cmd_extremes(file: &str, boundary: &str) -> Outcome {
    let d = resolve_dimer(file)?;
    let subset = parse_subset(boundary)?;
    let (min, max) = extreme_matchings(&d, &subset)?;
    let count = matchings_with_boundary(&d, &subset).len();
    let (lo, hi) = (ids(&d, &min), ids(&d, &max));
    let text = format!(
        "{count} matchings; min {}; max {}",
        id_list(&lo),
        id_list(&hi)
    );
    Ok(report(
        json!({ "boundary": format_subset(&subset), "count": count, "min": lo, "max": hi }),
        text,
        true,
    ))
}

pub fn cmd_lattice(file: &str, check_ensemble: bool) -> Outcome {
    let d = resolve_dimer(file)?;
    let em = eta_matrix(&d);
    let arrow_ids: Vec<u32> = (0..d.num_arrows()).map(|a| d.arrow_id(a)).collect();
    let mut result = json!({
        "arrow_ids": arrow_ids,
        "basis": lattice_basis(&d),
        "eta": em.matrix,
        "invariant_factors": em.invariant_factors,
        "unimodular": em.unimodular,
    });
    let mut text = format!(
        "lattice rank {}; eta invariant factors {:?}; {}",
        em.basis.len(),
        em.invariant_factors,
        if em.unimodular {
            "unimodular"
        } else {
            "not unimodular"
        }
    );
    let mut success = true;
    if check_ensemble {
        let r = check_cluster_ensemble(&d);
        success = r.passed;
        text.push_str(&format!(
            "\ncluster ensemble {}",
            if r.passed { "exact" } else { "not exact" }
        ));
        for w in &r.witnesses {
            text.push_str(&format!("\n  {w}"));
        }
        result["ensemble"] = serde_json::to_value(&r).expect("serialisable");
    }
    Ok(report(result, text, success))
}

pub fn cmd_ms_matchings(file: &str) -> Outcome {
    let d = resolve_dimer(file)?;
    let ms = muller_speyer_matchings(&d)?;
    let rows: Vec<Value> = (0..d.num_vertices())
        .map(|j| {
            json!({
                "vertex": vertex_json(&d, j),
                "arrows": ids(&d, &ms[j]),
                "boundary": format_subset(&boundary_value(&d, &ms[j])),
            })
        })
        .collect();
    let text: Vec<String> = (0..d.num_vertices())
        .map(|j| format!("{}: {}", d.vertex_name(j), id_list(&ids(&d, &ms[j]))))
        .collect();
    Ok(report(json!({ "matchings": rows }), text.join("\n"), true))
}

pub fn cmd_wedge(file: &str, arrow: u32) -> Outcome {
    let d = resolve_dimer(file)?;
    let w = downstream_wedge(&d, parse_arrow(&d, arrow)?)?;
    let tiles: Vec<Value> = w.tiles.iter().map(|&v| vertex_json(&d, v)).collect();
    let names: Vec<String> = w.tiles.iter().map(|&v| d.vertex_name(v)).collect();
    Ok(report(
        json!({ "arrow": arrow, "tiles": tiles }),
        format!("arrow {arrow}: {}", names.join(" ")),
        true,
    ))
}

pub fn cmd_kclass(file: &str, matching: &str) -> Outcome {
    let d = resolve_dimer(file)?;
    let m = parse_matching(&d, matching)?;
    let k = kclass_of_matching(&d, &m);
    let agrees = eta(&d, &lattice_point_of_matching(&m)).ok().as_ref() == Some(&k);
    let result = json!({
        "matching": ids(&d, &m),
        "boundary": format_subset(&boundary_value(&d, &m)),
        "class": class_json(&d, &k),
        "rank": k.rank(),
        "eta_agrees": agrees,
    });
    Ok(report(
        result,
        format!("[N] = {} (rank {})", class_text(&d, &k), k.rank()),
        agrees,
    ))
}

pub fn cmd_verify_msmatch(file: &str) -> Outcome {
    let d = resolve_dimer(file)?;
    let c = checks::ms_matchings_agree(&d);
    let ok = c.passed();
    let text = if ok {
        "wedges, eta inverse and oracle agree"
    } else {
        "disagreement found"
    };
    Ok(report(
        serde_json::to_value(&c).expect("serialisable"),
        text,
        ok,
    ))
}

pub fn cmd_ms(file: &str, subset: &str, black: bool) -> Outcome {
    let d = resolve_dimer(file)?;
    let color = if black { Color::Black } else { Color::White };
    let restandardised = !d.is_standardised(color);
    let s = if restandardised {
        Dimer::new(standardise(&d, color))?
    } else {
        d
    };
    let i = parse_subset(subset)?;
    let p = if black {
        ms_formula_black(&s, &i)?
    } else {
        ms_formula_white(&s, &i)?
    };
    let result = json!({
        "subset": format_subset(&i),
        "color": color,
        "standardised_copy": restandardised,
        "polynomial": poly_json(&s, &p),
    });
    Ok(report(result, poly_text(&s, &p), true))
}

pub fn cmd_twist_expr(file: &str, subset: &str) -> Outcome {
    let d = resolve_dimer(file)?;
    let i = parse_subset(subset)?;
    let p = musp_twist_expression(&d, &i)?;
    Ok(report(
        json!({ "subset": format_subset(&i), "polynomial": poly_json(&d, &p) }),
        poly_text(&d, &p),
        true,
    ))
}

pub fn cmd_measure(file: &str, weights: &str, check_plucker: bool, seed: u64) -> Outcome {
    let d = resolve_dimer(file)?;
    let z = boundary_measurement(&d, &load_weights(&d, weights, seed)?)?;
    let mut text: Vec<String> = z
        .values
        .iter()
        .map(|(s, v)| format!("{}: {v}", format_subset(s)))
        .collect();
    let mut result = json!({ "weights": weights, "measurement": z });
    if weights == "random" {
        result["seed"] = seed.into();
    }
    let mut success = true;
    if check_plucker {
        let r = check_plucker_relations(&z)?;
        success = r.passed;
        text.push(format!(
            "Plücker relations: {} checked, {} failed",
            r.checked,
            r.failures.len()
        ));
        result["plucker"] = serde_json::to_value(&r).expect("serialisable");
    }
    Ok(report(result, text.join("\n"), success))
}

pub fn cmd_resolution(file: &str, matching: &str, d_max: Option<u32>) -> Outcome {
    let d = resolve_dimer(file)?;
    let m = parse_matching(&d, matching)?;
    let r = check_resolution(&d, &m, d_max);
    let mut text = format!(
        "{} pieces up to degree {} (saturation {}): {} not exact; Euler data {}",
        r.pieces_checked,
        r.d_max,
        r.saturation,
        r.failures.len(),
        if r.euler_matches_kclass {
            "recovers the class"
        } else {
            "does not recover the class"
        }
    );
    if let Some(k) = &r.recovered_class {
        text.push_str(&format!("\n[N] = {}", class_text(&d, k)));
    }
    let mut result = serde_json::to_value(&r).expect("serialisable");
    result["matching"] = json!(ids(&d, &m));
    if let Some(k) = &r.recovered_class {
        result["recovered_class"] = json!(class_json(&d, k));
    }
    Ok(report(result, text, r.passed))
}

pub fn cmd_rotate(file: &str, matching: &str, vertex: &str, degree: u32) -> Outcome {
    let d = resolve_dimer(file)?;
    let m = parse_matching(&d, matching)?;
    let i = parse_vertex(&d, vertex)?;
    let nu = rotate_matching(&d, &m, i, degree)?;
    let before = reachable_set(&d, &m, i, degree).members;
    let after = reachable_set(&d, &nu, i, degree - 1).members;
    let holds = before == after;
    let names = |vs: &[usize]| vs.iter().map(|&v| d.vertex_name(v)).collect::<Vec<_>>();
    let result = json!({
        "matching": ids(&d, &m),
        "vertex": vertex_json(&d, i),
        "degree": degree,
        "rotated": ids(&d, &nu),
        "reachable_before": names(&before),
        "reachable_after": names(&after),
        "identity_holds": holds,
    });
    let text = format!(
        "rotated matching {}; S identity {}",
        id_list(&ids(&d, &nu)),
        if holds { "holds" } else { "fails" }
    );
    Ok(report(result, text, holds))
}

pub fn cmd_verify(file: &str, seed: u64, timing: bool) -> Outcome {
    let model = resolve_model(file)?;
    let r = crate::verify::verify(&model, seed, timing);
    let mut lines: Vec<String> = r
        .checks
        .iter()
        .map(|c| {
            format!(
                "{:<26} {}",
                c.name,
                serde_json::to_value(c.status)
                    .expect("serialisable")
                    .as_str()
                    .unwrap_or("")
            )
        })
        .collect();
    lines.push(format!(
        "overall: {}",
        if r.passed { "pass" } else { "fail" }
    ));
    Ok(report(
        serde_json::to_value(&r).expect("serialisable"),
        lines.join("\n"),
        r.passed,
    ))
}

pub fn cmd_fixtures(outdir: &Path) -> Outcome {
    std::fs::create_dir_all(outdir).map_err(|e| CliError::Io {
        path: outdir.display().to_string(),
        message: e.to_string(),
    })?;
    let mut files = Map::new();
    for (name, model) in fixtures::bundled() {
        let path = outdir.join(format!("{name}.json"));
        save(&model, &path)?;
        files.insert(name, Value::from(path.display().to_string()));
    }
    let text = format!("wrote {} fixtures to {}", files.len(), outdir.display());
    Ok(report(
        json!({ "dir": outdir.display().to_string(), "files": files }),
        text,
        true,
    ))
}
