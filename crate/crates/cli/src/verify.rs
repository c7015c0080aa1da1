//! The full verification suite on one model.

use std::time::Instant;

use dimer_core::{Dimer, DimerModel};
use serde::Serialize;

use crate::checks::{self, Check};

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub seed: u64,
    pub checks: Vec<Check>,
    /// True iff every check passed.
    pub passed: bool,
}

fn timed(timing: bool, f: impl FnOnce() -> Check) -> Check {
    let start = Instant::now();
    let mut c = f();
    if timing {
        c.millis = Some(start.elapsed().as_millis() as u64);
    }
    c
}

const NEEDS_VALID: &str = "the model fails the dimer axioms";
const NEEDS_CONSISTENT: &str = "the model is not consistent";

/// Runs every check in order. Checks that need a valid or consistent model are
/// skipped when the earlier check failed; the lattice checks need only validity.
pub fn verify(model: &DimerModel, seed: u64, timing: bool) -> VerificationReport {
    let mut out = vec![timed(timing, || checks::validate_model(model))];
    let d = Dimer::new(model.clone()).ok();
    let consistent = match &d {
        Some(d) => {
            let c = timed(timing, || checks::postnikov(d));
            let ok = c.passed();
            out.push(c);
            ok
        }
        None => {
            out.push(Check::skipped("check_postnikov", NEEDS_VALID));
            false
        }
    };
    type Run = fn(&Dimer) -> Check;
    let sequence: [(&'static str, bool, Run); 10] = [
        ("boundary_size_sweep", true, checks::boundary_sizes),
        ("eta_unimodular", false, checks::eta_unimodular),
        ("cluster_ensemble_exact", false, checks::cluster_ensemble),
        ("ms_matching_three_way", true, checks::ms_matchings_agree),
        ("ms_matching_boundaries", true, checks::ms_boundaries),
        ("weight_double_formula", true, checks::weight_formula),
        ("ms_formula_rearrangement", true, checks::ms_formulas_agree),
        ("black_white_duality", true, checks::ms_duality),
        ("resolution_exact", true, checks::resolution_exact),
        ("rotation_identity", true, checks::rotation_identity),
    ];
    for (name, needs_consistency, run) in sequence {
        out.push(match &d {
            None => Check::skipped(name, NEEDS_VALID),
            Some(_) if needs_consistency && !consistent => Check::skipped(name, NEEDS_CONSISTENT),
            Some(d) => timed(timing, || run(d)),
        });
    }
    out.push(match &d {
        None => Check::skipped("plucker_relations", NEEDS_VALID),
        Some(_) if !consistent => Check::skipped("plucker_relations", NEEDS_CONSISTENT),
        Some(d) => timed(timing, || checks::plucker_draws(d, seed)),
    });
    let passed = out.iter().all(Check::passed);
    VerificationReport {
        seed,
        checks: out,
        passed,
    }
}
