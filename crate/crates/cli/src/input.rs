//! Resolving model arguments and parsing matchings, vertices and weights.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use dimer_core::{fixtures, load, Dimer, DimerModel};
use matchings::Matching;
use num_bigint::BigInt;
use num_rational::BigRational;
use partition_functions::{random_weights, unit_weights, weights_from_map};
use serde_json::Value;

use crate::error::CliError;

/// Environment variable naming the fixture directory.
pub const FIXTURES_ENV: &str = "DIMER_FIXTURES";

/// The fixture directory: `$DIMER_FIXTURES` if set, otherwise `fixtures`.
pub fn fixtures_dir() -> PathBuf {
    std::env::var_os(FIXTURES_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("fixtures"))
}

/// Loads a model from `arg`, trying in turn the path itself, `$DIMER_FIXTURES/arg`,
/// `$DIMER_FIXTURES/arg.json`, and finally a bundled fixture named `arg`.
pub fn resolve_model(arg: &str) -> Result<DimerModel, CliError> {
    let direct = Path::new(arg);
    if direct.exists() {
        return Ok(load(direct)?);
    }
    if let Some(dir) = std::env::var_os(FIXTURES_ENV).map(PathBuf::from) {
        for candidate in [dir.join(arg), dir.join(format!("{arg}.json"))] {
            if candidate.exists() {
                return Ok(load(candidate)?);
            }
        }
    }
    fixtures::by_name(arg).ok_or_else(|| CliError::Io {
        path: arg.to_string(),
        message: "no such file, and not a bundled fixture name".to_string(),
    })
}

/// Loads and validates a model.
pub fn resolve_dimer(arg: &str) -> Result<Dimer, CliError> {
    Ok(Dimer::new(resolve_model(arg)?)?)
}

fn parse_ids(text: &str) -> Result<Vec<u32>, CliError> {
    text.trim()
        .trim_start_matches(['[', '{'])
        .trim_end_matches([']', '}'])
        .split([',', ' '])
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.trim()
                .parse::<u32>()
                .map_err(|e| CliError::Argument(format!("bad arrow id `{s}`: {e}")))
        })
        .collect()
}

/// Parses a comma-separated list of arrow ids, optionally in brackets, into a checked matching.
pub fn parse_matching(d: &Dimer, text: &str) -> Result<Matching, CliError> {
    Ok(Matching::from_ids(d, &parse_ids(text)?)?)
}

/// A vertex given by id, or by name when the text is not a vertex id.
pub fn parse_vertex(d: &Dimer, text: &str) -> Result<usize, CliError> {
    text.parse::<u32>()
        .ok()
        .and_then(|id| d.vertex_index(id))
        .or_else(|| d.find_vertex(text))
        .ok_or_else(|| CliError::Argument(format!("unknown vertex `{text}`")))
}

/// An arrow index from its id.
pub fn parse_arrow(d: &Dimer, id: u32) -> Result<usize, CliError> {
    d.arrow_index(id)
        .ok_or_else(|| CliError::Argument(format!("unknown arrow {id}")))
}

fn parse_rational(v: &Value) -> Option<BigRational> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|i| BigRational::from_integer(BigInt::from(i))),
        Value::String(s) => match s.split_once('/') {
            Some((p, q)) => {
                let (p, q) = (
                    p.trim().parse::<BigInt>().ok()?,
                    q.trim().parse::<BigInt>().ok()?,
                );
                (q != BigInt::from(0)).then(|| BigRational::new(p, q))
            }
            None => s
                .trim()
                .parse::<BigInt>()
                .ok()
                .map(BigRational::from_integer),
        },
        _ => None,
    }
}

/// Arrow weights from `unit`, `random` (seeded), or a JSON file mapping arrow ids to
/// integers or `"p/q"` strings.
pub fn load_weights(d: &Dimer, source: &str, seed: u64) -> Result<Vec<BigRational>, CliError> {
    match source {
        "unit" => Ok(unit_weights(d)),
        "random" => Ok(random_weights(d, seed)),
        path => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
                path: path.to_string(),
                message: e.to_string(),
            })?;
            let raw: BTreeMap<String, Value> = serde_json::from_str(&text)
                .map_err(|e| CliError::Argument(format!("weights file {path}: {e}")))?;
            let mut map = BTreeMap::new();
            for (key, value) in &raw {
                let id: u32 = key
                    .parse()
                    .map_err(|_| CliError::Argument(format!("bad arrow id `{key}` in {path}")))?;
                let w = parse_rational(value).ok_or_else(|| {
                    CliError::Argument(format!("bad weight for arrow {key} in {path}"))
                })?;
                map.insert(id, w);
            }
            Ok(weights_from_map(d, &map)?)
        }
    }
}
