//! JSON reading and writing.

use std::path::Path;

use crate::error::DimerError;
use crate::model::{DimerModel, Topology};

/// Parses a model from JSON text and checks that all id references resolve.
pub fn from_json(text: &str) -> Result<DimerModel, DimerError> {
    let model: DimerModel = serde_json::from_str(text).map_err(|e| DimerError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    Topology::build(&model)?;
    Ok(model)
}

pub fn to_json(model: &DimerModel) -> String {
    serde_json::to_string_pretty(model).expect("dimer models always serialise")
}

pub fn load(path: impl AsRef<Path>) -> Result<DimerModel, DimerError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| DimerError::Io {
        path: path.display().to_string(),
        source,
    })?;
    from_json(&text)
}

pub fn save(model: &DimerModel, path: impl AsRef<Path>) -> Result<(), DimerError> {
    let path = path.as_ref();
    let mut text = to_json(model);
    text.push('\n');
    std::fs::write(path, text).map_err(|source| DimerError::Io {
        path: path.display().to_string(),
        source,
    })
}
