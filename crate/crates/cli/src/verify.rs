use std::fs;
use std::path::Path;

use lrm_core::scheme12::BinaryWord;
use serde_json::Value;

use crate::fail::CliError;

/// A candidate Gray code read from disk.
pub struct VerifyInput {
    pub words: Vec<BinaryWord>,
    pub cyclic: bool,
    pub weight: Option<usize>,
}

/// Reads a candidate code from a JSON file.
///
/// The expected shape is `{"words": ["110000", ...], "cyclic": bool,
/// "weight": int}` with only `words` required; `cyclic` defaults to true.
/// The fields may also sit inside a `"result"` object, so the output of
/// `gray construct --format json` verifies as-is.
pub fn read_file(path: &Path) -> Result<VerifyInput, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::parse(format!("cannot read {}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| CliError::parse(format!("{}: invalid JSON: {e}", path.display())))?;
    let top = value
        .as_object()
        .ok_or_else(|| CliError::parse("the top-level JSON value must be an object"))?;
    let body = match top.get("result") {
        Some(Value::Object(inner)) if inner.contains_key("words") => inner,
        _ => top,
    };

    let entries = body
        .get("words")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::parse("missing \"words\" array"))?;
    let mut words = Vec::with_capacity(entries.len());
    for (i, entry) in entries.iter().enumerate() {
        let text = entry
            .as_str()
            .ok_or_else(|| CliError::parse(format!("words[{i}] is not a string")))?;
        let word = text
            .parse::<BinaryWord>()
            .map_err(|e| CliError::parse(format!("words[{i}]: {e}")))?;
        words.push(word);
    }

    let cyclic = match body.get("cyclic") {
        None => true,
        Some(v) => v
            .as_bool()
            .ok_or_else(|| CliError::parse("\"cyclic\" must be a boolean"))?,
    };
    let weight = match body.get("weight") {
        None => None,
        Some(v) => Some(
            v.as_u64()
                .ok_or_else(|| CliError::parse("\"weight\" must be a non-negative integer"))?
                as usize,
        ),
    };

    Ok(VerifyInput {
        words,
        cyclic,
        weight,
    })
}
