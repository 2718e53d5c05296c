//! Plain-text solution files.
//!
//! Archive and selected-set files share one layout: a `#` header line of
//! `key=value` pairs followed by one solution per line, decision values then
//! `|` then objective values, all space separated. Decimals are written with
//! Rust's shortest round-trip formatting so re-reading is bit exact.

use std::collections::BTreeMap;
use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::moead::Solution;

/// Parses `# a=1 b=foo` into a map.
pub fn parse_header(line: &str) -> std::result::Result<BTreeMap<String, String>, String> {
    let body = line
        .trim()
        .strip_prefix('#')
        .ok_or_else(|| format!("expected '#' header, got '{line}'"))?;
    let mut out = BTreeMap::new();
    for tok in body.split_whitespace() {
        let (k, v) = tok
            .split_once('=')
            .ok_or_else(|| format!("header token '{tok}' is not key=value"))?;
        out.insert(k.to_string(), v.to_string());
    }
    Ok(out)
}

pub fn parse_numbers(s: &str) -> std::result::Result<Vec<f64>, String> {
    s.split_whitespace()
        .map(|t| t.parse::<f64>().map_err(|e| format!("'{t}': {e}")))
        .collect()
}

fn join(values: &[f64]) -> String {
    values.iter().map(|v| format!("{v}")).collect::<Vec<_>>().join(" ")
}

/// Writes `header` (without the leading `# `) followed by the solutions.
pub fn write_solution_file(path: &Path, header: &str, solutions: &[Solution]) -> Result<()> {
    let mut w = BufWriter::new(fs::File::create(path)?);
    writeln!(w, "# {header}")?;
    for s in solutions {
        writeln!(w, "{} | {}", join(&s.x), join(&s.f))?;
    }
    w.flush()?;
    Ok(())
}

/// Contents of an archive or selected-set file.
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionFile {
    pub header: BTreeMap<String, String>,
    pub solutions: Vec<Solution>,
}

pub fn read_solution_file(path: &Path) -> Result<SolutionFile> {
    let text = fs::read_to_string(path)?;
    let err = |reason: String| Error::Format {
        path: path.to_path_buf(),
        reason,
    };
    let mut lines = text.lines();
    let header = parse_header(lines.next().ok_or_else(|| err("empty file".into()))?).map_err(err)?;
    let mut solutions = Vec::new();
    for (no, line) in lines.enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (xs, fs_) = line
            .split_once('|')
            .ok_or_else(|| err(format!("line {}: missing '|'", no + 2)))?;
        let x = parse_numbers(xs).map_err(|e| err(format!("line {}: {e}", no + 2)))?;
        let f = parse_numbers(fs_).map_err(|e| err(format!("line {}: {e}", no + 2)))?;
        solutions.push(Solution {
            x,
            f,
            eval_index: solutions.len(),
        });
    }
    Ok(SolutionFile { header, solutions })
}

/// Objective vectors from any of the text formats: front files (objectives
/// only) or archive/selected files (`x | f`).
pub fn read_objective_vectors(path: &Path) -> Result<Vec<Vec<f64>>> {
    let text = fs::read_to_string(path)?;
    let mut out = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let obj = line.split_once('|').map_or(line, |(_, f)| f);
        out.push(parse_numbers(obj).map_err(|reason| Error::Format {
            path: path.to_path_buf(),
            reason: format!("line {}: {reason}", no + 1),
        })?);
    }
    Ok(out)
}
