//! Density-matrix file formats.
//!
//! JSON: `{ "dim": d, "entries": [[[re, im], ...], ...] }`, row-major.
//! CSV: a `# dim=d` header row followed by one row per matrix row, each
//! cell a quoted `"re,im"` pair.

use crate::quantum::{DensityMatrix, StateError};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::path::Path;

#[derive(Debug, Serialize, Deserialize)]
struct StateFile {
    dim: usize,
    entries: Vec<Vec<[f64; 2]>>,
}

pub fn to_json_string(rho: &DensityMatrix) -> String {
    let dim = rho.dim();
    let entries = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| {
                    let z = rho.entry(i, j);
                    [z.re, z.im]
                })
                .collect()
        })
        .collect();
    serde_json::to_string_pretty(&StateFile { dim, entries }).expect("state files serialize")
}

pub fn from_json_str(text: &str, strict: bool) -> Result<DensityMatrix, StateError> {
    let file: StateFile =
        serde_json::from_str(text).map_err(|e| StateError::Parse(e.to_string()))?;
    if file.entries.len() != file.dim {
        return Err(StateError::Parse(format!(
            "dim says {} but {} rows are present",
            file.dim,
            file.entries.len()
        )));
    }
    build(
        file.entries
            .iter()
            .map(|row| row.iter().map(|[re, im]| Complex64::new(*re, *im)).collect())
            .collect(),
        strict,
    )
}

pub fn to_csv_string(rho: &DensityMatrix) -> String {
    let dim = rho.dim();
    let mut out = format!("# dim={dim}\n");
    for i in 0..dim {
        let row: Vec<String> = (0..dim)
            .map(|j| {
                let z = rho.entry(i, j);
                format!("\"{},{}\"", z.re, z.im)
            })
            .collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn from_csv_str(text: &str, strict: bool) -> Result<DensityMatrix, StateError> {
    let mut declared_dim: Option<usize> = None;
    let mut rows: Vec<Vec<Complex64>> = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(spec) = comment.trim().strip_prefix("dim=") {
                let dim = spec
                    .trim()
                    .parse::<usize>()
                    .map_err(|e| StateError::Parse(format!("bad dim header: {e}")))?;
                declared_dim = Some(dim);
            }
            continue;
        }
        // Quoted "re,im" cells: stripping the quotes leaves a flat list of
        // 2d floats per row, unambiguous either way.
        let numbers: Vec<f64> = line
            .replace('"', "")
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<f64>()
                    .map_err(|e| StateError::Parse(format!("bad number {tok:?}: {e}")))
            })
            .collect::<Result<_, _>>()?;
        if numbers.len() % 2 != 0 {
            return Err(StateError::Parse(format!(
                "row has {} numbers, expected an even count of re,im pairs",
                numbers.len()
            )));
        }
        rows.push(
            numbers
                .chunks(2)
                .map(|pair| Complex64::new(pair[0], pair[1]))
                .collect(),
        );
    }
    if let Some(dim) = declared_dim {
        if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
            return Err(StateError::Parse(format!(
                "header says dim={dim} but the body disagrees"
            )));
        }
    }
    build(rows, strict)
}

fn build(rows: Vec<Vec<Complex64>>, strict: bool) -> Result<DensityMatrix, StateError> {
    let rho = DensityMatrix::from_rows(rows)?;
    if strict {
        DensityMatrix::new_strict(rho.entries().clone())
    } else {
        Ok(rho)
    }
}

/// Writes a state as JSON or CSV depending on the `.csv` extension.
pub fn write_state(path: &Path, rho: &DensityMatrix) -> Result<(), StateError> {
    let text = if path.extension().is_some_and(|e| e == "csv") {
        to_csv_string(rho)
    } else {
        to_json_string(rho)
    };
    std::fs::write(path, text)?;
    Ok(())
}

/// Reads a state file, sniffing JSON (`{`) versus CSV from the content.
pub fn read_state(path: &Path, strict: bool) -> Result<DensityMatrix, StateError> {
    let text = std::fs::read_to_string(path)?;
    from_state_str(&text, strict)
}

pub fn from_state_str(text: &str, strict: bool) -> Result<DensityMatrix, StateError> {
    if text.trim_start().starts_with('{') {
        from_json_str(text, strict)
    } else {
        from_csv_str(text, strict)
    }
}
