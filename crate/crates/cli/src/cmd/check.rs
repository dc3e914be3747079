//! `check`: run a scalability suite from a JSON config. Exit code 0 means
//! consistent-with-1S, 1 means the measure was refuted on this family.

use crate::output::{csv_line, OutputFormat, Sink};
use crate::Failure;
use onescale::harness::{run_suite, SuiteConfig, Verdict};
use std::path::Path;

pub fn run(
    sink: &Sink,
    format: OutputFormat,
    config_path: &Path,
    tolerance_override: Option<f64>,
    seed_override: Option<u64>,
) -> Result<u8, Failure> {
    let text = std::fs::read_to_string(config_path)?;
    let mut config: SuiteConfig = serde_json::from_str(&text)
        .map_err(|e| Failure::parse(format!("config {}: {e}", config_path.display())))?;
    if let Some(tolerance) = tolerance_override {
        config.tolerance = tolerance;
    }
    if let Some(seed) = seed_override {
        config.seed = seed;
    }
    let report = run_suite(&config)?;

    match format {
        OutputFormat::Json => {
            let mut text = serde_json::to_string_pretty(&report).expect("reports serialize");
            text.push('\n');
            sink.write(&text)?;
        }
        OutputFormat::Table => sink.write(&report.to_table())?,
        OutputFormat::Csv => {
            let mut text =
                csv_line(&["kind", "state_id", "copies", "split", "residual"].map(String::from));
            for check in &report.definition_checks {
                text.push_str(&csv_line(&[
                    "definition".into(),
                    check.state_id.clone(),
                    check.copies.to_string(),
                    String::new(),
                    format!("{:e}", check.residual),
                ]));
            }
            for check in &report.composition_checks {
                text.push_str(&csv_line(&[
                    "composition".into(),
                    check.state_id.clone(),
                    check.copies.to_string(),
                    check.split.to_string(),
                    format!("{:e}", check.residual),
                ]));
            }
            text.push_str(&format!("# verdict: {}\n", report.verdict));
            sink.write(&text)?;
        }
    }
    Ok(match report.verdict {
        Verdict::ConsistentWith1S => 0,
        Verdict::Not1S => 1,
    })
}
