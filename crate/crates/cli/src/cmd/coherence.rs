//! `coherence`: the chosen norm and purity of a state file, plus the
//! N-copy closed form against the brute-force oracle when requested.

use crate::output::{csv_line, OutputFormat, Sink};
use crate::Failure;
use onescale::quantum::{l1_n_copies_closed, l2_n_copies_closed, CoherenceNorm, StateError};
use onescale::state_io;
use std::path::Path;

pub fn run(
    sink: &Sink,
    format: OutputFormat,
    state_path: &Path,
    norm: &str,
    copies: Option<u32>,
    strict: bool,
) -> Result<u8, Failure> {
    let norm: CoherenceNorm = norm.parse().map_err(Failure::parse)?;
    let rho = state_io::read_state(state_path, strict)?;
    let summary = rho.coherence_summary();
    let (label, single) = match norm {
        CoherenceNorm::L1 => ("c", summary.c),
        CoherenceNorm::L2 => ("c2", summary.c2),
    };

    let mut n_copy: Option<(u32, f64, Option<f64>)> = None;
    if let Some(n) = copies {
        let closed = match norm {
            CoherenceNorm::L1 => l1_n_copies_closed(single, n),
            CoherenceNorm::L2 => l2_n_copies_closed(summary.c2, summary.purity, n)
                .map_err(|e| Failure::parse(e.to_string()))?,
        };
        // Beyond the materialization cap only the closed form is shown.
        let brute = match rho.brute_force_coherence(n, norm) {
            Ok(v) => Some(v),
            Err(StateError::KronTooLarge { .. }) => None,
            Err(other) => return Err(other.into()),
        };
        n_copy = Some((n, closed, brute));
    }

    match format {
        OutputFormat::Json => {
            let mut object = serde_json::json!({
                "state": state_path.display().to_string(),
                "dim": rho.dim(),
                "norm": match norm { CoherenceNorm::L1 => "l1", CoherenceNorm::L2 => "l2" },
                "value": single,
                "purity": summary.purity,
            });
            if let Some((n, closed, brute)) = n_copy {
                object["copies"] = n.into();
                object["closed"] = closed.into();
                if let Some(b) = brute {
                    object["brute_force"] = b.into();
                    object["abs_diff"] = ((closed - b).abs()).into();
                }
            }
            let mut text = serde_json::to_string_pretty(&object).expect("reports serialize");
            text.push('\n');
            sink.write(&text)?;
        }
        OutputFormat::Csv => {
            let mut text = csv_line(
                &["norm", "value", "purity", "copies", "closed", "brute_force", "abs_diff"]
                    .map(String::from),
            );
            let mut row = vec![
                label.to_string(),
                format!("{single}"),
                format!("{}", summary.purity),
            ];
            match n_copy {
                Some((n, closed, brute)) => {
                    row.push(n.to_string());
                    row.push(format!("{closed}"));
                    row.push(brute.map_or(String::new(), |b| format!("{b}")));
                    row.push(brute.map_or(String::new(), |b| format!("{:e}", (closed - b).abs())));
                }
                None => row.extend([String::new(), String::new(), String::new(), String::new()]),
            }
            text.push_str(&csv_line(&row));
            sink.write(&text)?;
        }
        OutputFormat::Table => {
            let mut text = format!(
                "state:  {} (dim {})\n{label}     = {single}\npurity = {}\n",
                state_path.display(),
                rho.dim(),
                summary.purity
            );
            if let Some((n, closed, brute)) = n_copy {
                match brute {
                    Some(b) => text.push_str(&format!(
                        "N = {n}: closed = {closed}, brute-force = {b}, |diff| = {:e}\n",
                        (closed - b).abs()
                    )),
                    None => text.push_str(&format!(
                        "N = {n}: closed = {closed} (brute force skipped: above the size cap)\n"
                    )),
                }
            }
            sink.write(&text)?;
        }
    }
    Ok(0)
}
