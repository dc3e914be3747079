//! `gen-state`: deterministic random density matrices to file or stdout.

use crate::output::{OutputFormat, Sink};
use crate::Failure;
use onescale::quantum::{random_state, StateKind};
use onescale::state_io;

pub fn run(
    sink: &Sink,
    format: OutputFormat,
    dim: usize,
    kind: &str,
    seed: u64,
) -> Result<u8, Failure> {
    let kind: StateKind = kind.parse().map_err(Failure::parse)?;
    if dim < 2 {
        return Err(Failure::parse("dimension must be at least 2"));
    }
    let rho = random_state(dim, kind, seed);
    let text = match format {
        OutputFormat::Csv => state_io::to_csv_string(&rho),
        // Table output makes no sense for a matrix dump; default to JSON.
        OutputFormat::Json | OutputFormat::Table => {
            let mut t = state_io::to_json_string(&rho);
            t.push('\n');
            t
        }
    };
    sink.write(&text)?;
    Ok(0)
}
