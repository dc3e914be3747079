//! `expand`: seed coefficients in, N-copy coefficients out, with the
//! matching closed forms shown next to the recurrence output.

use crate::output::{csv_line, render_table, OutputFormat, Sink};
use crate::Failure;
use num_rational::BigRational;
use onescale::closed_form::{
    closed_form_d1, closed_form_d2, closed_form_d3, closed_form_d4_two_coeff, ClosedFormError,
    SeedSummary,
};
use onescale::scalar::{parse_rational, Coeff};
use onescale::series::SeedSeries;

pub fn run(
    sink: &Sink,
    format: OutputFormat,
    base: u32,
    coeffs: &str,
    n: u32,
    truncation: Option<usize>,
) -> Result<u8, Failure> {
    let tokens: Vec<&str> = coeffs.split(',').map(str::trim).collect();
    if tokens.iter().any(|t| t.is_empty()) {
        return Err(Failure::parse("empty coefficient in --coeffs"));
    }
    // Integers and p/q fractions run the exact pipeline; a decimal point or
    // exponent anywhere switches the whole list to floats.
    if tokens.iter().all(|t| looks_rational(t)) {
        let parsed = tokens
            .iter()
            .map(|t| parse_rational(t))
            .collect::<Result<Vec<BigRational>, String>>()
            .map_err(Failure::parse)?;
        expand_generic(sink, format, base, parsed, n, truncation)
    } else {
        let parsed = tokens
            .iter()
            .map(|t| t.parse::<f64>().map_err(|e| format!("invalid coefficient {t:?}: {e}")))
            .collect::<Result<Vec<f64>, String>>()
            .map_err(Failure::parse)?;
        expand_generic(sink, format, base, parsed, n, truncation)
    }
}

fn looks_rational(token: &str) -> bool {
    token
        .chars()
        .all(|ch| ch.is_ascii_digit() || matches!(ch, '+' | '-' | '/'))
}

fn expand_generic<T: Coeff>(
    sink: &Sink,
    format: OutputFormat,
    base: u32,
    coeffs: Vec<T>,
    n: u32,
    truncation: Option<usize>,
) -> Result<u8, Failure> {
    let seed = SeedSeries::polynomial(base, coeffs)?;
    let scaled = seed.scale_coefficients(n, truncation)?;
    let summary = SeedSummary::from_seed(&seed);
    let two_coefficient = seed.coefficients().len() <= 2;

    if format == OutputFormat::Json {
        let mut text = serde_json::to_string_pretty(&scaled.to_series_file())
            .expect("series files serialize");
        text.push('\n');
        sink.write(&text)?;
        return Ok(0);
    }

    let mut rows: Vec<Vec<String>> = Vec::new();
    for j in 1..=scaled.len() {
        let value = scaled.coefficient(j);
        let (closed, diff) = match closed_value(&summary, two_coefficient, n, j) {
            None => (String::new(), String::new()),
            Some(Err(ClosedFormError::SingularInput)) => ("singular".into(), String::new()),
            Some(Err(other)) => return Err(Failure::parse(other.to_string())),
            Some(Ok(cf)) => {
                let diff = (cf.clone() - value.clone()).abs().to_f64();
                (cf.to_string(), format!("{diff:e}"))
            }
        };
        rows.push(vec![j.to_string(), value.to_string(), closed, diff]);
    }

    let mode = if T::EXACT { "exact-rational" } else { "float" };
    match format {
        OutputFormat::Csv => {
            let mut text = csv_line(&["j", "coefficient", "closed_form", "abs_diff"]
                .map(String::from));
            for row in &rows {
                text.push_str(&csv_line(row));
            }
            sink.write(&text)?;
        }
        OutputFormat::Table => {
            let mut text = format!(
                "# base={} n={} N={} L={} mode={}{}\n",
                base,
                n,
                scaled.copies(),
                scaled.len(),
                mode,
                if scaled.is_truncated() { " (truncated)" } else { "" }
            );
            text.push_str(&render_table(
                &["j", "d_j(N)", "closed form", "|diff|"],
                &rows,
            ));
            sink.write(&text)?;
        }
        OutputFormat::Json => unreachable!(),
    }
    Ok(0)
}

fn closed_value<T: Coeff>(
    summary: &SeedSummary<T>,
    two_coefficient: bool,
    n: u32,
    j: usize,
) -> Option<Result<T, ClosedFormError>> {
    match j {
        1 => Some(Ok(closed_form_d1(summary, n))),
        2 => Some(closed_form_d2(summary, n)),
        3 => Some(closed_form_d3(summary, n)),
        4 if two_coefficient => Some(closed_form_d4_two_coeff(summary, n)),
        _ => None,
    }
}
