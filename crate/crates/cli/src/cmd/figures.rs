//! CSV emitters for the two reference figures.
//!
//! `fig1` shows nonlinearity amplification: a slightly nonlinear base-3
//! seed (`3, 3*delta, 3*delta^2`) evaluated through the third-order closed
//! forms at 3, 9, and 27 copies. `fig2` shows the per-copy growth of the
//! l1 coherence, `((1+c)^N - 1)/N`, which is strictly increasing in `N`.
//!
//! Both outputs are deterministic: parameters live in the `#` comment
//! header, data rows carry nothing else.

use crate::output::Sink;
use crate::Failure;
use onescale::closed_form::{third_order_expansion, SeedSummary};

pub fn fig1(sink: &Sink, delta: f64, e_max: f64, points: usize) -> Result<u8, Failure> {
    if points < 2 {
        return Err(Failure::parse("fig1 needs at least 2 grid points"));
    }
    if !(e_max > 0.0) {
        return Err(Failure::parse("e-max must be positive"));
    }
    let summary = SeedSummary::new(3u32, 3.0, 3.0 * delta, 3.0 * delta * delta)
        .map_err(|e| Failure::parse(e.to_string()))?;
    let mut text = format!("# fig1: base=3 delta={delta} e_max={e_max} points={points}\n");
    text.push_str("e,E3,E9,E27\n");
    for i in 0..points {
        let e = e_max * i as f64 / (points - 1) as f64;
        let curves = [1u32, 2, 3].map(|n| third_order_expansion(&summary, n, &e));
        let [e3, e9, e27] = curves;
        let (e3, e9, e27) = (
            e3.map_err(|err| Failure::parse(err.to_string()))?,
            e9.map_err(|err| Failure::parse(err.to_string()))?,
            e27.map_err(|err| Failure::parse(err.to_string()))?,
        );
        text.push_str(&format!("{e},{e3},{e9},{e27}\n"));
    }
    sink.write(&text)?;
    Ok(0)
}

pub fn fig2(sink: &Sink, c_values: &[f64], n_max: u32, powers_of_two: bool) -> Result<u8, Failure> {
    if c_values.is_empty() {
        return Err(Failure::parse("fig2 needs at least one c value"));
    }
    if c_values.iter().any(|&c| c < 0.0) {
        return Err(Failure::parse("c values must be nonnegative"));
    }
    if n_max < 1 {
        return Err(Failure::parse("n-max must be at least 1"));
    }
    let c_list = c_values
        .iter()
        .map(f64::to_string)
        .collect::<Vec<_>>()
        .join(" ");
    let grid: Vec<u32> = if powers_of_two {
        std::iter::successors(Some(1u32), |n| n.checked_mul(2))
            .take_while(|&n| n <= n_max)
            .collect()
    } else {
        (1..=n_max).collect()
    };
    let mut text = format!(
        "# fig2: c={c_list} n_max={n_max} grid={}\n",
        if powers_of_two { "powers-of-two" } else { "all-integers" }
    );
    text.push_str("N");
    for c in c_values {
        text.push_str(&format!(",percopy(c={c})"));
    }
    text.push('\n');
    for n in grid {
        text.push_str(&n.to_string());
        for &c in c_values {
            let per_copy = ((1.0 + c).powi(n as i32) - 1.0) / f64::from(n);
            text.push_str(&format!(",{per_copy}"));
        }
        text.push('\n');
    }
    sink.write(&text)?;
    Ok(0)
}
