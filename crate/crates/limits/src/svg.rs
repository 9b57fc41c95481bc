//! Flat SVG scatter of a limit sample in a coordinate chart.

use std::fmt::Write;

use ano_linalg::{Mat, Vector, WittForm};

use crate::sample::LimitSample;
use crate::{LimitsError, Result};

const SIZE: f64 = 400.0;
const MARGIN: f64 = 20.0;

/// Chart coordinates of a line: the unit representative expressed in the
/// ± basis of `form` (or the standard basis without a form), with the sign
/// fixed so the negative block (else the first significant coordinate) is positive.
pub fn chart_point(v: &Vector, form: Option<&WittForm>, chart: (usize, usize)) -> Result<(f64, f64)> {
    let n = v.len();
    for index in [chart.0, chart.1] {
        if index >= n {
            return Err(LimitsError::Chart { index, dim: n });
        }
    }
    let (coords, neg_start) = match form {
        Some(f) => (f.pm_basis().transpose() * v, f.p()),
        None => (v.clone(), n),
    };
    let coords = coords.normalize();
    let neg_sum: f64 = coords.iter().skip(neg_start).sum();
    let first = coords.iter().copied().find(|x| x.abs() > 1e-12).unwrap_or(1.0);
    let sign = if neg_sum.abs() > 1e-12 { neg_sum.signum() } else { first.signum() };
    Ok((sign * coords[chart.0], sign * coords[chart.1]))
}

/// Scatter of the first column of every sample frame; the viewport is `[-1, 1]²`.
pub fn scatter_svg(sample: &LimitSample, form: Option<&WittForm>, chart: (usize, usize)) -> Result<String> {
    let mut out = String::new();
    let s = SIZE + 2.0 * MARGIN;
    writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{s}" height="{s}" viewBox="0 0 {s} {s}">"#).unwrap();
    writeln!(out, r#"<rect width="{s}" height="{s}" fill="white"/>"#).unwrap();
    let c = s / 2.0;
    writeln!(out, r##"<circle cx="{c}" cy="{c}" r="{}" fill="none" stroke="#bbb"/>"##, SIZE / 2.0).unwrap();
    for p in &sample.points {
        let cols: &Mat = p.frame.columns();
        let (x, y) = chart_point(&cols.column(0).into_owned(), form, chart)?;
        let px = c + x * SIZE / 2.0;
        let py = c - y * SIZE / 2.0;
        writeln!(out, r##"<circle cx="{px:.3}" cy="{py:.3}" r="1.5" fill="#1f4e99"><title>{}</title></circle>"##, p.word).unwrap();
    }
    out.push_str("</svg>\n");
    Ok(out)
}
