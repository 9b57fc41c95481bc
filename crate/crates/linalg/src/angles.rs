//! Principal-angle geometry on projective spaces and Grassmannians.
//!
//! The projective metric is `|sin ∠(v, v')|`; the Grassmannian metric is the
//! Hausdorff distance of projectivized spans, which equals the sine of the
//! largest principal angle.


use crate::frame::Frame;
use crate::{LinalgError, Result};

fn check_ambient(a: &Frame, b: &Frame) -> Result<()> {
    if a.ambient_dim() != b.ambient_dim() {
        return Err(LinalgError::DimensionMismatch { expected: a.ambient_dim(), found: b.ambient_dim() });
    }
    Ok(())
}

/// Sines of the angles between each direction of `a` and the subspace `b`,
/// sorted ascending (`a.k()` values). When `a.k() <= b.k()` these are the
/// principal angles of the pair.
pub fn principal_sines(a: &Frame, b: &Frame) -> Result<Vec<f64>> {
    check_ambient(a, b)?;
    if a.k() == 0 {
        return Ok(Vec::new());
    }
    let qa = a.columns();
    let qb = b.columns();
    let resid = qa - qb * (qb.transpose() * qa);
    let mut s: Vec<f64> = if a.k() == 1 {
        vec![resid.norm()]
    } else {
        crate::svd::singular_values(&resid).iter().copied().collect()
    };
    for x in s.iter_mut() {
        *x = x.clamp(0.0, 1.0);
    }
    s.sort_by(|x, y| x.partial_cmp(y).expect("finite sines"));
    Ok(s)
}

/// `|sin ∠|` between two lines.
pub fn dist_projective(l1: &Frame, l2: &Frame) -> Result<f64> {
    for l in [l1, l2] {
        if l.k() != 1 {
            return Err(LinalgError::WrongRank { expected: 1, found: l.k() });
        }
    }
    check_ambient(l1, l2)?;
    Ok(line_sine(l1.columns().column(0).as_slice(), l2.columns().column(0).as_slice()))
}

/// `|sin ∠(u, v)|` for unit vectors.
pub fn line_sine(u: &[f64], v: &[f64]) -> f64 {
    let c: f64 = u.iter().zip(v).map(|(a, b)| a * b).sum();
    let r2: f64 = u.iter().zip(v).map(|(a, b)| (a - c * b).powi(2)).sum();
    r2.sqrt().min(1.0)
}

/// Hausdorff distance between `P(W1)` and `P(W2)`.
pub fn dist_grassmann(w1: &Frame, w2: &Frame) -> Result<f64> {
    if w1.k() != w2.k() {
        return Err(LinalgError::DimensionMismatch { expected: w1.k(), found: w2.k() });
    }
    Ok(principal_sines(w1, w2)?.last().copied().unwrap_or(0.0))
}

/// Distance from the line `L` to `P(W)`, which is also the Grassmannian
/// distance from `W` to the incidence set `{W' ⊇ L}`.
pub fn dist_to_incidence(w: &Frame, l: &Frame) -> Result<f64> {
    if l.k() != 1 {
        return Err(LinalgError::WrongRank { expected: 1, found: l.k() });
    }
    check_ambient(w, l)?;
    Ok(incidence_sine(w, l.columns().column(0).as_slice()))
}

/// Distance from a unit vector's line to `P(W)`.
pub fn incidence_sine(w: &Frame, u: &[f64]) -> f64 {
    let q = w.columns();
    let n = q.nrows();
    let mut r: Vec<f64> = u.to_vec();
    for j in 0..q.ncols() {
        let col = q.column(j);
        let c: f64 = (0..n).map(|i| col[i] * u[i]).sum();
        for i in 0..n {
            r[i] -= c * col[i];
        }
    }
    r.iter().map(|x| x * x).sum::<f64>().sqrt().min(1.0)
}

/// Nontrivial intersection: the smallest principal angle's sine is below `tol`.
pub fn intersects(a: &Frame, b: &Frame, tol: f64) -> bool {
    if a.k() == 0 || b.k() == 0 || a.ambient_dim() != b.ambient_dim() {
        return false;
    }
    let (s, l) = if a.k() <= b.k() { (a, b) } else { (b, a) };
    principal_sines(s, l).map(|v| v[0] < tol).unwrap_or(false)
}

/// Containment `inner ⊆ outer`: every principal angle's sine is below `tol`.
pub fn contains(inner: &Frame, outer: &Frame, tol: f64) -> bool {
    if inner.ambient_dim() != outer.ambient_dim() || inner.k() > outer.k() {
        return false;
    }
    if inner.k() == 0 {
        return true;
    }
    principal_sines(inner, outer)
        .map(|v| v.last().copied().unwrap_or(0.0) < tol)
        .unwrap_or(false)
}
