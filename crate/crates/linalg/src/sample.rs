//! Random generation of frames, group elements and special subspaces.

use rand::Rng;
use rand_distr::StandardNormal;

use crate::form::WittForm;
use crate::frame::Frame;
use crate::{Mat, Vector};

pub fn gaussian_matrix<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> Mat {
    Mat::from_fn(rows, cols, |_, _| rng.sample(StandardNormal))
}

pub fn gaussian_vector<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vector {
    Vector::from_fn(n, |_, _| rng.sample(StandardNormal))
}

/// Haar-distributed orthogonal matrix (QR of a Gaussian matrix with sign fix).
pub fn random_orthogonal<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Mat {
    let qr = gaussian_matrix(n, n, rng).qr();
    let mut q = qr.q();
    let r = qr.r();
    for j in 0..n {
        if r[(j, j)] < 0.0 {
            q.column_mut(j).neg_mut();
        }
    }
    q
}

/// Uniformly distributed `k`-dimensional subspace.
pub fn random_frame<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Frame {
    loop {
        if let Ok(f) = Frame::from_columns(&gaussian_matrix(n, k, rng), 1e-8) {
            return f;
        }
    }
}

/// Random element of `O(p) × O(q)`, written in the Witt basis.
pub fn random_compact<R: Rng + ?Sized>(form: &WittForm, rng: &mut R) -> Mat {
    let (p, q) = (form.p(), form.q());
    let mut k = Mat::zeros(p + q, p + q);
    k.view_mut((0, 0), (p, p)).copy_from(&random_orthogonal(p, rng));
    if q > 0 {
        k.view_mut((p, p), (q, q)).copy_from(&random_orthogonal(q, rng));
    }
    let pm = form.pm_basis();
    &pm * k * pm.transpose()
}

/// `exp` of a chamber element `diag(λ, 0, -λ)` in the Witt basis.
pub fn chamber_element(form: &WittForm, lambda: &[f64]) -> Mat {
    let n = form.dim();
    let mut d = Mat::identity(n, n);
    for (i, &l) in lambda.iter().enumerate().take(form.q()) {
        d[(i, i)] = l.exp();
        d[(n - 1 - i, n - 1 - i)] = (-l).exp();
    }
    d
}

/// Random element `k1·exp(H)·k2` of `O(p, q)` with chamber entries drawn in `[0, scale)`.
pub fn random_form_preserving<R: Rng + ?Sized>(form: &WittForm, scale: f64, rng: &mut R) -> Mat {
    let lambda: Vec<f64> = (0..form.q()).map(|_| rng.random::<f64>() * scale).collect();
    random_compact(form, rng) * chamber_element(form, &lambda) * random_compact(form, rng)
}

/// Uniformly random isotropic line: `(u, w)` with `|u| = |w| = 1` in the ± basis.
pub fn random_isotropic_line<R: Rng + ?Sized>(form: &WittForm, rng: &mut R) -> Frame {
    let (p, q) = (form.p(), form.q());
    assert!(q > 0, "definite forms have no isotropic lines");
    let u = gaussian_vector(p, rng).normalize();
    let w = gaussian_vector(q, rng).normalize();
    let v = form.pm_basis() * Vector::from_iterator(p + q, u.iter().chain(w.iter()).copied());
    Frame::line(&v).expect("unit vector")
}

/// A nonpositive `q`-plane given as the graph `{(A x, x)}` of a map
/// `A: R^q → R^p` in the ± basis with the prescribed singular values
/// (all in `[0, 1]`; a value of exactly 1 yields a null direction).
pub fn graph_plane<R: Rng + ?Sized>(form: &WittForm, singular_values: &[f64], rng: &mut R) -> Frame {
    let (p, q) = (form.p(), form.q());
    let u = random_orthogonal(p, rng);
    let v = random_orthogonal(q, rng);
    let mut s = Mat::zeros(p, q);
    for (i, &x) in singular_values.iter().enumerate().take(q.min(p)) {
        s[(i, i)] = x;
    }
    let a = u * s * v.transpose();
    let mut m = Mat::zeros(p + q, q);
    m.view_mut((0, 0), (p, q)).copy_from(&a);
    m.view_mut((p, 0), (q, q)).copy_from(&Mat::identity(q, q));
    Frame::from_columns(&(form.pm_basis() * m), 1e-12).expect("graph has full rank")
}

/// Random negative definite `q`-plane (a point of the symmetric space).
pub fn random_negative_plane<R: Rng + ?Sized>(form: &WittForm, rng: &mut R) -> Frame {
    let s: Vec<f64> = (0..form.q()).map(|_| rng.random::<f64>() * 0.999).collect();
    graph_plane(form, &s, rng)
}
