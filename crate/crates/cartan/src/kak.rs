//! Cartan (KAK) decompositions.

use ano_linalg::{CMat, Frame, Mat, Strategy, WittForm};
use num_complex::Complex64;

use crate::group::{Group, MuVector};
use crate::{CartanError, Result};

/// Form-preservation defect accepted by [`kak`].
pub const PRESERVATION_TOL: f64 = 1e-8;

/// Entries below this (in a unit column) are skipped by the sign rule.
const SIGN_EPS: f64 = 1e-10;

/// Compact factor of a KAK triple.
#[derive(Debug, Clone, PartialEq)]
pub enum Compact {
    Real(Mat),
    Complex(CMat),
}

impl Compact {
    pub fn as_real(&self) -> Option<&Mat> {
        match self {
            Compact::Real(m) => Some(m),
            Compact::Complex(_) => None,
        }
    }

    pub fn as_complex(&self) -> CMat {
        match self {
            Compact::Real(m) => m.map(|x| Complex64::new(x, 0.0)),
            Compact::Complex(m) => m.clone(),
        }
    }
}

/// `g = k · exp(diag(log_diag)) · l`.
#[derive(Debug, Clone)]
pub struct KakTriple {
    pub k: Compact,
    pub mu: MuVector,
    /// Full log-diagonal of the middle factor, in the basis `k` acts on.
    pub log_diag: Vec<f64>,
    pub l: Compact,
}

impl KakTriple {
    /// Relative reconstruction error `‖k·a·l − g‖ / ‖g‖` for a real `g`.
    pub fn reconstruction_error(&self, g: &Mat) -> f64 {
        let g = g.map(|x| Complex64::new(x, 0.0));
        self.complex_reconstruction_error(&g)
    }

    pub fn complex_reconstruction_error(&self, g: &CMat) -> f64 {
        let k = self.k.as_complex();
        let l = self.l.as_complex();
        let a = CMat::from_diagonal(&nalgebra::DVector::from_iterator(
            self.log_diag.len(),
            self.log_diag.iter().map(|v| Complex64::new(v.exp(), 0.0)),
        ));
        (k * a * l - g).norm() / g.norm().max(f64::MIN_POSITIVE)
    }
}

fn check_square(n: usize, rows: usize, cols: usize) -> Result<()> {
    if rows != n || cols != n {
        return Err(CartanError::Shape { expected: n, rows, cols });
    }
    Ok(())
}

/// KAK decomposition of a real matrix in `GL_n(R)` or `O(p,q)`.
pub fn kak(g: &Mat, group: &Group) -> Result<KakTriple> {
    check_square(group.dim(), g.nrows(), g.ncols())?;
    match group {
        Group::Gl(_) => kak_gl(g),
        Group::Opq(form) => kak_opq(g, form),
        Group::OnC(form) => kak_complex(&g.map(|x| Complex64::new(x, 0.0)), form),
    }
}

/// KAK decomposition of a complex matrix in `O(n,C)`.
///
/// `k` and `l` are unitary; they need not preserve the complex form, but
/// the spans of their leading columns do not depend on that choice once the
/// corresponding gaps are positive.
pub fn kak_complex(g: &CMat, form: &WittForm) -> Result<KakTriple> {
    check_square(form.dim(), g.nrows(), g.ncols())?;
    let defect = form.complex_preservation_defect(g)?;
    if defect > PRESERVATION_TOL {
        return Err(CartanError::NotPreserving { defect });
    }
    let n = form.dim();
    let svd = ano_linalg::svd::svd(g);
    let (u, vt) = (svd.u.expect("requested"), svd.v_t.expect("requested"));
    let order = descending(svd.singular_values.as_slice());
    let mut k = CMat::zeros(n, n);
    let mut l = CMat::zeros(n, n);
    let mut sv = Vec::with_capacity(n);
    for (dst, &src) in order.iter().enumerate() {
        let col = u.column(src);
        // Rotate the phase so the first significant entry is real positive.
        let lead = col.iter().find(|z| z.norm() > SIGN_EPS).copied().unwrap_or(Complex64::new(1.0, 0.0));
        let phase = lead / lead.norm();
        k.set_column(dst, &(col * phase.conj()));
        l.set_row(dst, &(vt.row(src) * phase));
        sv.push(svd.singular_values[src]);
    }
    check_invertible(&sv)?;
    let log_diag: Vec<f64> = sv.iter().map(|s| s.ln()).collect();
    let values: Vec<f64> = log_diag[..n / 2].iter().map(|v| v.max(0.0)).collect();
    Ok(KakTriple {
        k: Compact::Complex(k),
        mu: MuVector { group: crate::GroupTag::OnC, values },
        log_diag,
        l: Compact::Complex(l),
    })
}

/// Batch KAK, results in input order.
pub fn kak_batch(gs: &[Mat], group: &Group, strategy: Strategy) -> Vec<Result<KakTriple>> {
    strategy.map(gs, |g| kak(g, group))
}

fn descending(values: &[f64]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[b].total_cmp(&values[a]).then(a.cmp(&b)));
    order
}

fn check_invertible(sorted_sv: &[f64]) -> Result<()> {
    let (Some(&top), Some(&bottom)) = (sorted_sv.first(), sorted_sv.last()) else {
        return Ok(());
    };
    if !(bottom > top * f64::EPSILON * sorted_sv.len() as f64) || !top.is_finite() {
        return Err(CartanError::Singular { condition: top / bottom });
    }
    Ok(())
}

fn kak_gl(g: &Mat) -> Result<KakTriple> {
    let n = g.nrows();
    let svd = ano_linalg::svd::svd(g);
    let (u, vt) = (svd.u.expect("requested"), svd.v_t.expect("requested"));
    let order = descending(svd.singular_values.as_slice());
    let mut k = Mat::zeros(n, n);
    let mut l = Mat::zeros(n, n);
    let mut sv = Vec::with_capacity(n);
    for (dst, &src) in order.iter().enumerate() {
        let col = u.column(src);
        let sign = if first_significant(col.iter().copied()) < 0.0 { -1.0 } else { 1.0 };
        k.set_column(dst, &(col * sign));
        l.set_row(dst, &(vt.row(src) * sign));
        sv.push(svd.singular_values[src]);
    }
    check_invertible(&sv)?;
    let log_diag: Vec<f64> = sv.iter().map(|s| s.ln()).collect();
    Ok(KakTriple {
        k: Compact::Real(k),
        mu: MuVector { group: crate::GroupTag::Gl, values: log_diag.clone() },
        log_diag,
        l: Compact::Real(l),
    })
}

fn first_significant(it: impl Iterator<Item = f64>) -> f64 {
    let mut it = it;
    it.find(|x| x.abs() > SIGN_EPS).unwrap_or(1.0)
}

/// Orthonormalizes columns in order, keeping each column's direction as
/// close as possible to the input. Earlier columns are the reliable ones.
fn orthonormalize_in_order(m: &Mat) -> Mat {
    let mut out = m.clone();
    for j in 0..m.ncols() {
        let mut v = out.column(j).into_owned();
        for _ in 0..2 {
            for i in 0..j {
                let c = out.column(i).dot(&v);
                v -= out.column(i) * c;
            }
        }
        let nrm = v.norm();
        if nrm > 1e-300 {
            out.set_column(j, &(v / nrm));
        }
    }
    out
}

fn kak_opq(g: &Mat, form: &WittForm) -> Result<KakTriple> {
    let defect = form.preservation_defect(g)?;
    if defect > PRESERVATION_TOL {
        return Err(CartanError::NotPreserving { defect });
    }
    let (p, q, n) = (form.p(), form.q(), form.dim());
    let pm = form.pm_basis();
    let h = pm.transpose() * g * &pm;

    let a_blk = h.view((0, 0), (p, p)).into_owned();
    let b_blk = h.view((0, p), (p, q)).into_owned();
    let d_blk = h.view((p, p), (q, q)).into_owned();

    // Off-diagonal block B = U·diag(sinh λ)·Vᵀ.
    let (u_thin, vt, sigma) = if q > 0 {
        let svd = ano_linalg::svd::svd(&b_blk);
        let (u, vt) = (svd.u.expect("requested"), svd.v_t.expect("requested"));
        let order = descending(svd.singular_values.as_slice());
        let mut us = Mat::zeros(p, q);
        let mut vs = Mat::zeros(q, q);
        let mut s = Vec::with_capacity(q);
        for (dst, &src) in order.iter().enumerate() {
            us.set_column(dst, &u.column(src));
            vs.set_row(dst, &vt.row(src));
            s.push(svd.singular_values[src]);
        }
        (us, vs, s)
    } else {
        (Mat::zeros(p, 0), Mat::zeros(0, 0), Vec::new())
    };
    let lambda: Vec<f64> = sigma.iter().map(|s| s.asinh()).collect();
    let cosh: Vec<f64> = sigma.iter().map(|s| (1.0 + s * s).sqrt()).collect();

    let mut k1 = Mat::zeros(p, p);
    k1.view_mut((0, 0), (p, q)).copy_from(&u_thin);
    if p > q {
        let comp = Frame::euclidean_complement_of(&u_thin);
        k1.view_mut((0, q), (p, p - q)).copy_from(comp.columns());
    }
    let l2 = vt;
    // k2 = D·l2ᵀ·diag(1/cosh λ); l1 = diag(1/cosh λ, 1)·k1ᵀ·A.
    let mut k2 = d_blk * l2.transpose();
    for (j, c) in cosh.iter().enumerate() {
        k2.column_mut(j).unscale_mut(*c);
    }
    let mut l1 = k1.transpose() * a_blk;
    for (i, c) in cosh.iter().enumerate() {
        l1.row_mut(i).unscale_mut(*c);
    }
    let k2 = orthonormalize_in_order(&k2);
    let l1 = orthonormalize_in_order(&l1.transpose()).transpose();

    let mut kk = Mat::zeros(n, n);
    kk.view_mut((0, 0), (p, p)).copy_from(&k1);
    kk.view_mut((p, p), (q, q)).copy_from(&k2);
    let mut ll = Mat::zeros(n, n);
    ll.view_mut((0, 0), (p, p)).copy_from(&l1);
    ll.view_mut((p, p), (q, q)).copy_from(&l2);
    let mut k = &pm * kk * pm.transpose();
    let mut l = &pm * ll * pm.transpose();

    // Sign rule: paired Witt columns flip together, middle columns alone.
    for i in 0..n {
        let partner = form.partner(i);
        if partner < i {
            continue;
        }
        if first_significant(k.column(i).iter().copied()) < 0.0 {
            for j in if partner == i { vec![i] } else { vec![i, partner] } {
                k.column_mut(j).neg_mut();
                l.row_mut(j).neg_mut();
            }
        }
    }

    let mut log_diag = vec![0.0; n];
    for (i, lam) in lambda.iter().enumerate() {
        log_diag[i] = *lam;
        log_diag[n - 1 - i] = -lam;
    }
    Ok(KakTriple {
        k: Compact::Real(k),
        mu: MuVector { group: crate::GroupTag::Opq, values: lambda },
        log_diag,
        l: Compact::Real(l),
    })
}
