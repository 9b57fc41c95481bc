//! Membership in `X̄_b = { W ∈ Gr_q(V) : b(x,x) ≤ 0 on W }` and its complex analogue.

use ano_linalg::form::{complex_structure, restrict_gram};
use ano_linalg::{contains, principal_sines, restrict_kernel, Field, Frame, Mat, WittForm};
use nalgebra::SymmetricEigen;

use crate::{DomainError, Result};

/// An accepted point of the compactification.
#[derive(Debug, Clone)]
pub struct CompactPoint {
    pub frame: Frame,
    /// Dimension of the kernel of the restricted form; 0 exactly on the symmetric space.
    pub stratum: usize,
    pub form: WittForm,
}

impl CompactPoint {
    pub fn is_interior(&self) -> bool {
        self.stratum == 0
    }

    /// `g·W`, re-checked.
    pub fn transformed(&self, g: &Mat, tol: f64) -> Result<CompactPoint> {
        let f = self.frame.transformed(g)?;
        if self.form.field() == Field::Complex {
            complex_in_xbar(&f, &self.form, tol)
        } else {
            in_xbar(&f, &self.form, tol)
        }
    }
}

/// Signatures excluded by the compactification theorem, and the excluded
/// index `i = p − 1` when `p = q`.
pub fn outside_theorem_hypotheses(form: &WittForm, i: usize) -> bool {
    let (p, q) = (form.p(), form.q());
    matches!((p, q), (1, 1) | (2, 2)) || (p == q && i + 1 == p)
}

fn largest_eigenvalue(r: &Mat) -> f64 {
    if r.nrows() == 0 {
        return f64::NEG_INFINITY;
    }
    SymmetricEigen::new(r.clone()).eigenvalues.iter().copied().fold(f64::NEG_INFINITY, f64::max)
}

fn check_shape(w: &Frame, ambient: usize, k: usize) -> Result<()> {
    if w.ambient_dim() != ambient || w.k() != k {
        return Err(DomainError::Shape { expected: k, ambient, found: w.k(), rows: w.ambient_dim() });
    }
    Ok(())
}

/// Accepts a `q`-plane on which `b` is nonpositive (within `tol`, the form
/// having unit operator norm).
pub fn in_xbar(w: &Frame, form: &WittForm, tol: f64) -> Result<CompactPoint> {
    check_shape(w, form.dim(), form.q())?;
    let (r, kernel) = restrict_kernel(form, w, tol)?;
    let top = largest_eigenvalue(&r);
    if top > tol {
        return Err(DomainError::NotNonpositive { eigenvalue: top });
    }
    Ok(CompactPoint { frame: w.clone(), stratum: kernel.k(), form: form.clone() })
}

/// Kernel of the restricted form, at the same tolerance as [`in_xbar`].
pub fn kernel_of(point: &CompactPoint, tol: f64) -> Result<Frame> {
    let gram = if point.form.field() == Field::Complex { point.form.realified_re() } else { point.form.gram().clone() };
    Ok(restrict_gram(&gram, &point.frame, tol)?.1)
}

/// Complex case: `w` is a real `n`-dimensional subspace of `C^n = R^{2n}`
/// (coordinates `(Re, Im)`). Requires `Im b^C = 0` and `Re b^C ≤ 0` on `w`,
/// and checks that the kernel is stable under multiplication by `i`.
pub fn complex_in_xbar(w: &Frame, form: &WittForm, tol: f64) -> Result<CompactPoint> {
    let n = form.dim();
    check_shape(w, 2 * n, n)?;
    let c = w.columns();
    let im = c.transpose() * form.realified_im() * c;
    let residual = im.amax();
    if residual > tol {
        return Err(DomainError::ImaginaryPart { residual });
    }
    let (r, kernel) = restrict_gram(&form.realified_re(), w, tol)?;
    let top = largest_eigenvalue(&r);
    if top > tol {
        return Err(DomainError::NotNonpositive { eigenvalue: top });
    }
    let jk = kernel.transformed(&complex_structure(n))?;
    let frame_tol = (1e3 * tol).min(1e-2);
    if !contains(&jk, &kernel, frame_tol) {
        let defect = principal_sines(&jk, &kernel)?.last().copied().unwrap_or(0.0);
        return Err(DomainError::KernelNotComplex { defect });
    }
    Ok(CompactPoint { frame: w.clone(), stratum: kernel.k(), form: form.clone() })
}
