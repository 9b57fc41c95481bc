//! Orthonormal frames: the carrier for subspaces, flags and compactification points.

use nalgebra::SymmetricEigen;

use crate::form::WittForm;
use crate::{LinalgError, Mat, Result};

/// Relative singular-value cutoff used when extracting column spaces.
const RANK_CUTOFF: f64 = 1e-10;

/// A `k`-dimensional subspace of `R^n` stored by Euclidean-orthonormal columns.
#[derive(Debug, Clone, PartialEq)]
pub struct Frame {
    cols: Mat,
}

impl Frame {
    /// The zero subspace of `R^n`.
    pub fn empty(n: usize) -> Self {
        Self { cols: Mat::zeros(n, 0) }
    }

    /// Wraps columns that are already orthonormal within `1e-10`.
    pub fn from_orthonormal(cols: Mat) -> Result<Self> {
        let defect = orthonormality_defect(&cols);
        if defect > 1e-10 {
            return Err(LinalgError::NotOrthonormal { defect });
        }
        Ok(Self { cols })
    }

    /// Orthonormal frame of the column span of `m`, which must have full
    /// column rank relative to `tol`.
    pub fn from_columns(m: &Mat, tol: f64) -> Result<Self> {
        let k = m.ncols();
        let f = column_space(m, tol);
        if f.k() < k {
            return Err(LinalgError::RankDeficient { rank: f.k(), expected: k });
        }
        Ok(f)
    }

    /// Orthonormal frame of the column span of `m`, whatever its rank.
    pub fn orthonormalize(m: &Mat) -> Result<Self> {
        Ok(column_space(m, RANK_CUTOFF))
    }

    /// Unit line through a nonzero vector.
    pub fn line(v: &crate::Vector) -> Result<Self> {
        let n = v.norm();
        if n == 0.0 || !n.is_finite() {
            return Err(LinalgError::ZeroVector);
        }
        Ok(Self { cols: Mat::from_column_slice(v.len(), 1, (v / n).as_slice()) })
    }

    /// Frame of the Euclidean orthogonal complement of the column span of `m`.
    pub fn euclidean_complement_of(m: &Mat) -> Self {
        let n = m.nrows();
        let q = column_space(m, RANK_CUTOFF);
        let proj = Mat::identity(n, n) - q.projector();
        let eig = SymmetricEigen::new(proj);
        let idx: Vec<usize> = (0..n).filter(|&j| eig.eigenvalues[j] > 0.5).collect();
        let mut c = Mat::zeros(n, idx.len());
        for (col, &j) in idx.iter().enumerate() {
            c.set_column(col, &eig.eigenvectors.column(j));
        }
        Self { cols: c }
    }

    pub fn columns(&self) -> &Mat {
        &self.cols
    }
    pub fn into_columns(self) -> Mat {
        self.cols
    }
    pub fn ambient_dim(&self) -> usize {
        self.cols.nrows()
    }
    pub fn k(&self) -> usize {
        self.cols.ncols()
    }

    /// Orthogonal projector onto the span.
    pub fn projector(&self) -> Mat {
        &self.cols * self.cols.transpose()
    }

    /// `g·W`, re-orthonormalized. Fails if `g` collapses the subspace.
    pub fn transformed(&self, g: &Mat) -> Result<Self> {
        if g.ncols() != self.ambient_dim() {
            return Err(LinalgError::DimensionMismatch { expected: self.ambient_dim(), found: g.ncols() });
        }
        let m = g * &self.cols;
        let scale = m.norm().max(f64::MIN_POSITIVE);
        Self::from_columns(&(m / scale), RANK_CUTOFF)
    }

    /// Span equality: all principal angles vanish within `tol`.
    pub fn span_eq(&self, other: &Frame, tol: f64) -> bool {
        self.k() == other.k()
            && self.ambient_dim() == other.ambient_dim()
            && crate::angles::contains(self, other, tol)
    }

    /// Sum of two subspaces.
    pub fn sum(&self, other: &Frame) -> Result<Frame> {
        if self.ambient_dim() != other.ambient_dim() {
            return Err(LinalgError::DimensionMismatch { expected: self.ambient_dim(), found: other.ambient_dim() });
        }
        let mut m = Mat::zeros(self.ambient_dim(), self.k() + other.k());
        m.view_mut((0, 0), (self.ambient_dim(), self.k())).copy_from(&self.cols);
        m.view_mut((0, self.k()), (self.ambient_dim(), other.k())).copy_from(&other.cols);
        Self::orthonormalize(&m)
    }

    /// First `i` columns as a frame.
    pub fn leading(&self, i: usize) -> Frame {
        Self { cols: self.cols.columns(0, i.min(self.k())).into_owned() }
    }
}

pub(crate) fn orthonormality_defect(c: &Mat) -> f64 {
    let k = c.ncols();
    (c.transpose() * c - Mat::identity(k, k)).amax()
}

fn column_space(m: &Mat, tol: f64) -> Frame {
    let n = m.nrows();
    if m.ncols() == 0 || n == 0 {
        return Frame::empty(n);
    }
    let svd = crate::svd::svd(m);
    let u = svd.u.expect("left singular vectors requested");
    let smax = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    if smax == 0.0 {
        return Frame::empty(n);
    }
    let idx: Vec<usize> = (0..svd.singular_values.len())
        .filter(|&j| svd.singular_values[j] > tol * smax)
        .collect();
    let mut c = Mat::zeros(n, idx.len());
    for (col, &j) in idx.iter().enumerate() {
        c.set_column(col, &u.column(j));
    }
    Frame { cols: c }
}

/// An isotropic subspace of a quadratic space: a point of an isotropic flag variety.
#[derive(Debug, Clone, PartialEq)]
pub struct FlagPoint {
    frame: Frame,
    form: WittForm,
}

impl FlagPoint {
    /// Checks `‖Wᵀ·gram·W‖ ≤ tol` (frame columns and the Witt Gram matrix are normalized).
    pub fn new(frame: Frame, form: WittForm, tol: f64) -> Result<Self> {
        if frame.ambient_dim() != form.dim() {
            return Err(LinalgError::DimensionMismatch { expected: form.dim(), found: frame.ambient_dim() });
        }
        let c = frame.columns();
        let residual = (c.transpose() * form.gram() * c).amax();
        if residual > tol {
            return Err(LinalgError::NotIsotropic { residual });
        }
        Ok(Self { frame, form })
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }
    pub fn form(&self) -> &WittForm {
        &self.form
    }
    pub fn iso_dim(&self) -> usize {
        self.frame.k()
    }
    pub fn into_frame(self) -> Frame {
        self.frame
    }
}
