//! Symmetric bilinear forms in Witt normal form.

use nalgebra::SymmetricEigen;
use serde::{Deserialize, Serialize};

use crate::frame::Frame;
use crate::{LinalgError, Mat, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Real,
    Complex,
}

/// A nondegenerate symmetric form of signature `(p, q)` written in a Witt
/// basis: the first and last `q` coordinates are paired antidiagonally, the
/// middle `p - q` coordinates carry the identity.
///
/// For `Field::Complex` the same real Gram matrix holds the coefficients of
/// a complex bilinear form on `C^n`; [`WittForm::realified_re`] and
/// [`WittForm::realified_im`] give its real and imaginary parts on `R^{2n}`.
#[derive(Debug, Clone, PartialEq)]
pub struct WittForm {
    p: usize,
    q: usize,
    field: Field,
    gram: Mat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Signature {
    pub pos: usize,
    pub neg: usize,
    pub null: usize,
}

impl WittForm {
    pub fn new(p: usize, q: usize, field: Field) -> Result<Self> {
        if p < q || p + q == 0 {
            return Err(LinalgError::InvalidSignature { p, q });
        }
        let n = p + q;
        let mut gram = Mat::zeros(n, n);
        for i in 0..q {
            gram[(i, n - 1 - i)] = 1.0;
            gram[(n - 1 - i, i)] = 1.0;
        }
        for i in q..p {
            gram[(i, i)] = 1.0;
        }
        Ok(Self { p, q, field, gram })
    }

    pub fn real(p: usize, q: usize) -> Result<Self> {
        Self::new(p, q, Field::Real)
    }

    /// The complex form on `C^n` with maximal Witt index.
    pub fn complex(n: usize) -> Result<Self> {
        Self::new(n - n / 2, n / 2, Field::Complex)
    }

    pub fn p(&self) -> usize {
        self.p
    }
    pub fn q(&self) -> usize {
        self.q
    }
    pub fn dim(&self) -> usize {
        self.p + self.q
    }
    pub fn field(&self) -> Field {
        self.field
    }
    pub fn gram(&self) -> &Mat {
        &self.gram
    }

    pub fn eval(&self, x: &crate::Vector, y: &crate::Vector) -> f64 {
        x.dot(&(&self.gram * y))
    }

    /// Orthogonal change of basis `P` with `Pᵀ·gram·P = diag(I_p, -I_q)`.
    ///
    /// Columns: `(e_i + e_{n+1-i})/√2` for `i ≤ q`, then the middle block,
    /// then `(e_i - e_{n+1-i})/√2` for `i ≤ q`.
    pub fn pm_basis(&self) -> Mat {
        let (p, q, n) = (self.p, self.q, self.dim());
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let mut m = Mat::zeros(n, n);
        for i in 0..q {
            m[(i, i)] = s;
            m[(n - 1 - i, i)] = s;
            m[(i, p + i)] = s;
            m[(n - 1 - i, p + i)] = -s;
        }
        for i in q..p {
            m[(i, i)] = 1.0;
        }
        m
    }

    /// Coordinate weights of the Witt basis: `+1` for the first `q`
    /// coordinates, `0` in the middle, `-1` for the last `q`.
    pub fn witt_weight(&self, i: usize) -> i32 {
        if i < self.q {
            1
        } else if i >= self.p {
            -1
        } else {
            0
        }
    }

    /// The Witt-basis index paired with `i` (itself for middle coordinates).
    pub fn partner(&self, i: usize) -> usize {
        let n = self.dim();
        if i < self.q || i >= self.p {
            n - 1 - i
        } else {
            i
        }
    }

    /// `‖gᵀ·gram·g − gram‖ / max(1, ‖g‖²)` in Frobenius norm.
    pub fn preservation_defect(&self, g: &Mat) -> Result<f64> {
        self.check_square(g)?;
        let r = g.transpose() * &self.gram * g - &self.gram;
        Ok(r.norm() / g.norm_squared().max(1.0))
    }

    /// Same test for the complex bilinear form (plain transpose, no conjugate).
    pub fn complex_preservation_defect(&self, g: &crate::CMat) -> Result<f64> {
        if g.nrows() != self.dim() || g.ncols() != self.dim() {
            return Err(LinalgError::DimensionMismatch { expected: self.dim(), found: g.nrows() });
        }
        let gc = self.gram.map(|x| num_complex::Complex64::new(x, 0.0));
        let r = g.transpose() * &gc * g - &gc;
        Ok(r.norm() / g.norm_squared().max(1.0))
    }

    fn check_square(&self, g: &Mat) -> Result<()> {
        if g.nrows() != self.dim() || g.ncols() != self.dim() {
            return Err(LinalgError::DimensionMismatch { expected: self.dim(), found: g.nrows() });
        }
        Ok(())
    }

    /// Frame of the `b`-orthogonal complement of a subspace.
    pub fn orthogonal_complement(&self, w: &Frame) -> Result<Frame> {
        if w.ambient_dim() != self.dim() {
            return Err(LinalgError::DimensionMismatch { expected: self.dim(), found: w.ambient_dim() });
        }
        let gw = &self.gram * w.columns();
        Ok(Frame::euclidean_complement_of(&gw))
    }

    /// Real part of the complexified form on `R^{2n}`, coordinates `(x, y)` for `x + iy`.
    pub fn realified_re(&self) -> Mat {
        let n = self.dim();
        let mut m = Mat::zeros(2 * n, 2 * n);
        m.view_mut((0, 0), (n, n)).copy_from(&self.gram);
        m.view_mut((n, n), (n, n)).copy_from(&(-&self.gram));
        m
    }

    /// Imaginary part of the complexified form on `R^{2n}`.
    pub fn realified_im(&self) -> Mat {
        let n = self.dim();
        let mut m = Mat::zeros(2 * n, 2 * n);
        m.view_mut((0, n), (n, n)).copy_from(&self.gram);
        m.view_mut((n, 0), (n, n)).copy_from(&self.gram);
        m
    }
}

/// Matrix of multiplication by `i` on `R^{2n}`.
pub fn complex_structure(n: usize) -> Mat {
    let mut j = Mat::zeros(2 * n, 2 * n);
    for i in 0..n {
        j[(n + i, i)] = 1.0;
        j[(i, n + i)] = -1.0;
    }
    j
}

fn symmetry_defect(m: &Mat) -> f64 {
    (m - m.transpose()).norm()
}

/// Eigenvalue counts of a symmetric matrix relative to `tol·‖m‖₂`.
pub fn signature(m: &Mat, tol: f64) -> Result<Signature> {
    if m.nrows() != m.ncols() {
        return Err(LinalgError::DimensionMismatch { expected: m.nrows(), found: m.ncols() });
    }
    let scale = m.norm();
    let asym = symmetry_defect(m);
    if asym > tol * scale.max(1.0) {
        return Err(LinalgError::NotSymmetric { asymmetry: asym });
    }
    if m.nrows() == 0 {
        return Ok(Signature { pos: 0, neg: 0, null: 0 });
    }
    let sym = (m + m.transpose()) * 0.5;
    let eig = SymmetricEigen::new(sym).eigenvalues;
    let norm2 = eig.iter().fold(0.0_f64, |a, &x| a.max(x.abs()));
    let thr = tol * norm2;
    let mut s = Signature { pos: 0, neg: 0, null: 0 };
    for &e in eig.iter() {
        if e > thr {
            s.pos += 1;
        } else if e < -thr {
            s.neg += 1;
        } else {
            s.null += 1;
        }
    }
    Ok(s)
}

/// Restriction of a symmetric form to a subspace, together with a frame of
/// its kernel. Null directions are eigenvalues of modulus at most `tol`
/// (the form's Gram matrix and the frame are both normalized).
pub fn restrict_gram(gram: &Mat, w: &Frame, tol: f64) -> Result<(Mat, Frame)> {
    if w.ambient_dim() != gram.nrows() {
        return Err(LinalgError::DimensionMismatch { expected: gram.nrows(), found: w.ambient_dim() });
    }
    let c = w.columns();
    let r = c.transpose() * gram * c;
    let r = (&r + r.transpose()) * 0.5;
    let k = r.nrows();
    if k == 0 {
        return Ok((r, Frame::empty(w.ambient_dim())));
    }
    let eig = SymmetricEigen::new(r.clone());
    let idx: Vec<usize> = (0..k).filter(|&j| eig.eigenvalues[j].abs() <= tol).collect();
    let mut null = Mat::zeros(k, idx.len());
    for (col, &j) in idx.iter().enumerate() {
        null.set_column(col, &eig.eigenvectors.column(j));
    }
    let kernel = Frame::orthonormalize(&(c * null))?;
    Ok((r, kernel))
}

/// [`restrict_gram`] for a Witt form.
pub fn restrict_kernel(form: &WittForm, w: &Frame, tol: f64) -> Result<(Mat, Frame)> {
    restrict_gram(form.gram(), w, tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witt_21_gram() {
        let f = WittForm::real(2, 1).unwrap();
        let expect = Mat::from_row_slice(3, 3, &[0., 0., 1., 0., 1., 0., 1., 0., 0.]);
        assert_eq!(f.gram(), &expect);
        assert_eq!(WittForm::real(1, 0).unwrap().gram(), &Mat::identity(1, 1));
    }

    #[test]
    fn rejects_p_less_than_q() {
        assert!(matches!(WittForm::real(1, 2), Err(LinalgError::InvalidSignature { .. })));
        assert!(WittForm::real(0, 0).is_err());
    }

    #[test]
    fn pm_basis_diagonalizes() {
        for (p, q) in [(2, 1), (3, 2), (4, 1), (3, 3), (5, 0)] {
            let f = WittForm::real(p, q).unwrap();
            let pm = f.pm_basis();
            let d = pm.transpose() * f.gram() * &pm;
            let mut e = Mat::zeros(p + q, p + q);
            for i in 0..p {
                e[(i, i)] = 1.0;
            }
            for i in p..p + q {
                e[(i, i)] = -1.0;
            }
            assert!((d - e).norm() < 1e-14);
            assert!((pm.transpose() * &pm - Mat::identity(p + q, p + q)).norm() < 1e-14);
        }
    }

    #[test]
    fn signature_examples() {
        let s = signature(&Mat::identity(3, 3), 1e-9).unwrap();
        assert_eq!((s.pos, s.neg, s.null), (3, 0, 0));
        let s = signature(WittForm::real(2, 1).unwrap().gram(), 1e-9).unwrap();
        assert_eq!((s.pos, s.neg, s.null), (2, 1, 0));
        let s = signature(&Mat::zeros(2, 2), 1e-9).unwrap();
        assert_eq!((s.pos, s.neg, s.null), (0, 0, 2));
    }

    #[test]
    fn signature_rejects_asymmetric() {
        let m = Mat::from_row_slice(2, 2, &[1., 2., 0., 1.]);
        assert!(matches!(signature(&m, 1e-9), Err(LinalgError::NotSymmetric { .. })));
    }

    #[test]
    fn restrict_examples() {
        let f = WittForm::real(2, 1).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let w = Frame::from_columns(&Mat::from_column_slice(3, 1, &[s, 0., -s]), 1e-12).unwrap();
        let (r, k) = restrict_kernel(&f, &w, 1e-9).unwrap();
        assert!((r[(0, 0)] + 1.0).abs() < 1e-14);
        assert_eq!(k.k(), 0);
        let w = Frame::from_columns(&Mat::from_column_slice(3, 1, &[1., 0., 0.]), 1e-12).unwrap();
        let (r, k) = restrict_kernel(&f, &w, 1e-9).unwrap();
        assert_eq!(r[(0, 0)], 0.0);
        assert!(k.span_eq(&w, 1e-12));
    }

    #[test]
    fn restrict_dimension_mismatch() {
        let f = WittForm::real(2, 1).unwrap();
        let w = Frame::from_columns(&Mat::identity(4, 1), 1e-12).unwrap();
        assert!(restrict_kernel(&f, &w, 1e-9).is_err());
    }

    #[test]
    fn realified_parts_match_complex_form() {
        use num_complex::Complex64 as C;
        let f = WittForm::complex(3).unwrap();
        let x = [C::new(0.3, -1.0), C::new(2.0, 0.5), C::new(-0.7, 0.1)];
        let y = [C::new(1.1, 0.2), C::new(-0.4, 0.9), C::new(0.6, -0.3)];
        let mut bc = C::new(0.0, 0.0);
        for i in 0..3 {
            for j in 0..3 {
                bc += x[i] * f.gram()[(i, j)] * y[j];
            }
        }
        let rx = crate::Vector::from_iterator(6, x.iter().map(|c| c.re).chain(x.iter().map(|c| c.im)));
        let ry = crate::Vector::from_iterator(6, y.iter().map(|c| c.re).chain(y.iter().map(|c| c.im)));
        assert!((rx.dot(&(f.realified_re() * &ry)) - bc.re).abs() < 1e-12);
        assert!((rx.dot(&(f.realified_im() * &ry)) - bc.im).abs() < 1e-12);
        let j = complex_structure(3);
        assert!((&j * &j + Mat::identity(6, 6)).norm() < 1e-15);
    }
}
