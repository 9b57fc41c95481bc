//! Singular value decomposition with a reconstruction check.
//!
//! nalgebra's bidiagonal SVD occasionally stops at singular values that are
//! off in the fourth digit while both factors stay orthogonal. Every result
//! here is checked against the input. A failing one is recomputed on the
//! adjoint and on reversed copies, and finally by one-sided Jacobi.

use nalgebra::{ComplexField, DMatrix, DVector, Dyn, SVD};

/// Relative Frobenius error `‖U Σ Vᴴ − A‖ / ‖A‖` accepted from a factorization.
pub const RECONSTRUCTION_TOL: f64 = 1e-12;

fn reconstruction_error<T: ComplexField<RealField = f64>>(a: &DMatrix<T>, s: &SVD<T, Dyn, Dyn>) -> f64 {
    let (Some(u), Some(vt)) = (&s.u, &s.v_t) else {
        return f64::INFINITY;
    };
    let mut us = u.clone();
    for (j, &sv) in s.singular_values.iter().enumerate() {
        us.column_mut(j).scale_mut(sv);
    }
    let k = s.singular_values.len();
    let scale = a.norm().max(f64::MIN_POSITIVE);
    let ortho = (u.adjoint() * u - DMatrix::identity(k, k)).norm() + (vt * vt.adjoint() - DMatrix::identity(k, k)).norm();
    let err = ((us * vt - a).norm() / scale).max(ortho);
    if err.is_finite() { err } else { f64::INFINITY }
}

fn reverse_rows<T: ComplexField>(m: &DMatrix<T>) -> DMatrix<T> {
    let r = m.nrows();
    DMatrix::from_fn(r, m.ncols(), |i, j| m[(r - 1 - i, j)].clone())
}

fn reverse_cols<T: ComplexField>(m: &DMatrix<T>) -> DMatrix<T> {
    let c = m.ncols();
    DMatrix::from_fn(m.nrows(), c, |i, j| m[(i, c - 1 - j)].clone())
}

/// Full thin SVD of `a` with both factors. Singular values are not sorted.
/// If no candidate passes the check, the most accurate one is returned.
pub fn svd<T: ComplexField<RealField = f64>>(a: &DMatrix<T>) -> SVD<T, Dyn, Dyn> {
    if a.is_empty() {
        return SVD {
            u: Some(DMatrix::zeros(a.nrows(), 0)),
            v_t: Some(DMatrix::zeros(0, a.ncols())),
            singular_values: DVector::zeros(0),
        };
    }
    let direct = SVD::new(a.clone(), true, true);
    let mut best_err = reconstruction_error(a, &direct);
    if best_err <= RECONSTRUCTION_TOL {
        return direct;
    }
    let mut best = direct;
    for attempt in 0..3 {
        let candidate = match attempt {
            0 => {
                let s = SVD::new(a.adjoint(), true, true);
                SVD {
                    u: s.v_t.map(|vt| vt.adjoint()),
                    v_t: s.u.map(|u| u.adjoint()),
                    singular_values: s.singular_values,
                }
            }
            1 => {
                let s = SVD::new(reverse_rows(a), true, true);
                SVD { u: s.u.map(|u| reverse_rows(&u)), ..s }
            }
            _ => {
                let s = SVD::new(reverse_cols(a), true, true);
                SVD { v_t: s.v_t.map(|vt| reverse_cols(&vt)), ..s }
            }
        };
        let err = reconstruction_error(a, &candidate);
        if err < best_err {
            best_err = err;
            best = candidate;
        }
        if best_err <= RECONSTRUCTION_TOL {
            return best;
        }
    }
    let candidate = jacobi_svd(a);
    if reconstruction_error(a, &candidate) < best_err {
        candidate
    } else {
        best
    }
}

/// One-sided (Hestenes) Jacobi SVD. Slow but accurate for any rank.
pub fn jacobi_svd<T: ComplexField<RealField = f64>>(a: &DMatrix<T>) -> SVD<T, Dyn, Dyn> {
    if a.nrows() < a.ncols() {
        let s = jacobi_svd(&a.adjoint());
        return SVD { u: s.v_t.map(|vt| vt.adjoint()), v_t: s.u.map(|u| u.adjoint()), singular_values: s.singular_values };
    }
    let (m, n) = (a.nrows(), a.ncols());
    let mut w = a.clone();
    let mut v = DMatrix::<T>::identity(n, n);
    for _sweep in 0..80 {
        let mut rotated = false;
        for i in 0..n {
            for j in i + 1..n {
                let alpha = w.column(i).norm_squared();
                let beta = w.column(j).norm_squared();
                let gamma = w.column(i).dotc(&w.column(j));
                let g = gamma.clone().modulus();
                if g == 0.0 || g <= f64::EPSILON * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                // Rotate column j's phase so that the pairing is real.
                let phase = gamma.unscale(g).conjugate();
                let zeta = (beta - alpha) / (2.0 * g);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for mat in [&mut w, &mut v] {
                    let ci = mat.column(i).into_owned();
                    let cj = mat.column(j) * phase.clone();
                    mat.set_column(i, &(&ci * T::from_real(c) - &cj * T::from_real(s)));
                    mat.set_column(j, &(&ci * T::from_real(s) + &cj * T::from_real(c)));
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let norms: Vec<f64> = (0..n).map(|j| w.column(j).norm()).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| norms[y].total_cmp(&norms[x]));
    let top = norms.iter().copied().fold(0.0, f64::max);
    let mut u = DMatrix::<T>::zeros(m, n);
    let mut vs = DMatrix::<T>::zeros(n, n);
    let mut sv = DVector::zeros(n);
    let mut filled = 0;
    for (dst, &src) in order.iter().enumerate() {
        sv[dst] = norms[src];
        vs.set_column(dst, &v.column(src));
        if norms[src] > top * f64::EPSILON * m as f64 && norms[src] > 0.0 {
            u.set_column(dst, &w.column(src).unscale(norms[src]));
            filled += 1;
        }
    }
    // Columns for null singular values: complete with standard basis vectors.
    let mut e = 0;
    for dst in filled..n {
        while e < m {
            let mut x = DVector::<T>::zeros(m);
            x[e] = T::one();
            e += 1;
            for _ in 0..2 {
                for k in 0..dst {
                    let p = u.column(k).dotc(&x);
                    x -= u.column(k) * p;
                }
            }
            let nx = x.norm();
            if nx > 0.5 {
                u.set_column(dst, &x.unscale(nx));
                break;
            }
        }
    }
    SVD { u: Some(u), v_t: Some(vs.adjoint()), singular_values: sv }
}

/// Singular values of `a`, in no particular order.
pub fn singular_values<T: ComplexField<RealField = f64>>(a: &DMatrix<T>) -> DVector<f64> {
    svd(a).singular_values
}
