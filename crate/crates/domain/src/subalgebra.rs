//! Points `r_θ = k_θ ⊕ u_θ` of the subalgebra compactification.

use ano_cartan::{AlgebraTag, LieAlgebra};
use ano_linalg::{contains, intersects, Frame, Mat, Signature};
use ano_roots::ThetaSet;
use nalgebra::SymmetricEigen;
use serde::Serialize;

use crate::{DomainError, Result};

#[derive(Debug, Clone)]
pub struct SubalgebraPoint {
    pub algebra: AlgebraTag,
    pub theta: ThetaSet,
    /// `r_θ`, in the algebra's coordinates.
    pub basis: Frame,
    pub k_theta: Frame,
    pub u_theta: Frame,
}

fn in_levi(theta: &ThetaSet, w: &[i64]) -> bool {
    theta.iter().all(|i| w[i] == 0)
}

/// Builds `k_θ` (compact part of the Levi factor, i.e. weight zero plus
/// roots supported on `Δ∖θ`) and `u_θ` (positive roots involving `θ`).
/// For `θ = ∅` this is the maximal compact subalgebra.
pub fn subalgebra_point(alg: &LieAlgebra, theta: &ThetaSet) -> Result<SubalgebraPoint> {
    let rank = alg.root_system().rank();
    if theta.rank() != rank {
        return Err(DomainError::ThetaRank { expected: rank, found: theta.rank() });
    }
    let levi = alg.weight_span(|w| in_levi(theta, w));
    let k_theta = alg.antisymmetrize(&levi)?;
    let u_theta = alg.weight_span(|w| {
        w.iter().all(|&c| c >= 0) && w.iter().any(|&c| c > 0) && !in_levi(theta, w)
    });
    let basis = k_theta.sum(&u_theta)?;
    Ok(SubalgebraPoint { algebra: alg.tag(), theta: theta.clone(), basis, k_theta, u_theta })
}

/// Restriction of the Killing form to a subspace of the algebra.
pub fn restricted_killing(alg: &LieAlgebra, w: &Frame) -> Mat {
    let k = alg.killing().gram;
    let c = w.columns();
    let r = c.transpose() * k * c;
    (&r + r.transpose()) * 0.5
}

/// Signature of `κ|_W`, with null eigenvalues decided relative to `‖κ‖`.
pub fn killing_signature(alg: &LieAlgebra, w: &Frame, tol: f64) -> Signature {
    let full = alg.killing().gram;
    let scale = SymmetricEigen::new(full).eigenvalues.amax();
    let r = restricted_killing(alg, w);
    let mut s = Signature { pos: 0, neg: 0, null: 0 };
    if r.nrows() == 0 {
        return s;
    }
    for &e in SymmetricEigen::new(r).eigenvalues.iter() {
        if e > tol * scale {
            s.pos += 1;
        } else if e < -tol * scale {
            s.neg += 1;
        } else {
            s.null += 1;
        }
    }
    s
}

/// Kernel of `κ|_W` as a subspace of the algebra.
pub fn killing_kernel(alg: &LieAlgebra, w: &Frame, tol: f64) -> Result<Frame> {
    let scale = SymmetricEigen::new(alg.killing().gram).eigenvalues.amax();
    let r = restricted_killing(alg, w);
    if r.nrows() == 0 {
        return Ok(Frame::empty(alg.dim()));
    }
    let eig = SymmetricEigen::new(r);
    let idx: Vec<usize> = (0..eig.eigenvalues.len()).filter(|&j| eig.eigenvalues[j].abs() <= tol * scale).collect();
    let mut m = Mat::zeros(w.k(), idx.len());
    for (c, &j) in idx.iter().enumerate() {
        m.set_column(c, &eig.eigenvectors.column(j));
    }
    Ok(Frame::orthonormalize(&(w.columns() * m))?)
}

/// Largest component of a bracket of basis elements outside the span.
pub fn bracket_residual(alg: &LieAlgebra, w: &Frame) -> f64 {
    let c = w.columns();
    let elems: Vec<Mat> = (0..w.k()).map(|j| alg.element(&c.column(j).into_owned())).collect();
    let mut worst = 0.0_f64;
    for i in 0..elems.len() {
        for j in i + 1..elems.len() {
            let b = alg.coords(&LieAlgebra::bracket(&elems[i], &elems[j]));
            let out = &b - c * (c.transpose() * &b);
            worst = worst.max(out.norm());
        }
    }
    worst
}

impl SubalgebraPoint {
    /// `Ad(g)·r_θ`.
    pub fn translate(&self, alg: &LieAlgebra, g: &Mat) -> Result<Frame> {
        Ok(self.basis.transformed(&alg.adjoint(g)?)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NilpotentIncidence {
    pub intersects: bool,
    pub contains: bool,
    /// `L ⊂ Ker(κ|_W)`.
    pub in_kernel: bool,
    /// Intersection forces containment.
    pub holds: bool,
}

/// For `L` spanned by ad-nilpotent elements: evaluates whether meeting `W`
/// forces `L ⊂ W` (and records whether `L` even lies in the kernel of `κ|_W`).
pub fn nilpotent_incidence_check(alg: &LieAlgebra, w: &Frame, l: &Frame, tol: f64) -> Result<NilpotentIncidence> {
    let d = alg.dim();
    for j in 0..l.k() {
        let a = alg.ad(&alg.element(&l.columns().column(j).into_owned()));
        let scale = a.norm().max(f64::MIN_POSITIVE);
        let unit = &a / scale;
        let mut p = Mat::identity(d, d);
        for _ in 0..d {
            p = &p * &unit;
        }
        let residual = p.norm();
        if residual > tol {
            return Err(DomainError::NotNilpotent { index: j, residual });
        }
    }
    let meets = intersects(l, w, tol);
    let inside = contains(l, w, tol);
    let in_kernel = contains(l, &killing_kernel(alg, w, tol)?, tol.sqrt());
    Ok(NilpotentIncidence { intersects: meets, contains: inside, in_kernel, holds: !meets || inside })
}
