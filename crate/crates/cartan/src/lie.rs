//! Real semisimple matrix Lie algebras `sl_n` and `o(p,q)` with root-space bases.

use std::collections::BTreeMap;

use ano_linalg::{Frame, Mat, Vector, WittForm};
use ano_roots::RootSystem;
use nalgebra::SVD;
use serde::{Deserialize, Serialize};

use crate::group::Group;
use crate::kak::kak;
use crate::{CartanError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraTag {
    /// `sl_n(R)`, `2 ≤ n ≤ 4`.
    Sl(usize),
    /// `o(p,q)` in the Witt basis, `p ≥ q ≥ 1`, `p + q ≤ 5`, not `(1,1)`.
    O(usize, usize),
}

impl std::fmt::Display for AlgebraTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AlgebraTag::Sl(n) => write!(f, "sl{n}"),
            AlgebraTag::O(p, q) => write!(f, "o({p},{q})"),
        }
    }
}

/// Raw trace form `κ(X, Y) = tr(ad X ∘ ad Y)` in the algebra's basis.
#[derive(Debug, Clone)]
pub struct KillingForm {
    pub algebra: AlgebraTag,
    pub gram: Mat,
    /// Dimension of the maximal compact subalgebra.
    pub dim_k: usize,
}

/// A Lie algebra with a Frobenius-orthonormal basis adapted to the
/// restricted root decomposition.
#[derive(Debug, Clone)]
pub struct LieAlgebra {
    tag: AlgebraTag,
    group: Group,
    rs: RootSystem,
    basis: Vec<Mat>,
    /// Restricted weight of each basis element in simple-root coordinates.
    weights: Vec<Vec<i64>>,
}

impl LieAlgebra {
    pub fn new(tag: AlgebraTag) -> Result<Self> {
        let unsupported = || CartanError::Unsupported(format!("Lie algebra {tag}"));
        let (group, n) = match tag {
            AlgebraTag::Sl(n) if (2..=4).contains(&n) => (Group::Gl(n), n),
            AlgebraTag::O(p, q) if q >= 1 && p >= q && p + q <= 5 && (p, q) != (1, 1) => {
                (Group::Opq(WittForm::real(p, q)?), p + q)
            }
            _ => return Err(unsupported()),
        };
        let rs = group.root_system()?;
        // ε-weight of the matrix unit E_ij.
        let coord_weight = |i: usize| -> Vec<i64> {
            match &group {
                Group::Opq(f) => {
                    let mut w = vec![0; f.q()];
                    if i < f.q() {
                        w[i] = 1;
                    } else if i >= f.p() {
                        w[n - 1 - i] = -1;
                    }
                    w
                }
                _ => (0..n).map(|k| (k == i) as i64).collect(),
            }
        };
        let mut groups: BTreeMap<Vec<i64>, Vec<(usize, usize)>> = BTreeMap::new();
        for i in 0..n {
            for j in 0..n {
                let w: Vec<i64> = coord_weight(i).iter().zip(coord_weight(j)).map(|(a, b)| a - b).collect();
                groups.entry(w).or_default().push((i, j));
            }
        }
        let mut keyed: Vec<(Vec<i64>, Vec<Mat>)> = Vec::new();
        for (eps_w, cells) in groups {
            let coeffs = simple_coordinates(&rs, &eps_w)?;
            let mats = match &group {
                Group::Opq(f) => constrained_space(&cells, n, |x| x.transpose() * f.gram() + f.gram() * x),
                _ => constrained_space(&cells, n, |x| Mat::from_element(1, 1, x.trace())),
            };
            if !mats.is_empty() {
                keyed.push((coeffs, mats));
            }
        }
        keyed.sort_by(|a, b| {
            let (ha, hb) = (a.0.iter().sum::<i64>(), b.0.iter().sum::<i64>());
            hb.cmp(&ha).then_with(|| b.0.cmp(&a.0))
        });
        let mut basis = Vec::new();
        let mut weights = Vec::new();
        for (w, mats) in keyed {
            for m in mats {
                basis.push(m);
                weights.push(w.clone());
            }
        }
        Ok(Self { tag, group, rs, basis, weights })
    }

    pub fn tag(&self) -> AlgebraTag {
        self.tag
    }

    /// Group whose Cartan decomposition matches the algebra.
    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    /// Size of the defining matrices.
    pub fn matrix_dim(&self) -> usize {
        self.group.dim()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Mat] {
        &self.basis
    }

    pub fn weight(&self, j: usize) -> &[i64] {
        &self.weights[j]
    }

    pub fn coords(&self, x: &Mat) -> Vector {
        Vector::from_iterator(self.dim(), self.basis.iter().map(|b| b.dot(x)))
    }

    pub fn element(&self, c: &Vector) -> Mat {
        let n = self.matrix_dim();
        self.basis.iter().zip(c.iter()).fold(Mat::zeros(n, n), |acc, (b, &s)| acc + b * s)
    }

    pub fn bracket(x: &Mat, y: &Mat) -> Mat {
        x * y - y * x
    }

    /// Matrix of `ad X` in the basis.
    pub fn ad(&self, x: &Mat) -> Mat {
        let d = self.dim();
        let mut m = Mat::zeros(d, d);
        for (j, b) in self.basis.iter().enumerate() {
            m.set_column(j, &self.coords(&Self::bracket(x, b)));
        }
        m
    }

    pub fn killing(&self) -> KillingForm {
        let ads: Vec<Mat> = self.basis.iter().map(|b| self.ad(b)).collect();
        let d = self.dim();
        let gram = Mat::from_fn(d, d, |i, j| (&ads[i] * &ads[j]).trace());
        KillingForm { algebra: self.tag, gram, dim_k: self.compact_subalgebra().k() }
    }

    /// Matrix of `Ad_g` in the basis. `g` must be invertible.
    pub fn adjoint(&self, g: &Mat) -> Result<Mat> {
        let gi = g.clone().try_inverse().ok_or(CartanError::Singular { condition: f64::INFINITY })?;
        let d = self.dim();
        let mut m = Mat::zeros(d, d);
        for (j, b) in self.basis.iter().enumerate() {
            m.set_column(j, &self.coords(&(g * b * &gi)));
        }
        Ok(m)
    }

    /// Span (in coordinates) of the basis elements whose weight satisfies `pred`.
    pub fn weight_span(&self, pred: impl Fn(&[i64]) -> bool) -> Frame {
        let idx: Vec<usize> = (0..self.dim()).filter(|&j| pred(&self.weights[j])).collect();
        let mut m = Mat::zeros(self.dim(), idx.len());
        for (c, &j) in idx.iter().enumerate() {
            m[(j, c)] = 1.0;
        }
        Frame::from_orthonormal(m).expect("coordinate unit vectors")
    }

    /// Image of a coordinate subspace under `X ↦ (X − Xᵀ)/2`.
    pub fn antisymmetrize(&self, f: &Frame) -> Result<Frame> {
        let d = self.dim();
        let mut m = Mat::zeros(d, f.k());
        for j in 0..f.k() {
            let x = self.element(&f.columns().column(j).into_owned());
            m.set_column(j, &self.coords(&((&x - x.transpose()) * 0.5)));
        }
        Ok(Frame::orthonormalize(&m)?)
    }

    /// The maximal compact subalgebra (antisymmetric matrices in the algebra).
    pub fn compact_subalgebra(&self) -> Frame {
        let all = Frame::from_orthonormal(Mat::identity(self.dim(), self.dim())).expect("identity");
        self.antisymmetrize(&all).expect("orthonormalization of a finite matrix")
    }

    /// The root space of the highest root.
    pub fn highest_root_space(&self) -> Frame {
        let top = self.rs.highest_root();
        self.weight_span(|w| w == top.as_slice())
    }

    /// `Ad(k_g)` applied to the highest root space: the adjoint flag of `g`.
    pub fn adjoint_flag(&self, g: &Mat) -> Result<Frame> {
        let t = kak(g, &self.group)?;
        let k = t.k.as_real().expect("real groups have real compact factors");
        let ad = self.adjoint(k)?;
        Ok(self.highest_root_space().transformed(&ad)?)
    }
}

/// `Ad_g` and the Killing form.
pub fn adjoint_rep(g: &Mat, alg: &LieAlgebra) -> Result<(Mat, KillingForm)> {
    Ok((alg.adjoint(g)?, alg.killing()))
}

/// Simple-root coordinates of an ε-weight (the zero vector for weight 0).
fn simple_coordinates(rs: &RootSystem, eps_w: &[i64]) -> Result<Vec<i64>> {
    let eps = rs.epsilon().ok_or_else(|| CartanError::Unsupported(format!("ε-coordinates for {}", rs.label())))?;
    let r = rs.rank();
    let e = Mat::from_fn(eps_w.len(), r, |k, j| eps[j][k] as f64);
    let w = Vector::from_iterator(eps_w.len(), eps_w.iter().map(|&x| x as f64));
    let sol = SVD::new(e.clone(), true, true).solve(&w, 1e-12).map_err(|e| CartanError::Unsupported(e.to_string()))?;
    let c: Vec<i64> = sol.iter().map(|x| x.round() as i64).collect();
    let back = e * Vector::from_iterator(r, c.iter().map(|&x| x as f64));
    if (back - w).norm() > 1e-9 {
        return Err(CartanError::Unsupported(format!("weight {eps_w:?} outside the root lattice of {}", rs.label())));
    }
    Ok(c)
}

/// Orthonormal basis of matrices supported on `cells` and killed by `constraint`.
fn constrained_space(cells: &[(usize, usize)], n: usize, constraint: impl Fn(&Mat) -> Mat) -> Vec<Mat> {
    let unit = |&(i, j): &(usize, usize)| {
        let mut x = Mat::zeros(n, n);
        x[(i, j)] = 1.0;
        x
    };
    let images: Vec<Mat> = cells.iter().map(|c| constraint(&unit(c))).collect();
    let rows = images[0].len();
    let m = Mat::from_fn(rows, cells.len(), |r, c| images[c].as_slice()[r]);
    // Null space from the eigen-decomposition of MᵀM; cells are orthonormal
    // coordinates, so the result is Frobenius-orthonormal.
    let eig = nalgebra::SymmetricEigen::new(m.transpose() * &m);
    let mut idx: Vec<usize> = (0..cells.len()).filter(|&j| eig.eigenvalues[j].abs() < 1e-10).collect();
    idx.sort();
    let null = Mat::from_fn(cells.len(), idx.len(), |r, c| eig.eigenvectors[(r, idx[c])]);
    let null = if null.ncols() > 0 { canonical_basis(&null) } else { null };
    (0..null.ncols())
        .map(|j| cells.iter().enumerate().fold(Mat::zeros(n, n), |acc, (r, c)| acc + unit(c) * null[(r, j)]))
        .collect()
}

/// Deterministic orthonormal basis of a column space: reduced echelon form, then Gram-Schmidt.
fn canonical_basis(m: &Mat) -> Mat {
    let proj = m * m.transpose();
    let mut cols: Vec<Vector> = Vec::new();
    for i in 0..proj.ncols() {
        let mut v = proj.column(i).into_owned();
        for _ in 0..2 {
            for c in &cols {
                v -= c * c.dot(&v);
            }
        }
        let nrm = v.norm();
        if nrm > 1e-8 {
            cols.push(v / nrm);
        }
        if cols.len() == m.ncols() {
            break;
        }
    }
    Mat::from_columns(&cols)
}
