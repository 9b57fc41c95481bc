//! Exterior powers `Λ^i g` in the lexicographic basis `e_I`, `I` an increasing `i`-subset.

use ano_linalg::Mat;

use crate::{CartanError, Result};

/// Increasing `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Matrix of `Λ^degree g`: entry `(I, J)` is the minor `det g[I, J]`.
pub fn exterior_power(g: &Mat, degree: usize) -> Result<Mat> {
    let n = g.nrows();
    if g.ncols() != n {
        return Err(CartanError::Shape { expected: n, rows: n, cols: g.ncols() });
    }
    if degree == 0 || degree > n {
        return Err(CartanError::Degree { degree, dim: n });
    }
    let idx = subsets(n, degree);
    let mut out = Mat::zeros(idx.len(), idx.len());
    let mut minor = Mat::zeros(degree, degree);
    for (a, rows) in idx.iter().enumerate() {
        for (b, cols) in idx.iter().enumerate() {
            for (r, &i) in rows.iter().enumerate() {
                for (c, &j) in cols.iter().enumerate() {
                    minor[(r, c)] = g[(i, j)];
                }
            }
            out[(a, b)] = minor.clone().lu().determinant();
        }
    }
    Ok(out)
}
