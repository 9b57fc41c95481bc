//! JSON carriers: `{"rows", "cols", "data"}` with row-major data; forms add
//! `p`, `q` and `field`.

use serde::{Deserialize, Serialize};

use crate::form::{Field, WittForm};
use crate::{CMat, LinalgError, Mat, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<f64>,
    /// Imaginary parts for complex matrices, same layout as `data`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub imag: Option<Vec<f64>>,
}

impl MatrixJson {
    pub fn from_real(m: &Mat) -> Self {
        Self { rows: m.nrows(), cols: m.ncols(), data: row_major(m), imag: None }
    }

    pub fn from_complex(m: &CMat) -> Self {
        let re = m.map(|c| c.re);
        let im = m.map(|c| c.im);
        Self { rows: m.nrows(), cols: m.ncols(), data: row_major(&re), imag: Some(row_major(&im)) }
    }

    pub fn is_complex(&self) -> bool {
        self.imag.is_some()
    }

    pub fn to_real(&self) -> Result<Mat> {
        if self.imag.as_ref().is_some_and(|v| v.iter().any(|&x| x != 0.0)) {
            return Err(LinalgError::Malformed("expected a real matrix".into()));
        }
        self.check_len(self.data.len())?;
        Ok(Mat::from_row_slice(self.rows, self.cols, &self.data))
    }

    pub fn to_complex(&self) -> Result<CMat> {
        self.check_len(self.data.len())?;
        let zeros = vec![0.0; self.data.len()];
        let im = self.imag.as_deref().unwrap_or(&zeros);
        self.check_len(im.len())?;
        Ok(CMat::from_fn(self.rows, self.cols, |i, j| {
            num_complex::Complex64::new(self.data[i * self.cols + j], im[i * self.cols + j])
        }))
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.rows * self.cols {
            return Err(LinalgError::Malformed(format!(
                "{}x{} matrix needs {} entries, found {}",
                self.rows,
                self.cols,
                self.rows * self.cols,
                len
            )));
        }
        if self.data.iter().any(|x| !x.is_finite()) {
            return Err(LinalgError::Malformed("non-finite entry".into()));
        }
        Ok(())
    }
}

fn row_major(m: &Mat) -> Vec<f64> {
    let mut v = Vec::with_capacity(m.len());
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            v.push(m[(i, j)]);
        }
    }
    v
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FormJson {
    pub p: usize,
    pub q: usize,
    pub field: Field,
    #[serde(flatten)]
    pub gram: MatrixJson,
}

impl From<&WittForm> for FormJson {
    fn from(f: &WittForm) -> Self {
        Self { p: f.p(), q: f.q(), field: f.field(), gram: MatrixJson::from_real(f.gram()) }
    }
}

impl FormJson {
    /// Rebuilds the canonical form; the stored Gram matrix must match it.
    pub fn to_form(&self) -> Result<WittForm> {
        let f = WittForm::new(self.p, self.q, self.field)?;
        let g = self.gram.to_real()?;
        if g.shape() != f.gram().shape() || (&g - f.gram()).amax() > 1e-12 {
            return Err(LinalgError::Malformed("Gram matrix is not in Witt normal form".into()));
        }
        Ok(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_round_trip_is_row_major() {
        let m = Mat::from_row_slice(2, 3, &[1., 2., 3., 4., 5., 6.]);
        let j = MatrixJson::from_real(&m);
        assert_eq!(j.data, vec![1., 2., 3., 4., 5., 6.]);
        assert_eq!(j.to_real().unwrap(), m);
    }

    #[test]
    fn bad_length_rejected() {
        let j = MatrixJson { rows: 2, cols: 2, data: vec![1.0; 3], imag: None };
        assert!(j.to_real().is_err());
    }

    #[test]
    fn form_round_trip() {
        let f = WittForm::real(3, 2).unwrap();
        let j = FormJson::from(&f);
        assert_eq!(j.to_form().unwrap(), f);
    }
}
