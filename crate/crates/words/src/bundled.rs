//! Built-in generator sets in `O(2,1)` (Witt basis).

use ano_linalg::{Mat, WittForm};

use crate::gens::Generators;
use crate::Result;

/// Translation length of the bundled Schottky generators.
pub const SCHOTTKY_TRANSLATION: f64 = 8.0;

fn form21() -> WittForm {
    WittForm::real(2, 1).expect("valid signature")
}

/// Rotation by `angle` in the definite plane spanned by `(e1 + e3)/√2` and `e2`.
pub fn definite_rotation(angle: f64) -> Mat {
    let form = form21();
    let (s, c) = angle.sin_cos();
    let mut r = Mat::identity(3, 3);
    r[(0, 0)] = c;
    r[(0, 1)] = -s;
    r[(1, 0)] = s;
    r[(1, 1)] = c;
    let pm = form.pm_basis();
    &pm * r * pm.transpose()
}

/// `diag(e^t, 1, e^-t)`.
pub fn hyperbolic(t: f64) -> Mat {
    Mat::from_diagonal(&nalgebra::DVector::from_vec(vec![t.exp(), 1.0, (-t).exp()]))
}

/// Ping-pong pair `a = diag(e^t, 1, e^-t)`, `b = k·a·k⁻¹` with `k` a quarter
/// turn of the definite plane; the four fixed points on the conic are far apart.
pub fn schottky_with(t: f64) -> Result<Generators> {
    let a = hyperbolic(t);
    let k = definite_rotation(std::f64::consts::FRAC_PI_2);
    let b = &k * &a * k.transpose();
    Generators::new(vec![("a".into(), a), ("b".into(), b)])
}

pub fn schottky() -> Result<Generators> {
    schottky_with(SCHOTTKY_TRANSLATION)
}

/// Non-discrete control: a rotation by one radian (an irrational multiple of π)
/// together with a hyperbolic element.
pub fn mixed() -> Result<Generators> {
    Generators::new(vec![("r".into(), definite_rotation(1.0)), ("h".into(), hyperbolic(1.0))])
}

/// Looks up a bundled set by name.
pub fn by_name(name: &str) -> Option<Result<Generators>> {
    match name {
        "schottky" => Some(schottky()),
        "mixed" => Some(mixed()),
        _ => None,
    }
}
