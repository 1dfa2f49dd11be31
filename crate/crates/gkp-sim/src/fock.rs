use ndarray::Array2;
use num_complex::Complex64;

use crate::linalg::{dagger, CMat, CVec};
use crate::SimError;

/// Dense complex operator over a truncated number basis of dimension
/// `cutoff + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct FockOperator {
    mat: CMat,
}

impl FockOperator {
    pub fn new(mat: CMat) -> Result<Self, SimError> {
        if mat.nrows() != mat.ncols() {
            return Err(SimError::DimensionMismatch(format!(
                "Fock operator must be square, got {}x{}",
                mat.nrows(),
                mat.ncols()
            )));
        }
        if mat.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(SimError::InvalidParameter(
                "Fock operator has non-finite entries".into(),
            ));
        }
        Ok(Self { mat })
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn mat(&self) -> &CMat {
        &self.mat
    }

    pub fn into_mat(self) -> CMat {
        self.mat
    }

    pub fn trace(&self) -> Complex64 {
        self.mat.diag().sum()
    }

    /// Density-operator checks: unit trace to 1e-10, Hermiticity to 1e-12.
    pub fn check_density(&self) -> Result<(), SimError> {
        let tr = self.trace();
        if (tr.re - 1.0).abs() > 1e-10 || tr.im.abs() > 1e-10 {
            return Err(SimError::NotDensity(format!("trace is {tr}")));
        }
        let herm_dev = (&self.mat - &dagger(&self.mat))
            .iter()
            .map(|z| z.norm())
            .fold(0.0f64, f64::max);
        if herm_dev > 1e-12 {
            return Err(SimError::NotDensity(format!(
                "Hermiticity deviation {herm_dev:.3e}"
            )));
        }
        Ok(())
    }
}

/// Annihilation operator on a space of dimension `dim`.
pub fn annihilation(dim: usize) -> CMat {
    let mut a = Array2::zeros((dim, dim));
    for n in 1..dim {
        a[[n - 1, n]] = Complex64::new((n as f64).sqrt(), 0.0);
    }
    a
}

pub fn creation(dim: usize) -> CMat {
    dagger(&annihilation(dim))
}

pub fn number_op(dim: usize) -> CMat {
    let mut n = Array2::zeros((dim, dim));
    for k in 0..dim {
        n[[k, k]] = Complex64::new(k as f64, 0.0);
    }
    n
}

/// Normalized quadrature at angle `theta`:
/// `q_theta = -i (exp(i theta) a^dagger - exp(-i theta) a)`.
pub fn quadrature(dim: usize, theta: f64) -> CMat {
    let a = annihilation(dim);
    let adag = dagger(&a);
    let ph = Complex64::from_polar(1.0, theta);
    let mi = Complex64::new(0.0, -1.0);
    adag.mapv(|z| mi * ph * z) - a.mapv(|z| mi * ph.conj() * z)
}

/// Fock coefficients of the coherent state `|beta>` for complex `beta`,
/// computed in log space for stability at large `|beta|`.
pub fn coherent_vec(dim: usize, beta: Complex64) -> CVec {
    let mut v = CVec::zeros(dim);
    if beta.norm() == 0.0 {
        v[0] = Complex64::new(1.0, 0.0);
        return v;
    }
    let ln_mag = beta.norm().ln();
    let arg = beta.arg();
    let mut lgamma = 0.0f64; // ln(n!)
    for n in 0..dim {
        if n > 0 {
            lgamma += (n as f64).ln();
        }
        let ln_amp = -beta.norm_sqr() / 2.0 + n as f64 * ln_mag - 0.5 * lgamma;
        v[n] = Complex64::from_polar(ln_amp.exp(), arg * n as f64);
    }
    v
}

/// Outer product `|u><v|`.
pub fn outer(u: &CVec, v: &CVec) -> CMat {
    let n = u.len();
    let m = v.len();
    let mut out = CMat::zeros((n, m));
    for i in 0..n {
        for j in 0..m {
            out[[i, j]] = u[i] * v[j].conj();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutator_on_truncation() {
        let dim = 8;
        let a = annihilation(dim);
        let ad = creation(dim);
        let comm = a.dot(&ad) - ad.dot(&a);
        // [a, a^dagger] = 1 except in the top corner of the truncation.
        for i in 0..dim - 1 {
            assert!((comm[[i, i]] - Complex64::new(1.0, 0.0)).norm() < 1e-14);
        }
        assert!((comm[[dim - 1, dim - 1]] - Complex64::new(-(dim as f64 - 1.0), 0.0)).norm() < 1e-12);
    }

    #[test]
    fn coherent_state_properties() {
        let dim = 40;
        let beta = Complex64::new(1.2, -0.4);
        let v = coherent_vec(dim, beta);
        let norm: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        assert!((norm - 1.0).abs() < 1e-12);
        // Eigenstate of the annihilation operator.
        let a = annihilation(dim);
        let av = a.dot(&v);
        for n in 0..dim - 5 {
            assert!((av[n] - beta * v[n]).norm() < 1e-10);
        }
    }

    #[test]
    fn quadrature_is_hermitian_and_scaled() {
        for &theta in &[0.0, std::f64::consts::FRAC_PI_2, 1.234] {
            let q = quadrature(12, theta);
            let dev = (&q - &dagger(&q))
                .iter()
                .map(|z| z.norm())
                .fold(0.0f64, f64::max);
            assert!(dev < 1e-14, "quadrature not Hermitian at theta={theta}");
        }
        // Vacuum variance of the normalized quadrature is 1:
        // q^2 + p^2 = 4 (n + 1/2) and the vacuum is isotropic.
        let q = quadrature(12, 0.0);
        let q2 = q.dot(&q);
        assert!((q2[[0, 0]].re - 1.0).abs() < 1e-14);
    }
}
