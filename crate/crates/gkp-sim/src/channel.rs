use ndarray::Array2;
use num_complex::Complex64;

use crate::fock::{annihilation, creation};
use crate::linalg::{dagger, expm, identity, CMat};
use crate::SimError;

/// Quantum channel on the truncated Fock space, in one of two
/// representations.
#[derive(Debug, Clone)]
pub enum Channel {
    /// `dim^2 x dim^2` matrix acting on column-stacked density operators.
    Superop { dim: usize, mat: CMat },
    /// Kraus operators `rho -> sum_k M_k rho M_k^dagger`.
    Kraus { dim: usize, ops: Vec<CMat> },
}

impl Channel {
    pub fn dim(&self) -> usize {
        match self {
            Channel::Superop { dim, .. } => *dim,
            Channel::Kraus { dim, .. } => *dim,
        }
    }

    /// Apply the channel to a density operator.
    pub fn apply(&self, rho: &CMat) -> Result<CMat, SimError> {
        let dim = self.dim();
        if rho.nrows() != dim || rho.ncols() != dim {
            return Err(SimError::DimensionMismatch(format!(
                "state is {}x{}, channel dimension is {dim}",
                rho.nrows(),
                rho.ncols()
            )));
        }
        match self {
            Channel::Superop { mat, .. } => {
                let v = vec_columns(rho);
                let w = mat.dot(&v);
                Ok(unvec_columns(&w, dim))
            }
            Channel::Kraus { ops, .. } => {
                let mut out = CMat::zeros((dim, dim));
                for m in ops {
                    out = out + m.dot(rho).dot(&dagger(m));
                }
                Ok(out)
            }
        }
    }

    pub fn kraus_ops(&self) -> Option<&[CMat]> {
        match self {
            Channel::Kraus { ops, .. } => Some(ops),
            Channel::Superop { .. } => None,
        }
    }

    pub fn superop(&self) -> Option<&CMat> {
        match self {
            Channel::Superop { mat, .. } => Some(mat),
            Channel::Kraus { .. } => None,
        }
    }
}

/// Column-stacked vectorization: columns of `rho` concatenated top to
/// bottom, so `vec(A X B) = (B^T kron A) vec(X)`.
pub fn vec_columns(rho: &CMat) -> ndarray::Array1<Complex64> {
    let (n, m) = (rho.nrows(), rho.ncols());
    let mut v = ndarray::Array1::zeros(n * m);
    for j in 0..m {
        for i in 0..n {
            v[j * n + i] = rho[[i, j]];
        }
    }
    v
}

pub fn unvec_columns(v: &ndarray::Array1<Complex64>, dim: usize) -> CMat {
    let mut m = CMat::zeros((dim, dim));
    for j in 0..dim {
        for i in 0..dim {
            m[[i, j]] = v[j * dim + i];
        }
    }
    m
}

pub fn kron(a: &CMat, b: &CMat) -> CMat {
    let (ar, ac) = (a.nrows(), a.ncols());
    let (br, bc) = (b.nrows(), b.ncols());
    let mut out = CMat::zeros((ar * br, ac * bc));
    for i in 0..ar {
        for j in 0..ac {
            let aij = a[[i, j]];
            if aij != Complex64::new(0.0, 0.0) {
                for k in 0..br {
                    for l in 0..bc {
                        out[[i * br + k, j * bc + l]] = aij * b[[k, l]];
                    }
                }
            }
        }
    }
    out
}

// Dissipator superoperator for collapse operator L with column stacking:
// L* kron L - (1/2) I kron L^dagger L - (1/2) (L^dagger L)^T kron I.
fn dissipator_superop(l: &CMat) -> CMat {
    let dim = l.nrows();
    let eye = identity(dim);
    let ldl = dagger(l).dot(l);
    let lconj = l.mapv(|z| z.conj());
    let half = Complex64::new(0.5, 0.0);
    kron(&lconj, l)
        - kron(&eye, &ldl).mapv(|z| z * half)
        - kron(&ldl.t().to_owned(), &eye).mapv(|z| z * half)
}

/// Isotropic Gaussian displacement channel of variance `sigma_sq` per
/// canonical quadrature, as the exponential of the dissipator sum for the
/// annihilation and creation operators.
pub fn displacement_channel(sigma_sq: f64, cutoff: usize) -> Result<Channel, SimError> {
    if sigma_sq < 0.0 {
        return Err(SimError::InvalidParameter(format!(
            "sigma_sq must be non-negative, got {sigma_sq}"
        )));
    }
    let dim = cutoff + 1;
    if sigma_sq == 0.0 {
        return Ok(Channel::Superop {
            dim,
            mat: identity(dim * dim),
        });
    }
    let a = annihilation(dim);
    let adag = creation(dim);
    let gen = (dissipator_superop(&a) + dissipator_superop(&adag))
        .mapv(|z| z * Complex64::new(sigma_sq, 0.0));
    Ok(Channel::Superop {
        dim,
        mat: expm(&gen)?,
    })
}

/// Tensor Gauss-Hermite quadrature grid for the Kraus representation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub nodes_per_axis: usize,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self { nodes_per_axis: 21 }
    }
}

// Gauss-Hermite nodes and weights for integrals against exp(-x^2).
fn gauss_hermite(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0f64; n];
    let mut weights = vec![0.0f64; n];
    let pim4 = std::f64::consts::PI.powf(-0.25);
    let m = (n + 1) / 2;
    let mut z = 0.0f64;
    for i in 0..m {
        z = match i {
            0 => {
                let s = (2 * n + 1) as f64;
                s.sqrt() - 1.85575 * s.powf(-1.0 / 6.0)
            }
            1 => z - 1.14 * (n as f64).powf(0.426) / z,
            2 => 1.86 * z - 0.86 * nodes[0],
            3 => 1.91 * z - 0.91 * nodes[1],
            _ => 2.0 * z - nodes[i - 2],
        };
        let mut pp = 0.0;
        for _ in 0..200 {
            let mut p1 = pim4;
            let mut p2 = 0.0;
            for j in 1..=n {
                let p3 = p2;
                p2 = p1;
                p1 = z * (2.0 / j as f64).sqrt() * p2
                    - ((j as f64 - 1.0) / j as f64).sqrt() * p3;
            }
            pp = (2.0 * n as f64).sqrt() * p2;
            let dz = p1 / pp;
            z -= dz;
            if dz.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = z;
        nodes[n - 1 - i] = -z;
        weights[i] = 2.0 / (pp * pp);
        weights[n - 1 - i] = weights[i];
    }
    (nodes, weights)
}

/// Displacement operator `D(alpha) = exp(alpha a^dagger - alpha* a)` from
/// the closed-form matrix elements with associated Laguerre polynomials.
pub fn displacement_op(dim: usize, alpha: Complex64) -> CMat {
    let x = alpha.norm_sqr();
    let pref = (-x / 2.0).exp();
    let mut d = CMat::zeros((dim, dim));
    // Column n: entries m >= n use sqrt(n!/m!) alpha^(m-n) L_n^(m-n)(x);
    // entries m < n follow from D(alpha)^dagger = D(-alpha).
    for n in 0..dim {
        for m in n..dim {
            let k = m - n;
            // sqrt(n!/m!) = 1 / sqrt((n+1)(n+2)...(m))
            let mut ratio = 1.0f64;
            for j in (n + 1)..=m {
                ratio /= j as f64;
            }
            let lag = laguerre(n, k as f64, x);
            let val = ratio.sqrt() * pref * lag;
            let apow = alpha.powu(k as u32);
            d[[m, n]] = apow * val;
            if m != n {
                // <n|D|m> = sqrt(n!/m!) (-alpha*)^(m-n) e^{-x/2} L_n^{m-n}(x)
                d[[n, m]] = (-alpha.conj()).powu(k as u32) * val;
            }
        }
    }
    d
}

// Associated Laguerre polynomial L_n^(a)(x) by the three-term recurrence.
fn laguerre(n: usize, a: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut lkm1 = 1.0;
    let mut lk = 1.0 + a - x;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + a - x) * lk - (kf + a) * lkm1) / (kf + 1.0);
        lkm1 = lk;
        lk = next;
    }
    lk
}

/// Kraus-quadrature form of the displacement channel: Gaussian-weighted
/// displacement operators on a tensor Gauss-Hermite grid scaled to `sigma`.
///
/// The grid must reach out to at least `6 sigma` in radius.
pub fn displacement_channel_kraus(
    sigma_sq: f64,
    cutoff: usize,
    grid: &GridSpec,
) -> Result<Channel, SimError> {
    if sigma_sq < 0.0 {
        return Err(SimError::InvalidParameter(format!(
            "sigma_sq must be non-negative, got {sigma_sq}"
        )));
    }
    let dim = cutoff + 1;
    if sigma_sq == 0.0 {
        return Ok(Channel::Kraus {
            dim,
            ops: vec![identity(dim)],
        });
    }
    let n = grid.nodes_per_axis;
    if n < 2 {
        return Err(SimError::InvalidParameter(
            "need at least 2 quadrature nodes per axis".into(),
        ));
    }
    let (nodes, weights) = gauss_hermite(n);
    let max_node = nodes.iter().cloned().fold(0.0f64, f64::max);
    let radius = max_node * 2f64.sqrt();
    if radius < 6.0 {
        return Err(SimError::InvalidParameter(format!(
            "quadrature grid reaches {radius:.2} sigma, need >= 6 sigma"
        )));
    }
    let sigma = sigma_sq.sqrt();
    let mut ops = Vec::with_capacity(n * n);
    for (i, &u) in nodes.iter().enumerate() {
        for (j, &v) in nodes.iter().enumerate() {
            let alpha = Complex64::new(sigma * u, sigma * v);
            let w = weights[i] * weights[j] / std::f64::consts::PI;
            let d = displacement_op(dim, alpha);
            ops.push(d.mapv(|z| z * w.sqrt()));
        }
    }
    Ok(Channel::Kraus { dim, ops })
}

/// Deviation of the Kraus completeness sum from the identity, restricted to
/// the lowest `levels` Fock levels.
pub fn kraus_completeness_defect(channel: &Channel, levels: usize) -> Result<f64, SimError> {
    let ops = channel
        .kraus_ops()
        .ok_or_else(|| SimError::InvalidParameter("channel has no Kraus form".into()))?;
    let dim = channel.dim();
    let mut sum = CMat::zeros((dim, dim));
    for m in ops {
        sum = sum + dagger(m).dot(m);
    }
    let mut defect = 0.0f64;
    for i in 0..levels.min(dim) {
        for j in 0..levels.min(dim) {
            let expect = if i == j { 1.0 } else { 0.0 };
            defect = defect.max((sum[[i, j]] - Complex64::new(expect, 0.0)).norm());
        }
    }
    Ok(defect)
}

/// Mean photon number of a state.
pub fn mean_photon(rho: &CMat) -> f64 {
    let mut n = 0.0;
    for i in 0..rho.nrows() {
        n += i as f64 * rho[[i, i]].re;
    }
    n
}

/// Vacuum density operator.
pub fn vacuum(dim: usize) -> CMat {
    let mut rho = Array2::zeros((dim, dim));
    rho[[0, 0]] = Complex64::new(1.0, 0.0);
    rho
}
