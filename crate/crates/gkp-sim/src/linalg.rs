//! Dense complex linear algebra: matrix exponential by scaling-and-squaring
//! with a degree-13 Pade approximant, LU solves, and a cyclic Jacobi
//! eigensolver for Hermitian matrices.

use ndarray::{Array1, Array2};
use num_complex::Complex64;

use crate::SimError;

pub type CMat = Array2<Complex64>;
pub type CVec = Array1<Complex64>;

pub fn identity(dim: usize) -> CMat {
    Array2::eye(dim)
}

pub fn dagger(a: &CMat) -> CMat {
    a.t().mapv(|z| z.conj())
}

/// Maximum absolute column sum.
pub fn norm_1(a: &CMat) -> f64 {
    let mut max = 0.0f64;
    for j in 0..a.ncols() {
        let s: f64 = a.column(j).iter().map(|z| z.norm()).sum();
        max = max.max(s);
    }
    max
}

/// LU factorization with partial pivoting, in place.
///
/// Returns the pivot permutation; `a` holds both factors afterwards.
fn lu_factor(a: &mut CMat) -> Result<Vec<usize>, SimError> {
    let n = a.nrows();
    let mut piv: Vec<usize> = (0..n).collect();
    for k in 0..n {
        let mut p = k;
        let mut max = a[[k, k]].norm();
        for i in (k + 1)..n {
            let v = a[[i, k]].norm();
            if v > max {
                max = v;
                p = i;
            }
        }
        if max == 0.0 {
            return Err(SimError::SingularMatrix(k));
        }
        if p != k {
            piv.swap(k, p);
            for j in 0..n {
                let tmp = a[[k, j]];
                a[[k, j]] = a[[p, j]];
                a[[p, j]] = tmp;
            }
        }
        let pivot = a[[k, k]];
        for i in (k + 1)..n {
            let l = a[[i, k]] / pivot;
            a[[i, k]] = l;
            if l != Complex64::new(0.0, 0.0) {
                let (row_k, mut row_i) = a.multi_slice_mut((
                    ndarray::s![k, (k + 1)..],
                    ndarray::s![i, (k + 1)..],
                ));
                row_i.zip_mut_with(&row_k, |x, &y| *x -= l * y);
            }
        }
    }
    Ok(piv)
}

/// Solve `A X = B` for a full right-hand-side matrix.
pub fn solve(a: &CMat, b: &CMat) -> Result<CMat, SimError> {
    let n = a.nrows();
    if a.ncols() != n || b.nrows() != n {
        return Err(SimError::DimensionMismatch(format!(
            "solve: A is {}x{}, B has {} rows",
            a.nrows(),
            a.ncols(),
            b.nrows()
        )));
    }
    let mut lu = a.clone();
    let piv = lu_factor(&mut lu)?;
    let mut x = CMat::zeros(b.raw_dim());
    for (dst, src) in piv.iter().enumerate() {
        x.row_mut(dst).assign(&b.row(*src));
    }
    // Forward substitution with unit lower factor, row-wise for locality.
    for i in 1..n {
        for j in 0..i {
            let l = lu[[i, j]];
            if l != Complex64::new(0.0, 0.0) {
                let (row_j, mut row_i) =
                    x.multi_slice_mut((ndarray::s![j, ..], ndarray::s![i, ..]));
                row_i.zip_mut_with(&row_j, |xi, &xj| *xi -= l * xj);
            }
        }
    }
    // Back substitution.
    for i in (0..n).rev() {
        for j in (i + 1)..n {
            let u = lu[[i, j]];
            if u != Complex64::new(0.0, 0.0) {
                let (row_j, mut row_i) =
                    x.multi_slice_mut((ndarray::s![j, ..], ndarray::s![i, ..]));
                row_i.zip_mut_with(&row_j, |xi, &xj| *xi -= u * xj);
            }
        }
        let d = lu[[i, i]];
        x.row_mut(i).mapv_inplace(|v| v / d);
    }
    Ok(x)
}

// Degree-13 Pade coefficients for the exponential.
const PADE13: [f64; 14] = [
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
];

const THETA13: f64 = 5.371920351148152;

/// Matrix exponential by scaling-and-squaring with the `[13/13]` Pade
/// approximant.
pub fn expm(a: &CMat) -> Result<CMat, SimError> {
    let n = a.nrows();
    if a.ncols() != n {
        return Err(SimError::DimensionMismatch(format!(
            "expm: matrix is {}x{}",
            a.nrows(),
            a.ncols()
        )));
    }
    let norm = norm_1(a);
    let s = if norm > THETA13 {
        (norm / THETA13).log2().ceil() as u32
    } else {
        0
    };
    let scale = Complex64::new(1.0 / 2f64.powi(s as i32), 0.0);
    let a = a.mapv(|z| z * scale);

    let a2 = a.dot(&a);
    let a4 = a2.dot(&a2);
    let a6 = a2.dot(&a4);
    let eye = identity(n);

    let b = &PADE13;
    let w1 = &a6 * b[13] + &a4 * b[11] + &a2 * b[9];
    let w2 = &a6 * b[7] + &a4 * b[5] + &a2 * b[3] + &eye * b[1];
    let u = a.dot(&(a6.dot(&w1) + &w2));
    let z1 = &a6 * b[12] + &a4 * b[10] + &a2 * b[8];
    let v = a6.dot(&z1) + &a6 * b[6] + &a4 * b[4] + &a2 * b[2] + &eye * b[0];

    let mut r = solve(&(&v - &u), &(&v + &u))?;
    for _ in 0..s {
        r = r.dot(&r);
    }
    Ok(r)
}

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
///
/// Returns `(eigenvalues, eigenvectors)` with eigenvectors in the columns,
/// so `A = V diag(w) V^dagger`. Eigenvalues are in ascending order.
pub fn eigh(a: &CMat) -> Result<(Vec<f64>, CMat), SimError> {
    let n = a.nrows();
    if a.ncols() != n {
        return Err(SimError::DimensionMismatch(format!(
            "eigh: matrix is {}x{}",
            a.nrows(),
            a.ncols()
        )));
    }
    let mut m = a.clone();
    let mut v = identity(n);
    let scale = norm_1(a).max(1e-300);

    for _sweep in 0..100 {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off += m[[p, q]].norm_sqr();
            }
        }
        if off.sqrt() <= 1e-14 * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[[p, q]];
                let g = apq.norm();
                if g <= 1e-300 {
                    continue;
                }
                // Unitary plane rotation U = [[c, -conj(st)], [st, c]] with
                // real c and st = t c exp(-i arg(apq)), where t is the
                // smaller root of t^2 - 2 theta t - 1 = 0 and
                // theta = (aqq - app) / (2 |apq|). This zeroes (p, q).
                let phase = apq / g;
                let app = m[[p, p]].re;
                let aqq = m[[q, q]].re;
                let theta = 0.5 * (aqq - app) / g;
                let t = if theta >= 0.0 {
                    -1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let st = phase.conj() * (t * c);
                // Columns: M <- M U.
                for i in 0..n {
                    let mip = m[[i, p]];
                    let miq = m[[i, q]];
                    m[[i, p]] = mip * c + miq * st;
                    m[[i, q]] = -mip * st.conj() + miq * c;
                }
                // Rows: M <- U^dagger M.
                for j in 0..n {
                    let mpj = m[[p, j]];
                    let mqj = m[[q, j]];
                    m[[p, j]] = mpj * c + mqj * st.conj();
                    m[[q, j]] = -mpj * st + mqj * c;
                }
                // Accumulate eigenvectors: V <- V U.
                for i in 0..n {
                    let vip = v[[i, p]];
                    let viq = v[[i, q]];
                    v[[i, p]] = vip * c + viq * st;
                    v[[i, q]] = -vip * st.conj() + viq * c;
                }
            }
        }
    }

    let mut pairs: Vec<(f64, usize)> = (0..n).map(|i| (m[[i, i]].re, i)).collect();
    pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    let w: Vec<f64> = pairs.iter().map(|(l, _)| *l).collect();
    let mut vs = CMat::zeros((n, n));
    for (dst, (_, src)) in pairs.iter().enumerate() {
        vs.column_mut(dst).assign(&v.column(*src));
    }
    Ok((w, vs))
}

/// Trace distance `(1/2) sum |lambda_i(rho - sigma)|` between Hermitian
/// operators.
pub fn trace_distance(rho: &CMat, sigma: &CMat) -> Result<f64, SimError> {
    let diff = rho - sigma;
    let herm = (&diff + &dagger(&diff)) / Complex64::new(2.0, 0.0);
    let (w, _) = eigh(&herm)?;
    Ok(0.5 * w.iter().map(|l| l.abs()).sum::<f64>())
}

/// Pseudo-inverse square root of a Hermitian positive semidefinite matrix:
/// eigenvalues below `tol * max` are treated as zero.
pub fn pinv_sqrt_psd(a: &CMat, tol: f64) -> Result<CMat, SimError> {
    let (w, v) = eigh(a)?;
    let wmax = w.iter().cloned().fold(0.0f64, f64::max);
    let n = a.nrows();
    let mut d = CMat::zeros((n, n));
    for i in 0..n {
        if w[i] > tol * wmax && w[i] > 0.0 {
            d[[i, i]] = Complex64::new(1.0 / w[i].sqrt(), 0.0);
        }
    }
    Ok(v.dot(&d).dot(&dagger(&v)))
}
