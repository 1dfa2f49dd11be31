//! Verification of the dense linear-algebra kernels against structural
//! identities: exponentials of diagonal/nilpotent/antihermitian matrices,
//! eigendecomposition residuals, and LU solves.

use ndarray::Array2;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hcert_gkp_sim::linalg::{dagger, eigh, expm, identity, norm_1, pinv_sqrt_psd, solve};

type CMat = Array2<Complex64>;

fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> CMat {
    Array2::from_shape_fn((n, n), |_| {
        Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    })
}

#[test]
fn expm_diagonal() {
    let mut d = CMat::zeros((4, 4));
    for (i, v) in [0.3, -1.2, 2.5, 0.0].iter().enumerate() {
        d[[i, i]] = Complex64::new(*v, 0.1 * i as f64);
    }
    let e = expm(&d).unwrap();
    for i in 0..4 {
        assert!((e[[i, i]] - d[[i, i]].exp()).norm() < 1e-13);
    }
}

#[test]
fn expm_nilpotent() {
    let mut a = CMat::zeros((2, 2));
    a[[0, 1]] = Complex64::new(1.0, 0.0);
    let e = expm(&a).unwrap();
    let expected = ndarray::array![
        [Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0)],
        [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)]
    ];
    assert!(norm_1(&(&e - &expected)) < 1e-15);
}

#[test]
fn expm_antihermitian_is_unitary() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in [3, 8, 17] {
        let g = random_matrix(&mut rng, n);
        let ah = (&g - &dagger(&g)).mapv(|z| z * Complex64::new(0.5, 0.0));
        let u = expm(&ah).unwrap();
        let defect = norm_1(&(&dagger(&u).dot(&u) - &identity(n)));
        assert!(defect < 1e-12, "unitarity defect {defect} at n={n}");
    }
}

#[test]
fn expm_semigroup_on_commuting_input() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let a = random_matrix(&mut rng, 6).mapv(|z| z * Complex64::new(0.7, 0.0));
    let e1 = expm(&a).unwrap();
    let e2 = expm(&a.mapv(|z| z * Complex64::new(2.0, 0.0))).unwrap();
    let e3 = expm(&a.mapv(|z| z * Complex64::new(3.0, 0.0))).unwrap();
    let defect = norm_1(&(&e1.dot(&e2) - &e3)) / norm_1(&e3);
    assert!(defect < 1e-12, "semigroup defect {defect}");
}

#[test]
fn expm_large_norm_uses_scaling() {
    // Norm far above the Pade threshold exercises the squaring phase.
    let mut a = CMat::zeros((2, 2));
    a[[0, 0]] = Complex64::new(0.0, 40.0);
    a[[1, 1]] = Complex64::new(-3.0, -40.0);
    let e = expm(&a).unwrap();
    assert!((e[[0, 0]] - Complex64::new(0.0, 40.0).exp()).norm() < 1e-10);
    assert!((e[[1, 1]] - Complex64::new(-3.0, -40.0).exp()).norm() < 1e-12);
}

#[test]
fn eigh_reconstructs_hermitian() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for n in [2, 5, 12, 31] {
        let g = random_matrix(&mut rng, n);
        let h = (&g + &dagger(&g)).mapv(|z| z * Complex64::new(0.5, 0.0));
        let (w, v) = eigh(&h).unwrap();
        // Unitary eigenvectors.
        let defect = norm_1(&(&dagger(&v).dot(&v) - &identity(n)));
        assert!(defect < 1e-12, "eigenvector unitarity defect {defect}");
        // Reconstruction.
        let mut d = CMat::zeros((n, n));
        for i in 0..n {
            d[[i, i]] = Complex64::new(w[i], 0.0);
        }
        let rec = v.dot(&d).dot(&dagger(&v));
        assert!(norm_1(&(&rec - &h)) < 1e-11 * norm_1(&h).max(1.0));
        // Ascending order.
        for i in 1..n {
            assert!(w[i] >= w[i - 1]);
        }
    }
}

#[test]
fn solve_recovers_rhs() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let a = random_matrix(&mut rng, 20) + identity(20).mapv(|z| z * Complex64::new(5.0, 0.0));
    let x_true = random_matrix(&mut rng, 20);
    let b = a.dot(&x_true);
    let x = solve(&a, &b).unwrap();
    assert!(norm_1(&(&x - &x_true)) < 1e-10 * norm_1(&x_true));
}

#[test]
fn pinv_sqrt_acts_as_inverse_root_on_support() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    // Rank-3 PSD matrix in dimension 6.
    let g = random_matrix(&mut rng, 6);
    let mut low = CMat::zeros((6, 6));
    for j in 0..3 {
        for i in 0..6 {
            low[[i, j]] = g[[i, j]];
        }
    }
    let psd = low.dot(&dagger(&low));
    let s = pinv_sqrt_psd(&psd, 1e-12).unwrap();
    // S psd S is the orthogonal projector onto the support: idempotent and
    // Hermitian with trace equal to the rank.
    let p = s.dot(&psd).dot(&s);
    assert!(norm_1(&(&p.dot(&p) - &p)) < 1e-10);
    let tr: Complex64 = p.diag().sum();
    assert!((tr.re - 3.0).abs() < 1e-10);
}
