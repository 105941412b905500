//! Shared helpers for the integration tests: seeded randomness, random
//! local symplectic transformations, and Gaussian sampling.
//!
//! Each test binary compiles its own copy; not every binary uses every
//! helper.
#![allow(dead_code)]
#![allow(clippy::needless_range_loop)]

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use snwitness_core::covariance::{validate_bona_fide, CovarianceMatrix, StandardForm};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random single-mode symplectic matrix: rotation · squeeze · rotation,
/// determinant one.
pub fn random_sp2(rng: &mut ChaCha8Rng, max_squeeze: f64) -> [[f64; 2]; 2] {
    let theta: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let z = rng.gen_range(-max_squeeze..max_squeeze).exp();
    let rot = |a: f64| [[a.cos(), a.sin()], [-a.sin(), a.cos()]];
    let (r1, r2) = (rot(theta), rot(phi));
    let zm = [[z, 0.0], [0.0, 1.0 / z]];
    let mul = |a: [[f64; 2]; 2], b: [[f64; 2]; 2]| {
        let mut c = [[0.0; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        c
    };
    mul(mul(r1, zm), r2)
}

/// Block-diagonal local symplectic on both modes.
pub fn random_local_symplectic(rng: &mut ChaCha8Rng, max_squeeze: f64) -> [[f64; 4]; 4] {
    let s1 = random_sp2(rng, max_squeeze);
    let s2 = random_sp2(rng, max_squeeze);
    let mut s = [[0.0; 4]; 4];
    for i in 0..2 {
        for j in 0..2 {
            s[i][j] = s1[i][j];
            s[2 + i][2 + j] = s2[i][j];
        }
    }
    s
}

/// Congruence `S · M · Sᵀ`.
pub fn conjugate(cm: &CovarianceMatrix, s: &[[f64; 4]; 4]) -> CovarianceMatrix {
    let m = cm.matrix();
    let mut tmp = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            let mut acc = 0.0;
            for k in 0..4 {
                acc += s[i][k] * m[k][j];
            }
            tmp[i][j] = acc;
        }
    }
    let mut out = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            let mut acc = 0.0;
            for k in 0..4 {
                acc += tmp[i][k] * s[j][k];
            }
            out[i][j] = acc;
        }
    }
    // Symmetrize away the last-bit asymmetry from the two multiplications.
    for i in 0..4 {
        for j in (i + 1)..4 {
            let v = 0.5 * (out[i][j] + out[j][i]);
            out[i][j] = v;
            out[j][i] = v;
        }
    }
    CovarianceMatrix::new(out).expect("conjugated matrix stays valid")
}

/// Random bona fide standard form by rejection sampling.
pub fn random_bona_fide_sf(rng: &mut ChaCha8Rng) -> StandardForm {
    loop {
        let v1: f64 = rng.gen_range(0.5..4.0);
        let v2: f64 = rng.gen_range(0.5..4.0);
        let cmax = (v1 * v2).sqrt() * 0.98;
        let a: f64 = rng.gen_range(0.0..cmax);
        let b: f64 = rng.gen_range(-cmax..cmax);
        let (vc1, vc2) = if a.abs() >= b.abs() {
            (a, b)
        } else {
            (b.abs(), a * b.signum())
        };
        let Ok(sf) = StandardForm::new(v1, v2, vc1, vc2) else {
            continue;
        };
        let Ok(check) = validate_bona_fide(&sf.embed()) else {
            continue;
        };
        if check.valid {
            return sf;
        }
    }
}

/// Lower-triangular Cholesky factor of a 4×4 covariance matrix.
pub fn cholesky(cm: &CovarianceMatrix) -> [[f64; 4]; 4] {
    let m = cm.matrix();
    let mut l = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..=i {
            let mut s = m[i][j];
            for k in 0..j {
                s -= l[i][k] * l[j][k];
            }
            if i == j {
                l[i][j] = s.sqrt();
            } else {
                l[i][j] = s / l[j][j];
            }
        }
    }
    l
}

/// One standard normal via Box-Muller.
pub fn gaussian(rng: &mut ChaCha8Rng) -> f64 {
    let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.gen_range(0.0..1.0);
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}

/// Draw `n` phase-space samples from the Gaussian state with covariance
/// `cm` (zero mean).
pub fn sample_gaussian_state(
    rng: &mut ChaCha8Rng,
    cm: &CovarianceMatrix,
    n: usize,
) -> Vec<[f64; 4]> {
    let l = cholesky(cm);
    (0..n)
        .map(|_| {
            let z: [f64; 4] = std::array::from_fn(|_| gaussian(rng));
            std::array::from_fn(|i| (0..=i).map(|k| l[i][k] * z[k]).sum())
        })
        .collect()
}
