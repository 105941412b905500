//! Helpers shared by the CLI integration and acceptance tests.
//!
//! Each test binary compiles its own copy; not every binary uses every
//! helper.
#![allow(dead_code)]
#![allow(clippy::needless_range_loop)]

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use snwitness_core::covariance::{validate_bona_fide, CovarianceMatrix, StandardForm};
use snwitness_core::witness::{Family, WitnessParams};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

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

pub fn conjugate(cm: &CovarianceMatrix, s: &[[f64; 4]; 4]) -> CovarianceMatrix {
    let m = cm.matrix();
    let mut tmp = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            tmp[i][j] = (0..4).map(|k| s[i][k] * m[k][j]).sum();
        }
    }
    let mut out = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = (0..4).map(|k| tmp[i][k] * s[j][k]).sum();
        }
    }
    for i in 0..4 {
        for j in (i + 1)..4 {
            let v = 0.5 * (out[i][j] + out[j][i]);
            out[i][j] = v;
            out[j][i] = v;
        }
    }
    CovarianceMatrix::new(out).expect("conjugated matrix stays valid")
}

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

/// Random parameters of the two-mode-squeezing family with the coupling a
/// given fraction of the semiboundedness limit.
pub fn random_n_params(rng: &mut ChaCha8Rng, frac_lo: f64, frac_hi: f64) -> WitnessParams {
    let w1 = rng.gen_range(0.25..0.75);
    let w2 = 1.0 - w1;
    let frac = rng.gen_range(frac_lo..frac_hi);
    let wc = -(frac * 4.0 * w1 * w2).sqrt();
    WitnessParams::new(Family::N, w1, w2, wc).unwrap()
}

pub fn random_p_params(rng: &mut ChaCha8Rng) -> WitnessParams {
    let w1: f64 = rng.gen_range(0.25..0.75);
    let w2 = 1.0 - w1;
    let frac: f64 = rng.gen_range(0.05..0.9);
    let wc = (frac * 4.0 * w1 * w2).sqrt();
    WitnessParams::new(Family::P, w1, w2, wc).unwrap()
}
