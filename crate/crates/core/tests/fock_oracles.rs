#![allow(clippy::needless_range_loop)]

//! Independent truncated-Fock checks of the closed-form machinery: state
//! vectors and density operators built directly in the number basis must
//! reproduce the covariance-level expectation values.

use snwitness_core::oracle;
use snwitness_core::states::{phase_randomized, tmsv, PhaseRandomizedSpec};
use snwitness_core::witness::{expectation, Family, WitnessParams};

/// Two-mode squeezed vacuum amplitudes `tanh^n(γ) / cosh(γ)` on `|n,n⟩`.
fn tmsv_vector(gamma: f64, nmax: usize) -> Vec<f64> {
    let d = nmax + 1;
    let mut psi = vec![0.0; d * d];
    let t = gamma.tanh();
    let mut amp = 1.0 / gamma.cosh();
    for n in 0..=nmax {
        psi[n * d + n] = amp;
        amp *= t;
    }
    psi
}

#[test]
fn tmsv_expectation_matches_fock_quadratic_form() {
    // <TMSV(0.7)| L_n(1/2, 1/2, -tanh 1.4) |TMSV(0.7)> at nmax = 60 against
    // the covariance-level formula.
    let gamma = 0.7f64;
    let p = WitnessParams::new(Family::N, 0.5, 0.5, -(2.0 * gamma).tanh()).unwrap();
    let t = oracle::build(&p, 60).unwrap();
    let psi = tmsv_vector(gamma, 60);
    let dim = t.dim();
    let mut quad = 0.0;
    for i in 0..dim {
        let mut s = 0.0;
        for j in 0..dim {
            s += t.dense()[i * dim + j] * psi[j];
        }
        quad += psi[i] * s;
    }
    let norm: f64 = psi.iter().map(|x| x * x).sum();
    quad /= norm;

    let sf = tmsv(gamma).unwrap();
    let cov_level = expectation(&sf, &p);
    assert!(
        (quad - cov_level).abs() < 1e-9,
        "fock {quad} vs covariance {cov_level}"
    );
    // Both must sit on the ground level sech(1.4).
    assert!((cov_level - 0.4649219924089817).abs() < 1e-12);
}

#[test]
fn phase_randomized_moments_match_fock_sums() {
    // rho_sigma = (1-eps^2) sum_{m,n} eps^{m+n} e^{-sigma^2 (m-n)^2 / 2}
    //             |m,m><n,n|.
    // <q1 q2> picks up the |n,n> <-> |n+1,n+1> coherences with weight
    // (n+1)/2 each way; <q1^2> the diagonal with weight (2n+1)/2.
    for (gamma, sigma) in [(0.7, 0.0), (0.7, 0.775), (0.98, 0.3), (1.2, 1.0)] {
        let eps = f64::tanh(gamma);
        let w = |k: i64| (-0.5 * sigma * sigma * (k * k) as f64).exp();
        let nmax = 400usize;
        let norm = 1.0 - eps * eps;
        let mut q1q2 = 0.0;
        let mut q1sq = 0.0;
        for n in 0..nmax {
            let pn = norm * eps.powi(2 * n as i32);
            q1sq += pn * (2 * n + 1) as f64 / 2.0;
            q1q2 += 2.0 * norm * eps.powi((2 * n + 1) as i32) * w(1) * (n + 1) as f64 / 2.0;
        }
        let sf = phase_randomized(&PhaseRandomizedSpec::new(gamma, sigma).unwrap()).unwrap();
        assert!(
            (q1sq - sf.v1()).abs() < 1e-9,
            "gamma={gamma} sigma={sigma}: <q1^2> {q1sq} vs v1 {}",
            sf.v1()
        );
        assert!(
            (q1q2 - sf.vc1()).abs() < 1e-9,
            "gamma={gamma} sigma={sigma}: <q1q2> {q1q2} vs vc1 {}",
            sf.vc1()
        );
    }
}

#[test]
fn tmsv_cm_elements_from_fock_vector() {
    // <psi| q1 q2 |psi> for the truncated two-mode squeezed vacuum equals
    // sinh(2 gamma)/2; q = (a + a†)/sqrt(2) couples |n,n> to |n±1,n±1>.
    let gamma = 0.7f64;
    let nmax = 200usize;
    let t = gamma.tanh();
    let mut amps = vec![0.0; nmax + 1];
    let mut a = 1.0 / gamma.cosh();
    for n in 0..=nmax {
        amps[n] = a;
        a *= t;
    }
    let mut q1q2 = 0.0;
    for n in 0..nmax {
        q1q2 += 2.0 * amps[n] * amps[n + 1] * (n + 1) as f64 / 2.0;
    }
    let sf = tmsv(gamma).unwrap();
    assert!((q1q2 - sf.vc1()).abs() < 1e-12, "{q1q2} vs {}", sf.vc1());
}
