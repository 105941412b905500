//! The Schmidt-number bound ladder `g_r`.
//!
//! For each test-operator family the rank-`r` minimum expectation value is
//! the smallest root of an `r`-th order symmetric tridiagonal determinant,
//! shifted by `g_1 = ω1 + ω2`. The two closed-form anchors are
//! `g_1 = ω1 + ω2` and the ground-state energy `g_∞`. Certification compares
//! a measured expectation value against the monotone envelope of the ladder:
//! the sets of states with Schmidt number at most `r` are nested, so the
//! usable bound at level `r` is the minimum of the determinant values up to
//! `r`. For the two-mode-squeezing family the raw values are already
//! non-increasing and the envelope changes nothing; for the
//! number-conserving family it keeps the ladder sound.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::linalg;
use crate::math;
use crate::witness::{Family, WitnessParams};

/// Absolute bisection tolerance for ladder levels.
const STURM_TOL: f64 = 1e-12;
/// An expectation value must undercut a level by more than this to count.
const CERTIFY_GUARD: f64 = 1e-12;
/// Saturation slack: expectation values this close to `g_∞` certify every
/// requested level.
const SATURATION_TOL: f64 = 1e-9;

/// Errors from ladder construction.
#[derive(Clone, Debug, PartialEq)]
pub enum SnboundsError {
    /// Tridiagonal data with inconsistent lengths or non-finite entries.
    MalformedTridiagonal,
}

impl fmt::Display for SnboundsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SnboundsError::MalformedTridiagonal => write!(f, "malformed tridiagonal matrix"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for SnboundsError {}

/// Symmetric tridiagonal matrix, `diag.len() == offdiag.len() + 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymTridiagonal {
    diag: Vec<f64>,
    offdiag: Vec<f64>,
}

impl SymTridiagonal {
    pub fn new(diag: Vec<f64>, offdiag: Vec<f64>) -> Result<Self, SnboundsError> {
        if diag.is_empty() || offdiag.len() + 1 != diag.len() {
            return Err(SnboundsError::MalformedTridiagonal);
        }
        if diag.iter().chain(offdiag.iter()).any(|x| !x.is_finite()) {
            return Err(SnboundsError::MalformedTridiagonal);
        }
        Ok(SymTridiagonal { diag, offdiag })
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn offdiag(&self) -> &[f64] {
        &self.offdiag
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }
}

/// The ladder `g_1..g_rmax` for fixed witness parameters, together with its
/// monotone envelope and the closed-form limit `g_∞`.
#[derive(Clone, Debug)]
pub struct GrLadder {
    params: WitnessParams,
    raw: Vec<f64>,
    effective: Vec<f64>,
    g_inf: f64,
}

impl GrLadder {
    pub fn params(&self) -> &WitnessParams {
        &self.params
    }

    /// Determinant values `g_1..g_rmax` as written, 0-indexed by `r - 1`.
    pub fn raw(&self) -> &[f64] {
        &self.raw
    }

    /// Monotone non-increasing envelope `min(raw[1..=r])`, 0-indexed.
    pub fn effective(&self) -> &[f64] {
        &self.effective
    }

    pub fn g_inf(&self) -> f64 {
        self.g_inf
    }

    pub fn rmax(&self) -> u32 {
        self.raw.len() as u32
    }
}

/// Certified Schmidt-number lower bound with the per-level margins.
#[derive(Clone, Debug)]
pub struct CertificationReport {
    /// The state has Schmidt number at least this value.
    pub certified_r: u32,
    /// Expectation below `g_∞` within tolerance: every finite level is
    /// undercut, the bound saturates at `rmax + 1`.
    pub saturated_inf: bool,
    /// The expectation value that was certified.
    pub expectation: f64,
    /// `(effective[r] - expectation) / g_1` per level, 0-indexed by `r - 1`.
    pub normalized_margins: Vec<f64>,
    /// Parameters the ladder was built from.
    pub params: WitnessParams,
}

/// Tridiagonal determinant matrix of the two-mode-squeezing family:
/// `diag[i] = 2(i-1)(ω1+ω2)`, `offdiag[i] = i·ωc`, `i = 1..r`.
pub fn tridiag_n(r: u32, p: &WitnessParams) -> SymTridiagonal {
    let r = r.max(1) as usize;
    let g1 = p.omega1() + p.omega2();
    let diag = (0..r).map(|i| 2.0 * i as f64 * g1).collect();
    let offdiag = (1..r).map(|i| i as f64 * p.omegac()).collect();
    SymTridiagonal { diag, offdiag }
}

/// Tridiagonal determinant matrix of the number-conserving family:
/// `diag[i] = 2[(i-1)ω1 + (r-i)ω2]`, `offdiag[i] = sqrt(i(r-i))·ωc`.
pub fn tridiag_p(r: u32, p: &WitnessParams) -> SymTridiagonal {
    let r = r.max(1) as usize;
    let diag = (1..=r)
        .map(|i| 2.0 * ((i - 1) as f64 * p.omega1() + (r - i) as f64 * p.omega2()))
        .collect();
    let offdiag = (1..r)
        .map(|i| math::sqrt((i * (r - i)) as f64) * p.omegac())
        .collect();
    SymTridiagonal { diag, offdiag }
}

/// Smallest eigenvalue by Sturm-sequence bisection, bracketed by Gershgorin
/// disks, absolute tolerance `1e-12`. The off-diagonal signs do not affect
/// the result.
pub fn min_eigen_tridiag(t: &SymTridiagonal) -> f64 {
    if t.dim() == 1 {
        return t.diag[0];
    }
    let (lo, hi) = linalg::gershgorin_bounds(&t.diag, &t.offdiag);
    linalg::tridiag_smallest_in(&t.diag, &t.offdiag, lo - 1.0, hi + 1.0, STURM_TOL)
}

/// The level `g_r`: smallest determinant root plus `ω1 + ω2`; `g_1` is
/// returned exactly.
pub fn g_r(p: &WitnessParams, r: u32) -> f64 {
    let g1 = p.omega1() + p.omega2();
    if r <= 1 {
        return g1;
    }
    let t = match p.family() {
        Family::N => tridiag_n(r, p),
        Family::P => tridiag_p(r, p),
    };
    min_eigen_tridiag(&t) + g1
}

/// The ground-state anchor: `sqrt((ω1-ω2)² + ωc²)` for the
/// number-conserving family, `sqrt((ω1+ω2)² - ωc²)` for the
/// two-mode-squeezing family.
pub fn g_inf(p: &WitnessParams) -> f64 {
    let (w1, w2, wc) = (p.omega1(), p.omega2(), p.omegac());
    match p.family() {
        Family::P => math::sqrt((w1 - w2) * (w1 - w2) + wc * wc),
        Family::N => math::sqrt(((w1 + w2) * (w1 + w2) - wc * wc).max(0.0)),
    }
}

/// Build the full ladder up to `rmax`.
///
/// For the two-mode-squeezing family the determinant matrices are nested, so
/// eigenvalue interlacing gives each level a bracket from the previous one;
/// levels collapse onto `g_∞` geometrically and the bisection work shrinks
/// with them.
pub fn ladder(p: &WitnessParams, rmax: u32) -> GrLadder {
    let rmax = rmax.max(1) as usize;
    let g1 = p.omega1() + p.omega2();
    let ginf = g_inf(p);
    let mut raw = vec![0.0; rmax];
    raw[0] = g1;
    match p.family() {
        Family::N => {
            // Shared entries for all leading principal submatrices.
            let full = tridiag_n(rmax as u32, p);
            // λ_min is bounded below by the ground-state shift g_∞ - g_1.
            let floor = ginf - g1 - 1e-6;
            let mut upper = 0.0; // λ_min of the 1×1 block
            for r in 2..=rmax {
                let d = &full.diag[..r];
                let e = &full.offdiag[..r - 1];
                let lo = if linalg::sturm_count_below(d, e, floor) == 0 {
                    floor
                } else {
                    linalg::gershgorin_bounds(d, e).0 - 1.0
                };
                let lam = linalg::tridiag_smallest_in(d, e, lo, upper + STURM_TOL, STURM_TOL);
                raw[r - 1] = lam + g1;
                upper = lam;
            }
        }
        Family::P => {
            for r in 2..=rmax {
                raw[r - 1] = g_r(p, r as u32);
            }
        }
    }
    let mut effective = raw.clone();
    for r in 1..rmax {
        effective[r] = effective[r].min(effective[r - 1]);
    }
    GrLadder {
        params: p.clone(),
        raw,
        effective,
        g_inf: ginf,
    }
}

/// Certified level straight from the parameters, without materializing the
/// ladder. Returns `(certified_r, saturated_inf)`, consistent with
/// [`certify`] on the corresponding ladder.
///
/// For the two-mode-squeezing family the determinant matrices are nested,
/// so one pivot pass of the Sturm recurrence at the shifted expectation
/// value reads off how many leading levels stay above it; the
/// number-conserving family goes through the ladder.
pub fn certified_level(expectation: f64, p: &WitnessParams, rmax: u32) -> (u32, bool) {
    let rmax = rmax.max(1);
    let g1 = p.omega1() + p.omega2();
    let ginf = g_inf(p);
    let saturated_inf = expectation < ginf + SATURATION_TOL;
    let mut certified_r = match p.family() {
        Family::N => {
            // e < g_r - guard  ⟺  λ_min(T_r) > e - g_1 + guard =: τ
            // ⟺ no negative pivot among the first r.
            let shift = expectation - g1 + CERTIFY_GUARD;
            let full = tridiag_n(rmax, p);
            let mut undercut = 0u32;
            let mut q = full.diag[0] - shift;
            while undercut < rmax && q >= 0.0 {
                undercut += 1;
                let i = undercut as usize;
                if i >= rmax as usize {
                    break;
                }
                let q_safe = if q < f64::MIN_POSITIVE {
                    f64::MIN_POSITIVE
                } else {
                    q
                };
                q = (full.diag[i] - shift) - full.offdiag[i - 1] * full.offdiag[i - 1] / q_safe;
            }
            1 + undercut
        }
        Family::P => certify(expectation, &ladder(p, rmax)).certified_r,
    };
    if saturated_inf && certified_r >= 2 {
        certified_r = rmax + 1;
    }
    (certified_r, saturated_inf)
}

/// Compare an expectation value against the ladder.
///
/// `certified_r = 1 + max { r : expectation < effective[r] - 1e-12 }`, or 1
/// when no level is undercut. Values within `1e-9` of `g_∞` sit below every
/// finite level the ladder could resolve and certify `rmax + 1`.
pub fn certify(expectation: f64, l: &GrLadder) -> CertificationReport {
    let g1 = l.raw[0];
    let saturated_inf = expectation < l.g_inf + SATURATION_TOL;
    let mut certified_r = 1u32;
    for (idx, &level) in l.effective.iter().enumerate() {
        if expectation < level - CERTIFY_GUARD {
            certified_r = idx as u32 + 2;
        } else {
            break;
        }
    }
    // Below g_∞ every finite level is undercut mathematically even where
    // the computed levels crowd within the comparison guard; escalate to
    // the full ladder depth. Requires an actual undercut of g_1 so that
    // uncoupled operators (g_∞ = g_1) do not escalate trivially.
    if saturated_inf && certified_r >= 2 {
        certified_r = l.rmax() + 1;
    }
    let normalized_margins = l
        .effective
        .iter()
        .map(|&level| (level - expectation) / g1)
        .collect();
    CertificationReport {
        certified_r,
        saturated_inf,
        expectation,
        normalized_margins,
        params: l.params.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params_n(w1: f64, w2: f64, wc: f64) -> WitnessParams {
        WitnessParams::new(Family::N, w1, w2, wc).unwrap()
    }

    fn params_p(w1: f64, w2: f64, wc: f64) -> WitnessParams {
        WitnessParams::new(Family::P, w1, w2, wc).unwrap()
    }

    #[test]
    fn tridiag_n_structure() {
        let p = params_n(0.5, 0.5, -0.6);
        let t1 = tridiag_n(1, &p);
        assert_eq!(t1.diag(), &[0.0]);
        assert!(t1.offdiag().is_empty());
        let t2 = tridiag_n(2, &p);
        assert_eq!(t2.diag(), &[0.0, 2.0]);
        assert_eq!(t2.offdiag(), &[-0.6]);
        let t3 = tridiag_n(3, &p);
        assert_eq!(t3.diag(), &[0.0, 2.0, 4.0]);
        assert_eq!(t3.offdiag(), &[-0.6, -1.2]);
    }

    #[test]
    fn tridiag_p_structure() {
        let p = params_p(0.5, 0.5, 0.6);
        let t2 = tridiag_p(2, &p);
        assert_eq!(t2.diag(), &[1.0, 1.0]);
        assert_eq!(t2.offdiag(), &[0.6]);

        let p = params_p(0.3, 0.7, 0.5);
        let t3 = tridiag_p(3, &p);
        assert!((t3.diag()[0] - 2.8).abs() < 1e-15);
        assert!((t3.diag()[1] - 2.0).abs() < 1e-15);
        assert!((t3.diag()[2] - 1.2).abs() < 1e-15);
        let s = core::f64::consts::SQRT_2 * 0.5;
        assert!((t3.offdiag()[0] - s).abs() < 1e-15);
        assert!((t3.offdiag()[1] - s).abs() < 1e-15);
    }

    #[test]
    fn min_eigen_examples() {
        let single = SymTridiagonal::new(vec![3.0], vec![]).unwrap();
        assert_eq!(min_eigen_tridiag(&single), 3.0);

        // Frozen: 1 - sqrt(1.36) and the symmetric 2×2 pair 1 ± 0.6.
        let two = SymTridiagonal::new(vec![0.0, 2.0], vec![-0.6]).unwrap();
        assert!((min_eigen_tridiag(&two) - (-0.16619037896906009)).abs() < 1e-11);
        let sym = SymTridiagonal::new(vec![1.0, 1.0], vec![0.6]).unwrap();
        assert!((min_eigen_tridiag(&sym) - 0.4).abs() < 1e-11);
    }

    #[test]
    fn offdiag_sign_is_irrelevant() {
        let a = SymTridiagonal::new(vec![0.0, 2.0, 4.0], vec![-0.6, -1.2]).unwrap();
        let b = SymTridiagonal::new(vec![0.0, 2.0, 4.0], vec![0.6, 1.2]).unwrap();
        assert!((min_eigen_tridiag(&a) - min_eigen_tridiag(&b)).abs() < 1e-12);
    }

    #[test]
    fn g_r_values() {
        let p = params_n(0.5, 0.5, -0.6);
        assert_eq!(g_r(&p, 1), 1.0);
        // Frozen: 2 - sqrt(1.36).
        assert!((g_r(&p, 2) - 0.8338096210309399).abs() < 1e-11);

        let pp = params_p(0.5, 0.5, 0.6);
        assert_eq!(g_r(&pp, 1), 1.0);
        assert!((g_r(&pp, 2) - 1.4).abs() < 1e-11);
    }

    #[test]
    fn g_inf_values() {
        assert!((g_inf(&params_n(0.5, 0.5, -0.6)) - 0.8).abs() < 1e-15);
        assert!((g_inf(&params_p(0.5, 0.5, 0.6)) - 0.6).abs() < 1e-15);
        assert!((g_inf(&params_n(0.5, 0.5, 0.0)) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn ladder_n_family() {
        let p = params_n(0.5, 0.5, -0.6);
        let l = ladder(&p, 3);
        assert_eq!(l.raw()[0], 1.0);
        assert!((l.raw()[1] - 0.8338096210309399).abs() < 1e-11);
        assert!(l.raw()[2] > 0.8 && l.raw()[2] < l.raw()[1]);
        assert_eq!(l.raw(), l.effective());
        assert!((l.g_inf() - 0.8).abs() < 1e-15);
    }

    #[test]
    fn ladder_p_family_envelope_is_flat() {
        let p = params_p(0.5, 0.5, 0.6);
        let l = ladder(&p, 3);
        assert!(l.raw()[1] > l.raw()[0]);
        assert!(l.raw()[2] > l.raw()[1]);
        assert_eq!(l.effective(), &[1.0, 1.0, 1.0]);
    }

    #[test]
    fn uncoupled_ladder_is_flat_at_g1() {
        let p = params_n(0.5, 0.5, 0.0);
        let l = ladder(&p, 5);
        for &g in l.raw() {
            assert!((g - 1.0).abs() < 1e-11);
        }
    }

    #[test]
    fn ladder_matches_level_solver() {
        let p = params_n(0.35, 0.65, -0.7);
        let l = ladder(&p, 40);
        for r in 1..=40u32 {
            assert!(
                (l.raw()[(r - 1) as usize] - g_r(&p, r)).abs() < 5e-12,
                "level {r}"
            );
        }
    }

    #[test]
    fn certify_examples() {
        let p = params_n(0.5, 0.5, -0.6);
        let l = ladder(&p, 8);
        assert_eq!(certify(1.0, &l).certified_r, 1);
        let rep = certify(0.9, &l);
        assert_eq!(rep.certified_r, 2);
        assert!(!rep.saturated_inf);
        // At g_inf the bound saturates.
        let rep = certify(0.8, &l);
        assert!(rep.saturated_inf);
        assert_eq!(rep.certified_r, 9);
    }

    #[test]
    fn certify_respects_strict_guard() {
        let p = params_n(0.5, 0.5, -0.6);
        let l = ladder(&p, 4);
        // Exactly at g_1: no certification.
        assert_eq!(certify(l.raw()[0], &l).certified_r, 1);
    }

    #[test]
    fn certified_level_matches_certify() {
        // Deterministic pseudo-random parameter/expectation pairs.
        let mut x = 0.41f64;
        let mut next = move || {
            x = (x * 997.0 + 0.1234).rem_euclid(1.0);
            x
        };
        for _ in 0..200 {
            let w1 = 0.1 + 0.8 * next();
            let w2 = 1.0 - w1;
            let wc = -(next() * 1.9 - 0.95) * math::sqrt(4.0 * w1 * w2) * 0.995;
            let p = WitnessParams::new(Family::N, w1, w2, wc).unwrap();
            let e = 0.2 + 1.3 * next();
            let l = ladder(&p, 32);
            let slow = certify(e, &l);
            let (fast_r, fast_sat) = certified_level(e, &p, 32);
            assert_eq!(fast_r, slow.certified_r, "p={p:?} e={e}");
            assert_eq!(fast_sat, slow.saturated_inf);
        }
    }

    #[test]
    fn n_family_monotone_and_bounded() {
        let p = params_n(0.4, 0.6, -0.8);
        let l = ladder(&p, 200);
        let ginf = l.g_inf();
        let mut prev = f64::INFINITY;
        for &g in l.raw() {
            assert!(g <= prev + 1e-12);
            assert!(g >= ginf - 1e-9);
            prev = g;
        }
        assert!(l.raw()[199] - ginf < 1e-2);
    }
}
