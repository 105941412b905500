//! Gaussian test operators and their coefficient optimization.
//!
//! The two generating families couple the modes through
//! `q1·q2 + p1·p2` (number-conserving, `P`) or `q1·q2 - p1·p2`
//! (two-mode-squeezing, `N`), on top of `ω1(q1²+p1²) + ω2(q2²+p2²)`.
//! Semiboundedness requires `ωc² < 4·ω1·ω2`.
//!
//! Optimization fixes the scale `ω1 + ω2 = 1` (certification is invariant
//! under positive scaling), eliminates `ωc` through the closed forms — the
//! exact root of `Δ = 0` where it exists, otherwise the stationary point of
//! `Δ` — and scans the single remaining parameter `ω1` on a grid with a
//! golden-section refinement.

use alloc::vec::Vec;
use core::fmt;

use crate::covariance::StandardForm;
use crate::math;
use crate::snbounds::{self, CertificationReport};

/// Relative margin for the strict semiboundedness inequality.
const SEMIBOUND_MARGIN: f64 = 1e-12;
/// Back-substitution acceptance for the Δ = 0 root.
const BACKSUB_TOL: f64 = 1e-9;
/// Relative margin below which the Δ = 0 discriminant counts as a tangency
/// (no robust root; the stationary-point coupling takes over).
const DISC_MARGIN: f64 = 1e-12;
/// Grid endpoints for the ω1 scan under the ω1 + ω2 = 1 normalization.
const OMEGA_MIN: f64 = 1e-3;
/// Golden-section tolerance on ω1.
const GOLDEN_TOL: f64 = 1e-6;

/// Test-operator family tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Number-conserving coupling `q1·q2 + p1·p2`; matches `det Vc > 0`.
    P,
    /// Two-mode-squeezing coupling `q1·q2 - p1·p2`; matches `det Vc < 0`.
    N,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::P => write!(f, "p"),
            Family::N => write!(f, "n"),
        }
    }
}

/// Errors from witness construction and optimization.
#[derive(Clone, Debug, PartialEq)]
pub enum WitnessError {
    /// Weights must be positive and finite.
    InvalidParams(&'static str),
    /// The coupling would make the operator unbounded from below.
    SemiboundednessViolated,
    /// `Δ = 0` has no usable real root for these weights.
    NoRealRoot,
    /// The stationary-point coupling of the number-conserving family needs
    /// mean coupling below 1/2.
    FallbackOutOfDomain,
    /// Every grid point failed both coupling constructions.
    NoUsableCoupling,
}

impl fmt::Display for WitnessError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessError::InvalidParams(what) => write!(f, "invalid parameters: {what}"),
            WitnessError::SemiboundednessViolated => {
                write!(f, "coupling violates semiboundedness (wc^2 >= 4 w1 w2)")
            }
            WitnessError::NoRealRoot => write!(f, "no real root for the exact coupling"),
            WitnessError::FallbackOutOfDomain => {
                write!(f, "stationary coupling undefined for mean coupling >= 1/2")
            }
            WitnessError::NoUsableCoupling => {
                write!(f, "no grid point admits a valid coupling")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for WitnessError {}

/// Coefficients of a semibounded test operator.
#[derive(Clone, Debug, PartialEq)]
pub struct WitnessParams {
    family: Family,
    omega1: f64,
    omega2: f64,
    omegac: f64,
}

impl WitnessParams {
    /// Validate and wrap; enforces `ω1, ω2 > 0` and the strict
    /// semiboundedness inequality `ωc² < 4·ω1·ω2` with a relative margin.
    pub fn new(
        family: Family,
        omega1: f64,
        omega2: f64,
        omegac: f64,
    ) -> Result<Self, WitnessError> {
        if !(omega1.is_finite() && omega2.is_finite() && omegac.is_finite()) {
            return Err(WitnessError::InvalidParams("non-finite weight"));
        }
        if omega1 <= 0.0 || omega2 <= 0.0 {
            return Err(WitnessError::InvalidParams("weights must be positive"));
        }
        if omegac * omegac >= 4.0 * omega1 * omega2 * (1.0 - SEMIBOUND_MARGIN) {
            return Err(WitnessError::SemiboundednessViolated);
        }
        Ok(WitnessParams {
            family,
            omega1,
            omega2,
            omegac,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn omega1(&self) -> f64 {
        self.omega1
    }

    pub fn omega2(&self) -> f64 {
        self.omega2
    }

    pub fn omegac(&self) -> f64 {
        self.omegac
    }
}

/// One grid record of the ω1 scan.
#[derive(Clone, Copy, Debug)]
pub struct GridRecord {
    pub omega1: f64,
    pub omegac: f64,
    pub expectation: f64,
    pub certified_r: u32,
}

/// Outcome of the coefficient optimization.
#[derive(Clone, Debug)]
pub struct OptimizationResult {
    pub params: WitnessParams,
    pub expectation: f64,
    /// `expectation / g_1 = expectation / (ω1 + ω2)`.
    pub normalized_expectation: f64,
    /// Certified lower bound: the state has Schmidt number >= this.
    pub certified_r: u32,
    pub saturated_inf: bool,
    pub report: CertificationReport,
    /// Grid-scan records in scan order.
    pub trace: Vec<GridRecord>,
}

/// The coupling magnitude a family can actually exploit: local rotations
/// only flip both `vc` signs together, so the number-conserving cross term
/// `q1·q2 + p1·p2` sees `|vc1 + vc2|` and the two-mode-squeezing term
/// `q1·q2 - p1·p2` sees `|vc1 - vc2|`. On sign-matched standard forms both
/// equal `|vc1| + |vc2|`; on mismatched ones the aligned reading would
/// overstate the witness and break the `expectation >= g_1` floor of the
/// number-conserving family.
fn cross_magnitude(sf: &StandardForm, family: Family) -> f64 {
    match family {
        Family::P => (sf.vc1() + sf.vc2()).abs(),
        Family::N => (sf.vc1() - sf.vc2()).abs(),
    }
}

/// Expectation value of the test operator on a standard form:
/// `2(v1·ω1 + v2·ω2) + ωc·(|vc1| + |vc2|)` when the coupling signs match
/// the family (a negative coupling reduces the value); the family-aligned
/// cross magnitude in general.
pub fn expectation(sf: &StandardForm, p: &WitnessParams) -> f64 {
    2.0 * (sf.v1() * p.omega1 + sf.v2() * p.omega2) + p.omegac * cross_magnitude(sf, p.family)
}

/// Distance from the ground-state bound: `Δ = g_∞ - expectation`.
/// Non-positive for physical states; zero means the state saturates the
/// operator's ground level.
pub fn delta(sf: &StandardForm, p: &WitnessParams) -> f64 {
    snbounds::g_inf(p) - expectation(sf, p)
}

/// The exact coupling: the root of `Δ(ωc) = 0`, taken as the negative root
/// of larger magnitude of the squared equation.
///
/// The root must be strictly interior (tangent solutions fall back to the
/// stationary-point coupling), satisfy semiboundedness, and reproduce
/// `Δ = 0` on back-substitution within `1e-9`; otherwise `NoRealRoot`.
pub fn omegac_primary(
    sf: &StandardForm,
    omega1: f64,
    omega2: f64,
    family: Family,
) -> Result<f64, WitnessError> {
    if omega1 <= 0.0 || omega2 <= 0.0 {
        return Err(WitnessError::InvalidParams("weights must be positive"));
    }
    let a = sf.v1() * omega1 + sf.v2() * omega2;
    let vc = 0.5 * cross_magnitude(sf, family);
    // Quadratic q2·ωc² + q1·ωc + q0 = 0 from squaring g_∞ = A + B·ωc.
    let (q2, q0) = match family {
        Family::N => (
            4.0 * vc * vc + 1.0,
            4.0 * a * a - (omega1 + omega2) * (omega1 + omega2),
        ),
        Family::P => (
            4.0 * vc * vc - 1.0,
            4.0 * a * a - (omega1 - omega2) * (omega1 - omega2),
        ),
    };
    let q1 = 8.0 * a * vc;
    // disc/4, guarded against tangency with a relative margin.
    let disc4 = 0.25 * q1 * q1 - q2 * q0;
    let scale = (0.25 * q1 * q1).abs().max((q2 * q0).abs()).max(1.0);
    if disc4 <= DISC_MARGIN * scale {
        return Err(WitnessError::NoRealRoot);
    }
    if q2 == 0.0 {
        return Err(WitnessError::NoRealRoot);
    }
    let sq = math::sqrt(disc4);
    // Stable quadratic roots.
    let half_q1 = 0.5 * q1;
    let qq = if half_q1 >= 0.0 {
        -(half_q1 + sq)
    } else {
        -(half_q1 - sq)
    };
    let r1 = qq / q2;
    let r2 = if qq != 0.0 { q0 / qq } else { f64::NAN };
    let candidate = match (r1 < 0.0, r2 < 0.0) {
        (true, true) => {
            if r1.abs() >= r2.abs() {
                r1
            } else {
                r2
            }
        }
        (true, false) => r1,
        (false, true) => r2,
        (false, false) => return Err(WitnessError::NoRealRoot),
    };
    let params = WitnessParams::new(family, omega1, omega2, candidate)
        .map_err(|_| WitnessError::NoRealRoot)?;
    if delta(sf, &params).abs() > BACKSUB_TOL {
        return Err(WitnessError::NoRealRoot);
    }
    Ok(candidate)
}

/// The stationary-point coupling `∂Δ/∂ωc = 0`.
///
/// Two-mode-squeezing family: `-2|vc|(ω1+ω2) / sqrt(1+4vc²)`, always
/// defined. Number-conserving family: `-2|vc(ω1-ω2)| / sqrt(1-4vc²)`,
/// defined for mean coupling `|vc| < 1/2`. Semiboundedness is re-checked on
/// the result.
pub fn omegac_fallback(
    sf: &StandardForm,
    omega1: f64,
    omega2: f64,
    family: Family,
) -> Result<f64, WitnessError> {
    if omega1 <= 0.0 || omega2 <= 0.0 {
        return Err(WitnessError::InvalidParams("weights must be positive"));
    }
    let vc = 0.5 * cross_magnitude(sf, family);
    let wc = match family {
        Family::N => -2.0 * vc * (omega1 + omega2) / math::sqrt(1.0 + 4.0 * vc * vc),
        Family::P => {
            if vc >= 0.5 {
                return Err(WitnessError::FallbackOutOfDomain);
            }
            -2.0 * (vc * (omega1 - omega2)).abs() / math::sqrt(1.0 - 4.0 * vc * vc)
        }
    };
    if wc * wc >= 4.0 * omega1 * omega2 * (1.0 - SEMIBOUND_MARGIN) {
        return Err(WitnessError::SemiboundednessViolated);
    }
    Ok(wc)
}

struct Candidate {
    params: WitnessParams,
    expectation: f64,
    certified_r: u32,
}

impl Candidate {
    /// Composite objective: `normalized_expectation - certified_r`. Levels
    /// live in `(0, 1]`, so smaller values order candidates first by the
    /// certified bound and then by margin.
    fn objective(&self) -> f64 {
        let norm = self.expectation / (self.params.omega1 + self.params.omega2);
        norm - self.certified_r as f64
    }
}

fn eval_point(sf: &StandardForm, family: Family, omega1: f64, rmax: u32) -> Option<Candidate> {
    let omega2 = 1.0 - omega1;
    let wc = omegac_primary(sf, omega1, omega2, family)
        .or_else(|_| omegac_fallback(sf, omega1, omega2, family))
        .ok()?;
    let params = WitnessParams::new(family, omega1, omega2, wc).ok()?;
    let e = expectation(sf, &params);
    let (certified_r, _) = snbounds::certified_level(e, &params, rmax);
    Some(Candidate {
        params,
        expectation: e,
        certified_r,
    })
}

/// Optimize `(ω1, ω2, ωc)` for a standard form under `ω1 + ω2 = 1`.
///
/// Scans ω1 over a uniform grid on `[1e-3, 1-1e-3]`, tries the exact
/// coupling then the stationary one at each point, and refines the best
/// point by golden section (tolerance `1e-6` on ω1). The objective
/// maximizes the certified bound, with ties broken by the smaller
/// normalized expectation and then by proximity to the symmetric point
/// ω1 = 1/2.
pub fn optimize(
    sf: &StandardForm,
    family: Family,
    rmax: u32,
    grid: u32,
) -> Result<OptimizationResult, WitnessError> {
    if rmax < 1 {
        return Err(WitnessError::InvalidParams("rmax must be at least 1"));
    }
    if grid < 3 {
        return Err(WitnessError::InvalidParams("grid must be at least 3"));
    }
    let grid = grid as usize;
    let mut trace = Vec::with_capacity(grid);
    let mut best: Option<(f64, f64, Candidate)> = None; // (objective, |ω1-1/2|)
    let step = (1.0 - 2.0 * OMEGA_MIN) / (grid - 1) as f64;
    for k in 0..grid {
        let w1 = OMEGA_MIN + step * k as f64;
        if let Some(cand) = eval_point(sf, family, w1, rmax) {
            trace.push(GridRecord {
                omega1: w1,
                omegac: cand.params.omegac,
                expectation: cand.expectation,
                certified_r: cand.certified_r,
            });
            let key = (cand.objective(), (w1 - 0.5).abs());
            let better = match &best {
                None => true,
                Some((obj, tie, _)) => {
                    key.0 < *obj - 1e-15 || (key.0 <= *obj + 1e-15 && key.1 < *tie)
                }
            };
            if better {
                best = Some((key.0, key.1, cand));
            }
        }
    }
    let (_, _, mut best_cand) = best.ok_or(WitnessError::NoUsableCoupling)?;

    // Golden-section refinement around the best grid point.
    let w1_best = best_cand.params.omega1;
    let lo = (w1_best - step).max(OMEGA_MIN);
    let hi = (w1_best + step).min(1.0 - OMEGA_MIN);
    let f = |w1: f64| -> f64 {
        eval_point(sf, family, w1, rmax)
            .map(|c| c.objective())
            .unwrap_or(f64::INFINITY)
    };
    let (w1_ref, f_ref) = golden_section_min(f, lo, hi, GOLDEN_TOL);
    if f_ref < best_cand.objective() - 1e-15 {
        if let Some(cand) = eval_point(sf, family, w1_ref, rmax) {
            best_cand = cand;
        }
    }

    // Materialize the full ladder only for the winner.
    let l = snbounds::ladder(&best_cand.params, rmax);
    let report = snbounds::certify(best_cand.expectation, &l);
    let g1 = best_cand.params.omega1 + best_cand.params.omega2;
    Ok(OptimizationResult {
        expectation: best_cand.expectation,
        normalized_expectation: best_cand.expectation / g1,
        certified_r: report.certified_r,
        saturated_inf: report.saturated_inf,
        params: best_cand.params,
        report,
        trace,
    })
}

/// Golden-section minimum of `f` on `[a, b]`; returns `(x, f(x))`.
fn golden_section_min(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, xtol: f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while (b - a).abs() > xtol {
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
    }
    if f1 < f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::tmsv;

    // Frozen oracles: tanh(1.4), sech(1.4).
    const TANH14: f64 = 0.8853516482022625;
    const SECH14: f64 = 0.4649219924089817;

    fn vacuum_sf() -> StandardForm {
        StandardForm::new(0.5, 0.5, 0.0, 0.0).unwrap()
    }

    #[test]
    fn params_guard_semiboundedness() {
        assert!(WitnessParams::new(Family::N, 0.5, 0.5, -0.99).is_ok());
        assert_eq!(
            WitnessParams::new(Family::N, 0.5, 0.5, -1.0).unwrap_err(),
            WitnessError::SemiboundednessViolated
        );
        assert!(WitnessParams::new(Family::N, 0.0, 0.5, 0.0).is_err());
    }

    #[test]
    fn expectation_examples() {
        let p = WitnessParams::new(Family::N, 0.3, 0.7, -0.2).unwrap();
        assert!((expectation(&vacuum_sf(), &p) - 1.0).abs() < 1e-15);

        let sf = tmsv(0.7).unwrap();
        let p = WitnessParams::new(Family::N, 0.5, 0.5, -TANH14).unwrap();
        assert!((expectation(&sf, &p) - SECH14).abs() < 1e-12);

        let sf = StandardForm::new(1.0, 1.0, 0.3, 0.3).unwrap();
        let p = WitnessParams::new(Family::P, 0.5, 0.5, -0.5).unwrap();
        assert!((expectation(&sf, &p) - 1.7).abs() < 1e-15);
    }

    #[test]
    fn delta_examples() {
        let p = WitnessParams::new(Family::N, 0.5, 0.5, -0.6).unwrap();
        assert!((delta(&vacuum_sf(), &p) - (-0.2)).abs() < 1e-12);

        let sf = tmsv(0.7).unwrap();
        let p = WitnessParams::new(Family::N, 0.5, 0.5, -TANH14).unwrap();
        assert!(delta(&sf, &p).abs() < 1e-4);
    }

    #[test]
    fn primary_has_no_root_for_squeezed_thermal() {
        // Pure squeezed vacuum sits exactly on the tangency.
        let sf = tmsv(0.7).unwrap();
        assert_eq!(
            omegac_primary(&sf, 0.5, 0.5, Family::N).unwrap_err(),
            WitnessError::NoRealRoot
        );
        // Global thermal noise only moves it further out.
        let sf = crate::states::squeezed_thermal(
            &crate::states::SqueezedThermalSpec::new(0.7, 0.4, 0.4, 0.0).unwrap(),
        )
        .unwrap();
        assert_eq!(
            omegac_primary(&sf, 0.5, 0.5, Family::N).unwrap_err(),
            WitnessError::NoRealRoot
        );
    }

    #[test]
    fn primary_has_no_root_for_phase_randomized() {
        for sigma in [0.1, 0.5, 1.0] {
            let sf = crate::states::phase_randomized(
                &crate::states::PhaseRandomizedSpec::new(0.7, sigma).unwrap(),
            )
            .unwrap();
            assert_eq!(
                omegac_primary(&sf, 0.5, 0.5, Family::N).unwrap_err(),
                WitnessError::NoRealRoot
            );
        }
    }

    #[test]
    fn primary_root_back_substitutes() {
        // Synthetic sub-Heisenberg quadruple admits an interior root.
        let sf = StandardForm::new(0.6, 0.6, 0.45, -0.45).unwrap();
        let wc = omegac_primary(&sf, 0.5, 0.5, Family::N).unwrap();
        // Frozen from the quadratic: (-1.08 - sqrt(0.37)) / 1.81.
        assert!((wc - (-0.9327493110662)).abs() < 1e-10);
        let p = WitnessParams::new(Family::N, 0.5, 0.5, wc).unwrap();
        assert!(delta(&sf, &p).abs() < 1e-9);
    }

    #[test]
    fn fallback_values() {
        let sf = tmsv(0.7).unwrap();
        let wc = omegac_fallback(&sf, 0.5, 0.5, Family::N).unwrap();
        assert!((wc - (-TANH14)).abs() < 1e-12);

        let flat = vacuum_sf();
        assert_eq!(omegac_fallback(&flat, 0.5, 0.5, Family::N).unwrap(), 0.0);

        // Symmetric weights kill the number-conserving stationary coupling.
        let sf = StandardForm::new(1.0, 1.0, 0.4, 0.4).unwrap();
        assert_eq!(omegac_fallback(&sf, 0.5, 0.5, Family::P).unwrap(), 0.0);
        // Sign-matched coupling at or above 1/2 leaves the domain.
        let strong = StandardForm::new(1.2, 1.2, 0.7, 0.5).unwrap();
        assert_eq!(
            omegac_fallback(&strong, 0.4, 0.6, Family::P).unwrap_err(),
            WitnessError::FallbackOutOfDomain
        );
    }

    #[test]
    fn mismatched_family_sees_no_coupling() {
        // Opposite-sign couplings cancel in the number-conserving cross
        // term; the expectation falls back to the uncoupled value and stays
        // above g_1.
        let sf = tmsv(0.7).unwrap();
        let p = WitnessParams::new(Family::P, 0.5, 0.5, -0.9).unwrap();
        assert!((expectation(&sf, &p) - 2.0 * sf.v1()).abs() < 1e-15);
        assert!(expectation(&sf, &p) >= 1.0);
        assert_eq!(omegac_fallback(&sf, 0.5, 0.5, Family::P).unwrap(), 0.0);
    }

    #[test]
    fn ground_state_saturation() {
        // The pure two-mode squeezed vacuum is the ground state of the
        // matched operator: expectation equals g_inf.
        for g in [0.0, 0.1, 0.7, 0.98, 2.0, 3.0] {
            let sf = tmsv(g).unwrap();
            let wc = omegac_fallback(&sf, 0.5, 0.5, Family::N).unwrap();
            let p = WitnessParams::new(Family::N, 0.5, 0.5, wc).unwrap();
            let e = expectation(&sf, &p);
            let ginf = snbounds::g_inf(&p);
            assert!((e - ginf).abs() < 1e-9, "gamma={g}: {e} vs {ginf}");
        }
    }

    #[test]
    fn optimize_tmsv_certifies_saturation() {
        let sf = tmsv(0.7).unwrap();
        let res = optimize(&sf, Family::N, 50, 101).unwrap();
        assert!((res.params.omega1() - 0.5).abs() < 1e-3);
        assert!(res.saturated_inf);
        assert_eq!(res.certified_r, 51);
        assert!(!res.trace.is_empty());
    }

    #[test]
    fn optimize_vacuum_certifies_nothing() {
        let res = optimize(&vacuum_sf(), Family::N, 8, 21).unwrap();
        assert_eq!(res.certified_r, 1);
        assert!((res.expectation - 1.0).abs() < 1e-12);
    }

    #[test]
    fn optimize_noisy_thermal_above_threshold() {
        // Past the detection threshold nothing is certified.
        let sf = crate::states::squeezed_thermal(
            &crate::states::SqueezedThermalSpec::new(0.7, 1.5, 1.5, 0.0).unwrap(),
        )
        .unwrap();
        let res = optimize(&sf, Family::N, 16, 101).unwrap();
        assert_eq!(res.certified_r, 1);
    }

    #[test]
    fn optimize_noisy_thermal_below_threshold() {
        let sf = crate::states::squeezed_thermal(
            &crate::states::SqueezedThermalSpec::new(0.7, 1.0, 1.0, 0.0).unwrap(),
        )
        .unwrap();
        let res = optimize(&sf, Family::N, 16, 101).unwrap();
        assert!(res.certified_r >= 2);
        assert!(res.normalized_expectation < 1.0);
    }

    #[test]
    fn normalized_expectation_consistency() {
        let sf = tmsv(0.5).unwrap();
        let res = optimize(&sf, Family::N, 8, 31).unwrap();
        let g1 = res.params.omega1() + res.params.omega2();
        assert!((res.normalized_expectation - res.expectation / g1).abs() < 1e-12);
    }

    #[test]
    fn certification_is_scale_invariant() {
        // Scaling all weights by c scales expectation, every level, and
        // g_inf by c; the certified integer is unchanged.
        let sf = crate::states::squeezed_thermal(
            &crate::states::SqueezedThermalSpec::new(0.9, 0.3, 0.3, 0.0).unwrap(),
        )
        .unwrap();
        let p1 = WitnessParams::new(Family::N, 0.5, 0.5, -0.7).unwrap();
        let c = 3.7;
        let p2 = WitnessParams::new(Family::N, 0.5 * c, 0.5 * c, -0.7 * c).unwrap();
        let (e1, e2) = (expectation(&sf, &p1), expectation(&sf, &p2));
        assert!((e2 - c * e1).abs() < 1e-12 * c);
        let (l1, l2) = (snbounds::ladder(&p1, 32), snbounds::ladder(&p2, 32));
        assert!((l2.g_inf() - c * l1.g_inf()).abs() < 1e-12 * c);
        for r in 0..32 {
            assert!((l2.raw()[r] - c * l1.raw()[r]).abs() < 1e-9 * c);
        }
        assert_eq!(
            snbounds::certify(e1, &l1).certified_r,
            snbounds::certify(e2, &l2).certified_r
        );
    }
}
