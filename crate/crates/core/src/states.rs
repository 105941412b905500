//! Closed-form standard forms for the example state families.
//!
//! Both generators return the standard-form quadruple directly; sweeps and
//! tests combine them with [`crate::witness`] and [`crate::snbounds`].

use core::fmt;

use crate::covariance::StandardForm;
use crate::math;

/// Errors from state-generator input validation.
#[derive(Clone, Debug, PartialEq)]
pub enum StateError {
    /// One of the noise or squeezing parameters is negative or non-finite.
    InvalidParameter(&'static str),
    /// `tanh(gamma)` is too close to 1; the variances diverge.
    GammaTooLarge,
}

impl fmt::Display for StateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StateError::InvalidParameter(what) => write!(f, "invalid parameter: {what}"),
            StateError::GammaTooLarge => write!(f, "tanh(gamma) too close to 1"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for StateError {}

/// Two-mode squeezed thermal state with locally added noise.
///
/// `gamma` is the two-mode squeezing parameter, `nbar1`/`nbar2` the mean
/// thermal photon numbers entering the squeezer, `mbar` the equal amount of
/// thermal noise added locally to each mode afterwards. The squeezing phase
/// `phi` is accepted for completeness but drops out of the standard form
/// (a local phase rotation absorbs it).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SqueezedThermalSpec {
    pub gamma: f64,
    pub nbar1: f64,
    pub nbar2: f64,
    pub mbar: f64,
    pub phi: f64,
}

impl SqueezedThermalSpec {
    pub fn new(gamma: f64, nbar1: f64, nbar2: f64, mbar: f64) -> Result<Self, StateError> {
        let spec = SqueezedThermalSpec {
            gamma,
            nbar1,
            nbar2,
            mbar,
            phi: 0.0,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Set the squeezing phase. It only rotates the phase-space frame and
    /// leaves the standard form unchanged.
    pub fn with_phi(mut self, phi: f64) -> Self {
        self.phi = phi;
        self
    }

    fn validate(&self) -> Result<(), StateError> {
        for (v, name) in [
            (self.gamma, "gamma"),
            (self.nbar1, "nbar1"),
            (self.nbar2, "nbar2"),
            (self.mbar, "mbar"),
        ] {
            if !v.is_finite() || v < 0.0 {
                return Err(StateError::InvalidParameter(name));
            }
        }
        if !self.phi.is_finite() {
            return Err(StateError::InvalidParameter("phi"));
        }
        Ok(())
    }
}

/// Partially phase-randomized squeezed vacuum: squeezing `gamma`
/// (`eps = tanh(gamma)`), Gaussian phase diffusion of standard deviation
/// `sigma` on one arm.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhaseRandomizedSpec {
    pub gamma: f64,
    pub sigma: f64,
}

impl PhaseRandomizedSpec {
    pub fn new(gamma: f64, sigma: f64) -> Result<Self, StateError> {
        if !gamma.is_finite() || gamma < 0.0 {
            return Err(StateError::InvalidParameter("gamma"));
        }
        if !sigma.is_finite() || sigma < 0.0 {
            return Err(StateError::InvalidParameter("sigma"));
        }
        Ok(PhaseRandomizedSpec { gamma, sigma })
    }
}

/// Standard form of the squeezed thermal state:
/// `v_{1,2} = (nbar_{1,2}+1/2)·cosh²γ + (nbar_{2,1}+1/2)·sinh²γ + mbar`,
/// `vc1 = -vc2 = (nbar1+nbar2+1)·sinhγ·coshγ`, so `det Vc <= 0` always.
pub fn squeezed_thermal(spec: &SqueezedThermalSpec) -> Result<StandardForm, StateError> {
    spec.validate()?;
    let ch = math::cosh(spec.gamma);
    let sh = math::sinh(spec.gamma);
    let (c2, s2) = (ch * ch, sh * sh);
    let v1 = (spec.nbar1 + 0.5) * c2 + (spec.nbar2 + 0.5) * s2 + spec.mbar;
    let v2 = (spec.nbar2 + 0.5) * c2 + (spec.nbar1 + 0.5) * s2 + spec.mbar;
    let vc = (spec.nbar1 + spec.nbar2 + 1.0) * sh * ch;
    StandardForm::new(v1, v2, vc, -vc).map_err(|_| StateError::InvalidParameter("spec"))
}

/// Standard form of the phase-randomized squeezed vacuum:
/// `v = (1+eps²) / (2(1-eps²))` and, per coupling component,
/// `vc1 = -vc2 = eps·e^(-sigma²/2) / (1-eps²)`.
pub fn phase_randomized(spec: &PhaseRandomizedSpec) -> Result<StandardForm, StateError> {
    let eps = math::tanh(spec.gamma);
    if eps >= 1.0 - 1e-12 {
        return Err(StateError::GammaTooLarge);
    }
    let denom = 1.0 - eps * eps;
    let v = (1.0 + eps * eps) / (2.0 * denom);
    let vc = eps * math::exp(-0.5 * spec.sigma * spec.sigma) / denom;
    StandardForm::new(v, v, vc, -vc).map_err(|_| StateError::InvalidParameter("spec"))
}

/// Two-mode squeezed vacuum: the squeezed thermal state with zero noise.
pub fn tmsv(gamma: f64) -> Result<StandardForm, StateError> {
    squeezed_thermal(&SqueezedThermalSpec::new(gamma, 0.0, 0.0, 0.0)?)
}
