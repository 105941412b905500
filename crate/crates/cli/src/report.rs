//! Machine-readable certification reports.

use serde::Serialize;
use snwitness_core::covariance::StandardForm;
use snwitness_core::snbounds::GrLadder;
use snwitness_core::witness::OptimizationResult;

pub const TOOL_NAME: &str = "snwitness";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Serialize)]
pub struct Report {
    pub tool: ToolInfo,
    pub input: InputInfo,
    pub seed: u64,
    pub standard_form: StandardFormOut,
    pub symplectic_eigenvalues: [f64; 2],
    pub family_selection: String,
    pub evaluated: Vec<FamilyResult>,
    /// Best certified Schmidt-number lower bound over the evaluated
    /// families.
    pub certified_r: u32,
    pub saturated_inf: bool,
}

#[derive(Serialize)]
pub struct ToolInfo {
    pub name: String,
    pub version: String,
}

impl Default for ToolInfo {
    fn default() -> Self {
        ToolInfo {
            name: TOOL_NAME.to_string(),
            version: TOOL_VERSION.to_string(),
        }
    }
}

/// Provenance: where the state came from.
#[derive(Serialize)]
pub struct InputInfo {
    /// `cm`, `samples`, or `state`.
    pub kind: String,
    /// File path or generator spec text.
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sha256: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
}

#[derive(Serialize)]
pub struct StandardFormOut {
    pub v1: f64,
    pub v2: f64,
    pub vc1: f64,
    pub vc2: f64,
    pub det_vc: f64,
}

impl From<&StandardForm> for StandardFormOut {
    fn from(sf: &StandardForm) -> Self {
        StandardFormOut {
            v1: sf.v1(),
            v2: sf.v2(),
            vc1: sf.vc1(),
            vc2: sf.vc2(),
            det_vc: sf.det_vc(),
        }
    }
}

/// One optimized family with its full ladder.
#[derive(Serialize)]
pub struct FamilyResult {
    pub family: String,
    pub omega1: f64,
    pub omega2: f64,
    pub omegac: f64,
    pub expectation: f64,
    pub normalized_expectation: f64,
    pub g_inf: f64,
    pub ladder_raw: Vec<f64>,
    pub ladder_effective: Vec<f64>,
    pub certified_r: u32,
    pub saturated_inf: bool,
}

impl FamilyResult {
    pub fn new(res: &OptimizationResult, ladder: &GrLadder) -> Self {
        FamilyResult {
            family: res.params.family().to_string(),
            omega1: res.params.omega1(),
            omega2: res.params.omega2(),
            omegac: res.params.omegac(),
            expectation: res.expectation,
            normalized_expectation: res.normalized_expectation,
            g_inf: ladder.g_inf(),
            ladder_raw: ladder.raw().to_vec(),
            ladder_effective: ladder.effective().to_vec(),
            certified_r: res.certified_r,
            saturated_inf: res.saturated_inf,
        }
    }
}
