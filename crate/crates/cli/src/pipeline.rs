//! The certification pipeline: validate, reduce, select the family,
//! optimize, certify.

use snwitness_core::covariance::{
    invariants, reduce, select_family, validate_bona_fide, FamilySelection, Reduction, StandardForm,
};
use snwitness_core::snbounds;
use snwitness_core::witness::{optimize, Family, OptimizationResult, WitnessError};

use crate::report::{FamilyResult, InputInfo, Report, ToolInfo};

/// Family handling requested on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyChoice {
    /// Follow the sign of `det Vc`.
    Auto,
    ForceP,
    ForceN,
    /// Evaluate both families and report the better one.
    Both,
}

impl FamilyChoice {
    pub fn parse(text: &str) -> Option<Self> {
        match text {
            "auto" => Some(FamilyChoice::Auto),
            "p" => Some(FamilyChoice::ForceP),
            "n" => Some(FamilyChoice::ForceN),
            "both" => Some(FamilyChoice::Both),
            _ => None,
        }
    }
}

/// Pipeline outcome before report assembly.
pub struct Certification {
    pub reduction: Reduction,
    pub selection: FamilySelection,
    pub results: Vec<OptimizationResult>,
    /// Index into `results` of the best family.
    pub best: usize,
    pub rmax: u32,
}

/// Errors that map onto dedicated process exit codes.
#[derive(Debug, thiserror::Error)]
pub enum PipelineError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("covariance matrix is not bona fide (nu2 = {nu2})")]
    NotBonaFide { nu2: f64 },
    #[error("coupling block vanishes; no Schmidt number above 1 can be identified")]
    NoCoupling,
    #[error("witness optimization failed: {0}")]
    Witness(WitnessError),
}

/// Which families to run for a given selection and command-line choice.
fn families_to_run(
    selection: FamilySelection,
    choice: FamilyChoice,
) -> Result<Vec<Family>, PipelineError> {
    Ok(match choice {
        FamilyChoice::ForceP => vec![Family::P],
        FamilyChoice::ForceN => vec![Family::N],
        FamilyChoice::Both => vec![Family::P, Family::N],
        FamilyChoice::Auto => match selection {
            FamilySelection::P => vec![Family::P],
            FamilySelection::N => vec![Family::N],
            FamilySelection::Both => vec![Family::P, Family::N],
            FamilySelection::None => return Err(PipelineError::NoCoupling),
        },
    })
}

/// Run the full pipeline on a covariance matrix.
pub fn certify_cm(
    cm: &snwitness_core::CovarianceMatrix,
    choice: FamilyChoice,
    rmax: u32,
    grid: u32,
) -> Result<Certification, PipelineError> {
    // The bona-fide verdict comes first: unphysical matrices must be
    // reported as such, not as reduction failures.
    let check = validate_bona_fide(cm).map_err(|e| PipelineError::InvalidInput(e.to_string()))?;
    if !check.valid {
        return Err(PipelineError::NotBonaFide { nu2: check.nu2 });
    }
    let reduction = reduce(cm).map_err(|e| PipelineError::InvalidInput(e.to_string()))?;
    run_families(reduction, choice, rmax, grid)
}

/// Run the pipeline on an already-reduced standard form (generator input).
pub fn certify_sf(
    sf: &StandardForm,
    choice: FamilyChoice,
    rmax: u32,
    grid: u32,
) -> Result<Certification, PipelineError> {
    let cm = sf.embed();
    let check = validate_bona_fide(&cm).map_err(|e| PipelineError::InvalidInput(e.to_string()))?;
    if !check.valid {
        return Err(PipelineError::NotBonaFide { nu2: check.nu2 });
    }
    let inv = invariants(&cm).map_err(|e| PipelineError::InvalidInput(e.to_string()))?;
    let reduction = Reduction {
        standard_form: *sf,
        check,
        invariants: inv,
    };
    run_families(reduction, choice, rmax, grid)
}

fn run_families(
    reduction: Reduction,
    choice: FamilyChoice,
    rmax: u32,
    grid: u32,
) -> Result<Certification, PipelineError> {
    let selection = select_family(&reduction.standard_form);
    let families = families_to_run(selection, choice)?;
    let mut results = Vec::new();
    let mut last_err = None;
    for family in families {
        match optimize(&reduction.standard_form, family, rmax, grid) {
            Ok(res) => results.push(res),
            Err(e) => last_err = Some(e),
        }
    }
    if results.is_empty() {
        return Err(match last_err {
            Some(WitnessError::NoUsableCoupling) | None => PipelineError::NoCoupling,
            Some(e) => PipelineError::Witness(e),
        });
    }
    let mut best = 0;
    for i in 1..results.len() {
        let (a, b) = (&results[i], &results[best]);
        if a.certified_r > b.certified_r
            || (a.certified_r == b.certified_r
                && a.normalized_expectation < b.normalized_expectation)
        {
            best = i;
        }
    }
    Ok(Certification {
        reduction,
        selection,
        results,
        best,
        rmax,
    })
}

/// Assemble the JSON report.
pub fn build_report(cert: &Certification, input: InputInfo, seed: u64) -> Report {
    let evaluated: Vec<FamilyResult> = cert
        .results
        .iter()
        .map(|res| {
            let ladder = snbounds::ladder(&res.params, cert.rmax);
            FamilyResult::new(res, &ladder)
        })
        .collect();
    let best = &cert.results[cert.best];
    Report {
        tool: ToolInfo::default(),
        input,
        seed,
        standard_form: (&cert.reduction.standard_form).into(),
        symplectic_eigenvalues: [cert.reduction.check.nu1, cert.reduction.check.nu2],
        family_selection: match cert.selection {
            FamilySelection::P => "p",
            FamilySelection::N => "n",
            FamilySelection::Both => "both",
            FamilySelection::None => "none",
        }
        .to_string(),
        evaluated,
        certified_r: best.certified_r,
        saturated_inf: best.saturated_inf,
    }
}
