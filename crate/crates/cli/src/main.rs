//! `snwitness`: certify Schmidt-number lower bounds of two-mode
//! continuous-variable states from their covariance matrices.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde::Serialize;

use snwitness_cli::exit_codes;
use snwitness_cli::formats::{self, CmDocument};
use snwitness_cli::genspec::GeneratorSpec;
use snwitness_cli::pipeline::{self, FamilyChoice, PipelineError};
use snwitness_cli::report::InputInfo;
use snwitness_cli::sweep::{run_sweep, to_csv, SweepSpec};
use snwitness_core::covariance::{cm_from_samples, to_standard_form, validate_bona_fide};
use snwitness_core::snbounds;
use snwitness_core::witness::{Family, WitnessParams};

#[derive(Parser)]
#[command(
    name = "snwitness",
    version,
    about = "Schmidt-number witnessing from two-mode covariance matrices"
)]
struct Cli {
    /// Deepest ladder level g_r to compute
    #[arg(long, global = true, default_value_t = 64)]
    rmax: u32,

    /// Grid points for the omega1 coefficient scan
    #[arg(long, global = true, default_value_t = 101)]
    grid: u32,

    /// Test-operator family: auto, p, n, or both
    #[arg(long, global = true, default_value = "auto")]
    family: String,

    /// Write the primary output (JSON or CSV) to this path instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Seed recorded in reports (reserved for stochastic extensions)
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full pipeline: validate, reduce, optimize, certify; prints a JSON report
    Certify {
        /// Covariance matrix JSON document
        #[arg(long)]
        cm: Option<PathBuf>,
        /// Homodyne samples CSV (header q1,p1,q2,p2)
        #[arg(long)]
        samples: Option<PathBuf>,
        /// Generator spec, e.g. "squeezed-thermal gamma=0.7 nbar=0.5"
        #[arg(long)]
        state: Option<String>,
    },
    /// Reduce a covariance matrix to its standard form
    StandardForm {
        #[arg(long)]
        cm: PathBuf,
    },
    /// Sweep one generator parameter and emit one certification per row as CSV
    Sweep {
        /// Generator spec with the fixed parameters
        #[arg(long)]
        state: String,
        /// Name of the swept parameter
        #[arg(long)]
        param: String,
        #[arg(long, allow_negative_numbers = true)]
        start: f64,
        #[arg(long, allow_negative_numbers = true)]
        stop: f64,
        #[arg(long)]
        step: f64,
    },
    /// Estimate a covariance matrix from homodyne samples
    Ingest {
        #[arg(long)]
        samples: PathBuf,
    },
    /// Tabulate the bound ladder g_r for explicit witness coefficients
    GrTable {
        /// Family: p or n
        #[arg(long)]
        family: String,
        /// omega1 weight; omega2 = 1 - omega1
        #[arg(long, default_value_t = 0.5)]
        omega1: f64,
        /// Coupling coefficient
        #[arg(long, allow_negative_numbers = true)]
        omegac: f64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_codes::INVALID_INPUT as u8)
        }
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)
            .with_context(|| format!("cannot write {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn family_choice(cli: &Cli) -> Result<FamilyChoice> {
    FamilyChoice::parse(&cli.family).with_context(|| {
        format!(
            "--family must be auto, p, n, or both (got {:?})",
            cli.family
        )
    })
}

fn run(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Certify { cm, samples, state } => {
            cmd_certify(cli, cm.as_deref(), samples.as_deref(), state.as_deref())
        }
        Command::StandardForm { cm } => cmd_standard_form(cli, cm),
        Command::Sweep {
            state,
            param,
            start,
            stop,
            step,
        } => cmd_sweep(cli, state, param, *start, *stop, *step),
        Command::Ingest { samples } => cmd_ingest(cli, samples),
        Command::GrTable {
            family,
            omega1,
            omegac,
        } => cmd_gr_table(cli, family, *omega1, *omegac),
    }
}

fn pipeline_exit(err: &PipelineError) -> i32 {
    match err {
        PipelineError::InvalidInput(_) => exit_codes::INVALID_INPUT,
        PipelineError::NotBonaFide { .. } => exit_codes::NOT_BONA_FIDE,
        PipelineError::NoCoupling => exit_codes::NO_COUPLING,
        PipelineError::Witness(_) => exit_codes::NO_COUPLING,
    }
}

fn cmd_certify(
    cli: &Cli,
    cm: Option<&Path>,
    samples: Option<&Path>,
    state: Option<&str>,
) -> Result<i32> {
    let given = [cm.is_some(), samples.is_some(), state.is_some()]
        .iter()
        .filter(|&&b| b)
        .count();
    if given != 1 {
        bail!("pass exactly one of --cm, --samples, or --state");
    }
    let choice = family_choice(cli)?;

    let (cert, input) = if let Some(path) = cm {
        let matrix = formats::read_cm(path)?;
        let cert = pipeline::certify_cm(&matrix, choice, cli.rmax, cli.grid);
        let input = InputInfo {
            kind: "cm".into(),
            detail: path.display().to_string(),
            sha256: Some(formats::file_sha256(path)?),
            samples: None,
        };
        (cert, input)
    } else if let Some(path) = samples {
        let records = formats::read_samples(path)?;
        let matrix = cm_from_samples(&records)
            .map_err(|e| anyhow::anyhow!("sample estimation failed: {e}"))?;
        let cert = pipeline::certify_cm(&matrix, choice, cli.rmax, cli.grid);
        let input = InputInfo {
            kind: "samples".into(),
            detail: path.display().to_string(),
            sha256: Some(formats::file_sha256(path)?),
            samples: Some(records.len()),
        };
        (cert, input)
    } else {
        let spec = GeneratorSpec::parse(state.unwrap())?;
        let sf = spec.realize()?;
        let cert = pipeline::certify_sf(&sf, choice, cli.rmax, cli.grid);
        let input = InputInfo {
            kind: "state".into(),
            detail: state.unwrap().to_string(),
            sha256: None,
            samples: None,
        };
        (cert, input)
    };

    let cert = match cert {
        Ok(cert) => cert,
        Err(err) => {
            eprintln!("error: {err}");
            return Ok(pipeline_exit(&err));
        }
    };
    let report = pipeline::build_report(&cert, input, cli.seed);
    emit(&cli.out, &formats::to_json_g9(&report)?)?;
    if cli.out.is_some() {
        // Still give scripts the verdict on stdout.
        println!("certified_r={}", report.certified_r);
    }
    Ok(if report.certified_r >= 2 {
        exit_codes::CERTIFIED
    } else {
        exit_codes::NOT_CERTIFIED
    })
}

#[derive(Serialize)]
struct StandardFormReply {
    v1: f64,
    v2: f64,
    vc1: f64,
    vc2: f64,
    det_vc: f64,
    symplectic_eigenvalues: [f64; 2],
}

fn cmd_standard_form(cli: &Cli, cm_path: &Path) -> Result<i32> {
    let matrix = formats::read_cm(cm_path)?;
    let check = validate_bona_fide(&matrix)
        .map_err(|e| anyhow::anyhow!("invalid covariance matrix: {e}"))?;
    if !check.valid {
        eprintln!(
            "error: covariance matrix is not bona fide (nu2 = {})",
            check.nu2
        );
        return Ok(exit_codes::NOT_BONA_FIDE);
    }
    let sf = to_standard_form(&matrix).map_err(|e| anyhow::anyhow!("reduction failed: {e}"))?;
    let reply = StandardFormReply {
        v1: sf.v1(),
        v2: sf.v2(),
        vc1: sf.vc1(),
        vc2: sf.vc2(),
        det_vc: sf.det_vc(),
        symplectic_eigenvalues: [check.nu1, check.nu2],
    };
    emit(&cli.out, &formats::to_json_g9(&reply)?)?;
    Ok(exit_codes::CERTIFIED)
}

fn cmd_sweep(cli: &Cli, state: &str, param: &str, start: f64, stop: f64, step: f64) -> Result<i32> {
    let spec = SweepSpec {
        generator: GeneratorSpec::parse(state)?,
        param: param.to_string(),
        start,
        stop,
        step,
        family: family_choice(cli)?,
        rmax: cli.rmax,
        grid: cli.grid,
    };
    let rows = run_sweep(&spec)?;
    emit(&cli.out, &to_csv(&spec, &rows))?;
    Ok(exit_codes::CERTIFIED)
}

#[derive(Serialize)]
struct IngestReply {
    samples: usize,
    bona_fide: bool,
    symplectic_eigenvalues: [f64; 2],
    #[serde(skip_serializing_if = "Option::is_none")]
    cm: Option<CmDocument>,
}

fn cmd_ingest(cli: &Cli, samples_path: &Path) -> Result<i32> {
    let records = formats::read_samples(samples_path)?;
    let matrix =
        cm_from_samples(&records).map_err(|e| anyhow::anyhow!("sample estimation failed: {e}"))?;
    let check = validate_bona_fide(&matrix)
        .map_err(|e| anyhow::anyhow!("estimated matrix rejected: {e}"))?;
    let doc = CmDocument::new(&matrix);
    let reply = IngestReply {
        samples: records.len(),
        bona_fide: check.valid,
        symplectic_eigenvalues: [check.nu1, check.nu2],
        cm: if cli.out.is_some() { None } else { Some(doc) },
    };
    if let Some(path) = &cli.out {
        std::fs::write(path, formats::to_json_g9(&CmDocument::new(&matrix))?)
            .with_context(|| format!("cannot write {}", path.display()))?;
    }
    print!("{}", formats::to_json_g9(&reply)?);
    Ok(exit_codes::CERTIFIED)
}

fn cmd_gr_table(cli: &Cli, family: &str, omega1: f64, omegac: f64) -> Result<i32> {
    let family = match family {
        "p" => Family::P,
        "n" => Family::N,
        other => bail!("--family must be p or n for gr-table (got {other:?})"),
    };
    let omega2 = 1.0 - omega1;
    let params = WitnessParams::new(family, omega1, omega2, omegac)
        .map_err(|e| anyhow::anyhow!("invalid witness coefficients: {e}"))?;
    let ladder = snbounds::ladder(&params, cli.rmax);
    let mut out = String::from("r,g_raw,g_effective,note\n");
    for r in 1..=cli.rmax as usize {
        let raw = ladder.raw()[r - 1];
        let eff = ladder.effective()[r - 1];
        let note = if raw > eff + 1e-12 {
            "raw_above_envelope"
        } else {
            ""
        };
        out.push_str(&format!(
            "{r},{},{},{note}\n",
            formats::fmt_g9(raw),
            formats::fmt_g9(eff)
        ));
    }
    out.push_str(&format!(
        "inf,{g},{g},\n",
        g = formats::fmt_g9(ladder.g_inf())
    ));
    emit(&cli.out, &out)?;
    Ok(exit_codes::CERTIFIED)
}
