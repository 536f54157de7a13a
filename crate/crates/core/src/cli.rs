//! The `mixfourier` command line.
//!
//! ```text
//! mixfourier constants --r 4/3 --dim 2
//! mixfourier verify restriction --p 4/3 --trials 100 --seed 7
//! mixfourier sweep blowup --p 2 --s 4/3 --out blowup.csv
//! ```
//!
//! Exit codes: 0 pass, 1 inequality failure (or missed sweep target),
//! 2 usage or exponent-gate error. Every output starts with the resolved
//! [`RunConfig`]; no timestamps are written, so identical configurations
//! produce identical bytes.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::counterexample::{
    blowup_sweep, delta_divergence_demo, delta_product_control, halving_sequence, necessity_sweep, DilationAxis,
    SweepReport,
};
use crate::error::{Error, Result};
use crate::exponents::{beckner_power, DimensionPair, Exponent, ExponentTuple};
use crate::inequalities::{run_suite, tolerance, InequalityId, SuiteConfig, TrialExponents};
use crate::sampling::{GridSpec, DEFAULT_EXTENT, DEFAULT_POINTS};

/// Seed used when `--seed` is omitted.
pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_TRIALS: usize = 100;

#[derive(Debug, Parser)]
#[command(name = "mixfourier", version, about = "Mixed-norm Fourier inequalities: constants, ratio suites and scaling sweeps")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sharp Hausdorff-Young constants C_r and their powers.
    Constants {
        /// Exponents in [1, 2]; repeatable.
        #[arg(long = "r", required = true, num_args = 1..)]
        r: Vec<Exponent>,
        /// Dimensions for C_r^d; repeatable.
        #[arg(long = "dim", num_args = 1.., default_values_t = [1usize])]
        dim: Vec<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Seeded random suite for one inequality.
    Verify {
        #[arg(value_enum)]
        inequality: VerifyTarget,
        #[command(flatten)]
        exponents: ExponentArgs,
        #[command(flatten)]
        run: RunArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Scaling sweep with a log-log slope fit.
    Sweep {
        #[arg(value_enum)]
        kind: SweepTarget,
        #[command(flatten)]
        exponents: ExponentArgs,
        #[command(flatten)]
        run: RunArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerifyTarget {
    Restriction,
    Bilinear,
    Variant,
    SameOrder,
    HausdorffYoung,
}

impl From<VerifyTarget> for InequalityId {
    fn from(v: VerifyTarget) -> Self {
        match v {
            VerifyTarget::Restriction => InequalityId::Restriction,
            VerifyTarget::Bilinear => InequalityId::Bilinear,
            VerifyTarget::Variant => InequalityId::Variant,
            VerifyTarget::SameOrder => InequalityId::SameOrder,
            VerifyTarget::HausdorffYoung => InequalityId::HausdorffYoung,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepTarget {
    Blowup,
    Delta,
    Necessity,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Debug, Default, Args)]
pub struct ExponentArgs {
    /// Exponents as integers, fractions (4/3) or `inf`.
    #[arg(long)]
    pub p: Option<Exponent>,
    #[arg(long)]
    pub s: Option<Exponent>,
    #[arg(long)]
    pub q: Option<Exponent>,
    #[arg(long)]
    pub t: Option<Exponent>,
    #[arg(long)]
    pub r: Option<Exponent>,
}

impl ExponentArgs {
    fn map(&self) -> BTreeMap<String, Exponent> {
        [("p", self.p), ("s", self.s), ("q", self.q), ("t", self.t), ("r", self.r)]
            .into_iter()
            .filter_map(|(k, e)| e.map(|e| (k.to_string(), e)))
            .collect()
    }

    fn tuple(&self) -> Option<ExponentTuple> {
        Some(ExponentTuple::new(self.p?, self.s?, self.q?, self.t?, self.r?))
    }
}

#[derive(Clone, Debug, Args)]
pub struct RunArgs {
    #[arg(long, default_value_t = 1)]
    pub d1: usize,
    #[arg(long, default_value_t = 1)]
    pub d2: usize,
    /// Points per axis (even). Sweeps fit a grid per point when omitted.
    #[arg(long = "grid-n")]
    pub grid_n: Option<usize>,
    /// Extent per axis.
    #[arg(long = "grid-l")]
    pub grid_l: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    pub trials: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Clone, Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Output file; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Fully resolved run; echoed at the top of every output.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub command: String,
    pub target: Option<String>,
    /// `None` for sweeps that fit a grid per point.
    pub grid: Option<GridSpec>,
    pub dims: DimensionPair,
    pub seed: u64,
    pub trials: usize,
    pub exponents: BTreeMap<String, Exponent>,
    pub format: Format,
    pub out: Option<PathBuf>,
}

/// Process exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Failure,
}

impl Outcome {
    fn from_pass(pass: bool) -> Self {
        if pass {
            Outcome::Pass
        } else {
            Outcome::Failure
        }
    }

    pub fn code(self) -> i32 {
        match self {
            Outcome::Pass => 0,
            Outcome::Failure => 1,
        }
    }
}

/// Exit code for errors: gates and bad input are all usage errors.
pub const USAGE_ERROR: i32 = 2;

/// Runs a parsed command, writing to `--out` or `stdout`; diagnostics go to `stderr`.
pub fn run(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    match execute(cli, stdout) {
        Ok(outcome) => outcome.code(),
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            USAGE_ERROR
        }
    }
}

fn execute(cli: Cli, stdout: &mut dyn Write) -> Result<Outcome> {
    match cli.command {
        Command::Constants { r, dim, output } => constants(&r, &dim, &output, stdout),
        Command::Verify { inequality, exponents, run, output } => verify(inequality, &exponents, &run, &output, stdout),
        Command::Sweep { kind, exponents, run, output } => sweep(kind, &exponents, &run, &output, stdout),
    }
}

fn io_err(path: &Path) -> impl Fn(std::io::Error) -> Error + '_ {
    move |source| Error::Io { path: path.to_path_buf(), source }
}

/// Writes the whole payload through one writer, to the file or to stdout.
fn emit(out: Option<&Path>, payload: &str, stdout: &mut dyn Write) -> Result<()> {
    match out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path).map_err(io_err(path))?);
            w.write_all(payload.as_bytes()).map_err(io_err(path))?;
            w.flush().map_err(io_err(path))
        }
        None => stdout.write_all(payload.as_bytes()).map_err(io_err(Path::new("<stdout>"))),
    }
}

fn dims(run: &RunArgs) -> Result<DimensionPair> {
    DimensionPair::new(run.d1, run.d2)
}

fn fixed_grid(run: &RunArgs, dims: DimensionPair) -> Result<GridSpec> {
    GridSpec::new(dims, run.grid_n.unwrap_or(DEFAULT_POINTS), run.grid_l.unwrap_or(DEFAULT_EXTENT))
}

fn constants(r: &[Exponent], dims: &[usize], output: &OutputArgs, stdout: &mut dyn Write) -> Result<Outcome> {
    let format = output.format.unwrap_or(Format::Csv);
    let config = json!({
        "command": "constants",
        "r": r,
        "dim": dims,
        "format": format,
        "out": output.out,
    });
    let mut rows = Vec::new();
    for &e in r {
        for &d in dims {
            let c1 = beckner_power(e, 1)?;
            let cd = beckner_power(e, d)?;
            rows.push((e, e.conjugate(), d, c1, cd));
        }
    }
    let mut payload = String::new();
    match format {
        Format::Csv => {
            payload.push_str(&format!("# config {config}\n"));
            payload.push_str("r,conjugate,dim,constant,constant_power\n");
            for (e, c, d, c1, cd) in rows {
                payload.push_str(&format!("{e},{c},{d},{c1:.15},{cd:.15}\n"));
            }
        }
        Format::Json => {
            payload.push_str(&json!({ "config": config }).to_string());
            payload.push('\n');
            for (e, c, d, c1, cd) in rows {
                let row = json!({ "r": e, "conjugate": c, "dim": d, "constant": c1, "constant_power": cd });
                payload.push_str(&row.to_string());
                payload.push('\n');
            }
        }
    }
    emit(output.out.as_deref(), &payload, stdout)?;
    Ok(Outcome::Pass)
}

fn missing(names: &str) -> Error {
    Error::InvalidParameter(format!("give all of {names} or none of them"))
}

/// Selections from the flags, or the defaults when no exponent is given.
fn verify_selections(id: InequalityId, ex: &ExponentArgs) -> Result<Option<Vec<TrialExponents>>> {
    let selections = match id {
        InequalityId::Restriction | InequalityId::HausdorffYoung => ex.p.map(|p| vec![TrialExponents::Single { p }]),
        InequalityId::Variant | InequalityId::SameOrder => match (ex.p, ex.s) {
            (Some(p), Some(s)) => Some(vec![TrialExponents::Pair { p, s }]),
            (None, None) => None,
            _ => return Err(missing("--p --s")),
        },
        InequalityId::Bilinear => match ex.tuple() {
            Some(tuple) => {
                if let Some(relation) = tuple.admissibility().reason() {
                    return Err(Error::Inadmissible(relation));
                }
                Some(vec![TrialExponents::Tuple(tuple)])
            }
            None if ex.map().is_empty() => None,
            None => return Err(missing("--p --s --q --t --r")),
        },
    };
    Ok(selections)
}

/// Plancherel tolerance when every exponent is 2, else the random-suite one.
fn suite_tolerance(selections: &[TrialExponents]) -> f64 {
    let all_two = selections.iter().all(|s| match s {
        TrialExponents::Single { p } => p.is_two(),
        TrialExponents::Pair { p, s } => p.is_two() && s.is_two(),
        TrialExponents::Tuple(_) => false,
    });
    if all_two {
        tolerance::PLANCHEREL
    } else {
        tolerance::RANDOM_SUITE
    }
}

fn verify(
    target: VerifyTarget,
    ex: &ExponentArgs,
    run: &RunArgs,
    output: &OutputArgs,
    stdout: &mut dyn Write,
) -> Result<Outcome> {
    let id = InequalityId::from(target);
    let dims = dims(run)?;
    let grid = fixed_grid(run, dims)?;
    if id != InequalityId::HausdorffYoung && dims.d2 == 0 {
        return Err(Error::InvalidParameter(format!("{id} needs d2 >= 1")));
    }
    let format = output.format.unwrap_or(Format::Json);
    let mut suite = SuiteConfig::new(id, grid, run.seed);
    suite.trials = run.trials;
    if let Some(selections) = verify_selections(id, ex)? {
        suite.selections = selections;
    }
    suite.tolerance = suite_tolerance(&suite.selections);
    let config = RunConfig {
        command: "verify".into(),
        target: Some(id.name().into()),
        grid: Some(grid),
        dims,
        seed: run.seed,
        trials: run.trials,
        exponents: ex.map(),
        format,
        out: output.out.clone(),
    };
    let summary = run_suite(&suite)?;
    let pass = summary.all_pass();
    let mut payload = String::new();
    match format {
        Format::Json => {
            payload.push_str(&serde_json::to_string(&json!({ "config": config, "selections": suite.selections }))?);
            payload.push('\n');
            for report in &summary.reports {
                payload.push_str(&serde_json::to_string(report)?);
                payload.push('\n');
            }
            let tail = json!({ "summary": {
                "trials": summary.reports.len(),
                "failures": summary.failures,
                "degenerate": summary.degenerate,
                "max_ratio": summary.max_ratio,
                "tolerance": suite.tolerance,
                "pass": pass,
            }});
            payload.push_str(&tail.to_string());
            payload.push('\n');
        }
        Format::Csv => {
            payload.push_str(&format!("# config {}\n", serde_json::to_string(&config)?));
            payload.push_str("inequality_id,exponents,ratio,pass\n");
            for report in &summary.reports {
                let ratio = report.ratio.map(|r| format!("{r:.12e}")).unwrap_or_else(|| "degenerate".into());
                payload.push_str(&format!("{},{},{},{}\n", report.inequality, report.exponent_label(), ratio, report.pass));
            }
        }
    }
    emit(output.out.as_deref(), &payload, stdout)?;
    Ok(Outcome::from_pass(pass))
}

fn gate(cond: bool, message: impl Into<String>) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(message.into()))
    }
}

/// Default parameter lists.
pub fn blowup_dilations() -> Vec<f64> {
    halving_sequence(1.0, 6)
}

pub fn delta_widths() -> Vec<f64> {
    halving_sequence(2.0, 5)
}

pub fn necessity_scales() -> Vec<f64> {
    let r = std::f64::consts::SQRT_2;
    vec![0.5, 1.0 / r, 1.0, r, 2.0]
}

fn sweep(
    kind: SweepTarget,
    ex: &ExponentArgs,
    run: &RunArgs,
    output: &OutputArgs,
    stdout: &mut dyn Write,
) -> Result<Outcome> {
    let dims = dims(run)?;
    gate(dims == DimensionPair { d1: 1, d2: 1 }, "sweeps run with d1 = d2 = 1")?;
    let grid = if run.grid_n.is_some() || run.grid_l.is_some() { Some(fixed_grid(run, dims)?) } else { None };
    let mut exponents = ex.map();
    let (reports, pass) = match kind {
        SweepTarget::Blowup => {
            let p = ex.p.unwrap_or(Exponent::TWO);
            let s = ex.s.ok_or_else(|| Error::InvalidParameter("blowup needs --s".into()))?;
            gate(
                s.value() < p.value(),
                format!("blowup needs s < p (got p={p}, s={s}); s >= p is the bounded regime"),
            )?;
            exponents.insert("p".into(), p);
            let report = blowup_sweep(p, s, &blowup_dilations(), grid)?;
            let pass = report.slope_matches() && report.increasing_as_parameter_decreases();
            (vec![report], pass)
        }
        SweepTarget::Delta => {
            let p = ex.p.unwrap_or(Exponent::TWO);
            exponents.insert("p".into(), p);
            let widths = delta_widths();
            let report = delta_divergence_demo(p, &widths, None, grid)?;
            let control = delta_product_control(p, &widths, None, grid)?;
            let pass = report.divergence_milestone();
            (vec![report, control], pass)
        }
        SweepTarget::Necessity => {
            let tuple = ex.tuple().ok_or_else(|| missing("--p --s --q --t --r"))?;
            let scales = necessity_scales();
            let first = necessity_sweep(&tuple, &scales, DilationAxis::First, grid)?;
            let second = necessity_sweep(&tuple, &scales, DilationAxis::Second, grid)?;
            let pass = first.slope_matches() && second.slope_matches();
            (vec![first, second], pass)
        }
    };
    let format = output.format.unwrap_or(Format::Csv);
    let config = RunConfig {
        command: "sweep".into(),
        target: Some(format!("{:?}", kind).to_lowercase()),
        grid,
        dims,
        seed: run.seed,
        trials: run.trials,
        exponents,
        format,
        out: output.out.clone(),
    };
    let document = sweep_json(&config, &reports, pass)?;
    let payload = match format {
        Format::Csv => sweep_csv(&config, &reports)?,
        Format::Json => document.clone(),
    };
    emit(output.out.as_deref(), &payload, stdout)?;
    if let (Format::Csv, Some(path)) = (format, output.out.as_deref()) {
        let sidecar = sidecar_path(path);
        emit(Some(&sidecar), &document, stdout)?;
    }
    Ok(Outcome::from_pass(pass))
}

/// `<out>.json` next to a CSV output.
pub fn sidecar_path(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".json");
    PathBuf::from(s)
}

fn sweep_json(config: &RunConfig, reports: &[SweepReport], pass: bool) -> Result<String> {
    let mut s = serde_json::to_string_pretty(&json!({ "config": config, "reports": reports, "pass": pass }))?;
    s.push('\n');
    Ok(s)
}

/// One CSV section per report, each closed by a JSON footer line.
fn sweep_csv(config: &RunConfig, reports: &[SweepReport]) -> Result<String> {
    let mut out = format!("# config {}\n", serde_json::to_string(config)?);
    for report in reports {
        out.push_str(&format!("# sweep {}\n", serde_json::to_string(&report.kind)?.trim_matches('"')));
        out.push_str(&report.to_csv());
        out.push_str(&format!("# {}\n", serde_json::to_string(&report.fit())?));
    }
    Ok(out)
}
