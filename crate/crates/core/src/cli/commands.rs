use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use thiserror::Error;

use super::format::{exact, sig};
use super::statefile::{parse_state, write_state, StateFileError};
use crate::error::Error;
use crate::hermitian::{trace_distance, DensityMatrix};
use crate::lhv::{
    certify_state, ghz_feasible, noise_threshold, quadruple_of_state, witness, witness_threshold, CertificateReport,
};
use crate::states::{colored_noise_state, ghz_state, white_noise_state, NoiseKind, PurityParameter};
use crate::tilted::angle_scan;

pub const TOOL_NAME: &str = "ghzcert";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Exit code: the command ran and the state is nonlocal (or the command has no verdict).
pub const EXIT_OK: u8 = 0;
/// Exit code: `certify` ran and the state is locally explainable at the GHZ-event level.
pub const EXIT_LOCAL: u8 = 1;
/// Exit code: input or validation error.
pub const EXIT_ERROR: u8 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{path}: {source}")]
    StateFile { path: String, source: StateFileError },
    #[error("{0}")]
    Invalid(#[from] Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        EXIT_ERROR
    }
}

/// Text destined for standard output together with the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub stdout: String,
    pub code: u8,
}

impl CommandOutput {
    fn ok(stdout: String) -> Self {
        Self { stdout, code: EXIT_OK }
    }
}

/// Which state `make-state` emits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StateKind {
    Ghz,
    White,
    Colored,
}

pub fn load_state(path: &Path) -> Result<DensityMatrix, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_state(&text).map_err(|source| CliError::StateFile {
        path: path.display().to_string(),
        source,
    })
}

pub fn cmd_certify(path: &Path, machine: bool) -> Result<CommandOutput, CliError> {
    let rho = load_state(path)?;
    if rho.dim() != 8 {
        return Err(CliError::Usage(format!(
            "{}: certify needs a three-qubit (dim 8) state, got dim {}",
            path.display(),
            rho.dim()
        )));
    }
    let report = certify_state(&rho)?;
    let stdout = if machine {
        machine_report(&report, &path.display().to_string())
    } else {
        human_report(&report, &path.display().to_string())
    };
    let code = if report.verdict.is_nonlocal() {
        EXIT_OK
    } else {
        EXIT_LOCAL
    };
    Ok(CommandOutput { stdout, code })
}

const EVENT_KEYS: [&str; 4] = ["q_xxx_plus", "q_xyy_minus", "q_yxy_minus", "q_yyx_minus"];
const EVENT_LABELS: [&str; 4] = ["P(XXX = +1)", "P(XYY = -1)", "P(YXY = -1)", "P(YYX = -1)"];

fn machine_report(report: &CertificateReport, input: &str) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "tool={TOOL_NAME}");
    let _ = writeln!(s, "version={TOOL_VERSION}");
    let _ = writeln!(s, "input={input}");
    let _ = writeln!(s, "epsilon={}", exact(report.epsilon));
    let _ = writeln!(s, "witness={}", exact(report.witness_value));
    for (key, q) in EVENT_KEYS.iter().zip(report.quadruple.values()) {
        let _ = writeln!(s, "{key}={}", exact(q));
    }
    let _ = writeln!(s, "q_sum={}", exact(report.quadruple.sum()));
    let _ = writeln!(s, "lp_feasible={}", report.lp_feasible());
    let _ = writeln!(s, "verdict={}", report.verdict);
    let _ = writeln!(
        s,
        "not_completely_separable={}",
        report.excludes_complete_separability()
    );
    s
}

fn human_report(report: &CertificateReport, input: &str) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{TOOL_NAME} {TOOL_VERSION}: certificate for {input}");
    let _ = writeln!(s, "  trace distance to GHZ (epsilon)  {}", sig(report.epsilon, 15));
    let _ = writeln!(
        s,
        "  witness 4*epsilon - 1            {}",
        sig(report.witness_value, 15)
    );
    for (label, q) in EVENT_LABELS.iter().zip(report.quadruple.values()) {
        let _ = writeln!(s, "  {label:<32} {}", sig(q, 15));
    }
    let _ = writeln!(
        s,
        "  {:<32} {}",
        "sum of event probabilities",
        sig(report.quadruple.sum(), 15)
    );
    match &report.model {
        Some(model) => {
            let _ = writeln!(s, "  local deterministic model        found");
            for (strategy, w) in model.support() {
                let _ = writeln!(s, "    {w:.12}  {strategy:?}");
            }
        }
        None => {
            let _ = writeln!(s, "  local deterministic model        none (LP infeasible)");
        }
    }
    let _ = writeln!(s, "  verdict                          {}", report.verdict);
    if report.excludes_complete_separability() {
        let _ = writeln!(s, "  the state is not completely separable");
    }
    s
}

pub fn cmd_scan_noise(kind: NoiseKind, steps: usize, machine: bool) -> Result<CommandOutput, CliError> {
    if steps < 2 {
        return Err(CliError::Usage(format!("--steps must be at least 2, got {steps}")));
    }
    let ghz = ghz_state();
    let mut s = String::new();
    if machine {
        let _ = writeln!(s, "kind={kind}");
        let _ = writeln!(s, "columns=p,epsilon,witness,q1,q2,q3,q4,feasible");
    } else {
        let _ = writeln!(s, "{kind} noise, {steps} steps");
        let _ = writeln!(
            s,
            "{:>16} {:>16} {:>17} {:>16} {:>16} {:>16} {:>16}  feasible",
            "p", "epsilon", "witness", "q1", "q2", "q3", "q4"
        );
    }
    for i in 0..steps {
        let p = i as f64 / (steps - 1) as f64;
        let rho = kind.state(PurityParameter::new(p)?);
        let eps = trace_distance(&rho, &ghz)?;
        let w = witness(eps)?;
        let q = quadruple_of_state(&rho)?;
        let feasible = ghz_feasible(&q).is_some();
        let qs = q.values();
        if machine {
            let cols: Vec<String> = [p, eps, w].iter().chain(qs.iter()).map(|&x| exact(x)).collect();
            let _ = writeln!(s, "row={},{feasible}", cols.join(","));
        } else {
            let _ = writeln!(
                s,
                "{:>16} {:>16} {:>17} {:>16} {:>16} {:>16} {:>16}  {feasible}",
                sig(p, 12),
                sig(eps, 12),
                sig(w, 12),
                sig(qs[0], 12),
                sig(qs[1], 12),
                sig(qs[2], 12),
                sig(qs[3], 12)
            );
        }
    }
    let lp = noise_threshold(kind);
    let wit = witness_threshold(kind);
    if machine {
        let _ = writeln!(s, "threshold={}", exact(lp));
        let _ = writeln!(s, "witness_threshold={}", exact(wit));
    } else {
        let _ = writeln!(s, "p* = {lp:.6} ± 1e-6");
        let _ = writeln!(s, "witness p* = {wit:.6} ± 1e-6");
    }
    Ok(CommandOutput::ok(s))
}

pub fn cmd_scan_angles(grid: usize, machine: bool) -> Result<CommandOutput, CliError> {
    if grid < 2 {
        return Err(CliError::Usage(format!("--grid must be at least 2, got {grid}")));
    }
    let scan = angle_scan(grid)?;
    let mut s = String::new();
    if machine {
        let _ = writeln!(s, "columns=theta,alpha,beta,constraint,feasible");
    } else {
        let _ = writeln!(
            s,
            "{:>16} {:>16} {:>16} {:>17}  feasible",
            "theta", "alpha", "beta", "cos t + sin a sin b"
        );
    }
    for pt in &scan {
        let a = &pt.angles;
        if machine {
            let _ = writeln!(
                s,
                "row={},{},{},{},{}",
                exact(a.theta()),
                exact(a.alpha()),
                exact(a.beta()),
                exact(pt.constraint_value),
                pt.feasible
            );
        } else {
            let _ = writeln!(
                s,
                "{:>16} {:>16} {:>16} {:>17}  {}",
                sig(a.theta(), 12),
                sig(a.alpha(), 12),
                sig(a.beta(), 12),
                sig(pt.constraint_value, 12),
                pt.feasible
            );
        }
    }
    let infeasible = scan.iter().filter(|pt| !pt.feasible).count();
    if machine {
        let _ = writeln!(s, "infeasible_count={infeasible}");
        let _ = writeln!(s, "total={}", scan.len());
    } else {
        let _ = writeln!(
            s,
            "{infeasible} of {} lattice points exhibit nonlocality (no local model)",
            scan.len()
        );
    }
    Ok(CommandOutput::ok(s))
}

pub fn cmd_trace_distance(a: &Path, b: &Path) -> Result<CommandOutput, CliError> {
    let rho_a = load_state(a)?;
    let rho_b = load_state(b)?;
    if rho_a.dim() != rho_b.dim() {
        return Err(CliError::Usage(format!(
            "dimension mismatch: {} has dim {}, {} has dim {}",
            a.display(),
            rho_a.dim(),
            b.display(),
            rho_b.dim()
        )));
    }
    let d = trace_distance(&rho_a, &rho_b)?;
    Ok(CommandOutput::ok(format!("{}\n", sig(d, 12))))
}

pub fn cmd_make_state(kind: StateKind, p: Option<f64>, out: &Path) -> Result<CommandOutput, CliError> {
    let (rho, label) = match (kind, p) {
        (StateKind::Ghz, None) => (ghz_state(), "ghz".to_string()),
        (StateKind::Ghz, Some(_)) => return Err(CliError::Usage("--p is not used with --kind ghz".into())),
        (StateKind::White, Some(p)) => (white_noise_state(p)?, format!("white(p={p})")),
        (StateKind::Colored, Some(p)) => (colored_noise_state(p)?, format!("colored(p={p})")),
        (_, None) => return Err(CliError::Usage("--p is required for noisy states".into())),
    };
    fs::write(out, write_state(&rho)).map_err(|e| CliError::Io {
        path: out.display().to_string(),
        message: e.to_string(),
    })?;
    Ok(CommandOutput::ok(format!("wrote {label} to {}\n", out.display())))
}
