//! Deciding CNF formulas: a built-in CDCL solver for desk-scale instances,
//! a driver for external DIMACS solvers, and all-solutions enumeration with
//! projected blocking clauses.

mod cdcl;

use crate::encode::{emit_dimacs, parse_dimacs_result, CnfFormula, EncodeError};
use std::io::Write as _;
use std::time::{Duration, Instant};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SolveError {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("solver command template must contain the '{{cnf}}' placeholder: {0}")]
    BadCommandTemplate(String),
    #[error("external solver wrote no parseable result: {0}")]
    Output(#[from] EncodeError),
    #[error("external solver status line and exit code disagree ({status_line} vs code {exit_code})")]
    StatusMismatch {
        status_line: &'static str,
        exit_code: i32,
    },
    #[error("reported model fails the clause re-check; refusing to accept it")]
    ModelRecheckFailed,
    #[error("projection must be nonempty")]
    EmptyProjection,
    #[error("projection variable {0} out of range")]
    ProjectionOutOfRange(i32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolverStatus {
    Sat,
    Unsat,
    Unknown,
}

impl std::fmt::Display for SolverStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Sat => write!(f, "SATISFIABLE"),
            Self::Unsat => write!(f, "UNSATISFIABLE"),
            Self::Unknown => write!(f, "UNKNOWN"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct SolveStats {
    pub decisions: u64,
    pub conflicts: u64,
    pub propagations: u64,
    pub restarts: u64,
    pub wall: Duration,
}

/// Result of one solver run. A model is present exactly when the status is
/// SAT, and it assigns every variable of the formula it was produced for.
#[derive(Debug, Clone)]
pub struct SolverOutcome {
    pub status: SolverStatus,
    pub model: Option<Vec<bool>>,
    pub stats: SolveStats,
}

/// Resource limits for a solve call. An absent limit means unlimited; use
/// [`SolveBudget::unlimited`] to request that explicitly.
#[derive(Debug, Clone)]
pub struct SolveBudget {
    pub max_conflicts: Option<u64>,
    pub max_wall: Option<Duration>,
    pub seed: u64,
}

impl SolveBudget {
    pub fn unlimited(seed: u64) -> Self {
        SolveBudget {
            max_conflicts: None,
            max_wall: None,
            seed,
        }
    }

    pub fn conflicts(mut self, n: u64) -> Self {
        self.max_conflicts = Some(n);
        self
    }

    pub fn wall(mut self, d: Duration) -> Self {
        self.max_wall = Some(d);
        self
    }
}

impl Default for SolveBudget {
    fn default() -> Self {
        Self::unlimited(0)
    }
}

/// True when the model satisfies every clause of the formula.
pub fn check_model(formula: &CnfFormula, model: &[bool]) -> bool {
    if model.len() < formula.variable_count() {
        return false;
    }
    formula.clauses().iter().all(|clause| {
        clause
            .iter()
            .any(|&lit| model[lit.unsigned_abs() as usize - 1] == (lit > 0))
    })
}

/// Decides the formula with the built-in CDCL solver. SAT models are
/// re-checked against every clause before being returned; exceeding the
/// budget yields UNKNOWN. Deterministic for a fixed (formula, seed,
/// conflict budget).
pub fn solve_builtin(formula: &CnfFormula, budget: &SolveBudget) -> SolverOutcome {
    let start = Instant::now();
    let mut solver = cdcl::Cdcl::new(formula, budget.seed);
    let outcome = solver.solve(budget.max_conflicts, budget.max_wall);
    let mut outcome = outcome;
    outcome.stats.wall = start.elapsed();
    if outcome.status == SolverStatus::Sat {
        let model = outcome.model.as_ref().expect("SAT outcome carries a model");
        assert!(
            check_model(formula, model),
            "internal solver returned a model that fails re-check"
        );
    }
    outcome
}

/// Runs an external DIMACS solver. The command template is split on
/// whitespace and every `{cnf}` token is replaced by the instance path.
/// Exit codes follow the SAT-competition convention (10 SAT, 20 UNSAT) and
/// must agree with the `s` status line when both are present. SAT models are
/// re-checked against the formula; a failing re-check is a hard error.
pub fn solve_external(
    formula: &CnfFormula,
    command_template: &str,
    budget: &SolveBudget,
) -> Result<SolverOutcome, SolveError> {
    let parts: Vec<&str> = command_template.split_whitespace().collect();
    if parts.is_empty() || !parts.iter().any(|p| p.contains("{cnf}")) {
        return Err(SolveError::BadCommandTemplate(command_template.to_string()));
    }

    let mut file = tempfile::Builder::new()
        .prefix("ramsat-")
        .suffix(".cnf")
        .tempfile()?;
    file.write_all(emit_dimacs(formula).as_bytes())?;
    file.flush()?;
    let path = file.path().to_string_lossy().into_owned();

    let argv: Vec<String> = parts
        .iter()
        .map(|p| p.replace("{cnf}", &path))
        .collect();
    let start = Instant::now();
    let mut child = std::process::Command::new(&argv[0])
        .args(&argv[1..])
        .stdout(std::process::Stdio::piped())
        .stderr(std::process::Stdio::null())
        .spawn()?;

    let deadline = budget.max_wall.map(|d| start + d);
    let status = loop {
        if let Some(status) = child.try_wait()? {
            break Some(status);
        }
        if let Some(deadline) = deadline {
            if Instant::now() >= deadline {
                child.kill().ok();
                child.wait().ok();
                break None;
            }
        }
        std::thread::sleep(Duration::from_millis(10));
    };

    let mut stdout = String::new();
    if let Some(mut out) = child.stdout.take() {
        use std::io::Read as _;
        out.read_to_string(&mut stdout).ok();
    }
    let wall = start.elapsed();

    let Some(status) = status else {
        // timed out
        return Ok(SolverOutcome {
            status: SolverStatus::Unknown,
            model: None,
            stats: SolveStats {
                wall,
                ..SolveStats::default()
            },
        });
    };

    let mut outcome = parse_dimacs_result(&stdout)?;
    outcome.stats.wall = wall;

    match status.code() {
        Some(10) => {
            if outcome.status != SolverStatus::Sat {
                return Err(SolveError::StatusMismatch {
                    status_line: status_name(outcome.status),
                    exit_code: 10,
                });
            }
        }
        Some(20) => {
            if outcome.status != SolverStatus::Unsat {
                return Err(SolveError::StatusMismatch {
                    status_line: status_name(outcome.status),
                    exit_code: 20,
                });
            }
        }
        _ => {}
    }

    if outcome.status == SolverStatus::Sat {
        let model = outcome.model.as_mut().expect("SAT parse carries a model");
        if model.len() < formula.variable_count() {
            return Err(SolveError::ModelRecheckFailed);
        }
        if !check_model(formula, model) {
            return Err(SolveError::ModelRecheckFailed);
        }
    }
    Ok(outcome)
}

fn status_name(s: SolverStatus) -> &'static str {
    match s {
        SolverStatus::Sat => "SATISFIABLE",
        SolverStatus::Unsat => "UNSATISFIABLE",
        SolverStatus::Unknown => "UNKNOWN",
    }
}

/// Streams models pairwise distinct on a projection by adding a blocking
/// clause over the projected literals after each model.
pub struct ModelEnumerator {
    formula: CnfFormula,
    projection: Vec<i32>,
    seed: u64,
    conflicts_left: Option<u64>,
    deadline: Option<Instant>,
    exhausted: bool,
    incomplete: bool,
}

/// Sets up enumeration over `formula` projected on the given positive
/// variable ids. The budget is shared across the whole stream.
pub fn enumerate_models(
    formula: &CnfFormula,
    projection: &[i32],
    budget: &SolveBudget,
) -> Result<ModelEnumerator, SolveError> {
    if projection.is_empty() {
        return Err(SolveError::EmptyProjection);
    }
    for &v in projection {
        if v <= 0 || v as usize > formula.variable_count() {
            return Err(SolveError::ProjectionOutOfRange(v));
        }
    }
    Ok(ModelEnumerator {
        formula: formula.clone(),
        projection: projection.to_vec(),
        seed: budget.seed,
        conflicts_left: budget.max_conflicts,
        deadline: budget.max_wall.map(|d| Instant::now() + d),
        exhausted: false,
        incomplete: false,
    })
}

impl ModelEnumerator {
    /// True when the stream ended because the formula became unsatisfiable.
    pub fn exhausted(&self) -> bool {
        self.exhausted
    }

    /// True when the stream stopped early on budget exhaustion.
    pub fn incomplete(&self) -> bool {
        self.incomplete
    }
}

impl Iterator for ModelEnumerator {
    type Item = Vec<bool>;

    fn next(&mut self) -> Option<Vec<bool>> {
        if self.exhausted || self.incomplete {
            return None;
        }
        let mut budget = SolveBudget::unlimited(self.seed);
        budget.max_conflicts = self.conflicts_left;
        if let Some(deadline) = self.deadline {
            let now = Instant::now();
            if now >= deadline {
                self.incomplete = true;
                return None;
            }
            budget.max_wall = Some(deadline - now);
        }
        let outcome = solve_builtin(&self.formula, &budget);
        if let Some(left) = self.conflicts_left.as_mut() {
            *left = left.saturating_sub(outcome.stats.conflicts);
        }
        match outcome.status {
            SolverStatus::Sat => {
                let model = outcome.model.expect("SAT outcome carries a model");
                let blocking: Vec<i32> = self
                    .projection
                    .iter()
                    .map(|&v| if model[v as usize - 1] { -v } else { v })
                    .collect();
                self.formula
                    .add_clause(blocking)
                    .expect("blocking clause is well-formed");
                Some(model)
            }
            SolverStatus::Unsat => {
                self.exhausted = true;
                None
            }
            SolverStatus::Unknown => {
                self.incomplete = true;
                None
            }
        }
    }
}
