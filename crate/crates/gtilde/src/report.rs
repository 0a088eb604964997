//! Named verification suites with deterministic, serializable reports.
//!
//! Each suite replays one family of checks over a range of towers (for the
//! lower-bound suite, a range of power indices) and records one row per
//! check. Rows are emitted in ascending (suite, t, id) order so identical
//! invocations render identical reports; wall times are recorded but kept
//! out of the serialized form.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::error::Error;
use crate::grassmann::{
    basis_in_degree, betti_table, check_lower_bound_lemma, extended_gb, verify_bounds,
    verify_reduced_gb, verify_spoly_identities, TowerConfig,
};
use crate::groebner::{standard_monomials, Budget};
use crate::steenrod::verify_a2_zero;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        })
    }
}

/// One verification step: `t` is the tower exponent, except in the
/// lower-bound suite where it is the power index of the lemma.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub id: &'static str,
    pub t: u32,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip)]
    pub millis: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
    status: Status,
}

impl Report {
    fn new(suite: &str, checks: Vec<Check>) -> Report {
        let status = if checks.iter().any(|c| c.status == Status::Fail) {
            Status::Fail
        } else {
            Status::Pass
        };
        Report {
            suite: suite.to_string(),
            checks,
            status,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite: {}", self.suite)?;
        for check in &self.checks {
            write!(f, "{} t={}: {}", check.id, check.t, check.status)?;
            if let Some(witness) = &check.witness {
                write!(f, " ({witness})")?;
            }
            writeln!(f)?;
        }
        write!(f, "status: {}", self.status)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Gb,
    Spoly,
    Bounds,
    Lemma,
    A2,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Gb => "gb",
            Suite::Spoly => "spoly",
            Suite::Bounds => "bounds",
            Suite::Lemma => "lemma",
            Suite::A2 => "a2",
        }
    }

    /// The largest tower (or power index) the suite runs up to by default,
    /// chosen to keep a full run in the tens of seconds.
    fn default_max(self) -> u32 {
        match self {
            Suite::All => unreachable!("expanded before use"),
            Suite::Gb => 8,
            Suite::Spoly => 12,
            Suite::Bounds => 12,
            Suite::Lemma => 10,
            Suite::A2 => 10,
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite, Error> {
        match s {
            "all" => Ok(Suite::All),
            "gb" => Ok(Suite::Gb),
            "spoly" => Ok(Suite::Spoly),
            "bounds" => Ok(Suite::Bounds),
            "lemma" => Ok(Suite::Lemma),
            "a2" => Ok(Suite::A2),
            other => Err(Error::InvalidArgument(format!(
                "unknown suite {other:?}; expected all, gb, spoly, bounds, lemma or a2"
            ))),
        }
    }
}

/// Runs one suite (or all of them) up to `t_max`, which falls back to the
/// suite's default range. Check failures become fail rows, not errors; an
/// error return means the request itself was malformed.
pub fn run_suite(suite: Suite, t_max: Option<u32>, budget: Budget) -> Result<Report, Error> {
    if suite == Suite::All {
        // alphabetical, matching the report ordering contract
        let parts = [
            Suite::A2,
            Suite::Bounds,
            Suite::Gb,
            Suite::Lemma,
            Suite::Spoly,
        ];
        let mut checks = Vec::new();
        for part in parts {
            checks.extend(run_suite(part, t_max, budget)?.checks);
        }
        return Ok(Report::new("all", checks));
    }

    let max = t_max.unwrap_or_else(|| suite.default_max());
    let checks = match suite {
        Suite::All => unreachable!(),
        Suite::Gb => tower_checks(max, |cfg, rows| {
            rows.push(row(cfg.t(), "reduced-gb", || {
                verify_reduced_gb(cfg, budget)
            }));
        })?,
        Suite::Spoly => tower_checks(max, |cfg, rows| {
            rows.push(row(cfg.t(), "spoly-identities", || {
                verify_spoly_identities(cfg).map(drop)
            }));
        })?,
        Suite::Bounds => tower_checks(max, |cfg, rows| {
            let t = cfg.t();
            rows.push(row(t, "basis-agrees", || basis_agrees(cfg)));
            rows.push(row(t, "basis-count", || basis_count(cfg)));
            rows.push(row(t, "betti-symmetry", || betti_symmetry(cfg)));
            rows.push(row(t, "bounds", || verify_bounds(cfg).map(drop)));
        })?,
        Suite::Lemma => {
            if max > 12 {
                return Err(Error::InvalidArgument(format!(
                    "the lower-bound scan supports power indices up to 12, got {max}"
                )));
            }
            (0..=max)
                .map(|i| {
                    row(i, "lower-bound", || {
                        check_lower_bound_lemma(i, 64).map(drop)
                    })
                })
                .collect()
        }
        Suite::A2 => tower_checks(max, |cfg, rows| {
            let t = cfg.t();
            if t == 2 {
                rows.push(Check {
                    id: "a2-zero",
                    t,
                    status: Status::Skip,
                    witness: Some("no candidate monomials at this tower".into()),
                    millis: 0,
                });
            } else {
                rows.push(row(t, "a2-zero", || verify_a2_zero(cfg).map(drop)));
            }
        })?,
    };
    Ok(Report::new(suite.name(), checks))
}

fn row(t: u32, id: &'static str, run: impl FnOnce() -> Result<(), Error>) -> Check {
    let start = Instant::now();
    let outcome = run();
    let millis = start.elapsed().as_millis();
    match outcome {
        Ok(()) => Check {
            id,
            t,
            status: Status::Pass,
            witness: None,
            millis,
        },
        Err(e) => Check {
            id,
            t,
            status: Status::Fail,
            witness: Some(e.to_string()),
            millis,
        },
    }
}

fn tower_checks(
    t_max: u32,
    mut fill: impl FnMut(TowerConfig, &mut Vec<Check>),
) -> Result<Vec<Check>, Error> {
    let mut rows = Vec::new();
    for t in 2..=t_max {
        fill(TowerConfig::new(t)?, &mut rows);
    }
    Ok(rows)
}

/// The enumerated basis must match the standard monomials of the extended
/// basis degree by degree; the two sides come from unrelated code paths.
fn basis_agrees(cfg: TowerConfig) -> Result<(), Error> {
    let gb = extended_gb(cfg);
    for degree in 0..=cfg.manifold_dim() {
        let enumerated = basis_in_degree(cfg, degree);
        let standard = standard_monomials(&gb, degree);
        if enumerated != standard {
            return Err(Error::verification(
                "basis-agrees",
                format!(
                    "t={} degree {degree}: enumeration yields {} monomials, \
                     the basis leaves {} standard",
                    cfg.t(),
                    enumerated.len(),
                    standard.len()
                ),
            ));
        }
    }
    Ok(())
}

fn basis_count(cfg: TowerConfig) -> Result<(), Error> {
    let counted: u64 = (0..=cfg.manifold_dim())
        .map(|d| basis_in_degree(cfg, d).len() as u64)
        .sum();
    if counted != cfg.basis_size() {
        return Err(Error::verification(
            "basis-count",
            format!(
                "t={}: enumeration finds {counted} monomials, the closed \
                 form promises {}",
                cfg.t(),
                cfg.basis_size()
            ),
        ));
    }
    Ok(())
}

fn betti_symmetry(cfg: TowerConfig) -> Result<(), Error> {
    let table = betti_table(cfg);
    if !table.is_symmetric() {
        return Err(Error::verification(
            "betti-symmetry",
            format!("t={}: dimensions are not palindromic", cfg.t()),
        ));
    }
    if table.total() != cfg.basis_size() {
        return Err(Error::verification(
            "betti-symmetry",
            format!(
                "t={}: dimensions sum to {}, expected {}",
                cfg.t(),
                table.total(),
                cfg.basis_size()
            ),
        ));
    }
    Ok(())
}
