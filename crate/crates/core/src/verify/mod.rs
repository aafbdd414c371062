//! Verification suites with a machine-readable report.
//!
//! Each suite produces a list of named checks with a verdict and a JSON
//! detail. The report contains no timings, so identical configurations
//! give byte-identical output.

mod suites;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::torus::TorusParams;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Series,
    WorkedExamples,
    Convergence,
    OneLoop,
    Degree,
    Substitution,
    Lift,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Series,
        Suite::WorkedExamples,
        Suite::Convergence,
        Suite::OneLoop,
        Suite::Degree,
        Suite::Substitution,
        Suite::Lift,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Series => "series",
            Suite::WorkedExamples => "worked-examples",
            Suite::Convergence => "convergence",
            Suite::OneLoop => "one-loop",
            Suite::Degree => "degree",
            Suite::Substitution => "substitution",
            Suite::Lift => "lift",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite {s:?}")))
    }
}

/// Parameters shared by the suites.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub params: TorusParams,
    /// Truncation order of `x`-series.
    pub order: i64,
    pub r_values: Vec<i64>,
    /// Depth in `t` of the lifted series compared by the lift suite.
    pub lift_depth: i64,
    /// Total leg degree of the substitution oracle.
    pub substitution_degree: usize,
}

impl VerifyConfig {
    pub fn new(params: TorusParams, order: i64, r_values: Vec<i64>) -> Result<Self> {
        if order < 2 {
            return Err(Error::InvalidParameter(format!("order must be at least 2 (got {order})")));
        }
        Ok(VerifyConfig {
            params,
            order,
            r_values,
            lift_depth: 40,
            substitution_degree: 10,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub passed: bool,
    pub detail: serde_json::Value,
}

impl Check {
    pub(crate) fn new(suite: Suite, name: impl Into<String>, passed: bool, detail: serde_json::Value) -> Self {
        Check {
            suite,
            name: name.into(),
            passed,
            detail,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub p: i64,
    pub q: i64,
    pub e_max: usize,
    pub order: i64,
    pub suites: Vec<Suite>,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<Vec<Check>> {
    match suite {
        Suite::Series => suites::series(cfg),
        Suite::WorkedExamples => suites::worked_examples(cfg),
        Suite::Convergence => suites::convergence(cfg),
        Suite::OneLoop => suites::one_loop(cfg),
        Suite::Degree => suites::degree(cfg),
        Suite::Substitution => suites::substitution(cfg),
        Suite::Lift => suites::lift(cfg),
    }
}

/// Runs the suites in the given order. Configuration errors abort; failed
/// checks are recorded in the report.
pub fn run(suites: &[Suite], cfg: &VerifyConfig) -> Result<Report> {
    let mut checks = Vec::new();
    for &s in suites {
        checks.extend(run_suite(s, cfg)?);
    }
    Ok(Report {
        p: cfg.params.p(),
        q: cfg.params.q(),
        e_max: cfg.params.e_max(),
        order: cfg.order,
        suites: suites.to_vec(),
        passed: checks.iter().all(|c| c.passed),
        checks,
    })
}
