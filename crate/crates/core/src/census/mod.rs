//! Exhaustive verification over all small connected Nakayama algebras.
//!
//! Each algebra is checked independently and the per-check statistics are
//! merged with an associative, commutative reducer (counts plus the least
//! counterexample), so the report does not depend on scheduling.

mod checks;
mod enumerate;

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use thiserror::Error;

pub use checks::{check_retraction_step, AlgebraContext, CheckId, Outcome};
pub use enumerate::enumerate;

use crate::kupisch::KupischSeries;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("invalid bounds: n_max = {n_max} and c_max = {c_max} must both be at least 1")]
    InvalidBounds { n_max: usize, c_max: usize },
    #[error("{0}")]
    UnknownCheck(String),
    #[error("could not start worker pool: {0}")]
    ThreadPool(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CensusConfig {
    pub n_max: usize,
    pub c_max: usize,
    #[serde(serialize_with = "serialize_check_ids")]
    pub checks: Vec<CheckId>,
    /// Largest search space allowed for bounded enumerations.
    pub budget: u64,
}

impl Default for CensusConfig {
    fn default() -> Self {
        CensusConfig {
            n_max: 6,
            c_max: 9,
            checks: CheckId::ALL.to_vec(),
            budget: 1_000_000,
        }
    }
}

impl CensusConfig {
    pub fn new(n_max: usize, c_max: usize) -> Result<Self, CensusError> {
        if n_max == 0 || c_max == 0 {
            return Err(CensusError::InvalidBounds { n_max, c_max });
        }
        Ok(CensusConfig {
            n_max,
            c_max,
            ..Default::default()
        })
    }

    /// Comma-separated check identifiers.
    pub fn with_checks(mut self, list: &str) -> Result<Self, CensusError> {
        self.checks = list
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| s.parse().map_err(CensusError::UnknownCheck))
            .collect::<Result<_, _>>()?;
        Ok(self)
    }
}

fn serialize_check_ids<S: Serializer>(ids: &[CheckId], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(ids.iter().map(|id| id.as_str()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub series: String,
    pub detail: String,
    #[serde(skip)]
    key: KupischSeries,
}

impl Counterexample {
    fn new(series: &KupischSeries, detail: String) -> Self {
        Counterexample {
            series: series.to_string(),
            detail,
            key: series.clone(),
        }
    }

    fn least(a: Option<Self>, b: Option<Self>) -> Option<Self> {
        match (a, b) {
            (Some(a), Some(b)) => Some(if b.key < a.key { b } else { a }),
            (a, b) => a.or(b),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckStats {
    pub passes: u64,
    pub failures: u64,
    pub skips: u64,
    pub not_applicable: u64,
    pub findings: u64,
    pub first_counterexample: Option<Counterexample>,
    pub first_finding: Option<Counterexample>,
    pub first_skip: Option<Counterexample>,
}

impl CheckStats {
    fn record(&mut self, series: &KupischSeries, outcome: Outcome) {
        let sample = |detail| Some(Counterexample::new(series, detail));
        match outcome {
            Outcome::Pass => self.passes += 1,
            Outcome::NotApplicable => self.not_applicable += 1,
            Outcome::Fail(detail) => {
                self.failures += 1;
                self.first_counterexample =
                    Counterexample::least(self.first_counterexample.take(), sample(detail));
            }
            Outcome::Skip(detail) => {
                self.skips += 1;
                self.first_skip = Counterexample::least(self.first_skip.take(), sample(detail));
            }
            Outcome::Finding(detail) => {
                self.findings += 1;
                self.first_finding =
                    Counterexample::least(self.first_finding.take(), sample(detail));
            }
        }
    }

    fn merge(mut self, other: CheckStats) -> Self {
        self.passes += other.passes;
        self.failures += other.failures;
        self.skips += other.skips;
        self.not_applicable += other.not_applicable;
        self.findings += other.findings;
        self.first_counterexample =
            Counterexample::least(self.first_counterexample, other.first_counterexample);
        self.first_finding = Counterexample::least(self.first_finding, other.first_finding);
        self.first_skip = Counterexample::least(self.first_skip, other.first_skip);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub config: CensusConfig,
    pub algebras_checked: u64,
    pub per_check: Vec<(CheckId, CheckStats)>,
    pub elapsed: Duration,
}

impl CensusReport {
    pub fn total_failures(&self) -> u64 {
        self.per_check.iter().map(|(_, s)| s.failures).sum()
    }

    pub fn total_findings(&self) -> u64 {
        self.per_check.iter().map(|(_, s)| s.findings).sum()
    }

    pub fn total_skips(&self) -> u64 {
        self.per_check.iter().map(|(_, s)| s.skips).sum()
    }

    pub fn stats(&self, check: CheckId) -> Option<&CheckStats> {
        self.per_check
            .iter()
            .find(|(id, _)| *id == check)
            .map(|(_, s)| s)
    }

    pub fn is_success(&self) -> bool {
        self.total_failures() == 0
    }

    /// The report as a single-line JSON document; with `include_timing` off
    /// the output is identical across runs of the same configuration.
    pub fn to_json(&self, include_timing: bool) -> String {
        let view = ReportView {
            report: self,
            include_timing,
        };
        serde_json::to_string(&view).expect("report serialization cannot fail")
    }
}

struct ReportView<'a> {
    report: &'a CensusReport,
    include_timing: bool,
}

impl Serialize for ReportView<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        struct PerCheck<'a>(&'a [(CheckId, CheckStats)]);
        impl Serialize for PerCheck<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                let mut map = s.serialize_map(Some(self.0.len()))?;
                for (id, stats) in self.0 {
                    map.serialize_entry(id.as_str(), stats)?;
                }
                map.end()
            }
        }
        let r = self.report;
        let mut map = s.serialize_map(None)?;
        map.serialize_entry("config", &r.config)?;
        map.serialize_entry("algebrasChecked", &r.algebras_checked)?;
        map.serialize_entry("failures", &r.total_failures())?;
        map.serialize_entry("findings", &r.total_findings())?;
        map.serialize_entry("skips", &r.total_skips())?;
        map.serialize_entry("perCheck", &PerCheck(&r.per_check))?;
        if self.include_timing {
            map.serialize_entry("elapsedMs", &(r.elapsed.as_millis() as u64))?;
        }
        map.end()
    }
}

/// Runs the selected checks on one algebra.
pub fn check_algebra(series: &KupischSeries, checks: &[CheckId], budget: u64) -> Vec<Outcome> {
    match AlgebraContext::new(series, budget) {
        Ok(ctx) => checks.iter().map(|&c| ctx.run(c)).collect(),
        Err(detail) => checks
            .iter()
            .map(|_| Outcome::Fail(detail.clone()))
            .collect(),
    }
}

/// Every algebra with `1 <= n <= n_max` simples and lengths at most `c_max`.
pub fn algebras(config: &CensusConfig) -> Vec<KupischSeries> {
    (1..=config.n_max)
        .flat_map(|n| enumerate(n, config.c_max))
        .collect()
}

/// Runs the census on the current rayon pool.
pub fn verify_all(config: &CensusConfig) -> Result<CensusReport, CensusError> {
    if config.n_max == 0 || config.c_max == 0 {
        return Err(CensusError::InvalidBounds {
            n_max: config.n_max,
            c_max: config.c_max,
        });
    }
    let start = Instant::now();
    let algebras = algebras(config);
    let empty = || vec![CheckStats::default(); config.checks.len()];
    let stats = algebras
        .par_iter()
        .fold(empty, |mut acc, series| {
            for (slot, outcome) in
                acc.iter_mut()
                    .zip(check_algebra(series, &config.checks, config.budget))
            {
                slot.record(series, outcome);
            }
            acc
        })
        .reduce(empty, |a, b| {
            a.into_iter().zip(b).map(|(x, y)| x.merge(y)).collect()
        });
    Ok(CensusReport {
        config: config.clone(),
        algebras_checked: algebras.len() as u64,
        per_check: config.checks.iter().copied().zip(stats).collect(),
        elapsed: start.elapsed(),
    })
}

/// Runs the census on a dedicated pool of `jobs` threads.
pub fn verify_all_with_jobs(
    config: &CensusConfig,
    jobs: usize,
) -> Result<CensusReport, CensusError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| CensusError::ThreadPool(e.to_string()))?;
    pool.install(|| verify_all(config))
}
