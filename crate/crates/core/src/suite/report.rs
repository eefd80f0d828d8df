use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Bounds, CheckOutcome, Status};
use crate::error::{Error, Result};

pub const SUITE_NAME: &str = "tfmzv";

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremCounts {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl TheoremCounts {
    fn record(&mut self, s: Status) {
        match s {
            Status::Pass => self.pass += 1,
            Status::Fail => self.fail += 1,
            Status::Skipped => self.skipped += 1,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub by_theorem: BTreeMap<String, TheoremCounts>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub version: String,
    pub bounds: Bounds,
    pub primes: Vec<u64>,
    pub outcomes: Vec<CheckOutcome>,
    pub summary: Summary,
}

impl Report {
    pub fn new(bounds: Bounds, primes: Vec<u64>, outcomes: Vec<CheckOutcome>) -> Self {
        let mut summary = Summary {
            total: outcomes.len(),
            ..Summary::default()
        };
        let mut all = TheoremCounts::default();
        for o in &outcomes {
            all.record(o.status);
            summary.by_theorem.entry(o.theorem.clone()).or_default().record(o.status);
        }
        (summary.pass, summary.fail, summary.skipped) = (all.pass, all.fail, all.skipped);
        Self {
            suite: SUITE_NAME.into(),
            version: env!("CARGO_PKG_VERSION").into(),
            bounds,
            primes,
            outcomes,
            summary,
        }
    }

    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.outcomes.iter().filter(|o| o.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One row per outcome.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let err = |e: csv::Error| Error::OutOfRange(format!("csv: {e}"));
        w.write_record([
            "theorem",
            "params",
            "status",
            "weight",
            "primes_checked",
            "primes_skipped",
            "primes_failed",
            "prime",
            "residual",
            "detail",
        ])
        .map_err(err)?;
        let opt = |v: Option<String>| v.unwrap_or_default();
        for o in &self.outcomes {
            w.write_record([
                o.theorem.clone(),
                o.params.to_string(),
                o.status.to_string(),
                o.weight.to_string(),
                opt(o.primes_checked.map(|x| x.to_string())),
                opt(o.primes_skipped.map(|x| x.to_string())),
                opt(o.primes_failed.map(|x| x.to_string())),
                opt(o.prime.map(|x| x.to_string())),
                opt(o.residual.as_ref().map(|r| {
                    r.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
                })),
                opt(o.detail.clone()),
            ])
            .map_err(err)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::OutOfRange(format!("csv: {e}")))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}
