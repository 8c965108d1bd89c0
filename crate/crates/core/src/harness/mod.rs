//! Range-aware verification of truncated-series identities, inequalities
//! and the conjecture scan.
//!
//! Every check compares a left side computed from q-series coefficients with
//! a right side computed independently, either by partition enumeration or
//! by a separately built series. Discrepancies are collected rather than
//! failing fast.

mod background;
mod inequalities;
mod registry;
mod theorems;

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

pub use background::{check_background, check_lemma_l1, Background};
pub use inequalities::{
    check_inequality, check_interpretation, scan_conjecture_co1, Inequality, Interpretation,
};
pub use registry::{registry, run_check, CheckParams, RegistryEntry};
pub use theorems::{
    check_cp, check_t2, check_t3, check_t4, check_t5, check_t6, check_t7, check_t8,
};

/// Order used by checks whose right side needs only series arithmetic.
pub const SERIES_ORDER: u64 = 150;
/// Order used by checks whose right side is an enumeration oracle.
pub const ENUMERATION_ORDER: u64 = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Any,
    Even,
    Odd,
}

/// The set of indices a check asserts: `n >= min` with the given parity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RangeRule {
    pub min: u64,
    pub parity: Parity,
    pub description: String,
}

impl RangeRule {
    pub fn at_least(min: u64, description: impl Into<String>) -> Self {
        Self {
            min,
            parity: Parity::Any,
            description: description.into(),
        }
    }

    pub fn with_parity(mut self, parity: Parity) -> Self {
        self.parity = parity;
        self
    }

    pub fn contains(&self, n: u64) -> bool {
        n >= self.min
            && match self.parity {
                Parity::Any => true,
                Parity::Even => n % 2 == 0,
                Parity::Odd => n % 2 == 1,
            }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckSpec {
    pub id: String,
    pub params: BTreeMap<String, i64>,
    pub order: u64,
    pub range: RangeRule,
}

impl CheckSpec {
    pub fn new(id: &str, params: &[(&str, i64)], order: u64, range: RangeRule) -> Self {
        Self {
            id: id.to_string(),
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            order,
            range,
        }
    }
}

/// How the two sides of an entry are compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = ">")]
    Gt,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "<")]
    Lt,
}

impl Relation {
    pub fn holds(&self, lhs: &BigInt, rhs: &BigInt) -> bool {
        match self {
            Relation::Eq => lhs == rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Gt => lhs > rhs,
            Relation::Le => lhs <= rhs,
            Relation::Lt => lhs < rhs,
        }
    }

    pub fn symbol(&self) -> &'static str {
        match self {
            Relation::Eq => "=",
            Relation::Ge => ">=",
            Relation::Gt => ">",
            Relation::Le => "<=",
            Relation::Lt => "<",
        }
    }
}

pub(crate) fn decimal<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_str_radix(10))
}

/// One compared pair of values. Entries with `asserted == false` are
/// boundary observations and never count as discrepancies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub n: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(serialize_with = "decimal")]
    pub lhs: BigInt,
    #[serde(serialize_with = "decimal")]
    pub rhs: BigInt,
    pub relation: Relation,
    pub asserted: bool,
}

impl Entry {
    pub fn holds(&self) -> bool {
        self.relation.holds(&self.lhs, &self.rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub n: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(serialize_with = "decimal")]
    pub lhs: BigInt,
    #[serde(serialize_with = "decimal")]
    pub rhs: BigInt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub spec: CheckSpec,
    /// asserted indices, in the order they were checked
    pub checked: Vec<u64>,
    pub entries: Vec<Entry>,
    pub discrepancies: Vec<Discrepancy>,
    pub status: Status,
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// The asserted or logged entry at `n` (first match).
    pub fn entry(&self, n: u64) -> Option<&Entry> {
        self.entries.iter().find(|e| e.n == n)
    }
}

/// Accumulates entries for one check.
pub(crate) struct ReportBuilder {
    spec: CheckSpec,
    started: Instant,
    entries: Vec<Entry>,
}

impl ReportBuilder {
    pub(crate) fn new(spec: CheckSpec) -> Self {
        Self {
            spec,
            started: Instant::now(),
            entries: Vec::new(),
        }
    }

    pub(crate) fn in_range(&self, n: u64) -> bool {
        self.spec.range.contains(n)
    }

    pub(crate) fn record(&mut self, n: u64, lhs: BigInt, rhs: BigInt, relation: Relation) {
        self.push(n, None, lhs, rhs, relation, true);
    }

    pub(crate) fn record_labeled(
        &mut self,
        n: u64,
        label: impl Into<String>,
        lhs: BigInt,
        rhs: BigInt,
        relation: Relation,
    ) {
        self.push(n, Some(label.into()), lhs, rhs, relation, true);
    }

    /// Records a value without asserting it.
    pub(crate) fn log(&mut self, n: u64, lhs: BigInt, rhs: BigInt, relation: Relation) {
        self.push(n, None, lhs, rhs, relation, false);
    }

    pub(crate) fn push(
        &mut self,
        n: u64,
        label: Option<String>,
        lhs: BigInt,
        rhs: BigInt,
        relation: Relation,
        asserted: bool,
    ) {
        self.entries.push(Entry {
            n,
            label,
            lhs,
            rhs,
            relation,
            asserted,
        });
    }

    pub(crate) fn finish(self) -> CheckReport {
        let mut checked: Vec<u64> = Vec::new();
        let mut discrepancies = Vec::new();
        for e in self.entries.iter().filter(|e| e.asserted) {
            if !checked.contains(&e.n) {
                checked.push(e.n);
            }
            if !e.holds() {
                discrepancies.push(Discrepancy {
                    n: e.n,
                    label: e.label.clone(),
                    lhs: e.lhs.clone(),
                    rhs: e.rhs.clone(),
                });
            }
        }
        let status = if discrepancies.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        CheckReport {
            spec: self.spec,
            checked,
            entries: self.entries,
            discrepancies,
            status,
            elapsed: self.started.elapsed(),
        }
    }
}

/// `(-1)^k` as a sign.
pub(crate) fn sign(k: u64) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}
