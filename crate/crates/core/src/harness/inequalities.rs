//! Sign inequalities for truncated sums, their partition interpretations,
//! and the scan for the conjectured upper bound by `M_nu(n)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use super::theorems::{check_nu, cp_sum, gauss_first_terms};
use super::{sign, CheckReport, CheckSpec, Parity, RangeRule, Relation, ReportBuilder};
use crate::error::{Error, Result};
use crate::generating::{gen, shifted_sum, GenName};
use crate::partition::{count_m_nu, count_mp, count_mu_bar, m_nu_counts_structured};
use crate::series::TruncatedSeries;

/// `sum_{t<nu} (-1)^t (q^{t(3t+1)/2} - q^{t(3t+5)/2+1})`.
fn pentagonal_pairs(nu: u64) -> Vec<(i64, u64)> {
    (0..nu)
        .flat_map(|t| {
            [
                (sign(t), t * (3 * t + 1) / 2),
                (-sign(t), t * (3 * t + 5) / 2 + 1),
            ]
        })
        .collect()
}

/// `sum_{t<nu} (-1)^t (q^{t(2t+1)} - q^{(t+1)(2t+1)})`.
fn triangular_pairs(nu: u64) -> Vec<(i64, u64)> {
    (0..nu)
        .flat_map(|t| {
            [
                (sign(t), t * (2 * t + 1)),
                (-sign(t), (t + 1) * (2 * t + 1)),
            ]
        })
        .collect()
}

fn pe_sum(p: &TruncatedSeries, nu: u64, n: u64) -> BigInt {
    shifted_sum(p, n, &pentagonal_pairs(nu)) * sign(nu - 1)
}

fn theta_sum(s: &TruncatedSeries, nu: u64, n: u64) -> BigInt {
    shifted_sum(s, n, &gauss_first_terms(nu)) * sign(nu)
}

fn triangular_sum(s: &TruncatedSeries, nu: u64, n: u64) -> BigInt {
    shifted_sum(s, n, &triangular_pairs(nu)) * sign(nu - 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Inequality {
    Pe,
    Opi,
    Dopi,
    Ci,
    Bpc,
    P12,
    P12Po,
}

impl Inequality {
    pub const ALL: [Inequality; 7] = [
        Inequality::Pe,
        Inequality::Opi,
        Inequality::Dopi,
        Inequality::Ci,
        Inequality::Bpc,
        Inequality::P12,
        Inequality::P12Po,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Inequality::Pe => "pe",
            Inequality::Opi => "opi",
            Inequality::Dopi => "dopi",
            Inequality::Ci => "CI",
            Inequality::Bpc => "bpc",
            Inequality::P12 => "p12",
            Inequality::P12Po => "p12-po",
        }
    }
}

impl fmt::Display for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Inequality {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Inequality::ALL
            .into_iter()
            .find(|i| i.id() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// Domain, strictness threshold (if any) and the two sides at each `n`.
struct Shape {
    range: RangeRule,
    strict_from: Option<u64>,
    // true: lhs <= rhs, false: lhs >= rhs
    upper: bool,
}

fn shape(kind: Inequality, v: u64) -> Shape {
    let parity = if v % 2 == 0 { Parity::Any } else { Parity::Odd };
    let parity_note = if v % 2 == 0 { "nu even" } else { "n odd" };
    let (range, strict_from, upper) = match kind {
        Inequality::Pe => (
            RangeRule::at_least(1, "n >= 1"),
            Some(v * (3 * v + 1) / 2),
            false,
        ),
        Inequality::Opi => (
            RangeRule::at_least(1, "n >= 1"),
            Some((v + 1) * (v + 1)),
            false,
        ),
        Inequality::Dopi => (
            RangeRule::at_least(1, "n >= 1"),
            Some(v * (2 * v + 1)),
            false,
        ),
        Inequality::Ci => (RangeRule::at_least(0, "n >= 0"), None, false),
        Inequality::Bpc => (
            RangeRule::at_least(0, parity_note).with_parity(parity),
            Some((v + 1) * (v + 1)),
            false,
        ),
        Inequality::P12 => (
            RangeRule::at_least(0, parity_note).with_parity(parity),
            Some(v * (2 * v + 3) + 1),
            true,
        ),
        Inequality::P12Po => (
            RangeRule::at_least(0, "n odd").with_parity(Parity::Odd),
            Some(v * (2 * v + 3) + 1),
            true,
        ),
    };
    Shape {
        range,
        strict_from,
        upper,
    }
}

/// Checks one inequality at every `n <= order` in its domain. Past the
/// strictness threshold the strict relation is asserted.
pub fn check_inequality(kind: Inequality, nu: u32, order: u64) -> Result<CheckReport> {
    check_nu(nu)?;
    let v = nu as u64;
    let Shape {
        range,
        strict_from,
        upper,
    } = shape(kind, v);
    let spec = CheckSpec::new(kind.id(), &[("nu", nu as i64)], order, range);
    let n_ = order as usize;
    let base = match kind {
        Inequality::Pe | Inequality::Ci | Inequality::P12 => gen(GenName::P, n_),
        Inequality::Opi => gen(GenName::OverlineP, n_),
        Inequality::Dopi => gen(GenName::Pod, n_),
        Inequality::Bpc => gen(GenName::Pp, n_),
        Inequality::P12Po => gen(GenName::POdd, n_),
    };
    let shift = v * (2 * v + 1);
    let mut b = ReportBuilder::new(spec);
    for n in 0..=order {
        if !b.in_range(n) {
            continue;
        }
        let lhs = match kind {
            Inequality::Pe => pe_sum(&base, v, n),
            Inequality::Opi | Inequality::Bpc => theta_sum(&base, v, n),
            Inequality::Dopi | Inequality::P12 | Inequality::P12Po => triangular_sum(&base, v, n),
            Inequality::Ci => cp_sum(&base, v, n),
        };
        let rhs = if upper {
            base.at(n as i64 - shift as i64)
        } else {
            BigInt::from(0)
        };
        let strict = strict_from.is_some_and(|s| n >= s);
        let relation = match (upper, strict) {
            (true, true) => Relation::Lt,
            (true, false) => Relation::Le,
            (false, true) => Relation::Gt,
            (false, false) => Relation::Ge,
        };
        b.record(n, lhs, rhs, relation);
    }
    Ok(b.finish())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Interpretation {
    /// pentagonal truncation equals `M_nu(n)`
    Pe,
    /// overpartition truncation equals `mu-bar_nu(n)`
    Opp,
    /// pod truncation equals `MP_nu(n)`
    Dopp,
}

impl Interpretation {
    pub const ALL: [Interpretation; 3] = [
        Interpretation::Pe,
        Interpretation::Opp,
        Interpretation::Dopp,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Interpretation::Pe => "pe-interp",
            Interpretation::Opp => "opp-interp",
            Interpretation::Dopp => "dopp-interp",
        }
    }
}

impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Interpretation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Interpretation::ALL
            .into_iter()
            .find(|i| i.id() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// Truncated sum against the brute-force count it interprets, `n >= 1`.
/// At `n = 0` the sums pick up the constant term and do not match.
pub fn check_interpretation(kind: Interpretation, nu: u32, order: u64) -> Result<CheckReport> {
    check_nu(nu)?;
    let v = nu as u64;
    let spec = CheckSpec::new(
        kind.id(),
        &[("nu", nu as i64)],
        order,
        RangeRule::at_least(1, "n >= 1"),
    );
    let n_ = order as usize;
    let mut b = ReportBuilder::new(spec);
    let base = match kind {
        Interpretation::Pe => gen(GenName::P, n_),
        Interpretation::Opp => gen(GenName::OverlineP, n_),
        Interpretation::Dopp => gen(GenName::Pod, n_),
    };
    for n in 1..=order {
        let (lhs, rhs) = match kind {
            Interpretation::Pe => (pe_sum(&base, v, n), count_m_nu(nu, n as u32)?),
            Interpretation::Opp => (theta_sum(&base, v, n), count_mu_bar(nu, n as u32)?),
            Interpretation::Dopp => (triangular_sum(&base, v, n), count_mp(nu, n as u32)?),
        };
        b.record(n, lhs, rhs.into(), Relation::Eq);
    }
    Ok(b.finish())
}

/// Compares the truncated triangular sum on `p` with `M_nu(n)` for every
/// `nu <= nu_max` and `n <= order` with `nu` even or `n` odd. Each
/// discrepancy is a counterexample candidate.
pub fn scan_conjecture_co1(nu_max: u32, order: u64) -> Result<CheckReport> {
    check_nu(nu_max)?;
    let spec = CheckSpec::new(
        "co1-scan",
        &[("nu_max", nu_max as i64)],
        order,
        RangeRule::at_least(0, "nu even or n odd"),
    );
    let p = gen(GenName::P, order as usize);
    let mut b = ReportBuilder::new(spec);
    for nu in 1..=nu_max {
        let v = nu as u64;
        let m = m_nu_counts_structured(nu, order as u32)?;
        for n in 0..=order {
            if v % 2 == 1 && n % 2 == 0 {
                continue;
            }
            let lhs = triangular_sum(&p, v, n);
            b.record_labeled(
                n,
                format!("nu={nu}"),
                lhs,
                m[n as usize].into(),
                Relation::Le,
            );
        }
    }
    Ok(b.finish())
}
