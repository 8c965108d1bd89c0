//! Theta series, classical partition generating functions, and the product
//! forms of the restricted-partition generating functions.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pochhammer::{pochhammer, pochhammer_inverse, Length, PochhammerSpec};
use crate::series::TruncatedSeries;

/// `phi(-q) = 1 + 2 sum_{t>=1} (-1)^t q^{t^2}`.
pub fn phi_neg(order: usize) -> TruncatedSeries {
    let terms = std::iter::once((0, 1)).chain(
        (1..)
            .map(|t: usize| (t * t, if t % 2 == 0 { 2 } else { -2 }))
            .take_while(|&(e, _)| e <= order),
    );
    TruncatedSeries::from_signed_terms(order, terms)
}

/// `psi(-q) = sum_{t>=0} (-1)^t q^{t(2t+1)} (1 - q^{2t+1})`.
pub fn psi_neg(order: usize) -> TruncatedSeries {
    let terms = (0..)
        .take_while(|&t: &usize| t * (2 * t + 1) <= order)
        .flat_map(|t| {
            let sign = if t % 2 == 0 { 1 } else { -1 };
            [(t * (2 * t + 1), sign), ((t + 1) * (2 * t + 1), -sign)]
        });
    TruncatedSeries::from_signed_terms(order, terms)
}

/// `(q;q)_inf` as the two-sided pentagonal sum.
pub fn euler_pentagonal_sum(order: usize) -> TruncatedSeries {
    let terms = (0..)
        .take_while(|&t: &usize| t * (3 * t + 1) / 2 <= order)
        .flat_map(|t| {
            let sign = if t % 2 == 0 { 1 } else { -1 };
            [
                (t * (3 * t + 1) / 2, sign),
                (t * (3 * t + 5) / 2 + 1, -sign),
            ]
        });
    TruncatedSeries::from_signed_terms(order, terms)
}

/// The classical one-variable partition generating functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GenName {
    /// ordinary partitions, `1/(q;q)_inf`
    P,
    /// overpartitions, `(-q;q)_inf/(q;q)_inf`
    OverlineP,
    /// partitions with distinct odd parts, `(-q;q^2)_inf/(q^2;q^2)_inf`
    Pod,
    /// partitions into odd parts, `1/(q;q^2)_inf`
    POdd,
    /// bipartitions, `1/(q;q)_inf^2`
    Pp,
}

impl GenName {
    pub const ALL: [GenName; 5] = [
        GenName::P,
        GenName::OverlineP,
        GenName::Pod,
        GenName::POdd,
        GenName::Pp,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            GenName::P => "p",
            GenName::OverlineP => "overline_p",
            GenName::Pod => "pod",
            GenName::POdd => "p_o",
            GenName::Pp => "pp",
        }
    }
}

impl fmt::Display for GenName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GenName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        GenName::ALL
            .into_iter()
            .find(|g| g.as_str() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

fn inf(base: impl Fn(Length) -> Result<PochhammerSpec>) -> PochhammerSpec {
    base(Length::Infinite).expect("static pochhammer spec")
}

/// `(q^j; q^step)_inf`
fn q_inf(j: usize, step: usize) -> PochhammerSpec {
    inf(|l| PochhammerSpec::q_power(j, step, l))
}

/// `(-q^j; q^step)_inf`
fn neg_q_inf(j: usize, step: usize) -> PochhammerSpec {
    inf(|l| PochhammerSpec::minus_q_power(j, step, l))
}

/// `(q;q)_inf` by direct product expansion.
pub fn euler_product(order: usize) -> TruncatedSeries {
    pochhammer(&q_inf(1, 1), order)
}

pub fn gen(name: GenName, order: usize) -> TruncatedSeries {
    let unit = |s: TruncatedSeries| {
        s.invert()
            .expect("pochhammer products have unit constant term")
    };
    match name {
        GenName::P => unit(euler_product(order)),
        GenName::OverlineP => &pochhammer(&neg_q_inf(1, 1), order) * &unit(euler_product(order)),
        GenName::Pod => {
            &pochhammer(&neg_q_inf(1, 2), order) * &unit(pochhammer(&q_inf(2, 2), order))
        }
        GenName::POdd => unit(pochhammer(&q_inf(1, 2), order)),
        GenName::Pp => unit(euler_product(order)).pow(2),
    }
}

/// Smallest exponent carried by `M(a, m, nu; n)`: the parts `a, m+a, ..., m nu + a`.
pub fn m_min_weight(a: u64, m: u64, nu: u64) -> u64 {
    a * (nu + 1) + m * nu * (nu + 1) / 2
}

pub(crate) fn check_residue(a: u64, m: u64) -> Result<()> {
    if a == 0 || a >= m {
        return Err(Error::InvalidResidue { a, m });
    }
    Ok(())
}

/// Product form of the generating function of `M(a, m, nu; n)`:
///
/// `q^{a + nu(m nu + m + 2a)/2} sum_t q^{t(m nu + m t + m + a)} / ((q^m;q^m)_t (q^a;q^m)_{nu+t+1})`.
pub fn rhs_m_series(a: u64, m: u64, nu: u64, order: usize) -> Result<TruncatedSeries> {
    check_residue(a, m)?;
    let (a, m, nu) = (a as usize, m as usize, nu as usize);
    let lead = a + nu * (m * nu + m + 2 * a) / 2;
    let mut total = TruncatedSeries::zero(order);
    if lead > order {
        return Ok(total);
    }
    // running 1/((q^m;q^m)_t (q^a;q^m)_{nu+t+1}), extended one factor pair per t
    let mut denom = pochhammer_inverse(
        &PochhammerSpec::q_power(a, m, Length::Finite(nu + 1))?,
        order,
    )?;
    for t in 0.. {
        let e = lead + t * (m * nu + m * t + m + a);
        if e > order {
            break;
        }
        total = &total + &denom.shift(e);
        denom.div_binomial_assign(m * (t + 1), -1);
        denom.div_binomial_assign(a + m * (nu + t + 1), -1);
    }
    Ok(total)
}

/// Product form of the generating function of `N_nu(n)`:
///
/// `q^{nu(nu-1)/2} sum_t q^{t(nu+t)} / ((q;q)_t (q;q)_{nu+t-1})`.
pub fn rhs_n_series(nu: u64, order: usize) -> Result<TruncatedSeries> {
    if nu == 0 {
        return Err(Error::NuTooSmall);
    }
    let nu = nu as usize;
    let lead = nu * (nu - 1) / 2;
    let mut total = TruncatedSeries::zero(order);
    let mut denom = pochhammer_inverse(
        &PochhammerSpec::q_power(1, 1, Length::Finite(nu - 1))?,
        order,
    )?;
    for t in 0.. {
        let e = lead + t * (nu + t);
        if e > order {
            break;
        }
        total = &total + &denom.shift(e);
        denom.div_binomial_assign(t + 1, -1);
        denom.div_binomial_assign(nu + t, -1);
    }
    Ok(total)
}

/// Sum of `sign * series(n - offset)` over the given terms, reading negative
/// indices as zero.
pub fn shifted_sum(series: &TruncatedSeries, n: u64, terms: &[(i64, u64)]) -> BigInt {
    terms
        .iter()
        .map(|&(sign, off)| series.at(n as i64 - off as i64) * sign)
        .sum()
}
