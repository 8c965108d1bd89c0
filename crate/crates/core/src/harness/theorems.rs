//! Truncated-sum identities whose right sides are restricted partition
//! counts.

use num_bigint::BigInt;

use super::{sign, CheckReport, CheckSpec, Parity, RangeRule, Relation, ReportBuilder};
use crate::error::{Error, Result};
use crate::generating::{gen, shifted_sum, GenName};
use crate::partition::{
    count_basic, count_n, count_overline_p_restricted, pp_e_counts, restricted_counts, Carrier,
};

pub(crate) fn check_nu(nu: u32) -> Result<()> {
    if nu == 0 {
        Err(Error::NuTooSmall)
    } else {
        Ok(())
    }
}

/// `sum_{t=0}^{nu} (-1)^t q^{t(3t+1)/2} - sum_{t=0}^{nu-1} (-1)^t q^{t(3t+5)/2+1}`
/// as `(coefficient, exponent)` pairs.
pub(crate) fn pentagonal_terms(nu: u64) -> Vec<(i64, u64)> {
    let mut terms: Vec<(i64, u64)> = (0..=nu).map(|t| (sign(t), t * (3 * t + 1) / 2)).collect();
    terms.extend((0..nu).map(|t| (-sign(t), t * (3 * t + 5) / 2 + 1)));
    terms
}

/// `sum_{t=0}^{nu} (-1)^t q^{t(2t+1)} - sum_{t=0}^{nu-1} (-1)^t q^{(t+1)(2t+1)}`.
pub(crate) fn gauss_second_terms(nu: u64) -> Vec<(i64, u64)> {
    let mut terms: Vec<(i64, u64)> = (0..=nu).map(|t| (sign(t), t * (2 * t + 1))).collect();
    terms.extend((0..nu).map(|t| (-sign(t), (t + 1) * (2 * t + 1))));
    terms
}

/// `1 + 2 sum_{t=1}^{nu} (-1)^t q^{t^2}`.
pub(crate) fn gauss_first_terms(nu: u64) -> Vec<(i64, u64)> {
    std::iter::once((1, 0))
        .chain((1..=nu).map(|t| (2 * sign(t), t * t)))
        .collect()
}

fn big(x: u64) -> BigInt {
    BigInt::from(x)
}

/// Two restricted tables summed index by index.
fn paired_counts(
    residues: [(u32, u32); 2],
    nu: u32,
    carrier: Carrier,
    order: u64,
) -> Result<Vec<u64>> {
    let [(a1, m1), (a2, m2)] = residues;
    let x = restricted_counts(a1, m1, nu, carrier, order as u32)?;
    let y = restricted_counts(a2, m2, nu, carrier, order as u32)?;
    Ok(x.iter().zip(&y).map(|(u, v)| u + v).collect())
}

/// The pentagonal truncation against `p(2,3,nu;n) + p(1,3,nu;n)`, asserted
/// for `n > nu(3nu+5)/2`. The boundary `n = nu(3nu+5)/2` is logged only.
pub fn check_t2(nu: u32, order: u64) -> Result<CheckReport> {
    check_nu(nu)?;
    let v = nu as u64;
    let boundary = v * (3 * v + 5) / 2;
    let spec = CheckSpec::new(
        "T2",
        &[("nu", nu as i64)],
        order,
        RangeRule::at_least(boundary + 1, "n > nu(3nu+5)/2"),
    );
    let p = gen(GenName::P, order as usize);
    let terms = pentagonal_terms(v);
    let rhs = paired_counts([(2, 3), (1, 3)], nu, Carrier::All, order)?;
    let mut b = ReportBuilder::new(spec);
    for n in boundary..=order {
        let lhs = shifted_sum(&p, n, &terms) * sign(v);
        let r = big(rhs[n as usize]);
        if b.in_range(n) {
            b.record(n, lhs, r, Relation::Eq);
        } else {
            b.log(n, lhs, r, Relation::Eq);
        }
    }
    Ok(b.finish())
}

/// The Gauss-second truncation against `p(3,4,nu;.) + p(1,4,nu;.)` at
/// indices `2n` (with the extra `(-1)^nu p_o(n)`) and `2n+1`, `n > nu(2nu+3)`.
pub fn check_t3(nu: u32, order: u64) -> Result<CheckReport> {
    check_nu(nu)?;
    let v = nu as u64;
    let bound = v * (2 * v + 3);
    let spec = CheckSpec::new(
        "T3",
        &[("nu", nu as i64)],
        order,
        RangeRule::at_least(2 * bound + 2, "index 2n or 2n+1 with n > nu(2nu+3)"),
    );
    let p = gen(GenName::P, order as usize);
    let terms = gauss_second_terms(v);
    let rhs = paired_counts([(3, 4), (1, 4)], nu, Carrier::All, order)?;
    let mut b = ReportBuilder::new(spec);
    for k in 2 * bound..=order {
        let lhs = shifted_sum(&p, k, &terms) * sign(v);
        let mut r = big(rhs[k as usize]);
        if k % 2 == 0 {
            r += big(count_basic(GenName::POdd, (k / 2) as u32)) * sign(v);
        }
        let label = if k % 2 == 0 { "p1i" } else { "p2i" };
        let asserted = b.in_range(k);
        b.push(k, Some(label.into()), lhs, r, Relation::Eq, asserted);
    }
    Ok(b.finish())
}

/// The Gauss-second truncation on `p_o` against `p_o(3,4,nu;2n+1) +
/// p_o(1,4,nu;2n+1)`, `n > nu(2nu+3)`.
pub fn check_t4(nu: u32, order: u64) -> Result<CheckReport> {
    check_nu(nu)?;
    let v = nu as u64;
    let bound = v * (2 * v + 3);
    let spec = CheckSpec::new(
        "T4",
        &[("nu", nu as i64)],
        order,
        RangeRule::at_least(2 * bound + 3, "index 2n+1 with n > nu(2nu+3)")
            .with_parity(Parity::Odd),
    );
    let po = gen(GenName::POdd, order as usize);
    let terms = gauss_second_terms(v);
    let rhs = paired_counts([(3, 4), (1, 4)], nu, Carrier::Odd, order)?;
    let mut b = ReportBuilder::new(spec);
    for k in (2 * bound + 1..=order).step_by(2) {
        let lhs = shifted_sum(&po, k, &terms) * sign(v);
        let r = big(rhs[k as usize]);
        let asserted = b.in_range(k);
        b.push(k, None, lhs, r, Relation::Eq, asserted);
    }
    Ok(b.finish())
}

/// The Gauss-second truncation on `p_{2,4}` against `p_{2,4}(3,4,nu;n) +
/// p_{2,4}(1,4,nu;n)`, `n > nu(2nu+3)`.
pub fn check_t5(nu: u32, order: u64) -> Result<CheckReport> {
    check_nu(nu)?;
    let v = nu as u64;
    let bound = v * (2 * v + 3);
    let spec = CheckSpec::new(
        "T5",
        &[("nu", nu as i64)],
        order,
        RangeRule::at_least(bound + 1, "n > nu(2nu+3)"),
    );
    // p_{2,4} shares its generating function with pod
    let pod = gen(GenName::Pod, order as usize);
    let terms = gauss_second_terms(v);
    let rhs = paired_counts([(3, 4), (1, 4)], nu, Carrier::Not2Mod4, order)?;
    let mut b = ReportBuilder::new(spec);
    for n in bound..=order {
        let lhs = shifted_sum(&pod, n, &terms) * sign(v);
        let r = big(rhs[n as usize]);
        let asserted = b.in_range(n);
        b.push(n, None, lhs, r, Relation::Eq, asserted);
    }
    Ok(b.finish())
}

/// The Gauss-first truncation on overpartitions against
/// `2 p-bar(1,2,nu;n)`, `n >= (nu+1)^2`.
pub fn check_t6(nu: u32, order: u64) -> Result<CheckReport> {
    check_nu(nu)?;
    let v = nu as u64;
    let min = (v + 1) * (v + 1);
    let spec = CheckSpec::new(
        "T6",
        &[("nu", nu as i64)],
        order,
        RangeRule::at_least(min, "n >= (nu+1)^2"),
    );
    let op = gen(GenName::OverlineP, order as usize);
    let terms = gauss_first_terms(v);
    let mut b = ReportBuilder::new(spec);
    for n in min - 1..=order {
        let lhs = shifted_sum(&op, n, &terms) * sign(v);
        let r = big(count_overline_p_restricted(nu, n as u32)?) * 2;
        let asserted = b.in_range(n);
        b.push(n, None, lhs, r, Relation::Eq, asserted);
    }
    Ok(b.finish())
}

/// The Gauss-first truncation on bipartitions against `(-1)^nu p(n) +
/// 2 pp_e(2n)` and `2 pp_e(2n+1)`, `n >= (nu+1)^2`.
pub fn check_t7(nu: u32, order: u64) -> Result<CheckReport> {
    check_nu(nu)?;
    let v = nu as u64;
    let min = 2 * (v + 1) * (v + 1);
    let spec = CheckSpec::new(
        "T7",
        &[("nu", nu as i64)],
        order,
        RangeRule::at_least(min, "index 2n or 2n+1 with n >= (nu+1)^2"),
    );
    let pp = gen(GenName::Pp, order as usize);
    let p = gen(GenName::P, order as usize);
    let terms = gauss_first_terms(v);
    let ppe = pp_e_counts(nu, order as u32)?;
    let mut b = ReportBuilder::new(spec);
    for k in min.saturating_sub(2)..=order {
        let lhs = shifted_sum(&pp, k, &terms) * sign(v);
        let mut r = big(ppe[k as usize]) * 2;
        if k % 2 == 0 {
            r += p.at((k / 2) as i64) * sign(v);
        }
        let label = if k % 2 == 0 { "ppi" } else { "ppi1" };
        let asserted = b.in_range(k);
        b.push(k, Some(label.into()), lhs, r, Relation::Eq, asserted);
    }
    Ok(b.finish())
}

/// `p(n) = p(2,3,0;n) + p(1,3,0;n)` and `p_{2,4}(n) = p_{2,4}(3,4,0;n) +
/// p_{2,4}(1,4,0;n)` for `n >= 1`.
pub fn check_t8(order: u64) -> Result<CheckReport> {
    let spec = CheckSpec::new("T8", &[("nu", 0)], order, RangeRule::at_least(1, "n >= 1"));
    let p = gen(GenName::P, order as usize);
    let pod = gen(GenName::Pod, order as usize);
    let all = paired_counts([(2, 3), (1, 3)], 0, Carrier::All, order)?;
    let not2 = paired_counts([(3, 4), (1, 4)], 0, Carrier::Not2Mod4, order)?;
    let mut b = ReportBuilder::new(spec);
    for n in 0..=order {
        let asserted = b.in_range(n);
        b.push(
            n,
            Some("eq8".into()),
            p.at(n as i64),
            big(all[n as usize]),
            Relation::Eq,
            asserted,
        );
        b.push(
            n,
            Some("eq9".into()),
            pod.at(n as i64),
            big(not2[n as usize]),
            Relation::Eq,
            asserted,
        );
    }
    Ok(b.finish())
}

/// `sum_{t>=0} (-1)^t p(n - (nu+t)(nu+t-1)/2)`, with `p` of a negative
/// argument read as zero.
pub(crate) fn cp_sum(p: &crate::series::TruncatedSeries, nu: u64, n: u64) -> BigInt {
    let terms: Vec<(i64, u64)> = (0..)
        .map(|t| (sign(t), (nu + t) * (nu + t - 1) / 2))
        .take_while(|&(_, off)| off <= n)
        .collect();
    shifted_sum(p, n, &terms)
}

/// The alternating triangular-offset sum against `N_nu(n)` for all `n >= 0`.
pub fn check_cp(nu: u32, order: u64) -> Result<CheckReport> {
    check_nu(nu)?;
    let spec = CheckSpec::new(
        "CP1",
        &[("nu", nu as i64)],
        order,
        RangeRule::at_least(0, "n >= 0"),
    );
    let p = gen(GenName::P, order as usize);
    let mut b = ReportBuilder::new(spec);
    for n in 0..=order {
        let lhs = cp_sum(&p, nu as u64, n);
        b.record(n, lhs, big(count_n(nu, n as u32)?), Relation::Eq);
    }
    Ok(b.finish())
}
