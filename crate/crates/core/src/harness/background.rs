//! Series identities checked as equalities of truncated series: the
//! truncated pentagonal theorem, the two truncated Gauss identities, and the
//! lemma relating `N_nu` generating functions for consecutive `nu`.

use std::fmt;
use std::str::FromStr;

use super::theorems::check_nu;
use super::{sign, CheckReport, CheckSpec, RangeRule, Relation, ReportBuilder};
use crate::error::{Error, Result};
use crate::generating::{gen, rhs_n_series, GenName};
use crate::pochhammer::{
    gaussian_binomial, pochhammer, pochhammer_inverse, Length, PochhammerSpec,
};
use crate::series::TruncatedSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Background {
    /// truncated pentagonal number theorem
    Apt,
    /// truncated first Gauss identity
    G1,
    /// truncated second Gauss identity
    G2,
}

impl Background {
    pub fn id(&self) -> &'static str {
        match self {
            Background::Apt => "APT",
            Background::G1 => "G1",
            Background::G2 => "G2",
        }
    }
}

impl fmt::Display for Background {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Background {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "APT" => Ok(Background::Apt),
            "G1" => Ok(Background::G1),
            "G2" => Ok(Background::G2),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

/// `q^shift * prod(factors)` at `order`, multiplying the factors only to
/// the lower order `order - shift`.
fn shifted_product(order: usize, shift: usize, factors: &[&TruncatedSeries]) -> TruncatedSeries {
    if shift > order {
        return TruncatedSeries::zero(order);
    }
    let low = order - shift;
    let prod = factors
        .iter()
        .fold(TruncatedSeries::one(low), |acc, f| &acc * &f.truncate(low));
    let mut coeffs = prod.into_coeffs();
    coeffs.splice(0..0, std::iter::repeat_with(Default::default).take(shift));
    TruncatedSeries::from_coeffs(coeffs)
}

/// Left side: product times the truncated theta sum.
fn background_lhs(kind: Background, nu: u64, order: usize) -> TruncatedSeries {
    let theta = match kind {
        Background::Apt => TruncatedSeries::from_signed_terms(
            order,
            (0..nu).flat_map(|t| {
                let e = (t * (3 * t + 1) / 2) as usize;
                [(e, sign(t)), (e + 2 * t as usize + 1, -sign(t))]
            }),
        ),
        Background::G1 => TruncatedSeries::from_signed_terms(
            order,
            std::iter::once((0, 1)).chain((1..=nu).map(|t| ((t * t) as usize, 2 * sign(t)))),
        ),
        Background::G2 => TruncatedSeries::from_signed_terms(
            order,
            (0..nu).flat_map(|t| {
                let e = (t * (2 * t + 1)) as usize;
                [(e, sign(t)), (e + 2 * t as usize + 1, -sign(t))]
            }),
        ),
    };
    let product = match kind {
        Background::Apt => gen(GenName::P, order),
        Background::G1 => gen(GenName::OverlineP, order),
        Background::G2 => gen(GenName::Pod, order),
    };
    &product * &theta
}

/// Right side: `1` plus the signed tail of Gaussian-binomial terms.
fn background_rhs(kind: Background, nu: u64, order: usize) -> Result<TruncatedSeries> {
    let nu = nu as usize;
    let mut total = TruncatedSeries::zero(order);
    match kind {
        Background::Apt => {
            // sum_{k>=1} q^{C(nu,2) + (nu+1)k} / (q;q)_k [k-1 choose nu-1]
            let lead = nu * (nu - 1) / 2;
            for k in 1.. {
                let e = lead + (nu + 1) * k;
                if e > order {
                    break;
                }
                let low = order - e;
                let inv =
                    pochhammer_inverse(&PochhammerSpec::q_power(1, 1, Length::Finite(k))?, low)?;
                let binom = gaussian_binomial(k - 1, nu as i64 - 1, 1, low);
                total = &total + &shifted_product(order, e, &[&inv, &binom]);
            }
            total = total.scale(&sign(nu as u64 - 1).into());
        }
        Background::G1 => {
            // sum_{k>=nu+1} (-q;q)_nu (-1;q)_{k-nu} q^{(nu+1)k} / (q;q)_k [k-1 choose nu]
            for k in nu + 1.. {
                let e = (nu + 1) * k;
                if e > order {
                    break;
                }
                let low = order - e;
                let a = pochhammer(
                    &PochhammerSpec::minus_q_power(1, 1, Length::Finite(nu))?,
                    low,
                );
                let b = pochhammer(&PochhammerSpec::minus_one(1, Length::Finite(k - nu))?, low);
                let inv =
                    pochhammer_inverse(&PochhammerSpec::q_power(1, 1, Length::Finite(k))?, low)?;
                let binom = gaussian_binomial(k - 1, nu as i64, 1, low);
                total = &total + &shifted_product(order, e, &[&a, &b, &inv, &binom]);
            }
            total = total.scale(&sign(nu as u64).into());
        }
        Background::G2 => {
            // sum_{k>=nu} (-q;q^2)_nu (-q;q^2)_{k-nu} q^{2(nu+1)k-nu} / (q^2;q^2)_k [k-1 choose nu-1]_{q^2}
            for k in nu.. {
                let e = 2 * (nu + 1) * k - nu;
                if e > order {
                    break;
                }
                let low = order - e;
                let a = pochhammer(
                    &PochhammerSpec::minus_q_power(1, 2, Length::Finite(nu))?,
                    low,
                );
                let b = pochhammer(
                    &PochhammerSpec::minus_q_power(1, 2, Length::Finite(k - nu))?,
                    low,
                );
                let inv =
                    pochhammer_inverse(&PochhammerSpec::q_power(2, 2, Length::Finite(k))?, low)?;
                let binom = gaussian_binomial(k - 1, nu as i64 - 1, 2, low);
                total = &total + &shifted_product(order, e, &[&a, &b, &inv, &binom]);
            }
            total = total.scale(&sign(nu as u64 - 1).into());
        }
    }
    Ok(&TruncatedSeries::one(order) + &total)
}

fn compare_series(
    mut b: ReportBuilder,
    lhs: &TruncatedSeries,
    rhs: &TruncatedSeries,
) -> CheckReport {
    for (n, (l, r)) in lhs.coeffs().iter().zip(rhs.coeffs()).enumerate() {
        b.record(n as u64, l.clone(), r.clone(), Relation::Eq);
    }
    b.finish()
}

/// Builds both sides of a background identity independently and compares
/// every coefficient up to `order`.
pub fn check_background(kind: Background, nu: u32, order: u64) -> Result<CheckReport> {
    check_nu(nu)?;
    let spec = CheckSpec::new(
        kind.id(),
        &[("nu", nu as i64)],
        order,
        RangeRule::at_least(0, "n >= 0"),
    );
    let b = ReportBuilder::new(spec);
    let lhs = background_lhs(kind, nu as u64, order as usize);
    let rhs = background_rhs(kind, nu as u64, order as usize)?;
    Ok(compare_series(b, &lhs, &rhs))
}

/// `sum N_nu(n) q^n = P(q) sum_{t=0}^{m} (-1)^t q^{(nu+t)(nu+t-1)/2} +
/// (-1)^{m+1} sum N_{nu+m+1}(n) q^n`, with both `N` series in product form.
pub fn check_lemma_l1(nu: u32, m: u32, order: u64) -> Result<CheckReport> {
    check_nu(nu)?;
    let spec = CheckSpec::new(
        "l1",
        &[("nu", nu as i64), ("m", m as i64)],
        order,
        RangeRule::at_least(0, "n >= 0"),
    );
    let b = ReportBuilder::new(spec);
    let n = order as usize;
    let (v, m) = (nu as u64, m as u64);
    let lhs = rhs_n_series(v, n)?;
    let theta = TruncatedSeries::from_signed_terms(
        n,
        (0..=m).map(|t| (((v + t) * (v + t - 1) / 2) as usize, sign(t))),
    );
    let tail = rhs_n_series(v + m + 1, n)?.scale(&sign(m + 1).into());
    let rhs = &(&gen(GenName::P, n) * &theta) + &tail;
    Ok(compare_series(b, &lhs, &rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn background_identities_small() {
        for kind in [Background::Apt, Background::G1, Background::G2] {
            for nu in 1..=2 {
                let r = check_background(kind, nu, 40).unwrap();
                assert!(r.passed(), "{kind} nu={nu}: {:?}", r.discrepancies.first());
            }
        }
    }

    #[test]
    fn lemma_small() {
        for m in 0..=2 {
            assert!(check_lemma_l1(2, m, 40).unwrap().passed());
        }
    }

    #[test]
    fn shifted_product_places_terms() {
        let one = TruncatedSeries::one(5);
        let s = shifted_product(5, 3, &[&one]);
        assert_eq!(s, TruncatedSeries::monomial(5, 3, 1));
        assert!(shifted_product(5, 6, &[&one]).is_zero());
    }
}
