//! Counting functions, each computed by direct enumeration of the objects
//! it counts.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::diagram::{m_member_desc, n_member_desc};
use super::{enumerate_overpartitions, enumerate_partitions, PartConstraint, Partition};
use crate::error::{Error, Result};
use crate::generating::GenName;

/// The class of partitions a restricted count ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Carrier {
    /// unrestricted partitions
    All,
    /// partitions into odd parts
    Odd,
    /// partitions with no part congruent to 2 mod 4
    Not2Mod4,
}

impl Carrier {
    pub fn as_str(&self) -> &'static str {
        match self {
            Carrier::All => "all",
            Carrier::Odd => "odd",
            Carrier::Not2Mod4 => "not2mod4",
        }
    }

    pub fn constraint(&self) -> PartConstraint {
        match self {
            Carrier::All => PartConstraint::none(),
            Carrier::Odd => PartConstraint::odd_only(),
            Carrier::Not2Mod4 => PartConstraint::none().excluding(2, 4),
        }
    }

    /// The residue class `a mod m` must lie inside the carrier.
    pub fn check_residue(&self, a: u32, m: u32) -> Result<()> {
        if a == 0 || a >= m {
            return Err(Error::InvalidResidue {
                a: a as u64,
                m: m as u64,
            });
        }
        let c = self.constraint();
        // the class mod m is periodic mod lcm(m, 4), which divides 4m
        if (0..4).all(|k| c.allows(a + k * m)) {
            Ok(())
        } else {
            Err(Error::IncompatibleCarrier {
                a: a as u64,
                m: m as u64,
                carrier: self.as_str(),
            })
        }
    }
}

impl fmt::Display for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Carrier {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Carrier::All),
            "odd" => Ok(Carrier::Odd),
            "not2mod4" => Ok(Carrier::Not2Mod4),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

/// How [`count_p_restricted_with`] computes its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// enumerate carrier partitions of `n` and test each one
    Direct,
    /// `sum_j M(a,m,nu;j) R(n-j)` with `R` counting carrier partitions free
    /// of the residue class
    Convolution,
}

/// Calls `f` on every partition of `n` under `c`, parts decreasing.
fn for_each_desc(n: u32, c: PartConstraint, mut f: impl FnMut(&[u32])) {
    let mut walk = enumerate_partitions(n, c);
    let mut buf = Vec::new();
    while let Some(asc) = walk.next_ascending() {
        buf.clear();
        buf.extend(asc.iter().rev());
        f(&buf);
    }
}

fn count_desc(n: u32, c: PartConstraint, mut pred: impl FnMut(&[u32]) -> bool) -> u64 {
    let mut count = 0;
    for_each_desc(n, c, |p| count += pred(p) as u64);
    count
}

fn check_m_params(a: u32, m: u32) -> Result<()> {
    if a == 0 || a >= m {
        return Err(Error::InvalidResidue {
            a: a as u64,
            m: m as u64,
        });
    }
    Ok(())
}

fn check_nu(nu: u32) -> Result<()> {
    if nu == 0 {
        Err(Error::NuTooSmall)
    } else {
        Ok(())
    }
}

/// `M(a, m, nu; n)`.
pub fn count_m(a: u32, m: u32, nu: u32, n: u32) -> Result<u64> {
    check_m_params(a, m)?;
    let mut rows = Vec::new();
    Ok(count_desc(n, PartConstraint::residue(a, m), |p| {
        m_member_desc(p, a, m, nu, &mut rows)
    }))
}

/// `M(a, m, nu; n)` for `n = 0..=order`.
pub fn m_counts(a: u32, m: u32, nu: u32, order: u32) -> Result<Vec<u64>> {
    (0..=order).map(|n| count_m(a, m, nu, n)).collect()
}

/// `N_nu(n)`.
pub fn count_n(nu: u32, n: u32) -> Result<u64> {
    check_nu(nu)?;
    Ok(count_desc(n, PartConstraint::none(), |p| {
        n_member_desc(p, nu)
    }))
}

/// The partitions counted by `N_nu(n)`, in enumeration order.
pub fn list_n(nu: u32, n: u32) -> Result<Vec<Partition>> {
    check_nu(nu)?;
    Ok(enumerate_partitions(n, PartConstraint::none())
        .filter(|p| n_member_desc(p.parts(), nu))
        .collect())
}

fn restricted_test(a: u32, m: u32, nu: u32) -> impl FnMut(&[u32]) -> bool {
    let mut sub = Vec::new();
    let mut rows = Vec::new();
    move |p: &[u32]| {
        sub.clear();
        sub.extend(p.iter().copied().filter(|x| x % m == a));
        m_member_desc(&sub, a, m, nu, &mut rows)
    }
}

/// `p(a, m, nu; n)` and its carrier variants, by direct enumeration.
pub fn count_p_restricted(a: u32, m: u32, nu: u32, n: u32, carrier: Carrier) -> Result<u64> {
    count_p_restricted_with(a, m, nu, n, carrier, Method::Direct)
}

pub fn count_p_restricted_with(
    a: u32,
    m: u32,
    nu: u32,
    n: u32,
    carrier: Carrier,
    method: Method,
) -> Result<u64> {
    carrier.check_residue(a, m)?;
    match method {
        Method::Direct => Ok(count_desc(
            n,
            carrier.constraint(),
            restricted_test(a, m, nu),
        )),
        Method::Convolution => Ok(restricted_counts(a, m, nu, carrier, n)?[n as usize]),
    }
}

/// The partitions counted by `p(a, m, nu; n)` on the given carrier.
pub fn list_p_restricted(
    a: u32,
    m: u32,
    nu: u32,
    n: u32,
    carrier: Carrier,
) -> Result<Vec<Partition>> {
    carrier.check_residue(a, m)?;
    let mut test = restricted_test(a, m, nu);
    Ok(enumerate_partitions(n, carrier.constraint())
        .filter(|p| test(p.parts()))
        .collect())
}

/// Carrier partitions with no part congruent to `a` mod `m`, for `0..=order`.
fn residue_free_counts(a: u32, m: u32, carrier: Carrier, order: u32) -> Vec<u64> {
    let c = carrier.constraint().excluding(a, m);
    (0..=order)
        .map(|k| count_desc(k, c.clone(), |_| true))
        .collect()
}

/// `p(a, m, nu; n)` for `n = 0..=order`, by convolution.
pub fn restricted_counts(
    a: u32,
    m: u32,
    nu: u32,
    carrier: Carrier,
    order: u32,
) -> Result<Vec<u64>> {
    carrier.check_residue(a, m)?;
    let core = m_counts(a, m, nu, order)?;
    let rest = residue_free_counts(a, m, carrier, order);
    Ok(convolve(&core, &rest))
}

fn convolve(x: &[u64], y: &[u64]) -> Vec<u64> {
    (0..x.len())
        .map(|n| (0..=n).map(|j| x[j] * y[n - j]).sum())
        .collect()
}

/// `p-bar(1, 2, nu; n)`: overpartitions whose non-overlined odd parts form a
/// partition counted by `M(1, 2, nu; .)`. Overlined parts, odd or even, are
/// part of the remainder.
pub fn count_overline_p_restricted(nu: u32, n: u32) -> Result<u64> {
    check_nu(nu)?;
    let mut rows = Vec::new();
    let mut count = 0;
    for op in enumerate_overpartitions(n) {
        let mut odd = op.non_overlined_parts();
        odd.retain(|x| x % 2 == 1);
        count += m_member_desc(&odd, 1, 2, nu, &mut rows) as u64;
    }
    Ok(count)
}

/// `pp_e(n)` with the parameter `nu` made explicit: bipartitions
/// `(pi1, pi2)` of `n` with `pi1` unrestricted and the odd parts of `pi2`
/// forming a partition counted by `M(1, 2, nu; .)`.
pub fn count_pp_e(nu: u32, n: u32) -> Result<u64> {
    Ok(pp_e_counts(nu, n)?[n as usize])
}

/// `pp_e` for every `n = 0..=order`. For each weight `k` of `pi2` the
/// number of `pi1` is `p(n - k)`, itself counted by enumeration.
pub fn pp_e_counts(nu: u32, order: u32) -> Result<Vec<u64>> {
    check_nu(nu)?;
    let second: Vec<u64> = (0..=order)
        .map(|k| count_desc(k, PartConstraint::none(), restricted_test(1, 2, nu)))
        .collect();
    let first = basic_counts(GenName::P, order);
    Ok(convolve(&second, &first))
}

/// `M_nu(n)`: partitions of `n` in which `nu` is the smallest positive
/// integer that is not a part, and parts greater than `nu` outnumber parts
/// less than `nu` (with multiplicity).
pub fn count_m_nu(nu: u32, n: u32) -> Result<u64> {
    check_nu(nu)?;
    Ok(count_desc(n, PartConstraint::none(), |p| {
        let mex = (1..).find(|v| !p.contains(v)).unwrap();
        if mex != nu {
            return false;
        }
        let above = p.iter().filter(|&&x| x > nu).count();
        let below = p.iter().filter(|&&x| x < nu).count();
        above > below
    }))
}

/// `M_nu(n)` for `n = 0..=order` without enumerating partitions: combine
/// partitions built from each of `1..nu-1` (at least once) with partitions
/// into parts above `nu`, tracking the number of parts on each side.
pub fn m_nu_counts_structured(nu: u32, order: u32) -> Result<Vec<u128>> {
    check_nu(nu)?;
    let n = order as usize;
    let nu = nu as usize;
    // low[k][w]: parts from 1..nu-1, each used, k parts, weight w
    let mut low = vec![vec![0u128; n + 1]; n + 1];
    low[0][0] = 1;
    for v in 1..nu {
        let mut next = vec![vec![0u128; n + 1]; n + 1];
        for k in 0..=n {
            for w in 0..=n {
                if low[k][w] == 0 {
                    continue;
                }
                let mut c = 1;
                while k + c <= n && w + c * v <= n {
                    next[k + c][w + c * v] += low[k][w];
                    c += 1;
                }
            }
        }
        low = next;
    }
    // high[j][w]: parts > nu, exactly j parts, weight w
    let mut high = vec![vec![0u128; n + 1]; n + 1];
    high[0][0] = 1;
    for v in nu + 1..=n {
        for j in 1..=n {
            for w in v..=n {
                let add = high[j - 1][w - v];
                high[j][w] += add;
            }
        }
    }
    let mut out = vec![0u128; n + 1];
    for (total, slot) in out.iter_mut().enumerate() {
        for w in 0..=total {
            for k in 0..=n {
                if low[k][w] == 0 {
                    continue;
                }
                let above: u128 = (k + 1..=n).map(|j| high[j][total - w]).sum();
                *slot += low[k][w] * above;
            }
        }
    }
    Ok(out)
}

/// `mu-bar_nu(n)`: overpartitions of `n` in which the smallest part value
/// exceeding `nu` occurs at least `nu + 1` times.
pub fn count_mu_bar(nu: u32, n: u32) -> Result<u64> {
    check_nu(nu)?;
    Ok(enumerate_overpartitions(n)
        .filter(|op| match op.parts().iter().rev().find(|&&x| x > nu) {
            Some(&v) => op.partition().multiplicity(v) > nu as usize,
            None => false,
        })
        .count() as u64)
}

/// `MP_nu(n)`: partitions of `n` in which the smallest part exceeding
/// `2 nu - 1` is odd and occurs exactly `nu` times, and every other odd part
/// occurs at most once.
pub fn count_mp(nu: u32, n: u32) -> Result<u64> {
    check_nu(nu)?;
    let bound = 2 * nu - 1;
    Ok(count_desc(n, PartConstraint::none(), |p| {
        let Some(&first) = p.iter().rev().find(|&&x| x > bound) else {
            return false;
        };
        if first % 2 == 0 || p.iter().filter(|&&x| x == first).count() != nu as usize {
            return false;
        }
        p.windows(2)
            .all(|w| !(w[0] == w[1] && w[0] % 2 == 1 && w[0] != first))
    }))
}

/// Brute-force value of one of the classical counting functions.
pub fn count_basic(name: GenName, n: u32) -> u64 {
    match name {
        GenName::P => count_desc(n, PartConstraint::none(), |_| true),
        GenName::OverlineP => enumerate_overpartitions(n).count() as u64,
        GenName::Pod => count_desc(n, PartConstraint::distinct_odd(), |_| true),
        GenName::POdd => count_desc(n, PartConstraint::odd_only(), |_| true),
        GenName::Pp => (0..=n)
            .map(|k| count_basic(GenName::P, k) * count_basic(GenName::P, n - k))
            .sum(),
    }
}

pub fn basic_counts(name: GenName, order: u32) -> Vec<u64> {
    (0..=order).map(|n| count_basic(name, n)).collect()
}
