//! Named checks with their default orders.

use super::{
    check_background, check_cp, check_inequality, check_interpretation, check_lemma_l1, check_t2,
    check_t3, check_t4, check_t5, check_t6, check_t7, check_t8, scan_conjecture_co1, Background,
    CheckReport, Inequality, Interpretation, ENUMERATION_ORDER, SERIES_ORDER,
};
use crate::error::{Error, Result};

/// Parameters for [`run_check`]. Missing orders fall back to the check's
/// default.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CheckParams {
    pub nu: Option<u32>,
    pub m: Option<u32>,
    pub order: Option<u64>,
    pub nu_max: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegistryEntry {
    pub id: &'static str,
    pub params: &'static str,
    pub description: &'static str,
}

const fn entry(id: &'static str, params: &'static str, description: &'static str) -> RegistryEntry {
    RegistryEntry {
        id,
        params,
        description,
    }
}

const REGISTRY: &[RegistryEntry] = &[
    entry(
        "T2",
        "nu",
        "pentagonal truncation = p(2,3,nu;n) + p(1,3,nu;n)",
    ),
    entry("T3", "nu", "second Gauss truncation on p at 2n and 2n+1"),
    entry("T4", "nu", "second Gauss truncation on p_o at 2n+1"),
    entry("T5", "nu", "second Gauss truncation on p_{2,4}"),
    entry("T6", "nu", "first Gauss truncation on overpartitions"),
    entry(
        "T7",
        "nu",
        "first Gauss truncation on bipartitions at 2n and 2n+1",
    ),
    entry("T8", "", "p(n) and p_{2,4}(n) split by residue classes"),
    entry("CP1", "nu", "triangular alternating sum = N_nu(n)"),
    entry("l1", "nu m", "N_nu series recursion"),
    entry("APT", "nu", "truncated pentagonal number theorem"),
    entry("G1", "nu", "truncated first Gauss identity"),
    entry("G2", "nu", "truncated second Gauss identity"),
    entry("pe", "nu", "pentagonal truncation >= 0"),
    entry("opi", "nu", "overpartition truncation >= 0"),
    entry("dopi", "nu", "pod truncation >= 0"),
    entry("CI", "nu", "triangular alternating sum >= 0"),
    entry("bpc", "nu", "bipartition truncation >= 0"),
    entry(
        "p12",
        "nu",
        "triangular truncation on p bounded by p(n - nu(2nu+1))",
    ),
    entry(
        "p12-po",
        "nu",
        "triangular truncation on p_o bounded by p_o(n - nu(2nu+1))",
    ),
    entry("pe-interp", "nu", "pentagonal truncation = M_nu(n)"),
    entry(
        "opp-interp",
        "nu",
        "overpartition truncation = mu-bar_nu(n)",
    ),
    entry("dopp-interp", "nu", "pod truncation = MP_nu(n)"),
    entry(
        "co1-scan",
        "nu_max",
        "triangular truncation on p <= M_nu(n)",
    ),
];

pub fn registry() -> &'static [RegistryEntry] {
    REGISTRY
}

/// T3 and T4 start at index `2nu(2nu+3) + 2`, past the enumeration order
/// for `nu = 3`; their default keeps a few indices in range.
fn default_order(id: &str, nu: u32) -> u64 {
    let v = nu as u64;
    match id {
        "T3" | "T4" => ENUMERATION_ORDER.max(2 * v * (2 * v + 3) + 9),
        "l1" | "APT" | "G1" | "G2" | "pe" | "opi" | "dopi" | "CI" | "bpc" | "p12" | "p12-po" => {
            SERIES_ORDER
        }
        "co1-scan" => 120,
        _ => ENUMERATION_ORDER,
    }
}

pub fn run_check(id: &str, params: &CheckParams) -> Result<CheckReport> {
    if !REGISTRY.iter().any(|e| e.id == id) {
        return Err(Error::UnknownName(id.to_string()));
    }
    let nu = || params.nu.ok_or(Error::MissingParam("nu"));
    let order = |nu: u32| params.order.unwrap_or_else(|| default_order(id, nu));
    match id {
        "T2" => check_t2(nu()?, order(nu()?)),
        "T3" => check_t3(nu()?, order(nu()?)),
        "T4" => check_t4(nu()?, order(nu()?)),
        "T5" => check_t5(nu()?, order(nu()?)),
        "T6" => check_t6(nu()?, order(nu()?)),
        "T7" => check_t7(nu()?, order(nu()?)),
        "T8" => check_t8(order(0)),
        "CP1" => check_cp(nu()?, order(nu()?)),
        "l1" => {
            let m = params.m.ok_or(Error::MissingParam("m"))?;
            check_lemma_l1(nu()?, m, order(nu()?))
        }
        "co1-scan" => {
            let nu_max = params.nu_max.ok_or(Error::MissingParam("nu_max"))?;
            scan_conjecture_co1(nu_max, order(nu_max))
        }
        _ => {
            let v = nu()?;
            if let Ok(kind) = id.parse::<Background>() {
                check_background(kind, v, order(v))
            } else if let Ok(kind) = id.parse::<Inequality>() {
                check_inequality(kind, v, order(v))
            } else {
                check_interpretation(id.parse::<Interpretation>()?, v, order(v))
            }
        }
    }
}
