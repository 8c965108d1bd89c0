//! `truncpart`: counts, series coefficients, identity checks and the
//! conjecture scan from the command line.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use truncpart::generating::{euler_product, gen, phi_neg, psi_neg, rhs_m_series, rhs_n_series};
use truncpart::harness::{registry, run_check, CheckParams, CheckReport};
use truncpart::partition::{
    basic_counts, count_m, count_m_nu, count_mp, count_mu_bar, count_n,
    count_overline_p_restricted, m_counts, pp_e_counts, restricted_counts, Carrier,
};
use truncpart::{Error, GenName, TruncatedSeries};

#[derive(Parser, Debug)]
#[command(
    name = "truncpart",
    version,
    about = "Truncated theta-series partition identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Counts for one n (`--n`) or for every n up to `--order`
    Count {
        name: CountName,
        #[command(flatten)]
        p: Params,
    },
    /// Coefficients of a named series up to `--order`
    Series {
        name: SeriesName,
        #[command(flatten)]
        p: Params,
    },
    /// Run one named check from the registry
    Verify {
        id: String,
        #[command(flatten)]
        p: Params,
    },
    /// Scan for counterexamples to the conjectured bound
    Scan {
        id: ScanName,
        #[command(flatten)]
        p: Params,
    },
}

#[derive(Args, Debug)]
struct Params {
    #[arg(long)]
    a: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    nu: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    order: Option<u64>,
    #[arg(long = "nu-max")]
    nu_max: Option<u32>,
    #[arg(long, value_parser = Carrier::from_str, default_value = "all")]
    carrier: Carrier,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "verbatim")]
enum CountName {
    M,
    N,
    #[value(name = "p_restricted")]
    PRestricted,
    #[value(name = "overline_p_restricted")]
    OverlinePRestricted,
    #[value(name = "pp_e")]
    PpE,
    #[value(name = "M_nu")]
    MNu,
    #[value(name = "mu_bar")]
    MuBar,
    #[value(name = "MP")]
    Mp,
    #[value(name = "p")]
    P,
    #[value(name = "overline_p")]
    OverlineP,
    #[value(name = "pod")]
    Pod,
    #[value(name = "p_o")]
    POdd,
    #[value(name = "pp")]
    Pp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "verbatim")]
enum SeriesName {
    #[value(name = "p")]
    P,
    #[value(name = "overline_p")]
    OverlineP,
    #[value(name = "pod")]
    Pod,
    #[value(name = "p_o")]
    POdd,
    #[value(name = "pp")]
    Pp,
    #[value(name = "phi_neg")]
    PhiNeg,
    #[value(name = "psi_neg")]
    PsiNeg,
    #[value(name = "euler_product")]
    EulerProduct,
    #[value(name = "rhs_M")]
    RhsM,
    #[value(name = "rhs_N")]
    RhsN,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ScanName {
    Co1,
}

/// Problems reported with exit code 2.
#[derive(Debug)]
enum UsageError {
    Lib(Error),
    Missing(&'static str),
    Io(io::Error),
}

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            UsageError::Lib(e) => write!(f, "{e}"),
            UsageError::Missing(flag) => write!(f, "missing required flag --{flag}"),
            UsageError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        match e {
            Error::MissingParam(p) => UsageError::Missing(flag_name(p)),
            e => UsageError::Lib(e),
        }
    }
}

fn flag_name(param: &'static str) -> &'static str {
    match param {
        "nu_max" => "nu-max",
        p => p,
    }
}

fn need<T>(v: Option<T>, flag: &'static str) -> Result<T, UsageError> {
    v.ok_or(UsageError::Missing(flag))
}

type Rows = Vec<(u32, String)>;

/// `(n, value)` rows for a count name, either at a single `n` or over
/// `0..=order`.
fn count_rows(name: CountName, p: &Params) -> Result<(Vec<(&'static str, i64)>, Rows), UsageError> {
    let range: Vec<u32> = match (p.n, p.order) {
        (Some(n), _) => vec![n],
        (None, Some(order)) => (0..=order as u32).collect(),
        (None, None) => return Err(UsageError::Missing("n")),
    };
    let top = *range.last().unwrap();
    let pick = |table: Vec<u64>| {
        range
            .iter()
            .map(|&n| (n, table[n as usize].to_string()))
            .collect()
    };
    let each = |f: &dyn Fn(u32) -> truncpart::Result<u64>| -> Result<Rows, UsageError> {
        range.iter().map(|&n| Ok((n, f(n)?.to_string()))).collect()
    };
    let basic = |g: GenName| pick(basic_counts(g, top));
    Ok(match name {
        CountName::M => {
            let (a, m, nu) = (need(p.a, "a")?, need(p.m, "m")?, need(p.nu, "nu")?);
            let rows = if range.len() == 1 {
                each(&|n| count_m(a, m, nu, n))?
            } else {
                pick(m_counts(a, m, nu, top)?)
            };
            (
                vec![("a", a as i64), ("m", m as i64), ("nu", nu as i64)],
                rows,
            )
        }
        CountName::PRestricted => {
            let (a, m, nu) = (need(p.a, "a")?, need(p.m, "m")?, need(p.nu, "nu")?);
            let rows = pick(restricted_counts(a, m, nu, p.carrier, top)?);
            (
                vec![("a", a as i64), ("m", m as i64), ("nu", nu as i64)],
                rows,
            )
        }
        CountName::N
        | CountName::OverlinePRestricted
        | CountName::PpE
        | CountName::MNu
        | CountName::MuBar
        | CountName::Mp => {
            let nu = need(p.nu, "nu")?;
            let rows = match name {
                CountName::N => each(&|n| count_n(nu, n))?,
                CountName::OverlinePRestricted => each(&|n| count_overline_p_restricted(nu, n))?,
                CountName::PpE => pick(pp_e_counts(nu, top)?),
                CountName::MNu => each(&|n| count_m_nu(nu, n))?,
                CountName::MuBar => each(&|n| count_mu_bar(nu, n))?,
                _ => each(&|n| count_mp(nu, n))?,
            };
            (vec![("nu", nu as i64)], rows)
        }
        CountName::P => (vec![], basic(GenName::P)),
        CountName::OverlineP => (vec![], basic(GenName::OverlineP)),
        CountName::Pod => (vec![], basic(GenName::Pod)),
        CountName::POdd => (vec![], basic(GenName::POdd)),
        CountName::Pp => (vec![], basic(GenName::Pp)),
    })
}

fn count_name_str(name: CountName) -> String {
    name.to_possible_value().unwrap().get_name().to_string()
}

fn run_count(name: CountName, p: &Params) -> Result<(String, u8), UsageError> {
    let (params, rows) = count_rows(name, p)?;
    let params = if name == CountName::PRestricted {
        let mut v = json!(params
            .into_iter()
            .collect::<std::collections::BTreeMap<_, _>>());
        v["carrier"] = json!(p.carrier.as_str());
        v
    } else {
        json!(params
            .into_iter()
            .collect::<std::collections::BTreeMap<_, _>>())
    };
    let text = match p.format {
        Format::Tsv => {
            let mut s = String::from("n\tcount\n");
            for (n, v) in &rows {
                s.push_str(&format!("{n}\t{v}\n"));
            }
            s
        }
        Format::Json => pretty(&json!({
            "schema": 1,
            "name": count_name_str(name),
            "params": params,
            "values": rows.iter().map(|(n, v)| json!({"n": n, "count": v})).collect::<Vec<_>>(),
        })),
    };
    Ok((text, 0))
}

fn build_series(name: SeriesName, p: &Params) -> Result<TruncatedSeries, UsageError> {
    let order = need(p.order, "order")? as usize;
    Ok(match name {
        SeriesName::P => gen(GenName::P, order),
        SeriesName::OverlineP => gen(GenName::OverlineP, order),
        SeriesName::Pod => gen(GenName::Pod, order),
        SeriesName::POdd => gen(GenName::POdd, order),
        SeriesName::Pp => gen(GenName::Pp, order),
        SeriesName::PhiNeg => phi_neg(order),
        SeriesName::PsiNeg => psi_neg(order),
        SeriesName::EulerProduct => euler_product(order),
        SeriesName::RhsM => rhs_m_series(
            need(p.a, "a")? as u64,
            need(p.m, "m")? as u64,
            need(p.nu, "nu")? as u64,
            order,
        )?,
        SeriesName::RhsN => rhs_n_series(need(p.nu, "nu")? as u64, order)?,
    })
}

fn run_series(name: SeriesName, p: &Params) -> Result<(String, u8), UsageError> {
    let s = build_series(name, p)?;
    let text = match p.format {
        Format::Tsv => {
            let mut out = String::from("exponent\tcoefficient\n");
            for (k, c) in s.coeffs().iter().enumerate() {
                out.push_str(&format!("{k}\t{c}\n"));
            }
            out
        }
        Format::Json => pretty(&json!({
            "schema": 1,
            "name": name.to_possible_value().unwrap().get_name(),
            "order": s.order(),
            "coefficients": s.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })),
    };
    Ok((text, 0))
}

fn report_json(r: &CheckReport) -> Value {
    json!({
        "schema": 1,
        "id": r.spec.id,
        "params": r.spec.params,
        "order": r.spec.order,
        "range": r.spec.range,
        "checked": r.checked,
        "discrepancies": r.discrepancies,
        "status": r.status,
        "elapsed_ms": r.elapsed.as_millis() as u64,
        "values": r.entries,
    })
}

fn report_tsv(r: &CheckReport) -> String {
    let mut s = String::from("n\tlabel\tlhs\trelation\trhs\tasserted\tholds\n");
    for e in &r.entries {
        s.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            e.n,
            e.label.as_deref().unwrap_or(""),
            e.lhs,
            e.relation.symbol(),
            e.rhs,
            e.asserted,
            e.holds()
        ));
    }
    s
}

fn check_params(p: &Params) -> CheckParams {
    CheckParams {
        nu: p.nu,
        m: p.m,
        order: p.order,
        nu_max: p.nu_max,
    }
}

fn run_verify(id: &str, p: &Params) -> Result<(String, u8), UsageError> {
    let r = run_check(id, &check_params(p))?;
    let text = match p.format {
        Format::Tsv => report_tsv(&r),
        Format::Json => pretty(&report_json(&r)),
    };
    eprintln!(
        "{} {}: {} checked, {} discrepancies",
        r.spec.id,
        r.status,
        r.checked.len(),
        r.discrepancies.len()
    );
    Ok((text, if r.passed() { 0 } else { 1 }))
}

/// Findings are reported but never change the exit code.
fn run_scan(_id: ScanName, p: &Params) -> Result<(String, u8), UsageError> {
    let r = run_check("co1-scan", &check_params(p))?;
    let findings: Vec<_> = r
        .entries
        .iter()
        .filter(|e| e.asserted && !e.holds())
        .collect();
    let text = match p.format {
        Format::Tsv => {
            let mut s = String::from("label\tn\tlhs\trhs\n");
            for e in &findings {
                s.push_str(&format!(
                    "{}\t{}\t{}\t{}\n",
                    e.label.as_deref().unwrap_or(""),
                    e.n,
                    e.lhs,
                    e.rhs
                ));
            }
            s
        }
        Format::Json => {
            let mut v = report_json(&r);
            v["findings"] = json!(findings);
            pretty(&v)
        }
    };
    eprintln!(
        "co1 scan: {} entries, {} findings",
        r.entries.len(),
        findings.len()
    );
    Ok((text, 0))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), UsageError> {
    match out {
        Some(path) => fs::write(path, text).map_err(UsageError::Io),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(UsageError::Io),
    }
}

fn print_registry() {
    eprintln!("known checks:");
    for e in registry() {
        eprintln!("  {:<12} {:<7} {}", e.id, e.params, e.description);
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (p, result) = match &cli.command {
        Command::Count { name, p } => (p, run_count(*name, p)),
        Command::Series { name, p } => (p, run_series(*name, p)),
        Command::Verify { id, p } => (p, run_verify(id, p)),
        Command::Scan { id, p } => (p, run_scan(*id, p)),
    };
    match result.and_then(|(text, code)| emit(&text, p.out.as_ref()).map(|_| code)) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            if matches!(e, UsageError::Lib(Error::UnknownName(_))) {
                print_registry();
            }
            ExitCode::from(2)
        }
    }
}
