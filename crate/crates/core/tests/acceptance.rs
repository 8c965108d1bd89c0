//! Acceptance suite: one PASS/FAIL line per criterion, each timed against
//! a fixed budget. All comparisons are exact integer equalities or
//! inequalities; the only tolerances are the time limits below.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use truncpart::generating::{
    euler_pentagonal_sum, euler_product, phi_neg, psi_neg, rhs_m_series, rhs_n_series,
};
use truncpart::harness::{
    check_background, check_cp, check_inequality, check_lemma_l1, check_t2, run_check,
    scan_conjecture_co1, Background, CheckParams, CheckReport, Inequality, Relation,
};
use truncpart::partition::{
    count_m_nu, count_n, count_p_restricted, count_p_restricted_with, is_m_member, is_n_member,
    list_n, list_p_restricted, m_counts, Carrier, Method, Partition,
};
use truncpart::pochhammer::{pochhammer, pochhammer_inverse, Length, PochhammerSpec};
use truncpart::TruncatedSeries;

const LIMIT_INSTANT: Duration = Duration::from_secs(1);
const LIMIT_M13: Duration = Duration::from_secs(120);
const LIMIT_NK1: Duration = Duration::from_secs(60);
const LIMIT_THEOREMS: Duration = Duration::from_secs(300);
const LIMIT_BACKGROUND: Duration = Duration::from_secs(60);
const LIMIT_INEQUALITIES: Duration = Duration::from_secs(60);
const LIMIT_CO1: Duration = Duration::from_secs(120);
const LIMIT_PROPERTIES: Duration = Duration::from_secs(120);

const SERIES_ORDER: u64 = 150;
const CO1_ORDER: u64 = 120;

type Outcome = Result<String, String>;

/// `p(0..=n)` from Euler's pentagonal recurrence.
fn partition_numbers(n: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::from(0); n + 1];
    p[0] = BigInt::from(1);
    for m in 1..=n {
        let mut acc = BigInt::from(0);
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let s = if k % 2 == 1 { 1 } else { -1 };
            acc += &p[m - g1] * s;
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= m {
                acc += &p[m - g2] * s;
            }
        }
        p[m] = acc;
    }
    p
}

fn p_at(p: &[BigInt], x: i64) -> BigInt {
    if x < 0 {
        BigInt::from(0)
    } else {
        p[x as usize].clone()
    }
}

fn parse_set(items: &[&str]) -> BTreeSet<Partition> {
    items.iter().map(|s| s.parse().unwrap()).collect()
}

fn expect(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn report_ok(r: &CheckReport) -> Result<(), String> {
    let label = format!("{} {:?}", r.spec.id, r.spec.params);
    expect(!r.checked.is_empty(), || format!("{label}: empty range"))?;
    match r.discrepancies.first() {
        None => Ok(()),
        Some(d) => Err(format!(
            "{label}: {} discrepancies, first at n={} ({} vs {})",
            r.discrepancies.len(),
            d.n,
            d.lhs,
            d.rhs
        )),
    }
}

fn t2_example() -> Outcome {
    let p = partition_numbers(20);
    let sum = p_at(&p, 17) - p_at(&p, 15) + p_at(&p, 10) - p_at(&p, 16) + p_at(&p, 12);
    expect(sum == BigInt::from(9), || format!("oracle sum {sum}"))?;
    let r = check_t2(2, 17).map_err(|e| e.to_string())?;
    let e = r.entry(17).ok_or("no entry at 17")?;
    expect(
        e.asserted && e.lhs == BigInt::from(9) && e.rhs == BigInt::from(9),
        || format!("T2 entry {} = {}", e.lhs, e.rhs),
    )?;
    let two: BTreeSet<_> = list_p_restricted(2, 3, 2, 17, Carrier::All)
        .map_err(|e| e.to_string())?
        .into_iter()
        .collect();
    let one: BTreeSet<_> = list_p_restricted(1, 3, 2, 17, Carrier::All)
        .map_err(|e| e.to_string())?
        .into_iter()
        .collect();
    expect(two == parse_set(&["8+5+2+2", "8+5+2+1+1"]), || {
        format!("p(2,3,2;17) list {two:?}")
    })?;
    let table_one = parse_set(&[
        "7+5+4+1",
        "7+4+4+1+1",
        "7+4+3+2+1",
        "7+4+3+1+1+1",
        "7+4+2+2+1+1",
        "7+4+2+1+1+1+1",
        "7+4+1+1+1+1+1+1",
    ]);
    expect(one == table_one, || format!("p(1,3,2;17) list {one:?}"))?;
    Ok("9 = 2 + 7, both lists match the table".into())
}

fn cp_example() -> Outcome {
    let p = partition_numbers(10);
    let sum = p_at(&p, 9) - p_at(&p, 7) + p_at(&p, 4) - p_at(&p, 0);
    expect(sum == BigInt::from(19), || format!("oracle sum {sum}"))?;
    let listed = parse_set(&[
        "1+1+1+1+1+1+1+1+1+1",
        "9+1",
        "8+1+1",
        "7+2+1",
        "7+1+1+1",
        "6+2+1+1",
        "6+1+1+1+1",
        "5+2+2+1",
        "5+2+1+1+1",
        "5+1+1+1+1+1",
        "4+2+2+1+1",
        "4+2+1+1+1+1",
        "4+1+1+1+1+1+1",
        "3+2+2+2+1",
        "3+2+2+1+1+1",
        "3+2+1+1+1+1+1",
        "3+1+1+1+1+1+1+1",
        "5+4+1",
        "4+4+1+1",
    ]);
    let found: BTreeSet<_> = list_n(2, 10)
        .map_err(|e| e.to_string())?
        .into_iter()
        .collect();
    expect(found == listed, || format!("N_2(10) list {found:?}"))?;
    let r = check_cp(2, 10).map_err(|e| e.to_string())?;
    let e = r.entry(10).ok_or("no entry at 10")?;
    expect(r.passed() && e.lhs == BigInt::from(19), || {
        format!("CP1 entry {} = {}", e.lhs, e.rhs)
    })?;
    Ok("19 = N_2(10), 19 partitions match".into())
}

fn membership() -> Outcome {
    let part = |s: &str| s.parse::<Partition>().unwrap();
    expect(is_m_member(&part("20+17+11+8+5+2"), 2, 3, 2), || {
        "20+17+11+8+5+2 rejected".into()
    })?;
    expect(!is_m_member(&part("23+17+17+8+5+5+2"), 2, 3, 2), || {
        "23+17+17+8+5+5+2 accepted".into()
    })?;
    expect(is_n_member(&part("6+5+3+3+2+1"), 3), || {
        "6+5+3+3+2+1 rejected".into()
    })?;
    expect(!is_n_member(&part("6+5+5+2+1+1"), 3), || {
        "6+5+5+2+1+1 accepted".into()
    })?;
    Ok("4 examples".into())
}

fn m13() -> Outcome {
    let mut compared = 0;
    for (a, m) in [(1, 2), (1, 3), (2, 3), (1, 4), (3, 4)] {
        for nu in 0..=3 {
            let counts = m_counts(a, m, nu, 60).map_err(|e| e.to_string())?;
            let s = rhs_m_series(a as u64, m as u64, nu as u64, 60).map_err(|e| e.to_string())?;
            for (n, c) in counts.iter().enumerate() {
                expect(BigInt::from(*c) == s.at(n as i64), || {
                    format!("M({a},{m},{nu};{n}) = {c}, series {}", s.at(n as i64))
                })?;
                compared += 1;
            }
        }
    }
    Ok(format!("{compared} coefficients"))
}

fn nk1() -> Outcome {
    let mut compared = 0;
    for nu in 1..=4 {
        let s = rhs_n_series(nu as u64, 60).map_err(|e| e.to_string())?;
        for n in 0..=60 {
            let c = count_n(nu, n).map_err(|e| e.to_string())?;
            expect(BigInt::from(c) == s.at(n as i64), || {
                format!("N_{nu}({n}) = {c}")
            })?;
            compared += 1;
        }
    }
    Ok(format!("{compared} coefficients"))
}

fn theorems() -> Outcome {
    let mut indices = 0;
    let mut run = |id: &str, nu: Option<u32>| -> Result<(), String> {
        let params = CheckParams {
            nu,
            ..Default::default()
        };
        let r = run_check(id, &params).map_err(|e| e.to_string())?;
        report_ok(&r)?;
        indices += r.checked.len();
        Ok(())
    };
    for id in ["T2", "T3", "T4", "T5", "T6", "T7", "CP1"] {
        for nu in 1..=3 {
            run(id, Some(nu))?;
        }
    }
    run("T8", None)?;
    Ok(format!("22 reports, {indices} asserted indices"))
}

fn background() -> Outcome {
    for kind in [Background::Apt, Background::G1, Background::G2] {
        for nu in 1..=3 {
            report_ok(&check_background(kind, nu, SERIES_ORDER).map_err(|e| e.to_string())?)?;
        }
    }
    for nu in 1..=3 {
        for m in 0..=2 {
            report_ok(&check_lemma_l1(nu, m, SERIES_ORDER).map_err(|e| e.to_string())?)?;
        }
    }
    Ok(format!("18 series equalities to order {SERIES_ORDER}"))
}

fn inequalities() -> Outcome {
    let mut strict = 0;
    for kind in Inequality::ALL {
        for nu in 1..=3 {
            let r = check_inequality(kind, nu, SERIES_ORDER).map_err(|e| e.to_string())?;
            report_ok(&r)?;
            let s = r
                .entries
                .iter()
                .filter(|e| e.asserted && matches!(e.relation, Relation::Gt | Relation::Lt))
                .count();
            expect(kind == Inequality::Ci || s > 0, || {
                format!("{kind} nu={nu}: no strict entries")
            })?;
            strict += s;
        }
    }
    Ok(format!("21 reports, {strict} strict entries"))
}

/// Recomputes both sides of every scan entry: the left side from the
/// recurrence values of `p`, the right side through the pentagonal
/// truncation (equal to `M_nu(n)` for `n >= 1`), itself spot-checked
/// against brute force for `n <= 30`.
fn co1() -> Outcome {
    let p = partition_numbers(CO1_ORDER as usize);
    let r = scan_conjecture_co1(3, CO1_ORDER).map_err(|e| e.to_string())?;
    let mut seen = 0;
    for nu in 1..=3i64 {
        let sign = |k: i64| if k % 2 == 0 { 1 } else { -1 };
        let m_nu = |n: i64| -> BigInt {
            if n == 0 {
                return BigInt::from(0);
            }
            let mut s = BigInt::from(0);
            for t in 0..nu {
                s += (p_at(&p, n - t * (3 * t + 1) / 2) - p_at(&p, n - t * (3 * t + 5) / 2 - 1))
                    * sign(t);
            }
            s * sign(nu - 1)
        };
        for n in 0..=30 {
            let brute = count_m_nu(nu as u32, n as u32).map_err(|e| e.to_string())?;
            expect(m_nu(n) == BigInt::from(brute), || {
                format!("M_{nu}({n}) oracle mismatch")
            })?;
        }
        let label = format!("nu={nu}");
        for n in 0..=CO1_ORDER as i64 {
            if nu % 2 == 1 && n % 2 == 0 {
                continue;
            }
            let mut lhs = BigInt::from(0);
            for i in 0..nu {
                lhs +=
                    (p_at(&p, n - i * (2 * i + 1)) - p_at(&p, n - (i + 1) * (2 * i + 1))) * sign(i);
            }
            lhs *= sign(nu - 1);
            let e = r
                .entries
                .iter()
                .find(|e| e.n == n as u64 && e.label.as_deref() == Some(&label))
                .ok_or_else(|| format!("{label} n={n}: missing entry"))?;
            expect(e.lhs == lhs && e.rhs == m_nu(n), || {
                format!(
                    "{label} n={n}: report {} <= {}, recomputed {} <= {}",
                    e.lhs,
                    e.rhs,
                    lhs,
                    m_nu(n)
                )
            })?;
            seen += 1;
        }
    }
    expect(seen == r.entries.len(), || {
        "unexpected extra scan entries".into()
    })?;
    Ok(format!(
        "{seen} entries recomputed, {} violations",
        r.discrepancies.len()
    ))
}

fn series_strategy(max_order: usize) -> impl Strategy<Value = TruncatedSeries> {
    (0..=max_order).prop_flat_map(|order| {
        prop::collection::vec(-1000i64..1000, order + 1)
            .prop_map(|c| TruncatedSeries::from_coeffs(c.into_iter().map(BigInt::from).collect()))
    })
}

#[allow(clippy::eq_op)]
fn properties() -> Outcome {
    let mut runner = TestRunner::new(Config {
        failure_persistence: None,
        ..Config::with_cases(64)
    });
    let triple = (
        series_strategy(48),
        series_strategy(48),
        series_strategy(48),
    );
    runner
        .run(&triple, |(a, b, c)| {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
            Ok(())
        })
        .map_err(|e| format!("ring laws: {e}"))?;
    runner
        .run(&series_strategy(64), |a| {
            let mut c = a.into_coeffs();
            c[0] = BigInt::from(1);
            let u = TruncatedSeries::from_coeffs(c);
            let inv = u.invert().unwrap();
            prop_assert_eq!(&u * &inv, TruncatedSeries::one(u.order()));
            Ok(())
        })
        .map_err(|e| format!("invert: {e}"))?;

    expect(euler_product(1000) == euler_pentagonal_sum(1000), || {
        "pentagonal at 1000".into()
    })?;
    let order = 500;
    let inf = |s: fn(usize, usize, Length) -> truncpart::Result<PochhammerSpec>, j, step| {
        s(j, step, Length::Infinite).unwrap()
    };
    let phi = &pochhammer(&inf(PochhammerSpec::q_power, 1, 1), order)
        * &pochhammer_inverse(&inf(PochhammerSpec::minus_q_power, 1, 1), order).unwrap();
    expect(phi == phi_neg(order), || "phi(-q) at 500".into())?;
    let psi = &pochhammer(&inf(PochhammerSpec::q_power, 2, 2), order)
        * &pochhammer_inverse(&inf(PochhammerSpec::minus_q_power, 1, 2), order).unwrap();
    expect(psi == psi_neg(order), || "psi(-q) at 500".into())?;

    let cases: [(Carrier, &[(u32, u32)]); 3] = [
        (Carrier::All, &[(2, 3), (1, 3), (3, 4), (1, 4)]),
        (Carrier::Odd, &[(3, 4), (1, 4)]),
        (Carrier::Not2Mod4, &[(3, 4), (1, 4)]),
    ];
    let mut compared = 0;
    for (carrier, residues) in cases {
        for &(a, m) in residues {
            for nu in 0..=3 {
                for n in 0..=40 {
                    let d = count_p_restricted(a, m, nu, n, carrier).map_err(|e| e.to_string())?;
                    let c = count_p_restricted_with(a, m, nu, n, carrier, Method::Convolution)
                        .map_err(|e| e.to_string())?;
                    expect(d == c, || {
                        format!("{carrier:?} ({a},{m},{nu};{n}): {d} vs {c}")
                    })?;
                    compared += 1;
                }
            }
        }
    }
    Ok(format!(
        "ring laws, inverses, products at 500/1000, {compared} oracle pairs"
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, Duration, fn() -> Outcome); 10] = [
        ("T2 example and table", LIMIT_INSTANT, t2_example),
        ("CP example and N_2(10) list", LIMIT_INSTANT, cp_example),
        ("membership examples", LIMIT_INSTANT, membership),
        ("M generating function, n <= 60", LIMIT_M13, m13),
        ("N generating function, n <= 60", LIMIT_NK1, nk1),
        ("T2-T8 and CP1, nu 1..3", LIMIT_THEOREMS, theorems),
        (
            "APT, G1, G2 and l1 to order 150",
            LIMIT_BACKGROUND,
            background,
        ),
        ("inequalities to n <= 150", LIMIT_INEQUALITIES, inequalities),
        ("co1 scan, nu <= 3, n <= 120", LIMIT_CO1, co1),
        ("property suite", LIMIT_PROPERTIES, properties),
    ];
    let mut failed = 0;
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= limit => (true, d),
            Ok(d) => (false, format!("{d}; over time limit")),
            Err(e) => (false, e),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "{} {name}: {detail} [{:.2}s / {}s]",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
