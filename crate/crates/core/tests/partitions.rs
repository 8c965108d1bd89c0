//! Enumeration counts against generating-function coefficients.

use num_bigint::BigInt;
use truncpart::generating::{gen, rhs_m_series, rhs_n_series};
use truncpart::partition::{
    basic_counts, count_n, count_p_restricted, count_p_restricted_with, durfee,
    enumerate_partitions, m_counts, Carrier, Method, ModularDiagram, PartConstraint,
};
use truncpart::GenName;

const RESIDUES: [(u32, u32); 5] = [(1, 2), (1, 3), (2, 3), (1, 4), (3, 4)];

#[test]
fn m_counts_match_series() {
    for (a, m) in RESIDUES {
        for nu in 0..=3 {
            let counts = m_counts(a, m, nu, 60).unwrap();
            let s = rhs_m_series(a as u64, m as u64, nu as u64, 60).unwrap();
            for (n, c) in counts.iter().enumerate() {
                assert_eq!(BigInt::from(*c), s.at(n as i64), "M({a},{m},{nu};{n})");
            }
        }
    }
}

#[test]
fn n_counts_match_series() {
    for nu in 1..=4 {
        let s = rhs_n_series(nu as u64, 60).unwrap();
        for n in 0..=60 {
            assert_eq!(
                BigInt::from(count_n(nu, n).unwrap()),
                s.at(n as i64),
                "N_{nu}({n})"
            );
        }
    }
}

#[test]
fn basic_counts_match_series() {
    for name in GenName::ALL {
        let s = gen(name, 40);
        for (n, c) in basic_counts(name, 40).iter().enumerate() {
            assert_eq!(BigInt::from(*c), s.at(n as i64), "{name}({n})");
        }
    }
}

#[test]
fn odd_parts_equinumerous_with_distinct_parts() {
    for n in 0..=30 {
        let odd = enumerate_partitions(n, PartConstraint::odd_only()).count();
        let distinct = enumerate_partitions(n, PartConstraint::none())
            .filter(|p| p.parts().windows(2).all(|w| w[0] > w[1]))
            .count();
        assert_eq!(odd, distinct, "n = {n}");
    }
}

#[test]
fn direct_and_convolution_agree() {
    let cases: [(Carrier, &[(u32, u32)]); 3] = [
        (Carrier::All, &[(2, 3), (1, 3), (3, 4), (1, 4), (1, 2)]),
        (Carrier::Odd, &[(3, 4), (1, 4), (1, 2)]),
        (Carrier::Not2Mod4, &[(3, 4), (1, 4)]),
    ];
    for (carrier, residues) in cases {
        for &(a, m) in residues {
            for nu in 0..=2 {
                for n in 0..=40 {
                    let direct = count_p_restricted(a, m, nu, n, carrier).unwrap();
                    let conv =
                        count_p_restricted_with(a, m, nu, n, carrier, Method::Convolution).unwrap();
                    assert_eq!(direct, conv, "{carrier:?} ({a},{m},{nu}) n={n}");
                }
            }
        }
    }
}

#[test]
fn durfee_is_maximal() {
    for n in 0..=22 {
        for p in enumerate_partitions(n, PartConstraint::none()) {
            let rows = p.parts();
            for d in 0..=4 {
                let r = durfee(rows, d);
                let h = r.height;
                assert_eq!(r.width(), h as u32 + d);
                if h > 0 {
                    assert!(rows[h - 1] >= h as u32 + d, "{p} d={d}");
                }
                if h < rows.len() {
                    assert!(rows[h] < h as u32 + 1 + d, "{p} d={d} not maximal");
                }
            }
        }
    }
}

#[test]
fn modular_diagram_round_trip() {
    for (a, m) in RESIDUES {
        for n in 0..=30 {
            for p in enumerate_partitions(n, PartConstraint::residue(a, m)) {
                let d = ModularDiagram::new(&p, a, m).unwrap();
                assert_eq!(d.rows().len(), p.len());
                assert_eq!(d.to_partition(), p);
            }
        }
    }
}

#[test]
fn carrier_rejects_incompatible_residue() {
    assert!(count_p_restricted(2, 4, 1, 10, Carrier::Odd).is_err());
    assert!(count_p_restricted(2, 4, 1, 10, Carrier::Not2Mod4).is_err());
    assert!(count_p_restricted(0, 3, 1, 10, Carrier::All).is_err());
}
