//! Acceptance gate: one test per criterion, each printing a single
//! machine-greppable PASS/FAIL line (run with `--nocapture` to see the
//! lines on success).
//!
//! Every check is exact integer equality; there are no tolerances.

use std::collections::BTreeSet;
use std::time::Instant;

use incidence::char_ring::Character;
use incidence::characters::{self, CharacterTable};
use incidence::cli::{write_table, Format};
use incidence::oracle::Oracle;
use incidence::vanishing::{region_vi_vanishing, regularity_formula};
use incidence::Error;

/// Prints the verdict line, then fails the test with the collected
/// evidence if anything mismatched.
fn report(num: u32, name: &str, mismatches: Vec<String>) {
    let verdict = if mismatches.is_empty() { "PASS" } else { "FAIL" };
    println!("acceptance criterion {num} ({name}): {verdict}");
    if !mismatches.is_empty() {
        for m in mismatches.iter().take(5) {
            println!("  mismatch: {m}");
        }
        panic!(
            "criterion {num} ({name}): {} mismatch(es), first: {}",
            mismatches.len(),
            mismatches[0]
        );
    }
}

#[test]
fn criterion_01_oracle_recursion_equivalence() {
    let start = Instant::now();
    let mut bad = Vec::new();
    for p in [2u64, 3] {
        let oracle = Oracle::new(3, p).unwrap();
        let table = CharacterTable::new(p).unwrap();
        for d in 1..=14i64 {
            for e in 0..=14i64 {
                let (h0, h1) = oracle.h_characters(d, e - 1).unwrap();
                if h0 != table.h0(d, e).unwrap() || h1 != table.h1(d, e).unwrap() {
                    bad.push(format!("p = {p}, d = {d}, e = {e}"));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < 120,
        "grid took {elapsed:?}, budget is two minutes"
    );
    report(1, "oracle-recursion equivalence", bad);
}

#[test]
fn criterion_02_small_d_truncated_schur() {
    let mut bad = Vec::new();
    for n in [3usize, 4] {
        let ni = n as i64;
        for p in [2u64, 3] {
            let pi = p as i64;
            let oracle = Oracle::new(n, p).unwrap();
            for d in pi..2 * pi {
                for e_twist in d - 1..=(ni - 1) * pi - ni + 2 {
                    let (_, h1) = oracle.h_characters(d, e_twist).unwrap();
                    let formula = characters::char_small_d(n, p, d, e_twist).unwrap();
                    if h1 != formula {
                        bad.push(format!("n = {n}, p = {p}, d = {d}, e_twist = {e_twist}"));
                    }
                }
            }
            // trivial-module spot check at the top twist of d = p
            let e_twist = (ni - 1) * pi - ni;
            let (_, h1) = oracle.h_characters(pi, e_twist).unwrap();
            if h1 != Character::one(n) || h1.dim_eval() != 1.into() {
                bad.push(format!("trivial case n = {n}, p = {p}"));
            }
        }
    }
    report(2, "truncated Schur characters for p <= d < 2p", bad);
}

#[test]
fn criterion_03_corner_characters() {
    let mut bad = Vec::new();
    for n in [3usize, 4] {
        for p in [2u64, 3] {
            let oracle = Oracle::new(n, p).unwrap();
            for t in 1..p {
                for k in 0..=6u32 {
                    let q = p.pow(k);
                    if q > 9 || t * q > 12 {
                        continue;
                    }
                    let corner = characters::corner_char(n, p, t, k).unwrap();
                    let expected = Character::schur2(n, t as i64 - 1, t as i64 - 1)
                        .frobenius(q)
                        .unwrap();
                    let (_, h1) = oracle.h_characters(corner.d, corner.a - 1).unwrap();
                    if corner.character != expected
                        || h1 != expected
                        || h1.dim_eval() != expected.dim_eval()
                    {
                        bad.push(format!("n = {n}, p = {p}, t = {t}, k = {k}"));
                    }
                }
            }
        }
    }
    report(3, "corner characters along the regularity edge", bad);
}

#[test]
fn criterion_04_regularity() {
    let mut bad = Vec::new();
    for n in [3usize, 4] {
        for p in [2u64, 3] {
            let oracle = Oracle::new(n, p).unwrap();
            let mut prev = None;
            for d in 1..=10i64 {
                let formula = regularity_formula(n, p, d).unwrap();
                let scanned = oracle.regularity_scan(d, formula + 2).unwrap();
                if scanned != formula {
                    bad.push(format!(
                        "n = {n}, p = {p}, d = {d}: scan {scanned} vs formula {formula}"
                    ));
                }
                if let Some(prev) = prev {
                    if scanned < prev {
                        bad.push(format!("monotonicity broken at n = {n}, p = {p}, d = {d}"));
                    }
                }
                prev = Some(scanned);
            }
        }
    }
    report(4, "regularity scan matches the closed formula", bad);
}

#[test]
fn criterion_05_region_vi_vanishing() {
    let mut bad = Vec::new();
    for n in [3usize, 4] {
        let ni = n as i64;
        for p in [2u64, 3] {
            let oracle = Oracle::new(n, p).unwrap();
            for b in (-ni - 11)..=(-ni) {
                let d = -b - ni + 1;
                for a in d..=d + 20 {
                    let flags = region_vi_vanishing(n, p, a, b).unwrap();
                    let (h0, h1) = oracle.h_dims(d, a - 1).unwrap();
                    if flags.hn2_nonzero != (h0 > 0) || flags.hn1_nonzero != (h1 > 0) {
                        bad.push(format!(
                            "n = {n}, p = {p}, a = {a}, b = {b}: flags ({}, {}) vs dims ({h0}, {h1})",
                            flags.hn2_nonzero, flags.hn1_nonzero
                        ));
                    }
                    // the corner a = d with n = 4, d < p is the delicate
                    // case of the classification; report each such grid
                    // point and confirm the vanishing resolution
                    if n == 4 && a == d && d < p as i64 {
                        println!(
                            "  criterion 5 report: delicate corner at n = 4, p = {p}, \
                             a = d = {d}: oracle H^(n-2) dim = {h0}, resolved as vanishing"
                        );
                        if h0 != 0 {
                            bad.push(format!(
                                "corner n = 4, p = {p}, d = {d} did not vanish (dim {h0})"
                            ));
                        }
                    }
                }
            }
        }
    }
    report(5, "region VI vanishing flags match oracle dimensions", bad);
}

#[test]
fn criterion_06_p2_closed_form() {
    let mut bad = Vec::new();
    let table = CharacterTable::new(2).unwrap();
    for k in 1..=4u32 {
        let lo = 1i64 << k;
        let hi = (1i64 << (k + 1)) - 2;
        for d in lo..=hi {
            for e in d..=hi {
                if characters::h1_p2_closed(d, e, k).unwrap() != table.h1(d, e).unwrap() {
                    bad.push(format!("k = {k}, d = {d}, e = {e}"));
                }
            }
        }
    }
    report(6, "p = 2 closed form through binary truncations", bad);
}

#[test]
fn criterion_07_highest_weights() {
    let mut bad = Vec::new();
    for p in [2u64, 3] {
        let table = CharacterTable::new(p).unwrap();
        for d in 0..=30i64 {
            for e in 0..=30i64 {
                let h1 = table.h1(d, e).unwrap();
                match characters::hw_h1(d, e, p) {
                    Ok(w) if !h1.is_zero() => {
                        if &w != h1.highest_weight().unwrap() {
                            bad.push(format!("p = {p}, d = {d}, e = {e}"));
                        }
                    }
                    Ok(_) => bad.push(format!("p = {p}, d = {d}, e = {e}: weight for zero h1")),
                    Err(Error::ZeroCharacter) if h1.is_zero() => {}
                    Err(err) => bad.push(format!("p = {p}, d = {d}, e = {e}: {err}")),
                }
            }
        }
    }
    report(7, "highest weights of nonzero h1", bad);
}

#[test]
fn criterion_08_symmetric_function_identities() {
    let mut bad = Vec::new();

    // Koszul expansion of the truncated h
    for n in [3usize, 4] {
        for p in [2i64, 3, 5] {
            for r in 0..=(n as i64) * (p - 1) {
                let mut rhs = Character::zero(n);
                for i in 0..=(n as i64) {
                    let term = &Character::e(n, i).frobenius(p as u64).unwrap()
                        * &Character::h(n, r - i * p);
                    rhs = if i % 2 == 0 { &rhs + &term } else { &rhs - &term };
                }
                if Character::h_trunc(n, p as u64, r).unwrap() != rhs {
                    bad.push(format!("koszul: n = {n}, p = {p}, r = {r}"));
                }
            }
        }
    }

    // perfect-pairing duality of truncations, q in {p, p^2}
    for n in [3usize, 4] {
        for p in [2u64, 3, 5] {
            for q in [p, p * p] {
                let top = (n as i64) * (q as i64 - 1);
                for r in 0..=top {
                    if Character::h_trunc(n, q, r).unwrap().dual()
                        != Character::h_trunc(n, q, top - r).unwrap()
                    {
                        bad.push(format!("pairing: n = {n}, q = {q}, r = {r}"));
                    }
                }
            }
        }
    }

    // truncated-Schur duality on the leading bracket
    for (p, qs) in [(2i64, vec![2i64, 4, 8]), (3, vec![3, 9])] {
        for q in qs {
            for t in 1..p {
                for d in t * q..=(t + 1) * q - 2 {
                    for e in t * q..=(t + 1) * q - 2 {
                        let lhs =
                            Character::schur2_trunc(3, q as u64, e - 1 + (2 - t) * q, d - t * q)
                                .unwrap();
                        let rhs = Character::schur2(3, q + d - e - 2, d - t * q).dual();
                        if lhs != rhs {
                            bad.push(format!("schur-dual: q = {q}, t = {t}, d = {d}, e = {e}"));
                        }
                    }
                }
            }
        }
    }

    // Nim-character recursion across binary blocks
    let adjoint = Character::schur2(3, 1, 1);
    for k in 1..=4u32 {
        let q = 1i64 << k;
        let twist = adjoint.frobenius(q as u64).unwrap();
        for m in 0..q {
            if Character::nim(3, q + m).unwrap() != &twist * &Character::nim(3, m).unwrap() {
                bad.push(format!("nim: q = {q}, m = {m}"));
            }
        }
    }

    // Euler characteristic and transpose symmetry of the recursion
    for p in [2u64, 3, 5] {
        let table = CharacterTable::new(p).unwrap();
        for d in 0..=30i64 {
            for e in 0..=30i64 {
                let h0 = table.h0(d, e).unwrap();
                let h1 = table.h1(d, e).unwrap();
                if &h0 - &h1 != characters::euler_char(3, d, e).unwrap() {
                    bad.push(format!("euler: p = {p}, d = {d}, e = {e}"));
                }
                if h0 != table.h1(e, d).unwrap() {
                    bad.push(format!("transpose: p = {p}, d = {d}, e = {e}"));
                }
            }
        }
    }

    report(8, "symmetric-function identities", bad);
}

#[test]
fn criterion_09_symmetric_power_band() {
    let mut bad = Vec::new();
    for n in [3usize, 4] {
        for p in [3u64, 5] {
            let oracle = Oracle::new(n, p).unwrap();
            for a in 1..p as i64 {
                let (_, h1) = oracle.h_characters(a, a - 2).unwrap();
                if h1 != Character::schur2(n, a - 1, a - 1) {
                    bad.push(format!("n = {n}, p = {p}, a = {a}"));
                }
            }
        }
    }
    report(9, "doubled Schur characters below the characteristic", bad);
}

#[test]
fn criterion_10_nonvanishing_pair_region() {
    let mut bad = Vec::new();
    let lo = -34i64;
    let hi = 34i64;

    let mut csv = Vec::new();
    write_table(4, 3, lo..=hi, lo..=hi, Format::Csv, &mut csv).unwrap();
    let csv = String::from_utf8(csv).unwrap();

    // the region where both middle degrees survive (H^2 and H^3 at n = 4)
    let mut middle: std::collections::HashMap<(i64, i64), (bool, bool)> =
        std::collections::HashMap::new();
    for line in csv.lines().skip(1) {
        let cols: Vec<&str> = line.split(',').collect();
        let (a, b): (i64, i64) = (cols[0].parse().unwrap(), cols[1].parse().unwrap());
        let i: usize = cols[2].parse().unwrap();
        let nonzero = cols[3] == "nonzero";
        let entry = middle.entry((a, b)).or_default();
        if i == 2 {
            entry.0 = nonzero;
        } else if i == 3 {
            entry.1 = nonzero;
        }
    }
    let pairs: BTreeSet<(i64, i64)> = middle
        .iter()
        .filter(|(_, (h2, h3))| *h2 && *h3)
        .map(|(&ab, _)| ab)
        .collect();
    if pairs.is_empty() {
        bad.push("nonvanishing-pair region is empty".into());
    }

    // symmetry under the Serre involution composed with the degree flip
    for &(a, b) in &pairs {
        let (sa, sb) = (-3 - a, -3 - b);
        if (lo..=hi).contains(&sa) && (lo..=hi).contains(&sb) && !pairs.contains(&(sa, sb)) {
            bad.push(format!("serre image of ({a}, {b}) missing"));
        }
    }

    // row-maxima along region VI rows rise exactly at the corner points;
    // rows clipped by the grid edge cannot witness their true maximum
    let mut peaks = Vec::new();
    let mut prev_max: Option<i64> = None;
    for b in (lo..=-4).rev() {
        let row_max = pairs.iter().filter(|&&(_, rb)| rb == b).map(|&(a, _)| a).max();
        let Some(row_max) = row_max else { continue };
        if row_max == hi {
            break;
        }
        if prev_max.map_or(true, |m| row_max > m) {
            peaks.push((row_max, b));
        }
        prev_max = Some(row_max);
    }
    let expected: Vec<(i64, i64)> = [(1i64, 1u32), (2, 1), (1, 2), (2, 2)]
        .iter()
        .map(|&(t, k)| {
            let q = 3i64.pow(k);
            ((t + 2) * q - 3, -t * q - 3)
        })
        .collect();
    if peaks != expected {
        bad.push(format!("peaks {peaks:?}, expected {expected:?}"));
    }

    report(10, "nonvanishing-pair region symmetry and corner peaks", bad);
}
