//! Release gate: every check prints one PASS/FAIL line and the process
//! exits non-zero if any check fails.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use quadalg::algebra::{Alphabet, Field, FreeAlgebra, Polynomial, Presentation};
use quadalg::rank::{graded_dims_by_rank, random_presentation, verify_anick};
use quadalg::rewriting::is_quadratic_groebner;
use quadalg::rit::{
    classify, decompose_pair, grsig_check, omega_faithful, omega_structure, pair_set_condition, rit_presentation,
    two_isomorphic, SigmaFamily,
};
use quadalg::series::{anick_bound, hilbert_of_presentation, pbw_series, TruncatedSeries};
use quadalg::ybe::gybe_commutator;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = std::result::Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Check {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:.2?}, limit {limit:?}"))
}

fn ints(s: &TruncatedSeries) -> Vec<i64> {
    s.to_i64s().expect("small coefficients")
}

fn f17_reference() -> Presentation {
    let ring = FreeAlgebra::new(Alphabet::new(["a", "b", "c"]).unwrap(), Field::Prime(17));
    let (a, b, c) = (0u32, 1u32, 2u32);
    let rel = |terms: &[(i64, [u32; 2])]| {
        Polynomial::from_int_terms(&ring, terms.iter().map(|(k, w)| (*k, w.to_vec()))).unwrap()
    };
    let relations = vec![
        rel(&[(1, [a, c]), (2, [b, a]), (9, [b, b]), (3, [c, a]), (9, [c, b]), (8, [c, c])]),
        rel(&[(3, [a, b]), (5, [a, c]), (7, [b, a]), (1, [b, b]), (8, [b, c]), (4, [c, a]), (1, [c, b]), (2, [c, c])]),
        rel(&[
            (10, [a, a]),
            (2, [a, b]),
            (11, [a, c]),
            (2, [b, a]),
            (8, [b, b]),
            (4, [b, c]),
            (9, [c, a]),
            (7, [c, b]),
            (5, [c, c]),
        ]),
    ];
    Presentation::new(ring, relations).unwrap()
}

fn reference_presentation() -> Check {
    let start = Instant::now();
    let pres = f17_reference();
    let expected = vec![1, 3, 6, 9, 9, 0, 0];
    let by_words = ints(&hilbert_of_presentation(&pres, 6).map_err(|e| e.to_string())?.series);
    let by_rank = ints(&graded_dims_by_rank(&pres, 6).map_err(|e| e.to_string())?);
    ensure(by_words == expected, || format!("normal words gave {by_words:?}"))?;
    ensure(by_rank == expected, || format!("ranks gave {by_rank:?}"))?;
    within(start, Duration::from_secs(5))
}

fn anick_attainment() -> Check {
    let start = Instant::now();
    let cases: [(usize, &[i64]); 5] = [
        (3, &[1, 3, 6, 9, 9, 0]),
        (4, &[1, 4, 10, 16, 4, 0]),
        (5, &[1, 5, 15, 25, 0]),
        (6, &[1, 6, 21, 36, 0]),
        (7, &[1, 7, 28, 49, 0]),
    ];
    for (n, expected) in cases {
        let degree = expected.len() - 1;
        let report = verify_anick(n, degree, 17, 20, 1).map_err(|e| e.to_string())?;
        ensure(ints(&report.bound) == expected, || format!("n={n}: bound {}", report.bound))?;
        let hit = report.first_attaining.ok_or_else(|| format!("n={n}: no trial attained the bound"))?;
        ensure(ints(&report.trials[hit].dims) == expected, || format!("n={n}: trial {hit} mismatch"))?;
    }
    within(start, Duration::from_secs(120))
}

fn classification_tables() -> Check {
    let start = Instant::now();
    let field = Field::Prime(17);
    let pbw = |d: usize| ints(&pbw_series(d, 4).unwrap());
    let mut failures = Vec::new();
    // (m, n, expected class count)
    for (m, n, classes) in [(1, 1, 1), (2, 0, 1), (0, 2, 1), (1, 2, 4), (2, 1, 1), (1, 3, 7), (3, 1, 1)] {
        let c = classify(m, n, 4, field).map_err(|e| e.to_string())?;
        if c.rows.len() != classes {
            failures.push(format!("({m},{n}): {} classes, expected {classes}", c.rows.len()));
        }
        for row in &c.rows {
            if ints(&row.hilbert) != pbw(m + n) {
                failures.push(format!("({m},{n}) {}: series {}", row.representative, row.hilbert));
            }
        }
    }
    let c = classify(2, 2, 4, field).map_err(|e| e.to_string())?;
    let maximal: Vec<_> = c.rows.iter().filter(|r| r.maximal).collect();
    if c.rows.len() != 7 || maximal.len() != 4 {
        failures.push(format!("(2,2): {} classes, {} maximal", c.rows.len(), maximal.len()));
    }
    for row in &c.rows {
        let expected = if row.maximal { vec![1, 4, 10, 20, 35] } else { vec![1, 4, 10, 19, 31] };
        if ints(&row.hilbert) != expected {
            failures.push(format!("(2,2) {}: series {}", row.representative, row.hilbert));
        }
    }
    ensure(failures.is_empty(), || failures.join("; "))?;
    within(start, Duration::from_secs(60))
}

fn grsig_equivalence() -> Check {
    let mut disagreements = Vec::new();
    let mut checked = 0;
    for fam in SigmaFamily::enumerate(2, 3).chain(SigmaFamily::enumerate(2, 2)) {
        let grsig = grsig_check(&fam).holds;
        let sets = pair_set_condition(&fam);
        let pres = rit_presentation(&fam, Field::Prime(17)).map_err(|e| e.to_string())?;
        let groebner = is_quadratic_groebner(&pres).map_err(|e| e.to_string())?.is_groebner;
        let decomposed = decompose_pair(fam.table(0), fam.table(1)).map_err(|e| e.to_string())?.valid;
        if !(grsig == sets && sets == groebner && groebner == decomposed) {
            disagreements.push(format!("{fam}: {grsig} {sets} {groebner} {decomposed}"));
        }
        checked += 1;
    }
    ensure(checked == 745, || format!("checked {checked} families"))?;
    ensure(disagreements.is_empty(), || format!("{} disagreements: {}", disagreements.len(), disagreements.join("; ")))
}

fn two_isomorphism() -> Check {
    let mut violations = Vec::new();
    for n in 1..=4 {
        for fam in SigmaFamily::enumerate(2, n) {
            if grsig_check(&fam).holds && !two_isomorphic(fam.table(0), fam.table(1)).unwrap() {
                violations.push(fam.to_string());
            }
        }
    }
    ensure(violations.is_empty(), || format!("violations: {}", violations.join("; ")))
}

fn braided_commutator() -> Check {
    let start = Instant::now();
    let r11: SigmaFamily = "1".parse().unwrap();
    ensure(gybe_commutator(&r11).1, || "nonzero for the one-point family".into())?;
    let mut bad = Vec::new();
    for fam in SigmaFamily::enumerate(2, 2).chain(SigmaFamily::enumerate(2, 3)) {
        if grsig_check(&fam).holds && !gybe_commutator(&fam).1 {
            bad.push(fam.to_string());
        }
    }
    ensure(bad.is_empty(), || format!("nonzero commutator: {}", bad.join("; ")))?;
    within(start, Duration::from_secs(60))
}

fn omega_round_trip() -> Check {
    for n in 1..=4 {
        for fam in SigmaFamily::enumerate(2, n) {
            let absorbing = (0..2).all(|j| {
                (0..2).all(|k| (0..n as u32).all(|p| fam.apply(j, fam.apply(k, p)) == fam.apply(j, p)))
            });
            match omega_structure(&fam) {
                Ok(s) => {
                    ensure(absorbing, || format!("{fam}: accepted a non-absorbing family"))?;
                    ensure(s.rebuild() == fam, || format!("{fam}: rebuild differs"))?;
                }
                Err(_) => ensure(!absorbing, || format!("{fam}: rejected an absorbing family"))?,
            }
        }
    }
    for (m, size) in [(3, 3), (9, 6), (27, 9)] {
        let fam = omega_faithful(m).map_err(|e| e.to_string())?;
        ensure(fam.n() == size && fam.m() == m, || format!("m={m}: {} points", fam.n()))?;
        ensure(omega_structure(&fam).is_ok(), || format!("m={m}: not absorbing"))?;
        let distinct: std::collections::BTreeSet<_> = fam.tables().iter().collect();
        ensure(distinct.len() == m, || format!("m={m}: maps coincide"))?;
    }
    Ok(())
}

fn series_toolkit() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..100 {
        let degree = rng.random_range(1..=15);
        let coeffs: Vec<BigInt> = std::iter::once(BigInt::from(1))
            .chain((0..degree).map(|_| BigInt::from(rng.random_range(-50i64..=50))))
            .collect();
        let f = TruncatedSeries::new(coeffs, degree);
        let product = f.mul(&f.inverse().map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure(product == TruncatedSeries::one(degree), || format!("f * f^-1 != 1 for {f}"))?;
        let pp = f.positive_part();
        ensure(pp.positive_part() == pp, || format!("positive part not idempotent for {f}"))?;
    }
    for d in 1..=6u64 {
        for degree in 0..=10usize {
            let s = pbw_series(d as usize, degree).map_err(|e| e.to_string())?;
            for k in 0..=degree as u64 {
                // C(k + d - 1, d - 1) by the multiplicative formula
                let mut binom: u64 = 1;
                for i in 1..d {
                    binom = binom * (k + i) / i;
                }
                ensure(*s.coeff(k as usize) == BigInt::from(binom), || format!("pbw d={d} k={k}"))?;
            }
        }
    }
    let bound = ints(&anick_bound(3, 6).map_err(|e| e.to_string())?);
    ensure(bound == [1, 3, 6, 9, 9, 0, 0], || format!("three-generator bound {bound:?}"))
}

fn cross_method() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for case in 0..100 {
        let g = rng.random_range(2..=4);
        let r = rng.random_range(1..=6);
        let degree = rng.random_range(2..=5);
        let seed = rng.random::<u64>();
        let pres = random_presentation(g, r, 17, seed).map_err(|e| e.to_string())?;
        let words = hilbert_of_presentation(&pres, degree).map_err(|e| e.to_string())?.series;
        let ranks = graded_dims_by_rank(&pres, degree).map_err(|e| e.to_string())?;
        ensure(words == ranks, || format!("case {case} (g={g}, r={r}, seed={seed}): {words} vs {ranks}"))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let checks: [Criterion; 9] = [
        ("reference F_17 presentation: 1,3,6,9,9,0,0 by both methods", reference_presentation),
        ("random presentations attain the lower bound for n = 3..7", anick_attainment),
        ("rank <= 4 classification tables", classification_tables),
        ("four maximality tests agree on (2,2) and (2,3)", grsig_equivalence),
        ("maximal two-color families are 2-isomorphic (n <= 4)", two_isomorphism),
        ("[R12, R23] = 0 for maximal (2,2) and (2,3) families", braided_commutator),
        ("absorbing families round-trip; faithful sizes 3, 6, 9", omega_round_trip),
        ("series inverse, positive part and binomial checks", series_toolkit),
        ("normal words and ranks agree on 100 random presentations", cross_method),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in checks.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let took = start.elapsed();
        match outcome {
            Ok(()) => println!("PASS {} {name} ({took:.2?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name} ({took:.2?}): {why}", i + 1);
            }
        }
    }
    println!("{} of {} acceptance checks passed", checks.len() - failed, checks.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
