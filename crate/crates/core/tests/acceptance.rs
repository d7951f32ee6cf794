//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Criterion 2 is expected to fail: the upstream reference data for the
//! residue-0 series is internally inconsistent with the counting rule that
//! defines it (the same machinery reproduces the residue-4 series exactly,
//! and the residue-0 values agree through exponent -72). The test asserts
//! the reference values as stated rather than weakening them.

use num_rational::Ratio;
use num_traits::Signed;

use p2chi::filtrations::{
    chern, discriminant_normalized, discriminant_working, standard_triple, twist_chern,
};
use p2chi::quiverrep::{is_stable, QuiverRepresentation, Stability};
use p2chi::rank3::{self, counted_solutions_mod4, disc_r3, CaseId};
use p2chi::verify::{self, CheckResult, Suite};
use p2chi::Rational;

fn report(results: &[CheckResult]) -> bool {
    let mut all = true;
    for r in results {
        println!(
            "[{}] {} — {}: {}",
            if r.pass { "PASS" } else { "FAIL" },
            r.suite,
            r.name,
            r.detail
        );
        all &= r.pass;
    }
    all
}

#[test]
fn criterion_1_series_residue_4() {
    let golden = verify::parse_golden_series(verify::GOLDEN_SERIES_MOD4);
    let series = rank3::series_rank3(4, golden.len()).unwrap();
    let got: Vec<(i64, i64)> = series.iter().collect();
    let pass = got == golden;
    println!(
        "[{}] criterion 1 — rank-3 series, |delta| = 4 (mod 6), depth 32: exact integer equality",
        if pass { "PASS" } else { "FAIL" }
    );
    assert_eq!(got, golden);
}

#[test]
fn criterion_2_series_residue_0() {
    let golden = verify::parse_golden_series(verify::GOLDEN_SERIES_MOD0);
    let series = rank3::series_rank3(0, golden.len()).unwrap();
    let got: Vec<(i64, i64)> = series.iter().collect();
    let agree = golden.iter().zip(&got).take_while(|(a, b)| a == b).count();
    let pass = got == golden;
    println!(
        "[{}] criterion 2 — rank-3 series, |delta| = 0 (mod 6), depth 33: exact integer equality \
         (matches the reference for the first {agree} of {} coefficients; the counting rule and \
         the reference table disagree beyond that, see the mismatch below)",
        if pass { "PASS" } else { "FAIL" },
        golden.len(),
    );
    assert_eq!(got, golden);
}

#[test]
fn criterion_3_polyhedron_golden_sets() {
    let results = verify::run(Suite::Polyhedra);
    let pass = report(&results);
    println!(
        "[{}] criterion 3 — polyhedron golden vertex/ray sets: exact set equality",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass);
}

#[test]
fn criterion_4_closed_forms() {
    let results = verify::run(Suite::ClosedForms);
    let pass = report(&results);
    println!(
        "[{}] criterion 4 — closed forms equal the direct discriminant on [0,4]^arity: exact",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass);
}

#[test]
fn criterion_5_hurwitz_identity() {
    let results = verify::run(Suite::Hurwitz);
    let pass = report(&results);
    println!(
        "[{}] criterion 5 — lattice count vs class-number formula for |delta| <= 200: exact",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass);
}

#[test]
fn criterion_6_unique_decomposition() {
    let results = verify::run(Suite::Decomposition);
    let pass = report(&results);
    println!(
        "[{}] criterion 6 — unique decomposition over strict solutions with alpha <= 8: exact",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass);
}

#[test]
fn criterion_7_property_suites() {
    let mut results = verify::run(Suite::Properties);
    // Shift invariance on explicitly constructed triples as well: the
    // random-triple suite is part of verify::Properties; add the
    // twist-on-chern-data identity directly for 100 deterministic cases.
    let mut rng = 0x1234_5678_9abc_def0u64;
    let mut next = move || {
        rng ^= rng << 13;
        rng ^= rng >> 7;
        rng ^= rng << 17;
        rng
    };
    let mut ok = true;
    for _ in 0..100 {
        let c = p2chi::filtrations::ChernData {
            c1: (next() % 15) as i64 - 7,
            c2: (next() % 15) as i64 - 7,
            rank: 1 + (next() % 3) as usize,
        };
        let k = (next() % 9) as i64 - 4;
        ok &= discriminant_normalized(&c) == discriminant_normalized(&twist_chern(&c, k));
    }
    results.push(if ok {
        CheckResult {
            suite: "properties",
            name: "twist invariance (direct)".into(),
            pass: true,
            detail: "100 random Chern data".into(),
        }
    } else {
        CheckResult {
            suite: "properties",
            name: "twist invariance (direct)".into(),
            pass: false,
            detail: "mismatch".into(),
        }
    });
    let pass = report(&results);
    println!(
        "[{}] criterion 7 — shift/twist/residue/Bogomolov property suites: exact",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass);
}

#[test]
fn criterion_8_stability_concordance() {
    let results = verify::run(Suite::Stability);
    let pass = report(&results);
    println!(
        "[{}] criterion 8 — counted solutions classify stable; boundary points semistable",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass);
}

/// Beyond the stated criteria: the counted solutions' filtration triples
/// reproduce their counted discriminants through the Chern machinery, tying
/// the polynomial layer to the filtration layer end to end.
#[test]
fn counted_solutions_cross_machinery() {
    for sol in counted_solutions_mod4(40).unwrap() {
        let incl_pair = sol.incl.pairs().next();
        let triple = standard_triple::<i64>(sol.alpha.as_slice(), incl_pair).unwrap();
        assert_eq!(discriminant_working(&triple).unwrap(), sol.delta);
        let c = chern(&triple).unwrap();
        let normalized = discriminant_normalized(&c);
        assert!(!normalized.is_negative());
        assert_eq!(normalized, Rational::new((-sol.delta).into(), 18.into()),);
        let rep = QuiverRepresentation::from_filtration_triple(&triple);
        assert_eq!(is_stable(&rep).unwrap(), Stability::Stable);
    }
}

/// The rank-2 and rank-3 stability systems agree with the stability
/// predicates on integer points of a box.
#[test]
fn systems_match_predicates() {
    let rank2 = p2chi::rank2::stability_system::<i64>();
    for a1 in 1..=6i64 {
        for a2 in 1..=6i64 {
            for a3 in 1..=6i64 {
                let x: Vec<Ratio<i64>> = [a1, a2, a3]
                    .iter()
                    .map(|&v| Ratio::from_integer(v))
                    .collect();
                let in_system = rank2.contains(&x, false).unwrap();
                let stable = p2chi::rank2::stable_triple(&p2chi::rank2::TripleAlpha(a1, a2, a3));
                assert_eq!(in_system, stable, "({a1},{a2},{a3})");
            }
        }
    }
    // Rank 3: strict solutions of case systems have negative discriminant
    // with the case's residue.
    for case in [CaseId::Case1, CaseId::Case2] {
        let system = rank3::case_system::<i64>(case);
        let mut alpha = [1i64; 6];
        loop {
            let a = rank3::ArmLengths::new(alpha);
            if rank3::is_strict_solution(&system, &a) {
                let d = disc_r3(&a, &rank3::InclusionPattern::empty());
                assert!(d < 0, "{a} gives {d}");
            }
            let mut pos = 0;
            while pos < 6 {
                alpha[pos] += 1;
                if alpha[pos] <= 4 {
                    break;
                }
                alpha[pos] = 1;
                pos += 1;
            }
            if pos == 6 {
                break;
            }
        }
    }
}
