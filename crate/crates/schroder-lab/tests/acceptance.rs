//! Acceptance suite: one test per acceptance criterion, each printing a
//! single pass/fail line (visible with `--nocapture`).

use schroder_lab::counting::{binom, count_fuss_catalan, count_schroder};
use schroder_lab::verifier::{self, CheckReport, Status};

fn verdict(name: &str, ok: bool) {
    println!(
        "acceptance {name}: {}",
        if ok { "PASS" } else { "FAIL" }
    );
}

fn all_pass(reports: &[CheckReport]) -> bool {
    !reports.is_empty() && reports.iter().all(|r| r.status == Status::Pass)
}

/// Adjudication reports must be complete: every case decided, nothing
/// skipped, and proved statements (FAIL semantics) absent.
fn complete_adjudication(reports: &[CheckReport]) -> bool {
    !reports.is_empty()
        && reports
            .iter()
            .all(|r| matches!(r.status, Status::Pass | Status::MismatchReported))
}

/// The interpretations recorded in `notes` as passing, intersected over all
/// reports; used to require one stable reading across every family size.
fn stable_interpretation(reports: &[CheckReport], label: &str) -> bool {
    reports.iter().all(|r| {
        r.notes
            .as_deref()
            .is_some_and(|n| n.contains(&format!("\"{label}\"")))
    })
}

#[test]
fn acceptance_01_enumeration_matches_closed_form() {
    let mut reports = verifier::concordance_schroder(6, 3);
    reports.extend(verifier::unit_fraction_correspondence(5, 3));
    let ok = all_pass(&reports);
    verdict("01 enumeration-vs-closed-form", ok);
    assert!(ok, "enumerated family sizes must equal the closed form");
}

#[test]
fn acceptance_02_fuss_catalan_specialization() {
    let mut ok = true;
    for n in 1..=8u64 {
        for r in 1..=4u64 {
            let fuss = count_fuss_catalan(n, r);
            let full = count_schroder(n, n, r);
            let direct = binom(n * r + n, n) / num_bigint::BigUint::from(n * r + 1);
            ok &= fuss == full && fuss == direct;
        }
    }
    verdict("02 fuss-catalan", ok);
    assert!(ok, "d = n families must count Fuss-Catalan numbers");
}

#[test]
fn acceptance_03_annexe_table_and_no_symmetric_dinv() {
    let mut reports = verifier::annexe1();
    reports.push(verifier::check_no_symmetric_dinv());
    let ok = all_pass(&reports);
    verdict("03 annexe1-and-no-symmetric-dinv", ok);
    assert!(ok, "every annexe row and the non-existence sweep must pass");
}

#[test]
fn acceptance_04_parking_counts() {
    let reports = verifier::concordance_parking(4, 2);
    let ok = all_pass(&reports);
    verdict("04 parking-counts", ok);
    assert!(ok, "brute parking counts must equal the closed form");
}

#[test]
fn acceptance_05_q_identity_r1() {
    let mut reports = Vec::new();
    for n in 1..=5u64 {
        for d in 0..=n {
            reports.push(verifier::check_q_identity(n, d));
        }
    }
    let ok = all_pass(&reports) && stable_interpretation(&reports, "line-area");
    verdict("05 q-identity-r1", ok);
    assert!(
        ok,
        "the q,1/q identity must hold with one interpretation stable across sizes"
    );
}

#[test]
fn acceptance_06_haiman_equidistribution() {
    let mut reports = Vec::new();
    for n in 1..=4u64 {
        for r in 1..=3u64 {
            reports.push(verifier::check_haiman_equidistribution(n, r));
        }
    }
    let ok = all_pass(&reports) && stable_interpretation(&reports, "line-area");
    verdict("06 haiman-equidistribution", ok);
    assert!(
        ok,
        "area and the d = n dinv must be equidistributed under one stable interpretation"
    );
}

#[test]
fn acceptance_07_proposed_d1_asymmetry_witness() {
    let report = verifier::proposed_d1_witness(4, 2);
    let ok = report.status == Status::Pass;
    verdict("07 proposed-d1-witness", ok);
    assert!(ok, "an asymmetry witness must exist for the d = 1 proposal");
}

#[test]
fn acceptance_08_pentagon_tier1_exact() {
    let reports = verifier::concordance_pentagon_tier1(5, 3);
    let ok = all_pass(&reports);
    verdict("08 pentagon-tier1", ok);
    assert!(ok, "rectangle and shallow pentagon cases must match the oracle");
}

#[test]
fn acceptance_09_pentagon_general_adjudicated() {
    let reports = verifier::concordance_pentagon_general(4, 2);
    let ok = complete_adjudication(&reports);
    let mismatches = reports
        .iter()
        .filter(|r| r.status == Status::MismatchReported)
        .count();
    println!("  pentagon general: {} cases, {mismatches} mismatch(es) recorded", reports.len());
    verdict("09 pentagon-general", ok);
    assert!(ok, "every general pentagon case must be decided, none skipped");
}

#[test]
fn acceptance_10_psch_adjudicated() {
    let reports = verifier::concordance_psch(3, 2);
    let complete = complete_adjudication(&reports);
    // The default variant must agree with the brute oracle on every family.
    let default_ok = reports.iter().all(|r| {
        r.notes
            .as_deref()
            .is_some_and(|n| n.ends_with("matches oracle: true"))
    });
    let ok = complete && default_ok;
    verdict("10 psch-adjudication", ok);
    assert!(ok, "psch must be decided for every variant and exact by default");
}

#[test]
fn acceptance_11_hexagon_and_constrained_adjudicated() {
    let hexagon = verifier::concordance_hexagon(3, 2);
    let cross_checked = hexagon
        .iter()
        .filter(|r| r.params.ends_with("s=0"))
        .all(|r| r.actual.contains_key("g-at-s0"));
    let chsch = verifier::concordance_chsch(3, 2);
    let ok = complete_adjudication(&hexagon) && cross_checked && complete_adjudication(&chsch);
    let mismatches = hexagon
        .iter()
        .chain(chsch.iter())
        .filter(|r| r.status == Status::MismatchReported)
        .count();
    println!(
        "  hexagon + constrained: {} cases, {mismatches} mismatch(es) recorded",
        hexagon.len() + chsch.len()
    );
    verdict("11 hexagon-and-chsch", ok);
    assert!(ok, "hexagon and constrained formulas must be fully adjudicated");
}

#[test]
fn acceptance_12_pascal_identity() {
    let doubled = verifier::check_pascal_identity(20);
    let q_analogue = verifier::check_qbinom_pascal(20);
    let ok = doubled.status == Status::Pass && q_analogue.status == Status::Pass;
    verdict("12 pascal-identity", ok);
    assert!(ok, "the doubled Pascal identity must hold for all 0 <= i <= m <= 20");
}

#[test]
fn acceptance_13_codec_roundtrip() {
    let report = verifier::codec_roundtrip(6, 3);
    let ok = report.status == Status::Pass;
    verdict("13 codec-roundtrip", ok);
    assert!(ok, "decode(encode(path)) must restore every enumerated path");
}
