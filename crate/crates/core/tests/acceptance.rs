//! End-to-end acceptance checks, one printed line per criterion.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.
//! A criterion that is mathematically false on its stated range is reported
//! as FAIL; the final assertion pins the exact set of such known failures so
//! that any change in behaviour is caught.

use std::time::{Duration, Instant};

use eulerian_cert::battery::{run_battery, Status};
use eulerian_cert::conditions::{
    a0_bound_check, adjoint_hodge, displayed_h0, scan_key_inequality, second_moment_check,
    GroupKind,
};
use eulerian_cert::eulerian::{
    eulerian_closed_form, eulerian_row, factorial, is_log_concave, is_palindromic,
};
use eulerian_cert::hodge::{
    chi_omega, chi_twisted, hodge_tate_multiplicities, tannakian_dimension, HypersurfaceData,
};
use eulerian_cert::sequences::{a_seq, d_seq, descent_chain, diophantine_solutions};
use eulerian_cert::wedge::{
    classify, enumerate_solutions, lhs_profile, lhs_profile_direct, CaseLabel, SearchBounds,
    WeightFunction,
};
use num_bigint::BigInt;

struct Outcome {
    id: u8,
    title: &'static str,
    passed: bool,
    detail: String,
    elapsed: Duration,
    limit: Option<Duration>,
}

impl Outcome {
    fn within_limit(&self) -> bool {
        self.limit.is_none_or(|l| self.elapsed <= l)
    }

    fn ok(&self) -> bool {
        self.passed && self.within_limit()
    }

    fn line(&self) -> String {
        let limit = self
            .limit
            .map_or_else(|| "no limit".to_owned(), |l| format!("limit {:.0}s", l.as_secs_f64()));
        format!(
            "criterion {} [{}] {}: {} ({:.3}s, {limit})",
            self.id,
            if self.ok() { "PASS" } else { "FAIL" },
            self.title,
            self.detail,
            self.elapsed.as_secs_f64(),
        )
    }
}

fn run(
    id: u8,
    title: &'static str,
    limit_secs: Option<u64>,
    body: impl FnOnce() -> (bool, String),
) -> Outcome {
    let start = Instant::now();
    let (passed, detail) = body();
    Outcome {
        id,
        title,
        passed,
        detail,
        elapsed: start.elapsed(),
        limit: limit_secs.map(Duration::from_secs),
    }
}

fn criterion_1() -> (bool, String) {
    let mut bad = Vec::new();
    for n in 1..=40i64 {
        let row = eulerian_row(n).unwrap();
        let closed: Vec<BigInt> = (0..n).map(|q| eulerian_closed_form(n, q).unwrap()).collect();
        let ok = row == closed
            && row.iter().sum::<BigInt>() == factorial(n as u64)
            && is_palindromic(&row)
            && is_log_concave(&row);
        if !ok {
            bad.push(n);
        }
    }
    (bad.is_empty(), format!("rows 1..=40, failing rows {bad:?}"))
}

fn criterion_2() -> (bool, String) {
    let a: Vec<String> = (1..=6).map(|i| a_seq(i).unwrap().to_string()).collect();
    let d: Vec<String> = (1..=3).map(|i| d_seq(i).unwrap().to_string()).collect();
    let ok = a == ["1", "5", "20", "76", "285", "1065"]
        && d == ["6", "53130", "216182590635135019896"];
    (ok, format!("a = {a:?}, d = {d:?}"))
}

fn criterion_3() -> (bool, String) {
    let mut mismatches = 0;
    let mut cases = 0;
    for n in 2..=10u32 {
        for d in 1..=20u64 {
            let h = HypersurfaceData::new(n, d).unwrap();
            for i in 0..n as i64 {
                cases += 1;
                if chi_twisted(&h, 0, i).unwrap() != chi_omega(&h, i).unwrap() {
                    mismatches += 1;
                }
            }
            let total = hodge_tate_multiplicities(&h).total();
            if total != factorial(n as u64) * d || total != tannakian_dimension(&h) {
                mismatches += 1;
            }
        }
    }
    (mismatches == 0, format!("{cases} twisted/untwisted pairs, {mismatches} mismatches"))
}

type ScanFailures = Vec<(u32, u64, GroupKind)>;

fn criterion_4() -> (bool, String, ScanFailures) {
    let scan = scan_key_inequality(2, 50, 1, 100).unwrap();
    let mut bad_moment = Vec::new();
    for n in 2..=100 {
        if !second_moment_check(n).unwrap() || !a0_bound_check(n).unwrap() {
            bad_moment.push(n);
        }
    }
    let ok = scan.failures.is_empty() && bad_moment.is_empty();
    let first = scan
        .failures
        .first()
        .map_or_else(|| "-".to_owned(), |(n, d, g)| format!("n={n} d={d} {g}"));
    let detail = format!(
        "key inequality {} cases, {} failures (first {first}); moment/a0 failures {bad_moment:?}",
        scan.checked,
        scan.failures.len()
    );
    (ok, detail, scan.failures)
}

fn criterion_5() -> (bool, String) {
    let mut bad = Vec::new();
    let mut cases = 0;
    for n in 2..=12u32 {
        for d in 1..=10u64 {
            for g in GroupKind::ALL {
                cases += 1;
                let graded = adjoint_hodge(n, d, g).unwrap().h0();
                if graded != displayed_h0(n, d, g).unwrap() {
                    bad.push((n, d, g));
                }
            }
        }
    }
    (bad.is_empty(), format!("{cases} cases, {} discrepancies", bad.len()))
}

/// Dense weight vectors with nonzero ends, length `1..=len`, total in `2..=m_max`.
fn dense_vectors(len: usize, m_max: u64) -> Vec<Vec<u64>> {
    fn extend(prefix: &mut Vec<u64>, left: u64, len: usize, out: &mut Vec<Vec<u64>>) {
        if !prefix.is_empty() && prefix[0] > 0 && *prefix.last().unwrap() > 0 {
            out.push(prefix.clone());
        }
        if prefix.len() == len {
            return;
        }
        let lo = if prefix.is_empty() { 1 } else { 0 };
        for v in lo..=left {
            prefix.push(v);
            extend(prefix, left - v, len, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), m_max, len, &mut out);
    out.retain(|v| v.iter().sum::<u64>() >= 2);
    out
}

fn criterion_6() -> (bool, String) {
    let mut notes = Vec::new();
    let mut ok = true;

    let n4 = enumerate_solutions(4, SearchBounds::new(14).with_span(6)).unwrap();
    ok &= n4.is_empty();
    notes.push(format!("n=4: {}", n4.len()));

    let n2 = enumerate_solutions(2, SearchBounds::new(12)).unwrap();
    let family_ok = n2.len() == 5
        && n2.iter().zip(2u64..).all(|(s, k)| {
            let expected = WeightFunction::new([(0, 2 * k - 1), (1, 1)]).unwrap();
            s.k == k
                && s.m_h == expected
                && s.d == eulerian_cert::eulerian::binomial(2 * k as i64 - 1, k as i64)
        });
    ok &= family_ok;
    notes.push(format!("n=2: {} (family {})", n2.len(), family_ok));

    let n3 = enumerate_solutions(3, SearchBounds::new(10)).unwrap();
    let n3_ok = n3.len() == 1 && n3[0].m() == 4 && n3[0].k == 2;
    ok &= n3_ok;
    notes.push(format!("n=3: {}", n3.len()));

    let unclassified = n2
        .iter()
        .chain(&n3)
        .chain(&n4)
        .filter(|s| classify(s.n, s) == CaseLabel::Unclassified)
        .count();
    ok &= unclassified == 0;
    notes.push(format!("unclassified {unclassified}"));

    let mut compared = 0;
    let mut differ = 0;
    for dense in dense_vectors(4, 12) {
        let m_h = WeightFunction::from_dense(&dense).unwrap();
        for k in 1..=m_h.m() {
            compared += 1;
            if lhs_profile(&m_h, k) != lhs_profile_direct(&m_h, k) {
                differ += 1;
            }
        }
    }
    ok &= differ == 0;
    notes.push(format!("profile oracle {compared} cases, {differ} differ"));
    (ok, notes.join("; "))
}

fn criterion_7() -> (bool, String) {
    let bound = 100_000u64;
    let found = diophantine_solutions(bound);
    let limit = BigInt::from(bound);
    let expected: Vec<(BigInt, BigInt)> = (1..)
        .map(|i| (a_seq(i).unwrap(), a_seq(i + 1).unwrap()))
        .take_while(|(_, b)| *b <= limit)
        .collect();
    let chain = descent_chain(&BigInt::from(285), &BigInt::from(1065)).unwrap();
    let base = (BigInt::from(1), BigInt::from(5));
    let ok = found == expected && chain.len() == 5 && chain.last() == Some(&base);
    (
        ok,
        format!("{} solutions to 1e5, descent in {} steps", found.len(), chain.len() - 1),
    )
}

fn criterion_8() -> (bool, String) {
    let report = run_battery().unwrap();
    let unverified: Vec<&str> = report
        .certificates
        .iter()
        .filter(|c| c.status != Status::Verified || !c.covers_claim())
        .map(|c| c.name.as_str())
        .collect();
    let ex = report.get("ineq_example").unwrap();
    let ex_ok = ex.asymptotic_threshold == Some(15) && ex.finite_checked == Some((11, 14));
    let b = report.get("bound-B").unwrap();
    let b_ok = b.finite_checked == Some((5, 20)) && b.asymptotic_threshold == Some(21);
    let required = [
        "bound-A3a", "bound-A3b", "bound-A3c", "bound-A3d", "bound-A3e", "bound-A3f",
        "bound-A3g", "bound-A3h[5..10]", "bound-A3h[5..11]", "bound-A4a", "bound-A4b",
        "bound-A5a", "bound-A5b", "bound-A5c", "bound-A5d", "bound-A5e", "bound-A5f",
        "bound-B", "bound-n-squared",
    ];
    let missing: Vec<&str> = required.iter().copied().filter(|n| report.get(n).is_none()).collect();
    let ok = unverified.is_empty() && missing.is_empty() && ex_ok && b_ok;
    (
        ok,
        format!(
            "{} entries, unverified {unverified:?}, missing {missing:?}, ineq_example N0=15 on 11..14: {ex_ok}, bound-B finite 5..20: {b_ok}",
            report.certificates.len()
        ),
    )
}

#[test]
fn acceptance() {
    let mut scan_failures = Vec::new();
    let outcomes = vec![
        run(1, "Eulerian core", Some(5), criterion_1),
        run(2, "sequence values", Some(1), criterion_2),
        run(3, "Hodge identities", Some(10), criterion_3),
        run(4, "key inequality and moments", Some(60), || {
            let (ok, detail, failures) = criterion_4();
            scan_failures = failures;
            (ok, detail)
        }),
        run(5, "adjoint h0 cross-check", None, criterion_5),
        run(6, "wedge classification", Some(300), criterion_6),
        run(7, "Diophantine", Some(30), criterion_7),
        run(8, "inequality battery", Some(120), criterion_8),
    ];
    for o in &outcomes {
        println!("{}", o.line());
    }

    // Known failure: GO paired with even n = 2 gives 2 h0 = dim H + t.
    let known: ScanFailures = (1..=100).map(|d| (2, d, GroupKind::Go)).collect();
    for o in &outcomes {
        assert!(o.within_limit(), "criterion {} exceeded its time limit", o.id);
        if o.id == 4 {
            assert!(!o.passed, "criterion 4 unexpectedly passed");
            assert_eq!(scan_failures, known, "criterion 4 failure set changed");
        } else {
            assert!(o.passed, "criterion {} failed: {}", o.id, o.detail);
        }
    }
    // the failing cases are equalities, not reversals
    for (n, d, g) in &known {
        let data = adjoint_hodge(*n, *d, *g).unwrap();
        assert_eq!(data.h0() * 2u32, &data.dim_h + &data.torus_rank);
    }
}
