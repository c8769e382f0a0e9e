use num_bigint::BigInt;
use serde_json::{json, Value};

use eulerian_cert::battery::{self, BatteryEntry, Certificate};
use eulerian_cert::conditions::{self, CheckReport, GroupKind};
use eulerian_cert::hodge::{self, HypersurfaceData};
use eulerian_cert::sequences;
use eulerian_cert::wedge::{self, CaseLabel, SearchBounds};
use eulerian_cert::{Error, Result};

use crate::render::{int_json, Rendered, Table};
use crate::{BatteryArgs, ClassifyArgs, ConditionsArgs, HodgeArgs, SequencesArgs};

fn parse_big(name: &'static str, raw: &str) -> Result<BigInt> {
    raw.parse().map_err(|_| Error::InvalidArgument {
        name,
        reason: format!("not an integer: {raw:?}"),
    })
}

pub fn hodge(args: &HodgeArgs) -> Result<Rendered> {
    let h = HypersurfaceData::new(args.n, args.d)?;
    let profile = hodge::hodge_tate_multiplicities(&h);
    let chi: Vec<BigInt> = (0..args.n as i64)
        .map(|i| hodge::chi_omega(&h, i))
        .collect::<Result<_>>()?;
    let arith = hodge::arithmetic_euler_char(&h);
    let topo = hodge::topological_euler_char(&h);
    let dim = hodge::tannakian_dimension(&h);

    let mut table = Table::new(&["n", "d", "q", "multiplicity"]);
    for (n, d, q, m) in profile.rows() {
        table.push(vec![n.to_string(), d.to_string(), q.to_string(), m.to_string()]);
    }
    let json = json!({
        "n": args.n,
        "d": args.d,
        "arithmetic_euler_char": int_json(&arith),
        "topological_euler_char": int_json(&topo),
        "chi_omega": chi.iter().map(int_json).collect::<Vec<_>>(),
        "hodge_tate_multiplicities": profile.weights.iter().map(int_json).collect::<Vec<_>>(),
        "tannakian_dimension": int_json(&dim),
    });
    let chi_text: Vec<String> = chi.iter().map(ToString::to_string).collect();
    Ok(Rendered {
        json,
        table,
        summary: vec![
            format!("n = {}, d = {}", args.n, args.d),
            format!("arithmetic Euler characteristic: {arith}"),
            format!("topological Euler characteristic: {topo}"),
            format!("chi(Omega^i), i = 0..{}: {}", args.n - 1, chi_text.join(", ")),
            format!("tannakian dimension: {dim}"),
        ],
        passed: true,
    })
}

fn report_table(reports: &[CheckReport]) -> Table {
    let mut table = Table::new(&["check", "params", "verdict", "witness"]);
    for r in reports {
        let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={}", plain(v))).collect();
        let witness: Vec<String> = r.witness.iter().map(|(k, v)| format!("{k}={v}")).collect();
        table.push(vec![
            r.name.clone(),
            params.join(" "),
            if r.verdict { "pass" } else { "FAIL" }.to_owned(),
            witness.join(" "),
        ]);
    }
    table
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn reports_rendered(reports: Vec<CheckReport>, extra: Vec<String>) -> Rendered {
    let passed = reports.iter().all(|r| r.verdict);
    Rendered {
        json: serde_json::to_value(&reports).expect("serializable"),
        table: report_table(&reports),
        summary: extra,
        passed,
    }
}

pub fn conditions(args: &ConditionsArgs) -> Result<Rendered> {
    if args.scan {
        return conditions_scan(args);
    }
    let n = args.n.expect("clap enforces --n without --scan");
    let groups: Vec<GroupKind> = match args.group {
        Some(g) => vec![g],
        None => GroupKind::ALL.to_vec(),
    };

    if args.find_min_c {
        let dim_x = args.dim_x.expect("clap enforces --dim-x");
        let mut table = Table::new(&["n", "d", "group", "dim_x", "min_c"]);
        let mut rows = Vec::new();
        let mut passed = true;
        for g in groups {
            let c = conditions::find_min_c(n, args.d, g, dim_x, args.c_max)?;
            passed &= c.is_some();
            let shown = c.map_or_else(|| format!("none <= {}", args.c_max), |c| c.to_string());
            table.push(vec![n.to_string(), args.d.to_string(), g.to_string(), dim_x.to_string(), shown]);
            rows.push(json!({"n": n, "d": args.d, "group": g, "dim_x": dim_x, "c_max": args.c_max, "min_c": c}));
        }
        return Ok(Rendered { json: Value::Array(rows), table, summary: Vec::new(), passed });
    }

    let mut reports = Vec::new();
    let moments = args.second_moment || args.a0_bound || args.squared;
    if args.second_moment {
        reports.push(conditions::second_moment_report(n)?);
    }
    if args.a0_bound {
        reports.push(conditions::a0_bound_report(n)?);
    }
    if args.squared {
        reports.push(conditions::squared_inequality_report(n)?);
    }
    if !moments || args.c.is_some() {
        for g in groups {
            match (args.c, args.dim_x) {
                (Some(c), Some(dim_x)) => {
                    reports.push(conditions::lv_conditions_report(n, args.d, g, c, dim_x)?)
                }
                _ => {
                    reports.push(conditions::key_inequality_report(n, args.d, g)?);
                    reports.push(conditions::sufficient_condition_report(n, args.d, g)?);
                }
            }
        }
    }
    Ok(reports_rendered(reports, Vec::new()))
}

fn conditions_scan(args: &ConditionsArgs) -> Result<Rendered> {
    let summary = conditions::scan_key_inequality(args.n_lo, args.n_hi, args.d_lo, args.d_hi)?;
    let mut table = Table::new(&["n", "group", "checked", "failed"]);
    for n in args.n_lo..=args.n_hi {
        for g in GroupKind::ALL {
            let failed = summary
                .failures
                .iter()
                .filter(|(fn_, _, fg)| *fn_ == n && *fg == g)
                .count();
            let checked = args.d_hi - args.d_lo + 1;
            table.push(vec![n.to_string(), g.to_string(), checked.to_string(), failed.to_string()]);
        }
    }
    let failures: Vec<Value> = summary
        .failures
        .iter()
        .map(|(n, d, g)| json!({"n": n, "d": d, "group": g}))
        .collect();
    let json = json!({
        "check": "key_inequality",
        "n_range": [summary.n_range.0, summary.n_range.1],
        "d_range": [summary.d_range.0, summary.d_range.1],
        "checked": summary.checked,
        "failures": failures,
    });
    let mut lines = vec![format!(
        "2 h0 < dim H + t: {} cases, {} failures",
        summary.checked,
        summary.failures.len()
    )];
    for (n, d, g) in summary.failures.iter().take(20) {
        lines.push(format!("  fails at n={n} d={d} group={g}"));
    }
    if summary.failures.len() > 20 {
        lines.push(format!("  ... {} more", summary.failures.len() - 20));
    }
    Ok(Rendered { json, table, summary: lines, passed: summary.failures.is_empty() })
}

pub fn classify(args: &ClassifyArgs) -> Result<Rendered> {
    let mut bounds = SearchBounds::new(args.m_max);
    if let Some(s) = args.span_max {
        bounds = bounds.with_span(s);
    }
    if let Some(d) = args.d_max {
        bounds = bounds.with_d_max(d);
    }
    let solutions = wedge::enumerate_solutions(args.n, bounds)?;
    let mut table = Table::new(&["n", "m", "k", "d", "s", "m_H", "case"]);
    let mut unclassified = 0;
    for sol in &solutions {
        let case = wedge::classify(args.n, sol);
        if case == CaseLabel::Unclassified {
            unclassified += 1;
        }
        table.push(vec![
            sol.n.to_string(),
            sol.m().to_string(),
            sol.k.to_string(),
            sol.d.to_string(),
            sol.s.to_string(),
            sol.m_h.to_string(),
            case.to_string(),
        ]);
    }
    let json = json!({
        "n": args.n,
        "m_max": args.m_max,
        "span_max": args.span_max,
        "d_max": args.d_max,
        "count": solutions.len(),
        "solutions": solutions.iter().map(|s| s.to_json()).collect::<Vec<_>>(),
    });
    let mut summary = vec![format!(
        "{} solution{}",
        solutions.len(),
        if solutions.len() == 1 { "" } else { "s" }
    )];
    if unclassified > 0 {
        summary.push(format!("{unclassified} UNCLASSIFIED"));
    }
    Ok(Rendered { json, table, summary, passed: unclassified == 0 })
}

pub fn sequences(args: &SequencesArgs) -> Result<Rendered> {
    if let Some(i_max) = args.i_max {
        let rows = sequences::sequence_table(i_max)?;
        let mut table = Table::new(&["i", "a", "d"]);
        let mut json_rows = Vec::new();
        for r in &rows {
            table.push(vec![r.i.to_string(), r.a.to_string(), r.d.to_string()]);
            json_rows.push(json!({"i": r.i, "a": r.a.to_string(), "d": r.d.to_string()}));
        }
        return Ok(Rendered { json: Value::Array(json_rows), table, summary: Vec::new(), passed: true });
    }
    if let Some(raw) = &args.admissible {
        let value = parse_big("admissible", raw)?;
        let verdict = sequences::admissible_intersection(&value)?;
        let mut table = Table::new(&["value", "admissible", "witness"]);
        let witness = verdict.witness.map_or_else(|| "-".to_owned(), |i| i.to_string());
        table.push(vec![value.to_string(), verdict.admissible.to_string(), witness]);
        let line = match verdict.witness {
            Some(i) => format!("{value}: inadmissible, divisible by d({i})"),
            None => format!("{value}: admissible"),
        };
        let json = json!({
            "value": value.to_string(),
            "admissible": verdict.admissible,
            "witness": verdict.witness,
        });
        return Ok(Rendered { json, table, summary: vec![line], passed: true });
    }
    if let Some(pair) = &args.descend {
        let a = parse_big("descend", &pair[0])?;
        let b = parse_big("descend", &pair[1])?;
        let chain = sequences::descent_chain(&a, &b)?;
        let mut table = Table::new(&["step", "a", "b"]);
        for (step, (x, y)) in chain.iter().enumerate() {
            table.push(vec![step.to_string(), x.to_string(), y.to_string()]);
        }
        let steps = chain.len() - 1;
        let json = json!({
            "start": [a.to_string(), b.to_string()],
            "steps": steps,
            "chain": chain.iter().map(|(x, y)| json!([x.to_string(), y.to_string()])).collect::<Vec<_>>(),
        });
        let line = format!("({a}, {b}) reaches (1, 5) in {steps} step{}", if steps == 1 { "" } else { "s" });
        return Ok(Rendered { json, table, summary: vec![line], passed: true });
    }
    let bound = args.diophantine.expect("clap requires one mode");
    let found = sequences::diophantine_solutions(bound);
    let mut table = Table::new(&["a", "b"]);
    for (a, b) in &found {
        table.push(vec![a.to_string(), b.to_string()]);
    }
    let json = json!({
        "bound": bound,
        "solutions": found.iter().map(|(a, b)| json!([a.to_string(), b.to_string()])).collect::<Vec<_>>(),
    });
    let line = format!("{} solutions with a <= b <= {bound}", found.len());
    Ok(Rendered { json, table, summary: vec![line], passed: true })
}

fn certificate_row(c: &Certificate) -> Vec<String> {
    let dash = || "-".to_owned();
    vec![
        c.name.clone(),
        c.claimed_range.to_string(),
        c.finite_checked.map_or_else(dash, |(lo, _)| lo.to_string()),
        c.finite_checked.map_or_else(dash, |(_, hi)| hi.to_string()),
        c.asymptotic_threshold.map_or_else(dash, |n| n.to_string()),
        c.status.to_string(),
        c.counterexample.map_or_else(dash, |x| x.to_string()),
    ]
}

pub fn battery(args: &BatteryArgs) -> Result<Rendered> {
    let all = battery::battery_entries();
    if args.list {
        let mut table = Table::new(&["name"]);
        for e in &all {
            table.push(vec![e.name()]);
        }
        let json = Value::Array(all.iter().map(|e| Value::from(e.name())).collect());
        return Ok(Rendered { json, table, summary: Vec::new(), passed: true });
    }
    let entries: Vec<BatteryEntry> = if args.only.is_empty() {
        all
    } else {
        for name in &args.only {
            if !all.iter().any(|e| &e.name() == name) {
                return Err(Error::InvalidArgument {
                    name: "only",
                    reason: format!("no battery entry named {name:?}"),
                });
            }
        }
        all.into_iter().filter(|e| args.only.contains(&e.name())).collect()
    };
    let report = battery::run_entries(&entries)?;
    let mut table = Table::new(&[
        "name",
        "claimed",
        "finite_lo",
        "finite_hi",
        "n0",
        "status",
        "counterexample",
    ]);
    for c in &report.certificates {
        table.push(certificate_row(c));
    }
    let verified = report
        .certificates
        .iter()
        .filter(|c| c.status == battery::Status::Verified && c.covers_claim())
        .count();
    Ok(Rendered {
        json: report.to_json(),
        table,
        summary: vec![format!("{verified}/{} verified", report.certificates.len())],
        passed: report.all_verified(),
    })
}
