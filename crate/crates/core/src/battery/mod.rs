//! Named Eulerian-number inequalities with exact certificates.
//!
//! Every inequality is checked exhaustively over a finite range. When it is
//! claimed for all large `n`, the [`asymptotic`] certifier supplies a
//! threshold `N₀` past which monomial sandwich bounds settle it, and the
//! finite check covers the claimed start up to `N₀ − 1`.

pub mod asymptotic;
pub mod bound_b;
pub mod expr;
pub mod surd;

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::eulerian::{eulerian, factorial};
use crate::Result;
use asymptotic::{patch_constant, patch_valid_from, Certifier};
use expr::{a, fact, frac, holds_at, int, n, Expr, Relation};

/// Window checked when no threshold can be certified.
pub const FALLBACK_WINDOW: u64 = 60;

/// `lo..=hi`, or `n ≥ lo` when `hi` is `None`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClaimedRange {
    pub lo: u64,
    pub hi: Option<u64>,
}

impl ClaimedRange {
    pub fn between(lo: u64, hi: u64) -> Self {
        Self { lo, hi: Some(hi) }
    }

    pub fn contains(&self, n: u64) -> bool {
        n >= self.lo && self.hi.is_none_or(|hi| n <= hi)
    }
}

impl From<u64> for ClaimedRange {
    fn from(lo: u64) -> Self {
        Self { lo, hi: None }
    }
}

impl fmt::Display for ClaimedRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.hi {
            Some(hi) if hi == self.lo => write!(f, "n = {hi}"),
            Some(hi) => write!(f, "{} <= n <= {hi}", self.lo),
            None => write!(f, "n >= {}", self.lo),
        }
    }
}

#[derive(Debug, Clone)]
pub struct InequalitySpec {
    pub name: String,
    pub lhs: Expr,
    pub relation: Relation,
    pub rhs: Expr,
    pub claimed_range: ClaimedRange,
}

impl InequalitySpec {
    pub fn new(
        name: &str,
        lhs: Expr,
        relation: Relation,
        rhs: Expr,
        claimed_range: ClaimedRange,
    ) -> Self {
        Self {
            name: name.to_owned(),
            lhs,
            relation,
            rhs,
            claimed_range,
        }
    }

    pub fn statement(&self) -> String {
        format!("{} {} {}", self.lhs, self.relation, self.rhs)
    }

    pub fn holds_at(&self, n: u64) -> Result<bool> {
        holds_at(&self.lhs, self.relation, &self.rhs, n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "VERIFIED")]
    Verified,
    #[serde(rename = "FINITE_ONLY")]
    FiniteOnly,
    #[serde(rename = "FAILED")]
    Failed,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Verified => "VERIFIED",
            Status::FiniteOnly => "FINITE_ONLY",
            Status::Failed => "FAILED",
        })
    }
}

/// Parameters at which a check failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub n: u64,
    pub r: Option<u64>,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.r {
            Some(r) => write!(f, "n={}, r={r}", self.n),
            None => write!(f, "n={}", self.n),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub name: String,
    pub statement: String,
    pub claimed_range: ClaimedRange,
    /// Inclusive range checked exactly; `None` when empty.
    pub finite_checked: Option<(u64, u64)>,
    /// `N₀` such that the trace proves every `n ≥ N₀`.
    pub asymptotic_threshold: Option<u64>,
    pub status: Status,
    pub counterexample: Option<Counterexample>,
    pub trace: Vec<String>,
}

impl Certificate {
    /// Whether the checked range together with `[N₀, ∞)` contains the
    /// claimed range.
    pub fn covers_claim(&self) -> bool {
        let claim = self.claimed_range;
        let finite_reach = match self.finite_checked {
            Some((lo, hi)) if lo <= claim.lo => Some(hi),
            Some(_) => return false,
            None => None,
        };
        let Some(n0) = self.asymptotic_threshold else {
            return match (claim.hi, finite_reach) {
                (Some(hi), Some(reach)) => reach >= hi,
                _ => false,
            };
        };
        let next = finite_reach.map_or(claim.lo, |r| r + 1);
        n0 <= next.max(claim.lo)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "statement": self.statement,
            "claimed_range": {"lo": self.claimed_range.lo, "hi": self.claimed_range.hi},
            "finite_checked": self.finite_checked.map(|(lo, hi)| json!([lo, hi])),
            "asymptotic_threshold": self.asymptotic_threshold,
            "status": self.status.to_string(),
            "counterexample": self.counterexample.map(|c| json!({"n": c.n, "r": c.r})),
            "trace": self.trace,
        })
    }
}

fn blank(spec: &InequalitySpec) -> Certificate {
    Certificate {
        name: spec.name.clone(),
        statement: spec.statement(),
        claimed_range: spec.claimed_range,
        finite_checked: None,
        asymptotic_threshold: None,
        status: Status::FiniteOnly,
        counterexample: None,
        trace: Vec::new(),
    }
}

/// First `n` in `n_lo..=n_hi` where the spec fails, if any.
pub fn check_finite(spec: &InequalitySpec, n_lo: u64, n_hi: u64) -> Result<Option<u64>> {
    for n in n_lo..=n_hi {
        if !spec.holds_at(n)? {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

fn run_finite(cert: &mut Certificate, spec: &InequalitySpec, lo: u64, hi: u64) -> Result<bool> {
    if lo > hi {
        cert.trace.push(format!("no finite cases below {lo}"));
        return Ok(true);
    }
    cert.finite_checked = Some((lo, hi));
    if let Some(n) = check_finite(spec, lo, hi)? {
        cert.status = Status::Failed;
        cert.counterexample = Some(Counterexample { n, r: None });
        cert.trace.push(format!("fails at n = {n}"));
        return Ok(false);
    }
    cert.trace.push(format!("checked exactly for {lo} <= n <= {hi}"));
    Ok(true)
}

/// Threshold from the sandwich bounds plus the finite check below it.
///
/// Specs whose bounds cannot be certified get `FINITE_ONLY` after a check of
/// the first [`FALLBACK_WINDOW`] values.
pub fn asymptotic_certificate(spec: &InequalitySpec) -> Result<Certificate> {
    let mut cert = blank(spec);
    let lo = spec.claimed_range.lo;
    let mut certifier = Certifier::new();
    match certifier.certify(&spec.lhs, spec.relation, &spec.rhs, lo) {
        Ok(n0) => {
            cert.trace = certifier.trace;
            cert.asymptotic_threshold = Some(n0);
            if run_finite(&mut cert, spec, lo, n0 - 1)? {
                cert.status = Status::Verified;
            } else {
                cert.asymptotic_threshold = None;
            }
        }
        Err(reason) => {
            cert.trace = certifier.trace;
            cert.trace.push(format!("no threshold: {reason}"));
            run_finite(&mut cert, spec, lo, lo + FALLBACK_WINDOW - 1)?;
        }
    }
    Ok(cert)
}

/// Finite claimed ranges are checked in full; unbounded ones go through
/// [`asymptotic_certificate`].
pub fn certify(spec: &InequalitySpec) -> Result<Certificate> {
    match spec.claimed_range.hi {
        None => asymptotic_certificate(spec),
        Some(hi) => {
            let mut cert = blank(spec);
            if run_finite(&mut cert, spec, spec.claimed_range.lo, hi)? {
                cert.status = Status::Verified;
            }
            Ok(cert)
        }
    }
}

/// `(q+1)^n − (n+1) q^n ≤ A(n, q) ≤ (q+1)^n`, and the patched lower bound
/// where it applies, for `1 ≤ n ≤ n_max`.
pub fn sandwich_certificate(n_max: u64) -> Result<Certificate> {
    let mut cert = Certificate {
        name: "sandwich".to_owned(),
        statement: "(q+1)^n - (n+1)*q^n <= A(n,q) <= (q+1)^n, 0 <= q < n".to_owned(),
        claimed_range: ClaimedRange::between(1, n_max),
        finite_checked: Some((1, n_max)),
        asymptotic_threshold: None,
        status: Status::Verified,
        counterexample: None,
        trace: vec![format!("checked exactly for 1 <= n <= {n_max}, all q")],
    };
    let c = patch_constant();
    for nn in 1..=n_max {
        for q in 0..nn {
            let value = eulerian(nn as i64, q as i64)?;
            let hi = BigInt::from(q + 1).pow(nn as u32);
            let lo = &hi - BigInt::from(nn + 1) * BigInt::from(q).pow(nn as u32);
            let patched_ok = match patch_valid_from(q as u32) {
                Some(from) if nn >= from => {
                    num_rational::BigRational::from_integer(value.clone())
                        >= &c * num_rational::BigRational::from_integer(hi.clone())
                }
                _ => true,
            };
            if value > hi || value < lo || !patched_ok {
                cert.status = Status::Failed;
                cert.counterexample = Some(Counterexample { n: nn, r: Some(q) });
                return Ok(cert);
            }
        }
    }
    Ok(cert)
}

/// `A(n, q) ≤ n!` for `1 ≤ n ≤ n_max`.
pub fn factorial_certificate(n_max: u64) -> Result<Certificate> {
    let mut cert = Certificate {
        name: "factorial-bound".to_owned(),
        statement: "A(n,q) <= n!".to_owned(),
        claimed_range: ClaimedRange::between(1, n_max),
        finite_checked: Some((1, n_max)),
        asymptotic_threshold: None,
        status: Status::Verified,
        counterexample: None,
        trace: vec![format!("checked exactly for 1 <= n <= {n_max}, all q")],
    };
    for nn in 1..=n_max {
        let f = factorial(nn);
        for q in 0..nn {
            let v = eulerian(nn as i64, q as i64)?;
            if v.is_negative() || v > f {
                cert.status = Status::Failed;
                cert.counterexample = Some(Counterexample { n: nn, r: Some(q) });
                return Ok(cert);
            }
        }
    }
    Ok(cert)
}

#[derive(Debug, Clone)]
pub enum BatteryEntry {
    Inequality(InequalitySpec),
    BoundB,
    Sandwich { n_max: u64 },
    FactorialBound { n_max: u64 },
}

impl BatteryEntry {
    pub fn name(&self) -> String {
        match self {
            BatteryEntry::Inequality(s) => s.name.clone(),
            BatteryEntry::BoundB => bound_b::NAME.to_owned(),
            BatteryEntry::Sandwich { .. } => "sandwich".to_owned(),
            BatteryEntry::FactorialBound { .. } => "factorial-bound".to_owned(),
        }
    }

    pub fn run(&self) -> Result<Certificate> {
        match self {
            BatteryEntry::Inequality(s) => certify(s),
            BatteryEntry::BoundB => bound_b::certificate(),
            BatteryEntry::Sandwich { n_max } => sandwich_certificate(*n_max),
            BatteryEntry::FactorialBound { n_max } => factorial_certificate(*n_max),
        }
    }
}

/// `√(k/11 · A(n,3) A(n,1)) + 1`.
fn root_a3_a1(k: i64) -> Expr {
    (frac(k, 11) * a(3) * a(1)).sqrt() + 1
}

/// `√(k/11 · A(n,5) / A(n,1)) + 1`.
fn root_a5_over_a1(k: i64) -> Expr {
    (frac(k, 11) * a(5) / a(1)).sqrt() + 1
}

fn a3h(range: ClaimedRange, name: &str) -> InequalitySpec {
    InequalitySpec::new(
        name,
        root_a3_a1(48) + root_a5_over_a1(96),
        Relation::Lt,
        a(2),
        range,
    )
}

/// Every named inequality, in report order.
pub fn named_specs() -> Vec<InequalitySpec> {
    use Relation::*;
    let r = ClaimedRange::between;
    let from = ClaimedRange::from;
    let root_fact = (int(2) * fact()).sqrt() + 1;
    vec![
        InequalitySpec::new("bound-A3a", int(27) * a(2), Lt, a(1).pow(2), from(11)),
        InequalitySpec::new("ineq_example", a(2) / a(1).pow(2), Lt, frac(1, 27), from(11)),
        InequalitySpec::new(
            "bound-A3b",
            (int(2) * a(4)).sqrt() + 1,
            Le,
            frac(1, 48) * a(1).pow(2) / (n() - 1),
            r(5, 10),
        ),
        InequalitySpec::new("bound-A3c", a(7), Lt, frac(1, 140) * a(1).pow(4), from(8)),
        InequalitySpec::new(
            "bound-A3d",
            int(2) * a(1) + root_a3_a1(48) + frac(48, 11) * a(3) / a(1) + root_a5_over_a1(96),
            Lt,
            a(2),
            from(11),
        ),
        InequalitySpec::new(
            "bound-A3e",
            int(2) * a(1)
                + root_fact.clone()
                + frac(1, 2) * root_fact.pow(2) / (a(1) / 2).pow(2)
                + root_a5_over_a1(96),
            Lt,
            a(2),
            r(6, 19),
        ),
        InequalitySpec::new(
            "bound-A3f",
            int(2) * a(1) + 2 + 1 + root_a5_over_a1(96),
            Lt,
            a(2),
            r(5, 5),
        ),
        InequalitySpec::new(
            "bound-A3g",
            root_a3_a1(36) + frac(36, 11) * a(3) / a(1) + root_a5_over_a1(72),
            Lt,
            a(2),
            r(5, 10),
        ),
        a3h(r(5, 10), "bound-A3h[5..10]"),
        a3h(r(5, 11), "bound-A3h[5..11]"),
        InequalitySpec::new("bound-A4a", a(2), Lt, frac(3, 28) * (a(1) - 1).pow(2), from(5)),
        InequalitySpec::new(
            "bound-A4b",
            n() + 1 + (n() - 1) / 2 * a(1),
            Lt,
            a(2),
            from(5),
        ),
        InequalitySpec::new(
            "bound-n-squared",
            (n() - 1).pow(2) / 2,
            Lt,
            a(1) - 1,
            from(5),
        ),
        InequalitySpec::new(
            "bound-A5a",
            a(4),
            Lt,
            (a(1) - 1).pow(3) / (int(78) * n()),
            from(5),
        ),
        InequalitySpec::new("bound-A5b", a(2), Lt, frac(1, 10) * a(1).pow(2), from(5)),
        InequalitySpec::new("bound-A5c", a(1).pow(3), Gt, int(341) * a(5), from(5)),
        InequalitySpec::new(
            "bound-A5d",
            a(2),
            Gt,
            (n() - 1) * a(1) / 2 + int(4) * a(3) / a(1) + 1 + (int(2) * a(5)).sqrt() + 1,
            from(5),
        ),
        InequalitySpec::new(
            "bound-A5e",
            int(6) * n() * a(4),
            Lt,
            a(1).pow(2) * a(2),
            from(3),
        ),
        InequalitySpec::new(
            "bound-A5f",
            (a(2) - 1).pow(2),
            Gt,
            int(100) * a(6),
            from(5),
        ),
    ]
}

/// Declared battery: the named inequalities, the two-parameter bound and
/// two self-tests of the bounds the certifier relies on.
pub fn battery_entries() -> Vec<BatteryEntry> {
    let mut entries: Vec<BatteryEntry> = named_specs()
        .into_iter()
        .map(BatteryEntry::Inequality)
        .collect();
    entries.push(BatteryEntry::BoundB);
    entries.push(BatteryEntry::Sandwich { n_max: 40 });
    entries.push(BatteryEntry::FactorialBound { n_max: 40 });
    entries
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BatteryReport {
    pub certificates: Vec<Certificate>,
}

impl BatteryReport {
    pub fn all_verified(&self) -> bool {
        self.certificates
            .iter()
            .all(|c| c.status == Status::Verified && c.covers_claim())
    }

    pub fn get(&self, name: &str) -> Option<&Certificate> {
        self.certificates.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.certificates.iter().map(Certificate::to_json).collect())
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{:<18} {:<16} {:<10} {:<6} {:<12} {}\n",
            "name", "claimed", "finite", "N0", "status", "counterexample"
        );
        for c in &self.certificates {
            let finite = c
                .finite_checked
                .map_or_else(|| "-".to_owned(), |(lo, hi)| format!("{lo}..{hi}"));
            let n0 = c.asymptotic_threshold.map_or_else(|| "-".to_owned(), |v| v.to_string());
            let cx = c.counterexample.map_or_else(|| "-".to_owned(), |v| v.to_string());
            out.push_str(&format!(
                "{:<18} {:<16} {:<10} {:<6} {:<12} {}\n",
                c.name,
                c.claimed_range.to_string(),
                finite,
                n0,
                c.status.to_string(),
                cx
            ));
        }
        out
    }
}

/// Runs `entries` concurrently and reports in declaration order.
pub fn run_entries(entries: &[BatteryEntry]) -> Result<BatteryReport> {
    let certificates = entries
        .par_iter()
        .map(BatteryEntry::run)
        .collect::<Result<Vec<_>>>()?;
    Ok(BatteryReport { certificates })
}

pub fn run_battery() -> Result<BatteryReport> {
    run_entries(&battery_entries())
}
