//! Adjoint Hodge numbers of the structure group of the twisted middle
//! cohomology, the `T` function built from them, and the numerical
//! conditions that feed the non-density argument.
//!
//! The standard representation has weights `q = 0, …, n − 1` with
//! multiplicity `h^q = d A(n, q)`. The adjoint representation of the
//! structure group is graded by pairing two weights into total weight
//! `n − 1 + p`:
//!
//! * `GL`: `V ⊗ V^∨`, so `h^p_adj = Σ_q h^q h^{q−p}`;
//! * `GSp`: `Sym² V` plus the weight-0 similitude line;
//! * `GO`: `∧² V` plus the weight-0 similitude line.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::eulerian::{eulerian, eulerian_row, factorial};
use crate::hodge::{hodge_tate_multiplicities, HypersurfaceData};
use crate::{Error, ExactInt, ExactRational, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GroupKind {
    #[serde(rename = "GL")]
    Gl,
    #[serde(rename = "GSp")]
    Gsp,
    #[serde(rename = "GO")]
    Go,
}

impl GroupKind {
    pub const ALL: [GroupKind; 3] = [GroupKind::Gl, GroupKind::Gsp, GroupKind::Go];

    /// The group the geometric case carries: symplectic in even dimension,
    /// orthogonal in odd dimension.
    pub fn geometric(n: u32) -> Self {
        if n.is_multiple_of(2) {
            GroupKind::Gsp
        } else {
            GroupKind::Go
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupKind::Gl => "GL",
            GroupKind::Gsp => "GSp",
            GroupKind::Go => "GO",
        })
    }
}

impl FromStr for GroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gl" => Ok(GroupKind::Gl),
            "gsp" => Ok(GroupKind::Gsp),
            "go" => Ok(GroupKind::Go),
            other => Err(Error::invalid("group", format!("unknown group `{other}`"))),
        }
    }
}

/// Graded dimensions of the adjoint representation together with `dim H`
/// and the rank `t` of a maximal torus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjointHodgeData {
    pub group: GroupKind,
    pub hypersurface: HypersurfaceData,
    /// Dimension `N = n! d` of the standard representation.
    pub rank_n: ExactInt,
    /// `p ↦ h^p_adj` for `|p| ≤ n − 1`, zeros included.
    pub adjoint: BTreeMap<i64, ExactInt>,
    pub dim_h: ExactInt,
    pub torus_rank: ExactInt,
}

impl AdjointHodgeData {
    pub fn h(&self, p: i64) -> ExactInt {
        self.adjoint.get(&p).cloned().unwrap_or_default()
    }

    pub fn h0(&self) -> ExactInt {
        self.h(0)
    }

    pub fn total(&self) -> ExactInt {
        self.adjoint.values().sum()
    }

    /// `Σ_{p>0} h^p`.
    pub fn positive_mass(&self) -> ExactInt {
        self.adjoint.range(1..).map(|(_, v)| v).sum()
    }

    /// `Σ_{p>0} p h^p`.
    pub fn positive_moment(&self) -> ExactInt {
        self.adjoint.range(1..).map(|(p, v)| v * *p).sum()
    }

    pub fn t_function(&self) -> TFunction {
        TFunction::new(self.adjoint.iter().map(|(p, v)| (*p, v.clone())))
    }
}

pub fn adjoint_hodge(n: u32, d: u64, group: GroupKind) -> Result<AdjointHodgeData> {
    let hs = HypersurfaceData::new(n, d)?;
    let profile = hodge_tate_multiplicities(&hs);
    let h = |q: i64| profile.at(q);
    let top = n as i64 - 1;
    let rank_n = factorial(n as u64) * d;

    // conv[w] = Σ_{q1+q2=w} h^{q1} h^{q2}
    let conv = |w: i64| -> ExactInt { (0..=w).map(|q| h(q) * h(w - q)).sum() };
    let diagonal = |w: i64| -> ExactInt {
        if w % 2 == 0 {
            h(w / 2)
        } else {
            BigInt::zero()
        }
    };

    let mut adjoint = BTreeMap::new();
    for p in -top..=top {
        let value = match group {
            GroupKind::Gl => (0..=top).map(|q| h(q) * h(q - p)).sum(),
            GroupKind::Gsp | GroupKind::Go => {
                let w = top + p;
                let pairs = conv(w);
                let twice = if group == GroupKind::Gsp {
                    pairs + diagonal(w)
                } else {
                    pairs - diagonal(w)
                };
                let mut v: ExactInt = twice / 2u32;
                if p == 0 {
                    v += 1u32;
                }
                v
            }
        };
        adjoint.insert(p, value);
    }

    let (dim_h, torus_rank) = match group {
        GroupKind::Gl => (&rank_n * &rank_n, rank_n.clone()),
        GroupKind::Gsp => (
            &rank_n * (&rank_n + 1u32) / 2u32 + 1u32,
            &rank_n / 2u32 + 1u32,
        ),
        GroupKind::Go => (
            &rank_n * (&rank_n - 1u32) / 2u32 + 1u32,
            &rank_n / 2u32 + 1u32,
        ),
    };

    Ok(AdjointHodgeData {
        group,
        hypersurface: hs,
        rank_n,
        adjoint,
        dim_h,
        torus_rank,
    })
}

/// `h⁰` straight from the closed forms in terms of Eulerian numbers, with
/// `A(n, (n − 1)/2) = 0` when the index is not an integer.
pub fn displayed_h0(n: u32, d: u64, group: GroupKind) -> Result<ExactInt> {
    let row = eulerian_row(n as i64)?;
    let squares: ExactInt = row.iter().map(|a| a * a).sum::<BigInt>() * d * d;
    let middle = if n % 2 == 1 {
        eulerian(n as i64, (n as i64 - 1) / 2)? * d
    } else {
        BigInt::zero()
    };
    Ok(match group {
        GroupKind::Gl => squares,
        GroupKind::Gsp => (squares + middle) / 2u32 + 1u32,
        GroupKind::Go => (squares - middle) / 2u32 + 1u32,
    })
}

/// Continuous piecewise-linear "sum of the topmost `x` Hodge numbers".
///
/// Segments run from the highest weight down; the segment of weight `k` has
/// length `h^k` and slope `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TFunction {
    segments: Vec<(i64, ExactInt)>,
}

impl TFunction {
    pub fn new(graded: impl IntoIterator<Item = (i64, ExactInt)>) -> Self {
        let mut segments: Vec<(i64, ExactInt)> =
            graded.into_iter().filter(|(_, len)| len.is_positive()).collect();
        segments.sort_by_key(|s| std::cmp::Reverse(s.0));
        Self { segments }
    }

    pub fn domain_end(&self) -> ExactInt {
        self.segments.iter().map(|(_, len)| len).sum()
    }

    pub fn eval(&self, x: &ExactRational) -> Result<ExactRational> {
        let end = BigRational::from_integer(self.domain_end());
        if x.is_negative() || *x > end {
            return Err(Error::OutsideDomain {
                value: x.to_string(),
                upper: end.to_string(),
            });
        }
        let mut remaining = x.clone();
        let mut acc = BigRational::zero();
        for (slope, len) in &self.segments {
            if remaining.is_zero() {
                break;
            }
            let len = BigRational::from_integer(len.clone());
            let take = if remaining < len { remaining.clone() } else { len };
            acc += &take * BigInt::from(*slope);
            remaining -= take;
        }
        Ok(acc)
    }
}

pub fn t_function_eval(data: &AdjointHodgeData, x: &ExactRational) -> Result<ExactRational> {
    data.t_function().eval(x)
}

/// `2 h⁰ < dim H + t`.
pub fn key_inequality_check(n: u32, d: u64, group: GroupKind) -> Result<bool> {
    let data = adjoint_hodge(n, d, group)?;
    Ok(data.h0() * 2u32 < &data.dim_h + &data.torus_rank)
}

/// `½(h⁰ − t) < Σ_{p>0} h^p`, evaluated on the graded data.
pub fn sufficient_condition_check(n: u32, d: u64, group: GroupKind) -> Result<bool> {
    let data = adjoint_hodge(n, d, group)?;
    Ok(data.h0() - &data.torus_rank < data.positive_mass() * 2u32)
}

/// `2 Σ_p A(n, p)² ≤ (Σ_p A(n, p))²`; the degree cancels.
pub fn squared_inequality_check(n: u32) -> Result<bool> {
    check_n(n)?;
    let row = eulerian_row(n as i64)?;
    let squares: BigInt = row.iter().map(|a| a * a).sum();
    let total: BigInt = row.iter().sum();
    Ok(squares * 2u32 <= &total * &total)
}

/// `a_i = Σ_p A(n, p) A(n, p − i) / (n!)²` for `|i| ≤ n − 1`.
pub fn autocorrelation(n: u32) -> Result<BTreeMap<i64, ExactRational>> {
    check_n(n)?;
    let row = eulerian_row(n as i64)?;
    let len = row.len() as i64;
    let total: BigInt = row.iter().sum();
    let norm = &total * &total;
    let at = |p: i64| -> Option<&BigInt> { usize::try_from(p).ok().and_then(|p| row.get(p)) };
    Ok((-(len - 1)..len)
        .map(|i| {
            let num: BigInt = (0..len)
                .filter_map(|p| Some(at(p)? * at(p - i)?))
                .sum();
            (i, BigRational::new(num, norm.clone()))
        })
        .collect())
}

/// `Σ_i i² a_i = (n + 1)/6`.
pub fn second_moment_check(n: u32) -> Result<bool> {
    let a = autocorrelation(n)?;
    let moment: BigRational = a
        .iter()
        .map(|(i, v)| v * BigRational::from_integer(BigInt::from(i * i)))
        .sum();
    Ok(moment == BigRational::new(BigInt::from(n + 1), BigInt::from(6)))
}

/// `a_0 ≤ 1/2`.
pub fn a0_bound_check(n: u32) -> Result<bool> {
    let a = autocorrelation(n)?;
    Ok(a[&0] <= BigRational::new(BigInt::one(), BigInt::from(2)))
}

fn check_n(n: u32) -> Result<()> {
    if n < 2 {
        return Err(Error::invalid("n", format!("need n >= 2, got {n}")));
    }
    Ok(())
}

/// Outcome of the two numerical conditions for a given `c` and `dim X`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LvVerdict {
    pub first: bool,
    /// `None` when an argument of `T` falls outside its domain, which
    /// happens exactly when `c` is too small.
    pub second: Option<bool>,
}

impl LvVerdict {
    pub fn both(&self) -> bool {
        self.first && self.second == Some(true)
    }
}

/// `(dim X + dim H) / c`.
fn budget(data: &AdjointHodgeData, c: u64, dim_x: u64) -> Result<ExactRational> {
    if c == 0 {
        return Err(Error::invalid("c", "must be positive"));
    }
    Ok(BigRational::new(
        BigInt::from(dim_x) + &data.dim_h,
        BigInt::from(c),
    ))
}

/// `Σ_{p>0} h^p ≥ (dim X + dim H)/c`.
pub fn first_condition(data: &AdjointHodgeData, c: u64, dim_x: u64) -> Result<bool> {
    Ok(BigRational::from_integer(data.positive_mass()) >= budget(data, c, dim_x)?)
}

/// `Σ_{p>0} p h^p > T(y) + T(½(h⁰ − t) + y)` with `y = (dim X + dim H)/c`.
pub fn second_condition(data: &AdjointHodgeData, c: u64, dim_x: u64) -> Result<bool> {
    let y = budget(data, c, dim_x)?;
    let t = data.t_function();
    let half_gap = BigRational::new(data.h0() - &data.torus_rank, BigInt::from(2));
    let rhs = t.eval(&y)? + t.eval(&(half_gap + &y))?;
    Ok(BigRational::from_integer(data.positive_moment()) > rhs)
}

/// Both numerical conditions, evaluated on the simple-factor Hodge data.
pub fn lv_conditions_check(
    n: u32,
    d: u64,
    group: GroupKind,
    c: u64,
    dim_x: u64,
) -> Result<LvVerdict> {
    let data = adjoint_hodge(n, d, group)?;
    let first = first_condition(&data, c, dim_x)?;
    let second = match second_condition(&data, c, dim_x) {
        Ok(v) => Some(v),
        Err(Error::OutsideDomain { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(LvVerdict { first, second })
}

/// Smallest `c ≤ c_max` for which both conditions hold.
///
/// Both conditions are monotone in `c`, so the search is a binary search
/// after confirming `c_max` passes.
pub fn find_min_c(
    n: u32,
    d: u64,
    group: GroupKind,
    dim_x: u64,
    c_max: u64,
) -> Result<Option<u64>> {
    let data = adjoint_hodge(n, d, group)?;
    let passes = |c: u64| -> Result<bool> {
        if !first_condition(&data, c, dim_x)? {
            return Ok(false);
        }
        match second_condition(&data, c, dim_x) {
            Ok(v) => Ok(v),
            Err(Error::OutsideDomain { .. }) => Ok(false),
            Err(e) => Err(e),
        }
    };
    if c_max == 0 || !passes(c_max)? {
        return Ok(None);
    }
    let (mut lo, mut hi) = (0u64, c_max);
    // invariant: passes(hi), lo == 0 or !passes(lo)
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if passes(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(Some(hi))
}

/// Machine-readable record of one check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub params: BTreeMap<String, Value>,
    pub verdict: bool,
    pub witness: BTreeMap<String, String>,
}

impl CheckReport {
    fn new(name: &str, n: u32, d: Option<u64>, group: Option<GroupKind>) -> Self {
        let mut params = BTreeMap::new();
        params.insert("n".to_owned(), Value::from(n));
        if let Some(d) = d {
            params.insert("d".to_owned(), Value::from(d));
        }
        if let Some(g) = group {
            params.insert("group".to_owned(), Value::from(g.to_string()));
        }
        Self {
            name: name.to_owned(),
            params,
            verdict: false,
            witness: BTreeMap::new(),
        }
    }

    fn witness(mut self, key: &str, value: impl ToString) -> Self {
        self.witness.insert(key.to_owned(), value.to_string());
        self
    }
}

pub fn key_inequality_report(n: u32, d: u64, group: GroupKind) -> Result<CheckReport> {
    let data = adjoint_hodge(n, d, group)?;
    let lhs = data.h0() * 2u32;
    let rhs = &data.dim_h + &data.torus_rank;
    let mut report = CheckReport::new("key_inequality", n, Some(d), Some(group))
        .witness("h0", data.h0())
        .witness("dim_h", &data.dim_h)
        .witness("t", &data.torus_rank)
        .witness("lhs", &lhs)
        .witness("rhs", &rhs);
    report.verdict = lhs < rhs;
    Ok(report)
}

pub fn sufficient_condition_report(n: u32, d: u64, group: GroupKind) -> Result<CheckReport> {
    let data = adjoint_hodge(n, d, group)?;
    let half_gap = BigRational::new(data.h0() - &data.torus_rank, BigInt::from(2));
    let mass = data.positive_mass();
    let mut report = CheckReport::new("sufficient_condition", n, Some(d), Some(group))
        .witness("half_gap", &half_gap)
        .witness("positive_mass", &mass);
    report.verdict = half_gap < BigRational::from_integer(mass);
    Ok(report)
}

pub fn squared_inequality_report(n: u32) -> Result<CheckReport> {
    let row = eulerian_row(n.max(1) as i64)?;
    let squares: BigInt = row.iter().map(|a| a * a).sum();
    let mut report = CheckReport::new("squared_inequality", n, None, None)
        .witness("twice_sum_of_squares", squares * 2u32)
        .witness("factorial_squared", factorial(n as u64).pow(2));
    report.verdict = squared_inequality_check(n)?;
    Ok(report)
}

pub fn second_moment_report(n: u32) -> Result<CheckReport> {
    let a = autocorrelation(n)?;
    let moment: BigRational = a
        .iter()
        .map(|(i, v)| v * BigRational::from_integer(BigInt::from(i * i)))
        .sum();
    let target = BigRational::new(BigInt::from(n + 1), BigInt::from(6));
    let mut report = CheckReport::new("second_moment", n, None, None)
        .witness("moment", &moment)
        .witness("expected", &target);
    report.verdict = moment == target;
    Ok(report)
}

pub fn a0_bound_report(n: u32) -> Result<CheckReport> {
    let a = autocorrelation(n)?;
    let mut report = CheckReport::new("a0_bound", n, None, None).witness("a0", &a[&0]);
    report.verdict = a[&0] <= BigRational::new(BigInt::one(), BigInt::from(2));
    Ok(report)
}

pub fn lv_conditions_report(
    n: u32,
    d: u64,
    group: GroupKind,
    c: u64,
    dim_x: u64,
) -> Result<CheckReport> {
    let data = adjoint_hodge(n, d, group)?;
    let verdict = lv_conditions_check(n, d, group, c, dim_x)?;
    let mut report = CheckReport::new("lv_conditions", n, Some(d), Some(group))
        .witness("positive_mass", data.positive_mass())
        .witness("positive_moment", data.positive_moment())
        .witness("budget", budget(&data, c, dim_x)?)
        .witness("first", verdict.first)
        .witness(
            "second",
            verdict
                .second
                .map_or_else(|| "outside T domain".to_owned(), |v| v.to_string()),
        );
    report.params.insert("c".to_owned(), Value::from(c));
    report.params.insert("dim_x".to_owned(), Value::from(dim_x));
    report.verdict = verdict.both();
    Ok(report)
}

/// Result of checking the key inequality over a rectangle of `(n, d)` and
/// all three groups.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub n_range: (u32, u32),
    pub d_range: (u64, u64),
    pub checked: usize,
    pub failures: Vec<(u32, u64, GroupKind)>,
}

pub fn scan_key_inequality(n_lo: u32, n_hi: u32, d_lo: u64, d_hi: u64) -> Result<ScanSummary> {
    if n_lo < 2 || n_lo > n_hi {
        return Err(Error::invalid("n", format!("need 2 <= n_lo <= n_hi, got {n_lo}..{n_hi}")));
    }
    if d_lo < 1 || d_lo > d_hi {
        return Err(Error::invalid("d", format!("need 1 <= d_lo <= d_hi, got {d_lo}..{d_hi}")));
    }
    let cases: Vec<(u32, u64, GroupKind)> = (n_lo..=n_hi)
        .flat_map(|n| (d_lo..=d_hi).flat_map(move |d| GroupKind::ALL.map(|g| (n, d, g))))
        .collect();
    let verdicts: Vec<Result<bool>> = cases
        .par_iter()
        .map(|&(n, d, g)| key_inequality_check(n, d, g))
        .collect();
    let mut failures = Vec::new();
    for (case, verdict) in cases.iter().zip(verdicts) {
        if !verdict? {
            failures.push(*case);
        }
    }
    Ok(ScanSummary {
        n_range: (n_lo, n_hi),
        d_range: (d_lo, d_hi),
        checked: cases.len(),
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(big(n), big(d))
    }

    #[test]
    fn adjoint_examples() {
        let gl = adjoint_hodge(3, 1, GroupKind::Gl).unwrap();
        assert_eq!((gl.h0(), gl.dim_h.clone(), gl.torus_rank.clone()), (big(18), big(36), big(6)));

        let go = adjoint_hodge(3, 1, GroupKind::Go).unwrap();
        assert_eq!((go.h0(), go.dim_h.clone(), go.torus_rank.clone()), (big(8), big(16), big(4)));
        assert_eq!(go.h(1), big(4));
        assert_eq!(go.h(2), big(0));

        let gsp = adjoint_hodge(2, 1, GroupKind::Gsp).unwrap();
        assert_eq!((gsp.h0(), gsp.dim_h.clone(), gsp.torus_rank.clone()), (big(2), big(4), big(2)));
    }

    #[test]
    fn graded_sums_and_symmetry() {
        for n in 2..=7 {
            for d in 1..=4 {
                for g in GroupKind::ALL {
                    let data = adjoint_hodge(n, d, g).unwrap();
                    assert_eq!(data.total(), data.dim_h, "{n} {d} {g}");
                    for p in 1..n as i64 {
                        assert_eq!(data.h(p), data.h(-p));
                    }
                    assert_eq!(data.h0(), displayed_h0(n, d, g).unwrap());
                }
            }
        }
    }

    #[test]
    fn rejects_small_n() {
        assert!(adjoint_hodge(1, 1, GroupKind::Gl).is_err());
        assert!(autocorrelation(1).is_err());
        assert!(squared_inequality_check(1).is_err());
    }

    #[test]
    fn group_parsing() {
        assert_eq!("gsp".parse::<GroupKind>().unwrap(), GroupKind::Gsp);
        assert_eq!("GO".parse::<GroupKind>().unwrap(), GroupKind::Go);
        assert!("so".parse::<GroupKind>().is_err());
        assert_eq!(GroupKind::geometric(4), GroupKind::Gsp);
        assert_eq!(GroupKind::geometric(3), GroupKind::Go);
    }

    #[test]
    fn t_function_shape() {
        let data = adjoint_hodge(3, 1, GroupKind::Go).unwrap();
        let t = data.t_function();
        assert_eq!(t.eval(&rat(0, 1)).unwrap(), rat(0, 1));
        let mass = BigRational::from_integer(data.positive_mass());
        assert_eq!(t.eval(&mass).unwrap(), BigRational::from_integer(data.positive_moment()));
        // topmost segment is weight 1 of length 4
        assert_eq!(t.eval(&rat(2, 1)).unwrap(), rat(2, 1));
        assert_eq!(t.eval(&rat(16, 1)).unwrap(), rat(0, 1));
        assert!(t.eval(&rat(-1, 2)).is_err());
        assert!(t.eval(&rat(33, 2)).is_err());
    }

    #[test]
    fn key_and_sufficient_examples() {
        assert!(key_inequality_check(3, 1, GroupKind::Go).unwrap());
        assert!(key_inequality_check(2, 1, GroupKind::Gl).unwrap());
        assert!(key_inequality_check(5, 1, GroupKind::Gsp).unwrap());
        assert!(sufficient_condition_check(3, 1, GroupKind::Gl).unwrap());
        assert!(sufficient_condition_check(4, 2, GroupKind::Gsp).unwrap());
        // even n with GO: both sides are 0
        assert!(!sufficient_condition_check(2, 1, GroupKind::Go).unwrap());
        assert!(!key_inequality_check(2, 1, GroupKind::Go).unwrap());
    }

    #[test]
    fn squared_inequality_examples() {
        assert!(squared_inequality_check(2).unwrap());
        assert!(squared_inequality_check(3).unwrap());
        assert!(squared_inequality_check(5).unwrap());
    }

    #[test]
    fn autocorrelation_examples() {
        let a2 = autocorrelation(2).unwrap();
        assert_eq!(a2[&0], rat(1, 2));
        assert_eq!(a2[&1], rat(1, 4));
        assert_eq!(a2[&-1], rat(1, 4));
        assert_eq!(autocorrelation(3).unwrap()[&0], rat(1, 2));
        for n in [2, 5, 9] {
            let total: BigRational = autocorrelation(n).unwrap().values().sum();
            assert_eq!(total, rat(1, 1));
        }
    }

    #[test]
    fn moment_and_a0_examples() {
        for n in [2, 3, 11] {
            assert!(second_moment_check(n).unwrap());
        }
        for n in [2, 7, 50] {
            assert!(a0_bound_check(n).unwrap());
        }
    }

    #[test]
    fn lv_examples() {
        let v = lv_conditions_check(3, 1, GroupKind::Go, 1_000_000, 5).unwrap();
        assert_eq!(v, LvVerdict { first: true, second: Some(true) });

        let v = lv_conditions_check(2, 1, GroupKind::Gl, 1, 1_000_000_000).unwrap();
        assert!(!v.first);
        assert_eq!(v.second, None);

        let data = adjoint_hodge(2, 1, GroupKind::Gl).unwrap();
        assert!(matches!(
            second_condition(&data, 1, 1_000_000_000),
            Err(Error::OutsideDomain { .. })
        ));
        assert!(lv_conditions_check(3, 1, GroupKind::Go, 0, 5).is_err());
    }

    #[test]
    fn min_c_for_threefold() {
        // first condition needs c ≥ 21/4, second needs 4 > 2 + 42/c
        assert_eq!(find_min_c(3, 1, GroupKind::Go, 5, 1_000_000).unwrap(), Some(22));
        assert_eq!(find_min_c(3, 1, GroupKind::Go, 5, 21).unwrap(), None);
    }

    #[test]
    fn reports_serialize_with_sorted_keys() {
        let report = key_inequality_report(3, 1, GroupKind::Go).unwrap();
        assert!(report.verdict);
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.starts_with("{\"name\":\"key_inequality\",\"params\":{\"d\":1,\"group\":\"GO\",\"n\":3}"));
        assert!(json.contains("\"h0\":\"8\""));
    }

    #[test]
    fn small_scan() {
        let summary = scan_key_inequality(2, 6, 1, 5).unwrap();
        assert_eq!(summary.checked, 5 * 5 * 3);
        let expected: Vec<_> = (1..=5).map(|d| (2, d, GroupKind::Go)).collect();
        assert_eq!(summary.failures, expected);
        assert!(scan_key_inequality(1, 3, 1, 1).is_err());
    }
}
