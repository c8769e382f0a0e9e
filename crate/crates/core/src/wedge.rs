//! Solver for the wedge-power equation
//!
//! ```text
//! d A(n, q) = Σ_{m_S} Π_i C(m_H(i), m_S(i))      for every q ∈ Z,
//! ```
//!
//! the sum running over `0 ≤ m_S ≤ m_H` with `Σ m_S(i) = k` and
//! `Σ i m_S(i) = q + s`. The right-hand side, as a function of the total
//! weight, is the `x^k` coefficient of `Π_i (1 + x y^i)^{m_H(i)}`.
//!
//! Solutions are reported up to translation of the support (minimum index
//! 0) and up to the reflection `i ↦ −i`, with `k ≤ m/2`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::eulerian::{binomial, eulerian_row, factorial};
use crate::sequences::ASequence;
use crate::{Error, ExactInt, Result};

/// Finitely supported `m_H: Z → N`, positive on its support.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightFunction {
    support: BTreeMap<i64, u64>,
}

impl WeightFunction {
    pub fn new(pairs: impl IntoIterator<Item = (i64, u64)>) -> Result<Self> {
        let mut support = BTreeMap::new();
        for (i, c) in pairs {
            if c == 0 {
                return Err(Error::invalid("m_H", format!("zero multiplicity at {i}")));
            }
            if support.insert(i, c).is_some() {
                return Err(Error::invalid("m_H", format!("index {i} given twice")));
            }
        }
        let wf = Self { support };
        if wf.m() < 2 {
            return Err(Error::invalid("m_H", "total multiplicity must be >= 2"));
        }
        Ok(wf)
    }

    /// Dense values `[m_H(0), …, m_H(len − 1)]`; zeros are dropped.
    pub fn from_dense(values: &[u64]) -> Result<Self> {
        Self::new(
            values
                .iter()
                .enumerate()
                .filter(|(_, c)| **c > 0)
                .map(|(i, c)| (i as i64, *c)),
        )
    }

    pub fn get(&self, i: i64) -> u64 {
        self.support.get(&i).copied().unwrap_or(0)
    }

    pub fn m(&self) -> u64 {
        self.support.values().sum()
    }

    pub fn min_index(&self) -> i64 {
        *self.support.keys().next().expect("nonempty support")
    }

    pub fn max_index(&self) -> i64 {
        *self.support.keys().next_back().expect("nonempty support")
    }

    pub fn span(&self) -> i64 {
        self.max_index() - self.min_index()
    }

    /// `Σ_i i m_H(i)`.
    pub fn first_moment(&self) -> i64 {
        self.support.iter().map(|(i, c)| i * *c as i64).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.support.iter().map(|(i, c)| (*i, *c))
    }

    pub fn translated(&self, by: i64) -> Self {
        Self {
            support: self.iter().map(|(i, c)| (i + by, c)).collect(),
        }
    }

    /// `i ↦ −i`.
    pub fn reflected(&self) -> Self {
        Self {
            support: self.iter().map(|(i, c)| (-i, c)).collect(),
        }
    }

    fn dense_from_min(&self) -> Vec<u64> {
        let lo = self.min_index();
        (lo..=self.max_index()).map(|i| self.get(i)).collect()
    }
}

impl fmt::Display for WeightFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (pos, (i, c)) in self.iter().enumerate() {
            if pos > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{i}:{c}")?;
        }
        f.write_str("}")
    }
}

/// `t ↦ Σ_{m_S} Π_i C(m_H(i), m_S(i))` over `Σ m_S = k`, `Σ i m_S(i) = t`,
/// by expanding `Π_i (1 + x y^i)^{m_H(i)}` truncated at `x^k`.
///
/// Only nonzero coefficients are stored.
pub fn lhs_profile(m_h: &WeightFunction, k: u64) -> BTreeMap<i64, ExactInt> {
    let k = k as usize;
    let lo = m_h.min_index();
    let width = m_h.span() as usize * k + 1;
    // poly[j][t] = coefficient of x^j y^{t + j·lo}
    let mut poly = vec![vec![BigInt::zero(); width]; k + 1];
    poly[0][0] = BigInt::from(1u32);
    for (i, c) in m_h.iter() {
        let shift = (i - lo) as usize;
        let factor: Vec<BigInt> = (0..=k.min(c as usize))
            .map(|a| binomial(c as i64, a as i64))
            .collect();
        let mut next = vec![vec![BigInt::zero(); width]; k + 1];
        for (j, row) in poly.iter().enumerate() {
            for (t, coeff) in row.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                for (a, f) in factor.iter().enumerate() {
                    if j + a > k {
                        break;
                    }
                    next[j + a][t + a * shift] += coeff * f;
                }
            }
        }
        poly = next;
    }
    let base = k as i64 * lo;
    std::mem::take(&mut poly[k])
        .into_iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(t, v)| (t as i64 + base, v))
        .collect()
}

/// The same profile by listing every admissible `m_S` explicitly.
pub fn lhs_profile_direct(m_h: &WeightFunction, k: u64) -> BTreeMap<i64, ExactInt> {
    fn walk(
        entries: &[(i64, u64)],
        left: u64,
        weight: i64,
        prod: BigInt,
        out: &mut BTreeMap<i64, ExactInt>,
    ) {
        let Some(((i, c), rest)) = entries.split_first() else {
            if left == 0 {
                *out.entry(weight).or_default() += prod;
            }
            return;
        };
        for take in 0..=left.min(*c) {
            walk(
                rest,
                left - take,
                weight + i * take as i64,
                &prod * binomial(*c as i64, take as i64),
                out,
            );
        }
    }
    let entries: Vec<(i64, u64)> = m_h.iter().collect();
    let mut out = BTreeMap::new();
    walk(&entries, k, 0, BigInt::from(1u32), &mut out);
    out.retain(|_, v| !v.is_zero());
    out
}

/// Whether `lhs_profile(m_H, k)(q + s) = d A(n, q)` for all `q`.
pub fn is_solution(n: u32, d: &BigInt, k: u64, m_h: &WeightFunction, s: i64) -> bool {
    let Ok(row) = eulerian_row(n as i64) else {
        return false;
    };
    let target: BTreeMap<i64, ExactInt> = row
        .into_iter()
        .enumerate()
        .map(|(q, a)| (q as i64 + s, a * d))
        .filter(|(_, v)| !v.is_zero())
        .collect();
    lhs_profile(m_h, k) == target
}

/// Extremal choices `m_min`, `m_max` and the pivots `w`, `w'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralData {
    pub w: i64,
    pub w_prime: i64,
    pub m_min: BTreeMap<i64, u64>,
    pub m_max: BTreeMap<i64, u64>,
    /// `Σ_{i<w} (w − i) m_H(i) + Σ_{i>w'} (i − w') m_H(i) + k (w' − w)`,
    /// equal to `n − 1` on every solution.
    pub small_n_sum: i64,
}

impl StructuralData {
    /// `Σ i m_min(i)`, the lowest weight reached by the profile.
    pub fn min_weight(&self) -> i64 {
        self.m_min.iter().map(|(i, c)| i * *c as i64).sum()
    }
}

fn greedy_fill<'a>(entries: impl Iterator<Item = (i64, u64)> + 'a, k: u64) -> BTreeMap<i64, u64> {
    let mut left = k;
    let mut out = BTreeMap::new();
    for (i, c) in entries {
        if left == 0 {
            break;
        }
        let take = c.min(left);
        out.insert(i, take);
        left -= take;
    }
    out
}

pub fn structural_data(m_h: &WeightFunction, k: u64) -> Result<StructuralData> {
    if k > m_h.m() {
        return Err(Error::invalid("k", format!("k = {k} exceeds m = {}", m_h.m())));
    }
    if k == 0 {
        return Err(Error::invalid("k", "k must be positive"));
    }
    let m_min = greedy_fill(m_h.iter(), k);
    let m_max = greedy_fill(m_h.iter().collect::<Vec<_>>().into_iter().rev(), k);
    let w = *m_min.keys().next_back().expect("k > 0");
    let w_prime = *m_max.keys().next().expect("k > 0");
    let below: i64 = m_h
        .iter()
        .filter(|(i, _)| *i < w)
        .map(|(i, c)| (w - i) * c as i64)
        .sum();
    let above: i64 = m_h
        .iter()
        .filter(|(i, _)| *i > w_prime)
        .map(|(i, c)| (i - w_prime) * c as i64)
        .sum();
    Ok(StructuralData {
        w,
        w_prime,
        m_min,
        m_max,
        small_n_sum: below + above + k as i64 * (w_prime - w),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CaseLabel {
    #[serde(rename = "CASE_M4K2")]
    M4K2,
    #[serde(rename = "CASE_N2_FAMILY")]
    N2Family,
    #[serde(rename = "CASE_N3_FAMILY")]
    N3Family,
    #[serde(rename = "UNCLASSIFIED")]
    Unclassified,
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseLabel::M4K2 => "CASE_M4K2",
            CaseLabel::N2Family => "CASE_N2_FAMILY",
            CaseLabel::N3Family => "CASE_N3_FAMILY",
            CaseLabel::Unclassified => "UNCLASSIFIED",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgeSolution {
    pub n: u32,
    pub d: ExactInt,
    pub k: u64,
    pub m_h: WeightFunction,
    pub s: i64,
}

impl WedgeSolution {
    pub fn m(&self) -> u64 {
        self.m_h.m()
    }

    /// Same solution written with `m_H(−i)`, valid because Eulerian rows
    /// are palindromic.
    pub fn reflected(&self) -> Self {
        Self {
            n: self.n,
            d: self.d.clone(),
            k: self.k,
            m_h: self.m_h.reflected(),
            s: -self.s - (self.n as i64 - 1),
        }
    }

    /// `(m_H, m − k)`: complement of every chosen `m_S`.
    pub fn complemented(&self) -> Self {
        Self {
            n: self.n,
            d: self.d.clone(),
            k: self.m() - self.k,
            m_h: self.m_h.clone(),
            s: self.m_h.first_moment() - self.s - (self.n as i64 - 1),
        }
    }

    pub fn to_json(&self) -> Value {
        let pairs: Vec<Value> = self.m_h.iter().map(|(i, c)| json!([i, c])).collect();
        json!({
            "n": self.n,
            "d": self.d.to_string(),
            "k": self.k,
            "m_H": pairs,
            "s": self.s,
            "case": classify(self.n, self).to_string(),
        })
    }
}

impl PartialOrd for WedgeSolution {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WedgeSolution {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.m(), self.k, &self.m_h, self.s, &self.d).cmp(&(
            other.n,
            other.m(),
            other.k,
            &other.m_h,
            other.s,
            &other.d,
        ))
    }
}

/// Case of the classification a solution falls into.
///
/// `m = 4, k = 2` is tested first, so `n = 2, k = 2` is labelled `M4K2`.
pub fn classify(n: u32, sol: &WedgeSolution) -> CaseLabel {
    let k = sol.k.min(sol.m().saturating_sub(sol.k));
    if sol.m() == 4 && k == 2 {
        return CaseLabel::M4K2;
    }
    if n == 2 && k > 2 && sol.d == binomial(2 * k as i64 - 1, k as i64) {
        return CaseLabel::N2Family;
    }
    if n == 3 {
        let six = BigInt::from(6u32);
        let terms = ASequence::default();
        for (a, b) in terms.clone().zip(terms.skip(1)).skip(1) {
            let (Some(top), Some(low)) = ((&a + &b).to_i64(), a.to_i64()) else {
                break;
            };
            let di = binomial(top, low);
            if di > &sol.d * &six {
                break;
            }
            if di == &sol.d * &six {
                return CaseLabel::N3Family;
            }
        }
    }
    CaseLabel::Unclassified
}

/// Search limits. `span_max` defaults to `n − 1`, which every solution
/// satisfies anyway; larger values are clamped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBounds {
    pub m_max: u64,
    pub span_max: Option<u64>,
    pub d_max: Option<u64>,
}

impl SearchBounds {
    pub fn new(m_max: u64) -> Self {
        Self {
            m_max,
            span_max: None,
            d_max: None,
        }
    }

    pub fn with_span(mut self, span_max: u64) -> Self {
        self.span_max = Some(span_max);
        self
    }

    pub fn with_d_max(mut self, d_max: u64) -> Self {
        self.d_max = Some(d_max);
        self
    }
}

/// All normalized solutions within `bounds`, sorted.
pub fn enumerate_solutions(n: u32, bounds: SearchBounds) -> Result<Vec<WedgeSolution>> {
    if n < 2 {
        return Err(Error::invalid("n", format!("need n >= 2, got {n}")));
    }
    let span_cap = (n as u64 - 1).min(bounds.span_max.unwrap_or(u64::MAX));
    let n_fact = factorial(n as u64);
    let row = eulerian_row(n as i64)?;

    // Shards: one per (span, m_H(0)).
    let shards: Vec<(u64, u64)> = (1..=span_cap)
        .flat_map(|span| (1..=bounds.m_max).map(move |first| (span, first)))
        .collect();

    let mut found: Vec<WedgeSolution> = shards
        .par_iter()
        .flat_map_iter(|&(span, first)| {
            let mut local = Vec::new();
            let mut dense = vec![0u64; span as usize + 1];
            dense[0] = first;
            fill_interior(&mut dense, 1, first, bounds.m_max, &mut |v| {
                test_candidate(n, v, &bounds, &n_fact, &row, &mut local);
            });
            local
        })
        .collect();
    found.sort();
    Ok(found)
}

// Enumerates dense[pos..] with a positive last entry and total ≤ m_max.
fn fill_interior(dense: &mut [u64], pos: usize, used: u64, m_max: u64, visit: &mut impl FnMut(&[u64])) {
    let last = dense.len() - 1;
    if pos == last {
        for c in 1..=m_max.saturating_sub(used) {
            dense[last] = c;
            visit(dense);
        }
        dense[last] = 0;
        return;
    }
    for c in 0..=m_max.saturating_sub(used + 1) {
        dense[pos] = c;
        fill_interior(dense, pos + 1, used + c, m_max, visit);
    }
    dense[pos] = 0;
}

fn test_candidate(
    n: u32,
    dense: &[u64],
    bounds: &SearchBounds,
    n_fact: &BigInt,
    row: &[ExactInt],
    out: &mut Vec<WedgeSolution>,
) {
    let m: u64 = dense.iter().sum();
    if m < 4 {
        return;
    }
    // Reflection representative: the lexicographically larger orientation.
    if dense.iter().rev().cmp(dense.iter()) == Ordering::Greater {
        return;
    }
    let m_h = WeightFunction::from_dense(dense).expect("ends are positive");
    for k in 2..=m / 2 {
        let Ok(sd) = structural_data(&m_h, k) else {
            continue;
        };
        if sd.small_n_sum != n as i64 - 1 {
            continue;
        }
        let d = binomial(m_h.get(sd.w) as i64, sd.m_min[&sd.w] as i64);
        if let Some(d_max) = bounds.d_max {
            if d > BigInt::from(d_max) {
                continue;
            }
        }
        if binomial(m as i64, k as i64) != &d * n_fact {
            continue;
        }
        let s = sd.min_weight();
        let profile = lhs_profile(&m_h, k);
        let matches = profile.len() == row.len()
            && row
                .iter()
                .enumerate()
                .all(|(q, a)| profile.get(&(q as i64 + s)) == Some(&(a * &d)));
        if matches {
            out.push(WedgeSolution {
                n,
                d,
                k,
                m_h: m_h.clone(),
                s,
            });
        }
    }
}

/// Canonical dense vector of a solution's weights, for display.
pub fn dense_weights(sol: &WedgeSolution) -> Vec<u64> {
    sol.m_h.dense_from_min()
}
