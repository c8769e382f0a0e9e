//! Certificates that an inequality between expressions holds for every
//! `n ≥ N₀`.
//!
//! Each side is replaced by a sum of signed monomials
//! `±(c · n^a · b^n)^{1/2^r}` that bounds it from the favourable direction,
//! using
//!
//! * `A(n, q) ≤ (q + 1)^n` for all `n`,
//! * `A(n, q) ≥ (1 − 1000/2718) (q + 1)^n` once
//!   `2718 (n + 1) q^n ≤ 1000 (q + 1)^n`, which follows from
//!   `A(n, q) ≥ (q + 1)^n − (n + 1) q^n`.
//!
//! The difference is then shown positive by picking the fastest-growing
//! positive monomial as pivot and checking that the sum of the negative
//! monomials divided by the pivot is below 1 at some `n` from which every
//! such ratio is nonincreasing.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::expr::{Expr, Relation};

/// Largest `n` the threshold scans will reach.
pub const SEARCH_LIMIT: u64 = 10_000;

/// Binary digits kept when bounding roots from above.
const ROOT_PRECISION_BITS: u64 = 64;

/// `1 − 1000/2718`.
pub fn patch_constant() -> BigRational {
    BigRational::new(BigInt::from(859), BigInt::from(1359))
}

/// Smallest `n > q` with `2718 (n + 1) q^n ≤ 1000 (q + 1)^n`. The ratio
/// `(n + 1) q^n / (q + 1)^n` is nonincreasing for `n ≥ q`, so the bound holds
/// from there on.
pub fn patch_valid_from(q: u32) -> Option<u64> {
    if q == 0 {
        return Some(1);
    }
    let (q_big, q1) = (BigInt::from(q), BigInt::from(q + 1));
    let mut lhs_pow = q_big.pow(q + 1);
    let mut rhs_pow = q1.pow(q + 1);
    for n in (q as u64 + 1)..=SEARCH_LIMIT {
        if BigInt::from(2718u32) * (n + 1) * &lhs_pow <= BigInt::from(1000u32) * &rhs_pow {
            return Some(n);
        }
        lhs_pow *= &q_big;
        rhs_pow *= &q1;
    }
    None
}

/// `sign · (coeff · n^poly · base^n)^{1/2^root}` with `coeff, base > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial {
    pub negative: bool,
    pub coeff: BigRational,
    pub poly: i64,
    pub base: BigRational,
    pub root: u32,
}

impl Monomial {
    fn constant(c: BigRational) -> Option<Self> {
        if c.is_zero() {
            return None;
        }
        Some(Self {
            negative: c.is_negative(),
            coeff: c.abs(),
            poly: 0,
            base: BigRational::one(),
            root: 0,
        })
    }

    fn exp(coeff: BigRational, base: u32) -> Self {
        Self {
            negative: false,
            coeff,
            poly: 0,
            base: BigRational::from_integer(base.into()),
            root: 0,
        }
    }

    /// Same value written under the root `1/2^target`.
    fn lifted(&self, target: u32) -> Self {
        let k = 1u32 << (target - self.root);
        Self {
            negative: self.negative,
            coeff: pow_rational(&self.coeff, k),
            poly: self.poly * k as i64,
            base: pow_rational(&self.base, k),
            root: target,
        }
    }

    fn mul(&self, other: &Self) -> Self {
        let r = self.root.max(other.root);
        let (x, y) = (self.lifted(r), other.lifted(r));
        Self {
            negative: x.negative != y.negative,
            coeff: x.coeff * y.coeff,
            poly: x.poly + y.poly,
            base: x.base * y.base,
            root: r,
        }
    }

    fn recip(&self) -> Self {
        Self {
            negative: self.negative,
            coeff: self.coeff.recip(),
            poly: -self.poly,
            base: self.base.recip(),
            root: self.root,
        }
    }

    fn sqrt(&self) -> Self {
        debug_assert!(!self.negative);
        Self {
            root: self.root + 1,
            ..self.clone()
        }
    }

    fn negated(&self) -> Self {
        Self {
            negative: !self.negative,
            ..self.clone()
        }
    }

    fn scaled(&self, c: &BigRational) -> Self {
        let factor = pow_rational(&c.abs(), 1 << self.root);
        Self {
            negative: self.negative != c.is_negative(),
            coeff: &self.coeff * factor,
            ..self.clone()
        }
    }

    /// `c · n^poly · base^n` before taking the root.
    fn inner_at(&self, n: u64) -> BigRational {
        let n_big = BigRational::from_integer(n.into());
        let poly = if self.poly >= 0 {
            pow_rational(&n_big, self.poly as u32)
        } else {
            pow_rational(&n_big.recip(), (-self.poly) as u32)
        };
        &self.coeff * poly * pow_rational(&self.base, n as u32)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.coeff.is_one() || (self.poly == 0 && self.base.is_one()) {
            parts.push(self.coeff.to_string());
        }
        match self.poly {
            0 => {}
            1 => parts.push("n".to_owned()),
            p => parts.push(format!("n^{p}")),
        }
        if !self.base.is_one() {
            if self.base.is_integer() {
                parts.push(format!("{}^n", self.base));
            } else {
                parts.push(format!("({})^n", self.base));
            }
        }
        let body = parts.join("*");
        let sign = if self.negative { "-" } else { "+" };
        match self.root {
            0 => write!(f, "{sign}{body}"),
            r => write!(f, "{sign}({body})^(1/{})", 1u64 << r),
        }
    }
}

fn pow_rational(x: &BigRational, k: u32) -> BigRational {
    BigRational::new(x.numer().pow(k), x.denom().pow(k))
}

/// Signed sum of monomials, valid as a bound for all `n ≥ valid_from`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bound {
    pub terms: Vec<Monomial>,
    pub valid_from: u64,
}

impl Bound {
    fn constant(c: BigRational) -> Self {
        Self {
            terms: Monomial::constant(c).into_iter().collect(),
            valid_from: 1,
        }
    }

    fn add(self, other: Bound) -> Bound {
        let mut terms = self.terms;
        terms.extend(other.terms);
        Bound {
            terms,
            valid_from: self.valid_from.max(other.valid_from),
        }
    }

    fn negated(self) -> Bound {
        Bound {
            terms: self.terms.iter().map(Monomial::negated).collect(),
            valid_from: self.valid_from,
        }
    }

    fn mul(&self, other: &Bound) -> Bound {
        let terms = self
            .terms
            .iter()
            .flat_map(|x| other.terms.iter().map(move |y| x.mul(y)))
            .collect();
        Bound {
            terms: merge(terms),
            valid_from: self.valid_from.max(other.valid_from),
        }
    }

    fn scaled(&self, c: &BigRational) -> Bound {
        Bound {
            terms: self.terms.iter().map(|t| t.scaled(c)).collect(),
            valid_from: self.valid_from,
        }
    }

    /// The single positive monomial this bound reduces to, if any.
    fn single_positive(&self) -> Option<Monomial> {
        match merge(self.terms.clone()).as_slice() {
            [t] if !t.negative => Some(t.clone()),
            _ => None,
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|t| t.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Combines root-free monomials that differ only in their coefficient.
fn merge(terms: Vec<Monomial>) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::new();
    for t in terms {
        if t.root == 0 {
            if let Some(slot) = out
                .iter_mut()
                .find(|o| o.root == 0 && o.poly == t.poly && o.base == t.base)
            {
                let signed = |m: &Monomial| if m.negative { -m.coeff.clone() } else { m.coeff.clone() };
                let sum = signed(slot) + signed(&t);
                slot.negative = sum.is_negative();
                slot.coeff = sum.abs();
                continue;
            }
        }
        out.push(t);
    }
    out.retain(|t| !t.coeff.is_zero());
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Upper,
    Lower,
}

impl Side {
    fn flip(self) -> Side {
        match self {
            Side::Upper => Side::Lower,
            Side::Lower => Side::Upper,
        }
    }
}

/// Threshold and the reasoning behind it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dominance {
    pub threshold: u64,
    pub trace: Vec<String>,
}

/// Builds bounds for expressions and records every fact it relies on.
#[derive(Debug, Default)]
pub struct Certifier {
    pub trace: Vec<String>,
}

type Uncertified = String;

impl Certifier {
    pub fn new() -> Self {
        Self::default()
    }

    fn note(&mut self, line: String) {
        if !self.trace.contains(&line) {
            self.trace.push(line);
        }
    }

    fn bound(&mut self, e: &Expr, side: Side) -> Result<Bound, Uncertified> {
        match e {
            Expr::Const(c) => Ok(Bound::constant(c.clone())),
            Expr::N => Ok(Bound {
                terms: vec![Monomial {
                    negative: false,
                    coeff: BigRational::one(),
                    poly: 1,
                    base: BigRational::one(),
                    root: 0,
                }],
                valid_from: 1,
            }),
            Expr::Eulerian(0) => Ok(Bound::constant(BigRational::one())),
            Expr::Eulerian(q) => match side {
                Side::Upper => {
                    self.note(format!("A(n,{q}) <= {}^n for all n", q + 1));
                    Ok(Bound {
                        terms: vec![Monomial::exp(BigRational::one(), q + 1)],
                        valid_from: 1,
                    })
                }
                Side::Lower => {
                    let from = patch_valid_from(*q)
                        .ok_or_else(|| format!("lower bound for A(n,{q}) not reached"))?;
                    self.note(format!(
                        "A(n,{q}) >= {}*{}^n for n >= {from}",
                        patch_constant(),
                        q + 1
                    ));
                    Ok(Bound {
                        terms: vec![Monomial::exp(patch_constant(), q + 1)],
                        valid_from: from,
                    })
                }
            },
            Expr::Factorial => Err("n! has no monomial bound".to_owned()),
            Expr::Add(x, y) => Ok(self.bound(x, side)?.add(self.bound(y, side)?)),
            Expr::Sub(x, y) => Ok(self.bound(x, side)?.add(self.bound(y, side.flip())?.negated())),
            Expr::Mul(x, y) => {
                if let Expr::Const(c) = x.as_ref() {
                    return self.scaled(y, c, side);
                }
                if let Expr::Const(c) = y.as_ref() {
                    return self.scaled(x, c, side);
                }
                let nx = self.nonnegative_from(x)?;
                let ny = self.nonnegative_from(y)?;
                let mut b = self.bound(x, side)?.mul(&self.bound(y, side)?);
                b.valid_from = b.valid_from.max(nx).max(ny);
                Ok(b)
            }
            Expr::Div(x, y) => {
                if let Expr::Const(c) = y.as_ref() {
                    if c.is_zero() {
                        return Err("division by zero".to_owned());
                    }
                    return self.scaled(x, &c.recip(), side);
                }
                let nx = self.nonnegative_from(x)?;
                let den = self.bound(y, side.flip())?;
                let mono = den
                    .single_positive()
                    .ok_or_else(|| format!("denominator {y} has no single-monomial bound"))?;
                let mut b = self.bound(x, side)?.mul(&Bound {
                    terms: vec![mono.recip()],
                    valid_from: den.valid_from,
                });
                b.valid_from = b.valid_from.max(nx);
                Ok(b)
            }
            Expr::Pow(x, k) => match k {
                0 => Ok(Bound::constant(BigRational::one())),
                1 => self.bound(x, side),
                _ => {
                    let nx = self.nonnegative_from(x)?;
                    let base = self.bound(x, side)?;
                    let mut acc = base.clone();
                    for _ in 1..*k {
                        acc = acc.mul(&base);
                    }
                    acc.valid_from = acc.valid_from.max(nx);
                    Ok(acc)
                }
            },
            Expr::Sqrt(x) => match side {
                Side::Upper => {
                    // √(Σ x_i) ≤ Σ √x_i over the positive terms
                    let inner = self.bound(x, Side::Upper)?;
                    Ok(Bound {
                        terms: merge(inner.terms)
                            .into_iter()
                            .filter(|t| !t.negative)
                            .map(|t| t.sqrt())
                            .collect(),
                        valid_from: inner.valid_from,
                    })
                }
                Side::Lower => {
                    let inner = self.bound(x, Side::Lower)?;
                    let mono = inner
                        .single_positive()
                        .ok_or_else(|| format!("sqrt({x}) has no single-monomial lower bound"))?;
                    Ok(Bound {
                        terms: vec![mono.sqrt()],
                        valid_from: inner.valid_from,
                    })
                }
            },
        }
    }

    fn scaled(&mut self, x: &Expr, c: &BigRational, side: Side) -> Result<Bound, Uncertified> {
        let side = if c.is_negative() { side.flip() } else { side };
        Ok(self.bound(x, side)?.scaled(c))
    }

    /// First `n` from which `x ≥ 0` is guaranteed through its lower bound.
    fn nonnegative_from(&mut self, x: &Expr) -> Result<u64, Uncertified> {
        let lower = self.bound(x, Side::Lower)?;
        if lower.terms.iter().all(|t| !t.negative) {
            return Ok(lower.valid_from);
        }
        let dom = dominate(&lower.terms, lower.valid_from)?;
        self.note(format!("{x} >= 0 for n >= {}", dom.threshold));
        Ok(dom.threshold)
    }

    /// `N₀` with `lhs rel rhs` for every `n ≥ N₀`, searched from `start`.
    pub fn certify(
        &mut self,
        lhs: &Expr,
        rel: Relation,
        rhs: &Expr,
        start: u64,
    ) -> Result<u64, Uncertified> {
        let (big, small) = if rel.rhs_dominates() { (rhs, lhs) } else { (lhs, rhs) };
        let lower = self.bound(big, Side::Lower)?;
        let upper = self.bound(small, Side::Upper)?;
        self.note(format!("lower bound of {big}: {lower}"));
        self.note(format!("upper bound of {small}: {upper}"));
        let from = start.max(lower.valid_from).max(upper.valid_from);
        let difference = lower.add(upper.negated());
        let dom = dominate(&difference.terms, from)?;
        for line in dom.trace {
            self.note(line);
        }
        Ok(dom.threshold)
    }
}

/// Upper bound on `x^{1/2^root}` for rational `x ≥ 0`.
fn root_upper(x: &BigRational, root: u32) -> BigRational {
    if root == 0 {
        return x.clone();
    }
    let k = 1u32 << root;
    let scale = BigInt::one() << ROOT_PRECISION_BITS;
    let scaled = x * BigRational::from_integer(scale.pow(k));
    let y = scaled.ceil().to_integer();
    BigRational::new(y.nth_root(k) + 1u32, scale)
}

fn growth_cmp(x: &Monomial, y: &Monomial) -> Ordering {
    x.base.cmp(&y.base).then(x.poly.cmp(&y.poly))
}

/// Proves `Σ terms > 0` for all `n ≥ N₀ ≥ start`.
pub fn dominate(terms: &[Monomial], start: u64) -> Result<Dominance, Uncertified> {
    let start = start.max(1);
    let merged = merge(terms.to_vec());
    if merged.iter().all(|t| !t.negative) {
        if merged.is_empty() {
            return Err("expression is identically zero".to_owned());
        }
        return Ok(Dominance {
            threshold: start,
            trace: vec![format!("all terms positive for n >= {start}")],
        });
    }
    let top = merged.iter().map(|t| t.root).max().unwrap_or(0);
    let lifted: Vec<Monomial> = merged.iter().map(|t| t.lifted(top)).collect();
    let pivot = lifted
        .iter()
        .filter(|t| !t.negative)
        .max_by(|x, y| growth_cmp(x, y).then(x.coeff.cmp(&y.coeff)))
        .ok_or_else(|| "no positive term to dominate with".to_owned())?
        .clone();

    let mut trace = vec![format!("pivot {pivot}")];
    // Each ratio negative/pivot is (C n^α β^n)^{1/2^top}.
    let mut ratios = Vec::new();
    let mut from = start;
    for t in lifted.iter().filter(|t| t.negative) {
        let c = &t.coeff / &pivot.coeff;
        let alpha = t.poly - pivot.poly;
        let beta = &t.base / &pivot.base;
        let decays = beta < BigRational::one() || (beta.is_one() && alpha < 0);
        if !decays {
            return Err(format!("{t} grows at least as fast as pivot {pivot}"));
        }
        let mono_from = monotone_from(alpha, &beta)
            .ok_or_else(|| format!("ratio of {t} to pivot not monotone below {SEARCH_LIMIT}"))?;
        from = from.max(mono_from);
        ratios.push(Monomial {
            negative: false,
            coeff: c,
            poly: alpha,
            base: beta,
            root: top,
        });
    }
    for r in &ratios {
        trace.push(format!("ratio {r} nonincreasing"));
    }

    for n in from..=SEARCH_LIMIT {
        let total: BigRational = ratios.iter().map(|r| root_upper(&r.inner_at(n), top)).sum();
        if total < BigRational::one() {
            trace.push(format!("sum of ratios < 1 at n = {n}, hence for all n >= {n}"));
            return Ok(Dominance { threshold: n, trace });
        }
    }
    Err(format!("ratios do not sum below 1 for n <= {SEARCH_LIMIT}"))
}

/// First `n ≥ 1` with `(n + 1)^α β ≤ n^α`, after which `n^α β^n` is
/// nonincreasing.
fn monotone_from(alpha: i64, beta: &BigRational) -> Option<u64> {
    if alpha <= 0 {
        return Some(1);
    }
    let a = alpha as u32;
    (1..=SEARCH_LIMIT).find(|&n| {
        let lhs = BigRational::from_integer(BigInt::from(n + 1).pow(a)) * beta;
        lhs <= BigRational::from_integer(BigInt::from(n).pow(a))
    })
}
