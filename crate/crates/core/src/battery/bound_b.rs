//! The two-parameter inequality `A(n, r−1)(A(n, r−1) − 1) > 2 A(n, 3r−2)`
//! for `3 ≤ r ≤ n − 2`.
//!
//! Finite part: every `(n, r)` with `5 ≤ n ≤ 20`. For `n ≥ 21`, with
//! `c = 1 − 1000/2718` and `s = ⌈√n⌉`:
//!
//! 1. `3r − 2 ≥ n` makes the right side vanish.
//! 2. `r ≤ s`: the lower bound `A(n, r−1) ≥ c r^n` applies, and after
//!    dividing by `r^{2n}` it is enough that
//!    `c² − c r^{−n} − 2((3r−1)/r²)^n > 0`, which is increasing in `r ≥ 3`
//!    and in `n`, so the corner `r = 3, n = 21` suffices.
//! 3. `r ≥ s`: unimodality gives `A(n, r−1) ≥ A(n, s−1) ≥ c n^{n/2}`, and
//!    `A(n, 3r−2) ≤ n! ≤ n^n / n`, so `c² n / 2 > 2` suffices.
//!
//! Both regimes need the lower bound at `q = s − 1`, i.e.
//! `2718 (n+1) (s−1)^n ≤ 1000 s^n`. Truncating the binomial expansion of
//! `(1 + 1/(s−1))^n` after the `C(n, 4)` term and using `(s−1)² < n`, this
//! follows from `1000 (n−1)(n−2)(n−3) > 65232 n (n+1)`; below the point
//! where that polynomial inequality takes over the condition is checked
//! directly.

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::Zero;

use super::asymptotic::{patch_constant, Certifier};
use super::expr::{int, n, Relation};
use super::{Certificate, ClaimedRange, Counterexample, Status};
use crate::eulerian::eulerian;
use crate::Result;

pub const NAME: &str = "bound-B";
pub const FINITE_HI: u64 = 20;
const CLAIMED_LO: u64 = 5;

pub fn holds(n: u64, r: u64) -> Result<bool> {
    let low = eulerian(n as i64, r as i64 - 1)?;
    let high = eulerian(n as i64, 3 * r as i64 - 2)?;
    Ok(&low * (&low - 1u32) > high * 2u32)
}

/// First `(n, r)` in `n_lo..=n_hi`, `3 ≤ r ≤ n − 2` where the inequality
/// fails.
pub fn first_failure(n_lo: u64, n_hi: u64) -> Result<Option<(u64, u64)>> {
    for n in n_lo..=n_hi {
        for r in 3..=n.saturating_sub(2) {
            if !holds(n, r)? {
                return Ok(Some((n, r)));
            }
        }
    }
    Ok(None)
}

fn ceil_sqrt(n: u64) -> u64 {
    let s = n.sqrt();
    if s * s == n {
        s
    } else {
        s + 1
    }
}

/// `2718 (n+1) q^n ≤ 1000 (q+1)^n`.
fn patch_holds(n: u64, q: u64) -> bool {
    let lhs = BigInt::from(2718u32) * (n + 1) * BigInt::from(q).pow(n as u32);
    let rhs = BigInt::from(1000u32) * BigInt::from(q + 1).pow(n as u32);
    lhs <= rhs
}

fn rpow(p: i64, q: i64, k: u32) -> BigRational {
    BigRational::new(BigInt::from(p).pow(k), BigInt::from(q).pow(k))
}

/// The asymptotic argument for `n > FINITE_HI`; `Err` names the step that
/// could not be confirmed.
fn asymptotic_trace(trace: &mut Vec<String>) -> std::result::Result<(), String> {
    let n0 = FINITE_HI + 1;
    let c = patch_constant();
    trace.push("3r - 2 >= n: right side is 0 and A(n,r-1) >= 2".to_owned());

    let corner = &c * &c - &c * rpow(1, 3, n0 as u32) - rpow(8, 9, n0 as u32) * BigInt::from(2);
    if corner <= BigRational::zero() {
        return Err(format!("corner r = 3, n = {n0} is not positive"));
    }
    trace.push(format!(
        "r <= ceil(sqrt n): c^2 - c*3^-{n0} - 2*(8/9)^{n0} = {:.6} > 0",
        to_f64(&corner)
    ));

    let mut certifier = Certifier::new();
    let lhs = int(1000) * (n() - 1) * (n() - 2) * (n() - 3);
    let rhs = int(65232) * n() * (n() + 1);
    let n_poly = certifier.certify(&lhs, Relation::Gt, &rhs, n0)?;
    trace.push(format!(
        "lower bound at q = ceil(sqrt n) - 1 holds for n >= {n_poly} by {lhs} > {rhs}"
    ));
    for m in n0..n_poly {
        if !patch_holds(m, ceil_sqrt(m) - 1) {
            return Err(format!("lower bound at q = ceil(sqrt n) - 1 fails at n = {m}"));
        }
    }
    trace.push(format!(
        "lower bound at q = ceil(sqrt n) - 1 checked directly for {n0} <= n < {n_poly}"
    ));

    let tail = &c * &c * BigInt::from(n0) / BigInt::from(2);
    if tail <= BigRational::from_integer(2.into()) {
        return Err(format!("c^2 n / 2 <= 2 at n = {n0}"));
    }
    trace.push(format!(
        "r >= ceil(sqrt n): unimodality and A(n,q) <= n! reduce to c^2 n / 2 = {:.4} > 2 at n = {n0}",
        to_f64(&tail)
    ));
    Ok(())
}

fn to_f64(x: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

pub fn certificate() -> Result<Certificate> {
    let mut cert = Certificate {
        name: NAME.to_owned(),
        statement: "A(n,r-1)*(A(n,r-1) - 1) > 2*A(n,3r-2) for 3 <= r <= n - 2".to_owned(),
        claimed_range: ClaimedRange::from(CLAIMED_LO),
        finite_checked: Some((CLAIMED_LO, FINITE_HI)),
        asymptotic_threshold: None,
        status: Status::FiniteOnly,
        counterexample: None,
        trace: Vec::new(),
    };
    if let Some((n, r)) = first_failure(CLAIMED_LO, FINITE_HI)? {
        cert.status = Status::Failed;
        cert.counterexample = Some(Counterexample { n, r: Some(r) });
        return Ok(cert);
    }
    cert.trace.push(format!(
        "checked all 3 <= r <= n - 2 for {CLAIMED_LO} <= n <= {FINITE_HI}"
    ));
    match asymptotic_trace(&mut cert.trace) {
        Ok(()) => {
            cert.asymptotic_threshold = Some(FINITE_HI + 1);
            cert.status = Status::Verified;
        }
        Err(reason) => cert.trace.push(format!("not certified: {reason}")),
    }
    Ok(cert)
}
