//! Eulerian numbers `A(n, q)`, binomial coefficients and factorials over
//! arbitrary-precision integers.
//!
//! `A(n, q)` counts permutations of `{1, …, n}` with exactly `q` ascents. It is
//! taken to vanish unless `0 ≤ q < n`; every formula downstream relies on that
//! convention, so out-of-range `q` yields zero instead of an error.
//!
//! Two independent computation paths exist:
//!
//! * the recurrence `A(n, q) = (q + 1) A(n − 1, q) + (n − q) A(n − 1, q − 1)`,
//!   memoized row by row in an [`EulerianTable`];
//! * the alternating binomial identity
//!   `(−1)^n Σ_{j=0}^{q+1} (−1)^j C(n + 1, q + 1 − j) j^n = (−1)^{n−1−q} A(n, q)`,
//!   exposed as [`eulerian_closed_form`].

use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, ExactInt, Result};

/// `C(n, k)`, zero when `k < 0` or `k > n`.
///
/// Negative `n` is outside every formula in this crate and also yields zero.
pub fn binomial(n: i64, k: i64) -> ExactInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        // Exact at every step: acc = C(n, j) before the update.
        acc *= n - j;
        acc /= j + 1;
    }
    acc
}

pub fn factorial(n: u64) -> ExactInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Row-complete memo table of Eulerian numbers.
///
/// Rows are built by the recurrence on first request and shared as
/// `Arc<[ExactInt]>`; concurrent readers only contend while a missing row is
/// being materialized.
#[derive(Debug, Default)]
pub struct EulerianTable {
    // rows[i] holds A(i + 1, 0..=i)
    rows: RwLock<Vec<Arc<[ExactInt]>>>,
}

impl EulerianTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Table pre-filled up to and including row `n_max`.
    pub fn with_rows(n_max: u64) -> Self {
        let table = Self::new();
        if n_max >= 1 {
            table.materialize(n_max);
        }
        table
    }

    /// Process-wide table used by the free functions of this module.
    pub fn shared() -> &'static EulerianTable {
        static SHARED: OnceLock<EulerianTable> = OnceLock::new();
        SHARED.get_or_init(EulerianTable::new)
    }

    /// Number of rows currently materialized.
    pub fn len(&self) -> usize {
        self.rows.read().expect("eulerian table poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `[A(n, 0), …, A(n, n − 1)]`.
    pub fn row(&self, n: i64) -> Result<Arc<[ExactInt]>> {
        if n <= 0 {
            return Err(Error::invalid("n", format!("Eulerian rows need n >= 1, got {n}")));
        }
        let idx = (n - 1) as usize;
        if let Some(row) = self.rows.read().expect("eulerian table poisoned").get(idx) {
            return Ok(Arc::clone(row));
        }
        self.materialize(n as u64);
        Ok(Arc::clone(&self.rows.read().expect("eulerian table poisoned")[idx]))
    }

    /// `A(n, q)`; zero outside `0 ≤ q < n`.
    pub fn get(&self, n: i64, q: i64) -> Result<ExactInt> {
        let row = self.row(n)?;
        Ok(usize::try_from(q)
            .ok()
            .and_then(|q| row.get(q).cloned())
            .unwrap_or_default())
    }

    fn materialize(&self, n_max: u64) {
        let mut rows = self.rows.write().expect("eulerian table poisoned");
        while (rows.len() as u64) < n_max {
            let next = match rows.last() {
                None => vec![BigInt::one()],
                Some(prev) => next_row(prev),
            };
            rows.push(next.into());
        }
    }
}

fn next_row(prev: &[ExactInt]) -> Vec<ExactInt> {
    // prev is row n - 1 (length n - 1); produce row n.
    let n = prev.len() as u64 + 1;
    let zero = BigInt::zero();
    (0..n)
        .map(|q| {
            let stay = prev.get(q as usize).unwrap_or(&zero) * (q + 1);
            let climb = if q == 0 {
                BigInt::zero()
            } else {
                prev.get(q as usize - 1).unwrap_or(&zero) * (n - q)
            };
            stay + climb
        })
        .collect()
}

/// `A(n, q)` from the shared recurrence table; zero when `q < 0` or `q ≥ n`.
pub fn eulerian(n: i64, q: i64) -> Result<ExactInt> {
    EulerianTable::shared().get(n, q)
}

/// `[A(n, 0), …, A(n, n − 1)]`, summing to `n!`.
pub fn eulerian_row(n: i64) -> Result<Vec<ExactInt>> {
    Ok(EulerianTable::shared().row(n)?.to_vec())
}

/// The alternating sum `(−1)^n Σ_{j=0}^{i+1} (−1)^j C(n + 1, i + 1 − j) j^n`.
pub fn alternating_sum(n: u32, i: i64) -> ExactInt {
    let mut acc = BigInt::zero();
    for j in 0..=i + 1 {
        let term = binomial(n as i64 + 1, i + 1 - j) * BigInt::from(j).pow(n);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    if n % 2 == 1 {
        -acc
    } else {
        acc
    }
}

/// `A(n, q)` through the alternating binomial identity, independent of the
/// recurrence table.
pub fn eulerian_closed_form(n: i64, q: i64) -> Result<ExactInt> {
    if n <= 0 {
        return Err(Error::invalid("n", format!("Eulerian numbers need n >= 1, got {n}")));
    }
    if q < 0 || q >= n {
        return Ok(BigInt::zero());
    }
    let n32 = u32::try_from(n).map_err(|_| Error::invalid("n", "too large"))?;
    let signed = alternating_sum(n32, q);
    // signed = (−1)^{n−1−q} A(n, q)
    Ok(if (n - 1 - q) % 2 == 0 { signed } else { -signed })
}

/// Checks `(−1)^n Σ_j (−1)^j C(n + 1, i + 1 − j) j^n = (−1)^{n−1−i} A(n, i)`
/// exactly, with `A(n, i)` taken from the recurrence table.
pub fn alternating_identity_check(n: i64, i: i64) -> bool {
    if n < 1 || i < 0 || i >= n {
        return false;
    }
    let Ok(n32) = u32::try_from(n) else {
        return false;
    };
    let Ok(a) = eulerian(n, i) else {
        return false;
    };
    let rhs = if (n - 1 - i) % 2 == 0 { a } else { -a };
    alternating_sum(n32, i) == rhs
}

pub fn is_palindromic(row: &[ExactInt]) -> bool {
    row.iter().eq(row.iter().rev())
}

/// `x_q² ≥ x_{q−1} x_{q+1}` for every interior index.
pub fn is_log_concave(row: &[ExactInt]) -> bool {
    row.windows(3).all(|w| &w[1] * &w[1] >= &w[0] * &w[2])
}

/// Nonnegative entries rising to a single plateau and then falling.
pub fn is_unimodal(row: &[ExactInt]) -> bool {
    let mut descending = false;
    for w in row.windows(2) {
        if w[1] < w[0] {
            descending = true;
        } else if descending && w[1] > w[0] {
            return false;
        }
    }
    row.iter().all(|x| !x.is_negative())
}
