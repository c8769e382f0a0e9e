//! Euler characteristics and Hodge–Tate multiplicities of a smooth ample
//! hypersurface `H` in an `n`-dimensional abelian variety.
//!
//! Everything is a closed formula in `n` and the degree `d = [H]^n / n!`:
//! `χ(O_H) = (−1)^{n−1} d`, `e(H) = (−1)^{n−1} n! d`,
//! `χ(Ω^i_H) = (−1)^{n−1−i} d A(n, i)`, and the weight-`q` multiplicity of the
//! twisted middle cohomology is `d A(n, q)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::eulerian::{binomial, eulerian, eulerian_row, factorial};
use crate::{Error, ExactInt, Result};

/// Dimension `n ≥ 2` of the ambient abelian variety and degree `d ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct HypersurfaceData {
    n: u32,
    d: u64,
}

impl HypersurfaceData {
    pub fn new(n: u32, d: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::invalid("n", format!("ambient dimension must be >= 2, got {n}")));
        }
        if d < 1 {
            return Err(Error::invalid("d", "degree must be >= 1"));
        }
        Ok(Self { n, d })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    fn sign(&self, exponent: i64) -> BigInt {
        if exponent.rem_euclid(2) == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        }
    }

    fn check_index(&self, i: i64) -> Result<()> {
        if i < 0 || i >= self.n as i64 {
            return Err(Error::invalid(
                "i",
                format!("form degree must lie in 0..={}, got {i}", self.n - 1),
            ));
        }
        Ok(())
    }
}

/// Weight multiplicities `d A(n, q)` for `q = 0, …, n − 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeProfile {
    pub base: HypersurfaceData,
    pub weights: Vec<ExactInt>,
}

impl HodgeProfile {
    pub fn total(&self) -> ExactInt {
        self.weights.iter().sum()
    }

    /// Multiplicity at weight `q`, zero outside `0..n`.
    pub fn at(&self, q: i64) -> ExactInt {
        usize::try_from(q)
            .ok()
            .and_then(|q| self.weights.get(q).cloned())
            .unwrap_or_default()
    }

    /// `(n, d, q, multiplicity)` rows.
    pub fn rows(&self) -> impl Iterator<Item = (u32, u64, usize, &ExactInt)> + '_ {
        self.weights
            .iter()
            .enumerate()
            .map(|(q, m)| (self.base.n, self.base.d, q, m))
    }
}

/// `χ(H, O_H) = (−1)^{n−1} d`.
pub fn arithmetic_euler_char(h: &HypersurfaceData) -> ExactInt {
    h.sign(h.n as i64 - 1) * h.d
}

/// `e(H) = (−1)^{n−1} n! d`.
pub fn topological_euler_char(h: &HypersurfaceData) -> ExactInt {
    h.sign(h.n as i64 - 1) * factorial(h.n as u64) * h.d
}

/// `χ(H, Ω^i_H) = (−1)^{n−1−i} d A(n, i)`.
pub fn chi_omega(h: &HypersurfaceData, i: i64) -> Result<ExactInt> {
    h.check_index(i)?;
    Ok(h.sign(h.n as i64 - 1 - i) * eulerian(h.n as i64, i)? * h.d)
}

/// `χ(L^r ⊗ Ω^i_H) = Σ_{j=0}^{i} C(n, i − j) (−1)^j ((r − j)^n − (r − j − 1)^n) d`
/// where `L = O_A(H)`, so `χ(L) = d`.
///
/// At `r = 0` this collapses to [`chi_omega`].
pub fn chi_twisted(h: &HypersurfaceData, r: i64, i: i64) -> Result<ExactInt> {
    h.check_index(i)?;
    let n = h.n as i64;
    let mut acc = BigInt::zero();
    for j in 0..=i {
        let diff = BigInt::from(r - j).pow(h.n) - BigInt::from(r - j - 1).pow(h.n);
        let term = binomial(n, i - j) * diff;
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc * h.d)
}

pub fn hodge_tate_multiplicities(h: &HypersurfaceData) -> HodgeProfile {
    let row = eulerian_row(h.n as i64).expect("n >= 2 by construction");
    HodgeProfile {
        base: *h,
        weights: row.into_iter().map(|a| a * h.d).collect(),
    }
}

/// Dimension `N = n! d` of the standard representation.
pub fn tannakian_dimension(h: &HypersurfaceData) -> ExactInt {
    factorial(h.n as u64) * h.d
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn hs(n: u32, d: u64) -> HypersurfaceData {
        HypersurfaceData::new(n, d).unwrap()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn rejects_bad_data() {
        assert!(HypersurfaceData::new(1, 1).is_err());
        assert!(HypersurfaceData::new(3, 0).is_err());
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(arithmetic_euler_char(&hs(3, 1)), big(1));
        assert_eq!(arithmetic_euler_char(&hs(2, 7)), big(-7));
        assert_eq!(arithmetic_euler_char(&hs(4, 1)), big(-1));
        assert_eq!(topological_euler_char(&hs(3, 1)), big(6));
        assert_eq!(topological_euler_char(&hs(2, 1)), big(-2));
        assert_eq!(topological_euler_char(&hs(5, 2)), big(240));
    }

    #[test]
    fn chi_omega_values() {
        // (−1)^{3−1−1} · 1 · A(3, 1)
        assert_eq!(chi_omega(&hs(3, 1), 1).unwrap(), big(-4));
        assert_eq!(chi_omega(&hs(4, 2), 0).unwrap(), big(-2));
        assert_eq!(chi_omega(&hs(2, 1), 1).unwrap(), big(1));
        assert!(chi_omega(&hs(3, 1), 3).is_err());
        assert!(chi_omega(&hs(3, 1), -1).is_err());
    }

    #[test]
    fn chi_twisted_values() {
        assert_eq!(chi_twisted(&hs(3, 1), 0, 1).unwrap(), chi_omega(&hs(3, 1), 1).unwrap());
        assert_eq!(chi_twisted(&hs(2, 1), 1, 0).unwrap(), big(1));
        assert_eq!(chi_twisted(&hs(4, 3), 0, 2).unwrap(), big(-33));
        assert!(chi_twisted(&hs(4, 3), 0, 4).is_err());
    }

    #[test]
    fn twisted_recursion_in_r() {
        // χ(L^r ⊗ Ω^i) = C(n,i)(r^n − (r−1)^n)d − χ(L^{r−1} ⊗ Ω^{i−1})
        for n in 2..=6u32 {
            let h = hs(n, 3);
            for r in -3..=4i64 {
                for i in 1..n as i64 {
                    let line = (BigInt::from(r).pow(n) - BigInt::from(r - 1).pow(n))
                        * binomial(n as i64, i)
                        * 3u32;
                    let expected = line - chi_twisted(&h, r - 1, i - 1).unwrap();
                    assert_eq!(chi_twisted(&h, r, i).unwrap(), expected);
                }
            }
        }
    }

    #[test]
    fn profiles() {
        assert_eq!(hodge_tate_multiplicities(&hs(3, 1)).weights, vec![big(1), big(4), big(1)]);
        assert_eq!(
            hodge_tate_multiplicities(&hs(4, 2)).weights,
            vec![big(2), big(22), big(22), big(2)]
        );
        assert_eq!(hodge_tate_multiplicities(&hs(2, 5)).weights, vec![big(5), big(5)]);
        assert_eq!(tannakian_dimension(&hs(3, 1)), big(6));
        assert_eq!(tannakian_dimension(&hs(4, 1)), big(24));
        assert_eq!(tannakian_dimension(&hs(5, 3)), big(360));
    }

    #[test]
    fn absolute_chi_sum_is_topological() {
        for n in 2..=8 {
            for d in [1, 2, 9] {
                let h = hs(n, d);
                let total: BigInt =
                    (0..n as i64).map(|i| chi_omega(&h, i).unwrap().abs()).sum();
                assert_eq!(total, topological_euler_char(&h).abs());
                assert_eq!(chi_omega(&h, 0).unwrap(), arithmetic_euler_char(&h));
            }
        }
    }
}
