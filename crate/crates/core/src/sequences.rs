//! The sequence `a(1) = 1, a(2) = 5, a(i + 2) = 4 a(i + 1) + 1 − a(i)`
//! (OEIS A061278), the binomials `d(i) = C(a(i) + a(i + 1), a(i))`, and the
//! Diophantine equation `a² − 4ab + b² = a + b` whose positive solutions are
//! exactly the consecutive pairs `(a(i), a(i + 1))`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::eulerian::binomial;
use crate::{Error, ExactInt, Result};

/// One row of the sequence table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequencePair {
    pub i: u64,
    pub a: ExactInt,
    pub d: ExactInt,
}

/// Iterator over `a(1), a(2), …`.
#[derive(Debug, Clone)]
pub struct ASequence {
    prev: ExactInt,
    cur: ExactInt,
}

impl Default for ASequence {
    fn default() -> Self {
        // a(0) = 0 is consistent with the recurrence: 4·1 + 1 − 0 = 5.
        Self {
            prev: BigInt::zero(),
            cur: BigInt::one(),
        }
    }
}

impl Iterator for ASequence {
    type Item = ExactInt;

    fn next(&mut self) -> Option<ExactInt> {
        let next = &self.cur * 4u32 + 1u32 - &self.prev;
        let out = std::mem::replace(&mut self.cur, next);
        self.prev = out.clone();
        Some(out)
    }
}

fn check_index(i: u64) -> Result<()> {
    if i < 1 {
        return Err(Error::invalid("i", "sequence index must be >= 1"));
    }
    Ok(())
}

pub fn a_seq(i: u64) -> Result<ExactInt> {
    check_index(i)?;
    Ok(ASequence::default().nth((i - 1) as usize).expect("infinite iterator"))
}

fn binomial_big(top: &BigInt, k: &BigInt) -> Result<ExactInt> {
    let (Some(top), Some(k)) = (top.to_i64(), k.to_i64()) else {
        return Err(Error::invalid("i", "sequence terms too large for a binomial"));
    };
    Ok(binomial(top, k))
}

/// `C(a(i) + a(i + 1), a(i))`.
pub fn d_seq(i: u64) -> Result<ExactInt> {
    check_index(i)?;
    let mut it = ASequence::default().skip((i - 1) as usize);
    let a = it.next().expect("infinite iterator");
    let b = it.next().expect("infinite iterator");
    binomial_big(&(&a + &b), &a)
}

/// Rows `1..=i_max`.
pub fn sequence_table(i_max: u64) -> Result<Vec<SequencePair>> {
    let terms: Vec<ExactInt> = ASequence::default().take(i_max as usize + 1).collect();
    (1..=i_max)
        .map(|i| {
            let a = &terms[i as usize - 1];
            let b = &terms[i as usize];
            Ok(SequencePair {
                i,
                a: a.clone(),
                d: binomial_big(&(a + b), a)?,
            })
        })
        .collect()
}

pub fn is_solution(a: &BigInt, b: &BigInt) -> bool {
    a * a - a * b * 4u32 + b * b == a + b
}

/// Solutions `1 ≤ a ≤ b ≤ bound` by scanning `a` and solving the quadratic
/// in `b`: `b = ((4a + 1) ± √(12a² + 12a + 1)) / 2`.
pub fn diophantine_scan(bound: u64) -> Vec<(ExactInt, ExactInt)> {
    let bound_big = BigInt::from(bound);
    let mut out = Vec::new();
    for a in 1..=bound {
        let a = BigInt::from(a);
        let disc: BigInt = &a * &a * 12u32 + &a * 12u32 + 1u32;
        let root = disc.sqrt();
        if &root * &root != disc {
            continue;
        }
        let lin: BigInt = &a * 4u32 + 1u32;
        for num in [&lin - &root, &lin + &root] {
            if num.is_odd() {
                continue;
            }
            let b = num / 2u32;
            if b >= a && b <= bound_big {
                out.push((a.clone(), b));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Consecutive pairs `(a(i), a(i + 1))` with `a(i + 1) ≤ bound`.
pub fn diophantine_from_sequence(bound: u64) -> Vec<(ExactInt, ExactInt)> {
    let bound = BigInt::from(bound);
    let terms = ASequence::default();
    terms
        .clone()
        .zip(terms.skip(1))
        .take_while(|(_, b)| *b <= bound)
        .collect()
}

/// All solutions with `1 ≤ a ≤ b ≤ bound`.
///
/// # Panics
///
/// If the scan and the sequence route disagree, which would falsify the
/// descent argument.
pub fn diophantine_solutions(bound: u64) -> Vec<(ExactInt, ExactInt)> {
    let scanned = diophantine_scan(bound);
    let generated = diophantine_from_sequence(bound);
    assert_eq!(scanned, generated, "scan and sequence routes disagree below {bound}");
    scanned
}

/// `(a, b) ↦ (4a + 1 − b, a)`.
pub fn descent_step(a: &BigInt, b: &BigInt) -> Result<(ExactInt, ExactInt)> {
    if !is_solution(a, b) {
        return Err(Error::NotASolution {
            a: a.to_string(),
            b: b.to_string(),
        });
    }
    if a.is_one() {
        return Err(Error::BaseCase);
    }
    if b < a {
        return Err(Error::invalid("b", "descent expects b >= a"));
    }
    Ok((a * 4u32 + 1u32 - b, a.clone()))
}

/// `(a, b) ↦ (b, 4b + 1 − a)`, inverse to [`descent_step`].
pub fn ascent_step(a: &BigInt, b: &BigInt) -> (ExactInt, ExactInt) {
    (b.clone(), b * 4u32 + 1u32 - a)
}

/// Every pair visited from `(a, b)` down to `(1, 5)`, endpoints included.
pub fn descent_chain(a: &BigInt, b: &BigInt) -> Result<Vec<(ExactInt, ExactInt)>> {
    let mut chain = vec![(a.clone(), b.clone())];
    loop {
        let (x, y) = chain.last().expect("nonempty");
        match descent_step(x, y) {
            Ok(next) => chain.push(next),
            Err(Error::BaseCase) => return Ok(chain),
            Err(e) => return Err(e),
        }
    }
}

/// Verdict on a triple intersection number `φ³`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Admissibility {
    pub admissible: bool,
    /// Smallest `i ≥ 2` with `d(i) | φ³`.
    pub witness: Option<u64>,
}

/// `φ³` is admissible iff no `d(i)` with `i ≥ 2` divides it.
pub fn admissible_intersection(triple_product: &BigInt) -> Result<Admissibility> {
    if *triple_product < BigInt::one() {
        return Err(Error::invalid("triple_product", "must be >= 1"));
    }
    let terms = ASequence::default();
    for (i, (a, b)) in (1u64..).zip(terms.clone().zip(terms.skip(1))).skip(1) {
        let d = binomial_big(&(&a + &b), &a)?;
        if d > *triple_product {
            break;
        }
        if (triple_product % &d).is_zero() {
            return Ok(Admissibility {
                admissible: false,
                witness: Some(i),
            });
        }
    }
    Ok(Admissibility {
        admissible: true,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigInt {
        BigInt::from(v)
    }

    fn pairs(v: &[(u64, u64)]) -> Vec<(BigInt, BigInt)> {
        v.iter().map(|&(a, b)| (big(a), big(b))).collect()
    }

    fn brute(bound: u64) -> Vec<(BigInt, BigInt)> {
        let mut out = Vec::new();
        for a in 1..=bound as i64 {
            for b in a..=bound as i64 {
                if a * a - 4 * a * b + b * b == a + b {
                    out.push((a as u64, b as u64));
                }
            }
        }
        pairs(&out)
    }

    #[test]
    fn a_values() {
        let got: Vec<BigInt> = (1..=7).map(|i| a_seq(i).unwrap()).collect();
        assert_eq!(got, [1, 5, 20, 76, 285, 1065, 3976].map(big));
        assert!(a_seq(0).is_err());
    }

    #[test]
    fn d_values() {
        assert_eq!(d_seq(1).unwrap(), big(6));
        assert_eq!(d_seq(2).unwrap(), big(53130));
        assert_eq!(d_seq(3).unwrap().to_string(), "216182590635135019896");
        assert!(d_seq(0).is_err());
        let table = sequence_table(3).unwrap();
        assert_eq!(table[2].d, d_seq(3).unwrap());
        assert_eq!(table[1].a, big(5));
    }

    #[test]
    fn scan_examples() {
        assert_eq!(diophantine_solutions(5), pairs(&[(1, 5)]));
        assert_eq!(diophantine_solutions(100), pairs(&[(1, 5), (5, 20), (20, 76)]));
        assert!(diophantine_solutions(0).is_empty());
        assert!(diophantine_solutions(4).is_empty());
    }

    #[test]
    fn scan_matches_brute_force() {
        for bound in [1, 7, 20, 80, 300] {
            assert_eq!(diophantine_scan(bound), brute(bound), "bound {bound}");
        }
    }

    #[test]
    fn descent_examples() {
        assert_eq!(descent_step(&big(5), &big(20)).unwrap(), (big(1), big(5)));
        assert_eq!(descent_step(&big(20), &big(76)).unwrap(), (big(5), big(20)));
        assert_eq!(descent_step(&big(1), &big(5)), Err(Error::BaseCase));
        assert!(matches!(
            descent_step(&big(2), &big(3)),
            Err(Error::NotASolution { .. })
        ));
        assert!(descent_step(&big(20), &big(5)).is_err());
    }

    #[test]
    fn chain_from_285() {
        let chain = descent_chain(&big(285), &big(1065)).unwrap();
        assert_eq!(chain.len() - 1, 4);
        assert_eq!(chain.last().unwrap(), &(big(1), big(5)));
    }

    #[test]
    fn ascent_inverts_descent() {
        for (a, b) in diophantine_solutions(100_000).into_iter().skip(1) {
            let (x, y) = descent_step(&a, &b).unwrap();
            assert_eq!(ascent_step(&x, &y), (a, b));
        }
    }

    #[test]
    fn admissibility_examples() {
        let v = admissible_intersection(&big(53130)).unwrap();
        assert_eq!(v, Admissibility { admissible: false, witness: Some(2) });
        assert!(admissible_intersection(&big(6)).unwrap().admissible);
        assert!(admissible_intersection(&big(53131)).unwrap().admissible);
        assert!(!admissible_intersection(&(big(53130) * 7u32)).unwrap().admissible);
        assert!(admissible_intersection(&big(0)).is_err());
    }
}
