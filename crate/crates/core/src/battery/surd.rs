//! Exact arithmetic in `Q(√g₁, …, √g_k)` for square-free-ish positive
//! integers `g_i`, with an exact sign test.
//!
//! Elements are sparse maps from a subset mask of generators to a rational
//! coefficient. Generators need not be multiplicatively independent: the
//! sign test only uses `√g · √g = g`, so it stays correct either way.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

const MAX_GENERATORS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Surd {
    terms: BTreeMap<u64, BigRational>,
}

impl Surd {
    pub fn rational(q: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(0, q);
        }
        Self { terms }
    }

    pub fn integer(v: impl Into<BigInt>) -> Self {
        Self::rational(BigRational::from_integer(v.into()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value when no generator is involved.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    fn top_bit(&self) -> Option<u32> {
        self.terms
            .keys()
            .filter(|m| **m != 0)
            .map(|m| 63 - m.leading_zeros())
            .max()
    }

    fn push(&mut self, mask: u64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(mask).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&mask);
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.push(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn scale(&self, k: &BigRational) -> Self {
        let mut out = Self::default();
        for (m, c) in &self.terms {
            out.push(*m, c * k);
        }
        out
    }

    /// Split as `a + b √g_bit` with `a`, `b` free of `bit`.
    fn split(&self, bit: u32) -> (Self, Self) {
        let flag = 1u64 << bit;
        let (mut a, mut b) = (Self::default(), Self::default());
        for (m, c) in &self.terms {
            if m & flag == 0 {
                a.push(*m, c.clone());
            } else {
                b.push(m & !flag, c.clone());
            }
        }
        (a, b)
    }
}

/// The generator list shared by all values of one evaluation.
#[derive(Debug, Clone, Default)]
pub struct SurdField {
    gens: Vec<BigInt>,
}

impl SurdField {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn generators(&self) -> &[BigInt] {
        &self.gens
    }

    pub fn mul(&self, x: &Surd, y: &Surd) -> Surd {
        let mut out = Surd::default();
        for (mx, cx) in &x.terms {
            for (my, cy) in &y.terms {
                let mut c = cx * cy;
                let mut common = mx & my;
                while common != 0 {
                    let bit = common.trailing_zeros();
                    c *= &self.gens[bit as usize];
                    common &= common - 1;
                }
                out.push(mx ^ my, c);
            }
        }
        out
    }

    pub fn pow(&self, x: &Surd, k: u32) -> Surd {
        let mut acc = Surd::integer(1);
        for _ in 0..k {
            acc = self.mul(&acc, x);
        }
        acc
    }

    /// `√x` for rational `x ≥ 0`; perfect squares stay rational.
    pub fn sqrt(&mut self, x: &Surd) -> Result<Surd> {
        let Some(q) = x.as_rational() else {
            return Err(Error::MalformedExpression(
                "square root of an irrational value".into(),
            ));
        };
        if q.is_negative() {
            return Err(Error::MalformedExpression(format!("square root of {q}")));
        }
        if q.is_zero() {
            return Ok(Surd::default());
        }
        // √(p/q) = √(pq) / q
        let radicand = q.numer() * q.denom();
        let (square, free) = split_square(&radicand);
        let coeff = BigRational::new(square, q.denom().clone());
        if free.is_one() {
            return Ok(Surd::rational(coeff));
        }
        let idx = match self.gens.iter().position(|g| *g == free) {
            Some(i) => i,
            None => {
                if self.gens.len() == MAX_GENERATORS {
                    return Err(Error::MalformedExpression("too many square roots".into()));
                }
                self.gens.push(free);
                self.gens.len() - 1
            }
        };
        let mut out = Surd::default();
        out.push(1u64 << idx, coeff);
        Ok(out)
    }

    pub fn inverse(&self, x: &Surd) -> Result<Surd> {
        match x.top_bit() {
            None => {
                let q = x.as_rational().expect("no generators");
                if q.is_zero() {
                    return Err(Error::MalformedExpression("division by zero".into()));
                }
                Ok(Surd::rational(q.recip()))
            }
            Some(bit) => {
                let (a, b) = x.split(bit);
                let g = Surd::integer(self.gens[bit as usize].clone());
                let norm = self.mul(&a, &a).sub(&self.mul(&self.mul(&b, &b), &g));
                let mut conj = a.clone();
                for (m, c) in &b.terms {
                    conj.push(m | (1u64 << bit), -c);
                }
                if norm.is_zero() {
                    // a = ±b√g numerically; x is then 2a or 0.
                    return match self.sign(&conj) {
                        Ordering::Equal => self.inverse(&a.scale(&BigRational::from_integer(2.into()))),
                        _ => Err(Error::MalformedExpression("division by zero".into())),
                    };
                }
                Ok(self.mul(&conj, &self.inverse(&norm)?))
            }
        }
    }

    /// Exact sign of `x`.
    pub fn sign(&self, x: &Surd) -> Ordering {
        let Some(bit) = x.top_bit() else {
            return x
                .as_rational()
                .expect("no generators")
                .cmp(&BigRational::zero());
        };
        let (a, b) = x.split(bit);
        let sa = self.sign(&a);
        let sb = self.sign(&b);
        if sb == Ordering::Equal || sa == sb {
            return sa;
        }
        if sa == Ordering::Equal {
            return sb;
        }
        // Opposite signs: a + b√g has the sign of a times sign(a² − b² g).
        let g = Surd::integer(self.gens[bit as usize].clone());
        let norm = self.mul(&a, &a).sub(&self.mul(&self.mul(&b, &b), &g));
        match self.sign(&norm) {
            Ordering::Equal => Ordering::Equal,
            Ordering::Greater => sa,
            Ordering::Less => sa.reverse(),
        }
    }
}

/// `v = s² f` with small square factors pulled out of `f`.
fn split_square(v: &BigInt) -> (BigInt, BigInt) {
    let root = v.sqrt();
    if &root * &root == *v {
        return (root, BigInt::one());
    }
    let mut square = BigInt::one();
    let mut free = v.clone();
    for p in 2u32..1000 {
        let pp = BigInt::from(p * p);
        while (&free % &pp).is_zero() {
            free /= &pp;
            square *= p;
        }
    }
    (square, free)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Surd {
        Surd::rational(BigRational::new(n.into(), d.into()))
    }

    #[test]
    fn sqrt_extracts_squares() {
        let mut f = SurdField::new();
        assert_eq!(f.sqrt(&q(9, 4)).unwrap(), q(3, 2));
        let r8 = f.sqrt(&q(8, 1)).unwrap();
        let r2 = f.sqrt(&q(2, 1)).unwrap();
        assert_eq!(f.generators().len(), 1);
        assert_eq!(r8, r2.add(&r2));
        assert!(f.sqrt(&q(-1, 1)).is_err());
        let nested = f.sqrt(&r2);
        assert!(matches!(nested, Err(Error::MalformedExpression(_))));
    }

    #[test]
    fn products_square_back() {
        let mut f = SurdField::new();
        let r3 = f.sqrt(&q(3, 1)).unwrap();
        let r5 = f.sqrt(&q(5, 1)).unwrap();
        let prod = f.mul(&r3, &r5);
        assert_eq!(f.mul(&prod, &prod), q(15, 1));
    }

    #[test]
    fn signs() {
        let mut f = SurdField::new();
        let r2 = f.sqrt(&q(2, 1)).unwrap();
        let r3 = f.sqrt(&q(3, 1)).unwrap();
        // √2 + √3 − 3.14 > 0 since √2 + √3 ≈ 3.146
        let x = r2.add(&r3).sub(&q(314, 100));
        assert_eq!(f.sign(&x), Ordering::Greater);
        let y = r2.add(&r3).sub(&q(315, 100));
        assert_eq!(f.sign(&y), Ordering::Less);
        // (√3 − √2)(√3 + √2) − 1 = 0
        let z = f.mul(&r3.sub(&r2), &r3.add(&r2)).sub(&q(1, 1));
        assert_eq!(f.sign(&z), Ordering::Equal);
        assert_eq!(f.sign(&q(7, 5).sub(&r2)), Ordering::Less);
    }

    #[test]
    fn inverse_round_trip() {
        let mut f = SurdField::new();
        let r2 = f.sqrt(&q(2, 1)).unwrap();
        let r7 = f.sqrt(&q(7, 1)).unwrap();
        let x = r2.add(&r7).add(&q(1, 3));
        let inv = f.inverse(&x).unwrap();
        assert_eq!(f.mul(&x, &inv), q(1, 1));
        assert!(f.inverse(&Surd::default()).is_err());
    }
}
