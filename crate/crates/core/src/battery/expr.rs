//! A small expression language over `n`: Eulerian atoms `A(n, q)` with
//! fixed `q`, `n!`, `n`, rational constants, the four operations, integer
//! powers and one level of square roots.

use std::cmp::Ordering;
use std::fmt;
use std::ops;

use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;

use super::surd::{Surd, SurdField};
use crate::eulerian::{eulerian, factorial};
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Const(BigRational),
    N,
    Eulerian(u32),
    Factorial,
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Sqrt(Box<Expr>),
}

pub fn int(v: i64) -> Expr {
    Expr::Const(BigRational::from_integer(v.into()))
}

pub fn frac(p: i64, q: i64) -> Expr {
    Expr::Const(BigRational::new(p.into(), q.into()))
}

pub fn n() -> Expr {
    Expr::N
}

/// `A(n, q)`.
pub fn a(q: u32) -> Expr {
    Expr::Eulerian(q)
}

/// `n!`.
pub fn fact() -> Expr {
    Expr::Factorial
}

impl Expr {
    pub fn pow(self, k: u32) -> Expr {
        Expr::Pow(Box::new(self), k)
    }

    pub fn sqrt(self) -> Expr {
        Expr::Sqrt(Box::new(self))
    }

    /// Exact value at `n` in the field generated by the square roots met.
    pub fn eval(&self, n: u64, field: &mut SurdField) -> Result<Surd> {
        Ok(match self {
            Expr::Const(c) => Surd::rational(c.clone()),
            Expr::N => Surd::integer(n),
            Expr::Eulerian(q) => Surd::integer(eulerian(n as i64, *q as i64)?),
            Expr::Factorial => Surd::integer(factorial(n)),
            Expr::Add(x, y) => x.eval(n, field)?.add(&y.eval(n, field)?),
            Expr::Sub(x, y) => x.eval(n, field)?.sub(&y.eval(n, field)?),
            Expr::Mul(x, y) => {
                let (x, y) = (x.eval(n, field)?, y.eval(n, field)?);
                field.mul(&x, &y)
            }
            Expr::Div(x, y) => {
                let (x, y) = (x.eval(n, field)?, y.eval(n, field)?);
                let inv = field.inverse(&y)?;
                field.mul(&x, &inv)
            }
            Expr::Pow(x, k) => {
                let x = x.eval(n, field)?;
                field.pow(&x, *k)
            }
            Expr::Sqrt(x) => {
                let x = x.eval(n, field)?;
                field.sqrt(&x)?
            }
        })
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Const(c) if !c.is_integer() || c.is_negative() => 2,
            Expr::Pow(..) => 3,
            _ => 4,
        }
    }

    fn fmt_child(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(c) => write!(f, "{c}"),
            Expr::N => f.write_str("n"),
            Expr::Eulerian(q) => write!(f, "A(n,{q})"),
            Expr::Factorial => f.write_str("n!"),
            Expr::Add(x, y) => {
                x.fmt_child(f, 1)?;
                f.write_str(" + ")?;
                y.fmt_child(f, 1)
            }
            Expr::Sub(x, y) => {
                x.fmt_child(f, 1)?;
                f.write_str(" - ")?;
                y.fmt_child(f, 2)
            }
            Expr::Mul(x, y) => {
                x.fmt_child(f, 2)?;
                f.write_str("*")?;
                y.fmt_child(f, 3)
            }
            Expr::Div(x, y) => {
                x.fmt_child(f, 2)?;
                f.write_str("/")?;
                y.fmt_child(f, 3)
            }
            Expr::Pow(x, k) => {
                x.fmt_child(f, 4)?;
                write!(f, "^{k}")
            }
            Expr::Sqrt(x) => write!(f, "sqrt({x})"),
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $variant:ident) => {
        impl ops::$trait for Expr {
            type Output = Expr;
            fn $method(self, rhs: Expr) -> Expr {
                Expr::$variant(Box::new(self), Box::new(rhs))
            }
        }
        impl ops::$trait<i64> for Expr {
            type Output = Expr;
            fn $method(self, rhs: i64) -> Expr {
                Expr::$variant(Box::new(self), Box::new(int(rhs)))
            }
        }
        impl ops::$trait<Expr> for i64 {
            type Output = Expr;
            fn $method(self, rhs: Expr) -> Expr {
                Expr::$variant(Box::new(int(self)), Box::new(rhs))
            }
        }
    };
}

binop!(Add, add, Add);
binop!(Sub, sub, Sub);
binop!(Mul, mul, Mul);
binop!(Div, div, Div);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">")]
    Gt,
    #[serde(rename = ">=")]
    Ge,
}

impl Relation {
    /// Whether `sign(lhs − rhs)` satisfies the relation.
    pub fn accepts(self, sign: Ordering) -> bool {
        match self {
            Relation::Lt => sign == Ordering::Less,
            Relation::Le => sign != Ordering::Greater,
            Relation::Gt => sign == Ordering::Greater,
            Relation::Ge => sign != Ordering::Less,
        }
    }

    /// `true` when the right-hand side is the larger one.
    pub fn rhs_dominates(self) -> bool {
        matches!(self, Relation::Lt | Relation::Le)
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Lt => "<",
            Relation::Le => "<=",
            Relation::Gt => ">",
            Relation::Ge => ">=",
        })
    }
}

/// Exact truth value of `lhs rel rhs` at `n`.
pub fn holds_at(lhs: &Expr, rel: Relation, rhs: &Expr, n: u64) -> Result<bool> {
    let mut field = SurdField::new();
    let l = lhs.eval(n, &mut field)?;
    let r = rhs.eval(n, &mut field)?;
    Ok(rel.accepts(field.sign(&l.sub(&r))))
}

/// Rational value of a root-free expression, for tests and reports.
pub fn rational_value(e: &Expr, n: u64) -> Result<Option<BigRational>> {
    let mut field = SurdField::new();
    Ok(e.eval(n, &mut field)?.as_rational())
}
