//! Tiny exact expression trees for catalog coordinates and interval
//! endpoints.
//!
//! Catalog constructions are stored symbolically (rationals combined with
//! square roots) and evaluated to the configured precision at load time, so
//! verification is bit-stable across platforms.

use crate::geometry::Scalar;
use num_bigint::BigInt;
use num_rational::BigRational;
use std::fmt;

/// An exact real-valued expression.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Rat(BigRational),
    Sqrt(Box<Expr>),
    Neg(Box<Expr>),
    Add(Vec<Expr>),
    Mul(Vec<Expr>),
}

impl Expr {
    pub fn int(n: i64) -> Expr {
        Expr::Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn rat(num: i64, den: i64) -> Expr {
        Expr::Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// sqrt of an integer.
    pub fn sqrt_int(n: i64) -> Expr {
        Expr::Sqrt(Box::new(Expr::int(n)))
    }

    /// sqrt of a rational.
    pub fn sqrt_rat(num: i64, den: i64) -> Expr {
        Expr::Sqrt(Box::new(Expr::rat(num, den)))
    }

    pub fn sqrt(e: Expr) -> Expr {
        Expr::Sqrt(Box::new(e))
    }

    pub fn neg(e: Expr) -> Expr {
        Expr::Neg(Box::new(e))
    }

    pub fn add(terms: Vec<Expr>) -> Expr {
        Expr::Add(terms)
    }

    pub fn mul(factors: Vec<Expr>) -> Expr {
        Expr::Mul(factors)
    }

    /// `q * sqrt(r)` — the workhorse for surd coordinates.
    pub fn term(q_num: i64, q_den: i64, root: i64) -> Expr {
        if root == 1 {
            Expr::rat(q_num, q_den)
        } else {
            Expr::mul(vec![Expr::rat(q_num, q_den), Expr::sqrt_int(root)])
        }
    }

    /// Evaluates at the current global precision.
    pub fn eval(&self) -> Scalar {
        match self {
            Expr::Rat(r) => Scalar::from_rational(r),
            Expr::Sqrt(e) => e.eval().sqrt(),
            Expr::Neg(e) => -e.eval(),
            Expr::Add(terms) => terms
                .iter()
                .fold(Scalar::zero(), |acc, t| acc + t.eval()),
            Expr::Mul(factors) => factors
                .iter()
                .fold(Scalar::one(), |acc, f| acc * f.eval()),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Rat(r) => write!(f, "{r}"),
            Expr::Sqrt(e) => write!(f, "sqrt({e})"),
            Expr::Neg(e) => write!(f, "-({e})"),
            Expr::Add(terms) => {
                let parts: Vec<String> = terms.iter().map(|t| t.to_string()).collect();
                write!(f, "({})", parts.join(" + "))
            }
            Expr::Mul(factors) => {
                let parts: Vec<String> = factors.iter().map(|t| t.to_string()).collect();
                write!(f, "{}", parts.join("*"))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn surd_term_evaluates() {
        // -1/4 - sqrt(11/48)
        let e = Expr::add(vec![Expr::rat(-1, 4), Expr::neg(Expr::sqrt_rat(11, 48))]);
        let v = e.eval().to_f64();
        assert!((v - (-0.25 - (11f64 / 48.0).sqrt())).abs() < 1e-15);
    }

    #[test]
    fn nested_sqrt() {
        // sqrt(5 + 2 sqrt(3)) / 2 = 1.45466...
        let e = Expr::mul(vec![
            Expr::rat(1, 2),
            Expr::sqrt(Expr::add(vec![Expr::int(5), Expr::term(2, 1, 3)])),
        ]);
        assert!((e.eval().to_f64() - 1.4546565).abs() < 1e-6);
    }
}
