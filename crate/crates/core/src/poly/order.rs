use std::cmp::Ordering;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use super::Monomial;
use crate::error::{Error, Result};
use crate::exact::Rational;

/// A monomial order. Variables are ranked `x_1 > x_2 > ... > x_n` for the
/// lexicographic tie-breaks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    Lex,
    GrLex,
    /// `w`-degree first, ties broken by graded lex. The weights are kept as
    /// integers scaled by the common denominator, which preserves the order.
    Weight { weights: Vec<Rational>, scaled: Vec<i128> },
    /// Graded lex on the first `eliminated` variables, then graded lex on the rest.
    Elimination { eliminated: usize },
}

impl MonomialOrder {
    pub fn lex() -> Self {
        MonomialOrder::Lex
    }

    pub fn grlex() -> Self {
        MonomialOrder::GrLex
    }

    pub fn elimination(eliminated: usize) -> Self {
        MonomialOrder::Elimination { eliminated }
    }

    /// Weight order refined by graded lex. Negative weights are rejected.
    pub fn weight(w: &[Rational]) -> Result<Self> {
        if let Some(i) = w.iter().position(|x| x.is_negative()) {
            return Err(Error::Malformed(format!("weight order needs nonnegative weights, entry {} is negative", i + 1)));
        }
        let den = w.iter().fold(num_bigint::BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let scaled = w
            .iter()
            .map(|x| (x.numer() * (&den / x.denom())).to_i128())
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Malformed("weights too large for a monomial order".into()))?;
        Ok(MonomialOrder::Weight { weights: w.to_vec(), scaled })
    }

    pub fn weight_vector(&self) -> Option<&[Rational]> {
        match self {
            MonomialOrder::Weight { weights, .. } => Some(weights),
            _ => None,
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => lex(a.exps(), b.exps()),
            MonomialOrder::GrLex => grlex(a.exps(), b.exps()),
            MonomialOrder::Weight { scaled, .. } => {
                let wa: i128 = a.exps().iter().zip(scaled).map(|(&e, &w)| e as i128 * w).sum();
                let wb: i128 = b.exps().iter().zip(scaled).map(|(&e, &w)| e as i128 * w).sum();
                wa.cmp(&wb).then_with(|| grlex(a.exps(), b.exps()))
            }
            MonomialOrder::Elimination { eliminated } => {
                let k = (*eliminated).min(a.nvars());
                grlex(&a.exps()[..k], &b.exps()[..k]).then_with(|| grlex(&a.exps()[k..], &b.exps()[k..]))
            }
        }
    }
}

fn lex(a: &[u32], b: &[u32]) -> Ordering {
    a.cmp(b)
}

fn grlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| lex(a, b))
}
