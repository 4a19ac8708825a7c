//! Sparse polynomials over the rationals, monomial orders, Gröbner bases and
//! the polynomials attached to circuits.

mod circuit;
mod groebner;
mod order;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{format_rational, rational_to_f64, QVector, Rational};

pub use circuit::{
    circuit_polynomial, circuit_polynomial_minus, circuit_polynomials, dehomogenize, homogenize, inv_ideal_oracle,
    Sign,
};
pub use groebner::{
    buchberger, buchberger_with, divide, is_groebner, normal_form, reduces_to_zero, s_polynomial, GroebnerConfig,
};
pub use order::MonomialOrder;

/// Exponent vector of a monomial in a fixed number of variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    /// Square-free monomial `Π_{i ∈ s} x_i`, with `s` given as indices.
    pub fn from_support(nvars: usize, s: impl IntoIterator<Item = usize>) -> Self {
        let mut e = vec![0; nvars];
        for i in s {
            e[i] += 1;
        }
        Monomial(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn support(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i).collect()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| b - a).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// `Σ w_i e_i`.
    pub fn weighted_degree(&self, w: &[Rational]) -> Rational {
        self.0
            .iter()
            .zip(w)
            .filter(|(e, _)| **e > 0)
            .fold(Rational::zero(), |acc, (e, wi)| acc + wi * Rational::from_integer((*e).into()))
    }
}

/// A polynomial in `nvars` variables; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Poly::monomial(Monomial::one(nvars), c)
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, Rational::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Poly::monomial(Monomial::var(nvars, i), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Poly::zero(m.nvars());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Sums the given terms, merging repeated monomials.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Result<Self> {
        let mut p = Poly::zero(nvars);
        for (m, c) in terms {
            if m.nvars() != nvars {
                return Err(Error::Malformed(format!(
                    "exponent vector of length {} in a ring with {nvars} variables",
                    m.nvars()
                )));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    /// Linear form `Σ c_i x_{offset + i}`.
    pub fn linear(nvars: usize, coeffs: &[Rational], offset: usize) -> Self {
        let mut p = Poly::zero(nvars);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(nvars, offset + i), c.clone());
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.keys().next().is_some_and(Monomial::is_one)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(k, x)| (k.mul(m), x.clone())).collect() }
    }

    /// `w`-degree: the largest `w·α` over the terms; `None` for the zero polynomial.
    pub fn deg_w(&self, w: &[Rational]) -> Option<Rational> {
        self.terms.keys().map(|m| m.weighted_degree(w)).max()
    }

    /// `In_w(f)`: the terms of maximal `w`-degree.
    pub fn initial_form(&self, w: &[Rational]) -> Poly {
        let Some(top) = self.deg_w(w) else {
            return self.clone();
        };
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(m, _)| m.weighted_degree(w) == top).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Leading term under `ord`.
    pub fn leading_term(&self, ord: &MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().max_by(|a, b| ord.cmp(a.0, b.0))
    }

    pub fn leading_monomial(&self, ord: &MonomialOrder) -> Option<&Monomial> {
        self.leading_term(ord).map(|(m, _)| m)
    }

    /// Scales so that the leading coefficient under `ord` is one.
    pub fn monic(&self, ord: &MonomialOrder) -> Poly {
        match self.leading_term(ord) {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Substitutes `x_i = value` for every `i` in `vars`.
    pub fn substitute(&self, vars: &[usize], value: &Rational) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let mut coef = c.clone();
            for &i in vars {
                for _ in 0..e[i] {
                    coef *= value;
                }
                e[i] = 0;
            }
            out.add_term(Monomial(e), coef);
        }
        out
    }

    /// Moves the variables into a ring of `nvars` variables: `x_i ↦ x_{map[i]}`.
    pub fn rename(&self, nvars: usize, map: &[usize]) -> Poly {
        let mut out = Poly::zero(nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0; nvars];
            for (i, &x) in m.0.iter().enumerate() {
                if x > 0 {
                    e[map[i]] += x;
                }
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Drops the variables in `remove`, which must not occur in `self`.
    pub fn drop_variables(&self, remove: &[usize]) -> Poly {
        let keep: Vec<usize> = (0..self.nvars).filter(|i| !remove.contains(i)).collect();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                debug_assert!(remove.iter().all(|&i| m.0[i] == 0));
                (Monomial(keep.iter().map(|&i| m.0[i]).collect()), c.clone())
            })
            .collect();
        Poly { nvars: keep.len(), terms }
    }

    pub fn uses_any(&self, vars: &[usize]) -> bool {
        self.terms.keys().any(|m| vars.iter().any(|&i| m.0[i] > 0))
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, (m, c)| {
            let mut t = c.clone();
            for (e, xi) in m.0.iter().zip(x) {
                for _ in 0..*e {
                    t *= xi;
                }
            }
            acc + t
        })
    }

    pub fn eval_f64(&self, x: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| {
                m.0.iter().zip(x).fold(rational_to_f64(c), |acc, (e, xi)| acc * xi.powi(*e as i32))
            })
            .sum()
    }

    /// Human-readable form with the given variable names, highest terms first in grlex.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, names }
    }

    pub fn default_names(nvars: usize) -> Vec<String> {
        (1..=nvars).map(|i| format!("x{i}")).collect()
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "ring mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "ring mismatch");
        let mut out = Poly::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Poly,
    names: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let ord = MonomialOrder::grlex();
        let mut terms: Vec<(&Monomial, &Rational)> = self.poly.terms().collect();
        terms.sort_by(|a, b| ord.cmp(b.0, a.0));
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            for (i, &e) in m.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.names[i].clone()),
                    _ => factors.push(format!("{}^{e}", self.names[i])),
                }
            }
            if factors.is_empty() {
                write!(f, "{}", format_rational(&abs))?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", format_rational(&abs))?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = Poly::default_names(self.nvars);
        write!(f, "{}", self.display_with(&names))
    }
}

/// A list of nonzero generators in a fixed polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealBasis {
    nvars: usize,
    gens: Vec<Poly>,
}

impl IdealBasis {
    /// Drops zero generators; rejects generators from another ring.
    pub fn new(nvars: usize, gens: Vec<Poly>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.nvars() != nvars) {
            return Err(Error::Malformed(format!(
                "generator in {} variables added to a ring with {nvars}",
                g.nvars()
            )));
        }
        Ok(IdealBasis { nvars, gens: gens.into_iter().filter(|g| !g.is_zero()).collect() })
    }

    pub fn unit(nvars: usize) -> Self {
        IdealBasis { nvars, gens: vec![Poly::one(nvars)] }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub fn into_gens(self) -> Vec<Poly> {
        self.gens
    }

    /// True when some generator is a nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Poly::is_unit)
    }
}

/// Exact rational weight vector from integers, for tests and examples.
pub fn weights(w: &[i64]) -> Vec<Rational> {
    QVector::from_i64(w).into_entries()
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(x: i64) -> Rational {
        Rational::from_integer(x.into())
    }

    pub(crate) fn poly(nvars: usize, terms: &[(&[u32], i64)]) -> Poly {
        Poly::from_terms(nvars, terms.iter().map(|(e, c)| (Monomial::new(e.to_vec()), q(*c)))).unwrap()
    }

    #[test]
    fn arithmetic_cancels() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let s = &x + &y;
        let d = &x - &y;
        let prod = &s * &d;
        assert_eq!(prod, poly(2, &[(&[2, 0], 1), (&[0, 2], -1)]));
        assert!((&prod - &prod).is_zero());
    }

    #[test]
    fn initial_form_picks_top_weight() {
        let f = poly(5, &[(&[1, 0, 0, 0, 0], 1), (&[0, 1, 0, 0, 0], 1), (&[1, 1, 0, 1, 0], -1)]);
        let w = weights(&[1, 2, 3, 4, 5]);
        assert_eq!(f.initial_form(&w), poly(5, &[(&[1, 1, 0, 1, 0], -1)]));
        assert_eq!(f.deg_w(&w), Some(q(7)));
        let m = poly(5, &[(&[0, 2, 0, 0, 1], 3)]);
        assert_eq!(m.initial_form(&w), m);
    }

    #[test]
    fn display_is_readable() {
        let f = poly(3, &[(&[1, 0, 0], 1), (&[0, 0, 0], -2), (&[1, 1, 1], -1)]);
        assert_eq!(f.to_string(), "-x1*x2*x3 + x1 - 2");
        assert_eq!(Poly::zero(2).to_string(), "0");
    }

    #[test]
    fn substitution_and_renaming() {
        let f = poly(3, &[(&[1, 0, 0], 1), (&[1, 1, 0], 1), (&[0, 0, 2], 1)]);
        assert_eq!(f.substitute(&[1], &Rational::zero()), poly(3, &[(&[1, 0, 0], 1), (&[0, 0, 2], 1)]));
        let g = f.rename(4, &[3, 2, 1]);
        assert_eq!(g, poly(4, &[(&[0, 0, 0, 1], 1), (&[0, 0, 1, 1], 1), (&[0, 2, 0, 0], 1)]));
    }

    fn small_poly() -> impl Strategy<Value = Poly> {
        proptest::collection::vec((proptest::collection::vec(0u32..3, 3), -3i64..=3), 0..5).prop_map(|ts| {
            Poly::from_terms(3, ts.into_iter().map(|(e, c)| (Monomial::new(e), q(c)))).unwrap()
        })
    }

    proptest! {
        #[test]
        fn initial_form_is_multiplicative(
            f in small_poly(),
            g in small_poly(),
            w in proptest::collection::vec(0i64..5, 3),
        ) {
            let w = weights(&w);
            let lhs = (&f * &g).initial_form(&w);
            let rhs = &f.initial_form(&w) * &g.initial_form(&w);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
