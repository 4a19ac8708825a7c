//! Multivariate division and Buchberger's algorithm.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};

use num_traits::Zero;

use super::{IdealBasis, Monomial, MonomialOrder, Poly};
use crate::error::{Error, Result};
use crate::exact::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerConfig {
    /// S-pairs that may be examined before giving up.
    pub max_pairs: usize,
    /// Largest number of terms allowed in any intermediate polynomial.
    pub max_support: usize,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig { max_pairs: 100_000, max_support: 10_000 }
    }
}

/// Terms sorted increasingly under the order, so the leading term is last.
#[derive(Clone, Debug)]
struct Sorted {
    terms: Vec<(Monomial, Rational)>,
}

impl Sorted {
    fn new(p: &Poly, ord: &MonomialOrder) -> Self {
        let mut terms: Vec<(Monomial, Rational)> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| ord.cmp(&a.0, &b.0));
        Sorted { terms }
    }

    fn lead(&self) -> Option<&(Monomial, Rational)> {
        self.terms.last()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn to_poly(&self, nvars: usize) -> Poly {
        Poly::from_terms(nvars, self.terms.iter().cloned()).expect("same ring")
    }

    fn make_monic(&mut self) {
        if let Some((_, c)) = self.lead() {
            let inv = c.recip();
            for t in &mut self.terms {
                t.1 *= &inv;
            }
        }
    }

    /// `self - c · m · g`.
    fn sub_scaled(&self, c: &Rational, m: &Monomial, g: &Sorted, ord: &MonomialOrder) -> Sorted {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g.terms.iter().map(|(gm, gc)| (gm.mul(m), gc * c)).peekable();
        loop {
            let step = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some(x), Some(y)) => ord.cmp(&x.0, &y.0),
            };
            match step {
                Ordering::Less => out.push(a.next().unwrap().clone()),
                Ordering::Greater => {
                    let (bm, bc) = b.next().unwrap();
                    out.push((bm, -bc));
                }
                Ordering::Equal => {
                    let (am, ac) = a.next().unwrap();
                    let (_, bc) = b.next().unwrap();
                    let c = ac - bc;
                    if !c.is_zero() {
                        out.push((am.clone(), c));
                    }
                }
            }
        }
        Sorted { terms: out }
    }
}

fn find_divisor(m: &Monomial, g: &[Sorted]) -> Option<usize> {
    g.iter().position(|gi| gi.lead().is_some_and(|(lm, _)| lm.divides(m)))
}

/// Full reduction of `f` by `g`, optionally recording quotients.
fn reduce(
    f: Sorted,
    g: &[Sorted],
    ord: &MonomialOrder,
    mut quotients: Option<&mut Vec<Vec<(Monomial, Rational)>>>,
    max_support: usize,
) -> Result<Sorted> {
    let mut p = f;
    let mut rem: Vec<(Monomial, Rational)> = Vec::new();
    while let Some((m, c)) = p.lead().cloned() {
        match find_divisor(&m, g) {
            Some(k) => {
                let (lm, lc) = g[k].lead().unwrap();
                let q = lm.quotient_of(&m);
                let coef = &c / lc;
                p = p.sub_scaled(&coef, &q, &g[k], ord);
                if let Some(qs) = quotients.as_deref_mut() {
                    qs[k].push((q, coef));
                }
                if p.terms.len() > max_support {
                    return Err(Error::ResourceCutoff(format!(
                        "intermediate polynomial exceeds {max_support} terms"
                    )));
                }
            }
            None => {
                p.terms.pop();
                rem.push((m, c));
            }
        }
    }
    rem.reverse();
    Ok(Sorted { terms: rem })
}

/// Division of `f` by the list `g`: returns quotients and a remainder none of
/// whose terms is divisible by a leading monomial of `g`. The first divisor in
/// list order is always used.
pub fn divide(f: &Poly, g: &[Poly], ord: &MonomialOrder) -> (Vec<Poly>, Poly) {
    let n = f.nvars();
    let gs: Vec<Sorted> = g.iter().map(|p| Sorted::new(p, ord)).collect();
    let mut qs: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); g.len()];
    let r = reduce(Sorted::new(f, ord), &gs, ord, Some(&mut qs), usize::MAX).expect("no support limit");
    let quotients = qs.into_iter().map(|t| Poly::from_terms(n, t).expect("same ring")).collect();
    (quotients, r.to_poly(n))
}

pub fn normal_form(f: &Poly, g: &[Poly], ord: &MonomialOrder) -> Poly {
    divide(f, g, ord).1
}

pub fn reduces_to_zero(f: &Poly, g: &[Poly], ord: &MonomialOrder) -> bool {
    normal_form(f, g, ord).is_zero()
}

pub fn s_polynomial(f: &Poly, g: &Poly, ord: &MonomialOrder) -> Poly {
    let (Some((mf, cf)), Some((mg, cg))) = (f.leading_term(ord), g.leading_term(ord)) else {
        return Poly::zero(f.nvars());
    };
    let l = mf.lcm(mg);
    let a = f.mul_monomial(&mf.quotient_of(&l)).scale(&cf.recip());
    let b = g.mul_monomial(&mg.quotient_of(&l)).scale(&cg.recip());
    &a - &b
}

/// Buchberger's criterion: every S-polynomial reduces to zero.
pub fn is_groebner(g: &[Poly], ord: &MonomialOrder) -> bool {
    let g: Vec<Poly> = g.iter().filter(|p| !p.is_zero()).cloned().collect();
    (0..g.len()).all(|i| (i + 1..g.len()).all(|j| reduces_to_zero(&s_polynomial(&g[i], &g[j], ord), &g, ord)))
}

pub fn buchberger(b: &IdealBasis, ord: &MonomialOrder) -> Result<IdealBasis> {
    buchberger_with(b, ord, &GroebnerConfig::default())
}

/// Reduced Gröbner basis, monic and sorted by decreasing leading monomial.
pub fn buchberger_with(b: &IdealBasis, ord: &MonomialOrder, cfg: &GroebnerConfig) -> Result<IdealBasis> {
    let n = b.nvars();
    let mut g: Vec<Sorted> = Vec::new();
    for p in b.gens() {
        let mut s = Sorted::new(p, ord);
        s.make_monic();
        if s.lead().is_some_and(|(m, _)| m.is_one()) {
            return Ok(IdealBasis::unit(n));
        }
        g.push(s);
    }
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    let lcm_of = |g: &[Sorted], i: usize, j: usize| g[i].lead().unwrap().0.lcm(&g[j].lead().unwrap().0);
    let mut queue: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    for j in 0..g.len() {
        for i in 0..j {
            queue.insert((lcm_of(&g, i, j).degree(), j, i));
            pending.insert((i, j));
        }
    }
    let mut examined = 0usize;
    while let Some((_, j, i)) = queue.pop_first() {
        pending.remove(&(i, j));
        examined += 1;
        if examined > cfg.max_pairs {
            return Err(Error::ResourceCutoff(format!("more than {} S-pairs", cfg.max_pairs)));
        }
        let (li, lj) = (&g[i].lead().unwrap().0, &g[j].lead().unwrap().0);
        if li.is_coprime(lj) {
            continue;
        }
        let l = li.lcm(lj);
        let chain = (0..g.len()).any(|k| {
            k != i
                && k != j
                && g[k].lead().unwrap().0.divides(&l)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let s = {
            let (_, ci) = g[i].lead().unwrap();
            let (_, cj) = g[j].lead().unwrap();
            let a = Sorted { terms: Vec::new() }.sub_scaled(&-ci.recip(), &li.quotient_of(&l), &g[i], ord);
            a.sub_scaled(&cj.recip(), &lj.quotient_of(&l), &g[j], ord)
        };
        let mut h = reduce(s, &g, ord, None, cfg.max_support)?;
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        if h.lead().unwrap().0.is_one() {
            return Ok(IdealBasis::unit(n));
        }
        let new = g.len();
        g.push(h);
        for k in 0..new {
            queue.insert((lcm_of(&g, k, new).degree(), new, k));
            pending.insert((k, new));
        }
    }
    Ok(IdealBasis::new(n, interreduce(g, ord, n)).expect("same ring"))
}

fn interreduce(g: Vec<Sorted>, ord: &MonomialOrder, n: usize) -> Vec<Poly> {
    // keep one element per minimal leading monomial
    let mut minimal: Vec<Sorted> = Vec::new();
    for (a, ga) in g.iter().enumerate() {
        let la = &ga.lead().unwrap().0;
        let redundant = g.iter().enumerate().any(|(b, gb)| {
            let lb = &gb.lead().unwrap().0;
            b != a && lb.divides(la) && (lb != la || b < a)
        });
        if !redundant {
            minimal.push(ga.clone());
        }
    }
    let mut out: Vec<Sorted> = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Sorted> =
            minimal.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, s)| s.clone()).collect();
        let (lead, tail) = minimal[k].terms.split_last().unwrap();
        let rest = reduce(Sorted { terms: tail.to_vec() }, &others, ord, None, usize::MAX).expect("no limit");
        let mut terms = rest.terms;
        terms.push(lead.clone());
        let mut s = Sorted { terms };
        s.make_monic();
        out.push(s);
    }
    out.sort_by(|a, b| ord.cmp(&b.lead().unwrap().0, &a.lead().unwrap().0));
    out.into_iter().map(|s| s.to_poly(n)).collect()
}

/// True when every generator of `a` lies in the ideal with Gröbner basis `gb`.
#[cfg(test)]
pub(crate) fn contained_in(a: &[Poly], gb: &[Poly], ord: &MonomialOrder) -> bool {
    a.iter().all(|f| reduces_to_zero(f, gb, ord))
}

/// Leading coefficient is one.
#[cfg(test)]
pub(crate) fn is_monic(p: &Poly, ord: &MonomialOrder) -> bool {
    p.leading_term(ord).is_some_and(|(_, c)| num_traits::One::is_one(c))
}
