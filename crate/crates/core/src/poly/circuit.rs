//! Circuit polynomials, homogenization and the elimination oracle for the
//! ideal of a semi-inverted linear space.

use num_traits::{One, Zero};

use super::groebner::buchberger_with;
use super::{GroebnerConfig, IdealBasis, Monomial, MonomialOrder, Poly};
use crate::elements::ElemSet;
use crate::error::Result;
use crate::exact::{kernel_basis, QMatrix, Rational};
use crate::matroid::{circuit_forms, CircuitForm, Matroid};

/// Which coordinate inversion is used: `x ↦ 1/x` or `x ↦ -1/x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

fn build(cf: &CircuitForm, inv: ElemSet, sign: Sign) -> Poly {
    let n = cf.coeffs.len();
    let c = cf.circuit;
    let ci = c.intersection(inv);
    let inverted_sign = match sign {
        Sign::Plus => Rational::one(),
        Sign::Minus => -Rational::one(),
    };
    let mut terms = Vec::new();
    for i in ci {
        terms.push((Monomial::from_support(n, ci.without(i)), &cf.coeffs[i] * &inverted_sign));
    }
    for j in c.difference(inv) {
        terms.push((Monomial::from_support(n, ci.with(j)), cf.coeffs[j].clone()));
    }
    let f = Poly::from_terms(n, terms).expect("same ring");
    if sign == Sign::Minus && ci.len() % 2 == 1 {
        -&f
    } else {
        f
    }
}

/// `f_C = x^{C∩I} · ℓ_C(inv_I(x))`.
pub fn circuit_polynomial(cf: &CircuitForm, inv: ElemSet) -> Poly {
    build(cf, inv, Sign::Plus)
}

/// `(-1)^{|C∩I|} · x^{C∩I} · ℓ_C(inv_I^-(x))` where `inv_I^-` sends `x_i ↦ -1/x_i` on `I`.
pub fn circuit_polynomial_minus(cf: &CircuitForm, inv: ElemSet) -> Poly {
    build(cf, inv, Sign::Minus)
}

/// One circuit polynomial per circuit of the matroid of `a`, in circuit order.
pub fn circuit_polynomials(a: &QMatrix, inv: ElemSet, sign: Sign) -> Result<Vec<Poly>> {
    let m = Matroid::from_matrix(a);
    Ok(circuit_forms(a, &m)?.iter().map(|cf| build(cf, inv, sign)).collect())
}

/// Homogenizes with a new variable `x_0` placed at index 0.
pub fn homogenize(f: &Poly) -> Poly {
    let n = f.nvars();
    let d = f.total_degree().unwrap_or(0);
    let terms = f.terms().map(|(m, c)| {
        let mut e = Vec::with_capacity(n + 1);
        e.push(d - m.degree());
        e.extend_from_slice(m.exps());
        (Monomial::new(e), c.clone())
    });
    Poly::from_terms(n + 1, terms).expect("same ring")
}

/// Sets `x_0 = 1` and drops it.
pub fn dehomogenize(f: &Poly) -> Poly {
    f.substitute(&[0], &Rational::one()).drop_variables(&[0])
}

/// Generators of the ideal of `inv_I(L)` (or `inv_I^-(L)`) in `x_1..x_n`,
/// computed independently of the circuits by eliminating auxiliary variables.
///
/// The ring is `t_i (i ∈ I), x_1..x_n`; the ideal is generated by the forms
/// vanishing on `L` evaluated at `t` (with `t_j = x_j` off `I`) and by
/// `x_i t_i ∓ 1`. The result is the reduced grlex Gröbner basis of the
/// elimination ideal, `[1]` when the variety is empty.
pub fn inv_ideal_oracle(a: &QMatrix, inv: ElemSet, sign: Sign, cfg: &GroebnerConfig) -> Result<IdealBasis> {
    let n = a.ncols();
    let ts: Vec<usize> = inv.iter().collect();
    let k = ts.len();
    let nv = k + n;
    let var_of = |j: usize| -> usize {
        match ts.iter().position(|&t| t == j) {
            Some(p) => p,
            None => k + j,
        }
    };
    let mut gens = Vec::new();
    for row in kernel_basis(a).rows() {
        let mut f = Poly::zero(nv);
        for (j, c) in row.iter().enumerate() {
            if !c.is_zero() {
                f = &f + &Poly::monomial(Monomial::var(nv, var_of(j)), c.clone());
            }
        }
        gens.push(f);
    }
    let rhs = match sign {
        Sign::Plus => -Rational::one(),
        Sign::Minus => Rational::one(),
    };
    for (p, &i) in ts.iter().enumerate() {
        let xt = Monomial::from_support(nv, [p, k + i]);
        gens.push(&Poly::monomial(xt, Rational::one()) + &Poly::constant(nv, rhs.clone()));
    }
    let gb = buchberger_with(&IdealBasis::new(nv, gens)?, &MonomialOrder::elimination(k), cfg)?;
    let t_vars: Vec<usize> = (0..k).collect();
    let kept: Vec<Poly> =
        gb.gens().iter().filter(|g| !g.uses_any(&t_vars)).map(|g| g.drop_variables(&t_vars)).collect();
    if kept.iter().any(Poly::is_unit) {
        return Ok(IdealBasis::unit(n));
    }
    IdealBasis::new(n, kept)
}
