//! Degree, Hilbert series and supports of semi-inverted linear spaces, and
//! the universal Gröbner basis check against the elimination oracle.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::complex::{
    binomial, facet_count_recursive, semi_broken_complex, semi_broken_complex_ordered, ElementOrder,
};
use crate::elements::{minimal_sets, ElemSet};
use crate::error::{Error, Result};
use crate::exact::{QMatrix, QVector, Rational};
use crate::matroid::Matroid;
use crate::poly::{
    buchberger_with, circuit_polynomials, inv_ideal_oracle, is_groebner, reduces_to_zero, GroebnerConfig,
    IdealBasis, Monomial, MonomialOrder, Poly, Sign,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeReport {
    pub by_facets: u64,
    pub by_recursion: u64,
    /// Closed formula, present only for uniform matroids.
    pub by_formula: Option<u64>,
    pub hilbert_h: Vec<i64>,
}

impl DegreeReport {
    pub fn is_consistent(&self) -> bool {
        self.by_facets == self.by_recursion
            && self.by_formula.is_none_or(|f| f == self.by_facets)
            && self.hilbert_h.iter().sum::<i64>() == self.by_facets as i64
    }
}

/// `C(a, b)` with the convention that it vanishes for negative arguments.
fn binom_signed(a: i64, b: i64) -> i64 {
    if a < 0 || b < 0 {
        0
    } else {
        binomial(a as usize, b as usize) as i64
    }
}

/// Degree of `inv_I(L)` for a generic `d`-dimensional `L ⊆ C^n` and `|I| = k`.
pub fn uniform_degree(d: usize, n: usize, k: usize) -> u64 {
    let (d, n, k) = (d as i64, n as i64, k as i64);
    let sum: i64 = (k + d - n..=d).map(|j| binom_signed(k, j)).sum();
    (sum - binom_signed(k - 1, d)) as u64
}

/// Degree of `inv_I(L)` by facet count, by deletion-contraction and, for
/// uniform matroids, by the closed formula.
pub fn degree(m: &Matroid, inv: ElemSet, w: &QVector) -> Result<DegreeReport> {
    let delta = semi_broken_complex(m, inv, w)?;
    let by_recursion = facet_count_recursive(m, inv, w)?;
    let by_formula = m.is_uniform().then(|| uniform_degree(m.rank(), m.ground_size(), inv.len()));
    let hilbert_h = if delta.is_void() { vec![0] } else { delta.fh_vectors().h };
    Ok(DegreeReport { by_facets: delta.facets().len() as u64, by_recursion, by_formula, hilbert_h })
}

/// Numerator `h_0 + h_1 t + ... + h_d t^d` of the affine Hilbert series over `(1-t)^{d+1}`.
pub fn affine_hilbert_numerator(m: &Matroid, inv: ElemSet, w: &QVector) -> Result<Vec<Rational>> {
    let delta = semi_broken_complex(m, inv, w)?;
    if delta.is_void() {
        return Ok(vec![Rational::from_integer(0.into())]);
    }
    Ok(delta.fh_vectors().h.into_iter().map(|h| Rational::from_integer(h.into())).collect())
}

/// Whether some point of `inv_I(L)` has support exactly `S`: `T = S ∪ (ground \ I)`
/// must be a flat of `M` and `T \ S` a flat of `M|_T`. False when `I` contains a loop.
pub fn support_achievable(m: &Matroid, inv: ElemSet, s: ElemSet) -> bool {
    if m.loop_in(inv).is_some() {
        return false;
    }
    let t = s.union(inv.complement(m.ground_size()));
    if !m.is_flat(t) {
        return false;
    }
    let restricted = m.restrict(t);
    restricted.matroid.is_flat(restricted.transport_set(t.difference(s)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportReport {
    pub supports: Vec<ElemSet>,
    /// Set (1-based) when `I` contains a loop; the variety is then empty.
    pub loop_in_inversion_set: Option<usize>,
}

pub fn achievable_supports(m: &Matroid, inv: ElemSet) -> SupportReport {
    if let Some(l) = m.loop_in(inv) {
        return SupportReport { supports: Vec::new(), loop_in_inversion_set: Some(l + 1) };
    }
    let mut supports: Vec<ElemSet> =
        m.ground_set().subsets().filter(|&s| support_achievable(m, inv, s)).collect();
    supports.sort();
    SupportReport { supports, loop_in_inversion_set: None }
}

/// Decides algebraically whether the ideal `J` (in `x_1..x_n`) has a zero with
/// support exactly `S`: with `x_j = 0` off `S`, the product `Π_{i∈S} x_i` must
/// not lie in the radical, tested by `1 ∉ J_S + ⟨1 - z Π x_i⟩`.
pub fn oracle_has_support(j: &IdealBasis, s: ElemSet, cfg: &GroebnerConfig) -> Result<bool> {
    let n = j.nvars();
    let off: Vec<usize> = s.complement(n).iter().collect();
    let zero = Rational::from_integer(0.into());
    let map: Vec<usize> = (0..n).collect();
    let mut gens: Vec<Poly> = j.gens().iter().map(|g| g.substitute(&off, &zero).rename(n + 1, &map)).collect();
    let mut zx = vec![0u32; n + 1];
    for i in s {
        zx[i] = 1;
    }
    zx[n] = 1;
    gens.push(&Poly::one(n + 1) - &Poly::monomial(Monomial::new(zx), Rational::from_integer(1.into())));
    let gb = buchberger_with(&IdealBasis::new(n + 1, gens)?, &MonomialOrder::grlex(), cfg)?;
    Ok(!gb.is_unit())
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportCrossCheck {
    pub agreements: usize,
    /// Supports (1-based) where the flat criterion and the oracle disagree.
    pub contradictions: Vec<Vec<usize>>,
    pub inconclusive: usize,
}

/// Compares the flat criterion with the elimination oracle on every support.
pub fn cross_check_supports(a: &QMatrix, inv: ElemSet, cfg: &GroebnerConfig) -> Result<SupportCrossCheck> {
    let m = Matroid::from_matrix(a);
    let mut out = SupportCrossCheck::default();
    let oracle = match inv_ideal_oracle(a, inv, Sign::Plus, cfg) {
        Ok(o) => o,
        Err(Error::ResourceCutoff(_)) => {
            out.inconclusive = 1 << m.ground_size();
            return Ok(out);
        }
        Err(e) => return Err(e),
    };
    for s in m.ground_set().subsets() {
        match oracle_has_support(&oracle, s, cfg) {
            Ok(alg) if alg == support_achievable(&m, inv, s) => out.agreements += 1,
            Ok(_) => out.contradictions.push(s.to_one_based()),
            Err(Error::ResourceCutoff(_)) => out.inconclusive += 1,
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Inconclusive,
}

impl Outcome {
    fn of(ok: bool) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UgbTrial {
    pub weights: Vec<i64>,
    /// The circuit polynomials pass Buchberger's criterion for the weight order.
    pub s_pairs: Outcome,
    /// Every oracle generator reduces to zero modulo the circuit polynomials.
    pub oracle_in_circuits: Outcome,
    /// Every circuit polynomial reduces to zero modulo the oracle basis.
    pub circuits_in_oracle: Outcome,
    /// The initial forms generate the Stanley-Reisner ideal of `Δ_w(M, I)`.
    pub initial_ideal: Outcome,
}

impl UgbTrial {
    pub fn outcomes(&self) -> [Outcome; 4] {
        [self.s_pairs, self.oracle_in_circuits, self.circuits_in_oracle, self.initial_ideal]
    }

    pub fn passed(&self) -> bool {
        self.outcomes().iter().all(|o| *o == Outcome::Pass)
    }

    pub fn failed(&self) -> bool {
        self.outcomes().contains(&Outcome::Fail)
    }

    pub fn inconclusive(&self) -> bool {
        !self.failed() && self.outcomes().contains(&Outcome::Inconclusive)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UgbReport {
    pub seed: u64,
    pub trials: Vec<UgbTrial>,
}

impl UgbReport {
    pub fn failures(&self) -> usize {
        self.trials.iter().filter(|t| t.failed()).count()
    }

    pub fn inconclusive(&self) -> usize {
        self.trials.iter().filter(|t| t.inconclusive()).count()
    }
}

/// `trials` distinct positive integer weights in `[1, 1000]`.
pub fn random_weights(n: usize, rng: &mut ChaCha8Rng) -> Vec<i64> {
    let pool: Vec<i64> = (1..=1000).collect();
    pool.choose_multiple(rng, n).copied().collect()
}

/// Square-free support of a monomial initial form, if it is one.
fn monomial_support(f: &Poly) -> Option<ElemSet> {
    if f.len() != 1 {
        return None;
    }
    let (m, _) = f.terms().next()?;
    if m.exps().iter().any(|&e| e > 1) {
        return None;
    }
    Some(m.support().into_iter().collect())
}

/// Checks that the circuit polynomials form a universal Gröbner basis of the
/// ideal of `inv_I(L)` for `trials` random weight vectors.
pub fn verify_ugb(a: &QMatrix, inv: ElemSet, trials: usize, seed: u64) -> Result<UgbReport> {
    verify_ugb_with(a, inv, trials, seed, &GroebnerConfig::default())
}

pub fn verify_ugb_with(
    a: &QMatrix,
    inv: ElemSet,
    trials: usize,
    seed: u64,
    cfg: &GroebnerConfig,
) -> Result<UgbReport> {
    let n = a.ncols();
    if !inv.is_subset(ElemSet::full(n)) {
        return Err(Error::Malformed("inversion set is not inside the ground set".into()));
    }
    let m = Matroid::from_matrix(a);
    let fs = circuit_polynomials(a, inv, Sign::Plus)?;
    let oracle = match inv_ideal_oracle(a, inv, Sign::Plus, cfg) {
        Ok(o) => Some(o),
        Err(Error::ResourceCutoff(_)) => None,
        Err(e) => return Err(e),
    };
    let grlex = MonomialOrder::grlex();
    let circuits_in_oracle = match &oracle {
        Some(o) => Outcome::of(fs.iter().all(|f| reduces_to_zero(f, o.gens(), &grlex))),
        None => Outcome::Inconclusive,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(trials);
    for _ in 0..trials {
        let w = random_weights(n, &mut rng);
        let wq = QVector::from_i64(&w);
        let ord = MonomialOrder::weight(&wq)?;
        let s_pairs = Outcome::of(is_groebner(&fs, &ord));
        let oracle_in_circuits = match &oracle {
            Some(o) => Outcome::of(o.gens().iter().all(|g| reduces_to_zero(g, &fs, &ord))),
            None => Outcome::Inconclusive,
        };
        let order = ElementOrder::from_weights(&wq)?;
        let delta = semi_broken_complex_ordered(&m, inv, &order);
        let initial: Option<Vec<ElemSet>> = fs.iter().map(|f| monomial_support(&f.initial_form(&wq))).collect();
        let initial_ideal = Outcome::of(initial.is_some_and(|s| minimal_sets(&s) == delta.sr_generators()));
        out.push(UgbTrial { weights: w, s_pairs, oracle_in_circuits, circuits_in_oracle, initial_ideal });
    }
    Ok(UgbReport { seed, trials: out })
}
