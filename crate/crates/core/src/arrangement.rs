//! Regions of `(L⊥ + u) \ {x_i = 0}_{i∈I}`, their recession cones, and the
//! real points of `inv_I^-(L)` recovered by minimizing
//! `½ Σ_{j∉I} x_j² − Σ_{i∈I} log|x_i|` on each region.

use std::fmt;

use nalgebra::{DMatrix, DVector};
use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::facet_count_recursive;
use crate::elements::ElemSet;
use crate::error::{Error, Result};
use crate::exact::{kernel_basis, lp_feasible, rational_to_f64, LinearSystem, QMatrix, QVector, Rational};
use crate::matroid::Matroid;
use crate::poly::{circuit_polynomials, Poly, Sign};

pub const DEFAULT_TOL: f64 = 1e-10;
pub const MAX_NEWTON_ITERATIONS: usize = 200;
const ARMIJO: f64 = 1e-4;

/// `L⊥ + u`, with `L⊥` spanned by the rows of `basis`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSlice {
    basis: QMatrix,
    offset: QVector,
}

impl AffineSlice {
    pub fn new(basis: QMatrix, offset: QVector) -> Result<Self> {
        if basis.ncols() != offset.len() {
            return Err(Error::Malformed(format!(
                "offset has length {}, expected {}",
                offset.len(),
                basis.ncols()
            )));
        }
        if basis.rank() != basis.nrows() {
            return Err(Error::Malformed("slice basis rows are dependent".into()));
        }
        Ok(AffineSlice { basis, offset })
    }

    /// The slice `L⊥ + u` for `L` the row span of `a`.
    pub fn from_matrix(a: &QMatrix, u: QVector) -> Result<Self> {
        Self::new(kernel_basis(a), u)
    }

    pub fn basis(&self) -> &QMatrix {
        &self.basis
    }

    pub fn offset(&self) -> &QVector {
        &self.offset
    }

    pub fn ambient(&self) -> usize {
        self.offset.len()
    }

    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    /// `u + λ·basis`.
    pub fn point(&self, lambda: &QVector) -> QVector {
        self.offset.add(&self.basis.left_mul_vec(lambda))
    }

    fn with_offset(&self, offset: QVector) -> Self {
        AffineSlice { basis: self.basis.clone(), offset }
    }
}

/// A choice of sign on each element of `I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignPattern {
    domain: ElemSet,
    negative: ElemSet,
}

impl SignPattern {
    pub fn new(domain: ElemSet, negative: ElemSet) -> Self {
        assert!(negative.is_subset(domain));
        SignPattern { domain, negative }
    }

    pub fn all_positive(domain: ElemSet) -> Self {
        SignPattern { domain, negative: ElemSet::EMPTY }
    }

    /// Parses a string of `+`/`-`, one character per element of `domain` in increasing order.
    pub fn parse(domain: ElemSet, s: &str) -> Result<Self> {
        if s.chars().count() != domain.len() {
            return Err(Error::Malformed(format!("sign pattern {s:?} does not match |I| = {}", domain.len())));
        }
        let mut negative = ElemSet::EMPTY;
        for (i, c) in domain.iter().zip(s.chars()) {
            match c {
                '+' => {}
                '-' => negative.insert(i),
                _ => return Err(Error::Malformed(format!("bad sign character {c:?}"))),
            }
        }
        Ok(SignPattern { domain, negative })
    }

    pub fn domain(&self) -> ElemSet {
        self.domain
    }

    pub fn negative(&self) -> ElemSet {
        self.negative
    }

    /// `+1` or `-1` on the domain, `0` elsewhere.
    pub fn sign(&self, i: usize) -> i32 {
        if !self.domain.contains(i) {
            0
        } else if self.negative.contains(i) {
            -1
        } else {
            1
        }
    }

    pub fn all(domain: ElemSet) -> impl Iterator<Item = SignPattern> {
        domain.subsets().map(move |negative| SignPattern { domain, negative })
    }
}

impl fmt::Display for SignPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in self.domain {
            write!(f, "{}", if self.negative.contains(i) { '-' } else { '+' })?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RegionReport {
    pub pattern: SignPattern,
    /// Exact interior point of `P_σ` on the slice.
    pub witness: QVector,
    pub recession_trivial: bool,
    pub real_point: Option<Vec<f64>>,
    /// `max_C |f_C^-(p)|` at the real point.
    pub residual: Option<f64>,
}

fn signed(x: &Rational, s: i32) -> Rational {
    if s < 0 {
        -x.clone()
    } else {
        x.clone()
    }
}

/// Interior point of `P_σ` as `λ`, or `None` if the region is empty.
fn region_witness(slice: &AffineSlice, sigma: &SignPattern) -> Option<QVector> {
    let mut sys = LinearSystem::new(slice.dim());
    for i in sigma.domain() {
        let s = sigma.sign(i);
        // σ_i (u_i + λ·b_i) > 0
        let a: QVector = slice.basis.column(i).iter().map(|x| signed(x, s)).collect();
        sys.gt(a, -signed(&slice.offset[i], s));
    }
    lp_feasible(&sys)
}

/// True iff no nonzero `v ∈ L⊥` has `v_j = 0` off `I` and `σ_i v_i ≥ 0` on `I`.
pub fn recession_trivial(slice: &AffineSlice, sigma: &SignPattern) -> bool {
    let inv = sigma.domain();
    let mut sys = LinearSystem::new(slice.dim());
    let mut total = QVector::zeros(slice.dim());
    for j in 0..slice.ambient() {
        let col = slice.basis.column(j);
        if inv.contains(j) {
            let c: QVector = col.iter().map(|x| signed(x, sigma.sign(j))).collect();
            total = total.add(&c);
            sys.ge(c, Rational::zero());
        } else {
            sys.equal(col, Rational::zero());
        }
    }
    sys.equal(total, Rational::from_integer(1.into()));
    lp_feasible(&sys).is_none()
}

/// True iff `P_σ` is bounded, i.e. its recession cone is `{0}`.
pub fn is_bounded(slice: &AffineSlice, sigma: &SignPattern) -> bool {
    let inv = sigma.domain();
    let cols: Vec<usize> = inv.iter().collect();
    if slice.basis.select_columns(&cols).rank() < slice.dim() {
        return false;
    }
    let mut sys = LinearSystem::new(slice.dim());
    let mut total = QVector::zeros(slice.dim());
    for i in inv {
        let c: QVector = slice.basis.column(i).iter().map(|x| signed(x, sigma.sign(i))).collect();
        total = total.add(&c);
        sys.ge(c, Rational::zero());
    }
    sys.equal(total, Rational::from_integer(1.into()));
    lp_feasible(&sys).is_none()
}

/// Nonempty regions without the genericity check, sorted by pattern string.
pub fn regions_unchecked(slice: &AffineSlice, inv: ElemSet) -> Vec<RegionReport> {
    let mut out: Vec<RegionReport> = SignPattern::all(inv)
        .filter_map(|sigma| {
            let lambda = region_witness(slice, &sigma)?;
            Some(RegionReport {
                pattern: sigma,
                witness: slice.point(&lambda),
                recession_trivial: recession_trivial(slice, &sigma),
                real_point: None,
                residual: None,
            })
        })
        .collect();
    out.sort_by_key(|r| r.pattern.to_string());
    out
}

fn signature(regions: &[RegionReport]) -> Vec<(String, bool)> {
    regions.iter().map(|r| (r.pattern.to_string(), r.recession_trivial)).collect()
}

/// Rejects offsets for which a coordinate in `I` vanishes on the whole slice,
/// or whose region census changes under a small random perturbation.
pub fn check_generic(slice: &AffineSlice, inv: ElemSet, seed: u64) -> Result<Vec<RegionReport>> {
    for i in inv {
        if slice.basis.column(i).is_zero() && slice.offset[i].is_zero() {
            return Err(Error::NotGeneric(format!("x{} vanishes on the whole slice", i + 1)));
        }
    }
    let regions = regions_unchecked(slice, inv);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let scale = Rational::new(BigInt::from(1), BigInt::from(1_000_000_000i64));
    let shifted: QVector = slice
        .offset
        .iter()
        .map(|x| x + &scale * Rational::from_integer(rng.gen_range(-1000i64..=1000).into()))
        .collect();
    let perturbed = regions_unchecked(&slice.with_offset(shifted), inv);
    let (a, b) = (signature(&regions), signature(&perturbed));
    if a != b {
        let pattern = a
            .iter()
            .find(|x| !b.contains(x))
            .or_else(|| b.iter().find(|x| !a.contains(x)))
            .map(|(p, _)| p.clone())
            .unwrap_or_default();
        return Err(Error::NotGeneric(format!("region {pattern} is not stable under perturbation of u")));
    }
    Ok(regions)
}

pub const GENERICITY_SEED: u64 = 0x5eed;

/// Every nonempty region `P_σ`, with an exact witness and its recession-cone class.
pub fn enumerate_regions(slice: &AffineSlice, inv: ElemSet) -> Result<Vec<RegionReport>> {
    if !inv.is_subset(ElemSet::full(slice.ambient())) {
        return Err(Error::Malformed("inversion set is not inside the ground set".into()));
    }
    check_generic(slice, inv, GENERICITY_SEED)
}

fn orthonormal_rows(b: &QMatrix) -> DMatrix<f64> {
    let (m, n) = (b.nrows(), b.ncols());
    let bt = DMatrix::from_fn(n, m, |j, r| rational_to_f64(&b[(r, j)]));
    bt.qr().q().transpose()
}

struct Objective<'a> {
    inv: ElemSet,
    sigma: &'a SignPattern,
}

impl Objective<'_> {
    fn inside(&self, x: &DVector<f64>) -> bool {
        self.inv.iter().all(|i| self.sigma.sign(i) as f64 * x[i] > 0.0)
    }

    fn value(&self, x: &DVector<f64>) -> f64 {
        (0..x.len())
            .map(|j| if self.inv.contains(j) { -x[j].abs().ln() } else { 0.5 * x[j] * x[j] })
            .sum()
    }

    /// `∇f = inv_I^-(x)`.
    fn gradient(&self, x: &DVector<f64>) -> DVector<f64> {
        DVector::from_fn(x.len(), |j, _| if self.inv.contains(j) { -1.0 / x[j] } else { x[j] })
    }

    fn hessian_diag(&self, x: &DVector<f64>) -> DVector<f64> {
        DVector::from_fn(x.len(), |j, _| if self.inv.contains(j) { 1.0 / (x[j] * x[j]) } else { 1.0 })
    }
}

/// Newton direction in the ambient space and the directional derivative along it.
fn newton_direction(obj: &Objective, q: &DMatrix<f64>, x: &DVector<f64>, g: &DVector<f64>) -> Option<(DVector<f64>, f64)> {
    let h = q * DMatrix::from_diagonal(&obj.hessian_diag(x)) * q.transpose();
    let delta = -h.cholesky()?.solve(g);
    let slope = g.dot(&delta);
    Some((q.transpose() * delta, slope))
}

/// A few undamped steps past the tolerance while they keep shrinking the gradient.
fn polish(obj: &Objective, q: &DMatrix<f64>, x: &mut DVector<f64>, mut norm: f64) {
    for _ in 0..3 {
        let g = q * obj.gradient(x);
        let Some((dir, _)) = newton_direction(obj, q, x, &g) else {
            return;
        };
        let cand = &*x + dir;
        let next = (q * obj.gradient(&cand)).norm();
        if !obj.inside(&cand) || next >= norm {
            return;
        }
        *x = cand;
        norm = next;
    }
}

/// Damped Newton minimization of `f` over `P_σ`, started at `witness`.
pub fn minimize_region(
    slice: &AffineSlice,
    sigma: &SignPattern,
    witness: &QVector,
    tol: f64,
) -> Result<Vec<f64>> {
    let obj = Objective { inv: sigma.domain(), sigma };
    let mut x = DVector::from_vec(witness.to_f64());
    if !obj.inside(&x) {
        return Err(Error::Malformed(format!("witness is not inside region {sigma}")));
    }
    if slice.dim() == 0 {
        return Ok(x.iter().copied().collect());
    }
    let q = orthonormal_rows(&slice.basis);
    let mut grad_norm = f64::INFINITY;
    for _ in 0..MAX_NEWTON_ITERATIONS {
        let g = &q * obj.gradient(&x);
        grad_norm = g.norm();
        if grad_norm < tol {
            polish(&obj, &q, &mut x, grad_norm);
            return Ok(x.iter().copied().collect());
        }
        let Some((dir, slope)) = newton_direction(&obj, &q, &x, &g) else {
            break;
        };
        let fx = obj.value(&x);
        let mut t = 1.0;
        let mut moved = false;
        while t > 1e-30 {
            let cand = &x + t * &dir;
            // near the optimum the decrease in f drops below rounding, so a smaller gradient also counts
            if obj.inside(&cand)
                && (-slope < 1e-24
                    || obj.value(&cand) <= fx + ARMIJO * t * slope
                    || (&q * obj.gradient(&cand)).norm() < grad_norm)
            {
                x = cand;
                moved = true;
                break;
            }
            t *= 0.5;
        }
        if !moved {
            break;
        }
    }
    let g = &q * obj.gradient(&x);
    if g.norm() < tol {
        polish(&obj, &q, &mut x, g.norm());
        return Ok(x.iter().copied().collect());
    }
    Err(Error::NonConvergence { iterations: MAX_NEWTON_ITERATIONS, gradient_norm: grad_norm.min(g.norm()) })
}

/// `max_C |f_C^-(p)|`.
pub fn residual(polys: &[Poly], p: &[f64]) -> f64 {
    polys.iter().map(|f| f.eval_f64(p).abs()).fold(0.0, f64::max)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Census {
    pub regions: Vec<RegionReport>,
    pub qualifying: usize,
    pub bounded: usize,
    pub degree: u64,
    pub max_residual: f64,
    /// Smallest distance between two recovered points.
    pub min_separation: Option<f64>,
}

impl Census {
    pub fn points(&self) -> Vec<&[f64]> {
        self.regions.iter().filter_map(|r| r.real_point.as_deref()).collect()
    }

    /// Degree, qualifying regions and recovered points agree.
    pub fn is_consistent(&self) -> bool {
        self.degree as usize == self.qualifying && self.points().len() == self.qualifying
    }
}

/// Full census: regions, recession classes, one Newton point per qualifying
/// region, and the degree of `inv_I(L)` for comparison.
pub fn real_point_census(a: &QMatrix, inv: ElemSet, u: &QVector, tol: f64) -> Result<Census> {
    let n = a.ncols();
    if u.len() != n {
        return Err(Error::Malformed(format!("u has length {}, expected {n}", u.len())));
    }
    if !inv.is_subset(ElemSet::full(n)) {
        return Err(Error::Malformed("inversion set is not inside the ground set".into()));
    }
    let m = Matroid::from_matrix(a);
    if let Some(l) = m.loop_in(inv) {
        return Err(Error::LoopInInversionSet(l + 1));
    }
    let slice = AffineSlice::from_matrix(a, u.clone())?;
    let polys = circuit_polynomials(a, inv, Sign::Minus)?;
    let mut regions = enumerate_regions(&slice, inv)?;
    let mut bounded = 0;
    for r in &mut regions {
        if is_bounded(&slice, &r.pattern) {
            bounded += 1;
        }
        if r.recession_trivial {
            let p = minimize_region(&slice, &r.pattern, &r.witness, tol)?;
            r.residual = Some(residual(&polys, &p));
            r.real_point = Some(p);
        }
    }
    let qualifying = regions.iter().filter(|r| r.recession_trivial).count();
    let w: QVector = (1..=n as i64).map(|i| Rational::from_integer(i.into())).collect();
    let degree = facet_count_recursive(&m, inv, &w)?;
    let points: Vec<&Vec<f64>> = regions.iter().filter_map(|r| r.real_point.as_ref()).collect();
    let mut min_separation: Option<f64> = None;
    for (k, p) in points.iter().enumerate() {
        for q in &points[k + 1..] {
            let d = p.iter().zip(q.iter()).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt();
            min_separation = Some(min_separation.map_or(d, |s| s.min(d)));
        }
    }
    let max_residual = regions.iter().filter_map(|r| r.residual).fold(0.0, f64::max);
    Ok(Census { regions, qualifying, bounded, degree, max_residual, min_separation })
}

/// Slice coordinates `λ` of a point `x ≈ u + λ·basis` (least squares).
fn slice_coordinates(slice: &AffineSlice, x: &[f64]) -> DVector<f64> {
    let (m, n) = (slice.dim(), slice.ambient());
    let b = DMatrix::from_fn(m, n, |r, j| rational_to_f64(&slice.basis[(r, j)]));
    let rhs = DVector::from_fn(n, |j, _| x[j] - rational_to_f64(&slice.offset[j]));
    let gram = &b * b.transpose();
    gram.lu().solve(&(&b * rhs)).unwrap_or_else(|| DVector::zeros(m))
}

/// SVG drawing of a 2-dimensional slice: the lines `x_i = 0` in slice
/// coordinates and the recovered points.
pub fn render_svg(slice: &AffineSlice, inv: ElemSet, census: &Census) -> Result<String> {
    if slice.dim() != 2 {
        return Err(Error::Malformed(format!("svg output needs a 2-dimensional slice, got {}", slice.dim())));
    }
    // line i: a·λ = c with a = column i of the basis, c = -u_i
    let lines: Vec<(usize, [f64; 2], f64)> = inv
        .iter()
        .map(|i| {
            let col = slice.basis.column(i);
            (i, [rational_to_f64(&col[0]), rational_to_f64(&col[1])], -rational_to_f64(&slice.offset[i]))
        })
        .filter(|(_, a, _)| a[0] != 0.0 || a[1] != 0.0)
        .collect();
    let mut xs: Vec<[f64; 2]> = Vec::new();
    for (k, (_, a, c)) in lines.iter().enumerate() {
        for (_, b, d) in &lines[k + 1..] {
            let det = a[0] * b[1] - a[1] * b[0];
            if det.abs() > 1e-12 {
                xs.push([(c * b[1] - a[1] * d) / det, (a[0] * d - c * b[0]) / det]);
            }
        }
    }
    let marks: Vec<[f64; 2]> = census
        .points()
        .iter()
        .map(|p| {
            let l = slice_coordinates(slice, p);
            [l[0], l[1]]
        })
        .collect();
    xs.extend(marks.iter().copied());
    let lo = |k: usize| xs.iter().map(|p| p[k]).fold(0.0f64, f64::min) - 1.5;
    let hi = |k: usize| xs.iter().map(|p| p[k]).fold(0.0f64, f64::max) + 1.5;
    let (x0, x1, y0, y1) = (lo(0), hi(0), lo(1), hi(1));
    let size = 400.0;
    let sx = |x: f64| (x - x0) / (x1 - x0) * size;
    let sy = |y: f64| size - (y - y0) / (y1 - y0) * size;
    let mut svg = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{size}\" height=\"{size}\" viewBox=\"0 0 {size} {size}\">\n\
         <rect width=\"{size}\" height=\"{size}\" fill=\"white\"/>\n"
    );
    for (i, a, c) in &lines {
        let mut ends: Vec<[f64; 2]> = Vec::new();
        if a[1].abs() > 1e-12 {
            for x in [x0, x1] {
                let y = (c - a[0] * x) / a[1];
                if (y0..=y1).contains(&y) {
                    ends.push([x, y]);
                }
            }
        }
        if a[0].abs() > 1e-12 {
            for y in [y0, y1] {
                let x = (c - a[1] * y) / a[0];
                if (x0..=x1).contains(&x) {
                    ends.push([x, y]);
                }
            }
        }
        if ends.len() >= 2 {
            let (p, q) = (ends[0], ends[ends.len() - 1]);
            svg += &format!(
                "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"black\" stroke-width=\"1.5\"><title>x{} = 0</title></line>\n",
                sx(p[0]),
                sy(p[1]),
                sx(q[0]),
                sy(q[1]),
                i + 1
            );
        }
    }
    for p in &marks {
        svg += &format!("<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"4\" fill=\"crimson\"/>\n", sx(p[0]), sy(p[1]));
    }
    svg += "</svg>\n";
    Ok(svg)
}

/// Offset with entries `k/100`, `k` uniform in `[-1000, 1000]`.
pub fn random_offset(n: usize, seed: u64) -> QVector {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| Rational::new(BigInt::from(rng.gen_range(-1000i64..=1000)), BigInt::from(100))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn example() -> QMatrix {
        QMatrix::from_i64(&[&[1, 0, 0, 1, 1], &[0, 1, 0, 1, 0], &[0, 0, 1, 0, 1]])
    }

    fn u() -> QVector {
        QVector::from_i64(&[0, 0, 1, 2, 2])
    }

    fn set(xs: &[usize]) -> ElemSet {
        ElemSet::from_one_based(xs, 64).unwrap()
    }

    #[test]
    fn region_counts_of_example() {
        let slice = AffineSlice::from_matrix(&example(), u()).unwrap();
        let r3 = enumerate_regions(&slice, set(&[1, 2, 3])).unwrap();
        assert_eq!(r3.len(), 7);
        assert!(r3.iter().all(|r| r.recession_trivial));
        let r4 = enumerate_regions(&slice, set(&[1, 2, 3, 4])).unwrap();
        assert_eq!(r4.len(), 10);
        assert_eq!(r4.iter().filter(|r| r.recession_trivial).count(), 6);
        let r5 = enumerate_regions(&slice, set(&[1, 2, 3, 4, 5])).unwrap();
        let bounded: Vec<bool> = r5.iter().map(|r| is_bounded(&slice, &r.pattern)).collect();
        assert_eq!(bounded.iter().filter(|b| **b).count(), 4);
        for (r, b) in r5.iter().zip(bounded) {
            assert_eq!(r.recession_trivial, b);
        }
        let all = enumerate_regions(&slice, ElemSet::EMPTY).unwrap();
        assert_eq!(all.len(), 1);
    }

    #[test]
    fn witnesses_are_interior() {
        let slice = AffineSlice::from_matrix(&example(), u()).unwrap();
        let a = example();
        for r in enumerate_regions(&slice, set(&[1, 2, 3, 4, 5])).unwrap() {
            // on the slice: x - u is orthogonal to the rows of A
            assert!(a.mul_vec(&r.witness.sub(&u())).is_zero());
            for i in 0..5 {
                assert!(signed(&r.witness[i], r.pattern.sign(i)).is_positive());
            }
        }
    }

    #[test]
    fn nongeneric_offset_is_reported() {
        // all three lines through the origin
        let slice = AffineSlice::from_matrix(&example(), QVector::from_i64(&[0, 0, 0, 2, 2])).unwrap();
        assert!(matches!(enumerate_regions(&slice, set(&[1, 2, 3])), Err(Error::NotGeneric(_))));
        let flat = AffineSlice::new(QMatrix::zeros(0, 2), QVector::from_i64(&[0, 1])).unwrap();
        assert!(matches!(enumerate_regions(&flat, set(&[1])), Err(Error::NotGeneric(_))));
    }

    #[test]
    fn census_of_example() {
        for (inv, count) in [(set(&[1, 2, 3]), 7), (set(&[1, 2, 3, 4]), 6), (set(&[1, 2, 3, 4, 5]), 4)] {
            let c = real_point_census(&example(), inv, &u(), DEFAULT_TOL).unwrap();
            assert_eq!(c.qualifying, count);
            assert_eq!(c.degree, count as u64);
            assert!(c.is_consistent());
            assert!(c.max_residual < 1e-8, "{}", c.max_residual);
            assert!(c.min_separation.unwrap() > 1e-4);
        }
    }

    #[test]
    fn quadratic_case_is_projection() {
        let slice = AffineSlice::from_matrix(&example(), u()).unwrap();
        let sigma = SignPattern::all_positive(ElemSet::EMPTY);
        let p = minimize_region(&slice, &sigma, &u(), DEFAULT_TOL).unwrap();
        // the minimizer of |x|² on L⊥ + u lies in L = rowspan(A)
        let b = slice.basis();
        for row in b.rows() {
            let dot: f64 = row.to_f64().iter().zip(&p).map(|(a, b)| a * b).sum();
            assert!(dot.abs() < 1e-9);
        }
    }

    #[test]
    fn zero_dimensional_slice() {
        let a = QMatrix::from_i64(&[&[1]]);
        let slice = AffineSlice::from_matrix(&a, QVector::from_i64(&[3])).unwrap();
        assert_eq!(slice.dim(), 0);
        let regions = enumerate_regions(&slice, set(&[1])).unwrap();
        assert_eq!(regions.len(), 1);
        let p = minimize_region(&slice, &regions[0].pattern, &regions[0].witness, DEFAULT_TOL).unwrap();
        assert_eq!(p, vec![3.0]);
    }

    #[test]
    fn pattern_strings() {
        let inv = set(&[1, 3]);
        let p = SignPattern::parse(inv, "+-").unwrap();
        assert_eq!(p.sign(0), 1);
        assert_eq!(p.sign(2), -1);
        assert_eq!(p.sign(1), 0);
        assert_eq!(p.to_string(), "+-");
        assert!(SignPattern::parse(inv, "+").is_err());
    }

    #[test]
    fn svg_has_lines_and_points() {
        let slice = AffineSlice::from_matrix(&example(), u()).unwrap();
        let c = real_point_census(&example(), set(&[1, 2, 3]), &u(), DEFAULT_TOL).unwrap();
        let svg = render_svg(&slice, set(&[1, 2, 3]), &c).unwrap();
        assert_eq!(svg.matches("<line").count(), 3);
        assert_eq!(svg.matches("<circle").count(), 7);
    }
}
