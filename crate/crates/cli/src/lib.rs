//! Subcommands of the `semispace` binary. Each takes a parsed [`ProblemInput`]
//! and returns a serializable report.

use serde::{Deserialize, Serialize};

use semispace::arrangement::{enumerate_regions, real_point_census, render_svg, AffineSlice};
use semispace::complex::{i_broken_circuits, semi_broken_complex, ElementOrder};
use semispace::invspace::{achievable_supports, degree, verify_ugb, DegreeReport, SupportReport, UgbReport};
use semispace::json::{qs, CensusJson, ComplexJson, FHJson, MatroidJson, PolyJson, ProblemInput, RegionJson, Q};
use semispace::matroid::{circuit_forms, Matroid};
use semispace::poly::{circuit_polynomial, circuit_polynomial_minus};
use semispace::{ElemSet, Error, QMatrix, QVector, Result};

pub const DEFAULT_SEED: u64 = 0;
pub const DEFAULT_TRIALS: usize = 5;

/// Options shared by all subcommands.
#[derive(Clone, Debug)]
pub struct Options {
    pub seed: Option<u64>,
    pub tol: f64,
    pub trials: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options { seed: None, tol: semispace::arrangement::DEFAULT_TOL, trials: DEFAULT_TRIALS }
    }
}

impl Options {
    fn seed(&self, input: &ProblemInput) -> u64 {
        self.seed.or(input.seed).unwrap_or(DEFAULT_SEED)
    }
}

pub fn parse_input(text: &str) -> Result<ProblemInput> {
    serde_json::from_str(text).map_err(|e| Error::Malformed(format!("input: {e}")))
}

struct Problem {
    a: QMatrix,
    m: Matroid,
    inv: ElemSet,
    w: QVector,
}

fn problem(input: &ProblemInput) -> Result<Problem> {
    let a = input.matrix()?;
    let inv = input.inversion_set()?;
    let w = input.weights()?;
    // tied weights are rejected before any work
    ElementOrder::from_weights(&w)?;
    let m = Matroid::from_matrix(&a);
    Ok(Problem { a, m, inv, w })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CircuitJson {
    pub circuit: ElemSet,
    pub coeffs: Vec<Q>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatroidReport {
    #[serde(flatten)]
    pub matroid: MatroidJson,
    pub forms: Vec<CircuitJson>,
    pub loops: ElemSet,
    pub coloops: ElemSet,
}

pub fn cmd_matroid(input: &ProblemInput, _opts: &Options) -> Result<MatroidReport> {
    let a = input.matrix()?;
    let m = Matroid::from_matrix(&a);
    let forms = circuit_forms(&a, &m)?
        .into_iter()
        .map(|cf| CircuitJson { circuit: cf.circuit, coeffs: qs(&cf.coeffs) })
        .collect();
    Ok(MatroidReport { matroid: MatroidJson::from(&m), forms, loops: m.loops(), coloops: m.coloops() })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexReport {
    #[serde(rename = "I")]
    pub inv: ElemSet,
    pub w: Vec<Q>,
    pub broken_circuits: Vec<ElemSet>,
    #[serde(flatten)]
    pub complex: ComplexJson,
    #[serde(flatten)]
    pub fh: FHJson,
}

pub fn cmd_complex(input: &ProblemInput, _opts: &Options) -> Result<ComplexReport> {
    let p = problem(input)?;
    let order = ElementOrder::from_weights(&p.w)?;
    let mut broken = i_broken_circuits(&p.m, p.inv, &order);
    broken.sort();
    let d = semi_broken_complex(&p.m, p.inv, &p.w)?;
    Ok(ComplexReport {
        inv: p.inv,
        w: qs(&p.w),
        broken_circuits: broken,
        complex: ComplexJson::from(&d),
        fh: FHJson::from(&d.fh_vectors()),
    })
}

pub fn cmd_degree(input: &ProblemInput, _opts: &Options) -> Result<DegreeReport> {
    let p = problem(input)?;
    if let Some(l) = p.m.loop_in(p.inv) {
        return Err(Error::LoopInInversionSet(l + 1));
    }
    degree(&p.m, p.inv, &p.w)
}

pub fn cmd_supports(input: &ProblemInput, _opts: &Options) -> Result<SupportReport> {
    let a = input.matrix()?;
    let inv = input.inversion_set()?;
    Ok(achievable_supports(&Matroid::from_matrix(&a), inv))
}

pub fn cmd_verify_ugb(input: &ProblemInput, opts: &Options) -> Result<UgbReport> {
    let a = input.matrix()?;
    let inv = input.inversion_set()?;
    verify_ugb(&a, inv, opts.trials, opts.seed(input))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegionsReport {
    #[serde(rename = "I")]
    pub inv: ElemSet,
    pub u: Vec<Q>,
    pub regions: Vec<RegionJson>,
    pub qualifying: usize,
}

pub fn cmd_regions(input: &ProblemInput, opts: &Options) -> Result<RegionsReport> {
    let a = input.matrix()?;
    let inv = input.inversion_set()?;
    if let Some(l) = Matroid::from_matrix(&a).loop_in(inv) {
        return Err(Error::LoopInInversionSet(l + 1));
    }
    let u = input.offset(opts.seed(input))?;
    let slice = AffineSlice::from_matrix(&a, u.clone())?;
    let regions = enumerate_regions(&slice, inv)?;
    Ok(RegionsReport {
        inv,
        u: qs(&u),
        qualifying: regions.iter().filter(|r| r.recession_trivial).count(),
        regions: regions.iter().map(RegionJson::from).collect(),
    })
}

/// The census, plus the SVG drawing when the slice is 2-dimensional and one was requested.
pub fn cmd_realpoints(input: &ProblemInput, opts: &Options, svg: bool) -> Result<(CensusJson, Option<String>)> {
    let a = input.matrix()?;
    let inv = input.inversion_set()?;
    let u = input.offset(opts.seed(input))?;
    let census = real_point_census(&a, inv, &u, opts.tol)?;
    let drawing = if svg {
        Some(render_svg(&AffineSlice::from_matrix(&a, u.clone())?, inv, &census)?)
    } else {
        None
    };
    Ok((CensusJson::new(inv, &u, &census), drawing))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FullReport {
    pub matroid: MatroidJson,
    pub polynomials: Vec<PolyJson>,
    pub polynomials_minus: Vec<PolyJson>,
    pub complex: ComplexReport,
    pub degree: DegreeReport,
    pub supports: SupportReport,
    pub census: CensusJson,
    /// Degree, qualifying regions and recovered points coincide.
    pub consistent: bool,
}

/// Runs every stage and fails with `Inconsistent` if the degree, the number
/// of qualifying regions and the number of recovered points disagree.
pub fn cmd_report(input: &ProblemInput, opts: &Options) -> Result<FullReport> {
    let p = problem(input)?;
    if let Some(l) = p.m.loop_in(p.inv) {
        return Err(Error::LoopInInversionSet(l + 1));
    }
    let forms = circuit_forms(&p.a, &p.m)?;
    let polynomials = forms.iter().map(|cf| PolyJson::from(&circuit_polynomial(cf, p.inv))).collect();
    let polynomials_minus = forms.iter().map(|cf| PolyJson::from(&circuit_polynomial_minus(cf, p.inv))).collect();
    let complex = cmd_complex(input, opts)?;
    let deg = degree(&p.m, p.inv, &p.w)?;
    let supports = achievable_supports(&p.m, p.inv);
    let (census, _) = cmd_realpoints(input, opts, false)?;
    let consistent = deg.is_consistent()
        && deg.by_facets == census.degree
        && census.degree as usize == census.qualifying
        && census.qualifying == census.points;
    if !consistent {
        return Err(Error::Inconsistent(format!(
            "degree {} (facets {}, recursion {}), qualifying regions {}, points {}",
            census.degree, deg.by_facets, deg.by_recursion, census.qualifying, census.points
        )));
    }
    Ok(FullReport {
        matroid: MatroidJson::from(&p.m),
        polynomials,
        polynomials_minus,
        complex,
        degree: deg,
        supports,
        census,
        consistent,
    })
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}
