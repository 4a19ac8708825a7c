//! JSON shapes for inputs and reports. Rationals are strings `"p/q"` (or
//! `"p"`), element labels are 1-based.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arrangement::{Census, RegionReport};
use crate::complex::{FHVectors, SimplicialComplex};
use crate::elements::ElemSet;
use crate::error::{Error, Result};
use crate::exact::{format_rational, parse_rational, QMatrix, QVector, Rational};
use crate::matroid::Matroid;
use crate::poly::{MonomialOrder, Poly};

/// A rational that serializes as a string.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Q(pub Rational);

impl Serialize for Q {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for Q {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        // integers are accepted as well as strings
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Str(String),
            Int(i64),
        }
        match Raw::deserialize(de)? {
            Raw::Str(s) => parse_rational(&s).map(Q).map_err(serde::de::Error::custom),
            Raw::Int(i) => Ok(Q(Rational::from_integer(i.into()))),
        }
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(&self.0))
    }
}

pub fn qs(v: &QVector) -> Vec<Q> {
    v.iter().cloned().map(Q).collect()
}

pub fn qvector(v: &[Q]) -> QVector {
    v.iter().map(|q| q.0.clone()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemInput {
    pub matrix: Vec<Vec<Q>>,
    #[serde(rename = "I", default)]
    pub inv: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w: Option<Vec<Q>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u: Option<Vec<Q>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl ProblemInput {
    pub fn matrix(&self) -> Result<QMatrix> {
        if self.matrix.is_empty() {
            return Err(Error::Malformed("matrix has no rows".into()));
        }
        let rows: Vec<QVector> = self.matrix.iter().map(|r| qvector(r)).collect();
        QMatrix::from_rows(rows)
    }

    pub fn n(&self) -> usize {
        self.matrix.first().map_or(0, Vec::len)
    }

    pub fn inversion_set(&self) -> Result<ElemSet> {
        let n = self.n();
        let mut seen = ElemSet::EMPTY;
        for &i in &self.inv {
            let s = ElemSet::from_one_based(&[i], n)?;
            if seen.intersection(s) != ElemSet::EMPTY {
                return Err(Error::Malformed(format!("element {i} repeated in I")));
            }
            seen = seen.union(s);
        }
        Ok(seen)
    }

    /// `w`, or `(1, 2, ..., n)` when absent.
    pub fn weights(&self) -> Result<QVector> {
        let n = self.n();
        match &self.w {
            Some(w) if w.len() != n => Err(Error::Malformed(format!("w has length {}, expected {n}", w.len()))),
            Some(w) => Ok(qvector(w)),
            None => Ok((1..=n as i64).map(|i| Rational::from_integer(i.into())).collect()),
        }
    }

    /// `u`, or a pseudo-random offset drawn from `seed` when absent.
    pub fn offset(&self, seed: u64) -> Result<QVector> {
        let n = self.n();
        match &self.u {
            Some(u) if u.len() != n => Err(Error::Malformed(format!("u has length {}, expected {n}", u.len()))),
            Some(u) => Ok(qvector(u)),
            None => Ok(crate::arrangement::random_offset(n, seed)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatroidJson {
    pub n: usize,
    pub rank: usize,
    pub circuits: Vec<ElemSet>,
}

impl From<&Matroid> for MatroidJson {
    fn from(m: &Matroid) -> Self {
        MatroidJson { n: m.ground_size(), rank: m.rank(), circuits: m.circuits().to_vec() }
    }
}

impl MatroidJson {
    pub fn to_matroid(&self) -> Result<Matroid> {
        let m = Matroid::from_circuits(self.n, self.circuits.clone())?;
        if m.rank() != self.rank {
            return Err(Error::Malformed(format!("rank {} does not match the circuits", self.rank)));
        }
        Ok(m)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub vertices: Vec<String>,
    /// Facets as 1-based vertex indices.
    pub facets: Vec<ElemSet>,
}

impl From<&SimplicialComplex> for ComplexJson {
    fn from(c: &SimplicialComplex) -> Self {
        let mut facets = c.facets().to_vec();
        facets.sort();
        ComplexJson { vertices: c.vertices().to_vec(), facets }
    }
}

impl ComplexJson {
    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        if self.facets.is_empty() {
            return Ok(SimplicialComplex::void(self.vertices.clone()));
        }
        SimplicialComplex::new(self.vertices.clone(), &self.facets)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FHJson {
    pub f: Vec<u64>,
    pub h: Vec<i64>,
}

impl From<&FHVectors> for FHJson {
    fn from(v: &FHVectors) -> Self {
        FHJson { f: v.f.clone(), h: v.h.clone() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coef: Q,
}

/// Terms in decreasing graded lex order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PolyJson(pub Vec<TermJson>);

impl From<&Poly> for PolyJson {
    fn from(f: &Poly) -> Self {
        let ord = MonomialOrder::grlex();
        let mut terms: Vec<_> = f.terms().collect();
        terms.sort_by(|a, b| ord.cmp(b.0, a.0));
        PolyJson(terms.into_iter().map(|(m, c)| TermJson { exp: m.exps().to_vec(), coef: Q(c.clone()) }).collect())
    }
}

impl PolyJson {
    pub fn to_poly(&self, nvars: usize) -> Result<Poly> {
        Poly::from_terms(
            nvars,
            self.0.iter().map(|t| (crate::poly::Monomial::new(t.exp.clone()), t.coef.0.clone())),
        )
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegionJson {
    pub pattern: String,
    pub witness: Vec<Q>,
    pub recession_trivial: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub real_point: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
}

impl From<&RegionReport> for RegionJson {
    fn from(r: &RegionReport) -> Self {
        RegionJson {
            pattern: r.pattern.to_string(),
            witness: qs(&r.witness),
            recession_trivial: r.recession_trivial,
            real_point: r.real_point.clone(),
            residual: r.residual,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CensusJson {
    #[serde(rename = "I")]
    pub inv: ElemSet,
    pub u: Vec<Q>,
    pub degree: u64,
    pub regions: usize,
    pub qualifying: usize,
    pub bounded: usize,
    pub points: usize,
    pub max_residual: f64,
    pub min_separation: Option<f64>,
    pub region_reports: Vec<RegionJson>,
}

impl CensusJson {
    pub fn new(inv: ElemSet, u: &QVector, c: &Census) -> Self {
        CensusJson {
            inv,
            u: qs(u),
            degree: c.degree,
            regions: c.regions.len(),
            qualifying: c.qualifying,
            bounded: c.bounded,
            points: c.points().len(),
            max_residual: c.max_residual,
            min_separation: c.min_separation,
            region_reports: c.regions.iter().map(RegionJson::from).collect(),
        }
    }
}
