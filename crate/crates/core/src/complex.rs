//! Simplicial complexes, the semi-broken circuit complex and the external
//! activity complex.

use std::collections::HashSet;

use num_traits::Signed;

use crate::elements::{maximal_sets, minimal_sets, ElemSet, MAX_ELEMENTS};
use crate::error::{Error, Result};
use crate::exact::QVector;
use crate::matroid::Matroid;

/// A simplicial complex given by its facets over a labeled vertex list.
///
/// `facets == []` is the void complex (no faces at all), which differs from
/// the complex `{∅}` whose only facet is the empty set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    facets: Vec<ElemSet>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FHVectors {
    /// `(f_{-1}, ..., f_{d-1})`.
    pub f: Vec<u64>,
    /// `(h_0, ..., h_d)`.
    pub h: Vec<i64>,
}

impl SimplicialComplex {
    /// Complex generated by `faces`; non-maximal entries are dropped.
    pub fn new(vertices: Vec<String>, faces: &[ElemSet]) -> Result<Self> {
        if vertices.len() > MAX_ELEMENTS {
            return Err(Error::Malformed(format!("at most {MAX_ELEMENTS} vertices are supported")));
        }
        let all = ElemSet::full(vertices.len());
        if faces.iter().any(|f| !f.is_subset(all)) {
            return Err(Error::Malformed("face uses an undeclared vertex".into()));
        }
        Ok(SimplicialComplex { vertices, facets: maximal_sets(faces) })
    }

    pub fn void(vertices: Vec<String>) -> Self {
        SimplicialComplex { vertices, facets: Vec::new() }
    }

    pub fn simplex(vertices: Vec<String>) -> Self {
        let full = ElemSet::full(vertices.len());
        SimplicialComplex { vertices, facets: vec![full] }
    }

    /// The complex whose minimal non-faces are (the minimal members of) `nonfaces`.
    pub fn from_nonfaces(vertices: Vec<String>, nonfaces: &[ElemSet]) -> Self {
        let nonfaces = minimal_sets(nonfaces);
        if nonfaces.contains(&ElemSet::EMPTY) {
            return Self::void(vertices);
        }
        let mut facets = Vec::new();
        let nv = vertices.len();
        grow_facets(nv, &nonfaces, 0, ElemSet::EMPTY, &mut facets);
        facets.sort();
        SimplicialComplex { vertices, facets }
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn facets(&self) -> &[ElemSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_face(&self, s: ElemSet) -> bool {
        self.facets.iter().any(|f| s.is_subset(*f))
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Size of the largest facet; zero for the void complex.
    pub fn max_facet_size(&self) -> usize {
        self.facets.iter().map(|f| f.len()).max().unwrap_or(0)
    }

    /// Labels of the vertices of `s`.
    pub fn labels(&self, s: ElemSet) -> Vec<String> {
        s.iter().map(|i| self.vertices[i].clone()).collect()
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn faces(&self) -> Vec<ElemSet> {
        let mut seen: HashSet<ElemSet> = HashSet::new();
        for f in &self.facets {
            seen.extend(f.subsets());
        }
        let mut out: Vec<ElemSet> = seen.into_iter().collect();
        out.sort();
        out
    }

    /// Cone over a new vertex appended to the vertex list.
    pub fn cone(&self, apex: &str) -> Result<Self> {
        let mut vertices = self.vertices.clone();
        let v = vertices.len();
        if v >= MAX_ELEMENTS {
            return Err(Error::Malformed(format!("at most {MAX_ELEMENTS} vertices are supported")));
        }
        vertices.push(apex.to_string());
        let facets = self.facets.iter().map(|f| f.with(v)).collect();
        Ok(SimplicialComplex { vertices, facets })
    }

    /// `link(σ) = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ}` on the same vertex list.
    pub fn link(&self, sigma: ElemSet) -> Result<Self> {
        if !self.is_face(sigma) {
            return Err(Error::NotAFace);
        }
        let containing: Vec<ElemSet> =
            self.facets.iter().filter(|f| sigma.is_subset(**f)).map(|f| f.difference(sigma)).collect();
        Ok(SimplicialComplex { vertices: self.vertices.clone(), facets: maximal_sets(&containing) })
    }

    pub fn fh_vectors(&self) -> FHVectors {
        let d = self.max_facet_size();
        let mut f = vec![0u64; d + 1];
        for face in self.faces() {
            f[face.len()] += 1;
        }
        let h = (0..=d)
            .map(|k| {
                (0..=k).fold(0i64, |acc, i| {
                    let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                    acc + sign * binomial(d - i, k - i) as i64 * f[i] as i64
                })
            })
            .collect();
        FHVectors { f, h }
    }

    /// Inclusion-minimal non-faces, i.e. the generators of the Stanley-Reisner ideal.
    pub fn sr_generators(&self) -> Vec<ElemSet> {
        if self.is_void() {
            return vec![ElemSet::EMPTY];
        }
        let limit = self.max_facet_size() + 1;
        let mut out = Vec::new();
        let mut stack = vec![(0usize, ElemSet::EMPTY)];
        // extend faces one vertex at a time; a non-face whose facets are all faces is minimal
        while let Some((next, face)) = stack.pop() {
            for v in next..self.vertices.len() {
                let s = face.with(v);
                if self.is_face(s) {
                    if s.len() < limit {
                        stack.push((v + 1, s));
                    }
                } else if s.iter().all(|x| self.is_face(s.without(x))) {
                    out.push(s);
                }
            }
        }
        out.sort();
        out
    }
}

fn grow_facets(nv: usize, nonfaces: &[ElemSet], v: usize, cur: ElemSet, out: &mut Vec<ElemSet>) {
    let blocked = |s: ElemSet| nonfaces.iter().any(|n| n.is_subset(s));
    if v == nv {
        if (0..nv).all(|x| cur.contains(x) || blocked(cur.with(x))) {
            out.push(cur);
        }
        return;
    }
    let with = cur.with(v);
    let can_add = !blocked(with);
    if can_add {
        grow_facets(nv, nonfaces, v + 1, with, out);
    }
    // leaving v out only leads to a facet if some non-face can still block v
    let without_ok = !can_add
        || nonfaces.iter().any(|n| n.contains(v) && n.without(v).difference(cur).iter().all(|x| x > v));
    if without_ok {
        grow_facets(nv, nonfaces, v + 1, cur, out);
    }
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// Total order on the ground set induced by a weight vector with distinct coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementOrder {
    /// `position[i]` is the rank of element `i`, 0 for the smallest.
    position: Vec<usize>,
}

impl ElementOrder {
    pub fn from_weights(w: &QVector) -> Result<Self> {
        let mut idx: Vec<usize> = (0..w.len()).collect();
        idx.sort_by(|&a, &b| w[a].cmp(&w[b]));
        for pair in idx.windows(2) {
            if w[pair[0]] == w[pair[1]] {
                let (a, b) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
                return Err(Error::TiedWeights(a + 1, b + 1));
            }
        }
        let mut position = vec![0; w.len()];
        for (p, &i) in idx.iter().enumerate() {
            position[i] = p;
        }
        Ok(ElementOrder { position })
    }

    /// Like [`from_weights`](Self::from_weights) but also demands `w > 0`.
    pub fn from_positive_weights(w: &QVector) -> Result<Self> {
        if let Some(i) = w.iter().position(|x| !x.is_positive()) {
            return Err(Error::NonPositiveWeight(i + 1));
        }
        Self::from_weights(w)
    }

    pub fn natural(n: usize) -> Self {
        ElementOrder { position: (0..n).collect() }
    }

    pub fn from_positions(position: Vec<usize>) -> Self {
        ElementOrder { position }
    }

    pub fn positions(&self) -> &[usize] {
        &self.position
    }

    pub fn len(&self) -> usize {
        self.position.len()
    }

    pub fn is_empty(&self) -> bool {
        self.position.is_empty()
    }

    pub fn min(&self, s: ElemSet) -> Option<usize> {
        s.iter().min_by_key(|&i| self.position[i])
    }

    pub fn max(&self, s: ElemSet) -> Option<usize> {
        s.iter().max_by_key(|&i| self.position[i])
    }
}

/// `b_I(C)`: `C \ min C` when `C ⊆ I`, otherwise `(C ∩ I) ∪ {max(C \ I)}`.
pub fn i_broken_circuit(c: ElemSet, inv: ElemSet, order: &ElementOrder) -> ElemSet {
    if c.is_subset(inv) {
        match order.min(c) {
            Some(m) => c.without(m),
            None => c,
        }
    } else {
        let top = order.max(c.difference(inv)).expect("C \\ I is nonempty");
        c.intersection(inv).with(top)
    }
}

pub fn i_broken_circuits(m: &Matroid, inv: ElemSet, order: &ElementOrder) -> Vec<ElemSet> {
    let mut out: Vec<ElemSet> = m.circuits().iter().map(|&c| i_broken_circuit(c, inv, order)).collect();
    out.sort();
    out.dedup();
    out
}

pub fn ground_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

fn check_order(m: &Matroid, w: &QVector) -> Result<ElementOrder> {
    if w.len() != m.ground_size() {
        return Err(Error::Malformed(format!(
            "weight vector has length {}, expected {}",
            w.len(),
            m.ground_size()
        )));
    }
    ElementOrder::from_weights(w)
}

fn check_inv(m: &Matroid, inv: ElemSet) -> Result<()> {
    if !inv.is_subset(m.ground_set()) {
        return Err(Error::Malformed("inversion set is not inside the ground set".into()));
    }
    Ok(())
}

/// `Δ_w(M, I)`: subsets of the ground set containing no `I`-broken circuit.
pub fn semi_broken_complex(m: &Matroid, inv: ElemSet, w: &QVector) -> Result<SimplicialComplex> {
    let order = check_order(m, w)?;
    check_inv(m, inv)?;
    Ok(semi_broken_complex_ordered(m, inv, &order))
}

pub fn semi_broken_complex_ordered(m: &Matroid, inv: ElemSet, order: &ElementOrder) -> SimplicialComplex {
    let labels = ground_labels(m.ground_size());
    if m.loop_in(inv).is_some() {
        return SimplicialComplex::void(labels);
    }
    SimplicialComplex::from_nonfaces(labels, &i_broken_circuits(m, inv, order))
}

/// Number of facets of `Δ_w(M, I)` by deletion and contraction of `max_w(I)`.
pub fn facet_count_recursive(m: &Matroid, inv: ElemSet, w: &QVector) -> Result<u64> {
    let order = check_order(m, w)?;
    check_inv(m, inv)?;
    Ok(count_ordered(m, inv, order.positions()))
}

fn count_ordered(m: &Matroid, inv: ElemSet, position: &[usize]) -> u64 {
    let Some(i) = inv.iter().max_by_key(|&i| position[i]) else {
        return 1;
    };
    if m.is_loop(i) {
        return 0;
    }
    let contracted = m.contract(i);
    let on_contraction =
        count_ordered(&contracted.matroid, contracted.transport_set(inv), &contracted.transport(position));
    if m.is_coloop(i) {
        return on_contraction;
    }
    let deleted = m.delete(i);
    on_contraction + count_ordered(&deleted.matroid, deleted.transport_set(inv), &deleted.transport(position))
}

/// Vertex index of `x_i` in the external activity complex.
pub fn x_vertex(i: usize) -> usize {
    i
}

/// Vertex index of `y_i` in the external activity complex on `n` elements.
pub fn y_vertex(n: usize, i: usize) -> usize {
    n + i
}

/// `x_S y_T` as a vertex set of the external activity complex.
pub fn xy_set(n: usize, xs: ElemSet, ys: ElemSet) -> ElemSet {
    xs.iter().map(x_vertex).chain(ys.iter().map(|i| y_vertex(n, i))).collect()
}

/// `B_u(M)` on vertices `x_1..x_n, y_1..y_n` with minimal non-faces
/// `x_{min C} y_{C \ min C}`.
pub fn external_activity_complex(m: &Matroid, u: &QVector) -> Result<SimplicialComplex> {
    let order = check_order(m, u)?;
    let n = m.ground_size();
    if 2 * n > MAX_ELEMENTS {
        return Err(Error::Malformed("ground set too large for the external activity complex".into()));
    }
    let vertices: Vec<String> =
        (1..=n).map(|i| format!("x{i}")).chain((1..=n).map(|i| format!("y{i}"))).collect();
    let nonfaces: Vec<ElemSet> = m
        .circuits()
        .iter()
        .map(|&c| {
            let lo = order.min(c).expect("circuits are nonempty");
            xy_set(n, ElemSet::singleton(lo), c.without(lo))
        })
        .collect();
    Ok(SimplicialComplex::from_nonfaces(vertices, &nonfaces))
}

/// `u_i = w_i` on `I`, `u_j = -w_j` off `I`.
pub fn transported_weights(w: &QVector, inv: ElemSet) -> QVector {
    w.iter().enumerate().map(|(i, x)| if inv.contains(i) { x.clone() } else { -x.clone() }).collect()
}

/// Checks that `Δ_w(M, I)` is the link of `x_I y_{[n] \ I}` in `B_u(M)` under
/// `j ↔ x_j` (`j ∉ I`) and `i ↔ y_i` (`i ∈ I`).
pub fn verify_link_isomorphism(m: &Matroid, inv: ElemSet, w: &QVector) -> Result<bool> {
    check_order(m, w)?;
    ElementOrder::from_positive_weights(w)?;
    check_inv(m, inv)?;
    if let Some(i) = m.loop_in(inv) {
        return Err(Error::LoopInInversionSet(i + 1));
    }
    let n = m.ground_size();
    let delta = semi_broken_complex(m, inv, w)?;
    let b = external_activity_complex(m, &transported_weights(w, inv))?;
    let out = inv.complement(n);
    let sigma = xy_set(n, inv, out);
    let link = match b.link(sigma) {
        Ok(l) => l,
        Err(Error::NotAFace) => return Ok(false),
        Err(e) => return Err(e),
    };
    let back = |f: ElemSet| -> ElemSet { f.iter().map(|v| if v < n { v } else { v - n }).collect() };
    let mut mapped: Vec<ElemSet> = link.facets().iter().map(|&f| back(f)).collect();
    mapped.sort();
    Ok(mapped == delta.facets())
}
