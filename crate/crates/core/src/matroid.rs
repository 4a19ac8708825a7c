//! Matroids represented by their explicit list of circuits.

use num_traits::{One, Zero};

use crate::elements::{minimal_sets, ElemSet, MAX_ELEMENTS};
use crate::error::{Error, Result};
use crate::exact::{kernel_basis, QMatrix, QVector};

/// A matroid on `{0, ..., n-1}` with its circuits stored in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matroid {
    n: usize,
    rank: usize,
    circuits: Vec<ElemSet>,
}

/// The linear form `ℓ_C` vanishing on `L` whose support is exactly the circuit `C`,
/// scaled so that its lowest-index coefficient is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircuitForm {
    pub circuit: ElemSet,
    pub coeffs: QVector,
}

/// A deletion, contraction or restriction together with the relabeling of
/// the surviving elements onto `0..m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Minor {
    pub matroid: Matroid,
    pub old_to_new: Vec<Option<usize>>,
}

impl Minor {
    /// Moves per-element data (weights, labels) onto the minor's ground set.
    pub fn transport<T: Clone>(&self, values: &[T]) -> Vec<T> {
        let mut out: Vec<Option<T>> = vec![None; self.matroid.n];
        for (old, new) in self.old_to_new.iter().enumerate() {
            if let Some(new) = new {
                out[*new] = Some(values[old].clone());
            }
        }
        out.into_iter().map(|v| v.expect("relabeling is onto")).collect()
    }

    pub fn transport_set(&self, s: ElemSet) -> ElemSet {
        s.relabel(&self.old_to_new)
    }

    /// Original label of each element of the minor.
    pub fn new_to_old(&self) -> Vec<usize> {
        let mut out = vec![0; self.matroid.n];
        for (old, new) in self.old_to_new.iter().enumerate() {
            if let Some(new) = new {
                out[*new] = old;
            }
        }
        out
    }
}

impl Matroid {
    /// Builds a matroid from hand-entered circuits, checking the circuit axioms.
    pub fn from_circuits(n: usize, circuits: Vec<ElemSet>) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::Malformed(format!("ground set larger than {MAX_ELEMENTS}")));
        }
        let full = ElemSet::full(n);
        if circuits.iter().any(|c| c.is_empty() || !c.is_subset(full)) {
            return Err(Error::Malformed("circuits must be nonempty subsets of the ground set".into()));
        }
        let mut sorted = circuits.clone();
        sorted.sort();
        sorted.dedup();
        if minimal_sets(&sorted) != sorted {
            return Err(Error::Malformed("circuits do not form an antichain".into()));
        }
        // circuit elimination: for C1 != C2 and e in both, some circuit avoids e inside C1 ∪ C2
        for (i, &c1) in sorted.iter().enumerate() {
            for &c2 in &sorted[i + 1..] {
                for e in c1.intersection(c2) {
                    let room = c1.union(c2).without(e);
                    if !sorted.iter().any(|c| c.is_subset(room)) {
                        return Err(Error::Malformed(format!(
                            "circuit elimination fails for {c1} and {c2} at {}",
                            e + 1
                        )));
                    }
                }
            }
        }
        Ok(Self::from_sorted_circuits(n, sorted))
    }

    fn from_sorted_circuits(n: usize, circuits: Vec<ElemSet>) -> Self {
        let mut m = Matroid { n, rank: 0, circuits };
        m.rank = m.rank_of(ElemSet::full(n));
        m
    }

    /// The matroid of the column vectors of `a`.
    pub fn from_matrix(a: &QMatrix) -> Self {
        let n = a.ncols();
        assert!(n <= MAX_ELEMENTS, "ground set too large");
        let mut circuits: Vec<ElemSet> = Vec::new();
        // subsets by increasing size; a dependent set containing no known circuit is a circuit
        let mut by_size: Vec<Vec<ElemSet>> = vec![Vec::new(); n + 1];
        for s in ElemSet::full(n).subsets() {
            by_size[s.len()].push(s);
        }
        let max_size = (a.rank() + 1).min(n);
        for size in 1..=max_size {
            for &s in &by_size[size] {
                if circuits.iter().any(|c| c.is_subset(s)) {
                    continue;
                }
                let cols: Vec<usize> = s.iter().collect();
                if a.select_columns(&cols).rank() < size {
                    circuits.push(s);
                }
            }
        }
        circuits.sort();
        Self::from_sorted_circuits(n, circuits)
    }

    /// The uniform matroid `U_{r,n}`.
    pub fn uniform(rank: usize, n: usize) -> Self {
        assert!(rank <= n);
        let mut circuits: Vec<ElemSet> = if rank < n {
            ElemSet::full(n).subsets().filter(|s| s.len() == rank + 1).collect()
        } else {
            Vec::new()
        };
        circuits.sort();
        Matroid { n, rank, circuits }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn circuits(&self) -> &[ElemSet] {
        &self.circuits
    }

    pub fn ground_set(&self) -> ElemSet {
        ElemSet::full(self.n)
    }

    pub fn is_independent(&self, s: ElemSet) -> bool {
        !self.circuits.iter().any(|c| c.is_subset(s))
    }

    /// Size of a maximal independent subset of `s` (greedy).
    pub fn rank_of(&self, s: ElemSet) -> usize {
        let mut indep = ElemSet::EMPTY;
        for i in s {
            let next = indep.with(i);
            if self.is_independent(next) {
                indep = next;
            }
        }
        indep.len()
    }

    pub fn closure(&self, s: ElemSet) -> ElemSet {
        let r = self.rank_of(s);
        self.ground_set().iter().filter(|&i| s.contains(i) || self.rank_of(s.with(i)) == r).collect()
    }

    pub fn is_flat(&self, s: ElemSet) -> bool {
        let r = self.rank_of(s);
        self.ground_set().difference(s).iter().all(|i| self.rank_of(s.with(i)) > r)
    }

    pub fn is_loop(&self, i: usize) -> bool {
        self.circuits.contains(&ElemSet::singleton(i))
    }

    /// Elements lying in no circuit, equivalently in every basis.
    pub fn is_coloop(&self, i: usize) -> bool {
        i < self.n && !self.circuits.iter().any(|c| c.contains(i))
    }

    pub fn loops(&self) -> ElemSet {
        self.ground_set().iter().filter(|&i| self.is_loop(i)).collect()
    }

    pub fn coloops(&self) -> ElemSet {
        self.ground_set().iter().filter(|&i| self.is_coloop(i)).collect()
    }

    pub fn bases(&self) -> Vec<ElemSet> {
        let mut out: Vec<ElemSet> = self
            .ground_set()
            .subsets()
            .filter(|s| s.len() == self.rank && self.is_independent(*s))
            .collect();
        out.sort();
        out
    }

    /// True for `U_{r,n}`: the circuits are exactly the `(r+1)`-subsets.
    pub fn is_uniform(&self) -> bool {
        *self == Matroid::uniform(self.rank, self.n)
    }

    fn relabeled(&self, keep: ElemSet, circuits: Vec<ElemSet>) -> Minor {
        let mut old_to_new = vec![None; self.n];
        for (new, old) in keep.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        let mut circuits: Vec<ElemSet> = circuits.into_iter().map(|c| c.relabel(&old_to_new)).collect();
        circuits.sort();
        circuits.dedup();
        Minor { matroid: Self::from_sorted_circuits(keep.len(), circuits), old_to_new }
    }

    /// `M \ i`: the circuits avoiding `i`.
    pub fn delete(&self, i: usize) -> Minor {
        let keep = self.ground_set().without(i);
        let circuits = self.circuits.iter().copied().filter(|c| !c.contains(i)).collect();
        self.relabeled(keep, circuits)
    }

    /// `M / i`: the inclusion-minimal sets `C \ i`. Contracting a loop deletes it.
    pub fn contract(&self, i: usize) -> Minor {
        if self.is_loop(i) {
            return self.delete(i);
        }
        let keep = self.ground_set().without(i);
        let shrunk: Vec<ElemSet> = self.circuits.iter().map(|c| c.without(i)).collect();
        self.relabeled(keep, minimal_sets(&shrunk))
    }

    /// `M|_S`: the circuits contained in `S`.
    pub fn restrict(&self, s: ElemSet) -> Minor {
        let circuits = self.circuits.iter().copied().filter(|c| c.is_subset(s)).collect();
        self.relabeled(s, circuits)
    }

    /// First element of `s` (in index order) that is a loop.
    pub fn loop_in(&self, s: ElemSet) -> Option<usize> {
        s.iter().find(|&i| self.is_loop(i))
    }
}

/// One normalized linear form per circuit of `m`, computed from the matrix `a`.
pub fn circuit_forms(a: &QMatrix, m: &Matroid) -> Result<Vec<CircuitForm>> {
    m.circuits()
        .iter()
        .map(|&c| {
            let cols: Vec<usize> = c.iter().collect();
            let k = kernel_basis(&a.select_columns(&cols));
            let fail = || Error::InconsistentCircuit(c.to_one_based());
            if k.nrows() != 1 {
                return Err(fail());
            }
            let local = k.row(0);
            if local.iter().any(Zero::is_zero) {
                return Err(fail());
            }
            let scale = local[0].recip();
            let mut coeffs = QVector::zeros(a.ncols());
            let mut entries = coeffs.clone().into_entries();
            for (&j, x) in cols.iter().zip(local.iter()) {
                entries[j] = x * &scale;
            }
            coeffs = QVector::new(entries);
            debug_assert!(coeffs[cols[0]].is_one());
            Ok(CircuitForm { circuit: c, coeffs })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(xs: &[usize]) -> ElemSet {
        ElemSet::from_one_based(xs, 64).unwrap()
    }

    pub(crate) fn example() -> QMatrix {
        QMatrix::from_i64(&[&[1, 0, 0, 1, 1], &[0, 1, 0, 1, 0], &[0, 0, 1, 0, 1]])
    }

    #[test]
    fn example_circuits() {
        let m = Matroid::from_matrix(&example());
        assert_eq!(m.circuits(), &[set(&[1, 2, 4]), set(&[1, 3, 5]), set(&[2, 3, 4, 5])]);
        assert_eq!(m.rank(), 3);
        assert_eq!(m.rank_of(set(&[1, 2, 4])), 2);
        assert!(m.loops().is_empty());
        assert!(m.coloops().is_empty());
    }

    #[test]
    fn zero_column_is_loop() {
        let a = QMatrix::from_i64(&[&[1, 0, 2], &[0, 0, 1]]);
        let m = Matroid::from_matrix(&a);
        assert!(m.is_loop(1));
        assert!(m.circuits().contains(&set(&[2])));
    }

    #[test]
    fn generic_matrix_is_uniform() {
        let a = QMatrix::from_i64(&[&[1, 1, 1, 1, 1], &[1, 2, 3, 4, 5], &[1, 4, 9, 16, 25]]);
        let m = Matroid::from_matrix(&a);
        assert_eq!(m, Matroid::uniform(3, 5));
        assert!(m.is_uniform());
        assert!(m.coloops().is_empty());
        assert!(m.is_flat(ElemSet::EMPTY));
    }

    #[test]
    fn example_forms() {
        let a = example();
        let m = Matroid::from_matrix(&a);
        let forms = circuit_forms(&a, &m).unwrap();
        assert_eq!(forms[0].coeffs, QVector::from_i64(&[1, 1, 0, -1, 0]));
        assert_eq!(forms[1].coeffs, QVector::from_i64(&[1, 0, 1, 0, -1]));
        assert_eq!(forms[2].coeffs, QVector::from_i64(&[0, 1, -1, -1, 1]));
        for f in &forms {
            assert!(a.mul_vec(&f.coeffs).is_zero());
        }
    }

    #[test]
    fn loop_form_is_unit_vector() {
        let a = QMatrix::from_i64(&[&[1, 0, 2], &[0, 0, 1]]);
        let m = Matroid::from_matrix(&a);
        let forms = circuit_forms(&a, &m).unwrap();
        let f = forms.iter().find(|f| f.circuit == set(&[2])).unwrap();
        assert_eq!(f.coeffs, QVector::unit(3, 1));
    }

    #[test]
    fn mismatched_circuits_are_rejected() {
        let a = example();
        let fake = Matroid::uniform(3, 5);
        assert!(matches!(circuit_forms(&a, &fake), Err(Error::InconsistentCircuit(_))));
    }

    #[test]
    fn delete_uniform() {
        let m = Matroid::uniform(3, 5);
        let minor = m.delete(4);
        assert_eq!(minor.matroid, Matroid::uniform(3, 4));
        assert_eq!(minor.old_to_new[4], None);
    }

    #[test]
    fn contract_example() {
        let m = Matroid::from_matrix(&example());
        let minor = m.contract(2);
        // 124, 15 and 245 are pairwise incomparable; relabel 1,2,4,5 -> 1,2,3,4
        assert_eq!(minor.matroid.circuits(), &[set(&[1, 2, 3]), set(&[1, 4]), set(&[2, 3, 4])]);
        let rows = QMatrix::from_i64(&[&[1, 0, 1, 1], &[0, 1, 1, 0]]);
        assert_eq!(minor.matroid, Matroid::from_matrix(&rows));
        assert_eq!(minor.new_to_old(), vec![0, 1, 3, 4]);
    }

    #[test]
    fn contract_loop_is_delete() {
        let a = QMatrix::from_i64(&[&[1, 0, 2], &[0, 0, 1]]);
        let m = Matroid::from_matrix(&a);
        assert_eq!(m.contract(1), m.delete(1));
    }

    #[test]
    fn abstract_circuits_are_validated() {
        assert!(Matroid::from_circuits(3, vec![set(&[1, 2]), set(&[1, 2, 3])]).is_err());
        // {1,2} and {2,3} force a circuit inside {1,3}
        assert!(Matroid::from_circuits(3, vec![set(&[1, 2]), set(&[2, 3])]).is_err());
        let m = Matroid::from_circuits(3, vec![set(&[1, 2]), set(&[2, 3]), set(&[1, 3])]).unwrap();
        assert_eq!(m.rank(), 1);
    }

    fn random_matrix() -> impl Strategy<Value = QMatrix> {
        (1usize..4, 1usize..7).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(-2i64..=2, c), r).prop_map(move |rows| {
                QMatrix::new(c, rows.iter().map(|r| QVector::from_i64(r)).collect()).unwrap()
            })
        })
    }

    /// The row space of `a` intersected with `{x_i = 0}`, as a matrix on the other coordinates.
    fn intersect_coordinate(a: &QMatrix, i: usize) -> QMatrix {
        // coefficient vectors c with (cᵀA)_i = 0 form ker of column i (as a 1×d map)
        let combos = kernel_basis(&QMatrix::new(a.nrows(), vec![a.column(i)]).unwrap());
        let keep: Vec<usize> = (0..a.ncols()).filter(|&j| j != i).collect();
        let rows = combos.rows().iter().map(|c| a.left_mul_vec(c)).collect();
        QMatrix::new(a.ncols(), rows).unwrap().select_columns(&keep)
    }

    proptest! {
        #[test]
        fn circuits_are_minimal_dependent(a in random_matrix()) {
            let m = Matroid::from_matrix(&a);
            prop_assert_eq!(minimal_sets(m.circuits()), m.circuits().to_vec());
            prop_assert_eq!(m.rank(), a.rank());
            for &c in m.circuits() {
                prop_assert_eq!(m.rank_of(c), c.len() - 1);
                for e in c {
                    prop_assert!(m.is_independent(c.without(e)));
                }
            }
            for f in circuit_forms(&a, &m).unwrap() {
                prop_assert!(a.mul_vec(&f.coeffs).is_zero());
                prop_assert_eq!(f.coeffs.support(), f.circuit.iter().collect::<Vec<_>>());
            }
        }

        #[test]
        fn minors_match_projection_and_intersection(a in random_matrix(), pick in 0usize..6) {
            let m = Matroid::from_matrix(&a);
            let i = pick % a.ncols();
            let keep: Vec<usize> = (0..a.ncols()).filter(|&j| j != i).collect();
            let projected = Matroid::from_matrix(&a.select_columns(&keep));
            prop_assert_eq!(&m.delete(i).matroid, &projected);
            let intersected = Matroid::from_matrix(&intersect_coordinate(&a, i));
            prop_assert_eq!(&m.contract(i).matroid, &intersected);
        }
    }
}
