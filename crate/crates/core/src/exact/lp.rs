//! Exact linear feasibility via a two-phase rational simplex with Bland's rule.

use num_traits::{One, Signed, Zero};

use super::matrix::QVector;
use super::rational::Rational;

/// A system of linear constraints over `R^dim`:
/// equalities `a·x = b`, strict inequalities `a·x > b`, weak inequalities `a·x ≥ b`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinearSystem {
    dim: usize,
    pub equalities: Vec<(QVector, Rational)>,
    pub strict: Vec<(QVector, Rational)>,
    pub weak: Vec<(QVector, Rational)>,
}

impl LinearSystem {
    pub fn new(dim: usize) -> Self {
        LinearSystem { dim, ..Default::default() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn equal(&mut self, a: QVector, b: Rational) -> &mut Self {
        assert_eq!(a.len(), self.dim, "constraint dimension");
        self.equalities.push((a, b));
        self
    }

    pub fn gt(&mut self, a: QVector, b: Rational) -> &mut Self {
        assert_eq!(a.len(), self.dim, "constraint dimension");
        self.strict.push((a, b));
        self
    }

    pub fn ge(&mut self, a: QVector, b: Rational) -> &mut Self {
        assert_eq!(a.len(), self.dim, "constraint dimension");
        self.weak.push((a, b));
        self
    }

    /// `a·x < b`, stored as `-a·x > -b`.
    pub fn lt(&mut self, a: QVector, b: Rational) -> &mut Self {
        let neg = a.scaled(&-Rational::one());
        self.gt(neg, -b)
    }

    pub fn le(&mut self, a: QVector, b: Rational) -> &mut Self {
        let neg = a.scaled(&-Rational::one());
        self.ge(neg, -b)
    }

    /// True iff `x` satisfies every constraint exactly.
    pub fn is_satisfied_by(&self, x: &QVector) -> bool {
        x.len() == self.dim
            && self.equalities.iter().all(|(a, b)| &a.dot(x) == b)
            && self.strict.iter().all(|(a, b)| &a.dot(x) > b)
            && self.weak.iter().all(|(a, b)| &a.dot(x) >= b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { x: Vec<Rational>, value: Rational },
    Infeasible,
    Unbounded,
}

/// Returns an exact rational point satisfying every constraint, or `None`.
///
/// Strict inequalities share one slack `t` (capped at 1) that is maximized;
/// the system is feasible iff the optimum is positive.
pub fn lp_feasible(sys: &LinearSystem) -> Option<QVector> {
    let d = sys.dim;
    let has_strict = !sys.strict.is_empty();
    let n_slack = sys.weak.len() + sys.strict.len();
    // columns: p (d) | q (d) | t | slacks | cap slack
    let t_col = 2 * d;
    let slack0 = t_col + usize::from(has_strict);
    let cap_col = slack0 + n_slack;
    let nv = cap_col + usize::from(has_strict);

    let mut a = Vec::new();
    let mut b = Vec::new();
    let split = |coef: &QVector| {
        let mut row = vec![Rational::zero(); nv];
        for (j, c) in coef.iter().enumerate() {
            row[j] = c.clone();
            row[d + j] = -c.clone();
        }
        row
    };
    for (coef, rhs) in &sys.equalities {
        a.push(split(coef));
        b.push(rhs.clone());
    }
    let mut s = slack0;
    for (coef, rhs) in &sys.weak {
        let mut row = split(coef);
        row[s] = -Rational::one();
        s += 1;
        a.push(row);
        b.push(rhs.clone());
    }
    for (coef, rhs) in &sys.strict {
        let mut row = split(coef);
        row[t_col] = -Rational::one();
        row[s] = -Rational::one();
        s += 1;
        a.push(row);
        b.push(rhs.clone());
    }
    let mut c = vec![Rational::zero(); nv];
    if has_strict {
        let mut row = vec![Rational::zero(); nv];
        row[t_col] = Rational::one();
        row[cap_col] = Rational::one();
        a.push(row);
        b.push(Rational::one());
        c[t_col] = Rational::one();
    }

    match maximize(&a, &b, &c) {
        LpOutcome::Optimal { x, value } => {
            if has_strict && !value.is_positive() {
                return None;
            }
            let w: QVector = (0..d).map(|j| &x[j] - &x[d + j]).collect();
            debug_assert!(sys.is_satisfied_by(&w));
            Some(w)
        }
        LpOutcome::Infeasible => None,
        // the objective is capped, so only a zero objective could be unbounded and it is not
        LpOutcome::Unbounded => unreachable!("capped feasibility LP reported unbounded"),
    }
}

/// Maximizes `c·y` subject to `A y = b`, `y ≥ 0`.
pub fn maximize(a: &[Vec<Rational>], b: &[Rational], c: &[Rational]) -> LpOutcome {
    let nv = c.len();
    let m = a.len();
    assert_eq!(b.len(), m);
    assert!(a.iter().all(|r| r.len() == nv));

    // Phase 1 tableau: original columns, one artificial per row, rhs.
    let width = nv + m + 1;
    let rhs = nv + m;
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for (i, (ar, br)) in a.iter().zip(b).enumerate() {
        let flip = br.is_negative();
        let mut row = vec![Rational::zero(); width];
        for (j, x) in ar.iter().enumerate() {
            row[j] = if flip { -x.clone() } else { x.clone() };
        }
        row[nv + i] = Rational::one();
        row[rhs] = if flip { -br.clone() } else { br.clone() };
        rows.push(row);
    }
    let basis: Vec<usize> = (nv..nv + m).collect();

    // reduced costs for maximizing -(sum of artificials)
    let mut obj = vec![Rational::zero(); width];
    for row in &rows {
        for j in 0..nv {
            obj[j] += &row[j];
        }
        obj[rhs] += &row[rhs];
    }
    let mut tab = Tableau { rows, obj, basis, rhs };
    let phase1 = tab.run(nv + m);
    debug_assert!(phase1, "phase one is bounded");
    if !tab.obj[rhs].is_zero() {
        return LpOutcome::Infeasible;
    }

    // Drive artificial variables out of the basis; drop redundant rows.
    let mut i = 0;
    while i < tab.rows.len() {
        if tab.basis[i] >= nv {
            if let Some(j) = (0..nv).find(|&j| !tab.rows[i][j].is_zero()) {
                tab.pivot(i, j);
            } else {
                tab.rows.remove(i);
                tab.basis.remove(i);
                continue;
            }
        }
        i += 1;
    }

    // Phase 2 with artificial columns excluded from entering.
    let mut obj = vec![Rational::zero(); width];
    obj[..nv].clone_from_slice(c);
    for (row, &bv) in tab.rows.iter().zip(tab.basis.iter()) {
        let cb = &c[bv];
        if cb.is_zero() {
            continue;
        }
        for (o, x) in obj.iter_mut().zip(row) {
            *o -= cb * x;
        }
    }
    // the basic columns carry zero reduced cost, rhs entry holds -value
    for &bv in tab.basis.iter() {
        obj[bv] = Rational::zero();
    }
    tab.obj = obj;
    if !tab.run(nv) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![Rational::zero(); nv];
    for (row, &bv) in tab.rows.iter().zip(tab.basis.iter()) {
        x[bv] = row[rhs].clone();
    }
    let value = -tab.obj[rhs].clone();
    LpOutcome::Optimal { x, value }
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    obj: Vec<Rational>,
    basis: Vec<usize>,
    rhs: usize,
}

impl Tableau {
    /// Bland's rule iterations over entering columns `0..allowed`.
    /// Returns false if the objective is unbounded.
    fn run(&mut self, allowed: usize) -> bool {
        loop {
            let Some(col) = (0..allowed).find(|&j| self.obj[j].is_positive()) else {
                return true;
            };
            let mut best: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[col].is_positive() {
                    continue;
                }
                let ratio = &row[self.rhs] / &row[col];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            let Some((r, _)) = best else {
                return false;
            };
            self.pivot(r, col);
        }
    }

    fn pivot(&mut self, r: usize, col: usize) {
        let inv = self.rows[r][col].recip();
        for x in self.rows[r].iter_mut() {
            *x *= &inv;
        }
        let prow = self.rows[r].clone();
        let eliminate = |row: &mut Vec<Rational>| {
            if row[col].is_zero() {
                return;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                eliminate(row);
            }
        }
        eliminate(&mut self.obj);
        self.basis[r] = col;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64) -> Rational {
        Rational::from_integer(p.into())
    }

    fn v(x: &[i64]) -> QVector {
        QVector::from_i64(x)
    }

    #[test]
    fn open_interval_is_feasible() {
        let mut sys = LinearSystem::new(1);
        sys.gt(v(&[1]), q(0)).lt(v(&[1]), q(1));
        let w = lp_feasible(&sys).expect("feasible");
        assert!(sys.is_satisfied_by(&w));
    }

    #[test]
    fn contradictory_strict_is_infeasible() {
        let mut sys = LinearSystem::new(1);
        sys.gt(v(&[1]), q(0)).lt(v(&[1]), q(0));
        assert_eq!(lp_feasible(&sys), None);
    }

    #[test]
    fn touching_weak_is_feasible_but_strict_is_not() {
        let mut weak = LinearSystem::new(1);
        weak.ge(v(&[1]), q(0)).le(v(&[1]), q(0));
        assert_eq!(lp_feasible(&weak), Some(v(&[0])));
        let mut strict = LinearSystem::new(1);
        strict.gt(v(&[1]), q(0)).le(v(&[1]), q(0));
        assert_eq!(lp_feasible(&strict), None);
    }

    #[test]
    fn zero_dimensional_systems() {
        let mut ok = LinearSystem::new(0);
        ok.gt(QVector::zeros(0), q(-1));
        assert_eq!(lp_feasible(&ok), Some(QVector::zeros(0)));
        let mut bad = LinearSystem::new(0);
        bad.gt(QVector::zeros(0), q(0));
        assert_eq!(lp_feasible(&bad), None);
        assert_eq!(lp_feasible(&LinearSystem::new(0)), Some(QVector::zeros(0)));
    }

    #[test]
    fn equalities_and_free_variables() {
        // x + y = 3, x - y = -5  => x = -1, y = 4
        let mut sys = LinearSystem::new(2);
        sys.equal(v(&[1, 1]), q(3)).equal(v(&[1, -1]), q(-5));
        assert_eq!(lp_feasible(&sys), Some(v(&[-1, 4])));
    }

    #[test]
    fn redundant_equalities() {
        let mut sys = LinearSystem::new(2);
        sys.equal(v(&[1, 1]), q(1)).equal(v(&[2, 2]), q(2)).gt(v(&[1, 0]), q(5));
        let w = lp_feasible(&sys).unwrap();
        assert!(sys.is_satisfied_by(&w));
    }

    #[test]
    fn maximize_textbook() {
        // max 3x + 2y, x + y + s1 = 4, x + 3y + s2 = 6
        let a = vec![vec![q(1), q(1), q(1), q(0)], vec![q(1), q(3), q(0), q(1)]];
        let b = vec![q(4), q(6)];
        let c = vec![q(3), q(2), q(0), q(0)];
        match maximize(&a, &b, &c) {
            LpOutcome::Optimal { value, x } => {
                assert_eq!(value, q(12));
                assert_eq!(x[0], q(4));
            }
            other => panic!("{other:?}"),
        }
        let unbounded = maximize(&[vec![q(1), q(-1)]], &[q(0)], &[q(1), q(0)]);
        assert_eq!(unbounded, LpOutcome::Unbounded);
    }
}
