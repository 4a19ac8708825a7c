//! Acceptance suite: eight end-to-end checks with fixed tolerances and time
//! budgets. Prints one PASS/FAIL line per check and exits nonzero on failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use semispace::arrangement::{real_point_census, DEFAULT_TOL};
use semispace::complex::{
    external_activity_complex, i_broken_circuits, semi_broken_complex, transported_weights, verify_link_isomorphism,
    xy_set, ElementOrder,
};
use semispace::invspace::{achievable_supports, cross_check_supports, degree, verify_ugb, DegreeReport};
use semispace::poly::{
    buchberger, circuit_polynomials, dehomogenize, homogenize, inv_ideal_oracle, reduces_to_zero, weights,
    GroebnerConfig, IdealBasis, Monomial, MonomialOrder, Poly, Sign,
};
use semispace::{ElemSet, Matroid, QMatrix, QVector, Rational};

type Check = Result<String, String>;

fn example() -> QMatrix {
    QMatrix::from_i64(&[&[1, 0, 0, 1, 1], &[0, 1, 0, 1, 0], &[0, 0, 1, 0, 1]])
}

fn set(xs: &[usize]) -> ElemSet {
    ElemSet::from_one_based(xs, 64).unwrap()
}

fn sets(xs: &[&[usize]]) -> Vec<ElemSet> {
    let mut v: Vec<ElemSet> = xs.iter().map(|s| set(s)).collect();
    v.sort();
    v
}

fn sorted(mut v: Vec<ElemSet>) -> Vec<ElemSet> {
    v.sort();
    v
}

fn natural_weights(n: usize) -> QVector {
    QVector::from_i64(&(1..=n as i64).collect::<Vec<_>>())
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn q(p: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(d))
}

/// Random `d × n` matrix of rank `d` with small rational entries.
fn random_matrix(rng: &mut ChaCha8Rng, d: usize, n: usize) -> QMatrix {
    loop {
        let rows: Vec<QVector> = (0..d)
            .map(|_| (0..n).map(|_| q(rng.gen_range(-3..=3), rng.gen_range(1..=2))).collect())
            .collect();
        let a = QMatrix::from_rows(rows).unwrap();
        if a.rank() == d {
            return a;
        }
    }
}

/// Random `d × n` matrix whose matroid is uniform.
fn generic_matrix(rng: &mut ChaCha8Rng, d: usize, n: usize) -> QMatrix {
    loop {
        let rows: Vec<QVector> = (0..d)
            .map(|_| (0..n).map(|_| Rational::from_integer(rng.gen_range(-60i64..=60).into())).collect())
            .collect();
        let a = QMatrix::from_rows(rows).unwrap();
        if Matroid::from_matrix(&a).is_uniform() {
            return a;
        }
    }
}

fn random_subset(rng: &mut ChaCha8Rng, n: usize) -> ElemSet {
    (0..n).filter(|_| rng.gen_bool(0.5)).collect()
}

/// Reduced grlex Gröbner bases agree.
fn same_ideal(a: &[Poly], b: &[Poly], nvars: usize) -> bool {
    let ord = MonomialOrder::grlex();
    let ga = buchberger(&IdealBasis::new(nvars, a.to_vec()).unwrap(), &ord).unwrap();
    let gb = buchberger(&IdealBasis::new(nvars, b.to_vec()).unwrap(), &ord).unwrap();
    ga == gb
}

/// `a ⊆ ⟨b⟩`.
fn contained(a: &[Poly], b: &[Poly], nvars: usize) -> bool {
    let ord = MonomialOrder::grlex();
    let gb = buchberger(&IdealBasis::new(nvars, b.to_vec()).unwrap(), &ord).unwrap();
    a.iter().all(|f| reduces_to_zero(f, gb.gens(), &ord))
}

fn p(nvars: usize, terms: &[(&[u32], i64)]) -> Poly {
    Poly::from_terms(
        nvars,
        terms.iter().map(|(e, c)| (Monomial::new(e.to_vec()), Rational::from_integer((*c).into()))),
    )
    .unwrap()
}

/// `f = c·g` for some nonzero rational `c`.
fn proportional(f: &Poly, g: &Poly) -> bool {
    let Some((m, c)) = g.terms().next() else {
        return f.is_zero();
    };
    let k = f.coeff(m) / c;
    k != Rational::from_integer(0.into()) && *f == g.scale(&k)
}

fn check_1() -> Check {
    let a = example();
    let m = Matroid::from_matrix(&a);
    let inv = set(&[1, 2, 3]);
    let w = natural_weights(5);
    ensure(m.circuits() == sets(&[&[1, 2, 4], &[1, 3, 5], &[2, 3, 4, 5]]).as_slice(), || {
        format!("circuits {:?}", m.circuits())
    })?;
    let order = ElementOrder::from_weights(&w).map_err(|e| e.to_string())?;
    let broken = sorted(i_broken_circuits(&m, inv, &order));
    ensure(broken == sets(&[&[1, 2, 4], &[1, 3, 5], &[2, 3, 5]]), || format!("broken circuits {broken:?}"))?;
    let d = semi_broken_complex(&m, inv, &w).map_err(|e| e.to_string())?;
    let expected = sets(&[&[1, 2, 3], &[1, 2, 5], &[1, 3, 4], &[1, 4, 5], &[2, 3, 4], &[2, 4, 5], &[3, 4, 5]]);
    ensure(sorted(d.facets().to_vec()) == expected, || format!("facets {:?}", d.facets()))?;
    Ok("circuits, I-broken circuits and the seven facets match".into())
}

fn check_2() -> Check {
    let a = example();
    let inv = set(&[1, 2, 3]);
    let fs = circuit_polynomials(&a, inv, Sign::Plus).map_err(|e| e.to_string())?;
    let expected = [
        p(5, &[(&[1, 0, 0, 0, 0], 1), (&[0, 1, 0, 0, 0], 1), (&[1, 1, 0, 1, 0], -1)]),
        p(5, &[(&[1, 0, 0, 0, 0], 1), (&[0, 0, 1, 0, 0], 1), (&[1, 0, 1, 0, 1], -1)]),
        p(5, &[(&[0, 1, 0, 0, 0], 1), (&[0, 0, 1, 0, 0], -1), (&[0, 1, 1, 1, 0], 1), (&[0, 1, 1, 0, 1], -1)]),
    ];
    ensure(fs.len() == 3, || format!("{} circuit polynomials", fs.len()))?;
    for (f, g) in fs.iter().zip(&expected) {
        ensure(proportional(f, g), || format!("{f} is not a multiple of {g}"))?;
    }
    let w = weights(&[1, 2, 3, 4, 5]);
    let mut initial: Vec<Monomial> = Vec::new();
    for f in &fs {
        let inf = f.initial_form(&w);
        ensure(inf.len() == 1, || format!("initial form {inf} is not a monomial"))?;
        initial.push(inf.terms().next().unwrap().0.clone());
    }
    initial.sort();
    let mut expected =
        vec![Monomial::from_support(5, [0, 1, 3]), Monomial::from_support(5, [0, 2, 4]), Monomial::from_support(5, [1, 2, 4])];
    expected.sort();
    ensure(initial == expected, || format!("initial monomials {initial:?}"))?;
    Ok("f_124, f_135, f_2345 agree up to scaling; initial monomials x1x2x4, x1x3x5, x2x3x5".into())
}

fn check_3() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut instances = vec![(example(), set(&[1, 2, 3]))];
    while instances.len() < 16 {
        let n = rng.gen_range(4..=6);
        let d = rng.gen_range(1..=3);
        let a = random_matrix(&mut rng, d, n);
        let m = Matroid::from_matrix(&a);
        let inv = random_subset(&mut rng, n);
        if m.loop_in(inv).is_none() {
            instances.push((a, inv));
        }
    }
    let (mut trials, mut failures, mut inconclusive) = (0, 0, 0);
    for (k, (a, inv)) in instances.iter().enumerate() {
        let r = verify_ugb(a, *inv, 5, 100 + k as u64).map_err(|e| e.to_string())?;
        trials += r.trials.len();
        failures += r.failures();
        inconclusive += r.inconclusive();
        if r.failures() > 0 {
            return Err(format!("instance {k} (I = {inv}): {:?}", r.trials.iter().find(|t| t.failed())));
        }
    }
    ensure(failures == 0, || format!("{failures} failures"))?;
    ensure((inconclusive as f64) < 0.1 * trials as f64, || format!("{inconclusive}/{trials} inconclusive"))?;
    Ok(format!("{} instances, {trials} weight vectors, 0 failures, {inconclusive} inconclusive", instances.len()))
}

fn check_4() -> Check {
    let a = example();
    let inv = set(&[1, 2, 3]);
    let cfg = GroebnerConfig::default();
    let w = weights(&[2, 0, 0, 1, 1, 1]);
    let ord = MonomialOrder::weight(&w).map_err(|e| e.to_string())?;
    // homogenizing a graded Gröbner basis gives generators of the homogenized ideal
    let j = inv_ideal_oracle(&a, inv, Sign::Plus, &cfg).map_err(|e| e.to_string())?;
    let jbar: Vec<Poly> = j.gens().iter().map(homogenize).collect();
    let g = buchberger(&IdealBasis::new(6, jbar).unwrap(), &ord).map_err(|e| e.to_string())?;
    let in_j: Vec<Poly> = g.gens().iter().map(|f| f.initial_form(&w)).collect();
    let fs = circuit_polynomials(&a, inv, Sign::Plus).map_err(|e| e.to_string())?;
    let in_f: Vec<Poly> = fs.iter().map(|f| homogenize(f).initial_form(&w)).collect();

    ensure(contained(&in_f, &in_j, 6), || "circuit initial forms are not in In_w(J)".into())?;
    ensure(!contained(&in_j, &in_f, 6), || "no strict containment".into())?;
    let expected_in_f = [p(6, &[(&[2, 1, 0, 0, 0, 0], 1), (&[2, 0, 1, 0, 0, 0], 1)]), p(6, &[(&[2, 0, 0, 1, 0, 0], 1)])];
    let expected_in_j = [
        p(6, &[(&[0, 0, 1, 1, 1, 0], 1), (&[0, 1, 0, 1, 0, 1], -1), (&[0, 0, 1, 1, 0, 1], -1)]),
        expected_in_f[0].clone(),
        expected_in_f[1].clone(),
    ];
    ensure(same_ideal(&in_f, &expected_in_f, 6), || "initial forms of circuits differ from the displayed ideal".into())?;
    ensure(same_ideal(&in_j, &expected_in_j, 6), || "In_w(J) differs from the displayed ideal".into())?;
    let at_one = |fs: &[Poly]| -> Vec<Poly> { fs.iter().map(dehomogenize).collect() };
    ensure(same_ideal(&at_one(&in_f), &at_one(&in_j), 5), || "ideals differ at x0 = 1".into())?;
    Ok("strict containment with weight (2,0,0,1,1,1); equal after x0 = 1".into())
}

fn binom(n: i64, k: i64) -> i64 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1))
}

/// Degree of a generic `d`-space with `k` inverted coordinates.
fn uniform_formula(d: i64, n: i64, k: i64) -> i64 {
    (k + d - n..=d).map(|j| binom(k, j)).sum::<i64>() - binom(k - 1, d)
}

fn check_5() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut count = 0;
    for d in 1..=4usize {
        for n in d..=7usize {
            let a = generic_matrix(&mut rng, d, n);
            let m = Matroid::from_matrix(&a);
            for k in 0..=n {
                let mut elems: Vec<usize> = (0..n).collect();
                elems.shuffle(&mut rng);
                let inv: ElemSet = elems[..k].iter().copied().collect();
                let mut w: Vec<i64> = (1..=n as i64).collect();
                w.shuffle(&mut rng);
                let r: DegreeReport = degree(&m, inv, &QVector::from_i64(&w)).map_err(|e| e.to_string())?;
                let f = uniform_formula(d as i64, n as i64, k as i64) as u64;
                ensure(r.by_facets == r.by_recursion && r.by_formula == Some(f) && r.by_facets == f, || {
                    format!("U({d},{n}) k={k}: {r:?}, formula {f}")
                })?;
                if k == n {
                    ensure(f == binom(n as i64 - 1, d as i64 - 1) as u64, || format!("k = n specialization at ({d},{n})"))?;
                }
                count += 1;
            }
        }
    }
    ensure(count >= 50, || format!("only {count} instances"))?;
    Ok(format!("{count} uniform instances agree by facets, recursion and formula"))
}

fn check_6() -> Check {
    let a = example();
    let u = QVector::from_i64(&[0, 0, 1, 2, 2]);
    let mut parts = Vec::new();
    for (inv, expected) in [(set(&[1, 2, 3]), 7), (set(&[1, 2, 3, 4]), 6), (set(&[1, 2, 3, 4, 5]), 4)] {
        let c = real_point_census(&a, inv, &u, DEFAULT_TOL).map_err(|e| e.to_string())?;
        ensure(c.qualifying == expected, || format!("I = {inv}: {} qualifying regions", c.qualifying))?;
        ensure(c.degree == expected as u64, || format!("I = {inv}: degree {}", c.degree))?;
        ensure(c.points().len() == expected, || format!("I = {inv}: {} points", c.points().len()))?;
        ensure(c.max_residual < 1e-8, || format!("I = {inv}: residual {}", c.max_residual))?;
        let sep = c.min_separation.unwrap_or(f64::INFINITY);
        ensure(sep > 1e-4, || format!("I = {inv}: separation {sep}"))?;
        parts.push(format!("{expected} (res {:.1e})", c.max_residual));
    }
    Ok(format!("qualifying regions = degree = points: {}", parts.join(" / ")))
}

/// Supports of a generic `d`-space in `n` coordinates with inverted set `I`.
fn table(d: usize, n: usize, inv: ElemSet, s: ElemSet) -> bool {
    let k = inv.len();
    let bar = inv.complement(n);
    if k == 0 {
        s.is_empty() || s.len() > n - d
    } else if k <= n - d {
        inv.is_subset(s) && s.len() > n - d
    } else {
        s.union(bar).len() < d || inv.is_subset(s)
    }
}

fn check_7() -> Check {
    let mut cases = 0;
    for n in 1..=6usize {
        for d in 0..=n {
            let m = Matroid::uniform(d, n);
            for inv in ElemSet::full(n).subsets() {
                // every element is a loop when d = 0, so nonempty I leaves nothing
                if d == 0 && !inv.is_empty() {
                    continue;
                }
                let got = achievable_supports(&m, inv).supports;
                let want: Vec<ElemSet> = sorted(ElemSet::full(n).subsets().filter(|&s| table(d, n, inv, s)).collect());
                ensure(got == want, || format!("U({d},{n}), I = {inv}: {got:?} vs {want:?}"))?;
                cases += 1;
            }
        }
    }
    let cfg = GroebnerConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut instances = vec![(example(), set(&[1, 2, 3]))];
    while instances.len() < 12 {
        let n = rng.gen_range(2..=5);
        let d = rng.gen_range(1..=n - 1);
        let a = if rng.gen_bool(0.5) { generic_matrix(&mut rng, d, n) } else { random_matrix(&mut rng, d, n) };
        let inv = random_subset(&mut rng, n);
        if Matroid::from_matrix(&a).loop_in(inv).is_none() {
            instances.push((a, inv));
        }
    }
    let (mut agreements, mut inconclusive) = (0, 0);
    for (a, inv) in &instances {
        let r = cross_check_supports(a, *inv, &cfg).map_err(|e| e.to_string())?;
        ensure(r.contradictions.is_empty(), || format!("I = {inv}: contradictions {:?}", r.contradictions))?;
        agreements += r.agreements;
        inconclusive += r.inconclusive;
    }
    Ok(format!(
        "{cases} (d, n, I) table cases; oracle agrees on {agreements} supports over {} instances ({inconclusive} inconclusive)",
        instances.len()
    ))
}

fn check_8() -> Check {
    let a = example();
    let m = Matroid::from_matrix(&a);
    let inv = set(&[1, 2, 3]);
    let w = natural_weights(5);
    ensure(verify_link_isomorphism(&m, inv, &w).map_err(|e| e.to_string())?, || "example fails".into())?;

    let b = external_activity_complex(&m, &transported_weights(&w, inv)).map_err(|e| e.to_string())?;
    let f1 = xy_set(5, set(&[1, 2, 3, 4]), set(&[1, 3, 4, 5]));
    let f2 = xy_set(5, set(&[1, 2, 3, 4, 5]), set(&[2, 3, 5]));
    ensure(b.facets().contains(&f1), || "F1 is not a facet".into())?;
    ensure(b.facets().contains(&f2), || "F2 is not a facet".into())?;
    let sigma = xy_set(5, inv, set(&[4, 5]));
    ensure(sigma.is_subset(f1) && !sigma.is_subset(f2), || "sigma containment".into())?;
    let link = b.link(sigma).map_err(|e| e.to_string())?;
    let from_f1 = f1.difference(sigma);
    ensure(from_f1 == xy_set(5, set(&[4]), set(&[1, 3])), || format!("F1 minus sigma is {from_f1}"))?;
    ensure(link.facets().contains(&from_f1), || "x4y1y3 is not a link facet".into())?;
    let back: ElemSet = from_f1.iter().map(|v| if v < 5 { v } else { v - 5 }).collect();
    ensure(back == set(&[1, 3, 4]), || format!("F1 maps to {back}"))?;

    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut done = 0;
    while done < 12 {
        let n = rng.gen_range(2..=6);
        let d = rng.gen_range(1..=n.min(4));
        let a = random_matrix(&mut rng, d, n);
        let m = Matroid::from_matrix(&a);
        let inv = random_subset(&mut rng, n);
        if m.loop_in(inv).is_some() {
            continue;
        }
        let pool: Vec<i64> = (1..=100).collect();
        let w: Vec<i64> = pool.choose_multiple(&mut rng, n).copied().collect();
        let ok = verify_link_isomorphism(&m, inv, &QVector::from_i64(&w)).map_err(|e| e.to_string())?;
        ensure(ok, || format!("random instance {done}: I = {inv}, w = {w:?}"))?;
        done += 1;
    }
    Ok(format!("example, F1/F2 and {done} random instances"))
}

fn main() -> ExitCode {
    let checks: [(&str, fn() -> Check, Duration); 8] = [
        ("1 complex of the 3x5 example", check_1, Duration::from_secs(1)),
        ("2 circuit polynomials and initial ideal", check_2, Duration::from_secs(1)),
        ("3 universal Groebner basis property suite", check_3, Duration::from_secs(600)),
        ("4 homogenization negative control", check_4, Duration::from_secs(60)),
        ("5 degree three-way equality", check_5, Duration::from_secs(60)),
        ("6 real point census", check_6, Duration::from_secs(10)),
        ("7 achievable supports", check_7, Duration::from_secs(120)),
        ("8 link isomorphism", check_8, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (name, check, budget) in checks {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let result = match result {
            Ok(msg) if took > budget => Err(format!("{msg}, but took {took:.2?} (budget {budget:?})")),
            r => r,
        };
        match result {
            Ok(msg) => println!("PASS criterion {name}: {msg} [{took:.2?}]"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {name}: {msg} [{took:.2?}]");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
