//! Acceptance gate: thirteen exact checks, one PASS/FAIL line each.
//! Runs without the libtest harness so the lines always reach stdout.

use std::time::Instant;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use celltrees::closed_forms::{
    adin_tau, binom_ext, colorful_spectrum, colorful_tau_hat, colorful_weights, complete_graph_total_spectra,
    cube_tau_hat, edgeless_total_spectra, join_spectrum, kalai_tau, kalai_tau_hat, octahedron_tau_hat,
    simplex_weights, suspension_pi_hat, suspension_tau_hat, suspension_total_spectrum, suspension_updown_spectrum,
    triple_count_identity, CubeWeights,
};
use celltrees::complex::CellComplex;
use celltrees::families::{complete_colorful, hypercube, join, simplex_skeleton, ColorfulSpec, CubeSpec};
use celltrees::laplacian::{
    pi_hat, specialization_battery, total_laplacian, updown_laplacian, verify_total_decomposition,
    verify_updown_downup_identity, Specialization,
};
use celltrees::trees::{
    graph_tau_hat, kirchhoff_tau_hat, submatrix_determinant_check, tau, tau_hat, tree_count_report,
};

const SEED: u64 = 42;
const POINTS: usize = 5;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e2s<T>(r: celltrees::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn battery(cx: &CellComplex) -> Vec<Specialization> {
    let vars: Vec<String> = cx.variables().into_iter().collect();
    specialization_battery(&vars, SEED, POINTS)
}

fn colorful(sizes: &[usize]) -> CellComplex {
    complete_colorful(&ColorfulSpec::new(sizes.to_vec())).expect("valid sizes")
}

fn cube(n: usize) -> CellComplex {
    hypercube(CubeSpec { n }).expect("valid cube")
}

const ADIN_CASES: [(&[usize], isize, Option<u64>); 6] = [
    (&[2, 2], 1, Some(4)),
    (&[2, 3], 1, Some(12)),
    (&[2, 2, 2], 1, Some(384)),
    (&[2, 2, 2], 2, Some(8)),
    (&[2, 2, 3], 2, None),
    (&[3, 3], 1, None),
];

const CUBE_CASES: [(usize, isize); 8] = [(1, 0), (1, 1), (2, 0), (2, 1), (2, 2), (3, 1), (3, 2), (3, 3)];

fn cayley_kalai_graphs() -> Outcome {
    let mut found = Vec::new();
    for n in 3..=5usize {
        let t = e2s(tau(&e2s(simplex_skeleton(n, 1))?, 1))?;
        let expect = BigInt::from(n).pow(n as u32 - 2);
        ensure(t == expect && t == e2s(kalai_tau(n, 1))?, || format!("K_{n}: tau {t}, expected {expect}"))?;
        found.push(t.to_string());
    }
    Ok(format!("tau_1(K_3, K_4, K_5) = {}", found.join(", ")))
}

fn kalai_with_torsion() -> Outcome {
    let cx = e2s(simplex_skeleton(6, 2))?;
    let report = e2s(tree_count_report(&cx, 2, &Specialization::ones_for(&cx)))?;
    ensure(report.tau == BigInt::from(46656), || format!("tau_2(K_6^2) = {}", report.tau))?;
    ensure(report.max_torsion >= BigInt::from(2), || format!("max torsion {}", report.max_torsion))?;
    ensure(report.tau == e2s(kalai_tau(6, 2))?, || "closed form disagrees".into())?;
    Ok(format!(
        "tau_2(K_6^2) = {} from {} trees over C(20,10) = 184756 candidates, max torsion {}",
        report.tau, report.tree_count, report.max_torsion
    ))
}

fn weighted_kalai() -> Outcome {
    let cx = e2s(simplex_skeleton(5, 2))?;
    let points = battery(&cx);
    for (i, x) in points.iter().enumerate() {
        let brute = e2s(tau_hat(&cx, 2, x))?;
        let closed = e2s(kalai_tau_hat(2, &e2s(simplex_weights(5, x))?))?;
        ensure(brute == closed, || format!("point {i}: brute {brute} vs closed {closed}"))?;
    }
    Ok(format!("tau_hat_2(K_5^2) matches at {} points", points.len()))
}

fn adin_unweighted() -> Outcome {
    let mut parts = Vec::new();
    for (sizes, k, expect) in ADIN_CASES {
        let brute = e2s(tau(&colorful(sizes), k))?;
        let closed = e2s(adin_tau(k, sizes))?;
        ensure(brute == closed, || format!("{sizes:?} k={k}: brute {brute} vs closed {closed}"))?;
        if let Some(e) = expect {
            ensure(brute == BigInt::from(e), || format!("{sizes:?} k={k}: {brute} != {e}"))?;
        }
        parts.push(format!("{sizes:?}/{k}={brute}"));
    }
    Ok(parts.join(" "))
}

fn colorful_weighted() -> Outcome {
    let mut checks = 0;
    for (sizes, k, _) in ADIN_CASES {
        let cx = colorful(sizes);
        for x in battery(&cx) {
            let w = e2s(colorful_weights(sizes, &x))?;
            let brute = e2s(tau_hat(&cx, k, &x))?;
            let closed = e2s(colorful_tau_hat(k, &w))?;
            ensure(brute == closed, || format!("{sizes:?} k={k}: brute {brute} vs closed {closed}"))?;
            if sizes == [2, 2, 2] {
                let shown = e2s(octahedron_tau_hat(k, &w))?;
                ensure(brute == shown, || format!("octahedron k={k}: brute {brute} vs display {shown}"))?;
            }
            checks += 1;
        }
    }
    Ok(format!("{checks} weighted comparisons, octahedron displays included"))
}

fn cube_weighted() -> Outcome {
    let mut checks = 0;
    for (n, k) in CUBE_CASES {
        let cx = cube(n);
        for (i, x) in battery(&cx).iter().enumerate() {
            let w = e2s(CubeWeights::from_specialization(n, x))?;
            let closed = e2s(cube_tau_hat(k, &w))?;
            let brute = e2s(tau_hat(&cx, k, x))?;
            ensure(brute == closed, || format!("Q_{n} k={k} point {i}: brute {brute} vs closed {closed}"))?;
            if (n, k) == (3, 1) {
                let kirchhoff = e2s(kirchhoff_tau_hat(&e2s(cx.skeleton(1))?, x))?;
                ensure(kirchhoff == closed, || format!("Q_3 Kirchhoff {kirchhoff} vs closed {closed}"))?;
                if i == 0 {
                    ensure(kirchhoff == BigRational::from_integer(384.into()), || format!("Q_3 graph {kirchhoff}"))?;
                }
            }
            checks += 1;
        }
    }
    // extended run: C(24,17) candidate sets
    let cx = cube(4);
    let x = &battery(&cx)[1];
    let report = e2s(tree_count_report(&cx, 2, x))?;
    let closed = e2s(cube_tau_hat(2, &e2s(CubeWeights::from_specialization(4, x))?))?;
    ensure(report.tau_hat == closed, || format!("Q_4 k=2: brute {} vs closed {closed}", report.tau_hat))?;
    let unweighted = report.tau;
    ensure(BigRational::from_integer(unweighted.clone()) == e2s(cube_tau_hat(2, &CubeWeights::ones(4)))?, || {
        format!("Q_4 k=2 unweighted {unweighted}")
    })?;
    Ok(format!("{checks} comparisons over {} (n,k) cases, plus Q_4 k=2 (tau = {unweighted})", CUBE_CASES.len()))
}

fn cmtt_everywhere() -> Outcome {
    let mut complexes: Vec<(String, CellComplex)> =
        ADIN_CASES.iter().map(|(s, _, _)| (format!("colorful {s:?}"), colorful(s))).collect();
    complexes.dedup_by(|a, b| a.0 == b.0);
    complexes.extend([1, 2, 3].map(|n| (format!("Q_{n}"), cube(n))));
    let mut checks = 0;
    for (name, cx) in &complexes {
        let points = battery(cx);
        for k in 0..=cx.dim() {
            for (i, x) in points.iter().enumerate() {
                let (a, b) = e2s(celltrees::trees::cmtt_sides(cx, k, x))?;
                ensure(a == b, || format!("{name} k={k} point {i}: spectral {a} vs trees {b}"))?;
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} identity checks on {} complexes", complexes.len()))
}

fn spectrum_identities() -> Outcome {
    let complexes = [
        ("K_3", e2s(simplex_skeleton(3, 1))?),
        ("colorful [2, 2]", colorful(&[2, 2])),
        ("colorful [2, 2, 2]", colorful(&[2, 2, 2])),
        ("Q_2", cube(2)),
        ("Q_3", cube(3)),
    ];
    let mut checks = 0;
    for (name, cx) in &complexes {
        for x in battery(cx).iter().skip(1) {
            for k in -1..=cx.dim() {
                ensure(e2s(verify_updown_downup_identity(cx, k, x))?, || format!("{name} k={k}: ud/du"))?;
                ensure(e2s(verify_total_decomposition(cx, k, x))?, || format!("{name} k={k}: total"))?;
                checks += 2;
            }
        }
    }
    Ok(format!("{checks} spectrum identity checks at {POINTS} seeded points"))
}

fn join_spectra() -> Outcome {
    let mut checks = 0;
    for sizes in [&[2, 2][..], &[2, 3], &[2, 2, 2]] {
        let cx = colorful(sizes);
        for x in battery(&cx).iter().skip(1) {
            let w = e2s(colorful_weights(sizes, x))?;
            for k in -1..=cx.dim() {
                let predicted = e2s(colorful_spectrum(k, &w))?;
                let computed = e2s(total_laplacian(&cx, k, x))?;
                ensure(e2s(predicted.matches_exactly(&computed))?, || format!("{sizes:?} k={k}: {predicted}"))?;
                checks += 1;
            }
        }
    }
    let n = 3;
    let k3 = e2s(simplex_skeleton(n, 1))?;
    let apexes = colorful(&[2]);
    let cx = e2s(join(&k3, &apexes))?;
    for x in battery(&cx).iter().skip(1) {
        let xs = e2s(simplex_weights(n, x))?;
        let ys = e2s(colorful_weights(&[2], x))?.remove(0);
        let s_x: BigRational = xs.iter().sum();
        let s_y: BigRational = ys.iter().sum();
        let factors = vec![complete_graph_total_spectra(&xs), edgeless_total_spectra(&ys)];
        for k in -1..=2 {
            let shown = e2s(suspension_total_spectrum(n, k, &s_x, &s_y))?;
            ensure(e2s(join_spectrum(&factors, k))? == shown, || format!("suspension join formula k={k}"))?;
            ensure(e2s(shown.matches_exactly(&e2s(total_laplacian(&cx, k, x))?))?, || {
                format!("suspension total spectrum k={k}")
            })?;
            checks += 2;
        }
        for k in -1..=1 {
            let shown = e2s(suspension_updown_spectrum(n, k, &s_x, &s_y))?;
            ensure(e2s(shown.matches_up_to_zero(&e2s(updown_laplacian(&cx, k, x))?))?, || {
                format!("suspension up-down spectrum k={k}")
            })?;
            checks += 1;
        }
        let ys = [ys[0].clone(), ys[1].clone()];
        for k in 0..=2 {
            let computed = e2s(pi_hat(&cx, k, x))?;
            ensure(computed == e2s(suspension_pi_hat(n, k, &s_x, &s_y))?, || format!("suspension pi_hat_{k}"))?;
            let brute = e2s(tau_hat(&cx, k, x))?;
            let shown = e2s(suspension_tau_hat(k, &xs, &ys))?;
            ensure(brute == shown, || format!("suspension tau_hat_{k}: brute {brute} vs display {shown}"))?;
            checks += 2;
        }
    }
    Ok(format!("{checks} spectrum/count checks, suspension of K_3 included"))
}

fn ids(cx: &CellComplex, k: isize) -> Vec<String> {
    cx.cells(k).iter().map(|c| c.id.clone()).collect()
}

fn submatrix_determinants() -> Outcome {
    let mut checks = 0;
    let mut nonsingular = 0;
    for n in [3usize, 4] {
        let cx = e2s(simplex_skeleton(n, 1))?;
        let (rows, cols) = (ids(&cx, 0), ids(&cx, 1));
        for x in battery(&cx).iter().take(2) {
            for s in rows.iter().cloned().combinations(n - 1) {
                for t in cols.iter().cloned().combinations(n - 1) {
                    let c = e2s(submatrix_determinant_check(&cx, &s, &t, x))?;
                    ensure(c.holds(), || format!("K_{n} S={s:?} T={t:?}: {c:?}"))?;
                    checks += 1;
                    nonsingular += c.nonsingular as usize;
                }
            }
        }
    }
    let cx = colorful(&[2, 2, 2]);
    let (rows, cols) = (ids(&cx, 1), ids(&cx, 2));
    let size = cx.f(2) - cx.reduced_betti(2);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let x = &battery(&cx)[1];
    for _ in 0..50 {
        let mut s: Vec<usize> = sample(&mut rng, rows.len(), size).into_vec();
        let mut t: Vec<usize> = sample(&mut rng, cols.len(), size).into_vec();
        s.sort_unstable();
        t.sort_unstable();
        let s: Vec<String> = s.into_iter().map(|i| rows[i].clone()).collect();
        let t: Vec<String> = t.into_iter().map(|j| cols[j].clone()).collect();
        let c = e2s(submatrix_determinant_check(&cx, &s, &t, x))?;
        ensure(c.holds(), || format!("octahedron S={s:?} T={t:?}: {c:?}"))?;
        checks += 1;
        nonsingular += c.nonsingular as usize;
    }
    ensure(nonsingular > 0, || "no nonsingular submatrix exercised".into())?;
    Ok(format!("{checks} (S,T) pairs, {nonsingular} nonsingular"))
}

fn graph_counts() -> Outcome {
    let graphs = [
        ("K_4", e2s(simplex_skeleton(4, 1))?),
        ("K_{2,3}", colorful(&[2, 3])),
        ("Q_3 graph", e2s(cube(3).skeleton(1))?),
    ];
    let mut checks = 0;
    for (name, g) in &graphs {
        for x in battery(g).iter().skip(1) {
            let spectral = e2s(graph_tau_hat(g, x))?;
            let brute = e2s(tau_hat(g, 1, x))?;
            ensure(spectral == brute, || format!("{name}: spectral {spectral} vs brute {brute}"))?;
            checks += 1;
        }
    }
    Ok(format!("{checks} graph comparisons at {POINTS} seeded points"))
}

fn triple_counts() -> Outcome {
    let mut checks = 0;
    for n in 0..=12i64 {
        for k in -3..=n + 2 {
            ensure(triple_count_identity(n, k), || format!("N={n} K={k}"))?;
            checks += 1;
        }
    }
    Ok(format!("{checks} (N,K) pairs"))
}

fn binomial_convention() -> Outcome {
    ensure(binom_ext(-1, 0) == BigInt::one(), || "C(-1,0)".into())?;
    ensure(binom_ext(0, -1).is_zero(), || "C(0,-1)".into())?;
    for n in -10..=10 {
        ensure(binom_ext(n, 1) == BigInt::from(n), || format!("C({n},1)"))?;
    }
    let mut failures = Vec::new();
    for n in -10..=10i64 {
        for k in -10..=10i64 {
            if binom_ext(n, k) != binom_ext(n - 1, k) + binom_ext(n - 1, k - 1) {
                failures.push((n, k));
            }
        }
    }
    ensure(failures == [(0, 0)], || format!("Pascal fails at {failures:?}"))?;
    Ok("Pascal recurrence fails exactly at (0,0) on [-10,10]^2".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 13] = [
        ("unweighted trees of complete graphs", cayley_kalai_graphs),
        ("2-trees of the 2-skeleton of the 5-simplex, with torsion", kalai_with_torsion),
        ("weighted 2-trees of the 2-skeleton of the 4-simplex", weighted_kalai),
        ("unweighted counts of complete colorful complexes", adin_unweighted),
        ("degree-weighted counts of complete colorful complexes", colorful_weighted),
        ("weighted counts of hypercubes", cube_weighted),
        ("weighted matrix-tree identity", cmtt_everywhere),
        ("up-down / down-up / total spectrum identities", spectrum_identities),
        ("colorful and join spectra", join_spectra),
        ("square submatrices of the top boundary map", submatrix_determinants),
        ("graph counts from the vertex Laplacian", graph_counts),
        ("triple-count binomial identity", triple_counts),
        ("extended binomial convention", binomial_convention),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({ms} ms)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} ({ms} ms)", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
