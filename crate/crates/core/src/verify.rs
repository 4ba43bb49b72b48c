//! Seeded verification suites comparing brute force, computed spectra and
//! closed forms. Checks run in parallel; the report keeps planning order.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::closed_forms::{
    adin_tau, binom_ext, clark_tau_hat, colorful_spectrum, colorful_tau_hat, colorful_top_tau_hat, colorful_weights,
    complete_graph_total_spectra, cube_cell_weight_product, cube_spectrum, cube_tau_hat, edgeless_total_spectra,
    join_spectrum, kalai_tau_hat, octahedron_tau_hat, simplex_weights, suspension_pi_hat, suspension_tau_hat,
    suspension_total_spectrum, triple_count_sides, CubeWeights,
};
use crate::complex::CellComplex;
use crate::error::{Error, Result};
use crate::families::{complete_colorful, hypercube, join, simplex_skeleton, ColorfulSpec, CubeSpec};
use crate::laplacian::{
    cell_weight_product, pi_hat, specialization_battery, total_laplacian, updown_laplacian,
    verify_total_decomposition, verify_updown_downup_identity, Specialization,
};
use crate::trees::{cmtt_sides, graph_tau_hat, kirchhoff_tau_hat, submatrix_determinant_check, tau, tau_hat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Cmtt,
    Colorful,
    Cube,
    Spectra,
    Identities,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = ["all", "cmtt", "colorful", "cube", "spectra", "identities"];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Suite::All => "all",
            Suite::Cmtt => "cmtt",
            Suite::Colorful => "colorful",
            Suite::Cube => "cube",
            Suite::Spectra => "spectra",
            Suite::Identities => "identities",
        };
        f.write_str(name)
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Suite::All,
            "cmtt" => Suite::Cmtt,
            "colorful" => Suite::Colorful,
            "cube" => Suite::Cube,
            "spectra" => Suite::Spectra,
            "identities" => Suite::Identities,
            _ => return Err(Error::Argument(format!("unknown suite {s:?}; expected one of {:?}", Suite::NAMES))),
        })
    }
}

/// One exact comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub complex: String,
    pub k: Option<isize>,
    /// Index into the specialization battery; 0 is the all-ones point.
    pub point: Option<usize>,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub suite: Suite,
    pub seed: u64,
    pub points: usize,
    pub checks: Vec<Check>,
    pub wall_time_ms: u128,
}

impl VerificationReport {
    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.pass).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// The report payload; wall time is included only when asked so that
    /// seeded runs compare byte for byte.
    pub fn to_value(&self, with_time: bool) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                json!({
                    "name": c.name,
                    "complex": c.complex,
                    "k": c.k,
                    "point": c.point,
                    "expected": c.expected,
                    "actual": c.actual,
                    "pass": c.pass,
                })
            })
            .collect();
        let mut v = json!({
            "suite": self.suite.to_string(),
            "seed": self.seed,
            "points": self.points,
            "checks": checks,
            "summary": { "total": self.checks.len(), "passed": self.passed(), "failed": self.failed() },
        });
        if with_time {
            v["wall_time_ms"] = json!(self.wall_time_ms as u64);
        }
        v
    }
}

type Task = Box<dyn FnOnce() -> Vec<Check> + Send>;

struct Plan {
    seed: u64,
    points: usize,
    tasks: Vec<Task>,
}

struct Target {
    label: String,
    complex: CellComplex,
}

impl Target {
    fn new(label: impl Into<String>, complex: CellComplex) -> Self {
        Self { label: label.into(), complex }
    }
}

fn check(name: &str, complex: &str, k: Option<isize>, point: Option<usize>, result: Result<(String, String)>) -> Check {
    let (expected, actual, pass) = match result {
        Ok((e, a)) => {
            let pass = e == a;
            (e, a, pass)
        }
        Err(err) => (String::from("no error"), format!("error: {err}"), false),
    };
    Check { name: name.into(), complex: complex.into(), k, point, expected, actual, pass }
}

fn pair<T: ToString>(expected: T, actual: T) -> (String, String) {
    (expected.to_string(), actual.to_string())
}

fn truth(ok: bool) -> (String, String) {
    pair("true", if ok { "true" } else { "false" })
}

impl Plan {
    fn battery(&self, cx: &CellComplex) -> Vec<Specialization> {
        let vars: Vec<String> = cx.variables().into_iter().collect();
        specialization_battery(&vars, self.seed, self.points)
    }

    /// Adds one task that evaluates `f` at every battery point.
    fn pointwise<F>(&mut self, name: &'static str, target: &Target, k: Option<isize>, f: F)
    where
        F: Fn(&CellComplex, &Specialization) -> Result<(String, String)> + Send + 'static,
    {
        let points = self.battery(&target.complex);
        let cx = target.complex.clone();
        let label = target.label.clone();
        self.tasks.push(Box::new(move || {
            points.iter().enumerate().map(|(i, x)| check(name, &label, k, Some(i), f(&cx, x))).collect()
        }));
    }

    fn single<F>(&mut self, name: &'static str, label: impl Into<String>, k: Option<isize>, f: F)
    where
        F: FnOnce() -> Result<(String, String)> + Send + 'static,
    {
        let label = label.into();
        self.tasks.push(Box::new(move || vec![check(name, &label, k, None, f())]));
    }
}

fn colorful_target(sizes: &[usize]) -> Result<Target> {
    let label = format!("colorful {}", sizes.iter().join(","));
    Ok(Target::new(label, complete_colorful(&ColorfulSpec::new(sizes.to_vec()))?))
}

fn cube_target(n: usize) -> Result<Target> {
    Ok(Target::new(format!("cube {n}"), hypercube(CubeSpec { n })?))
}

fn simplex_target(n: usize, d: isize) -> Result<Target> {
    Ok(Target::new(format!("simplex {n} {d}"), simplex_skeleton(n, d)?))
}

const COLORFUL_CASES: [(&[usize], isize); 6] =
    [(&[2, 2], 1), (&[2, 3], 1), (&[2, 2, 2], 1), (&[2, 2, 2], 2), (&[2, 2, 3], 2), (&[3, 3], 1)];

fn plan_cmtt(plan: &mut Plan) -> Result<()> {
    let mut targets = vec![simplex_target(3, 1)?, simplex_target(4, 2)?, simplex_target(5, 2)?];
    for sizes in [&[2, 2][..], &[2, 3], &[2, 2, 2], &[2, 2, 3], &[3, 3]] {
        targets.push(colorful_target(sizes)?);
    }
    for n in 1..=3 {
        targets.push(cube_target(n)?);
    }
    for t in &targets {
        for k in 0..=t.complex.dim() {
            plan.pointwise("matrix-tree identity", t, Some(k), move |cx, x| {
                cmtt_sides(cx, k, x).map(|(a, b)| pair(a, b))
            });
        }
    }
    Ok(())
}

fn plan_colorful(plan: &mut Plan) -> Result<()> {
    for (sizes, k) in COLORFUL_CASES {
        let t = colorful_target(sizes)?;
        plan.single("unweighted count", t.label.clone(), Some(k), {
            let cx = t.complex.clone();
            move || Ok(pair(adin_tau(k, sizes)?, tau(&cx, k)?))
        });
        plan.pointwise("weighted count", &t, Some(k), move |cx, x| {
            Ok(pair(colorful_tau_hat(k, &colorful_weights(sizes, x)?)?, tau_hat(cx, k, x)?))
        });
        if k == 1 {
            plan.pointwise("multipartite graph form", &t, Some(k), move |_, x| {
                let w = colorful_weights(sizes, x)?;
                Ok(pair(clark_tau_hat(&w)?, colorful_tau_hat(1, &w)?))
            });
        }
        if k == sizes.len() as isize - 1 {
            plan.pointwise("top-dimensional form", &t, Some(k), move |_, x| {
                let w = colorful_weights(sizes, x)?;
                Ok(pair(colorful_top_tau_hat(&w)?, colorful_tau_hat(k, &w)?))
            });
        }
        if sizes == [2, 2, 2] {
            plan.pointwise("octahedron display", &t, Some(k), move |cx, x| {
                Ok(pair(octahedron_tau_hat(k, &colorful_weights(sizes, x)?)?, tau_hat(cx, k, x)?))
            });
        }
    }
    Ok(())
}

fn plan_cube(plan: &mut Plan) -> Result<()> {
    for (n, k) in [(1, 0), (1, 1), (2, 0), (2, 1), (2, 2), (3, 1), (3, 2), (3, 3)] {
        let t = cube_target(n)?;
        plan.pointwise("weighted count", &t, Some(k), move |cx, x| {
            Ok(pair(cube_tau_hat(k, &CubeWeights::from_specialization(n, x)?)?, tau_hat(cx, k, x)?))
        });
    }
    let q3 = cube_target(3)?;
    plan.pointwise("graph Kirchhoff determinant", &q3, Some(1), |cx, x| {
        Ok(pair(cube_tau_hat(1, &CubeWeights::from_specialization(3, x)?)?, kirchhoff_tau_hat(&cx.skeleton(1)?, x)?))
    });
    for n in 1..=3 {
        let t = cube_target(n)?;
        for k in 1..=n as isize {
            plan.pointwise("up-down spectrum", &t, Some(k - 1), move |cx, x| {
                let predicted = cube_spectrum(k, &CubeWeights::from_specialization(n, x)?)?;
                let computed = updown_laplacian(cx, k - 1, x)?.char_poly()?.strip_zero_roots();
                Ok(pair(predicted.char_poly(), computed))
            });
        }
        for j in -1..=n as isize {
            plan.pointwise("cell weight product", &t, Some(j), move |cx, x| {
                Ok(pair(cube_cell_weight_product(j, &CubeWeights::from_specialization(n, x)?)?, cell_weight_product(cx, j, x)?))
            });
        }
    }
    Ok(())
}

fn plan_spectra(plan: &mut Plan) -> Result<()> {
    let targets = [
        simplex_target(3, 1)?,
        colorful_target(&[2, 2])?,
        colorful_target(&[2, 2, 2])?,
        cube_target(2)?,
        cube_target(3)?,
    ];
    for t in &targets {
        for k in -1..=t.complex.dim() {
            plan.pointwise("up-down/down-up spectra", t, Some(k), move |cx, x| {
                Ok(truth(verify_updown_downup_identity(cx, k, x)?))
            });
            plan.pointwise("total spectrum decomposition", t, Some(k), move |cx, x| {
                Ok(truth(verify_total_decomposition(cx, k, x)?))
            });
        }
    }
    for sizes in [&[2, 2][..], &[2, 3], &[2, 2, 2]] {
        let t = colorful_target(sizes)?;
        for k in -1..=t.complex.dim() {
            plan.pointwise("colorful total spectrum", &t, Some(k), move |cx, x| {
                let predicted = colorful_spectrum(k, &colorful_weights(sizes, x)?)?;
                Ok(pair(predicted.char_poly(), total_laplacian(cx, k, x)?.char_poly()?))
            });
        }
    }
    let n = 3;
    let t = Target::new("suspension of K_3", join(&simplex_skeleton(n, 1)?, &complete_colorful(&ColorfulSpec::new([2]))?)?);
    let split = move |x: &Specialization| -> Result<(Vec<BigRational>, Vec<BigRational>)> {
        Ok((simplex_weights(n, x)?, colorful_weights(&[2], x)?.remove(0)))
    };
    for k in -1..=2 {
        plan.pointwise("suspension total spectrum", &t, Some(k), move |cx, x| {
            let (xs, ys) = split(x)?;
            let joined = join_spectrum(&[complete_graph_total_spectra(&xs), edgeless_total_spectra(&ys)], k)?;
            let shown = suspension_total_spectrum(n, k, &xs.iter().sum(), &ys.iter().sum())?;
            if joined != shown {
                return Ok(pair(shown.to_string(), joined.to_string()));
            }
            Ok(pair(shown.char_poly(), total_laplacian(cx, k, x)?.char_poly()?))
        });
    }
    for k in 0..=2 {
        plan.pointwise("suspension pi_hat", &t, Some(k), move |cx, x| {
            let (xs, ys) = split(x)?;
            Ok(pair(suspension_pi_hat(n, k, &xs.iter().sum(), &ys.iter().sum())?, pi_hat(cx, k, x)?))
        });
        plan.pointwise("suspension weighted count", &t, Some(k), move |cx, x| {
            let (xs, ys) = split(x)?;
            Ok(pair(suspension_tau_hat(k, &xs, &[ys[0].clone(), ys[1].clone()])?, tau_hat(cx, k, x)?))
        });
    }
    Ok(())
}

fn plan_identities(plan: &mut Plan) -> Result<()> {
    plan.single("triple-count identity", "-", None, || {
        let bad: Vec<(i64, i64)> = (0..=12i64)
            .flat_map(|n| (-3..=n + 2).map(move |k| (n, k)))
            .filter(|&(n, k)| {
                let (l, r) = triple_count_sides(n, k);
                l != r || (k < 0 && l != BigInt::from(0))
            })
            .collect();
        Ok(pair("[]".to_string(), format!("{bad:?}")))
    });
    plan.single("Pascal recurrence exceptions", "-", None, || {
        let bad: Vec<(i64, i64)> = (-10..=10i64)
            .flat_map(|n| (-10..=10i64).map(move |k| (n, k)))
            .filter(|&(n, k)| binom_ext(n, k) != binom_ext(n - 1, k) + binom_ext(n - 1, k - 1))
            .collect();
        Ok(pair("[(0, 0)]".to_string(), format!("{bad:?}")))
    });
    for (n, d) in [(4, 1), (5, 2)] {
        let t = simplex_target(n, d)?;
        plan.pointwise("weighted simplex skeleton count", &t, Some(d), move |cx, x| {
            Ok(pair(kalai_tau_hat(d as usize, &simplex_weights(n, x)?)?, tau_hat(cx, d, x)?))
        });
    }
    let graphs = [simplex_target(4, 1)?, colorful_target(&[2, 3])?, Target::new("cube 3 graph", hypercube(CubeSpec { n: 3 })?.skeleton(1)?)];
    for g in &graphs {
        plan.pointwise("graph count from vertex Laplacian", g, Some(1), |cx, x| {
            Ok(pair(tau_hat(cx, 1, x)?, graph_tau_hat(cx, x)?))
        });
    }
    for n in [3, 4] {
        let t = simplex_target(n, 1)?;
        plan.pointwise("top boundary submatrices", &t, Some(1), move |cx, x| {
            let rows: Vec<String> = cx.cells(0).iter().map(|c| c.id.clone()).collect();
            let cols: Vec<String> = cx.cells(1).iter().map(|c| c.id.clone()).collect();
            let mut failures = Vec::new();
            for s in rows.iter().cloned().combinations(n - 1) {
                for t in cols.iter().cloned().combinations(n - 1) {
                    if !submatrix_determinant_check(cx, &s, &t, x)?.holds() {
                        failures.push(format!("{s:?}/{t:?}"));
                    }
                }
            }
            Ok(pair("[]".to_string(), format!("{failures:?}")))
        });
    }
    Ok(())
}

/// Runs a suite with `points` seeded specializations besides the all-ones point.
pub fn run_suite(suite: Suite, seed: u64, points: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut plan = Plan { seed, points, tasks: Vec::new() };
    let all = suite == Suite::All;
    if all || suite == Suite::Cmtt {
        plan_cmtt(&mut plan)?;
    }
    if all || suite == Suite::Colorful {
        plan_colorful(&mut plan)?;
    }
    if all || suite == Suite::Cube {
        plan_cube(&mut plan)?;
    }
    if all || suite == Suite::Spectra {
        plan_spectra(&mut plan)?;
    }
    if all || suite == Suite::Identities {
        plan_identities(&mut plan)?;
    }
    let checks: Vec<Check> = plan.tasks.into_par_iter().map(|task| task()).collect::<Vec<_>>().concat();
    Ok(VerificationReport { suite, seed, points, checks, wall_time_ms: start.elapsed().as_millis() })
}
