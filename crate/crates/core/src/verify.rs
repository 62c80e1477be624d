//! Seeded property suites over random k-graphs.
//!
//! Each trial draws its own instances from [`trial_rng`], so trials run in
//! parallel and the summary does not depend on scheduling. Every check is
//! also exposed on its own and returns an [`Outcome`].

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::io::serialize;
use crate::linalg::{SymmetricMatrix, DEFAULT_ORDER_LIMIT};
use crate::multigraph::{clique_multigraph, line_degree_check, line_multigraph};
use crate::power::{kernel_dimension_witnesses, predict_from_values, verify_power_spectrum, PowerParams};
use crate::random::{binomial, planted_balanced, random_hypergraph, trial_rng, trial_seed};
use crate::scalar::Tolerances;
use crate::spectral::{
    degree_matrix, incidence_matrix, product_eigsum_check, signless_laplacian, spectrum_union_check,
    subgraph_monotonicity_check, verify_poly_identity_line, HypergraphSpectrum,
};
use crate::structure::{
    balanced_bipartition_to_kernel, coloring_bound, degree_sum_bounds, detect_easy_balanced_patterns,
    diameter_upper_bound, distinct_eigenvalues_vs_diameter, find_partial_bipartition, greedy_min_degree_coloring,
    partial_bipartition_from_kernel, regularity_report, spectral_edge_count, PartialBipartition,
};

type Tol = Tolerances<f64>;

/// Result of one check on one instance.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail(String),
    Skip(String),
    /// Not a failure; something worth logging (converse search).
    Finding(String),
}

impl Outcome {
    fn from_bool(ok: bool, detail: impl FnOnce() -> String) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(detail())
        }
    }

    fn from_result(r: Result<Outcome>) -> Self {
        r.unwrap_or_else(|e| Outcome::Fail(format!("error: {e}")))
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Outcome::Fail(_))
    }
}

/// Q = B B^T = D + A_C and B^T B = kI + A_L, compared entrywise.
pub fn check_factorization(h: &Hypergraph) -> Outcome {
    let b = incidence_matrix(h);
    let q: SymmetricMatrix<i64> = b.row_gram();
    let dac = degree_matrix(h).add(clique_multigraph(h).adjacency());
    let btb: SymmetricMatrix<i64> = b.col_gram();
    let kal = SymmetricMatrix::identity(h.m())
        .scale(&(h.k() as i64))
        .add(line_multigraph(h).adjacency());
    match (dac, kal) {
        (Ok(dac), Ok(kal)) => Outcome::from_bool(q == dac && btb == kal, || {
            format!("BB^T = D + A_C: {}, B^TB = kI + A_L: {}", q == dac, btb == kal)
        }),
        (Err(e), _) | (_, Err(e)) => Outcome::Fail(format!("error: {e}")),
    }
}

/// Row sums: Q gives k·d(v), A_C gives (k-1)·d(v), and the line multigraph
/// degree identity.
pub fn check_row_sums(h: &Hypergraph) -> Outcome {
    let k = h.k() as i64;
    let d: Vec<i64> = h.degrees().per_vertex.iter().map(|&x| x as i64).collect();
    let q = match signless_laplacian(h) {
        Ok(q) => q,
        Err(e) => return Outcome::Fail(format!("error: {e}")),
    };
    let q_ok = q.row_sums().iter().zip(&d).all(|(s, d)| *s == k * d);
    let c_ok = clique_multigraph(h)
        .degrees()
        .iter()
        .zip(&d)
        .all(|(s, d)| *s == (k - 1) * d);
    let l_ok = line_degree_check(h);
    Outcome::from_bool(q_ok && c_ok && l_ok, || {
        format!("Q rows: {q_ok}, A_C rows: {c_ok}, line degrees: {l_ok}")
    })
}

pub fn check_poly_identity(h: &Hypergraph) -> Outcome {
    match verify_poly_identity_line(h, DEFAULT_ORDER_LIMIT) {
        Ok(c) => Outcome::from_bool(c.holds(), || format!("{c:?}")),
        Err(Error::OrderLimitExceeded { order, limit }) => Outcome::Skip(format!("order {order} > {limit}")),
        Err(e) => Outcome::Fail(format!("error: {e}")),
    }
}

pub fn check_edge_count(hs: &HypergraphSpectrum<f64>) -> Outcome {
    match spectral_edge_count(hs.spectrum().values(), hs.k()) {
        Ok(m) => Outcome::from_bool(m == hs.m(), || format!("spectrum gives {m} edges, actual {}", hs.m())),
        Err(e) => Outcome::Fail(format!("error: {e}")),
    }
}

/// Degree-sum bounds and kd ≤ ρ ≤ kΔ (connected instances).
pub fn check_bounds(h: &Hypergraph, hs: &HypergraphSpectrum<f64>) -> Outcome {
    let b = degree_sum_bounds(h, hs);
    match b.holds {
        None => Outcome::Skip("disconnected".into()),
        Some(ok) => Outcome::from_bool(ok, || format!("{b:?}")),
    }
}

pub fn check_regularity(h: &Hypergraph, hs: &HypergraphSpectrum<f64>) -> Outcome {
    if !hs.is_connected() {
        return Outcome::Skip("disconnected".into());
    }
    match regularity_report(h, hs) {
        Ok(_) => Outcome::Pass,
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

pub fn check_principal_vector(hs: &HypergraphSpectrum<f64>) -> Outcome {
    if !hs.is_connected() {
        return Outcome::Skip("disconnected".into());
    }
    let p = hs.principal();
    Outcome::from_bool(p.simple && p.positive, || {
        format!("simple: {}, positive: {}", p.simple, p.positive)
    })
}

/// Greedy coloring is proper and within ⌊ρ/k⌋ + 1 colors.
pub fn check_coloring(h: &Hypergraph, hs: &HypergraphSpectrum<f64>) -> Outcome {
    let c = greedy_min_degree_coloring(h);
    let bound = coloring_bound(hs);
    Outcome::from_bool(c.is_proper(h) && c.color_count <= bound, || {
        format!("proper: {}, colors {} vs bound {bound}", c.is_proper(h), c.color_count)
    })
}

/// If 0 is an eigenvalue, the kernel vector's sign pattern is a partial
/// bipartition.
pub fn check_zero_to_partition(h: &Hypergraph, hs: &HypergraphSpectrum<f64>) -> Outcome {
    let spec = hs.spectrum();
    if spec.smallest() > spec.tolerances().zero {
        return Outcome::Skip("no zero eigenvalue".into());
    }
    match partial_bipartition_from_kernel(h, hs) {
        Ok(Some(p)) => Outcome::from_bool(p.is_valid_for(h), || format!("{p:?}")),
        Ok(None) => Outcome::Fail("zero eigenvalue without kernel vector".into()),
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

/// ‖Qx‖ / (‖Q‖_F ‖x‖) for the vector of a balanced partition; must be at
/// most 1e-8.
pub fn check_balanced_kernel(h: &Hypergraph, p: &PartialBipartition) -> Outcome {
    Outcome::from_result((|| {
        let x: Vec<f64> = balanced_bipartition_to_kernel(h, p)?;
        let q = signless_laplacian(h)?.cast::<f64>();
        let qx = q.mul_vec(&x)?;
        let num = qx.iter().map(|v| v * v).sum::<f64>().sqrt();
        let den = q.frobenius_norm() * x.iter().map(|v| v * v).sum::<f64>().sqrt();
        let rel = if den == 0.0 { num } else { num / den };
        Ok(Outcome::from_bool(rel <= 1e-8, || format!("relative residual {rel:e}")))
    })())
}

/// Partially bipartite instances whose Q has no zero eigenvalue: the
/// converse fails there. Reported as findings.
pub fn converse_search(h: &Hypergraph, hs: &HypergraphSpectrum<f64>) -> Outcome {
    if h.n() > 10 {
        return Outcome::Skip("too many vertices for exhaustive search".into());
    }
    let spec = hs.spectrum();
    match find_partial_bipartition(h) {
        Some(p) if spec.smallest() > spec.tolerances().zero => Outcome::Finding(format!(
            "partially bipartite (V1 = {:?}, V2 = {:?}) with smallest eigenvalue {:.6}",
            p.v1,
            p.v2,
            spec.smallest()
        )),
        _ => Outcome::Pass,
    }
}

pub fn check_union(g: &Hypergraph, g2: &Hypergraph, tol: &Tol) -> Outcome {
    Outcome::from_result(spectrum_union_check(g, g2, tol).map(|ok| Outcome::from_bool(ok, || "multisets differ".into())))
}

pub fn check_product(g: &Hypergraph, h: &Hypergraph, tol: &Tol) -> Outcome {
    Outcome::from_result(product_eigsum_check(g, h, tol).map(|c| {
        Outcome::from_bool(c.holds && c.exact_match, || {
            format!("holds: {}, exact: {}", c.holds, c.exact_match)
        })
    }))
}

pub fn check_subgraph(h: &Hypergraph, sub: &Hypergraph, tol: &Tol) -> Outcome {
    Outcome::from_result(
        subgraph_monotonicity_check(h, sub, tol).map(|ok| Outcome::from_bool(ok, || "radius increased".into())),
    )
}

pub fn check_distinct_vs_diameter(h: &Hypergraph, hs: &HypergraphSpectrum<f64>) -> Outcome {
    match distinct_eigenvalues_vs_diameter(h, hs) {
        Ok(r) => Outcome::from_bool(r.holds, || format!("{r:?}")),
        Err(Error::Disconnected) => Outcome::Skip("disconnected".into()),
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

pub fn check_diameter_bound(h: &Hypergraph, hs: &HypergraphSpectrum<f64>) -> Outcome {
    match diameter_upper_bound(h, hs) {
        Ok(b) => Outcome::from_bool(b.holds, || format!("{b:?}")),
        Err(e @ (Error::Disconnected | Error::TooFewEdges | Error::DegenerateSpectrum(..))) => {
            Outcome::Skip(e.to_string())
        }
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

/// Predicted versus computed spectrum of H^r_s, the exact trace, the
/// kernel witnesses, and agreement with composing blow-up and lift.
pub fn check_power(h: &Hypergraph, params: PowerParams, tol: &Tol) -> Outcome {
    Outcome::from_result((|| {
        let v = verify_power_spectrum(h, params, tol)?;
        let p = &v.predicted;
        let base_trace = signless_laplacian(h)?.trace();
        let rm = (params.r * h.m()) as i64;
        let exact = p.exact_trace(h.k(), base_trace);
        let w = kernel_dimension_witnesses(h, params, tol)?;
        let certified = p.zero_multiplicity + p.padding_multiplicity;
        let witnesses_ok = w.rank == certified && w.count == certified && w.families.iter().all(|f| f.max_residual <= 1e-8);

        let base = HypergraphSpectrum::compute(h, tol)?;
        let t = base.spectrum().tolerances();
        let blown = predict_from_values(base.spectrum().values(), t.zero, t.group, h.k(), h.m(), PowerParams::blow_up(h.k(), params.s))?;
        let composed = predict_from_values(&blown.values, t.zero, t.group, h.k() * params.s, h.m(), PowerParams::lift(params.r))?;
        let composed_ok = crate::linalg::multiset_close(&composed.values, &p.values, v.tolerance);

        let ok = v.matches && !v.zero_multiplicity_mismatch && exact == rm && v.constructed_trace == rm && witnesses_ok && composed_ok;
        Ok(Outcome::from_bool(ok, || {
            format!(
                "s={}, r={}: spectrum {}, zero multiplicity {} vs {}, trace {exact}/{}/{rm}, witnesses {}/{} of {certified}, composition {composed_ok}",
                params.s, params.r, v.matches, v.observed_zero_multiplicity, p.zero_multiplicity, v.constructed_trace, w.rank, w.count
            )
        }))
    })())
}

/// Every suite, in report order.
pub const SUITES: &[&str] = &[
    "factorization",
    "row-sums",
    "poly-identity",
    "edge-count",
    "bounds",
    "regularity-equivalence",
    "principal-vector",
    "coloring",
    "zero-to-partition",
    "balanced-to-kernel",
    "converse-search",
    "union-spectrum",
    "product-spectrum",
    "subgraph-monotonicity",
    "distinct-vs-diameter",
    "diameter-bound",
    "power-spectrum",
];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyConfig {
    pub trials: usize,
    pub n_max: usize,
    pub ks: Vec<usize>,
    pub seed: u64,
    #[serde(skip)]
    pub tol: Tol,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            trials: 100,
            n_max: 8,
            ks: vec![2, 3],
            seed: 1,
            tol: Tol::default(),
        }
    }
}

/// A failing (or, for the converse search, noteworthy) instance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub trial: usize,
    pub trial_seed: u64,
    pub instance: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteSummary {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub findings: usize,
    pub counterexamples: Vec<Counterexample>,
    /// Findings (kept separately from failures).
    pub logged: Vec<Counterexample>,
    pub skip_reasons: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifySummary {
    pub config: VerifyConfig,
    pub suites: Vec<SuiteSummary>,
    pub all_passed: bool,
}

const KEEP: usize = 5;

struct Record {
    suite: &'static str,
    outcome: Outcome,
    instance: String,
}

fn file_of(hs: &[&Hypergraph]) -> String {
    hs.iter()
        .map(|h| serialize(h).unwrap_or_else(|e| format!("# {e}\n")))
        .collect::<Vec<_>>()
        .join("---\n")
}

/// A random k-graph with between k and `n_max` vertex tokens and up to 2n
/// edges.
pub fn random_instance<R: Rng + ?Sized>(rng: &mut R, k: usize, n_max: usize) -> Result<Hypergraph> {
    let n = rng.gen_range(k..=n_max.max(k));
    let total = binomial(n, k).unwrap_or(u64::MAX).min(2 * n as u64) as usize;
    let m = rng.gen_range(1..=total);
    random_hypergraph(rng, k, n, m)
}

/// A connected random instance: enough edges to possibly connect n
/// vertices, resampled up to 100 times. One in five draws is a complete
/// k-graph, to exercise the regular case.
pub fn connected_instance<R: Rng + ?Sized>(rng: &mut R, k: usize, n_max: usize) -> Result<Option<Hypergraph>> {
    for _ in 0..100 {
        let n = rng.gen_range(k..=n_max.max(k));
        let total = binomial(n, k).unwrap_or(u64::MAX) as usize;
        if rng.gen_bool(0.2) && total <= 64 {
            return random_hypergraph(rng, k, n, total).map(Some);
        }
        let lo = (n - 1).div_ceil(k - 1).max(1).min(total);
        let hi = total.min(2 * n).max(lo);
        let m = rng.gen_range(lo..=hi);
        let h = random_hypergraph(rng, k, n, m)?;
        if h.is_connected() && h.n() == n {
            return Ok(Some(h));
        }
    }
    Ok(None)
}

/// Re-tokens every vertex as `prefix` + token.
pub fn relabel(h: &Hypergraph, prefix: &str) -> Result<Hypergraph> {
    let vertices = h.vertices().iter().map(|v| format!("{prefix}{v}")).collect();
    Hypergraph::from_parts(h.k(), vertices, h.edges().to_vec())
}

fn run_trial(cfg: &VerifyConfig, index: usize) -> Vec<Record> {
    let mut rng = trial_rng(cfg.seed, index as u64);
    let mut out = Vec::new();
    let tol = &cfg.tol;
    let k = cfg.ks[rng.gen_range(0..cfg.ks.len())];
    let mut push = |suite: &'static str, outcome: Outcome, instance: String| out.push(Record { suite, outcome, instance });

    let skip_all = |push: &mut dyn FnMut(&'static str, Outcome, String), suites: &[&'static str], why: String| {
        for s in suites {
            push(s, Outcome::Skip(why.clone()), String::new());
        }
    };

    match random_instance(&mut rng, k, cfg.n_max).and_then(|h| Ok((HypergraphSpectrum::compute(&h, tol)?, h))) {
        Ok((hs, h)) => {
            let f = file_of(&[&h]);
            push("factorization", check_factorization(&h), f.clone());
            push("row-sums", check_row_sums(&h), f.clone());
            push("poly-identity", check_poly_identity(&h), f.clone());
            push("edge-count", check_edge_count(&hs), f.clone());
            push("coloring", check_coloring(&h, &hs), f.clone());
            push("zero-to-partition", check_zero_to_partition(&h, &hs), f.clone());
            match detect_easy_balanced_patterns(&h) {
                Some(p) => push("balanced-to-kernel", check_balanced_kernel(&h, &p), f.clone()),
                None => push("balanced-to-kernel", Outcome::Skip("no easy pattern".into()), String::new()),
            }
            push("converse-search", converse_search(&h, &hs), f.clone());
            let keep: Vec<bool> = (0..h.m()).map(|_| rng.gen_bool(0.6)).collect();
            let sub = h.edge_subgraph(|j| keep[j]);
            push("subgraph-monotonicity", check_subgraph(&h, &sub, tol), f);
        }
        Err(e) => skip_all(
            &mut push,
            &[
                "factorization",
                "row-sums",
                "poly-identity",
                "edge-count",
                "coloring",
                "zero-to-partition",
                "balanced-to-kernel",
                "converse-search",
                "subgraph-monotonicity",
            ],
            format!("instance: {e}"),
        ),
    }

    match planted_balanced(&mut rng, k, cfg.n_max.max(k), cfg.n_max.max(2)) {
        Ok(Some((h, p))) => push("balanced-to-kernel", check_balanced_kernel(&h, &p), file_of(&[&h])),
        Ok(None) => push("balanced-to-kernel", Outcome::Skip("no room to plant".into()), String::new()),
        Err(e) => push("balanced-to-kernel", Outcome::Fail(e.to_string()), String::new()),
    }

    match connected_instance(&mut rng, k, cfg.n_max) {
        Ok(Some(h)) => match HypergraphSpectrum::compute(&h, tol) {
            Ok(hs) => {
                let f = file_of(&[&h]);
                push("bounds", check_bounds(&h, &hs), f.clone());
                push("regularity-equivalence", check_regularity(&h, &hs), f.clone());
                push("principal-vector", check_principal_vector(&hs), f.clone());
                push("distinct-vs-diameter", check_distinct_vs_diameter(&h, &hs), f.clone());
                push("diameter-bound", check_diameter_bound(&h, &hs), f);
            }
            Err(e) => push("bounds", Outcome::Fail(e.to_string()), file_of(&[&h])),
        },
        Ok(None) => skip_all(
            &mut push,
            &["bounds", "regularity-equivalence", "principal-vector", "distinct-vs-diameter", "diameter-bound"],
            "no connected instance in 100 attempts".into(),
        ),
        Err(e) => push("bounds", Outcome::Fail(e.to_string()), String::new()),
    }

    let small = cfg.n_max.min(5);
    let pair = random_instance(&mut rng, k, small)
        .and_then(|a| Ok((a, relabel(&random_instance(&mut rng, k, small)?, "b")?)));
    match pair {
        Ok((a, b)) => push("union-spectrum", check_union(&a, &b, tol), file_of(&[&a, &b])),
        Err(e) => push("union-spectrum", Outcome::Fail(e.to_string()), String::new()),
    }
    let tiny = cfg.n_max.min(4);
    let pair = random_instance(&mut rng, k, tiny).and_then(|a| Ok((a, random_instance(&mut rng, k, tiny)?)));
    match pair {
        Ok((a, b)) => push("product-spectrum", check_product(&a, &b, tol), file_of(&[&a, &b])),
        Err(e) => push("product-spectrum", Outcome::Fail(e.to_string()), String::new()),
    }

    let s = rng.gen_range(1..=2);
    let r = k * s + rng.gen_range(0..=2);
    match random_instance(&mut rng, k, cfg.n_max.min(6)) {
        Ok(h) => push("power-spectrum", check_power(&h, PowerParams::new(s, r), tol), file_of(&[&h])),
        Err(e) => push("power-spectrum", Outcome::Fail(e.to_string()), String::new()),
    }
    out
}

/// Runs `cfg.trials` trials (in parallel) and tallies every suite.
pub fn run_suites(cfg: &VerifyConfig) -> VerifySummary {
    let trials: Vec<Vec<Record>> = (0..cfg.trials).into_par_iter().map(|i| run_trial(cfg, i)).collect();
    let mut suites: Vec<SuiteSummary> = SUITES
        .iter()
        .map(|&name| SuiteSummary {
            name,
            passed: 0,
            failed: 0,
            skipped: 0,
            findings: 0,
            counterexamples: Vec::new(),
            logged: Vec::new(),
            skip_reasons: Vec::new(),
        })
        .collect();
    for (trial, records) in trials.into_iter().enumerate() {
        for rec in records {
            let s = suites
                .iter_mut()
                .find(|s| s.name == rec.suite)
                .expect("suite listed in SUITES");
            let example = |detail: String| Counterexample {
                trial,
                trial_seed: trial_seed(cfg.seed, trial as u64),
                instance: rec.instance.clone(),
                detail,
            };
            match rec.outcome {
                Outcome::Pass => s.passed += 1,
                Outcome::Fail(d) => {
                    s.failed += 1;
                    if s.counterexamples.len() < KEEP {
                        s.counterexamples.push(example(d));
                    }
                }
                Outcome::Skip(reason) => {
                    s.skipped += 1;
                    if !s.skip_reasons.contains(&reason) && s.skip_reasons.len() < KEEP {
                        s.skip_reasons.push(reason);
                    }
                }
                Outcome::Finding(d) => {
                    s.findings += 1;
                    s.passed += 1;
                    if s.logged.len() < KEEP {
                        s.logged.push(example(d));
                    }
                }
            }
        }
    }
    VerifySummary {
        all_passed: suites.iter().all(|s| s.failed == 0),
        config: cfg.clone(),
        suites,
    }
}
