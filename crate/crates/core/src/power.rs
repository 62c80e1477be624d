//! Generalized power hypergraphs H^r_s and their signless Laplacian
//! spectrum.
//!
//! H^r_s replaces every base vertex `v` by a set ς_v of `s` vertices (the
//! main vertex `v` plus copies `v#2..v#s`) and pads every base edge `e_j`
//! with `r - ks` additional vertices `e{j}@1..` (j is 1-based). Its
//! spectrum is determined by the base spectrum:
//!
//! * `s(λ - k) + r` for each nonzero base eigenvalue λ,
//! * `r - ks` with multiplicity `m - t` (t = rank of the base Q),
//! * `0` with multiplicity `(r - ks - 1)m + sn`,
//!
//! where for `r = ks` the middle group is merged into the zero group,
//! giving zero multiplicity `sn - t`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::linalg::{eigen_decompose, group_values, multiset_close, Spectrum};
use crate::scalar::{Real, Tolerances};
use crate::spectral::{gram_line_matrix, signless_laplacian, HypergraphSpectrum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PowerParams {
    pub s: usize,
    pub r: usize,
}

impl PowerParams {
    pub fn new(s: usize, r: usize) -> Self {
        Self { s, r }
    }

    /// H^r = H^r_1.
    pub fn lift(r: usize) -> Self {
        Self { s: 1, r }
    }

    /// H_s = H^{ks}_s.
    pub fn blow_up(k: usize, s: usize) -> Self {
        Self { s, r: k * s }
    }

    pub fn validate(&self, k: usize) -> Result<()> {
        if self.s < 1 {
            return Err(Error::BadParams(format!("s = {} must be at least 1", self.s)));
        }
        if self.r < k * self.s {
            return Err(Error::BadParams(format!(
                "r = {} is smaller than ks = {}",
                self.r,
                k * self.s
            )));
        }
        Ok(())
    }

    /// Number of additional vertices per edge, r - ks.
    pub fn padding(&self, k: usize) -> usize {
        self.r - k * self.s
    }
}

/// Where each base vertex and edge went in H^r_s (vertex indices of the
/// power hypergraph).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerVertexMap {
    /// ς_v: main vertex first, then the copies.
    pub vertex_sets: Vec<Vec<usize>>,
    /// ς_e: the additional vertices of each base edge.
    pub edge_sets: Vec<Vec<usize>>,
}

/// Builds H^r_s. Vertex order: for each base vertex, its main vertex and
/// copies; then the additional vertices edge by edge.
pub fn power(h: &Hypergraph, params: PowerParams) -> Result<(Hypergraph, PowerVertexMap)> {
    params.validate(h.k())?;
    let PowerParams { s, r } = params;
    let pad = params.padding(h.k());
    let mut vertices = Vec::with_capacity(s * h.n() + pad * h.m());
    let mut vertex_sets = Vec::with_capacity(h.n());
    for token in h.vertices() {
        let set: Vec<usize> = (vertices.len()..vertices.len() + s).collect();
        vertices.push(token.clone());
        vertices.extend((2..=s).map(|j| format!("{token}#{j}")));
        vertex_sets.push(set);
    }
    let mut edge_sets = Vec::with_capacity(h.m());
    for j in 0..h.m() {
        let set: Vec<usize> = (vertices.len()..vertices.len() + pad).collect();
        vertices.extend((1..=pad).map(|i| format!("e{}@{i}", j + 1)));
        edge_sets.push(set);
    }
    let edges = h
        .edges()
        .iter()
        .zip(&edge_sets)
        .map(|(e, extra)| {
            let mut edge: Vec<usize> = e.iter().flat_map(|&v| vertex_sets[v].iter().copied()).collect();
            edge.extend(extra);
            edge
        })
        .collect();
    let hp = Hypergraph::from_parts(r, vertices, edges)?;
    Ok((
        hp,
        PowerVertexMap {
            vertex_sets,
            edge_sets,
        },
    ))
}

/// Predicted spectrum of Q(H^r_s), grouped.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PowerPrediction<T> {
    pub params: PowerParams,
    /// Rank of the base Q.
    pub rank: usize,
    /// `s(λ - k) + r` for the nonzero base eigenvalues, descending.
    pub lifted: Vec<T>,
    /// Multiplicity of `r - ks` (zero when r = ks; then merged below).
    pub padding_multiplicity: usize,
    pub zero_multiplicity: usize,
    /// All eigenvalues with multiplicity, descending.
    pub values: Vec<T>,
    /// `(value, multiplicity)` clusters of `values`.
    pub groups: Vec<(T, usize)>,
}

impl<T: Real> PowerPrediction<T> {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Trace of the prediction in exact arithmetic, given the exact base
    /// trace (the sum of the nonzero base eigenvalues, i.e. km):
    /// `s * base_trace - t*ks + t*r + (m - t)(r - ks)`.
    pub fn exact_trace(&self, k: usize, base_trace: i64) -> i64 {
        let (s, r) = (self.params.s as i64, self.params.r as i64);
        let (t, k) = (self.rank as i64, k as i64);
        let mid = self.padding_multiplicity as i64;
        s * base_trace - t * k * s + t * r + mid * (r - k * s)
    }
}

/// Predicts Spec Q(H^r_s) from a base spectrum of a k-graph with `m`
/// edges.
pub fn predict_power_spectrum<T: Real>(
    base: &Spectrum<T>,
    k: usize,
    m: usize,
    params: PowerParams,
) -> Result<PowerPrediction<T>> {
    let tol = base.tolerances();
    predict_from_values(base.values(), tol.zero, tol.group, k, m, params)
}

/// Same as [`predict_power_spectrum`] on a bare eigenvalue list (any order).
/// Values with |λ| ≤ `zero_tol` count as zero.
pub fn predict_from_values<T: Real>(
    values: &[T],
    zero_tol: T,
    group_tol: T,
    k: usize,
    m: usize,
    params: PowerParams,
) -> Result<PowerPrediction<T>> {
    params.validate(k)?;
    let n = values.len();
    let PowerParams { s, r } = params;
    let pad = params.padding(k);
    let (sf, kf, rf) = (T::from_count(s), T::from_count(k), T::from_count(r));
    let mut lifted: Vec<T> = values
        .iter()
        .filter(|v| v.abs() > zero_tol)
        .map(|&v| sf * (v - kf) + rf)
        .collect();
    let t = lifted.len();
    if t > m {
        return Err(Error::BadParams(format!("base rank {t} exceeds edge count {m}")));
    }
    lifted.sort_by(|a, b| b.partial_cmp(a).unwrap_or(std::cmp::Ordering::Equal));
    let (padding_multiplicity, zero_multiplicity) = if pad == 0 {
        (0, s * n - t)
    } else {
        (m - t, (pad - 1) * m + s * n)
    };
    let mut all = lifted.clone();
    all.extend(std::iter::repeat_n(T::from_count(pad), padding_multiplicity));
    all.extend(std::iter::repeat_n(T::zero(), zero_multiplicity));
    let groups = group_values(&all, group_tol)
        .into_iter()
        .map(|g| (g.value, g.multiplicity))
        .collect();
    Ok(PowerPrediction {
        params,
        rank: t,
        lifted,
        padding_multiplicity,
        zero_multiplicity,
        values: all,
        groups,
    })
}

/// Prediction versus direct eigendecomposition of the constructed H^r_s.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PowerVerification<T> {
    pub matches: bool,
    pub predicted: PowerPrediction<T>,
    pub observed: Vec<T>,
    pub observed_zero_multiplicity: usize,
    /// Observed zero multiplicity differs from the predicted exact value.
    pub zero_multiplicity_mismatch: bool,
    /// Integer trace of Q(H^r_s).
    pub constructed_trace: i64,
    pub tolerance: T,
}

pub fn verify_power_spectrum<T: Real>(
    h: &Hypergraph,
    params: PowerParams,
    tol: &Tolerances<T>,
) -> Result<PowerVerification<T>> {
    let base = HypergraphSpectrum::compute(h, tol)?;
    let predicted = predict_power_spectrum(base.spectrum(), h.k(), h.m(), params)?;
    let (hp, _) = power(h, params)?;
    let constructed = HypergraphSpectrum::compute(&hp, tol)?;
    let spec = constructed.spectrum();
    let tolerance = spec.tolerances().group;
    let observed_zero_multiplicity = spec.zero_indices().len();
    Ok(PowerVerification {
        matches: multiset_close(spec.values(), &predicted.values, tolerance),
        zero_multiplicity_mismatch: observed_zero_multiplicity != predicted.zero_multiplicity,
        observed: spec.values().to_vec(),
        observed_zero_multiplicity,
        constructed_trace: constructed.q().trace(),
        predicted,
        tolerance,
    })
}

/// An eigenpair of Q(H^r_s) lifted from a base eigenpair.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LiftedPair<T> {
    pub lambda: T,
    pub vector: Vec<T>,
    /// ‖Qx - λx‖ / (‖Q‖_F ‖x‖) on the constructed hypergraph.
    pub relative_residual: T,
}

/// Lifts a base eigenpair (μ, y), μ > 0: every vertex of ς_v takes y_v and
/// each additional vertex of e takes y(e)/μ. The result is an eigenpair for
/// λ = s(μ - k) + r.
pub fn lift_eigenvector<T: Real>(
    h: &Hypergraph,
    params: PowerParams,
    mu: T,
    y: &[T],
    zero_tol: T,
) -> Result<LiftedPair<T>> {
    if mu <= zero_tol {
        return Err(Error::NonPositiveEigenvalue(mu.as_f64()));
    }
    if y.len() != h.n() {
        return Err(Error::DimensionMismatch {
            expected: h.n(),
            found: y.len(),
        });
    }
    let (hp, map) = power(h, params)?;
    let mut x = vec![T::zero(); hp.n()];
    for (v, set) in map.vertex_sets.iter().enumerate() {
        for &u in set {
            x[u] = y[v];
        }
    }
    for (e, set) in h.edges().iter().zip(&map.edge_sets) {
        let ye: T = e.iter().map(|&v| y[v]).sum();
        for &u in set {
            x[u] = ye / mu;
        }
    }
    let lambda = T::from_count(params.s) * (mu - T::from_count(h.k())) + T::from_count(params.r);
    let relative_residual = relative_residual(&hp, lambda, &x)?;
    Ok(LiftedPair {
        lambda,
        vector: x,
        relative_residual,
    })
}

fn relative_residual<T: Real>(h: &Hypergraph, lambda: T, x: &[T]) -> Result<T> {
    let q = signless_laplacian(h)?.cast::<T>();
    let qx = q.mul_vec(x)?;
    let res = qx
        .iter()
        .zip(x)
        .map(|(a, b)| (*a - lambda * *b).powi(2))
        .sum::<T>()
        .sqrt();
    let xn = x.iter().map(|v| *v * *v).sum::<T>().sqrt();
    let scale = q.frobenius_norm() * xn;
    Ok(if scale == T::zero() { res } else { res / scale })
}

/// One explicit family of eigenvectors of Q(H^r_s).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WitnessFamily<T> {
    pub name: &'static str,
    pub eigenvalue: T,
    pub vectors: Vec<Vec<T>>,
    /// Largest relative residual over the family.
    pub max_residual: T,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WitnessReport<T> {
    pub families: Vec<WitnessFamily<T>>,
    pub count: usize,
    /// Numerical rank of all witness vectors stacked together.
    pub rank: usize,
}

/// Emits the eigenvector families certifying the eigenvalues 0 and r - ks.
///
/// For r > ks: differences inside each ς_e (eigenvalue 0); one vector per
/// vertex w of H_s, +1 on w and -1 on the first additional vertex of each
/// edge through w (eigenvalue 0); and vectors on the additional vertices
/// carrying a kernel vector of B^T B (eigenvalue r - ks).
///
/// For r = ks: base kernel vectors spread over each ς_v, and main-minus-copy
/// differences (both eigenvalue 0).
pub fn kernel_dimension_witnesses<T: Real>(
    h: &Hypergraph,
    params: PowerParams,
    tol: &Tolerances<T>,
) -> Result<WitnessReport<T>> {
    let (hp, map) = power(h, params)?;
    let pad = params.padding(h.k());
    let dim = hp.n();
    let unit = |entries: &[(usize, T)]| {
        let mut x = vec![T::zero(); dim];
        for &(i, v) in entries {
            x[i] = v;
        }
        x
    };
    let one = T::one();
    let mut families = Vec::new();

    if pad > 0 {
        let within_edge: Vec<Vec<T>> = map
            .edge_sets
            .iter()
            .flat_map(|set| set[1..].iter().map(|&u| unit(&[(set[0], one), (u, -one)])))
            .collect();
        families.push(("edge-padding-differences", T::zero(), within_edge));

        let mut star = Vec::new();
        for set in &map.vertex_sets {
            for &w in set {
                let mut x = vec![T::zero(); dim];
                x[w] = one;
                for &j in hp.incident_edges(w) {
                    x[map.edge_sets[j][0]] = -one;
                }
                star.push(x);
            }
        }
        families.push(("vertex-padding-stars", T::zero(), star));

        let gram = gram_line_matrix(h)?.cast::<T>();
        let gs = eigen_decompose(&gram, tol)?;
        let padded: Vec<Vec<T>> = gs
            .zero_indices()
            .into_iter()
            .map(|i| {
                let z = gs.vector(i);
                let mut x = vec![T::zero(); dim];
                for (j, set) in map.edge_sets.iter().enumerate() {
                    for &u in set {
                        x[u] = z[j];
                    }
                }
                x
            })
            .collect();
        families.push(("line-kernel-on-padding", T::from_count(pad), padded));
    } else {
        let base = HypergraphSpectrum::compute(h, tol)?;
        let spec = base.spectrum();
        let lifted: Vec<Vec<T>> = spec
            .zero_indices()
            .into_iter()
            .map(|i| {
                let z = spec.vector(i);
                let mut x = vec![T::zero(); dim];
                for (v, set) in map.vertex_sets.iter().enumerate() {
                    for &u in set {
                        x[u] = z[v];
                    }
                }
                x
            })
            .collect();
        families.push(("base-kernel-spread", T::zero(), lifted));

        let copies: Vec<Vec<T>> = map
            .vertex_sets
            .iter()
            .flat_map(|set| set[1..].iter().map(|&u| unit(&[(set[0], one), (u, -one)])))
            .collect();
        families.push(("copy-differences", T::zero(), copies));
    }

    let families = families
        .into_iter()
        .map(|(name, eigenvalue, vectors)| {
            let max_residual = vectors
                .iter()
                .map(|x| relative_residual(&hp, eigenvalue, x))
                .collect::<Result<Vec<T>>>()?
                .into_iter()
                .fold(T::zero(), T::max);
            Ok(WitnessFamily {
                name,
                eigenvalue,
                vectors,
                max_residual,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let stacked: Vec<&Vec<T>> = families.iter().flat_map(|f| &f.vectors).collect();
    let rank = numerical_rank(&stacked, T::lit(1e-8));
    Ok(WitnessReport {
        count: stacked.len(),
        families,
        rank,
    })
}

/// Rank by modified Gram–Schmidt: a vector counts when its residual after
/// projection exceeds `rel_tol` times its original norm.
pub fn numerical_rank<T: Real>(vectors: &[&Vec<T>], rel_tol: T) -> usize {
    let mut basis: Vec<Vec<T>> = Vec::new();
    for v in vectors {
        let norm = v.iter().map(|x| *x * *x).sum::<T>().sqrt();
        if norm == T::zero() {
            continue;
        }
        let mut w: Vec<T> = v.to_vec();
        for b in &basis {
            let dot: T = w.iter().zip(b).map(|(a, c)| *a * *c).sum();
            w.iter_mut().zip(b).for_each(|(a, c)| *a = *a - dot * *c);
        }
        let wn = w.iter().map(|x| *x * *x).sum::<T>().sqrt();
        if wn > rel_tol * norm {
            basis.push(w.into_iter().map(|x| x / wn).collect());
        }
    }
    basis.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::build_hypergraph;
    use approx::assert_abs_diff_eq;

    fn h(k: usize, edges: &[&str]) -> Hypergraph {
        build_hypergraph(k, edges.iter().map(|e| e.chars().map(|c| c.to_string()))).unwrap()
    }

    fn tol() -> Tolerances<f64> {
        Tolerances::default()
    }

    fn p3() -> Hypergraph {
        h(2, &["12", "23"])
    }

    fn c4() -> Hypergraph {
        h(2, &["12", "23", "34", "41"])
    }

    fn assert_values(got: &[f64], want: &[f64]) {
        assert_eq!(got.len(), want.len(), "{got:?} vs {want:?}");
        for (g, w) in got.iter().zip(want) {
            assert_abs_diff_eq!(*g, *w, epsilon = 1e-8);
        }
    }

    #[test]
    fn construction_of_p4_5_2() {
        let p4 = h(2, &["12", "23", "34"]);
        let (hp, map) = power(&p4, PowerParams::new(2, 5)).unwrap();
        assert_eq!((hp.k(), hp.m(), hp.n()), (5, 3, 11));
        assert_eq!(map.vertex_sets[0], vec![0, 1]);
        assert_eq!(map.edge_sets.iter().map(Vec::len).collect::<Vec<_>>(), vec![1, 1, 1]);
        assert_eq!(hp.edge_tokens(0), ["1", "1#2", "2", "2#2", "e1@1"]);
        assert_eq!(hp.edge_tokens(1), ["2", "2#2", "3", "3#2", "e2@1"]);
    }

    #[test]
    fn identity_parameters_reproduce_base() {
        let g = h(3, &["123", "145", "345"]);
        let (hp, map) = power(&g, PowerParams::new(1, 3)).unwrap();
        assert_eq!(hp, g);
        assert!(map.edge_sets.iter().all(Vec::is_empty));
    }

    #[test]
    fn single_edge_blows_up_to_one_edge() {
        let (hp, _) = power(&h(2, &["ab"]), PowerParams::new(2, 6)).unwrap();
        assert_eq!((hp.n(), hp.m(), hp.k()), (6, 1, 6));
    }

    #[test]
    fn bad_params() {
        assert!(matches!(power(&p3(), PowerParams::new(2, 3)), Err(Error::BadParams(_))));
        assert!(matches!(power(&p3(), PowerParams::new(0, 3)), Err(Error::BadParams(_))));
        let base = HypergraphSpectrum::compute(&p3(), &tol()).unwrap();
        assert!(matches!(
            predict_power_spectrum(base.spectrum(), 2, 2, PowerParams::new(1, 1)),
            Err(Error::BadParams(_))
        ));
    }

    #[test]
    fn predict_p3() {
        let base = HypergraphSpectrum::compute(&p3(), &tol()).unwrap();
        let p = predict_power_spectrum(base.spectrum(), 2, 2, PowerParams::lift(3)).unwrap();
        assert_values(&p.values, &[4.0, 2.0, 0.0, 0.0, 0.0]);
        assert_eq!((p.rank, p.padding_multiplicity, p.zero_multiplicity), (2, 0, 3));
        assert_eq!(p.exact_trace(2, 4), 6);
        assert!(verify_power_spectrum(&p3(), PowerParams::lift(3), &tol()).unwrap().matches);
    }

    #[test]
    fn predict_c4() {
        let base = HypergraphSpectrum::compute(&c4(), &tol()).unwrap();
        let p = predict_power_spectrum(base.spectrum(), 2, 4, PowerParams::lift(3)).unwrap();
        assert_values(&p.values, &[5.0, 3.0, 3.0, 1.0, 0.0, 0.0, 0.0, 0.0]);
        assert_eq!(p.exact_trace(2, 8), 12);
        let groups: Vec<usize> = p.groups.iter().map(|g| g.1).collect();
        assert_eq!(groups, vec![1, 2, 1, 4]);
        let v = verify_power_spectrum(&c4(), PowerParams::lift(3), &tol()).unwrap();
        assert!(v.matches && !v.zero_multiplicity_mismatch);
        assert_eq!(v.constructed_trace, 12);
    }

    #[test]
    fn predict_single_edge_to_j6() {
        let g = h(2, &["ab"]);
        let v = verify_power_spectrum(&g, PowerParams::new(2, 6), &tol()).unwrap();
        assert!(v.matches);
        assert_values(&v.predicted.values, &[6.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn blow_up_zero_multiplicity_is_sn_minus_t() {
        let v = verify_power_spectrum(&p3(), PowerParams::blow_up(2, 2), &tol()).unwrap();
        assert!(v.matches);
        assert_eq!(v.predicted.zero_multiplicity, 4);
        assert_eq!(v.observed_zero_multiplicity, 4);
    }

    #[test]
    fn lifted_eigenvectors() {
        let base = HypergraphSpectrum::compute(&p3(), &tol()).unwrap();
        let y = base.spectrum().vector(0);
        let lift = lift_eigenvector(&p3(), PowerParams::lift(3), 3.0, y, 1e-8).unwrap();
        assert_abs_diff_eq!(lift.lambda, 4.0, epsilon = 1e-12);
        assert!(lift.relative_residual < 1e-8);
        // additional vertices (indices 3, 4) hold y(e)/3
        assert_abs_diff_eq!(lift.vector[3], (y[0] + y[1]) / 3.0, epsilon = 1e-12);

        let g = h(2, &["ab"]);
        let y = [1.0 / 2f64.sqrt(); 2];
        let lift = lift_eigenvector(&g, PowerParams::new(2, 6), 2.0, &y, 1e-8).unwrap();
        assert_abs_diff_eq!(lift.lambda, 6.0);
        let first = lift.vector[0];
        assert!(lift.vector.iter().all(|&x| (x - first).abs() < 1e-12));

        let k4 = h(3, &["123", "124", "134", "234"]);
        let y = [0.5; 4];
        let same = lift_eigenvector(&k4, PowerParams::lift(3), 9.0, &y, 1e-8).unwrap();
        assert_eq!(same.vector, y.to_vec());
        assert_abs_diff_eq!(same.lambda, 9.0);

        assert!(matches!(
            lift_eigenvector(&p3(), PowerParams::lift(3), 0.0, &[1.0, -1.0, 1.0], 1e-8),
            Err(Error::NonPositiveEigenvalue(_))
        ));
    }

    #[test]
    fn witnesses_c4() {
        let w = kernel_dimension_witnesses(&c4(), PowerParams::lift(3), &tol()).unwrap();
        let by_name = |n: &str| w.families.iter().find(|f| f.name == n).unwrap();
        assert!(by_name("edge-padding-differences").vectors.is_empty());
        assert_eq!(by_name("vertex-padding-stars").vectors.len(), 4);
        let line = by_name("line-kernel-on-padding");
        assert_eq!(line.vectors.len(), 1);
        assert_abs_diff_eq!(line.eigenvalue, 1.0);
        assert!(w.families.iter().all(|f| f.max_residual < 1e-8));
        assert_eq!((w.count, w.rank), (5, 5));
    }

    #[test]
    fn witnesses_wide_padding() {
        let w = kernel_dimension_witnesses(&p3(), PowerParams::new(2, 7), &tol()).unwrap();
        // (r - ks - 1)m + sn = 2*2 + 6 zero witnesses; m - t = 0 padded
        let zero: usize = w.families.iter().filter(|f| f.eigenvalue == 0.0).map(|f| f.vectors.len()).sum();
        assert_eq!(zero, 10);
        assert_eq!(w.rank, 10);
        assert!(w.families.iter().all(|f| f.max_residual < 1e-8));
    }

    #[test]
    fn witnesses_blow_up() {
        let w = kernel_dimension_witnesses(&p3(), PowerParams::new(2, 4), &tol()).unwrap();
        assert_eq!(w.count, 4);
        assert_eq!(w.rank, 4);
        assert!(w.families.iter().all(|f| f.max_residual < 1e-8));
    }

    #[test]
    fn composition_matches_direct() {
        let g = h(3, &["123", "145", "345"]);
        let base = HypergraphSpectrum::compute(&g, &tol()).unwrap();
        let spec = base.spectrum();
        let (z, gt) = (spec.tolerances().zero, spec.tolerances().group);
        let mid = predict_from_values(spec.values(), z, gt, 3, 3, PowerParams::blow_up(3, 2)).unwrap();
        let twice = predict_from_values(&mid.values, z, gt, 6, 3, PowerParams::lift(8)).unwrap();
        let direct = predict_from_values(spec.values(), z, gt, 3, 3, PowerParams::new(2, 8)).unwrap();
        assert!(multiset_close(&twice.values, &direct.values, 1e-9));
    }

    #[test]
    fn rank_helper() {
        let a = vec![1.0, 0.0];
        let b = vec![2.0, 0.0];
        let c = vec![0.0, 3.0];
        assert_eq!(numerical_rank(&[&a, &b], 1e-8), 1);
        assert_eq!(numerical_rank(&[&a, &b, &c], 1e-8), 2);
    }
}
