//! Structural facts read off the signless Laplacian spectrum: regularity,
//! zero eigenvalues and partial bipartitions, degree and chromatic bounds,
//! and the diameter relations.

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::scalar::Real;
use crate::spectral::HypergraphSpectrum;

/// Vertex partition V0 ∪ V1 ∪ V2 (sorted vertex indices), optionally with
/// the balance ratio c = |e∩V1| / |e∩V2|.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartialBipartition {
    pub v0: Vec<usize>,
    pub v1: Vec<usize>,
    pub v2: Vec<usize>,
    pub balanced: Option<Ratio<usize>>,
}

impl PartialBipartition {
    /// Builds the partition with V0 = everything not in `v1` or `v2`.
    pub fn from_sides(n: usize, mut v1: Vec<usize>, mut v2: Vec<usize>) -> Self {
        v1.sort_unstable();
        v2.sort_unstable();
        let v0 = (0..n).filter(|v| !v1.contains(v) && !v2.contains(v)).collect();
        Self {
            v0,
            v1,
            v2,
            balanced: None,
        }
    }

    fn labels(&self, n: usize) -> Option<Vec<u8>> {
        let mut label = vec![u8::MAX; n];
        for (part, side) in [(0u8, &self.v0), (1, &self.v1), (2, &self.v2)] {
            for &v in side {
                if v >= n || label[v] != u8::MAX {
                    return None;
                }
                label[v] = part;
            }
        }
        label.iter().all(|&l| l != u8::MAX).then_some(label)
    }

    /// Checks the partially bipartite condition: the three sets partition
    /// V, V1 and V2 are nonempty, and every edge lies in V0 or meets both
    /// V1 and V2. When `balanced` is set, also checks the ratio.
    pub fn is_valid_for(&self, h: &Hypergraph) -> bool {
        if self.v1.is_empty() || self.v2.is_empty() {
            return false;
        }
        let Some(label) = self.labels(h.n()) else {
            return false;
        };
        for e in h.edges() {
            let a = e.iter().filter(|&&v| label[v] == 1).count();
            let b = e.iter().filter(|&&v| label[v] == 2).count();
            if a + b == 0 {
                continue;
            }
            if a == 0 || b == 0 {
                return false;
            }
            if let Some(c) = self.balanced {
                if Ratio::new(a, b) != c {
                    return false;
                }
            }
        }
        true
    }

    /// The common ratio |e∩V1|/|e∩V2| over edges not inside V0, if the
    /// partition is valid and the ratio is constant.
    pub fn balance_ratio(&self, h: &Hypergraph) -> Option<Ratio<usize>> {
        let plain = Self {
            balanced: None,
            ..self.clone()
        };
        if !plain.is_valid_for(h) {
            return None;
        }
        let label = self.labels(h.n())?;
        let mut ratio = None;
        for e in h.edges() {
            let a = e.iter().filter(|&&v| label[v] == 1).count();
            let b = e.iter().filter(|&&v| label[v] == 2).count();
            if a + b == 0 {
                continue;
            }
            let r = Ratio::new(a, b);
            match ratio {
                None => ratio = Some(r),
                Some(c) if c != r => return None,
                _ => {}
            }
        }
        // every edge inside V0: any c works, take 1
        Some(ratio.unwrap_or_else(|| Ratio::from_integer(1)))
    }
}

/// A proper vertex coloring with colors `1..=color_count`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coloring {
    pub assignment: Vec<usize>,
    pub color_count: usize,
}

impl Coloring {
    /// No edge is monochromatic.
    pub fn is_proper(&self, h: &Hypergraph) -> bool {
        h.edges()
            .iter()
            .all(|e| e.iter().any(|&v| self.assignment[v] != self.assignment[e[0]]))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegularityReport {
    pub connected: bool,
    pub is_regular: bool,
    pub rho_equals_kd: bool,
    pub rho_equals_k_delta: bool,
    pub principal_uniform: bool,
}

impl RegularityReport {
    pub fn agree(&self) -> bool {
        let v = [self.rho_equals_kd, self.rho_equals_k_delta, self.principal_uniform];
        v.iter().all(|&b| b == self.is_regular)
    }
}

/// Evaluates the four regularity conditions. On a connected hypergraph they
/// must agree; a disagreement is reported as an internal error.
pub fn regularity_report<T: Real>(h: &Hypergraph, hs: &HypergraphSpectrum<T>) -> Result<RegularityReport> {
    let report = regularity_conditions(h, hs);
    if report.connected && !report.agree() {
        return Err(Error::InternalConsistency(format!(
            "regularity conditions disagree: {report:?}"
        )));
    }
    Ok(report)
}

/// The four regularity conditions, without the agreement check.
pub fn regularity_conditions<T: Real>(h: &Hypergraph, hs: &HypergraphSpectrum<T>) -> RegularityReport {
    let d = h.degrees();
    let k = T::from_count(h.k());
    let tol = hs.spectrum().tolerances().zero;
    let rho = hs.rho();
    let avg = T::from_count(*d.average.numer()) / T::from_count(*d.average.denom());
    let principal = hs.principal();
    let uniform = T::one() / T::from_count(h.n().max(1)).sqrt();
    RegularityReport {
        connected: hs.is_connected(),
        is_regular: d.is_regular(),
        rho_equals_kd: (rho - k * avg).abs() <= tol,
        rho_equals_k_delta: (rho - k * T::from_count(d.max)).abs() <= tol,
        principal_uniform: principal.vector.iter().all(|&x| (x - uniform).abs() <= tol),
    }
}

/// True iff x(e) vanishes (|x(e)| ≤ zero_tol·‖x‖) on every edge, i.e.
/// (0, x) is an eigenpair of Q.
pub fn zero_eigenpair_valid<T: Real>(h: &Hypergraph, x: &[T], zero_tol: T) -> Result<bool> {
    if x.len() != h.n() {
        return Err(Error::DimensionMismatch {
            expected: h.n(),
            found: x.len(),
        });
    }
    let norm = x.iter().map(|&v| v * v).sum::<T>().sqrt();
    if norm == T::zero() {
        return Err(Error::ZeroVector);
    }
    Ok(h.edges().iter().all(|e| {
        let s: T = e.iter().map(|&v| x[v]).sum();
        s.abs() <= zero_tol * norm
    }))
}

/// If 0 is an eigenvalue of Q, splits the first kernel vector by sign into
/// V1 (positive), V2 (negative) and V0 (|x_v| ≤ τ_zero·‖x‖∞).
pub fn partial_bipartition_from_kernel<T: Real>(
    h: &Hypergraph,
    hs: &HypergraphSpectrum<T>,
) -> Result<Option<PartialBipartition>> {
    let spec = hs.spectrum();
    let Some(&first) = spec.zero_indices().first() else {
        return Ok(None);
    };
    let x = spec.vector(first);
    let sup = x.iter().fold(T::zero(), |acc, v| acc.max(v.abs()));
    let theta = spec.tolerances().zero * sup;
    let v1 = (0..h.n()).filter(|&v| x[v] > theta).collect();
    let v2 = (0..h.n()).filter(|&v| x[v] < -theta).collect();
    let p = PartialBipartition::from_sides(h.n(), v1, v2);
    if !p.is_valid_for(h) {
        return Err(Error::InternalConsistency(format!(
            "kernel vector does not induce a partial bipartition: {p:?}"
        )));
    }
    Ok(Some(p))
}

/// The vector 1 on V1, -c on V2, 0 on V0 of a balanced partition; a kernel
/// vector of Q.
pub fn balanced_bipartition_to_kernel<T: Real>(h: &Hypergraph, p: &PartialBipartition) -> Result<Vec<T>> {
    let c = p
        .balanced
        .ok_or_else(|| Error::NotBalanced("no balance ratio given".into()))?;
    if !p.is_valid_for(h) {
        return Err(Error::NotBalanced(format!("ratio {c} does not hold on every edge")));
    }
    let c = T::from_count(*c.numer()) / T::from_count(*c.denom());
    let mut x = vec![T::zero(); h.n()];
    for &v in &p.v1 {
        x[v] = T::one();
    }
    for &v in &p.v2 {
        x[v] = -c;
    }
    Ok(x)
}

/// Looks for the two easy balanced patterns: a pair of vertices lying in
/// exactly the same edges (V1 = {u}, V2 = {v}); or a vertex all of whose
/// edges contain another degree-1 vertex (V1 = {v}, V2 = one such vertex
/// per edge). Both give c = 1.
pub fn detect_easy_balanced_patterns(h: &Hypergraph) -> Option<PartialBipartition> {
    let one = Some(Ratio::from_integer(1));
    for u in 0..h.n() {
        for v in u + 1..h.n() {
            if h.incident_edges(u) == h.incident_edges(v) {
                let mut p = PartialBipartition::from_sides(h.n(), vec![u], vec![v]);
                p.balanced = one;
                return Some(p);
            }
        }
    }
    for v in 0..h.n() {
        if h.degree(v) == 0 {
            continue;
        }
        let companions: Option<Vec<usize>> = h
            .incident_edges(v)
            .iter()
            .map(|&j| h.edges()[j].iter().copied().find(|&w| w != v && h.degree(w) == 1))
            .collect();
        if let Some(v2) = companions {
            let mut p = PartialBipartition::from_sides(h.n(), vec![v], v2);
            p.balanced = one;
            return Some(p);
        }
    }
    None
}

/// Exhaustive search for any partial bipartition (3^n labelings, so only
/// for small n). Returns the first in lexicographic label order.
pub fn find_partial_bipartition(h: &Hypergraph) -> Option<PartialBipartition> {
    let n = h.n();
    if n > 14 {
        return None;
    }
    let total = 3usize.pow(n as u32);
    (0..total).find_map(|mut code| {
        let (mut v0, mut v1, mut v2) = (Vec::new(), Vec::new(), Vec::new());
        for v in 0..n {
            match code % 3 {
                0 => v0.push(v),
                1 => v1.push(v),
                _ => v2.push(v),
            }
            code /= 3;
        }
        let p = PartialBipartition {
            v0,
            v1,
            v2,
            balanced: None,
        };
        p.is_valid_for(h).then_some(p)
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DegreeSumBounds<T> {
    /// Minimum over edges of Σ_{v∈e} d(v).
    pub lower: usize,
    /// Maximum over edges of Σ_{v∈e} d(v).
    pub upper: usize,
    /// k·d(H), exact.
    pub k_average: Ratio<usize>,
    /// k·Δ(H).
    pub k_max: usize,
    pub rho: T,
    pub connected: bool,
    /// Whether lower ≤ ρ ≤ upper and kd ≤ ρ ≤ kΔ within τ_zero; `None` when
    /// the hypergraph is disconnected.
    pub holds: Option<bool>,
}

pub fn degree_sum_bounds<T: Real>(h: &Hypergraph, hs: &HypergraphSpectrum<T>) -> DegreeSumBounds<T> {
    let d = h.degrees();
    let sums: Vec<usize> = h.edges().iter().map(|e| e.iter().map(|&v| d.per_vertex[v]).sum()).collect();
    let lower = sums.iter().copied().min().unwrap_or(0);
    let upper = sums.iter().copied().max().unwrap_or(0);
    let k_average = d.average * h.k();
    let k_max = h.k() * d.max;
    let rho = hs.rho();
    let tol = hs.spectrum().tolerances().zero;
    let kd = T::from_count(*k_average.numer()) / T::from_count(*k_average.denom());
    let holds = hs.is_connected().then(|| {
        T::from_count(lower) - tol <= rho
            && rho <= T::from_count(upper) + tol
            && kd - tol <= rho
            && rho <= T::from_count(k_max) + tol
    });
    DegreeSumBounds {
        lower,
        upper,
        k_average,
        k_max,
        rho,
        connected: hs.is_connected(),
        holds,
    }
}

/// Vertex order v1..vn obtained by repeatedly deleting a minimum degree
/// vertex (lowest index on ties) from the remaining hypergraph; the first
/// vertex deleted is v_n.
pub fn min_degree_order(h: &Hypergraph) -> Vec<usize> {
    let n = h.n();
    let mut alive = vec![true; n];
    let mut edge_alive = vec![true; h.m()];
    let mut deg: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    let mut removed = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("a vertex remains");
        alive[v] = false;
        removed.push(v);
        for &j in h.incident_edges(v) {
            if edge_alive[j] {
                edge_alive[j] = false;
                for &w in &h.edges()[j] {
                    deg[w] -= 1;
                }
            }
        }
    }
    removed.reverse();
    removed
}

/// Greedy coloring along [`min_degree_order`]: each vertex takes the
/// smallest color leaving no edge among already colored vertices
/// monochromatic.
pub fn greedy_min_degree_coloring(h: &Hypergraph) -> Coloring {
    let mut color = vec![0usize; h.n()];
    let mut color_count = 0;
    for v in min_degree_order(h) {
        let mut forbidden = Vec::new();
        for &j in h.incident_edges(v) {
            let others: Vec<usize> = h.edges()[j].iter().filter(|&&w| w != v).map(|&w| color[w]).collect();
            if others[0] != 0 && others.iter().all(|&c| c == others[0]) {
                forbidden.push(others[0]);
            }
        }
        let c = (1..).find(|c| !forbidden.contains(c)).expect("a free color");
        color[v] = c;
        color_count = color_count.max(c);
    }
    Coloring {
        assignment: color,
        color_count,
    }
}

/// ⌊ρ/k⌋ + 1, with ρ nudged up by τ_group so that an integral ratio is not
/// lost to rounding.
pub fn coloring_bound<T: Real>(hs: &HypergraphSpectrum<T>) -> usize {
    let rho = hs.rho() + hs.spectrum().tolerances().group;
    (rho / T::from_count(hs.k())).floor().to_usize().unwrap_or(0) + 1
}

/// m = Σλ_i / k, rounded; errors if the quotient is more than 0.01 from an
/// integer.
pub fn spectral_edge_count<T: Real>(values: &[T], k: usize) -> Result<usize> {
    let q = (values.iter().copied().sum::<T>() / T::from_count(k)).as_f64();
    let r = q.round();
    if (q - r).abs() > 0.01 || r < 0.0 {
        return Err(Error::NotNearInteger(q));
    }
    Ok(r as usize)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistinctVsDiameter {
    pub distinct: usize,
    pub diameter: usize,
    pub holds: bool,
}

pub fn distinct_eigenvalues_vs_diameter<T: Real>(
    h: &Hypergraph,
    hs: &HypergraphSpectrum<T>,
) -> Result<DistinctVsDiameter> {
    let diameter = h.diameter().ok_or(Error::Disconnected)?;
    let distinct = hs.spectrum().distinct_count();
    Ok(DistinctVsDiameter {
        distinct,
        diameter,
        holds: distinct > diameter,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiameterBound<T> {
    pub bound: usize,
    pub diameter: usize,
    pub lambda1: T,
    pub lambda2: T,
    pub x_min: T,
    pub holds: bool,
}

/// ⌊1 + ln((1 - x²)/x²) / ln(λ1/λ2)⌋ with x the smallest principal
/// eigenvector entry.
pub fn diameter_upper_bound<T: Real>(h: &Hypergraph, hs: &HypergraphSpectrum<T>) -> Result<DiameterBound<T>> {
    if h.m() < 2 {
        return Err(Error::TooFewEdges);
    }
    let diameter = h.diameter().ok_or(Error::Disconnected)?;
    let spec = hs.spectrum();
    let (lambda1, lambda2) = (spec.values()[0], spec.values()[1]);
    if lambda1 - lambda2 <= spec.tolerances().group {
        return Err(Error::DegenerateSpectrum(lambda1.as_f64(), lambda2.as_f64()));
    }
    let principal = hs.principal();
    let x_min = principal.vector.iter().copied().fold(T::infinity(), T::min);
    let x2 = x_min * x_min;
    let ratio_term = if lambda2 <= spec.tolerances().zero {
        T::zero()
    } else {
        ((T::one() - x2) / x2).ln() / (lambda1 / lambda2).ln()
    };
    // 1e-9 absorbs rounding when the quotient is an exact integer
    let bound = (T::one() + ratio_term + T::lit(1e-9)).floor().to_usize().unwrap_or(usize::MAX);
    Ok(DiameterBound {
        bound,
        diameter,
        lambda1,
        lambda2,
        x_min,
        holds: diameter <= bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::build_hypergraph;
    use crate::scalar::Tolerances;

    fn h(k: usize, edges: &[&str]) -> Hypergraph {
        build_hypergraph(k, edges.iter().map(|e| e.chars().map(|c| c.to_string()))).unwrap()
    }

    fn spec(g: &Hypergraph) -> HypergraphSpectrum<f64> {
        HypergraphSpectrum::compute(g, &Tolerances::default()).unwrap()
    }

    fn k4() -> Hypergraph {
        h(3, &["123", "124", "134", "234"])
    }

    fn fig() -> Hypergraph {
        h(3, &["123", "145", "345"])
    }

    fn brute_chromatic(g: &Hypergraph) -> usize {
        (1..=g.n())
            .find(|&r| {
                let total = r.pow(g.n() as u32);
                (0..total).any(|mut code| {
                    let assignment: Vec<usize> = (0..g.n())
                        .map(|_| {
                            let c = code % r;
                            code /= r;
                            c + 1
                        })
                        .collect();
                    Coloring {
                        assignment,
                        color_count: r,
                    }
                    .is_proper(g)
                })
            })
            .unwrap()
    }

    #[test]
    fn regularity() {
        let r = regularity_report(&k4(), &spec(&k4())).unwrap();
        assert!(r.is_regular && r.rho_equals_kd && r.rho_equals_k_delta && r.principal_uniform);
        let single = h(3, &["123"]);
        assert!(regularity_report(&single, &spec(&single)).unwrap().is_regular);
        let r = regularity_report(&fig(), &spec(&fig())).unwrap();
        assert!(!r.is_regular && !r.rho_equals_kd && !r.rho_equals_k_delta && !r.principal_uniform);
    }

    #[test]
    fn zero_eigenpairs() {
        let g = h(3, &["123", "124"]);
        // 1 and 2 lie in the same edges
        assert!(zero_eigenpair_valid(&g, &[1.0, -1.0, 0.0, 0.0], 1e-8).unwrap());
        assert!(zero_eigenpair_valid(&g, &[1.0, 0.0, -1.0, -1.0], 1e-8).unwrap());
        // x(123) = 1 here
        assert!(!zero_eigenpair_valid(&g, &[0.0, 0.0, 1.0, -1.0], 1e-8).unwrap());
        assert!(!zero_eigenpair_valid(&g, &[1.0; 4], 1e-8).unwrap());
        assert_eq!(zero_eigenpair_valid(&g, &[0.0; 4], 1e-8).unwrap_err(), Error::ZeroVector);
        assert!(matches!(
            zero_eigenpair_valid(&g, &[1.0; 3], 1e-8),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn kernel_partition() {
        let g = h(3, &["123", "124"]);
        let p = partial_bipartition_from_kernel(&g, &spec(&g)).unwrap().unwrap();
        assert!(p.is_valid_for(&g));
        assert_eq!(partial_bipartition_from_kernel(&k4(), &spec(&k4())).unwrap(), None);

        let single = h(3, &["123"]);
        let p = partial_bipartition_from_kernel(&single, &spec(&single)).unwrap().unwrap();
        assert!(p.is_valid_for(&single));
    }

    #[test]
    fn kernel_partition_with_one_dimensional_kernel() {
        // P3 as a 2-graph: kernel spanned by (1,-1,1)
        let g = h(2, &["12", "23"]);
        let p = partial_bipartition_from_kernel(&g, &spec(&g)).unwrap().unwrap();
        let sides = [(p.v1.clone(), p.v2.clone()), (p.v2.clone(), p.v1.clone())];
        assert!(sides.contains(&(vec![0, 2], vec![1])));
        assert!(p.v0.is_empty());
    }

    #[test]
    fn balanced_to_kernel() {
        let g = h(3, &["123", "124"]);
        let mut p = PartialBipartition::from_sides(4, vec![0], vec![1]);
        p.balanced = Some(Ratio::from_integer(1));
        assert_eq!(balanced_bipartition_to_kernel::<f64>(&g, &p).unwrap(), vec![1.0, -1.0, 0.0, 0.0]);
        let mut bad = PartialBipartition::from_sides(4, vec![2], vec![3]);
        bad.balanced = Some(Ratio::from_integer(1));
        assert!(!bad.is_valid_for(&g));
        assert!(matches!(
            balanced_bipartition_to_kernel::<f64>(&g, &bad),
            Err(Error::NotBalanced(_))
        ));

        let single = h(3, &["123"]);
        let mut q = PartialBipartition::from_sides(3, vec![0], vec![1]);
        q.balanced = Some(Ratio::from_integer(1));
        assert_eq!(balanced_bipartition_to_kernel::<f64>(&single, &q).unwrap(), vec![1.0, -1.0, 0.0]);

        q.balanced = Some(Ratio::from_integer(2));
        assert!(matches!(
            balanced_bipartition_to_kernel::<f64>(&single, &q),
            Err(Error::NotBalanced(_))
        ));
        q.balanced = None;
        assert!(matches!(
            balanced_bipartition_to_kernel::<f64>(&single, &q),
            Err(Error::NotBalanced(_))
        ));
    }

    #[test]
    fn non_integer_balance_ratio() {
        // every edge has two V1 vertices and one V2 vertex
        let g = h(3, &["abx", "cdx", "aby"]);
        let p = PartialBipartition::from_sides(g.n(), vec![0, 1, 3, 4], vec![2, 5]);
        assert_eq!(p.balance_ratio(&g), Some(Ratio::new(2, 1)));
        let p = PartialBipartition {
            balanced: p.balance_ratio(&g),
            ..p
        };
        let x = balanced_bipartition_to_kernel::<f64>(&g, &p).unwrap();
        assert!(zero_eigenpair_valid(&g, &x, 1e-12).unwrap());
    }

    #[test]
    fn easy_patterns() {
        let g = h(3, &["123", "124"]);
        let p = detect_easy_balanced_patterns(&g).unwrap();
        assert_eq!((p.v1.clone(), p.v2.clone()), (vec![0], vec![1]));
        assert_eq!(p.balanced, Some(Ratio::from_integer(1)));
        assert!(p.is_valid_for(&g));
        assert_eq!(detect_easy_balanced_patterns(&k4()), None);
        let single = h(3, &["123"]);
        assert!(detect_easy_balanced_patterns(&single).unwrap().is_valid_for(&single));

        // companion pattern only: no duplicates, vertex 1 sees 3 and 5 of degree 1
        let g = h(3, &["123", "145", "246"]);
        let p = detect_easy_balanced_patterns(&g).unwrap();
        assert!(p.is_valid_for(&g));
        let x = balanced_bipartition_to_kernel::<f64>(&g, &p).unwrap();
        assert!(zero_eigenpair_valid(&g, &x, 1e-12).unwrap());
    }

    #[test]
    fn complete_3_graph_is_partially_bipartite_without_zero() {
        let g = k4();
        let p = PartialBipartition::from_sides(4, vec![0, 1], vec![2, 3]);
        assert!(p.is_valid_for(&g));
        assert!((spec(&g).spectrum().smallest() - 1.0).abs() < 1e-10);
        assert!(find_partial_bipartition(&g).is_some());
    }

    #[test]
    fn degree_bounds() {
        let b = degree_sum_bounds(&k4(), &spec(&k4()));
        assert_eq!((b.lower, b.upper, b.k_max), (9, 9, 9));
        assert_eq!(b.k_average, Ratio::from_integer(9));
        assert_eq!(b.holds, Some(true));

        let single = h(4, &["abcd"]);
        let b = degree_sum_bounds(&single, &spec(&single));
        assert_eq!((b.lower, b.upper), (4, 4));

        let b = degree_sum_bounds(&fig(), &spec(&fig()));
        assert_eq!((b.lower, b.upper), (5, 6));
        assert!(b.rho > 5.0 && b.rho < 6.0);
        assert_eq!(b.holds, Some(true));

        let two = h(2, &["12", "34"]);
        assert_eq!(degree_sum_bounds(&two, &spec(&two)).holds, None);
    }

    #[test]
    fn greedy_coloring_examples() {
        let single = h(3, &["123"]);
        let c = greedy_min_degree_coloring(&single);
        assert_eq!(c.color_count, 2);
        assert_eq!(coloring_bound(&spec(&single)), 2);

        let c = greedy_min_degree_coloring(&k4());
        assert!(c.is_proper(&k4()));
        assert_eq!(c.color_count, 2);
        assert_eq!(min_degree_order(&k4()), vec![3, 2, 1, 0]);
        assert_eq!(coloring_bound(&spec(&k4())), 4);

        let c = greedy_min_degree_coloring(&fig());
        assert!(c.is_proper(&fig()));
        assert!(c.color_count <= coloring_bound(&spec(&fig())));
        assert_eq!(coloring_bound(&spec(&fig())), 2);
        assert!(brute_chromatic(&fig()) <= c.color_count);
    }

    #[test]
    fn graph_coloring_odd_cycle() {
        let c5 = h(2, &["12", "23", "34", "45", "51"]);
        let c = greedy_min_degree_coloring(&c5);
        assert!(c.is_proper(&c5));
        assert_eq!(brute_chromatic(&c5), 3);
        assert_eq!(c.color_count, 3);
        assert_eq!(coloring_bound(&spec(&c5)), 3);
    }

    #[test]
    fn edge_count_from_spectrum() {
        assert_eq!(spectral_edge_count(&[9.0, 1.0, 1.0, 1.0], 3).unwrap(), 4);
        assert_eq!(spectral_edge_count(&[4.0, 0.0, 0.0, 0.0], 4).unwrap(), 1);
        assert!(matches!(spectral_edge_count(&[4.5, 0.0], 3), Err(Error::NotNearInteger(_))));
    }

    #[test]
    fn distinct_vs_diameter() {
        let r = distinct_eigenvalues_vs_diameter(&k4(), &spec(&k4())).unwrap();
        assert_eq!((r.distinct, r.diameter, r.holds), (2, 1, true));
        let single = h(3, &["123"]);
        let r = distinct_eigenvalues_vs_diameter(&single, &spec(&single)).unwrap();
        assert_eq!((r.distinct, r.diameter), (2, 1));
        let r = distinct_eigenvalues_vs_diameter(&fig(), &spec(&fig())).unwrap();
        assert_eq!(r.diameter, 2);
        assert!(r.distinct >= 3 && r.holds);
        let two = h(2, &["12", "34"]);
        assert_eq!(
            distinct_eigenvalues_vs_diameter(&two, &spec(&two)).unwrap_err(),
            Error::Disconnected
        );
    }

    #[test]
    fn diameter_bound() {
        let b = diameter_upper_bound(&k4(), &spec(&k4())).unwrap();
        assert_eq!((b.bound, b.diameter), (1, 1));
        assert!((b.x_min - 0.5).abs() < 1e-10);
        let single = h(3, &["123"]);
        assert_eq!(diameter_upper_bound(&single, &spec(&single)).unwrap_err(), Error::TooFewEdges);
        let b = diameter_upper_bound(&fig(), &spec(&fig())).unwrap();
        assert!(b.holds && b.bound >= 2);
    }
}
