//! Matrix constructions attached to a hypergraph (B, D, Q, B^T B), the
//! signless Laplacian spectrum, and the polynomial and spectral identities
//! relating them.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::{cartesian_product, union, Hypergraph};
use crate::linalg::{
    char_poly_with_limit, eigen_decompose, fix_sign, group_values, multiset_close, IncidenceMatrix, Poly, Spectrum,
    SymmetricMatrix,
};
use crate::multigraph::{clique_multigraph, line_multigraph};
use crate::scalar::{Real, Tolerances};

pub fn incidence_matrix(h: &Hypergraph) -> IncidenceMatrix {
    let mut b = IncidenceMatrix::new(h.n(), h.m());
    for (j, e) in h.edges().iter().enumerate() {
        for &v in e {
            b.set(v, j, true);
        }
    }
    b
}

pub fn degree_matrix(h: &Hypergraph) -> SymmetricMatrix<i64> {
    let d: Vec<i64> = h.degrees().per_vertex.iter().map(|&d| d as i64).collect();
    SymmetricMatrix::diagonal_from(&d)
}

/// Q = B B^T, cross-checked against D + A_C.
pub fn signless_laplacian(h: &Hypergraph) -> Result<SymmetricMatrix<i64>> {
    let q: SymmetricMatrix<i64> = incidence_matrix(h).row_gram();
    let via_clique = degree_matrix(h).add(clique_multigraph(h).adjacency())?;
    if q != via_clique {
        return Err(Error::InternalConsistency("B B^T differs from D + A_C".into()));
    }
    Ok(q)
}

/// B^T B, cross-checked against kI + A_L.
pub fn gram_line_matrix(h: &Hypergraph) -> Result<SymmetricMatrix<i64>> {
    let g: SymmetricMatrix<i64> = incidence_matrix(h).col_gram();
    let k = h.k() as i64;
    let via_line = SymmetricMatrix::identity(h.m()).scale(&k).add(line_multigraph(h).adjacency())?;
    if g != via_line {
        return Err(Error::InternalConsistency("B^T B differs from kI + A_L".into()));
    }
    Ok(g)
}

/// The signless Laplacian of a hypergraph together with its spectrum.
#[derive(Debug, Clone)]
pub struct HypergraphSpectrum<T> {
    k: usize,
    m: usize,
    q: SymmetricMatrix<i64>,
    spectrum: Spectrum<T>,
    connected: bool,
}

impl<T: Real> HypergraphSpectrum<T> {
    pub fn compute(h: &Hypergraph, tol: &Tolerances<T>) -> Result<Self> {
        let q = signless_laplacian(h)?;
        let spectrum = eigen_decompose(&q.cast::<T>(), tol)?;
        Ok(Self {
            k: h.k(),
            m: h.m(),
            q,
            spectrum,
            connected: h.is_connected(),
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.q.order()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn q(&self) -> &SymmetricMatrix<i64> {
        &self.q
    }

    pub fn spectrum(&self) -> &Spectrum<T> {
        &self.spectrum
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    /// ρ(Q) = λ1.
    pub fn rho(&self) -> T {
        self.spectrum.largest()
    }

    pub fn principal(&self) -> SpectralRadius<T> {
        let spec = &self.spectrum;
        let mut vector = if spec.is_empty() { Vec::new() } else { spec.vector(0).to_vec() };
        fix_sign(&mut vector);
        let simple = spec.groups().first().is_some_and(|g| g.multiplicity == 1);
        let positive = vector.iter().all(|&x| x > T::zero());
        SpectralRadius {
            value: self.rho(),
            vector,
            connected: self.connected,
            simple,
            positive,
        }
    }
}

/// Spectral radius and principal eigenvector. On a connected hypergraph
/// `simple` and `positive` are guaranteed; `connected == false` flags that
/// the guarantee does not apply.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralRadius<T> {
    pub value: T,
    pub vector: Vec<T>,
    pub connected: bool,
    pub simple: bool,
    pub positive: bool,
}

pub fn spectral_radius<T: Real>(h: &Hypergraph, tol: &Tolerances<T>) -> Result<SpectralRadius<T>> {
    Ok(HypergraphSpectrum::compute(h, tol)?.principal())
}

/// Spectrum of the line multigraph adjacency A_L.
pub fn line_spectrum<T: Real>(h: &Hypergraph, tol: &Tolerances<T>) -> Result<Spectrum<T>> {
    eigen_decompose(&line_multigraph(h).adjacency().cast::<T>(), tol)
}

/// Σ_e x(e)^2, which equals x^T Q x.
pub fn quadratic_form_edges<T: Real>(h: &Hypergraph, x: &[T]) -> Result<T> {
    if x.len() != h.n() {
        return Err(Error::DimensionMismatch {
            expected: h.n(),
            found: x.len(),
        });
    }
    Ok(h.edges()
        .iter()
        .map(|e| {
            let s: T = e.iter().map(|&v| x[v]).sum();
            s * s
        })
        .sum())
}

/// Outcome of the exact polynomial identity checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolyIdentityCheck {
    /// P_AL(x)(x+k)^max(0,n-m) = (x+k)^max(0,m-n) P_Q(x+k).
    pub line_identity: bool,
    /// For r-regular H: the same with P_AC(x-r+k) in place of P_Q(x+k).
    pub regular_identity: Option<bool>,
}

impl PolyIdentityCheck {
    pub fn holds(&self) -> bool {
        self.line_identity && self.regular_identity.unwrap_or(true)
    }
}

/// Checks the characteristic polynomial identity linking A_L and Q exactly
/// (and the A_C form when H is regular). `limit` bounds both n and m.
pub fn verify_poly_identity_line(h: &Hypergraph, limit: usize) -> Result<PolyIdentityCheck> {
    let big = |m: &SymmetricMatrix<i64>| m.map(|&x| BigInt::from(x));
    let q = signless_laplacian(h)?;
    let line = line_multigraph(h);
    let p_line = char_poly_with_limit(&big(line.adjacency()), limit)?;
    let p_q = char_poly_with_limit(&big(&q), limit)?;
    let (n, m) = (h.n(), h.m());
    let k = BigInt::from(h.k());
    let x_plus_k = Poly::shifted_x(k.clone());
    let lhs = p_line.mul(&x_plus_k.pow(n.saturating_sub(m)));
    let pad = x_plus_k.pow(m.saturating_sub(n));
    let line_identity = lhs == pad.mul(&p_q.compose_shift(k.clone()));

    let degrees = h.degrees();
    let regular_identity = if degrees.is_regular() {
        let r = BigInt::from(degrees.max);
        let p_clique = char_poly_with_limit(&big(clique_multigraph(h).adjacency()), limit)?;
        Some(lhs == pad.mul(&p_clique.compose_shift(k - r)))
    } else {
        None
    };
    Ok(PolyIdentityCheck {
        line_identity,
        regular_identity,
    })
}

/// Union spectrum check: Spec Q(G ∪ G') equals Spec Q(G) ∪ Spec Q(G') for
/// vertex-disjoint inputs.
pub fn spectrum_union_check<T: Real>(g: &Hypergraph, g2: &Hypergraph, tol: &Tolerances<T>) -> Result<bool> {
    if g.k() != g2.k() {
        return Err(Error::UniformityMismatch {
            left: g.k(),
            right: g2.k(),
        });
    }
    if let Some(shared) = g.vertices().iter().find(|v| g2.vertex_index(v).is_ok()) {
        return Err(Error::OverlappingVertices(shared.clone()));
    }
    let joint = HypergraphSpectrum::compute(&union(g, g2)?, tol)?;
    let a = HypergraphSpectrum::compute(g, tol)?;
    let b = HypergraphSpectrum::compute(g2, tol)?;
    let mut parts = a.spectrum().values().to_vec();
    parts.extend_from_slice(b.spectrum().values());
    Ok(multiset_close(joint.spectrum().values(), &parts, joint.spectrum().tolerances().group))
}

/// One predicted eigenvalue of Q(G x H) with its required and observed
/// multiplicity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProductRow<T> {
    pub value: T,
    pub required: usize,
    pub observed: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProductCheck<T> {
    /// Every pairwise sum appears with at least the aggregated multiplicity.
    pub holds: bool,
    /// The product spectrum is exactly the multiset of pairwise sums.
    pub exact_match: bool,
    pub rows: Vec<ProductRow<T>>,
}

/// Checks that each sum μ + λ of base eigenvalues is an eigenvalue of
/// Q(G x H). Colliding sums are aggregated before counting.
pub fn product_eigsum_check<T: Real>(g: &Hypergraph, h: &Hypergraph, tol: &Tolerances<T>) -> Result<ProductCheck<T>> {
    let product = cartesian_product(g, h)?;
    let prod = HypergraphSpectrum::compute(&product, tol)?;
    let a = HypergraphSpectrum::compute(g, tol)?;
    let b = HypergraphSpectrum::compute(h, tol)?;
    let mut sums: Vec<T> = a
        .spectrum()
        .values()
        .iter()
        .flat_map(|&mu| b.spectrum().values().iter().map(move |&lam| mu + lam))
        .collect();
    sums.sort_by(|x, y| y.partial_cmp(x).unwrap_or(std::cmp::Ordering::Equal));
    let group_tol = prod.spectrum().tolerances().group;
    let observed = prod.spectrum().values();
    let rows: Vec<ProductRow<T>> = group_values(&sums, group_tol)
        .into_iter()
        .map(|g| ProductRow {
            value: g.value,
            required: g.multiplicity,
            observed: observed.iter().filter(|&&x| (x - g.value).abs() <= group_tol).count(),
        })
        .collect();
    Ok(ProductCheck {
        holds: rows.iter().all(|r| r.observed >= r.required),
        exact_match: multiset_close(observed, &sums, group_tol),
        rows,
    })
}

/// ρ(H') ≤ ρ(H) for a subgraph H' of H.
pub fn subgraph_monotonicity_check<T: Real>(h: &Hypergraph, sub: &Hypergraph, tol: &Tolerances<T>) -> Result<bool> {
    sub.is_subgraph_of(h)?;
    let big = spectral_radius(h, tol)?.value;
    let small = spectral_radius(sub, tol)?.value;
    Ok(small <= big + tol.solve * big.max(T::one()))
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

    #[test]
    fn incidence_and_degrees() {
        let g = h(3, &["123", "145", "345"]);
        let b = incidence_matrix(&g);
        assert_eq!((b.rows(), b.cols()), (5, 3));
        assert_eq!(b.col_sums(), vec![3, 3, 3]);
        assert_eq!(b.row_sums(), vec![2, 1, 2, 2, 2]);
        let k4 = h(3, &["123", "124", "134", "234"]);
        assert_eq!(degree_matrix(&k4), SymmetricMatrix::identity(4).scale(&3));
        let single = incidence_matrix(&h(3, &["123"]));
        assert_eq!(single.col_sums(), vec![3]);
        assert_eq!(single.row_sums(), vec![1, 1, 1]);
    }

    #[test]
    fn q_of_complete_3_graph_is_i_plus_2j() {
        let q = signless_laplacian(&h(3, &["123", "124", "134", "234"])).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(*q.get(i, j), if i == j { 3 } else { 2 });
            }
        }
        assert_eq!(signless_laplacian(&h(4, &["abcd"])).unwrap().to_rows(), vec![vec![1; 4]; 4]);
    }

    #[test]
    fn row_sums_are_k_times_degree() {
        let g = h(3, &["123", "145", "345"]);
        let q = signless_laplacian(&g).unwrap();
        assert_eq!(q.row_sums()[0], 6);
        let d = g.degrees();
        for (s, dv) in q.row_sums().iter().zip(&d.per_vertex) {
            assert_eq!(*s, 3 * *dv as i64);
        }
        assert_eq!(q.trace(), 9);
    }

    #[test]
    fn gram_line_matrix_example() {
        let g = gram_line_matrix(&h(3, &["123", "145", "345"])).unwrap();
        assert_eq!(g.to_rows(), vec![vec![3, 1, 1], vec![1, 3, 2], vec![1, 2, 3]]);
        assert_eq!(gram_line_matrix(&h(3, &["123"])).unwrap().to_rows(), vec![vec![3]]);
    }

    #[test]
    fn spectrum_of_complete_3_graph() {
        let s = HypergraphSpectrum::compute(&h(3, &["123", "124", "134", "234"]), &tol()).unwrap();
        let v = s.spectrum().values();
        assert_abs_diff_eq!(v[0], 9.0, epsilon = 1e-10);
        for &x in &v[1..] {
            assert_abs_diff_eq!(x, 1.0, epsilon = 1e-10);
        }
        let p = s.principal();
        assert!(p.simple && p.positive && p.connected);
        for &x in &p.vector {
            assert_abs_diff_eq!(x, 0.5, epsilon = 1e-10);
        }
    }

    #[test]
    fn single_edge_radius() {
        let p = spectral_radius(&h(4, &["abcd"]), &tol()).unwrap();
        assert_abs_diff_eq!(p.value, 4.0, epsilon = 1e-12);
        for &x in &p.vector {
            assert_abs_diff_eq!(x, 0.5, epsilon = 1e-12);
        }
    }

    #[test]
    fn disconnected_radius_is_flagged() {
        let p = spectral_radius(&h(2, &["12", "34"]), &tol()).unwrap();
        assert!(!p.connected);
        assert!(!p.simple);
        assert_abs_diff_eq!(p.value, 2.0, epsilon = 1e-12);
    }

    #[test]
    fn line_radius_is_q_radius_minus_k() {
        let g = h(3, &["123", "145", "345"]);
        let rho = spectral_radius(&g, &tol()).unwrap().value;
        let line = line_spectrum(&g, &tol()).unwrap();
        assert_abs_diff_eq!(line.largest(), rho - 3.0, epsilon = 1e-10);
        assert!(line.smallest() >= -3.0 - 1e-10);
    }

    #[test]
    fn quadratic_form_examples() {
        let g = h(3, &["123", "145", "345"]);
        assert_eq!(quadratic_form_edges(&g, &[1.0; 5]).unwrap(), 27.0);
        assert_eq!(quadratic_form_edges(&g, &[0.0; 5]).unwrap(), 0.0);
        assert_eq!(quadratic_form_edges(&g, &[1.0, 0.0, 0.0, 0.0, 0.0]).unwrap(), 2.0);
        assert!(matches!(
            quadratic_form_edges(&g, &[1.0; 4]),
            Err(Error::DimensionMismatch { expected: 5, found: 4 })
        ));
        let x = [0.3, -1.2, 0.7, 2.0, -0.4];
        let q = signless_laplacian(&g).unwrap().cast::<f64>();
        assert_abs_diff_eq!(quadratic_form_edges(&g, &x).unwrap(), q.quadratic_form(&x).unwrap(), epsilon = 1e-12);
    }

    #[test]
    fn poly_identity_examples() {
        let fig = verify_poly_identity_line(&h(3, &["123", "145", "345"]), 16).unwrap();
        assert!(fig.line_identity);
        assert_eq!(fig.regular_identity, None);

        let single = verify_poly_identity_line(&h(3, &["123"]), 16).unwrap();
        assert!(single.holds());

        let k4 = verify_poly_identity_line(&h(3, &["123", "124", "134", "234"]), 16).unwrap();
        assert_eq!(k4.regular_identity, Some(true));
        assert!(k4.holds());

        assert!(matches!(
            verify_poly_identity_line(&h(3, &["123"]), 2),
            Err(Error::OrderLimitExceeded { order: 3, limit: 2 })
        ));
    }

    #[test]
    fn union_of_two_edges() {
        assert!(spectrum_union_check(&h(3, &["123"]), &h(3, &["456"]), &tol()).unwrap());
        assert!(matches!(
            spectrum_union_check(&h(3, &["123"]), &h(3, &["345"]), &tol()),
            Err(Error::OverlappingVertices(_))
        ));
        assert!(matches!(
            spectrum_union_check(&h(3, &["123"]), &h(2, &["45"]), &tol()),
            Err(Error::UniformityMismatch { .. })
        ));
    }

    #[test]
    fn product_of_edges_is_c4() {
        let check = product_eigsum_check(&h(2, &["12"]), &h(2, &["ab"]), &tol()).unwrap();
        assert!(check.holds && check.exact_match);
        let values: Vec<f64> = check.rows.iter().map(|r| r.value).collect();
        let req: Vec<usize> = check.rows.iter().map(|r| r.required).collect();
        assert_eq!(req, vec![1, 2, 1]);
        for (v, e) in values.iter().zip([4.0, 2.0, 0.0]) {
            assert_abs_diff_eq!(*v, e, epsilon = 1e-10);
        }
    }

    #[test]
    fn monotone_subgraphs() {
        let host = h(3, &["123", "145", "345"]);
        assert!(subgraph_monotonicity_check(&host, &h(3, &["123", "145"]), &tol()).unwrap());
        assert!(subgraph_monotonicity_check(&host, &h(3, &["345"]), &tol()).unwrap());
        assert!(matches!(
            subgraph_monotonicity_check(&host, &h(3, &["124"]), &tol()),
            Err(Error::NotASubgraph(_))
        ));
    }
}
