//! Clique and line multigraphs of a hypergraph.

use serde::Serialize;

use crate::hypergraph::Hypergraph;
use crate::linalg::SymmetricMatrix;

/// A loopless multigraph given by its integer adjacency matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Multigraph {
    adjacency: SymmetricMatrix<i64>,
}

impl Multigraph {
    pub fn n(&self) -> usize {
        self.adjacency.order()
    }

    pub fn adjacency(&self) -> &SymmetricMatrix<i64> {
        &self.adjacency
    }

    pub fn multiplicity(&self, i: usize, j: usize) -> i64 {
        *self.adjacency.get(i, j)
    }

    /// Degree counting multiplicities.
    pub fn degrees(&self) -> Vec<i64> {
        self.adjacency.row_sums()
    }
}

/// C(H): vertices of H, multiplicity of {i, j} = number of edges holding
/// both.
pub fn clique_multigraph(h: &Hypergraph) -> Multigraph {
    let mut adjacency = SymmetricMatrix::zeros(h.n());
    for e in h.edges() {
        for (a, &i) in e.iter().enumerate() {
            for &j in &e[a + 1..] {
                let c = *adjacency.get(i, j);
                adjacency.set(i, j, c + 1);
            }
        }
    }
    Multigraph { adjacency }
}

/// L(H): one vertex per edge of H, multiplicity of {e, f} = |e ∩ f|.
pub fn line_multigraph(h: &Hypergraph) -> Multigraph {
    let edges = h.edges();
    let adjacency = SymmetricMatrix::from_lower_fn(h.m(), |a, b| {
        if a == b {
            return 0;
        }
        // both edges are sorted
        let (mut i, mut j, mut common) = (0, 0, 0);
        let (e, f) = (&edges[a], &edges[b]);
        while i < e.len() && j < f.len() {
            match e[i].cmp(&f[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    common += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        common
    });
    Multigraph { adjacency }
}

/// Checks d_L(e) = (sum of d_H(v) over v in e) - k for every edge.
pub fn line_degree_check(h: &Hypergraph) -> bool {
    let line = line_multigraph(h).degrees();
    let k = h.k() as i64;
    h.edges().iter().zip(line).all(|(e, dl)| {
        let sum: i64 = e.iter().map(|&v| h.degree(v) as i64).sum();
        dl == sum - k
    })
}
