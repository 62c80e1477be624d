//! The k-uniform hypergraph model: degrees, neighbourhoods, walks and the
//! union / cartesian product constructions.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};

/// A k-uniform hypergraph with string vertex tokens.
///
/// Vertices are indexed `0..n` in order of first appearance. Each edge is
/// stored as a sorted list of vertex indices; the edge set contains no
/// duplicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    k: usize,
    vertices: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<Vec<usize>>,
    incidence: Vec<Vec<usize>>,
}

/// Degree statistics. `average` is kept exact as `k*m / n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub per_vertex: Vec<usize>,
    pub max: usize,
    pub min: usize,
    pub average: Ratio<usize>,
}

impl DegreeProfile {
    pub fn is_regular(&self) -> bool {
        self.min == self.max
    }
}

/// Builds a hypergraph from an edge list of vertex tokens.
///
/// Vertices are indexed by first appearance. Duplicate edges are rejected.
pub fn build_hypergraph<E, S>(k: usize, edge_list: impl IntoIterator<Item = E>) -> Result<Hypergraph>
where
    E: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    if k < 2 {
        return Err(Error::InvalidUniformity(k));
    }
    let mut vertices: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut edges = Vec::new();
    for (pos, edge) in edge_list.into_iter().enumerate() {
        let mut members = Vec::with_capacity(k);
        let mut tokens = 0usize;
        for token in edge {
            tokens += 1;
            let token = token.as_ref();
            let id = match index.get(token) {
                Some(&id) => id,
                None => {
                    vertices.push(token.to_string());
                    index.insert(token.to_string(), vertices.len() - 1);
                    vertices.len() - 1
                }
            };
            members.push(id);
        }
        members.sort_unstable();
        members.dedup();
        if members.len() != k || tokens != k {
            return Err(Error::NonUniformEdge {
                edge: pos,
                expected: k,
                found: members.len(),
            });
        }
        edges.push(members);
    }
    if edges.is_empty() {
        return Err(Error::EmptyEdgeList);
    }
    Hypergraph::assemble(k, vertices, index, edges)
}

impl Hypergraph {
    /// Builds a hypergraph from an explicit vertex list (isolated vertices
    /// allowed) and edges given as vertex indices. An empty edge list is
    /// accepted here.
    pub fn from_parts(k: usize, vertices: Vec<String>, edges: Vec<Vec<usize>>) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidUniformity(k));
        }
        let mut index = HashMap::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(v.clone()));
            }
        }
        let mut sorted = Vec::with_capacity(edges.len());
        for (pos, mut e) in edges.into_iter().enumerate() {
            if let Some(&bad) = e.iter().find(|&&v| v >= vertices.len()) {
                return Err(Error::VertexOutOfRange { edge: pos, vertex: bad });
            }
            e.sort_unstable();
            e.dedup();
            if e.len() != k {
                return Err(Error::NonUniformEdge {
                    edge: pos,
                    expected: k,
                    found: e.len(),
                });
            }
            sorted.push(e);
        }
        Self::assemble(k, vertices, index, sorted)
    }

    fn assemble(
        k: usize,
        vertices: Vec<String>,
        index: HashMap<String, usize>,
        edges: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let mut seen = HashSet::with_capacity(edges.len());
        for (pos, e) in edges.iter().enumerate() {
            if !seen.insert(e.as_slice()) {
                return Err(Error::DuplicateEdge { edge: pos });
            }
        }
        let mut incidence = vec![Vec::new(); vertices.len()];
        for (j, e) in edges.iter().enumerate() {
            for &v in e {
                incidence[v].push(j);
            }
        }
        Ok(Self {
            k,
            vertices,
            index,
            edges,
            incidence,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn vertex_index(&self, token: &str) -> Result<usize> {
        self.index
            .get(token)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(token.to_string()))
    }

    /// Edge `j` as vertex tokens.
    pub fn edge_tokens(&self, j: usize) -> Vec<&str> {
        self.edges[j].iter().map(|&v| self.vertices[v].as_str()).collect()
    }

    /// Indices of the edges containing vertex `v`.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    pub fn degrees(&self) -> DegreeProfile {
        let per_vertex: Vec<usize> = self.incidence.iter().map(Vec::len).collect();
        let max = per_vertex.iter().copied().max().unwrap_or(0);
        let min = per_vertex.iter().copied().min().unwrap_or(0);
        let total: usize = per_vertex.iter().sum();
        let average = Ratio::new(total, self.n().max(1));
        DegreeProfile {
            per_vertex,
            max,
            min,
            average,
        }
    }

    /// The neighbourhood multiset N(v): each other vertex paired with the
    /// number of edges it shares with `v`. Sorted by vertex index.
    pub fn neighborhood(&self, token: &str) -> Result<Vec<(usize, usize)>> {
        let v = self.vertex_index(token)?;
        Ok(self.neighbor_counts(v).into_iter().collect())
    }

    pub(crate) fn neighbor_counts(&self, v: usize) -> BTreeMap<usize, usize> {
        let mut counts = BTreeMap::new();
        for &j in &self.incidence[v] {
            for &w in &self.edges[j] {
                if w != v {
                    *counts.entry(w).or_insert(0) += 1;
                }
            }
        }
        counts
    }

    /// The edge neighbourhood E_[v], as edge indices.
    pub fn edge_neighborhood(&self, token: &str) -> Result<Vec<usize>> {
        let v = self.vertex_index(token)?;
        Ok(self.incidence[v].clone())
    }

    /// Breadth-first distances from vertex index `source`; `None` marks
    /// unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut edge_seen = vec![false; self.m()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for &j in &self.incidence[u] {
                if edge_seen[j] {
                    continue;
                }
                edge_seen[j] = true;
                for &w in &self.edges[j] {
                    if dist[w].is_none() {
                        dist[w] = Some(du + 1);
                        queue.push_back(w);
                    }
                }
            }
        }
        dist
    }

    /// Length of a shortest walk between two vertices; `None` if they lie
    /// in different components. `distance(u, u) = 0`.
    pub fn distance(&self, u: &str, w: &str) -> Result<Option<usize>> {
        let u = self.vertex_index(u)?;
        let w = self.vertex_index(w)?;
        Ok(self.distances_from(u)[w])
    }

    /// Largest distance between two vertices, `None` when disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for v in 0..self.n() {
            for d in self.distances_from(v) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.distances_from(0).iter().all(Option::is_some)
    }

    /// Connected components as sorted lists of vertex indices.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut label = vec![usize::MAX; self.n()];
        let mut out = Vec::new();
        for start in 0..self.n() {
            if label[start] != usize::MAX {
                continue;
            }
            let reach: Vec<usize> = self
                .distances_from(start)
                .iter()
                .enumerate()
                .filter_map(|(v, d)| d.map(|_| v))
                .collect();
            for &v in &reach {
                label[v] = out.len();
            }
            out.push(reach);
        }
        out
    }

    /// The sub-hypergraph induced on `keep` (edges entirely inside `keep`),
    /// with vertices in the order given.
    pub fn induced(&self, keep: &[usize]) -> Hypergraph {
        let mut remap = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            remap[v] = i;
        }
        let vertices = keep.iter().map(|&v| self.vertices[v].clone()).collect();
        let edges = self
            .edges
            .iter()
            .filter(|e| e.iter().all(|&v| remap[v] != usize::MAX))
            .map(|e| e.iter().map(|&v| remap[v]).collect())
            .collect();
        Hypergraph::from_parts(self.k, vertices, edges).expect("induced subgraph of a valid hypergraph")
    }

    /// Keeps every vertex and the edges whose index satisfies `keep`.
    pub fn edge_subgraph(&self, mut keep: impl FnMut(usize) -> bool) -> Hypergraph {
        let edges = (0..self.m())
            .filter(|&j| keep(j))
            .map(|j| self.edges[j].clone())
            .collect();
        Hypergraph::from_parts(self.k, self.vertices.clone(), edges).expect("edge subset of a valid hypergraph")
    }

    /// True iff `self` is a subgraph of `other` (vertex tokens and edges as
    /// token sets are contained).
    pub fn is_subgraph_of(&self, other: &Hypergraph) -> Result<()> {
        if self.k != other.k {
            return Err(Error::UniformityMismatch {
                left: self.k,
                right: other.k,
            });
        }
        let mut map = Vec::with_capacity(self.n());
        for v in &self.vertices {
            match other.index.get(v) {
                Some(&i) => map.push(i),
                None => return Err(Error::NotASubgraph(format!("vertex `{v}` not in host"))),
            }
        }
        let host: HashSet<&[usize]> = other.edges.iter().map(Vec::as_slice).collect();
        for (j, e) in self.edges.iter().enumerate() {
            let mut image: Vec<usize> = e.iter().map(|&v| map[v]).collect();
            image.sort_unstable();
            if !host.contains(image.as_slice()) {
                return Err(Error::NotASubgraph(format!(
                    "edge {{{}}} not in host",
                    self.edge_tokens(j).join(" ")
                )));
            }
        }
        Ok(())
    }
}

/// Union of two k-graphs. Shared tokens are identified; edges are merged as
/// a set.
pub fn union(g: &Hypergraph, h: &Hypergraph) -> Result<Hypergraph> {
    if g.k != h.k {
        return Err(Error::UniformityMismatch { left: g.k, right: h.k });
    }
    let mut vertices = g.vertices.clone();
    let mut index = g.index.clone();
    for v in &h.vertices {
        if !index.contains_key(v) {
            index.insert(v.clone(), vertices.len());
            vertices.push(v.clone());
        }
    }
    let mut edges = g.edges.clone();
    let mut seen: HashSet<Vec<usize>> = edges.iter().cloned().collect();
    for e in &h.edges {
        let mut image: Vec<usize> = e.iter().map(|&v| index[&h.vertices[v]]).collect();
        image.sort_unstable();
        if seen.insert(image.clone()) {
            edges.push(image);
        }
    }
    Hypergraph::from_parts(g.k, vertices, edges)
}

/// Token of the product vertex `(v, u)`.
pub fn product_token(v: &str, u: &str) -> String {
    format!("({v},{u})")
}

/// Cartesian product G x H: edges `{v} x e` for `v` in V(G), `e` in E(H),
/// and `a x {u}` for `u` in V(H), `a` in E(G). Vertex `(v, u)` has index
/// `v * n_H + u`.
pub fn cartesian_product(g: &Hypergraph, h: &Hypergraph) -> Result<Hypergraph> {
    if g.k != h.k {
        return Err(Error::UniformityMismatch { left: g.k, right: h.k });
    }
    let nh = h.n();
    let vertices = g
        .vertices
        .iter()
        .flat_map(|v| h.vertices.iter().map(move |u| product_token(v, u)))
        .collect();
    let mut edges = Vec::with_capacity(g.n() * h.m() + h.n() * g.m());
    for v in 0..g.n() {
        for e in &h.edges {
            edges.push(e.iter().map(|&u| v * nh + u).collect());
        }
    }
    for u in 0..nh {
        for a in &g.edges {
            edges.push(a.iter().map(|&v| v * nh + u).collect());
        }
    }
    Hypergraph::from_parts(g.k, vertices, edges)
}
