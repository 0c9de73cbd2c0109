//! Simple undirected graphs: construction, generators, subdivision and the
//! neighbourhood queries the spectral checks need.

mod edge_list;
mod enumerate;
mod graph6;

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

pub use edge_list::{encode_edge_list, parse_edge_list};
pub use enumerate::{enumerate_connected_graphs, ConnectedGraphs, MAX_ENUMERATION_ORDER};
pub use graph6::{encode_graph6, parse_graph6, MAX_GRAPH6_ORDER};

/// A finite simple undirected graph on vertices `0..order`.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted lexicographically and
/// deduplicated. Values are immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<bool>,
    degrees: Vec<usize>,
}

impl Graph {
    /// Builds a graph from an edge iterator. Duplicate edges, in either
    /// orientation, collapse to one.
    pub fn new<I>(order: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut normalized = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(Error::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        normalized.dedup();

        let mut adjacency = vec![false; order * order];
        let mut degrees = vec![0; order];
        for &(u, v) in &normalized {
            adjacency[u * order + v] = true;
            adjacency[v * order + u] = true;
            degrees[u] += 1;
            degrees[v] += 1;
        }
        Ok(Graph {
            order,
            edges: normalized,
            adjacency,
            degrees,
        })
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Sorted edge list, each pair with the smaller endpoint first.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u * self.order + v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.adjacency[v * self.order..(v + 1) * self.order];
        row.iter()
            .enumerate()
            .filter_map(|(w, &adjacent)| adjacent.then_some(w))
    }

    /// First vertex of degree zero, if any.
    pub fn isolated_vertex(&self) -> Option<usize> {
        self.degrees.iter().position(|&d| d == 0)
    }

    /// Returns the common degree if every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = *self.degrees.first()?;
        self.degrees.iter().all(|&d| d == first).then_some(first)
    }

    pub fn is_complete(&self) -> bool {
        self.size() == self.order * self.order.saturating_sub(1) / 2
    }

    /// Breadth-first reachability from vertex 0. The empty graph counts as
    /// disconnected.
    pub fn is_connected(&self) -> bool {
        if self.order == 0 {
            return false;
        }
        let mut seen = vec![false; self.order];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == self.order
    }

    /// Proper 2-colouring if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.order];
        for start in 0..self.order {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let here = side[v].unwrap();
                for w in self.neighbors(v) {
                    match side[w] {
                        None => {
                            side[w] = Some(!here);
                            queue.push_back(w);
                        }
                        Some(s) if s == here => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    /// The subdivision S(G): every edge `(u, v)` becomes a path `u - w - v`
    /// through a fresh vertex `w`.
    ///
    /// Original vertices keep their indices; the vertex inserted into the
    /// `e`-th edge (in sorted edge order) gets index `order + e`.
    pub fn subdivision(&self) -> Graph {
        let n = self.order;
        let edges = self
            .edges
            .iter()
            .enumerate()
            .flat_map(|(e, &(u, v))| [(u, n + e), (v, n + e)]);
        Graph::new(n + self.size(), edges).expect("subdivision edges are valid by construction")
    }

    /// Count of common neighbours of `i` and `j`, and the sum of reciprocal
    /// degrees over those common neighbours.
    pub fn common_neighbor_stats(&self, i: usize, j: usize) -> Result<(usize, f64)> {
        for v in [i, j] {
            if v >= self.order {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: self.order,
                });
            }
        }
        if i == j {
            return Err(Error::SameVertex(i));
        }
        let mut count = 0;
        let mut weighted = 0.0;
        for k in self.neighbors(i).filter(|&k| self.is_adjacent(j, k)) {
            count += 1;
            weighted += 1.0 / self.degrees[k] as f64;
        }
        Ok((count, weighted))
    }

    /// Vertex-edge incidence matrix `B` (order × size).
    pub fn incidence_matrix(&self) -> Result<IncidenceMatrix> {
        if self.edges.is_empty() {
            return Err(Error::NoEdges);
        }
        let (rows, cols) = (self.order, self.size());
        let mut entries = vec![0u8; rows * cols];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            entries[u * cols + e] = 1;
            entries[v * cols + e] = 1;
        }
        Ok(IncidenceMatrix {
            rows,
            cols,
            entries,
        })
    }

    /// Signless Laplacian `D + A` with integer entries, row-major.
    pub fn signless_laplacian(&self) -> Vec<i64> {
        let n = self.order;
        let mut q = vec![0i64; n * n];
        for i in 0..n {
            q[i * n + i] = self.degrees[i] as i64;
        }
        for &(u, v) in &self.edges {
            q[u * n + v] = 1;
            q[v * n + u] = 1;
        }
        q
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order)
            .field("edges", &self.edges)
            .finish()
    }
}

/// Dense 0/1 vertex-edge incidence matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<u8>,
}

impl IncidenceMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> u8 {
        self.entries[row * self.cols + col]
    }

    /// `B Bᵀ` in exact integer arithmetic, row-major.
    pub fn gram(&self) -> Vec<i64> {
        let n = self.rows;
        let mut out = vec![0i64; n * n];
        for i in 0..n {
            for j in 0..n {
                out[i * n + j] = (0..self.cols)
                    .map(|e| i64::from(self.get(i, e)) * i64::from(self.get(j, e)))
                    .sum();
            }
        }
        out
    }
}

/// Named graph families understood by [`generate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    Complete,
    Path,
    Cycle,
    Star,
    Petersen,
}

impl GraphKind {
    pub fn name(self) -> &'static str {
        match self {
            GraphKind::Complete => "complete",
            GraphKind::Path => "path",
            GraphKind::Cycle => "cycle",
            GraphKind::Star => "star",
            GraphKind::Petersen => "petersen",
        }
    }

    fn min_order(self) -> usize {
        match self {
            GraphKind::Cycle => 3,
            GraphKind::Petersen => 0,
            _ => 2,
        }
    }
}

impl std::str::FromStr for GraphKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "complete" => GraphKind::Complete,
            "path" => GraphKind::Path,
            "cycle" => GraphKind::Cycle,
            "star" => GraphKind::Star,
            "petersen" => GraphKind::Petersen,
            other => return Err(Error::Precondition(format!("unknown graph kind {other:?}"))),
        })
    }
}

/// Builds a named graph. The star `S_n` has centre 0 and leaves `1..n`.
/// The Petersen graph ignores `order`.
pub fn generate(kind: GraphKind, order: usize) -> Result<Graph> {
    if order < kind.min_order() {
        return Err(Error::OrderTooSmall {
            kind: kind.name(),
            order,
            min: kind.min_order(),
        });
    }
    let n = order;
    match kind {
        GraphKind::Complete => Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))),
        GraphKind::Path => Graph::new(n, (1..n).map(|v| (v - 1, v))),
        GraphKind::Cycle => Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))),
        GraphKind::Star => Graph::new(n, (1..n).map(|v| (0, v))),
        GraphKind::Petersen => petersen(),
    }
}

/// Kneser graph K(5,2): 2-subsets of a 5-set, adjacent when disjoint.
fn petersen() -> Result<Graph> {
    let pairs: Vec<(usize, usize)> = (0..5)
        .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
        .collect();
    let disjoint = |x: (usize, usize), y: (usize, usize)| {
        x.0 != y.0 && x.0 != y.1 && x.1 != y.0 && x.1 != y.1
    };
    let mut edges = Vec::new();
    for (i, &x) in pairs.iter().enumerate() {
        for (j, &y) in pairs.iter().enumerate().skip(i + 1) {
            if disjoint(x, y) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(pairs.len(), edges)
}
