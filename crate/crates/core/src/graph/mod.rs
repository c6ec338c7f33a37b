//! Simple undirected graphs, their matrices, file formats and generators.

mod format;
mod generators;

pub use format::{detect_format, emit_graph6, parse, parse_dimacs, parse_edge_list, parse_graph6, InputFormat, ParseError};
pub use generators::{
    complete, complete_minus_edge, complete_multipartite, cycle, empty, gnp, path, petersen, star,
    wheel,
};

use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

use crate::linalg::{BlockPartition, LinalgError, SymmetricMatrix};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid generator parameter: {0}")]
    InvalidParameter(String),
    #[error("coloring has {found} entries for a graph on {n} vertices")]
    ColoringLength { n: usize, found: usize },
    #[error("coloring is improper: edge {{{u}, {v}}} joins two vertices of color {color}")]
    ImproperColoring { u: usize, v: usize, color: usize },
    #[error("color {0} is unused; color ids must be contiguous")]
    UnusedColor(usize),
    #[error("a block partition needs at least 2 colors, coloring uses {0}")]
    TooFewColors(usize),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    neighbors: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        Ok(Self {
            neighbors: vec![Vec::new(); n],
            edge_count: 0,
        })
    }

    /// Builds a graph from an edge iterator. Duplicate edges collapse;
    /// self-loops are rejected.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut g = Self::new(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts `{u, v}`; returns false if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        let n = self.n();
        for vertex in [u, v] {
            if vertex >= n {
                return Err(GraphError::VertexOutOfRange { vertex, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        match self.neighbors[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.neighbors[u].insert(pos, v);
                let pos = self.neighbors[v].binary_search(&u).unwrap_err();
                self.neighbors[v].insert(pos, u);
                self.edge_count += 1;
                Ok(true)
            }
        }
    }

    pub fn n(&self) -> usize {
        self.neighbors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_edgeless(&self) -> bool {
        self.edge_count == 0
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.neighbors[u].binary_search(&v).is_ok()
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.neighbors.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.neighbors.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.neighbors
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let neighbors: Vec<Vec<usize>> = (0..n)
            .map(|u| (0..n).filter(|&v| v != u && !self.has_edge(u, v)).collect())
            .collect();
        let edge_count = n * (n - 1) / 2 - self.edge_count;
        Graph {
            neighbors,
            edge_count,
        }
    }

    pub fn adjacency_matrix(&self) -> SymmetricMatrix {
        self.matrix_with(0.0, 1.0)
    }

    /// `D - A`.
    pub fn laplacian(&self) -> SymmetricMatrix {
        self.matrix_with(1.0, -1.0)
    }

    /// `D + A`.
    pub fn signless_laplacian(&self) -> SymmetricMatrix {
        self.matrix_with(1.0, 1.0)
    }

    pub fn degree_matrix(&self) -> SymmetricMatrix {
        self.matrix_with(1.0, 0.0)
    }

    fn matrix_with(&self, degree_coeff: f64, edge_coeff: f64) -> SymmetricMatrix {
        let n = self.n();
        let mut data = vec![0.0; n * n];
        for u in 0..n {
            data[u * n + u] = degree_coeff * self.degree(u) as f64;
            for &v in &self.neighbors[u] {
                data[u * n + v] = edge_coeff;
            }
        }
        SymmetricMatrix::from_row_major(n, data).expect("graph matrices are symmetric and within bounds")
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0).len() == self.n()
    }

    /// Vertices reachable from `start`, in breadth-first order.
    pub fn component_of(&self, start: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n()];
        let mut order = vec![start];
        seen[start] = true;
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &v in &self.neighbors[u] {
                if !seen[v] {
                    seen[v] = true;
                    order.push(v);
                }
            }
        }
        order
    }

    /// `Some(k)` if every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.degree(0);
        self.neighbors.iter().all(|nb| nb.len() == k).then_some(k)
    }

    pub fn is_regular(&self) -> bool {
        self.regular_degree().is_some()
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self.bipartition(), Bipartition::TwoColoring(_))
    }

    /// Breadth-first 2-coloring, or an odd cycle proving none exists.
    pub fn bipartition(&self) -> Bipartition {
        let n = self.n();
        let mut side: Vec<Option<u8>> = vec![None; n];
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        for root in 0..n {
            if side[root].is_some() {
                continue;
            }
            side[root] = Some(0);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &v in &self.neighbors[u] {
                    match side[v] {
                        None => {
                            side[v] = Some(1 - su);
                            parent[v] = u;
                            depth[v] = depth[u] + 1;
                            queue.push_back(v);
                        }
                        Some(sv) if sv == su => {
                            return Bipartition::OddCycle(odd_cycle(u, v, &parent, &depth));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        Bipartition::TwoColoring(side.into_iter().map(|s| s.unwrap()).collect())
    }
}

/// Closes the BFS-tree paths from `u` and `v` up to their common ancestor.
fn odd_cycle(u: usize, v: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, v);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartition {
    /// Side (0 or 1) of every vertex.
    TwoColoring(Vec<u8>),
    /// Vertices of an odd cycle, in cyclic order.
    OddCycle(Vec<usize>),
}

/// Proper vertex coloring using every color id in `0..k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coloring {
    k: usize,
    color_of: Vec<usize>,
}

impl Coloring {
    /// Checks that `color_of` is proper for `g` and uses contiguous ids.
    pub fn new(g: &Graph, color_of: Vec<usize>) -> Result<Self, GraphError> {
        if color_of.len() != g.n() {
            return Err(GraphError::ColoringLength {
                n: g.n(),
                found: color_of.len(),
            });
        }
        for (u, v) in g.edges() {
            if color_of[u] == color_of[v] {
                return Err(GraphError::ImproperColoring {
                    u,
                    v,
                    color: color_of[u],
                });
            }
        }
        let k = color_of.iter().max().map_or(0, |m| m + 1);
        let mut used = vec![false; k];
        for &c in &color_of {
            used[c] = true;
        }
        if let Some(c) = used.iter().position(|u| !u) {
            return Err(GraphError::UnusedColor(c));
        }
        Ok(Self { k, color_of })
    }

    pub fn n(&self) -> usize {
        self.color_of.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn color_of(&self, v: usize) -> usize {
        self.color_of[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.color_of
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.k];
        for (v, &c) in self.color_of.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }

    pub fn is_proper_for(&self, g: &Graph) -> bool {
        self.n() == g.n() && g.edges().all(|(u, v)| self.color_of[u] != self.color_of[v])
    }
}

/// The color classes of `c` as a block partition of `A(G)`.
pub fn coloring_partition(g: &Graph, c: &Coloring) -> Result<BlockPartition, GraphError> {
    if c.n() != g.n() {
        return Err(GraphError::ColoringLength {
            n: g.n(),
            found: c.n(),
        });
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| c.color_of(u) == c.color_of(v)) {
        return Err(GraphError::ImproperColoring {
            u,
            v,
            color: c.color_of(u),
        });
    }
    if c.k() < 2 {
        return Err(GraphError::TooFewColors(c.k()));
    }
    Ok(BlockPartition::new(c.colors().to_vec(), c.k())?)
}
