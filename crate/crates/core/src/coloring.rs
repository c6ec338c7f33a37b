//! Exact chromatic and independence numbers by branch and bound, DSATUR
//! upper bounds, and the class-pair regularity check used to characterize
//! equality in the Laplacian chromatic bound.
//!
//! Both exact solvers take a node budget. Running out of budget yields an
//! `Unknown` outcome with the best proven bounds, never a guessed value.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Coloring, Graph, GraphError};
use crate::linalg::Spectrum;

/// Default node limit for the exact solvers.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Default tolerance for deciding whether `|mu_min(A)|` is an integer.
pub const DEFAULT_TAU_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ColoringError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("spectrum has {found} values for a graph on {n} vertices")]
    SpectrumLength { n: usize, found: usize },
}

const UNCOLORED: usize = usize::MAX;

/// Greedy DSATUR coloring: repeatedly color the vertex with the most distinct
/// neighbor colors (ties: higher degree, then lower index) with the smallest
/// free color.
pub fn greedy_upper(g: &Graph) -> Coloring {
    let n = g.n();
    let mut color = vec![UNCOLORED; n];
    // neighbor_colors[v] holds the sorted distinct colors seen around v
    let mut neighbor_colors: Vec<Vec<usize>> = vec![Vec::new(); n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == UNCOLORED)
            .max_by(|&a, &b| {
                neighbor_colors[a]
                    .len()
                    .cmp(&neighbor_colors[b].len())
                    .then(g.degree(a).cmp(&g.degree(b)))
                    .then(b.cmp(&a))
            })
            .expect("an uncolored vertex remains");
        let c = (0..).find(|c| neighbor_colors[v].binary_search(c).is_err()).unwrap();
        color[v] = c;
        for &u in g.neighbors(v) {
            if let Err(pos) = neighbor_colors[u].binary_search(&c) {
                neighbor_colors[u].insert(pos, c);
            }
        }
    }
    Coloring::new(g, color).expect("DSATUR produces a proper contiguous coloring")
}

/// A clique found greedily from every start vertex; its size is a certified
/// lower bound on the chromatic number.
pub fn greedy_clique(g: &Graph) -> Vec<usize> {
    let mut best: Vec<usize> = vec![0];
    for v in 0..g.n() {
        if g.degree(v) < best.len() {
            continue;
        }
        let mut candidates = g.neighbors(v).to_vec();
        candidates.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
        let mut clique = vec![v];
        for u in candidates {
            if clique.iter().all(|&w| g.has_edge(u, w)) {
                clique.push(u);
            }
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best.sort_unstable();
    best
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum ChromaticOutcome {
    Exact {
        chi: usize,
        coloring: Coloring,
        nodes: u64,
    },
    /// Budget ran out: `lower <= chi <= upper`, `coloring` uses `upper` colors.
    Unknown {
        lower: usize,
        upper: usize,
        coloring: Coloring,
        nodes: u64,
    },
}

impl ChromaticOutcome {
    pub fn exact(&self) -> Option<usize> {
        match self {
            Self::Exact { chi, .. } => Some(*chi),
            Self::Unknown { .. } => None,
        }
    }

    pub fn coloring(&self) -> &Coloring {
        match self {
            Self::Exact { coloring, .. } | Self::Unknown { coloring, .. } => coloring,
        }
    }

    pub fn bounds(&self) -> (usize, usize) {
        match self {
            Self::Exact { chi, .. } => (*chi, *chi),
            Self::Unknown { lower, upper, .. } => (*lower, *upper),
        }
    }
}

enum Search {
    Found,
    Infeasible,
    Exhausted,
}

/// Backtracking k-colorability with DSATUR branching. A vertex may only take
/// an already-used color or the next unused one, so color permutations are
/// explored once.
struct KColoring<'a> {
    g: &'a Graph,
    k: usize,
    color: Vec<usize>,
    // neighbor_count[v * k + c]: colored neighbors of v with color c
    neighbor_count: Vec<u32>,
    saturation: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl<'a> KColoring<'a> {
    fn new(g: &'a Graph, k: usize, nodes: u64, budget: u64) -> Self {
        let n = g.n();
        Self {
            g,
            k,
            color: vec![UNCOLORED; n],
            neighbor_count: vec![0; n * k],
            saturation: vec![0; n],
            nodes,
            budget,
        }
    }

    fn select(&self) -> usize {
        (0..self.g.n())
            .filter(|&v| self.color[v] == UNCOLORED)
            .max_by(|&a, &b| {
                self.saturation[a]
                    .cmp(&self.saturation[b])
                    .then(self.g.degree(a).cmp(&self.g.degree(b)))
                    .then(b.cmp(&a))
            })
            .expect("an uncolored vertex remains")
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        for &u in self.g.neighbors(v) {
            let slot = &mut self.neighbor_count[u * self.k + c];
            if *slot == 0 {
                self.saturation[u] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.color[v] = UNCOLORED;
        for &u in self.g.neighbors(v) {
            let slot = &mut self.neighbor_count[u * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[u] -= 1;
            }
        }
    }

    fn search(&mut self, colored: usize, used: usize) -> Search {
        if colored == self.g.n() {
            return Search::Found;
        }
        if self.nodes >= self.budget {
            return Search::Exhausted;
        }
        self.nodes += 1;
        let v = self.select();
        for c in 0..self.k.min(used + 1) {
            if self.neighbor_count[v * self.k + c] != 0 {
                continue;
            }
            self.assign(v, c);
            match self.search(colored + 1, used.max(c + 1)) {
                Search::Infeasible => self.unassign(v, c),
                other => return other,
            }
        }
        Search::Infeasible
    }
}

/// Exact chromatic number.
///
/// Tries `k = clique size, clique size + 1, ...` below the DSATUR upper bound;
/// the first feasible `k` is `chi` because every smaller `k` was refuted.
/// The lower bound is purely combinatorial (a witnessed clique).
pub fn chromatic_number_exact(g: &Graph, budget: u64) -> ChromaticOutcome {
    let greedy = greedy_upper(g);
    let upper = greedy.k();
    let mut lower = greedy_clique(g).len();
    let mut nodes = 0;
    while lower < upper {
        let mut solver = KColoring::new(g, lower, nodes, budget);
        let result = solver.search(0, 0);
        nodes = solver.nodes;
        match result {
            Search::Found => {
                let coloring = Coloring::new(g, solver.color).expect("search yields proper colorings");
                return ChromaticOutcome::Exact {
                    chi: lower,
                    coloring,
                    nodes,
                };
            }
            Search::Infeasible => lower += 1,
            Search::Exhausted => {
                return ChromaticOutcome::Unknown {
                    lower,
                    upper,
                    coloring: greedy,
                    nodes,
                }
            }
        }
    }
    ChromaticOutcome::Exact {
        chi: upper,
        coloring: greedy,
        nodes,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum IndependenceOutcome {
    Exact {
        alpha: usize,
        set: Vec<usize>,
        nodes: u64,
    },
    /// Budget ran out: `lower <= alpha <= upper`, `set` has size `lower`.
    Unknown {
        lower: usize,
        upper: usize,
        set: Vec<usize>,
        nodes: u64,
    },
}

impl IndependenceOutcome {
    pub fn exact(&self) -> Option<usize> {
        match self {
            Self::Exact { alpha, .. } => Some(*alpha),
            Self::Unknown { .. } => None,
        }
    }

    pub fn set(&self) -> &[usize] {
        match self {
            Self::Exact { set, .. } | Self::Unknown { set, .. } => set,
        }
    }
}

/// Maximum clique search on the complement graph, pruned with greedy
/// coloring bounds.
struct MaxClique {
    n: usize,
    // adjacency of the complement, row-major
    adj: Vec<bool>,
    best: Vec<usize>,
    current: Vec<usize>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl MaxClique {
    /// Greedy sequential coloring of `candidates`; returns them reordered by
    /// color together with the running color count (the pruning bound).
    fn color_sort(&self, candidates: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &v in candidates {
            match classes
                .iter_mut()
                .find(|class| class.iter().all(|&u| !self.adj[u * self.n + v]))
            {
                Some(class) => class.push(v),
                None => classes.push(vec![v]),
            }
        }
        let mut order = Vec::with_capacity(candidates.len());
        let mut bounds = Vec::with_capacity(candidates.len());
        for (c, class) in classes.into_iter().enumerate() {
            for v in class {
                order.push(v);
                bounds.push(c + 1);
            }
        }
        (order, bounds)
    }

    fn expand(&mut self, candidates: Vec<usize>) {
        let (order, bounds) = self.color_sort(&candidates);
        for i in (0..order.len()).rev() {
            if self.current.len() + bounds[i] <= self.best.len() {
                return;
            }
            if self.nodes >= self.budget {
                self.exhausted = true;
                return;
            }
            self.nodes += 1;
            let v = order[i];
            self.current.push(v);
            let next: Vec<usize> = order[..i]
                .iter()
                .copied()
                .filter(|&u| self.adj[v * self.n + u])
                .collect();
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            if self.exhausted {
                return;
            }
        }
    }
}

/// Exact independence number as the clique number of the complement.
pub fn independence_number_exact(g: &Graph, budget: u64) -> IndependenceOutcome {
    let n = g.n();
    let mut adj = vec![true; n * n];
    for v in 0..n {
        adj[v * n + v] = false;
        for &u in g.neighbors(v) {
            adj[v * n + u] = false;
        }
    }
    let mut solver = MaxClique {
        n,
        adj,
        best: vec![0],
        current: Vec::new(),
        nodes: 0,
        budget,
        exhausted: false,
    };
    let all: Vec<usize> = (0..n).collect();
    let root_bound = solver.color_sort(&all).1.last().copied().unwrap_or(1);
    solver.expand(all);
    let mut set = solver.best;
    set.sort_unstable();
    if solver.exhausted {
        IndependenceOutcome::Unknown {
            lower: set.len(),
            upper: root_bound,
            set,
            nodes: solver.nodes,
        }
    } else {
        IndependenceOutcome::Exact {
            alpha: set.len(),
            set,
            nodes: solver.nodes,
        }
    }
}

/// Regularity of the bipartite subgraph induced by one pair of color classes.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairResult {
    pub classes: (usize, usize),
    pub regular: bool,
    /// `round(tau)`, the degree every vertex must have into the other class.
    pub target_degree: f64,
    pub violating_vertex: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EqualityReport {
    pub tau: f64,
    pub tau_is_integer: bool,
    pub pair_results: Vec<PairResult>,
    pub characterization_holds: bool,
}

/// Checks whether every two color classes of `c` induce a `tau`-regular
/// subgraph, with `tau = |mu_min(A)|` read from `spectrum_a`.
///
/// This is a statement about the given coloring only.
pub fn equality_witness(
    g: &Graph,
    c: &Coloring,
    spectrum_a: &Spectrum,
    tol: f64,
) -> Result<EqualityReport, ColoringError> {
    if spectrum_a.len() != g.n() {
        return Err(ColoringError::SpectrumLength {
            n: g.n(),
            found: spectrum_a.len(),
        });
    }
    if c.n() != g.n() {
        return Err(GraphError::ColoringLength { n: g.n(), found: c.n() }.into());
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| c.color_of(u) == c.color_of(v)) {
        return Err(GraphError::ImproperColoring {
            u,
            v,
            color: c.color_of(u),
        }
        .into());
    }
    let tau = spectrum_a.min().abs();
    let target = tau.round();
    let tau_is_integer = (tau - target).abs() <= tol;
    let target = target as usize;

    let classes = c.classes();
    let mut pair_results = Vec::new();
    for i in 0..classes.len() {
        for j in (i + 1)..classes.len() {
            let degree_into = |v: usize, class: usize| {
                g.neighbors(v).iter().filter(|&&u| c.color_of(u) == class).count()
            };
            let violating_vertex = classes[i]
                .iter()
                .find(|&&v| degree_into(v, j) != target)
                .or_else(|| classes[j].iter().find(|&&v| degree_into(v, i) != target))
                .copied();
            pair_results.push(PairResult {
                classes: (i, j),
                regular: violating_vertex.is_none(),
                target_degree: target as f64,
                violating_vertex,
            });
        }
    }
    let characterization_holds = tau_is_integer && pair_results.iter().all(|p| p.regular);
    Ok(EqualityReport {
        tau,
        tau_is_integer,
        pair_results,
        characterization_holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, empty, petersen};
    use crate::linalg::eigen_symmetric;

    fn spectrum(g: &Graph) -> Spectrum {
        eigen_symmetric(&g.adjacency_matrix()).unwrap()
    }

    #[test]
    fn greedy_examples() {
        assert_eq!(greedy_upper(&empty(5).unwrap()).k(), 1);
        assert_eq!(greedy_upper(&complete(4).unwrap()).k(), 4);
        assert_eq!(greedy_upper(&cycle(5).unwrap()).k(), 3);
    }

    #[test]
    fn chromatic_examples() {
        for n in 1..=8 {
            assert_eq!(chromatic_number_exact(&complete(n).unwrap(), DEFAULT_BUDGET).exact(), Some(n));
        }
        assert_eq!(chromatic_number_exact(&cycle(5).unwrap(), DEFAULT_BUDGET).exact(), Some(3));
        assert_eq!(chromatic_number_exact(&cycle(6).unwrap(), DEFAULT_BUDGET).exact(), Some(2));
        let p = petersen();
        let out = chromatic_number_exact(&p, DEFAULT_BUDGET);
        assert_eq!(out.exact(), Some(3));
        assert!(out.coloring().is_proper_for(&p));
    }

    #[test]
    fn independence_examples() {
        assert_eq!(independence_number_exact(&empty(5).unwrap(), DEFAULT_BUDGET).exact(), Some(5));
        assert_eq!(independence_number_exact(&complete(6).unwrap(), DEFAULT_BUDGET).exact(), Some(1));
        let p = petersen();
        let out = independence_number_exact(&p, DEFAULT_BUDGET);
        assert_eq!(out.exact(), Some(4));
        let set = out.set();
        for (i, &u) in set.iter().enumerate() {
            for &v in &set[i + 1..] {
                assert!(!p.has_edge(u, v));
            }
        }
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        // Hard enough that a single node cannot settle it.
        let g = crate::graph::gnp(30, 0.5, 3).unwrap();
        match chromatic_number_exact(&g, 1) {
            ChromaticOutcome::Unknown { lower, upper, coloring, .. } => {
                assert!(lower < upper);
                assert_eq!(coloring.k(), upper);
                assert!(coloring.is_proper_for(&g));
            }
            other => panic!("expected unknown, got {other:?}"),
        }
        match independence_number_exact(&g, 1) {
            IndependenceOutcome::Unknown { lower, upper, set, .. } => {
                assert!(lower <= upper);
                assert_eq!(set.len(), lower);
            }
            other => panic!("expected unknown, got {other:?}"),
        }
    }

    #[test]
    fn equality_witness_examples() {
        let k5 = complete(5).unwrap();
        let c = Coloring::new(&k5, (0..5).collect()).unwrap();
        let r = equality_witness(&k5, &c, &spectrum(&k5), DEFAULT_TAU_TOL).unwrap();
        assert!((r.tau - 1.0).abs() < 1e-9);
        assert!(r.characterization_holds);
        assert_eq!(r.pair_results.len(), 10);

        let c5 = cycle(5).unwrap();
        let c = Coloring::new(&c5, vec![0, 1, 0, 1, 2]).unwrap();
        let r = equality_witness(&c5, &c, &spectrum(&c5), DEFAULT_TAU_TOL).unwrap();
        let expected_tau = (2.0 * (4.0 * std::f64::consts::PI / 5.0).cos()).abs();
        assert!((r.tau - expected_tau).abs() < 1e-9);
        assert!(!r.tau_is_integer);
        assert!(!r.characterization_holds);

        let c4 = cycle(4).unwrap();
        let c = Coloring::new(&c4, vec![0, 1, 0, 1]).unwrap();
        let r = equality_witness(&c4, &c, &spectrum(&c4), DEFAULT_TAU_TOL).unwrap();
        assert!((r.tau - 2.0).abs() < 1e-9);
        assert!(r.characterization_holds);
    }

    #[test]
    fn equality_witness_reports_violations() {
        // P_3 colored 0,1,0: tau = sqrt(2) is not an integer, and the middle
        // vertex has degree 2 into class 0 while round(tau) = 1.
        let p3 = crate::graph::path(3).unwrap();
        let c = Coloring::new(&p3, vec![0, 1, 0]).unwrap();
        let r = equality_witness(&p3, &c, &spectrum(&p3), DEFAULT_TAU_TOL).unwrap();
        assert!(!r.tau_is_integer);
        assert_eq!(r.pair_results[0].violating_vertex, Some(1));
        assert!(!r.characterization_holds);

        let wrong = crate::linalg::eigen_symmetric(&complete(2).unwrap().adjacency_matrix()).unwrap();
        assert!(matches!(
            equality_witness(&p3, &c, &wrong, DEFAULT_TAU_TOL),
            Err(ColoringError::SpectrumLength { .. })
        ));
        let k3 = complete(3).unwrap();
        let bad = Coloring::new(&p3, vec![0, 1, 0]).unwrap();
        assert!(matches!(
            equality_witness(&k3, &bad, &spectrum(&k3), DEFAULT_TAU_TOL),
            Err(ColoringError::Graph(GraphError::ImproperColoring { .. }))
        ));
    }
}
