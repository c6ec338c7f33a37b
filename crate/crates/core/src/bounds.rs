//! Spectral chromatic bounds, the Hoffman ratio bound for the independence
//! number, and gap evaluators for the matrix inequalities behind them.
//!
//! * adjacency (Hoffman) bound: `chi >= 1 + mu(A) / -mu_min(A)`
//! * Laplacian bound: `chi >= 1 + mu(A) / (mu(L) - mu(A))`
//! * ratio bound, `k`-regular graphs: `alpha <= n tau / (k + tau)`, `tau = |mu_min(A)|`
//! * block inequality: `mu(B - A) >= mu(B + A / (r - 1))` whenever `A` is
//!   Hermitian with zero diagonal blocks in an `r`-part partition and `B` is
//!   real diagonal
//! * row-sum inequality: `mu(R + A / (r - 1)) >= r / (r - 1) mu(A)` for
//!   irreducible nonnegative symmetric `A` with row-sum diagonal `R`

use serde::Serialize;
use thiserror::Error;

use crate::coloring::{
    chromatic_number_exact, equality_witness, independence_number_exact, ChromaticOutcome,
    ColoringError, EqualityReport, IndependenceOutcome, DEFAULT_BUDGET, DEFAULT_TAU_TOL,
};
use crate::graph::{coloring_partition, Graph, GraphError};
use crate::linalg::{
    eigen_hermitian, eigen_symmetric, scaled_combination, validate_block_zero, BlockPartition,
    HermitianMatrix, LinalgError, Spectrum, SymmetricMatrix,
};

/// Slack subtracted before taking the ceiling of a real-valued lower bound.
pub const CEIL_SLACK: f64 = 1e-9;

/// Smallest admissible `mu(L) - mu(A)`.
const DENOMINATOR_GUARD: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundError {
    #[error("bound is undefined for a graph without edges")]
    EdgelessGraph,
    #[error("graph is not regular")]
    NotRegular,
    #[error("ratio bound needs degree >= 1")]
    ZeroDegree,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("mu(L) - mu(A) = {0:e} is not positive")]
    NonPositiveDenominator(f64),
    #[error("A has a nonzero entry inside a diagonal block of the partition")]
    BlockNotZero,
    #[error("r must be at least 2, got {0}")]
    TooFewParts(usize),
    #[error("matrix has a negative entry at ({i}, {j})")]
    NegativeEntry { i: usize, j: usize },
    #[error("matrix is reducible (its support graph is disconnected)")]
    Reducible,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

/// `ceil(value - 1e-9)`: floating error may never raise an integer lower bound.
pub fn ceil_with_slack(value: f64) -> i64 {
    (value - CEIL_SLACK).ceil() as i64
}

/// Adjacency and Laplacian spectra of a graph.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphSpectra {
    pub adjacency: Spectrum,
    pub laplacian: Spectrum,
}

impl GraphSpectra {
    pub fn of(g: &Graph) -> Result<Self, LinalgError> {
        Ok(Self {
            adjacency: eigen_symmetric(&g.adjacency_matrix())?,
            laplacian: eigen_symmetric(&g.laplacian())?,
        })
    }

    pub fn mu_a(&self) -> f64 {
        self.adjacency.max()
    }

    pub fn mu_min_a(&self) -> f64 {
        self.adjacency.min()
    }

    pub fn mu_l(&self) -> f64 {
        self.laplacian.max()
    }
}

pub fn hoffman_from_spectrum(mu_a: f64, mu_min_a: f64) -> f64 {
    1.0 + mu_a / -mu_min_a
}

pub fn nikiforov_from_spectrum(mu_a: f64, mu_l: f64) -> Result<f64, BoundError> {
    let denominator = mu_l - mu_a;
    if denominator <= DENOMINATOR_GUARD {
        return Err(BoundError::NonPositiveDenominator(denominator));
    }
    Ok(1.0 + mu_a / denominator)
}

/// `1 + mu(A) / -mu_min(A)`.
pub fn hoffman_bound(g: &Graph) -> Result<f64, BoundError> {
    if g.is_edgeless() {
        return Err(BoundError::EdgelessGraph);
    }
    let s = eigen_symmetric(&g.adjacency_matrix())?;
    Ok(hoffman_from_spectrum(s.max(), s.min()))
}

/// `1 + mu(A) / (mu(L) - mu(A))`.
pub fn nikiforov_bound(g: &Graph) -> Result<f64, BoundError> {
    if g.is_edgeless() {
        return Err(BoundError::EdgelessGraph);
    }
    let s = GraphSpectra::of(g)?;
    nikiforov_from_spectrum(s.mu_a(), s.mu_l())
}

/// Hoffman's ratio bound `n tau / (k + tau)` on the independence number of a
/// `k`-regular graph.
pub fn ratio_bound_alpha(g: &Graph) -> Result<f64, BoundError> {
    let k = g.regular_degree().ok_or(BoundError::NotRegular)?;
    if k == 0 {
        return Err(BoundError::ZeroDegree);
    }
    let s = eigen_symmetric(&g.adjacency_matrix())?;
    Ok(ratio_from_spectrum(g.n(), k, s.min()))
}

fn ratio_from_spectrum(n: usize, k: usize, mu_min_a: f64) -> f64 {
    let tau = mu_min_a.abs();
    n as f64 * tau / (k as f64 + tau)
}

/// `mu(B - A) - mu(B + A / (r - 1))`; nonnegative for every valid input.
pub fn theorem1_gap(
    a: &HermitianMatrix,
    p: &BlockPartition,
    b: &SymmetricMatrix,
) -> Result<f64, BoundError> {
    if p.r() < 2 {
        return Err(BoundError::TooFewParts(p.r()));
    }
    if !validate_block_zero(a, p)? {
        return Err(BoundError::BlockNotZero);
    }
    let minus = scaled_combination(b, a, -1.0)?;
    let plus = scaled_combination(b, a, 1.0 / (p.r() - 1) as f64)?;
    Ok(eigen_hermitian(&minus)?.max() - eigen_hermitian(&plus)?.max())
}

/// `mu(R + A / (r - 1)) - r / (r - 1) mu(A)` with `R` the row-sum diagonal;
/// nonnegative, and zero exactly when all row sums agree.
pub fn lemma1_gap(a: &SymmetricMatrix, r: usize) -> Result<f64, BoundError> {
    if r < 2 {
        return Err(BoundError::TooFewParts(r));
    }
    let n = a.n();
    for i in 0..n {
        for j in i..n {
            if a.get(i, j) < 0.0 {
                return Err(BoundError::NegativeEntry { i, j });
            }
        }
    }
    if !support_is_connected(a) {
        return Err(BoundError::Reducible);
    }
    let c = 1.0 / (r - 1) as f64;
    let rowsum = SymmetricMatrix::diagonal(&a.row_sums())?;
    let lhs = eigen_symmetric(&rowsum.add_scaled(a, c)?)?.max();
    let mu_a = eigen_symmetric(a)?.max();
    Ok(lhs - (r as f64) * c * mu_a)
}

/// Connectivity of the off-diagonal support of a symmetric matrix.
pub fn support_is_connected(a: &SymmetricMatrix) -> bool {
    let n = a.n();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for (v, row) in a.row(u).iter().enumerate() {
            if !seen[v] && v != u && *row != 0.0 {
                seen[v] = true;
                count += 1;
                stack.push(v);
            }
        }
    }
    count == n
}

/// `mu(D + A) - mu(D - A)` for a connected graph; zero iff the graph is
/// bipartite.
pub fn signless_gap(g: &Graph) -> Result<f64, BoundError> {
    Ok(signless_parts(g)?.0)
}

/// The signless gap together with `mu(D + A)`, the scale of its tolerance.
pub fn signless_parts(g: &Graph) -> Result<(f64, f64), BoundError> {
    if !g.is_connected() {
        return Err(BoundError::Disconnected);
    }
    let q = eigen_symmetric(&g.signless_laplacian())?.max();
    let l = eigen_symmetric(&g.laplacian())?.max();
    Ok((q - l, q))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportOptions {
    pub compute_chi: bool,
    pub compute_alpha: bool,
    pub compute_equality: bool,
    pub chi_budget: u64,
    pub alpha_budget: u64,
    pub tau_tol: f64,
}

impl Default for ReportOptions {
    fn default() -> Self {
        Self {
            compute_chi: true,
            compute_alpha: false,
            compute_equality: false,
            chi_budget: DEFAULT_BUDGET,
            alpha_budget: DEFAULT_BUDGET,
            tau_tol: DEFAULT_TAU_TOL,
        }
    }
}

impl ReportOptions {
    pub fn all() -> Self {
        Self {
            compute_alpha: true,
            compute_equality: true,
            ..Self::default()
        }
    }
}

/// Every bound for one graph. Bound fields are `None` for edgeless graphs.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub m: usize,
    pub connected: bool,
    pub bipartite: bool,
    pub regular_degree: Option<usize>,
    pub mu_a: f64,
    pub mu_min_a: f64,
    pub mu_l: f64,
    pub hoffman: Option<f64>,
    pub hoffman_ceil: Option<i64>,
    pub nikiforov: Option<f64>,
    pub nikiforov_ceil: Option<i64>,
    pub chi: Option<ChromaticOutcome>,
    pub alpha: Option<IndependenceOutcome>,
    pub ratio_bound: Option<f64>,
    pub equality: Option<EqualityReport>,
}

impl BoundReport {
    pub fn chi_exact(&self) -> Option<usize> {
        self.chi.as_ref().and_then(ChromaticOutcome::exact)
    }

    pub fn alpha_exact(&self) -> Option<usize> {
        self.alpha.as_ref().and_then(IndependenceOutcome::exact)
    }

    pub fn bounds_defined(&self) -> bool {
        self.hoffman.is_some() && self.nikiforov.is_some()
    }
}

/// Aggregates every bound for `g` according to `options`.
///
/// The equality check needs a coloring, so it runs the chromatic solver even
/// when `compute_chi` is off (the outcome is then not stored).
pub fn bound_report(g: &Graph, options: &ReportOptions) -> Result<BoundReport, BoundError> {
    let spectra = GraphSpectra::of(g)?;
    let (mu_a, mu_min_a, mu_l) = (spectra.mu_a(), spectra.mu_min_a(), spectra.mu_l());
    let (hoffman, nikiforov) = if g.is_edgeless() {
        (None, None)
    } else {
        (
            Some(hoffman_from_spectrum(mu_a, mu_min_a)),
            Some(nikiforov_from_spectrum(mu_a, mu_l)?),
        )
    };
    let regular_degree = g.regular_degree();
    let ratio_bound = match regular_degree {
        Some(k) if k >= 1 => Some(ratio_from_spectrum(g.n(), k, mu_min_a)),
        _ => None,
    };

    let chi_outcome = (options.compute_chi || options.compute_equality)
        .then(|| chromatic_number_exact(g, options.chi_budget));
    let equality = match (&chi_outcome, options.compute_equality) {
        (Some(outcome), true) => Some(equality_witness(
            g,
            outcome.coloring(),
            &spectra.adjacency,
            options.tau_tol,
        )?),
        _ => None,
    };
    let alpha = options
        .compute_alpha
        .then(|| independence_number_exact(g, options.alpha_budget));

    Ok(BoundReport {
        n: g.n(),
        m: g.edge_count(),
        connected: g.is_connected(),
        bipartite: g.is_bipartite(),
        regular_degree,
        mu_a,
        mu_min_a,
        mu_l,
        hoffman,
        hoffman_ceil: hoffman.map(ceil_with_slack),
        nikiforov,
        nikiforov_ceil: nikiforov.map(ceil_with_slack),
        chi: chi_outcome.filter(|_| options.compute_chi),
        alpha,
        ratio_bound,
        equality,
    })
}

/// Both gaps of the numerical retracing of the Laplacian bound's derivation:
/// the block inequality with `B = D` on the color classes, and the row-sum
/// inequality with `r = chi`. Requires a connected graph and `r >= 2`.
pub fn derivation_gaps(g: &Graph, coloring: &crate::graph::Coloring) -> Result<(f64, f64), BoundError> {
    let partition = coloring_partition(g, coloring)?;
    let a = g.adjacency_matrix();
    let t1 = theorem1_gap(&HermitianMatrix::from_real(&a), &partition, &g.degree_matrix())?;
    let l1 = lemma1_gap(&a, partition.r())?;
    Ok((t1, l1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        complete, complete_minus_edge, complete_multipartite, cycle, empty, path, petersen, star,
        wheel,
    };
    use crate::linalg::Complex64;

    #[test]
    fn hoffman_examples() {
        assert!((hoffman_bound(&complete(2).unwrap()).unwrap() - 2.0).abs() < 1e-12);
        assert!((hoffman_bound(&petersen()).unwrap() - 2.5).abs() < 1e-9);
        // K_10 - e is K_{1x8,2}; quotient gives mu^2 - 7 mu - 16 = 0.
        let mu = (7.0 + 113f64.sqrt()) / 2.0;
        let mu_min = (7.0 - 113f64.sqrt()) / 2.0;
        let h = hoffman_bound(&complete_minus_edge(10).unwrap()).unwrap();
        assert!((h - (1.0 + mu / -mu_min)).abs() < 1e-9);
        assert!((h - 5.857).abs() < 1e-3);
        assert_eq!(hoffman_bound(&empty(3).unwrap()), Err(BoundError::EdgelessGraph));
    }

    #[test]
    fn nikiforov_examples() {
        for n in 2..=8 {
            let v = nikiforov_bound(&complete(n).unwrap()).unwrap();
            assert!((v - n as f64).abs() < 1e-9, "K_{n}: {v}");
        }
        let mu = (1.0 + 17f64.sqrt()) / 2.0;
        let diamond = nikiforov_bound(&complete_minus_edge(4).unwrap()).unwrap();
        assert!((diamond - (1.0 + mu / (4.0 - mu))).abs() < 1e-9);
        assert_eq!(ceil_with_slack(diamond), 3);

        let w = wheel(100).unwrap();
        let nk = nikiforov_bound(&w).unwrap();
        assert!(nk > 1.0 && nk <= 2.0);
        assert_eq!(ceil_with_slack(hoffman_bound(&w).unwrap()), 3);
        let s = GraphSpectra::of(&w).unwrap();
        assert!((s.mu_a() - (1.0 + 101f64.sqrt())).abs() < 1e-9);
        assert_eq!(nikiforov_bound(&empty(2).unwrap()), Err(BoundError::EdgelessGraph));
    }

    #[test]
    fn ceiling_slack() {
        assert_eq!(ceil_with_slack(3.0 + 1e-12), 3);
        assert_eq!(ceil_with_slack(3.0 - 1e-12), 3);
        assert_eq!(ceil_with_slack(2.5), 3);
        assert_eq!(ceil_with_slack(3.01), 4);
    }

    #[test]
    fn ratio_bound_examples() {
        for n in 2..=7 {
            assert!((ratio_bound_alpha(&complete(n).unwrap()).unwrap() - 1.0).abs() < 1e-9);
        }
        assert!((ratio_bound_alpha(&petersen()).unwrap() - 4.0).abs() < 1e-9);
        let tau = 2.0 * (std::f64::consts::PI / 5.0).cos();
        let c5 = ratio_bound_alpha(&cycle(5).unwrap()).unwrap();
        assert!((c5 - 5.0 * tau / (2.0 + tau)).abs() < 1e-9);
        assert!((c5 - 2.2361).abs() < 1e-4);
        assert_eq!(ratio_bound_alpha(&path(3).unwrap()), Err(BoundError::NotRegular));
        assert_eq!(ratio_bound_alpha(&empty(3).unwrap()), Err(BoundError::ZeroDegree));
    }

    #[test]
    fn theorem1_gap_examples() {
        let zero = HermitianMatrix::zeros(3).unwrap();
        let p = BlockPartition::from_assignment(vec![0, 1, 1]).unwrap();
        let b = SymmetricMatrix::diagonal(&[0.5, -2.0, 1.5]).unwrap();
        assert_eq!(theorem1_gap(&zero, &p, &b).unwrap(), 0.0);

        let g = complete_multipartite(&[2, 3]).unwrap();
        let a = HermitianMatrix::from_real(&g.adjacency_matrix());
        let p = BlockPartition::from_assignment(vec![0, 0, 1, 1, 1]).unwrap();
        let gap = theorem1_gap(&a, &p, &SymmetricMatrix::zeros(5).unwrap()).unwrap();
        assert!(gap.abs() < 1e-12);

        let k3 = HermitianMatrix::from_real(&complete(3).unwrap().adjacency_matrix());
        let singletons = BlockPartition::from_assignment(vec![0, 1, 2]).unwrap();
        let gap = theorem1_gap(&k3, &singletons, &SymmetricMatrix::zeros(3).unwrap()).unwrap();
        assert!(gap.abs() < 1e-12);
    }

    #[test]
    fn theorem1_gap_errors() {
        let k3 = HermitianMatrix::from_real(&complete(3).unwrap().adjacency_matrix());
        let p = BlockPartition::from_assignment(vec![0, 0, 1]).unwrap();
        let b = SymmetricMatrix::zeros(3).unwrap();
        assert_eq!(theorem1_gap(&k3, &p, &b), Err(BoundError::BlockNotZero));
        let nd = SymmetricMatrix::from_fn(3, |_, _| 1.0).unwrap();
        let ok = BlockPartition::from_assignment(vec![0, 1, 2]).unwrap();
        assert!(matches!(
            theorem1_gap(&k3, &ok, &nd),
            Err(BoundError::Linalg(LinalgError::NotDiagonal { .. }))
        ));
    }

    #[test]
    fn theorem1_complex_instance_is_nonnegative() {
        let a = HermitianMatrix::from_fn(3, |i, j| match (i, j) {
            (0, 1) => Complex64::new(0.3, -1.2),
            (0, 2) => Complex64::new(-0.7, 0.4),
            (1, 2) => Complex64::new(0.9, 0.9),
            _ => Complex64::new(0.0, 0.0),
        })
        .unwrap();
        let p = BlockPartition::from_assignment(vec![0, 1, 2]).unwrap();
        let b = SymmetricMatrix::diagonal(&[0.1, -0.4, 0.8]).unwrap();
        assert!(theorem1_gap(&a, &p, &b).unwrap() >= -1e-12);
    }

    #[test]
    fn lemma1_gap_examples() {
        assert!(lemma1_gap(&complete(2).unwrap().adjacency_matrix(), 2).unwrap().abs() < 1e-12);
        for g in [petersen(), cycle(7).unwrap(), complete_multipartite(&[2, 2, 2]).unwrap()] {
            for r in 2..6 {
                assert!(lemma1_gap(&g.adjacency_matrix(), r).unwrap().abs() < 1e-9);
            }
        }
        assert!(lemma1_gap(&path(3).unwrap().adjacency_matrix(), 2).unwrap() > 1e-6);
        assert!(lemma1_gap(&star(3).unwrap().adjacency_matrix(), 2).unwrap() > 1e-6);
    }

    #[test]
    fn lemma1_gap_errors() {
        let neg = SymmetricMatrix::from_rows(&[vec![0.0, -1.0], vec![-1.0, 0.0]]).unwrap();
        assert_eq!(lemma1_gap(&neg, 2), Err(BoundError::NegativeEntry { i: 0, j: 1 }));
        let reducible = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap().adjacency_matrix();
        assert_eq!(lemma1_gap(&reducible, 2), Err(BoundError::Reducible));
        assert_eq!(
            lemma1_gap(&complete(2).unwrap().adjacency_matrix(), 1),
            Err(BoundError::TooFewParts(1))
        );
        let one = SymmetricMatrix::diagonal(&[2.0]).unwrap();
        assert!(lemma1_gap(&one, 3).unwrap().abs() < 1e-12);
    }

    #[test]
    fn signless_gap_examples() {
        assert!(signless_gap(&complete(2).unwrap()).unwrap().abs() < 1e-12);
        assert!(signless_gap(&cycle(4).unwrap()).unwrap().abs() < 1e-9);
        assert!((signless_gap(&complete(3).unwrap()).unwrap() - 1.0).abs() < 1e-9);
        let split = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(signless_gap(&split), Err(BoundError::Disconnected));
    }

    #[test]
    fn report_examples() {
        let r = bound_report(&petersen(), &ReportOptions::all()).unwrap();
        assert!((r.hoffman.unwrap() - 2.5).abs() < 1e-9);
        assert!((r.nikiforov.unwrap() - 2.5).abs() < 1e-9);
        assert_eq!((r.hoffman_ceil, r.nikiforov_ceil), (Some(3), Some(3)));
        assert_eq!(r.chi_exact(), Some(3));
        assert_eq!(r.alpha_exact(), Some(4));
        assert!((r.ratio_bound.unwrap() - 4.0).abs() < 1e-9);

        let r = bound_report(&complete(4).unwrap(), &ReportOptions::all()).unwrap();
        assert!((r.nikiforov.unwrap() - 4.0).abs() < 1e-9);
        assert_eq!(r.chi_exact(), Some(4));
        assert!(r.equality.unwrap().characterization_holds);

        let r = bound_report(&complete_minus_edge(4).unwrap(), &ReportOptions::default()).unwrap();
        assert!((r.hoffman.unwrap() - 2.6403).abs() < 1e-4, "{:?}", r.hoffman);
        assert!((r.nikiforov.unwrap() - 2.7808).abs() < 1e-4);
        assert!(r.nikiforov.unwrap() > r.hoffman.unwrap());

        let r = bound_report(&empty(5).unwrap(), &ReportOptions::default()).unwrap();
        assert!(!r.bounds_defined());
        assert_eq!(r.chi_exact(), Some(1));
    }

    #[test]
    fn report_options_are_honored() {
        let opts = ReportOptions {
            compute_chi: false,
            ..ReportOptions::default()
        };
        let r = bound_report(&cycle(5).unwrap(), &opts).unwrap();
        assert!(r.chi.is_none() && r.alpha.is_none() && r.equality.is_none());
        let opts = ReportOptions {
            compute_chi: false,
            compute_equality: true,
            ..ReportOptions::default()
        };
        let r = bound_report(&cycle(5).unwrap(), &opts).unwrap();
        assert!(r.chi.is_none());
        assert!(!r.equality.unwrap().characterization_holds);
    }
}
