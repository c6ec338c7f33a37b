//! Seeded random instances and fuzz campaigns for the block and row-sum
//! eigenvalue inequalities, the chromatic bounds and the signless-Laplacian
//! equivalence, plus an explorer that ranks near-equality instances of the
//! block inequality.
//!
//! Every trial draws its randomness from a ChaCha8 stream keyed by
//! `(seed, trial index)`, so trials run in parallel and any record can be
//! rebuilt from those two numbers alone.

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::bounds::{
    ceil_with_slack, hoffman_from_spectrum, lemma1_gap, nikiforov_from_spectrum, signless_parts,
    theorem1_gap, GraphSpectra,
};
use crate::coloring::{
    chromatic_number_exact, equality_witness, EqualityReport, DEFAULT_BUDGET, DEFAULT_TAU_TOL,
};
use crate::graph::{complete, emit_graph6, gnp, Graph};
use crate::linalg::{BlockPartition, Complex64, HermitianMatrix, LinalgError, SymmetricMatrix};

/// Gap a random instance with rowsum spread must exceed, relative to `1 + ||A||_F`.
pub const STRICT_GAP: f64 = 1e-6;

/// Largest vertex count of the exhaustive graph sweeps.
pub const EXHAUSTIVE_MAX_N: usize = 6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("invalid n range [{0}, {1}]")]
    NRange(usize, usize),
    #[error("invalid r range [{0}, {1}]: need 2 <= min <= max")]
    RRange(usize, usize),
    #[error("n_range.min = {n_min} is smaller than r_range.min = {r_min}")]
    NBelowR { n_min: usize, r_min: usize },
    #[error("{0} must be finite and nonnegative")]
    Scale(&'static str),
    #[error("tolerance must be finite and positive")]
    Tolerance,
    #[error("this campaign needs entry_scale > 0")]
    ZeroEntryScale,
    #[error("r ({r}) must lie in [2, n] (n = {n})")]
    PartCount { n: usize, r: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FuzzConfig {
    pub trials: u64,
    pub seed: u64,
    pub n_range: (usize, usize),
    pub r_range: (usize, usize),
    pub entry_scale: f64,
    pub diag_scale: f64,
    pub tolerance: f64,
}

impl FuzzConfig {
    pub fn theorem1() -> Self {
        Self {
            trials: 10_000,
            seed: 1,
            n_range: (2, 24),
            r_range: (2, 6),
            entry_scale: 1.0,
            diag_scale: 1.0,
            tolerance: 1e-8,
        }
    }

    pub fn lemma1() -> Self {
        Self::theorem1()
    }

    pub fn bounds_vs_chi() -> Self {
        Self {
            trials: 200,
            n_range: (7, 12),
            ..Self::theorem1()
        }
    }

    pub fn signless() -> Self {
        Self {
            trials: 500,
            n_range: (7, 10),
            tolerance: 1e-9,
            ..Self::theorem1()
        }
    }

    pub fn explore() -> Self {
        Self {
            trials: 600,
            n_range: (2, 12),
            ..Self::theorem1()
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let (n_min, n_max) = self.n_range;
        if n_min < 1 || n_min > n_max || n_max > crate::linalg::MAX_DIM {
            return Err(ConfigError::NRange(n_min, n_max));
        }
        let (r_min, r_max) = self.r_range;
        if r_min < 2 || r_min > r_max {
            return Err(ConfigError::RRange(r_min, r_max));
        }
        if n_min < r_min {
            return Err(ConfigError::NBelowR { n_min, r_min });
        }
        for (name, v) in [("entry_scale", self.entry_scale), ("diag_scale", self.diag_scale)] {
            if !(v.is_finite() && v >= 0.0) {
                return Err(ConfigError::Scale(name));
            }
        }
        if !(self.tolerance.is_finite() && self.tolerance > 0.0) {
            return Err(ConfigError::Tolerance);
        }
        Ok(())
    }
}

/// Instance family; a closed vocabulary shared by every campaign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// Complex Hermitian blocked `A`, random diagonal `B`.
    Random,
    /// Complex Hermitian blocked `A`, `B = 0`.
    RandomBZero,
    /// Adjacency of a connected bipartite graph, `r = 2`, `B = 0`.
    BipartiteBZero,
    /// Adjacency of a connected bipartite graph, `r = 2`, `B = D`.
    BipartiteBDegree,
    /// `K_n` with singleton parts, `B = 0`.
    SingletonComplete,
    /// Graph adjacency partitioned by an optimal coloring, `B = D`.
    ColoringBDegree,
    /// Random irreducible nonnegative symmetric matrix.
    Irreducible,
    /// Permuted symmetric circulant, so all row sums agree.
    ConstantRowsum,
    /// Labeled graph from the exhaustive sweep.
    Exhaustive,
    /// Erdos-Renyi sample.
    Gnp,
    /// Random connected graph (spanning tree plus random edges).
    RandomConnected,
    /// Random connected bipartite graph.
    RandomBipartite,
}

/// Structural tags attached to every record.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Tags {
    pub n: usize,
    pub r: Option<usize>,
    pub block_sizes: Vec<usize>,
    pub b_is_zero: bool,
    pub b_is_rowsum: bool,
    pub support_bipartite: bool,
    pub support_connected: bool,
}

impl Tags {
    fn for_matrix(a: &HermitianMatrix, p: Option<&BlockPartition>, b: Option<&SymmetricMatrix>) -> Self {
        let support = support_graph(a);
        let (b_is_zero, b_is_rowsum) = match b {
            Some(b) => {
                let zero = b.as_slice().iter().all(|&x| x == 0.0);
                let rowsum = (0..a.n()).all(|i| {
                    let s: f64 = (0..a.n()).map(|j| a.get(i, j).norm()).sum();
                    (b.get(i, i) - s).abs() <= 1e-12 * (1.0 + s)
                });
                (zero, rowsum)
            }
            None => (false, false),
        };
        Self {
            n: a.n(),
            r: p.map(BlockPartition::r),
            block_sizes: p.map(BlockPartition::block_sizes).unwrap_or_default(),
            b_is_zero,
            b_is_rowsum,
            support_bipartite: support.is_bipartite(),
            support_connected: support.is_connected(),
        }
    }

    fn for_graph(g: &Graph, p: Option<&BlockPartition>) -> Self {
        Self {
            n: g.n(),
            r: p.map(BlockPartition::r),
            block_sizes: p.map(BlockPartition::block_sizes).unwrap_or_default(),
            b_is_zero: false,
            b_is_rowsum: false,
            support_bipartite: g.is_bipartite(),
            support_connected: g.is_connected(),
        }
    }

    /// Short human label such as `bipartite, r=2, B=D`.
    pub fn label(&self) -> String {
        let mut parts = Vec::new();
        if self.support_bipartite {
            parts.push("bipartite".to_string());
        }
        if let Some(r) = self.r {
            parts.push(format!("r={r}"));
        }
        if self.b_is_zero {
            parts.push("B=0".into());
        } else if self.b_is_rowsum {
            parts.push("B=D".into());
        }
        parts.join(", ")
    }
}

fn support_graph(a: &HermitianMatrix) -> Graph {
    let n = a.n();
    let edges = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .filter(|&(i, j)| a.get(i, j) != Complex64::new(0.0, 0.0));
    Graph::from_edges(n, edges).expect("indices in range")
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialRecord {
    pub trial: u64,
    pub family: Family,
    pub digest: String,
    pub gap: f64,
    /// Scaled tolerance the gap was compared against.
    pub threshold: f64,
    pub label: String,
    pub tags: Tags,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equality: Option<EqualityReport>,
}

impl TrialRecord {
    fn new(trial: u64, family: Family, digest: String, gap: f64, threshold: f64, tags: Tags) -> Self {
        Self {
            trial,
            family,
            digest,
            gap,
            threshold,
            label: tags.label(),
            tags,
            graph6: None,
            chi: None,
            equality: None,
        }
    }

    fn with_graph(mut self, g: &Graph) -> Self {
        self.graph6 = emit_graph6(g).ok();
        self
    }
}

/// Pass/fail tally of one named check inside a campaign.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SubCampaign {
    pub name: String,
    pub trials: u64,
    pub failures: u64,
    pub min_gap: Option<f64>,
    pub max_gap: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Campaign {
    Theorem1,
    Lemma1,
    BoundsVsChi,
    Signless,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FuzzSummary {
    pub campaign: Campaign,
    pub config: FuzzConfig,
    pub trials_run: u64,
    pub violation_count: u64,
    pub violations: Vec<TrialRecord>,
    pub min_gap: Option<f64>,
    pub near_equality_count: u64,
    pub near_equality: Vec<TrialRecord>,
    pub subcampaigns: Vec<SubCampaign>,
}

impl FuzzSummary {
    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }

    pub fn subcampaign(&self, name: &str) -> Option<&SubCampaign> {
        self.subcampaigns.iter().find(|s| s.name == name)
    }
}

/// Outcome of one trial.
#[derive(Debug, Clone)]
struct Outcome {
    record: TrialRecord,
    /// Sub-campaign name; `None` for the main check.
    check: Option<&'static str>,
    violation: bool,
    near_equality: bool,
}

fn summarize(campaign: Campaign, cfg: &FuzzConfig, outcomes: Vec<Outcome>, checks: &[&'static str]) -> FuzzSummary {
    let mut subcampaigns: Vec<SubCampaign> = checks
        .iter()
        .map(|name| SubCampaign {
            name: name.to_string(),
            trials: 0,
            failures: 0,
            min_gap: None,
            max_gap: None,
        })
        .collect();
    let mut summary = FuzzSummary {
        campaign,
        config: cfg.clone(),
        trials_run: 0,
        violation_count: 0,
        violations: Vec::new(),
        min_gap: None,
        near_equality_count: 0,
        near_equality: Vec::new(),
        subcampaigns: Vec::new(),
    };
    let mut trials = std::collections::BTreeSet::new();
    for o in outcomes {
        trials.insert(o.record.trial);
        let gap = o.record.gap;
        if let Some(name) = o.check {
            let sub = subcampaigns
                .iter_mut()
                .find(|s| s.name == name)
                .expect("sub-campaign declared");
            sub.trials += 1;
            sub.failures += o.violation as u64;
            sub.min_gap = Some(sub.min_gap.map_or(gap, |m| m.min(gap)));
            sub.max_gap = Some(sub.max_gap.map_or(gap, |m| m.max(gap)));
        }
        summary.min_gap = Some(summary.min_gap.map_or(gap, |m: f64| m.min(gap)));
        if o.violation {
            summary.violation_count += 1;
            summary.violations.push(o.record.clone());
        }
        if o.near_equality {
            summary.near_equality_count += 1;
            summary.near_equality.push(o.record);
        }
    }
    summary.trials_run = trials.len() as u64;
    summary.subcampaigns = subcampaigns;
    summary
}

/// RNG for trial `index` of a campaign seeded with `seed`.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn digest_of(parts: &[&[u8]]) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update((p.len() as u64).to_le_bytes());
        h.update(p);
    }
    h.finalize()[..16].iter().map(|b| format!("{b:02x}")).collect()
}

fn f64_bytes(values: impl Iterator<Item = f64>) -> Vec<u8> {
    values.flat_map(|v| v.to_bits().to_le_bytes()).collect()
}

fn hermitian_bytes(a: &HermitianMatrix) -> Vec<u8> {
    let n = a.n();
    f64_bytes((0..n * n).flat_map(|k| {
        let z = a.get(k / n, k % n);
        [z.re, z.im]
    }))
}

fn partition_bytes(p: &BlockPartition) -> Vec<u8> {
    p.assignment().iter().flat_map(|&x| (x as u64).to_le_bytes()).collect()
}

fn graph_digest(g: &Graph) -> String {
    let edges: Vec<u8> = g
        .edges()
        .flat_map(|(u, v)| [(u as u64).to_le_bytes(), (v as u64).to_le_bytes()])
        .flatten()
        .collect();
    digest_of(&[&(g.n() as u64).to_le_bytes(), &edges])
}

fn uniform_symmetric(rng: &mut impl Rng, scale: f64) -> f64 {
    scale * (2.0 * rng.gen::<f64>() - 1.0)
}

/// Uniform in `(0, scale]`.
fn uniform_positive(rng: &mut impl Rng, scale: f64) -> f64 {
    scale * (1.0 - rng.gen::<f64>())
}

/// Random `r`-part partition of `[0, n)`: uniform assignment, then empty parts
/// are refilled by moving a random index out of the currently largest part.
fn random_partition(rng: &mut impl Rng, n: usize, r: usize) -> BlockPartition {
    let mut part_of: Vec<usize> = (0..n).map(|_| rng.gen_range(0..r)).collect();
    loop {
        let mut sizes = vec![0usize; r];
        for &p in &part_of {
            sizes[p] += 1;
        }
        let Some(empty) = sizes.iter().position(|&s| s == 0) else { break };
        let largest = (0..r).max_by(|&a, &b| sizes[a].cmp(&sizes[b]).then(b.cmp(&a))).unwrap();
        let members: Vec<usize> = (0..n).filter(|&i| part_of[i] == largest).collect();
        part_of[members[rng.gen_range(0..members.len())]] = empty;
    }
    BlockPartition::new(part_of, r).expect("repaired partition is valid")
}

/// Hermitian matrix with zero diagonal blocks for a random `r`-part partition;
/// off-block entries have real and imaginary parts uniform in
/// `[-entry_scale, entry_scale]`.
pub fn random_hermitian_blocked(
    n: usize,
    r: usize,
    entry_scale: f64,
    seed: u64,
) -> Result<(HermitianMatrix, BlockPartition), ConfigError> {
    if r < 2 || r > n {
        return Err(ConfigError::PartCount { n, r });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = random_partition(&mut rng, n, r);
    let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        for j in (i + 1)..n {
            if p.part_of(i) != p.part_of(j) {
                let re = uniform_symmetric(&mut rng, entry_scale);
                let im = uniform_symmetric(&mut rng, entry_scale);
                entries[i * n + j] = Complex64::new(re, im);
            }
        }
    }
    let a = HermitianMatrix::from_fn(n, |i, j| entries[i * n + j])?;
    Ok((a, p))
}

/// Diagonal matrix with entries uniform in `[-diag_scale, diag_scale]`.
pub fn random_diagonal(n: usize, diag_scale: f64, seed: u64) -> Result<SymmetricMatrix, ConfigError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let values: Vec<f64> = (0..n).map(|_| uniform_symmetric(&mut rng, diag_scale)).collect();
    Ok(SymmetricMatrix::diagonal(&values)?)
}

/// Uniform random labeled spanning tree of `K_n` by Prufer decoding.
fn random_tree(rng: &mut impl Rng, n: usize) -> Vec<(usize, usize)> {
    match n {
        0 | 1 => Vec::new(),
        2 => vec![(0, 1)],
        _ => {
            let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            let mut degree = vec![1usize; n];
            for &c in &code {
                degree[c] += 1;
            }
            let mut edges = Vec::with_capacity(n - 1);
            for &c in &code {
                let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
                edges.push((leaf.min(c), leaf.max(c)));
                degree[leaf] -= 1;
                degree[c] -= 1;
            }
            let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
            edges.push((rest[0], rest[1]));
            edges
        }
    }
}

/// Irreducible nonnegative symmetric matrix: a uniform random spanning tree
/// plus every other pair with probability `density`; off-diagonal support
/// entries uniform in `(0, entry_scale]`, diagonal uniform in `[0, entry_scale]`.
pub fn random_connected_nonneg_symmetric(
    n: usize,
    density: f64,
    entry_scale: f64,
    seed: u64,
) -> Result<SymmetricMatrix, ConfigError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut data = vec![0.0; n * n];
    for (u, v) in random_tree(&mut rng, n) {
        let w = uniform_positive(&mut rng, entry_scale);
        data[u * n + v] = w;
        data[v * n + u] = w;
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if data[i * n + j] == 0.0 && rng.gen::<f64>() < density {
                let w = uniform_positive(&mut rng, entry_scale);
                data[i * n + j] = w;
                data[j * n + i] = w;
            }
        }
        data[i * n + i] = entry_scale * rng.gen::<f64>();
    }
    Ok(SymmetricMatrix::from_row_major(n, data)?)
}

/// Symmetric circulant with positive shift weights (shift 1 always present),
/// conjugated by a random permutation: irreducible with constant row sums.
pub fn random_constant_rowsum(
    n: usize,
    density: f64,
    entry_scale: f64,
    seed: u64,
) -> Result<SymmetricMatrix, ConfigError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let half = n / 2;
    let weights: Vec<f64> = (0..=half)
        .map(|s| {
            if s == 1 || (s > 1 && rng.gen::<f64>() < density) {
                uniform_positive(&mut rng, entry_scale)
            } else {
                0.0
            }
        })
        .collect();
    let diag = entry_scale * rng.gen::<f64>();
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    Ok(SymmetricMatrix::from_fn(n, |i, j| {
        if i == j {
            return diag;
        }
        let d = perm[i].abs_diff(perm[j]);
        weights[d.min(n - d)]
    })?)
}

/// Random connected graph: spanning tree plus extra edges with probability `p`.
pub fn random_connected_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::from_edges(n, random_tree(&mut rng, n)).expect("tree edges are valid");
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.gen::<f64>() < p {
                g.add_edge(i, j).expect("valid pair");
            }
        }
    }
    g
}

/// Random connected bipartite graph: spanning tree plus extra edges, with
/// probability `p`, only between the two sides of the tree's bipartition.
pub fn random_bipartite_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::from_edges(n, random_tree(&mut rng, n)).expect("tree edges are valid");
    let side = match g.bipartition() {
        crate::graph::Bipartition::TwoColoring(side) => side,
        crate::graph::Bipartition::OddCycle(_) => unreachable!("trees are bipartite"),
    };
    for i in 0..n {
        for j in (i + 1)..n {
            if side[i] != side[j] && rng.gen::<f64>() < p {
                g.add_edge(i, j).expect("valid pair");
            }
        }
    }
    g
}

fn sample_dims(rng: &mut impl Rng, cfg: &FuzzConfig) -> (usize, usize) {
    let n = rng.gen_range(cfg.n_range.0..=cfg.n_range.1);
    let r = rng.gen_range(cfg.r_range.0..=cfg.r_range.1.min(n).max(cfg.r_range.0));
    (n, r)
}

/// A block-inequality instance `(A, partition, B)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Theorem1Instance {
    pub family: Family,
    pub a: HermitianMatrix,
    pub partition: BlockPartition,
    pub b: SymmetricMatrix,
}

impl Theorem1Instance {
    pub fn digest(&self) -> String {
        digest_of(&[
            &hermitian_bytes(&self.a),
            &partition_bytes(&self.partition),
            &f64_bytes(self.b.diagonal_entries().into_iter()),
        ])
    }

    pub fn scale(&self) -> f64 {
        1.0 + self.a.frobenius_norm() + self.b.frobenius_norm()
    }

    pub fn gap(&self) -> f64 {
        theorem1_gap(&self.a, &self.partition, &self.b).expect("instances satisfy the preconditions")
    }
}

/// Rebuilds trial `index` of a block-inequality fuzz campaign.
pub fn theorem1_instance(cfg: &FuzzConfig, index: u64) -> Theorem1Instance {
    let mut rng = trial_rng(cfg.seed, index);
    let (n, r) = sample_dims(&mut rng, cfg);
    let (a, partition) = random_hermitian_blocked(n, r, cfg.entry_scale, rng.next_u64())
        .expect("validated config keeps 2 <= r <= n");
    let b = random_diagonal(n, cfg.diag_scale, rng.next_u64()).expect("n >= 1");
    Theorem1Instance {
        family: Family::Random,
        a,
        partition,
        b,
    }
}

fn theorem1_outcome(index: u64, inst: &Theorem1Instance, tol: f64) -> Outcome {
    let gap = inst.gap();
    let threshold = tol * inst.scale();
    let tags = Tags::for_matrix(&inst.a, Some(&inst.partition), Some(&inst.b));
    Outcome {
        record: TrialRecord::new(index, inst.family, inst.digest(), gap, threshold, tags),
        check: None,
        violation: gap < -threshold,
        near_equality: gap.abs() <= threshold,
    }
}

/// Checks `mu(B - A) >= mu(B + A / (r - 1))` on `cfg.trials` random complex
/// instances. A violation is a gap below `-tol (1 + ||A||_F + ||B||_F)`.
pub fn fuzz_theorem1(cfg: &FuzzConfig) -> Result<FuzzSummary, ConfigError> {
    cfg.validate()?;
    let outcomes: Vec<Outcome> = (0..cfg.trials)
        .into_par_iter()
        .map(|i| theorem1_outcome(i, &theorem1_instance(cfg, i), cfg.tolerance))
        .collect();
    Ok(summarize(Campaign::Theorem1, cfg, outcomes, &[]))
}

/// A row-sum inequality instance.
#[derive(Debug, Clone, PartialEq)]
pub struct Lemma1Instance {
    pub family: Family,
    pub a: SymmetricMatrix,
    pub r: usize,
}

impl Lemma1Instance {
    pub fn digest(&self) -> String {
        digest_of(&[
            &f64_bytes(self.a.as_slice().iter().copied()),
            &(self.r as u64).to_le_bytes(),
        ])
    }

    pub fn scale(&self) -> f64 {
        1.0 + self.a.frobenius_norm()
    }

    pub fn rowsum_spread(&self) -> f64 {
        let sums = self.a.row_sums();
        let max = sums.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let min = sums.iter().copied().fold(f64::INFINITY, f64::min);
        max - min
    }

    pub fn gap(&self) -> f64 {
        lemma1_gap(&self.a, self.r).expect("instances satisfy the preconditions")
    }
}

/// Rebuilds trial `index` of the row-sum campaign. Indices below
/// `cfg.trials` are random irreducible instances; the next `cfg.trials`
/// indices are constant-row-sum instances.
pub fn lemma1_instance(cfg: &FuzzConfig, index: u64) -> Lemma1Instance {
    let mut rng = trial_rng(cfg.seed, index);
    let n = rng.gen_range(cfg.n_range.0..=cfg.n_range.1);
    let r = rng.gen_range(cfg.r_range.0..=cfg.r_range.1);
    let density = rng.gen::<f64>();
    let seed = rng.next_u64();
    let (family, a) = if index < cfg.trials {
        (
            Family::Irreducible,
            random_connected_nonneg_symmetric(n, density, cfg.entry_scale, seed),
        )
    } else {
        (
            Family::ConstantRowsum,
            random_constant_rowsum(n, density, cfg.entry_scale, seed),
        )
    };
    Lemma1Instance {
        family,
        a: a.expect("n >= 1"),
        r,
    }
}

pub const CHECK_CONSTANT_ROWSUM: &str = "constant-rowsum";
pub const CHECK_ROWSUM_SPREAD: &str = "rowsum-spread";

/// Checks `mu(R + A / (r - 1)) >= r / (r - 1) mu(A)` on random irreducible
/// instances, then runs two equality-direction checks:
///
/// * `constant-rowsum`: `cfg.trials` extra instances with equal row sums must
///   have `|gap| <= tol (1 + ||A||_F)`;
/// * `rowsum-spread`: every random instance whose row sums spread by at least
///   `0.5 * entry_scale` must have `gap > 1e-6 (1 + ||A||_F)`.
///
/// Failures of either check count as violations.
pub fn fuzz_lemma1(cfg: &FuzzConfig) -> Result<FuzzSummary, ConfigError> {
    cfg.validate()?;
    if cfg.entry_scale <= 0.0 {
        return Err(ConfigError::ZeroEntryScale);
    }
    let outcomes: Vec<Outcome> = (0..2 * cfg.trials)
        .into_par_iter()
        .flat_map_iter(|i| {
            let inst = lemma1_instance(cfg, i);
            let gap = inst.gap();
            let scale = inst.scale();
            let threshold = cfg.tolerance * scale;
            let a = HermitianMatrix::from_real(&inst.a);
            let mut tags = Tags::for_matrix(&a, None, None);
            tags.r = Some(inst.r);
            let record = TrialRecord::new(i, inst.family, inst.digest(), gap, threshold, tags);
            let near_equality = gap.abs() <= threshold;
            let mut out = Vec::with_capacity(2);
            match inst.family {
                Family::ConstantRowsum => out.push(Outcome {
                    record,
                    check: Some(CHECK_CONSTANT_ROWSUM),
                    violation: !near_equality,
                    near_equality,
                }),
                _ => {
                    out.push(Outcome {
                        record: record.clone(),
                        check: None,
                        violation: gap < -threshold,
                        near_equality,
                    });
                    if inst.rowsum_spread() >= 0.5 * cfg.entry_scale {
                        let strict = STRICT_GAP * scale;
                        let mut record = record;
                        record.threshold = strict;
                        out.push(Outcome {
                            record,
                            check: Some(CHECK_ROWSUM_SPREAD),
                            violation: gap <= strict,
                            near_equality: false,
                        });
                    }
                }
            }
            out
        })
        .collect();
    Ok(summarize(
        Campaign::Lemma1,
        cfg,
        outcomes,
        &[CHECK_CONSTANT_ROWSUM, CHECK_ROWSUM_SPREAD],
    ))
}

/// Number of labeled graphs on exactly `n` vertices.
fn labeled_count(n: usize) -> u64 {
    1u64 << (n * (n - 1) / 2)
}

/// The labeled graph on `n` vertices whose edge set is the bit mask `mask`
/// over pairs in graph6 order `(0,1), (0,2), (1,2), (0,3), ...`.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::new(n).expect("n >= 1");
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> bit & 1 == 1 {
                g.add_edge(i, j).expect("valid pair");
            }
            bit += 1;
        }
    }
    g
}

/// All labeled graphs on `1..=max_n` vertices, in order of `n` then mask.
pub fn all_labeled_graphs(max_n: usize) -> impl Iterator<Item = Graph> {
    (1..=max_n).flat_map(|n| (0..labeled_count(n)).map(move |mask| graph_from_mask(n, mask)))
}

fn exhaustive_len(max_n: usize) -> u64 {
    (1..=max_n).map(labeled_count).sum()
}

fn exhaustive_graph(index: u64) -> Graph {
    let mut rest = index;
    for n in 1..=EXHAUSTIVE_MAX_N {
        if rest < labeled_count(n) {
            return graph_from_mask(n, rest);
        }
        rest -= labeled_count(n);
    }
    unreachable!("index beyond the exhaustive sweep")
}

/// Rebuilds trial `index` of the bounds-vs-chi campaign: the exhaustive sweep
/// over labeled graphs on at most 6 vertices comes first, then `cfg.trials`
/// G(n, p) samples with `n` in `cfg.n_range` and `p` uniform in `[0.1, 0.9]`.
pub fn bounds_instance(cfg: &FuzzConfig, index: u64) -> (Family, Graph) {
    let exhaustive = exhaustive_len(EXHAUSTIVE_MAX_N);
    if index < exhaustive {
        return (Family::Exhaustive, exhaustive_graph(index));
    }
    let mut rng = trial_rng(cfg.seed, index);
    let n = rng.gen_range(cfg.n_range.0..=cfg.n_range.1);
    let p = 0.1 + 0.8 * rng.gen::<f64>();
    (Family::Gnp, gnp(n, p, rng.next_u64()).expect("valid parameters"))
}

pub const CHECK_HOFFMAN: &str = "hoffman-ceil-le-chi";
pub const CHECK_NIKIFOROV: &str = "laplacian-ceil-le-chi";
pub const CHECK_CHI_RESOLVED: &str = "chi-resolved";

/// Near-equality window between the Laplacian bound and `chi`.
pub const BOUND_EQUALITY_TOL: f64 = 1e-6;

/// Checks both chromatic bounds against the exact chromatic number over all
/// labeled graphs on at most 6 vertices plus `cfg.trials` G(n, p) samples.
/// Edgeless graphs are skipped (the bounds are undefined). The gap is
/// `chi - laplacian bound`; near-equality records carry the equality
/// witness of the optimal coloring found.
pub fn fuzz_bounds_vs_chi(cfg: &FuzzConfig) -> Result<FuzzSummary, ConfigError> {
    cfg.validate()?;
    let total = exhaustive_len(EXHAUSTIVE_MAX_N) + cfg.trials;
    let outcomes: Vec<Outcome> = (0..total)
        .into_par_iter()
        .flat_map_iter(|i| {
            let (family, g) = bounds_instance(cfg, i);
            bounds_outcomes(i, family, &g)
        })
        .collect();
    Ok(summarize(
        Campaign::BoundsVsChi,
        cfg,
        outcomes,
        &[CHECK_HOFFMAN, CHECK_NIKIFOROV, CHECK_CHI_RESOLVED],
    ))
}

fn bounds_outcomes(index: u64, family: Family, g: &Graph) -> Vec<Outcome> {
    if g.is_edgeless() {
        return Vec::new();
    }
    let spectra = GraphSpectra::of(g).expect("graph matrices converge");
    let hoffman = hoffman_from_spectrum(spectra.mu_a(), spectra.mu_min_a());
    let nikiforov = nikiforov_from_spectrum(spectra.mu_a(), spectra.mu_l())
        .expect("mu(L) > mu(A) for nonempty graphs");
    let outcome = chromatic_number_exact(g, DEFAULT_BUDGET);
    let base = |gap: f64| {
        let mut rec = TrialRecord::new(index, family, graph_digest(g), gap, BOUND_EQUALITY_TOL, Tags::for_graph(g, None))
            .with_graph(g);
        rec.chi = outcome.exact();
        rec
    };
    let Some(chi) = outcome.exact() else {
        return vec![Outcome {
            record: base(f64::NAN),
            check: Some(CHECK_CHI_RESOLVED),
            violation: true,
            near_equality: false,
        }];
    };
    let near = (nikiforov - chi as f64).abs() <= BOUND_EQUALITY_TOL;
    let mut main = base(chi as f64 - nikiforov);
    if near {
        main.equality = equality_witness(g, outcome.coloring(), &spectra.adjacency, DEFAULT_TAU_TOL).ok();
    }
    vec![
        Outcome {
            record: base(chi as f64 - hoffman),
            check: Some(CHECK_HOFFMAN),
            violation: ceil_with_slack(hoffman) > chi as i64,
            near_equality: false,
        },
        Outcome {
            record: main,
            check: Some(CHECK_NIKIFOROV),
            violation: ceil_with_slack(nikiforov) > chi as i64,
            near_equality: near,
        },
    ]
}

/// Rebuilds trial `index` of the signless campaign: every connected labeled
/// graph on at most 6 vertices first (indexed over all labeled graphs;
/// disconnected ones are skipped), then `cfg.trials` random connected graphs
/// alternating between general and bipartite samples.
pub fn signless_instance(cfg: &FuzzConfig, index: u64) -> (Family, Graph) {
    let exhaustive = exhaustive_len(EXHAUSTIVE_MAX_N);
    if index < exhaustive {
        return (Family::Exhaustive, exhaustive_graph(index));
    }
    let mut rng = trial_rng(cfg.seed, index);
    let n = rng.gen_range(cfg.n_range.0..=cfg.n_range.1);
    let p = 0.5 * rng.gen::<f64>();
    let seed = rng.next_u64();
    if (index - exhaustive).is_multiple_of(2) {
        (Family::RandomConnected, random_connected_graph(n, p, seed))
    } else {
        (Family::RandomBipartite, random_bipartite_graph(n, p, seed))
    }
}

/// Checks that `mu(D + A) - mu(D - A) <= tol (1 + mu(D + A))` holds exactly
/// for the bipartite graphs among connected samples.
pub fn fuzz_signless(cfg: &FuzzConfig) -> Result<FuzzSummary, ConfigError> {
    cfg.validate()?;
    let total = exhaustive_len(EXHAUSTIVE_MAX_N) + cfg.trials;
    let outcomes: Vec<Outcome> = (0..total)
        .into_par_iter()
        .filter_map(|i| {
            let (family, g) = signless_instance(cfg, i);
            if !g.is_connected() {
                return None;
            }
            let (gap, q) = signless_parts(&g).expect("connected graph");
            let threshold = cfg.tolerance * (1.0 + q);
            let zero = gap <= threshold;
            let record = TrialRecord::new(i, family, graph_digest(&g), gap, threshold, Tags::for_graph(&g, None))
                .with_graph(&g);
            Some(Outcome {
                record,
                check: None,
                violation: zero != g.is_bipartite(),
                near_equality: zero,
            })
        })
        .collect();
    Ok(summarize(Campaign::Signless, cfg, outcomes, &[]))
}

/// Families cycled through by [`explore_equality`], by trial index.
pub const EXPLORE_FAMILIES: [Family; 6] = [
    Family::Random,
    Family::RandomBZero,
    Family::BipartiteBZero,
    Family::BipartiteBDegree,
    Family::SingletonComplete,
    Family::ColoringBDegree,
];

/// Rebuilds trial `index` of the explorer.
pub fn explore_instance(cfg: &FuzzConfig, index: u64) -> Theorem1Instance {
    let family = EXPLORE_FAMILIES[(index % EXPLORE_FAMILIES.len() as u64) as usize];
    let mut rng = trial_rng(cfg.seed, index);
    let (n, r) = sample_dims(&mut rng, cfg);
    let n_graph = n.max(2);
    let seed = rng.next_u64();
    let graph_instance = |g: &Graph, p: BlockPartition, b_degree: bool| {
        let b = if b_degree {
            g.degree_matrix()
        } else {
            SymmetricMatrix::zeros(g.n()).expect("n >= 1")
        };
        Theorem1Instance {
            family,
            a: HermitianMatrix::from_real(&g.adjacency_matrix()),
            partition: p,
            b,
        }
    };
    match family {
        Family::Random | Family::RandomBZero => {
            let (a, partition) = random_hermitian_blocked(n, r, cfg.entry_scale, seed)
                .expect("validated config keeps 2 <= r <= n");
            let b = if family == Family::Random {
                random_diagonal(n, cfg.diag_scale, rng.next_u64()).expect("n >= 1")
            } else {
                SymmetricMatrix::zeros(n).expect("n >= 1")
            };
            Theorem1Instance { family, a, partition, b }
        }
        Family::BipartiteBZero | Family::BipartiteBDegree => {
            let g = random_bipartite_graph(n_graph, 0.5 * rng.gen::<f64>(), seed);
            let side = match g.bipartition() {
                crate::graph::Bipartition::TwoColoring(side) => side,
                crate::graph::Bipartition::OddCycle(_) => unreachable!("bipartite by construction"),
            };
            let p = BlockPartition::new(side.into_iter().map(usize::from).collect(), 2)
                .expect("connected graph on >= 2 vertices uses both sides");
            graph_instance(&g, p, family == Family::BipartiteBDegree)
        }
        Family::SingletonComplete => {
            let g = complete(n_graph).expect("n >= 2");
            let p = BlockPartition::new((0..n_graph).collect(), n_graph).expect("n >= 2");
            graph_instance(&g, p, false)
        }
        _ => {
            let mut g = gnp(n_graph, 0.2 + 0.6 * rng.gen::<f64>(), seed).expect("valid p");
            if g.is_edgeless() {
                g.add_edge(0, 1).expect("n >= 2");
            }
            let coloring = chromatic_number_exact(&g, DEFAULT_BUDGET).coloring().clone();
            let p = BlockPartition::new(coloring.colors().to_vec(), coloring.k())
                .expect("a graph with an edge needs >= 2 colors");
            graph_instance(&g, p, true)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExploreReport {
    pub config: FuzzConfig,
    pub top_k: usize,
    pub trials_run: u64,
    pub near_equality_count: u64,
    pub records: Vec<TrialRecord>,
}

/// Samples the block inequality over [`EXPLORE_FAMILIES`] and returns the
/// `top_k` instances closest to equality.
///
/// Ranking key: scaled `|gap|` with everything inside the tolerance treated
/// as a tie at zero; ties are broken by the record's rank within its own
/// family, then family order, then trial index. Tied zero-gap families are
/// therefore interleaved instead of one family filling the list.
pub fn explore_equality(cfg: &FuzzConfig, top_k: usize) -> Result<ExploreReport, ConfigError> {
    cfg.validate()?;
    let records: Vec<TrialRecord> = (0..cfg.trials)
        .into_par_iter()
        .map(|i| theorem1_outcome(i, &explore_instance(cfg, i), cfg.tolerance).record)
        .collect();
    let near_equality_count = records.iter().filter(|r| r.gap.abs() <= r.threshold).count() as u64;

    let key = |r: &TrialRecord| {
        if r.gap.abs() <= r.threshold {
            0.0
        } else {
            r.gap.abs() / r.threshold
        }
    };
    let mut ranked: Vec<(f64, usize, Family, u64, &TrialRecord)> = Vec::with_capacity(records.len());
    for family in EXPLORE_FAMILIES {
        let mut members: Vec<&TrialRecord> = records.iter().filter(|r| r.family == family).collect();
        members.sort_by(|a, b| key(a).total_cmp(&key(b)).then(a.trial.cmp(&b.trial)));
        for (rank, r) in members.into_iter().enumerate() {
            ranked.push((key(r), rank, family, r.trial, r));
        }
    }
    ranked.sort_by(|a, b| {
        a.0.total_cmp(&b.0)
            .then(a.1.cmp(&b.1))
            .then(a.2.cmp(&b.2))
            .then(a.3.cmp(&b.3))
    });
    Ok(ExploreReport {
        config: cfg.clone(),
        top_k,
        trials_run: cfg.trials,
        near_equality_count,
        records: ranked.into_iter().take(top_k).map(|t| t.4.clone()).collect(),
    })
}
