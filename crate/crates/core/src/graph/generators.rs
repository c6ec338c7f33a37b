use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, GraphError};

fn invalid(msg: impl Into<String>) -> GraphError {
    GraphError::InvalidParameter(msg.into())
}

pub fn empty(n: usize) -> Result<Graph, GraphError> {
    Graph::new(n)
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    Graph::from_edges(n, (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))))
}

/// `K_n` with the edge `{0, 1}` removed.
pub fn complete_minus_edge(n: usize) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(invalid(format!("complete_minus_edge needs n >= 2, got {n}")));
    }
    Graph::from_edges(
        n,
        (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .filter(|&e| e != (0, 1)),
    )
}

pub fn path(n: usize) -> Result<Graph, GraphError> {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(invalid(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// Star `K_{1,k}` with center 0.
pub fn star(k: usize) -> Result<Graph, GraphError> {
    Graph::from_edges(k + 1, (1..=k).map(|v| (0, v)))
}

/// Wheel `W_{1,n}`: the cycle on `0..n` plus hub `n` joined to every cycle vertex.
pub fn wheel(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(invalid(format!("wheel needs a cycle of length >= 3, got {n}")));
    }
    let mut g = cycle(n)?.with_extra_vertex();
    for v in 0..n {
        g.add_edge(v, n)?;
    }
    Ok(g)
}

/// Complete multipartite graph with consecutive parts of the given sizes.
pub fn complete_multipartite(part_sizes: &[usize]) -> Result<Graph, GraphError> {
    if part_sizes.is_empty() || part_sizes.contains(&0) {
        return Err(invalid("complete_multipartite needs at least one part, all non-empty"));
    }
    let part_of: Vec<usize> = part_sizes
        .iter()
        .enumerate()
        .flat_map(|(p, &s)| std::iter::repeat_n(p, s))
        .collect();
    let n = part_of.len();
    Graph::from_edges(
        n,
        (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .filter(|&(u, v)| part_of[u] != part_of[v]),
    )
}

/// Petersen graph: outer 5-cycle 0..5, inner pentagram 5..10, spokes i -- i+5.
pub fn petersen() -> Graph {
    let edges = (0..5).flat_map(|i| [(i, (i + 1) % 5), (5 + i, 5 + (i + 2) % 5), (i, i + 5)]);
    Graph::from_edges(10, edges).expect("static edge list")
}

/// Erdos-Renyi `G(n, p)`.
///
/// Each pair `{i, j}` (`i < j`) draws from its own ChaCha8 stream keyed by
/// `seed`, so the outcome for a pair does not depend on `n` or on evaluation
/// order.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph, GraphError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(invalid(format!("gnp needs 0 <= p <= 1, got {p}")));
    }
    let mut g = Graph::new(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for j in 1..n {
        for i in 0..j {
            rng.set_stream(((i as u64) << 32) | j as u64);
            rng.set_word_pos(0);
            if rng.gen::<f64>() < p {
                g.add_edge(i, j)?;
            }
        }
    }
    Ok(g)
}

impl Graph {
    fn with_extra_vertex(mut self) -> Graph {
        self.neighbors.push(Vec::new());
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_graphs() {
        assert_eq!(complete(3).unwrap().edge_count(), 3);
        assert_eq!(wheel(3).unwrap(), complete(4).unwrap());
        let diamond = complete_minus_edge(4).unwrap();
        assert_eq!(diamond.edge_count(), 5);
        assert!(!diamond.has_edge(0, 1));

        let w = wheel(6).unwrap();
        assert_eq!(w.n(), 7);
        assert_eq!(w.degree(6), 6);
        assert_eq!(w.edge_count(), 12);

        let p = petersen();
        assert_eq!(p.edge_count(), 15);
        assert_eq!(p.regular_degree(), Some(3));

        let k233 = complete_multipartite(&[2, 3, 3]).unwrap();
        assert_eq!(k233.edge_count(), 2 * 3 + 2 * 3 + 3 * 3);
    }

    #[test]
    fn parameter_errors() {
        assert!(cycle(2).is_err());
        assert!(wheel(2).is_err());
        assert!(complete(0).is_err());
        assert!(complete_minus_edge(1).is_err());
        assert!(complete_multipartite(&[2, 0]).is_err());
        assert!(complete_multipartite(&[]).is_err());
        assert!(gnp(5, 1.5, 0).is_err());
        assert!(gnp(5, -0.1, 0).is_err());
    }

    #[test]
    fn gnp_is_deterministic_and_extreme_p_work() {
        assert_eq!(gnp(20, 0.3, 7).unwrap(), gnp(20, 0.3, 7).unwrap());
        assert_ne!(gnp(20, 0.3, 7).unwrap(), gnp(20, 0.3, 8).unwrap());
        assert_eq!(gnp(9, 1.0, 3).unwrap(), complete(9).unwrap());
        assert!(gnp(9, 0.0, 3).unwrap().is_edgeless());
    }

    #[test]
    fn gnp_pairs_do_not_depend_on_n() {
        let small = gnp(8, 0.5, 11).unwrap();
        let large = gnp(15, 0.5, 11).unwrap();
        for (u, v) in small.edges() {
            assert!(large.has_edge(u, v));
        }
        for (u, v) in large.edges().filter(|&(_, v)| v < 8) {
            assert!(small.has_edge(u, v));
        }
    }
}
