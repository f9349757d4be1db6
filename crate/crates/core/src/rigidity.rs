//! Vertex connectivity and randomized generic rigidity of graphs.

use std::collections::VecDeque;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{rank_over, FieldSpec, Matrix};

pub const DEFAULT_TRIALS: usize = 3;

/// Maximum number of internally disjoint `s`–`t` paths, stopping early once
/// `cap` is reached. `s` and `t` must be distinct and non-adjacent.
fn disjoint_paths(adj: &[Vec<usize>], s: usize, t: usize, cap: usize) -> usize {
    // Node v splits into v_in = 2v and v_out = 2v + 1 joined by a unit arc;
    // graph edges become arcs u_out -> v_in of unbounded capacity.
    let n = adj.len();
    let big = n as i32 + 1;
    let mut cap_m = vec![vec![0i32; 2 * n]; 2 * n];
    let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); 2 * n];
    let mut arc = |a: usize, b: usize, c: i32, cap_m: &mut Vec<Vec<i32>>| {
        cap_m[a][b] += c;
        nbrs[a].push(b);
        nbrs[b].push(a);
    };
    for v in 0..n {
        let inner = if v == s || v == t { big } else { 1 };
        arc(2 * v, 2 * v + 1, inner, &mut cap_m);
        for &u in &adj[v] {
            arc(2 * v + 1, 2 * u, big, &mut cap_m);
        }
    }
    let (src, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    while flow < cap {
        let mut prev = vec![usize::MAX; 2 * n];
        prev[src] = src;
        let mut queue = VecDeque::from([src]);
        while let Some(a) = queue.pop_front() {
            if a == sink {
                break;
            }
            for &b in &nbrs[a] {
                if prev[b] == usize::MAX && cap_m[a][b] > 0 {
                    prev[b] = a;
                    queue.push_back(b);
                }
            }
        }
        if prev[sink] == usize::MAX {
            break;
        }
        let mut b = sink;
        while b != src {
            let a = prev[b];
            cap_m[a][b] -= 1;
            cap_m[b][a] += 1;
            b = a;
        }
        flow += 1;
    }
    flow
}

/// Vertex connectivity: the least number of nodes whose removal disconnects
/// the graph, with `K_n` at `n - 1`. Needs at least two nodes.
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    let n = g.node_count();
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "connectivity needs at least 2 nodes, got {n}"
        )));
    }
    if !g.is_connected() {
        return Ok(0);
    }
    let adj = g.adjacency();
    let mut best = n - 1;
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                best = best.min(disjoint_paths(&adj, s, t, best));
            }
        }
    }
    Ok(best)
}

/// Whether the graph is `k`-connected: at least `k + 1` nodes, and still
/// connected after removing any `k - 1` of them.
pub fn is_k_connected(g: &Graph, k: usize) -> Result<bool> {
    if g.node_count() < k + 1 {
        return Ok(false);
    }
    if k == 0 {
        return Ok(true);
    }
    Ok(vertex_connectivity(g)? >= k)
}

/// Rank of a generic framework in `d`-space: `d n - C(d+1, 2)` when
/// `n ≥ d`, else `C(n, 2)`.
pub fn rigidity_target(n: usize, d: usize) -> usize {
    if n >= d {
        d * n - d * (d + 1) / 2
    } else {
        n * n.saturating_sub(1) / 2
    }
}

/// The rigidity matrix at `placement` (row-major `n × d` coordinates): one
/// row per edge `{u, v}` holding `p(u) - p(v)` in u's block and
/// `p(v) - p(u)` in v's.
pub fn rigidity_matrix(g: &Graph, d: usize, placement: &[i64]) -> Matrix<i64> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut m = Matrix::filled(edges.len(), d * g.node_count(), 0i64);
    for (r, &(u, v)) in edges.iter().enumerate() {
        for k in 0..d {
            let diff = placement[u * d + k] - placement[v * d + k];
            m.set(r, u * d + k, diff);
            m.set(r, v * d + k, -diff);
        }
    }
    m
}

/// Per-trial ranks of the rigidity matrix at seeded random placements with
/// integer coordinates in `[-2^31, 2^31)`, computed exactly over the
/// rationals.
pub fn rigidity_ranks(g: &Graph, d: usize, trials: usize, seed: u64) -> Result<Vec<usize>> {
    if d == 0 {
        return Err(Error::InvalidArgument(
            "rigidity dimension must be at least 1".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials.max(1))
        .map(|_| {
            let placement: Vec<i64> = (0..g.node_count() * d)
                .map(|_| rng.random_range(-(1i64 << 31)..(1i64 << 31)))
                .collect();
            Ok(rank_over(
                FieldSpec::Rationals,
                &rigidity_matrix(g, d, &placement),
            )?)
        })
        .collect()
}

/// Randomized test for generic `d`-rigidity. A `true` answer is certain (a
/// placement of full rank exists); `false` means no trial reached the
/// target rank.
pub fn is_generically_d_rigid(g: &Graph, d: usize, trials: usize, seed: u64) -> Result<bool> {
    let target = rigidity_target(g.node_count(), d);
    Ok(rigidity_ranks(g, d, trials, seed)?
        .into_iter()
        .any(|r| r == target))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RigidityReport {
    pub d: usize,
    pub seed: u64,
    pub target: usize,
    pub ranks: Vec<usize>,
    pub rigid: bool,
}

pub fn rigidity_report(g: &Graph, d: usize, trials: usize, seed: u64) -> Result<RigidityReport> {
    let ranks = rigidity_ranks(g, d, trials, seed)?;
    let target = rigidity_target(g.node_count(), d);
    Ok(RigidityReport {
        d,
        seed,
        target,
        rigid: ranks.contains(&target),
        ranks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;
    use proptest::prelude::*;

    fn octahedron() -> Graph {
        Graph::new(6, (0..6).tuple_combinations().filter(|&(u, v)| v != u + 3)).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    /// Smallest number of removed nodes that disconnects the graph or
    /// leaves a single node, by trying every subset.
    fn brute_connectivity(g: &Graph) -> usize {
        let n = g.node_count();
        for k in 0..n - 1 {
            for cut in (0..n).combinations(k) {
                if !g.without_nodes(&cut).is_connected() {
                    return k;
                }
            }
        }
        n - 1
    }

    #[test]
    fn connectivity_examples() {
        assert_eq!(vertex_connectivity(&Graph::complete(5)).unwrap(), 4);
        assert_eq!(vertex_connectivity(&Graph::path(3)).unwrap(), 1);
        assert_eq!(vertex_connectivity(&octahedron()).unwrap(), 4);
        assert_eq!(vertex_connectivity(&cycle(6)).unwrap(), 2);
        assert_eq!(
            vertex_connectivity(&Graph::new(4, [(0, 1), (2, 3)]).unwrap()).unwrap(),
            0
        );
        assert!(vertex_connectivity(&Graph::complete(1)).is_err());
        assert!(is_k_connected(&Graph::complete(4), 3).unwrap());
        assert!(!is_k_connected(&Graph::complete(4), 4).unwrap());
    }

    #[test]
    fn octahedron_brute_force() {
        assert_eq!(brute_connectivity(&octahedron()), 4);
    }

    #[test]
    fn rigidity_examples() {
        let edge = Graph::complete(2);
        assert!(is_generically_d_rigid(&edge, 1, 3, 0).unwrap());
        assert!(!is_generically_d_rigid(&Graph::path(3), 2, 3, 0).unwrap());
        assert_eq!(
            rigidity_ranks(&Graph::path(3), 2, 3, 0).unwrap(),
            vec![2, 2, 2]
        );
        assert!(is_generically_d_rigid(&octahedron(), 3, 3, 7).unwrap());
        assert_eq!(rigidity_ranks(&octahedron(), 3, 1, 7).unwrap(), vec![12]);
        assert!(is_generically_d_rigid(&Graph::complete(3), 3, 1, 0).unwrap());
        assert!(!is_generically_d_rigid(&Graph::path(3), 3, 2, 0).unwrap());
        assert!(is_generically_d_rigid(&cycle(3), 2, 1, 1).unwrap());
        assert!(!is_generically_d_rigid(&cycle(4), 2, 3, 1).unwrap());
        assert!(rigidity_ranks(&edge, 0, 1, 0).is_err());
    }

    #[test]
    fn seeded_ranks_are_reproducible() {
        let g = octahedron();
        assert_eq!(
            rigidity_report(&g, 3, 3, 42).unwrap(),
            rigidity_report(&g, 3, 3, 42).unwrap()
        );
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn connectivity_matches_brute_force(n in 2usize..8, bits in any::<u32>()) {
            let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
            let edges = pairs.iter().enumerate().filter(|(i, _)| bits >> (i % 32) & 1 == 1).map(|(_, &e)| e);
            let g = Graph::new(n, edges).unwrap();
            prop_assert_eq!(vertex_connectivity(&g).unwrap(), brute_connectivity(&g));
        }

        #[test]
        fn rigid_graphs_are_connected_enough(n in 3usize..8, bits in any::<u32>(), d in 1usize..4) {
            let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
            let edges = pairs.iter().enumerate().filter(|(i, _)| bits >> (i % 32) & 1 == 1).map(|(_, &e)| e);
            let g = Graph::new(n, edges).unwrap();
            if n > d && is_generically_d_rigid(&g, d, 2, 3).unwrap() {
                prop_assert!(vertex_connectivity(&g).unwrap() >= d);
            }
        }
    }
}
