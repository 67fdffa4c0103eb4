//! Seeded random instances for tests, examples and benchmarks.
//!
//! Everything takes the RNG by argument so callers control determinism;
//! the test suites pin seeds and the CLI has no randomness at all.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::classify::contains_induced_p6;
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::set::VertexSet;

/// G(n, p).
pub fn gnp(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("generated pairs are loop-free and in range")
}

/// G(n, p) forced connected: a random increasing tree first, G(n, p) on top.
pub fn connected_gnp(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = gnp(rng, n, p);
    let mut tree = Vec::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        if !g.has_edge(u, v) {
            tree.push((u, v));
        }
    }
    if !tree.is_empty() {
        g = g.with_added_edges(&tree).expect("tree edges are fresh");
    }
    debug_assert!(g.is_connected());
    g
}

/// G(n, p) with isolated vertices patched away (each one gets a random
/// neighbour), so open neighbourhoods are all non-empty. Needs n ≥ 2.
pub fn gnp_min_degree_one(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    assert!(n >= 2, "cannot avoid isolated vertices with n < 2");
    let mut g = gnp(rng, n, p);
    let mut patches = Vec::new();
    for v in 0..n {
        if g.degree(v) == 0 {
            let mut u = rng.gen_range(0..n - 1);
            if u >= v {
                u += 1;
            }
            patches.push((u.min(v), u.max(v)));
        }
    }
    if !patches.is_empty() {
        patches.sort_unstable();
        patches.dedup();
        g = g
            .with_added_edges(&patches)
            .expect("patched vertices were isolated");
    }
    g
}

/// A split graph on `clique + stable` vertices: a clique, an independent set,
/// each cross pair an edge with probability `p`, labels shuffled.
pub fn split_graph(rng: &mut impl Rng, clique: usize, stable: usize, p: f64) -> Graph {
    let n = clique + stable;
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(rng);
    let mut edges = Vec::new();
    for i in 0..clique {
        for j in i + 1..clique {
            edges.push((label[i], label[j]));
        }
    }
    for i in 0..clique {
        for j in clique..n {
            if rng.gen_bool(p) {
                edges.push((label[i], label[j]));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("labels are a permutation")
}

/// A split graph with random side sizes up to `max_n` vertices in total.
pub fn random_split_graph(rng: &mut impl Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(0..=max_n);
    let clique = rng.gen_range(0..=n);
    let p = rng.gen_range(0.2..=0.9);
    split_graph(rng, clique, n - clique, p)
}

/// `edge_count` random hyperedges over `0..ground`, sizes 1..=`max_edge`.
/// Repeats and nested edges are allowed; minimize separately if unwanted.
pub fn random_hypergraph(
    rng: &mut impl Rng,
    ground: usize,
    edge_count: usize,
    max_edge: usize,
) -> Hypergraph {
    assert!(ground > 0 && max_edge > 0, "hyperedges must be non-empty");
    let max_edge = max_edge.min(ground);
    let mut pool: Vec<usize> = (0..ground).collect();
    let edges = (0..edge_count)
        .map(|_| {
            let k = rng.gen_range(1..=max_edge);
            pool.shuffle(rng);
            VertexSet::from_members(pool[..k].iter().copied(), ground)
                .expect("pool members are in range")
        })
        .collect();
    Hypergraph::new(ground, edges).expect("edges are non-empty")
}

/// A simple hypergraph (an antichain covering its ground set): random edges,
/// minimized, with a singleton patched in for any vertex left uncovered.
pub fn random_simple_hypergraph(
    rng: &mut impl Rng,
    ground: usize,
    edge_count: usize,
    max_edge: usize,
) -> Hypergraph {
    let h = random_hypergraph(rng, ground, edge_count, max_edge).minimize();
    let mut covered = vec![false; ground];
    for e in h.edges() {
        for x in e.iter() {
            covered[x] = true;
        }
    }
    if covered.iter().all(|&c| c) {
        return h;
    }
    let mut edges = h.edges().to_vec();
    for (v, seen) in covered.iter().enumerate() {
        if !seen {
            edges.push(VertexSet::singleton(v, ground).unwrap());
        }
    }
    let patched = Hypergraph::new(ground, edges)
        .expect("patched edges are singletons")
        .minimize();
    debug_assert!(patched.is_simple());
    patched
}

/// A random chordal graph built back-to-front along a perfect elimination
/// ordering: vertex i attaches to a random subset of some previously created
/// clique, so every vertex is simplicial at its own birth.
pub fn random_chordal(rng: &mut impl Rng, n: usize, max_clique: usize) -> Graph {
    assert!(
        max_clique >= 2,
        "cliques below size 2 leave nothing to attach to"
    );
    let mut cliques: Vec<Vec<usize>> = vec![];
    let mut edges = Vec::new();
    for v in 0..n {
        let mut base: Vec<usize> = match cliques.choose(rng) {
            Some(c) => {
                let mut c = c.clone();
                c.shuffle(rng);
                let k = rng.gen_range(1..=c.len().min(max_clique - 1));
                c.truncate(k);
                c
            }
            None => vec![],
        };
        for &u in &base {
            edges.push((u, v));
        }
        base.push(v);
        cliques.push(base);
    }
    Graph::from_edges(n, &edges).expect("attachment edges are loop-free")
}

/// A P6-free chordal graph: rejection-sampled from `random_chordal`, falling
/// back to a split graph (always P6-free and chordal — an induced P6 would
/// contain an induced 2K2) if rejection keeps failing.
pub fn random_p6_free_chordal(rng: &mut impl Rng, n: usize) -> Graph {
    for _ in 0..40 {
        let g = random_chordal(rng, n, 4.max(n / 3));
        if !contains_induced_p6(&g) {
            return g;
        }
    }
    let clique = n.div_ceil(2);
    split_graph(rng, clique, n - clique, 0.5)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{is_chordal, is_split};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn same_seed_same_graph() {
        let a = gnp(&mut ChaCha8Rng::seed_from_u64(5), 12, 0.4);
        let b = gnp(&mut ChaCha8Rng::seed_from_u64(5), 12, 0.4);
        assert_eq!(a.edges().collect::<Vec<_>>(), b.edges().collect::<Vec<_>>());
    }

    #[test]
    fn gnp_extremes() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert_eq!(gnp(&mut rng, 6, 0.0).m(), 0);
        assert_eq!(gnp(&mut rng, 6, 1.0).m(), 15);
        assert_eq!(gnp(&mut rng, 0, 0.5).n(), 0);
    }

    #[test]
    fn connected_gnp_is_connected() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in [1, 2, 7, 20] {
            assert!(connected_gnp(&mut rng, n, 0.05).is_connected());
        }
    }

    #[test]
    fn min_degree_one_has_no_isolated_vertex() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..20 {
            let g = gnp_min_degree_one(&mut rng, 9, 0.05);
            assert!((0..g.n()).all(|v| g.degree(v) >= 1));
        }
    }

    #[test]
    fn split_graphs_really_are_split() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..30 {
            assert!(is_split(&random_split_graph(&mut rng, 15)));
        }
        assert!(is_split(&split_graph(&mut rng, 0, 4, 0.5)));
        assert!(is_split(&split_graph(&mut rng, 4, 0, 0.5)));
    }

    #[test]
    fn simple_hypergraphs_really_are_simple() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..25 {
            let h = random_simple_hypergraph(&mut rng, 8, 5, 4);
            assert!(h.is_simple(), "{h:?}");
        }
        // zero requested edges: coverage patches in all singletons
        let h = random_simple_hypergraph(&mut rng, 3, 0, 2);
        assert_eq!(h.edge_count(), 3);
        assert!(h.is_simple());
    }

    #[test]
    fn chordal_generator_output_is_chordal() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for n in [0, 1, 2, 10, 18] {
            assert!(is_chordal(&random_chordal(&mut rng, n, 5)));
        }
    }

    #[test]
    fn p6_free_chordal_generator_keeps_both_promises() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in [0, 3, 9, 14] {
            let g = random_p6_free_chordal(&mut rng, n);
            assert!(is_chordal(&g));
            assert!(!contains_induced_p6(&g));
        }
    }
}
