//! Generic minimal-transversal enumeration and the domination front doors
//! built on it.
//!
//! `trans_enum` is Berge's sequential method: fold the hyperedges one at a
//! time, maintaining the antichain of minimal transversals of the prefix.
//! It is correct on every input and simple to audit, but deliberately not
//! output-polynomial — intermediate antichains can outgrow the final answer,
//! and no output-polynomial algorithm for the general problem is known. The
//! split and P6-free-chordal routes exist precisely so that those classes
//! never pay this price; `dom_enum` dispatches accordingly.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use crate::classify::{contains_induced_p6, is_chordal, split_partition};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::reductions::{closed_neighbourhood_hypergraph, open_neighbourhood_hypergraph};
use crate::set::VertexSet;
use crate::split_enum::{dom_enum_p6_chordal_ordered, dominant_split, EnumerationOrder};
use crate::stream::VertexSetStream;

type Mask = Vec<u64>;

fn empty_mask(words: usize) -> Mask {
    vec![0; words]
}

fn mask_of(set: &VertexSet, words: usize) -> Mask {
    let mut m = empty_mask(words);
    for v in set.iter() {
        m[v / 64] |= 1 << (v % 64);
    }
    m
}

fn with_bit(m: &Mask, v: usize) -> Mask {
    let mut out = m.clone();
    out[v / 64] |= 1 << (v % 64);
    out
}

fn is_submask(a: &Mask, b: &Mask) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

fn intersects(a: &Mask, b: &Mask) -> bool {
    a.iter().zip(b).any(|(x, y)| x & y != 0)
}

fn mask_to_set(m: &Mask, universe: usize) -> VertexSet {
    let mut members = Vec::new();
    for (w, &word) in m.iter().enumerate() {
        let mut bits = word;
        while bits != 0 {
            members.push(w * 64 + bits.trailing_zeros() as usize);
            bits &= bits - 1;
        }
    }
    VertexSet::from_sorted(members, universe).expect("word scan is ascending")
}

/// Emit every minimal transversal of `h` exactly once, in lexicographic
/// order. Refuses hypergraphs with an empty edge (nothing can hit it).
pub fn trans_enum(h: &Hypergraph, sink: &mut VertexSetStream) -> Result<()> {
    if let Some(index) = h.empty_edge() {
        return Err(Error::NoTransversal { index });
    }
    let reduced = h.minimize();
    let words = h.ground_size().div_ceil(64);
    // antichain of minimal transversals of the edges processed so far;
    // starts at {∅}, the lone minimal transversal of no edges at all
    let mut antichain: Vec<Mask> = vec![empty_mask(words)];
    for edge in reduced.edges() {
        let edge_mask = mask_of(edge, words);
        let mut kept = Vec::new();
        let mut missed = Vec::new();
        for t in antichain {
            sink.tick(1);
            if intersects(&t, &edge_mask) {
                kept.push(t);
            } else {
                missed.push(t);
            }
        }
        // each missing transversal branches on every vertex of the edge;
        // candidates are visited in ascending mask order, which puts every
        // strict submask before its supersets, and no candidate can equal
        // or sit inside a kept set — so one sweep against the survivors
        // prunes exactly the non-minimal candidates
        let mut candidates = BTreeSet::new();
        for t in &missed {
            for v in edge.iter() {
                sink.tick(1);
                candidates.insert(with_bit(t, v));
            }
        }
        let mut next = kept;
        for c in candidates {
            let dominated = next.iter().any(|other| {
                sink.tick(1);
                is_submask(other, &c)
            });
            if !dominated {
                next.push(c);
            }
        }
        antichain = next;
    }
    let mut family: Vec<VertexSet> = antichain
        .iter()
        .map(|m| mask_to_set(m, h.ground_size()))
        .collect();
    family.sort();
    for t in family {
        sink.tick(t.len() as u64 + 1);
        if let ControlFlow::Break(()) = sink.emit(&t) {
            return Ok(());
        }
    }
    Ok(())
}

/// Emit every minimal dominating set of `g` exactly once. Dispatch: split
/// graphs go to the linear-delay enumerator, P6-free chordal graphs go
/// through their completion, and everything else falls back to minimal
/// transversals of the closed neighbourhood hypergraph. Only the first two
/// routes carry a delay guarantee; the class probes themselves are cheap
/// except the induced-P6 search, which is desk-scale.
pub fn dom_enum(g: &Graph, sink: &mut VertexSetStream) -> Result<()> {
    dom_enum_with(g, &EnumerationOrder::identity(g.n()), sink)
}

/// As [`dom_enum`], with a caller-chosen extension order for the split and
/// completion routes (the generic route has no use for it).
pub fn dom_enum_with(
    g: &Graph,
    sigma: &EnumerationOrder,
    sink: &mut VertexSetStream,
) -> Result<()> {
    if let Ok(p) = split_partition(g) {
        return dominant_split(g, &p, sigma, sink);
    }
    if is_chordal(g) && !contains_induced_p6(g) {
        return dom_enum_p6_chordal_ordered(g, sigma, sink);
    }
    trans_enum(&closed_neighbourhood_hypergraph(g).minimize(), sink)
}

/// Emit every minimal total dominating set: the minimal transversals of the
/// open neighbourhood hypergraph. An isolated vertex has an empty open
/// neighbourhood, hence no total dominating set at all.
pub fn tdom_enum(g: &Graph, sink: &mut VertexSetStream) -> Result<()> {
    trans_enum(&open_neighbourhood_hypergraph(g)?.minimize(), sink)
}

/// Split off the dominating vertices — those lying in every hyperedge.
/// Returns (residual, removed): the residual keeps the ground size but has
/// the removed vertices deleted from every edge.
///
/// Composition: tr(h) is exactly the singletons of the removed vertices
/// together with tr(residual) — where a residual edge left empty (it held
/// only dominating vertices) flags that the residual has no transversals,
/// so the singletons alone remain. Check `residual.empty_edge()` before
/// feeding the residual onward. A hypergraph with no edges has no
/// dominating vertices by convention, keeping {∅} = tr(h) intact.
pub fn strip_dominating_vertices(h: &Hypergraph) -> (Hypergraph, VertexSet) {
    let Some(first) = h.edges().first() else {
        return (h.clone(), VertexSet::empty(h.ground_size()));
    };
    let mut common = first.clone();
    for e in &h.edges()[1..] {
        common = common.intersection(e);
        if common.is_empty() {
            break;
        }
    }
    if common.is_empty() {
        return (h.clone(), common);
    }
    let edges = h.edges().iter().map(|e| e.difference(&common)).collect();
    let residual =
        Hypergraph::new_allow_empty(h.ground_size(), edges).expect("difference keeps the universe");
    (residual, common)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::graph::{complete_graph, cycle_graph, path_graph};
    use crate::hypergraph::tests::six_edge_sample;
    use crate::oracles::SubsetOracle;
    use crate::stream::collect_stream;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn vs(members: &[usize], universe: usize) -> VertexSet {
        VertexSet::from_members(members.iter().copied(), universe).unwrap()
    }

    fn hg(ground: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(ground, edges.iter().map(|e| vs(e, ground)).collect()).unwrap()
    }

    #[test]
    fn transversals_of_the_six_edge_sample() {
        let got = collect_stream(|sink| trans_enum(&six_edge_sample(), sink)).unwrap();
        assert_eq!(got, vec![vs(&[0, 3], 4), vs(&[1, 2], 4), vs(&[1, 3], 4)]);
    }

    #[test]
    fn single_edge_and_disjoint_singletons() {
        let got = collect_stream(|sink| trans_enum(&hg(3, &[&[0, 1, 2]]), sink)).unwrap();
        assert_eq!(got, vec![vs(&[0], 3), vs(&[1], 3), vs(&[2], 3)]);
        let got = collect_stream(|sink| trans_enum(&hg(2, &[&[0], &[1]]), sink)).unwrap();
        assert_eq!(got, vec![vs(&[0, 1], 2)]);
    }

    #[test]
    fn no_edges_means_the_empty_transversal() {
        let h = Hypergraph::new(3, vec![]).unwrap();
        let got = collect_stream(|sink| trans_enum(&h, sink)).unwrap();
        assert_eq!(got, vec![VertexSet::empty(3)]);
    }

    #[test]
    fn empty_edge_is_an_error_with_its_index() {
        let h = Hypergraph::new_allow_empty(3, vec![vs(&[0], 3), VertexSet::empty(3), vs(&[1], 3)])
            .unwrap();
        let mut out = Vec::new();
        let mut sink = VertexSetStream::new(&mut out);
        assert_eq!(
            trans_enum(&h, &mut sink).unwrap_err(),
            Error::NoTransversal { index: 1 }
        );
    }

    #[test]
    fn matches_oracle_on_random_hypergraphs() {
        let oracle = SubsetOracle::new();
        let mut rng = ChaCha8Rng::seed_from_u64(30);
        for round in 0..60 {
            let h = gen::random_hypergraph(&mut rng, 7, 6, 4);
            let got = collect_stream(|sink| trans_enum(&h, sink)).unwrap();
            assert_eq!(
                got,
                oracle.minimal_transversals(&h).unwrap(),
                "round {round}: {h:?}"
            );
            for t in &got {
                assert!(h.is_minimal_transversal(t).unwrap());
            }
        }
    }

    #[test]
    fn double_dualization_returns_simple_inputs() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..25 {
            let h = gen::random_simple_hypergraph(&mut rng, 7, 5, 4);
            let tr = collect_stream(|sink| trans_enum(&h, sink)).unwrap();
            let tr_h = Hypergraph::new(h.ground_size(), tr).unwrap();
            let back = collect_stream(|sink| trans_enum(&tr_h, sink)).unwrap();
            let mut original = h.edges().to_vec();
            original.sort();
            assert_eq!(back, original, "tr(tr(H)) drifted for {h:?}");
        }
    }

    #[test]
    fn dom_enum_on_frozen_families() {
        let got = collect_stream(|sink| dom_enum(&cycle_graph(4), sink)).unwrap();
        let mut sorted = got;
        sorted.sort();
        let want: Vec<VertexSet> = [
            [0usize, 1].as_slice(),
            &[0, 2],
            &[0, 3],
            &[1, 2],
            &[1, 3],
            &[2, 3],
        ]
        .iter()
        .map(|m| vs(m, 4))
        .collect();
        assert_eq!(sorted, want);
        let got = collect_stream(|sink| dom_enum(&complete_graph(6), sink)).unwrap();
        let mut sorted = got;
        sorted.sort();
        assert_eq!(sorted, (0..6).map(|v| vs(&[v], 6)).collect::<Vec<_>>());
    }

    #[test]
    fn dispatch_routes_agree_on_their_overlaps() {
        let oracle = SubsetOracle::new();
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        // split graphs: direct route vs forced-generic route
        for _ in 0..15 {
            let g = gen::random_split_graph(&mut rng, 8);
            let mut direct = collect_stream(|sink| dom_enum(&g, sink)).unwrap();
            let mut generic = collect_stream(|sink| {
                trans_enum(&closed_neighbourhood_hypergraph(&g).minimize(), sink)
            })
            .unwrap();
            direct.sort();
            generic.sort();
            assert_eq!(direct, generic, "split overlap failed on {g:?}");
        }
        // P6-free chordal non-split graphs: completion route vs generic.
        // Two pinned instances (P5; two triangles joined by an edge — its
        // only six vertices carry seven edges, so no induced P6 fits), then
        // random ones.
        let two_triangles =
            Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)])
                .unwrap();
        let mut instances = vec![path_graph(5), two_triangles];
        let mut seen = 0;
        for _ in 0..60 {
            let g = gen::random_p6_free_chordal(&mut rng, 9);
            if split_partition(&g).is_err() {
                seen += 1;
                instances.push(g);
            }
        }
        assert!(
            seen >= 5,
            "generator produced too few non-split instances: {seen}"
        );
        for g in &instances {
            assert!(split_partition(g).is_err());
            assert!(is_chordal(g) && !contains_induced_p6(g));
            let mut via_completion = collect_stream(|sink| dom_enum(g, sink)).unwrap();
            let mut generic = collect_stream(|sink| {
                trans_enum(&closed_neighbourhood_hypergraph(g).minimize(), sink)
            })
            .unwrap();
            via_completion.sort();
            generic.sort();
            assert_eq!(via_completion, generic);
            assert_eq!(via_completion, oracle.minimal_dominating_sets(g).unwrap());
        }
    }

    #[test]
    fn dom_enum_generic_route_handles_holes_and_long_paths() {
        let oracle = SubsetOracle::new();
        for g in [cycle_graph(6), path_graph(7), cycle_graph(5)] {
            let mut got = collect_stream(|sink| dom_enum(&g, sink)).unwrap();
            got.sort();
            assert_eq!(got, oracle.minimal_dominating_sets(&g).unwrap());
        }
    }

    #[test]
    fn total_domination_front_door() {
        let got = collect_stream(|sink| tdom_enum(&complete_graph(2), sink)).unwrap();
        assert_eq!(got, vec![vs(&[0, 1], 2)]);
        let got = collect_stream(|sink| tdom_enum(&path_graph(4), sink)).unwrap();
        assert_eq!(got, vec![vs(&[1, 2], 4)]);
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let got = collect_stream(|sink| tdom_enum(&star, sink)).unwrap();
        assert_eq!(got, vec![vs(&[0, 1], 4), vs(&[0, 2], 4), vs(&[0, 3], 4)]);
        let lonely = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let mut out = Vec::new();
        let mut sink = VertexSetStream::new(&mut out);
        assert_eq!(
            tdom_enum(&lonely, &mut sink).unwrap_err(),
            Error::NoTotalDominatingSet { vertex: 2 }
        );
    }

    #[test]
    fn tdom_matches_oracle_on_random_graphs() {
        let oracle = SubsetOracle::new();
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        for _ in 0..30 {
            let g = gen::gnp_min_degree_one(&mut rng, 8, 0.3);
            let got = collect_stream(|sink| tdom_enum(&g, sink)).unwrap();
            assert_eq!(got, oracle.minimal_total_dominating_sets(&g).unwrap());
        }
    }

    #[test]
    fn strip_examples() {
        let (residual, removed) = strip_dominating_vertices(&hg(3, &[&[0, 1], &[0, 2]]));
        assert_eq!(removed, vs(&[0], 3));
        assert_eq!(residual.edges(), &[vs(&[1], 3), vs(&[2], 3)]);

        let h = six_edge_sample();
        let (residual, removed) = strip_dominating_vertices(&h);
        assert!(removed.is_empty());
        assert_eq!(residual, h);

        let all_a = hg(2, &[&[0], &[0]]);
        let (residual, removed) = strip_dominating_vertices(&all_a);
        assert_eq!(removed, vs(&[0], 2));
        assert_eq!(residual.empty_edge(), Some(0));

        let no_edges = Hypergraph::new(3, vec![]).unwrap();
        let (residual, removed) = strip_dominating_vertices(&no_edges);
        assert!(removed.is_empty());
        assert_eq!(residual.edge_count(), 0);
    }

    #[test]
    fn strip_composition_recovers_the_transversals() {
        let oracle = SubsetOracle::new();
        let mut rng = ChaCha8Rng::seed_from_u64(34);
        for _ in 0..40 {
            let h = gen::random_hypergraph(&mut rng, 6, 4, 3);
            let (residual, removed) = strip_dominating_vertices(&h);
            let mut composed: Vec<VertexSet> = removed
                .iter()
                .map(|x| VertexSet::singleton(x, h.ground_size()).unwrap())
                .collect();
            composed.extend(oracle.minimal_transversals(&residual).unwrap());
            composed.sort();
            assert_eq!(composed, oracle.minimal_transversals(&h).unwrap(), "{h:?}");
        }
    }
}
