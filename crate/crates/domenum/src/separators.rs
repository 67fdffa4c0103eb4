//! Minimal separators and minimal connected dominating sets.
//!
//! Connected domination reduces to transversals the same way plain
//! domination does: the minimal connected dominating sets of a connected
//! graph are exactly the minimal transversals of its minimal-separator
//! hypergraph. Separators are produced by the close-separator generation
//! rule and then filtered down to the inclusion-minimal ones ("minimal
//! separator" here means: contains no other separator — strictly stronger
//! than being a minimal ab-separator for some pair).

use std::collections::{BTreeSet, VecDeque};
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::oracles::SubsetOracle;
use crate::set::VertexSet;
use crate::stream::VertexSetStream;
use crate::trans_enum::trans_enum;

/// How a [`SeparatorFamily`] was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeparatorSource {
    GenerationRule,
    Oracle,
}

/// The inclusion-minimal separators of a connected graph: an antichain,
/// sorted lexicographically, tagged with the method that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatorFamily {
    separators: Vec<VertexSet>,
    source: SeparatorSource,
}

impl SeparatorFamily {
    pub fn separators(&self) -> &[VertexSet] {
        &self.separators
    }

    pub fn source(&self) -> SeparatorSource {
        self.source
    }

    pub fn len(&self) -> usize {
        self.separators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.separators.is_empty()
    }

    /// S(G) as a hypergraph over the graph's vertices.
    pub fn to_hypergraph(&self, n: usize) -> Result<Hypergraph> {
        Hypergraph::new(n, self.separators.clone())
    }

    /// Same family through the exhaustive oracle — for cross-checks.
    pub fn from_oracle(g: &Graph, oracle: &SubsetOracle) -> Result<SeparatorFamily> {
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(SeparatorFamily {
            separators: oracle.minimal_separators(g)?,
            source: SeparatorSource::Oracle,
        })
    }
}

/// Connected components of G∖removed, as sorted vertex lists.
fn components_avoiding(g: &Graph, removed: &[bool]) -> Vec<Vec<usize>> {
    let mut seen = removed.to_vec();
    let mut out = Vec::new();
    for start in 0..g.n() {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbours(u) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// The neighbourhood of a component of G∖removed — always a subset of the
/// removed vertices.
fn component_neighbourhood(g: &Graph, comp: &[usize], n: usize) -> VertexSet {
    let mut hit = vec![false; n];
    for &u in comp {
        for &w in g.neighbours(u) {
            hit[w] = true;
        }
    }
    for &u in comp {
        hit[u] = false;
    }
    let members: Vec<usize> = (0..n).filter(|&v| hit[v]).collect();
    VertexSet::from_sorted(members, n).expect("scan order is ascending")
}

/// The two-full-components certificate: `s` is a minimal ab-separator for
/// some pair iff G∖s has at least two components in which every vertex of
/// `s` has a neighbour.
pub fn is_minimal_ab_separator(g: &Graph, s: &VertexSet) -> Result<bool> {
    if s.universe() != g.n() {
        return Err(Error::UniverseMismatch {
            got: s.universe(),
            expected: g.n(),
        });
    }
    let mut removed = vec![false; g.n()];
    for v in s.iter() {
        removed[v] = true;
    }
    let mut full = 0;
    for comp in components_avoiding(g, &removed) {
        let nb = component_neighbourhood(g, &comp, g.n());
        if s.is_subset_of(&nb) {
            full += 1;
        }
    }
    Ok(full >= 2)
}

/// All minimal ab-separators of a connected graph, over all vertex pairs,
/// in lexicographic order. Seeds are the component neighbourhoods of
/// G∖N[v] for every v; the closure rule expands a known separator S by the
/// component neighbourhoods of G∖(S ∪ N[x]) for each x ∈ S. Every produced
/// set is certified by [`is_minimal_ab_separator`].
pub fn minimal_ab_separators(g: &Graph) -> Result<Vec<VertexSet>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let mut known: BTreeSet<VertexSet> = BTreeSet::new();
    let mut queue: VecDeque<VertexSet> = VecDeque::new();
    let harvest =
        |avoid: &[bool], known: &mut BTreeSet<VertexSet>, queue: &mut VecDeque<VertexSet>| {
            for comp in components_avoiding(g, avoid) {
                let cand = component_neighbourhood(g, &comp, n);
                if known.insert(cand.clone()) {
                    assert!(
                        is_minimal_ab_separator(g, &cand).unwrap(),
                        "generation rule produced a non-separator {cand:?}"
                    );
                    queue.push_back(cand);
                }
            }
        };
    for v in 0..n {
        let mut avoid = vec![false; n];
        avoid[v] = true;
        for &w in g.neighbours(v) {
            avoid[w] = true;
        }
        harvest(&avoid, &mut known, &mut queue);
    }
    while let Some(s) = queue.pop_front() {
        for x in s.iter() {
            let mut avoid = vec![false; n];
            for v in s.iter() {
                avoid[v] = true;
            }
            avoid[x] = true;
            for &w in g.neighbours(x) {
                avoid[w] = true;
            }
            harvest(&avoid, &mut known, &mut queue);
        }
    }
    Ok(known.into_iter().collect())
}

/// The inclusion-minimal separators of a connected graph: the minimal
/// ab-separators that contain no other one.
pub fn minimal_separators(g: &Graph) -> Result<SeparatorFamily> {
    let mut by_size = minimal_ab_separators(g)?;
    by_size.sort_by_key(VertexSet::len); // stable: stays lexicographic per size
    let mut kept: Vec<VertexSet> = Vec::new();
    for s in by_size {
        if !kept.iter().any(|t| t.is_subset_of(&s)) {
            kept.push(s);
        }
    }
    kept.sort();
    Ok(SeparatorFamily {
        separators: kept,
        source: SeparatorSource::GenerationRule,
    })
}

/// Emit every minimal connected dominating set of a connected graph, in
/// lexicographic order: the minimal transversals of the minimal-separator
/// hypergraph. A complete graph has no separators at all — there the family
/// is simply all singletons (the one-vertex graph counts as complete). Note
/// the separator family is materialized first; it can be exponential.
pub fn cdom_enum(g: &Graph, sink: &mut VertexSetStream) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.is_complete() {
        for v in 0..g.n() {
            sink.tick(1);
            let singleton = VertexSet::singleton(v, g.n())?;
            if let ControlFlow::Break(()) = sink.emit(&singleton) {
                return Ok(());
            }
        }
        return Ok(());
    }
    let family = minimal_separators(g)?;
    trans_enum(&family.to_hypergraph(g.n())?, sink)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::graph::{complete_graph, cycle_graph, path_graph};
    use crate::hypergraph::tests::six_edge_sample;
    use crate::reductions::split_incidence;
    use crate::stream::collect_stream;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn vs(members: &[usize], universe: usize) -> VertexSet {
        VertexSet::from_members(members.iter().copied(), universe).unwrap()
    }

    #[test]
    fn path_and_cycle_separators() {
        assert_eq!(
            minimal_ab_separators(&path_graph(4)).unwrap(),
            vec![vs(&[1], 4), vs(&[2], 4)]
        );
        assert_eq!(
            minimal_ab_separators(&cycle_graph(4)).unwrap(),
            vec![vs(&[0, 2], 4), vs(&[1, 3], 4)]
        );
        assert!(minimal_ab_separators(&complete_graph(5))
            .unwrap()
            .is_empty());
        let p5 = minimal_separators(&path_graph(5)).unwrap();
        assert_eq!(p5.separators(), &[vs(&[1], 5), vs(&[2], 5), vs(&[3], 5)]);
        assert_eq!(p5.source(), SeparatorSource::GenerationRule);
    }

    /// 0–1–2 and 0–3–2 are two routes between 0 and 2; vertex 4 hangs off 3.
    /// {1,3} is a minimal 02-separator but strictly contains the separator
    /// {3}, so the inclusion-minimal filter must drop it.
    fn filter_witness() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (0, 3), (2, 3), (3, 4)]).unwrap()
    }

    #[test]
    fn ab_separators_are_not_always_inclusion_minimal() {
        let g = filter_witness();
        assert_eq!(
            minimal_ab_separators(&g).unwrap(),
            vec![vs(&[0, 2], 5), vs(&[1, 3], 5), vs(&[3], 5)]
        );
        assert_eq!(
            minimal_separators(&g).unwrap().separators(),
            &[vs(&[0, 2], 5), vs(&[3], 5)]
        );
    }

    #[test]
    fn two_full_components_certificate() {
        let g = filter_witness();
        assert!(is_minimal_ab_separator(&g, &vs(&[1, 3], 5)).unwrap());
        assert!(is_minimal_ab_separator(&g, &vs(&[3], 5)).unwrap());
        // {1} separates nothing; {1,3,4} separates but 4 reaches only one side
        assert!(!is_minimal_ab_separator(&g, &vs(&[1], 5)).unwrap());
        assert!(!is_minimal_ab_separator(&g, &vs(&[1, 3, 4], 5)).unwrap());
        assert!(matches!(
            is_minimal_ab_separator(&g, &vs(&[0], 3)),
            Err(Error::UniverseMismatch { .. })
        ));
    }

    #[test]
    fn disconnected_graphs_are_refused() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(minimal_ab_separators(&g).unwrap_err(), Error::Disconnected);
        assert_eq!(minimal_separators(&g).unwrap_err(), Error::Disconnected);
        let mut out = Vec::new();
        let mut sink = VertexSetStream::new(&mut out);
        assert_eq!(cdom_enum(&g, &mut sink).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn generation_rule_matches_the_oracle() {
        let oracle = SubsetOracle::new();
        let mut rng = ChaCha8Rng::seed_from_u64(40);
        for _ in 0..50 {
            let g = gen::connected_gnp(&mut rng, 8, 0.3);
            let fam = minimal_separators(&g).unwrap();
            assert_eq!(
                fam.separators(),
                SeparatorFamily::from_oracle(&g, &oracle)
                    .unwrap()
                    .separators(),
                "separator mismatch on {g:?}"
            );
            // antichain
            for (i, s) in fam.separators().iter().enumerate() {
                for (j, t) in fam.separators().iter().enumerate() {
                    assert!(i == j || !s.is_subset_of(t));
                }
            }
        }
    }

    #[test]
    fn connected_domination_families() {
        let got = collect_stream(|sink| cdom_enum(&path_graph(4), sink)).unwrap();
        assert_eq!(got, vec![vs(&[1, 2], 4)]);
        let got = collect_stream(|sink| cdom_enum(&complete_graph(3), sink)).unwrap();
        assert_eq!(got, vec![vs(&[0], 3), vs(&[1], 3), vs(&[2], 3)]);
        let got = collect_stream(|sink| cdom_enum(&Graph::new(1), sink)).unwrap();
        assert_eq!(got, vec![vs(&[0], 1)]);
        let got = collect_stream(|sink| cdom_enum(&cycle_graph(4), sink)).unwrap();
        assert_eq!(
            got,
            vec![
                vs(&[0, 1], 4),
                vs(&[0, 3], 4),
                vs(&[1, 2], 4),
                vs(&[2, 3], 4)
            ]
        );
    }

    #[test]
    fn cdom_matches_oracle_on_random_connected_graphs() {
        let oracle = SubsetOracle::new();
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..50 {
            let g = gen::connected_gnp(&mut rng, 8, 0.25);
            let got = collect_stream(|sink| cdom_enum(&g, sink)).unwrap();
            assert_eq!(
                got,
                oracle.minimal_connected_dominating_sets(&g).unwrap(),
                "CDS mismatch on {g:?}"
            );
        }
    }

    #[test]
    fn split_incidence_realizes_any_simple_hypergraph_as_separators() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..20 {
            let h = gen::random_simple_hypergraph(&mut rng, 6, 5, 4);
            if h.edge_count() < 2 {
                continue; // a single covering edge makes I'(H) complete
            }
            let (ip, labels) = split_incidence(&h);
            let fam = minimal_separators(&ip).unwrap();
            let mut got: Vec<VertexSet> = fam
                .separators()
                .iter()
                .map(|s| {
                    assert!(
                        s.members().iter().all(|&v| v < labels.ground_count()),
                        "separator {s:?} strays off the clique side"
                    );
                    s.with_universe(labels.ground_count()).unwrap()
                })
                .collect();
            got.sort();
            let mut want = h.edges().to_vec();
            want.sort();
            assert_eq!(got, want, "separators of I'(H) drifted for {h:?}");
        }
    }

    #[test]
    fn cdom_of_split_incidence_is_the_transversal_family() {
        let h = six_edge_sample();
        let (ip, labels) = split_incidence(&h);
        let got: Vec<VertexSet> = collect_stream(|sink| cdom_enum(&ip, sink))
            .unwrap()
            .into_iter()
            .map(|d| d.with_universe(labels.ground_count()).unwrap())
            .collect();
        let want = collect_stream(|sink| trans_enum(&h, sink)).unwrap();
        assert_eq!(got, want);
    }

    /// A single hyperedge covering the whole ground set makes I'(H) a
    /// complete graph: the edge copy joins every minimal connected
    /// dominating set candidate pool, and the transversal identity needs a
    /// second edge to hold. Pinned so the boundary stays visible.
    #[test]
    fn single_full_edge_is_the_degenerate_boundary() {
        let h = Hypergraph::new(2, vec![vs(&[0, 1], 2)]).unwrap();
        let (ip, _) = split_incidence(&h);
        assert!(ip.is_complete());
        let got = collect_stream(|sink| cdom_enum(&ip, sink)).unwrap();
        assert_eq!(got, vec![vs(&[0], 3), vs(&[1], 3), vs(&[2], 3)]);
        let tr = collect_stream(|sink| trans_enum(&h, sink)).unwrap();
        assert_eq!(tr.len(), 2); // one singleton fewer: no edge copy
    }
}
