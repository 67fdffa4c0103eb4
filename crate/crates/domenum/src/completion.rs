//! Domination-preserving completion.
//!
//! A vertex is *irredundant* when its closed neighbourhood is minimal under
//! inclusion among all closed neighbourhoods (with exactly one representative
//! kept per class of true twins). Completing a graph adds a clique on the
//! redundant vertices. Minimal dominating sets are unchanged by the added
//! edges, and the completion of a P6-free chordal graph is a split graph —
//! which is what lets the split enumerator run on that wider class.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// Partition of the vertices into irredundant and redundant, plus for each
/// vertex the chosen irredundant representative whose closed neighbourhood is
/// contained in its own.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RedundancyLabeling {
    pub irredundant: VertexSet,
    pub redundant: VertexSet,
    pub twin_representative: Vec<usize>,
}

/// Label every vertex. `x` is irredundant iff no `y` has N[y] ⊊ N[x] and `x`
/// is the smallest id in its twin class (N[y] = N[x] ⇒ y ≥ x). Distinct
/// irredundant vertices therefore never have nested or equal closed
/// neighbourhoods.
pub fn classify_redundancy(g: &Graph) -> RedundancyLabeling {
    let n = g.n();
    let closed: Vec<VertexSet> = (0..n).map(|v| g.closed_neighbourhood(v).unwrap()).collect();
    let mut irredundant = Vec::new();
    let mut redundant = Vec::new();
    for x in 0..n {
        let dominated = (0..n).any(|y| {
            y != x && closed[y].is_subset_of(&closed[x]) && (closed[y] != closed[x] || y < x)
        });
        if dominated {
            redundant.push(x);
        } else {
            irredundant.push(x);
        }
    }
    let ir = VertexSet::from_sorted(irredundant, n).unwrap();
    let twin_representative = (0..n)
        .map(|x| {
            if ir.contains(x) {
                x
            } else {
                ir.iter()
                    .find(|&y| closed[y].is_subset_of(&closed[x]))
                    .expect("every redundant vertex sits above some irredundant one")
            }
        })
        .collect();
    RedundancyLabeling {
        irredundant: ir,
        redundant: VertexSet::from_sorted(redundant, n).unwrap(),
        twin_representative,
    }
}

/// The completion: the input graph plus a clique on its redundant vertices.
/// Minimal dominating sets are preserved exactly.
pub fn completion_graph(g: &Graph) -> Graph {
    let labeling = classify_redundancy(g);
    let rn = labeling.redundant.members();
    let mut extra = Vec::new();
    for (i, &u) in rn.iter().enumerate() {
        for &v in &rn[i + 1..] {
            extra.push((u, v));
        }
    }
    g.with_added_edges(&extra)
        .expect("redundant side is loop-free")
}

/// Does adding the non-edge {u, v} change the minimal dominating sets?
/// Decided exactly, without enumerating a single dominating set: the minimal
/// dominating sets are the minimal transversals of the inclusion-minimal
/// closed neighbourhoods, and dualization is injective on antichains, so the
/// family moves iff that minimal family moves. An edge between two redundant
/// vertices never moves it — which is why the completion is safe. An edge
/// touching an irredundant vertex almost always does; the one escape is a
/// twin that keeps the displaced neighbourhood alive (see the regression
/// test below for such a graph).
pub fn check_completion_optimality(g: &Graph, u: usize, v: usize) -> Result<bool> {
    let n = g.n();
    for x in [u, v] {
        if x >= n {
            return Err(Error::InvalidVertex {
                vertex: x,
                bound: n,
            });
        }
    }
    if u == v {
        return Err(Error::LoopEdge { vertex: u });
    }
    if g.has_edge(u, v) {
        return Err(Error::EdgeExists { u, v });
    }
    let with = g.with_added_edges(&[(u, v)])?;
    Ok(minimal_neighbourhood_family(g) != minimal_neighbourhood_family(&with))
}

/// Min(N(G)) in canonical form: inclusion-minimal closed neighbourhoods,
/// deduplicated and sorted.
fn minimal_neighbourhood_family(g: &Graph) -> Vec<VertexSet> {
    let minimized = crate::reductions::closed_neighbourhood_hypergraph(g).minimize();
    let mut edges = minimized.edges().to_vec();
    edges.sort();
    edges
}
