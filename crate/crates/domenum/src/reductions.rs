//! Reductions between domination problems and hypergraph transversals.
//!
//! Dominating a graph is hitting its closed neighbourhoods, so minimal
//! dominating sets are exactly the minimal transversals of the closed
//! neighbourhood hypergraph (open neighbourhoods for total domination). In
//! the other direction, the incidence constructions turn a hypergraph into a
//! graph whose minimal dominating sets recover the minimal transversals: the
//! split incidence exactly, the co-bipartite incidence up to a small,
//! recognisable set of extra pairs that `filter_bdom_to_transversals` strips.

use std::ops::{ControlFlow, Range};

use crate::classify::SplitPartition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::set::VertexSet;
use crate::stream::VertexSetStream;

/// Who is who inside an incidence graph. The layout is deterministic:
/// ground copies keep their hypergraph ids `0..|V|`, edge `i` becomes vertex
/// `|V| + i`, and the apex (co-bipartite construction only) comes last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceLabels {
    ground: usize,
    edges: usize,
    has_apex: bool,
}

/// Role of a vertex of an incidence graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexRole {
    Ground(usize),
    EdgeCopy(usize),
    Apex,
}

impl IncidenceLabels {
    pub fn ground_count(&self) -> usize {
        self.ground
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn ground_range(&self) -> Range<usize> {
        0..self.ground
    }

    /// Vertex standing for hyperedge `i`.
    pub fn edge_vertex(&self, i: usize) -> usize {
        assert!(i < self.edges, "no hyperedge {i}");
        self.ground + i
    }

    pub fn apex(&self) -> Option<usize> {
        self.has_apex.then(|| self.ground + self.edges)
    }

    pub fn total_vertices(&self) -> usize {
        self.ground + self.edges + usize::from(self.has_apex)
    }

    pub fn role(&self, v: usize) -> VertexRole {
        if v < self.ground {
            VertexRole::Ground(v)
        } else if v < self.ground + self.edges {
            VertexRole::EdgeCopy(v - self.ground)
        } else if Some(v) == self.apex() {
            VertexRole::Apex
        } else {
            panic!("vertex {v} outside the incidence layout")
        }
    }
}

/// N(G): one hyperedge N[x] per vertex, in vertex order.
pub fn closed_neighbourhood_hypergraph(g: &Graph) -> Hypergraph {
    let edges = (0..g.n())
        .map(|v| g.closed_neighbourhood(v).unwrap())
        .collect();
    Hypergraph::new(g.n(), edges).expect("closed neighbourhoods contain their vertex")
}

/// N_o(G): one hyperedge N(x) per vertex. An isolated vertex would give an
/// empty edge — that graph has no total dominating set, and this refuses it.
pub fn open_neighbourhood_hypergraph(g: &Graph) -> Result<Hypergraph> {
    let mut edges = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        if g.degree(v) == 0 {
            return Err(Error::NoTotalDominatingSet { vertex: v });
        }
        edges.push(VertexSet::from_sorted(g.neighbours(v).to_vec(), g.n())?);
    }
    Hypergraph::new(g.n(), edges)
}

fn incidence_edges(h: &Hypergraph, labels: &IncidenceLabels) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for (i, e) in h.edges().iter().enumerate() {
        let ye = labels.edge_vertex(i);
        for x in e.iter() {
            edges.push((x, ye));
        }
    }
    edges
}

fn clique_edges(members: impl Iterator<Item = usize> + Clone) -> Vec<(usize, usize)> {
    let members: Vec<usize> = members.collect();
    let mut edges = Vec::new();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            edges.push((u, v));
        }
    }
    edges
}

/// I(H), the bipartite incidence graph: ground copies on one side, one
/// vertex y_e per hyperedge on the other, x adjacent to y_e iff x ∈ e.
pub fn bipartite_incidence(h: &Hypergraph) -> (Graph, IncidenceLabels) {
    let labels = IncidenceLabels {
        ground: h.ground_size(),
        edges: h.edge_count(),
        has_apex: false,
    };
    let g = Graph::from_edges(labels.total_vertices(), &incidence_edges(h, &labels))
        .expect("incidence layout ids are in range");
    (g, labels)
}

/// I'(H): the bipartite incidence plus a clique on the ground copies —
/// a split graph with the edge copies independent.
pub fn split_incidence(h: &Hypergraph) -> (Graph, IncidenceLabels) {
    let labels = IncidenceLabels {
        ground: h.ground_size(),
        edges: h.edge_count(),
        has_apex: false,
    };
    let mut edges = incidence_edges(h, &labels);
    edges.extend(clique_edges(labels.ground_range()));
    let g = Graph::from_edges(labels.total_vertices(), &edges)
        .expect("incidence layout ids are in range");
    (g, labels)
}

/// B(H): incidence plus cliques on both sides plus an apex adjacent to
/// exactly the ground copies. Co-bipartite. Needs at least one non-empty
/// hyperedge, otherwise the minimal dominating sets degenerate.
pub fn cobipartite_incidence(h: &Hypergraph) -> Result<(Graph, IncidenceLabels)> {
    if h.edges().iter().all(|e| e.is_empty()) {
        return Err(Error::DegenerateHypergraph);
    }
    let labels = IncidenceLabels {
        ground: h.ground_size(),
        edges: h.edge_count(),
        has_apex: true,
    };
    let apex = labels.apex().unwrap();
    let mut edges = incidence_edges(h, &labels);
    edges.extend(clique_edges(labels.ground_range()));
    edges.extend(clique_edges(
        (0..labels.edge_count()).map(|i| labels.edge_vertex(i)),
    ));
    edges.extend(labels.ground_range().map(|x| (x, apex)));
    let g = Graph::from_edges(labels.total_vertices(), &edges)
        .expect("incidence layout ids are in range");
    Ok((g, labels))
}

/// Read a split graph back as a hypergraph: ground set the clique side
/// (relabelled to 0..|C| in ascending id order), one edge N(s) per
/// independent vertex s, in ascending order of s. An isolated independent
/// vertex yields an empty edge, recorded degenerately — it means no
/// connected dominating set exists on the split side.
pub fn split_graph_to_hypergraph(g: &Graph, p: &SplitPartition) -> Result<Hypergraph> {
    p.validate_for(g)?;
    let clique = p.clique().members();
    let mut to_ground = vec![usize::MAX; g.n()];
    for (i, &c) in clique.iter().enumerate() {
        to_ground[c] = i;
    }
    let mut edges = Vec::with_capacity(p.independent().len());
    for s in p.independent().iter() {
        let members: Vec<usize> = g.neighbours(s).iter().map(|&c| to_ground[c]).collect();
        edges.push(VertexSet::from_members(members, clique.len())?);
    }
    Hypergraph::new_allow_empty(clique.len(), edges)
}

/// Strip the pair-shaped minimal dominating sets of B(H) and pass the rest
/// through as minimal transversals of H (same ids, ground universe).
///
/// Every incoming set must be a subset of the ground copies or a pair
/// {x, y_e} with x a ground copy or the apex; anything else means the input
/// was not the dominating-set family of B(H) and is reported as a contract
/// violation. Returns how many pairs were dropped — at most
/// (|V(H)|+1)·|E(H)|.
pub fn filter_bdom_to_transversals(
    h: &Hypergraph,
    dsets: impl IntoIterator<Item = VertexSet>,
    sink: &mut VertexSetStream,
) -> Result<usize> {
    let labels = IncidenceLabels {
        ground: h.ground_size(),
        edges: h.edge_count(),
        has_apex: true,
    };
    let expected = labels.total_vertices();
    let mut dropped = 0usize;
    for d in dsets {
        if d.universe() != expected {
            return Err(Error::UniverseMismatch {
                got: d.universe(),
                expected,
            });
        }
        if d.members().iter().all(|&v| v < labels.ground_count()) {
            let t = d.with_universe(h.ground_size())?;
            sink.tick(t.len() as u64 + 1);
            if let ControlFlow::Break(()) = sink.emit(&t) {
                return Ok(dropped);
            }
            continue;
        }
        let is_pair = d.len() == 2 && {
            let (a, b) = (d.members()[0], d.members()[1]);
            let edge_copies = d
                .members()
                .iter()
                .filter(|&&v| matches!(labels.role(v), VertexRole::EdgeCopy(_)));
            edge_copies.count() == 1
                && matches!(
                    (labels.role(a), labels.role(b)),
                    (VertexRole::Ground(_), VertexRole::EdgeCopy(_))
                        | (VertexRole::EdgeCopy(_), VertexRole::Apex)
                )
        };
        if !is_pair {
            return Err(Error::ContractViolation(format!(
                "{d:?} is neither inside the ground copies nor a {{x, y_e}} pair"
            )));
        }
        dropped += 1;
    }
    Ok(dropped)
}
