use crate::error::{Error, Result};
use crate::set::VertexSet;

/// A hypergraph: a ground set `0..ground_size` and a list of hyperedges.
///
/// The edge list keeps its given order — edge identity matters for the
/// incidence constructions, where edge `i` becomes a concrete vertex.
/// Duplicate edges are legal. Isolated ground vertices (in no edge) are legal
/// too; they never enter any minimal transversal. Empty hyperedges are
/// rejected unless the degenerate constructor is used explicitly, and every
/// operation that needs non-empty edges checks again and reports.
#[derive(Clone, PartialEq, Eq)]
pub struct Hypergraph {
    ground: usize,
    edges: Vec<VertexSet>,
}

/// Verdict of the simplicity check, naming the offending edge or vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Simplicity {
    Simple,
    /// Edge `outer` contains the distinct edge `inner` (indices into the edge
    /// list), so the edges do not form an antichain.
    NotAntichain {
        inner: usize,
        outer: usize,
    },
    /// Ground vertex in no edge.
    Uncovered {
        vertex: usize,
    },
}

impl Hypergraph {
    pub fn new(ground: usize, edges: Vec<VertexSet>) -> Result<Hypergraph> {
        for (i, e) in edges.iter().enumerate() {
            if e.is_empty() {
                return Err(Error::EmptyHyperedge { index: i });
            }
        }
        Hypergraph::new_allow_empty(ground, edges)
    }

    /// Degenerate constructor: empty hyperedges allowed. A hypergraph with an
    /// empty edge has no transversal at all, and the operations that care
    /// report that condition instead of guessing.
    pub fn new_allow_empty(ground: usize, edges: Vec<VertexSet>) -> Result<Hypergraph> {
        for e in &edges {
            if e.universe() != ground {
                return Err(Error::UniverseMismatch {
                    got: e.universe(),
                    expected: ground,
                });
            }
        }
        Ok(Hypergraph { ground, edges })
    }

    pub fn ground_size(&self) -> usize {
        self.ground
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Index of the first empty hyperedge, if any.
    pub fn empty_edge(&self) -> Option<usize> {
        self.edges.iter().position(|e| e.is_empty())
    }

    /// Inclusion-minimal edges, in first-seen order. An edge survives iff no
    /// distinct edge is strictly contained in it and no earlier copy equals
    /// it. Minimal transversals are blind to the dropped edges.
    pub fn minimize(&self) -> Hypergraph {
        let mut kept: Vec<VertexSet> = Vec::new();
        'outer: for (i, e) in self.edges.iter().enumerate() {
            for (j, f) in self.edges.iter().enumerate() {
                if i == j {
                    continue;
                }
                let strict = f.is_subset_of(e) && f != e;
                let earlier_copy = j < i && f == e;
                if strict || earlier_copy {
                    continue 'outer;
                }
            }
            kept.push(e.clone());
        }
        Hypergraph {
            ground: self.ground,
            edges: kept,
        }
    }

    /// A hypergraph is simple when the edges form an antichain and every
    /// ground vertex lies in some edge.
    pub fn simplicity(&self) -> Simplicity {
        for (i, e) in self.edges.iter().enumerate() {
            for (j, f) in self.edges.iter().enumerate() {
                if i == j {
                    continue;
                }
                // an equal pair offends in both directions; report it once,
                // with the earlier edge as the contained one
                if e.is_subset_of(f) && (e != f || i < j) {
                    return Simplicity::NotAntichain { inner: i, outer: j };
                }
            }
        }
        let mut covered = vec![false; self.ground];
        for e in &self.edges {
            for v in e.iter() {
                covered[v] = true;
            }
        }
        if let Some(v) = covered.iter().position(|&c| !c) {
            return Simplicity::Uncovered { vertex: v };
        }
        Simplicity::Simple
    }

    pub fn is_simple(&self) -> bool {
        self.simplicity() == Simplicity::Simple
    }

    /// Does `t` meet every hyperedge? Errors when an empty hyperedge makes
    /// the question moot (no transversal exists at all).
    pub fn is_transversal(&self, t: &VertexSet) -> Result<bool> {
        if t.universe() != self.ground {
            return Err(Error::UniverseMismatch {
                got: t.universe(),
                expected: self.ground,
            });
        }
        if let Some(index) = self.empty_edge() {
            return Err(Error::NoTransversal { index });
        }
        Ok(self.edges.iter().all(|e| e.intersects(t)))
    }

    /// Transversal whose every one-element deletion misses some edge.
    pub fn is_minimal_transversal(&self, t: &VertexSet) -> Result<bool> {
        if !self.is_transversal(t)? {
            return Ok(false);
        }
        for x in t.iter() {
            let without = VertexSet::from_members(t.iter().filter(|&v| v != x), self.ground)?;
            if self.edges.iter().all(|e| e.intersects(&without)) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl std::fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Hypergraph(ground={}; ", self.ground)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e:?}")?;
        }
        write!(f, ")")
    }
}
