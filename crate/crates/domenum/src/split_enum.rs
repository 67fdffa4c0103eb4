//! Linear-delay enumeration of minimal dominating sets on split graphs,
//! extended to P6-free chordal graphs through the completion graph.
//!
//! The driving fact: in a split graph with maximal stable side S, every
//! minimal dominating set D is determined by its clique part A = D ∩ C via
//! D = A ∪ (S ∖ N(A)), and the sets A that occur are exactly those where
//! every member keeps a private neighbour. Membership of A is checked with
//! neighbour marks over S — marks[s] = |N(s) ∩ A| — maintained incrementally
//! so that testing one candidate costs O(deg) and the gap between
//! consecutive emissions stays O(n + m) counted operations.

use std::ops::ControlFlow;

use crate::classify::{chordality, find_induced_p6, split_partition, Chordality, SplitPartition};
use crate::completion::completion_graph;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;
use crate::stream::VertexSetStream;

/// A linear ordering of the vertices; the enumerator extends its candidate
/// clique part in increasing rank, so the ordering decides emission order
/// (never the emitted family).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationOrder {
    rank_of: Vec<usize>,
    by_rank: Vec<usize>,
}

impl EnumerationOrder {
    /// Ascending vertex id — the default everywhere.
    pub fn identity(n: usize) -> EnumerationOrder {
        EnumerationOrder {
            rank_of: (0..n).collect(),
            by_rank: (0..n).collect(),
        }
    }

    /// `ranks[v]` is the position of vertex v; must be a bijection onto 0..n.
    pub fn from_ranks(ranks: Vec<usize>) -> Result<EnumerationOrder> {
        let n = ranks.len();
        let mut by_rank = vec![usize::MAX; n];
        for (v, &r) in ranks.iter().enumerate() {
            if r >= n {
                return Err(Error::ContractViolation(format!(
                    "rank {r} of vertex {v} is out of range for {n} vertices"
                )));
            }
            if by_rank[r] != usize::MAX {
                return Err(Error::ContractViolation(format!(
                    "vertices {} and {v} share rank {r}",
                    by_rank[r]
                )));
            }
            by_rank[r] = v;
        }
        Ok(EnumerationOrder {
            rank_of: ranks,
            by_rank,
        })
    }

    /// The vertices listed in visit order (first entry gets rank 0).
    pub fn from_sequence(order: Vec<usize>) -> Result<EnumerationOrder> {
        let n = order.len();
        let mut rank_of = vec![usize::MAX; n];
        for (r, &v) in order.iter().enumerate() {
            if v >= n {
                return Err(Error::InvalidVertex {
                    vertex: v,
                    bound: n,
                });
            }
            if rank_of[v] != usize::MAX {
                return Err(Error::ContractViolation(format!(
                    "vertex {v} appears at positions {} and {r}",
                    rank_of[v]
                )));
            }
            rank_of[v] = r;
        }
        Ok(EnumerationOrder {
            rank_of,
            by_rank: order,
        })
    }

    pub fn len(&self) -> usize {
        self.by_rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_rank.is_empty()
    }

    pub fn rank(&self, v: usize) -> usize {
        self.rank_of[v]
    }

    pub fn vertex_at(&self, rank: usize) -> usize {
        self.by_rank[rank]
    }
}

/// Stable-side neighbour counters for one candidate clique part A:
/// `mark(s) = |N(s) ∩ A|` for s in the stable side, 0 elsewhere. A stable
/// vertex with mark 1 is a private neighbour of its unique A-neighbour.
#[derive(Clone, Debug)]
pub struct PrivateNeighbourMarks {
    marks: Vec<u32>,
}

impl PrivateNeighbourMarks {
    /// Direct (non-incremental) computation. Panics if `a` is not a subset
    /// of the clique side of `p` over the same universe as `g`.
    pub fn compute(g: &Graph, p: &SplitPartition, a: &VertexSet) -> PrivateNeighbourMarks {
        assert_eq!(a.universe(), g.n(), "candidate set over the wrong universe");
        assert!(
            a.is_subset_of(p.clique()),
            "candidate {a:?} leaves the clique side"
        );
        let mut in_stable = vec![false; g.n()];
        for s in p.independent().iter() {
            in_stable[s] = true;
        }
        let mut marks = vec![0u32; g.n()];
        for y in a.iter() {
            for &s in g.neighbours(y) {
                if in_stable[s] {
                    marks[s] += 1;
                }
            }
        }
        PrivateNeighbourMarks { marks }
    }

    pub fn mark(&self, v: usize) -> u32 {
        self.marks[v]
    }
}

/// Does every vertex of `a` keep a private neighbour in the candidate
/// dominating set a ∪ (S ∖ N(a))? Empty and singleton parts always do — a
/// lone clique vertex is its own private neighbour. Larger parts need, for
/// each member, a stable neighbour of mark exactly 1: clique neighbours are
/// all swallowed by the rest of `a`, so only the stable side can testify.
pub fn clique_part_has_all_privates(g: &Graph, p: &SplitPartition, a: &VertexSet) -> bool {
    if a.len() <= 1 {
        return true;
    }
    let marks = PrivateNeighbourMarks::compute(g, p, a);
    // mark(s) == 1 already implies s is stable: clique entries stay 0
    a.iter()
        .all(|y| g.neighbours(y).iter().any(|&s| marks.mark(s) == 1))
}

/// Incremental state for one enumeration run. Members of A are pushed and
/// popped strictly LIFO, which is what lets `owner` survive without an undo
/// log: owner[s] is set when s's mark first rises to 1 and is valid again
/// whenever the mark returns to 1.
struct SplitState<'a> {
    g: &'a Graph,
    in_stable: Vec<bool>,
    in_a: Vec<bool>,
    /// marks[s] = |N(s) ∩ A| on the stable side
    marks: Vec<u32>,
    /// the A-member that took s from mark 0 to 1
    owner: Vec<usize>,
    /// for y ∈ A: how many s ∈ N(y) currently have mark 1
    privcount: Vec<u32>,
    /// members of A with privcount 0 — the candidate test is deficient == 0
    deficient: usize,
    committed: Vec<usize>,
}

impl<'a> SplitState<'a> {
    fn new(g: &'a Graph, p: &SplitPartition) -> SplitState<'a> {
        let mut in_stable = vec![false; g.n()];
        for s in p.independent().iter() {
            in_stable[s] = true;
        }
        SplitState {
            g,
            in_stable,
            in_a: vec![false; g.n()],
            marks: vec![0; g.n()],
            owner: vec![usize::MAX; g.n()],
            privcount: vec![0; g.n()],
            deficient: 0,
            committed: Vec::new(),
        }
    }

    fn add(&mut self, x: usize) {
        self.privcount[x] = 0;
        for &s in self.g.neighbours(x) {
            if !self.in_stable[s] {
                continue;
            }
            self.marks[s] += 1;
            match self.marks[s] {
                1 => {
                    self.owner[s] = x;
                    self.privcount[x] += 1;
                }
                2 => {
                    let y = self.owner[s];
                    self.privcount[y] -= 1;
                    if self.privcount[y] == 0 {
                        self.deficient += 1;
                    }
                }
                _ => {}
            }
        }
        if self.privcount[x] == 0 {
            self.deficient += 1;
        }
        self.in_a[x] = true;
        self.committed.push(x);
    }

    fn remove_last(&mut self, x: usize) {
        let popped = self.committed.pop();
        debug_assert_eq!(popped, Some(x), "removal must mirror the last add");
        self.in_a[x] = false;
        if self.privcount[x] == 0 {
            self.deficient -= 1;
        }
        for &s in self.g.neighbours(x) {
            if !self.in_stable[s] {
                continue;
            }
            match self.marks[s] {
                1 => self.privcount[x] -= 1,
                2 => {
                    // x was the second arrival; the original owner gets its
                    // private neighbour back
                    let y = self.owner[s];
                    if self.privcount[y] == 0 {
                        self.deficient -= 1;
                    }
                    self.privcount[y] += 1;
                }
                _ => {}
            }
            self.marks[s] -= 1;
        }
    }

    /// Would A ∪ {x} leave every member with a private neighbour? Singletons
    /// pass outright (self-private); otherwise no member may be deficient.
    fn extension_passes(&mut self, x: usize) -> bool {
        self.add(x);
        let ok = self.committed.len() == 1 || self.deficient == 0;
        self.remove_last(x);
        ok
    }

    /// The dominating set determined by the current A: A ∪ (S ∖ N(A)).
    fn current_set(&self) -> VertexSet {
        let members: Vec<usize> = (0..self.g.n())
            .filter(|&v| self.in_a[v] || (self.in_stable[v] && self.marks[v] == 0))
            .collect();
        VertexSet::from_sorted(members, self.g.n()).expect("scan order is ascending")
    }
}

fn recurse(
    state: &mut SplitState,
    clique_by_rank: &[usize],
    start: usize,
    sink: &mut VertexSetStream,
) -> ControlFlow<()> {
    sink.tick(state.g.n() as u64);
    sink.emit(&state.current_set())?;
    let mut cov = Vec::new();
    for (pos, &x) in clique_by_rank.iter().enumerate().skip(start) {
        sink.tick(1 + self_deg(state.g, x));
        if state.extension_passes(x) {
            cov.push(pos);
        }
    }
    for &pos in &cov {
        let x = clique_by_rank[pos];
        sink.tick(self_deg(state.g, x));
        state.add(x);
        let flow = recurse(state, clique_by_rank, pos + 1, sink);
        sink.tick(self_deg(state.g, x));
        state.remove_last(x);
        flow?;
    }
    ControlFlow::Continue(())
}

fn self_deg(g: &Graph, x: usize) -> u64 {
    g.degree(x) as u64
}

/// Enumerate the minimal dominating sets of a split graph with O(n + m)
/// counted operations between consecutive emissions. The first emission is
/// the stable side itself; after that, candidate clique parts grow in
/// increasing `sigma` rank, depth first. Stops early (successfully) when the
/// sink reports its limit.
pub fn dominant_split(
    g: &Graph,
    p: &SplitPartition,
    sigma: &EnumerationOrder,
    sink: &mut VertexSetStream,
) -> Result<()> {
    p.validate_for(g)?;
    if sigma.len() != g.n() {
        return Err(Error::ContractViolation(format!(
            "ordering covers {} vertices, the graph has {}",
            sigma.len(),
            g.n()
        )));
    }
    let mut clique_by_rank: Vec<usize> = p.clique().members().to_vec();
    clique_by_rank.sort_by_key(|&v| sigma.rank(v));
    let mut state = SplitState::new(g, p);
    let _ = recurse(&mut state, &clique_by_rank, 0, sink);
    Ok(())
}

/// Minimal dominating sets of a P6-free chordal graph, with the same delay
/// guarantee: the completion graph of such a graph is split and has the same
/// minimal dominating sets, so the split enumerator runs on the completion.
pub fn dom_enum_p6_chordal(g: &Graph, sink: &mut VertexSetStream) -> Result<()> {
    dom_enum_p6_chordal_ordered(g, &EnumerationOrder::identity(g.n()), sink)
}

/// As [`dom_enum_p6_chordal`], with a caller-chosen extension order.
pub fn dom_enum_p6_chordal_ordered(
    g: &Graph,
    sigma: &EnumerationOrder,
    sink: &mut VertexSetStream,
) -> Result<()> {
    if let Chordality::NotChordal { hole } = chordality(g) {
        return Err(Error::NotChordal(hole));
    }
    if let Some(path) = find_induced_p6(g) {
        return Err(Error::InducedP6(path));
    }
    let gco = completion_graph(g);
    let p = split_partition(&gco)?;
    dominant_split(&gco, &p, sigma, sink)
}
