//! Exhaustive subset-lattice oracles.
//!
//! Everything here scans all 2^n subsets of a small universe and applies the
//! defining predicate directly, with no shortcuts shared with the production
//! enumerators. That independence is the point: the oracles are the fixture
//! against which the clever algorithms are cross-validated, so they stay
//! deliberately naive. A hard cap keeps them honest about scale.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::set::VertexSet;

/// Brute-force enumerator over the subset lattice of a small universe.
///
/// Subsets are visited in population-count-then-value order, so for monotone
/// properties (domination, total domination, transversality) minimality can
/// short-circuit against the already-accepted smaller sets. The non-monotone
/// cases (connected domination, separators) use their own direct tests.
#[derive(Clone, Copy, Debug)]
pub struct SubsetOracle {
    cap: usize,
}

impl SubsetOracle {
    pub const DEFAULT_CAP: usize = 16;

    pub fn new() -> SubsetOracle {
        SubsetOracle {
            cap: Self::DEFAULT_CAP,
        }
    }

    /// Raise or lower the refusal threshold. Capped at 24 — beyond that the
    /// scan is no longer a desk-scale tool.
    pub fn with_cap(cap: usize) -> SubsetOracle {
        assert!(cap <= 24, "subset oracle cap beyond 24 is unusable");
        SubsetOracle { cap }
    }

    fn admit(&self, n: usize) -> Result<()> {
        if n > self.cap {
            return Err(Error::OracleCapExceeded { n, cap: self.cap });
        }
        Ok(())
    }

    /// All minimal dominating sets: D dominates when ⋃_{v∈D} N[v] = V, and
    /// is minimal when no proper subset dominates.
    pub fn minimal_dominating_sets(&self, g: &Graph) -> Result<Vec<VertexSet>> {
        self.admit(g.n())?;
        let n = g.n();
        let closed = closed_masks(g);
        let full = full_mask(n);
        let dominating = |mask: u64| {
            (0..n)
                .filter(|&v| mask >> v & 1 == 1)
                .fold(0u64, |acc, v| acc | closed[v])
                == full
        };
        Ok(minimal_sets_monotone(n, dominating))
    }

    /// Minimal total dominating sets: every vertex (members included) must
    /// have a neighbour in D. An isolated vertex leaves the family empty.
    pub fn minimal_total_dominating_sets(&self, g: &Graph) -> Result<Vec<VertexSet>> {
        self.admit(g.n())?;
        let n = g.n();
        let open = open_masks(g);
        let total = |mask: u64| (0..n).all(|v| open[v] & mask != 0);
        Ok(minimal_sets_monotone(n, total))
    }

    /// Minimal connected dominating sets. Minimality is the direct
    /// one-deletion disjunction: for every x ∈ D, deleting x breaks
    /// domination or breaks the connectivity of the induced subgraph.
    pub fn minimal_connected_dominating_sets(&self, g: &Graph) -> Result<Vec<VertexSet>> {
        self.admit(g.n())?;
        let n = g.n();
        let closed = closed_masks(g);
        let full = full_mask(n);
        let dominating = |mask: u64| {
            (0..n)
                .filter(|&v| mask >> v & 1 == 1)
                .fold(0u64, |acc, v| acc | closed[v])
                == full
        };
        let cds = |mask: u64| dominating(mask) && induced_connected(g, mask);
        let mut out = Vec::new();
        for mask in subsets_by_popcount(n) {
            if !cds(mask) {
                continue;
            }
            let minimal = (0..n)
                .filter(|&v| mask >> v & 1 == 1)
                .all(|v| !cds(mask & !(1 << v)));
            if minimal {
                out.push(VertexSet::from_mask(mask, n));
            }
        }
        out.sort();
        Ok(out)
    }

    /// Minimal transversals of a hypergraph. An empty hyperedge means no
    /// transversal exists and the family is empty.
    pub fn minimal_transversals(&self, h: &Hypergraph) -> Result<Vec<VertexSet>> {
        self.admit(h.ground_size())?;
        if h.empty_edge().is_some() {
            return Ok(Vec::new());
        }
        let n = h.ground_size();
        let edge_masks: Vec<u64> = h.edges().iter().map(|e| e.to_mask()).collect();
        let transversal = |mask: u64| edge_masks.iter().all(|&e| e & mask != 0);
        Ok(minimal_sets_monotone(n, transversal))
    }

    /// Minimal separators: S with G∖S disconnected, containing no other
    /// separator. (Not the per-pair a,b-variant — the inclusion-minimal one.)
    pub fn minimal_separators(&self, g: &Graph) -> Result<Vec<VertexSet>> {
        self.admit(g.n())?;
        let n = g.n();
        let mut accepted_masks: Vec<u64> = Vec::new();
        let mut out = Vec::new();
        for mask in subsets_by_popcount(n) {
            if component_count(g, full_mask(n) & !mask) < 2 {
                continue;
            }
            if accepted_masks.iter().any(|&a| a & !mask == 0) {
                continue; // contains a smaller separator
            }
            accepted_masks.push(mask);
            out.push(VertexSet::from_mask(mask, n));
        }
        out.sort();
        Ok(out)
    }
}

impl Default for SubsetOracle {
    fn default() -> Self {
        SubsetOracle::new()
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn closed_masks(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.closed_neighbourhood(v).unwrap().to_mask())
        .collect()
}

fn open_masks(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.neighbours(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect()
}

/// Is the subgraph induced on `mask` connected (exactly one component)?
/// The empty induced subgraph has zero components and counts as *not*
/// connected, which keeps ∅ out of the connected-domination families.
fn induced_connected(g: &Graph, mask: u64) -> bool {
    component_count(g, mask) == 1
}

fn component_count(g: &Graph, mask: u64) -> usize {
    let mut unseen = mask;
    let mut components = 0;
    while unseen != 0 {
        components += 1;
        let start = unseen.trailing_zeros() as usize;
        let mut frontier = vec![start];
        unseen &= !(1u64 << start);
        while let Some(v) = frontier.pop() {
            for &w in g.neighbours(v) {
                if unseen >> w & 1 == 1 {
                    unseen &= !(1u64 << w);
                    frontier.push(w);
                }
            }
        }
    }
    components
}

/// Subsets of `0..n` ordered by (popcount, value), via Gosper's hack within
/// each popcount class.
fn subsets_by_popcount(n: usize) -> impl Iterator<Item = u64> {
    (0..=n).flat_map(move |k| GosperIter::new(n, k))
}

struct GosperIter {
    n: usize,
    next: Option<u64>,
}

impl GosperIter {
    fn new(n: usize, k: usize) -> GosperIter {
        let first = if k == 0 { 0 } else { (1u64 << k) - 1 };
        GosperIter {
            n,
            next: (k <= n).then_some(first),
        }
    }
}

impl Iterator for GosperIter {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let succ = (((r ^ cur) >> 2) / c) | r;
            (succ < 1u64 << self.n).then_some(succ)
        };
        Some(cur)
    }
}

/// Minimal sets of a monotone property, in lexicographic order. Because the
/// scan runs popcount-first, a candidate is minimal exactly when it contains
/// no already-accepted set.
fn minimal_sets_monotone(n: usize, property: impl Fn(u64) -> bool) -> Vec<VertexSet> {
    let mut accepted: Vec<u64> = Vec::new();
    for mask in subsets_by_popcount(n) {
        if property(mask) && !accepted.iter().any(|&a| a & mask == a && a != mask) {
            accepted.push(mask);
        }
    }
    let mut out: Vec<VertexSet> = accepted
        .into_iter()
        .map(|m| VertexSet::from_mask(m, n))
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, path_graph};
    use crate::hypergraph::tests::six_edge_sample;

    fn vs(members: &[usize], universe: usize) -> VertexSet {
        VertexSet::from_members(members.iter().copied(), universe).unwrap()
    }

    fn family(sets: &[&[usize]], universe: usize) -> Vec<VertexSet> {
        let mut f: Vec<VertexSet> = sets.iter().map(|s| vs(s, universe)).collect();
        f.sort();
        f
    }

    #[test]
    fn dominating_sets_of_small_paths() {
        let oracle = SubsetOracle::new();
        // P3: the centre alone, or both endpoints
        assert_eq!(
            oracle.minimal_dominating_sets(&path_graph(3)).unwrap(),
            family(&[&[1], &[0, 2]], 3)
        );
        // C4: every pair except nothing — all six pairs dominate, all minimal
        assert_eq!(
            oracle.minimal_dominating_sets(&cycle_graph(4)).unwrap(),
            family(&[&[0, 1], &[0, 2], &[0, 3], &[1, 2], &[1, 3], &[2, 3]], 4)
        );
        // K4: each single vertex
        assert_eq!(
            oracle.minimal_dominating_sets(&complete_graph(4)).unwrap(),
            family(&[&[0], &[1], &[2], &[3]], 4)
        );
    }

    #[test]
    fn total_domination_families() {
        let oracle = SubsetOracle::new();
        // K2: only {0,1}
        assert_eq!(
            oracle
                .minimal_total_dominating_sets(&complete_graph(2))
                .unwrap(),
            family(&[&[0, 1]], 2)
        );
        // isolated vertex: empty family
        assert!(oracle
            .minimal_total_dominating_sets(&Graph::new(1))
            .unwrap()
            .is_empty());
        // P4: both middle vertices are forced, so {1,2} is the unique minimal set
        assert_eq!(
            oracle
                .minimal_total_dominating_sets(&path_graph(4))
                .unwrap(),
            family(&[&[1, 2]], 4)
        );
        // P6: endpoints force 1 and 4; vertex 1 needs one of {0,2} and
        // vertex 4 one of {3,5}, independently
        assert_eq!(
            oracle
                .minimal_total_dominating_sets(&path_graph(6))
                .unwrap(),
            family(
                &[&[0, 1, 3, 4], &[0, 1, 4, 5], &[1, 2, 3, 4], &[1, 2, 4, 5]],
                6
            )
        );
    }

    #[test]
    fn connected_domination_families() {
        let oracle = SubsetOracle::new();
        assert_eq!(
            oracle
                .minimal_connected_dominating_sets(&path_graph(4))
                .unwrap(),
            family(&[&[1, 2]], 4)
        );
        assert_eq!(
            oracle
                .minimal_connected_dominating_sets(&complete_graph(3))
                .unwrap(),
            family(&[&[0], &[1], &[2]], 3)
        );
        // C4: the four adjacent pairs
        assert_eq!(
            oracle
                .minimal_connected_dominating_sets(&cycle_graph(4))
                .unwrap(),
            family(&[&[0, 1], &[1, 2], &[2, 3], &[0, 3]], 4)
        );
        // disconnected graph: no connected dominating set at all
        let split2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(oracle
            .minimal_connected_dominating_sets(&split2)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn transversals_of_the_six_edge_sample() {
        let oracle = SubsetOracle::new();
        let h = six_edge_sample();
        assert_eq!(
            oracle.minimal_transversals(&h).unwrap(),
            family(&[&[0, 3], &[1, 2], &[1, 3]], 4)
        );
        // minimization does not change the transversal family
        assert_eq!(
            oracle.minimal_transversals(&h.minimize()).unwrap(),
            oracle.minimal_transversals(&h).unwrap()
        );
    }

    #[test]
    fn transversals_edge_cases() {
        let oracle = SubsetOracle::new();
        let single = Hypergraph::new(3, vec![vs(&[0, 1, 2], 3)]).unwrap();
        assert_eq!(
            oracle.minimal_transversals(&single).unwrap(),
            family(&[&[0], &[1], &[2]], 3)
        );
        let two = Hypergraph::new(2, vec![vs(&[0], 2), vs(&[1], 2)]).unwrap();
        assert_eq!(
            oracle.minimal_transversals(&two).unwrap(),
            family(&[&[0, 1]], 2)
        );
        // no edges at all: the empty set is the unique minimal transversal
        let none = Hypergraph::new(2, vec![]).unwrap();
        assert_eq!(
            oracle.minimal_transversals(&none).unwrap(),
            vec![VertexSet::empty(2)]
        );
        // empty edge: no transversal exists
        let degenerate =
            Hypergraph::new_allow_empty(2, vec![VertexSet::empty(2), vs(&[0], 2)]).unwrap();
        assert!(oracle.minimal_transversals(&degenerate).unwrap().is_empty());
    }

    #[test]
    fn separators_of_small_graphs() {
        let oracle = SubsetOracle::new();
        assert_eq!(
            oracle.minimal_separators(&path_graph(4)).unwrap(),
            family(&[&[1], &[2]], 4)
        );
        assert_eq!(
            oracle.minimal_separators(&cycle_graph(4)).unwrap(),
            family(&[&[0, 2], &[1, 3]], 4)
        );
        assert!(oracle
            .minimal_separators(&complete_graph(4))
            .unwrap()
            .is_empty());
        // star: the centre
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(
            oracle.minimal_separators(&star).unwrap(),
            family(&[&[0]], 4)
        );
    }

    #[test]
    fn cap_is_enforced() {
        let oracle = SubsetOracle::new();
        let big = Graph::new(17);
        assert_eq!(
            oracle.minimal_dominating_sets(&big).unwrap_err(),
            Error::OracleCapExceeded { n: 17, cap: 16 }
        );
        let small_cap = SubsetOracle::with_cap(4);
        assert!(small_cap.minimal_dominating_sets(&path_graph(5)).is_err());
    }

    #[test]
    fn families_are_antichains() {
        let oracle = SubsetOracle::new();
        for g in [path_graph(6), cycle_graph(5), complete_graph(4)] {
            for fam in [
                oracle.minimal_dominating_sets(&g).unwrap(),
                oracle.minimal_total_dominating_sets(&g).unwrap(),
                oracle.minimal_connected_dominating_sets(&g).unwrap(),
                oracle.minimal_separators(&g).unwrap(),
            ] {
                for a in &fam {
                    for b in &fam {
                        assert!(a == b || !a.is_subset_of(b), "{a:?} ⊆ {b:?} in {g:?}");
                    }
                }
            }
        }
    }
}
