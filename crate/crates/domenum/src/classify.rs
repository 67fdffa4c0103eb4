//! Graph-class recognition: split partitions, chordality, induced P6,
//! simplicial vertices and co-bipartiteness. Failures come with witnesses —
//! a forbidden subgraph, a chordless cycle, the offending path — so callers
//! can check refusals instead of trusting them.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// One of the three minimal obstructions to being a split graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitObstruction {
    /// Two independent edges a-b, c-d with no edge between them.
    TwoK2([usize; 4]),
    /// Chordless four-cycle, in cycle order.
    C4([usize; 4]),
    /// Chordless five-cycle, in cycle order.
    C5([usize; 5]),
}

impl std::fmt::Display for SplitObstruction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SplitObstruction::TwoK2([a, b, c, d]) => write!(f, "2K2 on {a}-{b} and {c}-{d}"),
            SplitObstruction::C4([a, b, c, d]) => write!(f, "C4 {a}-{b}-{c}-{d}"),
            SplitObstruction::C5([a, b, c, d, e]) => write!(f, "C5 {a}-{b}-{c}-{d}-{e}"),
        }
    }
}

/// A split partition V = C ⊎ S: `clique` pairwise adjacent, `independent`
/// pairwise non-adjacent, and S maximal — no clique vertex could be moved
/// into S while keeping it independent (equivalently, every clique vertex
/// has a neighbour in S). Maximality is what makes S itself a dominating
/// set, the root of the enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPartition {
    clique: VertexSet,
    independent: VertexSet,
}

impl SplitPartition {
    /// Validated constructor; see `validate_for` for the rules.
    pub fn new(g: &Graph, clique: VertexSet, independent: VertexSet) -> Result<SplitPartition> {
        let p = SplitPartition {
            clique,
            independent,
        };
        p.validate_for(g)?;
        Ok(p)
    }

    pub fn clique(&self) -> &VertexSet {
        &self.clique
    }

    pub fn independent(&self) -> &VertexSet {
        &self.independent
    }

    /// Check this partition against a graph: the two sides must partition the
    /// vertices, the clique side must be complete, the independent side
    /// edgeless, and the independent side maximal.
    pub fn validate_for(&self, g: &Graph) -> Result<()> {
        let n = g.n();
        if self.clique.universe() != n || self.independent.universe() != n {
            return Err(Error::InvalidPartition(format!(
                "partition universe does not match a graph on {n} vertices"
            )));
        }
        if self.clique.intersects(&self.independent)
            || self.clique.len() + self.independent.len() != n
        {
            return Err(Error::InvalidPartition(
                "sides must partition the vertex set".into(),
            ));
        }
        let cm = self.clique.members();
        for (i, &u) in cm.iter().enumerate() {
            for &v in &cm[i + 1..] {
                if !g.has_edge(u, v) {
                    return Err(Error::InvalidPartition(format!(
                        "clique side misses edge {{{u}, {v}}}"
                    )));
                }
            }
        }
        for u in self.independent.iter() {
            if let Some(&v) = g
                .neighbours(u)
                .iter()
                .find(|&&v| self.independent.contains(v))
            {
                return Err(Error::InvalidPartition(format!(
                    "independent side contains edge {{{u}, {v}}}"
                )));
            }
        }
        for u in self.clique.iter() {
            if !g
                .neighbours(u)
                .iter()
                .any(|&v| self.independent.contains(v))
            {
                return Err(Error::InvalidPartition(format!(
                    "independent side not maximal: clique vertex {u} could move into it"
                )));
            }
        }
        Ok(())
    }
}

/// Recognise a split graph and return its partition, with the independent
/// side made maximal (ties during the fixpoint broken toward the smallest
/// id). Non-split graphs are refused with a forbidden-subgraph witness.
///
/// Recognition is by the degree-sequence characterisation: with degrees
/// d1 ≥ … ≥ dn and m = max{i : di ≥ i−1}, the graph is split exactly when
/// Σ_{i≤m} di = m(m−1) + Σ_{i>m} di, and then the m highest-degree vertices
/// form a clique with the rest independent.
pub fn split_partition(g: &Graph) -> Result<SplitPartition> {
    let n = g.n();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let degrees: Vec<usize> = by_degree.iter().map(|&v| g.degree(v)).collect();

    let mut m_star = 0;
    for i in 1..=n {
        if degrees[i - 1] >= i - 1 {
            m_star = i;
        }
    }
    let lhs: usize = degrees[..m_star].iter().sum();
    let rhs: usize = m_star * m_star.saturating_sub(1) + degrees[m_star..].iter().sum::<usize>();
    if lhs != rhs {
        return Err(Error::NotSplit {
            obstruction: find_split_obstruction(g),
        });
    }

    let mut in_clique = vec![false; n];
    for &v in &by_degree[..m_star] {
        in_clique[v] = true;
    }
    // Degree-sequence equality guarantees this partition is valid; the
    // assertions below are a canary, checked exhaustively in the tests.
    for &u in &by_degree[..m_star] {
        for &v in &by_degree[..m_star] {
            assert!(
                u == v || g.has_edge(u, v),
                "split recognition broke: clique side"
            );
        }
    }
    for &u in &by_degree[m_star..] {
        assert!(
            !g.neighbours(u).iter().any(|&v| !in_clique[v]),
            "split recognition broke: independent side"
        );
    }

    // Maximality fixpoint: while some clique vertex has no neighbour on the
    // independent side, move the smallest such vertex across. (After one
    // move every remaining clique vertex is adjacent to the moved one, so
    // the loop settles immediately, but the fixpoint form is the contract.)
    loop {
        let movable = (0..n)
            .filter(|&v| in_clique[v])
            .find(|&v| !g.neighbours(v).iter().any(|&w| !in_clique[w]));
        match movable {
            Some(v) => in_clique[v] = false,
            None => break,
        }
    }

    let clique = VertexSet::from_members((0..n).filter(|&v| in_clique[v]), n)?;
    let independent = VertexSet::from_members((0..n).filter(|&v| !in_clique[v]), n)?;
    SplitPartition::new(g, clique, independent)
}

pub fn is_split(g: &Graph) -> bool {
    split_partition(g).is_ok()
}

/// Find an induced 2K2, C4 or C5. Split graphs have none; every non-split
/// graph contains one.
pub fn find_split_obstruction(g: &Graph) -> Option<SplitObstruction> {
    let n = g.n();
    // C4: walk a-b, b-c with c ∉ N[a], close with d ∈ N(c) ∩ N(a), d ∉ N[b]
    for a in 0..n {
        for &b in g.neighbours(a) {
            for &c in g.neighbours(b) {
                if c == a || g.has_edge(a, c) {
                    continue;
                }
                for &d in g.neighbours(c) {
                    if d != b && !g.has_edge(b, d) && g.has_edge(a, d) {
                        return Some(SplitObstruction::C4([a, b, c, d]));
                    }
                }
            }
        }
    }
    // 2K2: two edges with no crossing edge
    let edges: Vec<(usize, usize)> = g.edges().collect();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            if !g.has_edge(a, c) && !g.has_edge(a, d) && !g.has_edge(b, c) && !g.has_edge(b, d) {
                return Some(SplitObstruction::TwoK2([a, b, c, d]));
            }
        }
    }
    // C5: extend an induced path a-b-c-d and close through e ∈ N(a) ∩ N(d)
    for a in 0..n {
        for &b in g.neighbours(a) {
            for &c in g.neighbours(b) {
                if c == a || g.has_edge(a, c) {
                    continue;
                }
                for &d in g.neighbours(c) {
                    if d == b || g.has_edge(a, d) || g.has_edge(b, d) {
                        continue;
                    }
                    for &e in g.neighbours(d) {
                        if e != a && g.has_edge(a, e) && !g.has_edge(b, e) && !g.has_edge(c, e) {
                            return Some(SplitObstruction::C5([a, b, c, d, e]));
                        }
                    }
                }
            }
        }
    }
    None
}

/// Outcome of the chordality test: a perfect elimination ordering, or a
/// chordless cycle of length at least four.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chordality {
    Chordal { peo: Vec<usize> },
    NotChordal { hole: Vec<usize> },
}

/// Lexicographic BFS visit order (label-based; ties toward smaller ids).
/// On a chordal graph its reverse is a perfect elimination ordering.
pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let u = (0..n)
            .filter(|&v| !visited[v])
            .max_by(|&a, &b| labels[a].cmp(&labels[b]).then_with(|| b.cmp(&a)))
            .unwrap();
        visited[u] = true;
        order.push(u);
        for &w in g.neighbours(u) {
            if !visited[w] {
                labels[w].push(n - step);
            }
        }
    }
    order
}

/// First violation of the perfect elimination property in `order`, as a
/// triple (v, u, w): u, w are later neighbours of v, u the earliest, and
/// the edge u-w is missing.
fn peo_violation(g: &Graph, order: &[usize]) -> Option<(usize, usize, usize)> {
    let n = g.n();
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in order {
        let mut later: Vec<usize> = g
            .neighbours(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] > pos[v])
            .collect();
        if later.len() < 2 {
            continue;
        }
        later.sort_by_key(|&w| pos[w]);
        let u = later[0];
        for &w in &later[1..] {
            if !g.has_edge(u, w) {
                return Some((v, u, w));
            }
        }
    }
    None
}

/// LexBFS + elimination check. On failure the witness hole is recovered by
/// scanning for a vertex v with non-adjacent neighbours u, w that stay
/// connected outside N[v]: the shortest such u-w path is induced and closes
/// through v into a chordless cycle.
pub fn chordality(g: &Graph) -> Chordality {
    let mut peo = lex_bfs(g);
    peo.reverse();
    if peo_violation(g, &peo).is_none() {
        return Chordality::Chordal { peo };
    }
    let hole = extract_hole(g).expect("elimination check failed, so a hole must exist");
    Chordality::NotChordal { hole }
}

pub fn is_chordal(g: &Graph) -> bool {
    matches!(chordality(g), Chordality::Chordal { .. })
}

fn extract_hole(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    for v in 0..n {
        let nb = g.neighbours(v);
        for (i, &u) in nb.iter().enumerate() {
            for &w in &nb[i + 1..] {
                if g.has_edge(u, w) {
                    continue;
                }
                // BFS from u to w dodging N[v] ∖ {u, w}
                let mut forbidden = vec![false; n];
                forbidden[v] = true;
                for &x in nb {
                    forbidden[x] = true;
                }
                forbidden[u] = false;
                forbidden[w] = false;
                if let Some(path) = bfs_path(g, u, w, &forbidden) {
                    let mut hole = vec![v];
                    hole.extend(path);
                    debug_assert!(is_chordless_cycle(g, &hole));
                    return Some(hole);
                }
            }
        }
    }
    None
}

fn bfs_path(g: &Graph, from: usize, to: usize, forbidden: &[bool]) -> Option<Vec<usize>> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    parent[from] = from;
    queue.push_back(from);
    while let Some(v) = queue.pop_front() {
        if v == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &w in g.neighbours(v) {
            if !forbidden[w] && parent[w] == usize::MAX {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Is `cycle` a chordless cycle of length ≥ 4 in `g`? Used to certify the
/// witnesses this module returns.
pub fn is_chordless_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 4 {
        return false;
    }
    let mut seen = std::collections::HashSet::new();
    if !cycle.iter().all(|&v| v < g.n() && seen.insert(v)) {
        return false;
    }
    for i in 0..k {
        for j in i + 1..k {
            let adjacent = g.has_edge(cycle[i], cycle[j]);
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if adjacent != consecutive {
                return false;
            }
        }
    }
    true
}

/// Search for an induced path on six vertices, returned in path order.
/// Plain DFS over induced paths — O(n^6) in the worst case, fine at desk
/// scale.
pub fn find_induced_p6(g: &Graph) -> Option<Vec<usize>> {
    fn extend(g: &Graph, path: &mut Vec<usize>, on_path: &mut Vec<bool>) -> bool {
        if path.len() == 6 {
            return true;
        }
        let last = *path.last().unwrap();
        for &w in g.neighbours(last) {
            if on_path[w] {
                continue;
            }
            if path[..path.len() - 1].iter().any(|&p| g.has_edge(p, w)) {
                continue;
            }
            path.push(w);
            on_path[w] = true;
            if extend(g, path, on_path) {
                return true;
            }
            path.pop();
            on_path[w] = false;
        }
        false
    }

    let n = g.n();
    let mut on_path = vec![false; n];
    for start in 0..n {
        let mut path = vec![start];
        on_path[start] = true;
        if extend(g, &mut path, &mut on_path) {
            return Some(path);
        }
        on_path[start] = false;
    }
    None
}

pub fn contains_induced_p6(g: &Graph) -> bool {
    find_induced_p6(g).is_some()
}

/// Is N(x) a clique?
pub fn is_simplicial(g: &Graph, x: usize) -> Result<bool> {
    if x >= g.n() {
        return Err(Error::InvalidVertex {
            vertex: x,
            bound: g.n(),
        });
    }
    let nb = g.neighbours(x);
    for (i, &u) in nb.iter().enumerate() {
        for &v in &nb[i + 1..] {
            if !g.has_edge(u, v) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Co-bipartite: the complement is bipartite, i.e. the vertices split into
/// two cliques.
pub fn is_cobipartite(g: &Graph) -> bool {
    let c = g.complement();
    let n = c.n();
    let mut colour = vec![u8::MAX; n];
    for start in 0..n {
        if colour[start] != u8::MAX {
            continue;
        }
        colour[start] = 0;
        let mut queue = vec![start];
        while let Some(v) = queue.pop() {
            for &w in c.neighbours(v) {
                if colour[w] == u8::MAX {
                    colour[w] = 1 - colour[v];
                    queue.push(w);
                } else if colour[w] == colour[v] {
                    return false;
                }
            }
        }
    }
    true
}
