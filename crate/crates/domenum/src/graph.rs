use crate::error::{Error, Result};
use crate::set::VertexSet;

/// Simple undirected graph on vertices `0..n`, stored as sorted adjacency
/// lists. No loops, no parallel edges. Vertices are plain `usize` ids; the
/// one-based ids of the file format exist only at the I/O boundary.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Graph {
        Graph {
            adjacency: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Build from an edge list. Loops are rejected; duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
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
        if let Err(pos) = self.adjacency[u].binary_search(&v) {
            self.adjacency[u].insert(pos, v);
            let pos = self.adjacency[v].binary_search(&u).unwrap_err();
            self.adjacency[v].insert(pos, u);
            self.m += 1;
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Sorted open neighbourhood of `v`. Panics on an out-of-range id, like
    /// slice indexing; the checked entry point is `closed_neighbourhood`.
    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// N[x] = {x} ∪ N(x).
    pub fn closed_neighbourhood(&self, x: usize) -> Result<VertexSet> {
        if x >= self.n() {
            return Err(Error::InvalidVertex {
                vertex: x,
                bound: self.n(),
            });
        }
        let mut members = self.adjacency[x].clone();
        let pos = members.binary_search(&x).unwrap_err();
        members.insert(pos, x);
        VertexSet::from_sorted(members, self.n())
    }

    /// N[X] = X ∪ ⋃_{x∈X} N(x).
    pub fn closed_neighbourhood_of_set(&self, xs: &VertexSet) -> Result<VertexSet> {
        self.check_universe(xs)?;
        let mut seen = vec![false; self.n()];
        for x in xs.iter() {
            seen[x] = true;
            for &w in self.neighbours(x) {
                seen[w] = true;
            }
        }
        collect_flags(&seen)
    }

    /// N(X) = N[X] ∖ X.
    pub fn open_neighbourhood_of_set(&self, xs: &VertexSet) -> Result<VertexSet> {
        self.check_universe(xs)?;
        let mut seen = vec![false; self.n()];
        for x in xs.iter() {
            for &w in self.neighbours(x) {
                seen[w] = true;
            }
        }
        for x in xs.iter() {
            seen[x] = false;
        }
        collect_flags(&seen)
    }

    /// Connected components, ordered by their smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut comp = vec![usize::MAX; self.n()];
        let mut components = Vec::new();
        let mut queue = Vec::new();
        for start in 0..self.n() {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = components.len();
            comp[start] = id;
            queue.push(start);
            let mut members = Vec::new();
            while let Some(v) = queue.pop() {
                members.push(v);
                for &w in self.neighbours(v) {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        queue.push(w);
                    }
                }
            }
            members.sort_unstable();
            components.push(VertexSet::from_sorted(members, self.n()).unwrap());
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Copy of the graph with the given edges inserted. Existing edges are
    /// ignored, loops are rejected.
    pub fn with_added_edges(&self, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = self.clone();
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut adjacency = Vec::with_capacity(n);
        for u in 0..n {
            let mut row = Vec::with_capacity(n - 1 - self.degree(u));
            let mut nb = self.adjacency[u].iter().peekable();
            for v in 0..n {
                if v == u {
                    continue;
                }
                if nb.peek() == Some(&&v) {
                    nb.next();
                } else {
                    row.push(v);
                }
            }
            adjacency.push(row);
        }
        Graph {
            adjacency,
            m: n * n.saturating_sub(1) / 2 - self.m,
        }
    }

    /// Subgraph induced on `xs`, relabelled to `0..xs.len()`. The returned
    /// mapping sends each new id to the old one (`mapping[new] == old`).
    pub fn induced_subgraph(&self, xs: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_universe(xs)?;
        let mapping: Vec<usize> = xs.members().to_vec();
        let mut back = vec![usize::MAX; self.n()];
        for (new, &old) in mapping.iter().enumerate() {
            back[old] = new;
        }
        let mut adjacency = vec![Vec::new(); mapping.len()];
        let mut m = 0;
        for (new, &old) in mapping.iter().enumerate() {
            for &w in self.neighbours(old) {
                if back[w] != usize::MAX {
                    adjacency[new].push(back[w]);
                    if back[w] > new {
                        m += 1;
                    }
                }
            }
            adjacency[new].sort_unstable();
        }
        Ok((Graph { adjacency, m }, mapping))
    }

    pub fn is_complete(&self) -> bool {
        self.m == self.n() * self.n().saturating_sub(1) / 2
    }

    fn check_universe(&self, xs: &VertexSet) -> Result<()> {
        if xs.universe() != self.n() {
            return Err(Error::UniverseMismatch {
                got: xs.universe(),
                expected: self.n(),
            });
        }
        Ok(())
    }
}

fn collect_flags(flags: &[bool]) -> Result<VertexSet> {
    VertexSet::from_sorted(
        flags
            .iter()
            .enumerate()
            .filter_map(|(v, &f)| f.then_some(v))
            .collect(),
        flags.len(),
    )
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}; ", self.n(), self.m)?;
        let mut first = true;
        for (u, v) in self.edges() {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
            first = false;
        }
        write!(f, ")")
    }
}

/// Convenience constructors used all over the tests and examples.
pub fn path_graph(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least three vertices");
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((0, n - 1));
    Graph::from_edges(n, &edges).unwrap()
}

pub fn complete_graph(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}
