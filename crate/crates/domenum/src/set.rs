use std::fmt;

use crate::error::{Error, Result};

/// An immutable set of vertex ids drawn from a fixed universe `0..universe`.
///
/// Members are kept strictly sorted, so equality, subset tests and the
/// lexicographic order used for sorted output all come down to comparing the
/// member slices. The universe size travels with the set: enumeration results
/// keep their meaning when handed between graphs and hypergraphs of the same
/// size, and mixing universes is an error the constructors catch.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet {
    members: Vec<usize>,
    universe: usize,
}

impl VertexSet {
    /// Empty set over `0..universe`.
    pub fn empty(universe: usize) -> VertexSet {
        VertexSet {
            members: Vec::new(),
            universe,
        }
    }

    /// The full universe `0..universe`.
    pub fn full(universe: usize) -> VertexSet {
        VertexSet {
            members: (0..universe).collect(),
            universe,
        }
    }

    pub fn singleton(v: usize, universe: usize) -> Result<VertexSet> {
        VertexSet::from_members([v], universe)
    }

    /// Build from arbitrary members: sorts and deduplicates.
    pub fn from_members(
        members: impl IntoIterator<Item = usize>,
        universe: usize,
    ) -> Result<VertexSet> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if let Some(&v) = members.iter().find(|&&v| v >= universe) {
            return Err(Error::InvalidVertex {
                vertex: v,
                bound: universe,
            });
        }
        Ok(VertexSet { members, universe })
    }

    /// Build from a slice already known to be strictly increasing.
    pub fn from_sorted(members: Vec<usize>, universe: usize) -> Result<VertexSet> {
        if let Some(w) = members.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::InvalidVertex {
                vertex: w[1],
                bound: universe,
            });
        }
        if let Some(&v) = members.last() {
            if v >= universe {
                return Err(Error::InvalidVertex {
                    vertex: v,
                    bound: universe,
                });
            }
        }
        Ok(VertexSet { members, universe })
    }

    /// Decode a bitmask (bit i set ⇔ vertex i present). Universe must fit in
    /// the mask width.
    pub fn from_mask(mask: u64, universe: usize) -> VertexSet {
        assert!(universe <= 64, "mask sets support at most 64 vertices");
        VertexSet {
            members: (0..universe).filter(|&v| mask >> v & 1 == 1).collect(),
            universe,
        }
    }

    pub fn to_mask(&self) -> u64 {
        assert!(self.universe <= 64, "mask sets support at most 64 vertices");
        self.members.iter().fold(0u64, |m, &v| m | 1 << v)
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        merge_subset(&self.members, &other.members)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.members.len() && j < other.members.len() {
            match self.members[i].cmp(&other.members[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.universe, other.universe, "universe mismatch in union");
        let mut members = Vec::with_capacity(self.members.len() + other.members.len());
        let (mut i, mut j) = (0, 0);
        while i < self.members.len() || j < other.members.len() {
            match (self.members.get(i), other.members.get(j)) {
                (Some(&a), Some(&b)) if a == b => {
                    members.push(a);
                    i += 1;
                    j += 1;
                }
                (Some(&a), Some(&b)) if a < b => {
                    members.push(a);
                    i += 1;
                }
                (Some(_), Some(&b)) => {
                    members.push(b);
                    j += 1;
                }
                (Some(&a), None) => {
                    members.push(a);
                    i += 1;
                }
                (None, Some(&b)) => {
                    members.push(b);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        VertexSet {
            members,
            universe: self.universe,
        }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.universe, other.universe, "universe mismatch");
        VertexSet {
            members: self
                .members
                .iter()
                .copied()
                .filter(|&v| other.contains(v))
                .collect(),
            universe: self.universe,
        }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.universe, other.universe, "universe mismatch");
        VertexSet {
            members: self
                .members
                .iter()
                .copied()
                .filter(|&v| !other.contains(v))
                .collect(),
            universe: self.universe,
        }
    }

    /// Same members reinterpreted over a different universe size. Fails if a
    /// member does not fit.
    pub fn with_universe(&self, universe: usize) -> Result<VertexSet> {
        if let Some(&v) = self.members.last() {
            if v >= universe {
                return Err(Error::InvalidVertex {
                    vertex: v,
                    bound: universe,
                });
            }
        }
        Ok(VertexSet {
            members: self.members.clone(),
            universe,
        })
    }
}

/// True iff sorted slice `a` is contained in sorted slice `b`.
fn merge_subset(a: &[usize], b: &[usize]) -> bool {
    let mut j = 0;
    'outer: for &x in a {
        while j < b.len() {
            match b[j].cmp(&x) {
                std::cmp::Ordering::Less => j += 1,
                std::cmp::Ordering::Equal => {
                    j += 1;
                    continue 'outer;
                }
                std::cmp::Ordering::Greater => return false,
            }
        }
        return false;
    }
    true
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}/{}", self.universe)
    }
}
