//! Finite digraphs with dense adjacency storage.

use alloc::string::String;
use alloc::vec::Vec;

use crate::bits::BitMatrix;

/// A finite digraph on vertices `0..n` with set-semantics arcs.
///
/// Adjacency is stored densely in both directions so that arc membership and
/// in/out-neighbor iteration are constant-time per word. Loops are permitted.
/// An undirected graph is represented as a symmetric digraph. Instances are
/// immutable once built up; all queries take `&self`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    fwd: BitMatrix,
    rev: BitMatrix,
    m: usize,
    names: Option<Vec<String>>,
}

impl Digraph {
    /// A digraph with `n` vertices and no arcs.
    pub fn new(n: usize) -> Self {
        Digraph {
            n,
            fwd: BitMatrix::new(n, n),
            rev: BitMatrix::new(n, n),
            m: 0,
            names: None,
        }
    }

    /// Builds from an arc list; duplicates collapse.
    ///
    /// # Panics
    /// Panics if an endpoint is out of range.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Self {
        let mut g = Digraph::new(n);
        for &(u, v) in arcs {
            g.add_arc(u, v);
        }
        g
    }

    pub fn add_arc(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "arc ({u}, {v}) out of range");
        if !self.fwd.get(u, v) {
            self.fwd.set(u, v);
            self.rev.set(v, u);
            self.m += 1;
        }
    }

    /// Vertex count.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Arc count.
    pub fn arc_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn is_arc(&self, u: usize, v: usize) -> bool {
        self.fwd.get(u, v)
    }

    /// Out-neighbors of `u`, ascending.
    pub fn out_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.fwd.row_ones(u)
    }

    /// In-neighbors of `v`, ascending.
    pub fn in_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rev.row_ones(v)
    }

    /// All arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.out_neighbors(u).map(move |v| (u, v)))
    }

    /// True if every arc has its reverse (the digraph encodes an undirected
    /// graph, loops allowed).
    pub fn is_symmetric(&self) -> bool {
        self.arcs().all(|(u, v)| self.is_arc(v, u))
    }

    /// First arc whose reverse is missing, if any.
    pub fn asymmetric_arc(&self) -> Option<(usize, usize)> {
        self.arcs().find(|&(u, v)| !self.is_arc(v, u))
    }

    /// First loop, if any.
    pub fn loop_vertex(&self) -> Option<usize> {
        (0..self.n).find(|&v| self.is_arc(v, v))
    }

    /// Attaches cosmetic vertex names; semantics always use indices.
    pub fn set_names(&mut self, names: Vec<String>) {
        assert_eq!(names.len(), self.n);
        self.names = Some(names);
    }

    pub fn name(&self, v: usize) -> Option<&str> {
        self.names.as_ref().map(|ns| ns[v].as_str())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn arcs_are_a_set() {
        let g = Digraph::from_arcs(3, &[(0, 1), (0, 1), (2, 2)]);
        assert_eq!(g.arc_count(), 2);
        assert!(g.is_arc(0, 1));
        assert!(g.is_arc(2, 2));
        assert!(!g.is_arc(1, 0));
        assert_eq!(g.arcs().collect::<Vec<_>>(), vec![(0, 1), (2, 2)]);
    }

    #[test]
    fn neighbor_iteration() {
        let g = Digraph::from_arcs(4, &[(1, 0), (1, 2), (3, 2)]);
        assert_eq!(g.out_neighbors(1).collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(g.in_neighbors(2).collect::<Vec<_>>(), vec![1, 3]);
        assert_eq!(g.loop_vertex(), None);
        assert_eq!(g.asymmetric_arc(), Some((1, 0)));
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn out_of_range_arc_panics() {
        Digraph::from_arcs(2, &[(0, 5)]);
    }

    #[test]
    fn names_are_cosmetic() {
        let mut g = Digraph::from_arcs(2, &[(0, 1)]);
        assert_eq!(g.name(0), None);
        g.set_names(vec!["a".to_string(), "b".to_string()]);
        assert_eq!(g.name(1), Some("b"));
    }
}
