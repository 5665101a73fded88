//! The pair graph over ordered vertex pairs.
//!
//! For a template `H`, the pair graph has a vertex for every ordered pair
//! `(u, v)` of `H`-vertices and a signed arc `(u, v) -> (u', v')` whenever one
//! walk step can extend a walk at `u` while a congruent step extends a walk
//! at `v` without the crossing arc that would let the first walk touch the
//! second:
//!
//! * plus arc:  `uu'` and `vv'` are arcs of `H` and `uv'` is not;
//! * minus arc: `u'u` and `v'v` are arcs of `H` and `v'u` is not.
//!
//! Directed walks here are exactly pairs of congruent walks in `H` where the
//! first avoids the second. Strong components of the pair graph therefore
//! decide invertibility, and their special/co-special classification drives
//! the synthesis of the binary polymorphism.

use alloc::vec;
use alloc::vec::Vec;

use crate::bits::BitSet;
use crate::digraph::Digraph;
use crate::walk::{Step, Walk};

/// Sign of a pair-graph arc: `Plus` steps both walks forward, `Minus` steps
/// both backward.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

/// An arc of the pair graph; the same ordered pair of endpoints can carry
/// both signs (common in symmetric templates).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairArc {
    pub to: usize,
    pub plus: bool,
    pub minus: bool,
}

/// A directed walk in the pair graph: a pair sequence plus its sign pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairWalk {
    pub pairs: Vec<(usize, usize)>,
    pub signs: Vec<Sign>,
}

impl PairWalk {
    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn first(&self) -> (usize, usize) {
        self.pairs[0]
    }

    pub fn last(&self) -> (usize, usize) {
        *self.pairs.last().unwrap()
    }
}

/// The pair graph of a template, with strong components, their
/// classification, and the coupling map precomputed. Immutable after build.
pub struct PairGraph<'a> {
    h: &'a Digraph,
    n: usize,
    adj: Vec<Vec<PairArc>>,
    scc_of: Vec<usize>,
    scc_count: usize,
    members: Vec<Vec<usize>>,
    coupled: Vec<usize>,
    special: Vec<bool>,
    co_special: Vec<bool>,
    self_coupled: Vec<bool>,
}

impl<'a> PairGraph<'a> {
    /// Builds the pair graph of `h` and computes all derived structure.
    ///
    /// Component ids are assigned in reverse topological order (a component
    /// only reaches components with smaller ids), which keeps every
    /// downstream layering deterministic.
    pub fn build(h: &'a Digraph) -> PairGraph<'a> {
        let n = h.n();
        let np = n * n;
        let mut adj: Vec<Vec<PairArc>> = vec![Vec::new(); np];
        for u in 0..n {
            for v in 0..n {
                let from = u * n + v;
                // plus arcs, targets ascending
                let mut plus: Vec<usize> = Vec::new();
                for u2 in h.out_neighbors(u) {
                    for v2 in h.out_neighbors(v) {
                        if !h.is_arc(u, v2) {
                            plus.push(u2 * n + v2);
                        }
                    }
                }
                plus.sort_unstable();
                // minus arcs
                let mut minus: Vec<usize> = Vec::new();
                for u2 in h.in_neighbors(u) {
                    for v2 in h.in_neighbors(v) {
                        if !h.is_arc(v2, u) {
                            minus.push(u2 * n + v2);
                        }
                    }
                }
                minus.sort_unstable();
                adj[from] = merge_signed(&plus, &minus);
            }
        }

        let (scc_of, scc_count) = tarjan(&adj);
        let mut members: Vec<Vec<usize>> = vec![Vec::new(); scc_count];
        for p in 0..np {
            members[scc_of[p]].push(p);
        }

        // Coupling: the component of the swapped pairs. Well defined because
        // swapping is an anti-automorphism of the pair graph.
        let mut coupled = vec![0usize; scc_count];
        for (c, ms) in members.iter().enumerate() {
            let p = ms[0];
            let (u, v) = (p / n, p % n);
            coupled[c] = scc_of[v * n + u];
            debug_assert!(ms
                .iter()
                .all(|&q| scc_of[(q % n) * n + q / n] == coupled[c]));
        }

        // Reachability over the condensation. Ids are reverse topological,
        // so successors of a component have strictly smaller ids.
        let mut reach: Vec<BitSet> = (0..scc_count).map(|_| BitSet::new(scc_count)).collect();
        for c in 0..scc_count {
            let mut set = BitSet::new(scc_count);
            set.insert(c);
            for &p in &members[c] {
                for arc in &adj[p] {
                    let d = scc_of[arc.to];
                    if d != c {
                        debug_assert!(d < c);
                        set.union_with(&reach[d]);
                    }
                }
            }
            reach[c] = set;
        }

        // A pair (x, y) with x != y is special when a directed path of
        // length >= 1 leads to (y, x); diagonal pairs are never classified.
        // Within a component this is decided by condensation reachability:
        // a path to the coupled component, including the in-component case.
        let mut special = vec![false; scc_count];
        for c in 0..scc_count {
            let p = members[c][0];
            let non_diagonal = p / n != p % n;
            special[c] = non_diagonal && reach[c].contains(coupled[c]);
        }
        let co_special: Vec<bool> = (0..scc_count).map(|c| special[coupled[c]]).collect();
        let self_coupled: Vec<bool> = (0..scc_count)
            .map(|c| special[c] && co_special[c])
            .collect();
        for c in 0..scc_count {
            debug_assert_eq!(
                self_coupled[c],
                coupled[c] == c && members[c][0] / n != members[c][0] % n
            );
        }

        PairGraph {
            h,
            n,
            adj,
            scc_of,
            scc_count,
            members,
            coupled,
            special,
            co_special,
            self_coupled,
        }
    }

    pub fn template(&self) -> &Digraph {
        self.h
    }

    /// Vertex count of the template (the pair graph has `n^2` vertices).
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn pair_index(&self, u: usize, v: usize) -> usize {
        debug_assert!(u < self.n && v < self.n);
        u * self.n + v
    }

    #[inline]
    pub fn pair_of(&self, idx: usize) -> (usize, usize) {
        (idx / self.n, idx % self.n)
    }

    pub fn arcs_from(&self, idx: usize) -> &[PairArc] {
        &self.adj[idx]
    }

    pub fn has_arc(&self, from: usize, to: usize) -> bool {
        self.adj[from].iter().any(|a| a.to == to)
    }

    pub fn component_count(&self) -> usize {
        self.scc_count
    }

    pub fn component_of(&self, u: usize, v: usize) -> usize {
        self.scc_of[self.pair_index(u, v)]
    }

    pub fn component_of_index(&self, idx: usize) -> usize {
        self.scc_of[idx]
    }

    /// Pair indices in component `c`, ascending.
    pub fn component_members(&self, c: usize) -> &[usize] {
        &self.members[c]
    }

    pub fn coupled_component(&self, c: usize) -> usize {
        self.coupled[c]
    }

    pub fn is_special(&self, c: usize) -> bool {
        self.special[c]
    }

    pub fn is_co_special(&self, c: usize) -> bool {
        self.co_special[c]
    }

    pub fn is_self_coupled(&self, c: usize) -> bool {
        self.self_coupled[c]
    }

    /// Whether `u, v` is an invertible pair: `(u, v)` and `(v, u)` share a
    /// strong component that contains at least one arc, so genuine mutually
    /// avoiding walk pairs exist in both directions.
    ///
    /// # Panics
    /// Panics if `u == v`.
    pub fn is_invertible(&self, u: usize, v: usize) -> bool {
        assert!(u != v, "invertibility is defined for distinct vertices");
        let c = self.component_of(u, v);
        c == self.component_of(v, u) && self.component_has_arc(c)
    }

    fn component_has_arc(&self, c: usize) -> bool {
        self.members[c]
            .iter()
            .any(|&p| self.adj[p].iter().any(|a| self.scc_of[a.to] == c))
    }

    /// The set of all invertible pair indices, as a bitset over `n^2`.
    pub fn invertible_pairs(&self) -> BitSet {
        let mut set = BitSet::new(self.n * self.n);
        for u in 0..self.n {
            for v in 0..self.n {
                if u != v && self.is_invertible(u, v) {
                    set.insert(self.pair_index(u, v));
                }
            }
        }
        set
    }

    /// Whether every arc with both endpoints in component `c` has its
    /// reversed arc present (with either sign).
    pub fn component_symmetric(&self, c: usize) -> bool {
        self.members[c].iter().all(|&p| {
            self.adj[p]
                .iter()
                .filter(|a| self.scc_of[a.to] == c)
                .all(|a| self.has_arc(a.to, p))
        })
    }

    /// Lexicographically first in-component arc whose reversal is absent, or
    /// `None` when the component is symmetric.
    pub fn asymmetric_arc_in(&self, c: usize) -> Option<(usize, usize)> {
        for &p in &self.members[c] {
            for a in &self.adj[p] {
                if self.scc_of[a.to] == c && !self.has_arc(a.to, p) {
                    return Some((p, a.to));
                }
            }
        }
        None
    }

    /// Shortest directed walk from `from` to `to`, or `None` if unreachable.
    pub fn pair_walk(&self, from: (usize, usize), to: (usize, usize)) -> Option<PairWalk> {
        self.bfs_walk(from, to, None)
    }

    /// Shortest directed walk staying inside component `c`.
    pub fn pair_walk_within(
        &self,
        from: (usize, usize),
        to: (usize, usize),
        c: usize,
    ) -> Option<PairWalk> {
        self.bfs_walk(from, to, Some(c))
    }

    fn bfs_walk(
        &self,
        from: (usize, usize),
        to: (usize, usize),
        within: Option<usize>,
    ) -> Option<PairWalk> {
        let np = self.n * self.n;
        let src = self.pair_index(from.0, from.1);
        let dst = self.pair_index(to.0, to.1);
        if let Some(c) = within {
            if self.scc_of[src] != c || self.scc_of[dst] != c {
                return None;
            }
        }
        let mut parent: Vec<usize> = vec![usize::MAX; np];
        let mut psign: Vec<Sign> = vec![Sign::Plus; np];
        let mut visited = BitSet::new(np);
        visited.insert(src);
        let mut queue = alloc::collections::VecDeque::new();
        queue.push_back(src);
        let mut found = src == dst;
        'bfs: while let Some(p) = queue.pop_front() {
            for a in &self.adj[p] {
                if visited.contains(a.to) {
                    continue;
                }
                if let Some(c) = within {
                    if self.scc_of[a.to] != c {
                        continue;
                    }
                }
                visited.insert(a.to);
                parent[a.to] = p;
                psign[a.to] = if a.plus { Sign::Plus } else { Sign::Minus };
                if a.to == dst {
                    found = true;
                    break 'bfs;
                }
                queue.push_back(a.to);
            }
        }
        if !found {
            return None;
        }
        let mut pairs = vec![self.pair_of(dst)];
        let mut signs = Vec::new();
        let mut cur = dst;
        while cur != src {
            signs.push(psign[cur]);
            cur = parent[cur];
            pairs.push(self.pair_of(cur));
        }
        pairs.reverse();
        signs.reverse();
        Some(PairWalk { pairs, signs })
    }

    /// Lifts a pair-graph walk to two congruent walks in the template, the
    /// first over first coordinates and the second over second coordinates;
    /// plus steps become forward steps and minus steps backward ones. The
    /// lifted first walk avoids the lifted second.
    ///
    /// # Panics
    /// Panics if the data is not a valid signed pair-graph walk.
    pub fn lift_to_h_walks(&self, walk: &PairWalk) -> (Walk, Walk) {
        assert_eq!(walk.pairs.len(), walk.signs.len() + 1, "malformed pair walk");
        let pattern: Vec<Step> = walk
            .signs
            .iter()
            .map(|s| match s {
                Sign::Plus => Step::Forward,
                Sign::Minus => Step::Backward,
            })
            .collect();
        for (i, &sign) in walk.signs.iter().enumerate() {
            let (u, v) = walk.pairs[i];
            let (u2, v2) = walk.pairs[i + 1];
            let ok = match sign {
                Sign::Plus => {
                    self.h.is_arc(u, u2) && self.h.is_arc(v, v2) && !self.h.is_arc(u, v2)
                }
                Sign::Minus => {
                    self.h.is_arc(u2, u) && self.h.is_arc(v2, v) && !self.h.is_arc(v2, u)
                }
            };
            assert!(ok, "pair walk step {i} is not an arc of the pair graph");
        }
        let first = Walk::new_unchecked(
            walk.pairs.iter().map(|&(u, _)| u).collect(),
            pattern.clone(),
        );
        let second = Walk::new_unchecked(walk.pairs.iter().map(|&(_, v)| v).collect(), pattern);
        debug_assert!(first.is_valid_in(self.h) && second.is_valid_in(self.h));
        debug_assert!(first.avoids(&second, self.h));
        (first, second)
    }
}

fn merge_signed(plus: &[usize], minus: &[usize]) -> Vec<PairArc> {
    let mut out = Vec::with_capacity(plus.len() + minus.len());
    let (mut i, mut j) = (0, 0);
    while i < plus.len() || j < minus.len() {
        if j >= minus.len() || (i < plus.len() && plus[i] < minus[j]) {
            out.push(PairArc { to: plus[i], plus: true, minus: false });
            i += 1;
        } else if i >= plus.len() || minus[j] < plus[i] {
            out.push(PairArc { to: minus[j], plus: false, minus: true });
            j += 1;
        } else {
            out.push(PairArc { to: plus[i], plus: true, minus: true });
            i += 1;
            j += 1;
        }
    }
    out
}

/// Iterative Tarjan; returns (component id per vertex, component count) with
/// ids in reverse topological order of the condensation.
fn tarjan(adj: &[Vec<PairArc>]) -> (Vec<usize>, usize) {
    let n = adj.len();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut scc_of = vec![usize::MAX; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut next_index = 0usize;
    let mut scc_count = 0usize;
    // frames: (vertex, next child position)
    let mut frames: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        frames.push((root, 0));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut child)) = frames.last_mut() {
            if *child < adj[v].len() {
                let w = adj[v][*child].to;
                *child += 1;
                if index[w] == usize::MAX {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    frames.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                frames.pop();
                if let Some(&mut (parent, _)) = frames.last_mut() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        scc_of[w] = scc_count;
                        if w == v {
                            break;
                        }
                    }
                    scc_count += 1;
                }
            }
        }
    }
    (scc_of, scc_count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c3() -> Digraph {
        Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)])
    }

    fn rc4() -> Digraph {
        let mut g = Digraph::new(4);
        for v in 0..4 {
            g.add_arc(v, v);
            g.add_arc(v, (v + 1) % 4);
            g.add_arc((v + 1) % 4, v);
        }
        g
    }

    #[test]
    fn single_arc_template_has_empty_pair_graph() {
        let h = Digraph::from_arcs(2, &[(0, 1)]);
        let pg = PairGraph::build(&h);
        let arc_total: usize = (0..4).map(|p| pg.arcs_from(p).len()).sum();
        assert_eq!(arc_total, 0);
        assert_eq!(pg.component_count(), 4);
        for c in 0..4 {
            assert!(!pg.is_special(c));
            assert!(!pg.is_co_special(c));
        }
        assert!(!pg.is_invertible(0, 1));
        assert_eq!(pg.pair_walk((0, 1), (1, 0)), None);
    }

    #[test]
    fn diagonal_pairs_are_isolated() {
        for h in [c3(), rc4(), Digraph::from_arcs(3, &[(0, 0), (0, 1), (1, 0)])] {
            let pg = PairGraph::build(&h);
            let n = h.n();
            for v in 0..n {
                let d = pg.pair_index(v, v);
                assert!(pg.arcs_from(d).is_empty());
                for p in 0..n * n {
                    assert!(!pg.has_arc(p, d));
                }
            }
        }
    }

    #[test]
    fn c3_components_and_coupling() {
        let h = c3();
        let pg = PairGraph::build(&h);
        let fwd = pg.component_of(0, 1);
        assert_eq!(pg.component_of(1, 2), fwd);
        assert_eq!(pg.component_of(2, 0), fwd);
        let bwd = pg.component_of(1, 0);
        assert_eq!(pg.component_of(2, 1), bwd);
        assert_eq!(pg.component_of(0, 2), bwd);
        assert_ne!(fwd, bwd);
        assert_eq!(pg.coupled_component(fwd), bwd);
        assert_eq!(pg.coupled_component(bwd), fwd);
        assert!(!pg.is_self_coupled(fwd));
        assert!(!pg.is_invertible(0, 1));
        // the forward component is a directed 3-cycle: not symmetric
        assert!(!pg.component_symmetric(fwd));
    }

    #[test]
    fn c3_pair_walk_length_one() {
        let h = c3();
        let pg = PairGraph::build(&h);
        let w = pg.pair_walk((0, 1), (1, 2)).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(w.signs, alloc::vec![Sign::Plus]);
        let (p, q) = pg.lift_to_h_walks(&w);
        assert_eq!(p.vertices(), &[0, 1]);
        assert_eq!(q.vertices(), &[1, 2]);
        assert!(p.avoids(&q, &h));
        // empty walk from a pair to itself
        let e = pg.pair_walk((0, 1), (0, 1)).unwrap();
        assert!(e.is_empty());
        let (p0, q0) = pg.lift_to_h_walks(&e);
        assert_eq!((p0.len(), q0.len()), (0, 0));
        assert_eq!((p0.first(), q0.first()), (0, 1));
    }

    #[test]
    fn rc4_adjacent_pair_is_invertible() {
        let h = rc4();
        let pg = PairGraph::build(&h);
        assert!(pg.is_invertible(0, 1));
        assert!(pg.is_invertible(1, 0));
        let c = pg.component_of(0, 1);
        assert!(pg.is_self_coupled(c));
        assert!(pg.is_special(c) && pg.is_co_special(c));
    }

    #[test]
    fn skew_symmetry_flips_sign() {
        for h in [c3(), rc4(), Digraph::from_arcs(4, &[(0, 1), (1, 2), (2, 3), (3, 1)])] {
            let n = h.n();
            let pg = PairGraph::build(&h);
            for p in 0..n * n {
                let (u, v) = pg.pair_of(p);
                for a in pg.arcs_from(p) {
                    let (u2, v2) = pg.pair_of(a.to);
                    let swapped_from = pg.pair_index(v2, u2);
                    let swapped_to = pg.pair_index(v, u);
                    let rev = pg
                        .arcs_from(swapped_from)
                        .iter()
                        .find(|b| b.to == swapped_to)
                        .copied()
                        .expect("skew-symmetric arc missing");
                    assert_eq!(a.plus, rev.minus);
                    assert_eq!(a.minus, rev.plus);
                }
            }
        }
    }

    #[test]
    fn component_flags_follow_condensation_order() {
        // On any built pair graph: reaching a special component makes a
        // component special; dually a co-special component only reaches
        // co-special ones.
        for h in [c3(), rc4(), Digraph::from_arcs(3, &[(0, 1), (1, 0), (1, 2)])] {
            let pg = PairGraph::build(&h);
            for c in 0..pg.component_count() {
                for &p in pg.component_members(c) {
                    for a in pg.arcs_from(p) {
                        let d = pg.component_of_index(a.to);
                        if pg.is_special(d) {
                            assert!(pg.is_special(c));
                        }
                        if pg.is_co_special(c) {
                            assert!(pg.is_co_special(d));
                        }
                    }
                }
            }
        }
    }
}
