//! Walks with explicit forward/backward step patterns.

use alloc::vec::Vec;

use crate::digraph::Digraph;

/// Direction of a single walk step.
///
/// In a symmetric digraph an edge can be traversed as either a forward or a
/// backward arc, so the chosen direction is part of the walk, not derivable
/// from the endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Step {
    Forward,
    Backward,
}

impl Step {
    pub fn flip(self) -> Step {
        match self {
            Step::Forward => Step::Backward,
            Step::Backward => Step::Forward,
        }
    }
}

/// A walk `x_0, .., x_k` together with its step pattern.
///
/// Step `i` is `Forward` when `(x_i, x_{i+1})` is an arc and `Backward` when
/// `(x_{i+1}, x_i)` is. Length-0 walks (a single vertex, empty pattern) are
/// valid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Walk {
    vertices: Vec<usize>,
    pattern: Vec<Step>,
}

impl Walk {
    /// Checked constructor; `None` if the sequences disagree in length or
    /// some step is not realized by an arc of `h`.
    pub fn new(h: &Digraph, vertices: Vec<usize>, pattern: Vec<Step>) -> Option<Walk> {
        if vertices.len() != pattern.len() + 1 || vertices.is_empty() {
            return None;
        }
        let w = Walk { vertices, pattern };
        w.is_valid_in(h).then_some(w)
    }

    /// Constructor for walk data produced by machinery that already
    /// guarantees validity; checked in debug builds only.
    pub(crate) fn new_unchecked(vertices: Vec<usize>, pattern: Vec<Step>) -> Walk {
        debug_assert_eq!(vertices.len(), pattern.len() + 1);
        Walk { vertices, pattern }
    }

    pub fn single(v: usize) -> Walk {
        Walk {
            vertices: alloc::vec![v],
            pattern: Vec::new(),
        }
    }

    pub fn is_valid_in(&self, h: &Digraph) -> bool {
        self.vertices.iter().all(|&v| v < h.n())
            && self.pattern.iter().enumerate().all(|(i, &s)| match s {
                Step::Forward => h.is_arc(self.vertices[i], self.vertices[i + 1]),
                Step::Backward => h.is_arc(self.vertices[i + 1], self.vertices[i]),
            })
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.pattern.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pattern.is_empty()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn pattern(&self) -> &[Step] {
        &self.pattern
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    /// True when `self` and `other` have equal length and identical step
    /// patterns. An equivalence relation on walks of fixed length.
    pub fn congruent(&self, other: &Walk) -> bool {
        self.pattern == other.pattern
    }

    /// True when `self` avoids `other`: no crossing arc from `x_i` to the
    /// other walk's `y_{i+1}` in the direction of step `i`.
    ///
    /// The relation is not symmetric. Exactly one arc-absence test per step.
    ///
    /// # Panics
    /// Panics if the walks are not congruent.
    pub fn avoids(&self, other: &Walk, h: &Digraph) -> bool {
        assert!(
            self.congruent(other),
            "avoids requires congruent walks (len {} vs {})",
            self.len(),
            other.len()
        );
        self.pattern.iter().enumerate().all(|(i, &s)| match s {
            Step::Forward => !h.is_arc(self.vertices[i], other.vertices[i + 1]),
            Step::Backward => !h.is_arc(other.vertices[i + 1], self.vertices[i]),
        })
    }

    /// The walk traversed end to start, with every step direction flipped.
    pub fn reverse(&self) -> Walk {
        Walk {
            vertices: self.vertices.iter().rev().copied().collect(),
            pattern: self.pattern.iter().rev().map(|s| s.flip()).collect(),
        }
    }

    /// Concatenation; `other` continues where `self` ends.
    ///
    /// # Panics
    /// Panics if the endpoints do not match.
    pub fn concat(&self, other: &Walk) -> Walk {
        assert_eq!(
            self.last(),
            other.first(),
            "concat requires matching endpoints"
        );
        let mut vertices = self.vertices.clone();
        vertices.extend_from_slice(&other.vertices[1..]);
        let mut pattern = self.pattern.clone();
        pattern.extend_from_slice(&other.pattern);
        Walk { vertices, pattern }
    }
}
