//! Error type shared by the constructions and solvers.

use alloc::string::String;
use core::fmt;

/// Failures surfaced by builders, solvers and oracles.
///
/// Contract violations (malformed arguments that indicate a caller bug, such
/// as a repeated vertex where distinct ones are required) panic instead; the
/// variants here are conditions a correct caller can legitimately encounter,
/// plus internal self-check failures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A conservative majority operation cannot exist: the template contains
    /// the given permutable triple.
    PermutableTriple { u: usize, v: usize, w: usize },
    /// The ternary-table tie rule found no weak distinguisher among the tied
    /// values, which means the template contains a DAT at this triple.
    NoWeakDistinguisher { u: usize, v: usize, w: usize },
    /// The supplied vertex order is not a min-ordering of the template.
    NotMinOrdering,
    /// The supplied ternary table is not a conservative majority polymorphism.
    NotMajority,
    /// Chooser gadgets require the witness strong component to be symmetric;
    /// use the Q gadget instead.
    ComponentNotSymmetric,
    /// The Q gadget requires a non-symmetric witness strong component; use
    /// the chooser gadgets instead.
    ComponentSymmetric,
    /// The reduction input must be a symmetric (undirected) digraph.
    InputNotSymmetric { u: usize, v: usize },
    /// The reduction input has a loop, which would encode an unsatisfiable
    /// inequality; rejected rather than silently producing a NO instance.
    InputHasLoop { v: usize },
    /// An exhaustive oracle was asked to search beyond its size guard.
    SizeGuard { what: &'static str, limit: u64, requested: u64 },
    /// An internal consistency check failed; indicates an implementation bug.
    Internal(String),
}

impl Error {
    /// True for errors that reject a call because its precondition does not
    /// hold, as opposed to internal failures.
    pub fn is_refusal(&self) -> bool {
        !matches!(self, Error::Internal(_))
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::PermutableTriple { u, v, w } => {
                write!(f, "template has a permutable triple ({u}, {v}, {w}); no conservative majority exists")
            }
            Error::NoWeakDistinguisher { u, v, w } => {
                write!(f, "no weak distinguisher among tied values at triple ({u}, {v}, {w}); template contains a DAT")
            }
            Error::NotMinOrdering => write!(f, "supplied order is not a min-ordering"),
            Error::NotMajority => {
                write!(f, "supplied table is not a conservative majority polymorphism")
            }
            Error::ComponentNotSymmetric => {
                write!(f, "witness component is not symmetric; build the Q gadget instead")
            }
            Error::ComponentSymmetric => {
                write!(f, "witness component is symmetric; build chooser gadgets instead")
            }
            Error::InputNotSymmetric { u, v } => {
                write!(f, "input graph has arc ({u}, {v}) without its reverse; expected a symmetric digraph")
            }
            Error::InputHasLoop { v } => {
                write!(f, "input graph has a loop at {v}; refusing to encode x != x")
            }
            Error::SizeGuard { what, limit, requested } => {
                write!(f, "{what}: size guard exceeded ({requested} > {limit})")
            }
            Error::Internal(msg) => write!(f, "internal verification failure: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
