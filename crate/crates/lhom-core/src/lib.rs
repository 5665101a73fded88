//! Core machinery for the list homomorphism dichotomy on finite digraphs.
//!
//! A template digraph `H` either contains a digraph asteroidal triple (DAT),
//! in which case `LHOM(H)` is NP-complete, or it is DAT-free and `LHOM(H)` is
//! solvable in polynomial time. This crate provides:
//!
//! * digraphs, walks, and the congruence/avoidance predicates ([`digraph`],
//!   [`walk`]);
//! * the pair graph over ordered vertex pairs with its strong-component
//!   classification, and the triple graph used to recognize DATs ([`pair`],
//!   [`triple`]);
//! * synthesis of conservative polymorphisms for DAT-free templates and
//!   min-ordering search ([`poly`]);
//! * list homomorphism instances and solvers ([`instance`]);
//! * NP-hardness gadgets and the 3-colorability reduction ([`gadget`]);
//! * brute-force definitional oracles used as ground truth in tests
//!   ([`oracle`]).
//!
//! The crate is `no_std` (with `alloc`) so the algorithmic core stays free of
//! I/O; parsing, serialization and the command line live in the companion
//! `lhomkit` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bits;
pub mod digraph;
pub mod error;
pub mod gadget;
pub mod instance;
pub mod oracle;
pub mod pair;
pub mod poly;
pub mod triple;
pub mod walk;

pub use digraph::Digraph;
pub use error::Error;
pub use gadget::{build_chooser_single, build_chooser_square, build_q_gadget, reduce_3col};
pub use gadget::{DatContext, Gadget};
pub use instance::{
    arc_consistency, classify_and_solve, is_list_homomorphism, solve_backtracking,
    solve_with_majority, solve_with_min_ordering, Assignment, ClassifyReport, LhomInstance,
    SolveMethod,
};
pub use pair::{PairGraph, PairWalk, Sign};
pub use poly::{
    build_binary_f, build_majority_mu, build_ternary_g, find_min_ordering, is_distinguisher,
    is_majority_on_pair, is_semilattice_on_pair, is_weak_distinguisher, verify_binary_polymorphism,
    verify_min_ordering, verify_ternary_polymorphism, BinaryTable, Selector, TernaryTable,
};
pub use triple::{find_dat, verify_dat_witness, DatWitness, LeadWitness, TripleGraph, TripleWalk};
pub use walk::{Step, Walk};
