//! Exact combinatorics of Bruhat lower intervals in crystallographic
//! Coxeter groups.
//!
//! The crate decomposes a lower interval `B(w) = [e, w]` into two-sided
//! Bruhat cosets `W_{D_L(w)} u W_{D_R(w)}`, builds the quotient lower
//! interval and quotient Bruhat graph, and ships a verification lab that
//! checks the structural theorems about them exhaustively on small groups.
//!
//! Two backends are provided: permutations for type `A_n`, and integer
//! matrices acting on the root lattice for any crystallographic Coxeter
//! matrix (entries `2, 3, 4, 6, ∞`).
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bits;
pub mod bruhat;
pub mod coset;
pub mod element;
pub mod error;
pub mod lab;
mod linalg;
pub mod poset;
pub mod quotient;
pub mod system;
pub mod words;

pub use bits::{BitMatrix, GeneratorSet};
pub use bruhat::{
    bruhat_leq, bruhat_leq_dot, interval_slice, lower_interval, IntervalSlice, LowerInterval,
};
pub use coset::{
    coset, critical_set, mid_side, min_set, partition, project_down, project_up, same_coset,
    BruhatCoset, Partition,
};
pub use element::{Element, Generator, Side, Word};
pub use error::{Error, Result};
pub use poset::{check_graded, isomorphism, GradedFailure, PosetReport, Relation};
pub use quotient::{
    check_almost_faithful, check_faithful, is_separated, poset_isomorphic, quotient_graph_check,
    quotient_interval, GraphCheck, QuotientInterval,
};
pub use system::{make_system, Backend, CoxeterMatrix, CoxeterSystem, SystemDescriptor, INFINITY};
pub use words::ParabolicFactors;
