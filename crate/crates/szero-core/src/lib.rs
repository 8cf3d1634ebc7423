//! Verification engine for semiorthogonal decompositions arising from
//! categorical actions of the shifted q=0 affine algebra.
//!
//! Two independent routes are implemented and cross-checked:
//!
//! * a symbolic rewriting engine ([`algebra`]) that simplifies words in the
//!   categorical generators E, F, Ψ± using only the defining adjunctions,
//!   Ψ-commutations and exact triangles, producing replayable certificates;
//! * a geometric oracle ([`bott`], [`ktheory`]) that evaluates the same
//!   words on the K-theory of Grassmannians through Borel-Weil-Bott and
//!   Littlewood-Richardson calculus, with exact integer arithmetic.
//!
//! [`sod`] drives the engine over full collections and assembles
//! certificates; [`report`] serializes them deterministically.

pub mod algebra;
pub mod bott;
pub mod ktheory;
pub mod partitions;
pub mod report;
pub mod sod;
