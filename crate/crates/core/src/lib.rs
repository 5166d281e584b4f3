//! Exact combinatorics of musical icosahedra.
//!
//! A *musical icosahedron* is a bijection between the 12 pitch classes and the
//! 12 vertices of the regular icosahedron. This crate models the icosahedron
//! graph and its full 120-element symmetry group, enumerates every assignment
//! satisfying a set of neighboring constraints (consecutive scale tones must
//! land on graph edges), classifies the twelve hexagon-symmetric assignment
//! types, and mechanically verifies the golden-triangle/gnomon theorems and
//! duality relations those types carry, together with the generalized triad
//! and scale families they generate.
//!
//! Everything in here is integer combinatorics on fixed finite domains; there
//! is no floating point and no I/O. The companion CLI crate layers
//! serialization and rendering on top.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod assignment;
pub mod generalize;
pub mod polyhedron;
pub mod search;
pub mod theorems;
pub mod tones;

pub use assignment::{Assignment, Figure, TypeFamily, TypeLabel};
pub use polyhedron::{ChordKind, IcosaGraph, SymmetryGroup, SymmetryOp, TriangleKind, VertexId};
pub use search::ReferenceTypes;
pub use theorems::{CheckResult, Context, VerificationReport};
pub use tones::Tone;
