//! Strongly orthogonal subsets of root systems and the extremal set-pair
//! problem they induce in type A.
//!
//! The crate is organised bottom-up:
//!
//! * [`rootsys`] builds root systems in standard coordinates and checks the
//!   root system axioms.
//! * [`sos`] provides the strong orthogonality predicate, enumeration of
//!   strongly orthogonal subsets and type A signatures.
//! * [`clique`] is an exact branch-and-bound maximum clique solver over
//!   bitset adjacency, shared by the other modules.
//! * [`cliquesearch`] holds the difference graph on signatures, SOS-clique
//!   and sunflower verification, exact `mu_k(A_l)` search and bound formulas.
//! * [`constructions`] builds explicit families: sunflowers, projective plane
//!   cliques over GF(q) and literal fixture matrices.
//! * [`certificate`] is the canonical JSON certificate format.

pub mod bitset;
pub mod certificate;
pub mod clique;
pub mod cliquesearch;
pub mod constructions;
mod error;
pub mod rootsys;
pub mod sos;

pub use certificate::Certificate;
pub use clique::{max_clique, BitGraph, CliqueResult, SearchOptions};
pub use cliquesearch::{CliqueFamily, DiffGraph, Membership, Verdict};
pub use error::{Error, Result};
pub use rootsys::{Family, Root, RootSystem};
pub use sos::{SOSet, Signature};
