//! Finite lattice-ordered semigroups (le-semigroups).
//!
//! A finite lattice with an associative multiplication that is monotone
//! and distributes over binary joins on both sides. The crate validates
//! such structures, computes the ideal closure `t(x)`, the 𝒥-classes it
//! induces, the semilattice-of-classes decomposition, machine-checks a
//! fixed list of statements about them, and enumerates every structure of
//! small order to search for counterexamples.

pub mod canonical;
pub mod config;
pub mod corpus;
pub mod decomposition;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod green;
pub mod hunt;
pub mod ideals;
pub mod lattice;
pub mod report;
pub mod semigroup;
pub mod theorems;

pub use canonical::{canonical_key, CanonicalKey};
pub use decomposition::{check_decomposition, DecompositionReport};
pub use enumerate::{enumerate_lattices, enumerate_le_semigroups, Dedupe, EnumerationTask};
pub use error::{Error, Result};
pub use format::{
    parse_structure, read_structure, serialize_structure, write_structure, StructureDocument,
};
pub use green::{down_set, j_classes, relative_top_class, JClass, JClassification};
pub use hunt::{hunt, Constraint};
pub use ideals::{ideal_closure, structure_flags, PropertyReport};
pub use lattice::{build_lattice, FiniteLattice};
pub use report::{emit_report, AnalysisDocument, Mode};
pub use semigroup::{build_le_semigroup, ElementId, LeSemigroup, PoeView};
pub use theorems::{check_all, check_theorem, Status, TheoremId, TheoremReport};
