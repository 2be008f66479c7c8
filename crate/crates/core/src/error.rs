use thiserror::Error;

use crate::semigroup::ElementId;

/// Which partial-order axiom failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderAxiom {
    Reflexivity,
    Antisymmetry,
    Transitivity,
}

/// Side of a product on which an axiom failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::Left => f.write_str("left"),
            Side::Right => f.write_str("right"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order of {n} exceeds the configured maximum {max}")]
    OrderTooLarge { n: usize, max: usize },

    #[error("empty carrier")]
    EmptyCarrier,

    #[error("relation is not square: row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },

    #[error("table has {rows} rows, expected {n}")]
    RowCount { rows: usize, n: usize },

    #[error("not a partial order: {axiom:?} fails at ({}, {}, {})", .witness.0, .witness.1, .witness.2)]
    NotPartialOrder {
        axiom: OrderAxiom,
        witness: (ElementId, ElementId, ElementId),
    },

    #[error("not a lattice: {} and {} have no {}", .pair.0, .pair.1, if *.missing_join { "least upper bound" } else { "greatest lower bound" })]
    NotLattice {
        pair: (ElementId, ElementId),
        missing_join: bool,
    },

    #[error("multiplication entry ({row}, {col}) = {value} is outside the carrier of size {n}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        n: usize,
    },

    #[error("not associative: ({0}*{1})*{2} != {0}*({1}*{2})", .witness.0, .witness.1, .witness.2)]
    NotAssociative {
        witness: (ElementId, ElementId, ElementId),
    },

    #[error("not {side}-distributive over join at ({}, {}, {})", .witness.0, .witness.1, .witness.2)]
    NotDistributive {
        witness: (ElementId, ElementId, ElementId),
        side: Side,
    },

    #[error("not compatible with the order: {} <= {} but {side} multiplication by {} breaks it", .pair.0, .pair.1, .multiplier)]
    NotCompatible {
        pair: (ElementId, ElementId),
        multiplier: ElementId,
        side: Side,
    },

    #[error("{0} is not an ideal element")]
    NotIdealElement(ElementId),

    #[error("element {index} is outside the carrier of size {n}")]
    ElementOutOfRange { index: usize, n: usize },

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),

    #[error("unknown constraint `{0}`")]
    UnknownConstraint(String),

    #[error("constraint `{0}` is both required and forbidden")]
    ConflictingConstraint(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("dimension mismatch at line {line}: {message}")]
    DimensionMismatch { line: usize, message: String },

    #[error("index out of range at line {line}, column {column}: {value} >= {n}")]
    IndexOutOfRange {
        line: usize,
        column: usize,
        value: usize,
        n: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
