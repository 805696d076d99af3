//! Combinatorial data read off a long-knot diagram: the walk from the
//! basepoint, crossing signs, spans and the traversal matrix `T`, faces,
//! the Alexander incidence matrix and the winding matrix `W`.

mod alexander;
mod faces;
mod visits;
mod winding;

use thiserror::Error;

pub use alexander::{alexander_matrix, full_alexander_matrix, FullAlexanderMatrix, MarkingScheme};
pub use faces::{faces, FaceSet};
pub use visits::{sign_data, span_edges, traversal_matrix, visit_sequence, Pass, SignData, Visit, VisitSequence};
pub use winding::{face_windings, winding_matrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlanarError {
    #[error("combinatorial map has {found} faces, expected {expected}")]
    FaceCount { found: usize, expected: usize },
    #[error("region numbering: {0}")]
    RegionOrder(String),
    #[error("winding numbers about span {span} disagree across edge {edge}")]
    WindingInconsistency { span: usize, edge: usize },
    #[error("columns {a} and {b} belong to regions that share no edge")]
    NotAdjacent { a: usize, b: usize },
    #[error("column {column} out of range for {columns} columns")]
    ColumnOutOfRange { column: usize, columns: usize },
    #[error("internal consistency: {0}")]
    Internal(String),
}
