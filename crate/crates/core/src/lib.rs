//! Toolkit for the uncrossed number of graphs.
//!
//! A collection of drawings of a graph is *uncrossed* when every edge is free of
//! crossings in at least one of the drawings; the uncrossed number `unc(G)` is the
//! size of the smallest such collection. This crate bundles
//!
//! * closed-form values and lower bounds ([`formulas`]),
//! * constructive uncrossed collections for complete bipartite graphs
//!   ([`constructions`]),
//! * a combinatorial certificate model with a verifier ([`certify`]),
//! * an exhaustive oracle for tiny graphs ([`oracle`]),
//! * generators for the two hardness reductions ([`reductions`]).
//!
//! Drawings are represented combinatorially: a [`embedding::PlaneDrawing`] is the
//! uncrossed part of a drawing, stored as a rotation system over a spanning
//! connected subgraph. It is admissible when it is planar and the endpoints of every
//! remaining host edge share a face; such a drawing extends to a drawing of the whole
//! host in which the drawn edges stay uncrossed.

pub mod certify;
pub mod constructions;
pub mod embedding;
pub mod formulas;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod reductions;

pub use certify::{verify_certificate, verify_drawing, UncrossedCertificate};
pub use embedding::{Dart, Face, PlaneDrawing, RotationSystem};
pub use formulas::BoundReport;
pub use graph::{Color, EdgeSet, Graph, GraphError};
