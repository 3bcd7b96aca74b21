//! Eigenvalue localization for matrices with constant row sum, and
//! closed-form bounds on the adjacency, normalized-adjacency and Laplacian
//! spectra of simple graphs.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is a pure
//! function over immutable inputs; file formats and the command line live
//! in the `specbound-cli` crate.
//!
//! * [`graph`]: simple undirected graphs, generators, invariants and the
//!   three graph matrices.
//! * [`matrix`]: dense complex matrices, row sums and deflation.
//! * [`region`]: Geršgorin, Brauer–Cassini and the refined constant-row-sum
//!   inclusion regions, with membership and real-axis sections.
//! * [`bounds`]: the closed-form eigenvalue bounds and report assembly.
//! * [`oracle`]: reference eigensolvers used to check everything else.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod graph;
pub mod matrix;
pub mod oracle;
pub mod poly;
pub mod region;
pub mod section;

pub use num_complex::Complex64;

pub use bounds::{
    bounds_report, BoundError, BoundInterval, BoundReport, Mode, Target, Theorem, TraceStats,
};
pub use graph::{Family, Graph, GraphError, GraphMatrixKind, StructureReport};
pub use matrix::{ComplexMatrix, MatrixError};
pub use oracle::{OracleError, Spectrum};
pub use region::{CassiniOval, Disk, Region};
pub use section::RealSection;
