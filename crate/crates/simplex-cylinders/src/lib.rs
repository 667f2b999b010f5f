//! Extreme cylinders of simplices.
//!
//! A cylinder in `E^n` is the boundary of `line + r * unit_ball`; it
//! *circumscribes* a simplex when all `n + 1` vertices lie on the surface and
//! *encloses* it when the simplex fits inside. This crate computes
//!
//! * all locally extreme circumscribing cylinders of a simplex in any
//!   dimension `n >= 2`, by multi-start Newton on the Lagrange system of a
//!   polynomial program in the axis direction ([`solver`]),
//! * the smallest enclosing cylinder of a tetrahedron, by combining the
//!   circumscribing optimum with three restricted-axis candidate families
//!   ([`enclosing`]), cross-checked against a direction-sampling oracle,
//! * closed forms and exact solution censuses for special inputs: equifacial
//!   tetrahedra ([`special_e3`]), regular simplices via symmetric polynomials
//!   ([`regular`]), and the quartic-minimization system on the sphere slice
//!   whose published solution count omitted a family ([`weissbach`]).
//!
//! Every example under `examples/` exercises one capability end to end; the
//! `simplex-cylinders` binary exposes the same pipelines as subcommands.

pub mod cli;
pub mod enclosing;
pub mod formulation;
pub mod geometry;
pub mod io;
pub mod minidisk;
pub mod polyroots;
pub mod regular;
pub mod solver;
pub mod special_e3;
pub mod weissbach;

pub use enclosing::{oracle_min_enclosing, projection_radius, smallest_enclosing_cylinder, smallest_enclosing_cylinder_from_points, EncloseConfig, EnclosingResult, OracleConfig, Witness};
pub use formulation::{bezout_bounds, stirling2, CircumFormulation};
pub use geometry::{AxisLine, Cylinder, SimplexN};
pub use solver::{CriticalKind, CriticalPoint, SolverConfig};

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// The vertex-difference matrix is numerically singular: the input
    /// simplex fails the affine-independence test
    /// `|det M| >= 1e-10 * (max edge length)^n`.
    #[error("singular vertex matrix (|det| = {det:.3e}, tolerance {tol:.3e}): simplex is degenerate")]
    SingularMatrix { det: f64, tol: f64 },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("no critical point found: even edge-direction seeds failed to converge")]
    NoCriticalPointFound,

    #[error("empty input")]
    EmptyInput,

    #[error("simplex is not equifacial: {0}")]
    NotEquifacial(String),

    #[error("dimension {0} above the supported enumeration range")]
    DimensionTooLarge(usize),

    #[error("candidate family is geometrically void: {0}")]
    EmptyFamily(String),

    #[error("schema error: {0}")]
    Schema(String),

    #[error("shape error: {0}")]
    Shape(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
