//! Exact combinatorics for the endomorphism semiring of a finite chain.
//!
//! * [`endo`]: endomorphisms as function tables, vertex sets and simplices,
//!   with pointwise join as addition and left-to-right composition as product.
//! * [`runs`]: run-length forms and the addition and product formulas on
//!   multiplicities.
//! * [`projection`]: projections onto sub-simplices, the sets `S`, `R`, `D`,
//!   and the Leibniz check.
//! * [`enumeration`]: simplex and subset enumeration, Catalan numbers, counts.
//! * [`verify`]: exhaustive claim verification with machine-readable reports.

pub mod endo;
pub mod enumeration;
pub mod error;
pub mod projection;
pub mod runs;
pub mod verify;

pub use endo::{Endo, Point, SimplexSpec, VertexSet};
pub use enumeration::{
    binomial, catalan, count, enumerate_simplex, enumerate_subset, simplex_size, SimplexIter,
    SubsetSelector,
};
pub use error::{ChainError, Result};
pub use projection::{project_then_project, LeibnizOutcome, Membership, ProjectionSpec};
pub use runs::{
    add_via_prefix_mins, compose_via_runs, composition_partition, CompositionPartition,
    RunLengthForm,
};
pub use verify::{
    ideal_check, verify, verify_all, Bounds, Claim, IdealSide, VerificationReport, VerifyOptions,
    VertexFilter, Witness,
};
