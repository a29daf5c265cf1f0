//! Exact determinants of weighted three-step lattice path generating
//! functions.
//!
//! Lattice paths with steps (1,1), (1,0), (1,-1) are weighted 1, x+y, x*y.
//! The Hankel-type determinants of their generating functions, and of the
//! shifted, summed, and t-deformed variants, all evaluate to compact closed
//! forms over residue classes of the matrix order. This crate computes both
//! sides exactly - sparse integer polynomials on one side, case-resolved
//! closed forms on the other - and verifies them against each other, along
//! with the row-operation proofs and a brute-force non-intersecting-path
//! oracle.
//!
//! Entry points:
//! - [`paths`]: generating functions P_n(l,k) by dynamic programming,
//!   closed sums, and specialized integer counts (Catalan, Motzkin, central
//!   binomial), plus exhaustive path enumeration.
//! - [`lgv`]: signed sums over non-intersecting path families.
//! - [`matrix`]: fraction-free determinants over any exact ring and
//!   checkerboard factorizations.
//! - [`families`]: builders for every matrix family in the catalog.
//! - [`closedform`]: the case-resolved right-hand sides.
//! - [`proofcheck`]: row-operation replays, permutation inversion counts,
//!   and the determinant reduction identities.
//! - [`verify`]: grid sweeps, the conjecture scanner, the classic
//!   Catalan/Motzkin suite.
//! - [`cli`]: the `pathdet` command-line tool.
//!
//! The examples directory walks through each capability; start with
//! `cargo run --example pgf_basics`.

pub mod binomial;
pub mod cli;
pub mod closedform;
pub mod error;
pub mod families;
pub mod lgv;
pub mod matrix;
pub mod mpoly;
pub mod paths;
pub mod proofcheck;
pub mod report;
pub mod rings;
pub mod verify;

pub use error::{Error, Result};
pub use families::{build_matrix, BuiltMatrix, FamilyId, MatrixFamily};
pub use mpoly::{MPoly, Monomial};
pub use paths::{pgf_closed, pgf_dp, pgf_special, PGFQuery, SpecKind};
pub use rings::{EisenInt, GaussInt, Integer, Ring, RingValue};
