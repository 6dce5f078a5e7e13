//! Exact enumeration of chromatic feature vectors for 2-trees under the
//! bichromatic triangle rule: every triangle must see exactly two colors,
//! neither monochromatic nor rainbow.
//!
//! The crate provides two independent routes to the same numbers and is
//! organized so they never share code:
//!
//! * [`spectra`] holds closed-form formulas for theta graphs (Stirling numbers),
//!   fan graphs (binomial/Stirling expansion with Fibonacci-polynomial
//!   specializations), and the classical proper-coloring baseline.
//! * [`oracle`] is brute force over all set partitions / labeled colorings of
//!   small graphs, used as ground truth for everything the closed forms claim.
//!
//! [`kernel`] holds the arbitrary-precision combinatorial tables both sides
//! of the closed forms rely on, and [`graphs`] builds the graph families and
//! enumerates small 2-trees up to isomorphism.

pub mod error;
pub mod graphs;
pub mod kernel;
pub mod oracle;
pub mod spectra;

pub use error::{Error, Result};
pub use graphs::{build_fan, build_theta, build_two_tree, TriangleGraph, TwoTreeSeq};
pub use kernel::{big_a_binet, falling_factorial, Count, KernelTables};
pub use oracle::{count_colorings, oracle_spectrum, partitions_iter, Constraint, PartitionCode};
pub use spectra::{
    classical_spectrum, eval_coloring_polynomial, fan_spectrum, theta_spectrum, Family,
    FeatureVector, Method, SpectrumReport,
};
