//! Verification workbench for finite-dimensional real *-algebras and
//! quantum-logic lattices.
//!
//! The algebraic side covers structure-constant algebras with an involution
//! ([`star_algebra`]), states, the state-space norm and the GNS
//! representation ([`states_norms`]), numerical Wedderburn–Artin block
//! decomposition ([`wedderburn`]) and the tensor-product observable deficit
//! ([`locality`]). The order-theoretic side covers finite ortholattices
//! ([`qlogic`]) and subspace lattices of `K^n` for `K = ℝ, ℂ, ℍ`
//! ([`hilbert_lattice`]).

pub mod cli;
pub mod error;
pub mod fixtures;
pub mod hilbert_lattice;
pub mod linalg;
pub mod locality;
pub mod qlogic;
pub mod report;
pub mod sampling;
pub mod scalars;
pub mod star_algebra;
pub mod states_norms;
pub mod wedderburn;

pub use error::{Error, Result};
pub use report::{AxiomReport, CheckResult, VerificationReport, Witness};
pub use scalars::{Quaternion, Scalar, ScalarRing};
pub use star_algebra::{AlgebraElement, MatrixBlock, StarAlgebra};
