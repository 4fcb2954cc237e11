//! Exact-rational tensor calculus on frame-homogeneous almost contact metric
//! manifolds, with a solver for the conformal η-Einstein soliton equation.
//!
//! A manifold is given by a constant metric, structure constants, φ and ξ in
//! a global frame. Every derived quantity is a constant-coefficient table of
//! rationals, so all identities are decided by exact equality.

#![allow(clippy::needless_range_loop)] // index loops mirror the tensor formulas

pub mod catalog;
pub mod checks;
pub mod error;
pub mod geometry;
pub mod linalg;
pub mod manifold;
pub mod report;
pub mod scalar;
pub mod soliton;
pub mod synthetic;
pub mod tensor;
pub mod verify;

pub use checks::{CheckRecord, Status, VerificationReport, Witness};
pub use error::{Error, Result};
pub use geometry::{
    koszul_connection, ricci_and_scalar, riemann_tensor, ConnectionCoefficients, CurvaturePackage, DerivativePackage,
    Geometry,
};
pub use linalg::{solve_linear_exact, spd_check, LinearSolution, SpdFailure};
pub use manifold::{parse_spec, verify_almost_contact, FrameManifoldSpec, StructureConstants};
pub use scalar::{exact_add, exact_div, exact_mul, Scalar};
pub use soliton::{
    check_scalar_relation, classify, eta_einstein_decompose, parallel_tensor_reconstruct, soliton_residual,
    solve_soliton_constants, ClassificationReport, EtaEinsteinDecomposition, SolitonParameters, SolitonSolution,
    SolveOutcome, Variant,
};
pub use tensor::{Bilinear02, Endomorphism11, FrameVector, OneForm, Tensor03, Tensor12, Tensor13};
pub use verify::{full_verification, is_kenmotsu, verify_derived_identities, verify_kenmotsu};
