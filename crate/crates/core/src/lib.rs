//! Exact classical Schur–Weyl transform.
//!
//! Amplitudes live in [`Radical`], a ring of rational combinations of square roots, so
//! every state, matrix and check is computed without floating point.

pub mod amplitude;
pub mod branching;
pub mod checks;
pub mod error;
pub mod exec;
pub mod graph;
pub mod json;
pub mod radical;
pub mod tableaux;
pub mod transform;

pub use amplitude::{louck_amplitude, pattern_amplitude_d2, AmplitudeEngine, EdgeAmplitudes};
pub use branching::{
    branch_down, branch_down_state, branch_up, branch_up_state, DownBranch, HybridState, SchurWeylState,
    SchurWeylTriplet,
};
pub use error::{AmplitudeError, TableauError, TransformError};
pub use exec::{Config, Execution, DEFAULT_SIZE_BOUND};
pub use graph::{SwyEdge, SwyGraph, SwyVertex};
pub use radical::{Radical, Rational};
pub use tableaux::{GrowthPath, GtPattern, Partition, StandardYoungTableau, WeylTableau};
pub use transform::{
    decode, dimension_check, encode, schur_matrix, verify_unitary, ComputationalState, ExactSparseMatrix,
    SchurBasisIndex,
};
