//! Exact statevector simulation over named qubits.
//!
//! States hold up to ~8 qubits. Amplitudes are indexed with the first
//! registered qubit as the most significant bit, but every operation
//! addresses qubits by identifier, so callers never depend on the internal
//! ordering. Equality of states is always up to a global phase via
//! [`StateVector::fidelity`].

pub mod density;
pub mod gates;
pub mod pauli;
pub mod schmidt;
pub mod state;
pub mod unitary;

pub use density::DensityMatrix;
pub use pauli::{Pauli, PauliString};
pub use schmidt::{operator_schmidt, SchmidtDecomposition};
pub use state::{qid, BellMeasurement, Init, QubitId, StateVector, ZMeasurement};
pub use unitary::UnitaryMatrix;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum QuantumError {
    #[error("duplicate qubit id `{0}`")]
    DuplicateQubit(QubitId),

    #[error("unknown qubit id `{0}`")]
    UnknownQubit(QubitId),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is not unitary (defect {defect:.3e})")]
    NotUnitary { defect: f64 },

    #[error("state norm {norm} is not 1")]
    NotNormalized { norm: f64 },

    #[error("forced outcome {outcome} has probability {probability:.3e} (numerically zero)")]
    ZeroProbabilityOutcome { outcome: String, probability: f64 },

    #[error("states are over different qubit sets")]
    QubitSetMismatch,

    #[error("cut must be a nonempty proper subset of the qubits")]
    InvalidCut,

    #[error("matrix is not a density matrix: {0}")]
    NotDensity(String),

    #[error("matrix is numerically zero")]
    ZeroMatrix,

    #[error("supported matrix dimensions are 2 and 4, got {0}")]
    UnsupportedDimension(usize),

    #[error("json: {0}")]
    Json(String),
}
