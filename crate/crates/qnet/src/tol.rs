//! Numerical tolerances.
//!
//! All state dimensions in this crate are at most 256 and all arithmetic is
//! exact up to f64 rounding, so the thresholds are tight.

/// Norm, unitarity, hermiticity and probability checks.
pub const EXACT: f64 = 1e-9;

/// Rank counting threshold for (normalized) Schmidt coefficients.
pub const RANK: f64 = 1e-7;

/// Coefficients between [`RANK`] and this bound sit too close to a smaller
/// rank class and are reported with a boundary warning.
pub const RANK_WARN: f64 = 1e-6;

/// Forcing a measurement outcome below this probability is an error.
pub const MIN_FORCED_PROB: f64 = 1e-12;

/// Entrywise tolerance for decomposition reconstruction checks.
pub const RECONSTRUCT: f64 = 1e-8;

/// Matching tolerance when identifying a conjugated Pauli operator.
pub const PAULI_MATCH: f64 = 1e-8;

/// Canonical two-qubit invariants that must vanish for controlled gates.
pub const WEYL: f64 = 1e-7;

/// Convergence threshold for Jacobi sweeps, relative to matrix scale.
pub const JACOBI: f64 = 1e-14;
