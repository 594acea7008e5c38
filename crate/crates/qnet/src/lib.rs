//! Exact simulation of distributed two-qubit gates over the butterfly network.
//!
//! The butterfly network connects two input nodes `A1`, `A2` to two output
//! nodes `B1`, `B2` through relay nodes `C1`, `C2`, with seven directed
//! single-use channels `D1`, `D2`, `E1`, `E2`, `F`, `G1`, `G2`. Each channel
//! is typed as either a 1-qubit quantum channel or a k-bit classical channel,
//! and the middle channel `F` is the bottleneck.
//!
//! This crate provides:
//!
//! * [`quantum`] — an exact statevector simulator over named qubits, with
//!   Bell and computational measurements, partial trace, and Schmidt
//!   analysis of states and operators;
//! * [`net`] — the network model: typed topologies, node-locality
//!   enforcement, and a resource ledger counting ebits and per-channel use;
//! * [`protocols`] — executable node-local schedules implementing a swap
//!   (2 ebits), any controlled unitary (0 ebits), controlled traceless
//!   unitaries over a restricted network (1 ebit), and arbitrary Clifford
//!   gates (2 ebits), each verified branch-by-branch against direct gate
//!   application;
//! * [`analysis`] — gate classification by entangling Schmidt rank,
//!   controlled-gate decomposition, Pauli conjugation, channel-budget
//!   feasibility rules, and a rank-monotonicity probe for local channels.

pub mod analysis;
pub mod linalg;
pub mod net;
pub mod protocols;
pub mod quantum;
pub mod random;
pub mod tol;

/// Seeded RNG used for all sampled measurement outcomes and random inputs.
pub type SimRng = rand_chacha::ChaCha8Rng;

/// Build the crate-wide RNG from a seed.
pub fn seeded_rng(seed: u64) -> SimRng {
    use rand::SeedableRng;
    SimRng::seed_from_u64(seed)
}
