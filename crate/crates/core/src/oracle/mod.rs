//! Independent checks of the character-based results.
//!
//! [`idempotent`] decides strong cospectrality numerically from the spectral
//! idempotents of the dense adjacency matrix; [`pst`] computes exact
//! transition amplitudes of the continuous quantum walk at time `pi/2` on
//! cubelike graphs.

pub mod idempotent;
pub mod pst;

pub use idempotent::{
    adjacency_matrix, adjacency_matrix_with, idempotent_strong_cospectrality, oracle_agreement,
    oracle_agreement_with, SpectralDecomposition, DEFAULT_TOLERANCE,
};
pub use pst::{
    is_perfect_state_transfer, pst_amplitude_exact, pst_amplitude_exact_with, pst_amplitudes_exact,
    GaussianInteger,
};
