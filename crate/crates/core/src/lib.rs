//! Exact spectra and strong cospectrality for Cayley graphs of finite
//! abelian groups.
//!
//! Eigenvalues are computed exactly as character sums in cyclotomic
//! integers; the vertices strongly cospectral to the identity are read off
//! the spectrum by sign comparisons at involutions. The [`oracle`] module
//! re-derives the same answers numerically, and [`constructions`] builds
//! the graph families whose strongly cospectral sets have size four.
//!
//! ```
//! use cospectra::{appendix_graph, strongly_cospectral_to_zero};
//!
//! let x = appendix_graph(1).unwrap();
//! let h = strongly_cospectral_to_zero(&x).unwrap();
//! assert_eq!(h.len(), 4);
//! ```

pub mod constructions;
pub mod cospectral;
pub mod cyclotomic;
mod error;
pub mod format;
pub mod graph;
pub mod group;
mod limits;
pub mod oracle;
pub mod parse;
pub mod spectrum;
pub mod wht;

pub use constructions::{
    appendix_catalog, appendix_graph, construct_even, construct_odd, cycle_product, hypercube,
    search_random, Construction, SearchHit,
};
pub use cospectral::{
    build_report, build_report_with, check_cubelike_bounds, check_multiplicity_bound, gf2_basis,
    pst_pair, strongly_cospectral_pair, strongly_cospectral_to_zero, verify_subgroup,
    CospectralReport, CubelikeVerdicts, Verdicts,
};
pub use cyclotomic::{cyclotomic_polynomial, CyclotomicInteger};
pub use error::{Error, Result};
pub use graph::{CayleyGraph, ConnectionSet};
pub use group::{CharacterIndex, FiniteAbelianGroup, GroupElement};
pub use limits::{Limits, MAX_VERTICES_ENV};
pub use oracle::{
    adjacency_matrix, adjacency_matrix_with, idempotent_strong_cospectrality,
    is_perfect_state_transfer, oracle_agreement, oracle_agreement_with, pst_amplitude_exact,
    pst_amplitude_exact_with, pst_amplitudes_exact, GaussianInteger, SpectralDecomposition,
    DEFAULT_TOLERANCE,
};
pub use parse::{parse_connection_set, parse_graph_spec};
pub use spectrum::{
    check_cube_identity, eigenvalue_for_character, max_multiplicity, spectrum, spectrum_with,
    SpectrumEntry, SpectrumTable,
};
pub use wht::{fwht, wht_spectrum, wht_spectrum_with};
