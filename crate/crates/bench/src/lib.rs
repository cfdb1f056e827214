//! Inputs shared by the criterion benchmarks.

use cospectra::{CayleyGraph, FiniteAbelianGroup};

/// A cubelike graph on `Z_2^d` whose connection set is every element of
/// rank `r` with `r * 2654435761 mod 2^32` below `2^31`, about half the
/// group. Deterministic so runs are comparable.
pub fn dense_cubelike(d: usize) -> CayleyGraph {
    let g = FiniteAbelianGroup::cube(d);
    let elements = (1..1usize << d)
        .filter(|&r| (r as u64).wrapping_mul(2_654_435_761) & 0xffff_ffff < 1 << 31)
        .map(|r| g.element_at(r));
    CayleyGraph::from_elements(g.clone(), elements)
        .expect("every element of Z_2^d is an involution")
}
