//! Walsh-Hadamard transform, the character transform of `Z_2^d`.
//!
//! For a cubelike graph the transform of the indicator vector of `C` is the
//! vector of eigenvalues: entry `a` is `sum_{c in C} (-1)^(a.c)`.

use std::ops::{Add, Sub};

use crate::error::Result;
use crate::graph::CayleyGraph;
use crate::limits::Limits;

/// In-place unnormalized Walsh-Hadamard transform. `data.len()` must be a
/// power of two. Output index `a` holds `sum_x (-1)^popcount(a & x) data[x]`.
pub fn fwht<T>(data: &mut [T])
where
    T: Copy + Add<Output = T> + Sub<Output = T>,
{
    let n = data.len();
    assert!(n.is_power_of_two(), "length {n} is not a power of two");
    let mut half = 1;
    while half < n {
        for block in data.chunks_exact_mut(2 * half) {
            let (lo, hi) = block.split_at_mut(half);
            for (x, y) in lo.iter_mut().zip(hi.iter_mut()) {
                let (a, b) = (*x, *y);
                *x = a + b;
                *y = a - b;
            }
        }
        half *= 2;
    }
}

/// Eigenvalues of a cubelike graph indexed by character rank, in
/// `O(2^d d)` integer operations.
pub fn wht_spectrum(x: &CayleyGraph) -> Result<Vec<i64>> {
    wht_spectrum_with(x, &Limits::default())
}

pub fn wht_spectrum_with(x: &CayleyGraph, limits: &Limits) -> Result<Vec<i64>> {
    x.group().require_cubelike()?;
    limits.check_enumeration(x.vertex_count())?;
    let mut data = vec![0i64; x.vertex_count() as usize];
    for r in x.connection_ranks() {
        data[r] = 1;
    }
    fwht(&mut data);
    Ok(data)
}
