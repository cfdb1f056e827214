//! Exact quantum-walk amplitudes at time `pi/2` on cubelike graphs.
//!
//! With eigenvalues `lambda_a` indexed by characters,
//! `U(pi/2)_{0,g} = 2^-d sum_a i^lambda_a (-1)^(a.g)`. The sum is a Gaussian
//! integer `A_g`; there is perfect state transfer from `0` to `g` iff
//! `|A_g| = 2^d`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::error::Result;
use crate::graph::CayleyGraph;
use crate::group::GroupElement;
use crate::limits::Limits;
use crate::wht::{fwht, wht_spectrum, wht_spectrum_with};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct GaussianInteger {
    pub re: i64,
    pub im: i64,
}

impl GaussianInteger {
    pub const ZERO: Self = Self { re: 0, im: 0 };
    pub const ONE: Self = Self { re: 1, im: 0 };
    pub const I: Self = Self { re: 0, im: 1 };

    pub const fn new(re: i64, im: i64) -> Self {
        Self { re, im }
    }

    /// `i^k` for any integer `k`.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Self::ONE,
            1 => Self::I,
            2 => -Self::ONE,
            _ => -Self::I,
        }
    }

    /// `|z|^2`.
    pub fn norm_sqr(self) -> i128 {
        (self.re as i128).pow(2) + (self.im as i128).pow(2)
    }
}

impl Add for GaussianInteger {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for GaussianInteger {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.re - o.re, self.im - o.im)
    }
}

impl Neg for GaussianInteger {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl Mul for GaussianInteger {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
}

impl fmt::Display for GaussianInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im < 0 {
            write!(f, "{}-{}i", self.re, -self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

/// `A_g` for every `g`, indexed by rank.
pub fn pst_amplitudes_exact(x: &CayleyGraph) -> Result<Vec<GaussianInteger>> {
    let mut phases: Vec<GaussianInteger> = wht_spectrum(x)?
        .into_iter()
        .map(GaussianInteger::i_pow)
        .collect();
    fwht(&mut phases);
    Ok(phases)
}

/// `A_g = sum_a i^lambda_a (-1)^(a.g)`, so `U(pi/2)_{0,g} = A_g / 2^d`.
pub fn pst_amplitude_exact(x: &CayleyGraph, g: &GroupElement) -> Result<GaussianInteger> {
    pst_amplitude_exact_with(x, g, &Limits::default())
}

pub fn pst_amplitude_exact_with(
    x: &CayleyGraph,
    g: &GroupElement,
    limits: &Limits,
) -> Result<GaussianInteger> {
    let eigenvalues = wht_spectrum_with(x, limits)?;
    x.group().check(g)?;
    let gr = x.group().rank_of(g);
    Ok(eigenvalues
        .iter()
        .enumerate()
        .map(|(a, &lambda)| {
            let phase = GaussianInteger::i_pow(lambda);
            if (a & gr).count_ones().is_multiple_of(2) {
                phase
            } else {
                -phase
            }
        })
        .fold(GaussianInteger::ZERO, Add::add))
}

/// True iff `|A_g| = 2^d`.
pub fn is_perfect_state_transfer(x: &CayleyGraph, amplitude: GaussianInteger) -> bool {
    let n = x.vertex_count() as i128;
    amplitude.norm_sqr() == n * n
}
