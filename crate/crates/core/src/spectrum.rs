//! Exact spectra of abelian Cayley graphs via characters.
//!
//! Every character `psi` of an abelian group is an eigenvector of `X(G, C)`
//! with eigenvalue `psi(C) = sum_{c in C} psi(c)`, and these account for the
//! whole spectrum. Eigenvalues are grouped by exact cyclotomic equality.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::cyclotomic::CyclotomicInteger;
use crate::error::Result;
use crate::graph::CayleyGraph;
use crate::group::CharacterIndex;
use crate::limits::Limits;
use crate::wht::wht_spectrum_with;

/// One eigenvalue with the characters (by rank) that realize it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumEntry {
    pub eigenvalue: CyclotomicInteger,
    /// Ranks of the character indices, ascending.
    pub characters: Vec<usize>,
}

impl SpectrumEntry {
    pub fn multiplicity(&self) -> usize {
        self.characters.len()
    }
}

/// Distinct eigenvalues in canonical order (rationals ascending first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumTable {
    entries: Vec<SpectrumEntry>,
}

impl SpectrumTable {
    fn from_values(values: Vec<CyclotomicInteger>) -> Self {
        let mut slots: HashMap<(u64, Vec<i64>), usize> = HashMap::new();
        let mut entries: Vec<SpectrumEntry> = Vec::new();
        for (rank, value) in values.into_iter().enumerate() {
            let key = (value.conductor(), value.coeffs().to_vec());
            match slots.get(&key) {
                Some(&i) => entries[i].characters.push(rank),
                None => {
                    slots.insert(key, entries.len());
                    entries.push(SpectrumEntry {
                        eigenvalue: value,
                        characters: vec![rank],
                    });
                }
            }
        }
        entries.sort_by(|a, b| a.eigenvalue.cmp_canonical(&b.eigenvalue));
        Self { entries }
    }

    /// Groups integer eigenvalues indexed by character rank, as produced by
    /// [`crate::wht_spectrum`].
    pub fn from_integer_eigenvalues(values: &[i64]) -> Self {
        Self::from_values(
            values
                .iter()
                .map(|&v| CyclotomicInteger::from_integer(v))
                .collect(),
        )
    }

    pub fn entries(&self) -> &[SpectrumEntry] {
        &self.entries
    }

    /// Number of distinct eigenvalues.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total_multiplicity(&self) -> usize {
        self.entries.iter().map(SpectrumEntry::multiplicity).sum()
    }

    pub fn max_multiplicity(&self) -> usize {
        self.entries
            .iter()
            .map(SpectrumEntry::multiplicity)
            .max()
            .unwrap_or(0)
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        self.entries
            .iter()
            .map(SpectrumEntry::multiplicity)
            .collect()
    }

    /// `(eigenvalue, multiplicity)` pairs when every eigenvalue is rational.
    pub fn integer_spectrum(&self) -> Result<Vec<(i64, usize)>> {
        self.entries
            .iter()
            .map(|e| Ok((e.eigenvalue.as_integer()?, e.multiplicity())))
            .collect()
    }
}

/// Largest eigenvalue multiplicity in `table`.
pub fn max_multiplicity(table: &SpectrumTable) -> usize {
    table.max_multiplicity()
}

/// The eigenvalue `psi_a(C)` of the character indexed by `a`.
pub fn eigenvalue_for_character(x: &CayleyGraph, a: &CharacterIndex) -> Result<CyclotomicInteger> {
    let g = x.group();
    g.check(a)?;
    let n = g.exponent();
    let mut counts = vec![0i64; n as usize];
    for c in x.connection_set().elements() {
        counts[g.char_exponent(a, c) as usize] += 1;
    }
    Ok(CyclotomicInteger::from_exponent_counts(n, &counts))
}

/// All eigenvalues with multiplicities, by evaluating every character.
pub fn spectrum(x: &CayleyGraph) -> Result<SpectrumTable> {
    spectrum_with(x, &Limits::default())
}

pub fn spectrum_with(x: &CayleyGraph, limits: &Limits) -> Result<SpectrumTable> {
    limits.check_enumeration(x.vertex_count())?;
    let g = x.group();
    let order = x.vertex_count() as usize;
    let values: Vec<CyclotomicInteger> = if g.is_cubelike() {
        // psi_a(c) = (-1)^popcount(a & c) on ranks
        let conn = x.connection_ranks();
        let degree = conn.len() as i64;
        (0..order)
            .into_par_iter()
            .map(|a| {
                let odd = conn
                    .iter()
                    .filter(|&&c| (a & c).count_ones() % 2 == 1)
                    .count() as i64;
                CyclotomicInteger::from_integer(degree - 2 * odd)
            })
            .collect()
    } else {
        (0..order)
            .into_par_iter()
            .map(|r| eigenvalue_for_character(x, &g.element_at(r)))
            .collect::<Result<_>>()?
    };
    Ok(SpectrumTable::from_values(values))
}

/// Checks `sum_r (n - 2r)^2 m_r = 2^d n` for a cubelike graph of degree `n`.
pub fn check_cube_identity(x: &CayleyGraph) -> Result<bool> {
    let eigenvalues = wht_spectrum_with(x, &Limits::default())?;
    let lhs: i128 = eigenvalues.iter().map(|&v| (v as i128) * (v as i128)).sum();
    let rhs = x.vertex_count() as i128 * x.degree() as i128;
    Ok(lhs == rhs)
}
