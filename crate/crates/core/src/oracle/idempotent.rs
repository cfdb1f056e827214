use nalgebra::{DMatrix, DVector, SymmetricEigen};

use crate::cospectral::strongly_cospectral_in;
use crate::error::{Error, Result};
use crate::graph::CayleyGraph;
use crate::group::GroupElement;
use crate::limits::Limits;
use crate::spectrum::spectrum_with;

pub const DEFAULT_TOLERANCE: f64 = 1e-8;

// relative to max(1, spectral radius)
const CLUSTER_GAP: f64 = 1e-6;
const RESIDUAL_BOUND: f64 = 1e-10;

pub fn adjacency_matrix(x: &CayleyGraph) -> Result<DMatrix<f64>> {
    adjacency_matrix_with(x, &Limits::default())
}

/// Dense 0/1 adjacency matrix in rank order: entry `(g, h)` is 1 iff
/// `h - g` is in the connection set.
pub fn adjacency_matrix_with(x: &CayleyGraph, limits: &Limits) -> Result<DMatrix<f64>> {
    limits.check_matrix(x.vertex_count())?;
    let g = x.group();
    let n = x.vertex_count() as usize;
    let mut a = DMatrix::zeros(n, n);
    for (row, u) in g.elements().enumerate() {
        for c in x.connection_set().elements() {
            a[(row, g.rank_of(&g.add(&u, c)))] = 1.0;
        }
    }
    Ok(a)
}

/// Eigenspaces of a symmetric matrix, with eigenvalues closer than a small
/// relative gap merged into one space.
#[derive(Clone, Debug)]
pub struct SpectralDecomposition {
    eigenvalues: Vec<f64>,
    // orthonormal basis of each eigenspace, as columns
    bases: Vec<DMatrix<f64>>,
    scale: f64,
}

impl SpectralDecomposition {
    /// Decomposes `a`. Fails with [`Error::ClusterAmbiguity`] if a gap
    /// between consecutive eigenvalues lies in `[tol, 10 tol]` (relative),
    /// and with [`Error::EigenResidual`] if the solver is inaccurate.
    pub fn new(a: &DMatrix<f64>, tol: f64) -> Result<Self> {
        let n = a.nrows();
        let eig = SymmetricEigen::new(a.clone());
        let radius = eig.eigenvalues.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let scale = radius.max(1.0);

        for i in 0..n {
            let v = eig.eigenvectors.column(i);
            let residual = (a * v - v * eig.eigenvalues[i]).norm();
            if residual >= RESIDUAL_BOUND * scale {
                return Err(Error::EigenResidual {
                    residual,
                    bound: RESIDUAL_BOUND * scale,
                });
            }
        }

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));

        let (lower, upper) = (tol * scale, 10.0 * tol * scale);
        let mut clusters: Vec<Vec<usize>> = Vec::new();
        for (k, &i) in order.iter().enumerate() {
            if k > 0 {
                let gap = eig.eigenvalues[i] - eig.eigenvalues[order[k - 1]];
                if (lower..=upper).contains(&gap) {
                    return Err(Error::ClusterAmbiguity { gap, lower, upper });
                }
                if gap < CLUSTER_GAP * scale {
                    clusters.last_mut().unwrap().push(i);
                    continue;
                }
            }
            clusters.push(vec![i]);
        }

        let mut eigenvalues = Vec::with_capacity(clusters.len());
        let mut bases = Vec::with_capacity(clusters.len());
        for cluster in clusters {
            let mean =
                cluster.iter().map(|&i| eig.eigenvalues[i]).sum::<f64>() / cluster.len() as f64;
            let cols: Vec<DVector<f64>> = cluster
                .iter()
                .map(|&i| eig.eigenvectors.column(i).into_owned())
                .collect();
            eigenvalues.push(mean);
            bases.push(DMatrix::from_columns(&orthonormalize(cols)));
        }
        Ok(Self {
            eigenvalues,
            bases,
            scale,
        })
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// Distinct eigenvalues, ascending.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn dimension(&self, r: usize) -> usize {
        self.bases[r].ncols()
    }

    /// `max(1, ||A||_2)`.
    pub fn scale(&self) -> f64 {
        self.scale
    }

    /// The orthogonal projector onto eigenspace `r`.
    pub fn projector(&self, r: usize) -> DMatrix<f64> {
        let v = &self.bases[r];
        v * v.transpose()
    }

    /// `E_r e_u`.
    pub fn project_basis_vector(&self, r: usize, u: usize) -> DVector<f64> {
        let v = &self.bases[r];
        v * v.row(u).transpose()
    }

    /// `E_r e_u = +-E_r e_v` for every `r`, the sign free per `r`.
    pub fn strongly_cospectral(&self, u: usize, v: usize, tol: f64) -> bool {
        let bound = tol * self.scale;
        (0..self.len()).all(|r| {
            let pu = self.project_basis_vector(r, u);
            let pv = self.project_basis_vector(r, v);
            (&pu - &pv).norm().min((&pu + &pv).norm()) < bound
        })
    }
}

fn orthonormalize(mut cols: Vec<DVector<f64>>) -> Vec<DVector<f64>> {
    for i in 0..cols.len() {
        for j in 0..i {
            let proj = cols[j].dot(&cols[i]);
            let q = cols[j].clone();
            cols[i].axpy(-proj, &q, 1.0);
        }
        let norm = cols[i].norm();
        cols[i] /= norm;
    }
    cols
}

/// Numerical strong cospectrality of `u` and `v` from spectral idempotents.
pub fn idempotent_strong_cospectrality(
    x: &CayleyGraph,
    u: &GroupElement,
    v: &GroupElement,
    tol: f64,
) -> Result<bool> {
    let g = x.group();
    g.check(u)?;
    g.check(v)?;
    let dec = SpectralDecomposition::new(&adjacency_matrix(x)?, tol)?;
    Ok(dec.strongly_cospectral(g.rank_of(u), g.rank_of(v), tol))
}

/// True iff the idempotent test and the character detector agree on every
/// involution.
pub fn oracle_agreement(x: &CayleyGraph, tol: f64) -> Result<bool> {
    oracle_agreement_with(x, tol, &Limits::default())
}

pub fn oracle_agreement_with(x: &CayleyGraph, tol: f64, limits: &Limits) -> Result<bool> {
    let g = x.group();
    let dec = SpectralDecomposition::new(&adjacency_matrix_with(x, limits)?, tol)?;
    let h = strongly_cospectral_in(x, &spectrum_with(x, limits)?);
    Ok(g.involutions()
        .all(|inv| dec.strongly_cospectral(0, g.rank_of(&inv), tol) == h.contains(&inv)))
}
