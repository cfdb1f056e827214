//! Explicit graph families with strongly cospectral sets of size four.
//!
//! The standard basis vector `e_i` (1-based, as usually written) is stored
//! at coordinate `i - 1`; the catalog generators `f0..f4` sit at coordinates
//! `0..4`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::cospectral::strongly_cospectral_to_zero;
use crate::error::{Error, Result};
use crate::graph::{CayleyGraph, ConnectionSet};
use crate::group::{FiniteAbelianGroup, GroupElement};
use crate::parse::parse_connection_set;

/// A constructed graph with the two generators of the size-four subgroup
/// it is built to contain.
#[derive(Clone, Debug)]
pub struct Construction {
    pub graph: CayleyGraph,
    /// `sum_{c in C} c`.
    pub sigma: GroupElement,
    /// The second generator: `e_1+e_2+e_3` for the odd family; for the even
    /// family it depends on `d + 1 mod 4`.
    pub generator: GroupElement,
}

impl Construction {
    /// `{0, p, sigma, p + sigma}` in lexicographic order.
    pub fn predicted(&self) -> Vec<GroupElement> {
        let g = self.graph.group();
        let mut set = vec![
            g.zero(),
            self.generator.clone(),
            self.sigma.clone(),
            g.add(&self.generator, &self.sigma),
        ];
        set.sort();
        set
    }
}

fn check_dimension(d: usize) -> Result<()> {
    if d < 5 || d.is_multiple_of(2) {
        return Err(Error::BadDimension(d));
    }
    Ok(())
}

// indices are 0-based coordinates
fn vector(ambient: usize, ones: &[usize]) -> GroupElement {
    let mut coords = vec![0u64; ambient];
    for &i in ones {
        coords[i] ^= 1;
    }
    FiniteAbelianGroup::cube(ambient)
        .element(coords)
        .expect("0/1 vector lies in Z_2^d")
}

/// `C1 u C2 u C3 u C4` embedded in `Z_2^ambient`.
fn odd_family(d: usize, ambient: usize) -> Vec<GroupElement> {
    let mut c = Vec::new();
    c.extend((0..d).map(|i| vector(ambient, &[i])));
    c.extend([[0, 1], [0, 2], [1, 2]].iter().map(|p| vector(ambient, p)));
    for i in 3..d {
        for j in i + 1..d {
            c.push(vector(ambient, &[i, j]));
        }
    }
    c.extend((3..d).map(|i| vector(ambient, &[0, 1, 2, i])));
    c
}

/// Degree `2d + (d^2 - 7d + 12) / 2` graph on `Z_2^d`, `d` odd and at
/// least 5.
pub fn construct_odd(d: usize) -> Result<Construction> {
    check_dimension(d)?;
    let graph = CayleyGraph::from_elements(FiniteAbelianGroup::cube(d), odd_family(d, d))?;
    let sigma = graph.connection_sum();
    Ok(Construction {
        graph,
        sigma,
        generator: vector(d, &[0, 1, 2]),
    })
}

/// The odd family for `d` lifted to `Z_2^(d+1)` and extended by `e_{d+1}`
/// and `e_1 + ... + e_d`. Takes the odd `d`, not the ambient dimension.
pub fn construct_even(d: usize) -> Result<Construction> {
    check_dimension(d)?;
    let ambient = d + 1;
    let mut c = odd_family(d, ambient);
    c.push(vector(ambient, &[d]));
    c.push(vector(ambient, &(0..d).collect::<Vec<_>>()));
    let graph = CayleyGraph::from_elements(FiniteAbelianGroup::cube(ambient), c)?;
    let sigma = graph.connection_sum();
    let generator = if ambient % 4 == 2 {
        vector(ambient, &[0, 1, 2])
    } else {
        vector(ambient, &(3..d).collect::<Vec<_>>())
    };
    Ok(Construction {
        graph,
        sigma,
        generator,
    })
}

/// `X □ C_m` as a Cayley graph of `Z_2^d x Z_m`.
pub fn cycle_product(x: &CayleyGraph, m: u64) -> Result<CayleyGraph> {
    x.group().require_cubelike()?;
    if m < 3 || m.is_multiple_of(2) {
        return Err(Error::EvenCycle(m));
    }
    let mut orders = x.group().orders().to_vec();
    orders.push(m);
    let group = FiniteAbelianGroup::new(orders)?;
    let lift = |coords: &[u64], last: u64| {
        let mut v = coords.to_vec();
        v.push(last);
        group.element(v)
    };
    let zeros = vec![0u64; x.group().rank()];
    let mut c = x
        .connection_set()
        .elements()
        .iter()
        .map(|e| lift(e.coords(), 0))
        .collect::<Result<Vec<_>>>()?;
    c.push(lift(&zeros, 1)?);
    c.push(lift(&zeros, m - 1)?);
    CayleyGraph::from_elements(group, c)
}

pub fn hypercube(d: usize) -> CayleyGraph {
    let g = FiniteAbelianGroup::cube(d);
    let basis: Vec<_> = (0..d).map(|i| g.basis(i)).collect();
    CayleyGraph::from_elements(g, basis).expect("basis vectors are involutions")
}

pub const APPENDIX_SETS: [&str; 6] = [
    "f0, f1, f2, f3, f4, f0*f4, f1*f4, f2*f4, f3*f4, f0*f1*f2*f3",
    "f0, f1, f2, f3, f4, f0*f1, f2*f3, f2*f4, f3*f4, f0*f2*f3*f4, f1*f2*f3*f4",
    "f0, f1, f2, f3, f4, f0*f4, f1*f4, f2*f3, f2*f4, f3*f4, f0*f1*f2*f3, f0*f1*f2*f3*f4",
    "f0, f1, f2, f3, f4, f1*f4, f2*f3, f2*f4, f3*f4, f0*f1*f4, f1*f2*f3, f0*f1*f2*f3, f0*f2*f3*f4",
    "f0, f1, f2, f3, f4, f0*f1, f0*f2, f0*f3, f1*f4, f2*f4, f3*f4, f0*f1*f2*f4, f0*f1*f3*f4, f0*f2*f3*f4",
    "f0, f1, f2, f3, f4, f0*f1, f0*f2, f0*f3, f0*f4, f1*f2, f1*f3, f1*f4, f2*f3, f2*f4, f0*f1*f2*f3*f4",
];

/// The six 32-vertex catalog graphs, degrees 10 through 15.
pub fn appendix_catalog() -> Vec<CayleyGraph> {
    (1..=6).map(|k| appendix_graph(k).unwrap()).collect()
}

/// Catalog entry `k` in `1..=6`.
pub fn appendix_graph(k: usize) -> Option<CayleyGraph> {
    let text = APPENDIX_SETS.get(k.checked_sub(1)?)?;
    let group = FiniteAbelianGroup::cube(5);
    let conn = parse_connection_set(&group, text).expect("catalog sets parse");
    Some(CayleyGraph::new(group, conn).expect("catalog sets are valid"))
}

/// A random connection set that reached the target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchHit {
    pub trial: u64,
    pub connection_set: ConnectionSet,
    pub h_size: usize,
}

/// Samples `trials` connection sets of `Z_2^d`, each nonzero element kept
/// with probability 1/2, and returns those whose `H` has at least
/// `target` elements, in trial order.
///
/// Trial `t` draws from ChaCha8 seeded with `seed` on stream `t`, so the
/// output depends only on the arguments.
pub fn search_random(d: usize, trials: u64, target: usize, seed: u64) -> Result<Vec<SearchHit>> {
    let group = FiniteAbelianGroup::cube(d);
    let hits = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(trial);
            let elements: Vec<GroupElement> = group
                .elements()
                .skip(1)
                .filter(|_| rng.random::<bool>())
                .collect();
            let x = CayleyGraph::from_elements(group.clone(), elements)?;
            let h_size = strongly_cospectral_to_zero(&x)?.len();
            Ok((h_size >= target).then(|| SearchHit {
                trial,
                connection_set: x.connection_set().clone(),
                h_size,
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(hits.into_iter().flatten().collect())
}
