#![allow(dead_code)]

use cospectra::{
    appendix_catalog, construct_even, construct_odd, cycle_product, hypercube, CayleyGraph,
    FiniteAbelianGroup, GroupElement,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random inverse-closed set: each element of `G \ {0}` is drawn with
/// probability `p` together with its inverse.
pub fn random_graph(group: &FiniteAbelianGroup, p: f64, rng: &mut ChaCha8Rng) -> CayleyGraph {
    let mut chosen: Vec<GroupElement> = Vec::new();
    for g in group.elements().skip(1) {
        let inv = group.neg(&g);
        if inv < g {
            continue;
        }
        if rng.random_bool(p) {
            chosen.push(inv);
            chosen.push(g);
        }
    }
    CayleyGraph::from_elements(group.clone(), chosen).unwrap()
}

const DENSITIES: [f64; 5] = [0.15, 0.3, 0.5, 0.7, 0.85];

/// `per_dim` random cubelike graphs for each `d` in `dims`, densities
/// cycling through a fixed list.
pub fn random_cubelike(
    dims: std::ops::RangeInclusive<usize>,
    per_dim: usize,
    seed: u64,
) -> Vec<CayleyGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for d in dims {
        let g = FiniteAbelianGroup::cube(d);
        for i in 0..per_dim {
            out.push(random_graph(&g, DENSITIES[i % DENSITIES.len()], &mut rng));
        }
    }
    out
}

/// Random Cayley graphs of small non-cubelike abelian groups.
pub fn random_mixed(per_group: usize, seed: u64) -> Vec<CayleyGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for lit in [
        "Z4^2",
        "Z2^2xZ4",
        "Z2^3xZ3",
        "Z2^2xZ3xZ5",
        "Z8xZ2^2",
        "Z6^2",
        "Z2^4xZ4",
        "Z7",
    ] {
        let g: FiniteAbelianGroup = lit.parse().unwrap();
        for i in 0..per_group {
            out.push(random_graph(&g, DENSITIES[i % DENSITIES.len()], &mut rng));
        }
    }
    out
}

/// The catalog and its complements, hypercubes of dimension 1 to 10, and
/// both constructed families for `d` in {5, 7, 9, 11}.
pub fn constructed_cubelike() -> Vec<CayleyGraph> {
    let mut out = Vec::new();
    for x in appendix_catalog() {
        out.push(x.complement());
        out.push(x);
    }
    out.extend((1..=10).map(hypercube));
    for d in [5, 7, 9, 11] {
        out.push(construct_odd(d).unwrap().graph);
        out.push(construct_even(d).unwrap().graph);
    }
    out
}

/// Cycle products of the first catalog graph and the prism `K_2 x C_3`.
pub fn constructed_products() -> Vec<CayleyGraph> {
    let base = &appendix_catalog()[0];
    let mut out: Vec<CayleyGraph> = [3, 5, 7]
        .iter()
        .map(|&m| cycle_product(base, m).unwrap())
        .collect();
    out.push(cycle_product(&hypercube(1), 3).unwrap());
    out
}

pub fn dimension(x: &CayleyGraph) -> usize {
    x.group().rank()
}
