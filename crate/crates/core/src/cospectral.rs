//! Strong cospectrality to the identity and the bounds on its size.
//!
//! In an abelian Cayley graph, `0` and `g` are strongly cospectral exactly
//! when `2g = 0` and every pair of characters sharing an eigenvalue also
//! agrees at `g`. The set of such `g` is the maximal strongly cospectral
//! subgroup `H`; its cosets are the other maximal strongly cospectral sets.

use rayon::prelude::*;

use crate::error::Result;
use crate::graph::CayleyGraph;
use crate::group::{FiniteAbelianGroup, GroupElement};
use crate::limits::Limits;
use crate::spectrum::{spectrum_with, SpectrumTable};

/// Vertices strongly cospectral to `0`, in lexicographic order.
pub fn strongly_cospectral_to_zero(x: &CayleyGraph) -> Result<Vec<GroupElement>> {
    let table = spectrum_with(x, &Limits::default())?;
    Ok(strongly_cospectral_in(x, &table))
}

/// Detector against a precomputed spectrum of `x`.
pub fn strongly_cospectral_in(x: &CayleyGraph, table: &SpectrumTable) -> Vec<GroupElement> {
    let g = x.group();
    let candidates: Vec<GroupElement> = g.involutions().collect();
    let keep: Vec<bool> = if g.is_cubelike() {
        candidates
            .par_iter()
            .map(|c| {
                let cr = g.rank_of(c);
                table.entries().iter().all(|entry| {
                    let sign = |a: usize| (a & cr).count_ones() % 2;
                    let first = sign(entry.characters[0]);
                    entry.characters[1..].iter().all(|&a| sign(a) == first)
                })
            })
            .collect()
    } else {
        let chars: Vec<GroupElement> = g.elements().collect();
        candidates
            .par_iter()
            .map(|c| {
                table.entries().iter().all(|entry| {
                    let first = g.char_sign(&chars[entry.characters[0]], c);
                    entry.characters[1..]
                        .iter()
                        .all(|&a| g.char_sign(&chars[a], c) == first)
                })
            })
            .collect()
    };
    candidates
        .into_iter()
        .zip(keep)
        .filter_map(|(c, k)| k.then_some(c))
        .collect()
}

/// Whether `u` and `v` are strongly cospectral, by translating to `0` and
/// `v - u`.
pub fn strongly_cospectral_pair(
    x: &CayleyGraph,
    u: &GroupElement,
    v: &GroupElement,
) -> Result<bool> {
    let g = x.group();
    g.check(u)?;
    g.check(v)?;
    let diff = g.sub(v, u);
    Ok(strongly_cospectral_to_zero(x)?.contains(&diff))
}

/// True iff `h` contains zero, is closed under addition, and every nonzero
/// element has order two.
pub fn verify_subgroup(group: &FiniteAbelianGroup, h: &[GroupElement]) -> bool {
    if !h.contains(&group.zero()) {
        return false;
    }
    if !h.iter().all(|x| group.is_involution(x)) {
        return false;
    }
    let members: std::collections::HashSet<&GroupElement> = h.iter().collect();
    h.iter()
        .all(|x| h.iter().all(|y| members.contains(&group.add(x, y))))
}

/// Reduced row-echelon basis of an elementary abelian 2-subgroup, viewed as
/// a GF(2) subspace (coordinate `i` is 0 or `m_i / 2`).
pub fn gf2_basis(group: &FiniteAbelianGroup, h: &[GroupElement]) -> Vec<GroupElement> {
    let k = group.rank();
    let mut rows: Vec<Vec<bool>> = Vec::new();
    for x in h {
        let mut v: Vec<bool> = x.coords().iter().map(|&c| c != 0).collect();
        for row in &rows {
            let pivot = row.iter().position(|&b| b).unwrap();
            if v[pivot] {
                v.iter_mut().zip(row).for_each(|(a, &b)| *a ^= b);
            }
        }
        if let Some(pivot) = v.iter().position(|&b| b) {
            for row in rows.iter_mut() {
                if row[pivot] {
                    row.iter_mut().zip(&v).for_each(|(a, &b)| *a ^= b);
                }
            }
            rows.push(v);
        }
    }
    rows.sort_by_key(|r| r.iter().position(|&b| b).unwrap());
    rows.into_iter()
        .map(|r| {
            let coords: Vec<u64> = (0..k)
                .map(|i| if r[i] { group.orders()[i] / 2 } else { 0 })
                .collect();
            group.element(coords).expect("basis stays in the group")
        })
        .collect()
}

/// Outcomes of the size bounds; `None` marks a check that does not apply.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdicts {
    pub subgroup: bool,
    /// `|H| <= |G| / m` for the largest multiplicity `m`.
    pub mult_bound: bool,
    /// Cubelike, `d >= 3`: some multiplicity exceeds `2^(d/2)`.
    pub cube_mult: Option<bool>,
    /// Cubelike, `d >= 3`: `|H| <= 2^(ceil(d/2) - 1)`.
    pub cube_size: Option<bool>,
    /// At least five vertices: `|H| <= |V| / 3`.
    pub third_bound: Option<bool>,
}

impl Verdicts {
    pub fn all_hold(&self) -> bool {
        self.subgroup
            && self.mult_bound
            && [self.cube_mult, self.cube_size, self.third_bound]
                .iter()
                .all(|v| v.unwrap_or(true))
    }
}

/// The three cubelike checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CubelikeVerdicts {
    pub cube_mult: Option<bool>,
    pub cube_size: Option<bool>,
    pub third_bound: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CospectralReport {
    pub group: FiniteAbelianGroup,
    pub degree: usize,
    /// The maximal strongly cospectral subgroup, lexicographic.
    pub h: Vec<GroupElement>,
    /// GF(2) basis of `h`.
    pub generators: Vec<GroupElement>,
    pub max_multiplicity: usize,
    pub verdicts: Verdicts,
}

impl CospectralReport {
    pub fn h_size(&self) -> usize {
        self.h.len()
    }

    pub fn vertex_count(&self) -> u64 {
        self.group.order()
    }
}

pub fn check_multiplicity_bound(report: &CospectralReport) -> bool {
    (report.h_size() as u128) * (report.max_multiplicity as u128) <= report.vertex_count() as u128
}

pub fn check_cubelike_bounds(report: &CospectralReport) -> CubelikeVerdicts {
    let d = report.group.rank() as u32;
    let h = report.h_size() as u128;
    let m = report.max_multiplicity as u128;
    let (cube_mult, cube_size) = if report.group.is_cubelike() && d >= 3 {
        // m > 2^(d/2)  <=>  m^2 > 2^d
        (
            Some(m * m > 1u128 << d),
            Some(h <= 1u128 << (d.div_ceil(2) - 1)),
        )
    } else {
        (None, None)
    };
    let vertices = report.vertex_count() as u128;
    let third_bound = (vertices >= 5).then_some(3 * h <= vertices);
    CubelikeVerdicts {
        cube_mult,
        cube_size,
        third_bound,
    }
}

/// Runs the detector and every applicable bound check. Bound failures are
/// recorded in the verdicts, not raised.
pub fn build_report(x: &CayleyGraph) -> Result<CospectralReport> {
    build_report_with(x, &Limits::default())
}

pub fn build_report_with(x: &CayleyGraph, limits: &Limits) -> Result<CospectralReport> {
    let table = spectrum_with(x, limits)?;
    Ok(report_from_spectrum(x, &table))
}

pub fn report_from_spectrum(x: &CayleyGraph, table: &SpectrumTable) -> CospectralReport {
    let h = strongly_cospectral_in(x, table);
    let group = x.group().clone();
    let subgroup = verify_subgroup(&group, &h);
    let generators = if subgroup {
        gf2_basis(&group, &h)
    } else {
        Vec::new()
    };
    let mut report = CospectralReport {
        group,
        degree: x.degree(),
        h,
        generators,
        max_multiplicity: table.max_multiplicity(),
        verdicts: Verdicts {
            subgroup,
            mult_bound: false,
            cube_mult: None,
            cube_size: None,
            third_bound: None,
        },
    };
    report.verdicts.mult_bound = check_multiplicity_bound(&report);
    let cube = check_cubelike_bounds(&report);
    report.verdicts.cube_mult = cube.cube_mult;
    report.verdicts.cube_size = cube.cube_size;
    report.verdicts.third_bound = cube.third_bound;
    report
}

/// `sigma = sum_{c in C} c` for a cubelike graph, when nonzero. There is
/// perfect state transfer from `0` to `sigma` at time `pi/2`.
pub fn pst_pair(x: &CayleyGraph) -> Result<Option<GroupElement>> {
    x.group().require_cubelike()?;
    let sigma = x.connection_sum();
    Ok((!sigma.is_zero()).then_some(sigma))
}
