//! JSON and text renderings of graphs, spectra and reports.
//!
//! Elements of `Z_2^d` render as bitstrings (leftmost is coordinate 0);
//! elements of any other group render as coordinate lists. Rational
//! eigenvalues render as JSON integers, others as `{conductor, coeffs}`.
//! Key order is fixed by the struct layouts below.

use serde::{Deserialize, Serialize};

use crate::cospectral::CospectralReport;
use crate::cyclotomic::CyclotomicInteger;
use crate::error::{Error, Result};
use crate::graph::CayleyGraph;
use crate::group::{FiniteAbelianGroup, GroupElement};
use crate::parse::parse_token;
use crate::spectrum::SpectrumTable;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementJson {
    Bits(String),
    Coords(Vec<u64>),
}

pub fn element_json(group: &FiniteAbelianGroup, g: &GroupElement) -> ElementJson {
    if group.is_cubelike() {
        ElementJson::Bits(g.to_bitstring())
    } else {
        ElementJson::Coords(g.coords().to_vec())
    }
}

fn element_from_json(group: &FiniteAbelianGroup, e: ElementJson) -> Result<GroupElement> {
    match e {
        ElementJson::Bits(s) => parse_token(group, &s, 0),
        ElementJson::Coords(c) => group.element(c),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum EigenvalueJson {
    Integer(i64),
    Cyclotomic { conductor: u64, coeffs: Vec<i64> },
}

impl From<&CyclotomicInteger> for EigenvalueJson {
    fn from(v: &CyclotomicInteger) -> Self {
        match v.as_integer() {
            Ok(n) => EigenvalueJson::Integer(n),
            Err(_) => EigenvalueJson::Cyclotomic {
                conductor: v.conductor(),
                coeffs: v.coeffs().to_vec(),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumRow {
    pub eigenvalue: EigenvalueJson,
    pub multiplicity: usize,
}

pub fn spectrum_rows(table: &SpectrumTable) -> Vec<SpectrumRow> {
    table
        .entries()
        .iter()
        .map(|e| SpectrumRow {
            eigenvalue: (&e.eigenvalue).into(),
            multiplicity: e.multiplicity(),
        })
        .collect()
}

pub fn spectrum_json(table: &SpectrumTable) -> String {
    serde_json::to_string_pretty(&spectrum_rows(table)).expect("rows serialize")
}

/// `{-6^(1), -4^(4), ..., 10^(1)}`.
pub fn spectrum_set(table: &SpectrumTable) -> String {
    let parts: Vec<String> = table
        .entries()
        .iter()
        .map(|e| format!("{}^({})", e.eigenvalue, e.multiplicity()))
        .collect();
    format!("{{{}}}", parts.join(", "))
}

/// Aligned `Degree | Spectrum` table, one line per graph.
pub fn spectrum_text(rows: &[(usize, &SpectrumTable)]) -> String {
    let width = rows
        .iter()
        .map(|(d, _)| d.to_string().len())
        .chain(["Degree".len()])
        .max()
        .unwrap();
    let mut out = format!("{:<width$} | Spectrum\n", "Degree");
    for (degree, table) in rows {
        out.push_str(&format!("{degree:<width$} | {}\n", spectrum_set(table)));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerdictsJson {
    pub subgroup: bool,
    pub mult_bound: bool,
    pub cube_mult: Option<bool>,
    pub cube_size: Option<bool>,
    pub third_bound: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ReportJson {
    pub group: String,
    pub degree: usize,
    #[serde(rename = "H")]
    pub h: Vec<ElementJson>,
    pub generators: Vec<ElementJson>,
    pub h_size: usize,
    pub max_multiplicity: usize,
    pub verdicts: VerdictsJson,
}

impl From<&CospectralReport> for ReportJson {
    fn from(r: &CospectralReport) -> Self {
        let render = |v: &[GroupElement]| v.iter().map(|g| element_json(&r.group, g)).collect();
        ReportJson {
            group: r.group.to_string(),
            degree: r.degree,
            h: render(&r.h),
            generators: render(&r.generators),
            h_size: r.h_size(),
            max_multiplicity: r.max_multiplicity,
            verdicts: VerdictsJson {
                subgroup: r.verdicts.subgroup,
                mult_bound: r.verdicts.mult_bound,
                cube_mult: r.verdicts.cube_mult,
                cube_size: r.verdicts.cube_size,
                third_bound: r.verdicts.third_bound,
            },
        }
    }
}

pub fn report_json(report: &CospectralReport) -> String {
    serde_json::to_string_pretty(&ReportJson::from(report)).expect("report serializes")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GraphJson {
    pub group: String,
    pub connection_set: Vec<ElementJson>,
}

pub fn graph_json(x: &CayleyGraph) -> String {
    let g = GraphJson {
        group: x.group().to_string(),
        connection_set: x
            .connection_set()
            .elements()
            .iter()
            .map(|c| element_json(x.group(), c))
            .collect(),
    };
    serde_json::to_string_pretty(&g).expect("graph serializes")
}

pub fn graph_from_json(text: &str) -> Result<CayleyGraph> {
    let g: GraphJson = serde_json::from_str(text)?;
    let group: FiniteAbelianGroup = g.group.parse()?;
    let elements = g
        .connection_set
        .into_iter()
        .map(|e| element_from_json(&group, e))
        .collect::<Result<Vec<_>>>()
        .map_err(|e| match e {
            Error::Parse { message, .. } => Error::parse(0, format!("connectionSet: {message}")),
            other => other,
        })?;
    CayleyGraph::from_elements(group, elements)
}
