//! `cospectra`: spectra, strong cospectrality and graph constructions from
//! the command line.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 verification failure,
//! 3 resource cap exceeded.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cospectra::format::{
    element_json, graph_from_json, graph_json, report_json, spectrum_json, spectrum_text,
    ElementJson, ReportJson,
};
use cospectra::{
    appendix_graph, build_report_with, construct_even, construct_odd, cycle_product, hypercube,
    is_perfect_state_transfer, oracle_agreement_with, parse_graph_spec, pst_amplitude_exact_with,
    pst_pair, search_random, spectrum_with, wht_spectrum_with, CayleyGraph, Error, GaussianInteger,
    Limits, SpectrumTable, DEFAULT_TOLERANCE,
};

#[derive(Parser)]
#[command(
    name = "cospectra",
    version,
    about = "Spectra and strong cospectrality of abelian Cayley graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the spectrum with multiplicities.
    Spectrum {
        /// GROUP:CONNSET, @file.json, or appendixA:k
        graph: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Use the Walsh-Hadamard transform (cubelike graphs only).
        #[arg(long)]
        fast: bool,
    },
    /// Detect the vertices strongly cospectral to 0 and check the bounds.
    Cospectral {
        graph: String,
        /// Cross-check every involution with the numerical idempotent oracle.
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
    },
    /// Exact amplitude from 0 to sigma at time pi/2 (cubelike graphs).
    Pst { graph: String },
    /// Write a constructed graph as JSON.
    Construct {
        /// odd, even, hypercube, product, or appendixA:k
        kind: String,
        /// Dimension; for `even` this is the ambient (even) dimension.
        #[arg(long)]
        dim: Option<usize>,
        /// Cycle length for `product`.
        #[arg(long)]
        m: Option<u64>,
        /// Cubelike base graph for `product`.
        #[arg(long)]
        base: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Random cubelike graphs on Z2^dim whose H has at least `target` elements.
    Search {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        target: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

enum Failure {
    Usage(String),
    /// The report still goes to stdout; the message goes to stderr.
    Verification {
        output: String,
        message: String,
    },
    TooLarge(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::TooLarge { .. } => Failure::TooLarge(e.to_string()),
            Error::ClusterAmbiguity { .. } | Error::EigenResidual { .. } => Failure::Verification {
                output: String::new(),
                message: e.to_string(),
            },
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn load_graph(spec: &str) -> Result<CayleyGraph, Failure> {
    if let Some(path) = spec.strip_prefix('@') {
        let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
        return Ok(graph_from_json(&text)?);
    }
    if let Some((head, k)) = spec.split_once(':') {
        if head.eq_ignore_ascii_case("appendixA") {
            return k
                .trim()
                .parse()
                .ok()
                .and_then(appendix_graph)
                .ok_or_else(|| Failure::Usage(format!("no catalog entry {k:?}; expected 1..6")));
        }
    }
    Ok(parse_graph_spec(spec)?)
}

fn cmd_spectrum(graph: &str, format: Format, fast: bool, limits: &Limits) -> Outcome {
    let x = load_graph(graph)?;
    let table = if fast {
        SpectrumTable::from_integer_eigenvalues(&wht_spectrum_with(&x, limits)?)
    } else {
        spectrum_with(&x, limits)?
    };
    Ok(match format {
        Format::Json => spectrum_json(&table),
        Format::Table => spectrum_text(&[(x.degree(), &table)])
            .trim_end()
            .to_string(),
    })
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct VerifiedReport {
    #[serde(flatten)]
    report: ReportJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_agreement: Option<bool>,
}

fn cmd_cospectral(graph: &str, verify: bool, tol: f64, limits: &Limits) -> Outcome {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Failure::Usage(format!("--tol must be positive, got {tol}")));
    }
    let x = load_graph(graph)?;
    let report = build_report_with(&x, limits)?;
    let (text, agree) = if verify {
        let agree = oracle_agreement_with(&x, tol, limits)?;
        let text = serde_json::to_string_pretty(&VerifiedReport {
            report: ReportJson::from(&report),
            oracle_agreement: Some(agree),
        })
        .expect("report serializes");
        (text, agree)
    } else {
        (report_json(&report), true)
    };
    let message = if !agree {
        "the idempotent oracle disagrees with the detector"
    } else if !report.verdicts.all_hold() {
        "a bound check failed"
    } else {
        return Ok(text);
    };
    Err(Failure::Verification {
        output: text,
        message: message.into(),
    })
}

#[derive(Serialize)]
struct PstOutput {
    sigma: Option<ElementJson>,
    amplitude: Option<GaussianInteger>,
    pst: bool,
}

fn cmd_pst(graph: &str, limits: &Limits) -> Outcome {
    let x = load_graph(graph)?;
    let out = match pst_pair(&x)? {
        Some(sigma) => {
            let a = pst_amplitude_exact_with(&x, &sigma, limits)?;
            PstOutput {
                sigma: Some(element_json(x.group(), &sigma)),
                amplitude: Some(a),
                pst: is_perfect_state_transfer(&x, a),
            }
        }
        None => PstOutput {
            sigma: None,
            amplitude: None,
            pst: false,
        },
    };
    Ok(serde_json::to_string_pretty(&out).expect("pst output serializes"))
}

fn check_cube_size(dim: usize, limits: &Limits) -> Result<(), Failure> {
    if dim >= 63 || 1u64 << dim > limits.max_vertices {
        let vertices = if dim >= 63 { u64::MAX } else { 1 << dim };
        return Err(Error::TooLarge {
            vertices,
            cap: limits.max_vertices,
        }
        .into());
    }
    Ok(())
}

fn cmd_construct(
    kind: &str,
    dim: Option<usize>,
    m: Option<u64>,
    base: Option<&str>,
    out: Option<&PathBuf>,
    limits: &Limits,
) -> Outcome {
    let need_dim = || {
        let d = dim.ok_or_else(|| Failure::Usage(format!("{kind} needs --dim")))?;
        check_cube_size(d, limits)?;
        Ok::<_, Failure>(d)
    };
    let x = match kind {
        "odd" => construct_odd(need_dim()?)?.graph,
        "even" => {
            let ambient = need_dim()?;
            if ambient == 0 {
                return Err(Error::BadDimension(0).into());
            }
            construct_even(ambient - 1)?.graph
        }
        "hypercube" => hypercube(need_dim()?),
        "product" => {
            let base = base.ok_or_else(|| Failure::Usage("product needs --base".into()))?;
            let m = m.ok_or_else(|| Failure::Usage("product needs --m".into()))?;
            cycle_product(&load_graph(base)?, m)?
        }
        catalog if catalog.to_ascii_lowercase().starts_with("appendixa:") => load_graph(catalog)?,
        other => return Err(Failure::Usage(format!("unknown construction {other:?}"))),
    };
    let text = graph_json(&x);
    match out {
        Some(path) => {
            fs::write(path, format!("{text}\n"))
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct SearchOutput {
    trial: u64,
    h_size: usize,
    connection_set: Vec<ElementJson>,
}

fn cmd_search(dim: usize, trials: u64, target: usize, seed: u64, limits: &Limits) -> Outcome {
    // every trial enumerates Z_2^dim
    check_cube_size(dim, limits)?;
    let group = cospectra::FiniteAbelianGroup::cube(dim);
    let hits: Vec<SearchOutput> = search_random(dim, trials, target, seed)?
        .into_iter()
        .map(|h| SearchOutput {
            trial: h.trial,
            h_size: h.h_size,
            connection_set: h
                .connection_set
                .elements()
                .iter()
                .map(|c| element_json(&group, c))
                .collect(),
        })
        .collect();
    Ok(serde_json::to_string_pretty(&hits).expect("hits serialize"))
}

fn run(cli: Cli) -> Outcome {
    let limits = Limits::from_env();
    match cli.command {
        Command::Spectrum {
            graph,
            format,
            fast,
        } => cmd_spectrum(&graph, format, fast, &limits),
        Command::Cospectral { graph, verify, tol } => cmd_cospectral(&graph, verify, tol, &limits),
        Command::Pst { graph } => cmd_pst(&graph, &limits),
        Command::Construct {
            kind,
            dim,
            m,
            base,
            out,
        } => cmd_construct(&kind, dim, m, base.as_deref(), out.as_ref(), &limits),
        Command::Search {
            dim,
            trials,
            target,
            seed,
        } => cmd_search(dim, trials, target, seed, &limits),
    }
}

// a closed pipe downstream is not an error worth reporting
fn emit(text: &str) {
    if !text.is_empty() {
        let _ = writeln!(std::io::stdout().lock(), "{text}");
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(text) => {
            emit(&text);
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification { output, message }) => {
            emit(&output);
            eprintln!("verification failed: {message}");
            ExitCode::from(2)
        }
        Err(Failure::TooLarge(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
