mod input;
mod render;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use randic::graph::{encode_edge_list, encode_graph6, MAX_ENUMERATION_ORDER};
use randic::linalg::{eigenvalues, Cluster, DEFAULT_DISTINCT_TOL};
use randic::spectra::{normalized_laplacian, normalized_signless, randic_energy, randic_matrix};
use randic::theorems::{
    classify_distinct_count, local_conditions_check, scan_small_graphs, subdivision_energy_check,
    verify_eigenvalue_correspondence, verify_k_distinct_identity, verify_subdivision_charpoly,
    ScanOptions, Tolerances, VerificationReport,
};
use randic::{Error, ErrorClass, Graph};

use render::{render, Format};

/// Eigenvalues closer to zero than this are listed as 0.
const NOISE_FLOOR: f64 = 1e-12;

#[derive(Parser)]
#[command(name = "randic", version, about = "Randić spectra of simple graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenvalues and distinct clusters of a graph matrix.
    Spectrum {
        /// graph6 string, `-` for stdin, an edge-list file, or gen:<kind>:<n>.
        input: String,
        #[arg(long, value_enum, default_value = "randic")]
        matrix: MatrixKind,
        /// Clustering tolerance for distinct eigenvalues.
        #[arg(long, default_value_t = DEFAULT_DISTINCT_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Randić energy, optionally of the subdivision graph.
    Energy {
        input: String,
        /// Report RE(S(G)) together with √2·Σ√θ over the signless spectrum of G.
        #[arg(long)]
        subdivide: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Runs identity checks on one graph. Exits 1 when a check fails.
    Verify {
        input: String,
        #[arg(long, value_enum, default_value = "all")]
        check: CheckKind,
        /// Verdict tolerance; defaults to n² · 1e-8.
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, default_value_t = DEFAULT_DISTINCT_TOL)]
        cluster_tol: f64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Checks every claim on all connected labeled graphs of one order.
    Scan {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, default_value_t = DEFAULT_DISTINCT_TOL)]
        cluster_tol: f64,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Permit order 7 (about 1.9 million graphs).
        #[arg(long)]
        allow_order_7: bool,
        /// Skip the three subdivision checks.
        #[arg(long)]
        no_subdivision: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Prints the subdivision graph S(G).
    Subdivide {
        input: String,
        #[arg(long, value_enum, default_value = "graph6")]
        format: GraphFormat,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum MatrixKind {
    Randic,
    Nlap,
    Nslap,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckKind {
    Charpoly,
    Correspondence,
    Energy,
    Identity,
    Local,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Graph6,
    Edgelist,
}

#[derive(Serialize)]
struct SpectrumPayload {
    matrix: MatrixKind,
    order: usize,
    size: usize,
    cluster_tolerance: f64,
    eigenvalues: Vec<f64>,
    clusters: Vec<Cluster>,
    distinct_count: usize,
    trace: TraceCheck,
}

#[derive(Serialize)]
struct TraceCheck {
    eigenvalue_sum: f64,
    matrix_trace: f64,
    residual: f64,
}

#[derive(Serialize)]
struct EnergyPayload {
    order: usize,
    size: usize,
    randic_energy: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    subdivision: Option<SubdivisionEnergy>,
}

#[derive(Serialize)]
struct SubdivisionEnergy {
    order: usize,
    randic_energy: f64,
    sqrt2_sum_sqrt_theta: f64,
    gap: f64,
}

#[derive(Serialize)]
struct VerifyPayload {
    order: usize,
    size: usize,
    passed: bool,
    skipped: Vec<String>,
    checks: Vec<VerificationReport>,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e.class() {
            ErrorClass::Input => 2,
            ErrorClass::Convention => 3,
            ErrorClass::Numerical => 4,
            ErrorClass::Precondition => 5,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn digest(g: &Graph) -> Option<String> {
    encode_graph6(g).ok()
}

fn snap(x: f64) -> f64 {
    if x.abs() < NOISE_FLOOR {
        0.0
    } else {
        x
    }
}

fn spectrum(input: &str, matrix: MatrixKind, tol: f64, format: Format) -> Result<(String, bool), Failure> {
    let g = input::load_graph(input)?;
    let m = match matrix {
        MatrixKind::Randic => randic_matrix(&g)?,
        MatrixKind::Nlap => normalized_laplacian(&g)?,
        MatrixKind::Nslap => normalized_signless(&g)?,
    };
    let s = eigenvalues(&m, tol)?;
    let payload = SpectrumPayload {
        matrix,
        order: g.order(),
        size: g.size(),
        cluster_tolerance: tol,
        eigenvalues: s.values().iter().map(|&x| snap(x)).collect(),
        clusters: s
            .clusters()
            .iter()
            .map(|c| Cluster {
                value: snap(c.value),
                multiplicity: c.multiplicity,
            })
            .collect(),
        distinct_count: s.distinct_count(),
        trace: TraceCheck {
            eigenvalue_sum: s.sum(),
            matrix_trace: m.trace(),
            residual: (s.sum() - m.trace()).abs(),
        },
    };
    Ok((render("spectrum", digest(&g).as_deref(), &payload, format), true))
}

fn energy(input: &str, subdivide: bool, format: Format) -> Result<(String, bool), Failure> {
    let g = input::load_graph(input)?;
    let subdivision = if subdivide {
        let report = subdivision_energy_check(&g, &Tolerances::default())?;
        let direct = report.diagnostic("randic_energy_of_subdivision").unwrap_or(f64::NAN);
        let formula = report.diagnostic("sqrt2_sum_sqrt_theta").unwrap_or(f64::NAN);
        Some(SubdivisionEnergy {
            order: g.order() + g.size(),
            randic_energy: direct,
            sqrt2_sum_sqrt_theta: formula,
            gap: (direct - formula).abs(),
        })
    } else {
        None
    };
    let payload = EnergyPayload {
        order: g.order(),
        size: g.size(),
        randic_energy: randic_energy(&g)?,
        subdivision,
    };
    Ok((render("energy", digest(&g).as_deref(), &payload, format), true))
}

fn verify(
    input: &str,
    check: CheckKind,
    tol: Tolerances,
    format: Format,
) -> Result<(String, bool), Failure> {
    let g = input::load_graph(input)?;
    let mut checks = Vec::new();
    let mut skipped = Vec::new();
    let wants = |k: CheckKind| check == k || check == CheckKind::All;
    if wants(CheckKind::Charpoly) {
        checks.push(verify_subdivision_charpoly(&g, &tol)?);
    }
    if wants(CheckKind::Correspondence) {
        checks.push(verify_eigenvalue_correspondence(&g, &tol)?);
    }
    if wants(CheckKind::Energy) {
        checks.push(subdivision_energy_check(&g, &tol)?);
    }
    if wants(CheckKind::Identity) {
        checks.push(verify_k_distinct_identity(&g, &tol)?);
    }
    if check == CheckKind::Local {
        checks.push(local_conditions_check(&g, &tol)?);
    } else if check == CheckKind::All {
        let k = classify_distinct_count(&g, tol.distinct)?;
        if k == 3 {
            checks.push(local_conditions_check(&g, &tol)?);
        } else {
            skipped.push(format!("local_conditions (k = {k}, needs 3)"));
        }
    }
    let passed = checks.iter().all(|r| r.passed);
    let payload = VerifyPayload {
        order: g.order(),
        size: g.size(),
        passed,
        skipped,
        checks,
    };
    Ok((render("verify", digest(&g).as_deref(), &payload, format), passed))
}

fn scan(opts: ScanOptions, allow_order_7: bool, format: Format) -> Result<(String, bool), Failure> {
    if opts.order == MAX_ENUMERATION_ORDER && !allow_order_7 {
        return Err(Failure {
            code: 2,
            message: "order 7 enumerates about 1.9 million graphs; pass --allow-order-7".into(),
        });
    }
    let summary = scan_small_graphs(&opts)?;
    let passed = summary.passed();
    Ok((render("scan", None, &summary, format), passed))
}

fn subdivide(input: &str, format: GraphFormat) -> Result<(String, bool), Failure> {
    let g = input::load_graph(input)?;
    let s = g.subdivision();
    let text = match format {
        GraphFormat::Graph6 => format!("{}\n", encode_graph6(&s)?),
        GraphFormat::Edgelist => encode_edge_list(&s),
    };
    Ok((text, true))
}

fn run(cli: Cli) -> Result<(String, bool), Failure> {
    match cli.command {
        Command::Spectrum {
            input,
            matrix,
            tol,
            format,
        } => spectrum(&input, matrix, tol, format),
        Command::Energy {
            input,
            subdivide,
            format,
        } => energy(&input, subdivide, format),
        Command::Verify {
            input,
            check,
            tol,
            cluster_tol,
            format,
        } => verify(
            &input,
            check,
            Tolerances {
                distinct: cluster_tol,
                verdict: tol,
            },
            format,
        ),
        Command::Scan {
            order,
            tol,
            cluster_tol,
            jobs,
            allow_order_7,
            no_subdivision,
            format,
        } => {
            let opts = ScanOptions {
                order,
                tolerances: Tolerances {
                    distinct: cluster_tol,
                    verdict: tol,
                },
                include_subdivision: !no_subdivision,
                jobs,
            };
            scan(opts, allow_order_7, format)
        }
        Command::Subdivide { input, format } => subdivide(&input, format),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((text, passed)) => {
            print!("{text}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
