//! `youngs`: batch verification front end for even CW complexes.

mod commands;
mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use input::GraphInput;
use report::{OutputFormat, RunReport};

#[derive(Parser, Debug)]
#[command(name = "youngs", version, about = "Exact checks on CW complexes with even 2-skeleton")]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: OutputFormat,
    /// Worker threads for parallel searches; results do not depend on it.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    SphereGrid,
    TorusGrid,
    KleinGrid,
    ProjectiveGrid,
    K4Projective,
    CubeBoundary,
    CubicalRp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RingChoice {
    Z,
    Z2,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, ValueEnum)]
pub enum Check {
    Homology,
    Torsion,
    Youngs,
    Rainbow,
    Bound,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a complex file from a named family.
    Gen {
        #[arg(value_enum)]
        family: FamilyName,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        /// Output path; without it the file is printed and the report goes to stderr.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that a complex file describes a valid complex.
    Validate { complex: PathBuf },
    /// Run theorem checks on a complex.
    Verify {
        complex: PathBuf,
        /// Checks to run (default: all).
        #[arg(long, value_enum, value_delimiter = ',')]
        checks: Vec<Check>,
        /// Largest color count for the exhaustive rainbow check.
        #[arg(long, default_value_t = 5)]
        max_colors: usize,
        /// Node budget for chromatic search and coloring enumeration.
        #[arg(long, default_value_t = 50_000_000)]
        budget: u64,
    },
    /// First homology over Z and Z/2.
    Homology {
        complex: PathBuf,
        #[arg(long, value_enum, default_value = "both")]
        ring: RingChoice,
        /// Write the integer boundary matrices as PREFIX.d1.txt and PREFIX.d2.txt.
        #[arg(long, value_name = "PREFIX")]
        export: Option<PathBuf>,
    },
    /// Odd closed walks and whether their classes are torsion.
    Torsion {
        complex: PathBuf,
        /// A closed walk to test instead of searching, e.g. `0,1,2,0`.
        #[arg(long)]
        walk: Option<String>,
    },
    /// Exact chromatic number with a refutation of one color fewer.
    Chi {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        limit: Option<u64>,
        /// Write the refutation trace here.
        #[arg(long)]
        refutation_out: Option<PathBuf>,
        /// Write the optimal coloring here.
        #[arg(long)]
        coloring_out: Option<PathBuf>,
    },
    /// Circular chromatic number, exact or bracketed.
    Chic {
        #[command(flatten)]
        input: GraphInput,
        /// Largest denominator scanned (default: enough for an exact answer).
        #[arg(long)]
        max_den: Option<u64>,
        /// Node budget per homomorphism search.
        #[arg(long, default_value_t = youngs_core::coloring::DEFAULT_HOM_BUDGET)]
        budget: u64,
    },
    /// Search for a graph homomorphism.
    Hom {
        #[arg(long, conflicts_with = "source_family")]
        source: Option<PathBuf>,
        #[arg(long, num_args = 1..=3)]
        source_family: Option<Vec<String>>,
        #[arg(long, conflicts_with = "target_family")]
        target: Option<PathBuf>,
        #[arg(long, num_args = 1..=3)]
        target_family: Option<Vec<String>>,
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
        /// Declare the target vertex-transitive to prune symmetric branches.
        #[arg(long)]
        vertex_transitive: bool,
    },
    /// Rainbow faces of one coloring, or of every coloring up to a color count.
    Rainbow {
        complex: PathBuf,
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[arg(long, default_value_t = 5)]
        max_colors: usize,
        #[arg(long, default_value_t = 50_000_000)]
        budget: u64,
    },
    /// Abelianized k-fundamental groups.
    Pi1k {
        #[command(flatten)]
        input: GraphInput,
        /// `k` or an inclusive range `a..b`.
        #[arg(long)]
        k: String,
        #[arg(long, default_value_t = 0)]
        basepoint: usize,
        /// Compare against the prediction for `circular N M`.
        #[arg(long, num_args = 3, value_name = "WORDS")]
        expect: Option<Vec<String>>,
        #[arg(long, default_value_t = youngs_core::complex::DEFAULT_CELL_BUDGET)]
        cell_budget: usize,
    },
    /// Decide k-homotopy between two walks with a certificate.
    Reduce {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        walk: String,
        /// Defaults to the trivial walk at the start vertex.
        #[arg(long)]
        target: Option<String>,
        #[arg(long)]
        k: usize,
        /// Extra length the search may use, in pairs of steps.
        #[arg(long, default_value_t = 2)]
        budget: usize,
        #[arg(long, default_value_t = 200_000)]
        state_cap: usize,
        /// Use the line cover of `K_{N/M}` for the winding invariant.
        #[arg(long, num_args = 2, value_names = ["N", "M"])]
        cover: Option<Vec<usize>>,
        #[arg(long)]
        script_out: Option<PathBuf>,
    },
    /// Lift a walk in `K_{n/m}` to the line cover.
    Lift {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        walk: String,
        /// Starting numerator (default: twice the first vertex).
        #[arg(long, allow_hyphen_values = true)]
        start: Option<i64>,
    },
    /// Check the k-covering property of the line cover of `K_{n/m}`.
    Covering {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
    },
    /// First homology of neighborhood complexes.
    Nbhd {
        #[command(flatten)]
        input: GraphInput,
        /// `j` or an inclusive range `a..b`.
        #[arg(long)]
        j: String,
    },
    /// Verify a move script or a refutation trace against a graph.
    Replay {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, conflicts_with = "refutation")]
        script: Option<PathBuf>,
        #[arg(long)]
        refutation: Option<PathBuf>,
    },
}

fn run(cli: Cli, report: &mut RunReport) -> anyhow::Result<()> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global()?;
    }
    use commands::*;
    match cli.command {
        Command::Gen { family, m, n, d, out } => gen(family, m, n, d, out.as_deref(), report),
        Command::Validate { complex } => validate(&complex, report),
        Command::Verify { complex, checks, max_colors, budget } => {
            verify(&complex, &checks, max_colors, budget, report)
        }
        Command::Homology { complex, ring, export } => homology(&complex, ring, export.as_deref(), report),
        Command::Torsion { complex, walk } => torsion(&complex, walk.as_deref(), report),
        Command::Chi { input, limit, refutation_out, coloring_out } => {
            chi(&input, limit, refutation_out.as_deref(), coloring_out.as_deref(), report)
        }
        Command::Chic { input, max_den, budget } => chic(&input, max_den, budget, report),
        Command::Hom { source, source_family, target, target_family, budget, vertex_transitive } => hom(
            (source.as_deref(), source_family.as_deref()),
            (target.as_deref(), target_family.as_deref()),
            budget,
            vertex_transitive,
            report,
        ),
        Command::Rainbow { complex, coloring, max_colors, budget } => {
            rainbow(&complex, coloring.as_deref(), max_colors, budget, report)
        }
        Command::Pi1k { input, k, basepoint, expect, cell_budget } => {
            pi1k(&input, &k, basepoint, expect.as_deref(), cell_budget, report)
        }
        Command::Reduce { input, walk, target, k, budget, state_cap, cover, script_out } => reduce(
            &input,
            &walk,
            target.as_deref(),
            k,
            budget,
            state_cap,
            cover.as_deref(),
            script_out.as_deref(),
            report,
        ),
        Command::Lift { n, m, walk, start } => lift(n, m, &walk, start, report),
        Command::Covering { n, m, k } => covering(n, m, k, report),
        Command::Nbhd { input, j } => nbhd(&input, &j, report),
        Command::Replay { input, script, refutation } => {
            replay(&input, script.as_deref(), refutation.as_deref(), report)
        }
    }
}

fn main() -> ExitCode {
    let command = std::env::args().collect::<Vec<_>>().join(" ");
    let cli = Cli::parse();
    let format = cli.format;
    let mut report = RunReport::new(command);
    match run(cli, &mut report) {
        Ok(()) => {
            match report.payload.take() {
                Some(payload) => {
                    print!("{payload}");
                    eprint!("{}", report.render(format));
                }
                None => print!("{}", report.render(format)),
            }
            if report.has_violation() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            print!("{}", report.render(format));
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
