use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use celltrees::families::{complete_colorful, hypercube, join, simplex_skeleton, ColorfulSpec, CubeSpec};
use celltrees::io::{read_weights, spectrum_value, tree_report_value, ComplexDocument};
use celltrees::laplacian::{laplacian, LaplacianKind, Specialization};
use celltrees::trees::tree_count_report;
use celltrees::verify::{run_suite, Suite};
use celltrees::Error;

#[derive(Parser)]
#[command(name = "celltrees", version, about = "Exact spanning-tree counts and weighted Laplacian spectra of cell complexes")]
struct Cli {
    /// Print machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Seed for random specializations
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Number of random specializations besides the all-ones point
    #[arg(long, global = true, default_value_t = 5)]
    points: usize,
    /// Worker threads (defaults to the number of cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a complex from a built-in family as JSON
    Generate {
        #[command(subcommand)]
        family: Family,
        /// Output file (standard output if omitted)
        #[arg(short, long, global = true)]
        out: Option<PathBuf>,
    },
    /// Enumerate k-trees and report tau, tau_hat and torsion
    Trees {
        complex: PathBuf,
        #[arg(long)]
        dim: isize,
        #[command(flatten)]
        weights: WeightArgs,
        /// Also write the JSON report to this file
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Characteristic polynomial and pseudodeterminant of a weighted Laplacian
    Spectrum {
        complex: PathBuf,
        #[arg(long)]
        dim: isize,
        #[arg(long, value_enum, default_value_t = Kind::Tot)]
        kind: Kind,
        #[command(flatten)]
        weights: WeightArgs,
    },
    /// Run a seeded verification suite
    Verify {
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
        /// Also write the JSON report to this file
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Family {
    /// d-skeleton of the simplex on n vertices
    Simplex { n: usize, d: isize },
    /// Complete colorful complex with comma-separated class sizes, e.g. 2,2,2
    Colorful {
        #[arg(value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        /// Keep only cells up to this dimension
        #[arg(long)]
        skeleton: Option<isize>,
    },
    /// n-dimensional hypercube
    Cube { n: usize },
    /// Join of two complexes stored as JSON
    Join { first: PathBuf, second: PathBuf },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct WeightArgs {
    /// Weights file {"variables": {"name": "p/q"}}
    #[arg(long)]
    weights: Option<PathBuf>,
    /// Set every weight variable to 1
    #[arg(long)]
    ones: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Ud,
    Du,
    Tot,
}

impl From<Kind> for LaplacianKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Ud => LaplacianKind::UpDown,
            Kind::Du => LaplacianKind::DownUp,
            Kind::Tot => LaplacianKind::Total,
        }
    }
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Unsupported(_) => 3,
        Error::InvariantViolation(_) => 1,
        _ => 2,
    }
}

fn specialization(doc: &ComplexDocument, w: &WeightArgs) -> celltrees::Result<Specialization> {
    match &w.weights {
        Some(path) => read_weights(path),
        None => Ok(Specialization::ones_for(&doc.complex)),
    }
}

fn emit(out: Option<&Path>, text: &str) -> celltrees::Result<()> {
    match out {
        Some(path) => fs::write(path, format!("{text}\n"))?,
        None => println!("{text}"),
    }
    Ok(())
}

fn generate(family: &Family, out: Option<&Path>) -> celltrees::Result<()> {
    let doc = match family {
        Family::Simplex { n, d } => ComplexDocument::new(format!("simplex {n} {d}"), simplex_skeleton(*n, *d)?)
            .with_metadata("family", "simplex")
            .with_metadata("n", *n)
            .with_metadata("d", *d),
        Family::Colorful { sizes, skeleton } => {
            let spec = ColorfulSpec { sizes: sizes.clone(), skeleton: *skeleton };
            let label = sizes.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
            let mut doc = ComplexDocument::new(format!("colorful {label}"), complete_colorful(&spec)?)
                .with_metadata("family", "colorful")
                .with_metadata("sizes", sizes.clone());
            if let Some(s) = skeleton {
                doc = doc.with_metadata("skeleton", *s);
            }
            doc
        }
        Family::Cube { n } => ComplexDocument::new(format!("cube {n}"), hypercube(CubeSpec { n: *n })?)
            .with_metadata("family", "cube")
            .with_metadata("n", *n),
        Family::Join { first, second } => {
            let a = ComplexDocument::read(first)?;
            let b = ComplexDocument::read(second)?;
            ComplexDocument::new(format!("join({}, {})", a.name, b.name), join(&a.complex, &b.complex)?)
                .with_metadata("family", "join")
                .with_metadata("factors", vec![Value::from(a.name), Value::from(b.name)])
        }
    };
    emit(out, &doc.to_canonical_string())
}

fn trees(cli: &Cli, path: &Path, dim: isize, w: &WeightArgs, report: Option<&Path>) -> celltrees::Result<()> {
    let doc = ComplexDocument::read(path)?;
    let x = specialization(&doc, w)?;
    let r = tree_count_report(&doc.complex, dim, &x)?;
    let payload = tree_report_value(&doc.name, &r).to_string();
    if let Some(p) = report {
        emit(Some(p), &payload)?;
    }
    if cli.json {
        println!("{payload}");
    } else {
        println!("complex      {}", doc.name);
        println!("dimension    {dim}");
        println!("trees        {}", r.tree_count);
        println!("tau          {}", r.tau);
        println!("tau_hat      {}", r.tau_hat);
        println!("max torsion  {}", r.max_torsion);
    }
    Ok(())
}

fn spectrum(cli: &Cli, path: &Path, dim: isize, kind: Kind, w: &WeightArgs) -> celltrees::Result<()> {
    let doc = ComplexDocument::read(path)?;
    let x = specialization(&doc, w)?;
    let kind = LaplacianKind::from(kind);
    let m = laplacian(&doc.complex, kind, dim, &x)?;
    let poly = m.char_poly()?;
    if cli.json {
        println!("{}", spectrum_value(&doc.name, kind, dim, m.rows(), &poly));
    } else {
        println!("{kind} Laplacian of {} in degree {dim} ({}x{})", doc.name, m.rows(), m.cols());
        println!("char poly  {poly}");
        println!("pdet       {}", poly.pdet());
    }
    Ok(())
}

fn verify(cli: &Cli, suite: Suite, report: Option<&Path>) -> celltrees::Result<bool> {
    let r = run_suite(suite, cli.seed, cli.points)?;
    let payload = r.to_value(true).to_string();
    if let Some(p) = report {
        emit(Some(p), &payload)?;
    }
    if cli.json {
        println!("{payload}");
    } else {
        for c in r.checks.iter().filter(|c| !c.pass) {
            let k = c.k.map_or(String::new(), |k| format!(" k={k}"));
            let point = c.point.map_or(String::new(), |p| format!(" point={p}"));
            println!("FAIL {} [{}{k}{point}]: expected {}, got {}", c.name, c.complex, c.expected, c.actual);
        }
        println!(
            "suite {}: {} checks, {} passed, {} failed ({} ms)",
            r.suite,
            r.checks.len(),
            r.passed(),
            r.failed(),
            r.wall_time_ms
        );
    }
    Ok(r.all_passed())
}

fn run(cli: &Cli) -> celltrees::Result<bool> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Error::Argument(format!("thread pool: {e}")))?;
    }
    match &cli.command {
        Command::Generate { family, out } => generate(family, out.as_deref()).map(|_| true),
        Command::Trees { complex, dim, weights, report } => {
            trees(cli, complex, *dim, weights, report.as_deref()).map(|_| true)
        }
        Command::Spectrum { complex, dim, kind, weights } => spectrum(cli, complex, *dim, *kind, weights).map(|_| true),
        Command::Verify { suite, report } => verify(cli, *suite, report.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
