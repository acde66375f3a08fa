use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use boundary_poly::catalog::{CatalogSpec, DEFAULT_SEED};
use boundary_poly::enumerate::{EnumConfig, DEFAULT_ENUMERATION_CAP};
use boundary_poly::formulas::{family_polynomial, has_closed_form};
use boundary_poly::io::{parse_edge_list, parse_graph6, parse_graph_auto, emit_graph6};
use boundary_poly::verify::{Check, CheckOutcome, Verifier};
use boundary_poly::{BoundaryPolynomial, Error, Family, FamilyKind, Graph, InvariantReport, OutputFormat};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "bpoly", version, about = "Boundary polynomials of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the boundary polynomial of one graph.
    Compute {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, default_value = "plain")]
        format: String,
    },
    /// Print the parameters recovered from the polynomial as JSON.
    Invariants {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Check identities against enumeration on a graph, a family member or a catalog.
    Verify {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        run: RunArgs,
        /// `all` or a comma-separated list of checks.
        #[arg(long, default_value = "all")]
        check: String,
        /// `n<=K`, `n=K` or `random:N:COUNT`.
        #[arg(long)]
        catalog: Option<String>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Compare the polynomials of two graphs.
    Compare {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Args)]
struct Source {
    /// Edge-list JSON or graph6 file (repeat for compare).
    #[arg(long)]
    input: Vec<PathBuf>,
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    method: Method,
    /// Largest order accepted for enumeration.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP as u64, value_parser = clap::value_parser!(u64).range(1..))]
    max_n: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    threads: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Auto,
    Enumerate,
    Formula,
}

/// A graph to work on, with the family it came from if any.
struct Subject {
    label: String,
    graph: Graph,
    family: Option<Family>,
}

enum Failure {
    /// Identity failure or differing polynomials.
    Negative,
    Error(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Negative => 1,
            Failure::Error(Error::CapExceeded { .. })
            | Failure::Error(Error::NotGraphPolynomial(_))
            | Failure::Error(Error::Disconnected) => 3,
            Failure::Error(_) | Failure::Io(_) => 2,
        }
    }
}

impl RunArgs {
    fn config(&self) -> EnumConfig {
        EnumConfig {
            max_n: usize::try_from(self.max_n).unwrap_or(usize::MAX),
            threads: self.threads.map(|t| t as usize),
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    let ext = path.extension().and_then(|e| e.to_str()).map(str::to_ascii_lowercase);
    let parsed = match ext.as_deref() {
        Some("json") => parse_edge_list(&text),
        Some("g6") | Some("graph6") => parse_graph6(text.lines().next().unwrap_or("")),
        _ => parse_graph_auto(&text),
    };
    parsed.map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

impl Source {
    fn family(&self) -> Result<Option<Family>, Failure> {
        let Some(name) = &self.family else {
            return Ok(None);
        };
        let kind: FamilyKind = name.parse()?;
        Ok(Some(Family::from_parts(kind, self.n, self.m, self.r, self.t)?))
    }

    fn subjects(&self) -> Result<Vec<Subject>, Failure> {
        let mut out = Vec::new();
        if let Some(f) = self.family()? {
            out.push(Subject {
                label: f.to_string(),
                graph: f.build()?,
                family: Some(f),
            });
        }
        for path in &self.input {
            out.push(Subject {
                label: path.display().to_string(),
                graph: read_graph(path)?,
                family: None,
            });
        }
        Ok(out)
    }

    fn exactly(&self, count: usize) -> Result<Vec<Subject>, Failure> {
        let subjects = self.subjects()?;
        if subjects.len() != count {
            return Err(Failure::Error(Error::Precondition(format!(
                "expected {count} graph source(s) (--input or --family), got {}",
                subjects.len()
            ))));
        }
        Ok(subjects)
    }
}

fn polynomial_of(subject: &Subject, run: &RunArgs) -> Result<BoundaryPolynomial, Failure> {
    let cfg = run.config();
    let formula = match (run.method, &subject.family) {
        (Method::Enumerate, _) => None,
        (Method::Auto, Some(f)) if has_closed_form(f) => Some(f),
        (Method::Auto, _) => None,
        (Method::Formula, Some(f)) => Some(f),
        (Method::Formula, None) => {
            return Err(Failure::Error(Error::Precondition(
                "--method formula needs a --family source".into(),
            )))
        }
    };
    Ok(match formula {
        Some(f) => family_polynomial(f)?,
        None => boundary_poly::boundary_polynomial_with(&subject.graph, &cfg)?,
    })
}

fn cmd_compute(source: &Source, run: &RunArgs, format: &str) -> Result<(), Failure> {
    let format: OutputFormat = format.parse()?;
    let subject = source.exactly(1)?.remove(0);
    println!("{}", polynomial_of(&subject, run)?.emit(format));
    Ok(())
}

fn cmd_invariants(source: &Source, run: &RunArgs) -> Result<(), Failure> {
    let subject = source.exactly(1)?.remove(0);
    let report = InvariantReport::from_polynomial(&polynomial_of(&subject, run)?)?;
    println!("{}", report.to_json());
    Ok(())
}

/// Aggregate of one check over many subjects.
struct Summary {
    check: String,
    subjects: usize,
    cases: usize,
    failure: Option<String>,
}

impl Summary {
    fn new(check: &str) -> Self {
        Summary {
            check: check.to_string(),
            subjects: 0,
            cases: 0,
            failure: None,
        }
    }

    fn absorb(&mut self, label: &str, out: CheckOutcome) {
        self.subjects += 1;
        self.cases += out.cases;
        if self.failure.is_none() {
            self.failure = out.counterexample.map(|c| format!("{label}: {c}"));
        }
    }
}

fn cmd_verify(
    source: &Source,
    run: &RunArgs,
    check: &str,
    catalog: Option<&str>,
    seed: u64,
) -> Result<(), Failure> {
    let checks = Check::parse_list(check)?;
    let mut subjects = source.subjects()?;
    if let Some(spec) = catalog {
        let spec: CatalogSpec = spec.parse()?;
        for g in spec.graphs(seed)? {
            subjects.push(Subject {
                label: format!("{spec} graph6 {}", emit_graph6(&g)),
                graph: g,
                family: None,
            });
        }
    }
    if subjects.is_empty() {
        return Err(Failure::Error(Error::Precondition(
            "verify needs --input, --family or --catalog".into(),
        )));
    }

    let verifier = Verifier::new(run.config());
    let mut summaries = Vec::new();
    let families: Vec<_> = subjects.iter().filter_map(|s| s.family).collect();
    if families.iter().any(has_closed_form) {
        let mut s = Summary::new("formula");
        for f in families.iter().filter(|f| has_closed_form(f)) {
            s.absorb(&f.to_string(), verifier.family_formula(f)?);
        }
        summaries.push(s);
    }
    for c in checks {
        let mut s = Summary::new(c.name());
        for subject in &subjects {
            s.absorb(&subject.label, verifier.run(c, &subject.graph)?);
        }
        summaries.push(s);
    }

    let mut failed = 0;
    for s in &summaries {
        match &s.failure {
            None => println!("PASS {} ({} graphs, {} cases)", s.check, s.subjects, s.cases),
            Some(c) => {
                failed += 1;
                println!("FAIL {} ({} graphs, {} cases): {c}", s.check, s.subjects, s.cases);
            }
        }
    }
    if failed == 0 {
        println!("all {} checks passed", summaries.len());
        Ok(())
    } else {
        println!("{failed} of {} checks failed", summaries.len());
        Err(Failure::Negative)
    }
}

fn cmd_compare(source: &Source, run: &RunArgs) -> Result<(), Failure> {
    let subjects = source.exactly(2)?;
    let a = polynomial_of(&subjects[0], run)?;
    let b = polynomial_of(&subjects[1], run)?;
    if a == b {
        println!("EQUAL");
        println!("{a}");
        return Ok(());
    }
    match a.first_difference(&b) {
        Some((i, j)) => println!(
            "DIFFERENT at coefficient ({i},{j}): {} vs {}",
            a.coefficient(i, j),
            b.coefficient(i, j)
        ),
        None => println!("DIFFERENT: orders {} and {}", a.order(), b.order()),
    }
    println!("{}: {a}", subjects[0].label);
    println!("{}: {b}", subjects[1].label);
    Err(Failure::Negative)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Compute { source, run, format } => cmd_compute(source, run, format),
        Command::Invariants { source, run } => cmd_invariants(source, run),
        Command::Verify {
            source,
            run,
            check,
            catalog,
            seed,
        } => cmd_verify(source, run, check, catalog.as_deref(), *seed),
        Command::Compare { source, run } => cmd_compare(source, run),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Negative => {}
                Failure::Error(e) => eprintln!("error: {e}"),
                Failure::Io(msg) => eprintln!("error: {msg}"),
            }
            ExitCode::from(f.exit_code())
        }
    }
}
