use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use leibalg::algebra::SeriesKind;
use leibalg::catalog::{self, parse_named, parse_rational, random_population, serialize, AlgebraEntry, CatalogError};
use leibalg::classify::{run_suite, theorem_registry, verify, Analysis, Property};
use leibalg::exact::{Subspace, Vector};
use leibalg::extensions::{split_over_ideal, SplitStatus};

#[derive(Parser)]
#[command(name = "leibalg", version, about = "Structure of finite-dimensional Leibniz algebras over the rationals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimensions of the standard ideals and series.
    Info { target: String },
    /// Decide one property and print the certificate.
    Decide { property: Property, target: String },
    /// Bounds for the Frattini ideal.
    Frattini { target: String },
    /// Split over an ideal, given by name or as `;`-separated vectors.
    Split {
        target: String,
        #[arg(long)]
        ideal: String,
    },
    /// Run the theorem suite.
    Theorems {
        target: Option<String>,
        /// Run over the whole built-in catalog.
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of seeded random constructions to add.
        #[arg(long, default_value_t = 0)]
        random: usize,
    },
    /// Print a built-in entry in the interchange format.
    Export { id: String },
}

enum Failure {
    NotFound(String),
    Invalid(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::NotFound(_) => 2,
            Failure::Invalid(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::NotFound(m) | Failure::Invalid(m) => m,
        }
    }
}

fn invalid(e: impl ToString) -> Failure {
    Failure::Invalid(e.to_string())
}

/// A path to a spec file, or a built-in id.
fn load(target: &str) -> Result<AlgebraEntry, Failure> {
    let path = Path::new(target);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Failure::NotFound(format!("{target}: {e}")))?;
        let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("unnamed");
        return parse_named(&text, stem).map_err(invalid);
    }
    catalog::lookup(target).map_err(|e| match e {
        CatalogError::UnknownId(_) => Failure::NotFound(format!("no file or built-in algebra `{target}`")),
        other => invalid(other),
    })
}

fn dims(terms: &[Subspace]) -> String {
    terms.iter().map(|t| t.dim().to_string()).collect::<Vec<_>>().join(" > ")
}

fn optional_dim(s: Result<&Subspace, impl ToString>) -> String {
    match s {
        Ok(s) => s.dim().to_string(),
        Err(e) => format!("uncertified ({})", e.to_string()),
    }
}

fn info(entry: &AlgebraEntry) -> String {
    let a = entry.analysis();
    let l = a.algebra();
    let c = a.centers();
    let mut out = String::new();
    out.push_str(&format!("id {}\nkind {}\ndim {}\n", entry.id, entry.kind, l.dim()));
    out.push_str(&format!("leibniz-kernel {}\n", a.leibniz_kernel().dim()));
    out.push_str(&format!("center {}\n", c.center.dim()));
    out.push_str(&format!("right-center {}\n", c.right.dim()));
    out.push_str(&format!("derived-series {}\n", dims(&l.series(SeriesKind::Derived).terms)));
    out.push_str(&format!("lower-central-series {}\n", dims(&l.series(SeriesKind::LowerCentral).terms)));
    out.push_str(&format!("nilradical {}\n", optional_dim(a.nilradical())));
    out.push_str(&format!("radical {}\n", optional_dim(a.radical())));
    out.push_str(&format!("right-multiplications {}\n", a.right_mult().dim()));
    out
}

fn decide(entry: &AlgebraEntry, p: Property) -> String {
    let a = entry.analysis();
    let d = a.decision(p);
    let check = match verify(a.algebra(), p, d) {
        Ok(()) => "verified".to_string(),
        Err(e) => format!("verification failed: {}", e.0),
    };
    format!("{}\n{d}\n{check}\n", d.status())
}

fn frattini(entry: &AlgebraEntry) -> String {
    let a = entry.analysis();
    let fr = a.frattini();
    let mut out = format!("lower {}\nupper {}\nexact {}\n", fr.lower, fr.upper, fr.exact);
    out.push_str(&format!("maximal-witnesses {}\n", fr.upper_witnesses.len()));
    if fr.via_complete_list {
        out.push_str("source annotated complete list of maximal subalgebras\n");
    }
    if fr.families_sampled {
        out.push_str("note some families of maximal subalgebras were sampled\n");
    }
    out
}

fn named_ideal(a: &Analysis, name: &str) -> Result<Option<Subspace>, Failure> {
    let l = a.algebra();
    Ok(Some(match name {
        "nilradical" => a.nilradical().map_err(invalid)?.clone(),
        "radical" => a.radical().map_err(invalid)?.clone(),
        "kernel" | "leibniz-kernel" => a.leibniz_kernel().clone(),
        "center" => a.centers().center.clone(),
        "right-center" => a.centers().right.clone(),
        "derived" => l.product_subspace(&l.full(), &l.full()),
        "nilradical-squared" => {
            let n = a.nilradical().map_err(invalid)?;
            l.product_subspace(n, n)
        }
        _ => return Ok(None),
    }))
}

fn ideal_from_spec(a: &Analysis, spec: &str) -> Result<Subspace, Failure> {
    if let Some(s) = named_ideal(a, spec)? {
        return Ok(s);
    }
    let n = a.dim();
    let vectors = spec
        .split(';')
        .filter(|v| !v.trim().is_empty())
        .map(|v| {
            let coords = v
                .split(',')
                .map(|c| parse_rational(c.trim()))
                .collect::<Result<Vector, _>>()
                .map_err(invalid)?;
            if coords.len() != n {
                return Err(invalid(format!("ideal vector has {} coordinates, expected {n}", coords.len())));
            }
            Ok(coords)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Subspace::spanned_by(n, &vectors))
}

fn split(entry: &AlgebraEntry, spec: &str) -> Result<String, Failure> {
    let a = entry.analysis();
    let ideal = ideal_from_spec(&a, spec)?;
    let r = split_over_ideal(a.algebra(), &ideal).map_err(invalid)?;
    let mut out = format!("ideal {ideal}\n{}\n", r.status);
    match r.status {
        SplitStatus::Split => {
            if let Some(c) = &r.complement {
                out.push_str(&format!("complement {c}\n"));
            }
        }
        SplitStatus::NonSplit => {
            if let Some(o) = &r.obstruction {
                out.push_str(&format!("obstruction {}\ncertificate {}\n", o.description, o.certifies()));
            }
        }
        SplitStatus::Unknown => {
            if let Some(reason) = &r.reason {
                out.push_str(&format!("reason {reason}\n"));
            }
        }
    }
    Ok(out)
}

fn theorems(target: Option<&str>, all: bool, seed: u64, random: usize) -> Result<(String, bool), Failure> {
    let mut entries = Vec::new();
    if all {
        entries.extend(catalog::catalog());
    }
    if let Some(t) = target {
        entries.push(load(t)?);
    }
    entries.extend(random_population(seed, random));
    if entries.is_empty() {
        return Err(invalid("nothing to check: pass --all, a target or --random"));
    }
    let analyses: Vec<Analysis> = entries.iter().map(AlgebraEntry::analysis).collect();
    let report = run_suite(&analyses, theorem_registry());
    let violations = report.violations().count();
    let mut out = report.render();
    out.push_str(&format!(
        "checked {} algebras, {} outcomes, {violations} violations\n",
        analyses.len(),
        report.outcomes.len()
    ));
    out.push_str(&format!("separations {}\n", report.separations.join(" ")));
    Ok((out, violations > 0))
}

fn run(cli: Cli) -> Result<(String, bool), Failure> {
    Ok(match cli.command {
        Command::Info { target } => (info(&load(&target)?), false),
        Command::Decide { property, target } => (decide(&load(&target)?, property), false),
        Command::Frattini { target } => (frattini(&load(&target)?), false),
        Command::Split { target, ideal } => (split(&load(&target)?, &ideal)?, false),
        Command::Theorems {
            target,
            all,
            seed,
            random,
        } => theorems(target.as_deref(), all, seed, random)?,
        Command::Export { id } => {
            let e = catalog::lookup(&id).map_err(|e| Failure::NotFound(e.to_string()))?;
            (serialize(&e), false)
        }
    })
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((out, violated)) => {
            print!("{out}");
            if violated {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
