//! Command-line surface.
//!
//! Exit codes: 0 when everything checked out, 1 when the input was well
//! formed but a check failed, 2 when the input was malformed.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use bottloc_core::{
    aggregate_levels, catalog_audit, chern_top, classify, determinant_lift, dolbeault_character,
    product, theorem_report, todd_genus, FixedPointProfile, Flavor, SearchSpec, Statement,
    ToddGenus, VerdictStatus,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::catalog::{read_catalog, write_catalog, CatalogError};
use crate::format::{
    levels_to_value, parse_profile, rational_to_value, serialize_profile, theorem_report_to_value,
    FormatError,
};
use crate::parallel::enumerate_parallel;

#[derive(Debug, Parser)]
#[command(name = "bottloc", version, about = "Exact localization sums over circle-action fixed-point data")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Vanishing constraints, Chern number and fixed-point bound verdicts.
    Check {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Top Chern number of the line bundle as an exact rational.
    Chern {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Injectivity of the line weights and the level table.
    Classify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Generate a profile on standard output.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Exhaustive bounded search for consistent profiles.
    Search(SearchArgs),
    /// Dolbeault character and Todd genus.
    Genus {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Re-check every profile of a catalog.
    Audit {
        catalog: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum GenCommand {
    /// Projective space with the line bundle O(d).
    Cpn {
        /// Exponents of the action on homogeneous coordinates.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        lambdas: Vec<i64>,
        /// d in O(d).
        #[arg(long, allow_hyphen_values = true, default_value_t = 1)]
        power: i64,
        /// Use the determinant of the tangent bundle instead of O(d).
        #[arg(long)]
        det_lift: bool,
    },
    /// Product of two profiles.
    Product { first: PathBuf, second: PathBuf },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FlavorArg {
    Oriented,
    AlmostComplex,
}

impl From<FlavorArg> for Flavor {
    fn from(f: FlavorArg) -> Self {
        match f {
            FlavorArg::Oriented => Flavor::Oriented,
            FlavorArg::AlmostComplex => Flavor::AlmostComplex,
        }
    }
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long = "dim")]
    pub dimension: usize,
    #[arg(long)]
    pub points: usize,
    #[arg(long)]
    pub tangent_bound: u32,
    #[arg(long)]
    pub line_bound: u32,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    #[arg(long, value_enum, default_value = "almost-complex")]
    pub flavor: FlavorArg,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Passed,
    CheckFailed,
}

impl Outcome {
    pub fn code(self) -> u8 {
        match self {
            Outcome::Passed => 0,
            Outcome::CheckFailed => 1,
        }
    }

    fn from_pass(ok: bool) -> Self {
        if ok {
            Outcome::Passed
        } else {
            Outcome::CheckFailed
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Read { path: PathBuf, source: io::Error },
    #[error("{path}: {source}")]
    Profile { path: PathBuf, source: FormatError },
    #[error("{path}: {source}")]
    Catalog { path: PathBuf, source: CatalogError },
    #[error(transparent)]
    Core(#[from] bottloc_core::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
}

fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })
}

fn load_profile(path: &Path) -> Result<FixedPointProfile, CliError> {
    parse_profile(&read_text(path)?).map_err(|source| CliError::Profile {
        path: path.to_path_buf(),
        source,
    })
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Check { file, json } => check(&load_profile(&file)?, json, out),
        Command::Chern { file, json } => {
            let c = chern_top(&load_profile(&file)?)?;
            if json {
                writeln!(out, "{}", rational_to_value(&c))?;
            } else {
                writeln!(out, "{c}")?;
            }
            Ok(Outcome::Passed)
        }
        Command::Classify { file, json } => {
            let p = load_profile(&file)?;
            let class = classify(&p)?;
            let levels = aggregate_levels(&p)?;
            if json {
                let v = json!({"classification": class.as_str(), "levels": levels_to_value(&levels)});
                writeln!(out, "{v}")?;
            } else {
                writeln!(out, "classification: {class}")?;
                writeln!(out, "{:>12}  {:>12}  multiplicity", "line weight", "A")?;
                for l in &levels.levels {
                    writeln!(out, "{:>12}  {:>12}  {}", l.value, l.weight_sum.to_string(), l.multiplicity)?;
                }
            }
            Ok(Outcome::Passed)
        }
        Command::Gen(g) => {
            let p = match g {
                GenCommand::Cpn {
                    lambdas,
                    power,
                    det_lift,
                } => {
                    let p = bottloc_core::cpn(&lambdas, power)?;
                    if det_lift {
                        determinant_lift(&p)?
                    } else {
                        p
                    }
                }
                GenCommand::Product { first, second } => {
                    product(&load_profile(&first)?, &load_profile(&second)?)?
                }
            };
            writeln!(out, "{}", serialize_profile(&p))?;
            Ok(Outcome::Passed)
        }
        Command::Search(args) => search(args, out),
        Command::Genus { file, json } => genus(&load_profile(&file)?, json, out),
        Command::Audit { catalog, json } => audit(&catalog, json, out),
    }
}

fn check(p: &FixedPointProfile, json: bool, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let r = theorem_report(p)?;
    let c = &r.consistency;
    let ok = c.is_consistent() && !c.non_integral_warning() && !r.any_violated();
    if json {
        writeln!(out, "{}", theorem_report_to_value(&r))?;
        return Ok(Outcome::from_pass(ok));
    }
    let mut s = String::new();
    let _ = writeln!(s, "profile: n={}, r={}, {}", p.dimension, p.len(), p.flavor);
    let _ = writeln!(s, "power sums:");
    for m in &c.moments {
        let _ = writeln!(s, "  t={}: {}  {}", m.t, m.value, if m.passes() { "ok" } else { "FAIL" });
    }
    let _ = writeln!(s, "chern_top: {}", r.chern_top);
    if c.non_integral_warning() {
        let _ = writeln!(s, "warning: chern_top is not an integer; the data is not realizable");
    }
    let _ = writeln!(s, "classification: {}", r.classification);
    let _ = writeln!(s, "verdicts{}:", if r.is_vacuous() { " (vacuous: constraints fail)" } else { "" });
    for v in &r.verdicts {
        let case = match (v.statement, r.dichotomy) {
            (Statement::Dichotomy, Some(d)) if v.status == VerdictStatus::Verified => {
                format!(" (case {})", d.label())
            }
            _ => String::new(),
        };
        let _ = writeln!(s, "  ({}) {}{}", v.statement.id(), v.status.as_str(), case);
    }
    let _ = writeln!(s, "result: {}", if ok { "pass" } else { "fail" });
    out.write_all(s.as_bytes())?;
    Ok(Outcome::from_pass(ok))
}

fn genus(p: &FixedPointProfile, json: bool, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let chi = dolbeault_character(p)?;
    let td = todd_genus(p)?;
    let (label, ok) = match &td {
        ToddGenus::Integer(v) => (v.to_string(), true),
        ToddGenus::NonIntegral(v) => (format!("non-integral {v}"), false),
        ToddGenus::NotLaurent => ("NotLaurent".to_string(), false),
    };
    if json {
        let todd = match &td {
            ToddGenus::Integer(v) => json!(v.to_string()),
            ToddGenus::NonIntegral(v) => rational_to_value(v),
            ToddGenus::NotLaurent => json!("NotLaurent"),
        };
        let v = json!({
            "character": {"numerator": chi.numerator().to_string(), "denominator": chi.denominator().to_string()},
            "todd_genus": todd,
        });
        writeln!(out, "{v}")?;
    } else {
        writeln!(out, "character: {chi}")?;
        writeln!(out, "todd_genus: {label}")?;
    }
    Ok(Outcome::from_pass(ok))
}

fn search(args: SearchArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let spec = SearchSpec::new(
        args.dimension,
        args.points,
        args.tangent_bound,
        args.line_bound,
        args.flavor.into(),
    )?;
    let found = enumerate_parallel(&spec, args.workers)?;
    let file = fs::File::create(&args.out)?;
    write_catalog(io::BufWriter::new(file), &spec, &found)?;
    writeln!(out, "{} profiles written to {}", found.len(), args.out.display())?;
    Ok(Outcome::Passed)
}

fn audit(path: &Path, json: bool, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let cat = read_catalog(&read_text(path)?).map_err(|source| CliError::Catalog {
        path: path.to_path_buf(),
        source,
    })?;
    let report = catalog_audit(&cat.profiles);
    let ok = report.violations() == 0 && report.skipped == 0;
    if json {
        let statements: Vec<_> = Statement::ALL
            .iter()
            .map(|&s| {
                let c = report.counts(s);
                json!({"statement": s.id(), "verified": c.verified, "violated": c.violated, "not_applicable": c.not_applicable})
            })
            .collect();
        let v = json!({
            "audited": report.audited,
            "skipped": report.skipped,
            "statements": statements,
            "dichotomy": {"a": report.dichotomy_nonzero_injective, "b": report.dichotomy_zero_non_injective},
            "first_counterexample": report.first_counterexample.as_ref().map(crate::format::profile_to_value),
        });
        writeln!(out, "{v}")?;
        return Ok(Outcome::from_pass(ok));
    }
    writeln!(out, "audited: {}", report.audited)?;
    if report.skipped > 0 {
        writeln!(out, "skipped (inconsistent or invalid): {}", report.skipped)?;
    }
    for s in Statement::ALL {
        let c = report.counts(s);
        writeln!(
            out,
            "  ({}) verified {}, violated {}, not applicable {}",
            s.id(),
            c.verified,
            c.violated,
            c.not_applicable
        )?;
    }
    writeln!(
        out,
        "dichotomy: case a {}, case b {}",
        report.dichotomy_nonzero_injective, report.dichotomy_zero_non_injective
    )?;
    if let Some(p) = &report.first_counterexample {
        writeln!(out, "counterexample: {}", serialize_profile(p))?;
    }
    Ok(Outcome::from_pass(ok))
}
