//! The `catzeta` command line: enumeration, conversion between Dyck paths,
//! plane trees and unit interval posets, zeta, exhaustive verification and
//! ASCII rendering.
//!
//! Paths are `N`/`E` words, trees are balanced parentheses with the root
//! included, posets are JSON `{"n":..,"relations":[[i,j],..]}` with 1-based
//! labels.

mod render;

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Parser, Subcommand, ValueEnum};
use zeta_core::verify::{verify_law_with, Maps};
use zeta_core::{
    enumerate_dyck, enumerate_posets, enumerate_trees, lambda_bounce, lambda_poset, lambda_steep,
    phi, phi_inverse, psi, psi_inverse, xi_bounce, xi_poset, xi_steep, zeta, DyckPath, Law,
    LawReport, PlaneTree, UnitIntervalPoset,
};

/// Exit status for a failed verification.
pub const EXIT_FAILURE: u8 = 1;
/// Exit status for malformed arguments or input encodings.
pub const EXIT_USAGE: u8 = 2;

/// Environment variable holding the default worker count for `verify`.
pub const JOBS_ENV: &str = "CATZETA_JOBS";

#[derive(Debug, Parser)]
#[command(name = "catzeta", version, about = "Catalan objects and the zeta map")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print every object of size n, one encoding per line.
    Enumerate {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
    },
    /// Apply a bijection, or its inverse, between two kinds of object.
    Convert {
        #[arg(long, value_enum)]
        from: Kind,
        #[arg(long, value_enum)]
        to: Kind,
        #[arg(long, value_enum)]
        via: Via,
        input: String,
    },
    /// Apply zeta to a Dyck path.
    Zeta { input: String },
    /// Check the identities exhaustively for all sizes 1..=n-max.
    Verify {
        #[arg(long)]
        n_max: usize,
        /// One law; all laws when omitted.
        #[arg(long)]
        law: Option<Law>,
        /// Worker threads. Defaults to the available parallelism.
        #[arg(long, env = JOBS_ENV, value_parser = clap::value_parser!(u64).range(1..))]
        jobs: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Draw a Dyck path on its grid, or a tree as an indented outline.
    Render { input: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Dyck,
    Tree,
    Poset,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Via {
    /// poset -> dyck (inverse: dyck -> poset)
    Phi,
    /// dyck -> poset (inverse: poset -> dyck)
    Psi,
    /// tree -> dyck by the clockwise contour (inverse: dyck -> tree)
    Steep,
    /// tree -> dyck by breadth-order arities (inverse: dyck -> tree)
    Bounce,
    /// tree -> poset by node values (inverse: poset -> tree)
    Poset,
}

impl Via {
    /// The (from, to) pair of the forward map.
    fn forward(self) -> (Kind, Kind) {
        match self {
            Via::Phi => (Kind::Poset, Kind::Dyck),
            Via::Psi => (Kind::Dyck, Kind::Poset),
            Via::Steep | Via::Bounce => (Kind::Tree, Kind::Dyck),
            Via::Poset => (Kind::Tree, Kind::Poset),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// One JSON report per law.
    Json,
    /// One summary line per law.
    Text,
}

/// A parsed object of any kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Object {
    Dyck(DyckPath),
    Tree(PlaneTree),
    Poset(UnitIntervalPoset),
}

impl Object {
    pub fn parse(kind: Kind, input: &str) -> Result<Self, String> {
        let input = input.trim();
        match kind {
            Kind::Dyck => parse_dyck(input).map(Object::Dyck),
            Kind::Tree => input.parse().map(Object::Tree).map_err(|e| e.to_string()),
            Kind::Poset => UnitIntervalPoset::from_json_str(input)
                .map(Object::Poset)
                .map_err(|e| e.to_string()),
        }
    }

    pub fn encode(&self) -> String {
        match self {
            Object::Dyck(d) => d.to_string(),
            Object::Tree(t) => t.to_string(),
            Object::Poset(p) => p.to_json_string(),
        }
    }
}

fn parse_dyck(input: &str) -> Result<DyckPath, String> {
    input.parse().map_err(|e| match e {
        // The imbalance only shows at the end of the word.
        zeta_core::Error::Unbalanced { .. } => {
            format!("{e} (at position {})", input.chars().count())
        }
        e => e.to_string(),
    })
}

pub fn convert(from: Kind, to: Kind, via: Via, input: &str) -> Result<Object, String> {
    let (src, dst) = via.forward();
    let forward = (from, to) == (src, dst);
    if !forward && (from, to) != (dst, src) {
        return Err(format!(
            "--via {} maps {} to {} (or back), not {} to {}",
            name(via),
            name(src),
            name(dst),
            name(from),
            name(to)
        ));
    }
    let out = match (Object::parse(from, input)?, via, forward) {
        (Object::Poset(p), Via::Phi, true) => Object::Dyck(phi(&p)),
        (Object::Dyck(d), Via::Phi, false) => Object::Poset(phi_inverse(&d)),
        (Object::Dyck(d), Via::Psi, true) => Object::Poset(psi(&d)),
        (Object::Poset(p), Via::Psi, false) => Object::Dyck(psi_inverse(&p)),
        (Object::Tree(t), Via::Steep, true) => Object::Dyck(xi_steep(&t)),
        (Object::Dyck(d), Via::Steep, false) => Object::Tree(lambda_steep(&d)),
        (Object::Tree(t), Via::Bounce, true) => Object::Dyck(xi_bounce(&t)),
        (Object::Dyck(d), Via::Bounce, false) => Object::Tree(lambda_bounce(&d)),
        (Object::Tree(t), Via::Poset, true) => Object::Poset(xi_poset(&t)),
        (Object::Poset(p), Via::Poset, false) => Object::Tree(lambda_poset(&p)),
        _ => unreachable!("kinds checked against the map"),
    };
    Ok(out)
}

fn name(v: impl ValueEnum) -> String {
    v.to_possible_value()
        .map(|p| p.get_name().to_owned())
        .unwrap_or_default()
}

/// Parse `args` (program name first) and run, writing to `out` and `err`.
/// Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        // A closed pipe (`catzeta enumerate ... | head`) is not an error.
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => 0,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "catzeta: {e}");
            EXIT_FAILURE
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "catzeta: {msg}");
            EXIT_USAGE
        }
    }
}

enum Failure {
    Io(io::Error),
    Input(String),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<u8, Failure> {
    match command {
        Command::Enumerate { kind, n } => {
            match kind {
                Kind::Dyck => enumerate_dyck(n).try_for_each(|d| writeln!(out, "{d}"))?,
                Kind::Tree => enumerate_trees(n).try_for_each(|t| writeln!(out, "{t}"))?,
                Kind::Poset => {
                    enumerate_posets(n).try_for_each(|p| writeln!(out, "{}", p.to_json_string()))?
                }
            }
            Ok(0)
        }
        Command::Convert {
            from,
            to,
            via,
            input,
        } => {
            let object = convert(from, to, via, &input).map_err(Failure::Input)?;
            writeln!(out, "{}", object.encode())?;
            Ok(0)
        }
        Command::Zeta { input } => {
            let d = parse_dyck(input.trim()).map_err(Failure::Input)?;
            writeln!(out, "{}", zeta(&d))?;
            Ok(0)
        }
        Command::Verify {
            n_max,
            law,
            jobs,
            format,
        } => {
            let jobs = jobs.map_or_else(default_jobs, |j| j as usize);
            let laws = law.map_or(Law::ALL.to_vec(), |l| vec![l]);
            let maps = Maps::standard();
            let mut failed = false;
            for law in laws {
                let per_size: Vec<LawReport> = (1..=n_max)
                    .map(|n| verify_law_with(law, n, &maps, jobs))
                    .collect();
                let report = LawReport::combine(law, &per_size);
                failed |= !report.success();
                match format {
                    Format::Json => writeln!(out, "{}", report.to_json())?,
                    Format::Text => writeln!(
                        out,
                        "{} {law} n<={n_max} checked={} counterexamples={} millis={}",
                        if report.success() { "ok  " } else { "FAIL" },
                        report.checked,
                        report.counterexamples.len(),
                        report.millis
                    )?,
                }
            }
            Ok(if failed { EXIT_FAILURE } else { 0 })
        }
        Command::Render { input } => {
            let input = input.trim();
            let text = if input.starts_with('(') {
                let t: PlaneTree = input.parse().map_err(|e| Failure::Input(format!("{e}")))?;
                render::tree(&t)
            } else {
                render::dyck(&parse_dyck(input).map_err(Failure::Input)?)
            };
            out.write_all(text.as_bytes())?;
            Ok(0)
        }
    }
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, usize::from)
}
