//! Command-line front end.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::bigon::{self, Edge};
use crate::cache::{self, LoadOutcome};
use crate::diagram::{bracket, parse_diagram, parse_slice_word, reduce, SkeinElement};
use crate::expr::parse_element;
use crate::internal;
use crate::matching::enumerate_matchings;
use crate::scalar::Specialization;
use crate::verify::{self, Params};
use crate::{Error, Result};

#[derive(Parser, Debug)]
#[command(name = "skeinlab", version, about = "Exact computations in the stated skein algebra of the bigon")]
struct Cli {
    /// Structure-constant cache file (JSON lines); defaults to $SKEINLAB_CACHE.
    #[arg(long, global = true, value_name = "PATH")]
    cache: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EdgeArg {
    West,
    East,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Functional {
    #[value(name = "R")]
    R,
    Theta,
    T,
    Tinv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduce a stated diagram to the basis, e.g. "tangle(2){x0} west=+- east=+-".
    Reduce { diagram: String },
    /// Kauffman bracket of a closed diagram.
    Bracket { diagram: String },
    /// Product of one or more elements, left to right.
    Mul {
        #[arg(required = true)]
        exprs: Vec<String>,
    },
    Comul { expr: String },
    Counit { expr: String },
    Antipode { expr: String },
    /// Half-turn rotation of the bigon.
    Rot { expr: String },
    /// Inversion along an edge.
    Inv {
        expr: String,
        #[arg(long, value_enum, default_value = "east")]
        edge: EdgeArg,
        /// Apply the inverse map instead.
        #[arg(long)]
        inverse: bool,
    },
    /// Half twist coaction x ↦ x₁ t(x₂).
    Ht { expr: String },
    /// Evaluate R (two arguments), theta, t or tinv.
    Functional {
        #[arg(value_enum)]
        which: Functional,
        expr: String,
        second: Option<String>,
    },
    /// St ranks and checks on all matchings with at most N boundary points.
    St {
        #[arg(long, default_value_t = 6)]
        max_points: usize,
    },
    /// Run a verification suite.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        /// Specialization point for rank computations (repeatable).
        #[arg(long = "spec", value_name = "S0")]
        specs: Vec<String>,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
        /// Add a random specialization point drawn from this seed and seed the random cases.
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn element(src: &str) -> Result<SkeinElement> {
    parse_element(src)
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// Like [`run`] with explicit output streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let cache_path = cli.cache.clone().or_else(|| std::env::var_os("SKEINLAB_CACHE").map(PathBuf::from));
    if let Some(path) = &cache_path {
        match cache::load(path) {
            Ok(LoadOutcome::Stale) => {
                let _ = writeln!(err, "note: ignoring cache {} built under other conventions", path.display());
            }
            Ok(_) => {}
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return 2;
            }
        }
    }
    let code = match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    };
    if let Some(path) = &cache_path {
        if let Err(e) = cache::save(path) {
            let _ = writeln!(err, "error: could not write cache: {e}");
            return 2;
        }
    }
    code
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Reduce { diagram } => {
            let d = parse_diagram(&diagram)?;
            writeln!(out, "{}", reduce(&d))?;
        }
        Command::Bracket { diagram } => {
            let word = parse_slice_word(diagram.trim())?;
            writeln!(out, "{}", bracket(&word)?)?;
        }
        Command::Mul { exprs } => {
            let mut acc = bigon::unit();
            for e in &exprs {
                acc = bigon::mul(&acc, &element(e)?);
            }
            writeln!(out, "{acc}")?;
        }
        Command::Comul { expr } => writeln!(out, "{}", bigon::comul(&element(&expr)?))?,
        Command::Counit { expr } => writeln!(out, "{}", bigon::counit(&element(&expr)?))?,
        Command::Antipode { expr } => writeln!(out, "{}", bigon::antipode(&element(&expr)?))?,
        Command::Rot { expr } => writeln!(out, "{}", bigon::rot_star(&element(&expr)?))?,
        Command::Inv { expr, edge, inverse } => {
            let edge = match edge {
                EdgeArg::West => Edge::West,
                EdgeArg::East => Edge::East,
            };
            writeln!(out, "{}", bigon::inv_edge(&element(&expr)?, edge, inverse))?;
        }
        Command::Ht { expr } => writeln!(out, "{}", bigon::ht_coaction(&element(&expr)?))?,
        Command::Functional { which, expr, second } => {
            let x = element(&expr)?;
            let value = match (which, second) {
                (Functional::R, Some(y)) => bigon::r_form(&x, &element(&y)?),
                (Functional::R, None) => return Err(Error::Arity("R takes two elements".into())),
                (_, Some(_)) => return Err(Error::Arity("this functional takes one element".into())),
                (Functional::Theta, None) => bigon::theta_form(&x),
                (Functional::T, None) => bigon::t_form(&x),
                (Functional::Tinv, None) => bigon::t_inv_form(&x),
            };
            writeln!(out, "{value}")?;
        }
        Command::St { max_points } => return st_command(max_points, out),
        Command::Verify { suite, max_degree, specs, json, seed } => {
            let mut specializations = specs.iter().map(|s| s.parse()).collect::<Result<Vec<Specialization>>>()?;
            if specializations.is_empty() {
                specializations = Specialization::defaults();
            }
            if let Some(seed) = seed {
                specializations.push(verify::random_specialization(seed));
            }
            let params = Params { max_degree, specializations, seed };
            let report = verify::run_suite(&suite, &params)?;
            if json {
                writeln!(out, "{}", report.to_json())?;
            } else {
                writeln!(out, "{report}")?;
            }
            return Ok(if report.status.is_pass() { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn st_command(max_points: usize, out: &mut dyn Write) -> Result<i32> {
    let specs = Specialization::defaults();
    let mut ok = true;
    writeln!(out, "{:>6} {:>6} {:>10} {:>8} {:>11} {:>7}", "west", "east", "matchings", "rank", "Peter-Weyl", "checks")?;
    for (nw, ne) in internal::arities(max_points) {
        let matchings = enumerate_matchings(nw, ne)?;
        let mut ranks = Vec::new();
        for s0 in &specs {
            ranks.push(internal::st_rank(nw, ne, s0)?);
        }
        let mut checks = Ok(());
        for m in &matchings {
            checks = checks.and_then(|_| internal::check_intertwiner(m));
            for ins in internal::insertions(m) {
                checks = checks.and_then(|_| internal::check_st_naturality(m, ins));
            }
        }
        let r = ranks[0];
        let consistent = ranks.iter().all(|x| x.rank as u64 == x.catalan && x.catalan == x.peter_weyl);
        ok &= consistent && checks.is_ok();
        let rank_text = ranks.iter().map(|x| x.rank.to_string()).collect::<Vec<_>>().join("/");
        writeln!(
            out,
            "{nw:>6} {ne:>6} {:>10} {rank_text:>8} {:>11} {:>7}",
            r.catalan,
            r.peter_weyl,
            if checks.is_ok() { "ok" } else { "FAIL" }
        )?;
        if let Err(w) = checks {
            writeln!(out, "    {w}")?;
        }
    }
    Ok(if ok { 0 } else { 1 })
}
