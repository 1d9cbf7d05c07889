//! Command-line front end for `fanopoly-core`.
//!
//! Exit codes: 0 on success, 1 for bad input (flags, files, unsupported
//! groups), 2 for internal inconsistencies and failed Monte-Carlo checks.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use fanopoly_core::rational::{self, Rat};
use fanopoly_core::records::{self, McRecord, MomentRecord, OmegaRecord, PolytopeRecord, RootSystemRecord};
use fanopoly_core::{
    build_polytope, build_root_system, classify, mc_moments, omega_generic, weighted_moments, ClassifiedPolytope,
    FanoError, GroupPolytope,
};

#[derive(Debug, Parser)]
#[command(
    name = "fanopoly",
    version,
    about = "Classify Q-Fano group compactifications and test for Kähler-Einstein metrics"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate all polytopes with rho(u) <= rho-max and decide each one.
    Classify(ClassifyArgs),
    /// Verdict records for the polytopes in a JSON or JSONL file.
    Check(PolytopeArgs),
    /// Exact weighted volume and barycenter of P+.
    Barycenter(PolytopeArgs),
    /// Label threshold above which no polytope in dimension `n` is Kähler-Einstein.
    Omega(OmegaArgs),
    /// Print the root datum of a group.
    RootsysShow(RootsysArgs),
}

#[derive(Debug, Args)]
pub struct McArgs {
    /// Cross-check every exact moment against Monte-Carlo (3 standard errors).
    #[arg(long)]
    pub verify: bool,
    #[arg(long, default_value_t = 200_000)]
    pub mc_samples: u64,
    #[arg(long, env = "FANOPOLY_SEED", default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[arg(long, default_value = "so4")]
    pub group: String,
    /// Cutoff on rho(u), e.g. `3` or `7/2`.
    #[arg(long, default_value = "3")]
    pub rho_max: String,
    #[arg(long, default_value_t = 1)]
    pub parallel: usize,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[command(flatten)]
    pub mc: McArgs,
}

#[derive(Debug, Args)]
pub struct PolytopeArgs {
    #[arg(long)]
    pub polytope: PathBuf,
    #[arg(long, default_value_t = 1)]
    pub parallel: usize,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[command(flatten)]
    pub mc: McArgs,
}

#[derive(Debug, Args)]
pub struct OmegaArgs {
    #[arg(long)]
    pub dim: u32,
    #[arg(long, default_value = "1e-9")]
    pub tol: String,
}

#[derive(Debug, Args)]
pub struct RootsysArgs {
    #[arg(long, default_value = "so4")]
    pub group: String,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Internal(String),
}

impl From<FanoError> for Failure {
    fn from(e: FanoError) -> Failure {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

type CliResult<T> = Result<T, Failure>;

fn pool(threads: usize) -> CliResult<rayon::ThreadPool> {
    if threads == 0 {
        return Err(Failure::Input("--parallel must be at least 1".into()));
    }
    rayon::ThreadPoolBuilder::new().num_threads(threads).build().map_err(|e| Failure::Internal(e.to_string()))
}

fn write_output(path: &Option<PathBuf>, text: &str, out: &mut dyn Write) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => out.write_all(text.as_bytes()).map_err(|e| Failure::Internal(e.to_string())),
    }
}

fn verify(p: &GroupPolytope, mc: &McArgs) -> CliResult<McRecord> {
    let exact = weighted_moments(p)?;
    let est = mc_moments(p, mc.mc_samples, mc.seed)?;
    Ok(McRecord::new(&est, mc.seed, &exact))
}

fn check_agreement(records: &[(Vec<Vec<i64>>, McRecord)]) -> CliResult<()> {
    match records.iter().find(|(_, r)| !r.agrees) {
        Some((normals, _)) => {
            Err(Failure::Internal(format!("Monte-Carlo disagrees with exact moments for {normals:?}")))
        }
        None => Ok(()),
    }
}

fn run_classify(args: &ClassifyArgs, out: &mut dyn Write) -> CliResult<()> {
    let rho_max = rational::parse_rat(&args.rho_max)?;
    let rs = Arc::new(build_root_system(&args.group)?);
    let text = pool(args.parallel)?.install(|| -> CliResult<String> {
        let report = classify(rs, &rho_max)?;
        if args.mc.verify {
            let checks = report
                .polytopes
                .iter()
                .map(|e| Ok((e.outer_normals(), verify(&e.polytope, &args.mc)?)))
                .collect::<CliResult<Vec<_>>>()?;
            check_agreement(&checks)?;
        }
        Ok(records::report_jsonl(&report)?)
    })?;
    write_output(&args.output, &text, out)
}

fn load_polytopes(path: &PathBuf) -> CliResult<Vec<GroupPolytope>> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    records::parse_polytope_specs(&text)?
        .iter()
        .map(|spec| {
            let rs = Arc::new(build_root_system(&spec.group)?);
            Ok(build_polytope(rs, &spec.outer_normals)?)
        })
        .collect()
}

fn run_check(args: &PolytopeArgs, out: &mut dyn Write) -> CliResult<()> {
    let polytopes = load_polytopes(&args.polytope)?;
    let text = pool(args.parallel)?.install(|| -> CliResult<String> {
        let mut text = String::new();
        let mut checks = Vec::new();
        for p in polytopes {
            if args.mc.verify {
                checks.push((p.outer_normals(), verify(&p, &args.mc)?));
            }
            let entry = ClassifiedPolytope::evaluate(p)?;
            text.push_str(&records::to_line(&PolytopeRecord::new(&entry))?);
        }
        check_agreement(&checks)?;
        Ok(text)
    })?;
    write_output(&args.output, &text, out)
}

fn run_barycenter(args: &PolytopeArgs, out: &mut dyn Write) -> CliResult<()> {
    let polytopes = load_polytopes(&args.polytope)?;
    let (text, checks) = pool(args.parallel)?.install(|| -> CliResult<_> {
        let mut text = String::new();
        let mut checks = Vec::new();
        for p in &polytopes {
            let m = weighted_moments(p)?;
            let mc = if args.mc.verify {
                let r = verify(p, &args.mc)?;
                checks.push((p.outer_normals(), r.clone()));
                Some(r)
            } else {
                None
            };
            text.push_str(&records::to_line(&MomentRecord::new(p, &m, mc))?);
        }
        Ok((text, checks))
    })?;
    write_output(&args.output, &text, out)?;
    check_agreement(&checks)
}

fn run_omega(args: &OmegaArgs, out: &mut dyn Write) -> CliResult<()> {
    let tol: Rat = rational::parse_rat(&args.tol)?;
    let iv = omega_generic(args.dim, &tol)?;
    write_output(&None, &records::to_line(&OmegaRecord::new(&iv, &tol))?, out)
}

fn run_rootsys(args: &RootsysArgs, out: &mut dyn Write) -> CliResult<()> {
    let rs = build_root_system(&args.group)?;
    write_output(&None, &records::to_line(&RootSystemRecord::new(&rs)?)?, out)
}

/// Parse `args` (including the program name) and execute; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return 1;
            }
            let _ = write!(out, "{}", e.render());
            return 0;
        }
    };
    let result = match &cli.command {
        Command::Classify(a) => run_classify(a, out),
        Command::Check(a) => run_check(a, out),
        Command::Barycenter(a) => run_barycenter(a, out),
        Command::Omega(a) => run_omega(a, out),
        Command::RootsysShow(a) => run_rootsys(a, out),
    };
    match result {
        Ok(()) => 0,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Internal(msg)) => {
            let _ = writeln!(err, "internal error: {msg}");
            2
        }
    }
}
