//! `shiftrank` command-line front end.
//!
//! Exit status: 0 on success, 2 on malformed input, 3 when a capacity limit
//! or search budget is hit, 4 when an oracle disagrees with a formula or an
//! internal consistency check fails. Errors print one line to stderr:
//! `error kind=<kind> exit=<code> reason=<text>`.

mod human;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use shiftrank::bounds::{recognize_family, QuotientFamily};
use shiftrank::group::parse_cayley;
use shiftrank::lattice::enumerate_lattice;
use shiftrank::shift::{alpha_profile, aut_decomposition};
use shiftrank::spec::{Family, GroupSpec};
use shiftrank::{Error, ErrorKind, Limits};

use report::{Report, Subject};

#[derive(Parser, Debug)]
#[command(name = "shiftrank", version, about = "Automorphism groups of full shifts over finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: GlobalOpts,
}

#[derive(Args, Debug)]
struct GlobalOpts {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest group order to materialize.
    #[arg(long, global = true)]
    max_order: Option<usize>,
    /// Largest group order whose subgroup lattice is enumerated.
    #[arg(long, global = true)]
    lattice_max_order: Option<usize>,
    /// Largest number of configurations scanned by the orbit census.
    #[arg(long, global = true)]
    census_budget: Option<u64>,
    /// Largest number of local rules enumerated by the oracle.
    #[arg(long, global = true)]
    rule_budget: Option<u64>,
    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Read the group from a Cayley table file instead of a spec.
    #[arg(long, global = true, value_name = "FILE")]
    cayley: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct Target {
    /// Group spec, e.g. `C4`, `D8`, `Q8`, `S4`, `C2xC2`, `C2wrS3`.
    spec: Option<String>,
}

#[derive(Args, Debug)]
struct WithQ {
    #[command(flatten)]
    target: Target,
    /// Alphabet size.
    #[arg(long, default_value_t = 2)]
    q: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Order, abelian and Dedekind flags, rank.
    Group(Target),
    /// Subgroup table, conjugacy classes and class counts.
    Lattice {
        #[command(flatten)]
        target: Target,
        /// Also print the Möbius matrix.
        #[arg(long)]
        mobius: bool,
    },
    /// Orbit census by subgroup class.
    Alpha(WithQ),
    /// Decomposition of the automorphism group and its order.
    Aut(WithQ),
    /// Every rank bound, with provenance.
    Bounds(WithQ),
    /// Brute-force census and automorphism count checked against the formulas.
    Oracle(WithQ),
    /// Lower bounds along the chain Z > pZ > p^2 Z > ...
    Chain {
        /// `c<p>pow`, e.g. `c2pow`.
        #[arg(long, default_value = "c2pow")]
        family: String,
        #[arg(long)]
        depth: u32,
        #[arg(long, default_value_t = 2)]
        q: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Group(_) => "group",
            Command::Lattice { .. } => "lattice",
            Command::Alpha(_) => "alpha",
            Command::Aut(_) => "aut",
            Command::Bounds(_) => "bounds",
            Command::Oracle(_) => "oracle",
            Command::Chain { .. } => "chain",
        }
    }
}

fn limits_from(opts: &GlobalOpts) -> Limits {
    let mut limits = Limits::default();
    if let Some(v) = opts.max_order {
        limits.max_order = v;
    }
    if let Some(v) = opts.lattice_max_order {
        limits.lattice_max_order = v;
    }
    if let Some(v) = opts.census_budget {
        limits.census_budget = v;
    }
    if let Some(v) = opts.rule_budget {
        limits.rule_budget = v;
    }
    limits
}

fn subject(target: &Target, opts: &GlobalOpts, limits: &Limits) -> Result<Subject, Error> {
    if let Some(path) = &opts.cayley {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
            spec: path.display().to_string(),
            reason: e.to_string(),
        })?;
        let label = path.file_stem().map_or("G".into(), |s| s.to_string_lossy().into_owned());
        let group = parse_cayley(&text, label)?;
        if group.order() > limits.max_order {
            return Err(Error::Capacity {
                what: "group order",
                requested: group.order().to_string(),
                limit: limits.max_order.to_string(),
            });
        }
        let family = recognize_family(&group);
        return Ok(Subject { group, family });
    }
    let text = target
        .spec
        .as_deref()
        .ok_or_else(|| Error::InvalidArgument("a group spec or --cayley <file> is required".into()))?;
    let spec = GroupSpec::parse(text)?;
    let group = spec.build(limits)?.with_label(text);
    let family = match spec.family() {
        Family::Other => recognize_family(&group),
        f => f,
    };
    Ok(Subject { group, family })
}

fn run(cli: &Cli, limits: &Limits) -> Result<Report, Error> {
    let opts = &cli.global;
    let mut report = Report::empty(cli.command.name(), limits);
    match &cli.command {
        Command::Group(t) => {
            let s = subject(t, opts, limits)?;
            report.group = Some(report::group_section(&s, limits)?);
        }
        Command::Lattice { target, mobius } => {
            let s = subject(target, opts, limits)?;
            let l = enumerate_lattice(&s.group, limits)?;
            let stats = l.stats(&limits.rank);
            report.group = Some(report::group_section(&s, limits)?);
            report.lattice = Some(report::lattice_section(&l, &stats, true, *mobius));
        }
        Command::Alpha(a) | Command::Aut(a) | Command::Bounds(a) | Command::Oracle(a) => {
            let s = subject(&a.target, opts, limits)?;
            let l = enumerate_lattice(&s.group, limits)?;
            let stats = l.stats(&limits.rank);
            let profile = alpha_profile(&l, a.q)?;
            let d = aut_decomposition(&l, &profile)?;
            report.group = Some(report::group_section(&s, limits)?);
            report.q = Some(a.q);
            report.lattice = Some(report::lattice_section(&l, &stats, false, false));
            report.alpha = Some(report::alpha_section(&s.group, &profile));
            let with_rank = matches!(cli.command, Command::Aut(_) | Command::Bounds(_));
            if !matches!(cli.command, Command::Alpha(_)) {
                report.aut = Some(report::aut_section(&d, limits, with_rank)?);
            }
            if matches!(cli.command, Command::Bounds(_)) {
                report.bounds = Some(report::bounds_section(&s, &stats, a.q, limits)?);
            }
            if matches!(cli.command, Command::Oracle(_)) {
                report.oracle = Some(report::oracle_section(&l, &profile, &d, limits)?);
            }
        }
        Command::Chain { family, depth, q } => {
            let f = QuotientFamily::parse(family)?;
            report.q = Some(*q);
            report.bounds = Some(report::chain_section(family, f, *depth, *q, limits)?);
        }
    }
    Ok(report)
}

fn fail(e: &Error) -> ExitCode {
    let (kind, code) = match (e, e.kind()) {
        (Error::CrossCheck(_), _) => ("crosscheck", 4),
        (_, ErrorKind::Parse) => ("parse", 2),
        (_, ErrorKind::Capacity) => ("capacity", 3),
        (_, ErrorKind::Internal) => ("internal", 4),
    };
    let reason = e.to_string().replace('\n', " ");
    eprintln!("error kind={kind} exit={code} reason={reason}");
    ExitCode::from(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.global.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            return fail(&Error::InvalidArgument(format!("thread pool: {e}")));
        }
    }
    let limits = limits_from(&cli.global);
    let report = match run(&cli, &limits) {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };
    if cli.global.json {
        println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    } else {
        print!("{}", human::render(&report));
    }
    if !report.verdict_ok() {
        return fail(&Error::CrossCheck("oracle disagrees with the structure formulas".into()));
    }
    ExitCode::SUCCESS
}
