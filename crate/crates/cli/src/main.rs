//! `hdepth`: Hilbert depth of squarefree monomial ideals from the command line.
//!
//! Exit codes: 0 success, 1 violations or undocumented table diffs, 2 usage
//! and input errors, 3 capacity limits, 4 truncated or budget-limited runs.

mod render;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use hdepth_core::family::{minimal_witnesses, FamilyEvaluator, RowCheck, WitnessOrder, WitnessOutcome};
use hdepth_core::hilbert::hdepth_with;
use hdepth_core::ideal::{alpha_of_complement, alpha_of_ideal, parse_ideal};
use hdepth_core::verify::{
    certify_lemma_with, kk_oracle_sweep, proof_table, run_campaign, CampaignConfig, LemmaId, TableId,
    DEFAULT_NODE_CAP,
};
use hdepth_core::{Error, Execution};

use render::{Format, Output};

/// Gaps printed in the reference table of the `I_{n,m}` family.
const TABLE_GAPS: [i64; 16] = [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 20, 30, 40, 50, 100];
const NODE_CAP_ENV: &str = "HDEPTH_NODE_CAP";

#[derive(Parser)]
#[command(name = "hdepth", version, about = "Hilbert depth of squarefree monomial ideals and quotients")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for data-parallel loops (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert depth of S/I and/or I for an ideal file.
    Hdepth(HdepthArgs),
    /// Closed forms for I_{n,m} = (x1...xm) ∩ (x_{m+1},...,x_n).
    Family(FamilyArgs),
    /// Oracles, lemma certification, proof tables and random campaigns.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Quotient,
    Ideal,
    Both,
}

#[derive(Args)]
struct HdepthArgs {
    /// Ideal file: one generator per line, `x1*x3` or `1 3`; `#` comments.
    path: PathBuf,
    /// Number of variables (default: the largest index in the file).
    #[arg(long)]
    n: Option<usize>,
    /// Which module to report: S/I, I, or both.
    #[arg(long, value_enum, default_value_t = Mode::Both)]
    mode: Mode,
    /// Also print the witness β-row and one negative entry per larger q.
    #[arg(long)]
    explain: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    /// Smallest n, then smallest m.
    Lex,
    /// Smallest q = hdepth(S/I), then n, then m.
    MinQ,
}

#[derive(Args)]
#[command(group(ArgGroup::new("what").required(true).args(["m", "table", "witness"])))]
struct FamilyArgs {
    /// Number of variables of I_{n,m}.
    #[arg(long, requires = "m")]
    n: Option<usize>,
    /// Length of the product x1...xm (1 <= m < n).
    #[arg(long, requires = "n")]
    m: Option<usize>,
    /// Minimal witnesses for a list of gaps d (default: the 16 tabulated gaps).
    #[arg(long, conflicts_with_all = ["n", "m", "witness"])]
    table: bool,
    /// Table for d = 0..=D.
    #[arg(long, requires = "table", conflicts_with = "d_list")]
    d_max: Option<i64>,
    /// Table for the given comma-separated gaps.
    #[arg(long, requires = "table", value_delimiter = ',')]
    d_list: Vec<i64>,
    /// Minimal witness of one gap.
    #[arg(long, conflicts_with_all = ["n", "m"], requires = "d")]
    witness: bool,
    /// Gap d = hdepth(S/I) - hdepth(I) to search for.
    #[arg(long, requires = "witness")]
    d: Option<i64>,
    /// Largest n searched by --table and --witness.
    #[arg(long, default_value_t = 400)]
    n_cap: usize,
    /// Which witness counts as minimal.
    #[arg(long, value_enum, default_value_t = Order::MinQ)]
    order: Order,
    /// Only evaluate β-entries with k - m odd (the negative candidates).
    #[arg(long)]
    fast: bool,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Enumerate the relaxed α-polytope and check one β upper bound.
    Lemma {
        /// One of L3.2-q9, L3.2-q10, L3.3, L3.4, L3.5, L3.6.
        #[arg(long)]
        id: String,
        /// Number of variables; at least q + 2 and at most 16.
        #[arg(long)]
        n: usize,
        /// DFS node budget per α_2 branch (default: $HDEPTH_NODE_CAP or 10^8).
        #[arg(long)]
        node_cap: Option<u64>,
        /// Drop the β >= 0 constraints (sanity run; violations expected).
        #[arg(long)]
        weakened: bool,
    },
    /// Recompute the tabulated helper functions and case claims.
    Tables {
        /// All tables for this q (8, 9 or 10).
        #[arg(long, conflicts_with = "which")]
        q: Option<usize>,
        /// One table by name: fg-q9, fg-q10, fgh-q8, f2to5-q8-L3.4, f2to6-q8-L3.5, f2to7-q8-L3.6.
        #[arg(long)]
        which: Option<String>,
    },
    /// Random ideals in m², checking hdepth(I) >= hdepth(S/I) - 1.
    Campaign {
        /// Largest number of variables.
        #[arg(long)]
        n: usize,
        /// Smallest number of variables (default: min(4, n)).
        #[arg(long)]
        n_min: Option<usize>,
        /// Random ideals per n.
        #[arg(long)]
        trials: u64,
        /// Base seed; every trial derives its own stream from (seed, n, trial).
        #[arg(long)]
        seed: u64,
    },
    /// Kruskal–Katona bounds against colex shadows, exhaustively.
    Oracle {
        /// Largest number of variables.
        #[arg(long)]
        n: usize,
        /// Largest degree.
        #[arg(long)]
        k: usize,
    },
}

/// A failed command: exit code plus message for stderr.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Capacity { .. } => 3,
            Error::Domain(_) | Error::Parse { .. } => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// Rendered output together with the exit code it implies.
struct Report {
    output: Output,
    code: u8,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            print!("{}", report.output.0);
            ExitCode::from(report.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    if let Some(jobs) = cli.jobs {
        configure_jobs(jobs)?;
    }
    let fmt = cli.format;
    match &cli.command {
        Command::Hdepth(args) => cmd_hdepth(args, fmt),
        Command::Family(args) => cmd_family(args, fmt),
        Command::Verify(v) => cmd_verify(v, fmt),
    }
}

fn configure_jobs(jobs: usize) -> Result<(), Failure> {
    if jobs == 0 {
        return Err(Failure::usage("--jobs must be at least 1"));
    }
    #[cfg(feature = "parallel")]
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build_global()
        .map_err(|e| Failure::usage(format!("cannot configure worker pool: {e}")))?;
    Ok(())
}

fn cmd_hdepth(args: &HdepthArgs, fmt: Format) -> Result<Report, Failure> {
    let text = fs::read_to_string(&args.path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", args.path.display())))?;
    let n = match args.n {
        Some(n) => n,
        None => max_index(&text)?,
    };
    let ideal = parse_ideal(&text, n)?;
    if ideal.is_zero() {
        return Err(Failure::usage("the ideal file has no generators; the zero ideal is not supported"));
    }
    let exec = Execution::default();
    let quotient = match args.mode {
        Mode::Quotient | Mode::Both => Some(hdepth_with(&alpha_of_complement(&ideal)?, exec)?),
        Mode::Ideal => None,
    };
    let whole = match args.mode {
        Mode::Ideal | Mode::Both => Some(hdepth_with(&alpha_of_ideal(&ideal)?, exec)?),
        Mode::Quotient => None,
    };
    let output = render::hdepth(fmt, &ideal, quotient.as_ref(), whole.as_ref(), args.explain);
    Ok(Report { output, code: 0 })
}

/// Largest variable index mentioned in an ideal file, used when `--n` is absent.
fn max_index(text: &str) -> Result<usize, Failure> {
    // parse against the widest ring, then read the indices back
    let ideal = parse_ideal(text, hdepth_core::ideal::MAX_VARIABLES)?;
    let n = ideal.generators().iter().map(|g| g.max_index()).max().unwrap_or(0);
    if n == 0 {
        return Err(Failure::usage(
            "the ideal file has no generators; the zero ideal is not supported",
        ));
    }
    Ok(n)
}

fn cmd_family(args: &FamilyArgs, fmt: Format) -> Result<Report, Failure> {
    let check = if args.fast { RowCheck::OddShift } else { RowCheck::AllK };
    let order = match args.order {
        Order::Lex => WitnessOrder::Lex,
        Order::MinQ => WitnessOrder::MinQ,
    };
    if let (Some(n), Some(m)) = (args.n, args.m) {
        if m == 0 || m >= n {
            return Err(Failure::usage(format!("I_{{n,m}} needs 1 <= m < n, got n={n} m={m}")));
        }
        let record = FamilyEvaluator::new(n).record(n, m, check)?;
        return Ok(Report {
            output: render::family_records(fmt, &[record]),
            code: 0,
        });
    }
    let ds: Vec<i64> = if args.witness {
        vec![args.d.expect("clap enforces --d with --witness")]
    } else if let Some(d_max) = args.d_max {
        if d_max < 0 {
            return Err(Failure::usage("--d-max must be nonnegative"));
        }
        (0..=d_max).collect()
    } else if !args.d_list.is_empty() {
        args.d_list.clone()
    } else {
        TABLE_GAPS.to_vec()
    };
    let outcomes = minimal_witnesses(&ds, args.n_cap, order, check, Execution::default());
    let settled = outcomes.iter().all(|o| matches!(o, WitnessOutcome::Found { .. }));
    Ok(Report {
        output: render::witnesses(fmt, &outcomes, order, args.n_cap),
        code: if settled { 0 } else { 4 },
    })
}

fn node_cap(flag: Option<u64>) -> Result<u64, Failure> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var(NODE_CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("{NODE_CAP_ENV} must be a decimal integer, got `{v}`"))),
        Err(_) => Ok(DEFAULT_NODE_CAP),
    }
}

fn cmd_verify(cmd: &VerifyCommand, fmt: Format) -> Result<Report, Failure> {
    let exec = Execution::default();
    match cmd {
        VerifyCommand::Lemma {
            id,
            n,
            node_cap: cap,
            weakened,
        } => {
            let id: LemmaId = id.parse()?;
            let cap = node_cap(*cap)?;
            if cap == 0 {
                return Err(Failure::usage("node cap must be positive"));
            }
            let report = certify_lemma_with(id, *n, cap, *weakened, exec)?;
            let code = if report.violation_count > 0 {
                1
            } else if report.truncated {
                4
            } else {
                0
            };
            Ok(Report {
                output: render::lemma(fmt, &report),
                code,
            })
        }
        VerifyCommand::Tables { q, which } => {
            let ids = match (q, which) {
                (_, Some(name)) => vec![name.parse::<TableId>()?],
                (Some(q), None) => TableId::for_q(*q)?,
                (None, None) => TableId::ALL.to_vec(),
            };
            let tables: Vec<_> = ids.into_iter().map(proof_table).collect();
            let undocumented = tables.iter().any(|t| t.undocumented_diffs().next().is_some());
            Ok(Report {
                output: render::tables(fmt, &tables),
                code: if undocumented { 1 } else { 0 },
            })
        }
        VerifyCommand::Campaign {
            n,
            n_min,
            trials,
            seed,
        } => {
            let lo = n_min.unwrap_or(4.min(*n));
            if lo > *n {
                return Err(Failure::usage(format!("--n-min {lo} exceeds --n {n}")));
            }
            let config = CampaignConfig {
                n_values: (lo..=*n).collect(),
                trials: *trials,
                seed: *seed,
            };
            let report = run_campaign(&config, exec)?;
            Ok(Report {
                code: if report.passed() { 0 } else { 1 },
                output: render::campaign(fmt, &report),
            })
        }
        VerifyCommand::Oracle { n, k } => {
            let report = kk_oracle_sweep(*n, *k, exec)?;
            Ok(Report {
                code: if report.passed() { 0 } else { 1 },
                output: render::oracle(fmt, &report),
            })
        }
    }
}
