//! `binomconv`: map configurations through the bijection, render and
//! enumerate them, and run the exact verification suites.

mod report;
mod suites;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use binomconv::bijection::{phi_inverse_traced, phi_traced, TraceLevel};
use binomconv::configuration::{enumerate_ordered, enumerate_tower_free};
use binomconv::{Configuration, Execution, RenderMode};
use clap::{Args, Parser, Subcommand, ValueEnum};

use report::Report;
use suites::{Bounds, BIJECTION_N_LIMIT};

const USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "binomconv",
    version,
    about = "Exact checks for central binomial convolutions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply the bijection or its inverse to a configuration.
    Map(MapArgs),
    /// Run verification suites and report every case.
    Verify(VerifyArgs),
    /// Print a configuration in compact or grid form.
    Render {
        config: String,
        #[arg(long, value_enum, default_value_t = Mode::Grid)]
        mode: Mode,
    },
    /// List all ordered or all tower-free configurations of length n.
    Enumerate {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args)]
struct MapArgs {
    /// Compact form, e.g. `.A11.b2B2..`.
    config: String,
    /// Ordered configuration to tower-free one (default).
    #[arg(long, conflicts_with = "inverse")]
    forward: bool,
    /// Tower-free configuration back to the ordered one.
    #[arg(long)]
    inverse: bool,
    /// Print every recursion level.
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    suite: Suite,
    #[arg(long, default_value_t = 8)]
    n_max: usize,
    #[arg(long, default_value_t = 8)]
    t_max: usize,
    /// Truncation order of the power series.
    #[arg(long, default_value_t = 64)]
    order: usize,
    /// Seed for the sampled rational parameters.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads: 1 runs sequentially, 0 uses every core.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Bijection,
    Identities,
    Series,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Compact,
    Grid,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Ordered,
    TowerFree,
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Map(args) => map(args),
        Command::Verify(args) => verify(args),
        Command::Render { config, mode } => match parse(&config) {
            Ok(c) => {
                println!("{}", c.render(mode.into()));
                ExitCode::SUCCESS
            }
            Err(code) => code,
        },
        Command::Enumerate { kind, n } => {
            let all: Box<dyn Iterator<Item = Configuration>> = match kind {
                Kind::Ordered => Box::new(enumerate_ordered(n)),
                Kind::TowerFree => Box::new(enumerate_tower_free(n)),
            };
            for c in all {
                println!("{c}");
            }
            ExitCode::SUCCESS
        }
    }
}

impl From<Mode> for RenderMode {
    fn from(m: Mode) -> RenderMode {
        match m {
            Mode::Compact => RenderMode::Compact,
            Mode::Grid => RenderMode::Grid,
        }
    }
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(USAGE)
}

fn parse(s: &str) -> Result<Configuration, ExitCode> {
    s.parse()
        .map_err(|e| usage_error(format!("cannot parse {s:?}: {e}")))
}

fn map(args: MapArgs) -> ExitCode {
    let input = match parse(&args.config) {
        Ok(c) => c,
        Err(code) => return code,
    };
    let result = if args.inverse {
        phi_inverse_traced(&input)
    } else {
        phi_traced(&input)
    };
    let (image, levels) = match result {
        Ok(r) => r,
        Err(e) => return usage_error(format!("{:?} is outside the domain: {e}", args.config)),
    };
    if args.trace {
        for level in &levels {
            print_level(level, args.inverse);
        }
        println!("result:");
    }
    println!("{}", image.render(RenderMode::Compact));
    println!("{}", image.render(RenderMode::Grid));
    ExitCode::SUCCESS
}

fn print_level(level: &TraceLevel, inverse: bool) {
    let labels = if inverse {
        ["pair code", "compressed", "skeleton"]
    } else {
        ["skeleton", "tower-configuration", "replaced"]
    };
    println!("level {}:", level.depth);
    println!("  {:<21} {}", "input:", level.input);
    println!("  {:<21} {}", format!("{}:", labels[0]), level.skeleton);
    println!("  {:<21} {}", format!("{}:", labels[1]), level.compressed);
    println!("  {:<21} {}", format!("{}:", labels[2]), level.intermediate);
    for s in &level.sections {
        println!(
            "  section {}..{} {:?}: {} -> {}",
            s.start,
            s.end,
            s.variant,
            s.before_compact(),
            s.after_compact()
        );
    }
    println!("  {:<21} {}", "output:", level.output);
}

fn verify(args: VerifyArgs) -> ExitCode {
    let with_bijection = matches!(args.suite, Suite::Bijection | Suite::All);
    if with_bijection && args.n_max > BIJECTION_N_LIMIT {
        return usage_error(format!(
            "--n-max {} exceeds the exhaustive bijection limit {BIJECTION_N_LIMIT}",
            args.n_max
        ));
    }
    if args.order == 0 {
        return usage_error("--order must be at least 1");
    }
    let bounds = Bounds {
        n_max: args.n_max,
        t_max: args.t_max,
        order: args.order,
        seed: args.seed,
    };
    let exec = if args.jobs == 1 {
        Execution::Sequential
    } else {
        Execution::Parallel
    };

    let start = Instant::now();
    let cases = Execution::with_jobs(args.jobs, || {
        let mut jobs = Vec::new();
        if with_bijection {
            jobs.extend(suites::bijection(&bounds, exec));
        }
        if matches!(args.suite, Suite::Identities | Suite::All) {
            jobs.extend(suites::identities(&bounds));
        }
        if matches!(args.suite, Suite::Series | Suite::All) {
            jobs.extend(suites::series(&bounds));
        }
        suites::run(jobs, exec)
    });
    let name = args.suite.to_possible_value().expect("no skipped variants");
    let report = Report::new(name.get_name(), cases, start.elapsed().as_secs_f64());

    let body = match args.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
    };
    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, body) {
                return usage_error(format!("cannot write {}: {e}", path.display()));
            }
            println!("{}", report.summary());
        }
        None => print!("{body}"),
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
