use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use guarded_ilp::io::{self, Format, Naming};
use guarded_ilp::oracle::{self, GeneratorParams, OracleConfig};
use guarded_ilp::{learner, subsumption, Instance, Mode};

#[derive(Parser)]
#[command(
    name = "guarded-ilp",
    version,
    about = "Learn guarded clauses from ground example clauses"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide consistency and print the first solution.
    Learn(LearnArgs),
    /// Print every canonical solution.
    Enumerate(LearnArgs),
    /// Check a hypothesis against an instance with both subsumption checkers.
    Check {
        #[arg(long)]
        hypothesis: PathBuf,
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Generate instances.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Exhaustive consistency check for small instances.
    Oracle {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long, default_value_t = oracle::DEFAULT_CEILING)]
        ceiling: u128,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print a seeded random instance as a clause file.
    Random(RandomArgs),
}

#[derive(Subcommand)]
enum GenCommand {
    /// Clause file for a hitting-string instance.
    Hitting { strings: PathBuf },
}

#[derive(Args)]
struct LearnArgs {
    file: PathBuf,
    #[arg(long, default_value_t = 1)]
    k: usize,
    #[arg(long, value_enum, default_value_t = ModeArg::Guarded)]
    mode: ModeArg,
    /// Shrink the solution to a small sub-solution.
    #[arg(long)]
    shrink: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Keep the learner's variable names instead of X, Y, Z.
    #[arg(long)]
    raw_names: bool,
}

impl OutputArgs {
    fn format(&self) -> Format {
        match self.format {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        }
    }

    fn naming(&self) -> Naming {
        if self.raw_names {
            Naming::Raw
        } else {
            Naming::Short
        }
    }
}

#[derive(Args)]
struct RandomArgs {
    #[arg(long)]
    seed: u64,
    #[arg(long, default_value_t = 3)]
    relations: usize,
    #[arg(long, default_value_t = 3)]
    max_arity: usize,
    #[arg(long, default_value_t = 3)]
    positives: usize,
    #[arg(long, default_value_t = 3)]
    negatives: usize,
    #[arg(long, default_value_t = 4)]
    constants: usize,
    #[arg(long, default_value_t = 4)]
    literals: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Guarded,
    Datalogpm,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load(path: &Path, k: usize, mode: Mode) -> anyhow::Result<Instance> {
    let text = read(path)?;
    io::parse_instance(&text, k, mode).with_context(|| format!("parsing {}", path.display()))
}

fn exit(consistent: bool) -> ExitCode {
    ExitCode::from(if consistent { 0 } else { 1 })
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Learn(args) => {
            let mode = match args.mode {
                ModeArg::Guarded => Mode::Guarded,
                ModeArg::Datalogpm => Mode::DatalogPm,
            };
            let inst = load(&args.file, args.k, mode)?;
            let mut result = match mode {
                Mode::DatalogPm => learner::learn_datalog_pm(&inst)?,
                Mode::Guarded => learner::learn_k_guarded(&inst)?,
            };
            if args.shrink {
                if let learner::Outcome::Solution(h) = &result.outcome {
                    result.outcome =
                        learner::Outcome::Solution(learner::shrink_solution(h, &inst)?);
                }
            }
            print!(
                "{}",
                io::render_result(&result, args.output.format(), args.output.naming())
            );
            Ok(exit(result.is_consistent()))
        }
        Command::Enumerate(args) => {
            let mode = match args.mode {
                ModeArg::Guarded => Mode::Guarded,
                ModeArg::Datalogpm => Mode::DatalogPm,
            };
            let inst = load(&args.file, args.k, mode)?;
            let mut set = learner::enumerate_canonical(&inst)?;
            if args.shrink {
                set.solutions = set
                    .solutions
                    .iter()
                    .map(|h| learner::shrink_solution(h, &inst))
                    .collect::<guarded_ilp::Result<_>>()?;
            }
            print!(
                "{}",
                io::render_canonical(&set, args.output.format(), args.output.naming())
            );
            Ok(exit(!set.solutions.is_empty()))
        }
        Command::Check {
            hypothesis,
            file,
            k,
        } => {
            let h = io::parse_hypothesis(&read(&hypothesis)?, k)
                .with_context(|| format!("parsing {}", hypothesis.display()))?;
            let text = read(&file)?;
            let inst = io::parse_instance_unrestricted(&text, k, Mode::Guarded)?;
            let mut ok = true;
            let labeled = inst
                .positives()
                .iter()
                .map(|c| ('+', c))
                .chain(inst.negatives().iter().map(|c| ('-', c)));
            for (label, clause) in labeled {
                let guarded = subsumption::subsumes_hypothesis(&h, clause)?.is_some();
                let general = subsumption::subsumes_general(h.clause(), clause).is_some();
                if guarded != general {
                    bail!("checkers disagree on {clause}");
                }
                let wanted = label == '+';
                ok &= guarded == wanted;
                let verdict = if guarded { "subsumed" } else { "not subsumed" };
                let mark = if guarded == wanted { "ok" } else { "FAIL" };
                println!("{mark} {label} {verdict}: {clause}");
            }
            println!("# {}", if ok { "solution" } else { "not a solution" });
            Ok(exit(ok))
        }
        Command::Gen(GenCommand::Hitting { strings }) => {
            let hs = io::read_hitting_strings(&read(&strings)?)?;
            let inst = oracle::gen_hitting_instance(&hs)?;
            print!("{}", io::write_clause_file(&inst));
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle {
            file,
            k,
            max_size,
            ceiling,
            output,
        } => {
            let inst = io::parse_instance_unrestricted(&read(&file)?, k, Mode::Guarded)?;
            let config = OracleConfig {
                max_hypothesis_size: max_size,
                ceiling,
            };
            let found = oracle::oracle_consistency(&inst, &config)?;
            let set = learner::CanonicalSet {
                cause: found
                    .is_none()
                    .then_some(learner::InconsistentCause::AllGuardsRejected),
                solutions: found.into_iter().collect(),
                stats: learner::LearnStats::default(),
            };
            print!(
                "{}",
                io::render_canonical(&set, output.format(), output.naming())
            );
            Ok(exit(!set.solutions.is_empty()))
        }
        Command::Random(args) => {
            let params = GeneratorParams {
                relation_count: args.relations,
                max_arity: args.max_arity,
                clause_count_pos: args.positives,
                clause_count_neg: args.negatives,
                constant_count: args.constants,
                literals_per_clause: args.literals,
                seed: args.seed,
            };
            print!(
                "{}",
                io::write_clause_file(&oracle::random_instance(&params)?)
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
