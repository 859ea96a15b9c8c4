use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use rehard::automata::{
    complement_dfa, determinize, dfa_to_re, minimize, parse_automaton, product, re_to_nfa, Automaton, BoolOp, Dfa,
};
use rehard::gadget::{
    build_target, format_examples, gadget_size, make_challenge, parse_ratio, simulate_oracle, Challenge, ChallengeMode,
    GadgetConfig, Variant,
};
use rehard::harness::{advantage_estimate, ExperimentSpec, LearnerKind};
use rehard::prg::{default_predicate, sample_hypergraph, Predicate};
use rehard::reductions::{dnf_to_re, formula_to_re, BooleanFormula, Dnf, Formula, Target};
use rehard::regex::{print_with, size_of, Style};
use rehard::{equivalent_upto, matches, parse, Regex, Verdict, Word};

#[derive(Parser)]
#[command(name = "rehard", version, about = "Extended regular expressions, automata and the local-PRG labeling gadget")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum StyleArg {
    Minimal,
    Grouped,
    Full,
}

impl From<StyleArg> for Style {
    fn from(s: StyleArg) -> Style {
        match s {
            StyleArg::Minimal => Style::Minimal,
            StyleArg::Grouped => Style::Grouped,
            StyleArg::Full => Style::Full,
        }
    }
}

#[derive(Args)]
struct PrintOpts {
    /// Parenthesization of printed expressions.
    #[arg(long, value_enum, default_value = "grouped")]
    style: StyleArg,
}

#[derive(Args)]
struct Output {
    /// Write to this file instead of standard output.
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetArg {
    Inter,
    Neg,
}

#[derive(Clone, Copy, ValueEnum)]
enum OpArg {
    And,
    Or,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Random,
    Pseudorandom,
}

#[derive(Args)]
struct GadgetArgs {
    /// Gadget config file (`gadget n=.. k=.. N=.. gamma=.. variant=.. pred=.. seed=..`);
    /// overrides the individual flags.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, default_value_t = 16)]
    n: usize,
    #[arg(long, default_value_t = 3)]
    k: usize,
    /// Example length N.
    #[arg(long = "len", default_value_t = 64)]
    len: usize,
    #[arg(long, default_value = "0.2")]
    gamma: String,
    #[arg(long, default_value = "starred")]
    variant: String,
    /// Predicate truth table, `2^k` bits; defaults to u1 xor (u2 and u3).
    #[arg(long)]
    pred: Option<String>,
    /// Seed for the hidden PRG seed `x` used by `gen-gadget`.
    #[arg(long, default_value_t = 0)]
    prng_seed: u64,
}

impl GadgetArgs {
    fn load(&self) -> Result<GadgetConfig> {
        if let Some(path) = &self.config {
            let text = read_input(path)?;
            return text.trim().parse::<GadgetConfig>().with_context(|| format!("{}", path.display()));
        }
        let predicate = match &self.pred {
            Some(table) => Predicate::new(self.k, table.parse::<Word>()?.into_bits())?,
            None => default_predicate(self.k)?,
        };
        Ok(GadgetConfig::new(
            self.n,
            self.k,
            self.len,
            parse_ratio(&self.gamma)?,
            self.variant.parse::<Variant>()?,
            predicate,
            self.prng_seed,
        )?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Parse an expression and print it back.
    Parse {
        re: String,
        #[command(flatten)]
        print: PrintOpts,
    },
    /// Membership test; exit status 0 on match, 1 otherwise.
    Match { re: String, word: String },
    /// Size of an expression.
    Size {
        re: String,
        /// Charge `r{k}` as |r| + ceil(log2 k) instead of k·|r|.
        #[arg(long)]
        counting: bool,
    },
    /// Compile a `dnf n m` file to an expression.
    CompileDnf {
        file: PathBuf,
        #[command(flatten)]
        print: PrintOpts,
    },
    /// Compile an s-expression Boolean formula.
    CompileFormula {
        file: PathBuf,
        #[arg(long, value_enum)]
        target: TargetArg,
        #[arg(long)]
        counting: bool,
        /// Number of variables; defaults to the largest index used.
        #[arg(long)]
        vars: Option<usize>,
        #[command(flatten)]
        print: PrintOpts,
    },
    /// Position automaton of a plain expression (counting is expanded).
    Re2nfa { re: String },
    /// Subset construction of an automaton file.
    Nfa2dfa { file: PathBuf },
    /// Extended expression to minimal DFA.
    Re2dfa { re: String },
    /// Automaton file to a plain expression by state elimination.
    Dfa2re {
        file: PathBuf,
        #[command(flatten)]
        print: PrintOpts,
    },
    /// Minimize an automaton file.
    Min { file: PathBuf },
    /// Complement of an automaton file.
    Complement { file: PathBuf },
    /// Product of two automaton files.
    Product {
        left: PathBuf,
        right: PathBuf,
        #[arg(long, value_enum)]
        op: OpArg,
    },
    /// Compare two expressions on all words up to a length; exit 0 when equal.
    Equiv {
        left: String,
        right: String,
        #[arg(long, default_value_t = 8)]
        maxlen: usize,
    },
    /// Sample a hypergraph of `m` ordered `k`-edges on `[n]`.
    GenHypergraph {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Sample a challenge of `m` hyperedges with random or pseudorandom bits.
    GenChallenge {
        #[command(flatten)]
        gadget: GadgetArgs,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Build the target expression for the configured hidden seed.
    GenGadget {
        #[command(flatten)]
        gadget: GadgetArgs,
        #[command(flatten)]
        print: PrintOpts,
        #[command(flatten)]
        output: Output,
    },
    /// Simulate labeled examples from a challenge file.
    GenExamples {
        #[command(flatten)]
        gadget: GadgetArgs,
        #[arg(long)]
        challenge: PathBuf,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Estimate the distinguishing advantage of a learner.
    Distinguish {
        #[command(flatten)]
        gadget: GadgetArgs,
        #[arg(long, value_enum)]
        learner: LearnerArg,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 100)]
        p_train: usize,
        #[arg(long, default_value_t = 200)]
        v_size: usize,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum LearnerArg {
    Oracle,
    Const0,
    Const1,
    Majority,
}

impl From<LearnerArg> for LearnerKind {
    fn from(l: LearnerArg) -> LearnerKind {
        match l {
            LearnerArg::Oracle => LearnerKind::Oracle,
            LearnerArg::Const0 => LearnerKind::Const0,
            LearnerArg::Const1 => LearnerKind::Const1,
            LearnerArg::Majority => LearnerKind::Majority,
        }
    }
}

/// `-` reads standard input.
fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn emit(output: &Output, text: &str) -> Result<()> {
    match &output.out {
        Some(path) => fs::write(path, text).with_context(|| format!("cannot write {}", path.display())),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn regex_arg(text: &str) -> Result<Regex> {
    parse(text).with_context(|| format!("in expression {text:?}"))
}

fn automaton(path: &Path) -> Result<Automaton> {
    parse_automaton(&read_input(path)?).with_context(|| format!("{}", path.display()))
}

fn dfa_file(path: &Path) -> Result<Dfa> {
    Ok(match automaton(path)? {
        Automaton::Dfa(d) => d,
        Automaton::Nfa(n) => determinize(&n)?,
    })
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Parse { re, print } => println!("{}", print_with(&regex_arg(&re)?, print.style.into())),
        Command::Match { re, word } => {
            let w: Word = word.parse().with_context(|| format!("in word {word:?}"))?;
            let hit = matches(&regex_arg(&re)?, &w);
            println!("{hit}");
            return Ok(if hit { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
        Command::Size { re, counting } => println!("{}", size_of(&regex_arg(&re)?, counting)),
        Command::CompileDnf { file, print } => {
            let phi: Dnf = read_input(&file)?.parse().with_context(|| format!("{}", file.display()))?;
            println!("{}", print_with(&dnf_to_re(&phi), print.style.into()));
        }
        Command::CompileFormula { file, target, counting, vars, print } => {
            let root: Formula = read_input(&file)?.trim().parse().with_context(|| format!("{}", file.display()))?;
            let phi = BooleanFormula::new(vars.unwrap_or_else(|| root.max_var()), root)?;
            let target = match target {
                TargetArg::Inter => Target::Inter,
                TargetArg::Neg => Target::Neg,
            };
            println!("{}", print_with(&formula_to_re(&phi, target, counting), print.style.into()));
        }
        Command::Re2nfa { re } => print!("{}", re_to_nfa(&regex_arg(&re)?)?),
        Command::Nfa2dfa { file } => print!("{}", determinize(&automaton(&file)?.into_nfa())?),
        Command::Re2dfa { re } => print!("{}", minimize(&rehard::automata::compile_extended(&regex_arg(&re)?)?)),
        Command::Dfa2re { file, print } => println!("{}", print_with(&dfa_to_re(&dfa_file(&file)?), print.style.into())),
        Command::Min { file } => print!("{}", minimize(&dfa_file(&file)?)),
        Command::Complement { file } => print!("{}", complement_dfa(&dfa_file(&file)?)),
        Command::Product { left, right, op } => {
            let op = match op {
                OpArg::And => BoolOp::And,
                OpArg::Or => BoolOp::Or,
            };
            print!("{}", product(&dfa_file(&left)?, &dfa_file(&right)?, op));
        }
        Command::Equiv { left, right, maxlen } => {
            match equivalent_upto(&regex_arg(&left)?, &regex_arg(&right)?, maxlen)? {
                Verdict::Equivalent => println!("equivalent"),
                Verdict::Differ(w) => {
                    let shown = if w.is_empty() { "(empty word)".to_string() } else { w.to_string() };
                    println!("differ\ncounterexample: {shown}");
                    return Ok(ExitCode::from(1));
                }
            }
        }
        Command::GenHypergraph { n, m, k, seed, output } => {
            let g = sample_hypergraph(n, m, k, &mut ChaCha8Rng::seed_from_u64(seed))?;
            emit(&output, &g.to_string())?;
        }
        Command::GenChallenge { gadget, m, mode, seed, output } => {
            let cfg = gadget.load()?;
            warn(&cfg);
            let mode = match mode {
                ModeArg::Random => ChallengeMode::Random,
                ModeArg::Pseudorandom => ChallengeMode::Pseudorandom,
            };
            let ch = make_challenge(&cfg, m, mode, &mut ChaCha8Rng::seed_from_u64(seed))?;
            emit(&output, &ch.to_string())?;
        }
        Command::GenGadget { gadget, print, output } => {
            let cfg = gadget.load()?;
            let x = cfg.seed_word();
            let size = gadget_size(&x, &cfg);
            let text = format!(
                "{cfg}\nx {x}\nsize {}\nclosed_form {}\nre {}\n",
                size.measured,
                size.closed_form,
                print_with(&build_target(&x, &cfg), print.style.into())
            );
            emit(&output, &text)?;
        }
        Command::GenExamples { gadget, challenge, count, seed, output } => {
            let cfg = gadget.load()?;
            let ch: Challenge = read_input(&challenge)?.parse().with_context(|| format!("{}", challenge.display()))?;
            let ex = simulate_oracle(&cfg, &ch, count, &mut ChaCha8Rng::seed_from_u64(seed))?;
            emit(&output, &format_examples(cfg.len, &ex))?;
        }
        Command::Distinguish { gadget, learner, trials, p_train, v_size, seed, output } => {
            let cfg = gadget.load()?;
            warn(&cfg);
            if v_size == 0 {
                bail!("--v-size must be positive");
            }
            let spec = ExperimentSpec { learner: learner.into(), trials, p_train, v_size, seed };
            emit(&output, &advantage_estimate(&cfg, &spec)?.to_string())?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn warn(cfg: &GadgetConfig) {
    for w in cfg.warnings() {
        eprintln!("warning: {w}");
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
