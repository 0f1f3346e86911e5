//! Command-line front end for `braid-core`.
//!
//! Grammar: `braid <subcommand> [flags] [words...]`. Flags may appear anywhere
//! after the subcommand; any other argument is positional, including words
//! such as `-2 1` that start with a dash. Words use integer notation
//! (`1 -2 1`); letter notation (`s1 s2^-1`) is accepted as well.
//!
//! | subcommand | positionals | stdout |
//! |---|---|---|
//! | `compare` | `a b` | `LT`, `EQ` or `GT` |
//! | `sign` | `w` | `positive:<i>`, `negative:<i>` or `trivial` |
//! | `reduce` | `w` | handle-reduced word |
//! | `trivial` | `w` | `true` / `false` |
//! | `burau` | `w` | matrix, one row per line: `[1-t, t]` |
//! | `det` | `w` | Laurent polynomial |
//! | `member` | `<id> w` | `true` / `false` |
//! | `sample` | `<id>` | a word of the subgroup |
//! | `between` | `<id> f g` | `key=value` witness report |
//! | `verify` | none, `dense <id>` or `least <id> <word>` | `key=value` report |
//! | `construct` | target tokens | one word per line |
//! | `bench` | none | `key=value` metrics |
//!
//! Laurent polynomials are printed as a sum of terms in ascending powers of
//! `t`: a term is an optional integer coefficient followed by `t` or `t^<k>`,
//! with `0` for the zero polynomial (`1-t`, `t^-1`, `-2t^-1+3+t^2`).
//!
//! Exit codes: 0 success, 1 domain error or failed verification, 2 usage error.

pub mod bench;
pub mod suite;

use std::fmt::Write as _;

use braid_core::density::{self, DEFAULT_WITNESS_BUDGET};
use braid_core::garside::{
    centralizer_element, delta, full_twist, homo_h, least_element_candidates, shepperd_generator,
};
use braid_core::order::{self, ordering_token};
use braid_core::{
    burau_det, burau_matrix, decide, is_trivial, sample, BraidWord, CandidateFamily,
    CentralizerParams, SubgroupId, WordStyle, DEFAULT_STEP_BUDGET,
};
use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "braid", about = "Braid group computations", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Args)]
struct Flags {
    /// Strand count
    #[arg(short = 'n', long = "n")]
    n: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    trials: Option<usize>,
    /// Step budget for reduce/sign, comparator budget for between
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long)]
    len: Option<usize>,
    #[arg(long)]
    count: Option<usize>,
    #[arg(long, default_value = "integer", value_parser = ["integer", "letter"])]
    style: String,
}

#[derive(Debug, Clone, Args)]
struct Invocation {
    #[command(flatten)]
    flags: Flags,
    words: Vec<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compare two braids in the Dehornoy order
    Compare(Invocation),
    /// σ-sign of a braid
    Sign(Invocation),
    /// Handle-reduce a word
    Reduce(Invocation),
    /// Decide whether a word is the identity
    Trivial(Invocation),
    /// Burau matrix
    Burau(Invocation),
    /// Burau determinant
    Det(Invocation),
    /// Subgroup membership
    Member(Invocation),
    /// Seeded subgroup element
    Sample(Invocation),
    /// Element strictly between two subgroup elements
    Between(Invocation),
    /// Verification suite or a single verifier
    Verify(Invocation),
    /// Distinguished braids
    Construct(Invocation),
    /// Handle-reduction throughput
    Bench(Invocation),
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Domain(braid_core::Error),
    /// A verifier ran to completion and reported failures.
    Failed(String),
}

impl From<braid_core::Error> for CliError {
    fn from(e: braid_core::Error) -> Self {
        CliError::Domain(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Runs one command line (including the program name) and captures its output.
pub fn dispatch<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(hoist_flags(argv)) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match run(cli.command) {
        Ok(mut out) => {
            if !out.is_empty() && !out.ends_with('\n') {
                out.push('\n');
            }
            if out.is_empty() {
                out.push('\n');
            }
            Outcome {
                code: 0,
                stdout: out,
                stderr: String::new(),
            }
        }
        Err(CliError::Usage(msg)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(CliError::Domain(e)) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
        Err(CliError::Failed(report)) => Outcome {
            code: 1,
            stdout: format!("{report}\n"),
            stderr: String::new(),
        },
    }
}

const VALUE_FLAGS: [&str; 8] = [
    "-n", "--n", "--seed", "--trials", "--budget", "--len", "--count", "--style",
];

fn is_flag(tok: &str) -> bool {
    let mut chars = tok.chars();
    chars.next() == Some('-')
        && matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '-')
}

/// Moves flags ahead of the positionals and separates the two with `--`, so
/// flags may appear anywhere while words like `-2 1` stay positional.
fn hoist_flags(argv: Vec<std::ffi::OsString>) -> Vec<std::ffi::OsString> {
    if argv.len() < 2 {
        return argv;
    }
    let mut head = argv[..2].to_vec();
    let mut words = Vec::new();
    let mut rest = argv[2..].iter();
    while let Some(arg) = rest.next() {
        let tok = arg.to_string_lossy();
        if tok == "--" {
            words.extend(rest.by_ref().cloned());
        } else if is_flag(&tok) {
            head.push(arg.clone());
            if VALUE_FLAGS.contains(&tok.as_ref()) {
                if let Some(v) = rest.next() {
                    head.push(v.clone());
                }
            }
        } else {
            words.push(arg.clone());
        }
    }
    head.push("--".into());
    head.extend(words);
    head
}

fn style(flags: &Flags) -> CliResult<WordStyle> {
    flags
        .style
        .parse()
        .map_err(|_| usage(format!("unknown style `{}`", flags.style)))
}

/// Parses all words with a common strand count: `-n`, or one more than the
/// largest index present.
fn parse_words(texts: &[String], n: Option<usize>) -> CliResult<Vec<BraidWord>> {
    let n = match n {
        Some(n) => n,
        None => {
            let mut max = 0;
            for t in texts {
                max = max.max(
                    BraidWord::parse(t, None)
                        .map_err(|e| usage(e.to_string()))?
                        .max_index(),
                );
            }
            if max == 0 {
                return Err(usage("-n is required when every word is empty"));
            }
            max + 1
        }
    };
    texts
        .iter()
        .map(|t| BraidWord::parse(t, Some(n)).map_err(|e| usage(e.to_string())))
        .collect()
}

fn expect_words(inv: &Invocation, count: usize) -> CliResult<Vec<BraidWord>> {
    if inv.words.len() != count {
        return Err(usage(format!(
            "expected {count} word(s), got {}",
            inv.words.len()
        )));
    }
    parse_words(&inv.words, inv.flags.n)
}

fn subgroup(token: Option<&String>) -> CliResult<SubgroupId> {
    let token = token.ok_or_else(|| usage("missing subgroup name"))?;
    token
        .parse()
        .map_err(|_| usage(format!("unknown subgroup `{token}`")))
}

fn number<T: std::str::FromStr>(tok: Option<&String>, what: &str) -> CliResult<T> {
    let tok = tok.ok_or_else(|| usage(format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| usage(format!("invalid {what} `{tok}`")))
}

fn run(command: Command) -> CliResult<String> {
    match command {
        Command::Compare(inv) => {
            let ws = expect_words(&inv, 2)?;
            let budget = inv.flags.budget.unwrap_or(DEFAULT_STEP_BUDGET);
            let o = order::compare_with_budget(&ws[0], &ws[1], budget)?;
            Ok(ordering_token(o).to_string())
        }
        Command::Sign(inv) => {
            let ws = expect_words(&inv, 1)?;
            let budget = inv.flags.budget.unwrap_or(DEFAULT_STEP_BUDGET);
            Ok(order::sigma_sign_with_budget(&ws[0], budget)?.to_string())
        }
        Command::Reduce(inv) => {
            let ws = expect_words(&inv, 1)?;
            let budget = inv.flags.budget.unwrap_or(DEFAULT_STEP_BUDGET);
            let r = order::handle_reduce(&ws[0], budget)?;
            Ok(r.format(style(&inv.flags)?))
        }
        Command::Trivial(inv) => {
            let ws = expect_words(&inv, 1)?;
            Ok(is_trivial(&ws[0])?.to_string())
        }
        Command::Burau(inv) => {
            let ws = expect_words(&inv, 1)?;
            Ok(burau_matrix(&ws[0]).to_string())
        }
        Command::Det(inv) => {
            let ws = expect_words(&inv, 1)?;
            Ok(burau_det(&ws[0]).to_string())
        }
        Command::Member(inv) => {
            let id = subgroup(inv.words.first())?;
            if inv.words.len() != 2 {
                return Err(usage("member takes a subgroup and one word"));
            }
            let ws = parse_words(&inv.words[1..], inv.flags.n)?;
            Ok(decide(id, &ws[0])?.to_string())
        }
        Command::Sample(inv) => {
            let id = subgroup(inv.words.first())?;
            if inv.words.len() != 1 {
                return Err(usage("sample takes only a subgroup name"));
            }
            let n = inv.flags.n.ok_or_else(|| usage("sample needs -n"))?;
            let size = inv
                .flags
                .len
                .unwrap_or(density::default_sample_size(id).max(4));
            let w = sample(id, n, size, inv.flags.seed.unwrap_or(0))?;
            Ok(w.format(style(&inv.flags)?))
        }
        Command::Between(inv) => {
            let id = subgroup(inv.words.first())?;
            if inv.words.len() != 3 {
                return Err(usage("between takes a subgroup and two words"));
            }
            let ws = parse_words(&inv.words[1..], inv.flags.n)?;
            let budget = inv.flags.budget.unwrap_or(DEFAULT_WITNESS_BUDGET);
            let r = density::between(id, &ws[0], &ws[1], budget)?;
            let mut out = String::new();
            writeln!(out, "found={}", r.found).unwrap();
            if let Some(h) = &r.witness {
                writeln!(out, "witness={}", h.format(style(&inv.flags)?)).unwrap();
            }
            writeln!(out, "candidates={}", r.candidates_tried).unwrap();
            writeln!(out, "comparisons={}", r.comparisons).unwrap();
            write!(out, "budget={}", r.budget).unwrap();
            Ok(out)
        }
        Command::Verify(inv) => verify(&inv),
        Command::Construct(inv) => construct(&inv),
        Command::Bench(inv) => {
            if !inv.words.is_empty() {
                return Err(usage("bench takes no positional arguments"));
            }
            let cfg = bench::BenchConfig {
                n: inv.flags.n.unwrap_or(6),
                len: inv.flags.len.unwrap_or(200),
                count: inv.flags.count.unwrap_or(100),
                seed: inv.flags.seed.unwrap_or(1),
                budget: inv.flags.budget.unwrap_or(DEFAULT_STEP_BUDGET),
            };
            if cfg.n < 2 {
                return Err(usage("bench needs at least 2 strands"));
            }
            Ok(bench::run(&cfg)?.to_string())
        }
    }
}

fn verify(inv: &Invocation) -> CliResult<String> {
    let flags = &inv.flags;
    let seed = flags.seed.unwrap_or(1);
    match inv.words.first().map(String::as_str) {
        None => {
            let mut cfg = suite::SuiteConfig::default();
            if let Some(t) = flags.trials {
                cfg.trials = t;
            }
            cfg.seed = seed;
            let report = suite::run_verification_suite(&cfg);
            if report.all_passed() {
                Ok(report.to_string())
            } else {
                Err(CliError::Failed(report.to_string()))
            }
        }
        Some("dense") => {
            let id = subgroup(inv.words.get(1))?;
            let n = flags.n.ok_or_else(|| usage("verify dense needs -n"))?;
            let s = density::verify_dense_with_budget(
                id,
                n,
                flags.trials.unwrap_or(100),
                seed,
                flags.budget.unwrap_or(DEFAULT_WITNESS_BUDGET),
            )?;
            if s.all_succeeded() {
                Ok(s.to_string())
            } else {
                Err(CliError::Failed(s.to_string()))
            }
        }
        Some("least") => {
            let id = subgroup(inv.words.get(1))?;
            if inv.words.len() != 3 {
                return Err(usage("verify least takes a subgroup and a candidate word"));
            }
            let ws = parse_words(&inv.words[2..], flags.n)?;
            let n = ws[0].n();
            let s = density::verify_least(id, &ws[0], n, flags.trials.unwrap_or(1000), seed)?;
            if s.passed() {
                Ok(s.to_string())
            } else {
                Err(CliError::Failed(s.to_string()))
            }
        }
        Some(other) => Err(usage(format!("unknown verify target `{other}`"))),
    }
}

fn construct(inv: &Invocation) -> CliResult<String> {
    let t = &inv.words;
    let fmt = style(&inv.flags)?;
    let target = |default: usize| inv.flags.n.unwrap_or(default);
    let arity = |k: usize| -> CliResult<()> {
        if t.len() == k + 1 {
            Ok(())
        } else {
            Err(usage(format!("`{}` takes {k} argument(s)", t[0])))
        }
    };
    let words: Vec<BraidWord> = match t.first().map(String::as_str) {
        Some("delta") => {
            arity(1)?;
            let k: usize = number(t.get(1), "k")?;
            vec![delta(k, target(k))?]
        }
        Some("fulltwist") => {
            arity(2)?;
            let k: usize = number(t.get(1), "k")?;
            let p: i64 = number(t.get(2), "power")?;
            vec![full_twist(k, target(k), p)?]
        }
        Some("centralizer") if t.get(1).map(String::as_str) == Some("uv") => {
            if t.len() != 5 {
                return Err(usage("`centralizer uv` takes <r> <u> <v>"));
            }
            let r: usize = number(t.get(2), "r")?;
            let params = CentralizerParams::uv(r, number(t.get(3), "u")?, number(t.get(4), "v")?);
            vec![centralizer_element(params, target(r))?]
        }
        Some("centralizer") => {
            arity(3)?;
            let r: usize = number(t.get(1), "r")?;
            let params = CentralizerParams::frz(r, number(t.get(2), "p")?, number(t.get(3), "q")?);
            vec![centralizer_element(params, target(r))?]
        }
        Some("uv") => {
            arity(3)?;
            let r: usize = number(t.get(1), "r")?;
            let params = CentralizerParams::uv(r, number(t.get(2), "u")?, number(t.get(3), "v")?);
            vec![centralizer_element(params, target(r))?]
        }
        Some("shepperd") => {
            arity(2)?;
            let n: usize = number(t.get(1), "n")?;
            vec![shepperd_generator(n, number(t.get(2), "i")?)?]
        }
        Some("least") => {
            arity(3)?;
            let n: usize = number(t.get(1), "n")?;
            let family = match t[2].as_str() {
                "s1" | "1" => CandidateFamily::SigmaOne,
                _ => CandidateFamily::FullTwist {
                    r: number(t.get(2), "r")?,
                },
            };
            least_element_candidates(n, family, number(t.get(3), "u_max")?)?
        }
        Some("h4") => {
            arity(1)?;
            let w = parse_words(&t[1..], Some(inv.flags.n.unwrap_or(4)))?;
            vec![homo_h(&w[0])?]
        }
        Some(other) => return Err(usage(format!("unknown construct target `{other}`"))),
        None => return Err(usage("construct needs a target")),
    };
    Ok(words
        .iter()
        .map(|w| w.format(fmt))
        .collect::<Vec<_>>()
        .join("\n"))
}
