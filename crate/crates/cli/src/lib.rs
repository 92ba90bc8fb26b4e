//! Argument handling for the `cbrank` binary, kept in a library so tests can
//! drive it without spawning processes.

use std::cmp::Ordering;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use cbrank_core::cb::{cb_char, classify, equivalent, homeo_labels};
use cbrank_core::compactum::{embed, Compactum};
use cbrank_core::dyadic::Dyadic;
use cbrank_core::ordinal::Ordinal;
use cbrank_core::partition::{cb_image, ModelSpace};
use cbrank_core::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "cbrank", version, about = "Ordinals and countable compact spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Ordinal arithmetic in Cantor normal form.
    #[command(subcommand)]
    Ord(OrdCommand),
    /// Operations on space trees read as JSON from `--in` or stdin.
    #[command(subcommand)]
    Space(SpaceCommand),
    /// Characteristics realized by compact subsets of a model space.
    Partition {
        #[arg(long)]
        model: ModelSpace,
        /// Largest rank to enumerate.
        #[arg(long, default_value = "w^2")]
        rank_bound: String,
        /// Largest count to enumerate; defaults to `n` for `finite:n`, else 3.
        #[arg(long)]
        count_bound: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
enum OrdCommand {
    /// Print each expression in normal form.
    Norm {
        #[arg(required = true)]
        exprs: Vec<String>,
    },
    /// Left-to-right sum.
    Add {
        #[arg(required = true)]
        exprs: Vec<String>,
    },
    /// `a*k` for a natural `k`.
    Mul { a: String, k: u64 },
    /// `w^a`.
    Pow { a: String },
    /// Prints `<`, `=` or `>`.
    Cmp { a: String, b: String },
}

#[derive(Debug, Args)]
struct Input {
    /// Tree JSON file; stdin when absent.
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum SpaceCommand {
    /// Tree of `p` copies of the standard space of rank `alpha`.
    Canonical {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        p: usize,
    },
    /// Characteristic `(rank, count)`.
    Cb(Input),
    /// Ordinal the space is homeomorphic to.
    Classify(Input),
    /// Derived set, applied `times` times.
    Derive {
        #[arg(long, default_value_t = 1)]
        times: usize,
        #[command(flatten)]
        input: Input,
    },
    Truncate {
        #[arg(long)]
        depth: usize,
        #[command(flatten)]
        input: Input,
    },
    /// Dyadic coordinates of the depth-`d` truncation in `(a, b]`.
    Embed {
        #[arg(long)]
        depth: usize,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        input: Input,
    },
    /// Ordinal labels of the depth-`d` truncation.
    Labels {
        #[arg(long)]
        depth: usize,
        #[command(flatten)]
        input: Input,
    },
    /// Whether two trees describe homeomorphic spaces.
    Equiv { first: PathBuf, second: PathBuf },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Run<T> = std::result::Result<T, Failure>;

/// Runs one command line; `args` includes the program name.
pub fn run<I, S>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(cli.command, stdin) {
        Ok(mut out) => {
            if !out.ends_with('\n') {
                out.push('\n');
            }
            Outcome { code: EXIT_OK, stdout: out, stderr: String::new() }
        }
        Err(Failure::Usage(msg)) => Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Domain(e)) => Outcome {
            code: EXIT_DOMAIN,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn ordinal(s: &str) -> Run<Ordinal> {
    s.parse::<Ordinal>().map_err(|e| Failure::Domain(e.into()))
}

fn dyadic(s: &str) -> Run<Dyadic> {
    Ok(s.parse::<Dyadic>()?)
}

fn read_path(path: &Path, flag: &str) -> Run<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{flag}: cannot read {}: {e}", path.display())))
}

fn tree(input: &Input, stdin: &mut dyn Read) -> Run<Compactum> {
    let text = match &input.input {
        Some(p) => read_path(p, "--in")?,
        None => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
            s
        }
    };
    let k = Compactum::from_json(&text)?;
    if let Err(v) = k.validate() {
        return Err(Error::InvalidTree(v).into());
    }
    Ok(k)
}

fn execute(cmd: Command, stdin: &mut dyn Read) -> Run<String> {
    match cmd {
        Command::Ord(c) => ord(c),
        Command::Space(c) => space(c, stdin),
        Command::Partition { model, rank_bound, count_bound } => {
            let bound = ordinal(&rank_bound)?;
            let count = count_bound.unwrap_or(match model {
                ModelSpace::FiniteDiscrete(n) => n,
                _ => 3,
            });
            Ok(cb_image(&model, &bound, count).to_json())
        }
    }
}

fn ord(cmd: OrdCommand) -> Run<String> {
    match cmd {
        OrdCommand::Norm { exprs } => {
            let lines = exprs
                .iter()
                .map(|e| ordinal(e).map(|o| o.to_string()))
                .collect::<Run<Vec<_>>>()?;
            Ok(lines.join("\n"))
        }
        OrdCommand::Add { exprs } => {
            let mut acc = Ordinal::zero();
            for e in &exprs {
                acc = &acc + &ordinal(e)?;
            }
            Ok(acc.to_string())
        }
        OrdCommand::Mul { a, k } => Ok(ordinal(&a)?.mul_nat(&k.into()).to_string()),
        OrdCommand::Pow { a } => Ok(Ordinal::omega_pow(&ordinal(&a)?).to_string()),
        OrdCommand::Cmp { a, b } => {
            let sign = match ordinal(&a)?.cmp(&ordinal(&b)?) {
                Ordering::Less => "<",
                Ordering::Equal => "=",
                Ordering::Greater => ">",
            };
            Ok(sign.to_string())
        }
    }
}

fn space(cmd: SpaceCommand, stdin: &mut dyn Read) -> Run<String> {
    match cmd {
        SpaceCommand::Canonical { alpha, p } => {
            Ok(Compactum::canonical(&ordinal(&alpha)?, p).to_json())
        }
        SpaceCommand::Cb(input) => Ok(cb_char(&tree(&input, stdin)?)?.to_string()),
        SpaceCommand::Classify(input) => Ok(classify(&tree(&input, stdin)?)?.to_string()),
        SpaceCommand::Derive { times, input } => {
            let mut k = tree(&input, stdin)?;
            for _ in 0..times {
                k = k.derive()?;
            }
            Ok(k.to_json())
        }
        SpaceCommand::Truncate { depth, input } => Ok(tree(&input, stdin)?.truncate(depth).to_json()),
        SpaceCommand::Embed { depth, a, b, format, input } => {
            let (a, b) = (dyadic(&a)?, dyadic(&b)?);
            let e = embed(&tree(&input, stdin)?.truncate(depth), &a, &b)?;
            Ok(match format {
                Format::Json => e.to_json(),
                Format::Csv => e.to_csv(),
            })
        }
        SpaceCommand::Labels { depth, input } => {
            Ok(homeo_labels(&tree(&input, stdin)?, depth)?.to_json())
        }
        SpaceCommand::Equiv { first, second } => {
            let k1 = Compactum::from_json(&read_path(&first, "FIRST")?)?;
            let k2 = Compactum::from_json(&read_path(&second, "SECOND")?)?;
            Ok(equivalent(&k1, &k2)?.to_string())
        }
    }
}
