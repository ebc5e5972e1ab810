//! The `acp` command-line driver.

use std::collections::BTreeSet;
use std::fmt;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::disjunctive::{enumerate_possible, is_possible, to_ca, DProgram};
use crate::domain::{atom_set, AtomSet, Budget, Interpretation, Program};
use crate::error::Error;
use crate::lparse::{e_translate, eliminate_not, enumerate_lparse_stable, f_translate, lparse_stable, LProgram};
use crate::textio::{self, computation_json, emit_json, interpretation_json, interpretations_json, Dialect, Parsed};
use crate::translate::normal_to_pb;
use crate::{horn, oracle, semantics, stable};

#[derive(Debug, Parser)]
#[command(name = "acp", version, about = "Semantics engine for programs with abstract constraint atoms")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate models over the universe.
    Models(Opts),
    /// Enumerate supported models.
    Supported(Opts),
    /// Enumerate stable models, or check `--interp`.
    Stable(Opts),
    /// Enumerate derivable models of a Horn program, or show the canonical
    /// computation for `--interp`.
    Derivable(Opts),
    /// The largest derivable model of a Horn program.
    LargestDerivable(Opts),
    /// Apply the nondeterministic one-step operator to `--interp`.
    Tnd(Opts),
    /// The reduct with respect to `--interp`.
    Reduct(Opts),
    /// Enumerate possible models of a disjunctive program, or check `--interp`.
    Possible(Opts),
    /// Enumerate lparse-stable models, or check `--interp`.
    LparseStable(Opts),
    /// Translate between program classes.
    Translate(TranslateOpts),
    /// Parse and report basic properties.
    Check(Opts),
}

#[derive(Debug, Args)]
pub struct Opts {
    /// Program file; standard input when absent.
    pub file: Option<PathBuf>,
    /// Input dialect; inferred from the file extension, `acp` otherwise.
    #[arg(long, value_enum)]
    pub dialect: Option<Dialect>,
    /// Interpretation as a comma-separated atom list.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    pub interp: Option<Vec<String>>,
    /// Extra atoms to add to the universe.
    #[arg(long, value_delimiter = ',')]
    pub universe: Vec<String>,
    /// Largest atom set any enumeration may range over.
    #[arg(long, default_value_t = Budget::DEFAULT.0)]
    pub budget: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Recompute with the reference oracle and fail on any difference.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Debug, Args)]
pub struct TranslateOpts {
    #[command(flatten)]
    pub opts: Opts,
    /// How to read the input; follows the dialect when absent.
    #[arg(long, value_enum)]
    pub from: Option<Class>,
    #[arg(long, value_enum, default_value_t = Class::Pb)]
    pub to: Class,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Class {
    Pb,
    Lparse,
    NormalAsPb,
    DisjunctiveAsCa,
}

#[derive(Debug)]
pub enum CliError {
    Engine(Error),
    Io(String),
    Usage(String),
    Divergence(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Engine(Error::Parse(_)) => 2,
            CliError::Engine(Error::BudgetExceeded { .. }) => 3,
            _ => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Engine(e) => write!(f, "{e}"),
            CliError::Io(m) | CliError::Usage(m) => f.write_str(m),
            CliError::Divergence(m) => write!(f, "oracle divergence: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Engine(e)
    }
}

type CliResult<T> = Result<T, CliError>;

/// Parses arguments, runs the command, and returns the process exit code.
pub fn main_with<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match run(&cli, stdin, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

struct Input {
    parsed: Parsed,
    opts_universe: AtomSet,
}

fn load(opts: &Opts, stdin: &mut dyn Read) -> CliResult<Input> {
    let text = match &opts.file {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?,
        None => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| CliError::Io(format!("stdin: {e}")))?;
            s
        }
    };
    let dialect = opts
        .dialect
        .or_else(|| opts.file.as_deref().and_then(Dialect::from_path))
        .unwrap_or(Dialect::Acp);
    let src = textio::parse(dialect, &text).map_err(Error::from)?;
    Ok(Input {
        parsed: src.parsed,
        opts_universe: names(&opts.universe)?,
    })
}

fn names(list: &[String]) -> CliResult<AtomSet> {
    for n in list {
        let valid = n.chars().next().is_some_and(|c| c.is_ascii_lowercase() || c == '~')
            && n.chars().skip(1).all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_');
        if !valid {
            return Err(CliError::Usage(format!("invalid atom name `{n}`")));
        }
    }
    Ok(atom_set(list.iter().map(String::as_str)))
}

fn interp(opts: &Opts) -> CliResult<Option<Interpretation>> {
    match &opts.interp {
        None => Ok(None),
        Some(list) => {
            let list: Vec<String> = list.iter().filter(|s| !s.is_empty()).cloned().collect();
            Ok(Some(names(&list)?.into()))
        }
    }
}

fn need_interp(opts: &Opts, command: &str) -> CliResult<Interpretation> {
    interp(opts)?.ok_or_else(|| CliError::Usage(format!("{command} needs --interp")))
}

/// The input as a constraint-atom program.
fn as_program(input: &Input) -> CliResult<Program> {
    let p = match &input.parsed {
        Parsed::Acp(p) => p.clone(),
        Parsed::Normal(p) => normal_to_pb(p),
        Parsed::Disjunctive(p) => to_ca(p),
        Parsed::Lparse(p) => lparse_to_pb(p)?,
    };
    Ok(p.widened(input.opts_universe.iter().cloned()))
}

fn lparse_to_pb(p: &LProgram) -> CliResult<Program> {
    if p.has_negation() {
        let (q, _) = eliminate_not(p)?;
        Ok(e_translate(&q)?)
    } else {
        Ok(e_translate(p)?)
    }
}

fn as_lparse(input: &Input) -> CliResult<LProgram> {
    match &input.parsed {
        Parsed::Lparse(p) => Ok(p.clone()),
        _ => Ok(f_translate(&as_program(input)?)?),
    }
}

fn as_disjunctive(input: &Input) -> CliResult<DProgram> {
    match &input.parsed {
        Parsed::Disjunctive(p) => Ok(p.clone()),
        Parsed::Normal(p) => Ok(DProgram::new(
            p.clauses
                .iter()
                .map(|c| crate::disjunctive::DClause::new(c.head.clone(), c.pos.clone(), c.neg.clone()))
                .collect(),
        )),
        other => Err(CliError::Usage(format!(
            "possible models need a disjunctive or normal program, not {}",
            other.dialect()
        ))),
    }
}

fn cross_check(
    enabled: bool,
    ours: &BTreeSet<Interpretation>,
    reference: impl FnOnce() -> crate::Result<BTreeSet<Interpretation>>,
) -> CliResult<()> {
    if !enabled {
        return Ok(());
    }
    let theirs = reference()?;
    if *ours != theirs {
        let show = |s: &BTreeSet<Interpretation>| {
            s.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(" ")
        };
        return Err(CliError::Divergence(format!(
            "engine gave [{}], oracle gave [{}]",
            show(ours),
            show(&theirs)
        )));
    }
    Ok(())
}

fn check_bool(enabled: bool, ours: bool, reference: impl FnOnce() -> crate::Result<bool>) -> CliResult<()> {
    if enabled && reference()? != ours {
        return Err(CliError::Divergence(format!("engine gave {ours}, oracle disagrees")));
    }
    Ok(())
}

struct Printer<'a> {
    out: &'a mut dyn Write,
    format: Format,
}

impl Printer<'_> {
    fn write(&mut self, text: &str, value: Value) -> CliResult<()> {
        let r = match self.format {
            Format::Text => write!(self.out, "{text}"),
            Format::Json => writeln!(self.out, "{}", emit_json(&value)),
        };
        r.map_err(|e| CliError::Io(e.to_string()))
    }

    fn sets(&mut self, sets: &BTreeSet<Interpretation>) -> CliResult<()> {
        let text: String = sets.iter().map(|m| format!("{m}\n")).collect();
        self.write(&text, interpretations_json(sets))
    }

    fn one(&mut self, m: &Interpretation) -> CliResult<()> {
        self.write(&format!("{m}\n"), interpretation_json(m))
    }

    fn flag(&mut self, b: bool) -> CliResult<()> {
        self.write(&format!("{b}\n"), Value::Bool(b))
    }

    fn program(&mut self, text: String) -> CliResult<()> {
        let v = Value::String(text.clone());
        self.write(&text, v)
    }
}

pub fn run(cli: &Cli, stdin: &mut dyn Read, out: &mut dyn Write) -> CliResult<()> {
    let opts = match &cli.command {
        Command::Translate(t) => &t.opts,
        Command::Models(o)
        | Command::Supported(o)
        | Command::Stable(o)
        | Command::Derivable(o)
        | Command::LargestDerivable(o)
        | Command::Tnd(o)
        | Command::Reduct(o)
        | Command::Possible(o)
        | Command::LparseStable(o)
        | Command::Check(o) => o,
    };
    let input = load(opts, stdin)?;
    let budget = Budget(opts.budget);
    let mut pr = Printer {
        out,
        format: opts.format,
    };
    match &cli.command {
        Command::Models(_) => {
            let p = as_program(&input)?;
            let models = semantics::enumerate_models(&p, None, budget)?;
            cross_check(opts.oracle, &models, || oracle::oracle_models(&p, p.universe(), budget))?;
            pr.sets(&models)
        }
        Command::Supported(_) => {
            let p = as_program(&input)?;
            let models = semantics::enumerate_supported(&p, None, budget)?;
            cross_check(opts.oracle, &models, || oracle::oracle_supported(&p, p.universe(), budget))?;
            pr.sets(&models)
        }
        Command::Stable(_) => {
            let p = as_program(&input)?;
            match interp(opts)? {
                Some(m) => {
                    let b = stable::is_stable(&p, &m)?;
                    check_bool(opts.oracle, b, || oracle::oracle_is_stable(&p, &m))?;
                    pr.flag(b)
                }
                None => {
                    let models = stable::enumerate_stable(&p, budget)?;
                    cross_check(opts.oracle, &models, || oracle::oracle_stable(&p, p.universe(), budget))?;
                    pr.sets(&models)
                }
            }
        }
        Command::Derivable(_) => {
            let p = as_program(&input)?;
            match interp(opts)? {
                Some(m) => {
                    let t = horn::canonical_computation(&p, &m)?;
                    let derivable = t.result() == &m;
                    let text = format!("{t}\nderivable: {derivable}\n");
                    let mut v = computation_json(&t);
                    v["derivable"] = Value::Bool(derivable);
                    pr.write(&text, v)
                }
                None => {
                    let models = horn::enumerate_derivable(&p, budget)?;
                    cross_check(opts.oracle, &models, || oracle::oracle_derivable(&p, budget))?;
                    pr.sets(&models)
                }
            }
        }
        Command::LargestDerivable(_) => {
            let p = as_program(&input)?;
            pr.one(&horn::largest_derivable(&p)?)
        }
        Command::Tnd(_) => {
            let p = as_program(&input)?;
            let m = need_interp(opts, "tnd")?;
            let r = semantics::tnd(&p, &m, budget)?;
            cross_check(opts.oracle, &r.derivable_sets, || oracle::oracle_tnd(&p, &m, budget))?;
            pr.sets(&r.derivable_sets)
        }
        Command::Reduct(_) => {
            let m = need_interp(opts, "reduct")?;
            match &input.parsed {
                Parsed::Lparse(lp) => {
                    let r = crate::lparse::lparse_reduct(lp, &m);
                    pr.program(r.to_string())
                }
                _ => {
                    let p = as_program(&input)?;
                    let r = stable::reduct(&p, &m)?;
                    let text = r.program.to_string();
                    let v = json!({
                        "program": text,
                        "removed": r.removed.iter().collect::<Vec<_>>(),
                    });
                    pr.write(&text, v)
                }
            }
        }
        Command::Possible(_) => {
            let p = as_disjunctive(&input)?;
            match interp(opts)? {
                Some(m) => {
                    let b = is_possible(&p, &m);
                    check_bool(opts.oracle, b, || Ok(oracle::oracle_is_possible(&p, &m)))?;
                    pr.flag(b)
                }
                None => {
                    let models = enumerate_possible(&p, budget)?;
                    cross_check(opts.oracle, &models, || oracle::oracle_possible(&p, budget))?;
                    pr.sets(&models)
                }
            }
        }
        Command::LparseStable(_) => {
            let p = as_lparse(&input)?;
            match interp(opts)? {
                Some(m) => {
                    let b = lparse_stable(&p, &m);
                    check_bool(opts.oracle, b, || Ok(oracle::oracle_lparse_stable(&p, &m)))?;
                    pr.flag(b)
                }
                None => {
                    let models = enumerate_lparse_stable(&p, budget)?;
                    cross_check(opts.oracle, &models, || {
                        oracle::oracle_lparse_enumerate(&p, oracle::oracle_lparse_stable, budget)
                    })?;
                    pr.sets(&models)
                }
            }
        }
        Command::Translate(t) => {
            let from = t.from.unwrap_or(match input.parsed.dialect() {
                Dialect::Acp => Class::Pb,
                Dialect::Lparse => Class::Lparse,
                Dialect::Normal => Class::NormalAsPb,
                Dialect::Disjunctive => Class::DisjunctiveAsCa,
            });
            let expected = match from {
                Class::Pb => Dialect::Acp,
                Class::Lparse => Dialect::Lparse,
                Class::NormalAsPb => Dialect::Normal,
                Class::DisjunctiveAsCa => Dialect::Disjunctive,
            };
            if input.parsed.dialect() != expected {
                return Err(CliError::Usage(format!(
                    "--from {from:?} expects {expected} input, got {}",
                    input.parsed.dialect()
                )));
            }
            let text = match t.to {
                Class::Pb => as_program(&input)?.to_string(),
                Class::Lparse => as_lparse(&input)?.to_string(),
                other => {
                    return Err(CliError::Usage(format!("cannot translate into {other:?}")));
                }
            };
            pr.program(text)
        }
        Command::Check(_) => {
            let (clauses, atoms) = match &input.parsed {
                Parsed::Acp(p) => (p.len(), p.universe().len()),
                Parsed::Lparse(p) => (p.len(), p.atoms().len()),
                Parsed::Normal(p) => (p.len(), p.atoms().len()),
                Parsed::Disjunctive(p) => (p.len(), p.atoms().len()),
            };
            let mut v = json!({
                "dialect": input.parsed.dialect().to_string(),
                "clauses": clauses,
                "atoms": atoms,
            });
            let mut text = format!("{} program: {clauses} clauses, {atoms} atoms\n", input.parsed.dialect());
            if let Parsed::Acp(p) = &input.parsed {
                let monotone = stable::require_monotone(p).is_ok();
                let horn_ = horn::is_horn(p);
                let definite = stable::is_definite_program(p);
                text.push_str(&format!("monotone: {monotone}\nhorn: {horn_}\ndefinite: {definite}\n"));
                v["monotone"] = Value::Bool(monotone);
                v["horn"] = Value::Bool(horn_);
                v["definite"] = Value::Bool(definite);
            }
            pr.write(&text, v)
        }
    }
}
