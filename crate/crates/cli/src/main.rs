//! `bornlab` command-line front end.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bornlab::{
    hat_ideal, idempotent_hull, is_open, is_topological, minus_ideal, plus_ideal, reflection_opens, satisfies_club,
    stable_under_small_enlargements, star_ideal, tb_hull, ClosureOperator, FiniteSpace, HyperTopology, Ideal,
    InstanceDoc, Scope, SetFamily, Side,
};
use bornlab_verify::{search_counterexample, verify_checks, InstancePool, DEFAULT_SEED, DEFAULT_TRIALS, TARGETS};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "bornlab", version, about = "Hyperspace closure operators on finite pseudometric spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the closure of a family.
    Closure(OpArgs),
    /// Print the idempotent hull of a family and the opens of the reflection.
    Reflect(OpArgs),
    /// Print a derived ideal and the number of iterations used.
    Ideal {
        #[arg(long, value_enum)]
        derive: Derive,
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Decide a predicate and print a witness when one exists.
    Check {
        #[arg(long, value_enum)]
        predicate: Predicate,
        #[arg(long, value_enum)]
        op: Option<Op>,
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Run the verification suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct Inputs {
    /// Instance file holding the space.
    #[arg(long)]
    space: PathBuf,
    /// Instance file holding `generators` (defaults to the space file).
    #[arg(long)]
    ideal: Option<PathBuf>,
    /// Instance file holding `topology` (defaults to the space file).
    #[arg(long)]
    topology: Option<PathBuf>,
    /// Instance file holding `family` (defaults to the space file).
    #[arg(long)]
    family: Option<PathBuf>,
}

#[derive(Args)]
struct OpArgs {
    #[arg(long, value_enum)]
    op: Op,
    #[command(flatten)]
    inputs: Inputs,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..=5))]
    max_points: u64,
    #[arg(long, default_value_t = DEFAULT_TRIALS as u64, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    /// Check identifiers to run (all when omitted).
    #[arg(long = "check", num_args = 1..)]
    checks: Vec<String>,
    /// Run a counterexample search instead of the checks.
    #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(TARGETS), conflicts_with = "checks")]
    search: Option<String>,
    /// Write the full report to this path.
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Summary)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    MetricLower,
    MetricUpper,
    MetricBoth,
    BornLower,
    BornUpper,
    BornBoth,
    Tau,
    LowerMod,
    UpperMod,
}

#[derive(Clone, Copy, ValueEnum)]
enum Derive {
    Tb,
    Plus,
    Hat,
    Star,
    Minus,
}

#[derive(Clone, Copy, ValueEnum)]
enum Predicate {
    Club,
    Stable,
    Open,
    Topological,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Summary,
    Full,
}

/// An input or usage error; reported with status 2.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

struct Loaded {
    space: FiniteSpace,
    doc: InstanceDoc,
    inputs: Inputs,
}

fn read_doc(path: &Path) -> Result<InstanceDoc, Usage> {
    let text = fs::read_to_string(path).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    InstanceDoc::parse(&text).map_err(|e| Usage(format!("{}: {e}", path.display())))
}

impl Loaded {
    fn new(inputs: Inputs) -> Result<Self, Usage> {
        let doc = read_doc(&inputs.space)?;
        let space = doc.space().map_err(|e| Usage(format!("{}: {e}", inputs.space.display())))?;
        Ok(Loaded { space, doc, inputs })
    }

    fn section<T>(
        &self,
        path: &Option<PathBuf>,
        what: &str,
        get: impl Fn(&InstanceDoc, &FiniteSpace) -> Result<Option<T>, bornlab::InstanceError>,
    ) -> Result<T, Usage> {
        let (doc, shown) = match path {
            Some(p) => (read_doc(p)?, p),
            None => (self.doc.clone(), &self.inputs.space),
        };
        get(&doc, &self.space)
            .map_err(|e| Usage(format!("{}: {e}", shown.display())))?
            .ok_or_else(|| Usage(format!("{} has no {what}", shown.display())))
    }

    fn ideal(&self) -> Result<Ideal, Usage> {
        self.section(&self.inputs.ideal, "generators", InstanceDoc::ideal)
    }

    fn topology(&self) -> Result<HyperTopology, Usage> {
        self.section(&self.inputs.topology, "topology", InstanceDoc::topology)
    }

    fn family(&self) -> Result<SetFamily, Usage> {
        self.section(&self.inputs.family, "family", InstanceDoc::family)
    }

    fn optional_family(&self) -> Result<Option<SetFamily>, Usage> {
        match &self.inputs.family {
            Some(_) => self.family().map(Some),
            None => Ok(self.doc.family(&self.space)?),
        }
    }

    fn operator(&self, op: Op) -> Result<ClosureOperator, Usage> {
        let space = &self.space;
        Ok(match op {
            Op::MetricLower => ClosureOperator::metric(space, Side::Lower),
            Op::MetricUpper => ClosureOperator::metric(space, Side::Upper),
            Op::MetricBoth => ClosureOperator::metric(space, Side::Both),
            Op::BornLower => ClosureOperator::bornological(space, &self.ideal()?, Side::Lower),
            Op::BornUpper => ClosureOperator::bornological(space, &self.ideal()?, Side::Upper),
            Op::BornBoth => ClosureOperator::bornological(space, &self.ideal()?, Side::Both),
            Op::Tau => ClosureOperator::tau(space, &self.ideal()?),
            Op::LowerMod => ClosureOperator::lower_mod(space, &self.topology()?, &self.ideal()?)?,
            Op::UpperMod => ClosureOperator::upper_mod(space, &self.topology()?, &self.ideal()?)?,
        })
    }

    fn labels(&self, family: SetFamily) -> Value {
        json!(self.space.family_labels(family))
    }
}

fn print(value: Value) {
    println!("{value}");
}

fn closure(args: OpArgs) -> Result<ExitCode, Usage> {
    let l = Loaded::new(args.inputs)?;
    let op = l.operator(args.op)?;
    print(l.labels(op.apply(l.family()?)));
    Ok(ExitCode::SUCCESS)
}

fn reflect(args: OpArgs) -> Result<ExitCode, Usage> {
    let l = Loaded::new(args.inputs)?;
    if l.space.len() > 4 {
        return Err(Usage("reflect supports at most 4 points".into()));
    }
    let op = l.operator(args.op)?;
    let mut out = serde_json::Map::new();
    if let Some(f) = l.optional_family()? {
        let hull = idempotent_hull(&op, f);
        out.insert("hull".into(), l.labels(hull.family));
        out.insert("iterations".into(), json!(hull.iterations));
    }
    let opens: Vec<Value> = reflection_opens(&op)?.into_iter().map(|g| l.labels(g)).collect();
    out.insert("opens".into(), Value::Array(opens));
    print(Value::Object(out));
    Ok(ExitCode::SUCCESS)
}

fn ideal(derive: Derive, inputs: Inputs) -> Result<ExitCode, Usage> {
    let l = Loaded::new(inputs)?;
    let s = l.ideal()?;
    let (derived, iterations) = match derive {
        Derive::Tb => (tb_hull(&l.space, &s)?, 1),
        Derive::Plus => (plus_ideal(&l.space, &s)?, 1),
        Derive::Hat => (hat_ideal(&l.space, &s)?, 1),
        Derive::Minus => (minus_ideal(&l.space, &s)?, 1),
        Derive::Star => {
            let star = star_ideal(&l.space, &s)?;
            (star.ideal, star.iterations)
        }
    };
    print(json!({ "ideal": l.labels(derived.members()), "iterations": iterations }));
    Ok(ExitCode::SUCCESS)
}

fn check(predicate: Predicate, op: Option<Op>, inputs: Inputs) -> Result<ExitCode, Usage> {
    let l = Loaded::new(inputs)?;
    let operator = |l: &Loaded| match op {
        Some(op) => l.operator(op),
        None => Err(Usage("this predicate needs --op".into())),
    };
    let (holds, witness) = match predicate {
        Predicate::Club => (satisfies_club(&l.space, l.family()?, &l.ideal()?)?, Value::Null),
        Predicate::Stable => (stable_under_small_enlargements(&l.space, l.family()?), Value::Null),
        Predicate::Open => {
            let op = operator(&l)?;
            let g = l.family()?;
            let leaked = g.intersection(op.apply(op.hyperspace().complement(g)));
            let witness = leaked.iter().next().map_or(Value::Null, |a| json!(l.space.subset_labels(a)));
            (is_open(&op, g), witness)
        }
        Predicate::Topological => {
            let op = operator(&l)?;
            let scope = if l.space.len() <= 4 {
                Scope::Exhaustive
            } else {
                Scope::Sampled { trials: DEFAULT_TRIALS, seed: DEFAULT_SEED }
            };
            let verdict = is_topological(&op, scope)?;
            (verdict.topological, verdict.witness.map_or(Value::Null, |f| l.labels(f)))
        }
    };
    print(json!({ "holds": holds, "witness": witness }));
    Ok(ExitCode::SUCCESS)
}

fn verify(args: VerifyArgs) -> Result<ExitCode, Usage> {
    let pool = InstancePool::standard(args.seed, args.max_points as usize, args.trials as usize)?;
    if let Some(target) = &args.search {
        let witness = search_counterexample(target, &pool)?;
        let text = serde_json::to_string_pretty(&witness)?;
        if let Some(path) = &args.report {
            fs::write(path, format!("{text}\n")).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
        }
        match (&witness, args.format) {
            (_, Format::Full) => println!("{text}"),
            (Some(w), Format::Summary) => println!("{target}: found on {}: {}", w.space_name, w.detail),
            (None, Format::Summary) => println!("{target}: none"),
        }
        return Ok(ExitCode::SUCCESS);
    }
    let ids: Vec<&str> = args.checks.iter().map(String::as_str).collect();
    let report = verify_checks(&pool, &ids)?;
    let json = report.to_json();
    if let Some(path) = &args.report {
        fs::write(path, &json).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    }
    match args.format {
        Format::Summary => print!("{}", report.summary()),
        Format::Full => print!("{json}"),
    }
    Ok(if report.passed { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Closure(args) => closure(args),
        Command::Reflect(args) => reflect(args),
        Command::Ideal { derive, inputs } => ideal(derive, inputs),
        Command::Check { predicate, op, inputs } => check(predicate, op, inputs),
        Command::Verify(args) => verify(args),
    };
    result.unwrap_or_else(|Usage(message)| {
        eprintln!("error: {message}");
        ExitCode::from(2)
    })
}
