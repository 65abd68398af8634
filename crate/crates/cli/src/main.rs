//! `multirel`: evaluate terms, list and check laws, search for
//! counterexamples and canonicalise files.
//!
//! Exit codes: 0 success or pass, 1 failure or counterexample found,
//! 2 usage error, 3 size cap exceeded.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context as _};
use clap::{Parser, Subcommand};
use multirel::{MRel, Rel};
use multirel_dsl::{eval, parse, CmpOp, DslError, Env, Term};
use multirel_laws::{
    check, find_law, registry, CheckOptions, EngineError, Law, Report, Verdict, DEFAULT_DENSITY, DEFAULT_SEED,
};

#[derive(Parser)]
#[command(name = "multirel", version, about = "Finite-model workbench for binary multirelations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a closed term against an environment file and print its JSON value.
    Eval {
        #[arg(long)]
        env: Option<PathBuf>,
        #[arg(long)]
        expr: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List registered laws.
    Laws {
        /// Only ids starting with this prefix.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Check one law or the whole registry.
    Check {
        #[arg(long, required_unless_present = "all", conflicts_with = "all")]
        law: Option<String>,
        #[arg(long)]
        all: bool,
        /// Positional carrier sizes; the last one repeats.
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<usize>>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Force random mode with this many instance tuples.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, requires = "random")]
        density: Option<f64>,
        #[arg(long)]
        json: bool,
        /// Record wall-clock time in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Search for an instance separating two terms.
    FindCex {
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
        /// One of == <= >= <u= <d= <ud=.
        #[arg(long, default_value = "==")]
        rel: String,
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<usize>>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        random: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Read a relation, multirelation or environment file and write its canonical form.
    Convert {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

/// Errors past argument parsing: caps map to 3, everything else to 2.
fn exit_code(err: &anyhow::Error) -> u8 {
    let cap = err.chain().any(|e| {
        e.downcast_ref::<DslError>().is_some_and(DslError::is_cap)
            || matches!(e.downcast_ref::<EngineError>(), Some(EngineError::Dsl(d)) if d.is_cap())
            || e.downcast_ref::<multirel::Error>().is_some_and(multirel::Error::is_cap)
    });
    if cap {
        3
    } else {
        2
    }
}

/// The error chain, skipping causes already spelled out by their parent.
fn message(err: &anyhow::Error) -> String {
    let mut text = String::new();
    for cause in err.chain() {
        let part = cause.to_string();
        if !text.contains(&part) {
            if !text.is_empty() {
                text.push_str(": ");
            }
            text.push_str(&part);
        }
    }
    text
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {}", message(&err));
            ExitCode::from(exit_code(&err))
        }
    }
}

fn run(command: Command) -> anyhow::Result<u8> {
    match command {
        Command::Eval { env, expr, out } => run_eval(env, &expr, out),
        Command::Laws { filter, json } => run_laws(filter.as_deref(), json),
        Command::Check { law, all, sizes, seed, random, density, json, timing } => {
            let opts =
                CheckOptions { sizes, seed, random: random.map(|n| (n, density.unwrap_or(DEFAULT_DENSITY))), timing };
            match law {
                Some(id) => run_check_one(find_law(&id)?, &opts, json),
                None if all => run_check_all(&opts, json),
                None => bail!("either --law or --all is required"),
            }
        }
        Command::FindCex { lhs, rhs, rel, sizes, seed, random, json } => {
            let op = CmpOp::ALL
                .into_iter()
                .find(|op| op.token() == rel)
                .ok_or_else(|| anyhow!("unknown comparison `{rel}`"))?;
            let claim = Term::cmp(op, parse(&lhs).context("--lhs")?, parse(&rhs).context("--rhs")?);
            let opts = CheckOptions { sizes, seed, random: random.map(|n| (n, DEFAULT_DENSITY)), timing: false };
            let report = check(&Law::adhoc(claim), &opts)?;
            if json {
                println!("{}", serde_json::to_string(&report)?);
            } else {
                match report.counterexamples.first() {
                    Some(cex) => println!("counterexample: {}", serde_json::to_string(cex)?),
                    None => println!("no counterexample ({:?}, {} instances)", report.mode, report.checked),
                }
            }
            Ok(verdict_code(&report))
        }
        Command::Convert { input, out } => {
            let text = fs::read_to_string(&input).with_context(|| format!("reading {}", input.display()))?;
            let canonical = canonical(&text)?;
            fs::write(&out, canonical + "\n").with_context(|| format!("writing {}", out.display()))?;
            Ok(0)
        }
    }
}

fn run_eval(env: Option<PathBuf>, expr: &str, out: Option<PathBuf>) -> anyhow::Result<u8> {
    let env = match env {
        Some(path) => {
            let text = fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
            Env::from_json(&text)?
        }
        None => Env::default(),
    };
    let value = eval(&parse(expr)?, &env)?;
    let text = serde_json::to_string(&value.to_json())?;
    match out {
        Some(path) => fs::write(&path, text + "\n").with_context(|| format!("writing {}", path.display()))?,
        None => println!("{text}"),
    }
    Ok(0)
}

fn run_laws(filter: Option<&str>, json: bool) -> anyhow::Result<u8> {
    let laws = registry().iter().filter(|l| filter.is_none_or(|p| l.id.starts_with(p)));
    for l in laws {
        if json {
            let vars: Vec<_> = l
                .vars
                .iter()
                .map(|v| {
                    let conds: Vec<_> = v.conditions.iter().map(|c| c.name()).collect();
                    serde_json::json!({"name": v.name, "src": v.src.to_string(), "dst": v.dst.to_string(), "conditions": conds})
                })
                .collect();
            let entry = serde_json::json!({
                "id": l.id,
                "kind": l.kind.name(),
                "statement": l.statement,
                "claim": l.claim.to_string(),
                "vars": vars,
                "sizes": l.sizes,
                "note": l.note,
            });
            println!("{entry}");
        } else {
            println!("{:<48} {:<12} {}", l.id, l.kind.name(), l.statement);
        }
    }
    Ok(0)
}

fn verdict_code(report: &Report) -> u8 {
    match report.verdict {
        Verdict::Pass => 0,
        Verdict::Fail => 1,
        Verdict::Skipped => 3,
    }
}

fn summary(r: &Report) -> String {
    let flag = if r.as_declared { "" } else { "  NOT AS DECLARED" };
    let sizes: Vec<_> = r.sizes.iter().map(|(c, n)| format!("{c}={n}")).collect();
    format!(
        "{:<6} {} [{} {:?}, {} checked, {} skipped by condition, sizes {}]{}",
        format!("{:?}", r.verdict).to_uppercase(),
        r.law,
        r.kind,
        r.mode,
        r.checked,
        r.skipped_by_condition,
        sizes.join(" "),
        flag
    )
}

/// Single law: exit code follows the verdict.
fn run_check_one(law: &Law, opts: &CheckOptions, json: bool) -> anyhow::Result<u8> {
    let report = check(law, opts)?;
    if json {
        println!("{}", serde_json::to_string(&report)?);
    } else {
        println!("{}", summary(&report));
        if let Some(reason) = &report.reason {
            println!("  reason: {reason}");
        }
        for cex in &report.counterexamples {
            println!("  counterexample: {}", serde_json::to_string(cex)?);
        }
    }
    Ok(verdict_code(&report))
}

/// Whole registry: exit 0 iff every law behaves as declared.
fn run_check_all(opts: &CheckOptions, json: bool) -> anyhow::Result<u8> {
    let mut reports = Vec::new();
    for law in registry() {
        let report = check(law, opts)?;
        if !json {
            println!("{}", summary(&report));
        }
        reports.push(report);
    }
    let off: Vec<_> = reports.iter().filter(|r| !r.as_declared).map(|r| r.law.as_str()).collect();
    if json {
        println!("{}", serde_json::to_string(&reports)?);
    } else {
        println!("{} laws, {} as declared", reports.len(), reports.len() - off.len());
        for id in &off {
            println!("not as declared: {id}");
        }
    }
    Ok(if off.is_empty() { 0 } else { 1 })
}

/// Canonical JSON of a relation, multirelation or environment document.
fn canonical(text: &str) -> anyhow::Result<String> {
    if let Ok(r) = Rel::from_json(text) {
        return Ok(r.to_json());
    }
    if let Ok(m) = MRel::from_json(text) {
        return Ok(m.to_json());
    }
    match Env::from_json(text) {
        Ok(env) => Ok(env.to_json()),
        Err(e) => bail!("not a relation, multirelation or environment: {e}"),
    }
}
