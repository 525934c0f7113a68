use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use smskit::engine::{enumerate_sms, extend_to_sms, verify_characterization, SearchConfig, Strategy, DEFAULT_MAX_NODES};
use smskit::export::QuiverGraph;
use smskit::parse::{parse_algebra, parse_object, parse_object_set};
use smskit::{Error, ObjectSet, RfsType, StableCategory};

#[derive(Parser)]
#[command(name = "smskit", version, about = "Stable Hom and simple-minded systems over representation-finite self-injective algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a type and print its invariants.
    Classify(Common),
    /// Stable Hom dimension between two objects.
    Hom {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// Print each nonzero summand of the covering sum.
        #[arg(long)]
        breakdown: bool,
    },
    /// Check a set against the orthogonality, cardinality, Nakayama and generation conditions.
    Check {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        set: String,
    },
    /// List every simple-minded system.
    Enumerate {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        search: Search,
    },
    /// Extend a Nakayama-stable orthogonal system to a simple-minded system.
    Extend {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "")]
        set: String,
        #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
        strategy: StrategyArg,
    },
    /// Compare sms's, Nakayama-stable orthogonal sets of full size, and the orbit search.
    Verify {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        search: Search,
    },
    /// Write the stable AR quiver as a dot document with a JSON sidecar.
    Export {
        #[command(flatten)]
        common: Common,
        /// Objects to highlight.
        #[arg(long)]
        set: Option<String>,
        /// Write the dot document here and the JSON next to it.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Common {
    /// Type as JSON, e.g. '{"family":"D","n":6,"f":"1/3","t":1}'.
    #[arg(long)]
    algebra: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct Search {
    /// Maximum number of search nodes.
    #[arg(long, env = "SMSKIT_BUDGET", default_value_t = DEFAULT_MAX_NODES)]
    budget: u64,
    /// Re-check every emitted set against the definition.
    #[arg(long)]
    verify: bool,
    #[arg(long)]
    parallel: bool,
}

impl Search {
    fn config(&self) -> Result<SearchConfig, Error> {
        Ok(SearchConfig {
            verify_each: self.verify,
            parallel: self.parallel,
            ..SearchConfig::with_budget(self.budget)?
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Auto,
    Generic,
    Nakayama,
    D3m,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Auto => Strategy::Auto,
            StrategyArg::Generic => Strategy::Generic,
            StrategyArg::Nakayama => Strategy::Nakayama,
            StrategyArg::D3m => Strategy::D3m,
        }
    }
}

enum Failure {
    Usage(String),
    Domain(Error),
    Partial(String, Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Outcome = Result<String, Failure>;

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "NO"
    }
}

fn set_json(s: &ObjectSet) -> serde_json::Value {
    json!(s.iter().map(ToString::to_string).collect::<Vec<_>>())
}

fn pretty(v: serde_json::Value) -> String {
    serde_json::to_string_pretty(&v).expect("json value serializes") + "\n"
}

fn load(common: &Common, allow_dot: bool) -> Result<RfsType, Failure> {
    if common.format == Format::Dot && !allow_dot {
        return Err(Failure::Usage("--format dot is only available for export".into()));
    }
    Ok(parse_algebra(&common.algebra)?)
}

fn classify(common: &Common) -> Outcome {
    let rfs = load(common, false)?;
    let family = format!("{:?}", rfs.type_family());
    let fields = [
        ("type", rfs.to_string()),
        ("family", family),
        ("m_delta", rfs.m_delta().to_string()),
        ("r", rfs.r().to_string()),
        ("simples", rfs.simple_count().to_string()),
        ("objects", rfs.object_count().to_string()),
        ("symmetric", rfs.is_symmetric().to_string()),
        ("standard", rfs.standard.to_string()),
    ];
    Ok(match common.format {
        Format::Json => pretty(serde_json::Value::Object(
            fields.iter().map(|(k, v)| (k.to_string(), json!(v))).collect(),
        )),
        _ => fields.iter().map(|(k, v)| format!("{k}={v}\n")).collect(),
    })
}

fn hom(common: &Common, from: &str, to: &str, breakdown: bool) -> Outcome {
    let rfs = load(common, false)?;
    let x = parse_object(from, &rfs)?;
    let y = parse_object(to, &rfs)?;
    let cat = StableCategory::new(&rfs);
    let dim = cat.stable_hom_dim(x, y)?;
    let terms = cat.covering_terms(x, y, cat.default_half_width());
    Ok(match common.format {
        Format::Json => {
            let mut v = json!({"from": x.to_string(), "to": y.to_string(), "dim": dim});
            if breakdown {
                v["terms"] = json!(terms
                    .iter()
                    .map(|t| json!({"z": t.z, "lift": t.lift.to_string(), "dim": t.dim}))
                    .collect::<Vec<_>>());
            }
            pretty(v)
        }
        _ => {
            let mut out = format!("{dim}\n");
            if breakdown {
                for t in &terms {
                    let _ = writeln!(out, "z={} lift={} dim={}", t.z, t.lift, t.dim);
                }
            }
            out
        }
    })
}

fn check(common: &Common, set: &str) -> Outcome {
    let rfs = load(common, false)?;
    let s = parse_object_set(set, &rfs)?;
    let cat = StableCategory::new(&rfs);
    let r = cat.check_all(&s)?;
    Ok(match common.format {
        Format::Json => pretty(json!({
            "set": set_json(&s),
            "report": r,
            "witness_text": r.witnesses.iter().map(ToString::to_string).collect::<Vec<_>>(),
        })),
        _ => {
            let mut out = format!(
                "orthogonal={} cardinality={} nakayama_stable={} weak_generating={} sms={}\n",
                yes_no(r.orthogonal),
                yes_no(r.cardinality_ok),
                yes_no(r.nakayama_stable),
                yes_no(r.weak_generating),
                yes_no(r.is_sms)
            );
            for w in &r.witnesses {
                let _ = writeln!(out, "witness: {w}");
            }
            out
        }
    })
}

fn enumerate(common: &Common, search: &Search) -> Outcome {
    let rfs = load(common, false)?;
    let cfg = search.config()?;
    let cat = StableCategory::new(&rfs);
    let e = enumerate_sms(&cat, &cfg)?;
    let out = match common.format {
        Format::Json => pretty(json!({
            "type": rfs.to_string(),
            "count": e.sets.len(),
            "exhaustive": e.exhaustive,
            "sets": e.sets.iter().map(set_json).collect::<Vec<_>>(),
        })),
        _ => {
            let mut out: String = e.sets.iter().map(|s| format!("{s}\n")).collect();
            let _ = writeln!(out, "count={}", e.sets.len());
            out
        }
    };
    if e.exhaustive {
        Ok(out)
    } else {
        Err(Failure::Partial(out, Error::BudgetExceeded { budget: e.budget }))
    }
}

fn extend(common: &Common, set: &str, strategy: StrategyArg) -> Outcome {
    let rfs = load(common, false)?;
    let s = parse_object_set(set, &rfs)?;
    let cat = StableCategory::new(&rfs);
    let cfg = SearchConfig {
        strategy: strategy.into(),
        ..SearchConfig::default()
    };
    let (sms, trace) = extend_to_sms(&cat, &s, &cfg)?;
    Ok(match common.format {
        Format::Json => pretty(json!({"input": set_json(&s), "sms": set_json(&sms), "trace": trace})),
        _ => {
            let mut out = String::new();
            for (i, step) in trace.steps.iter().enumerate() {
                let added: Vec<String> = step.added.iter().map(ToString::to_string).collect();
                let _ = writeln!(
                    out,
                    "step {}: add {{{}}} perp {} -> {} ({:?})",
                    i + 1,
                    added.join(","),
                    step.perp_before,
                    step.perp_after,
                    step.source
                );
            }
            let _ = writeln!(out, "sms={sms}");
            out
        }
    })
}

fn verify(common: &Common, search: &Search) -> Outcome {
    let rfs = load(common, false)?;
    let cat = StableCategory::new(&rfs);
    let r = verify_characterization(&cat, &search.config()?)?;
    let out = match common.format {
        Format::Json => pretty(json!({
            "type": rfs.to_string(),
            "equal": r.equal,
            "sms": r.direct.iter().map(set_json).collect::<Vec<_>>(),
            "three_conditions": r.three_conditions.len(),
            "orbit_search": r.orbit_search.len(),
            "census": r.census,
        })),
        _ => {
            let mut out = format!(
                "sms={} three_conditions={} orbit_search={} equal={}\n",
                r.direct.len(),
                r.three_conditions.len(),
                r.orbit_search.len(),
                yes_no(r.equal)
            );
            if let Some(c) = &r.census {
                let _ = writeln!(out, "census: one high orbit per sms={}", yes_no(c.holds));
            }
            out
        }
    };
    if r.equal && r.census.as_ref().is_none_or(|c| c.holds) {
        Ok(out)
    } else {
        Err(Failure::Partial(out, Error::InvariantViolated("characterization check failed".into())))
    }
}

fn export(common: &Common, set: Option<&str>, output: Option<&PathBuf>) -> Outcome {
    let rfs = load(common, true)?;
    let cat = StableCategory::new(&rfs);
    let highlight = set.map(|s| parse_object_set(s, &rfs)).transpose()?;
    let g = QuiverGraph::from_category(&cat, highlight.as_ref());
    if let Some(path) = output {
        let sidecar = path.with_extension("json");
        let io = |e: std::io::Error| Failure::Domain(Error::InvalidParameter(format!("cannot write output: {e}")));
        std::fs::write(path, g.to_dot()).map_err(io)?;
        std::fs::write(&sidecar, g.to_json() + "\n").map_err(io)?;
        return Ok(format!("wrote {} and {}\n", path.display(), sidecar.display()));
    }
    Ok(match common.format {
        Format::Json => g.to_json() + "\n",
        _ => g.to_dot(),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Classify(c) => classify(c),
        Command::Hom {
            common,
            from,
            to,
            breakdown,
        } => hom(common, from, to, *breakdown),
        Command::Check { common, set } => check(common, set),
        Command::Enumerate { common, search } => enumerate(common, search),
        Command::Extend { common, set, strategy } => extend(common, set, *strategy),
        Command::Verify { common, search } => verify(common, search),
        Command::Export { common, set, output } => export(common, set.as_deref(), output.as_ref()),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Partial(out, e)) => {
            print!("{out}");
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
