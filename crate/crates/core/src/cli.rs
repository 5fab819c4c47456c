//! The `ftk` command line: graph6 in, one JSON document out.
//!
//! Exit codes: 0 computed (and the property holds where one is tested),
//! 1 the property fails, 2 usage or input error, 3 resource cap exceeded.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::connectivity::vertex_connectivity;
use crate::criticality::{all_violations, is_n_factor_critical_avoidable_with_cap};
use crate::error::Error;
use crate::factors::{
    extract_k2_cycle_factor, has_factor, max_isolated_deficiency_with_cap,
    max_tc_deficiency_with_cap, search_factor_with_cap, FactorKind,
};
use crate::families::{build_family, check_family_with_cap, Family, FamilySpec};
use crate::graph::Graph;
use crate::graph6::{parse_graph6, write_graph6};
use crate::harness::{run_campaign, Campaign, GraphSource, RecordPolicy, Reduction, Theorem};
use crate::invariants::{isolated_toughness_with_cap, toughness_with_cap};
use crate::rational::Rat;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY_FAILS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

const LONG_VERSION: &str = concat!(
    env!("CARGO_PKG_VERSION"),
    "\nschema: 1\nexhaustive cap (default): 24\nmask limit: 64\ngraph6 writer max vertices: 62\nexhaustive campaign max vertices: 9"
);

#[derive(Debug, Parser)]
#[command(name = "ftk", version, long_version = LONG_VERSION, about = "Toughness, connectivity and component factors of small graphs")]
struct Cli {
    /// Worker threads (0 = all cores). Results do not depend on it.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    /// Vertex cap for exhaustive searches.
    #[arg(long, global = true, default_value_t = crate::DEFAULT_EXHAUSTIVE_CAP)]
    cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GraphArg {
    /// graph6 string, `@path` to read a file, or `-` for stdin.
    #[arg(short = 'g', long = "graph")]
    graph: String,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    K2cycles,
    K2odd5,
}

impl From<KindArg> for FactorKind {
    fn from(k: KindArg) -> FactorKind {
        match k {
            KindArg::K2cycles => FactorKind::K2Cycles,
            KindArg::K2odd5 => FactorKind::K2OddCyclesGe5,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DeficiencyArg {
    Iso,
    Tc,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RecordsArg {
    All,
    Hypothesis,
    None,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Toughness, isolated toughness and vertex connectivity.
    Invariants {
        #[command(flatten)]
        graph: GraphArg,
    },
    /// Decide factor existence.
    Factor {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Also emit an explicit factor.
        #[arg(long)]
        certificate: bool,
    },
    /// Maximum isolated or triangular-cactus deficiency.
    Deficiency {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, value_enum)]
        kind: DeficiencyArg,
    },
    /// Decide (F, n)-factor critical avoidability.
    Critical {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(short = 'n', default_value_t = 0)]
        n: usize,
        #[arg(long, value_enum)]
        kind: KindArg,
        /// List every violation instead of the first.
        #[arg(long)]
        all: bool,
    },
    /// Build (and optionally check) an extremal family member.
    Family {
        #[arg(long, value_parser = ["1", "2", "4"])]
        remark: String,
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'k')]
        k: usize,
        /// Recompute every claimed invariant.
        #[arg(long)]
        check: bool,
    },
    /// Run a theorem verification campaign.
    Verify {
        #[arg(long)]
        theorem: String,
        /// `a`, `a..b` (inclusive) or `a,b,c`.
        #[arg(long = "n")]
        n_range: String,
        #[arg(long = "k")]
        k_range: String,
        /// Every graph on at most this many vertices.
        #[arg(long, conflicts_with = "gnp", required_unless_present = "gnp")]
        exhaustive: Option<usize>,
        /// Enumerate every labeling instead of degree-ordered representatives.
        #[arg(long, requires = "exhaustive")]
        labeled: bool,
        /// `V,p,count` random samples, for example `12,3/4,1000`.
        #[arg(long)]
        gnp: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = RecordsArg::All)]
        records: RecordsArg,
        /// Write the report here; stdout then carries a summary.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// graph6 round trip.
    Codec {
        #[arg(long)]
        roundtrip: String,
    },
}

enum Failure {
    Usage(String),
    Resource(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::ResourceLimit { .. } | Error::UnsupportedSize { .. } => {
                Failure::Resource(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

struct Output {
    json: serde_json::Value,
    code: i32,
}

fn emit<T: Serialize>(value: &T, property_holds: bool) -> Output {
    Output {
        json: serde_json::to_value(value).expect("payloads serialize"),
        code: if property_holds {
            EXIT_OK
        } else {
            EXIT_PROPERTY_FAILS
        },
    }
}

fn read_graph(arg: &str) -> Result<Graph, Failure> {
    let text = if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
        s
    } else if let Some(path) = arg.strip_prefix('@') {
        std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("reading {path}: {e}")))?
    } else {
        arg.to_owned()
    };
    Ok(parse_graph6(text.trim_end())?)
}

fn parse_values(s: &str) -> Result<Vec<usize>, Failure> {
    let bad = || Failure::Usage(format!("bad parameter range {s:?}"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let values = if let Some((a, b)) = s.split_once("..") {
        let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
        (a..=b).collect()
    } else {
        s.split(',').map(num).collect::<Result<Vec<_>, _>>()?
    };
    if values.is_empty() {
        return Err(bad());
    }
    Ok(values)
}

fn parse_gnp(s: &str) -> Result<GraphSource, Failure> {
    let parts: Vec<&str> = s.split(',').collect();
    let bad = || Failure::Usage(format!("--gnp expects V,p,count, got {s:?}"));
    let [v, p, count] = parts[..] else {
        return Err(bad());
    };
    Ok(GraphSource::Gnp {
        vertices: v.trim().parse().map_err(|_| bad())?,
        p: p.parse::<Rat>()?,
        count: count.trim().parse().map_err(|_| bad())?,
    })
}

fn execute(cli: Cli) -> Result<Output, Failure> {
    let cap = cli.cap;
    match cli.command {
        Command::Invariants { graph } => {
            let g = read_graph(&graph.graph)?;
            let t = toughness_with_cap(&g, cap)?;
            let i = isolated_toughness_with_cap(&g, cap)?;
            Ok(emit(
                &json!({
                    "graph6": write_graph6(&g).ok(),
                    "vertices": g.n(),
                    "toughness": t.value,
                    "isolated_toughness": i.value,
                    "connectivity": vertex_connectivity(&g),
                    "witnesses": { "toughness": t.witness, "isolated_toughness": i.witness },
                }),
                true,
            ))
        }
        Command::Factor {
            graph,
            kind,
            certificate,
        } => {
            let g = read_graph(&graph.graph)?;
            let kind = FactorKind::from(kind);
            let exists = has_factor(&g, kind, cap)?;
            let mut body = json!({ "exists": exists });
            if certificate && exists {
                let cert = match kind {
                    FactorKind::K2Cycles => extract_k2_cycle_factor(&g)?,
                    FactorKind::K2OddCyclesGe5 => search_factor_with_cap(&g, kind, cap)?
                        .ok_or_else(|| {
                            Failure::Usage("certificate search disagrees with the criterion".into())
                        })?,
                };
                body["certificate"] = serde_json::to_value(cert).expect("serializes");
            }
            Ok(emit(&body, exists))
        }
        Command::Deficiency { graph, kind } => {
            let g = read_graph(&graph.graph)?;
            let w = match kind {
                DeficiencyArg::Iso => max_isolated_deficiency_with_cap(&g, cap)?,
                DeficiencyArg::Tc => max_tc_deficiency_with_cap(&g, cap)?,
            };
            Ok(emit(&w, true))
        }
        Command::Critical {
            graph,
            n,
            kind,
            all,
        } => {
            let g = read_graph(&graph.graph)?;
            let kind = FactorKind::from(kind);
            if all {
                let violations = all_violations(&g, n, kind, cap)?;
                let holds = violations.is_empty();
                Ok(emit(
                    &json!({ "holds": holds, "violations": violations }),
                    holds,
                ))
            } else {
                let verdict = is_n_factor_critical_avoidable_with_cap(&g, n, kind, cap)?;
                let holds = verdict.holds;
                Ok(emit(&verdict, holds))
            }
        }
        Command::Family {
            remark,
            n,
            k,
            check,
        } => {
            let family = match remark.as_str() {
                "1" => Family::Remark1,
                "2" => Family::Remark2,
                _ => Family::Remark4,
            };
            let spec = FamilySpec::new(family, n, k)?;
            if check {
                let report = check_family_with_cap(spec, cap)?;
                let pass = report.all_pass;
                Ok(emit(&report, pass))
            } else {
                let (g, expectation) = build_family(spec)?;
                Ok(emit(
                    &json!({ "spec": spec, "graph6": write_graph6(&g)?, "expectation": expectation }),
                    true,
                ))
            }
        }
        Command::Verify {
            theorem,
            n_range,
            k_range,
            exhaustive,
            labeled,
            gnp,
            seed,
            records,
            out,
        } => {
            let source = match (exhaustive, gnp) {
                (Some(max_vertices), None) => GraphSource::Exhaustive {
                    max_vertices,
                    reduction: if labeled {
                        Reduction::Labeled
                    } else {
                        Reduction::DegreeOrdered
                    },
                },
                (None, Some(spec)) => parse_gnp(&spec)?,
                _ => {
                    return Err(Failure::Usage(
                        "exactly one of --exhaustive and --gnp is required".into(),
                    ))
                }
            };
            let mut campaign = Campaign::new(
                theorem.parse::<Theorem>()?,
                parse_values(&n_range)?,
                parse_values(&k_range)?,
                source,
                seed,
            );
            campaign.cap = cap;
            campaign.records = match records {
                RecordsArg::All => RecordPolicy::All,
                RecordsArg::Hypothesis => RecordPolicy::Hypothesis,
                RecordsArg::None => RecordPolicy::None,
            };
            let report = run_campaign(&campaign)?;
            let clean = !report.has_counterexample();
            match out {
                Some(path) => {
                    std::fs::write(&path, report.to_json() + "\n")
                        .map_err(|e| Failure::Usage(format!("writing {}: {e}", path.display())))?;
                    Ok(emit(
                        &json!({
                            "schema": report.schema,
                            "out": path,
                            "summary": report.summary,
                            "counterexamples": report.counterexamples,
                            "aborted": report.aborted,
                        }),
                        clean,
                    ))
                }
                None => Ok(emit(&report, clean)),
            }
        }
        Command::Codec { roundtrip } => {
            let g = read_graph(&roundtrip)?;
            let output = write_graph6(&g)?;
            let identical = output == roundtrip.trim_end();
            Ok(emit(
                &json!({
                    "input": roundtrip.trim_end(),
                    "output": output,
                    "vertices": g.n(),
                    "edges": g.edges(),
                    "identical": identical,
                }),
                identical,
            ))
        }
    }
}

/// Runs the CLI on `args` (program name first), writing the JSON document to
/// `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{}", e.render());
                return EXIT_OK;
            }
            let _ = write!(err, "{}", e.render());
            return EXIT_USAGE;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "ftk: cannot start {} threads: {e}", cli.threads);
            return EXIT_USAGE;
        }
    };
    match pool.install(|| execute(cli)) {
        Ok(output) => {
            let _ = writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&output.json).expect("serializes")
            );
            output.code
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "ftk: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Resource(msg)) => {
            let _ = writeln!(err, "ftk: {msg}");
            EXIT_RESOURCE
        }
    }
}

/// Entry point of the `ftk` binary.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
