//! Command-line front end: construct the minimum expandable families, query
//! Hamiltonian witnesses, and run/check exhaustive certificates.
//!
//! Exit codes: 0 success, 1 negative finding (not expandable, no witness,
//! certificate rejected), 2 usage or input error. The primary artifact goes
//! to stdout (or --output); progress goes to stderr.

mod dot;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hamex::certify::{self, Certificate, CertifyOptions, DedupMode, WitnessJson};
use hamex::constructions::{build_minimum, exp_h, template_witness};
use hamex::oracle::{
    expandability_report_with, ham_cycle_containing_with, ham_path_with, OracleConfig,
    DEFAULT_DP_LIMIT,
};
use hamex::{CycleWitness, Graph, NonEdge};

#[derive(Parser)]
#[command(name = "hamex", version, about = "Minimum hamiltonian-expandable graphs")]
struct Cli {
    /// Orders up to this use the subset-DP engine; larger ones backtrack.
    #[arg(long, global = true, default_value_t = DEFAULT_DP_LIMIT)]
    dp_limit: usize,
    /// Seed for the certifier's randomized filter spot checks.
    #[arg(long, global = true, default_value_t = 0x5EED)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Template,
    Oracle,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Dedup {
    Labeled,
    Canonical,
}

impl From<Dedup> for DedupMode {
    fn from(d: Dedup) -> DedupMode {
        match d {
            Dedup::Labeled => DedupMode::Labeled,
            Dedup::Canonical => DedupMode::Canonical,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Emit a minimum expandable graph on n vertices.
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Produce a Hamiltonian-cycle witness through one non-edge.
    Witness {
        /// Use the built-in minimum construction on n vertices.
        #[arg(long, conflicts_with = "input")]
        n: Option<usize>,
        /// Base graph JSON file.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        v: usize,
        /// template: O(n) route from the family's proof paths (needs --n, n >= 7);
        /// oracle: exact search on any graph.
        #[arg(long, value_enum, default_value_t = Mode::Oracle)]
        mode: Mode,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check every non-edge of a graph; exit 0 iff the graph is expandable.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Hamiltonian s-t path query.
    Oracle {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
    },
    /// Certify the extremal edge count: witnessed upper bound plus an
    /// exhaustive search one edge below it.
    Certify {
        #[arg(long)]
        n: usize,
        /// Worker threads for the enumeration shards.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Dedup::Labeled)]
        dedup: Dedup,
        /// Permit n = 9 or 10 (the sweep grows by ~3 orders of magnitude per step).
        #[arg(long)]
        long_run: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Re-validate a certificate file.
    CheckCert { file: PathBuf },
    /// Print n and the extremal edge count for a range of orders.
    Table {
        #[arg(long, default_value_t = 3)]
        from: usize,
        #[arg(long)]
        to: usize,
        /// Rebuild each construction and confirm it with the oracle (rows with n <= 16).
        #[arg(long)]
        verify: bool,
    },
    /// Re-serialize a graph file as normalized JSON or DOT.
    Export {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Serialize)]
struct VerifyReport {
    n: usize,
    m: usize,
    expandable: bool,
    witnesses: Vec<WitnessJson>,
    failures: Vec<[usize; 2]>,
}

#[derive(Serialize)]
struct PathReport {
    s: usize,
    t: usize,
    path: Vec<usize>,
}

#[derive(Serialize)]
struct CertCheckReport {
    ok: bool,
    reasons: Vec<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(path: &Option<PathBuf>, text: &str) -> Result<(), String> {
    let mut content = text.to_string();
    if !content.ends_with('\n') {
        content.push('\n');
    }
    match path {
        Some(p) => fs::write(p, content)
            .map_err(|e| format!("cannot write {}: {e}", p.display())),
        None => {
            use std::io::Write;
            match std::io::stdout().write_all(content.as_bytes()) {
                Ok(()) => Ok(()),
                // downstream closed the pipe (e.g. `| head`); not an error
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
                Err(e) => Err(format!("cannot write to stdout: {e}")),
            }
        }
    }
}

fn load_graph(path: &Path) -> Result<Graph, String> {
    let text = fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    Graph::from_json_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn witness_json(w: &CycleWitness) -> WitnessJson {
    WitnessJson {
        through: [w.through.u(), w.through.v()],
        order: w.order.clone(),
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let cfg = OracleConfig { dp_limit: cli.dp_limit };
    match cli.cmd {
        Cmd::Construct { n, format, output } => {
            let fam = build_minimum(n).map_err(|e| e.to_string())?;
            let text = match format {
                Format::Json => serde_json::to_string(&fam.to_json()).unwrap(),
                Format::Dot => dot::family_dot(&fam),
            };
            emit(&output, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Witness { n, input, u, v, mode, output } => match mode {
            Mode::Template => {
                let n = n.ok_or("template mode needs --n: routes exist only for the built-in families")?;
                let fam = build_minimum(n).map_err(|e| e.to_string())?;
                let e = NonEdge::new(u, v).map_err(|e| e.to_string())?;
                let w = template_witness(&fam, e).map_err(|e| e.to_string())?;
                emit(&output, &serde_json::to_string(&witness_json(&w)).unwrap())?;
                Ok(ExitCode::SUCCESS)
            }
            Mode::Oracle => {
                let g = match (&input, n) {
                    (Some(path), _) => load_graph(path)?,
                    (None, Some(n)) => build_minimum(n)
                        .and_then(|fam| fam.to_graph())
                        .map_err(|e| e.to_string())?,
                    (None, None) => return Err("provide --input or --n".into()),
                };
                let e = g.non_edge(u, v).map_err(|e| e.to_string())?;
                match ham_cycle_containing_with(&g, e, cfg).map_err(|e| e.to_string())? {
                    Some(w) => {
                        emit(&output, &serde_json::to_string(&witness_json(&w)).unwrap())?;
                        Ok(ExitCode::SUCCESS)
                    }
                    None => {
                        eprintln!("no hamiltonian cycle through {e}");
                        Ok(ExitCode::from(1))
                    }
                }
            }
        },
        Cmd::Verify { input, output } => {
            let g = load_graph(&input)?;
            let report = expandability_report_with(&g, cfg);
            let wire = VerifyReport {
                n: g.n(),
                m: g.m(),
                expandable: report.expandable,
                witnesses: report
                    .entries
                    .values()
                    .flatten()
                    .map(witness_json)
                    .collect(),
                failures: report.failures().iter().map(|e| [e.u(), e.v()]).collect(),
            };
            emit(&output, &serde_json::to_string_pretty(&wire).unwrap())?;
            if report.expandable {
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!("not expandable: {} non-edge(s) admit no cycle", wire.failures.len());
                Ok(ExitCode::from(1))
            }
        }
        Cmd::Oracle { input, s, t } => {
            let g = load_graph(&input)?;
            match ham_path_with(&g, s, t, cfg).map_err(|e| e.to_string())? {
                Some(path) => {
                    emit(&None, &serde_json::to_string(&PathReport { s, t, path }).unwrap())?;
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    eprintln!("no hamiltonian path from {s} to {t}");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Cmd::Certify { n, jobs, dedup, long_run, output } => {
            if jobs == 0 {
                return Err("--jobs must be at least 1".into());
            }
            let opts = CertifyOptions {
                jobs,
                dedup: dedup.into(),
                allow_long_run: long_run,
                seed: cli.seed,
            };
            eprintln!("certifying n = {n} ({jobs} job(s))...");
            let start = Instant::now();
            let cert = certify::certify(n, opts).map_err(|e| e.to_string())?;
            eprintln!(
                "examined {} graphs at m = {} in {:.2}s: {} survivor(s)",
                cert.lower.total,
                cert.lower.m,
                start.elapsed().as_secs_f64(),
                cert.lower.survivors
            );
            emit(&output, &serde_json::to_string_pretty(&cert).unwrap())?;
            if cert.lower.survivors == 0 {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Cmd::CheckCert { file } => {
            let text = fs::read_to_string(&file)
                .map_err(|e| format!("cannot read {}: {e}", file.display()))?;
            let cert: Certificate = serde_json::from_str(&text)
                .map_err(|e| format!("{}: not a certificate: {e}", file.display()))?;
            let check = certify::verify_certificate(&cert);
            let wire = CertCheckReport { ok: check.ok, reasons: check.reasons };
            emit(&None, &serde_json::to_string_pretty(&wire).unwrap())?;
            if wire.ok {
                Ok(ExitCode::SUCCESS)
            } else {
                for r in &wire.reasons {
                    eprintln!("check-cert: {r}");
                }
                Ok(ExitCode::from(1))
            }
        }
        Cmd::Table { from, to, verify } => {
            if from < 3 {
                return Err("--from must be at least 3".into());
            }
            if to < from {
                return Err("--to must be at least --from".into());
            }
            let mut any_fail = false;
            let mut rows = String::new();
            for n in from..=to {
                let m = exp_h(n).map_err(|e| e.to_string())?;
                if verify {
                    let status = if n <= 16 {
                        let ok = build_minimum(n)
                            .and_then(|fam| fam.to_graph())
                            .map(|g| expandability_report_with(&g, cfg).expandable)
                            .map_err(|e| e.to_string())?;
                        any_fail |= !ok;
                        if ok { "ok" } else { "FAIL" }
                    } else {
                        "-"
                    };
                    rows.push_str(&format!("{n}\t{m}\t{status}\n"));
                } else {
                    rows.push_str(&format!("{n}\t{m}\n"));
                }
            }
            emit(&None, &rows)?;
            if any_fail {
                Ok(ExitCode::from(1))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
        Cmd::Export { input, format, output } => {
            let g = load_graph(&input)?;
            let wire = g.to_json();
            let text = match format {
                Format::Json => serde_json::to_string(&wire).unwrap(),
                Format::Dot => dot::plain_dot(&wire),
            };
            emit(&output, &text)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
