//! Thin command-line harness over the library: exact counts, deterministic
//! enumeration streams, verification suites, and fixture export.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or guard error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use annular::encoding::{count_tuples, Flavor};
use annular::factorization::{count_f_lambda_dp, enumerate_f_lambda};
use annular::formulas::{
    cmc_sum, disconnected_b_count, dmc_count, gj_count, marked_chain_count, nc_chain_count_b,
    reiner_count, BigCount,
};
use annular::goldens::export_goldens;
use annular::marked::MarkedPoset;
use annular::perm::Partition;
use annular::poset_b::{saturated_chain_count_to, saturated_chains_to, PosetContext};
use annular::signed::full_zero_cycle;
use annular::verify::{run_suite, VerifyParams, SUITES};
use annular::{Error, Result};

#[derive(Parser)]
#[command(
    name = "annular",
    version,
    about = "Annular noncrossing permutations, their chain posets, and minimal transitive factorizations"
)]
struct Cli {
    /// Worker threads for verification suites (0 keeps the library default).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the number of objects of one kind.
    Count(CountArgs),
    /// Stream objects of one kind, one per line.
    Enumerate(EnumerateArgs),
    /// Run a named verification suite and print one report line per check.
    Verify(VerifyArgs),
    /// Write the frozen JSON fixtures.
    ExportGoldens(ExportArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Kind {
    /// Minimal transitive transposition factorizations for a cycle type.
    Mtf,
    /// Maximal chains (or multichains with --rank-profile) of the type B poset.
    ChainsB,
    /// Maximal chains (or multichains) of the marked type A poset.
    ChainsMarked,
    /// Elements of the type B poset.
    ElementsB,
    /// Saturated chains to the full zero cycle in absolute order on B_n.
    NcbChains,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Oracle {
    /// Closed form.
    Formula,
    /// Exhaustive or recursive computation.
    Enumerate,
    /// Both, asserting agreement.
    Both,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Jsonl,
    Csv,
}

#[derive(Args)]
struct SelectArgs {
    /// Outer block size.
    #[arg(long)]
    p: Option<usize>,
    /// Inner block size.
    #[arg(long)]
    q: Option<usize>,
    /// Cycle type for mtf, e.g. 3,2 (any order; sorted internally).
    #[arg(long, value_delimiter = ',')]
    lambda: Option<Vec<usize>>,
    /// Multichain length; must equal the rank profile length when both given.
    #[arg(long)]
    m: Option<usize>,
    /// Weakly increasing ranks r_1,...,r_m selecting multichains.
    #[arg(long, value_delimiter = ',')]
    rank_profile: Option<Vec<usize>>,
    /// Restrict to connected objects.
    #[arg(long, conflicts_with = "disconnected")]
    connected: bool,
    /// Restrict to disconnected objects.
    #[arg(long)]
    disconnected: bool,
    /// Size cap / guard override (n for ncb-chains; p+q guard for posets).
    #[arg(long)]
    max_n: Option<usize>,
}

#[derive(Args)]
struct CountArgs {
    #[arg(value_enum)]
    kind: Kind,
    #[command(flatten)]
    select: SelectArgs,
    /// Source of the number; omitted: formula when one exists, else enumeration.
    #[arg(long, value_enum)]
    oracle: Option<Oracle>,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(value_enum)]
    kind: Kind,
    #[command(flatten)]
    select: SelectArgs,
    /// Output format.
    #[arg(long, value_enum, default_value = "jsonl")]
    format: Format,
    /// Stop after this many lines.
    #[arg(long)]
    limit: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name: gj, chains, two-to-one, plus-fibers, kk, marked, encoding,
    /// reiner or length-b.
    suite: String,
    /// Bound reinterpreted per suite (grid bound, n, or p+q bound).
    #[arg(long, visible_alias = "max")]
    max_n: Option<usize>,
    /// Restrict pair-indexed suites to this p.
    #[arg(long, requires = "q")]
    p: Option<usize>,
    /// Restrict pair-indexed suites to this q.
    #[arg(long, requires = "p")]
    q: Option<usize>,
}

#[derive(Args)]
struct ExportArgs {
    /// Target directory for the fixture files.
    #[arg(long, default_value = "goldens")]
    dir: PathBuf,
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

fn require_pair(s: &SelectArgs) -> Result<(usize, usize)> {
    match (s.p, s.q) {
        (Some(p), Some(q)) => Ok((p, q)),
        _ => Err(usage("this kind needs both --p and --q")),
    }
}

fn parse_lambda(s: &SelectArgs) -> Result<Partition> {
    let mut parts = s
        .lambda
        .clone()
        .ok_or_else(|| usage("kind mtf needs --lambda"))?;
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts)
}

fn profile_of(s: &SelectArgs) -> Result<Option<Vec<usize>>> {
    match (&s.rank_profile, s.m) {
        (Some(profile), m) => {
            if let Some(m) = m {
                if m != profile.len() {
                    return Err(usage(format!(
                        "--m {m} contradicts a rank profile of length {}",
                        profile.len()
                    )));
                }
            }
            Ok(Some(profile.clone()))
        }
        (None, Some(m)) => Err(usage(format!(
            "--m {m} needs --rank-profile with that many ranks"
        ))),
        (None, None) => Ok(None),
    }
}

fn poset_ctx(p: usize, q: usize, max_n: Option<usize>) -> Result<PosetContext> {
    let ctx = PosetContext::new(p, q)?;
    Ok(match max_n {
        Some(g) => ctx.with_guards(g, g),
        None => ctx,
    })
}

fn marked_poset(p: usize, q: usize, max_n: Option<usize>) -> Result<MarkedPoset> {
    match max_n {
        Some(g) => MarkedPoset::with_guard(p, q, g),
        None => MarkedPoset::new(p, q),
    }
}

/// formula and enumerated value for a count request; either side may be
/// unavailable for the requested kind/filter combination.
struct Sources {
    formula: Option<BigCount>,
    enumerated: Box<dyn FnOnce() -> Result<BigCount>>,
}

fn count_sources(args: &CountArgs) -> Result<Sources> {
    let s = &args.select;
    match args.kind {
        Kind::Mtf => {
            let lambda = parse_lambda(s)?;
            if let Some(cap) = s.max_n {
                if lambda.n() > cap {
                    return Err(Error::GuardExceeded {
                        what: "factorization counting",
                        param: "lambda weight",
                        limit: cap,
                        requested: lambda.n(),
                    });
                }
            }
            Ok(Sources {
                formula: Some(gj_count(&lambda)),
                enumerated: Box::new(move || count_f_lambda_dp(&lambda)),
            })
        }
        Kind::ChainsB => {
            let (p, q) = require_pair(s)?;
            let ctx = poset_ctx(p, q, s.max_n)?;
            if let Some(profile) = profile_of(s)? {
                let connected = s.connected;
                let disconnected = s.disconnected;
                let formula = if connected {
                    Some(count_tuples(p, q, profile.len(), &profile, Flavor::TypeB)?)
                } else {
                    None
                };
                return Ok(Sources {
                    formula,
                    enumerated: Box::new(move || {
                        let chains = ctx.multichains(&profile)?;
                        let n = chains
                            .iter()
                            .filter(|c| {
                                let is_conn = ctx.multichain_is_connected(c);
                                (!connected || is_conn) && (!disconnected || !is_conn)
                            })
                            .count();
                        Ok(BigCount::from(n))
                    }),
                });
            }
            let formula = if s.connected {
                cmc_sum(p, q)
            } else if s.disconnected {
                dmc_count(p, q)
            } else {
                nc_chain_count_b(p, q)
            };
            let connected = s.connected;
            let disconnected = s.disconnected;
            Ok(Sources {
                formula: Some(formula),
                enumerated: Box::new(move || {
                    let counts = ctx.chain_counts()?;
                    Ok(if connected {
                        counts.connected
                    } else if disconnected {
                        counts.disconnected
                    } else {
                        counts.total
                    })
                }),
            })
        }
        Kind::ChainsMarked => {
            let (p, q) = require_pair(s)?;
            let poset = marked_poset(p, q, s.max_n)?;
            if let Some(profile) = profile_of(s)? {
                let connected = s.connected;
                let disconnected = s.disconnected;
                let formula = if connected {
                    Some(count_tuples(p, q, profile.len(), &profile, Flavor::TypeA)?)
                } else {
                    None
                };
                return Ok(Sources {
                    formula,
                    enumerated: Box::new(move || {
                        let chains = poset.multichains(&profile)?;
                        let n = chains
                            .iter()
                            .filter(|c| {
                                let is_conn = poset.multichain_is_connected(c);
                                (!connected || is_conn) && (!disconnected || !is_conn)
                            })
                            .count();
                        Ok(BigCount::from(n))
                    }),
                });
            }
            // Every maximal chain of the marked poset is connected.
            let formula = if s.disconnected {
                BigCount::from(0usize)
            } else {
                marked_chain_count(p, q)
            };
            let disconnected = s.disconnected;
            Ok(Sources {
                formula: Some(formula),
                enumerated: Box::new(move || {
                    let n = poset
                        .maximal_chains()
                        .filter(|c| c.is_connected(p) != disconnected)
                        .count();
                    Ok(BigCount::from(n))
                }),
            })
        }
        Kind::ElementsB => {
            let (p, q) = require_pair(s)?;
            let ctx = poset_ctx(p, q, s.max_n)?;
            if profile_of(s)?.is_some() {
                return Err(usage("--rank-profile does not apply to elements-b"));
            }
            let formula = if s.disconnected {
                Some(disconnected_b_count(p, q))
            } else {
                None
            };
            let connected = s.connected;
            let disconnected = s.disconnected;
            Ok(Sources {
                formula,
                enumerated: Box::new(move || {
                    let n = ctx
                        .elements()?
                        .iter()
                        .filter(|e| {
                            let is_conn = e.connectivity(p) > 0;
                            (!connected || is_conn) && (!disconnected || !is_conn)
                        })
                        .count();
                    Ok(BigCount::from(n))
                }),
            })
        }
        Kind::NcbChains => {
            let n = s
                .max_n
                .ok_or_else(|| usage("kind ncb-chains needs --max-n as the rank n"))?;
            Ok(Sources {
                formula: Some(reiner_count(n)),
                enumerated: Box::new(move || {
                    let top = full_zero_cycle(n)?;
                    Ok(saturated_chain_count_to(&top))
                }),
            })
        }
    }
}

/// Returns false exactly when a `both` comparison disagreed.
fn cmd_count(args: &CountArgs) -> Result<bool> {
    let sources = count_sources(args)?;
    match args.oracle {
        None => {
            let value = match sources.formula {
                Some(f) => f,
                None => (sources.enumerated)()?,
            };
            println!("{value}");
            Ok(true)
        }
        Some(Oracle::Formula) => {
            let f = sources
                .formula
                .ok_or_else(|| usage("no closed form covers this kind/filter combination"))?;
            println!("{f}");
            Ok(true)
        }
        Some(Oracle::Enumerate) => {
            println!("{}", (sources.enumerated)()?);
            Ok(true)
        }
        Some(Oracle::Both) => {
            let f = sources
                .formula
                .ok_or_else(|| usage("no closed form covers this kind/filter combination"))?;
            let e = (sources.enumerated)()?;
            let ok = f == e;
            println!("{f}/{e} {}", if ok { "pass" } else { "fail" });
            Ok(ok)
        }
    }
}

/// Deterministic object stream for one kind, already formatted per line.
fn enumerate_lines(args: &EnumerateArgs) -> Result<Vec<String>> {
    let s = &args.select;
    let csv = args.format == Format::Csv;
    let mut lines = Vec::new();
    match args.kind {
        Kind::Mtf => {
            let lambda = parse_lambda(s)?;
            if csv {
                lines.push("index,factors".to_string());
            }
            for (i, ts) in enumerate_f_lambda(&lambda)?.iter().enumerate() {
                let factors: Vec<String> = ts.iter().map(|t| t.to_string()).collect();
                lines.push(if csv {
                    format!("{i},{}", factors.join(" "))
                } else {
                    json!({ "factors": factors }).to_string()
                });
            }
        }
        Kind::ChainsB => {
            let (p, q) = require_pair(s)?;
            let ctx = poset_ctx(p, q, s.max_n)?;
            if let Some(profile) = profile_of(s)? {
                if csv {
                    lines.push("index,connected,elements".to_string());
                }
                let mut i = 0usize;
                for chain in ctx.multichains(&profile)? {
                    let is_conn = ctx.multichain_is_connected(&chain);
                    if (s.connected && !is_conn) || (s.disconnected && is_conn) {
                        continue;
                    }
                    let shown: Vec<String> = chain.iter().map(|e| e.to_string()).collect();
                    lines.push(if csv {
                        format!("{i},{is_conn},{}", shown.join(" <= "))
                    } else {
                        json!({ "connected": is_conn, "elements": shown }).to_string()
                    });
                    i += 1;
                }
            } else {
                if csv {
                    lines.push("index,connected,elements".to_string());
                }
                let mut i = 0usize;
                for chain in ctx.maximal_chains()? {
                    let is_conn = chain.is_connected(&ctx);
                    if (s.connected && !is_conn) || (s.disconnected && is_conn) {
                        continue;
                    }
                    lines.push(if csv {
                        format!("{i},{is_conn},{chain}")
                    } else {
                        chain.to_json(&ctx).to_string()
                    });
                    i += 1;
                }
            }
        }
        Kind::ChainsMarked => {
            let (p, q) = require_pair(s)?;
            let poset = marked_poset(p, q, s.max_n)?;
            if let Some(profile) = profile_of(s)? {
                if csv {
                    lines.push("index,connected,elements".to_string());
                }
                let mut i = 0usize;
                for chain in poset.multichains(&profile)? {
                    let is_conn = poset.multichain_is_connected(&chain);
                    if (s.connected && !is_conn) || (s.disconnected && is_conn) {
                        continue;
                    }
                    let shown: Vec<String> = chain.iter().map(|e| e.to_string()).collect();
                    lines.push(if csv {
                        format!("{i},{is_conn},{}", shown.join(" <= "))
                    } else {
                        json!({ "connected": is_conn, "elements": shown }).to_string()
                    });
                    i += 1;
                }
            } else {
                if csv {
                    lines.push("index,connected,elements".to_string());
                }
                let mut i = 0usize;
                for chain in poset.maximal_chains() {
                    let is_conn = chain.is_connected(p);
                    if (s.connected && !is_conn) || (s.disconnected && is_conn) {
                        continue;
                    }
                    lines.push(if csv {
                        format!("{i},{is_conn},{chain}")
                    } else {
                        chain.to_json().to_string()
                    });
                    i += 1;
                }
            }
        }
        Kind::ElementsB => {
            let (p, q) = require_pair(s)?;
            let ctx = poset_ctx(p, q, s.max_n)?;
            let mut elements = ctx.elements()?;
            elements.sort_by_key(|e| (e.abs_length(), e.to_string()));
            if csv {
                lines.push("display,rank,connectivity,zero_cycles".to_string());
            }
            for e in &elements {
                let conn = e.connectivity(p);
                if (s.connected && conn == 0) || (s.disconnected && conn > 0) {
                    continue;
                }
                let rank = e.abs_length();
                let zc = e.zero_cycle_count();
                lines.push(if csv {
                    format!("{e},{rank},{conn},{zc}")
                } else {
                    json!({
                        "connectivity": conn,
                        "display": e.to_string(),
                        "rank": rank,
                        "zero_cycles": zc,
                    })
                    .to_string()
                });
            }
        }
        Kind::NcbChains => {
            let n = s
                .max_n
                .ok_or_else(|| usage("kind ncb-chains needs --max-n as the rank n"))?;
            let top = full_zero_cycle(n)?;
            if csv {
                lines.push("index,elements".to_string());
            }
            for (i, chain) in saturated_chains_to(&top, n)?.enumerate() {
                lines.push(if csv {
                    format!("{i},{chain}")
                } else {
                    json!({
                        "elements": chain
                            .elements()
                            .iter()
                            .map(|e| e.to_string())
                            .collect::<Vec<_>>(),
                    })
                    .to_string()
                });
            }
        }
    }
    Ok(lines)
}

fn cmd_enumerate(args: &EnumerateArgs) -> Result<()> {
    let lines = enumerate_lines(args)?;
    let header = if args.format == Format::Csv { 1 } else { 0 };
    let shown = match args.limit {
        Some(limit) => header + limit.min(lines.len().saturating_sub(header)),
        None => lines.len(),
    };
    for line in &lines[..shown] {
        println!("{line}");
    }
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> Result<bool> {
    if !SUITES.contains(&args.suite.as_str()) {
        return Err(usage(format!(
            "unknown suite {:?}; expected one of {}",
            args.suite,
            SUITES.join(", ")
        )));
    }
    let params = VerifyParams {
        max_n: args.max_n,
        pair: args.p.zip(args.q),
    };
    let reports = run_suite(&args.suite, &params)?;
    let mut failed = 0usize;
    for report in &reports {
        println!("{}", report.line());
        if !report.pass {
            failed += 1;
        }
    }
    println!(
        "suite {}: {} passed, {} failed",
        args.suite,
        reports.len() - failed,
        failed
    );
    Ok(failed == 0)
}

fn cmd_export(args: &ExportArgs) -> Result<()> {
    for path in export_goldens(&args.dir)? {
        println!("wrote {}", path.display());
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<bool> {
    match &cli.command {
        Command::Count(args) => cmd_count(args),
        Command::Enumerate(args) => cmd_enumerate(args).map(|()| true),
        Command::Verify(args) => cmd_verify(args),
        Command::ExportGoldens(args) => cmd_export(args).map(|()| true),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        // Verification output is order-stable, so the pool size never
        // changes what gets printed.
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
            .ok();
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
