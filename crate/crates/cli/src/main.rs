//! Command-line front end: graph6 in, JSON lines out.

use std::io::{BufRead, Write};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use dissoc_core::bounds;
use dissoc_core::constructions::{self, ConnectorSpec, GadgetKind};
use dissoc_core::enumerate::{enumerate_graphs, EnumOptions, DEFAULT_ENUM_CAP};
use dissoc_core::extremal::{emin_search, ex_bruteforce, rhomin_search, FamilySpec, SearchCaps};
use dissoc_core::graph::{Graph, VertexPartition, VertexSet};
use dissoc_core::graph6;
use dissoc_core::solvers;
use dissoc_core::spectral;
use dissoc_core::verify::{all_passed, Manifest, Session, Verdict, VerifyOptions, THEOREM_IDS};
use dissoc_core::Error;

const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Exact graph-family constructions, invariants, spectra, searches and
/// theorem verification.
#[derive(Parser)]
#[command(name = "dissoc", version, about)]
struct Cli {
    /// Worker threads for search/verify/enumerate (default: DISSOC_JOBS or
    /// all cores; other subcommands run single-threaded).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Zero out elapsed_ms fields for byte-stable output.
    #[arg(long, global = true)]
    stable_output: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named family member; emits graph6 plus landmark metadata.
    Construct(ConstructArgs),
    /// Dissociation number of each input graph.
    Tau(GraphInput),
    /// d-independence number of each input graph.
    Idnum {
        #[arg(long)]
        d: usize,
        #[command(flatten)]
        input: GraphInput,
    },
    /// Spectral radius, smallest eigenvalue and residual.
    Rho(GraphInput),
    /// Quotient matrix over a colon-separated vertex partition.
    Quotient {
        /// Example: "0,1:2,3:4,5,6,7"
        #[arg(long)]
        partition: String,
        /// Accept non-equitable partitions and emit the averaged quotient.
        #[arg(long)]
        lenient: bool,
        #[command(flatten)]
        input: GraphInput,
    },
    /// Forbidden-family freeness of each input graph.
    Free {
        /// Family: L5, CP6, K(1,2,2) or H(4,1).
        #[arg(long)]
        family: String,
        #[command(flatten)]
        input: GraphInput,
    },
    /// Minimum-internal-edge q-partition.
    Qgood {
        #[arg(long)]
        q: usize,
        /// Require all parts nonempty.
        #[arg(long)]
        nonempty: bool,
        #[command(flatten)]
        input: GraphInput,
    },
    /// Table of applicable closed-form bounds for each input graph.
    Bounds(GraphInput),
    /// Exhaustive extremal searches.
    Search(SearchArgs),
    /// Replay a registered theorem (or `all`).
    Verify {
        /// Theorem id such as T5.4, or `all`.
        id: String,
        /// Order cap for the exhaustive suites.
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Path to an expected-values manifest (defaults to the bundled one).
        #[arg(long)]
        manifest: Option<String>,
        /// Instance parameter forwarded to the check where meaningful.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Stream one canonical representative per isomorphism class.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        max_edges: Option<usize>,
        /// Raise the default order cap (9).
        #[arg(long)]
        cap: Option<usize>,
        /// Write graph6 lines here instead of stdout.
        #[arg(long)]
        out: Option<String>,
    },
}

#[derive(Args)]
struct GraphInput {
    /// A single graph6 string.
    #[arg(long)]
    graph6: Option<String>,
    /// File with one graph6 line per graph; stdin when absent.
    #[arg(long = "in")]
    infile: Option<String>,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(value_enum)]
    family: FamilyKind,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    /// Comma-separated part sizes for `multipartite`.
    #[arg(long)]
    sizes: Option<String>,
    /// Number of blocks for cp-path / cp-cycle.
    #[arg(long)]
    blocks: Option<usize>,
    /// Block order for cp-path / cp-cycle / gadget.
    #[arg(long)]
    m: Option<usize>,
    /// Use adjacent connector pairs instead of aligned ones.
    #[arg(long)]
    adjacent: bool,
    /// Gadget kind: fig7, fig8 or fig9.
    #[arg(long)]
    kind: Option<String>,
    /// Write the graph6 payload here as well.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyKind {
    Cocktail,
    OddCocktail,
    Multipartite,
    Turan,
    Minimizer,
    Hat,
    CpPath,
    CpCycle,
    Gadget,
    SpectralMax,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(value_enum)]
    mode: SearchKind,
    #[arg(long)]
    n: usize,
    /// Forbidden family for ex/excc.
    #[arg(long)]
    family: Option<String>,
    /// Dissociation number for emin/rhomin.
    #[arg(long)]
    tau: Option<usize>,
    /// Order cap for edge searches (default 9).
    #[arg(long, default_value_t = 9)]
    edge_cap: usize,
    /// Order cap for spectral searches (default 8).
    #[arg(long, default_value_t = 8)]
    spectral_cap: usize,
    /// Write witness graph6 lines here.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SearchKind {
    Ex,
    Excc,
    Emin,
    Rhomin,
}

fn main() {
    let cli = Cli::parse();
    let default_parallel = matches!(
        cli.command,
        Command::Search(_) | Command::Verify { .. } | Command::Enumerate { .. }
    );
    let jobs = cli
        .jobs
        .or_else(|| {
            std::env::var("DISSOC_JOBS")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(if default_parallel {
            std::thread::available_parallelism()
                .map(|v| v.get())
                .unwrap_or(1)
        } else {
            1
        });
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build_global()
        .ok();
    let stable = cli.stable_output;
    let code = match run(cli.command, stable) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    };
    std::process::exit(code);
}

/// One JSON report line on stdout.
fn emit(
    command: &str,
    params: Value,
    results: Value,
    started: Instant,
    stable: bool,
    manifest_version: &str,
) {
    let report = json!({
        "command": command,
        "params": params,
        "results": results,
        "elapsed_ms": if stable { 0 } else { started.elapsed().as_millis() },
        "tool_version": TOOL_VERSION,
        "manifest_version": manifest_version,
    });
    println!("{report}");
}

fn read_graphs(input: &GraphInput) -> Result<Vec<Graph>, Error> {
    if let Some(s) = &input.graph6 {
        return Ok(vec![graph6::decode(s)?]);
    }
    let text = if let Some(path) = &input.infile {
        std::fs::read_to_string(path)
            .map_err(|e| Error::BadGraph6(format!("cannot read {path}: {e}")))?
    } else {
        let mut buf = String::new();
        for line in std::io::stdin().lock().lines() {
            let line = line.map_err(|e| Error::BadGraph6(e.to_string()))?;
            buf.push_str(&line);
            buf.push('\n');
        }
        buf
    };
    graph6::decode_lines(&text)
}

fn parse_family(text: &str) -> Result<FamilySpec, Error> {
    let t = text.trim();
    let bad = || {
        Error::Infeasible(format!(
            "cannot parse family {t:?}; try L5, CP6, K(1,2,2) or H(4,1)"
        ))
    };
    let spec = if let Some(rest) = t.strip_prefix("CP").or_else(|| t.strip_prefix("cp")) {
        FamilySpec::Cocktail(rest.parse().map_err(|_| bad())?)
    } else if let Some(rest) = t.strip_prefix('L').or_else(|| t.strip_prefix('l')) {
        FamilySpec::OddCocktail(rest.parse().map_err(|_| bad())?)
    } else if let Some(rest) = t.strip_prefix('K').or_else(|| t.strip_prefix('k')) {
        let inner = rest.trim_start_matches('(').trim_end_matches(')');
        let sizes: Result<Vec<usize>, _> = inner.split(',').map(|p| p.trim().parse()).collect();
        FamilySpec::CompleteMultipartite(sizes.map_err(|_| bad())?)
    } else if let Some(rest) = t.strip_prefix('H').or_else(|| t.strip_prefix('h')) {
        let inner = rest.trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        if parts.len() != 2 {
            return Err(bad());
        }
        FamilySpec::HFamily {
            s: parts[0].parse().map_err(|_| bad())?,
            d: parts[1].parse().map_err(|_| bad())?,
        }
    } else {
        return Err(bad());
    };
    spec.validate()?;
    Ok(spec)
}

fn parse_partition(n: usize, text: &str) -> Result<VertexPartition, Error> {
    let mut parts = Vec::new();
    for chunk in text.split(':') {
        let mut set = VertexSet::EMPTY;
        for v in chunk.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let idx: usize = v
                .parse()
                .map_err(|_| Error::Infeasible(format!("bad vertex {v:?} in partition")))?;
            if idx >= n {
                return Err(Error::InvalidVertex(idx, n));
            }
            set.insert(idx);
        }
        parts.push(set);
    }
    VertexPartition::new(n, parts)
}

fn write_graph6(path: &Option<String>, graphs: &[Graph]) -> Result<(), Error> {
    if let Some(path) = path {
        let text = graph6::encode_lines(graphs)?;
        std::fs::File::create(path)
            .and_then(|mut f| f.write_all(text.as_bytes()))
            .map_err(|e| Error::Infeasible(format!("cannot write {path}: {e}")))?;
    }
    Ok(())
}

fn run(command: Command, stable: bool) -> Result<i32, Error> {
    match command {
        Command::Tau(input) => {
            for g in read_graphs(&input)? {
                let t = Instant::now();
                let w = solvers::dissociation_number(&g)?;
                emit(
                    "tau",
                    json!({ "graph6": graph6::encode(&g)? }),
                    json!({ "value": w.value, "witness": w.witness.to_vec() }),
                    t,
                    stable,
                    "-",
                );
            }
            Ok(0)
        }
        Command::Idnum { d, input } => {
            for g in read_graphs(&input)? {
                let t = Instant::now();
                let w = solvers::d_independence_number(&g, d)?;
                emit(
                    "idnum",
                    json!({ "graph6": graph6::encode(&g)?, "d": d }),
                    json!({ "value": w.value, "witness": w.witness.to_vec() }),
                    t,
                    stable,
                    "-",
                );
            }
            Ok(0)
        }
        Command::Rho(input) => {
            for g in read_graphs(&input)? {
                let t = Instant::now();
                let s = spectral::spectrum(&g);
                emit(
                    "rho",
                    json!({ "graph6": graph6::encode(&g)? }),
                    json!({ "rho": s.rho, "lambda_min": s.lambda_min, "residual": s.residual }),
                    t,
                    stable,
                    "-",
                );
            }
            Ok(0)
        }
        Command::Quotient {
            partition,
            lenient,
            input,
        } => {
            for g in read_graphs(&input)? {
                let t = Instant::now();
                let p = parse_partition(g.n(), &partition)?;
                let results = if lenient {
                    let avg = spectral::averaged_quotient(&g, &p)?;
                    json!({ "equitable": spectral::is_equitable(&g, &p), "averaged": avg })
                } else {
                    let q = spectral::quotient(&g, &p)?;
                    let poly = spectral::char_poly(&q)?;
                    json!({
                        "equitable": true,
                        "matrix": q.rows(),
                        "char_poly": poly.coefficients().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                        "rho": q.rho(),
                    })
                };
                emit(
                    "quotient",
                    json!({ "graph6": graph6::encode(&g)?, "partition": partition }),
                    results,
                    t,
                    stable,
                    "-",
                );
            }
            Ok(0)
        }
        Command::Free { family, input } => {
            let spec = parse_family(&family)?;
            for g in read_graphs(&input)? {
                let t = Instant::now();
                let free = spec.is_free(&g);
                let witness = spec
                    .multipartite_sizes()
                    .and_then(|sizes| solvers::find_complete_multipartite(&g, &sizes))
                    .map(|parts| parts.iter().map(|p| p.to_vec()).collect::<Vec<_>>());
                emit(
                    "free",
                    json!({ "graph6": graph6::encode(&g)?, "family": family }),
                    json!({ "free": free, "embedding": witness }),
                    t,
                    stable,
                    "-",
                );
            }
            Ok(0)
        }
        Command::Qgood { q, nonempty, input } => {
            for g in read_graphs(&input)? {
                let t = Instant::now();
                let r = solvers::q_good_partition(&g, q, nonempty)?;
                let parts: Vec<Vec<usize>> = r.witness.parts().iter().map(|p| p.to_vec()).collect();
                emit(
                    "qgood",
                    json!({ "graph6": graph6::encode(&g)?, "q": q, "nonempty": nonempty }),
                    json!({ "value": r.value, "witness": parts }),
                    t,
                    stable,
                    "-",
                );
            }
            Ok(0)
        }
        Command::Bounds(input) => {
            for g in read_graphs(&input)? {
                let t = Instant::now();
                let mut table = Vec::new();
                let h = bounds::hoffman_type_upper(&g);
                table.push(json!({
                    "name": h.name, "kind": "upper",
                    "value": if h.applicable { Some(h.value) } else { None },
                    "applicable": h.applicable, "note": h.hypothesis_note,
                }));
                match bounds::probabilistic_lower(&g) {
                    Ok(b) => table.push(json!({
                        "name": b.name, "kind": "lower", "value": b.value,
                        "applicable": b.applicable, "note": b.hypothesis_note,
                    })),
                    Err(e) => table.push(json!({
                        "name": "probabilistic_lower", "kind": "lower", "value": null,
                        "applicable": false, "note": e.to_string(),
                    })),
                }
                for d in [4usize, 5] {
                    let b = bounds::complement_free_upper(&g, d)?;
                    table.push(json!({
                        "name": b.name, "kind": "upper", "d": d,
                        "value": if b.applicable { Some(b.value) } else { None },
                        "applicable": b.applicable, "note": b.hypothesis_note,
                    }));
                }
                emit(
                    "bounds",
                    json!({ "graph6": graph6::encode(&g)? }),
                    Value::Array(table),
                    t,
                    stable,
                    "-",
                );
            }
            Ok(0)
        }
        Command::Construct(args) => {
            let t = Instant::now();
            let (graphs, meta) = construct(&args)?;
            write_graph6(&args.out, &graphs)?;
            let g6: Result<Vec<String>, Error> = graphs.iter().map(graph6::encode).collect();
            emit(
                "construct",
                json!({ "family": format!("{:?}", args.family) }),
                json!({ "graph6": g6?, "landmarks": meta }),
                t,
                stable,
                "-",
            );
            Ok(0)
        }
        Command::Search(args) => {
            let t = Instant::now();
            let caps = SearchCaps {
                edge_search: args.edge_cap,
                spectral_search: args.spectral_cap,
            };
            let result = match args.mode {
                SearchKind::Ex | SearchKind::Excc => {
                    let family = parse_family(
                        args.family
                            .as_deref()
                            .ok_or(Error::Infeasible("ex searches need --family".into()))?,
                    )?;
                    ex_bruteforce(
                        args.n,
                        &family,
                        matches!(args.mode, SearchKind::Excc),
                        &caps,
                    )?
                }
                SearchKind::Emin => emin_search(
                    args.n,
                    args.tau
                        .ok_or(Error::Infeasible("emin needs --tau".into()))?,
                    &caps,
                )?,
                SearchKind::Rhomin => rhomin_search(
                    args.n,
                    args.tau
                        .ok_or(Error::Infeasible("rhomin needs --tau".into()))?,
                    &caps,
                )?,
            };
            write_graph6(&args.out, &result.witnesses)?;
            let g6: Result<Vec<String>, Error> =
                result.witnesses.iter().map(graph6::encode).collect();
            emit(
                "search",
                json!({
                    "mode": format!("{:?}", result.mode), "n": args.n,
                    "family": args.family, "tau": args.tau,
                    "edge_cap": args.edge_cap, "spectral_cap": args.spectral_cap,
                }),
                json!({
                    "value": result.value,
                    "witness_classes": result.witnesses.len(),
                    "witnesses": g6?,
                    "tie_warning": result.tie_warning,
                }),
                t,
                stable,
                "-",
            );
            Ok(0)
        }
        Command::Verify {
            id,
            max_n,
            manifest,
            n,
        } => {
            let manifest = match manifest {
                Some(path) => Manifest::from_json(
                    &std::fs::read_to_string(&path)
                        .map_err(|e| Error::BadManifest(format!("cannot read {path}: {e}")))?,
                )?,
                None => Manifest::load_default(),
            };
            let version = manifest.manifest_version.clone();
            let session = Session::new(VerifyOptions { max_n, manifest });
            let params = n.map(|n| json!({ "n": n }));
            let reports = if id == "all" {
                session.verify_all()
            } else if THEOREM_IDS.contains(&id.as_str()) {
                vec![session.verify(&id, params.as_ref())]
            } else {
                return Err(Error::UnknownTheorem(id));
            };
            for r in &reports {
                let t = Instant::now();
                emit(
                    "verify",
                    json!({ "theorem": r.theorem, "max_n": max_n, "params": r.params }),
                    json!({
                        "verdict": r.verdict,
                        "expected": r.expected,
                        "observed": r.observed,
                        "detail": r.detail,
                        "check_ms": if stable { 0 } else { r.elapsed_ms },
                    }),
                    t,
                    stable,
                    &version,
                );
            }
            let pass = all_passed(&reports) && !reports.iter().any(|r| r.verdict == Verdict::Fail);
            Ok(if pass { 0 } else { 1 })
        }
        Command::Enumerate {
            n,
            connected,
            max_edges,
            cap,
            out,
        } => {
            let t = Instant::now();
            let opts = EnumOptions {
                connected_only: connected,
                max_edges,
                cap: cap.unwrap_or(DEFAULT_ENUM_CAP),
            };
            let graphs = enumerate_graphs(n, &opts)?;
            if let Some(path) = &out {
                write_graph6(&Some(path.clone()), &graphs)?;
                emit(
                    "enumerate",
                    json!({ "n": n, "connected": connected, "max_edges": max_edges }),
                    json!({ "classes": graphs.len(), "out": path }),
                    t,
                    stable,
                    "-",
                );
            } else {
                let mut stdout = std::io::stdout().lock();
                for g in &graphs {
                    writeln!(stdout, "{}", graph6::encode(g)?)
                        .map_err(|e| Error::Infeasible(e.to_string()))?;
                }
            }
            Ok(0)
        }
    }
}

fn construct(args: &ConstructArgs) -> Result<(Vec<Graph>, Value), Error> {
    let need = |name: &'static str, v: &Option<usize>| -> Result<usize, Error> {
        v.ok_or(Error::Infeasible(format!("construct needs --{name}")))
    };
    match args.family {
        FamilyKind::Cocktail => {
            let d = need("d", &args.d)?;
            Ok((
                vec![constructions::cocktail_party(d)?],
                json!({ "matching_pairs": d / 2 }),
            ))
        }
        FamilyKind::OddCocktail => {
            let d = need("d", &args.d)?;
            let g = constructions::odd_cocktail_party(d)?;
            Ok((vec![g], json!({ "join_vertex": d - 1 })))
        }
        FamilyKind::Multipartite => {
            let sizes: Vec<usize> = args
                .sizes
                .as_deref()
                .ok_or(Error::Infeasible("construct needs --sizes".into()))?
                .split(',')
                .map(|p| p.trim().parse())
                .collect::<Result<_, _>>()
                .map_err(|_| Error::Infeasible("bad --sizes list".into()))?;
            let g = constructions::complete_multipartite(&sizes)?;
            Ok((vec![g], json!({ "sizes": sizes })))
        }
        FamilyKind::Turan => {
            let (n, k) = (need("n", &args.n)?, need("k", &args.k)?);
            let members = constructions::turan_family(n, k)?;
            let meta: Vec<Value> = members
                .iter()
                .map(|m| {
                    json!({
                        "sizes": m.sizes,
                        "parts": m.parts.iter().map(|p| p.to_vec()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            Ok((
                members.into_iter().map(|m| m.graph).collect(),
                Value::Array(meta),
            ))
        }
        FamilyKind::Minimizer => {
            let (n, k) = (need("n", &args.n)?, need("k", &args.k)?);
            let members = constructions::minimizer_family(n, k)?;
            let count = members.len();
            Ok((members, json!({ "classes": count })))
        }
        FamilyKind::Hat => {
            let n = need("n", &args.n)?;
            let hat = constructions::hat_minimizer_4(n)?;
            let meta = json!({
                "bridge": hat.bridge,
                "non_neighbors": hat.non_neighbors,
                "v_delta": hat.v_delta,
                "blocks": [hat.blocks.0.to_vec(), hat.blocks.1.to_vec()],
            });
            Ok((vec![hat.graph], meta))
        }
        FamilyKind::CpPath | FamilyKind::CpCycle => {
            let (l, m) = (need("blocks", &args.blocks)?, need("m", &args.m)?);
            let spec = if args.adjacent {
                ConnectorSpec::adjacent(l)
            } else {
                ConnectorSpec::aligned(l)
            };
            let chain = if matches!(args.family, FamilyKind::CpPath) {
                constructions::cp_path(l, m, &spec)?
            } else {
                constructions::cp_cycle(l, m, &spec)?
            };
            let meta = json!({
                "connectors": chain.connectors,
                "blocks": chain.blocks.iter().map(|b| b.to_vec()).collect::<Vec<_>>(),
                "aligned": !args.adjacent,
            });
            Ok((vec![chain.graph], meta))
        }
        FamilyKind::Gadget => {
            let m = need("m", &args.m)?;
            let kind = match args.kind.as_deref() {
                Some("fig7") => GadgetKind::Fig7,
                Some("fig8") => GadgetKind::Fig8,
                Some("fig9") => GadgetKind::Fig9,
                other => {
                    return Err(Error::Infeasible(format!(
                        "unknown gadget kind {other:?}; use fig7, fig8 or fig9"
                    )))
                }
            };
            let gadget = constructions::connector_gadget(kind, m)?;
            let meta = json!({
                "partition": gadget
                    .partition_parts
                    .iter()
                    .map(|p| p.to_vec())
                    .collect::<Vec<_>>(),
            });
            Ok((vec![gadget.graph], meta))
        }
        FamilyKind::SpectralMax => {
            let (n, s, d) = (
                need("n", &args.n)?,
                need("s", &args.s)?,
                need("d", &args.d)?,
            );
            let g = constructions::spectral_maximizer(n, s, d)?;
            Ok((
                vec![g],
                json!({ "regular_block": (0..s).collect::<Vec<_>>() }),
            ))
        }
    }
}
