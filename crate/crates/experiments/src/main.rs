use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use kordered::constructions::{
    build_dense_bipartite_instance, build_sharpness_graph, build_sparse_cut_instance,
    random_graph_min_degree,
};
use kordered::hamilton::{SolverConfig, MAX_EXACT_CAP};
use kordered::io::{decode_graph, encode_graph6, parse_rational, parse_sequence};
use kordered::regularity::{is_epsilon_regular, RegularityConfig, RegularityMode};
use kordered::report::format_rational;
use kordered::{Error, Graph, VertexSet};
use kordered_experiments::{
    extremal_demo, ordered_report, s_cycle_report, sharpness_sweep, sparse_cut_degree,
    threshold_scan, ExperimentReport, ExtremalKind, KRule, RunOptions,
};
use serde_json::json;

const EXIT_VIOLATION: u8 = 2;
const EXIT_INFEASIBLE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "kordered",
    version,
    about = "k-ordered Hamiltonian cycles: experiments and checks"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Common {
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Largest n solved by the exact dynamic program.
    #[arg(long, global = true, default_value_t = kordered::hamilton::DEFAULT_EXACT_CAP)]
    exact_cap: usize,
    /// Include wall times (reports are then no longer reproducible).
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Sparse,
    Dense,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Sharpness,
    Sparse,
    Dense,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exact,
    Sampled,
}

#[derive(Subcommand)]
enum Cmd {
    /// Sharpness construction over a range of n.
    Sharpness {
        /// Single n; overrides --n-min/--n-max.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 8)]
        n_min: usize,
        #[arg(long, default_value_t = 16)]
        n_max: usize,
        /// Fixed k; by default every 2 <= k <= n/2.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Fraction of random graphs that are k-ordered, by minimum degree.
    Scan {
        #[arg(long, default_value_t = 12)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        k: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long)]
        delta_min: Option<usize>,
        #[arg(long)]
        delta_max: Option<usize>,
    },
    /// Decide k-orderedness of a graph.
    Ordered {
        #[arg(long)]
        k: usize,
        /// graph6 or edge-list file; `-` reads stdin.
        #[arg(long, default_value = "-")]
        graph: String,
    },
    /// Search for a Hamiltonian cycle meeting a sequence in order.
    Scycle {
        /// Vertices, e.g. `0,2,1,3`.
        #[arg(long)]
        seq: String,
        #[arg(long, default_value = "-")]
        graph: String,
    },
    /// Run the constructive solver on generated extremal instances.
    Extremal {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(long, default_value_t = 60)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        k: usize,
        /// Side imbalance for dense instances (default: n mod 2).
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, default_value_t = 1)]
        trials: usize,
    },
    /// Check epsilon-regularity of a vertex pair.
    Regular {
        #[arg(long, default_value = "-")]
        graph: String,
        /// Side A (default: first half of the vertices).
        #[arg(long)]
        a: Option<String>,
        /// Side B (default: the rest).
        #[arg(long)]
        b: Option<String>,
        #[arg(long, default_value = "3/10")]
        eps: String,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
    },
    /// Emit a generated graph as graph6, with an optional JSON sidecar.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Cross degree for sparse instances (default: the smallest feasible).
        #[arg(long)]
        cut: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        /// Minimum degree for random graphs.
        #[arg(long)]
        delta: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        sidecar: Option<PathBuf>,
    },
}

fn read_graph(src: &str) -> anyhow::Result<Graph> {
    let bytes = if src == "-" {
        let mut buf = Vec::new();
        io::stdin().read_to_end(&mut buf)?;
        buf
    } else {
        fs::read(src).with_context(|| format!("reading {src}"))?
    };
    Ok(decode_graph(&bytes)?)
}

fn vertex_set(n: usize, list: &str) -> anyhow::Result<VertexSet> {
    let vs = parse_sequence(list)?;
    if let Some(&v) = vs.iter().find(|&&v| v >= n) {
        bail!("vertex {v} out of range for n={n}");
    }
    Ok(VertexSet::from_indices(n, vs))
}

fn emit(report: &ExperimentReport, format: Format) -> anyhow::Result<()> {
    let text = match format {
        Format::Csv => report.to_csv(),
        Format::Json => report.to_json(),
    };
    io::stdout().write_all(text.as_bytes())?;
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    let c = &cli.common;
    if c.exact_cap > MAX_EXACT_CAP {
        return Err(Error::Infeasible(format!("--exact-cap above {MAX_EXACT_CAP}")).into());
    }
    let opts = RunOptions {
        solver: SolverConfig {
            exact_cap: c.exact_cap,
            seed: c.seed,
            ..SolverConfig::default()
        },
        timings: c.timings,
    };
    let report = match cli.cmd {
        Cmd::Sharpness { n, n_min, n_max, k } => {
            let range = n.map_or(n_min..=n_max, |n| n..=n);
            let rule = k.map_or(KRule::All, KRule::Fixed);
            sharpness_sweep(range, rule, &opts)?
        }
        Cmd::Scan {
            n,
            k,
            trials,
            delta_min,
            delta_max,
        } => {
            let deltas = match (delta_min, delta_max) {
                (None, None) => None,
                (lo, hi) => Some(lo.unwrap_or(1)..=hi.unwrap_or(n.saturating_sub(1))),
            };
            threshold_scan(n, k, trials, c.seed, deltas, &opts)?
        }
        Cmd::Ordered { k, graph } => ordered_report(&read_graph(&graph)?, k, &opts)?,
        Cmd::Scycle { seq, graph } => {
            s_cycle_report(&read_graph(&graph)?, &parse_sequence(&seq)?, &opts)?
        }
        Cmd::Extremal {
            kind,
            n,
            k,
            r,
            trials,
        } => {
            let kind = match kind {
                Kind::Sparse => ExtremalKind::Sparse,
                Kind::Dense => ExtremalKind::Dense,
            };
            extremal_demo(kind, n, k, r, trials, c.seed, &opts)?
        }
        Cmd::Regular {
            graph,
            a,
            b,
            eps,
            mode,
            samples,
        } => return regular(&read_graph(&graph)?, a, b, &eps, mode, samples, c),
        Cmd::Gen {
            kind,
            n,
            k,
            cut,
            r,
            delta,
            out,
            sidecar,
        } => return generate(kind, n, k, cut, r, delta, out, sidecar, c.seed),
    };
    emit(&report, c.format)?;
    Ok(if report.violations() > 0 {
        EXIT_VIOLATION
    } else {
        0
    })
}

fn regular(
    g: &Graph,
    a: Option<String>,
    b: Option<String>,
    eps: &str,
    mode: Mode,
    samples: usize,
    c: &Common,
) -> anyhow::Result<u8> {
    let n = g.n();
    let a = match a {
        Some(s) => vertex_set(n, &s)?,
        None => VertexSet::from_indices(n, 0..n / 2),
    };
    let b = match b {
        Some(s) => vertex_set(n, &s)?,
        None => a.complement(),
    };
    let eps = parse_rational(eps)?;
    let mode = match mode {
        Mode::Exact => RegularityMode::Exact,
        Mode::Sampled => RegularityMode::Sampled,
    };
    let cfg = RegularityConfig {
        samples,
        seed: c.seed,
        ..RegularityConfig::default()
    };
    let v = is_epsilon_regular(g, &a, &b, eps, mode, &cfg)?;
    let text = match c.format {
        Format::Json => {
            let doc = json!({
                "experiment": "regular",
                "seed": c.seed,
                "parameters": { "n": n, "a": a.to_vec(), "b": b.to_vec(), "eps": format_rational(&eps) },
                "verdict": v,
            });
            format!("{}\n", serde_json::to_string_pretty(&doc)?)
        }
        Format::Csv => {
            let (x, y, dev) =
                v.witness
                    .as_ref()
                    .map_or((String::new(), String::new(), String::new()), |w| {
                        (
                            kordered_experiments::report::join(&w.x),
                            kordered_experiments::report::join(&w.y),
                            format_rational(&w.deviation),
                        )
                    });
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["regular", "mode", "downgraded", "x", "y", "deviation"])?;
            let mode = if v.mode == RegularityMode::Exact {
                "exact"
            } else {
                "sampled"
            };
            w.write_record([
                &v.regular.to_string(),
                mode,
                &v.downgraded.to_string(),
                &x,
                &y,
                &dev,
            ])?;
            String::from_utf8(w.into_inner()?)?
        }
    };
    io::stdout().write_all(text.as_bytes())?;
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn generate(
    kind: GenKind,
    n: usize,
    k: usize,
    cut: Option<usize>,
    r: Option<usize>,
    delta: Option<usize>,
    out: Option<PathBuf>,
    sidecar: Option<PathBuf>,
    seed: u64,
) -> anyhow::Result<u8> {
    let (g, meta) = match kind {
        GenKind::Sharpness => {
            let s = build_sharpness_graph(n, k)?;
            let d = s.graph.density(&s.u, &s.w)?;
            let meta = json!({
                "generator": "sharpness",
                "parameters": { "n": n, "k": k },
                "witness": s.witness.vertices(),
                "sides": [s.u.to_vec(), s.w.to_vec()],
                "min_degree": s.graph.min_degree(),
                "density": format_rational(&d),
            });
            (s.graph, meta)
        }
        GenKind::Sparse | GenKind::Dense => {
            let (name, inst, extra) = if let GenKind::Sparse = kind {
                let cut = cut.unwrap_or_else(|| sparse_cut_degree(n, k));
                (
                    "sparse",
                    build_sparse_cut_instance(n, k, cut, seed)?,
                    json!({ "cut_degree": cut }),
                )
            } else {
                let r = r.unwrap_or(n % 2);
                (
                    "dense",
                    build_dense_bipartite_instance(n, k, r, seed)?,
                    json!({ "r": r }),
                )
            };
            let meta = json!({
                "generator": name,
                "parameters": { "n": n, "k": k, "seed": seed, "extra": extra },
                "witness": null,
                "sides": [inst.a.to_vec(), inst.b.to_vec()],
                "min_degree": inst.min_degree,
                "density": format_rational(&inst.density),
            });
            (inst.graph, meta)
        }
        GenKind::Random => {
            let Some(target) = delta else {
                bail!("gen random needs --delta");
            };
            let g = random_graph_min_degree(n, target, seed)?;
            let meta = json!({
                "generator": "random",
                "parameters": { "n": n, "delta": target, "seed": seed },
                "witness": null,
                "min_degree": g.min_degree(),
            });
            (g, meta)
        }
    };
    let line = format!("{}\n", encode_graph6(&g));
    match out {
        Some(p) => fs::write(&p, line).with_context(|| format!("writing {}", p.display()))?,
        None => io::stdout().write_all(line.as_bytes())?,
    }
    if let Some(p) = sidecar {
        let text = format!("{}\n", serde_json::to_string_pretty(&meta)?);
        fs::write(&p, text).with_context(|| format!("writing {}", p.display()))?;
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.common.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.common.threads)
            .build_global()
            .expect("global pool is built once");
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            let infeasible = matches!(
                e.downcast_ref::<Error>(),
                Some(Error::Infeasible(_) | Error::Precondition(_))
            );
            ExitCode::from(if infeasible { EXIT_INFEASIBLE } else { 1 })
        }
    }
}
