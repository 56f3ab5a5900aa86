// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! `graphlab`: generate, sample and analyse random graphs and random walks.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use graphlab::degree_stats::{
    fit_power_law, fit_power_law_auto, histogram, ModelDiagnostics, PaMoments, DEFAULT_MIN_TAIL,
};
use graphlab::io::{read_graph, to_edge_list_string, GraphFormat};
use graphlab::protein::{
    build_network, load_sequences, pa_compatibility_report, Alphabet, SequenceFormat,
};
use graphlab::random_gen::{generate_er, generate_pa_tracked, ErParams, PaParams};
use graphlab::subgraph::{sample_edges, sample_nodes_bernoulli, sample_nodes_uniform, Subgraph};
use graphlab::walks::{
    commute_time, effective_resistance, hitting_times, simulate_walks, verify_tetali,
};
use graphlab::{NodeId, WeightedGraph, JSON_SCHEMA};

#[derive(Parser)]
#[command(
    name = "graphlab",
    version,
    about = "Random graphs, degree statistics and random walks on electric networks"
)]
struct Cli {
    /// RNG seed for stochastic commands; a defaulted seed is printed to stderr.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Output file (stdout when absent).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Tolerance for identity checks.
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol: f64,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate random graphs.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Random subgraphs obtained by deleting edges or nodes.
    #[command(subcommand)]
    Sample(SampleCommand),
    /// Degree histograms and tail exponents.
    #[command(subcommand)]
    Analyze(AnalyzeCommand),
    /// Preferential attachment theory.
    #[command(subcommand)]
    Pa(PaCommand),
    /// Random walks on a weighted graph viewed as a Markov chain.
    #[command(subcommand)]
    Walk(WalkCommand),
    /// The graph as an electric network.
    #[command(subcommand)]
    Network(NetworkCommand),
    /// Identity checks with exit status 2 on failure.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Protein mutation networks.
    #[command(subcommand)]
    Bio(BioCommand),
}

#[derive(Subcommand)]
enum GenCommand {
    /// Erdős–Rényi graph G(n, p): each pair present independently with probability p.
    Er {
        #[arg(long)]
        nodes: usize,
        #[arg(long)]
        prob: f64,
    },
    /// Preferential attachment PA(n, m, delta): each newcomer sends m edges,
    /// choosing node i with probability proportional to degree(i) + delta.
    Pa {
        #[arg(long)]
        nodes: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        delta: f64,
        /// Drop the m self-loops on node 1 from the written graph.
        #[arg(long)]
        strip_self_loops: bool,
        /// Record the degree of these nodes at every time step.
        #[arg(long, value_delimiter = ',')]
        track_nodes: Vec<NodeId>,
        /// Degree history CSV (default: <out>.history.csv).
        #[arg(long)]
        history: Option<PathBuf>,
    },
}

#[derive(Args)]
struct InputArg {
    /// Edge-list file.
    #[arg(long = "in")]
    input: PathBuf,
}

#[derive(Args)]
struct MapArg {
    /// Kept-node mapping CSV new_id,old_id (default: <out>.map.csv).
    #[arg(long)]
    map: Option<PathBuf>,
}

#[derive(Subcommand)]
enum SampleCommand {
    /// Keep every edge independently with probability q.
    Edges {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        q: f64,
    },
    /// Keep a uniformly random set of exactly `keep` nodes and their induced edges.
    NodesUniform {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        keep: usize,
        #[command(flatten)]
        map: MapArg,
    },
    /// Keep every node independently with probability q, with induced edges.
    NodesBernoulli {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        q: f64,
        #[command(flatten)]
        map: MapArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum AnalyzeCommand {
    /// Degree histogram N_k with the empirical pmf and optional ccdf.
    Degrees {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        ccdf: bool,
        #[arg(long, value_enum, default_value = "csv")]
        format: OutFormat,
    },
    /// Tail exponent tau of N_k ~ k^(-tau) by discrete maximum likelihood.
    Powerlaw {
        #[command(flatten)]
        input: InputArg,
        /// Lower cutoff (default: smallest positive degree).
        #[arg(long, conflicts_with = "auto_kmin")]
        kmin: Option<u64>,
        /// Choose the cutoff minimising the Kolmogorov–Smirnov distance.
        #[arg(long)]
        auto_kmin: bool,
        /// Smallest tail size considered by --auto-kmin.
        #[arg(long, default_value_t = DEFAULT_MIN_TAIL)]
        min_tail: u64,
    },
    /// Mean degree parity and connectivity: could this graph come from PA?
    Diagnostics {
        #[command(flatten)]
        input: InputArg,
    },
}

#[derive(Subcommand)]
enum PaCommand {
    /// Limit degree law, tail exponent and finite-n degree moments.
    Theory {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        delta: f64,
        /// Tabulate the limit pmf p_k for k <= K.
        #[arg(long)]
        pmf_upto: Option<u64>,
        /// E(D^n(i)) for --node i at time --n.
        #[arg(long, requires_all = ["node", "n"])]
        expected: bool,
        /// Var(D^n(i)) for --node i at time --n.
        #[arg(long, requires_all = ["node", "n"])]
        variance: bool,
        #[arg(long)]
        node: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(Args)]
struct PairArgs {
    #[command(flatten)]
    input: InputArg,
    #[arg(long = "x")]
    x: NodeId,
    #[arg(long = "y")]
    y: NodeId,
}

#[derive(Subcommand)]
enum WalkCommand {
    /// Expected hitting times E^x(tau_y) for every start x.
    Hitting {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        target: NodeId,
        /// Shorthand for --format json.
        #[arg(long)]
        json: bool,
        #[arg(long, value_enum, default_value = "csv")]
        format: OutFormat,
    },
    /// Commute time E^x(tau_y) + E^y(tau_x), checked against R_xy times total weight.
    Commute {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Monte Carlo walks x -> y: hitting time and visit counts per node.
    Mc {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value_t = 100_000)]
        walks: u64,
    },
}

#[derive(Subcommand)]
enum NetworkCommand {
    /// Effective resistance with unit current from x to y (y grounded).
    Resistance {
        #[command(flatten)]
        pair: PairArgs,
        /// Write node potentials as CSV z,potential.
        #[arg(long)]
        potentials: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Conductance-weighted average of E^x(tau_y) over directed edges equals n - 1.
    Tetali {
        #[command(flatten)]
        input: InputArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SeqFormat {
    Fasta,
    Plain,
}

#[derive(Args)]
struct SeqArgs {
    #[arg(long)]
    seqs: PathBuf,
    #[arg(long, value_enum, default_value = "fasta")]
    format: SeqFormat,
    /// Extra residue letters accepted besides the 20 amino acids.
    #[arg(long, default_value = "")]
    extra_residues: String,
}

#[derive(Subcommand)]
enum BioCommand {
    /// Mutation network: sequences linked when they differ at exactly one position.
    Build {
        #[command(flatten)]
        seqs: SeqArgs,
        /// Node labels CSV node,id.
        #[arg(long)]
        labels: Option<PathBuf>,
    },
    /// Whether the mutation network is compatible with preferential attachment.
    Report {
        #[command(flatten)]
        seqs: SeqArgs,
    },
}

struct Ctx {
    seed: Option<u64>,
    out: Option<PathBuf>,
    tol: f64,
}

impl Ctx {
    fn seed(&self) -> u64 {
        self.seed.unwrap_or_else(|| {
            let nanos = SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map_or(0, |d| d.as_nanos());
            let seed = (nanos as u64) ^ ((nanos >> 64) as u64) ^ u64::from(std::process::id());
            eprintln!("seed = {seed}");
            seed
        })
    }

    fn emit(&self, text: &str) -> Result<()> {
        write_text(self.out.as_deref(), text)
    }

    fn emit_json(&self, value: Value) -> Result<()> {
        self.emit(&json_text(value))
    }

    /// Sidecar path: explicit, else `<out><suffix>`.
    fn sidecar(&self, explicit: Option<PathBuf>, suffix: &str, what: &str) -> Result<PathBuf> {
        if let Some(p) = explicit {
            return Ok(p);
        }
        match &self.out {
            Some(out) => {
                let mut s = out.clone().into_os_string();
                s.push(suffix);
                Ok(s.into())
            }
            None => bail!("{what} needs --out or an explicit path"),
        }
    }
}

fn write_text(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn json_text(value: Value) -> String {
    let mut doc = serde_json::Map::new();
    doc.insert("schema".into(), JSON_SCHEMA.into());
    match value {
        Value::Object(fields) => doc.extend(fields),
        other => {
            doc.insert("result".into(), other);
        }
    }
    let mut s = serde_json::to_string_pretty(&Value::Object(doc)).expect("JSON values serialize");
    s.push('\n');
    s
}

fn load(input: &InputArg) -> Result<WeightedGraph> {
    read_graph(&input.input, GraphFormat::EdgeList)
        .with_context(|| format!("cannot read graph {}", input.input.display()))
}

fn mapping_csv(sub: &Subgraph) -> String {
    let mut s = String::from("new_id,old_id\n");
    for (i, old) in sub.kept.iter().enumerate() {
        s.push_str(&format!("{},{old}\n", i + 1));
    }
    s
}

fn emit_subgraph(ctx: &Ctx, sub: &Subgraph, map: MapArg) -> Result<()> {
    let map_path = ctx.sidecar(map.map, ".map.csv", "the kept-node mapping")?;
    ctx.emit(&to_edge_list_string(&sub.graph))?;
    write_text(Some(&map_path), &mapping_csv(sub))
}

fn run_gen(ctx: &Ctx, cmd: GenCommand) -> Result<()> {
    match cmd {
        GenCommand::Er { nodes, prob } => {
            let g = generate_er(&ErParams {
                n: nodes,
                p: prob,
                seed: ctx.seed(),
            })?;
            ctx.emit(&to_edge_list_string(&g))
        }
        GenCommand::Pa {
            nodes,
            m,
            delta,
            strip_self_loops,
            track_nodes,
            history,
        } => {
            let history = if track_nodes.is_empty() {
                None
            } else {
                Some(ctx.sidecar(history, ".history.csv", "the degree history")?)
            };
            let params = PaParams {
                n: nodes,
                m,
                delta,
                seed: ctx.seed(),
            };
            let trace = generate_pa_tracked(&params, &track_nodes)?;
            let g = if strip_self_loops {
                trace.graph.strip_self_loops()
            } else {
                trace.graph
            };
            ctx.emit(&to_edge_list_string(&g))?;
            if let Some(path) = history {
                let mut s = String::from("t,i,degree\n");
                for r in &trace.degree_history {
                    s.push_str(&format!("{},{},{}\n", r.t, r.node, r.degree));
                }
                write_text(Some(&path), &s)?;
            }
            Ok(())
        }
    }
}

fn run_sample(ctx: &Ctx, cmd: SampleCommand) -> Result<()> {
    match cmd {
        SampleCommand::Edges { input, q } => {
            let g = load(&input)?;
            ctx.emit(&to_edge_list_string(&sample_edges(&g, q, ctx.seed())?))
        }
        SampleCommand::NodesUniform { input, keep, map } => {
            let g = load(&input)?;
            emit_subgraph(ctx, &sample_nodes_uniform(&g, keep, ctx.seed())?, map)
        }
        SampleCommand::NodesBernoulli { input, q, map } => {
            let g = load(&input)?;
            emit_subgraph(ctx, &sample_nodes_bernoulli(&g, q, ctx.seed())?, map)
        }
    }
}

fn run_analyze(ctx: &Ctx, cmd: AnalyzeCommand) -> Result<()> {
    match cmd {
        AnalyzeCommand::Degrees {
            input,
            ccdf,
            format,
        } => {
            let h = histogram(&load(&input)?)?;
            match format {
                OutFormat::Csv => {
                    let mut s = String::from(if ccdf {
                        "k,N_k,pmf,ccdf\n"
                    } else {
                        "k,N_k,pmf\n"
                    });
                    for (k, count, pmf, tail) in h.rows() {
                        if ccdf {
                            s.push_str(&format!("{k},{count},{pmf},{tail}\n"));
                        } else {
                            s.push_str(&format!("{k},{count},{pmf}\n"));
                        }
                    }
                    ctx.emit(&s)
                }
                OutFormat::Json => {
                    let rows: Vec<Value> = h
                        .rows()
                        .into_iter()
                        .map(|(k, count, pmf, tail)| json!({"k": k, "N_k": count, "pmf": pmf, "ccdf": tail}))
                        .collect();
                    ctx.emit_json(json!({"n": h.n(), "mean": h.mean(), "variance": h.variance(), "rows": rows}))
                }
            }
        }
        AnalyzeCommand::Powerlaw {
            input,
            kmin,
            auto_kmin,
            min_tail,
        } => {
            let h = histogram(&load(&input)?)?;
            let fit = if auto_kmin {
                fit_power_law_auto(&h, min_tail)?
            } else {
                let k = kmin.or_else(|| h.min_positive_degree()).unwrap_or(1);
                fit_power_law(&h, k)?
            };
            ctx.emit_json(serde_json::to_value(fit)?)
        }
        AnalyzeCommand::Diagnostics { input } => {
            let g = load(&input)?;
            ctx.emit_json(serde_json::to_value(ModelDiagnostics::of(&g))?)
        }
    }
}

fn run_pa(ctx: &Ctx, cmd: PaCommand) -> Result<()> {
    let PaCommand::Theory {
        m,
        delta,
        pmf_upto,
        expected,
        variance,
        node,
        n,
    } = cmd;
    let pm = PaMoments::new(m, delta)?;
    let mut doc = serde_json::Map::new();
    doc.insert("m".into(), m.into());
    doc.insert("delta".into(), delta.into());
    doc.insert(
        "tau".into(),
        graphlab::degree_stats::pa_tau(m, delta)?.into(),
    );
    doc.insert("c".into(), graphlab::degree_stats::pa_c(m, delta)?.into());
    if let Some(top) = pmf_upto {
        let rows = (m as u64..=top.max(m as u64))
            .map(|k| Ok(json!({"k": k, "p": graphlab::degree_stats::pa_limit_pmf(m, delta, k)?})))
            .collect::<Result<Vec<_>>>()?;
        doc.insert("pmf".into(), rows.into());
    }
    if let (Some(i), Some(n)) = (node, n) {
        doc.insert("node".into(), i.into());
        doc.insert("n".into(), n.into());
        if expected {
            doc.insert("expected_degree".into(), pm.expected_degree(i, n)?.into());
        }
        if variance {
            doc.insert("variance".into(), pm.variance(i, n)?.into());
            doc.insert(
                "variance_recursive".into(),
                pm.variance_by_recursion(i, n)?.into(),
            );
        }
    }
    ctx.emit_json(Value::Object(doc))
}

fn run_walk(ctx: &Ctx, cmd: WalkCommand) -> Result<()> {
    match cmd {
        WalkCommand::Hitting {
            input,
            target,
            json,
            format,
        } => {
            let sol = hitting_times(&load(&input)?, target)?;
            if json || matches!(format, OutFormat::Json) {
                ctx.emit_json(serde_json::to_value(&sol)?)
            } else {
                let mut s = String::from("x,hitting_time\n");
                for (i, t) in sol.times.iter().enumerate() {
                    s.push_str(&format!("{},{t}\n", i + 1));
                }
                ctx.emit(&s)
            }
        }
        WalkCommand::Commute { pair } => {
            let g = load(&pair.input)?;
            let ct = commute_time(&g, pair.x, pair.y)?;
            let r_eff = effective_resistance(&g, pair.x, pair.y)?.r_eff;
            let total = g.node_weights().total();
            ctx.emit_json(json!({
                "x": pair.x,
                "y": pair.y,
                "commute_time": ct,
                "r_eff": r_eff,
                "total_weight": total,
                "rel_err": (ct - r_eff * total).abs() / (r_eff * total),
            }))
        }
        WalkCommand::Mc { pair, walks } => {
            let g = load(&pair.input)?;
            let stats = simulate_walks(&g, pair.x, pair.y, walks, ctx.seed())?;
            ctx.emit_json(serde_json::to_value(&stats)?)
        }
    }
}

fn run_network(ctx: &Ctx, cmd: NetworkCommand) -> Result<()> {
    let NetworkCommand::Resistance { pair, potentials } = cmd;
    let sol = effective_resistance(&load(&pair.input)?, pair.x, pair.y)?;
    if let Some(path) = potentials {
        let mut s = String::from("z,potential\n");
        for (i, v) in sol.potentials.iter().enumerate() {
            s.push_str(&format!("{},{v}\n", i + 1));
        }
        write_text(Some(&path), &s)?;
    }
    ctx.emit_json(json!({
        "source": sol.source,
        "sink": sol.sink,
        "r_eff": sol.r_eff,
        "harmonic_residual": sol.harmonic_residual,
        "conservation_residual": sol.conservation_residual,
    }))
}

/// Returns whether the identity held.
fn run_verify(ctx: &Ctx, cmd: VerifyCommand) -> Result<bool> {
    let VerifyCommand::Tetali { input } = cmd;
    let report = verify_tetali(&load(&input)?)?;
    let pass = report.within(ctx.tol);
    let mut value = serde_json::to_value(report)?;
    value["tol"] = ctx.tol.into();
    value["pass"] = pass.into();
    ctx.emit_json(value)?;
    Ok(pass)
}

fn read_seqs(args: &SeqArgs) -> Result<graphlab::protein::MutationNetwork> {
    let format = match args.format {
        SeqFormat::Fasta => SequenceFormat::Fasta,
        SeqFormat::Plain => SequenceFormat::Plain,
    };
    let recs = load_sequences(
        &args.seqs,
        format,
        &Alphabet::with_extras(&args.extra_residues),
    )
    .with_context(|| format!("cannot load sequences {}", args.seqs.display()))?;
    Ok(build_network(&recs)?)
}

fn run_bio(ctx: &Ctx, cmd: BioCommand) -> Result<()> {
    match cmd {
        BioCommand::Build { seqs, labels } => {
            let net = read_seqs(&seqs)?;
            ctx.emit(&to_edge_list_string(&net.graph))?;
            if let Some(path) = labels {
                let mut s = String::from("node,id\n");
                for (i, id) in net.labels.iter().enumerate() {
                    s.push_str(&format!("{},{id}\n", i + 1));
                }
                write_text(Some(&path), &s)?;
            }
            Ok(())
        }
        BioCommand::Report { seqs } => {
            let net = read_seqs(&seqs)?;
            ctx.emit_json(serde_json::to_value(pa_compatibility_report(&net))?)
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()?;
    }
    let ctx = Ctx {
        seed: cli.seed,
        out: cli.out,
        tol: cli.tol,
    };
    match cli.command {
        Command::Gen(c) => run_gen(&ctx, c)?,
        Command::Sample(c) => run_sample(&ctx, c)?,
        Command::Analyze(c) => run_analyze(&ctx, c)?,
        Command::Pa(c) => run_pa(&ctx, c)?,
        Command::Walk(c) => run_walk(&ctx, c)?,
        Command::Network(c) => run_network(&ctx, c)?,
        Command::Verify(c) => return run_verify(&ctx, c),
        Command::Bio(c) => run_bio(&ctx, c)?,
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
