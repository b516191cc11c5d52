use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use cubecore::cores::{
    bad_vertices, classify_core, core_circuits, find_bad_paths, is_petersen_core,
    odd_complement_sum, CoreDecomposition,
};
use cubecore::families::{
    bipartite_inflate, double_flower_j7, flower_snark, goldberg_snark, petersen,
    random_bridgeless_cubic, random_simple_cubic, ring_family, WiringPlan,
};
use cubecore::graphcore::{
    junction_2, junction_3, parse_any, parse_pole, write_edge_list, write_graph6, Graph, Pairing,
};
use cubecore::harness::{
    corpus_run, dot_export, read_corpus, write_csv, write_jsonl, CorpusItem, RecordResult,
    RunConfig, Task, VerifyOptions,
};
use cubecore::invariants::{mu, ReportOptions, SearchOptions, DEFAULT_NODE_BUDGET};

#[derive(Parser)]
#[command(name = "cubecore", version, about = "1-factor cover invariants and cores of cubic graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Node budget per mu_k search
    #[arg(long, global = true, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
    /// Worker threads across graphs
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
}

#[derive(Subcommand)]
enum Cmd {
    /// Invariant reports, one JSON line per graph
    Invariants {
        /// graph6 lines or edge-list records; stdin when absent
        input: Option<PathBuf>,
        /// Which mu_k to compute, e.g. 2,3,4
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        mu: Vec<usize>,
        #[arg(long)]
        no_resistance: bool,
    },
    /// Core of the optimal mu_3 triple for each graph
    Core { input: Option<PathBuf> },
    /// Invariants plus theorem verdicts T1..T8
    Verify {
        input: Option<PathBuf>,
        #[arg(long)]
        mu4: bool,
    },
    /// Generate a graph
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// 2-junction of two graphs at one edge each
    Junction2 {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        e1: usize,
        #[arg(long)]
        e2: usize,
        #[arg(long)]
        crossed: bool,
    },
    /// 3-junction of two graphs at one vertex each
    Junction3 {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        u1: usize,
        #[arg(long)]
        u2: usize,
    },
    /// Graphviz output, optionally styled by the mu_3 core
    Dot {
        input: Option<PathBuf>,
        #[arg(long)]
        core: bool,
    },
}

#[derive(Subcommand)]
enum Family {
    Petersen,
    Flower { n: usize },
    Goldberg { n: usize },
    Random {
        #[arg(short, long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Reject parallel edges too
        #[arg(long)]
        simple: bool,
    },
    Ring {
        #[arg(long)]
        pole: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        plan: PathBuf,
    },
    #[command(name = "double-j7")]
    DoubleJ7,
    Inflate {
        #[arg(long)]
        host: PathBuf,
        #[arg(long)]
        with: PathBuf,
        #[arg(long, value_delimiter = ',')]
        at: Vec<usize>,
    },
}

type CliResult<T> = Result<T, String>;

fn read_input(path: &Option<PathBuf>) -> CliResult<(String, String)> {
    match path {
        Some(p) => fs::read_to_string(p)
            .map(|t| (t, p.display().to_string()))
            .map_err(|e| format!("{}: {e}", p.display())),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(|e| e.to_string())?;
            Ok((s, "stdin".into()))
        }
    }
}

fn read_graph(path: &PathBuf) -> CliResult<Graph> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_any(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn graph_text(g: &Graph) -> String {
    match write_graph6(g) {
        Ok(s) => s + "\n",
        Err(_) => write_edge_list(g),
    }
}

fn sink(out: &Option<PathBuf>) -> CliResult<Box<dyn Write>> {
    match out {
        Some(p) => fs::File::create(p)
            .map(|f| Box::new(io::BufWriter::new(f)) as Box<dyn Write>)
            .map_err(|e| format!("{}: {e}", p.display())),
        None => Ok(Box::new(io::BufWriter::new(io::stdout()))),
    }
}

fn search(c: &Common) -> SearchOptions {
    SearchOptions {
        node_budget: c.budget,
        ..SearchOptions::default()
    }
}

fn run(cli: Cli) -> CliResult<u8> {
    let c = &cli.common;
    let mut out = sink(&c.out)?;
    let io_err = |e: io::Error| e.to_string();
    match cli.cmd {
        Cmd::Invariants { input, mu, no_resistance } => {
            let (text, src) = read_input(&input)?;
            let task = Task::Invariants(ReportOptions {
                mu,
                resistance: !no_resistance,
                search: search(c),
            });
            return batch(&read_corpus(&text, &src), task, c, &mut out);
        }
        Cmd::Verify { input, mu4 } => {
            let (text, src) = read_input(&input)?;
            let task = Task::Verify(VerifyOptions {
                search: search(c),
                mu4,
                ..VerifyOptions::default()
            });
            return batch(&read_corpus(&text, &src), task, c, &mut out);
        }
        Cmd::Core { input } => {
            let (text, src) = read_input(&input)?;
            for item in read_corpus(&text, &src) {
                let g = item.graph.map_err(|e| format!("{}: {e}", item.id))?;
                let r = mu(&g, 3, search(c)).map_err(|e| format!("{}: {e}", item.id))?;
                let w = r.witness;
                let d = CoreDecomposition::new(&g, [w[0].clone(), w[1].clone(), w[2].clone()])
                    .map_err(|e| e.to_string())?;
                if c.format == Format::Dot {
                    write!(out, "{}", dot_export(&g, Some(&d))).map_err(io_err)?;
                    continue;
                }
                let (odd, odd_sum) = odd_complement_sum(&d);
                let rec = json!({
                    "id": item.id,
                    "mu3": r.value,
                    "decomposition": d,
                    "class": classify_core(&d),
                    "circuits": core_circuits(&d),
                    "petersen_core": is_petersen_core(&d).is_ok(),
                    "petersen_violation": is_petersen_core(&d).err(),
                    "odd_complements": odd,
                    "odd_complement_sum": odd_sum,
                    "bad_vertices": bad_vertices(&d),
                    "bad_paths": find_bad_paths(&d),
                });
                writeln!(out, "{rec}").map_err(io_err)?;
            }
        }
        Cmd::Gen { family } => {
            let graphs: Vec<Graph> = match family {
                Family::Petersen => vec![petersen()],
                Family::Flower { n } => vec![flower_snark(n).map_err(|e| e.to_string())?],
                Family::Goldberg { n } => vec![goldberg_snark(n).map_err(|e| e.to_string())?],
                Family::Random { n, count, simple } => (0..count as u64)
                    .map(|i| {
                        let seed = c.seed.wrapping_add(i);
                        if simple {
                            random_simple_cubic(n, seed)
                        } else {
                            random_bridgeless_cubic(n, seed)
                        }
                    })
                    .collect::<Result<_, _>>()
                    .map_err(|e| e.to_string())?,
                Family::Ring { pole, k, plan } => {
                    let ptext = fs::read_to_string(&pole).map_err(|e| e.to_string())?;
                    let p = parse_pole(&ptext).map_err(|e| e.to_string())?;
                    let wtext = fs::read_to_string(&plan).map_err(|e| e.to_string())?;
                    let w: WiringPlan = wtext.parse().map_err(|e: cubecore::Error| e.to_string())?;
                    vec![ring_family(&p, k, &w).map_err(|e| e.to_string())?]
                }
                Family::DoubleJ7 => vec![double_flower_j7().map_err(|e| e.to_string())?.graph],
                Family::Inflate { host, with, at } => {
                    let h = read_graph(&host)?;
                    let t = read_graph(&with)?;
                    vec![bipartite_inflate(&h, &t, &at).map_err(|e| e.to_string())?]
                }
            };
            for g in graphs {
                write!(out, "{}", graph_text(&g)).map_err(io_err)?;
            }
        }
        Cmd::Junction2 { a, b, e1, e2, crossed } => {
            let pairing = if crossed { Pairing::Crossed } else { Pairing::Straight };
            let j = junction_2(&read_graph(&a)?, e1, &read_graph(&b)?, e2, pairing)
                .map_err(|e| e.to_string())?;
            write!(out, "{}", graph_text(&j.graph)).map_err(io_err)?;
        }
        Cmd::Junction3 { a, b, u1, u2 } => {
            let j = junction_3(&read_graph(&a)?, u1, None, &read_graph(&b)?, u2, None)
                .map_err(|e| e.to_string())?;
            write!(out, "{}", graph_text(&j.graph)).map_err(io_err)?;
        }
        Cmd::Dot { input, core } => {
            let (text, src) = read_input(&input)?;
            for item in read_corpus(&text, &src) {
                let g = item.graph.map_err(|e| format!("{}: {e}", item.id))?;
                let d = if core {
                    let w = mu(&g, 3, search(c)).map_err(|e| e.to_string())?.witness;
                    Some(
                        CoreDecomposition::new(&g, [w[0].clone(), w[1].clone(), w[2].clone()])
                            .map_err(|e| e.to_string())?,
                    )
                } else {
                    None
                };
                write!(out, "{}", dot_export(&g, d.as_ref())).map_err(io_err)?;
            }
        }
    }
    out.flush().map_err(io_err)?;
    Ok(0)
}

/// Exit 2 on any false verdict, 1 if a graph failed, 0 otherwise.
fn batch(items: &[CorpusItem], task: Task, c: &Common, out: &mut Box<dyn Write>) -> CliResult<u8> {
    let cfg = RunConfig { task, jobs: c.jobs };
    let (records, summary) = corpus_run(items, &cfg).map_err(|e| e.to_string())?;
    match c.format {
        Format::Csv => write_csv(out, &records),
        _ => write_jsonl(out, &records, &summary),
    }
    .map_err(|e| e.to_string())?;
    out.flush().map_err(|e| e.to_string())?;
    for r in &records {
        if let RecordResult::Err { error } = &r.result {
            eprintln!("{}: {error}", r.id);
        }
    }
    Ok(if summary.any_false() {
        2
    } else if summary.errors > 0 {
        1
    } else {
        0
    })
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
