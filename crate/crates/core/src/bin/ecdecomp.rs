//! Command-line surface: generation, analysis, structure extraction,
//! partitioning, certificate verification, reductions, cycle packing and
//! seeded experiments.
//!
//! Exit codes: 0 success/found; 2 honest negative (absent or budget
//! exhausted); 3 invalid input; 4 internal invariant violation.

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ecdecomp::generators::{
    g_bowtie_graph, pc_cycle_graph, rainbow_complete, random_ecg, random_ecg_min_cdeg,
    random_oriented, random_tournament,
};
use ecdecomp::graph::{EdgeColoredGraph, PartitionTargets};
use ecdecomp::io::{
    certificate_document, parse_certificate, parse_dg, parse_ecg, verify_certificate,
    write_certificate, write_dg, write_ecg, IoError,
};
use ecdecomp::partition::{
    exact_partition_search, partition_2k_pipeline, partition_bipartite_a2, partition_complete_a2,
    random_partition, p_s_bound, p_s_exact, GoodVector, PartitionCertificate, PartitionError,
};
use ecdecomp::reductions::{
    bermond_thomassen_probe, conjecture_probe, digraph_to_ecg, ecg_to_complete,
    find_k_disjoint_dicycles, ProbeMode,
};
use ecdecomp::structures::{
    extract_structure_via_yeo, find_k_disjoint_structures, find_pc_cycle, find_rainbow_triangle,
    find_yeo_vertex, has_pc_cycle, minimalize_two_colored, MinimalStructure, StructureError,
};
use ecdecomp::Search;

const EXIT_NEGATIVE: u8 = 2;
const EXIT_INVALID: u8 = 3;
const EXIT_INTERNAL: u8 = 4;

struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn invalid(msg: impl Into<String>) -> Self {
        Failure { code: EXIT_INVALID, msg: msg.into() }
    }

    fn negative(msg: impl Into<String>) -> Self {
        Failure { code: EXIT_NEGATIVE, msg: msg.into() }
    }

    fn internal(msg: impl Into<String>) -> Self {
        Failure { code: EXIT_INTERNAL, msg: msg.into() }
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        match &e {
            IoError::Partition(pe) => Failure::from(pe.clone()),
            _ => Failure::invalid(e.to_string()),
        }
    }
}

impl From<PartitionError> for Failure {
    fn from(e: PartitionError) -> Self {
        match e {
            PartitionError::StuckInvariantViolation(_) | PartitionError::InvariantViolation(_) => {
                Failure::internal(e.to_string())
            }
            other => Failure::invalid(other.to_string()),
        }
    }
}

impl From<StructureError> for Failure {
    fn from(e: StructureError) -> Self {
        match e {
            StructureError::ClassificationFailure(_) => Failure::internal(e.to_string()),
            StructureError::EmptyCore => Failure::negative(e.to_string()),
            other => Failure::invalid(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::invalid(e.to_string())
    }
}

#[derive(Parser)]
#[command(name = "ecdecomp", version, about = "Edge-colored graph decomposition toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate an instance: rainbow-complete, pc-cycle, g-bowtie, random,
    /// random-min-cdeg, tournament, oriented
    Generate {
        kind: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        ell: Option<usize>,
        #[arg(long)]
        colors: Option<usize>,
        #[arg(long = "min-cdeg")]
        min_cdeg: Option<usize>,
        #[arg(long = "min-outdeg")]
        min_outdeg: Option<usize>,
        #[arg(long = "edge-prob", default_value_t = 0.5)]
        edge_prob: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Degree and structure summary of an .ecg file
    Analyze { file: PathBuf },
    /// Structure extraction: minimalize, pc-cycle, yeo, gbowtie, disjoint
    Structure {
        file: PathBuf,
        #[arg(long, default_value = "minimalize")]
        mode: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Feasible partition search; emits a JSON certificate
    Partition {
        file: PathBuf,
        /// comma-separated per-part color-degree targets, e.g. 2,2
        #[arg(long)]
        targets: String,
        /// pipeline, exact, random, complete-a2, bipartite-a2
        #[arg(long, default_value = "pipeline")]
        method: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long = "max-tries", default_value_t = 100)]
        max_tries: usize,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        /// comma-separated X-side vertices (bipartite-a2 only)
        #[arg(long = "x-side")]
        x_side: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Re-check a certificate against its instance
    Verify { cert: PathBuf, file: PathBuf },
    /// Reductions: digraph-to-ecg (on .dg) or complete (on .ecg)
    Reduce {
        direction: String,
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Search k vertex-disjoint directed cycles in a .dg file
    Dicycles {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
    },
    /// Seeded experiments: conjecture, bermond-thomassen, ps-bound
    Experiment {
        kind: String,
        /// comma-separated key=value pairs, e.g. a=2,b=2,n=8,delta-c=5
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        #[arg(long = "dump-dir")]
        dump_dir: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("ecdecomp: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn emit(output: &Option<PathBuf>, content: &str) -> Result<(), Failure> {
    match output {
        Some(path) => std::fs::write(path, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

fn load_ecg(path: &PathBuf) -> Result<EdgeColoredGraph, Failure> {
    let text = std::fs::read_to_string(path)?;
    Ok(parse_ecg(&text)?)
}

fn need(v: Option<usize>, flag: &str) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure::invalid(format!("missing required flag --{flag}")))
}

fn parse_list(s: &str, what: &str) -> Result<Vec<usize>, Failure> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| Failure::invalid(format!("bad {what} list {s:?}")))
}

fn params_map(s: &str) -> Result<BTreeMap<String, String>, Failure> {
    let mut map = BTreeMap::new();
    for pair in s.split(',').filter(|p| !p.trim().is_empty()) {
        let (k, v) = pair
            .split_once('=')
            .ok_or_else(|| Failure::invalid(format!("bad param {pair:?}, expected key=value")))?;
        map.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(map)
}

fn param_usize(m: &BTreeMap<String, String>, key: &str, default: usize) -> Result<usize, Failure> {
    match m.get(key) {
        None => Ok(default),
        Some(v) => v
            .parse()
            .map_err(|_| Failure::invalid(format!("param {key} must be an integer, got {v:?}"))),
    }
}

fn param_f64(m: &BTreeMap<String, String>, key: &str, default: f64) -> Result<f64, Failure> {
    match m.get(key) {
        None => Ok(default),
        Some(v) => v
            .parse()
            .map_err(|_| Failure::invalid(format!("param {key} must be a number, got {v:?}"))),
    }
}

fn describe_structure(s: &MinimalStructure) -> String {
    match s {
        MinimalStructure::PcCycle(c) => format!(
            "pc-cycle vertices={:?} colors={:?}",
            c.vertices, c.colors
        ),
        MinimalStructure::GBowtie(b) => format!(
            "g-bowtie cycle1={:?} cycle2={:?} path={:?}",
            b.cycle1, b.cycle2, b.path
        ),
    }
}

fn emit_certificate(
    g: &EdgeColoredGraph,
    cert: &PartitionCertificate,
    output: &Option<PathBuf>,
) -> Result<(), Failure> {
    let doc = certificate_document(g, cert);
    emit(output, &write_certificate(&doc))
}

fn run(cmd: Cmd) -> Result<(), Failure> {
    match cmd {
        Cmd::Generate {
            kind,
            n,
            p,
            q,
            ell,
            colors,
            min_cdeg,
            min_outdeg,
            edge_prob,
            seed,
            output,
        } => {
            let gen_err = |e: ecdecomp::generators::GenError| Failure::invalid(e.to_string());
            let content = match kind.as_str() {
                "rainbow-complete" => {
                    write_ecg(&rainbow_complete(need(n, "n")?).map_err(gen_err)?)
                }
                "pc-cycle" => write_ecg(&pc_cycle_graph(need(n, "n")?).map_err(gen_err)?),
                "g-bowtie" => write_ecg(
                    &g_bowtie_graph(need(p, "p")?, need(q, "q")?, ell.unwrap_or(0))
                        .map_err(gen_err)?,
                ),
                "random" => write_ecg(
                    &random_ecg(need(n, "n")?, edge_prob, colors.unwrap_or(3), seed)
                        .map_err(gen_err)?,
                ),
                "random-min-cdeg" => write_ecg(
                    &random_ecg_min_cdeg(
                        need(n, "n")?,
                        need(min_cdeg, "min-cdeg")?,
                        edge_prob,
                        colors.unwrap_or(need(n, "n")?.max(2)),
                        seed,
                        10_000,
                    )
                    .map_err(gen_err)?,
                ),
                "tournament" => write_dg(&random_tournament(need(n, "n")?, seed)),
                "oriented" => write_dg(
                    &random_oriented(need(n, "n")?, need(min_outdeg, "min-outdeg")?, seed)
                        .map_err(gen_err)?,
                ),
                other => return Err(Failure::invalid(format!("unknown generator kind {other:?}"))),
            };
            emit(&output, &content)
        }
        Cmd::Analyze { file } => {
            let g = load_ecg(&file)?;
            let n = g.vertex_count();
            let mut out = format!(
                "n {}\nm {}\ncolors {}\n",
                n,
                g.edge_count(),
                g.colors().len()
            );
            if n > 0 {
                let delta = g.min_color_degree().map_err(|e| Failure::invalid(e.to_string()))?;
                out.push_str(&format!("min-color-degree {delta}\n"));
                for v in 0..n {
                    out.push_str(&format!(
                        "d^c({v}) {}\n",
                        g.color_degree(v).map_err(|e| Failure::invalid(e.to_string()))?
                    ));
                }
            }
            out.push_str(&format!(
                "rainbow-triangle {}\n",
                find_rainbow_triangle(&g).is_some()
            ));
            out.push_str(&format!("pc-cycle {}\n", has_pc_cycle(&g)));
            print!("{out}");
            Ok(())
        }
        Cmd::Structure { file, mode, k, budget, seed } => {
            let g = load_ecg(&file)?;
            match mode.as_str() {
                "minimalize" => {
                    let s = minimalize_two_colored(&g)?;
                    println!("{}", describe_structure(&s));
                    Ok(())
                }
                "pc-cycle" => match find_pc_cycle(&g, budget) {
                    Search::Found(c) => {
                        println!("pc-cycle vertices={:?} colors={:?}", c.vertices, c.colors);
                        Ok(())
                    }
                    Search::Absent => Err(Failure::negative("no PC cycle (proven)")),
                    Search::Exhausted => Err(Failure::negative("budget exhausted")),
                },
                "yeo" => match find_yeo_vertex(&g) {
                    Some(z) => {
                        println!("yeo-vertex {z}");
                        Ok(())
                    }
                    None => Err(Failure::negative("no Yeo vertex")),
                },
                "gbowtie" => {
                    let b = extract_structure_via_yeo(&g)?;
                    println!("g-bowtie cycle1={:?} cycle2={:?} path={:?}", b.cycle1, b.cycle2, b.path);
                    Ok(())
                }
                "disjoint" => match find_k_disjoint_structures(&g, k, budget, seed) {
                    Search::Found(set) => {
                        for s in &set {
                            println!("{}", describe_structure(s));
                        }
                        Ok(())
                    }
                    Search::Absent => {
                        Err(Failure::negative(format!("no {k} disjoint structures (proven)")))
                    }
                    Search::Exhausted => Err(Failure::negative("budget exhausted")),
                },
                other => Err(Failure::invalid(format!("unknown structure mode {other:?}"))),
            }
        }
        Cmd::Partition {
            file,
            targets,
            method,
            seed,
            max_tries,
            budget,
            x_side,
            output,
        } => {
            let g = load_ecg(&file)?;
            let target_list = parse_list(&targets, "targets")?;
            let targets = PartitionTargets::new(target_list.clone())
                .map_err(|e| Failure::invalid(e.to_string()))?;
            let cert = match method.as_str() {
                "pipeline" => {
                    if target_list.iter().any(|&a| a != 2) {
                        return Err(Failure::invalid(
                            "pipeline method requires uniform targets 2,...,2",
                        ));
                    }
                    match partition_2k_pipeline(&g, target_list.len(), budget, seed) {
                        Search::Found(c) => c,
                        Search::Absent => {
                            return Err(Failure::negative("no feasible partition (proven)"))
                        }
                        Search::Exhausted => return Err(Failure::negative("budget exhausted")),
                    }
                }
                "exact" => match exact_partition_search(&g, &targets, budget) {
                    Search::Found(c) => c,
                    Search::Absent => {
                        return Err(Failure::negative("no feasible partition (proven)"))
                    }
                    Search::Exhausted => return Err(Failure::negative("budget exhausted")),
                },
                "random" => {
                    if target_list.len() != 2 {
                        return Err(Failure::invalid("random method needs exactly 2 targets"));
                    }
                    let (cert, tries) =
                        random_partition(&g, target_list[0], target_list[1], seed, max_tries)
                            .map_err(|e| match e {
                                PartitionError::TriesExhausted { tries } => Failure::negative(
                                    format!("no feasible partition within {tries} trials"),
                                ),
                                other => Failure::from(other),
                            })?;
                    eprintln!("found after {tries} trials");
                    cert
                }
                "complete-a2" => {
                    if target_list.len() != 2 || target_list[1] != 2 {
                        return Err(Failure::invalid("complete-a2 needs targets a,2"));
                    }
                    partition_complete_a2(&g, target_list[0])?
                }
                "bipartite-a2" => {
                    if target_list.len() != 2 || target_list[1] != 2 {
                        return Err(Failure::invalid("bipartite-a2 needs targets a,2"));
                    }
                    let xs = x_side
                        .ok_or_else(|| Failure::invalid("bipartite-a2 needs --x-side"))?;
                    let x: BTreeSet<usize> = parse_list(&xs, "x-side")?.into_iter().collect();
                    let y: BTreeSet<usize> =
                        (0..g.vertex_count()).filter(|v| !x.contains(v)).collect();
                    partition_bipartite_a2(&g, &x, &y, target_list[0])?
                }
                other => return Err(Failure::invalid(format!("unknown method {other:?}"))),
            };
            emit_certificate(&g, &cert, &output)
        }
        Cmd::Verify { cert, file } => {
            let doc = parse_certificate(&std::fs::read_to_string(&cert)?)?;
            let g = load_ecg(&file)?;
            verify_certificate(&doc, &g)?;
            println!("certificate valid");
            Ok(())
        }
        Cmd::Reduce { direction, file, output } => match direction.as_str() {
            "digraph-to-ecg" => {
                let d = parse_dg(&std::fs::read_to_string(&file)?)?;
                let g = digraph_to_ecg(&d).map_err(|e| Failure::invalid(e.to_string()))?;
                emit(&output, &write_ecg(&g))
            }
            "complete" => {
                let g = load_ecg(&file)?;
                emit(&output, &write_ecg(&ecg_to_complete(&g)))
            }
            other => Err(Failure::invalid(format!("unknown reduction {other:?}"))),
        },
        Cmd::Dicycles { file, k, budget } => {
            let d = parse_dg(&std::fs::read_to_string(&file)?)?;
            match find_k_disjoint_dicycles(&d, k, budget) {
                Search::Found(set) => {
                    for cycle in &set.cycles {
                        println!("cycle {:?}", cycle);
                    }
                    Ok(())
                }
                Search::Absent => {
                    Err(Failure::negative(format!("no {k} disjoint directed cycles (proven)")))
                }
                Search::Exhausted => Err(Failure::negative("budget exhausted")),
            }
        }
        Cmd::Experiment { kind, params, samples, seed, budget, dump_dir, output } => {
            let m = params_map(&params)?;
            let csv = match kind.as_str() {
                "conjecture" => {
                    let n = param_usize(&m, "n", 8)?;
                    let delta_c = param_usize(&m, "delta-c", 5)?;
                    let edge_prob = param_f64(&m, "edge-prob", 0.5)?;
                    let mode = match m.get("mode").map(String::as_str) {
                        Some("two-k") => ProbeMode::TwoK { k: param_usize(&m, "k", 2)? },
                        _ => ProbeMode::AbFeasible {
                            a: param_usize(&m, "a", 2)?,
                            b: param_usize(&m, "b", 2)?,
                        },
                    };
                    let report = conjecture_probe(
                        mode,
                        n,
                        delta_c,
                        edge_prob,
                        samples,
                        seed,
                        budget,
                        dump_dir.as_deref(),
                    )
                    .map_err(|e| Failure::invalid(e.to_string()))?;
                    report.to_csv()
                }
                "bermond-thomassen" => {
                    let n = param_usize(&m, "n", 8)?;
                    let k = param_usize(&m, "k", 2)?;
                    let report = bermond_thomassen_probe(
                        n,
                        k,
                        samples,
                        seed,
                        budget,
                        dump_dir.as_deref(),
                    )
                    .map_err(|e| Failure::invalid(e.to_string()))?;
                    report.to_csv()
                }
                "ps-bound" => {
                    let k = param_usize(&m, "k", 4)?;
                    let mut csv = String::from("x0,k,p_exact_all_ones,p_bound\n");
                    for x0 in 0..=(k / 2) {
                        let gv = GoodVector::new(x0, vec![1; k])
                            .map_err(|e| Failure::invalid(e.to_string()))?;
                        let exact = p_s_exact(&gv);
                        let bound =
                            p_s_bound(x0, k).map_err(|e| Failure::invalid(e.to_string()))?;
                        csv.push_str(&format!("{x0},{k},{exact},{bound}\n"));
                    }
                    csv
                }
                other => return Err(Failure::invalid(format!("unknown experiment {other:?}"))),
            };
            emit(&output, &csv)
        }
    }
}
