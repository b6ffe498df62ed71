//! Command-line workbench: analyze graphs, run the coloring schemes, play
//! the adversary game, verify colorings and transcripts, generate inputs.
//!
//! Exit codes: 0 success/PASS, 1 usage or input error, 2 a bound or
//! verification check FAILED, 3 exhaustive-oracle budget exceeded.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use dfscolor::compose::{self, PathColorer};
use dfscolor::error::Error;
use dfscolor::graph::{Coloring, Graph};
use dfscolor::io::{self, GraphFormat};
use dfscolor::online::{self, AlgorithmSpec};
use dfscolor::{adversary, dfs, generate, oracle, residue, validate_coloring, ColoringVerdict};

const EXIT_PASS: i32 = 0;
const EXIT_USAGE: i32 = 1;
const EXIT_FAIL: i32 = 2;
const EXIT_BUDGET: i32 = 3;

#[derive(Parser)]
#[command(name = "dfscolor", version, about = "DFS-decomposition graph coloring workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact structural analysis: cycle spectrum, odd circumference,
    /// chromatic and clique numbers, DFS shape.
    Analyze {
        graph: PathBuf,
        #[arg(long)]
        format: Option<Format>,
        /// Vertex budget for the exhaustive oracles.
        #[arg(long, default_value_t = oracle::DEFAULT_ORACLE_BUDGET)]
        limit: usize,
    },
    /// Color a graph with one of the schemes and check the result.
    Color {
        graph: PathBuf,
        #[arg(long)]
        format: Option<Format>,
        #[arg(long)]
        method: Method,
        /// Online algorithm for the paths/bands compositions.
        #[arg(long, default_value = "first-fit")]
        algo: Algo,
        /// Odd circumference parameter; measured exactly when omitted.
        #[arg(long)]
        ell: Option<usize>,
        /// Modulus for the residue methods.
        #[arg(long)]
        k: Option<usize>,
        /// Residue parameter for res1.
        #[arg(long, default_value_t = 1)]
        r: usize,
        /// Length-count parameter for res2.
        #[arg(long, default_value_t = 1)]
        s: usize,
        /// Vertex budget for oracle-backed steps.
        #[arg(long, default_value_t = oracle::DEFAULT_ORACLE_BUDGET)]
        limit: usize,
        /// Write the coloring to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the lower-bound game against an online algorithm.
    Adversary {
        #[arg(long, default_value = "first-fit")]
        algo: Algo,
        /// Modulo/quad parameter, when the algorithm needs one.
        #[arg(long)]
        ell: Option<usize>,
        #[arg(long)]
        k: usize,
        /// Write the transcript to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify a coloring file against a graph, or a game transcript.
    Verify {
        graph: Option<PathBuf>,
        #[arg(long)]
        format: Option<Format>,
        #[arg(long)]
        coloring: Option<PathBuf>,
        /// Also require at most this many colors.
        #[arg(long)]
        bound: Option<usize>,
        #[arg(long)]
        transcript: Option<PathBuf>,
    },
    /// Generate a graph from a named family.
    Gen {
        #[command(flatten)]
        family: Family,
        #[arg(long, default_value = "edgelist")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edgelist,
    Dimacs,
}

impl From<Format> for GraphFormat {
    fn from(f: Format) -> GraphFormat {
        match f {
            Format::Edgelist => GraphFormat::EdgeList,
            Format::Dimacs => GraphFormat::Dimacs,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    /// Parity-greedy over DFS levels; at most 2|L| + 2 colors.
    Parity,
    /// Depth mod (ell + 1); at most ell + 1 colors.
    Modulo,
    /// Root-to-leaf paths fed to fresh online sessions.
    Paths,
    /// Height-(ell + 1) bands with three rotating palettes.
    Bands,
    /// Groups-of-four coloring, triangle-free graphs; ell'/2 colors.
    Quad,
    /// Leaf-heavy recursive composition; k * levels colors.
    Recursive,
    /// Residue coloring, hypothesis: no cycle length = r mod k.
    Res1,
    /// Residue coloring, hypothesis: < s + 1 lengths = 2 mod k.
    Res2,
    /// Residue coloring, hypothesis: no cycle length = 3 mod k.
    Res3,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    FirstFit,
    ModuloLevel,
    QuadGroup,
}

#[derive(Args)]
struct Family {
    /// cycle | path | complete | petersen | groetzsch | random |
    /// triangle-free | girth5
    family: String,
    #[arg(long, default_value_t = 10)]
    n: usize,
    #[arg(long, default_value_t = 0.3)]
    p: f64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version requests are not usage errors
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            report_error(&e);
            classify(&e)
        }
    };
    std::process::exit(code);
}

fn classify(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::HypothesisViolation { .. } | Error::ContractViolation(_) => EXIT_FAIL,
        _ => EXIT_USAGE,
    }
}

fn report_error(e: &Error) {
    eprintln!("error: {e}");
    if let Error::HypothesisViolation { modulus, residue, witnesses, .. } = e {
        for w in witnesses {
            let lens: String = w.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
            println!("witness_cycle={lens} # length {} = {} mod {modulus}", w.len(), w.len() % modulus);
            let _ = residue;
        }
    }
}

fn sniff_format(path: &Path, flag: Option<Format>) -> GraphFormat {
    if let Some(f) = flag {
        return f.into();
    }
    match path.extension().and_then(|e| e.to_str()) {
        Some("col") | Some("dimacs") => GraphFormat::Dimacs,
        _ => GraphFormat::EdgeList,
    }
}

fn load_graph(path: &Path, flag: Option<Format>) -> Result<Graph, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        msg: format!("{}: {e}", path.display()),
    })?;
    let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or("graph");
    let doc = io::parse_graph(&text, sniff_format(path, flag), name)?;
    for w in &doc.warnings {
        eprintln!("warning: {w}");
    }
    if let Some(map) = &doc.reindex {
        eprintln!("note: vertex ids re-indexed densely ({} vertices)", map.len());
    }
    Ok(doc.graph)
}

fn write_or_print(out: &Option<PathBuf>, text: &str) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Error::Parse {
            line: 0,
            msg: format!("{}: {e}", path.display()),
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Analyze { graph, format, limit } => analyze(&load_graph(&graph, format)?, limit),
        Command::Color { graph, format, method, algo, ell, k, r, s, limit, out } => {
            let g = load_graph(&graph, format)?;
            color(&g, method, algo, ell, k, r, s, limit, &out)
        }
        Command::Adversary { algo, ell, k, out } => run_adversary(algo, ell, k, &out),
        Command::Verify { graph, format, coloring, bound, transcript } => {
            verify(graph, format, coloring, bound, transcript)
        }
        Command::Gen { family, format, out } => gen(&family, format, &out),
    }
}

fn analyze(g: &Graph, limit: usize) -> Result<i32, Error> {
    println!("n={}", g.n());
    println!("m={}", g.edge_count());
    println!("components={}", g.components().len());
    println!("bipartite={}", g.is_bipartite());
    let stats = oracle::cycle_stats(g, limit)?;
    println!("girth={}", opt(stats.girth));
    println!("cycle_spectrum={}", join(&stats.spectrum));
    println!("odd_cycle_lengths={}", join(&stats.odd_lengths));
    println!("odd_length_count={}", stats.odd_lengths.len());
    println!("odd_circumference={}", opt(stats.odd_circumference));
    println!("longest_path_edges={}", stats.longest_path);
    let (chi, _) = oracle::chromatic_number_exact(g, limit)?;
    println!("chromatic_number={chi}");
    println!("clique_number={}", oracle::clique_number_exact(g, limit)?);
    let mut max_depth = 0;
    let mut leaf_levels = 0;
    for comp in g.components() {
        let t = dfs::dfs_tree(g, comp[0])?;
        max_depth = max_depth.max(t.max_depth());
        leaf_levels = leaf_levels.max(dfs::leaf_heavy_decomposition(&t).levels);
    }
    println!("dfs_depth={max_depth}");
    println!("leaf_heavy_levels={leaf_levels}");
    Ok(EXIT_PASS)
}

fn spec_for(algo: Algo, ell: usize) -> AlgorithmSpec {
    match algo {
        Algo::FirstFit => AlgorithmSpec::FirstFit,
        Algo::ModuloLevel => AlgorithmSpec::ModuloLevel { ell },
        Algo::QuadGroup => AlgorithmSpec::QuadGroup { ell },
    }
}

/// Odd circumference: the given value, or measured by the oracle.
fn resolve_ell(g: &Graph, ell: Option<usize>, limit: usize) -> Result<usize, Error> {
    match ell {
        Some(l) => Ok(l),
        None => oracle::cycle_stats(g, limit)?
            .odd_circumference
            .ok_or(Error::NoOddCycle),
    }
}

#[allow(clippy::too_many_arguments)]
fn color(
    g: &Graph,
    method: Method,
    algo: Algo,
    ell: Option<usize>,
    k: Option<usize>,
    r: usize,
    s: usize,
    limit: usize,
    out: &Option<PathBuf>,
) -> Result<i32, Error> {
    let need_k = || k.ok_or_else(|| Error::BadParameter("this method requires --k".into()));
    let (coloring, bound, desc): (Coloring, Option<usize>, String) = match method {
        Method::Parity => {
            let l_count = oracle::cycle_stats(g, limit)?.odd_lengths.len();
            let c = online::parity_greedy_levels(g, l_count)?;
            (c, Some(2 * l_count + 2), format!("2|L|+2 with |L|={l_count}"))
        }
        Method::Modulo => {
            let l = resolve_ell(g, ell, limit)?;
            let c = compose::compose_paths(g, &AlgorithmSpec::ModuloLevel { ell: l })?;
            (c.coloring, Some(l + 1), format!("ell+1 with ell={l}"))
        }
        Method::Paths => {
            let l = match algo {
                Algo::FirstFit => 0,
                _ => resolve_ell(g, ell, limit)?,
            };
            let c = compose::compose_paths(g, &spec_for(algo, l))?;
            (c.coloring, c.bound, c.bound_desc)
        }
        Method::Bands => {
            let l = resolve_ell(g, ell, limit)?;
            let c = compose::compose_bands(g, l, &spec_for(algo, l))?;
            (c.coloring, c.bound, c.bound_desc)
        }
        Method::Quad => {
            if let Some(tri) =
                oracle::forbidden_subgraph_check(g, oracle::ForbiddenSubgraph::Triangle, limit.max(g.n()))?
            {
                return Err(Error::BadParameter(format!(
                    "quad needs a triangle-free graph; found triangle {tri:?}"
                )));
            }
            let l = resolve_ell(g, ell, limit)?;
            let spec = AlgorithmSpec::QuadGroup { ell: l };
            let bound = spec.palette_bound(g.n());
            let c = compose::compose_paths(g, &spec)?;
            (c.coloring, Some(bound), format!("ell'/2 with ell={l}"))
        }
        Method::Recursive => {
            let c = compose::compose_recursive(g, &PathColorer::Exact { limit }, None)?;
            (c.coloring, c.bound, c.bound_desc)
        }
        Method::Res1 => {
            let k = need_k()?;
            let c = residue::color_residue1(g, k, r)?;
            (c, Some((r + 1) * k), format!("(r+1)k with k={k} r={r}"))
        }
        Method::Res2 => {
            let k = need_k()?;
            let c = residue::color_residue2(g, k, s)?;
            (c, Some(s * k + k + 1), format!("sk+k+1 with k={k} s={s}"))
        }
        Method::Res3 => {
            let k = need_k()?;
            let c = residue::color_residue3(g, k, limit)?;
            (c, Some(2 * k), format!("2k with k={k}"))
        }
    };

    let used = coloring.colors_used();
    println!("colors_used={used}");
    if let Some(b) = bound {
        println!("bound={b}");
        println!("bound_desc={desc}");
    }
    let proper = matches!(validate_coloring(g, &coloring)?, ColoringVerdict::Proper);
    println!("proper={proper}");
    let within = bound.map_or(true, |b| used <= b);
    let pass = proper && within;
    println!("verdict={}", if pass { "PASS" } else { "FAIL" });
    write_or_print(out, &io::emit_coloring(&coloring))?;
    Ok(if pass { EXIT_PASS } else { EXIT_FAIL })
}

fn run_adversary(algo: Algo, ell: Option<usize>, k: usize, out: &Option<PathBuf>) -> Result<i32, Error> {
    let spec = spec_for(algo, ell.unwrap_or(5));
    let t = adversary::run_adversary(&spec, k)?;
    println!("k={k}");
    println!("vertices={}", t.steps.len());
    println!("bins_used={}", t.bins_used);
    match adversary::verify_transcript(&t) {
        Ok(()) => {
            println!("verdict=PASS");
            write_or_print(out, &t.to_text())?;
            Ok(EXIT_PASS)
        }
        Err(msg) => {
            println!("verdict=FAIL");
            eprintln!("transcript check failed: {msg}");
            Ok(EXIT_FAIL)
        }
    }
}

fn verify(
    graph: Option<PathBuf>,
    format: Option<Format>,
    coloring: Option<PathBuf>,
    bound: Option<usize>,
    transcript: Option<PathBuf>,
) -> Result<i32, Error> {
    match (graph, coloring, transcript) {
        (Some(gpath), Some(cpath), None) => {
            let g = load_graph(&gpath, format)?;
            let text = fs::read_to_string(&cpath).map_err(|e| Error::Parse {
                line: 0,
                msg: format!("{}: {e}", cpath.display()),
            })?;
            let c = io::parse_coloring(&text, g.n())?;
            let used = c.colors_used();
            println!("colors_used={used}");
            let verdict = validate_coloring(&g, &c)?;
            let proper = match &verdict {
                ColoringVerdict::Proper => true,
                ColoringVerdict::Improper { witness } => {
                    println!("conflict_edge={},{}", witness.0, witness.1);
                    false
                }
            };
            println!("proper={proper}");
            let within = bound.map_or(true, |b| used <= b);
            if let Some(b) = bound {
                println!("bound={b}");
            }
            let pass = proper && within;
            println!("verdict={}", if pass { "PASS" } else { "FAIL" });
            Ok(if pass { EXIT_PASS } else { EXIT_FAIL })
        }
        (None, None, Some(tpath)) => {
            let text = fs::read_to_string(&tpath).map_err(|e| Error::Parse {
                line: 0,
                msg: format!("{}: {e}", tpath.display()),
            })?;
            let t = adversary::AdversaryTranscript::from_text(&text)?;
            println!("k={}", t.k);
            println!("vertices={}", t.steps.len());
            println!("bins_used={}", t.bins_used);
            match adversary::verify_transcript(&t) {
                Ok(()) => {
                    println!("verdict=PASS");
                    Ok(EXIT_PASS)
                }
                Err(msg) => {
                    println!("verdict=FAIL");
                    eprintln!("transcript check failed: {msg}");
                    Ok(EXIT_FAIL)
                }
            }
        }
        _ => Err(Error::BadParameter(
            "use 'verify <graph> --coloring FILE' or 'verify --transcript FILE'".into(),
        )),
    }
}

fn gen(family: &Family, format: Format, out: &Option<PathBuf>) -> Result<i32, Error> {
    let g = match family.family.as_str() {
        "cycle" => generate::cycle(family.n)?,
        "path" => generate::path(family.n)?,
        "complete" => generate::complete(family.n)?,
        "petersen" => generate::petersen(),
        "groetzsch" => generate::groetzsch(),
        "random" => generate::random_graph(family.n, family.p, family.seed)?,
        "triangle-free" => generate::random_triangle_free(family.n, family.p, family.seed)?,
        "girth5" => generate::random_girth5(family.n, family.p, family.seed)?,
        other => {
            return Err(Error::BadParameter(format!(
                "unknown family {other:?}; see 'gen --help'"
            )))
        }
    };
    eprintln!("n={} m={}", g.n(), g.edge_count());
    write_or_print(out, &io::emit_graph(&g, format.into()))?;
    Ok(EXIT_PASS)
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "none".to_string(), |x| x.to_string())
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}
