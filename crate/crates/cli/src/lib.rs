//! `psep` subcommands.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write as _};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use psep::format::{parse_graph, parse_tree, write_graph, GraphFile};
use psep::layers::{boundary_cycles, face_levels};
use psep::oracle::verify_separator;
use psep::report::{from_json, to_json};
use psep::{balanced_edge_cut, enumerate_faces, separate, PlanarEmbedding};

pub mod render;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(psep::Error),
    #[error("{0}")]
    Internal(psep::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("verification failed: {0}")]
    Verify(String),
    #[error("layout did not converge within {rounds} rounds")]
    NoConvergence { rounds: usize },
}

impl From<psep::Error> for CliError {
    fn from(e: psep::Error) -> Self {
        if e.is_input_error() {
            CliError::Input(e)
        } else {
            CliError::Internal(e)
        }
    }
}

impl CliError {
    /// 1 I/O, 2 parse or validation, 3 failed verification, 4 internal.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } => 1,
            CliError::Input(_) => 2,
            CliError::Verify(_) => 3,
            CliError::Internal(_) | CliError::NoConvergence { .. } => 4,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "psep",
    version,
    about = "Short cycle separators for triangulated planar graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Apollonian,
    Flipped,
    Pillow,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a random triangulation in `planar-rot 1` format.
    Gen {
        #[arg(value_enum)]
        kind: Kind,
        /// Vertex count (apollonian, flipped).
        #[arg(short, default_value_t = 1000)]
        n: usize,
        /// Attempted diagonal flips (flipped, pillow); defaults to 3n for flipped.
        #[arg(long)]
        flips: Option<usize>,
        /// Grid width and height (pillow).
        #[arg(long, default_value_t = 20)]
        width: usize,
        #[arg(long, default_value_t = 80)]
        height: usize,
        /// Extra stacked vertices (pillow).
        #[arg(long, default_value_t = 0)]
        blob: usize,
        #[arg(long, env = "PSEP_SEED", default_value_t = 1)]
        seed: u64,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Compute a separator and print its report as JSON.
    Separate {
        graph: PathBuf,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Check a report against a graph; exits 3 on the first failed check.
    Verify { graph: PathBuf, report: PathBuf },
    /// Per-level boundary cycle sizes as CSV (`level,size,rung`).
    Layers { graph: PathBuf },
    /// The fundamental cycle of the balanced dual-tree cut, as JSON.
    RootCycle { graph: PathBuf },
    /// Balanced edge cut of a tree given as an edge list.
    TreeCut { tree: PathBuf },
    /// Time the pipeline; CSV `n,seed,branch,length,sqrt8n,wall_ms`.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "1000,10000,100000")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        seeds: u64,
        #[arg(long, value_enum, default_value_t = Kind::Apollonian)]
        kind: Kind,
        #[arg(long, env = "PSEP_SEED", default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Draw the graph and a separator as SVG. Without a report the separator
    /// is computed.
    Render {
        graph: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(short, long)]
        out: PathBuf,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write_or_print(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Io {
            path: p.to_path_buf(),
            source,
        }),
        None => io::stdout().write_all(text.as_bytes()).map_err(|source| CliError::Io {
            path: "<stdout>".into(),
            source,
        }),
    }
}

fn load(path: &Path) -> Result<GraphFile, CliError> {
    Ok(parse_graph(&read(path)?)?)
}

fn generate(
    kind: Kind,
    n: usize,
    flips: Option<usize>,
    shape: (usize, usize, usize),
    seed: u64,
) -> psep::Result<PlanarEmbedding> {
    match kind {
        Kind::Apollonian => psep::gen_apollonian(n, seed),
        Kind::Flipped => psep::gen_flipped(n, flips.unwrap_or(3 * n), seed),
        Kind::Pillow => psep::gen_pillow(shape.0, shape.1, shape.2, flips.unwrap_or(0), seed),
    }
}

fn draw(g: &GraphFile, cycle: &[u32]) -> Result<String, CliError> {
    let ft = enumerate_faces(&g.graph)?;
    let pos = match &g.coords {
        Some(c) => c.clone(),
        None => render::barycentric_layout(&g.graph)?,
    };
    render::svg(&g.graph, &ft, &pos, Some(cycle))
}

#[derive(Serialize)]
struct RootCycleJson {
    root: u32,
    u: u32,
    v: u32,
    deep: u32,
    depth: u32,
    length: usize,
    cycle: Vec<u32>,
    faces_inside: usize,
    faces_outside: usize,
}

#[derive(Serialize)]
struct TreeCutJson {
    nodes: usize,
    max_degree: usize,
    bound: usize,
    edge: usize,
    parent: u32,
    child: u32,
    child_side: usize,
    parent_side: usize,
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Gen {
            kind,
            n,
            flips,
            width,
            height,
            blob,
            seed,
            out,
        } => {
            let g = generate(*kind, *n, *flips, (*width, *height, *blob), *seed)?;
            write_or_print(out.as_deref(), &write_graph(&g, None))
        }
        Command::Separate { graph, json: out, svg } => {
            let file = load(graph)?;
            let sep = separate(&file.graph)?;
            let mut text = to_json(&sep.report);
            text.push('\n');
            write_or_print(out.as_deref(), &text)?;
            if let Some(path) = svg {
                write_or_print(Some(path), &draw(&file, sep.report.cycle.vertices())?)?;
            }
            Ok(())
        }
        Command::Verify { graph, report } => {
            let file = load(graph)?;
            let rep = from_json(&read(report)?)?;
            let ft = enumerate_faces(&file.graph)?;
            let verdict = verify_separator(&file.graph, &ft, &rep);
            write_or_print(None, &verdict.to_string())?;
            match verdict.first_failure() {
                None => Ok(()),
                Some(c) => Err(CliError::Verify(format!("{}: {}", c.kind.name(), c.detail))),
            }
        }
        Command::Layers { graph } => {
            let g = load(graph)?.graph;
            let sep = separate(&g)?;
            let (decomposition, rungs) = match &sep.layers {
                Some(l) => (l.decomposition.clone(), l.ladder.alpha.clone()),
                None => {
                    let ft = &sep.faces;
                    let tree = &sep.root_cycle.tree;
                    let levels = face_levels(ft, tree);
                    let d = boundary_cycles(&g, ft, &levels, tree, sep.root_cycle.deep_path())?;
                    (d, Vec::new())
                }
            };
            let mut out = String::from("level,size,rung\n");
            for (i, size) in decomposition.cycle_sizes.iter().enumerate() {
                let _ = writeln!(out, "{i},{size},{}", u8::from(rungs.contains(&i)));
            }
            write_or_print(None, &out)
        }
        Command::RootCycle { graph } => {
            let g = load(graph)?.graph;
            let ft = enumerate_faces(&g)?;
            let fc = psep::fundamental::find_root_cycle(&g, &ft)?;
            let value = RootCycleJson {
                root: fc.root(),
                u: fc.u,
                v: fc.v,
                deep: fc.deep,
                depth: fc.h_t,
                length: fc.cycle.len(),
                cycle: fc.cycle.vertices().to_vec(),
                faces_inside: fc.faces_inside,
                faces_outside: fc.faces_outside(),
            };
            write_or_print(None, &json(&value))
        }
        Command::TreeCut { tree } => {
            let t = parse_tree(&read(tree)?)?;
            let cut = balanced_edge_cut(&t)?;
            let value = TreeCutJson {
                nodes: t.node_count(),
                max_degree: t.max_degree(),
                bound: t.balance_bound(),
                edge: cut.edge,
                parent: cut.parent,
                child: cut.child,
                child_side: cut.child_side,
                parent_side: cut.parent_side,
            };
            write_or_print(None, &json(&value))
        }
        Command::Bench {
            sizes,
            seeds,
            kind,
            seed,
            csv,
        } => {
            let rows = bench(sizes, *seeds, *kind, *seed)?;
            let mut out = String::from("n,seed,branch,length,sqrt8n,wall_ms\n");
            for r in rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{:.3},{:.3}",
                    r.n, r.seed, r.branch, r.length, r.sqrt8n, r.wall_ms
                );
            }
            write_or_print(csv.as_deref(), &out)
        }
        Command::Render { graph, report, out } => {
            let file = load(graph)?;
            let cycle = match report {
                Some(p) => from_json(&read(p)?)?.cycle.into_vertices(),
                None => separate(&file.graph)?.report.cycle.into_vertices(),
            };
            write_or_print(Some(out), &draw(&file, &cycle)?)
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub seed: u64,
    pub branch: psep::Branch,
    pub length: usize,
    pub sqrt8n: f64,
    pub wall_ms: f64,
}

/// Pillows get a 1:4 grid with about `n` vertices.
fn bench_instance(kind: Kind, n: usize, seed: u64) -> psep::Result<PlanarEmbedding> {
    let width = ((n / 8) as f64).sqrt().max(4.0) as usize;
    generate(kind, n, None, (width, 4 * width, 0), seed)
}

/// Times `separate` (generation excluded) on `seeds` instances per size,
/// after one untimed warm-up run.
pub fn bench(sizes: &[usize], seeds: u64, kind: Kind, first_seed: u64) -> Result<Vec<BenchRow>, CliError> {
    let mut rows = Vec::new();
    if let Some(&n) = sizes.first() {
        separate(&bench_instance(kind, n, first_seed)?)?;
    }
    for &n in sizes {
        for seed in first_seed..first_seed + seeds {
            let g = bench_instance(kind, n, seed)?;
            let start = Instant::now();
            let sep = separate(&g)?;
            let wall_ms = start.elapsed().as_secs_f64() * 1e3;
            rows.push(BenchRow {
                n: g.n(),
                seed,
                branch: sep.report.branch,
                length: sep.report.length,
                sqrt8n: (8.0 * g.n() as f64).sqrt(),
                wall_ms,
            });
        }
    }
    Ok(rows)
}
