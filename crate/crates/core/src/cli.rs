//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 for usage errors, 2 for unreadable or
//! malformed input. Data goes to files or stdout, diagnostics to stderr.

use std::ffi::OsString;
use std::fs;
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::bench::{run_bench, BenchConfig, DEFAULT_SEED};
use crate::decompose::{core_decompose, k_core_subgraph, summarize};
use crate::error::Error;
use crate::graph::{BuildStats, DegreeMode, LoopPolicy};
use crate::io::{
    parse_edgelist_with_stats, parse_pajek_with_stats, read_words, word_graph, write_clu,
    write_pajek, LabeledGraph,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "kcore",
    version,
    about = "Cores decomposition of large networks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute core numbers of a network.
    Decompose(DecomposeArgs),
    /// Build the edit-distance-one network of a word list.
    Wordgraph(WordgraphArgs),
    /// Time the decomposition on random graphs of growing size.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// `.net` files are Pajek, anything else an edge list.
    Auto,
    Pajek,
    Edgelist,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    /// Undirected for undirected inputs, in+out for directed ones.
    Auto,
    Undirected,
    In,
    Out,
    Inout,
}

impl ModeArg {
    fn explicit(self) -> Option<DegreeMode> {
        match self {
            ModeArg::Auto => None,
            ModeArg::Undirected => Some(DegreeMode::Undirected),
            ModeArg::In => Some(DegreeMode::In),
            ModeArg::Out => Some(DegreeMode::Out),
            ModeArg::Inout => Some(DegreeMode::InOut),
        }
    }
}

#[derive(Debug, clap::Args)]
struct DecomposeArgs {
    /// Network file (Pajek `.net` or edge list).
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Auto)]
    format: Format,
    /// Degree notion; edge lists are read as directed for in/out/inout.
    #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
    mode: ModeArg,
    /// Write core numbers as a Pajek `.clu` partition.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Print vertex counts and k-core sizes per core number.
    #[arg(long)]
    summary: bool,
    /// Extract the k-core with this k (needs --subgraph-output).
    #[arg(long = "kcore", value_name = "K")]
    kcore: Option<usize>,
    /// Pajek file for the extracted k-core.
    #[arg(long)]
    subgraph_output: Option<PathBuf>,
    /// Vertex count for edge lists, when larger than the ids imply.
    #[arg(long, value_name = "N")]
    vertices: Option<usize>,
}

#[derive(Debug, clap::Args)]
struct WordgraphArgs {
    /// Word list, one word per line.
    #[arg(long)]
    input: PathBuf,
    /// Pajek file to write.
    #[arg(long)]
    output: PathBuf,
}

#[derive(Debug, clap::Args)]
struct BenchArgs {
    #[arg(long, value_name = "S", default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Vertex count of the ladder over m.
    #[arg(long, value_name = "N", default_value_t = 100_000)]
    vertices: usize,
    /// Also write the timings as CSV.
    #[arg(long)]
    output: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_usage() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{rendered}");
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match cli.command {
        Command::Decompose(args) => decompose(args, stdout, stderr),
        Command::Wordgraph(args) => wordgraph(args, stdout),
        Command::Bench(args) => bench(args, stdout),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_INPUT
        }
    }
}

fn open(path: &Path) -> Result<BufReader<fs::File>, Failure> {
    fs::File::open(path)
        .map(BufReader::new)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn with_path(path: &Path) -> impl FnOnce(Error) -> Failure + '_ {
    move |e| match Failure::from(e) {
        Failure::Input(msg) => Failure::Input(format!("{}: {msg}", path.display())),
        usage => usage,
    }
}

/// Writes every file or none of them.
fn write_all(files: &[(&Path, Vec<u8>)]) -> Result<(), Failure> {
    let mut written: Vec<&Path> = Vec::new();
    for (path, bytes) in files {
        if let Err(e) = fs::write(path, bytes) {
            for done in written {
                let _ = fs::remove_file(done);
            }
            let _ = fs::remove_file(path);
            return Err(Failure::Input(format!("{}: {e}", path.display())));
        }
        written.push(path);
    }
    Ok(())
}

fn warn_dropped(stats: BuildStats, stderr: &mut dyn Write) {
    if stats.loops_dropped > 0 {
        let _ = writeln!(
            stderr,
            "warning: ignored {} self-loop(s)",
            stats.loops_dropped
        );
    }
    if stats.duplicates_collapsed > 0 {
        let _ = writeln!(
            stderr,
            "warning: collapsed {} duplicate line(s)",
            stats.duplicates_collapsed
        );
    }
}

fn decompose(
    args: DecomposeArgs,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<(), Failure> {
    match (args.kcore, &args.subgraph_output) {
        (Some(_), None) => return Err(Failure::Usage("--kcore needs --subgraph-output".into())),
        (None, Some(_)) => return Err(Failure::Usage("--subgraph-output needs --kcore".into())),
        _ => {}
    }
    let format = match args.format {
        Format::Auto
            if args
                .input
                .extension()
                .is_some_and(|e| e.eq_ignore_ascii_case("net")) =>
        {
            Format::Pajek
        }
        Format::Auto => Format::Edgelist,
        other => other,
    };
    if format == Format::Pajek && args.vertices.is_some() {
        return Err(Failure::Usage(
            "--vertices only applies to edge lists".into(),
        ));
    }

    let reader = open(&args.input)?;
    let (lg, stats) = match format {
        Format::Pajek => parse_pajek_with_stats(reader, LoopPolicy::Ignore),
        _ => {
            let directed = args.mode.explicit().is_some_and(DegreeMode::is_directed);
            parse_edgelist_with_stats(reader, directed, args.vertices, LoopPolicy::Ignore)
                .map(|(g, s)| (LabeledGraph::unlabeled(g), s))
        }
    }
    .map_err(with_path(&args.input))?;
    warn_dropped(stats, stderr);

    let g = &lg.graph;
    let mode = args
        .mode
        .explicit()
        .unwrap_or(DegreeMode::default_for(g.is_directed()));
    let start = Instant::now();
    let assignment = core_decompose(g, mode)?;
    let elapsed = start.elapsed();

    let mut files: Vec<(&Path, Vec<u8>)> = Vec::new();
    if let Some(path) = &args.output {
        let mut buf = Vec::new();
        write_clu(&assignment, &mut buf)?;
        files.push((path, buf));
    }
    if let (Some(k), Some(path)) = (args.kcore, &args.subgraph_output) {
        let (sub, map) = k_core_subgraph(g, &assignment, k);
        let labels = map
            .iter()
            .map(|&v| match lg.label(v as usize) {
                Some(label) => label.to_string(),
                None => (v + 1).to_string(),
            })
            .collect();
        let mut buf = Vec::new();
        write_pajek(&LabeledGraph::new(sub, Some(labels)), &mut buf)?;
        files.push((path, buf));
    }
    write_all(&files)?;

    let mut report = String::new();
    report.push_str(&format!("vertices: {}\n", g.n()));
    report.push_str(&format!("lines: {}\n", g.m()));
    report.push_str(&format!("density: {:.7}\n", g.density()));
    report.push_str(&format!("mode: {mode}\n"));
    report.push_str(&format!("main core: {}\n", assignment.max_core()));
    report.push_str(&format!("time: {:.6} s\n", elapsed.as_secs_f64()));
    if args.summary {
        report.push('\n');
        report.push_str(&summarize(&assignment).to_string());
    }
    stdout
        .write_all(report.as_bytes())
        .map_err(|e| Failure::Input(format!("stdout: {e}")))
}

fn wordgraph(args: WordgraphArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let words = read_words(open(&args.input)?).map_err(with_path(&args.input))?;
    let lg = word_graph(&words).map_err(with_path(&args.input))?;
    let mut buf = Vec::new();
    write_pajek(&lg, &mut buf)?;
    write_all(&[(&args.output, buf)])?;
    writeln!(
        stdout,
        "vertices: {}\nlines: {}",
        lg.graph.n(),
        lg.graph.m()
    )
    .map_err(|e| Failure::Input(format!("stdout: {e}")))
}

fn bench(args: BenchArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let mut config = BenchConfig::for_vertices(args.vertices);
    config.seed = args.seed;
    let report = run_bench(&config);
    if let Some(path) = &args.output {
        let mut buf = Vec::new();
        report.write_csv(&mut buf)?;
        write_all(&[(path, buf)])?;
    }
    write!(stdout, "{report}").map_err(|e| Failure::Input(format!("stdout: {e}")))
}
