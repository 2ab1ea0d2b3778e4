//! Command-line front end. Payloads go to stdout (or `--out`), diagnostics
//! to stderr.
//!
//! Exit codes: 0 completed, 1 error, 2 a checked bound or the conjecture
//! failed, 64 usage error.

use std::error::Error as StdError;
use std::ffi::OsString;
use std::fs;
use std::io::{self, BufRead, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bipartite;
use crate::census::GraphStats;
use crate::constructions::{self, ConstructionReport, PrismSpec};
use crate::edge_list;
use crate::graph::Graph;
use crate::graph6;
use crate::rational;
use crate::search::{self, SearchMode, SearchParams, ThresholdMode};
use crate::surgery::{self, TriPartition};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

type BoxResult<T> = Result<T, Box<dyn StdError + Send + Sync>>;

#[derive(Parser, Debug)]
#[command(name = "bookgraph", version, about = "Triangle and book censuses, prism blow-ups and small-graph verification")]
pub struct Cli {
    /// Worker threads (default: available cores).
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write the payload here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Pretty-print JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a construction; prints graph6 then a JSON report.
    Construct {
        #[command(subcommand)]
        kind: Construction,
    },
    /// Triangle count, book number and degree statistics, one JSON line per graph.
    Stats(InputArgs),
    /// Best neighbourhood cut, one JSON line per graph.
    Cut(InputArgs),
    /// Induced bipartite extraction from the best neighbourhood cut.
    Extract {
        #[command(flatten)]
        input: InputArgs,
        /// Constant `c` in (0, 1/2), as `p/q` or a decimal.
        #[arg(long, default_value = "1/4")]
        c: String,
        #[arg(long)]
        b_cap: usize,
    },
    /// Normalising surgeries on a tripartition; prints graph6 then a JSON report per stage.
    Surgery {
        #[command(flatten)]
        input: InputArgs,
        /// JSON `{"a": [...], "b": [...], "c": [...]}`; `c` may be omitted.
        /// Without it the maximum induced bipartite subgraph is used (n <= 16).
        #[arg(long)]
        partition: Option<PathBuf>,
        #[arg(long)]
        b_cap: usize,
        #[arg(long, value_enum, default_value_t = Stage::Both)]
        stage: Stage,
    },
    /// Exhaustive minimum triangle count under a book cap; prints a certificate.
    Verify {
        #[command(flatten)]
        search: SearchArgs,
        /// Run the randomized search instead.
        #[arg(long)]
        stress: bool,
        #[arg(long, default_value_t = 100_000)]
        iterations: u64,
    },
    /// Randomized search for sparse-triangle graphs; prints a certificate.
    Stress {
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long, default_value_t = 100_000)]
        iterations: u64,
    },
    /// Rademacher and Edwards bounds over every class above the Mantel threshold.
    Suite {
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        #[arg(long)]
        allow_large: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum Construction {
    /// `S_{b,n}`.
    SGraph {
        #[arg(long)]
        b: usize,
        #[arg(long)]
        n: usize,
    },
    /// Blow-up of the 3-prism with parts U1,U2,U3,V1,V2,V3.
    Prism {
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
    },
    /// `⌊n²/4⌋ + 1` edges with book number at most `b + 1`.
    MubayiUpper {
        #[arg(long)]
        b: usize,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// graph6 lines or a JSON edge list; `-` or absent reads stdin.
    pub input: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub b: usize,
    #[arg(long, value_enum, default_value_t = Threshold::FloorQuarter)]
    pub threshold: Threshold,
    /// Keep the balanced complete bipartite graph among the candidates.
    #[arg(long)]
    pub include_bipartite: bool,
    /// Lift the exhaustive vertex-count guard rail.
    #[arg(long)]
    pub allow_large: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Threshold {
    FloorQuarter,
    StrictQuarter,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stage {
    G1,
    G2,
    Both,
}

impl SearchArgs {
    fn params(&self, mode: SearchMode, iterations: u64, seed: u64) -> SearchParams {
        SearchParams {
            n: self.n,
            b_cap: self.b,
            edge_threshold_mode: match self.threshold {
                Threshold::FloorQuarter => ThresholdMode::FloorQuarter,
                Threshold::StrictQuarter => ThresholdMode::StrictQuarter,
            },
            exclude_balanced_bipartite: !self.include_bipartite,
            mode,
            stress_iterations: if mode == SearchMode::Stress { iterations } else { 0 },
            seed,
            allow_large: self.allow_large,
        }
    }
}

struct Output {
    pretty: bool,
    buf: Vec<u8>,
}

impl Output {
    fn json<T: Serialize>(&mut self, value: &T) -> BoxResult<()> {
        if self.pretty {
            serde_json::to_writer_pretty(&mut self.buf, value)?;
        } else {
            serde_json::to_writer(&mut self.buf, value)?;
        }
        self.buf.push(b'\n');
        Ok(())
    }

    fn line(&mut self, text: &str) {
        self.buf.extend_from_slice(text.as_bytes());
        self.buf.push(b'\n');
    }
}

impl Command {
    fn input(&self) -> Option<&InputArgs> {
        match self {
            Command::Stats(input) | Command::Cut(input) => Some(input),
            Command::Extract { input, .. } | Command::Surgery { input, .. } => Some(input),
            _ => None,
        }
    }
}

fn reads_stdin(input: &InputArgs) -> bool {
    input.input.as_ref().is_none_or(|p| p.as_os_str() == "-")
}

fn read_graphs(input: &InputArgs, stdin: &str) -> BoxResult<Vec<Graph>> {
    let text = if reads_stdin(input) {
        stdin.to_string()
    } else {
        let path = input.input.as_ref().expect("path given");
        fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?
    };
    if text.trim_start().starts_with('{') {
        return Ok(vec![edge_list::parse(&text)?]);
    }
    let graphs = graph6::read_all(text.as_bytes())?;
    if graphs.is_empty() {
        return Err("no graphs in input".into());
    }
    Ok(graphs)
}

#[derive(Serialize)]
struct SurgeryOutput<'a> {
    partition: &'a TriPartition,
    proper: bool,
    report: surgery::SurgeryReport,
}

fn run_surgery(
    graph: &Graph,
    partition: Option<&PathBuf>,
    b_cap: usize,
    stage: Stage,
    out: &mut Output,
) -> BoxResult<()> {
    let p = match partition {
        Some(path) => {
            #[derive(serde::Deserialize)]
            struct Raw {
                a: Vec<usize>,
                b: Vec<usize>,
                c: Option<Vec<usize>>,
            }
            let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            let raw: Raw = serde_json::from_str(&text)?;
            match raw.c {
                Some(c) => TriPartition::new(graph.n(), raw.a, raw.b, c)?,
                None => TriPartition::with_rest(graph.n(), raw.a, raw.b)?,
            }
        }
        None => surgery::max_induced_bipartite(graph)?,
    };
    let proper = p.is_proper(graph)?;
    let mut current = graph.clone();
    if matches!(stage, Stage::G1 | Stage::Both) {
        let (g1, report) = surgery::to_g1(&current, &p, b_cap)?;
        out.line(&graph6::encode(&g1));
        out.json(&SurgeryOutput { partition: &p, proper, report })?;
        current = g1;
    }
    if matches!(stage, Stage::G2 | Stage::Both) {
        let (g2, report) = surgery::to_g2(&current, &p, b_cap)?;
        out.line(&graph6::encode(&g2));
        out.json(&SurgeryOutput { partition: &p, proper, report })?;
    }
    Ok(())
}

/// Runs a parsed command; returns the exit code on completion.
fn execute(cli: &Cli, stdin: &str, out: &mut Output) -> BoxResult<i32> {
    match &cli.command {
        Command::Construct { kind } => {
            let (graph, report) = match kind {
                Construction::SGraph { b, n } => {
                    let g = constructions::s_graph(*b, *n)?;
                    let r = ConstructionReport::for_s_graph(*b, *n, &g)?;
                    (g, r)
                }
                Construction::Prism { sizes } => {
                    let parts = sizes
                        .as_slice()
                        .try_into()
                        .map_err(|_| crate::Error::param(format!("--sizes needs 6 values, got {}", sizes.len())))?;
                    let spec = PrismSpec::new(parts);
                    let g = constructions::prism_blowup(&spec);
                    let r = ConstructionReport::for_prism(&spec, &g);
                    (g, r)
                }
                Construction::MubayiUpper { b, n } => {
                    let built = constructions::mubayi_upper(*b, *n)?;
                    let r = ConstructionReport::for_mubayi(*b, *n, &built);
                    (built.graph, r)
                }
            };
            out.line(&graph6::encode(&graph));
            out.json(&report)?;
        }
        Command::Stats(input) => {
            for g in read_graphs(input, stdin)? {
                out.json(&GraphStats::of(&g))?;
            }
        }
        Command::Cut(input) => {
            for g in read_graphs(input, stdin)? {
                out.json(&bipartite::lemma1_cut(&g)?)?;
            }
        }
        Command::Extract { input, c, b_cap } => {
            let c = rational::parse(c).ok_or_else(|| format!("cannot parse c = {c:?}"))?;
            for g in read_graphs(input, stdin)? {
                out.json(&bipartite::lemma2_extract(&g, c, *b_cap)?)?;
            }
        }
        Command::Surgery {
            input,
            partition,
            b_cap,
            stage,
        } => {
            for g in read_graphs(input, stdin)? {
                run_surgery(&g, partition.as_ref(), *b_cap, *stage, out)?;
            }
        }
        Command::Verify {
            search: args,
            stress,
            iterations,
        } => {
            let mode = if *stress { SearchMode::Stress } else { SearchMode::Exhaustive };
            let cert = search::verify_conjecture(&args.params(mode, *iterations, cli.seed))?;
            out.json(&cert)?;
            return Ok(if cert.violation { EXIT_VIOLATION } else { EXIT_OK });
        }
        Command::Stress { search: args, iterations } => {
            let cert = search::stress_search(&args.params(SearchMode::Stress, *iterations, cli.seed))?;
            out.json(&cert)?;
            return Ok(if cert.violation { EXIT_VIOLATION } else { EXIT_OK });
        }
        Command::Suite { n_max, allow_large } => {
            let suite = search::classical_suite(*n_max, *allow_large)?;
            out.json(&suite)?;
            return Ok(if suite.passed { EXIT_OK } else { EXIT_VIOLATION });
        }
    }
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name) and runs the command against
/// the given streams.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let mut out = Output {
        pretty: cli.pretty,
        buf: Vec::new(),
    };
    let mut input = String::new();
    if cli.command.input().is_some_and(reads_stdin) {
        if let Err(e) = stdin.read_to_string(&mut input) {
            let _ = writeln!(stderr, "error: reading stdin: {e}");
            return EXIT_ERROR;
        }
    }
    let result = match cli.workers {
        Some(0) => Err("--workers must be at least 1".into()),
        Some(w) => match rayon::ThreadPoolBuilder::new().num_threads(w).build() {
            Ok(pool) => pool.install(|| execute(&cli, &input, &mut out)),
            Err(e) => Err(e.into()),
        },
        None => execute(&cli, &input, &mut out),
    };
    let code = match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_ERROR;
        }
    };
    let written = match &cli.out {
        Some(path) => fs::write(path, &out.buf).map_err(|e| format!("{}: {e}", path.display())),
        None => stdout.write_all(&out.buf).and_then(|_| stdout.flush()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return EXIT_ERROR;
    }
    code
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdin = io::stdin();
    run(
        std::env::args_os(),
        &mut stdin.lock(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], input: &str) -> (i32, String, String) {
        let mut stdin = input.as_bytes();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let argv = std::iter::once("bookgraph").chain(args.iter().copied());
        let code = run(argv, &mut stdin, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn construct_s_graph() {
        let (code, out, _) = call(&["construct", "s-graph", "--b", "2", "--n", "9"], "");
        assert_eq!(code, 0);
        let mut lines = out.lines();
        let g = graph6::decode_str(lines.next().unwrap()).unwrap();
        assert_eq!(g.n(), 9);
        let report: serde_json::Value = serde_json::from_str(lines.next().unwrap()).unwrap();
        assert_eq!(report["edges"], 20);
        assert_eq!(report["triangles"], 4);
        assert_eq!(report["book"], 2);
    }

    #[test]
    fn stats_k4() {
        let (code, out, _) = call(&["stats"], "C~\n");
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!((v["n"].as_u64(), v["m"].as_u64()), (Some(4), Some(6)));
        assert_eq!((v["triangles"].as_u64(), v["book_number"].as_u64()), (Some(4), Some(2)));
    }

    #[test]
    fn verify_reports_bound() {
        let (code, out, _) = call(&["verify", "--n", "9", "--b", "2"], "");
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["conjectured_bound"], 4);
        assert_eq!(v["schema"], search::CERTIFICATE_SCHEMA);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["frobnicate"], "").0, EXIT_USAGE);
        assert_eq!(call(&["stats", "--bogus"], "").0, EXIT_USAGE);
        assert_eq!(call(&["--help"], "").0, EXIT_OK);
        let (code, out, err) = call(&["stats"], "not graph6 \x01\n");
        assert_eq!((code, out.as_str()), (EXIT_ERROR, ""));
        assert!(err.starts_with("error:"));
    }

    #[test]
    fn guard_rail_is_an_error() {
        let (code, _, err) = call(&["verify", "--n", "11", "--b", "2"], "");
        assert_eq!(code, EXIT_ERROR);
        assert!(err.contains("exhaustive limit"));
    }
}
