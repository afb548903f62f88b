//! `wordnerve` command-line interface.
//!
//! Every command reads and validates all of its inputs, computes its results
//! in memory, and only then writes files, so a failing run leaves no partial
//! output behind. The main document goes to `--output` (stdout if absent);
//! human-readable reports go to stdout when the document is in a file and to
//! stderr otherwise.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use wordnerve::construct::{word_any_graph, word_bipartite, word_from_chord_diagram};
use wordnerve::extend::{extend_coloring_2d, extend_coloring_bipartite};
use wordnerve::geometry::gale::gale_facets;
use wordnerve::io::{self, FacetDocument, VerdictDocument};
use wordnerve::nerve::{nerve_with, realize_on_moment_curve};
use wordnerve::search::{find_general_word_with, Outcome, SearchBudget};
use wordnerve::svg::render_svg;
use wordnerve::{selftest, Error, Exec, SimplicialComplex, Word};

const EXIT_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_INTERNAL: u8 = 4;

#[derive(Parser)]
#[command(
    name = "wordnerve",
    version,
    about = "Word-representable graphs and nerves of colored point sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Graph induced by a word: letters adjacent when they alternate at least d+2 times.
    Induce {
        word: PathBuf,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Encode a graph (or a chord diagram) as a word.
    Encode {
        /// Graph file, or a chord diagram JSON with `--mode chords`.
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = EncodeMode::Any)]
        mode: EncodeMode,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Place the letters of a word on the moment curve and report the nerve.
    Realize {
        word: PathBuf,
        #[arg(long)]
        dim: usize,
        /// Also draw the configuration (only for --dim 2).
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        max_dim: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Search for a word inducing the graph at dimension d.
    Search {
        graph: PathBuf,
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 4)]
        max_copies: usize,
        /// Defaults to max-copies times the number of vertices.
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long, default_value_t = 10_000_000)]
        node_limit: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Record the wall time in the verdict (makes the output run-dependent).
        #[arg(long)]
        timing: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Facets of the cyclic polytope with r vertices in R^d.
    Facets {
        r: usize,
        d: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Color extra points without changing the nerve.
    Extend {
        config: PathBuf,
        extras: PathBuf,
        #[arg(long, value_enum)]
        mode: ExtendMode,
        /// Bipartite graph whose encoding was realized (bipartite mode).
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the oracle cross-checks.
    Selftest {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        timing: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum EncodeMode {
    Any,
    Bipartite,
    Chords,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExtendMode {
    Planar,
    Bipartite,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Budget(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => EXIT_INPUT,
            Failure::Budget(_) => EXIT_BUDGET,
            Failure::Internal(_) => EXIT_INTERNAL,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Invariant(_) | Error::ExtensionFailed(_) => Failure::Internal(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

/// What a command produces: the main document, extra files, a report, and
/// the failure (if any) to signal after everything has been written.
struct Output {
    document: String,
    files: Vec<(PathBuf, String)>,
    report: String,
    after: Option<Failure>,
}

impl Output {
    fn new(document: String, report: String) -> Self {
        Output {
            document,
            files: Vec::new(),
            report,
            after: None,
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn with_path<T>(path: &Path, r: wordnerve::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| match Failure::from(e) {
        Failure::Input(m) => Failure::Input(format!("{}: {m}", path.display())),
        other => other,
    })
}

fn check_output_path(path: &Option<PathBuf>) -> Result<(), Failure> {
    let Some(p) = path else { return Ok(()) };
    let parent = p
        .parent()
        .filter(|d| !d.as_os_str().is_empty())
        .unwrap_or(Path::new("."));
    if !parent.is_dir() {
        return Err(Failure::Input(format!(
            "{}: directory does not exist",
            parent.display()
        )));
    }
    if p.is_dir() {
        return Err(Failure::Input(format!("{}: is a directory", p.display())));
    }
    Ok(())
}

fn positive(name: &str, v: usize) -> Result<usize, Failure> {
    if v == 0 {
        Err(Failure::Input(format!("--{name} must be positive")))
    } else {
        Ok(v)
    }
}

fn exec_for(jobs: usize) -> Exec {
    let exec = Exec::from_jobs(jobs);
    if exec != Exec::Sequential && !Exec::parallel_available() {
        eprintln!("warning: built without the `parallel` feature, running sequentially");
    }
    exec
}

fn nerve_summary(c: &SimplicialComplex) -> String {
    let mut out = format!("nerve: {c}\n");
    let skeleton = c.one_skeleton();
    let _ = writeln!(out, "1-skeleton: {skeleton}");
    out
}

fn induce(word: &Path, dim: usize) -> Result<Output, Failure> {
    let dim = positive("dim", dim)?;
    let w = with_path(word, io::parse_word(&read(word)?))?;
    let g = w.induced_graph_general(dim);
    Ok(Output::new(io::graph_to_json(&g)?, g.adjacency_summary()))
}

/// Factors of the encodings, for display.
fn chunks(w: &Word, size: usize, count: usize) -> Vec<String> {
    let letters = w.letters();
    let mut out: Vec<String> = letters[..size * count].chunks(size).map(|c| c.concat()).collect();
    out.extend(letters[size * count..].iter().cloned());
    out
}

fn encode(input: &Path, mode: EncodeMode) -> Result<Output, Failure> {
    let text = read(input)?;
    let (w, d, factors) = match mode {
        EncodeMode::Any => {
            let g = with_path(input, io::parse_graph(&text))?;
            let (w, d) = word_any_graph(&g);
            let f = chunks(&w, d + 2, g.edge_count());
            (w, d, f)
        }
        EncodeMode::Bipartite => {
            let g = with_path(input, io::parse_graph(&text))?;
            let bw = with_path(input, word_bipartite(&g))?;
            let letters = bw.word.letters();
            let mut f: Vec<String> = bw
                .spans
                .iter()
                .flatten()
                .filter(|(_, len)| *len > 0)
                .map(|&(start, len)| letters[start..start + len].concat())
                .collect();
            f.extend(bw.trailing.iter().cloned());
            (bw.word, bw.d, f)
        }
        EncodeMode::Chords => {
            let dgm = with_path(input, io::parse_chord_diagram(&text))?;
            let w = word_from_chord_diagram(&dgm);
            let f = vec![w.letters().concat()];
            (w, 2, f)
        }
    };
    let report = format!("d={d}\nlength={}\nfactors: {}\n", w.len(), factors.join(" "));
    Ok(Output::new(io::format_word(&w), report))
}

fn realize(word: &Path, dim: usize, svg: &Option<PathBuf>, max_dim: usize) -> Result<Output, Failure> {
    let dim = positive("dim", dim)?;
    let max_dim = positive("max-dim", max_dim)?;
    if svg.is_some() && dim != 2 {
        return Err(Failure::Input(format!("--svg needs --dim 2, got {dim}")));
    }
    let w = with_path(word, io::parse_word(&read(word)?))?;
    let config = realize_on_moment_curve(&w, dim)?;
    let n = nerve_with(&config, max_dim, Exec::Sequential)?;
    let mut report = format!("{} points in R^{dim}\n", config.len());
    report.push_str(&nerve_summary(&n.complex));
    let _ = writeln!(report, "faces checked up to dimension {}", n.max_dim_checked);
    let mut out = Output::new(io::config_to_json(&config)?, report);
    if let Some(path) = svg {
        out.files.push((path.clone(), render_svg(&config)?));
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn search(
    graph: &Path,
    dim: usize,
    max_copies: usize,
    max_len: Option<usize>,
    node_limit: u64,
    jobs: usize,
    timing: bool,
) -> Result<Output, Failure> {
    let g = with_path(graph, io::parse_graph(&read(graph)?))?;
    let max_len = max_len.unwrap_or(max_copies.saturating_mul(g.vertex_count()));
    let budget = SearchBudget::new(max_copies, max_len, node_limit)?;
    let start = Instant::now();
    let v = find_general_word_with(&g, dim, budget, exec_for(jobs))?;
    let wall = timing.then(|| start.elapsed().as_millis() as u64);
    let doc = VerdictDocument::new(&v, wall);
    let mut report = format!("{} after {} nodes\n", v.outcome.name(), v.nodes_explored);
    if let Some(w) = v.outcome.witness() {
        report.push_str(&io::format_word(w));
    }
    let mut out = Output::new(doc.to_json()?, report);
    out.after = match v.outcome {
        Outcome::Found(_) => None,
        Outcome::NotFoundWithinBudget => Some(Failure::Budget("no word within the budget".into())),
        Outcome::NodeLimitExceeded => Some(Failure::Budget("node limit exceeded".into())),
    };
    Ok(out)
}

fn facets(r: usize, d: usize) -> Result<Output, Failure> {
    let facets = gale_facets(r, d)?;
    let report = format!("{} facets\n", facets.len());
    Ok(Output::new(FacetDocument { r, d, facets }.to_json()?, report))
}

fn extend(config: &Path, extras: &Path, mode: ExtendMode, graph: &Option<PathBuf>) -> Result<Output, Failure> {
    let c = with_path(config, io::parse_config(&read(config)?))?;
    let (dim, points) = with_path(extras, io::parse_points(&read(extras)?))?;
    if dim != c.dim() {
        return Err(Failure::Input(format!(
            "{}: dimension {dim} does not match the configuration's {}",
            extras.display(),
            c.dim()
        )));
    }
    let ext = match mode {
        ExtendMode::Planar => {
            if graph.is_some() {
                return Err(Failure::Input("--graph is only used in bipartite mode".into()));
            }
            extend_coloring_2d(&c, &points)?
        }
        ExtendMode::Bipartite => {
            let Some(gp) = graph else {
                return Err(Failure::Input("bipartite mode needs --graph".into()));
            };
            let g = with_path(gp, io::parse_graph(&read(gp)?))?;
            let bw = with_path(gp, word_bipartite(&g))?;
            extend_coloring_bipartite(&g, &bw.word, &c, &points)?
        }
    };
    let mut report = format!("{} extra points colored\n", points.len());
    for (p, color) in ext.config.points()[c.len()..]
        .iter()
        .zip(&ext.config.colors()[c.len()..])
    {
        let _ = writeln!(report, "  ({}) -> {color}", p.to_strings().join(", "));
    }
    let _ = writeln!(report, "before {}", nerve_summary(&ext.before).trim_end());
    let _ = writeln!(report, "after  {}", nerve_summary(&ext.after).trim_end());
    Ok(Output::new(io::config_to_json(&ext.config)?, report))
}

fn run_selftest(seed: u64, jobs: usize, timing: bool) -> Output {
    let reports = selftest::run_all(seed, exec_for(jobs));
    let mut doc = String::new();
    for r in &reports {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        let _ = write!(
            doc,
            "{status} {}: {} cases, {} failures",
            r.name,
            r.cases,
            r.failures.len()
        );
        if timing {
            let _ = write!(doc, ", {:.2}s", r.elapsed.as_secs_f64());
        }
        if let Some(first) = r.failures.first() {
            let _ = write!(doc, " (first: {first})");
        }
        doc.push('\n');
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let mut out = Output::new(doc, String::new());
    if failed > 0 {
        out.after = Some(Failure::Internal(format!("{failed} check suites failed")));
    }
    out
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

fn run(cli: Cli) -> Result<Option<Failure>, Failure> {
    let (out, output) = match cli.command {
        Command::Induce { word, dim, output } => {
            check_output_path(&output)?;
            (induce(&word, dim)?, output)
        }
        Command::Encode { input, mode, output } => {
            check_output_path(&output)?;
            (encode(&input, mode)?, output)
        }
        Command::Realize {
            word,
            dim,
            svg,
            max_dim,
            output,
        } => {
            check_output_path(&output)?;
            check_output_path(&svg)?;
            (realize(&word, dim, &svg, max_dim)?, output)
        }
        Command::Search {
            graph,
            dim,
            max_copies,
            max_len,
            node_limit,
            jobs,
            timing,
            output,
        } => {
            check_output_path(&output)?;
            (
                search(&graph, dim, max_copies, max_len, node_limit, jobs, timing)?,
                output,
            )
        }
        Command::Facets { r, d, output } => {
            check_output_path(&output)?;
            (facets(r, d)?, output)
        }
        Command::Extend {
            config,
            extras,
            mode,
            graph,
            output,
        } => {
            check_output_path(&output)?;
            (extend(&config, &extras, mode, &graph)?, output)
        }
        Command::Selftest { seed, jobs, timing } => (run_selftest(seed, jobs, timing), None),
    };

    let write =
        |path: &Path, text: &str| fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())));
    for (path, text) in &out.files {
        write(path, text)?;
    }
    match output {
        Some(path) => {
            write(&path, &out.document)?;
            print!("{}", out.report);
        }
        None => {
            print!("{}", out.document);
            eprint!("{}", out.report);
        }
    }
    Ok(out.after)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(f)) | Err(f) => {
            let msg = match &f {
                Failure::Input(m) | Failure::Budget(m) | Failure::Internal(m) => m,
            };
            eprintln!("error: {msg}");
            ExitCode::from(f.code())
        }
    }
}
