//! Command-line front end: every library capability behind one binary.
//!
//! Structured results (graphs, models, reports) go to stdout as JSON;
//! human-readable progress and summaries go to stderr. Exit codes: 0 for
//! success or a passing check, 1 for a failed check (pattern absent, target
//! not reached, verdict false), 2 for usage or input errors, 3 when a
//! search budget ran out before a definite answer.
//!
//! Graph files are read and written by extension: `.g6`/`.graph6` for the
//! untagged graph6 format, anything else as the tagged JSON document.
//! Wherever a pattern file is expected, the built-in names `K5`, `K33`,
//! `I`, `H:L` and `PATH:L` (a path with `L` edges) are also accepted. The
//! `WORKBENCH_BUDGET` environment variable overrides the default search
//! budget; a `--budget` flag overrides both.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use minor_workbench::blocks::{block_cut_tree_dot, block_decomposition};
use minor_workbench::construct::{
    build_g, build_h, build_i, column_sides, half_grid, TruncationParams,
};
use minor_workbench::graph::Graph;
use minor_workbench::io;
use minor_workbench::minor::{
    enumerate_models, find_minor_model, SearchBudget, SearchOutcome,
};
use minor_workbench::packing::{
    exact_packing, greedy_packing, packing_upper_bound_by_cut, PackingOutcome,
};
use minor_workbench::paths::{max_vertex_disjoint_paths, min_vertex_cut};
use minor_workbench::recipe::{eval_recipe, parse_recipe};
use minor_workbench::verify::{verify_lemma1, verify_proposition_lower, verify_saturation};

#[derive(Parser)]
#[command(
    name = "workbench",
    about = "Graph-minor workbench: half-grid constructions, block decomposition, \
             exact minor search, disjoint paths, packings, and verification harnesses."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a construction and write it to a graph file.
    Gen(GenArgs),
    /// Print the block decomposition of a graph.
    Blocks(BlocksArgs),
    /// Find or enumerate minor models of a pattern in a host.
    Minor(MinorArgs),
    /// Maximum vertex-disjoint paths and minimum cut between vertex sets.
    Paths(PathsArgs),
    /// Pack vertex-disjoint minor models of a pattern into a host.
    Pack(PackArgs),
    /// Run a verification harness.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Parse or evaluate a construction recipe.
    #[command(subcommand)]
    Recipe(RecipeCommand),
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    Halfgrid,
    G,
    I,
    H,
}

#[derive(Args)]
struct GenArgs {
    /// Which graph to build.
    #[arg(long, value_enum, ignore_case = true)]
    construction: Construction,
    /// Columns span -m..m (halfgrid and G).
    #[arg(long, default_value_t = 1)]
    m: usize,
    /// Rows span 0..h (halfgrid and G).
    #[arg(long, default_value_t = 1)]
    h: usize,
    /// Ray surrogate length in edges (H only).
    #[arg(long, default_value_t = 1)]
    ray: usize,
    /// Output graph file.
    #[arg(long)]
    out: PathBuf,
    /// Also write a DOT rendering here.
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Args)]
struct BlocksArgs {
    /// Graph file to decompose.
    #[arg(long)]
    host: PathBuf,
    /// Write the block-cut tree as DOT here.
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Args)]
struct MinorArgs {
    /// Pattern: built-in name or graph file.
    #[arg(long)]
    pattern: String,
    /// Host graph file.
    #[arg(long)]
    host: PathBuf,
    /// Enumerate up to N minimal models instead of finding one.
    #[arg(long, value_name = "N")]
    enumerate: Option<usize>,
    /// Search budget in expansions.
    #[arg(long, value_name = "K")]
    budget: Option<u64>,
}

#[derive(Args)]
struct PathsArgs {
    /// Host graph file.
    #[arg(long)]
    host: PathBuf,
    /// Source vertices: id list "0,3,7" or tag predicate like "col<0".
    #[arg(long)]
    sources: String,
    /// Sink vertices, same forms.
    #[arg(long)]
    sinks: String,
}

#[derive(Args)]
struct PackArgs {
    /// Pattern: built-in name or graph file.
    #[arg(long)]
    pattern: String,
    /// Host graph file.
    #[arg(long)]
    host: PathBuf,
    /// Number of disjoint models to reach.
    #[arg(long, value_name = "N")]
    target: usize,
    /// Decide the target exactly instead of greedily.
    #[arg(long)]
    exact: bool,
    /// Search budget in expansions.
    #[arg(long, value_name = "K")]
    budget: Option<u64>,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Block confinement and one-sum model decomposition on build_G(m,h).
    Lemma1 {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        h: usize,
        #[arg(long, value_name = "K")]
        budget: Option<u64>,
    },
    /// Constructive lower bound: n disjoint ray-extended models.
    Proposition {
        #[arg(long)]
        n: usize,
        /// Ray surrogate length in edges.
        #[arg(long)]
        ray: usize,
        #[arg(long, value_name = "K")]
        budget: Option<u64>,
    },
    /// Exact packing saturation table at fixed height.
    Saturation {
        #[arg(long)]
        h: usize,
        /// Check attachment counts 1..=M.
        #[arg(long, value_name = "M")]
        m_max: usize,
        #[arg(long, value_name = "K")]
        budget: Option<u64>,
    },
}

#[derive(Subcommand)]
enum RecipeCommand {
    /// Parse a recipe and print its canonical form.
    Parse {
        /// Recipe file; stdin when omitted.
        file: Option<PathBuf>,
    },
    /// Evaluate a recipe over a truncation window and write the graph.
    Eval {
        /// Recipe file; stdin when omitted.
        file: Option<PathBuf>,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        h: usize,
        /// Output graph file.
        #[arg(long)]
        out: PathBuf,
        /// Also write a DOT rendering here.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<u8, String> {
    match command {
        Command::Gen(args) => cmd_gen(args),
        Command::Blocks(args) => cmd_blocks(args),
        Command::Minor(args) => cmd_minor(args),
        Command::Paths(args) => cmd_paths(args),
        Command::Pack(args) => cmd_pack(args),
        Command::Verify(cmd) => cmd_verify(cmd),
        Command::Recipe(cmd) => cmd_recipe(cmd),
    }
}

/// Search budget from flag, environment, or default, in that priority.
fn resolve_budget(flag: Option<u64>) -> Result<SearchBudget, String> {
    if let Some(v) = flag {
        return Ok(SearchBudget::with_max_expansions(v));
    }
    match std::env::var("WORKBENCH_BUDGET") {
        Ok(s) => {
            let v: u64 = s
                .trim()
                .parse()
                .map_err(|_| format!("WORKBENCH_BUDGET is not a number: {s:?}"))?;
            Ok(SearchBudget::with_max_expansions(v))
        }
        Err(_) => Ok(SearchBudget::default()),
    }
}

fn is_graph6_path(path: &Path) -> bool {
    matches!(
        path.extension().and_then(|e| e.to_str()),
        Some("g6") | Some("graph6")
    )
}

fn read_graph(path: &Path) -> Result<Graph, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let parsed = if is_graph6_path(path) {
        io::from_graph6(text.trim_end())
    } else {
        io::from_json(&text)
    };
    parsed.map_err(|e| format!("cannot parse {}: {e}", path.display()))
}

fn write_graph(g: &Graph, path: &Path) -> Result<(), String> {
    let text = if is_graph6_path(path) {
        let mut s = io::to_graph6(g);
        s.push('\n');
        s
    } else {
        let mut s = io::to_json(g);
        s.push('\n');
        s
    };
    std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

fn write_text(text: &str, path: &Path) -> Result<(), String> {
    std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

/// Built-in pattern names, falling back to a graph file.
fn load_pattern(spec: &str) -> Result<Graph, String> {
    match spec {
        "K5" => return Ok(Graph::complete(5)),
        "K33" => return Ok(Graph::complete_bipartite(3, 3)),
        "I" => return Ok(build_i()),
        _ => {}
    }
    if let Some(rest) = spec.strip_prefix("H:") {
        let l: usize = rest.parse().map_err(|_| format!("bad ray length in {spec:?}"))?;
        return build_h(l).map_err(|e| e.to_string());
    }
    if let Some(rest) = spec.strip_prefix("PATH:") {
        let l: usize = rest.parse().map_err(|_| format!("bad path length in {spec:?}"))?;
        if l == 0 {
            return Err("PATH:L needs at least one edge".into());
        }
        return Ok(Graph::path(l + 1));
    }
    read_graph(Path::new(spec))
        .map_err(|e| format!("{e} (known built-ins: K5, K33, I, H:L, PATH:L)"))
}

/// Vertex selection: explicit id list or a row/col tag predicate.
fn select_vertices(spec: &str, g: &Graph) -> Result<Vec<usize>, String> {
    let s = spec.trim();
    if !s.is_empty() && s.chars().all(|c| c.is_ascii_digit() || c == ',' || c == ' ') {
        let mut ids = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let v: usize = part.parse().map_err(|_| format!("bad vertex id {part:?}"))?;
            if v >= g.vertex_count() {
                return Err(format!(
                    "vertex {v} out of range (host has {} vertices)",
                    g.vertex_count()
                ));
            }
            ids.push(v);
        }
        ids.sort_unstable();
        ids.dedup();
        return Ok(ids);
    }
    let (key, op, value) = parse_predicate(s)?;
    let selected: Vec<usize> = (0..g.vertex_count())
        .filter(|&v| {
            let coord = match key {
                PredKey::Col => g.tag(v).column(),
                PredKey::Row => g.tag(v).grid_pos().map(|(_, row)| row as i32),
            };
            coord.is_some_and(|c| op.holds(c, value))
        })
        .collect();
    if selected.is_empty() {
        return Err(format!("predicate {s:?} selects no vertices"));
    }
    Ok(selected)
}

#[derive(Clone, Copy)]
enum PredKey {
    Row,
    Col,
}

#[derive(Clone, Copy)]
enum PredOp {
    Lt,
    Le,
    Gt,
    Ge,
    Eq,
}

impl PredOp {
    fn holds(self, lhs: i32, rhs: i32) -> bool {
        match self {
            PredOp::Lt => lhs < rhs,
            PredOp::Le => lhs <= rhs,
            PredOp::Gt => lhs > rhs,
            PredOp::Ge => lhs >= rhs,
            PredOp::Eq => lhs == rhs,
        }
    }
}

fn parse_predicate(s: &str) -> Result<(PredKey, PredOp, i32), String> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let key = if let Some(_rest) = compact.strip_prefix("row") {
        PredKey::Row
    } else if compact.starts_with("col") {
        PredKey::Col
    } else {
        return Err(format!(
            "bad vertex spec {s:?}: expected an id list or row/col predicate like \"col<0\""
        ));
    };
    let rest = &compact[3..];
    let (op, rest) = if let Some(r) = rest.strip_prefix("<=") {
        (PredOp::Le, r)
    } else if let Some(r) = rest.strip_prefix(">=") {
        (PredOp::Ge, r)
    } else if let Some(r) = rest.strip_prefix("==") {
        (PredOp::Eq, r)
    } else if let Some(r) = rest.strip_prefix('<') {
        (PredOp::Lt, r)
    } else if let Some(r) = rest.strip_prefix('>') {
        (PredOp::Gt, r)
    } else {
        return Err(format!("bad comparison in {s:?} (use <, <=, >, >=, ==)"));
    };
    let value: i32 = rest.parse().map_err(|_| format!("bad number in {s:?}"))?;
    Ok((key, op, value))
}

fn print_json(value: &serde_json::Value) {
    use std::io::Write;
    let text = serde_json::to_string_pretty(value).expect("reports serialize");
    // Exit quietly when the reader closed the pipe (e.g. `workbench ... | head`).
    if writeln!(std::io::stdout(), "{text}").is_err() {
        std::process::exit(0);
    }
}

fn cmd_gen(args: GenArgs) -> Result<u8, String> {
    let g = match args.construction {
        Construction::Halfgrid => {
            let p = TruncationParams::new(args.m, args.h).map_err(|e| e.to_string())?;
            half_grid(&p)
        }
        Construction::G => {
            let p = TruncationParams::new(args.m, args.h).map_err(|e| e.to_string())?;
            build_g(&p)
        }
        Construction::I => build_i(),
        Construction::H => build_h(args.ray).map_err(|e| e.to_string())?,
    };
    write_graph(&g, &args.out)?;
    if let Some(dot) = &args.dot {
        write_text(&io::to_dot(&g), dot)?;
    }
    eprintln!(
        "wrote {} vertices, {} edges to {}",
        g.vertex_count(),
        g.edge_count(),
        args.out.display()
    );
    Ok(0)
}

fn cmd_blocks(args: BlocksArgs) -> Result<u8, String> {
    let g = read_graph(&args.host)?;
    let d = block_decomposition(&g);
    if let Some(dot) = &args.dot {
        write_text(&block_cut_tree_dot(&d), dot)?;
    }
    print_json(&json!({
        "blocks": d.blocks,
        "cut_vertices": d.cut_vertices,
        "tree_edges": d.tree_edges,
    }));
    eprintln!(
        "{} blocks, {} cut vertices",
        d.blocks.len(),
        d.cut_vertices.len()
    );
    Ok(0)
}

fn cmd_minor(args: MinorArgs) -> Result<u8, String> {
    let pattern = load_pattern(&args.pattern)?;
    let host = read_graph(&args.host)?;
    let budget = resolve_budget(args.budget)?;
    if let Some(cap) = args.enumerate {
        let e = enumerate_models(&pattern, &host, cap, &budget);
        let count = e.models.len();
        print_json(&json!({ "models": e.models, "complete": e.complete }));
        eprintln!("{count} minimal models (complete: {})", e.complete);
        return Ok(if count >= cap && cap > 0 {
            0
        } else if e.complete && count > 0 {
            0
        } else if e.complete {
            1
        } else {
            3
        });
    }
    match find_minor_model(&pattern, &host, &budget) {
        SearchOutcome::Found(model) => {
            print_json(&json!({ "outcome": "found", "model": model }));
            eprintln!("found a minimal model on {} host vertices", model.support().len());
            Ok(0)
        }
        SearchOutcome::Absent => {
            print_json(&json!({ "outcome": "absent" }));
            eprintln!("no model exists");
            Ok(1)
        }
        SearchOutcome::Exhausted => {
            print_json(&json!({ "outcome": "exhausted" }));
            eprintln!(
                "budget of {} expansions ran out before a definite answer",
                budget.max_expansions
            );
            Ok(3)
        }
    }
}

fn cmd_paths(args: PathsArgs) -> Result<u8, String> {
    let g = read_graph(&args.host)?;
    let sources = select_vertices(&args.sources, &g)?;
    let sinks = select_vertices(&args.sinks, &g)?;
    let family = max_vertex_disjoint_paths(&g, &sources, &sinks).map_err(|e| e.to_string())?;
    let cut = min_vertex_cut(&g, &sources, &sinks).map_err(|e| e.to_string())?;
    print_json(&json!({
        "sources": sources,
        "sinks": sinks,
        "paths": family.paths,
        "min_cut": cut.vertices,
    }));
    eprintln!(
        "{} disjoint paths, cut size {} (Menger: equal)",
        family.paths.len(),
        cut.vertices.len()
    );
    Ok(0)
}

fn cmd_pack(args: PackArgs) -> Result<u8, String> {
    if args.target == 0 {
        return Err("--target must be at least 1".into());
    }
    let pattern = load_pattern(&args.pattern)?;
    let host = read_graph(&args.host)?;
    let budget = resolve_budget(args.budget)?;
    // The column cut certifies an upper bound whenever every model must
    // cross from the negative columns to the nonnegative ones; that is the
    // case for the one-sum pattern, whose K5 side only fits on the left and
    // K3,3 side only on the right.
    let cut_certificate = if pattern == build_i() {
        let (left, right) = column_sides(&host);
        if !left.is_empty() && !right.is_empty() {
            let bound =
                packing_upper_bound_by_cut(&host, &left, &right).map_err(|e| e.to_string())?;
            Some(bound)
        } else {
            None
        }
    } else {
        None
    };
    let (label, packing, code) = if args.exact {
        match exact_packing(&pattern, &host, args.target, &budget) {
            PackingOutcome::Reached(p) => ("reached", p, 0),
            PackingOutcome::UpperBounded { best } => ("upper_bounded", best, 1),
            PackingOutcome::Exhausted => {
                print_json(&json!({ "outcome": "exhausted" }));
                eprintln!("budget or enumeration cap ran out before a decision");
                return Ok(3);
            }
        }
    } else {
        let p = greedy_packing(&pattern, &host, &budget);
        let code = if p.models.len() >= args.target { 0 } else { 1 };
        ("greedy", p, code)
    };
    print_json(&json!({
        "outcome": label,
        "target": args.target,
        "size": packing.models.len(),
        "models": packing.models,
        "cut_bound": cut_certificate,
    }));
    match cut_certificate {
        Some(bound) => eprintln!(
            "{label}: {} of {} requested (cut certificate: at most {bound})",
            packing.models.len(),
            args.target
        ),
        None => eprintln!("{label}: {} of {} requested", packing.models.len(), args.target),
    }
    Ok(code)
}

fn verdict_code(verdict: bool, inconclusive: bool) -> u8 {
    if verdict {
        0
    } else if inconclusive {
        3
    } else {
        1
    }
}

fn cmd_verify(cmd: VerifyCommand) -> Result<u8, String> {
    match cmd {
        VerifyCommand::Lemma1 { m, h, budget } => {
            let p = TruncationParams::new(m, h).map_err(|e| e.to_string())?;
            let budget = resolve_budget(budget)?;
            let report = verify_lemma1(&p, &budget).map_err(|e| e.to_string())?;
            print_json(&serde_json::to_value(&report).expect("report serializes"));
            eprintln!(
                "lemma1 m={m} h={h}: {} models decomposed, {} failed, verdict {}",
                report.decomposed_models.len(),
                report.failed_models,
                if report.verdict { "PASS" } else { "FAIL" }
            );
            Ok(verdict_code(report.verdict, report.inconclusive))
        }
        VerifyCommand::Proposition { n, ray, budget } => {
            if n == 0 || ray == 0 {
                return Err("--n and --ray must be at least 1".into());
            }
            let budget = resolve_budget(budget)?;
            let report = verify_proposition_lower(n, ray, &budget).map_err(|e| e.to_string())?;
            print_json(&serde_json::to_value(&report).expect("report serializes"));
            eprintln!(
                "proposition n={n} ray={ray}: packed {} disjoint models in G({}, {}), verdict {}",
                report.lower_packing.models.len(),
                report.params.m,
                report.params.h,
                if report.verdict { "PASS" } else { "FAIL" }
            );
            Ok(verdict_code(report.verdict, report.inconclusive))
        }
        VerifyCommand::Saturation { h, m_max, budget } => {
            if m_max == 0 {
                return Err("--m-max must be at least 1".into());
            }
            let budget = resolve_budget(budget)?;
            let ms: Vec<usize> = (1..=m_max).collect();
            let report = verify_saturation(h, &ms, &budget).map_err(|e| e.to_string())?;
            print_json(&serde_json::to_value(&report).expect("report serializes"));
            for row in &report.rows {
                eprintln!(
                    "m={:<2} packing={} cut_bound={} expected={}",
                    row.m,
                    row.packing_size.map_or_else(|| "?".into(), |s| s.to_string()),
                    row.cut_bound,
                    row.expected
                );
            }
            eprintln!(
                "saturation h={h}: verdict {}",
                if report.verdict { "PASS" } else { "FAIL" }
            );
            Ok(verdict_code(report.verdict, report.inconclusive))
        }
    }
}

fn read_recipe_text(file: Option<&Path>) -> Result<String, String> {
    match file {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display())),
        None => {
            use std::io::Read;
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| format!("cannot read stdin: {e}"))?;
            Ok(text)
        }
    }
}

fn cmd_recipe(cmd: RecipeCommand) -> Result<u8, String> {
    match cmd {
        RecipeCommand::Parse { file } => {
            let text = read_recipe_text(file.as_deref())?;
            let recipe = parse_recipe(&text).map_err(|e| e.to_string())?;
            println!("{recipe}");
            eprintln!("{} statements", recipe.statements.len());
            Ok(0)
        }
        RecipeCommand::Eval { file, m, h, out, dot } => {
            let text = read_recipe_text(file.as_deref())?;
            let recipe = parse_recipe(&text).map_err(|e| e.to_string())?;
            let p = TruncationParams::new(m, h).map_err(|e| e.to_string())?;
            let g = eval_recipe(&recipe, &p);
            write_graph(&g, &out)?;
            if let Some(dot) = &dot {
                write_text(&io::to_dot(&g), dot)?;
            }
            eprintln!(
                "evaluated {} statements: {} vertices, {} edges to {}",
                recipe.statements.len(),
                g.vertex_count(),
                g.edge_count(),
                out.display()
            );
            Ok(0)
        }
    }
}
