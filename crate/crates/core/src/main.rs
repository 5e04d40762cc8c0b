use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};

use tropex::error::SearchError;
use tropex::format::{
    parse_dimacs, parse_graph, parse_solution, parse_solution_names, write_graph, write_solution, GadgetMap, WantList,
};
use tropex::{
    add_balance_vertices, approx_jpc, brute_force_best, build_2pc_graph, build_sat_graph, is_satisfiable,
    max_satisfiable, solve, solve_max_size, ColoredDigraph, CycleSet, Objective, RunReport, SearchBudget,
    SolutionMetrics,
};

const EXIT_NO: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "tropex",
    version,
    about = "Barter-exchange clearing over vertex-colored digraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Clear a market and write the chosen cycles.
    Clear(ClearArgs),
    /// Answer a decision question; exit 0 for yes, 1 for no.
    Decide(DecideArgs),
    /// Compile a DIMACS CNF into a gadget graph and its map.
    Reduce(ReduceArgs),
    /// Read the truth assignment off a gadget solution.
    Pullback(PullbackArgs),
    /// Exhaustive ground truth for small graphs or formulas.
    Oracle(OracleArgs),
    /// Generate a seeded random graph.
    Gen(GenArgs),
    /// Check a solution against a graph.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct InputArgs {
    #[arg(long)]
    input: PathBuf,
    /// Input is a want list.
    #[arg(long, conflicts_with = "graph")]
    wantlist: bool,
    /// Input is a graph file (the default).
    #[arg(long)]
    graph: bool,
    /// Drop edges from an item to itself.
    #[arg(long)]
    no_self_trades: bool,
}

#[derive(Args)]
struct BudgetArgs {
    #[arg(long, default_value_t = 10_000_000)]
    budget_nodes: u64,
    #[arg(long, default_value_t = 60.0)]
    budget_secs: f64,
}

impl BudgetArgs {
    fn budget(&self) -> Result<SearchBudget, CliError> {
        let secs = Duration::try_from_secs_f64(self.budget_secs)
            .map_err(|_| CliError::input(format!("bad time budget {}", self.budget_secs)))?;
        Ok(SearchBudget::new(self.budget_nodes, secs))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ClearObjective {
    MaxSize,
    Tex,
    Tmaxex,
    Maxtex,
}

impl ClearObjective {
    fn objective(self) -> Objective {
        match self {
            ClearObjective::MaxSize => Objective::MaxVertices,
            ClearObjective::Tex => Objective::MaxColors,
            ClearObjective::Tmaxex => Objective::MaxColorsAmongMaxVertices,
            ClearObjective::Maxtex => Objective::MaxVerticesAmongMaxColors,
        }
    }

    fn name(self) -> &'static str {
        match self {
            ClearObjective::MaxSize => "max-size",
            ClearObjective::Tex => "tex",
            ClearObjective::Tmaxex => "tmaxex",
            ClearObjective::Maxtex => "maxtex",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Exact,
    Approx,
}

#[derive(Args)]
struct ClearArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum)]
    objective: ClearObjective,
    #[arg(long, value_enum, default_value = "exact")]
    method: Method,
    /// Exit 1 when fewer vertices are traded.
    #[arg(long)]
    min_vertices: Option<usize>,
    #[command(flatten)]
    budget: BudgetArgs,
    #[arg(long)]
    output: PathBuf,
    /// Also write a JSON run report.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum DecideObjective {
    ExchangeX,
    Tex,
    Tmaxex,
    MaxtexX,
}

#[derive(Args)]
struct DecideArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum)]
    objective: DecideObjective,
    /// Vertex threshold for exchange-x and maxtex-x.
    #[arg(long)]
    x: Option<usize>,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReduceVariant {
    Plain,
    Balanced,
    #[value(name = "2pc")]
    TwoPc,
}

#[derive(Args)]
struct ReduceArgs {
    #[arg(long)]
    cnf: PathBuf,
    #[arg(long, value_enum)]
    variant: ReduceVariant,
    #[arg(long)]
    output: PathBuf,
    #[arg(long)]
    map: PathBuf,
}

#[derive(Args)]
struct PullbackArgs {
    #[arg(long)]
    map: PathBuf,
    #[arg(long)]
    solution: PathBuf,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long, conflicts_with = "cnf", required_unless_present = "cnf")]
    graph: Option<PathBuf>,
    #[arg(long, value_enum, requires = "graph")]
    objective: Option<ClearObjective>,
    #[arg(long)]
    cnf: Option<PathBuf>,
    #[arg(long, requires = "cnf", conflicts_with = "maxsat")]
    sat: bool,
    #[arg(long, requires = "cnf")]
    maxsat: bool,
    /// Write the optimal solution (graph mode).
    #[arg(long, requires = "graph")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    vertices: usize,
    #[arg(long)]
    colors: usize,
    #[arg(long)]
    edge_prob: f64,
    #[arg(long)]
    seed: u64,
    #[arg(long)]
    output: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    solution: PathBuf,
}

#[derive(Debug)]
enum CliError {
    Input(String),
    Budget(String),
}

impl CliError {
    fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }
}

impl From<SearchError> for CliError {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            SearchError::TooLarge { .. } => CliError::Input(e.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn load_graph(args: &InputArgs) -> Result<ColoredDigraph, CliError> {
    let text = read(&args.input)?;
    let ctx = |e: tropex::error::ParseError| CliError::input(format!("{}: {e}", args.input.display()));
    let g = if args.wantlist {
        WantList::parse(&text)
            .and_then(|w| w.to_graph(args.no_self_trades))
            .map_err(ctx)?
    } else {
        parse_graph(&text).map_err(ctx)?
    };
    Ok(if args.no_self_trades && !args.wantlist {
        g.without_self_loops()
    } else {
        g
    })
}

fn load_graph_file(path: &Path) -> Result<ColoredDigraph, CliError> {
    parse_graph(&read(path)?).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

/// Validates before anything is written, so an invalid set never leaves the
/// process.
fn emit_solution(g: &ColoredDigraph, s: &CycleSet, path: &Path) -> Result<SolutionMetrics, CliError> {
    let metrics = g
        .validate(s)
        .map_err(|e| CliError::input(format!("internal error: solver produced an invalid set: {e}")))?;
    write(path, &write_solution(g, s))?;
    Ok(metrics)
}

fn clear(args: &ClearArgs) -> Result<u8, CliError> {
    let g = load_graph(&args.input)?;
    let start = Instant::now();
    let (cycles, nodes, method) = match (args.method, args.objective) {
        (Method::Approx, _) => {
            let out = approx_jpc(&g).map_err(|e| CliError::input(e.to_string()))?;
            println!(
                "guarantee: {} of the optimal color count (j = {})",
                out.guarantee, out.bound.0
            );
            (out.cycles, None, "approx")
        }
        (Method::Exact, ClearObjective::MaxSize) => (solve_max_size(&g), None, "exact"),
        (Method::Exact, obj) => {
            let out = solve(&g, obj.objective(), args.budget.budget()?)?;
            (out.cycles, Some(out.nodes), "exact")
        }
    };
    let metrics = emit_solution(&g, &cycles, &args.output)?;
    let mut report = RunReport::new(&g, &cycles, metrics, args.objective.name(), method);
    report.nodes = nodes;
    report.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    println!(
        "vertices: {}\ncolors: {}/{}\ncycles: {}",
        metrics.vertex_count,
        metrics.color_count,
        g.color_count(),
        cycles.len()
    );
    if let Some(path) = &args.report {
        write(path, &report.to_json())?;
    }
    match args.min_vertices {
        Some(x) if metrics.vertex_count < x => Ok(EXIT_NO),
        _ => Ok(0),
    }
}

fn decide(args: &DecideArgs) -> Result<u8, CliError> {
    let g = load_graph(&args.input)?;
    let budget = args.budget.budget()?;
    let need_x = || args.x.ok_or_else(|| CliError::input("this objective needs --x"));
    let yes = match args.objective {
        DecideObjective::ExchangeX => tropex::exchange_at_least(&g, need_x()?),
        DecideObjective::Tex => tropex::decide_tex(&g, budget)?,
        DecideObjective::Tmaxex => tropex::decide_tmaxex(&g, budget)?,
        DecideObjective::MaxtexX => tropex::decide_maxtex(&g, need_x()?, budget)?,
    };
    println!("{}", if yes { "yes" } else { "no" });
    Ok(if yes { 0 } else { EXIT_NO })
}

fn reduce(args: &ReduceArgs) -> Result<u8, CliError> {
    let cnf = parse_dimacs(&read(&args.cnf)?).map_err(|e| CliError::input(format!("{}: {e}", args.cnf.display())))?;
    let art = match args.variant {
        ReduceVariant::Plain => build_sat_graph(&cnf),
        ReduceVariant::Balanced => add_balance_vertices(&build_sat_graph(&cnf)),
        ReduceVariant::TwoPc => build_2pc_graph(&cnf).map_err(|e| CliError::input(e.to_string()))?,
    };
    write(&args.output, &write_graph(&art.graph))?;
    write(&args.map, &GadgetMap::from_artifact(&art).write())?;
    println!(
        "vertices: {}\nedges: {}\ncolors: {}",
        art.graph.vertex_count(),
        art.graph.edge_count(),
        art.graph.color_count()
    );
    Ok(0)
}

fn pullback(args: &PullbackArgs) -> Result<u8, CliError> {
    let map =
        GadgetMap::parse(&read(&args.map)?).map_err(|e| CliError::input(format!("{}: {e}", args.map.display())))?;
    let cycles = parse_solution_names(&read(&args.solution)?)
        .map_err(|e| CliError::input(format!("{}: {e}", args.solution.display())))?;
    let (assignment, satisfied) = map.pullback(&cycles).map_err(|e| CliError::input(e.to_string()))?;
    println!("assignment: {assignment}\nsatisfied: {satisfied}/{}", map.clauses.len());
    Ok(0)
}

fn oracle(args: &OracleArgs) -> Result<u8, CliError> {
    if let Some(path) = &args.cnf {
        let cnf = parse_dimacs(&read(path)?).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
        if args.maxsat {
            let (count, a) = max_satisfiable(&cnf).map_err(|e| CliError::input(e.to_string()))?;
            println!("max satisfied: {count}/{}\nassignment: {a}", cnf.num_clauses());
            return Ok(0);
        }
        let sat = is_satisfiable(&cnf).map_err(|e| CliError::input(e.to_string()))?;
        println!("{}", if sat { "satisfiable" } else { "unsatisfiable" });
        return Ok(if sat { 0 } else { EXIT_NO });
    }
    let path = args.graph.as_ref().expect("clap requires --graph or --cnf");
    let g = load_graph_file(path)?;
    let objective = args
        .objective
        .ok_or_else(|| CliError::input("--graph needs --objective"))?;
    let best = brute_force_best(&g, objective.objective())?;
    let metrics = match &args.output {
        Some(out) => emit_solution(&g, &best, out)?,
        None => g.validate(&best).expect("oracle emits valid sets"),
    };
    println!(
        "vertices: {}\ncolors: {}/{}",
        metrics.vertex_count,
        metrics.color_count,
        g.color_count()
    );
    Ok(0)
}

fn gen(args: &GenArgs) -> Result<u8, CliError> {
    let g = tropex::gen::gen_random(args.vertices, args.colors, args.edge_prob, args.seed)
        .map_err(|e| CliError::input(e.to_string()))?;
    write(&args.output, &write_graph(&g))?;
    Ok(0)
}

fn verify(args: &VerifyArgs) -> Result<u8, CliError> {
    let g = load_graph_file(&args.graph)?;
    let s = parse_solution(&g, &read(&args.solution)?)
        .map_err(|e| CliError::input(format!("{}: {e}", args.solution.display())))?;
    match g.validate(&s) {
        Ok(m) => {
            println!(
                "valid\nvertices: {}\ncolors: {}/{}",
                m.vertex_count,
                m.color_count,
                g.color_count()
            );
            Ok(0)
        }
        Err(e) => {
            println!("invalid: {e}");
            Ok(EXIT_NO)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Clear(a) => clear(a),
        Command::Decide(a) => decide(a),
        Command::Reduce(a) => reduce(a),
        Command::Pullback(a) => pullback(a),
        Command::Oracle(a) => oracle(a),
        Command::Gen(a) => gen(a),
        Command::Verify(a) => verify(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(CliError::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_BUDGET)
        }
    }
}
