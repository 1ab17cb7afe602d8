use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gsur::constructions::{construct, Method};
use gsur::gabriel::{gabriel_graph, spanning_tree};
use gsur::instances::{
    gen_2k_tightness, gen_embedded_line, gen_from_set_cover, gen_m_restricted_family, gen_prefix_family,
    NamedInstance,
};
use gsur::io::{CoverDoc, InstanceDoc, SetCoverDoc, SolutionDoc};
use gsur::model::first_uncovered;
use gsur::random_sim::{run_experiment, Model};
use gsur::solver::{build_coverage, exact_cover, extract_set_cover, greedy_cover, reduce_from_set_cover, CandidateSet};
use gsur::{Error, Range};

const EXIT_VERIFY: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_HYPOTHESIS: u8 = 3;
const EXIT_INFEASIBLE: u8 = 4;
const EXIT_BUDGET: u8 = 5;

#[derive(Parser)]
#[command(name = "gsur", version, about = "Balanced range systems for bicolored point sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance document.
    Gen(GenArgs),
    /// Build a G-SUR with one of the direct constructions.
    Construct(ConstructArgs),
    /// Find a small G-SUR over a candidate family.
    Solve(SolveArgs),
    /// Reduce a set cover document to an interval instance, or map a solution back.
    Reduce(ReduceArgs),
    /// Print the Gabriel graph as an edge list.
    Gabriel(GabrielArgs),
    /// Random coloring experiments as CSV.
    Simulate(SimulateArgs),
    /// Check that every bicoloring has a balanced range in a solution.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Prefix,
    MRestricted,
    #[value(name = "2k-tight")]
    TwoKTight,
    EmbeddedLine,
    FromSetCover,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 2)]
    d: usize,
    /// Comma-separated direction for embedded-line; defaults to the first axis.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    direction: Option<Vec<f64>>,
    #[arg(long)]
    set_cover: Option<PathBuf>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Adjacent,
    Size2k,
    MRestricted,
    Balls,
    Boxes,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long)]
    instance: PathBuf,
    #[arg(long, value_enum)]
    method: MethodArg,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long)]
    instance: PathBuf,
    #[arg(long, conflicts_with = "greedy", required_unless_present = "greedy")]
    exact: bool,
    #[arg(long)]
    greedy: bool,
    /// all-intervals, adjacent, pairs-2k=K, diametral-balls or file=PATH.
    #[arg(long, default_value = "all-intervals")]
    candidates: String,
    /// Largest cover size to accept; defaults to the number of distinct bicolorings.
    #[arg(long)]
    budget: Option<usize>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ReduceArgs {
    #[arg(long)]
    set_cover: PathBuf,
    /// Solution of the reduced instance to map back to a set cover.
    #[arg(long)]
    solution: Option<PathBuf>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct GabrielArgs {
    #[arg(long)]
    instance: PathBuf,
    /// Print the BFS spanning tree instead of the whole graph.
    #[arg(long)]
    tree: bool,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Discrete,
    Continuous,
}

#[derive(Args)]
struct SimulateArgs {
    #[arg(long, value_enum)]
    model: ModelArg,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    summary_only: bool,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    instance: PathBuf,
    #[arg(long)]
    solution: PathBuf,
}

/// An error with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::NonQualifyingBicoloring(_) | Error::NotMRestricted { .. } | Error::NoSeparatingAxis => {
                EXIT_HYPOTHESIS
            }
            Error::InfeasibleRow(_) => EXIT_INFEASIBLE,
            Error::BudgetExceeded(_) => EXIT_BUDGET,
            _ => EXIT_INPUT,
        };
        Failure { code, message: e.to_string() }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_INPUT, message: message.into() }
}

type CmdResult = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn write(output: Option<&Path>, text: &str) -> CmdResult {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| input_error(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn need<T>(value: Option<T>, flag: &str) -> Result<T, Failure> {
    value.ok_or_else(|| input_error(format!("--{flag} is required here")))
}

fn load_instance(path: &Path) -> Result<(InstanceDoc, gsur::PointSet, gsur::BicoloringFamily), Failure> {
    let doc = InstanceDoc::parse(&read(path)?)?;
    let (ps, fam) = doc.instance()?;
    Ok((doc, ps, fam))
}

fn load_set_cover(path: &Path) -> Result<gsur::solver::SetCoverInstance, Failure> {
    Ok(SetCoverDoc::parse(&read(path)?)?.instance()?)
}

fn cmd_gen(a: GenArgs) -> CmdResult {
    let named: NamedInstance;
    let doc = match a.family {
        Family::Prefix => {
            named = gen_prefix_family(need(a.n, "n")?)?;
            InstanceDoc::from_named(&named)
        }
        Family::MRestricted => {
            named = gen_m_restricted_family(need(a.n, "n")?, need(a.m, "m")?)?;
            InstanceDoc::from_named(&named)
        }
        Family::TwoKTight => {
            named = gen_2k_tightness(need(a.k, "k")?)?;
            InstanceDoc::from_named(&named)
        }
        Family::EmbeddedLine => {
            let direction = a.direction.unwrap_or_else(|| {
                let mut e = vec![0.0; a.d];
                if let Some(x) = e.first_mut() {
                    *x = 1.0;
                }
                e
            });
            named = gen_embedded_line(need(a.n, "n")?, a.d, &direction)?;
            InstanceDoc::from_named(&named)
        }
        Family::FromSetCover => {
            let sc = load_set_cover(&need(a.set_cover, "set-cover")?)?;
            named = gen_from_set_cover(&sc);
            let mut doc = InstanceDoc::from_named(&named);
            doc.pair_index = Some(reduce_from_set_cover(&sc).pair_index);
            doc
        }
    };
    write(a.output.as_deref(), &doc.render())
}

fn cmd_construct(a: ConstructArgs) -> CmdResult {
    let (_, ps, fam) = load_instance(&a.instance)?;
    let method = match a.method {
        MethodArg::Adjacent => Method::Adjacent,
        MethodArg::Size2k => Method::Size2k { k: need(a.k, "k")? },
        MethodArg::MRestricted => Method::MRestricted { m: need(a.m, "m")? },
        MethodArg::Balls => Method::Balls,
        MethodArg::Boxes => Method::Boxes,
    };
    let gsur = construct(method, &ps, &fam)?;
    if let Some(bi) = gsur.first_invalid(&ps, &fam)? {
        return Err(Failure { code: EXIT_VERIFY, message: format!("bicoloring {bi} failed its certificate") });
    }
    write(a.output.as_deref(), &SolutionDoc::new(method.name(), &gsur, true).render())
}

fn parse_candidates(spec: &str) -> Result<CandidateSet, Failure> {
    Ok(match spec {
        "all-intervals" => CandidateSet::AllIntervals,
        "adjacent" => CandidateSet::Adjacent,
        "diametral-balls" => CandidateSet::DiametralBalls,
        _ => {
            if let Some(k) = spec.strip_prefix("pairs-2k=") {
                let k = k.parse().map_err(|_| input_error(format!("bad window parameter in {spec:?}")))?;
                CandidateSet::Windows { k }
            } else if let Some(path) = spec.strip_prefix("file=") {
                let text = read(Path::new(path))?;
                let ranges: Vec<Range> = serde_json::from_str(&text)
                    .map_err(|e| input_error(format!("{path}: malformed range list: {e}")))?;
                CandidateSet::Explicit(ranges)
            } else {
                return Err(input_error(format!("unknown candidate set {spec:?}")));
            }
        }
    })
}

fn cmd_solve(a: SolveArgs) -> CmdResult {
    let (_, ps, fam) = load_instance(&a.instance)?;
    let candidates = parse_candidates(&a.candidates)?.ranges(&ps)?;
    let start = Instant::now();
    let cm = build_coverage(&ps, &fam, candidates)?;
    let uncoverable = cm.uncoverable();
    if !uncoverable.is_empty() {
        return Err(Error::InfeasibleRow(uncoverable).into());
    }
    let budget = a.budget.unwrap_or(cm.rows());
    let (method, gsur) = if a.exact {
        ("exact", exact_cover(&cm, budget)?)
    } else {
        let g = greedy_cover(&cm)?;
        if g.size() > budget {
            return Err(Error::BudgetExceeded(budget).into());
        }
        ("greedy", g)
    };
    eprintln!("runtime: {:.3} s", start.elapsed().as_secs_f64());
    let verified = gsur.is_valid(&ps, &fam)?;
    let mut doc = SolutionDoc::new(method, &gsur, verified);
    doc.optimal = Some(a.exact);
    write(a.output.as_deref(), &doc.render())?;
    if verified {
        Ok(())
    } else {
        Err(Failure { code: EXIT_VERIFY, message: "solution failed verification".into() })
    }
}

fn cmd_reduce(a: ReduceArgs) -> CmdResult {
    let sc = load_set_cover(&a.set_cover)?;
    let ro = reduce_from_set_cover(&sc);
    let Some(solution) = a.solution else {
        return write(a.output.as_deref(), &InstanceDoc::from_reduction(&ro).render());
    };
    let gsur = SolutionDoc::parse(&read(&solution)?)?.gsur()?;
    if let Some(bi) = first_uncovered(&gsur.ranges, &ro.ps, &ro.fam)? {
        return Err(Failure { code: EXIT_VERIFY, message: format!("bicoloring {bi} has no balanced range") });
    }
    let sets = extract_set_cover(&ro, &gsur)?;
    if !sc.is_cover(&sets) {
        return Err(Failure { code: EXIT_VERIFY, message: format!("extracted sets {sets:?} are not a cover") });
    }
    write(a.output.as_deref(), &CoverDoc::new(sets).render())
}

fn cmd_gabriel(a: GabrielArgs) -> CmdResult {
    let (_, ps, _) = load_instance(&a.instance)?;
    let gg = gabriel_graph(&ps);
    for c in &gg.boundary_contacts {
        eprintln!("boundary contact: point {} on the diametral sphere of {} {}", c.witness, c.edge.0, c.edge.1);
    }
    let graph = if a.tree { spanning_tree(&gg.graph)? } else { gg.graph };
    write(a.output.as_deref(), &graph.to_edge_list())
}

fn cmd_simulate(a: SimulateArgs) -> CmdResult {
    let model = match a.model {
        ModelArg::Discrete => Model::Discrete,
        ModelArg::Continuous => Model::Continuous,
    };
    let exp = run_experiment(model, a.m, a.n, a.trials, a.seed)?;
    write(a.output.as_deref(), &exp.to_csv(a.summary_only))
}

fn cmd_verify(a: VerifyArgs) -> CmdResult {
    let (_, ps, fam) = load_instance(&a.instance)?;
    let gsur = SolutionDoc::parse(&read(&a.solution)?)?.gsur()?;
    match first_uncovered(&gsur.ranges, &ps, &fam)? {
        None => {
            println!("ok: {} bicolorings, {} ranges", fam.len(), gsur.size());
            Ok(())
        }
        Some(bi) => Err(Failure { code: EXIT_VERIFY, message: format!("bicoloring {bi} has no balanced range") }),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Construct(a) => cmd_construct(a),
        Command::Solve(a) => cmd_solve(a),
        Command::Reduce(a) => cmd_reduce(a),
        Command::Gabriel(a) => cmd_gabriel(a),
        Command::Simulate(a) => cmd_simulate(a),
        Command::Verify(a) => cmd_verify(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
