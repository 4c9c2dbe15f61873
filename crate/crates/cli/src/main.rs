//! Command-line front end for the reconfiguration toolkit.
//!
//! Subcommands: `solve` decides reachability, `kernelize` writes the reduced
//! instance family plus its removal ledger, `enumerate-minimal` lists all
//! minimal solutions up to the capacity, `gen-gadget` emits a generated
//! instance with a predicted answer, and `validate` checks a step sequence.
//!
//! Exit codes: 0 yes/valid, 1 no/invalid, 2 usage or parse error, 3 search
//! budget exhausted.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use reconf_core::fvs::{kernelize_fvs, solve_fvs_reconfiguration_with};
use reconf_core::gadgets::{
    gen_clique_cluster_gadget, gen_domset_gadget, gen_minmax_gadget, has_clique,
    has_dominating_set, has_property_subset, CriticalGraph, GadgetRecipe, HereditaryProperty,
    Reduction,
};
use reconf_core::io;
use reconf_core::kernel::{generate_reduced_instances, solve_via_full_kernel_with};
use reconf_core::minimal::{compute_m, enumerate_minimal_solutions};
use reconf_core::oracle::{
    bfs_reconfigure_with, touch_once_solve_with, SearchBudget, SearchResult,
};
use reconf_core::{
    partition_instance, Error, MultiGraph, ProblemKind, ReconfigurationInstance,
    ReconfigurationSequence, Structure, Variant,
};

#[derive(Parser)]
#[command(name = "reconf", version, about = "Reconfiguration of subset problems under single-element steps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the target is reachable from the source within budget.
    Solve(SolveArgs),
    /// Write the reduced-instance family and its removal ledger.
    Kernelize(KernelizeArgs),
    /// List all minimal solutions of size at most k, smallest first.
    EnumerateMinimal(EnumerateArgs),
    /// Generate a structured instance together with its predicted answer.
    GenGadget(GadgetArgs),
    /// Check a reconfiguration sequence against an instance.
    Validate(ValidateArgs),
}

fn parse_kind(s: &str) -> Result<ProblemKind, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = reconf_core::instance::ALL_KINDS.iter().map(|k| k.token()).collect();
        format!("unknown problem kind; expected one of {}", names.join(", "))
    })
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    s.parse().map_err(|_| "expected `deletion` or `subset`".to_string())
}

#[derive(Args)]
struct StructureArgs {
    /// Problem kind, e.g. vertex-cover or feedback-vertex-set.
    #[arg(long, value_parser = parse_kind)]
    problem: ProblemKind,
    /// Variant sanity check; every kind implies its variant.
    #[arg(long, value_parser = parse_variant)]
    variant: Option<Variant>,
    /// Graph file (`p <n> <m>` header, `e <u> <v>` lines).
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Set-family file (`f <n> <m>` header, `<size> <elem>...` lines).
    #[arg(long)]
    family: Option<PathBuf>,
    /// Tournament file (`t <n>` header, `a <u> <v>` lines).
    #[arg(long)]
    tournament: Option<PathBuf>,
    /// DIMACS CNF file.
    #[arg(long)]
    cnf: Option<PathBuf>,
}

#[derive(Args)]
struct InstanceArgs {
    #[command(flatten)]
    structure: StructureArgs,
    /// File holding the source solution, one line of ids.
    #[arg(long)]
    source: PathBuf,
    /// File holding the target solution, one line of ids.
    #[arg(long)]
    target: PathBuf,
    /// Capacity: maximum (deletion) or minimum (subset) solution size.
    #[arg(short = 'k')]
    k: u32,
    /// Budget: maximum number of steps.
    #[arg(short = 'l')]
    l: u32,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Oracle,
    TouchOnce,
    Kernel,
    Auto,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    /// Solving strategy; auto picks a fast path when one applies.
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    method: Method,
    /// Node-expansion cap for every search.
    #[arg(long, default_value_t = 10_000_000)]
    budget: usize,
    /// Universe size above which auto prefers the kernel path
    /// (default 2·(k+l)).
    #[arg(long)]
    kernel_threshold: Option<u32>,
    /// Directory for the witness sequence file; written only on YES.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct KernelizeArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    /// Directory for the reduced instances and the ledger.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(flatten)]
    structure: StructureArgs,
    /// Size bound for the enumerated minimal solutions.
    #[arg(short = 'k')]
    k: u32,
    /// Write the list to <out>/minimal.txt instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Construction {
    #[value(name = "minmax")]
    MinMax,
    #[value(name = "clique-cluster")]
    CliqueCluster,
    #[value(name = "domset")]
    DomSet,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PropertyArg {
    Edgeless,
    Forest,
    Bipartite,
}

impl PropertyArg {
    fn property(self) -> HereditaryProperty {
        match self {
            PropertyArg::Edgeless => HereditaryProperty::Edgeless,
            PropertyArg::Forest => HereditaryProperty::Forest,
            PropertyArg::Bipartite => HereditaryProperty::Bipartite,
        }
    }
}

#[derive(Args)]
struct GadgetArgs {
    /// Construction to generate.
    #[arg(long, value_enum)]
    construction: Construction,
    /// Source graph whose question the emitted instance encodes.
    #[arg(long)]
    graph: PathBuf,
    /// k for minmax; t for the clique and dominating-set constructions.
    #[arg(long)]
    parameter: u32,
    /// Target property for the minmax construction.
    #[arg(long, value_enum, default_value_t = PropertyArg::Edgeless)]
    property: PropertyArg,
    /// Directory for instance.txt and prediction.txt.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct ValidateArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    /// File holding one `+<id>` or `-<id>` step per line.
    #[arg(long)]
    sequence: PathBuf,
}

struct CliFailure {
    code: u8,
    message: String,
}

impl CliFailure {
    fn usage(message: impl Into<String>) -> Self {
        CliFailure { code: 2, message: message.into() }
    }

    fn of(err: Error) -> Self {
        let code = match err {
            Error::BudgetExhausted(_) => 3,
            _ => 2,
        };
        CliFailure { code, message: err.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(command: Command) -> Result<u8, CliFailure> {
    match command {
        Command::Solve(args) => run_solve(args),
        Command::Kernelize(args) => run_kernelize(args),
        Command::EnumerateMinimal(args) => run_enumerate(args),
        Command::GenGadget(args) => run_gadget(args),
        Command::Validate(args) => run_validate(args),
    }
}

fn read(path: &Path) -> Result<String, CliFailure> {
    std::fs::read_to_string(path)
        .map_err(|e| CliFailure::usage(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, content: &str) -> Result<(), CliFailure> {
    std::fs::write(path, content)
        .map_err(|e| CliFailure::usage(format!("cannot write {}: {e}", path.display())))
}

fn make_dir(path: &Path) -> Result<(), CliFailure> {
    std::fs::create_dir_all(path)
        .map_err(|e| CliFailure::usage(format!("cannot create {}: {e}", path.display())))
}

fn build_structure(args: &StructureArgs) -> Result<Structure, CliFailure> {
    let mut given = Vec::new();
    if let Some(p) = &args.graph {
        given.push(("--graph", p));
    }
    if let Some(p) = &args.family {
        given.push(("--family", p));
    }
    if let Some(p) = &args.tournament {
        given.push(("--tournament", p));
    }
    if let Some(p) = &args.cnf {
        given.push(("--cnf", p));
    }
    let (flag, path) = match given.as_slice() {
        [one] => *one,
        _ => {
            return Err(CliFailure::usage(
                "exactly one of --graph, --family, --tournament, --cnf is required",
            ))
        }
    };
    let text = read(path)?;
    let structure = match flag {
        "--graph" => Structure::Graph(io::parse_graph(&text).map_err(CliFailure::of)?),
        "--family" => Structure::Family(io::parse_family(&text).map_err(CliFailure::of)?),
        "--tournament" => {
            Structure::Tournament(io::parse_tournament(&text).map_err(CliFailure::of)?)
        }
        _ => Structure::Cnf(io::parse_cnf(&text).map_err(CliFailure::of)?),
    };
    Ok(structure)
}

fn build_instance(args: &InstanceArgs) -> Result<ReconfigurationInstance, CliFailure> {
    let kind = args.structure.problem;
    if let Some(variant) = args.structure.variant {
        if variant != kind.variant() {
            return Err(CliFailure::of(Error::VariantMismatch {
                kind: kind.token(),
                variant: variant.token(),
            }));
        }
    }
    let structure = build_structure(&args.structure)?;
    let source = io::parse_vertex_set(&read(&args.source)?).map_err(CliFailure::of)?;
    let target = io::parse_vertex_set(&read(&args.target)?).map_err(CliFailure::of)?;
    ReconfigurationInstance::new(kind, structure, source, target, args.k, args.l)
        .map_err(CliFailure::of)
}

/// Can the kernel path solve this instance at all?
fn kernel_supported(inst: &ReconfigurationInstance) -> bool {
    match (inst.kind(), inst.structure()) {
        (ProblemKind::FeedbackVertexSet, _) => true,
        (ProblemKind::MinWeightSat, Structure::Cnf(f)) => f.is_monotone(),
        (kind, _) => kind.enumerable() && kind.superset_closed(),
    }
}

fn choose_method(
    requested: Method,
    inst: &ReconfigurationInstance,
    threshold: Option<u32>,
) -> Method {
    if requested != Method::Auto {
        return requested;
    }
    let part = partition_instance(inst);
    if inst.l() <= part.s_d.len() + part.t_a.len() {
        return Method::TouchOnce;
    }
    let threshold = threshold.unwrap_or(2 * (inst.k() + inst.l()));
    if kernel_supported(inst) && inst.universe() > threshold {
        return Method::Kernel;
    }
    Method::Oracle
}

fn solve_kernel(
    inst: &ReconfigurationInstance,
    budget: SearchBudget,
) -> reconf_core::Result<SearchResult> {
    if inst.kind() == ProblemKind::FeedbackVertexSet {
        solve_fvs_reconfiguration_with(inst, budget)
    } else {
        solve_via_full_kernel_with(inst, budget)
    }
}

fn run_solve(args: SolveArgs) -> Result<u8, CliFailure> {
    let inst = build_instance(&args.instance)?;
    let budget = SearchBudget { max_expansions: args.budget };
    let result = match choose_method(args.method, &inst, args.kernel_threshold) {
        Method::Oracle => bfs_reconfigure_with(&inst, budget),
        Method::TouchOnce => touch_once_solve_with(&inst, budget),
        Method::Kernel => solve_kernel(&inst, budget),
        Method::Auto => unreachable!("auto resolves to a concrete method"),
    }
    .map_err(CliFailure::of)?;
    if !result.reachable {
        println!("NO");
        return Ok(1);
    }
    let distance = result.distance.expect("reachable results carry a distance");
    let sequence = result.sequence.expect("reachable results carry a sequence");
    println!("YES {distance}");
    let text = io::serialize_sequence(&sequence.steps);
    match &args.out {
        Some(dir) => {
            make_dir(dir)?;
            write_file(&dir.join("sequence.txt"), &text)?;
        }
        None => print!("{text}"),
    }
    Ok(0)
}

fn write_reduced(
    dir: &Path,
    e: u32,
    l_e: i64,
    instance: &Option<ReconfigurationInstance>,
) -> Result<(), CliFailure> {
    let content = match instance {
        Some(inst) => io::serialize_instance(inst),
        None => format!("c trivially no: reduced budget {l_e} is negative\n"),
    };
    write_file(&dir.join(format!("instance-e{e}.txt")), &content)
}

fn run_kernelize(args: KernelizeArgs) -> Result<u8, CliFailure> {
    let inst = build_instance(&args.instance)?;
    make_dir(&args.out)?;
    let instance_count;
    let mut ledger = String::new();
    if inst.kind() == ProblemKind::FeedbackVertexSet {
        let kernel = kernelize_fvs(&inst).map_err(CliFailure::of)?;
        for entry in &kernel.state.ledger().entries {
            ledger.push_str(&format!(
                "drop {} reason={} rule={}\n",
                entry.vertex,
                entry.category.token(),
                entry.rule
            ));
        }
        for reduced in &kernel.instances {
            write_reduced(&args.out, reduced.e, reduced.l_e, &reduced.instance)?;
        }
        instance_count = kernel.instances.len();
    } else if kernel_supported(&inst) {
        let minimals = enumerate_minimal_solutions(inst.kind(), inst.structure(), inst.k())
            .map_err(CliFailure::of)?;
        let m = compute_m(&minimals);
        let family = generate_reduced_instances(&inst, m).map_err(CliFailure::of)?;
        let part = partition_instance(&inst);
        for e in family.dropped.iter() {
            ledger.push_str(&format!("drop {e} reason=capacity-freed\n"));
        }
        for e in part.s_d.difference(m).iter() {
            ledger.push_str(&format!("drop {e} reason=source-removed\n"));
        }
        for e in part.t_a.difference(m).iter() {
            ledger.push_str(&format!("drop {e} reason=target-removed\n"));
        }
        for reduced in &family.instances {
            write_reduced(&args.out, reduced.e, reduced.l_e, &reduced.instance)?;
        }
        instance_count = family.instances.len();
    } else {
        return Err(CliFailure::usage(format!(
            "kernelize does not support {}",
            inst.kind().token()
        )));
    }
    write_file(&args.out.join("ledger.txt"), &ledger)?;
    println!("instances {instance_count}");
    Ok(0)
}

fn run_enumerate(args: EnumerateArgs) -> Result<u8, CliFailure> {
    let kind = args.structure.problem;
    let structure = build_structure(&args.structure)?;
    let minimals =
        enumerate_minimal_solutions(kind, &structure, args.k).map_err(CliFailure::of)?;
    let mut text = String::new();
    for solution in &minimals.solutions {
        text.push_str(&io::serialize_vertex_set(*solution));
    }
    match &args.out {
        Some(dir) => {
            make_dir(dir)?;
            write_file(&dir.join("minimal.txt"), &text)?;
        }
        None => print!("{text}"),
    }
    Ok(0)
}

fn binomial_capped(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(u128::from(n - i)) / u128::from(i + 1);
        if acc > 1_000_000 {
            return u128::MAX;
        }
    }
    acc
}

fn run_gadget(args: GadgetArgs) -> Result<u8, CliFailure> {
    if args.parameter < 1 {
        return Err(CliFailure::usage("--parameter must be at least 1"));
    }
    let g: MultiGraph = io::parse_graph(&read(&args.graph)?).map_err(CliFailure::of)?;
    if !g.is_simple() {
        return Err(CliFailure::usage("gadget source graphs must be simple"));
    }
    let t = args.parameter;
    let affordable = binomial_capped(g.n(), t) <= 200_000;
    let property = args.property.property();
    let (recipe, answer): (GadgetRecipe, Option<bool>) = match args.construction {
        Construction::MinMax => {
            let h = match property {
                HereditaryProperty::Edgeless => CriticalGraph::single_edge(),
                p => CriticalGraph::triangle(p).map_err(CliFailure::of)?,
            };
            let recipe = gen_minmax_gadget(&g, t, &h).map_err(CliFailure::of)?;
            let answer = affordable.then(|| has_property_subset(&g, property, t));
            (recipe, answer)
        }
        Construction::CliqueCluster => {
            let recipe = gen_clique_cluster_gadget(&g, t).map_err(CliFailure::of)?;
            (recipe, affordable.then(|| has_clique(&g, t)))
        }
        Construction::DomSet => {
            let recipe = gen_domset_gadget(&g, t).map_err(CliFailure::of)?;
            (recipe, affordable.then(|| has_dominating_set(&g, t)))
        }
    };
    let verdict = match answer {
        Some(true) => "yes",
        Some(false) => "no",
        None => "unknown",
    };
    let mut sidecar = format!("predict {verdict} source={}\n", recipe.predicted_equivalence);
    if recipe.reduction == Reduction::MinMax {
        let subset_capacity = (recipe.emitted.universe() - g.n()) - t;
        sidecar.push_str(&format!("c subset-variant capacity {subset_capacity}\n"));
    }
    make_dir(&args.out)?;
    write_file(&args.out.join("instance.txt"), &io::serialize_instance(&recipe.emitted))?;
    write_file(&args.out.join("prediction.txt"), &sidecar)?;
    println!("predict {verdict} source={}", recipe.predicted_equivalence);
    Ok(0)
}

fn run_validate(args: ValidateArgs) -> Result<u8, CliFailure> {
    let inst = build_instance(&args.instance)?;
    let steps = io::parse_sequence(&read(&args.sequence)?).map_err(CliFailure::of)?;
    let sequence = ReconfigurationSequence::new(inst.source(), steps);
    let report = reconf_core::validate_sequence(&inst, &sequence);
    match report.failure {
        None => {
            println!("valid length {}", report.length);
            Ok(0)
        }
        Some((0, why)) => {
            println!("invalid: {why}");
            Ok(1)
        }
        Some((step, why)) => {
            println!("invalid at step {step}: {why}");
            Ok(1)
        }
    }
}
