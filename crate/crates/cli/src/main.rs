//! `rcg`: rainbow connection numbers of commuting graphs from the command
//! line. Exit codes: 0 success, 1 falsification or failed verification,
//! 2 usage error.

mod output;
mod suite;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rcg_core::commuting::isolated_involutions;
use rcg_core::construct::{
    color_nontrivial_center, color_pstar, color_trivial_center_small_t, color_trivial_center_t,
    color_tuple_two, ConstructionReport, Scheme,
};
use rcg_core::rainbow::{is_rainbow_connected, ColoringFile, EdgeColoring};
use rcg_core::{
    classify_rc, commuting_graph, cross_check, families, maximal_abelian_subgroups, FiniteGroup,
    SearchConfig, UndirectedGraph,
};

use output::{human_verdict, verdict_json};

#[derive(Parser)]
#[command(
    name = "rcg",
    version,
    about = "Rainbow connection numbers of commuting graphs of finite groups",
    after_help = "GROUP SPECS:\n  cyclic:N  dihedral:N  semidihedral:N  quaternion:N  symmetric:N  alternating:N\n  product:SPEC,SPEC[,...]   or a path to a Cayley table JSON file\n\nENVIRONMENT:\n  RCG_MAX_NODES   default backtracking node budget for the exact solver"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit machine-readable JSON instead of human text
    #[arg(long, global = true)]
    json: bool,

    /// Edge-count cap for the exact search (default 20)
    #[arg(long, global = true, value_name = "N")]
    max_search_edges: Option<usize>,

    /// Backtracking node budget (default 10000000, or RCG_MAX_NODES)
    #[arg(long, global = true, value_name = "N")]
    max_nodes: Option<u64>,

    /// Worker threads for the exact search and the suite (default 1)
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    /// Reserved; validated and ignored (no randomized components)
    #[arg(long, global = true, value_name = "SEED")]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Order, center, involutions and subgroup catalog of a group
    GroupInfo { spec: String },
    /// Maximal abelian subgroup catalog with the intersection table
    Mas { spec: String },
    /// Rainbow connection number of the commuting graph
    Rc {
        spec: String,
        /// classify: structural rules; exact: backtracking solver; both:
        /// run both and cross-check
        #[arg(long, value_enum, default_value_t = Mode::Classify)]
        mode: Mode,
    },
    /// Emit a verified coloring for one of the numbered schemes
    Construct {
        spec: String,
        /// Scheme tag: 3a, 3b, 4, 5 or 7
        #[arg(long)]
        theorem: String,
        /// Write the report here instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Export the commuting graph as DOT or JSON, optionally colored
    Export {
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        /// Coloring source: theorem:TAG, classify, or file:PATH
        #[arg(long)]
        coloring: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a coloring file against a group spec or graph JSON file
    Verify {
        /// Group spec or a graph JSON file path
        target: String,
        #[arg(long, value_name = "FILE")]
        coloring: PathBuf,
    },
    /// Write the Cayley table file for a group spec
    Cayley {
        spec: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Batch certification over the built-in families
    Suite {
        /// Dihedral parameter range, e.g. 3..12
        #[arg(long, value_parser = parse_range, default_value = "3..12")]
        dihedral: (usize, usize),
        #[arg(long, value_parser = parse_range, default_value = "2..6")]
        semidihedral: (usize, usize),
        #[arg(long, value_parser = parse_range, default_value = "2..8")]
        quaternion: (usize, usize),
        #[arg(long, value_parser = parse_range, default_value = "3..5")]
        alternating: (usize, usize),
        /// Optional symmetric range, e.g. 3..4
        #[arg(long, value_parser = parse_range)]
        symmetric: Option<(usize, usize)>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Classify,
    Exact,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected A..B, got '{s}'"))?;
    let a: usize = a.trim().parse().map_err(|_| format!("bad start '{a}'"))?;
    let b: usize = b.trim().parse().map_err(|_| format!("bad end '{b}'"))?;
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok((a, b))
}

/// Command failures sorted by exit code contract.
pub enum CliError {
    /// Bad spec, unreadable file, unsatisfied scheme precondition: exit 2.
    Usage(String),
    /// Cross-check mismatch or failed verification: exit 1.
    Falsified(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Falsified(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Falsified(m) => m,
        }
    }
}

fn usage<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn search_config(cli: &Cli) -> SearchConfig {
    let mut cfg = SearchConfig::default();
    if let Ok(nodes) = std::env::var("RCG_MAX_NODES") {
        if let Ok(nodes) = nodes.parse() {
            cfg.max_nodes = nodes;
        }
    }
    if let Some(edges) = cli.max_search_edges {
        cfg.max_search_edges = edges;
    }
    if let Some(nodes) = cli.max_nodes {
        cfg.max_nodes = nodes;
    }
    if let Some(threads) = cli.threads {
        cfg.threads = threads.max(1);
    }
    cfg
}

fn load_group(spec: &str) -> Result<FiniteGroup, CliError> {
    families::resolve_spec(spec).map_err(usage)
}

fn write_or_print(output: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match output {
        Some(path) => {
            std::fs::write(path, text).map_err(usage)?;
            eprintln!("wrote {}", path.display());
            Ok(())
        }
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::GroupInfo { spec } => group_info(cli, spec),
        Command::Mas { spec } => mas(cli, spec),
        Command::Rc { spec, mode } => rc(cli, spec, *mode),
        Command::Construct {
            spec,
            theorem,
            output,
        } => construct(spec, theorem, output),
        Command::Export {
            spec,
            format,
            coloring,
            output,
        } => export(spec, *format, coloring.as_deref(), output),
        Command::Verify { target, coloring } => verify(cli, target, coloring),
        Command::Cayley { spec, output } => {
            let group = load_group(spec)?;
            write_or_print(output, &group.to_cayley_json())
        }
        Command::Suite {
            dihedral,
            semidihedral,
            quaternion,
            alternating,
            symmetric,
        } => {
            let mut specs = Vec::new();
            for n in dihedral.0..=dihedral.1 {
                specs.push(format!("dihedral:{n}"));
            }
            for n in semidihedral.0..=semidihedral.1 {
                specs.push(format!("semidihedral:{n}"));
            }
            for n in quaternion.0..=quaternion.1 {
                specs.push(format!("quaternion:{n}"));
            }
            for n in alternating.0..=alternating.1 {
                specs.push(format!("alternating:{n}"));
            }
            if let Some((a, b)) = symmetric {
                for n in *a..=*b {
                    specs.push(format!("symmetric:{n}"));
                }
            }
            suite::run_suite(&specs, &search_config(cli), cli.json)
        }
    }
}

fn group_info(cli: &Cli, spec: &str) -> Result<(), CliError> {
    let group = load_group(spec)?;
    let catalog = maximal_abelian_subgroups(&group).map_err(usage)?;
    let center = group.center();
    let involutions = group.involutions();
    let isolated = isolated_involutions(&group);
    if cli.json {
        let value = serde_json::json!({
            "spec": spec,
            "order": group.order(),
            "abelian": group.is_abelian(),
            "center": group.set_names(&center),
            "involutions": group.set_names(&involutions),
            "isolated_involutions": group.set_names(&isolated),
            "mas": catalog.subgroups.iter().map(|s| group.set_names(s)).collect::<Vec<_>>(),
            "order2_count": catalog.order2_count,
        });
        println!("{}", serde_json::to_string_pretty(&value).expect("json"));
        return Ok(());
    }
    println!("group {spec} (order {})", group.order());
    println!("abelian: {}", if group.is_abelian() { "yes" } else { "no" });
    println!(
        "center ({}): {}",
        center.len(),
        group.set_names(&center).join(", ")
    );
    println!(
        "involutions ({}): {}",
        involutions.len(),
        group.set_names(&involutions).join(", ")
    );
    println!(
        "isolated involutions ({}): {}",
        isolated.len(),
        group.set_names(&isolated).join(", ")
    );
    println!(
        "maximal abelian subgroups ({}, {} of order 2):",
        catalog.len(),
        catalog.order2_count
    );
    for (i, sub) in catalog.subgroups.iter().enumerate() {
        println!(
            "  [{i}] size {}: {{{}}}",
            sub.len(),
            group.set_names(sub).join(", ")
        );
    }
    Ok(())
}

fn mas(cli: &Cli, spec: &str) -> Result<(), CliError> {
    let group = load_group(spec)?;
    let catalog = maximal_abelian_subgroups(&group).map_err(usage)?;
    let cores = catalog.common_intersections();
    if cli.json {
        let value = serde_json::json!({
            "spec": spec,
            "subgroups": catalog.subgroups.iter().map(|s| group.set_names(s)).collect::<Vec<_>>(),
            "order2_count": catalog.order2_count,
            "intersections": intersection_table(&group, &catalog),
            "common_cores": cores.iter().map(|(core, colls)| serde_json::json!({
                "core": group.set_names(core),
                "collections": colls,
            })).collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&value).expect("json"));
        return Ok(());
    }
    println!(
        "{spec}: {} maximal abelian subgroups, {} of order 2",
        catalog.len(),
        catalog.order2_count
    );
    for (i, sub) in catalog.subgroups.iter().enumerate() {
        println!("  C{i} = {{{}}}", group.set_names(sub).join(", "));
    }
    println!("pairwise intersections:");
    for (i, j, names) in intersection_table(&group, &catalog) {
        println!("  C{i} ∩ C{j} = {{{}}}", names.join(", "));
    }
    for (core, collections) in &cores {
        for coll in collections {
            println!(
                "common core {{{}}}: subgroups {:?} pairwise intersect in it",
                group.set_names(core).join(", "),
                coll
            );
        }
    }
    Ok(())
}

fn intersection_table(
    group: &FiniteGroup,
    catalog: &rcg_core::MasCatalog,
) -> Vec<(usize, usize, Vec<String>)> {
    let mut rows = Vec::new();
    for i in 0..catalog.len() {
        for j in (i + 1)..catalog.len() {
            let inter = catalog.subgroups[i].intersection(&catalog.subgroups[j]);
            rows.push((i, j, group.set_names(&inter)));
        }
    }
    rows
}

fn rc(cli: &Cli, spec: &str, mode: Mode) -> Result<(), CliError> {
    let group = load_group(spec)?;
    let cfg = search_config(cli);
    match mode {
        Mode::Classify => {
            let c = classify_rc(&group).map_err(usage)?;
            if cli.json {
                let value = serde_json::json!({
                    "spec": spec,
                    "branch": c.branch,
                    "classifier": verdict_json(&c.graph, &c.verdict),
                });
                println!("{}", serde_json::to_string_pretty(&value).expect("json"));
            } else {
                human_verdict(spec, "classifier", &c.verdict);
                println!("  branch: {}", c.branch);
            }
            Ok(())
        }
        Mode::Exact => {
            let graph = commuting_graph(&group, None).map_err(usage)?;
            let verdict = rcg_core::rc_exact(&graph, &cfg).map_err(usage)?;
            if cli.json {
                let value = serde_json::json!({
                    "spec": spec,
                    "solver": verdict_json(&graph, &verdict),
                });
                println!("{}", serde_json::to_string_pretty(&value).expect("json"));
            } else {
                human_verdict(spec, "solver", &verdict);
            }
            Ok(())
        }
        Mode::Both => {
            let report = match cross_check(&group, &cfg) {
                Ok(report) => report,
                Err(rcg_core::ClassifyError::Mismatch { classifier, solver }) => {
                    return Err(CliError::Falsified(format!(
                        "cross-check mismatch on {spec}: classifier {:?} vs solver {:?}",
                        classifier, solver
                    )));
                }
                Err(e) => return Err(usage(e)),
            };
            if cli.json {
                let value = serde_json::json!({
                    "spec": spec,
                    "branch": report.branch,
                    "classifier": verdict_json(&report.graph, &report.classifier),
                    "solver": verdict_json(&report.graph, &report.solver),
                    "detail": report.detail,
                    "passed": true,
                });
                println!("{}", serde_json::to_string_pretty(&value).expect("json"));
            } else {
                human_verdict(spec, "classifier", &report.classifier);
                human_verdict(spec, "solver", &report.solver);
                println!("cross-check PASS: {}", report.detail);
            }
            Ok(())
        }
    }
}

/// Builds the construction a scheme tag names, picking the common core for
/// scheme 5 automatically (largest collection over a core of size >= 2).
fn build_scheme(group: &FiniteGroup, tag: &str) -> Result<ConstructionReport, CliError> {
    let scheme =
        Scheme::from_tag(tag).ok_or_else(|| usage(format!("unknown scheme tag '{tag}'")))?;
    let map_err = |e: rcg_core::ConstructError| match e {
        rcg_core::ConstructError::VerificationFailed { .. } => {
            CliError::Falsified(format!("scheme {tag}: {e}"))
        }
        other => usage(other),
    };
    match scheme {
        Scheme::CenterPair => color_nontrivial_center(group).map_err(map_err),
        Scheme::TrivialCenterFew => color_trivial_center_small_t(group).map_err(map_err),
        Scheme::CenterTuple => color_tuple_two(group).map_err(map_err),
        Scheme::PendantSpread => color_trivial_center_t(group).map_err(map_err),
        Scheme::CommonCore => {
            let catalog = maximal_abelian_subgroups(group).map_err(usage)?;
            let cores = catalog.common_intersections();
            let mut best: Option<(&rcg_core::ElementSet, &Vec<usize>)> = None;
            for (core, collections) in &cores {
                if core.len() < 2 {
                    continue;
                }
                for coll in collections {
                    if best.is_none_or(|(_, b)| coll.len() > b.len()) {
                        best = Some((core, coll));
                    }
                }
            }
            let (core, coll) = best.ok_or_else(|| {
                usage(
                    "no common core of size >= 2 exists for this group; \
                     try --theorem 3a (nontrivial center) or 3b (trivial center)",
                )
            })?;
            let members: Vec<_> = coll.iter().map(|&i| catalog.subgroups[i].clone()).collect();
            color_pstar(group, core, &members).map_err(map_err)
        }
    }
}

fn construct(spec: &str, theorem: &str, output: &Option<PathBuf>) -> Result<(), CliError> {
    let group = load_group(spec)?;
    let report = build_scheme(&group, theorem)?;
    eprintln!(
        "scheme {} on {spec}: {} colors over {} vertices, verified",
        report.scheme.tag(),
        report.coloring.k(),
        report.graph.vertex_count()
    );
    write_or_print(output, &report.to_json())
}

fn export(
    spec: &str,
    format: Format,
    coloring: Option<&str>,
    output: &Option<PathBuf>,
) -> Result<(), CliError> {
    let group = load_group(spec)?;
    let (graph, coloring) = match coloring {
        None => (commuting_graph(&group, None).map_err(usage)?, None),
        Some(source) => {
            if let Some(tag) = source.strip_prefix("theorem:") {
                let report = build_scheme(&group, tag)?;
                (report.graph, Some(report.coloring))
            } else if source == "classify" {
                let c = classify_rc(&group).map_err(usage)?;
                let witness = c
                    .verdict
                    .witness
                    .ok_or_else(|| usage("classifier produced no witness"))?;
                (c.graph, Some(witness))
            } else if let Some(path) = source.strip_prefix("file:") {
                let graph = commuting_graph(&group, None).map_err(usage)?;
                let text = std::fs::read_to_string(path).map_err(usage)?;
                let file = ColoringFile::from_json(&text).map_err(usage)?;
                let coloring = file.apply(&graph).map_err(usage)?;
                (graph, Some(coloring))
            } else {
                return Err(usage(format!(
                    "bad coloring source '{source}'; expected theorem:TAG, classify or file:PATH"
                )));
            }
        }
    };
    let text = match format {
        Format::Dot => graph.to_dot(coloring.as_ref()),
        Format::Json => graph.to_json(coloring.as_ref()),
    };
    write_or_print(output, &text)
}

fn verify(cli: &Cli, target: &str, coloring_path: &PathBuf) -> Result<(), CliError> {
    let graph = if target.ends_with(".json") && families::from_spec(target).is_err() {
        match std::fs::read_to_string(target) {
            Ok(text) => match UndirectedGraph::from_json(&text) {
                Ok((graph, _)) => graph,
                // fall back: the JSON may be a Cayley table file
                Err(_) => commuting_graph(&load_group(target)?, None).map_err(usage)?,
            },
            Err(e) => return Err(usage(e)),
        }
    } else {
        commuting_graph(&load_group(target)?, None).map_err(usage)?
    };
    let text = std::fs::read_to_string(coloring_path).map_err(usage)?;
    let file = ColoringFile::from_json(&text).map_err(usage)?;
    let coloring: EdgeColoring = file.apply(&graph).map_err(usage)?;
    let check = is_rainbow_connected(&graph, &coloring).map_err(usage)?;
    if cli.json {
        let value = serde_json::json!({
            "target": target,
            "colors": coloring.k(),
            "rainbow_connected": check.connected,
            "failing_pairs": check.failing_pairs.iter().map(|&(u, v)| {
                serde_json::json!([graph.label(u), graph.label(v)])
            }).collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&value).expect("json"));
    } else if check.connected {
        println!(
            "rainbow connected: {} colors over {} vertices",
            coloring.k(),
            graph.vertex_count()
        );
    } else {
        println!("NOT rainbow connected; failing pairs:");
        for (u, v) in &check.failing_pairs {
            println!("  {} -- {}", graph.label(*u), graph.label(*v));
        }
    }
    if check.connected {
        Ok(())
    } else {
        Err(CliError::Falsified("coloring failed verification".into()))
    }
}
