use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use levelgraph::oracle::{
    self, verify_distance_formula, verify_layers, verify_metric_axioms, verify_paths,
    AdjacencyGraph, SampleMode, VerificationReport,
};
use levelgraph::{BigCount, LayerIndex, LayerSide, LevelParams, Path, VertexSet};

/// Queries, layer tables, verification sweeps, and graph export for the
/// bipartite level graphs L(k,n).
#[derive(Parser)]
#[command(name = "levelgraph", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form distance between two vertices.
    Distance {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// A shortest path between two vertices, built constructively.
    Path {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Exact sizes of the reachability layers around the initial vertex.
    Layers {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List every vertex of one reachability layer.
    Enumerate {
        #[command(flatten)]
        graph: GraphArgs,
        /// Which level the layer belongs to.
        #[arg(long, value_enum)]
        side: Side,
        /// Layer index, from 0 to the radius.
        #[arg(long)]
        index: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Certify distances, paths, layers, metric axioms, and the layer-sum
    /// identities against brute force for every valid (n, k) with n <= n-max.
    Verify {
        /// Largest universe size to sweep (at most 14).
        #[arg(long = "n-max")]
        n_max: u32,
        /// Random triples per graph when the universe is too large for an
        /// exhaustive triple sweep (n > 10).
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        /// Seed for the sampled sweeps.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Evaluate the two layer-sum identities against binom(n, k).
    Identities {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Export the materialized graph.
    Export {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value_t = ExportFormat::Dot)]
        format: ExportFormat,
    },
}

#[derive(clap::Args)]
struct GraphArgs {
    /// Universe size.
    #[arg(long)]
    n: u32,
    /// Small level size; 2k < n is required.
    #[arg(long)]
    k: u32,
}

#[derive(clap::Args)]
struct PairArgs {
    /// First vertex, as comma-separated elements (e.g. 1,2); empty for the
    /// empty set.
    #[arg(long, value_parser = parse_elements)]
    a: Elements,
    /// Second vertex, same syntax.
    #[arg(long, value_parser = parse_elements)]
    b: Elements,
}

#[derive(Clone)]
struct Elements(Vec<u32>);

fn parse_elements(raw: &str) -> Result<Elements, String> {
    let trimmed = raw.trim();
    if trimmed.is_empty() {
        return Ok(Elements(Vec::new()));
    }
    trimmed
        .split(',')
        .map(|token| {
            token
                .trim()
                .parse::<u32>()
                .map_err(|_| format!("'{}' is not a ground element", token.trim()))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Elements)
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ExportFormat {
    Dot,
    Json,
    Text,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Side {
    Small,
    Large,
}

impl From<Side> for LayerSide {
    fn from(side: Side) -> LayerSide {
        match side {
            Side::Small => LayerSide::Small,
            Side::Large => LayerSide::Large,
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> levelgraph::Result<bool> {
    match cli.command {
        Command::Distance { graph, pair, format } => {
            let params = LevelParams::new(graph.n, graph.k)?;
            let a = VertexSet::from_elements(graph.n, &pair.a.0)?;
            let b = VertexSet::from_elements(graph.n, &pair.b.0)?;
            let distance = params.distance(&a, &b)?;
            match format {
                Format::Text => println!("{distance}"),
                Format::Json => emit(json!({
                    "n": graph.n,
                    "k": graph.k,
                    "a": element_list(&a),
                    "b": element_list(&b),
                    "distance": distance,
                })),
            }
            Ok(true)
        }
        Command::Path { graph, pair, format } => {
            let params = LevelParams::new(graph.n, graph.k)?;
            let a = VertexSet::from_elements(graph.n, &pair.a.0)?;
            let b = VertexSet::from_elements(graph.n, &pair.b.0)?;
            let path = params.shortest_path(&a, &b)?;
            match format {
                Format::Text => {
                    println!("distance: {}", path.length());
                    println!("{}", format_path(&path));
                }
                Format::Json => emit(json!({
                    "n": graph.n,
                    "k": graph.k,
                    "a": element_list(&a),
                    "b": element_list(&b),
                    "distance": path.length(),
                    "path": path.vertices().iter().map(element_list).collect::<Vec<_>>(),
                })),
            }
            Ok(true)
        }
        Command::Layers { graph, format } => {
            let params = LevelParams::new(graph.n, graph.k)?;
            let table = params.layer_table::<BigCount>()?;
            let binomial = levelgraph::binom::<BigCount>(graph.n as i64, graph.k as i64)?;
            match format {
                Format::Text => print_layer_table(&params, &table, &binomial),
                Format::Json => {
                    let gamma: Vec<String> = table.gamma().iter().map(BigUint::to_string).collect();
                    let delta: Vec<String> = table.delta().iter().map(BigUint::to_string).collect();
                    let interleaved: Vec<String> =
                        table.interleaved().iter().map(BigUint::to_string).collect();
                    let partition_holds =
                        sum(table.gamma()) == binomial && sum(table.delta()) == binomial;
                    emit(json!({
                        "n": graph.n,
                        "k": graph.k,
                        "gap": params.gap(),
                        "radius": params.radius(),
                        "gamma": gamma,
                        "delta": delta,
                        "f": interleaved,
                        "binomial": binomial.to_string(),
                        "partition_holds": partition_holds,
                    }));
                }
            }
            Ok(true)
        }
        Command::Enumerate { graph, side, index, format } => {
            let params = LevelParams::new(graph.n, graph.k)?;
            let layer = LayerIndex::new(side.into(), index);
            let members = params.enumerate_layer(layer)?;
            match format {
                Format::Text => {
                    for member in &members {
                        println!("{}", label(member));
                    }
                }
                Format::Json => emit(json!({
                    "n": graph.n,
                    "k": graph.k,
                    "side": match layer.side {
                        LayerSide::Small => "small",
                        LayerSide::Large => "large",
                    },
                    "index": index,
                    "distance": layer.distance(),
                    "count": members.len(),
                    "vertices": members.iter().map(element_list).collect::<Vec<_>>(),
                })),
            }
            Ok(true)
        }
        Command::Verify { n_max, samples, seed, format } => run_verify(n_max, samples, seed, format),
        Command::Identities { graph, format } => {
            let params = LevelParams::new(graph.n, graph.k)?;
            let report = params.verify_identities::<BigCount>()?;
            match format {
                Format::Text => {
                    println!("binom({},{}) = {}", graph.n, graph.k, report.binomial);
                    println!("gamma sum  = {}", report.gamma_sum);
                    println!("delta sum  = {}", report.delta_sum);
                    println!("{}", if report.holds() { "identities hold" } else { "MISMATCH" });
                }
                Format::Json => emit(json!({
                    "n": graph.n,
                    "k": graph.k,
                    "binomial": report.binomial.to_string(),
                    "gamma_sum": report.gamma_sum.to_string(),
                    "delta_sum": report.delta_sum.to_string(),
                    "holds": report.holds(),
                })),
            }
            Ok(report.holds())
        }
        Command::Export { graph, format } => {
            let params = LevelParams::new(graph.n, graph.k)?;
            let adjacency = AdjacencyGraph::build(&params)?;
            match format {
                ExportFormat::Dot => print_dot(&adjacency),
                ExportFormat::Text => {
                    for (index, vertex) in adjacency.vertices().iter().enumerate() {
                        for &neighbor in adjacency.neighbors(index) {
                            if index < neighbor as usize {
                                println!(
                                    "{} {}",
                                    label(vertex),
                                    label(&adjacency.vertices()[neighbor as usize])
                                );
                            }
                        }
                    }
                }
                ExportFormat::Json => {
                    let vertices: Vec<Value> =
                        adjacency.vertices().iter().map(element_list).collect();
                    let mut edges = Vec::new();
                    for index in 0..adjacency.vertex_count() {
                        for &neighbor in adjacency.neighbors(index) {
                            if index < neighbor as usize {
                                edges.push(json!([index, neighbor]));
                            }
                        }
                    }
                    emit(json!({
                        "n": graph.n,
                        "k": graph.k,
                        "vertex_count": adjacency.vertex_count(),
                        "edge_count": adjacency.edge_count(),
                        "vertices": vertices,
                        "edges": edges,
                    }));
                }
            }
            Ok(true)
        }
    }
}

fn run_verify(n_max: u32, samples: u64, seed: u64, format: Format) -> levelgraph::Result<bool> {
    if !(1..=oracle::MAX_PAIR_SWEEP_UNIVERSE).contains(&n_max) {
        return Err(levelgraph::Error::UniverseTooLarge {
            n: n_max,
            max: oracle::MAX_PAIR_SWEEP_UNIVERSE,
        });
    }
    let mut results = Vec::new();
    let mut all_passed = true;
    for n in 1..=n_max {
        for params in LevelParams::all_for(n) {
            let distances = verify_distance_formula(&params)?;
            let paths = verify_paths(&params)?;
            let layers = verify_layers(&params)?;
            let metric_mode = if n <= oracle::MAX_TRIPLE_SWEEP_UNIVERSE {
                SampleMode::Exhaustive
            } else {
                SampleMode::Sampled { count: samples, seed }
            };
            let metric = verify_metric_axioms(&params, metric_mode)?;
            let identities = params.verify_identities::<BigCount>()?;
            let passed = distances.passed()
                && paths.passed()
                && layers.passed()
                && metric.passed()
                && identities.holds();
            all_passed &= passed;
            if format == Format::Text {
                println!(
                    "{params}: distances {} ({} pairs), paths {} ({} pairs), layers {}, \
                     metric {} ({} triples), identities {}",
                    ok(distances.passed()),
                    distances.checked,
                    ok(paths.passed()),
                    paths.checked,
                    ok(layers.passed()),
                    ok(metric.passed()),
                    metric.checked,
                    ok(identities.holds()),
                );
                for report in [&distances, &paths, &layers, &metric] {
                    for mismatch in &report.mismatches {
                        println!("  mismatch: {mismatch}");
                    }
                }
            } else {
                results.push(json!({
                    "n": n,
                    "k": params.k(),
                    "distance_pairs": distances.checked,
                    "path_pairs": paths.checked,
                    "metric_triples": metric.checked,
                    "identities_hold": identities.holds(),
                    "mismatches": collect_mismatches(&[&distances, &paths, &layers, &metric]),
                    "passed": passed,
                }));
            }
        }
    }
    match format {
        Format::Text => {
            if all_passed {
                println!("all parameter sets up to n = {n_max} verified");
            } else {
                println!("verification FAILED");
            }
        }
        Format::Json => emit(json!({
            "n_max": n_max,
            "results": results,
            "passed": all_passed,
        })),
    }
    Ok(all_passed)
}

fn collect_mismatches(reports: &[&VerificationReport]) -> Vec<String> {
    reports
        .iter()
        .flat_map(|report| report.mismatches.iter().map(|m| m.to_string()))
        .collect()
}

fn ok(passed: bool) -> &'static str {
    if passed {
        "ok"
    } else {
        "FAILED"
    }
}

fn sum(counts: &[BigCount]) -> BigCount {
    counts.iter().sum()
}

fn emit(value: Value) {
    println!("{value}");
}

fn element_list(v: &VertexSet) -> Value {
    Value::from(v.elements().collect::<Vec<u32>>())
}

/// Compressed vertex label: single-digit universes concatenate the
/// elements the way the layer pictures do; larger universes separate them
/// to stay unambiguous.
fn label(v: &VertexSet) -> String {
    if v.is_empty() {
        return "{}".into();
    }
    let separator = if v.universe() <= 9 { "" } else { "_" };
    v.elements().map(|e| e.to_string()).collect::<Vec<_>>().join(separator)
}

fn format_path(path: &Path) -> String {
    path.vertices().iter().map(label).collect::<Vec<_>>().join(" -> ")
}

fn print_layer_table(
    params: &LevelParams,
    table: &levelgraph::LayerTable<BigCount>,
    binomial: &BigCount,
) {
    println!("{params}: gap={} radius={}", params.gap(), params.radius());
    let gamma = table.gamma();
    let delta = table.delta();
    let width = gamma
        .iter()
        .chain(delta.iter())
        .chain([binomial])
        .map(|count| count.to_string().len())
        .max()
        .unwrap_or(1)
        .max(5);
    println!("{:>4}  {:>width$}  {:>width$}  {:>width$}  {:>width$}", "i", "gamma", "delta", "cum_g", "cum_d");
    let mut cumulative_gamma = BigCount::from(0u32);
    let mut cumulative_delta = BigCount::from(0u32);
    for i in 0..gamma.len() {
        cumulative_gamma += &gamma[i];
        cumulative_delta += &delta[i];
        println!(
            "{:>4}  {:>width$}  {:>width$}  {:>width$}  {:>width$}",
            i,
            gamma[i].to_string(),
            delta[i].to_string(),
            cumulative_gamma.to_string(),
            cumulative_delta.to_string(),
        );
    }
    let verdict = if cumulative_gamma == *binomial && cumulative_delta == *binomial {
        "ok"
    } else {
        "MISMATCH"
    };
    println!(
        "total: gamma = {cumulative_gamma}, delta = {cumulative_delta}, \
         binom({},{}) = {binomial}: {verdict}",
        params.n(),
        params.k(),
    );
    let f: Vec<String> = table.interleaved().iter().map(BigUint::to_string).collect();
    println!("f: {}", f.join(" "));
}

fn print_dot(adjacency: &AdjacencyGraph) {
    let params = adjacency.params();
    println!("graph L_{}_{} {{", params.k(), params.n());
    println!("  rankdir=BT;");
    for side in [LayerSide::Small, LayerSide::Large] {
        println!("  {{");
        println!("    rank=same;");
        for vertex in adjacency.vertices() {
            let on_side = (vertex.len() == params.k()) == (side == LayerSide::Small);
            if on_side {
                println!("    \"{}\";", label(vertex));
            }
        }
        println!("  }}");
    }
    for (index, vertex) in adjacency.vertices().iter().enumerate() {
        for &neighbor in adjacency.neighbors(index) {
            if index < neighbor as usize {
                println!(
                    "  \"{}\" -- \"{}\";",
                    label(vertex),
                    label(&adjacency.vertices()[neighbor as usize])
                );
            }
        }
    }
    println!("}}");
}
