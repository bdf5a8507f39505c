use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use hypocubic::codec::{
    open_graphs, write_planar_code, write_text_adjacency, write_text_graph, Format, InputError, InputOptions,
};
use hypocubic::fixtures::{self, Fixture};
use hypocubic::grinberg::grinberg_feasible;
use hypocubic::hypo::{classify_hypohamiltonian, HypoResult};
use hypocubic::invariants::{automorphism_order, cyclic_connectivity, faces, girth};
use hypocubic::pipeline::{emit_table_row, process_stream, EmitClasses, PipelineConfig, PipelineError};
use hypocubic::solver::{find_hamiltonian, HamResult, SolverError};
use hypocubic::{Graph, PlanarEmbedding};

#[derive(Parser)]
#[command(
    name = "hypocubic",
    version,
    about = "Hamiltonicity census tools for planar cubic graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full census pipeline and report counters.
    Filter(FilterArgs),
    /// Like `filter`, but print only table rows.
    Table(TableArgs),
    /// Decide hamiltonicity of each input graph.
    Ham(PerGraphArgs),
    /// Classify each input graph as hamiltonian, hypohamiltonian or neither.
    Hypo(HypoArgs),
    /// Print girth, cyclic connectivity, face vector and automorphism order.
    Invariants(PerGraphArgs),
    /// Write the built-in fixture graphs.
    Fixtures {
        /// Output directory.
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    PlanarCode,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EmitClass {
    Nonham,
    Hypo,
}

#[derive(Args)]
struct InputArgs {
    /// Input files; `-` reads standard input.
    #[arg(long = "input", num_args = 1.., required = true)]
    inputs: Vec<PathBuf>,
    #[arg(long, value_enum, default_value = "planar-code")]
    format: FormatArg,
    /// planar_code input without the `>>planar_code<<` header.
    #[arg(long)]
    no_header: bool,
}

impl InputArgs {
    fn options(&self) -> InputOptions {
        InputOptions {
            format: match self.format {
                FormatArg::PlanarCode => Format::PlanarCode,
                FormatArg::Text => Format::Text,
            },
            header: !self.no_header,
            cubic_only: false,
        }
    }
}

#[derive(Args)]
struct CensusArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Graphs with smaller girth are rejected.
    #[arg(long, default_value_t = 5)]
    min_girth: usize,
    /// Do not split graphs by cyclic connectivity.
    #[arg(long)]
    no_classify: bool,
    /// Check Grinberg's condition and count graphs it rules out.
    #[arg(long)]
    grinberg: bool,
    /// Fraction of graphs re-decided independently.
    #[arg(long, default_value_t = 0.0)]
    verify_rate: f64,
    /// Skip undecodable records instead of aborting.
    #[arg(long)]
    skip_bad: bool,
}

impl CensusArgs {
    fn config(&self) -> PipelineConfig {
        PipelineConfig {
            inputs: self.input.inputs.clone(),
            input: self.input.options(),
            min_girth: self.min_girth,
            classify_connectivity: !self.no_classify,
            jobs: self.jobs,
            verify_rate: self.verify_rate,
            grinberg: self.grinberg,
            skip_bad: self.skip_bad,
            ..PipelineConfig::default()
        }
    }
}

#[derive(Args)]
struct FilterArgs {
    #[command(flatten)]
    census: CensusArgs,
    /// Write selected graphs here as planar_code, in input order.
    #[arg(long)]
    survivors: Option<PathBuf>,
    /// Which graphs count as survivors; repeatable.
    #[arg(long, value_enum)]
    emit_class: Vec<EmitClass>,
    /// Also print table rows.
    #[arg(long)]
    table: bool,
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    census: CensusArgs,
    /// Rows to print even when no graph of that order was seen.
    #[arg(long, value_delimiter = ',')]
    rows: Vec<usize>,
}

#[derive(Args)]
struct PerGraphArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Print the hamiltonian cycle when one is found.
    #[arg(long)]
    certificate: bool,
    /// Add a Grinberg feasibility column (sphere embeddings only).
    #[arg(long)]
    grinberg: bool,
}

#[derive(Args)]
struct HypoArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Dump certificates of hypohamiltonian graphs in text adjacency format.
    #[arg(long)]
    certificates: Option<PathBuf>,
    /// Add a Grinberg feasibility column (sphere embeddings only).
    #[arg(long)]
    grinberg: bool,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        // a closed downstream pipe (`| head`) is not a failure
        Err(err) if is_broken_pipe(&err) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn is_broken_pipe(err: &anyhow::Error) -> bool {
    err.chain()
        .filter_map(|e| e.downcast_ref::<std::io::Error>())
        .any(|e| e.kind() == std::io::ErrorKind::BrokenPipe)
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if let Some(e) = err.downcast_ref::<PipelineError>() {
        return e.exit_code() as u8;
    }
    if let Some(e) = err.downcast_ref::<InputError>() {
        return if e.is_unsupported() { 3 } else { 1 };
    }
    if let Some(SolverError::TooSmall(_)) = err.downcast_ref::<SolverError>() {
        return 3;
    }
    if err.downcast_ref::<SolverError>().is_some() {
        return 2;
    }
    1
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Filter(args) => filter(args),
        Command::Table(args) => table(args),
        Command::Ham(args) => ham(args),
        Command::Hypo(args) => hypo(args),
        Command::Invariants(args) => invariants(args),
        Command::Fixtures { out } => write_fixtures(&out),
    }
}

fn filter(args: FilterArgs) -> Result<()> {
    let mut cfg = args.census.config();
    cfg.survivors = args.survivors;
    if !args.emit_class.is_empty() {
        cfg.emit = EmitClasses {
            nonhamiltonian: args.emit_class.contains(&EmitClass::Nonham),
            hypohamiltonian: args.emit_class.contains(&EmitClass::Hypo),
        };
    }
    let start = Instant::now();
    let counters = process_stream(&cfg)?;
    log::info!("processed in {:.2?}", start.elapsed());
    let mut out = io::stdout().lock();
    for (n, r) in &counters.rows {
        writeln!(
            out,
            "n={n} total={} c4={} n4={} c5={} n5={} h={} unclassified={} nonham_unclassified={} rejected={} grinberg={} verified={} nodes={}",
            r.total, r.c4, r.n4, r.c5, r.n5, r.h, r.unclassified, r.nonham_unclassified, r.rejected,
            r.grinberg_certified, r.cross_verified, r.solver_nodes
        )?;
    }
    if counters.skipped > 0 {
        writeln!(out, "skipped={}", counters.skipped)?;
    }
    if args.table {
        writeln!(out, "# n C4 N4 C5 N5 H")?;
        for &n in counters.rows.keys() {
            writeln!(out, "{}", emit_table_row(&counters, n)?)?;
        }
    }
    Ok(())
}

fn table(args: TableArgs) -> Result<()> {
    let mut counters = process_stream(&args.census.config())?;
    for &n in &args.rows {
        counters.ensure_row(n);
    }
    let mut out = io::stdout().lock();
    writeln!(out, "# n C4 N4 C5 N5 H")?;
    for &n in counters.rows.keys() {
        writeln!(out, "{}", emit_table_row(&counters, n)?)?;
    }
    Ok(())
}

fn grinberg_column(g: &Graph) -> &'static str {
    match PlanarEmbedding::new(g.clone()) {
        Ok(e) if grinberg_feasible(&faces(&e)) => " grinberg=feasible",
        Ok(_) => " grinberg=infeasible",
        Err(_) => " grinberg=n/a",
    }
}

fn format_cycle(cycle: &[usize]) -> String {
    cycle.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn ham(args: PerGraphArgs) -> Result<()> {
    let mut out = io::stdout().lock();
    for (i, g) in open_graphs(&args.input.inputs, args.input.options()).enumerate() {
        let g = g?;
        let r = find_hamiltonian(&g)?;
        let tag = if r.is_hamiltonian() { "H" } else { "N" };
        write!(out, "{i} n={} {tag} nodes={}", g.vertex_count(), r.nodes())?;
        if args.grinberg {
            write!(out, "{}", grinberg_column(&g))?;
        }
        if let (true, HamResult::Hamiltonian { cycle, .. }) = (args.certificate, &r) {
            write!(out, " cycle={}", format_cycle(cycle))?;
        }
        writeln!(out)?;
    }
    Ok(())
}

/// The cycle as a spanning subgraph on all `n` vertices; the deleted vertex
/// stays isolated.
fn cycle_graph(n: usize, cycle: &[usize]) -> Graph {
    let k = cycle.len();
    Graph::from_edges(n, (0..k).map(|i| (cycle[i], cycle[(i + 1) % k]))).expect("certificate is a simple cycle")
}

fn hypo(args: HypoArgs) -> Result<()> {
    let mut dump = match &args.certificates {
        Some(path) => Some(BufWriter::new(
            File::create(path).with_context(|| format!("creating {}", path.display()))?,
        )),
        None => None,
    };
    let mut out = io::stdout().lock();
    for (i, g) in open_graphs(&args.input.inputs, args.input.options()).enumerate() {
        let g = g?;
        let r = classify_hypohamiltonian(&g)?;
        write!(out, "{i} n={} {}", g.vertex_count(), r.tag())?;
        if let HypoResult::NotHypo { witness, .. } = &r {
            write!(out, " witness={witness}")?;
        }
        if args.grinberg {
            write!(out, "{}", grinberg_column(&g))?;
        }
        writeln!(out)?;
        if let (Some(dump), HypoResult::Hypohamiltonian { certificates }) = (dump.as_mut(), &r) {
            for (v, cycle) in certificates.iter().enumerate() {
                writeln!(dump, "# graph {i}: hamiltonian cycle avoiding vertex {v}")?;
                write_text_graph(&cycle_graph(g.vertex_count(), cycle), &mut *dump)?;
            }
        }
    }
    if let Some(mut dump) = dump {
        dump.flush()?;
    }
    Ok(())
}

fn invariants(args: PerGraphArgs) -> Result<()> {
    let mut out = io::stdout().lock();
    for (i, g) in open_graphs(&args.input.inputs, args.input.options()).enumerate() {
        let g = g?;
        let girth = girth(&g).map_or("inf".to_string(), |k| k.to_string());
        let cyclic = match cyclic_connectivity(&g) {
            Ok(c) => c.to_string(),
            Err(e) => format!("n/a ({e})"),
        };
        write!(out, "{i} n={} girth={girth} cyclic={cyclic}", g.vertex_count())?;
        match PlanarEmbedding::new(g) {
            Ok(e) => {
                let fv = faces(&e);
                let aut = automorphism_order(&e).map_or("n/a".to_string(), |a| a.to_string());
                write!(out, " faces={fv} aut={aut}")?;
                if args.grinberg {
                    let verdict = if grinberg_feasible(&fv) {
                        "feasible"
                    } else {
                        "infeasible"
                    };
                    write!(out, " grinberg={verdict}")?;
                }
            }
            Err(_) => write!(out, " faces=n/a aut=n/a")?,
        }
        writeln!(out)?;
    }
    Ok(())
}

fn write_fixtures(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    for (name, fixture) in fixtures::named() {
        let text = dir.join(format!("{name}.txt"));
        write_text_adjacency([fixture.graph()], File::create(&text)?)
            .with_context(|| format!("writing {}", text.display()))?;
        if let Fixture::Planar(e) = &fixture {
            let pc = dir.join(format!("{name}.pc"));
            write_planar_code([e.graph()], BufWriter::new(File::create(&pc)?), true)
                .with_context(|| format!("writing {}", pc.display()))?;
        }
    }
    Ok(())
}
