//! Command-line front end for the `eqdecomp` library.
//!
//! Reads graphs and permutations from text files, runs checks,
//! decompositions, eigensolves and bound reports, and prints results to
//! stdout. Diagnostics go to stderr and are controlled by
//! `EQDECOMP_LOG={quiet|info|debug}` (default `info`).
//!
//! Exit codes: 0 on success, 1 on a domain error (incompatible matrix,
//! non-equitable partition, wrong automorphism kind, failed
//! verification, unreadable file), 2 on a usage error.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use log::{debug, info};

use eqdecomp::fixtures::{
    PlantedSpec, directed_ladder, figure1_automorphism, figure1_graph, k_sun, network_blocks,
    planted_random, sharpness_tree, trigraph10,
};
use eqdecomp::{
    CMatrix, CompatibleMatrix, Graph, MatrixKind, Permutation, SpectrumMultiset, build_matrix,
    certified_eigen_subset, count_bounds, decompose, divisor_matrix, divisor_matrix_tol, fmt_c64,
    fmt_sig, is_automorphism, is_automorphism_tol, multiset_equal, orbit_partition,
    orbit_structure, spectral_bounds, verify_similarity,
};

const SIG: usize = 12;

#[derive(Parser)]
#[command(name = "eqdecomp", version, about = "Equitable decompositions of graph matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check whether a permutation is an automorphism of a graph
    CheckAuto {
        graph: PathBuf,
        perm: PathBuf,
        /// Weight tolerance (defaults to exact comparison)
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Print the orbit structure of a permutation
    Orbits {
        perm: PathBuf,
        /// Vertex count (defaults to the largest vertex in the file)
        #[arg(long)]
        n: Option<usize>,
    },
    /// Build a graph matrix and print its entries
    Build {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = KindArg::Adjacency)]
        kind: KindArg,
    },
    /// Print the divisor matrix over the permutation's orbit partition
    Partition {
        graph: PathBuf,
        perm: PathBuf,
        #[arg(long, value_enum, default_value_t = KindArg::Adjacency)]
        kind: KindArg,
        /// Equitability tolerance (defaults to exact for integer matrices)
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Decompose a graph matrix over a uniform or basic automorphism
    Decompose {
        graph: PathBuf,
        perm: PathBuf,
        #[arg(long, value_enum, default_value_t = KindArg::Adjacency)]
        kind: KindArg,
        /// Also write the decomposition as JSON to this path
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Print the spectrum of a graph matrix
    Spectrum {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = KindArg::Adjacency)]
        kind: KindArg,
    },
    /// Decompose, then check the similarity residual and the spectrum match
    Verify {
        graph: PathBuf,
        perm: PathBuf,
        #[arg(long, value_enum, default_value_t = KindArg::Adjacency)]
        kind: KindArg,
        /// Base tolerance for both checks, scaled by max(1, ‖M‖∞)
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Print simple-eigenvalue bounds implied by an automorphism
    Bounds {
        perm: PathBuf,
        /// Vertex count of the host graph
        #[arg(long)]
        n: usize,
    },
    /// Pool block spectra from several automorphisms into a certified
    /// partial spectrum with radius/gap bounds
    Certify {
        graph: PathBuf,
        /// Directory of permutation files (*.txt, read in sorted order)
        perms: PathBuf,
        #[arg(long, value_enum, default_value_t = KindArg::Adjacency)]
        kind: KindArg,
        /// Also write the certified spectrum and bounds as JSON
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Print a named fixture, or export the whole set
    Fixtures {
        #[command(subcommand)]
        which: FixtureCommand,
    },
}

#[derive(Subcommand)]
enum FixtureCommand {
    /// 8-vertex graph with the quarter-turn automorphism (1 3 5 7)(2 4 6 8)
    Fig1,
    /// Even cycle of length 2k with k pendant vertices
    Ksun { k: usize },
    /// Directed ladder on 2k vertices with a cyclic rung rotation
    Ladder { k: usize },
    /// 10-vertex graph with a 3-fold symmetry fixing vertex 1
    Trigraph10,
    /// Tree on n vertices: an odd path of n_path vertices, with the
    /// remaining vertices hung off the path's end as rotatable leaves
    Tree { n: usize, n_path: usize },
    /// Random graph with a planted automorphism of orbit size k
    Planted {
        n: usize,
        k: usize,
        #[arg(long, default_value_t = 0)]
        fixed: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long)]
        directed: bool,
        #[arg(long)]
        weighted: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Labeled example blocks with their asserted spectra
    Network,
    /// Write every graph fixture (plus its automorphism) into a directory
    ExportAll { dir: PathBuf },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Adjacency,
    Weighted,
    Laplacian,
    Signless,
    Normalized,
    Distance,
}

impl From<KindArg> for MatrixKind {
    fn from(kind: KindArg) -> MatrixKind {
        match kind {
            KindArg::Adjacency => MatrixKind::Adjacency,
            KindArg::Weighted => MatrixKind::WeightedAdjacency,
            KindArg::Laplacian => MatrixKind::Laplacian,
            KindArg::Signless => MatrixKind::SignlessLaplacian,
            KindArg::Normalized => MatrixKind::NormalizedLaplacian,
            KindArg::Distance => MatrixKind::Distance,
        }
    }
}

struct CliError(String);

impl From<eqdecomp::Error> for CliError {
    fn from(e: eqdecomp::Error) -> Self {
        CliError(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

fn main() -> ExitCode {
    // die quietly when a downstream pager or `head` closes the pipe
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    init_logging();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(CliError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn init_logging() {
    let level = match std::env::var("EQDECOMP_LOG").as_deref() {
        Ok("quiet") => log::LevelFilter::Off,
        Ok("debug") => log::LevelFilter::Debug,
        _ => log::LevelFilter::Info,
    };
    env_logger::Builder::new()
        .filter_level(level)
        .format_timestamp(None)
        .format_target(false)
        .init();
}

fn run(command: Command) -> CliResult<ExitCode> {
    match command {
        Command::CheckAuto { graph, perm, tol } => check_auto(&graph, &perm, tol),
        Command::Orbits { perm, n } => orbits(&perm, n),
        Command::Build { graph, kind } => build(&graph, kind.into()),
        Command::Partition { graph, perm, kind, tol } => partition(&graph, &perm, kind.into(), tol),
        Command::Decompose { graph, perm, kind, json } => {
            decompose_cmd(&graph, &perm, kind.into(), json.as_deref())
        }
        Command::Spectrum { graph, kind } => spectrum(&graph, kind.into()),
        Command::Verify { graph, perm, kind, tol } => verify(&graph, &perm, kind.into(), tol),
        Command::Bounds { perm, n } => bounds(&perm, n),
        Command::Certify { graph, perms, kind, json } => {
            certify(&graph, &perms, kind.into(), json.as_deref())
        }
        Command::Fixtures { which } => fixtures(which),
    }
}

fn read_file(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> CliResult<Graph> {
    let g = Graph::parse(&read_file(path)?)?;
    info!(
        "{}: {} graph, n={}, {} edges",
        path.display(),
        if g.directed() { "directed" } else { "undirected" },
        g.n(),
        g.edge_count()
    );
    Ok(g)
}

fn read_perm(path: &Path, n: usize) -> CliResult<Permutation> {
    let phi = Permutation::parse(&read_file(path)?, n)?;
    debug!("{}: φ = {phi}, order {}", path.display(), phi.order());
    Ok(phi)
}

fn matrix_lines(m: &CMatrix, out: &mut String) {
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|j| fmt_c64(m[(i, j)], SIG)).collect();
        writeln!(out, "  {}", row.join(" ")).unwrap();
    }
}

fn print_matrix(m: &CMatrix) {
    let mut out = String::new();
    matrix_lines(m, &mut out);
    print!("{out}");
}

fn print_spectrum(s: &SpectrumMultiset) {
    for &z in s.values() {
        println!("{}", fmt_c64(z, SIG));
    }
}

fn build_kind(g: &Graph, kind: MatrixKind) -> CliResult<CompatibleMatrix> {
    let m = build_matrix(g, kind)?;
    debug!("{kind} matrix, ‖M‖∞ = {}", fmt_sig(m.entries().inf_norm(), 6));
    Ok(m)
}

fn check_auto(graph: &Path, perm: &Path, tol: Option<f64>) -> CliResult<ExitCode> {
    let g = read_graph(graph)?;
    let phi = read_perm(perm, g.n())?;
    let ok = match tol {
        Some(t) => is_automorphism_tol(&g, &phi, t)?,
        None => is_automorphism(&g, &phi)?,
    };
    println!("{ok}");
    Ok(ExitCode::SUCCESS)
}

fn orbits(perm: &Path, n: Option<usize>) -> CliResult<ExitCode> {
    let text = read_file(perm)?;
    let n = match n {
        Some(n) => n,
        None => largest_vertex(&text).ok_or_else(|| {
            CliError("permutation file names no vertices; pass --n".to_string())
        })?,
    };
    let phi = Permutation::parse(&text, n)?;
    let structure = orbit_structure(&phi);
    println!("n: {n}");
    println!("kind: {}", structure.kind);
    if !structure.fixed_vertices.is_empty() {
        println!("fixed: {}", join_usize(&structure.fixed_vertices));
    }
    for orbit in &structure.orbits {
        if orbit.len() > 1 {
            println!("orbit: {}", join_usize(orbit));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn largest_vertex(text: &str) -> Option<usize> {
    text.split(|c: char| !c.is_ascii_digit())
        .filter(|s| !s.is_empty())
        .filter_map(|s| s.parse().ok())
        .max()
}

fn join_usize(v: &[usize]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn build(graph: &Path, kind: MatrixKind) -> CliResult<ExitCode> {
    let g = read_graph(graph)?;
    let m = build_kind(&g, kind)?;
    print_matrix(m.entries());
    Ok(ExitCode::SUCCESS)
}

fn partition(graph: &Path, perm: &Path, kind: MatrixKind, tol: Option<f64>) -> CliResult<ExitCode> {
    let g = read_graph(graph)?;
    let phi = read_perm(perm, g.n())?;
    let m = build_kind(&g, kind)?;
    let cells = orbit_partition(&phi);
    let div = match tol {
        Some(t) => divisor_matrix_tol(&m, &cells, t)?,
        None => divisor_matrix(&m, &cells)?,
    };
    for (idx, cell) in cells.cells().iter().enumerate() {
        println!("cell {}: {}", idx + 1, join_usize(cell));
    }
    println!("divisor:");
    print_matrix(div.entries());
    Ok(ExitCode::SUCCESS)
}

fn decompose_cmd(
    graph: &Path,
    perm: &Path,
    kind: MatrixKind,
    json: Option<&Path>,
) -> CliResult<ExitCode> {
    let g = read_graph(graph)?;
    let phi = read_perm(perm, g.n())?;
    let m = build_kind(&g, kind)?;
    let d = decompose(&m, &phi)?;
    println!("k: {}", d.k);
    println!("r: {}", d.r);
    println!("fixed: {}", d.p);
    println!("ordering: {}", join_usize(&d.ordering));
    println!("divisor block ({0}x{0}):", d.p + d.r);
    print_matrix(&d.divisor_block);
    for (j, block) in d.blocks.iter().enumerate() {
        println!("B_{} ({1}x{1}):", j + 1, d.r);
        print_matrix(block);
    }
    if let Some(path) = json {
        let text = serde_json::to_string_pretty(&d)
            .map_err(|e| CliError(format!("JSON: {e}")))?;
        fs::write(path, text + "\n").map_err(|e| CliError(format!("{}: {e}", path.display())))?;
        info!("wrote {}", path.display());
    }
    Ok(ExitCode::SUCCESS)
}

fn spectrum(graph: &Path, kind: MatrixKind) -> CliResult<ExitCode> {
    let g = read_graph(graph)?;
    let m = build_kind(&g, kind)?;
    let s = eqdecomp::eigenvalues(m.entries())?;
    print_spectrum(&s);
    Ok(ExitCode::SUCCESS)
}

fn verify(graph: &Path, perm: &Path, kind: MatrixKind, tol: Option<f64>) -> CliResult<ExitCode> {
    let g = read_graph(graph)?;
    let phi = read_perm(perm, g.n())?;
    let m = build_kind(&g, kind)?;
    let d = decompose(&m, &phi)?;

    let scale = m.entries().inf_norm().max(1.0);
    let residual_tol = tol.unwrap_or(1e-10) * scale;
    let match_tol = tol.unwrap_or(1e-7) * scale;

    let residual = verify_similarity(&m, &phi, &d)?;
    let residual_ok = residual <= residual_tol;
    println!(
        "similarity residual: {} (tolerance {}): {}",
        fmt_sig(residual, SIG),
        fmt_sig(residual_tol, 3),
        verdict(residual_ok)
    );

    let full = eqdecomp::eigenvalues(m.entries())?;
    let mut pooled = eqdecomp::eigenvalues(&d.divisor_block)?.values().to_vec();
    for block in &d.blocks {
        pooled.extend(eqdecomp::eigenvalues(block)?.values());
    }
    let pooled = SpectrumMultiset::from_values(pooled, full.tolerance());
    let spectra_ok = multiset_equal(&pooled, &full, match_tol);
    println!(
        "spectrum match: {} of {} eigenvalues (tolerance {}): {}",
        pooled.len(),
        full.len(),
        fmt_sig(match_tol, 3),
        verdict(spectra_ok)
    );

    let ok = residual_ok && spectra_ok;
    println!("verify: {}", verdict(ok));
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn verdict(ok: bool) -> &'static str {
    if ok { "PASS" } else { "FAIL" }
}

fn bounds(perm: &Path, n: usize) -> CliResult<ExitCode> {
    let phi = read_perm(perm, n)?;
    let all = count_bounds(&phi, n)?;
    for bound in &all {
        println!("{bound}");
    }
    let tightest = all.iter().map(|b| b.bound()).min().unwrap_or(n);
    println!("tightest: {tightest}");
    Ok(ExitCode::SUCCESS)
}

fn certify(
    graph: &Path,
    perms: &Path,
    kind: MatrixKind,
    json: Option<&Path>,
) -> CliResult<ExitCode> {
    let g = read_graph(graph)?;
    let m = build_kind(&g, kind)?;

    let mut paths: Vec<PathBuf> = fs::read_dir(perms)
        .map_err(|e| CliError(format!("{}: {e}", perms.display())))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|ext| ext == "txt"))
        .collect();
    paths.sort();
    if paths.is_empty() {
        return Err(CliError(format!(
            "{}: no .txt permutation files found",
            perms.display()
        )));
    }
    let mut autos = Vec::with_capacity(paths.len());
    for path in &paths {
        autos.push(read_perm(path, g.n())?);
    }
    info!("pooling block spectra from {} automorphisms", autos.len());

    let partial = certified_eigen_subset(&m, &autos)?;
    println!("certified eigenvalues: {} of {}", partial.len(), g.n());
    print_spectrum(&partial);

    let report = spectral_bounds(&partial, kind)?;
    println!("spectral radius ≥ {}", fmt_sig(report.radius_lower_bound, SIG));
    if let Some(gap) = report.gap_upper_bound {
        println!("spectral gap ≤ {}", fmt_sig(gap, SIG));
    }

    if let Some(path) = json {
        let mut doc = match serde_json::to_value(&report) {
            Ok(serde_json::Value::Object(map)) => map,
            _ => unreachable!("bounds serialize to an object"),
        };
        doc.insert(
            "certifiedEigenvalues".into(),
            serde_json::to_value(partial.to_pairs()).expect("pairs serialize"),
        );
        let text = serde_json::to_string_pretty(&serde_json::Value::Object(doc))
            .map_err(|e| CliError(format!("JSON: {e}")))?;
        fs::write(path, text + "\n").map_err(|e| CliError(format!("{}: {e}", path.display())))?;
        info!("wrote {}", path.display());
    }
    Ok(ExitCode::SUCCESS)
}

fn graph_with_comment(g: &Graph, phi: &Permutation) -> String {
    format!("{}# automorphism: {phi}\n", g.to_text())
}

fn fixtures(which: FixtureCommand) -> CliResult<ExitCode> {
    match which {
        FixtureCommand::Fig1 => {
            print!("{}", graph_with_comment(&figure1_graph(), &figure1_automorphism()));
        }
        FixtureCommand::Ksun { k } => {
            let (g, phi) = k_sun(k)?;
            print!("{}", graph_with_comment(&g, &phi));
        }
        FixtureCommand::Ladder { k } => {
            let (g, phi) = directed_ladder(k)?;
            print!("{}", graph_with_comment(&g, &phi));
        }
        FixtureCommand::Trigraph10 => {
            let (g, phi) = trigraph10();
            print!("{}", graph_with_comment(&g, &phi));
        }
        FixtureCommand::Tree { n, n_path } => {
            let (g, phi) = sharpness_tree(n, n_path)?;
            print!("{}", graph_with_comment(&g, &phi));
        }
        FixtureCommand::Planted { n, k, fixed, density, directed, weighted, seed } => {
            let spec = PlantedSpec { n, k, fixed, density, directed, weighted };
            let inst = planted_random(seed, &spec)?;
            print!("{}", graph_with_comment(&inst.graph, &inst.automorphism));
        }
        FixtureCommand::Network => {
            for block in network_blocks() {
                println!("{} ({1}x{1}):", block.label, block.matrix.rows());
                print_matrix(&block.matrix);
                let asserted: Vec<String> =
                    block.asserted_spectrum.iter().map(|&z| fmt_c64(z, SIG)).collect();
                println!("asserted spectrum: {}", asserted.join(" "));
            }
        }
        FixtureCommand::ExportAll { dir } => return export_all(&dir),
    }
    Ok(ExitCode::SUCCESS)
}

fn export_all(dir: &Path) -> CliResult<ExitCode> {
    fs::create_dir_all(dir).map_err(|e| CliError(format!("{}: {e}", dir.display())))?;
    let named: Vec<(&str, Graph, Permutation)> = vec![
        ("fig1", figure1_graph(), figure1_automorphism()),
        {
            let (g, phi) = k_sun(5)?;
            ("ksun5", g, phi)
        },
        {
            let (g, phi) = k_sun(6)?;
            ("ksun6", g, phi)
        },
        {
            let (g, phi) = directed_ladder(4)?;
            ("ladder4", g, phi)
        },
        {
            let (g, phi) = trigraph10();
            ("trigraph10", g, phi)
        },
        {
            let (g, phi) = sharpness_tree(10, 5)?;
            ("tree10-5", g, phi)
        },
    ];
    for (name, g, phi) in &named {
        let graph_path = dir.join(format!("{name}.txt"));
        let perm_path = dir.join(format!("{name}-phi.txt"));
        fs::write(&graph_path, graph_with_comment(g, phi))
            .map_err(|e| CliError(format!("{}: {e}", graph_path.display())))?;
        fs::write(&perm_path, format!("{phi}\n"))
            .map_err(|e| CliError(format!("{}: {e}", perm_path.display())))?;
        info!("wrote {} and {}", graph_path.display(), perm_path.display());
    }
    println!("exported {} fixtures to {}", named.len(), dir.display());
    Ok(ExitCode::SUCCESS)
}
