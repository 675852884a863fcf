//! Command-line interface: catalog inspection, embedding verification and
//! search, graph coloring, the hexagonal 7-coloring, and the p_d bound
//! tables.

use clap::{Parser, Subcommand};
use plane_chroma::bounds::{
    self, extremal, families, BoundKind, BoundPiece, BoundTable, Rational,
};
use plane_chroma::coloring::{
    self, chromatic_number, enumerate_proper_colorings, export_cnf, hex_verify,
    max_color_multiplicity, HexConfig,
};
use plane_chroma::embeddings::catalog::{catalog, catalog_names, CatalogEntry, CatalogGraph};
use plane_chroma::embeddings::realize::{range_scan, realize, realize_bicolored, RealizeConfig};
use plane_chroma::embeddings::{verify, verify_bicolored, Embedding};
use plane_chroma::geometry::{Scalar, Tolerance};
use plane_chroma::graphs::{BicoloredGraph, SimpleGraph};
use std::path::PathBuf;
use std::process::exit;

const EXIT_USAGE: i32 = 1;
const EXIT_INVALID: i32 = 2;
const EXIT_EXHAUSTED: i32 = 3;
const EXIT_INTERNAL: i32 = 4;

fn invalid(msg: &str) -> ! {
    eprintln!("error: {msg}");
    exit(EXIT_INVALID);
}

fn internal(msg: &str) -> ! {
    eprintln!("internal error: {msg}");
    exit(EXIT_INTERNAL);
}

#[derive(Parser)]
#[command(
    name = "plane-chroma",
    version,
    about = "Unit-distance graphs, (1,d) families, plane colorings, and \
             monochromaticity bounds"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Inspect the built-in catalog of constructions.
    Catalog {
        #[command(subcommand)]
        cmd: CatalogCmd,
    },
    /// Verify an embedding against a graph (unit or (1,d) edge lengths).
    Verify {
        /// Catalog entry name (alternative to --graph/--embedding).
        #[arg(long)]
        name: Option<String>,
        /// Graph JSON file.
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Embedding JSON file.
        #[arg(long)]
        embedding: Option<PathBuf>,
        /// D-edge length (decimal); marks --graph as bicolored JSON.
        #[arg(long)]
        d: Option<String>,
    },
    /// Search for a unit-distance (or (1,d)) embedding of a graph.
    Realize {
        #[arg(long)]
        name: Option<String>,
        #[arg(long)]
        graph: Option<PathBuf>,
        /// D-edge length (decimal); marks --graph as bicolored JSON.
        #[arg(long)]
        d: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 64)]
        attempts: usize,
        /// Write the found embedding as JSON here.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Scan a d-range for realizability of a bicolored graph.
    RangeScan {
        #[arg(long)]
        name: Option<String>,
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        lo: String,
        #[arg(long)]
        hi: String,
        #[arg(long, default_value_t = 20)]
        steps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Chromatic number of a graph with a witness coloring.
    Chromatic {
        #[arg(long)]
        name: Option<String>,
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    /// Count proper k-colorings; optionally the largest color class.
    Colorings {
        #[arg(long)]
        name: Option<String>,
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        k: usize,
        /// Also report the maximum color-class size over all colorings.
        #[arg(long)]
        max_multiplicity: bool,
    },
    /// Export k-colorability as a DIMACS CNF formula.
    Cnf {
        #[arg(long)]
        name: Option<String>,
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Sample-test the hexagonal 7-coloring at a given side length.
    HexVerify {
        /// Hexagon side length (decimal in [1/sqrt7, 1/2]).
        #[arg(long, default_value = "0.45")]
        side: String,
        #[arg(long, default_value_t = 10000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Bound tables for p_d.
    Bounds {
        #[command(subcommand)]
        cmd: BoundsCmd,
    },
    /// Growth-rate facts for maximum unit-distance counts.
    Extremal {
        #[command(subcommand)]
        cmd: ExtremalCmd,
    },
    /// Minimum monochromatic pairs f(n) under 4 colors.
    F {
        #[arg(long)]
        n: u64,
        /// Cross-check against the brute-force oracle (n <= 12).
        #[arg(long)]
        brute: bool,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// List all catalog entries.
    List,
    /// Show one entry in full.
    Show {
        name: String,
        /// Emit machine-readable JSON instead of text.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum BoundsCmd {
    /// Print the assembled upper and lower bound tables.
    Table {
        /// Also run fixed-point propagation (adds the 1/325 piece).
        #[arg(long)]
        propagate: bool,
        /// Write the table as CSV to this path.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Write a step plot as SVG to this path.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Derive the bounds applicable at a single distance d.
    Derive {
        /// Distance (decimal).
        #[arg(long)]
        d: String,
    },
}

#[derive(Subcommand)]
enum ExtremalCmd {
    /// Check the density recurrence over the known small-n table and print
    /// the n^(4/3) coefficient.
    Check,
}

fn main() {
    // Die quietly on closed pipes (e.g. `plane-chroma catalog list | head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // clap distinguishes help/version (success) from usage errors.
            if e.use_stderr() {
                let _ = e.print();
                exit(EXIT_USAGE);
            }
            let _ = e.print();
            exit(0);
        }
    };
    match cli.cmd {
        Cmd::Catalog { cmd } => run_catalog(cmd),
        Cmd::Verify {
            name,
            graph,
            embedding,
            d,
        } => run_verify(name, graph, embedding, d),
        Cmd::Realize {
            name,
            graph,
            d,
            seed,
            attempts,
            output,
        } => run_realize(name, graph, d, seed, attempts, output),
        Cmd::RangeScan {
            name,
            graph,
            lo,
            hi,
            steps,
            seed,
        } => run_range_scan(name, graph, &lo, &hi, steps, seed),
        Cmd::Chromatic { name, graph } => run_chromatic(name, graph),
        Cmd::Colorings {
            name,
            graph,
            k,
            max_multiplicity,
        } => run_colorings(name, graph, k, max_multiplicity),
        Cmd::Cnf {
            name,
            graph,
            k,
            output,
        } => run_cnf(name, graph, k, output),
        Cmd::HexVerify {
            side,
            samples,
            seed,
        } => run_hex_verify(&side, samples, seed),
        Cmd::Bounds { cmd } => run_bounds(cmd),
        Cmd::Extremal { cmd } => run_extremal(cmd),
        Cmd::F { n, brute } => run_f(n, brute),
    }
}

// ---------------------------------------------------------------------------
// Input helpers.
// ---------------------------------------------------------------------------

fn parse_scalar(s: &str, what: &str) -> Scalar {
    match Scalar::parse_decimal(s) {
        Some(v) => v,
        None => invalid(&format!("cannot parse {what} value '{s}' as a decimal")),
    }
}

fn read_json(path: &PathBuf) -> serde_json::Value {
    let text = std::fs::read_to_string(path)
        .unwrap_or_else(|e| invalid(&format!("cannot read {}: {e}", path.display())));
    serde_json::from_str(&text)
        .unwrap_or_else(|e| invalid(&format!("{} is not valid JSON: {e}", path.display())))
}

fn get_entry(name: &str) -> CatalogEntry {
    catalog(name).unwrap_or_else(|e| invalid(&e.to_string()))
}

fn load_simple(name: &Option<String>, graph: &Option<PathBuf>) -> SimpleGraph {
    match (name, graph) {
        (Some(n), None) => match get_entry(n).graph {
            CatalogGraph::Simple(g) => g,
            CatalogGraph::Bicolored(_) => {
                invalid(&format!("{n} is a bicolored entry; this command needs a simple graph"))
            }
        },
        (None, Some(p)) => SimpleGraph::from_json(&read_json(p))
            .unwrap_or_else(|e| invalid(&format!("{}: {e}", p.display()))),
        _ => invalid("provide exactly one of --name or --graph"),
    }
}

fn load_bicolored(name: &Option<String>, graph: &Option<PathBuf>) -> (BicoloredGraph, Option<Scalar>) {
    match (name, graph) {
        (Some(n), None) => {
            let entry = get_entry(n);
            match entry.graph {
                CatalogGraph::Bicolored(g) => (g, entry.d),
                CatalogGraph::Simple(_) => {
                    invalid(&format!("{n} is a simple entry; this command needs a bicolored graph"))
                }
            }
        }
        (None, Some(p)) => (
            BicoloredGraph::from_json(&read_json(p))
                .unwrap_or_else(|e| invalid(&format!("{}: {e}", p.display()))),
            None,
        ),
        _ => invalid("provide exactly one of --name or --graph"),
    }
}

// ---------------------------------------------------------------------------
// Subcommand bodies.
// ---------------------------------------------------------------------------

fn run_catalog(cmd: CatalogCmd) {
    match cmd {
        CatalogCmd::List => {
            for name in catalog_names() {
                let e = get_entry(name);
                let (kind, n, m) = match &e.graph {
                    CatalogGraph::Simple(g) => ("simple", g.n(), g.edge_count()),
                    CatalogGraph::Bicolored(g) => {
                        let (u, d) = g.count_labels();
                        ("bicolored", g.n(), u + d)
                    }
                };
                println!("{name:<24} {kind:<10} n={n:<3} edges={m:<3} {}", e.description);
            }
        }
        CatalogCmd::Show { name, json } => {
            let e = get_entry(&name);
            if json {
                let graph = match &e.graph {
                    CatalogGraph::Simple(g) => g.to_json(),
                    CatalogGraph::Bicolored(g) => g.to_json(),
                };
                let v = serde_json::json!({
                    "name": e.name,
                    "description": e.description,
                    "graph": graph,
                    "embedding": e.embedding.to_json(),
                    "d": e.d.as_ref().map(|d| d.to_decimal_string()),
                    "d_symbolic": e.d_symbolic,
                    "vertex_names": e.vertex_names,
                    "notes": e.notes,
                });
                println!("{}", serde_json::to_string_pretty(&v).unwrap());
                return;
            }
            println!("{}: {}", e.name, e.description);
            if let Some(d) = &e.d {
                let sym = e.d_symbolic.unwrap_or("");
                println!("d = {} {}", d.to_f64(), sym);
            }
            for (i, p) in e.embedding.points.iter().enumerate() {
                let label = e.vertex_names.get(i).cloned().unwrap_or_else(|| i.to_string());
                println!("  {label}: ({:.12}, {:.12})", p.x.to_f64(), p.y.to_f64());
            }
            match &e.graph {
                CatalogGraph::Simple(g) => {
                    let edges: Vec<String> =
                        g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
                    println!("edges: {}", edges.join(" "));
                }
                CatalogGraph::Bicolored(g) => {
                    let edges: Vec<String> = g
                        .labeled_edges()
                        .map(|(u, v, l)| format!("{u}-{v}:{l:?}"))
                        .collect();
                    println!("edges: {}", edges.join(" "));
                }
            }
            for note in &e.notes {
                println!("note: {note}");
            }
        }
    }
}

fn run_verify(
    name: Option<String>,
    graph: Option<PathBuf>,
    embedding: Option<PathBuf>,
    d: Option<String>,
) {
    let tol = Tolerance::default();
    let report = if let Some(n) = &name {
        let e = get_entry(n);
        match &e.graph {
            CatalogGraph::Simple(g) => verify(g, &e.embedding, &tol),
            CatalogGraph::Bicolored(g) => {
                let dv = e.d.clone().unwrap_or_else(|| internal("catalog entry lacks d"));
                verify_bicolored(g, &e.embedding, &dv, &tol)
            }
        }
    } else {
        let emb_path = embedding
            .as_ref()
            .unwrap_or_else(|| invalid("--embedding is required with --graph"));
        let emb = Embedding::from_json(&read_json(emb_path))
            .unwrap_or_else(|e| invalid(&e.to_string()));
        match &d {
            Some(ds) => {
                let (bg, _) = load_bicolored(&None, &graph);
                verify_bicolored(&bg, &emb, &parse_scalar(ds, "--d"), &tol)
            }
            None => {
                let g = load_simple(&None, &graph);
                verify(&g, &emb, &tol)
            }
        }
    };
    let report = report.unwrap_or_else(|e| invalid(&e.to_string()));
    let v = serde_json::json!({
        "is_udr": report.is_udr,
        "is_faithful": report.is_faithful,
        "edge_violations": report.edge_violations,
        "nonedge_unit_pairs": report.nonedge_unit_pairs,
        "coincident_pairs": report.coincident_pairs,
    });
    println!("{}", serde_json::to_string_pretty(&v).unwrap());
}

fn run_realize(
    name: Option<String>,
    graph: Option<PathBuf>,
    d: Option<String>,
    seed: u64,
    attempts: usize,
    output: Option<PathBuf>,
) {
    let cfg = RealizeConfig {
        seed,
        attempts,
        ..RealizeConfig::default()
    };
    // Catalog entries carry their own d; file input uses --d to pick the
    // bicolored interpretation.
    let result = if let Some(n) = &name {
        let e = get_entry(n);
        match &e.graph {
            CatalogGraph::Simple(g) => realize(g, &cfg),
            CatalogGraph::Bicolored(g) => {
                let dv = match &d {
                    Some(ds) => parse_scalar(ds, "--d"),
                    None => e.d.clone().unwrap_or_else(|| internal("catalog entry lacks d")),
                };
                realize_bicolored(g, &dv, &cfg)
            }
        }
    } else {
        match &d {
            Some(ds) => {
                let (bg, _) = load_bicolored(&None, &graph);
                realize_bicolored(&bg, &parse_scalar(ds, "--d"), &cfg)
            }
            None => realize(&load_simple(&None, &graph), &cfg),
        }
    };
    match result {
        Ok(Some(emb)) => {
            let json = serde_json::to_string_pretty(&emb.to_json()).unwrap();
            match output {
                Some(p) => {
                    std::fs::write(&p, json)
                        .unwrap_or_else(|e| internal(&format!("write {}: {e}", p.display())));
                    println!("embedding written to {}", p.display());
                }
                None => println!("{json}"),
            }
        }
        Ok(None) => {
            eprintln!(
                "search exhausted after {attempts} attempts; no embedding found \
                 (absence is advisory, not a proof)"
            );
            exit(EXIT_EXHAUSTED);
        }
        Err(e) => invalid(&e.to_string()),
    }
}

fn run_range_scan(
    name: Option<String>,
    graph: Option<PathBuf>,
    lo: &str,
    hi: &str,
    steps: usize,
    seed: u64,
) {
    let (bg, _) = load_bicolored(&name, &graph);
    let cfg = RealizeConfig {
        seed,
        ..RealizeConfig::default()
    };
    let rows = range_scan(
        &bg,
        &parse_scalar(lo, "--lo"),
        &parse_scalar(hi, "--hi"),
        steps,
        &cfg,
    )
    .unwrap_or_else(|e| invalid(&e.to_string()));
    println!("d,found");
    for (d, found) in rows {
        println!("{},{}", d.to_f64(), found);
    }
}

fn run_chromatic(name: Option<String>, graph: Option<PathBuf>) {
    let g = load_simple(&name, &graph);
    let chi = chromatic_number(&g);
    println!("chromatic number: {chi}");
    if let Some(c) = coloring::k_colorable(&g, chi) {
        println!("witness: {}", c.to_json());
    }
}

fn run_colorings(name: Option<String>, graph: Option<PathBuf>, k: usize, max_mult: bool) {
    let g = load_simple(&name, &graph);
    let all = enumerate_proper_colorings(&g, k).unwrap_or_else(|e| invalid(&e.to_string()));
    println!("proper {k}-colorings: {}", all.len());
    if max_mult {
        let m = max_color_multiplicity(&g, k).unwrap_or_else(|e| invalid(&e.to_string()));
        println!("max color class size: {m}");
    }
}

fn run_cnf(name: Option<String>, graph: Option<PathBuf>, k: usize, output: Option<PathBuf>) {
    let g = load_simple(&name, &graph);
    let text = export_cnf(&g, k);
    match output {
        Some(p) => {
            std::fs::write(&p, text)
                .unwrap_or_else(|e| internal(&format!("write {}: {e}", p.display())));
            println!("CNF written to {}", p.display());
        }
        None => print!("{text}"),
    }
}

fn run_hex_verify(side: &str, samples: u64, seed: u64) {
    let cfg = HexConfig::new(parse_scalar(side, "--side"))
        .unwrap_or_else(|e| invalid(&e.to_string()));
    let report = hex_verify(&cfg, samples, seed).unwrap_or_else(|e| invalid(&e.to_string()));
    println!("samples: {}", report.samples);
    println!("unit-distance same-color violations: {}", report.violations);
    println!(
        "min same-color distance observed: {}",
        report.min_same_color_dist_observed
    );
    if report.violations > 0 {
        exit(EXIT_INTERNAL);
    }
}

fn rational_str(r: &Rational) -> String {
    format!("{}/{} = {:.6}", r.numer(), r.denom(), bounds::rational_to_f64(r))
}

fn piece_line(p: &BoundPiece) -> String {
    let lo_b = if p.interval.lo_closed { '[' } else { '(' };
    let (hi_s, hi_b) = match &p.interval.hi {
        Some(h) => (format!("{:.6}", h.to_f64()), if p.interval.hi_closed { ']' } else { ')' }),
        None => ("inf".to_string(), ')'),
    };
    format!(
        "{lo_b}{:.6}, {hi_s}{hi_b}  {}  {}  ({})",
        p.interval.lo.to_f64(),
        p.kind,
        rational_str(&p.value),
        p.provenance
    )
}

fn assembled_table(propagate: bool) -> BoundTable {
    let upper = bounds::upper_bound_table();
    let summary = families::summary_table(&upper)
        .unwrap_or_else(|e| internal(&e.to_string()));
    let mut table = BoundTable::new();
    for p in upper.pieces.iter().chain(summary.pieces.iter()) {
        table.push(p.clone());
    }
    table.notes.extend(upper.notes.iter().cloned());
    table.notes.extend(summary.notes.iter().cloned());
    if propagate {
        let before = table.pieces.len();
        table = bounds::propagate(&table, &[bounds::one_over_325_config()], 8);
        if table.pieces.len() > before {
            table.notes.push(
                "fixed-point piece: below d = (sqrt5-1)/sqrt3 the point set is not \
                 realizable for d < 1/2; that range is covered independently (and more \
                 strongly) by family-1"
                    .into(),
            );
        }
    }
    table
}

fn run_bounds(cmd: BoundsCmd) {
    match cmd {
        BoundsCmd::Table { propagate, csv, svg } => {
            let table = assembled_table(propagate);
            for p in &table.pieces {
                println!("{}", piece_line(p));
            }
            for n in &table.notes {
                println!("note: {n}");
            }
            if let Some(p) = csv {
                std::fs::write(&p, table.to_csv())
                    .unwrap_or_else(|e| internal(&format!("write {}: {e}", p.display())));
                println!("CSV written to {}", p.display());
            }
            if let Some(p) = svg {
                std::fs::write(&p, table.to_svg())
                    .unwrap_or_else(|e| internal(&format!("write {}: {e}", p.display())));
                println!("SVG written to {}", p.display());
            }
        }
        BoundsCmd::Derive { d } => {
            let dv = parse_scalar(&d, "--d");
            if !dv.is_positive() {
                invalid("d must be positive");
            }
            let table = assembled_table(true);
            for kind in [BoundKind::Lower, BoundKind::Upper] {
                let best = table
                    .pieces
                    .iter()
                    .filter(|p| p.kind == kind && p.interval.contains(&dv))
                    .max_by(|a, b| match kind {
                        BoundKind::Lower => a.value.cmp(&b.value),
                        BoundKind::Upper => b.value.cmp(&a.value),
                    });
                match best {
                    Some(p) => println!(
                        "{kind} bound at d={}: {} ({})",
                        dv.to_f64(),
                        rational_str(&p.value),
                        p.provenance
                    ),
                    None => println!("{kind} bound at d={}: none known", dv.to_f64()),
                }
            }
        }
    }
}

fn run_extremal(cmd: ExtremalCmd) {
    match cmd {
        ExtremalCmd::Check => {
            let table = extremal::max_unit_distance_table();
            let report = extremal::density_recurrence_check(&table);
            println!(
                "crossing constant: {:.12} (search) vs {:.12} (closed form)",
                extremal::crossing_constant().to_f64(),
                extremal::crossing_constant_closed_form().to_f64()
            );
            println!(
                "n^(4/3) coefficient: {:.12}",
                extremal::u_upper_coefficient().to_f64()
            );
            for (n, u) in &table {
                println!("u({n}) = {u}   upper: {:.3}", extremal::u_upper(*n as u64).to_f64());
            }
            println!("recurrence tight at: {:?}", report.tight);
            if report.violations.is_empty() {
                println!("density recurrence: ok");
            } else {
                println!("density recurrence violations at: {:?}", report.violations);
                exit(EXIT_INTERNAL);
            }
        }
    }
}

fn run_f(n: u64, brute: bool) {
    let formula = bounds::f_min_mono_pairs(n);
    println!("f({n}) = {formula}");
    if brute {
        if n > 12 {
            invalid("--brute is limited to n <= 12");
        }
        let b = bounds::f_brute(n as u32).unwrap_or_else(|e| invalid(&e.to_string()));
        println!("brute force: {b}");
        if b != formula {
            internal("formula and brute force disagree");
        }
    }
}
