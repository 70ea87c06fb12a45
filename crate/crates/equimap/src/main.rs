use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use equimap::automorphism::{is_face_transitive, vertex_orbits};
use equimap::aux_graphs::{
    auxiliary_graph, cycle_lengths, degree_obstruction, transitivity_obstruction, AuxGraphSpec,
    Selector,
};
use equimap::classifier::{classify, TypeString};
use equimap::enumerator::{admissible_types, Surface};
use equimap::map::PolyhedralMap;
use equimap::tilings::{builtin_tilings, quotient_to_text, torus_quotient, LatticeBasis};
use equimap::verify::paper_report;

/// Classify, enumerate, generate and verify semi-equivelar maps on the torus
/// and the Klein bottle.
#[derive(Parser)]
#[command(name = "equimap", version, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the semi-equivelar type of a map, or a witness pair if mixed.
    Classify { path: PathBuf },
    /// Print the vertex orbit partition and transitivity verdicts.
    Orbits { path: PathBuf },
    /// List the admissible semi-equivelar types on a surface.
    Enumerate {
        #[arg(long)]
        surface: Surface,
    },
    /// Write a torus quotient of a built-in tiling to a map file.
    Generate {
        /// Tiling type, e.g. "[3^6]" or "[3^2,4^1,3^1,4^1]".
        #[arg(long)]
        tiling: String,
        /// Sublattice basis a1 a2 b1 b2.
        #[arg(long, num_args = 4, allow_negative_numbers = true)]
        basis: Vec<i64>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Write the dual of a map.
    Dual { input: PathBuf, output: PathBuf },
    /// Build an auxiliary graph and report its cycle structure.
    AuxGraph {
        #[arg(long)]
        map: PathBuf,
        /// One or more selectors: quad-diagonals, long-diagonals-<2k>,
        /// shared-8gon-edges, nice-edges, induced-3-cycles, non-edge-complement.
        #[arg(long, required = true)]
        selector: Vec<Selector>,
    },
    /// Run the complete verification suite.
    VerifyPaper {
        #[arg(long)]
        json: bool,
    },
}

fn load_map(path: &PathBuf) -> Result<PolyhedralMap, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    PolyhedralMap::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn run() -> Result<(), String> {
    match Cli::parse().command {
        Command::Classify { path } => {
            let map = load_map(&path)?;
            let c = classify(&map);
            match (c.type_string, c.witness) {
                (Some(t), _) => println!("{t}"),
                (None, Some((u, v))) => println!(
                    "not semi-equivelar: vertices {} and {} have different face-cycle types",
                    map.vertex_name(u),
                    map.vertex_name(v)
                ),
                _ => unreachable!(),
            }
        }
        Command::Orbits { path } => {
            let map = load_map(&path)?;
            let orbits = vertex_orbits(&map).map_err(|e| e.to_string())?;
            println!(
                "vertex-orbits: {}{}",
                orbits.len(),
                if orbits.len() == 1 {
                    " (transitive)"
                } else {
                    ""
                }
            );
            for orbit in &orbits {
                let names: Vec<String> = orbit.iter().map(|&v| map.vertex_name(v)).collect();
                println!("  {{{}}}", names.join(", "));
            }
            println!(
                "face-transitive: {}",
                is_face_transitive(&map).map_err(|e| e.to_string())?
            );
        }
        Command::Enumerate { surface } => {
            for t in admissible_types(surface) {
                println!("{t}");
            }
        }
        Command::Generate { tiling, basis, out } => {
            let t: TypeString = tiling.parse().map_err(|e| format!("{e}"))?;
            let tilings = builtin_tilings();
            let spec = tilings
                .get(&t)
                .ok_or_else(|| format!("no built-in tiling of type {t}"))?;
            let basis = LatticeBasis::new((basis[0], basis[1]), (basis[2], basis[3]));
            let map = torus_quotient(spec, &basis).map_err(|e| e.to_string())?;
            fs::write(&out, quotient_to_text(spec, &basis, &map))
                .map_err(|e| format!("{}: {e}", out.display()))?;
            println!(
                "wrote {} ({} vertices, {} edges, {} faces)",
                out.display(),
                map.n_vertices(),
                map.n_edges(),
                map.n_faces()
            );
        }
        Command::Dual { input, output } => {
            let map = load_map(&input)?;
            let dual = map.dual().map_err(|e| e.to_string())?;
            fs::write(&output, dual.to_text()).map_err(|e| format!("{}: {e}", output.display()))?;
            println!(
                "wrote {} ({} vertices, {} edges, {} faces)",
                output.display(),
                dual.n_vertices(),
                dual.n_edges(),
                dual.n_faces()
            );
        }
        Command::AuxGraph {
            map: path,
            selector,
        } => {
            let map = load_map(&path)?;
            let spec = AuxGraphSpec::new(selector.clone());
            let graph = auxiliary_graph(&map, &spec).map_err(|e| e.to_string())?;
            let names: Vec<String> = selector.iter().map(Selector::to_string).collect();
            println!("selectors: {}", names.join(" "));
            println!("edges: {}", graph.edges.len());
            match cycle_lengths(&graph) {
                Ok(lens) => {
                    let parts: Vec<String> = lens.iter().map(usize::to_string).collect();
                    println!("cycle components: {}", parts.join(" "));
                    match transitivity_obstruction(&map, &spec).map_err(|e| e.to_string())? {
                        Some(w) => println!(
                            "witness: {} (cycle of {}) vs {} (cycle of {}) -- not vertex-transitive",
                            map.vertex_name(w.vertex_a),
                            w.len_a,
                            map.vertex_name(w.vertex_b),
                            w.len_b
                        ),
                        None => println!("witness: none"),
                    }
                }
                Err(_) => {
                    println!("graph is not 2-regular");
                    match degree_obstruction(&map, &spec).map_err(|e| e.to_string())? {
                        Some((a, b)) => println!(
                            "witness: {} and {} have different degrees -- not vertex-transitive",
                            map.vertex_name(a),
                            map.vertex_name(b)
                        ),
                        None => println!("witness: none"),
                    }
                }
            }
        }
        Command::VerifyPaper { json } => {
            let report = paper_report();
            if json {
                print!("{}", report.render_json());
            } else {
                print!("{}", report.render_text());
            }
            if !report.all_pass() {
                std::process::exit(1);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
