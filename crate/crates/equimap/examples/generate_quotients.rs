//! Generate torus quotients of the built-in Archimedean tilings over a few
//! sublattices, including one that is too small to stay polyhedral.

use equimap::classifier::classify;
use equimap::tilings::{builtin_tilings, torus_quotient, LatticeBasis};

fn main() {
    let bases = [
        LatticeBasis::new((3, 0), (0, 3)),
        LatticeBasis::new((4, 1), (1, 4)),
        LatticeBasis::new((5, 2), (0, 4)),
    ];
    for (t, spec) in builtin_tilings() {
        println!("{t} ({} vertex classes per cell):", spec.orbit_classes);
        for basis in bases {
            match torus_quotient(&spec, &basis) {
                Ok(map) => {
                    let c = classify(&map);
                    println!(
                        "  basis ({:2},{:2})x({:2},{:2})  det {:>2}  V={:<3} E={:<3} F={:<3} type {}",
                        basis.a.0, basis.a.1, basis.b.0, basis.b.1,
                        basis.det(),
                        map.n_vertices(), map.n_edges(), map.n_faces(),
                        c.type_string.unwrap(),
                    );
                }
                Err(e) => println!("  basis {basis:?}: {e}"),
            }
        }
    }

    println!("\nlattices that are too small fail validation:");
    let tri = &builtin_tilings()[&"[3^6]".parse().unwrap()];
    for basis in [
        LatticeBasis::new((1, 0), (0, 1)),
        LatticeBasis::new((2, 0), (0, 2)),
    ] {
        match torus_quotient(tri, &basis) {
            Ok(_) => println!("  det {} unexpectedly verified", basis.det()),
            Err(e) => println!("  det {}: {e}", basis.det()),
        }
    }
}
