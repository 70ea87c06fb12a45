//! Classify every catalog map and print its basic invariants.

use equimap::catalog;
use equimap::classifier::classify;

fn main() {
    println!(
        "{:<5} {:<20} {:<13} {:>3} {:>3} {:>3}  chi orientable",
        "map", "type", "surface", "V", "E", "F"
    );
    for e in catalog::list() {
        let c = classify(&e.map);
        let s = e.map.surface_info();
        println!(
            "{:<5} {:<20} {:<13} {:>3} {:>3} {:>3}  {:>3} {}",
            e.name,
            c.type_string
                .expect("catalog maps are semi-equivelar")
                .to_string(),
            e.surface.to_string(),
            e.map.n_vertices(),
            e.map.n_edges(),
            e.map.n_faces(),
            s.euler_characteristic,
            s.orientable,
        );
    }
}
