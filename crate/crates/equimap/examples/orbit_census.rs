//! Vertex orbit census: the catalog maps and a family of generated quotients.

use equimap::automorphism::{automorphism_group, is_face_transitive, vertex_orbits};
use equimap::catalog;
use equimap::tilings::{builtin_tilings, torus_quotient, LatticeBasis};

fn main() {
    println!("catalog:");
    for e in catalog::list() {
        let orbits = vertex_orbits(&e.map).unwrap();
        let group = automorphism_group(&e.map).unwrap();
        println!(
            "  {:<4} |Aut| = {:<4} vertex orbits = {} {}",
            e.name,
            group.len(),
            orbits.len(),
            if orbits.len() == 1 {
                "(vertex-transitive)"
            } else {
                ""
            },
        );
    }

    println!("\ntorus quotients by the lattice (4,1),(1,4):");
    let basis = LatticeBasis::new((4, 1), (1, 4));
    for (t, spec) in builtin_tilings() {
        let map = torus_quotient(&spec, &basis).unwrap();
        let orbits = vertex_orbits(&map).unwrap();
        println!(
            "  {:<20} V={:<3} orbits = {}  face-transitive = {}",
            t.to_string(),
            map.n_vertices(),
            orbits.len(),
            is_face_transitive(&map).unwrap(),
        );
    }
}
