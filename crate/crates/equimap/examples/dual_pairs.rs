//! Duality: triangular quotients dualize to hexagonal maps, the double dual
//! returns the original map, and K9 is the dual of K8.

use equimap::automorphism::{are_isomorphic, automorphism_group};
use equimap::catalog;
use equimap::classifier::classify;
use equimap::tilings::{builtin_tilings, torus_quotient, LatticeBasis};

fn main() {
    let tri = &builtin_tilings()[&"[3^6]".parse().unwrap()];
    let map = torus_quotient(tri, &LatticeBasis::new((4, 0), (0, 4))).unwrap();
    let dual = map.dual().unwrap();
    println!(
        "[3^6] quotient: V={} -> dual type {} with V={}",
        map.n_vertices(),
        classify(&dual).type_string.unwrap(),
        dual.n_vertices(),
    );
    println!(
        "dual(dual(m)) isomorphic to m: {}",
        are_isomorphic(&dual.dual().unwrap(), &map)
    );
    println!(
        "|Aut(m)| = {} = |Aut(dual(m))| = {}",
        automorphism_group(&map).unwrap().len(),
        automorphism_group(&dual).unwrap().len(),
    );

    let k8 = &catalog::get("K8").unwrap().map;
    let k9 = &catalog::get("K9").unwrap().map;
    println!(
        "dual(K8) isomorphic to K9: {}",
        are_isomorphic(&k8.dual().unwrap(), k9)
    );
}
