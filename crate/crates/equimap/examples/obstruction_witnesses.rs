//! Build the auxiliary graphs that certify catalog maps as not
//! vertex-transitive and print their cycle decompositions and witnesses.

use equimap::aux_graphs::{
    auxiliary_graph, cycle_components, degree_obstruction, transitivity_obstruction, AuxGraphSpec,
    Selector,
};
use equimap::catalog;
use equimap::verify::{K7_SELECTORS, OBSTRUCTIONS};

fn main() {
    for &(name, selectors, _, _) in OBSTRUCTIONS {
        report(name, selectors);
    }
    report("K7", K7_SELECTORS);

    // the remaining maps use degree inhomogeneity or the non-edge graph
    for name in ["K2", "K10"] {
        let map = &catalog::get(name).unwrap().map;
        let spec = AuxGraphSpec::new([Selector::InducedThreeCycles]);
        let graph = auxiliary_graph(map, &spec).unwrap();
        let (a, b) = degree_obstruction(map, &spec).unwrap().unwrap();
        println!(
            "{name:<4} induced-3-cycles: {} edges; degrees differ at {} and {} -> not vertex-transitive",
            graph.edges.len(),
            map.vertex_name(a),
            map.vertex_name(b),
        );
    }
    report("K8", &[Selector::NonEdgeComplement]);
}

fn report(name: &str, selectors: &[Selector]) {
    let map = &catalog::get(name).unwrap().map;
    let spec = AuxGraphSpec::new(selectors);
    let graph = auxiliary_graph(map, &spec).unwrap();
    let comps = cycle_components(&graph).unwrap();
    let lens: Vec<String> = comps.iter().map(|c| c.len().to_string()).collect();
    let names: Vec<String> = selectors.iter().map(Selector::to_string).collect();
    print!("{name:<4} {}: cycles {}", names.join("+"), lens.join("+"));
    match transitivity_obstruction(map, &spec).unwrap() {
        Some(w) => println!(
            "; witness {} (in a {}-cycle) vs {} (in a {}-cycle) -> not vertex-transitive",
            map.vertex_name(w.vertex_a),
            w.len_a,
            map.vertex_name(w.vertex_b),
            w.len_b
        ),
        None => println!("; components have equal length, no witness from this selector"),
    }
}
