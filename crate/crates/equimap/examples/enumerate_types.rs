//! Walk the whole type-enumeration pipeline: exact solutions of the vertex
//! equation, their cyclic arrangements, the parity filter, and the admissible
//! lists for both chi = 0 surfaces.

use equimap::enumerator::{
    admissible_types, all_candidate_types, expand_arrangements, solve_vertex_equation,
    violates_restriction, Surface,
};

fn main() {
    let solutions = solve_vertex_equation();
    println!(
        "{} degree multisets solve the vertex equation:",
        solutions.len()
    );
    for m in &solutions {
        let arr: Vec<String> = expand_arrangements(m)
            .iter()
            .map(|t| t.to_string())
            .collect();
        println!(
            "  d={} {:<18} -> {}",
            m.degree(),
            m.to_string(),
            arr.join(" ")
        );
    }

    let candidates = all_candidate_types();
    println!(
        "\n{} cyclic arrangements in total; parity filter:",
        candidates.len()
    );
    for t in &candidates {
        match violates_restriction(t) {
            Some(v) => println!("  {t:<20} excluded by rule ({})", v.rule),
            None => println!("  {t:<20} admissible"),
        }
    }

    for surface in [Surface::Torus, Surface::KleinBottle] {
        let types = admissible_types(surface);
        println!("\n{} admissible types on the {surface}:", types.len());
        for t in types {
            println!("  {t}");
        }
    }
}
