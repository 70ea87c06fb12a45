//! Property tests and independent oracles: a brute-force automorphism search
//! cross-checks the flag-propagation group, translations of quotients are
//! verified as group members, and canonicalization invariances run under
//! proptest.

use std::collections::HashSet;

use proptest::prelude::*;

use equimap::automorphism::{automorphism_group, automorphism_group_from_base, vertex_orbits};
use equimap::aux_graphs::{transitivity_obstruction, AuxGraphSpec, Selector};
use equimap::catalog;
use equimap::classifier::{face_cycle_type, TypeString};
use equimap::map::PolyhedralMap;
use equimap::tilings::{builtin_tilings, torus_quotient, LatticeBasis};

/// Independent oracle: enumerate all vertex bijections that preserve adjacency
/// and map faces onto faces, by backtracking with adjacency pruning. Never
/// touches the flag machinery.
fn brute_force_automorphism_count(map: &PolyhedralMap) -> usize {
    let n = map.n_vertices();
    let mut adj = vec![HashSet::new(); n];
    for &(u, v) in map.edges_internal() {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    let canon = |f: &[usize]| -> Vec<usize> {
        let mut best: Option<Vec<usize>> = None;
        let rev: Vec<usize> = f.iter().rev().copied().collect();
        for seq in [f, rev.as_slice()] {
            for r in 0..seq.len() {
                let mut c = seq[r..].to_vec();
                c.extend_from_slice(&seq[..r]);
                if best.as_ref().is_none_or(|b| c < *b) {
                    best = Some(c);
                }
            }
        }
        best.unwrap()
    };
    let face_set: HashSet<Vec<usize>> = map.faces_internal().iter().map(|f| canon(f)).collect();

    // assign images in an order where each vertex has an assigned neighbour
    let mut order = vec![0usize];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut i = 0;
    while i < order.len() {
        for &w in &adj[order[i]] {
            if !seen[w] {
                seen[w] = true;
                order.push(w);
            }
        }
        i += 1;
    }
    assert_eq!(order.len(), n, "oracle assumes a connected map");

    fn extend(
        pos: usize,
        order: &[usize],
        adj: &[HashSet<usize>],
        img: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        count: &mut usize,
        face_set: &HashSet<Vec<usize>>,
        faces: &[Vec<usize>],
        canon: &dyn Fn(&[usize]) -> Vec<usize>,
    ) {
        if pos == order.len() {
            // adjacency held throughout; now require faces to map onto faces
            let ok = faces.iter().all(|f| {
                let g: Vec<usize> = f.iter().map(|&v| img[v].unwrap()).collect();
                face_set.contains(&canon(&g))
            });
            if ok {
                *count += 1;
            }
            return;
        }
        let v = order[pos];
        let candidates: Vec<usize> = (0..adj.len())
            .filter(|&c| !used[c] && adj[c].len() == adj[v].len())
            .filter(|&c| {
                adj[v].iter().all(|&w| match img[w] {
                    Some(iw) => adj[c].contains(&iw),
                    None => true,
                })
            })
            .collect();
        for c in candidates {
            img[v] = Some(c);
            used[c] = true;
            extend(
                pos + 1,
                order,
                adj,
                img,
                used,
                count,
                face_set,
                faces,
                canon,
            );
            img[v] = None;
            used[c] = false;
        }
    }

    let mut img = vec![None; n];
    let mut used = vec![false; n];
    let mut count = 0;
    extend(
        0,
        &order,
        &adj,
        &mut img,
        &mut used,
        &mut count,
        &face_set,
        map.faces_internal(),
        &canon,
    );
    count
}

#[test]
fn flag_group_matches_brute_force_on_square_grid() {
    let tilings = builtin_tilings();
    let spec = &tilings[&"[4^4]".parse::<TypeString>().unwrap()];
    let map = torus_quotient(spec, &LatticeBasis::new((4, 0), (0, 4))).unwrap();
    assert_eq!(map.n_vertices(), 16);
    let flag_order = automorphism_group(&map).unwrap().len();
    let oracle_order = brute_force_automorphism_count(&map);
    assert_eq!(flag_order, oracle_order);
    // 16 translations act freely, so they divide the order
    assert_eq!(flag_order % 16, 0);
    assert_eq!(flag_order, 128);
}

#[test]
fn flag_group_matches_brute_force_on_t1_and_t2() {
    let t1 = &catalog::get("T1").unwrap().map;
    let g1 = automorphism_group(t1).unwrap().len();
    assert_eq!(g1, brute_force_automorphism_count(t1));
    // transitive on 10 vertices, so the order is a multiple of 10
    assert_eq!(g1 % 10, 0);

    let t2 = &catalog::get("T2").unwrap().map;
    let g2 = automorphism_group(t2).unwrap().len();
    assert_eq!(g2, brute_force_automorphism_count(t2));
    assert_eq!(vertex_orbits(t2).unwrap().len(), 2);
    // faces of two different sizes exist, so no single face orbit
    assert!(!equimap::automorphism::is_face_transitive(t2).unwrap());
}

#[test]
fn quotient_translations_are_automorphisms() {
    let tilings = builtin_tilings();
    for t in ["[3^6]", "[3^3,4^2]", "[3^1,6^1,3^1,6^1]"] {
        let spec = &tilings[&t.parse::<TypeString>().unwrap()];
        let basis = LatticeBasis::new((3, 0), (0, 3));
        let map = torus_quotient(spec, &basis).unwrap();
        let group = automorphism_group(&map).unwrap();
        let det = basis.det().unsigned_abs() as usize;
        assert_eq!(group.len() % det, 0, "{t}: |det| must divide |Aut|");

        // build each translation's vertex permutation explicitly: vertex ids
        // are class * det + (y * 3 + x) for this diagonal basis
        let n = map.n_vertices();
        let classes = n / det;
        for (dx, dy) in (0..3).flat_map(|x| (0..3).map(move |y| (x, y))) {
            let mut perm = vec![0usize; n];
            for c in 0..classes {
                for y in 0..3 {
                    for x in 0..3 {
                        let from = c * det + y * 3 + x;
                        let to = c * det + ((y + dy) % 3) * 3 + (x + dx) % 3;
                        perm[map.vertex_index(from as u32).unwrap()] =
                            map.vertex_index(to as u32).unwrap();
                    }
                }
            }
            assert!(
                group.iter().any(|g| g.vertex_perm == perm),
                "{t}: translation ({dx},{dy}) missing from the group"
            );
            // free action: no fixed vertex unless identity
            if (dx, dy) != (0, 0) {
                assert!(perm.iter().enumerate().all(|(i, &j)| i != j));
            }
        }
    }
}

#[test]
fn t1_vertex_link_matches_expected_pattern() {
    let t1 = &catalog::get("T1").unwrap().map;
    let u1 = t1.id_of_label("u1").unwrap();
    let link = t1.vertex_link(u1).unwrap();
    let mut sizes: Vec<usize> = link.iter().map(|&(_, s)| s).collect();
    sizes.sort_unstable();
    assert_eq!(sizes, [3, 3, 3, 4, 4]);
    // and as a cyclic pattern the two squares are adjacent
    assert_eq!(face_cycle_type(t1, u1).unwrap().to_string(), "[3^3,4^2]");
}

#[test]
fn snub_square_quotient_link_pattern() {
    let tilings = builtin_tilings();
    let spec = &tilings[&"[3^2,4^1,3^1,4^1]".parse::<TypeString>().unwrap()];
    let map = torus_quotient(spec, &LatticeBasis::new((3, 0), (0, 3))).unwrap();
    let v = map.vertex_ids()[0];
    let t = face_cycle_type(&map, v).unwrap();
    assert_eq!(t.to_string(), "[3^2,4^1,3^1,4^1]");
    assert_eq!(t.expanded(), vec![3, 3, 4, 3, 4]);
}

#[test]
fn t1_quad_diagonals_give_no_witness() {
    // T1 is vertex-transitive, so no Aut-invariant selector may separate it
    let t1 = &catalog::get("T1").unwrap().map;
    let spec = AuxGraphSpec::new([Selector::QuadDiagonals]);
    assert_eq!(transitivity_obstruction(t1, &spec).unwrap(), None);
}

#[test]
fn t8_nice_edges_form_a_perfect_matching() {
    use equimap::aux_graphs::auxiliary_graph;
    let t8 = &catalog::get("T8").unwrap().map;
    let graph = auxiliary_graph(t8, &AuxGraphSpec::new([Selector::NiceEdges])).unwrap();
    assert_eq!(graph.edges.len(), 12);
    // exactly one nice edge through each of the 24 vertices
    for &v in t8.vertex_ids() {
        assert_eq!(graph.degree(v), 1, "vertex {}", t8.vertex_name(v));
    }
    let v10 = t8.id_of_label("v10").unwrap();
    let v15 = t8.id_of_label("v15").unwrap();
    assert!(graph.has_edge(v10, v15));
}

#[test]
fn orientation_verdict_is_seed_independent_on_catalog() {
    for e in catalog::list() {
        let want = e.map.surface_info().orientable;
        for seed in [1, 7, 13] {
            assert_eq!(e.map.orientable_from(seed), want, "{}", e.name);
        }
    }
}

#[test]
fn base_flag_independence_on_small_catalog_maps() {
    for name in ["T1", "K8", "K10"] {
        let map = &catalog::get(name).unwrap().map;
        let g0 = automorphism_group_from_base(map, 0).unwrap();
        for base in [3, 11, 29] {
            assert_eq!(
                automorphism_group_from_base(map, base).unwrap(),
                g0,
                "{name}"
            );
        }
    }
}

#[test]
fn dual_preserves_euler_characteristic() {
    for e in catalog::list() {
        if let Ok(dual) = e.map.dual() {
            assert_eq!(
                dual.surface_info().euler_characteristic,
                e.map.surface_info().euler_characteristic,
                "{}",
                e.name
            );
        }
    }
}

#[test]
fn catalog_types_appear_in_their_admissible_list() {
    use equimap::enumerator::admissible_types;
    for e in catalog::list() {
        let list = admissible_types(e.surface);
        assert!(
            list.contains(&e.expected_type),
            "{}: {}",
            e.name,
            e.expected_type
        );
    }
}

#[test]
fn serialization_round_trips_catalog_and_quotients() {
    for e in catalog::list() {
        let text = e.map.to_text();
        let again = PolyhedralMap::parse(&text).unwrap().to_text();
        assert_eq!(text, again, "{}", e.name);
    }
    let tilings = builtin_tilings();
    let spec = &tilings[&"[6^3]".parse::<TypeString>().unwrap()];
    let map = torus_quotient(spec, &LatticeBasis::new((4, 1), (1, 4))).unwrap();
    let text = map.to_text();
    assert_eq!(text, PolyhedralMap::parse(&text).unwrap().to_text());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn canonical_type_is_rotation_and_reflection_invariant(
        sizes in proptest::collection::vec(3u32..=13, 3..=6),
        rot in 0usize..6,
    ) {
        let base = TypeString::canonical(&sizes).unwrap();
        let r = rot % sizes.len();
        let mut rotated = sizes[r..].to_vec();
        rotated.extend_from_slice(&sizes[..r]);
        let reversed: Vec<u32> = sizes.iter().rev().copied().collect();
        prop_assert_eq!(&TypeString::canonical(&rotated).unwrap(), &base);
        prop_assert_eq!(&TypeString::canonical(&reversed).unwrap(), &base);
        // canonicalization is idempotent
        prop_assert_eq!(&TypeString::canonical(&base.expanded()).unwrap(), &base);
    }

    #[test]
    fn type_string_display_parse_round_trip(
        sizes in proptest::collection::vec(3u32..=13, 3..=6),
    ) {
        let t = TypeString::canonical(&sizes).unwrap();
        let back: TypeString = t.to_string().parse().unwrap();
        prop_assert_eq!(back, t);
    }

    #[test]
    fn adjacent_runs_differ_cyclically(
        sizes in proptest::collection::vec(3u32..=6, 3..=8),
    ) {
        let t = TypeString::canonical(&sizes).unwrap();
        let runs = t.runs();
        if runs.len() > 1 {
            for i in 0..runs.len() {
                prop_assert_ne!(runs[i].0, runs[(i + 1) % runs.len()].0);
            }
        }
    }
}
