//! The full verification suite: each criterion checks one set of claims about
//! the enumeration, the catalog maps, or the generated quotients, and reports
//! one pass/fail section.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::automorphism::{
    are_isomorphic, automorphism_group, is_face_transitive, is_vertex_transitive, vertex_orbits,
    MapAutomorphism,
};
use crate::aux_graphs::{
    auxiliary_graph, cycle_components, degree_obstruction, transitivity_obstruction, AuxGraphSpec,
    Selector,
};
use crate::catalog;
use crate::classifier::{classify, face_cycle_type, TypeString};
use crate::enumerator::{
    admissible_types, all_candidate_types, expand_arrangements, solve_vertex_equation,
    solve_vertex_equation_bounded, violates_restriction, Restriction, Surface,
};
use crate::map::PolyhedralMap;
use crate::tilings::{builtin_tilings, torus_quotient, LatticeBasis, TilingSpec};

#[derive(Debug, Clone)]
pub struct Section {
    pub id: &'static str,
    pub title: &'static str,
    pub pass: bool,
    pub details: String,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub sections: Vec<Section>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.sections.iter().all(|s| s.pass)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for s in &self.sections {
            let status = if s.pass { "PASS" } else { "FAIL" };
            let _ = writeln!(
                out,
                "{status} {id} {title}: {details}",
                id = s.id,
                title = s.title,
                details = s.details
            );
        }
        let _ = writeln!(
            out,
            "{}",
            if self.all_pass() {
                "all claims verified"
            } else {
                "verification FAILED"
            }
        );
        out
    }

    pub fn render_json(&self) -> String {
        fn esc(s: &str) -> String {
            s.chars()
                .flat_map(|c| match c {
                    '"' => "\\\"".chars().collect::<Vec<_>>(),
                    '\\' => "\\\\".chars().collect(),
                    '\n' => "\\n".chars().collect(),
                    c if (c as u32) < 0x20 => format!("\\u{:04x}", c as u32).chars().collect(),
                    c => vec![c],
                })
                .collect()
        }
        let mut out = String::from("{\n  \"sections\": [\n");
        for (i, s) in self.sections.iter().enumerate() {
            let _ = write!(
                out,
                "    {{\"id\": \"{}\", \"title\": \"{}\", \"pass\": {}, \"details\": \"{}\"}}",
                esc(s.id),
                esc(s.title),
                s.pass,
                esc(&s.details)
            );
            out.push_str(if i + 1 < self.sections.len() {
                ",\n"
            } else {
                "\n"
            });
        }
        let _ = write!(out, "  ],\n  \"all_pass\": {}\n}}\n", self.all_pass());
        out
    }
}

type Check = Result<String, String>;

/// Run every criterion and collect the report.
pub fn paper_report() -> Report {
    let checks: [(&'static str, &'static str, fn() -> Check); 9] = [
        (
            "C1",
            "vertex equation solutions and arrangements",
            criterion_1,
        ),
        (
            "C2",
            "admissible torus and Klein bottle type lists",
            criterion_2,
        ),
        ("C3", "parity restriction filter", criterion_3),
        ("C4", "catalog fidelity", criterion_4),
        (
            "C5",
            "catalog transitivity and obstruction cycles",
            criterion_5,
        ),
        ("C6", "vertex-transitive quotient families", criterion_6),
        (
            "C7",
            "orbit bounds for snub-square and trihexagonal quotients",
            criterion_7,
        ),
        (
            "C8",
            "face-transitivity and duality of triangular quotients",
            criterion_8,
        ),
        ("C9", "structural property suites", criterion_9),
    ];
    Report {
        sections: checks
            .into_iter()
            .map(|(id, title, f)| match f() {
                Ok(details) => Section {
                    id,
                    title,
                    pass: true,
                    details,
                },
                Err(details) => Section {
                    id,
                    title,
                    pass: false,
                    details,
                },
            })
            .collect(),
    }
}

const SEVENTEEN_MULTISETS: [&str; 17] = [
    "(3^6)",
    "(3^4,6^1)",
    "(3^3,4^2)",
    "(4^4)",
    "(3^2,6^2)",
    "(3^2,4^1,12^1)",
    "(4^2,3^1,6^1)",
    "(6^3)",
    "(12^2,3^1)",
    "(8^2,4^1)",
    "(5^2,10^1)",
    "(3^1,7^1,42^1)",
    "(3^1,8^1,24^1)",
    "(3^1,9^1,18^1)",
    "(3^1,10^1,15^1)",
    "(4^1,5^1,20^1)",
    "(4^1,6^1,12^1)",
];

const TWENTY_ONE_TYPES: [&str; 21] = [
    "[3^6]",
    "[3^4,6^1]",
    "[3^3,4^2]",
    "[3^2,4^1,3^1,4^1]",
    "[4^4]",
    "[3^1,6^1,3^1,6^1]",
    "[3^2,6^2]",
    "[3^2,4^1,12^1]",
    "[3^1,4^1,3^1,12^1]",
    "[3^1,4^1,6^1,4^1]",
    "[3^1,4^2,6^1]",
    "[6^3]",
    "[3^1,12^2]",
    "[4^1,8^2]",
    "[5^2,10^1]",
    "[3^1,7^1,42^1]",
    "[3^1,8^1,24^1]",
    "[3^1,9^1,18^1]",
    "[3^1,10^1,15^1]",
    "[4^1,5^1,20^1]",
    "[4^1,6^1,12^1]",
];

const TORUS_TYPES: [&str; 11] = [
    "[3^6]",
    "[6^3]",
    "[4^4]",
    "[3^4,6^1]",
    "[3^3,4^2]",
    "[3^2,4^1,3^1,4^1]",
    "[3^1,6^1,3^1,6^1]",
    "[3^1,4^1,6^1,4^1]",
    "[3^1,12^2]",
    "[4^1,8^2]",
    "[4^1,6^1,12^1]",
];

pub fn criterion_1() -> Check {
    let sols = solve_vertex_equation();
    let got: BTreeSet<String> = sols.iter().map(|m| m.to_string()).collect();
    let want: BTreeSet<String> = SEVENTEEN_MULTISETS.iter().map(|s| s.to_string()).collect();
    if got != want {
        return Err(format!(
            "vertex equation solutions differ: extra {:?}, missing {:?}",
            got.difference(&want).collect::<Vec<_>>(),
            want.difference(&got).collect::<Vec<_>>()
        ));
    }
    if !sols.iter().all(|m| m.satisfies_vertex_equation()) {
        return Err("a reported solution fails the exact vertex equation".into());
    }
    if solve_vertex_equation_bounded(100) != sols {
        return Err("sanity sweep found solutions with face size in (42, 100]".into());
    }
    let arrangements: BTreeSet<TypeString> =
        sols.iter().flat_map(|m| expand_arrangements(m)).collect();
    let want_types: BTreeSet<TypeString> = TWENTY_ONE_TYPES
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    if arrangements != want_types {
        return Err("cyclic arrangements do not match the 21 listed types".into());
    }
    Ok(format!(
        "{} multisets, {} arrangements",
        sols.len(),
        arrangements.len()
    ))
}

pub fn criterion_2() -> Check {
    let torus: BTreeSet<TypeString> = admissible_types(Surface::Torus).into_iter().collect();
    let klein: BTreeSet<TypeString> = admissible_types(Surface::KleinBottle).into_iter().collect();
    let want_torus: BTreeSet<TypeString> = TORUS_TYPES.iter().map(|s| s.parse().unwrap()).collect();
    if torus != want_torus {
        return Err("torus list does not match the eleven admissible types".into());
    }
    let diff: Vec<TypeString> = torus.difference(&klein).cloned().collect();
    if diff != vec!["[3^4,6^1]".parse().unwrap()] {
        return Err(format!(
            "torus minus Klein bottle is {diff:?}, expected [3^4,6^1] alone"
        ));
    }
    if klein.len() != 10 || !klein.is_subset(&torus) {
        return Err("Klein bottle list must be the ten torus types without [3^4,6^1]".into());
    }
    Ok("11 torus types, 10 Klein bottle types, difference {[3^4,6^1]}".into())
}

pub fn criterion_3() -> Check {
    let expected: [(&str, Restriction); 10] = [
        ("[3^2,6^2]", Restriction::DoubleOddUnique),
        ("[3^2,4^1,12^1]", Restriction::DoubleOddUnique),
        ("[5^2,10^1]", Restriction::DoubleOddUnique),
        (
            "[3^1,4^2,6^1]",
            Restriction::SingleOddUniqueNeighboursDiffer,
        ),
        (
            "[3^1,7^1,42^1]",
            Restriction::SingleOddUniqueNeighboursDiffer,
        ),
        (
            "[3^1,8^1,24^1]",
            Restriction::SingleOddUniqueNeighboursDiffer,
        ),
        (
            "[3^1,9^1,18^1]",
            Restriction::SingleOddUniqueNeighboursDiffer,
        ),
        (
            "[3^1,10^1,15^1]",
            Restriction::SingleOddUniqueNeighboursDiffer,
        ),
        (
            "[4^1,5^1,20^1]",
            Restriction::SingleOddUniqueNeighboursDiffer,
        ),
        ("[3^1,4^1,3^1,12^1]", Restriction::SingleOddUniqueNeighbours),
    ];
    for t in all_candidate_types() {
        let hit = violates_restriction(&t);
        let want = expected
            .iter()
            .find(|(s, _)| t == s.parse::<TypeString>().unwrap());
        match (hit, want) {
            (Some(v), Some((_, rule))) if v.rule == *rule => {}
            (None, None) => {}
            (got, want) => {
                return Err(format!("type {t}: got {got:?}, expected {want:?}"));
            }
        }
    }
    Ok("exactly the ten excluded types flagged, with matching rules".into())
}

pub fn criterion_4() -> Check {
    for e in catalog::list() {
        let c = classify(&e.map);
        if !c.semi_equivelar {
            return Err(format!("{} is not semi-equivelar", e.name));
        }
        if c.type_string.as_ref() != Some(&e.expected_type) {
            return Err(format!(
                "{} classifies as {} instead of {}",
                e.name,
                c.type_string.unwrap(),
                e.expected_type
            ));
        }
        let s = e.map.surface_info();
        if s.euler_characteristic != 0 {
            return Err(format!("{} has chi {}", e.name, s.euler_characteristic));
        }
        let want_orientable = e.surface == Surface::Torus;
        if s.orientable != want_orientable {
            return Err(format!("{} orientability mismatch", e.name));
        }
    }
    Ok("18 maps validate with chi 0, expected orientability and caption types".into())
}

/// The reference obstruction data: map name, selectors, and the two cycle
/// components singled out for having different lengths.
pub const OBSTRUCTIONS: &[(&str, &[Selector], &[&str], &[&str])] = &[
    (
        "T2",
        &[Selector::QuadDiagonals],
        &["u1", "u4", "u8", "u11"],
        &[
            "v1", "v4", "v9", "v12", "v3", "v6", "v8", "v11", "v2", "v5", "v7", "v10",
        ],
    ),
    (
        "T3",
        &[Selector::LongDiagonals(12)],
        &["a17", "a22", "a19", "a24"],
        &[
            "c1", "a6", "b9", "c14", "a1", "b6", "c9", "a14", "b1", "c6", "a9", "b14",
        ],
    ),
    (
        "T4",
        &[Selector::QuadDiagonals, Selector::LongDiagonals(12)],
        &["v2", "u4", "x5", "w10", "v8", "u10", "x11", "w4"],
        &["x1", "u2", "x7", "u8"],
    ),
    (
        "T5",
        &[Selector::QuadDiagonals],
        &["x9", "v3", "x3", "v6", "x6", "v9"],
        &["u2", "v2", "x1", "w2"],
    ),
    (
        "T6",
        &[Selector::LongDiagonals(6)],
        &["w1", "w2", "w7", "w8", "w5", "w6", "w3", "w4"],
        &["u1", "u2", "u3", "u4"],
    ),
    (
        "T7",
        &[Selector::QuadDiagonals, Selector::SharedOctagonEdges],
        &["v1", "w2", "w3", "x4", "x5", "u6", "u7", "v12"],
        &[
            "v2", "w1", "w12", "x11", "x10", "u9", "u8", "v11", "v10", "w9", "w8", "x7", "x6",
            "u5", "u4", "v7", "v6", "w5", "w4", "x3", "x2", "u1", "u12", "v3",
        ],
    ),
    (
        "T8",
        &[Selector::NiceEdges, Selector::LongDiagonals(6)],
        &["v7", "v15", "v10", "v18"],
        &["v1", "v23", "v17", "v11", "v4", "v20", "v14", "v8"],
    ),
    (
        "K1",
        &[Selector::QuadDiagonals],
        &["v7", "v14", "v9", "v16", "v11", "v18"],
        &["v20", "v24", "v22"],
    ),
    (
        "K3",
        &[Selector::LongDiagonals(12)],
        &["a17", "a22", "a19", "a24"],
        &[
            "a3", "b4", "c3", "a1", "b6", "c9", "a7", "b8", "c7", "a13", "b2", "c5", "a11", "b12",
            "c11", "a9", "b14", "c1", "a15", "b16", "c15", "a5", "b10", "c13",
        ],
    ),
    (
        "K4",
        &[Selector::QuadDiagonals, Selector::LongDiagonals(12)],
        &["v5", "w2", "v11", "w8"],
        &["v2", "u4", "x5", "w10", "v7", "u5", "x4", "w5"],
    ),
    (
        "K5",
        &[Selector::QuadDiagonals],
        &[
            "v1", "u2", "u7", "v8", "v4", "u5", "u1", "v2", "v7", "u8", "u4", "v5",
        ],
        &["u3", "u9", "u6"],
    ),
    (
        "K6",
        &[Selector::LongDiagonals(6)],
        &[
            "a2", "w2", "v2", "a5", "w3", "v1", "a8", "w8", "v8", "a7", "w5", "v3", "a6", "w6",
            "v6", "a1", "w7", "v5", "a4", "w4", "v4", "a3", "w1", "v7",
        ],
        &["u1", "u2", "u3", "u4"],
    ),
];

/// K7's auxiliary graph. The reference obstruction data for K7 records components of
/// lengths 24 and 12, but every identification consistent with K7's face
/// structure yields three 12-cycles (the 24-cycle would need the corner
/// square's diagonals and the seam edges to use two incompatible labellings
/// at once). The shipped K7 realizes the recorded 12-cycle exactly; the length
/// check below is kept as stated and records the discrepancy.
pub const K7_SELECTORS: &[Selector] = &[Selector::QuadDiagonals, Selector::SharedOctagonEdges];
pub const K7_REFERENCE_C12: &[&str] = &[
    "v5", "w6", "w7", "x8", "x9", "v7", "v6", "w5", "w4", "x3", "x2", "v4",
];
pub const K7_REFERENCE_LENGTHS: [usize; 2] = [12, 24];

fn labels_to_ids(map: &PolyhedralMap, labels: &[&str]) -> Result<Vec<u32>, String> {
    labels
        .iter()
        .map(|l| {
            map.id_of_label(l)
                .or_else(|| l.parse().ok().filter(|&v| map.vertex_index(v).is_some()))
                .ok_or_else(|| format!("unknown vertex label {l:?}"))
        })
        .collect()
}

fn canon_cycle(c: &[u32]) -> Vec<u32> {
    let mut best: Option<Vec<u32>> = None;
    let rev: Vec<u32> = c.iter().rev().copied().collect();
    for seq in [c, rev.as_slice()] {
        for r in 0..seq.len() {
            let mut cand = seq[r..].to_vec();
            cand.extend_from_slice(&seq[..r]);
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap()
}

fn check_reference_cycle(
    map: &PolyhedralMap,
    comps: &[Vec<u32>],
    reference: &[&str],
) -> Result<usize, String> {
    let ids = labels_to_ids(map, reference)?;
    let comp = comps
        .iter()
        .find(|c| c.contains(&ids[0]))
        .ok_or_else(|| format!("no component contains {}", reference[0]))?;
    if canon_cycle(comp) != canon_cycle(&ids) {
        return Err(format!(
            "component through {} is {:?}, expected {:?}",
            reference[0],
            comp.iter().map(|&v| map.vertex_name(v)).collect::<Vec<_>>(),
            reference
        ));
    }
    Ok(comp.len())
}

pub fn criterion_5() -> Check {
    let mut details = String::new();
    for e in catalog::list() {
        let transitive =
            is_vertex_transitive(&e.map).map_err(|err| format!("{}: {err}", e.name))?;
        if transitive != e.expected_transitive {
            return Err(format!(
                "{} vertex-transitive = {transitive}, expected {}",
                e.name, e.expected_transitive
            ));
        }
    }
    details.push_str("transitive: T1 only; obstructions:");
    for &(name, selectors, cyc_a, cyc_b) in OBSTRUCTIONS {
        let map = &catalog::get(name).unwrap().map;
        let spec = AuxGraphSpec::new(selectors);
        let graph = auxiliary_graph(map, &spec).map_err(|e| format!("{name}: {e}"))?;
        let comps = cycle_components(&graph).map_err(|e| format!("{name}: {e}"))?;
        let la = check_reference_cycle(map, &comps, cyc_a).map_err(|e| format!("{name}: {e}"))?;
        let lb = check_reference_cycle(map, &comps, cyc_b).map_err(|e| format!("{name}: {e}"))?;
        let witness = transitivity_obstruction(map, &spec)
            .map_err(|e| format!("{name}: {e}"))?
            .ok_or_else(|| format!("{name}: no obstruction witness found"))?;
        if witness.len_a == witness.len_b {
            return Err(format!("{name}: witness lengths coincide"));
        }
        let _ = write!(details, " {name}({la},{lb})");
    }
    // K7: the recorded 12-cycle must be a component, and the recorded component
    // lengths {24, 12} are required as stated
    {
        let map = &catalog::get("K7").unwrap().map;
        let spec = AuxGraphSpec::new(K7_SELECTORS);
        let graph = auxiliary_graph(map, &spec).map_err(|e| format!("K7: {e}"))?;
        let comps = cycle_components(&graph).map_err(|e| format!("K7: {e}"))?;
        check_reference_cycle(map, &comps, K7_REFERENCE_C12).map_err(|e| format!("K7: {e}"))?;
        let mut lens: Vec<usize> = comps.iter().map(Vec::len).collect();
        lens.sort_unstable();
        if !K7_REFERENCE_LENGTHS.iter().all(|l| lens.contains(l)) {
            return Err(format!(
                "K7: auxiliary graph components have lengths {lens:?}; the reference lengths \
                 {K7_REFERENCE_LENGTHS:?} are not realizable by any valid completion of K7's \
                 identification (non-transitivity is still certified by its orbit count)"
            ));
        }
        let _ = write!(details, " K7({lens:?})");
    }
    // K2 and K10: non-facial 3-cycles with unequal coverage
    for (name, expected_triangles) in [
        ("K2", vec![vec!["x1", "x2", "x3"], vec!["v1", "v2", "v3"]]),
        (
            "K10",
            vec![
                vec!["v1", "v2", "v3"],
                vec!["v1", "v4", "v7"],
                vec!["v2", "v5", "v8"],
                vec!["v3", "v6", "v9"],
            ],
        ),
    ] {
        let map = &catalog::get(name).unwrap().map;
        let spec = AuxGraphSpec::new([Selector::InducedThreeCycles]);
        let graph = auxiliary_graph(map, &spec).map_err(|e| format!("{name}: {e}"))?;
        let mut want = BTreeSet::new();
        for tri in &expected_triangles {
            let ids = labels_to_ids(map, tri).map_err(|e| format!("{name}: {e}"))?;
            for i in 0..3 {
                let (a, b) = (ids[i], ids[(i + 1) % 3]);
                want.insert((a.min(b), a.max(b)));
            }
        }
        if graph.edges != want {
            return Err(format!(
                "{name}: induced 3-cycles differ from the reference list"
            ));
        }
        if degree_obstruction(map, &spec)
            .map_err(|e| format!("{name}: {e}"))?
            .is_none()
        {
            return Err(format!("{name}: no degree obstruction"));
        }
        let _ = write!(details, " {name}(3-cycles)");
    }
    // K8: the non-edge graph is exactly C6(2,4,3,5,7,9) + C3(1,6,8)
    {
        let map = &catalog::get("K8").unwrap().map;
        let spec = AuxGraphSpec::new([Selector::NonEdgeComplement]);
        let graph = auxiliary_graph(map, &spec).map_err(|e| format!("K8: {e}"))?;
        let comps = cycle_components(&graph).map_err(|e| format!("K8: {e}"))?;
        check_reference_cycle(map, &comps, &["2", "4", "3", "5", "7", "9"])
            .map_err(|e| format!("K8: {e}"))?;
        check_reference_cycle(map, &comps, &["1", "6", "8"]).map_err(|e| format!("K8: {e}"))?;
        if comps.len() != 2 {
            return Err("K8: non-edge graph has unexpected extra components".into());
        }
        details.push_str(" K8(6,3)");
    }
    // K9: certified directly by its orbit count
    {
        let map = &catalog::get("K9").unwrap().map;
        let orbits = vertex_orbits(map).map_err(|e| format!("K9: {e}"))?;
        if orbits.len() < 2 {
            return Err("K9: expected at least two vertex orbits".into());
        }
        let _ = write!(details, " K9({} orbits)", orbits.len());
    }
    Ok(details)
}

/// Candidate sublattice bases for the quotient criteria.
pub fn candidate_bases() -> Vec<LatticeBasis> {
    vec![
        LatticeBasis::new((3, 0), (0, 3)),
        LatticeBasis::new((4, 0), (0, 4)),
        LatticeBasis::new((5, 0), (0, 5)),
        LatticeBasis::new((4, 1), (1, 4)),
        LatticeBasis::new((5, 2), (0, 4)),
        LatticeBasis::new((6, 1), (2, 5)),
        LatticeBasis::new((6, 0), (0, 6)),
    ]
}

/// At least five validated quotients of the given tiling with 9..=200 vertices.
pub fn validated_quotients(
    spec: &TilingSpec,
) -> Result<Vec<(LatticeBasis, PolyhedralMap)>, String> {
    let mut out = Vec::new();
    for basis in candidate_bases() {
        if let Ok(map) = torus_quotient(spec, &basis) {
            let n = map.n_vertices();
            if (9..=200).contains(&n) {
                out.push((basis, map));
            }
        }
        if out.len() == 6 {
            break;
        }
    }
    if out.len() < 5 {
        return Err(format!(
            "only {} validated bases for {} (need 5)",
            out.len(),
            spec.type_string
        ));
    }
    Ok(out)
}

pub fn criterion_6() -> Check {
    let tilings = builtin_tilings();
    let mut details = String::new();
    for t in ["[3^6]", "[4^4]", "[6^3]", "[3^3,4^2]"] {
        let spec = &tilings[&t.parse().unwrap()];
        let quotients = validated_quotients(spec)?;
        for (basis, map) in &quotients {
            let orbits = vertex_orbits(map).map_err(|e| format!("{t} {basis:?}: {e}"))?;
            if orbits.len() != 1 {
                return Err(format!(
                    "{t} quotient by {basis:?} has {} vertex orbits, expected 1",
                    orbits.len()
                ));
            }
        }
        let _ = write!(details, " {t}x{}", quotients.len());
    }
    Ok(format!("all quotients vertex-transitive:{details}"))
}

pub fn criterion_7() -> Check {
    let tilings = builtin_tilings();
    let mut details = String::new();
    for (t, bound) in [("[3^2,4^1,3^1,4^1]", 2usize), ("[3^1,6^1,3^1,6^1]", 3usize)] {
        let spec = &tilings[&t.parse().unwrap()];
        let quotients = validated_quotients(spec)?;
        for (basis, map) in &quotients {
            let orbits = vertex_orbits(map).map_err(|e| format!("{t} {basis:?}: {e}"))?;
            if orbits.len() > bound {
                return Err(format!(
                    "{t} quotient by {basis:?} has {} vertex orbits, bound is {bound}",
                    orbits.len()
                ));
            }
        }
        let _ = write!(details, " {t}<= {bound} on {} bases;", quotients.len());
    }
    Ok(details.trim().to_string())
}

pub fn criterion_8() -> Check {
    let tilings = builtin_tilings();
    let spec = &tilings[&"[3^6]".parse().unwrap()];
    let quotients = validated_quotients(spec)?;
    let hexagonal: TypeString = "[6^3]".parse().unwrap();
    for (basis, map) in &quotients {
        if !is_face_transitive(map).map_err(|e| format!("{basis:?}: {e}"))? {
            return Err(format!(
                "[3^6] quotient by {basis:?} is not face-transitive"
            ));
        }
        let dual = map.dual().map_err(|e| format!("{basis:?}: {e}"))?;
        let c = classify(&dual);
        if c.type_string.as_ref() != Some(&hexagonal) {
            return Err(format!("dual of [3^6] quotient by {basis:?} is not [6^3]"));
        }
        if !is_vertex_transitive(&dual).map_err(|e| format!("{basis:?}: {e}"))? {
            return Err(format!(
                "dual of [3^6] quotient by {basis:?} is not vertex-transitive"
            ));
        }
    }
    Ok(format!(
        "{} quotients face-transitive with vertex-transitive [6^3] duals",
        quotients.len()
    ))
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

fn group_is_closed(group: &[MapAutomorphism]) -> bool {
    let set: BTreeSet<&MapAutomorphism> = group.iter().collect();
    group.iter().any(MapAutomorphism::is_identity)
        && group.iter().all(|g| set.contains(&g.inverse()))
        && group
            .iter()
            .all(|g| group.iter().all(|h| set.contains(&g.compose(h))))
}

pub fn criterion_9() -> Check {
    // group axioms on every catalog map
    for e in catalog::list() {
        let group = automorphism_group(&e.map).map_err(|err| format!("{}: {err}", e.name))?;
        if !group_is_closed(&group) {
            return Err(format!("{}: group axioms fail", e.name));
        }
    }
    // dual involution and |Aut| preservation where the dual is polyhedral
    let mut duals = 0;
    for e in catalog::list() {
        let Ok(dual) = e.map.dual() else { continue };
        duals += 1;
        if !are_isomorphic(
            &dual.dual().map_err(|err| format!("{}: {err}", e.name))?,
            &e.map,
        ) {
            return Err(format!(
                "{}: double dual is not isomorphic to the map",
                e.name
            ));
        }
        let ga = automorphism_group(&e.map).unwrap().len();
        let gb = automorphism_group(&dual).unwrap().len();
        if ga != gb {
            return Err(format!(
                "{}: |Aut| {ga} changes to {gb} under duality",
                e.name
            ));
        }
    }
    if !are_isomorphic(
        &catalog::get("K8").unwrap().map.dual().unwrap(),
        &catalog::get("K9").unwrap().map,
    ) {
        return Err("dual of K8 is not isomorphic to K9".into());
    }
    // canonical type invariance on 1000 random cyclic sequences
    let mut state = 0xd1ce5eedu64;
    for _ in 0..1000 {
        let len = 3 + (splitmix64(&mut state) % 4) as usize;
        let sizes: Vec<u32> = (0..len)
            .map(|_| 3 + (splitmix64(&mut state) % 11) as u32)
            .collect();
        let base = TypeString::canonical(&sizes).unwrap();
        let rot = (splitmix64(&mut state) as usize) % len;
        let mut rotated = sizes[rot..].to_vec();
        rotated.extend_from_slice(&sizes[..rot]);
        let reversed: Vec<u32> = sizes.iter().rev().copied().collect();
        if TypeString::canonical(&rotated).unwrap() != base
            || TypeString::canonical(&reversed).unwrap() != base
        {
            return Err(format!(
                "canonical type differs across rotation/reversal of {sizes:?}"
            ));
        }
    }
    // orbit refinement on catalog and generated maps
    let mut refined = 0;
    let mut check_refinement = |map: &PolyhedralMap, name: &str| -> Result<(), String> {
        let orbits = vertex_orbits(map).map_err(|e| format!("{name}: {e}"))?;
        for orbit in orbits {
            let t0 = face_cycle_type(map, orbit[0]).unwrap();
            let d0 = map.degree(map.vertex_index(orbit[0]).unwrap());
            for &v in &orbit[1..] {
                if face_cycle_type(map, v).unwrap() != t0
                    || map.degree(map.vertex_index(v).unwrap()) != d0
                {
                    return Err(format!("{name}: orbit mixes face-cycle types"));
                }
            }
        }
        refined += 1;
        Ok(())
    };
    for e in catalog::list() {
        check_refinement(&e.map, e.name)?;
    }
    for (t, spec) in builtin_tilings() {
        let (basis, map) = validated_quotients(&spec)?.into_iter().next().unwrap();
        check_refinement(&map, &format!("{t} quotient {basis:?}"))?;
    }
    // Aut-invariance of every selector used in the obstruction table
    let mut used: Vec<(&str, &[Selector])> =
        OBSTRUCTIONS.iter().map(|&(n, s, _, _)| (n, s)).collect();
    used.push(("K7", K7_SELECTORS));
    used.push(("K2", &[Selector::InducedThreeCycles]));
    used.push(("K10", &[Selector::InducedThreeCycles]));
    used.push(("K8", &[Selector::NonEdgeComplement]));
    for (name, selectors) in used {
        let map = &catalog::get(name).unwrap().map;
        let graph = auxiliary_graph(map, &AuxGraphSpec::new(selectors)).unwrap();
        let group = automorphism_group(map).unwrap();
        for g in &group {
            for &(a, b) in &graph.edges {
                let ia = map.vertex_index(a).unwrap();
                let ib = map.vertex_index(b).unwrap();
                let ga = map.vertex_id(g.vertex_perm[ia]);
                let gb = map.vertex_id(g.vertex_perm[ib]);
                if !graph.has_edge(ga, gb) {
                    return Err(format!("{name}: selector edges are not Aut-invariant"));
                }
            }
        }
    }
    Ok(format!(
        "group axioms on 18 maps; duality checks on {duals}; 1000 canonical-type cases; refinement on {refined} maps; selector invariance"
    ))
}
