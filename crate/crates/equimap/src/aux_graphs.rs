//! Auxiliary graphs built from a map by combinatorial selectors, and the
//! non-transitivity certificates they yield.
//!
//! Each selector produces an edge set on the map's vertices that every map
//! automorphism preserves. When the graph is 2-regular it decomposes into
//! cycles; two components of different lengths certify that the map is not
//! vertex-transitive. The induced-3-cycle selectors certify instead through
//! unequal vertex degrees.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::map::PolyhedralMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Selector {
    /// Both diagonals of every 4-gon.
    QuadDiagonals,
    /// The k main diagonals of every 2k-gon (antipodal boundary vertices).
    LongDiagonals(u32),
    /// Map edges lying in two 8-gons.
    SharedOctagonEdges,
    /// Edges whose endpoints each see their incident triangles split 3/1 by
    /// the edge.
    NiceEdges,
    /// Union of all 3-cycles of the edge graph that do not bound a face.
    InducedThreeCycles,
    /// Complement of the edge graph.
    NonEdgeComplement,
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Selector::QuadDiagonals => write!(f, "quad-diagonals"),
            Selector::LongDiagonals(n) => write!(f, "long-diagonals-{n}"),
            Selector::SharedOctagonEdges => write!(f, "shared-8gon-edges"),
            Selector::NiceEdges => write!(f, "nice-edges"),
            Selector::InducedThreeCycles => write!(f, "induced-3-cycles"),
            Selector::NonEdgeComplement => write!(f, "non-edge-complement"),
        }
    }
}

impl std::str::FromStr for Selector {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().to_ascii_lowercase().replace('_', "-");
        if let Some(n) = s.strip_prefix("long-diagonals-") {
            let n: u32 = n
                .parse()
                .map_err(|_| format!("bad diagonal size in {s:?}"))?;
            return Ok(Selector::LongDiagonals(n));
        }
        match s.as_str() {
            "quad-diagonals" => Ok(Selector::QuadDiagonals),
            "shared-8gon-edges" => Ok(Selector::SharedOctagonEdges),
            "nice-edges" => Ok(Selector::NiceEdges),
            "induced-3-cycles" => Ok(Selector::InducedThreeCycles),
            "non-edge-complement" => Ok(Selector::NonEdgeComplement),
            other => Err(format!("unknown selector {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuxGraphSpec {
    pub selectors: Vec<Selector>,
}

impl AuxGraphSpec {
    pub fn new(selectors: impl Into<Vec<Selector>>) -> Self {
        AuxGraphSpec {
            selectors: selectors.into(),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AuxGraphError {
    #[error("selector {0} does not apply to this map: {1}")]
    SelectorInapplicable(Selector, String),
    #[error("graph is not 2-regular: vertex {0} has degree {1}")]
    NotTwoRegular(u32, usize),
}

/// Edge set over the map's vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuxGraph {
    pub vertices: Vec<u32>,
    pub edges: BTreeSet<(u32, u32)>,
}

impl AuxGraph {
    pub fn degree(&self, v: u32) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        self.edges.contains(&ord(a, b))
    }
}

fn ord(a: u32, b: u32) -> (u32, u32) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Build the union of the selectors' edge sets.
pub fn auxiliary_graph(
    map: &PolyhedralMap,
    spec: &AuxGraphSpec,
) -> Result<AuxGraph, AuxGraphError> {
    let mut edges = BTreeSet::new();
    for &sel in &spec.selectors {
        collect(map, sel, &mut edges)?;
    }
    Ok(AuxGraph {
        vertices: map.vertex_ids().to_vec(),
        edges,
    })
}

fn collect(
    map: &PolyhedralMap,
    sel: Selector,
    edges: &mut BTreeSet<(u32, u32)>,
) -> Result<(), AuxGraphError> {
    match sel {
        Selector::QuadDiagonals => {
            let mut any = false;
            for i in 0..map.n_faces() {
                let f = map.face(i);
                if f.len() == 4 {
                    any = true;
                    edges.insert(ord(f[0], f[2]));
                    edges.insert(ord(f[1], f[3]));
                }
            }
            if !any {
                return Err(AuxGraphError::SelectorInapplicable(sel, "no 4-gons".into()));
            }
        }
        Selector::LongDiagonals(n) => {
            if n % 2 != 0 || n < 4 {
                return Err(AuxGraphError::SelectorInapplicable(
                    sel,
                    "long diagonals need an even face size".into(),
                ));
            }
            let k = (n / 2) as usize;
            let mut any = false;
            for i in 0..map.n_faces() {
                let f = map.face(i);
                if f.len() == n as usize {
                    any = true;
                    for j in 0..k {
                        edges.insert(ord(f[j], f[j + k]));
                    }
                }
            }
            if !any {
                return Err(AuxGraphError::SelectorInapplicable(
                    sel,
                    format!("no {n}-gons"),
                ));
            }
        }
        Selector::SharedOctagonEdges => {
            let mut any = false;
            for (ei, &(u, v)) in map.edges_internal().iter().enumerate() {
                let [fa, fb] = map.edge_faces()[ei];
                if map.face_len(fa) == 8 && map.face_len(fb) == 8 {
                    any = true;
                    edges.insert(ord(map.vertex_id(u), map.vertex_id(v)));
                }
            }
            if !any {
                return Err(AuxGraphError::SelectorInapplicable(
                    sel,
                    "no edge lies in two 8-gons".into(),
                ));
            }
        }
        Selector::NiceEdges => {
            let mut any = false;
            for (ei, &(u, v)) in map.edges_internal().iter().enumerate() {
                let [fa, fb] = map.edge_faces()[ei];
                if map.face_len(fa) != 3 || map.face_len(fb) != 3 {
                    continue;
                }
                if nice_at(map, u, fa, fb) && nice_at(map, v, fa, fb) {
                    any = true;
                    edges.insert(ord(map.vertex_id(u), map.vertex_id(v)));
                }
            }
            if !any {
                return Err(AuxGraphError::SelectorInapplicable(
                    sel,
                    "no nice edges".into(),
                ));
            }
        }
        Selector::InducedThreeCycles => {
            let face_triangles: BTreeSet<Vec<u32>> = (0..map.n_faces())
                .filter(|&i| map.face_len(i) == 3)
                .map(|i| {
                    let mut f = map.face(i);
                    f.sort_unstable();
                    f
                })
                .collect();
            let ids = map.vertex_ids();
            let mut any = false;
            for (i, &a) in ids.iter().enumerate() {
                for (j, &b) in ids.iter().enumerate().skip(i + 1) {
                    if !map.has_edge(a, b) {
                        continue;
                    }
                    for &c in ids.iter().skip(j + 1) {
                        if map.has_edge(a, c)
                            && map.has_edge(b, c)
                            && !face_triangles.contains(&vec![a, b, c])
                        {
                            any = true;
                            edges.insert((a, b));
                            edges.insert(ord(a, c));
                            edges.insert(ord(b, c));
                        }
                    }
                }
            }
            if !any {
                return Err(AuxGraphError::SelectorInapplicable(
                    sel,
                    "no non-facial 3-cycles".into(),
                ));
            }
        }
        Selector::NonEdgeComplement => {
            let ids = map.vertex_ids();
            for (i, &a) in ids.iter().enumerate() {
                for &b in ids.iter().skip(i + 1) {
                    if !map.has_edge(a, b) {
                        edges.insert((a, b));
                    }
                }
            }
            if edges.is_empty() {
                return Err(AuxGraphError::SelectorInapplicable(
                    sel,
                    "edge graph is complete".into(),
                ));
            }
        }
    }
    Ok(())
}

/// An edge uv between two triangles is nice at u when, cutting the face-cycle
/// of u at the two triangles, the remaining faces are triangles except for a
/// single larger face sitting off-centre: the incident triangles then split
/// three against one across the edge.
fn nice_at(map: &PolyhedralMap, u: usize, fa: usize, fb: usize) -> bool {
    let link = map.link_faces(u);
    let d = link.len();
    let (Some(ia), Some(ib)) = (
        link.iter().position(|&f| f == fa),
        link.iter().position(|&f| f == fb),
    ) else {
        return false;
    };
    // the two faces containing the edge are adjacent in the link cycle
    let path_start = if (ia + 1) % d == ib {
        ib
    } else if (ib + 1) % d == ia {
        ia
    } else {
        return false;
    };
    let path: Vec<usize> = (1..d - 1).map(|k| link[(path_start + k) % d]).collect();
    let non_tri: Vec<usize> = (0..path.len())
        .filter(|&i| map.face_len(path[i]) != 3)
        .collect();
    match non_tri.as_slice() {
        // triangles either side of the edge line: (1 + prefix) vs (suffix + 1)
        &[m] => {
            let side_a = 1 + m;
            let side_b = path.len() - 1 - m + 1;
            (side_a == 3 && side_b == 1) || (side_a == 1 && side_b == 3)
        }
        _ => false,
    }
}

/// Connected components of a 2-regular graph, each a cycle, ordered by least
/// vertex; returns (component vertex lists in cycle order, lengths).
pub fn cycle_components(graph: &AuxGraph) -> Result<Vec<Vec<u32>>, AuxGraphError> {
    let mut adj: std::collections::BTreeMap<u32, Vec<u32>> = std::collections::BTreeMap::new();
    for &(a, b) in &graph.edges {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    for &v in &graph.vertices {
        let d = adj.get(&v).map_or(0, Vec::len);
        if d != 2 {
            return Err(AuxGraphError::NotTwoRegular(v, d));
        }
    }
    let mut seen = BTreeSet::new();
    let mut comps = Vec::new();
    for &v in &graph.vertices {
        if seen.contains(&v) {
            continue;
        }
        let mut cycle = vec![v];
        seen.insert(v);
        let mut prev = v;
        let mut cur = *adj[&v].iter().min().unwrap();
        while cur != v {
            seen.insert(cur);
            cycle.push(cur);
            let next = adj[&cur].iter().copied().find(|&w| w != prev).unwrap();
            prev = cur;
            cur = next;
        }
        comps.push(cycle);
    }
    Ok(comps)
}

/// Multiset of component cycle lengths.
pub fn cycle_lengths(graph: &AuxGraph) -> Result<Vec<usize>, AuxGraphError> {
    let mut lens: Vec<usize> = cycle_components(graph)?.iter().map(Vec::len).collect();
    lens.sort_unstable();
    Ok(lens)
}

/// Two vertices in cycle components of different lengths, if the selector
/// graph provides them. Such a pair certifies non-transitivity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub vertex_a: u32,
    pub len_a: usize,
    pub vertex_b: u32,
    pub len_b: usize,
}

pub fn transitivity_obstruction(
    map: &PolyhedralMap,
    spec: &AuxGraphSpec,
) -> Result<Option<Witness>, AuxGraphError> {
    let graph = auxiliary_graph(map, spec)?;
    if graph
        .edges
        .iter()
        .flat_map(|&(a, b)| [a, b])
        .collect::<BTreeSet<_>>()
        .len()
        != graph.vertices.len()
    {
        return Ok(None); // the graph must cover every vertex
    }
    let comps = cycle_components(&graph)?;
    let mut by_len: Vec<(usize, u32)> = comps.iter().map(|c| (c.len(), c[0])).collect();
    by_len.sort_unstable();
    let (shortest, longest) = (by_len[0], by_len[by_len.len() - 1]);
    if shortest.0 == longest.0 {
        return Ok(None);
    }
    Ok(Some(Witness {
        vertex_a: shortest.1,
        len_a: shortest.0,
        vertex_b: longest.1,
        len_b: longest.0,
    }))
}

/// Non-transitivity through unequal auxiliary degrees (the induced-3-cycle
/// construction): two vertices with different degrees in the selector graph.
pub fn degree_obstruction(
    map: &PolyhedralMap,
    spec: &AuxGraphSpec,
) -> Result<Option<(u32, u32)>, AuxGraphError> {
    let graph = auxiliary_graph(map, spec)?;
    let mut degrees: Vec<(usize, u32)> = graph
        .vertices
        .iter()
        .map(|&v| (graph.degree(v), v))
        .collect();
    degrees.sort_unstable();
    let (lo, hi) = (degrees[0], degrees[degrees.len() - 1]);
    if lo.0 == hi.0 {
        return Ok(None);
    }
    Ok(Some((lo.1, hi.1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::build_map;

    #[test]
    fn tetrahedron_has_no_quads() {
        let m = build_map(&[vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]).unwrap();
        assert!(matches!(
            auxiliary_graph(&m, &AuxGraphSpec::new([Selector::QuadDiagonals])),
            Err(AuxGraphError::SelectorInapplicable(..))
        ));
    }

    #[test]
    fn tetrahedron_non_edges_are_empty() {
        let m = build_map(&[vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]).unwrap();
        assert!(matches!(
            auxiliary_graph(&m, &AuxGraphSpec::new([Selector::NonEdgeComplement])),
            Err(AuxGraphError::SelectorInapplicable(..))
        ));
    }

    #[test]
    fn cube_quad_diagonals_decompose_into_triangle_pairs() {
        let cube = build_map(&[
            vec![0, 1, 2, 3],
            vec![4, 5, 6, 7],
            vec![0, 1, 5, 4],
            vec![1, 2, 6, 5],
            vec![2, 3, 7, 6],
            vec![3, 0, 4, 7],
        ])
        .unwrap();
        let g = auxiliary_graph(&cube, &AuxGraphSpec::new([Selector::QuadDiagonals])).unwrap();
        // diagonals of the cube's faces form two tetrahedra: K4 graphs are 3-regular
        assert!(matches!(
            cycle_lengths(&g),
            Err(AuxGraphError::NotTwoRegular(_, 3))
        ));
    }

    #[test]
    fn selector_parsing_round_trips() {
        for s in [
            Selector::QuadDiagonals,
            Selector::LongDiagonals(12),
            Selector::SharedOctagonEdges,
            Selector::NiceEdges,
            Selector::InducedThreeCycles,
            Selector::NonEdgeComplement,
        ] {
            assert_eq!(s.to_string().parse::<Selector>().unwrap(), s);
        }
    }
}
