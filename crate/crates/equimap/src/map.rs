//! Polyhedral maps on closed surfaces.
//!
//! A map is given by its faces, each a cyclic sequence of vertex ids. Validation
//! enforces the polyhedral conditions: every edge lies in exactly two faces, any
//! two faces meet in at most one vertex or one edge, and the faces around each
//! vertex form a single cycle. All operations downstream assume a validated map.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MapError {
    #[error("face {face} has fewer than 3 vertices")]
    FaceTooShort { face: usize },
    #[error("face {face} repeats vertex {vertex}")]
    RepeatedVertexInFace { face: usize, vertex: u32 },
    #[error("faces {face_a} and {face_b} intersect in more than a vertex or an edge")]
    NonPolyhedralIntersection { face_a: usize, face_b: usize },
    #[error("edge ({u},{v}) lies in {count} faces, expected 2")]
    EdgeNotInTwoFaces { u: u32, v: u32, count: usize },
    #[error("faces around vertex {vertex} do not form a single cycle")]
    VertexLinkNotSingleCycle { vertex: u32 },
    #[error("faces {face_a} and {face_b} are identical")]
    DuplicateFace { face_a: usize, face_b: usize },
    #[error("map has no faces")]
    Empty,
    #[error("unknown vertex {0}")]
    UnknownVertex(u32),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error(transparent)]
    Invalid(#[from] MapError),
}

/// Euler characteristic and orientability of the underlying surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurfaceInfo {
    pub euler_characteristic: i64,
    pub orientable: bool,
}

/// A validated polyhedral map. Immutable once built; vertex ids are the
/// caller's arbitrary non-negative integers.
#[derive(Debug, Clone)]
pub struct PolyhedralMap {
    ids: Vec<u32>,
    faces: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    edge_faces: Vec<[usize; 2]>,
    /// Per vertex, incident faces in cyclic link order.
    links: Vec<Vec<usize>>,
    names: BTreeMap<String, u32>,
}

/// Validate a face list and build the map.
pub fn build_map(faces: &[Vec<u32>]) -> Result<PolyhedralMap, MapError> {
    PolyhedralMap::new(faces, BTreeMap::new())
}

impl PolyhedralMap {
    pub fn new(raw_faces: &[Vec<u32>], names: BTreeMap<String, u32>) -> Result<Self, MapError> {
        if raw_faces.is_empty() {
            return Err(MapError::Empty);
        }
        for (fi, f) in raw_faces.iter().enumerate() {
            if f.len() < 3 {
                return Err(MapError::FaceTooShort { face: fi });
            }
            let mut seen = HashSet::new();
            for &v in f {
                if !seen.insert(v) {
                    return Err(MapError::RepeatedVertexInFace {
                        face: fi,
                        vertex: v,
                    });
                }
            }
        }

        let mut ids: Vec<u32> = raw_faces.iter().flatten().copied().collect();
        ids.sort_unstable();
        ids.dedup();
        let index: HashMap<u32, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let faces: Vec<Vec<usize>> = raw_faces
            .iter()
            .map(|f| f.iter().map(|v| index[v]).collect())
            .collect();

        // Pairwise intersection condition, checked among faces sharing a vertex.
        let mut by_vertex: Vec<Vec<usize>> = vec![Vec::new(); ids.len()];
        for (fi, f) in faces.iter().enumerate() {
            for &v in f {
                by_vertex[v].push(fi);
            }
        }
        let face_edge_sets: Vec<HashSet<(usize, usize)>> = faces
            .iter()
            .map(|f| cycle_edges(f).map(ord).collect())
            .collect();
        let mut candidate_pairs = HashSet::new();
        for incident in &by_vertex {
            for (i, &a) in incident.iter().enumerate() {
                for &b in &incident[i + 1..] {
                    candidate_pairs.insert(ord((a, b)));
                }
            }
        }
        let mut pairs: Vec<_> = candidate_pairs.into_iter().collect();
        pairs.sort_unstable();
        for (a, b) in pairs {
            let fa: HashSet<usize> = faces[a].iter().copied().collect();
            let shared: Vec<usize> = faces[b]
                .iter()
                .copied()
                .filter(|v| fa.contains(v))
                .collect();
            match shared.len() {
                0 | 1 => {}
                2 => {
                    let e = ord((shared[0], shared[1]));
                    if !face_edge_sets[a].contains(&e) || !face_edge_sets[b].contains(&e) {
                        return Err(MapError::NonPolyhedralIntersection {
                            face_a: a,
                            face_b: b,
                        });
                    }
                }
                _ => {
                    return Err(MapError::NonPolyhedralIntersection {
                        face_a: a,
                        face_b: b,
                    })
                }
            }
        }

        // Identical faces share all their vertices, so the pairwise check above
        // already rejects them; this sweep keeps the error distinct if it ever fires.
        let mut canon_seen: HashMap<Vec<usize>, usize> = HashMap::new();
        for (fi, f) in faces.iter().enumerate() {
            let c = canonical_cycle(f);
            if let Some(&fj) = canon_seen.get(&c) {
                return Err(MapError::DuplicateFace {
                    face_a: fj,
                    face_b: fi,
                });
            }
            canon_seen.insert(c, fi);
        }

        // Every edge in exactly two faces.
        let mut edge_map: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (fi, f) in faces.iter().enumerate() {
            for e in cycle_edges(f) {
                edge_map.entry(ord(e)).or_default().push(fi);
            }
        }
        for (&(u, v), fs) in &edge_map {
            if fs.len() != 2 {
                return Err(MapError::EdgeNotInTwoFaces {
                    u: ids[u],
                    v: ids[v],
                    count: fs.len(),
                });
            }
        }
        let edges: Vec<(usize, usize)> = edge_map.keys().copied().collect();
        let edge_faces: Vec<[usize; 2]> = edge_map.values().map(|fs| [fs[0], fs[1]]).collect();
        debug_assert_eq!(
            faces.iter().map(Vec::len).sum::<usize>(),
            2 * edges.len(),
            "face size sum must be twice the edge count"
        );
        let edge_index: HashMap<(usize, usize), usize> =
            edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();

        // Each vertex link must be a single cycle of at least 3 faces.
        let mut links = Vec::with_capacity(ids.len());
        for v in 0..ids.len() {
            let link = vertex_link_cycle(v, &by_vertex[v], &faces, &edge_index, &edge_faces)
                .ok_or(MapError::VertexLinkNotSingleCycle { vertex: ids[v] })?;
            links.push(link);
        }

        Ok(PolyhedralMap {
            ids,
            faces,
            edges,
            edge_faces,
            links,
            names,
        })
    }

    pub fn n_vertices(&self) -> usize {
        self.ids.len()
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn n_faces(&self) -> usize {
        self.faces.len()
    }

    /// Public vertex ids, ascending.
    pub fn vertex_ids(&self) -> &[u32] {
        &self.ids
    }

    pub fn vertex_index(&self, id: u32) -> Option<usize> {
        self.ids.binary_search(&id).ok()
    }

    pub fn vertex_id(&self, index: usize) -> u32 {
        self.ids[index]
    }

    /// Face boundary as public vertex ids.
    pub fn face(&self, i: usize) -> Vec<u32> {
        self.faces[i].iter().map(|&v| self.ids[v]).collect()
    }

    pub fn face_len(&self, i: usize) -> usize {
        self.faces[i].len()
    }

    /// Face boundaries as internal vertex indices.
    pub fn faces_internal(&self) -> &[Vec<usize>] {
        &self.faces
    }

    /// Edges as internal index pairs (lo, hi), sorted.
    pub fn edges_internal(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// The two faces containing edge `e` (by position in `edges_internal`).
    pub fn edge_faces(&self) -> &[[usize; 2]] {
        &self.edge_faces
    }

    /// Edges as public id pairs.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        self.edges
            .iter()
            .map(|&(u, v)| (self.ids[u], self.ids[v]))
            .collect()
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        match (self.vertex_index(a), self.vertex_index(b)) {
            (Some(i), Some(j)) => self.edges.binary_search(&ord((i, j))).is_ok(),
            _ => false,
        }
    }

    pub fn degree(&self, index: usize) -> usize {
        self.links[index].len()
    }

    /// Incident faces of vertex `index` in cyclic link order.
    pub fn link_faces(&self, index: usize) -> &[usize] {
        &self.links[index]
    }

    /// The face-cycle around a vertex: (face id, face size) in cyclic order.
    pub fn vertex_link(&self, v: u32) -> Result<Vec<(usize, usize)>, MapError> {
        let idx = self.vertex_index(v).ok_or(MapError::UnknownVertex(v))?;
        Ok(self.links[idx]
            .iter()
            .map(|&f| (f, self.faces[f].len()))
            .collect())
    }

    pub fn names(&self) -> &BTreeMap<String, u32> {
        &self.names
    }

    pub fn label_of(&self, id: u32) -> Option<&str> {
        self.names
            .iter()
            .find(|(_, &i)| i == id)
            .map(|(s, _)| s.as_str())
    }

    pub fn id_of_label(&self, label: &str) -> Option<u32> {
        self.names.get(label).copied()
    }

    /// Display helper: the label of a vertex if it has one, else its id.
    pub fn vertex_name(&self, id: u32) -> String {
        self.label_of(id)
            .map(str::to_owned)
            .unwrap_or_else(|| id.to_string())
    }

    pub fn is_connected(&self) -> bool {
        let n = self.ids.len();
        if n == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    pub fn surface_info(&self) -> SurfaceInfo {
        let chi = self.ids.len() as i64 - self.edges.len() as i64 + self.faces.len() as i64;
        SurfaceInfo {
            euler_characteristic: chi,
            orientable: self.orientable_from(0),
        }
    }

    /// Orientability by orientation propagation, seeded at face
    /// `seed mod n_faces` in each component. The verdict is seed-independent.
    pub fn orientable_from(&self, seed: usize) -> bool {
        let nf = self.faces.len();
        // orientation of each face: +1 keeps the stored boundary direction
        let mut orient: Vec<i8> = vec![0; nf];
        let mut dir: Vec<HashMap<(usize, usize), bool>> = Vec::with_capacity(nf);
        for f in &self.faces {
            // true when the stored boundary traverses u -> v
            let mut m = HashMap::new();
            for (u, v) in cycle_edges(f) {
                m.insert((u, v), true);
                m.insert((v, u), false);
            }
            dir.push(m);
        }
        let mut order: Vec<usize> = (0..nf).collect();
        order.rotate_left(seed % nf);
        for &start in &order {
            if orient[start] != 0 {
                continue;
            }
            orient[start] = 1;
            let mut stack = vec![start];
            while let Some(fcur) = stack.pop() {
                for e in cycle_edges(&self.faces[fcur]) {
                    let ei = self.edges.binary_search(&ord(e)).unwrap();
                    let [fa, fb] = self.edge_faces[ei];
                    let fother = if fa == fcur { fb } else { fa };
                    // consistently oriented faces traverse a shared edge oppositely
                    let same_dir = dir[fcur][&e] == dir[fother][&e];
                    let want = if same_dir {
                        -orient[fcur]
                    } else {
                        orient[fcur]
                    };
                    if orient[fother] == 0 {
                        orient[fother] = want;
                        stack.push(fother);
                    } else if orient[fother] != want {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Dual map: one vertex per face, one face per primal vertex.
    pub fn dual(&self) -> Result<PolyhedralMap, DualError> {
        let dual_faces: Vec<Vec<u32>> = self
            .links
            .iter()
            .map(|link| link.iter().map(|&f| f as u32).collect())
            .collect();
        build_map(&dual_faces).map_err(|source| DualError { source })
    }

    /// Canonical text form: `name` lines sorted by id, then one `f` line per face.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut by_id: Vec<(&u32, &String)> = self.names.iter().map(|(s, i)| (i, s)).collect();
        by_id.sort();
        for (id, label) in by_id {
            let _ = writeln!(out, "name {label} {id}");
        }
        for i in 0..self.faces.len() {
            let ids: Vec<String> = self.face(i).iter().map(u32::to_string).collect();
            let _ = writeln!(out, "f {}", ids.join(" "));
        }
        out
    }

    /// Parse the map file format: `f v1 v2 ...` face lines, optional
    /// `name <label> <id>` lines, `#` comments.
    pub fn parse(text: &str) -> Result<PolyhedralMap, ParseError> {
        let mut faces = Vec::new();
        let mut names = BTreeMap::new();
        for (ln, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut tok = line.split_whitespace();
            match tok.next() {
                Some("f") => {
                    let vs: Result<Vec<u32>, _> = tok.map(str::parse).collect();
                    let vs = vs.map_err(|e| ParseError::Malformed {
                        line: ln + 1,
                        msg: format!("bad vertex id: {e}"),
                    })?;
                    faces.push(vs);
                }
                Some("name") => {
                    let label = tok.next().ok_or_else(|| ParseError::Malformed {
                        line: ln + 1,
                        msg: "name line needs a label and an id".into(),
                    })?;
                    let id: u32 = tok
                        .next()
                        .ok_or_else(|| ParseError::Malformed {
                            line: ln + 1,
                            msg: "name line needs an id".into(),
                        })?
                        .parse()
                        .map_err(|e| ParseError::Malformed {
                            line: ln + 1,
                            msg: format!("bad id: {e}"),
                        })?;
                    names.insert(label.to_string(), id);
                }
                Some(other) => {
                    return Err(ParseError::Malformed {
                        line: ln + 1,
                        msg: format!("unknown directive {other:?}"),
                    })
                }
                None => {}
            }
        }
        Ok(PolyhedralMap::new(&faces, names)?)
    }
}

/// A dual whose face list fails validation.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("dual is not polyhedral: {source}")]
pub struct DualError {
    #[source]
    pub source: MapError,
}

fn ord((a, b): (usize, usize)) -> (usize, usize) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

fn cycle_edges(f: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    (0..f.len()).map(move |i| (f[i], f[(i + 1) % f.len()]))
}

/// Least representative of a cycle under rotation and reflection.
fn canonical_cycle(f: &[usize]) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    let rev: Vec<usize> = f.iter().rev().copied().collect();
    for seq in [f, rev.as_slice()] {
        for r in 0..seq.len() {
            let mut cand: Vec<usize> = seq[r..].to_vec();
            cand.extend_from_slice(&seq[..r]);
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap()
}

/// Walk the faces around `v`; `None` unless they form one cycle of length >= 3.
fn vertex_link_cycle(
    v: usize,
    incident: &[usize],
    faces: &[Vec<usize>],
    edge_index: &HashMap<(usize, usize), usize>,
    edge_faces: &[[usize; 2]],
) -> Option<Vec<usize>> {
    if incident.len() < 3 {
        return None;
    }
    // the two edges of each incident face at v
    let edges_at = |f: usize| -> (usize, usize) {
        let cyc = &faces[f];
        let i = cyc.iter().position(|&x| x == v).unwrap();
        let prev = cyc[(i + cyc.len() - 1) % cyc.len()];
        let next = cyc[(i + 1) % cyc.len()];
        (edge_index[&ord((v, prev))], edge_index[&ord((v, next))])
    };
    let other_face = |e: usize, f: usize| -> usize {
        let [a, b] = edge_faces[e];
        if a == f {
            b
        } else {
            a
        }
    };
    let start = *incident.iter().min().unwrap();
    let mut cycle = vec![start];
    let (e_back, mut e_fwd) = edges_at(start);
    let mut cur = start;
    loop {
        let nxt = other_face(e_fwd, cur);
        if nxt == start {
            if e_fwd != e_back {
                // must close along the remaining edge of the start face
                return None;
            }
            break;
        }
        if cycle.contains(&nxt) {
            return None;
        }
        cycle.push(nxt);
        let (ea, eb) = edges_at(nxt);
        e_fwd = if ea == e_fwd { eb } else { ea };
        cur = nxt;
    }
    if cycle.len() == incident.len() {
        Some(cycle)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tetrahedron() -> Vec<Vec<u32>> {
        vec![vec![1, 2, 3], vec![1, 2, 4], vec![1, 3, 4], vec![2, 3, 4]]
    }

    #[test]
    fn tetrahedron_is_valid_sphere() {
        let m = build_map(&tetrahedron()).unwrap();
        assert_eq!(m.n_vertices(), 4);
        assert_eq!(m.n_edges(), 6);
        assert_eq!(m.n_faces(), 4);
        let s = m.surface_info();
        assert_eq!(s.euler_characteristic, 2);
        assert!(s.orientable);
    }

    #[test]
    fn tetrahedron_links_are_triangles() {
        let m = build_map(&tetrahedron()).unwrap();
        for &v in m.vertex_ids() {
            let link = m.vertex_link(v).unwrap();
            assert_eq!(link.len(), 3);
            assert!(link.iter().all(|&(_, sz)| sz == 3));
        }
    }

    #[test]
    fn wrapped_2x2_grid_is_rejected() {
        // 2x2 toroidal quadrangulation: faces pairwise share two edges
        let faces = vec![
            vec![0, 1, 3, 2],
            vec![1, 0, 2, 3],
            vec![2, 3, 1, 0],
            vec![3, 2, 0, 1],
        ];
        match build_map(&faces) {
            Err(MapError::NonPolyhedralIntersection { .. }) => {}
            other => panic!("expected NonPolyhedralIntersection, got {other:?}"),
        }
    }

    #[test]
    fn repeated_vertex_is_rejected() {
        let faces = vec![vec![0, 1, 0], vec![0, 1, 2]];
        assert!(matches!(
            build_map(&faces),
            Err(MapError::RepeatedVertexInFace { vertex: 0, .. })
        ));
    }

    #[test]
    fn open_disk_is_rejected() {
        // single triangle: every edge lies in one face
        let faces = vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3]];
        // faces pass the intersection test; edge (1,2) lies in one face only
        assert!(matches!(
            build_map(&faces),
            Err(MapError::EdgeNotInTwoFaces { .. })
        ));
    }

    #[test]
    fn pinched_vertex_is_rejected() {
        // two tetrahedra glued at vertex 0: edges and pairwise intersections
        // are fine, but the faces around 0 form two cycles
        let faces = vec![
            vec![0, 1, 2],
            vec![0, 1, 3],
            vec![0, 2, 3],
            vec![1, 2, 3],
            vec![0, 4, 5],
            vec![0, 4, 6],
            vec![0, 5, 6],
            vec![4, 5, 6],
        ];
        assert!(matches!(
            build_map(&faces),
            Err(MapError::VertexLinkNotSingleCycle { vertex: 0 })
        ));
    }

    #[test]
    fn disconnected_maps_build_but_are_flagged() {
        let faces = vec![
            vec![0, 1, 2],
            vec![0, 1, 3],
            vec![0, 2, 3],
            vec![1, 2, 3],
            vec![4, 5, 6],
            vec![4, 5, 7],
            vec![4, 6, 7],
            vec![5, 6, 7],
        ];
        let m = build_map(&faces).unwrap();
        assert!(!m.is_connected());
        assert_eq!(m.surface_info().euler_characteristic, 4);
    }

    #[test]
    fn dual_of_tetrahedron_is_tetrahedron() {
        let m = build_map(&tetrahedron()).unwrap();
        let d = m.dual().unwrap();
        assert_eq!(d.n_vertices(), 4);
        assert_eq!(d.n_faces(), 4);
        assert!(d.faces_internal().iter().all(|f| f.len() == 3));
    }

    #[test]
    fn orientability_is_seed_independent() {
        let m = build_map(&tetrahedron()).unwrap();
        for seed in [0, 1, 3] {
            assert!(m.orientable_from(seed));
        }
    }

    #[test]
    fn parse_round_trip_is_byte_identical() {
        let text = "name a 1\nname b 2\nf 1 2 3\nf 1 2 4\nf 1 3 4\nf 2 3 4\n";
        let m = PolyhedralMap::parse(text).unwrap();
        let once = m.to_text();
        let again = PolyhedralMap::parse(&once).unwrap().to_text();
        assert_eq!(once, again);
        assert_eq!(once, text);
    }

    #[test]
    fn comments_and_order_are_ignored() {
        let text = "# comment\nf 1 2 3\nname a 1\nf 1 2 4\nf 1 3 4\nf 2 3 4\n";
        let m = PolyhedralMap::parse(text).unwrap();
        assert_eq!(m.id_of_label("a"), Some(1));
        assert_eq!(m.n_faces(), 4);
    }
}
