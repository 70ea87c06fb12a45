//! Map automorphisms via flag propagation.
//!
//! A flag is an incident (vertex, edge, face) triple. Three fixed-point-free
//! involutions act on flags: s0 changes the vertex, s1 the edge, s2 the face.
//! An automorphism of a connected map is determined by the image of one flag,
//! so the full group is found by trying every candidate image of a base flag
//! and propagating along the involutions.

use std::collections::VecDeque;

use thiserror::Error;

use crate::map::PolyhedralMap;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AutomorphismError {
    #[error("map is not connected")]
    DisconnectedMap,
}

/// The flag set of a map with its three involutions.
#[derive(Debug, Clone)]
pub struct FlagSystem {
    /// involutions[i][f] is s_i applied to flag f
    involutions: [Vec<usize>; 3],
    flag_vertex: Vec<usize>,
    flag_edge: Vec<usize>,
    flag_face: Vec<usize>,
}

impl FlagSystem {
    pub fn new(map: &PolyhedralMap) -> Self {
        let faces = map.faces_internal();
        let edges = map.edges_internal();
        let edge_of = |a: usize, b: usize| -> usize {
            let key = if a <= b { (a, b) } else { (b, a) };
            edges.binary_search(&key).unwrap()
        };

        // two flags per face corner-edge incidence: for face f with boundary
        // v_0..v_{k-1}, position i carries flags (v_i, e_i, f) and (v_{i+1}, e_i, f)
        // where e_i joins v_i and v_{i+1}; flag index = 2*(offset_f + i) + side.
        let mut offset = Vec::with_capacity(faces.len());
        let mut total = 0;
        for f in faces {
            offset.push(total);
            total += f.len();
        }
        let n_flags = 2 * total;
        let mut flag_vertex = vec![0; n_flags];
        let mut flag_edge = vec![0; n_flags];
        let mut flag_face = vec![0; n_flags];
        let mut s0 = vec![0; n_flags];
        let mut s1 = vec![0; n_flags];
        let mut s2 = vec![0; n_flags];

        let at = |fi: usize, i: usize, side: usize| 2 * (offset[fi] + i) + side;
        for (fi, f) in faces.iter().enumerate() {
            let k = f.len();
            for i in 0..k {
                let u = f[i];
                let v = f[(i + 1) % k];
                let e = edge_of(u, v);
                let a = at(fi, i, 0);
                let b = at(fi, i, 1);
                flag_vertex[a] = u;
                flag_vertex[b] = v;
                flag_edge[a] = e;
                flag_edge[b] = e;
                flag_face[a] = fi;
                flag_face[b] = fi;
                s0[a] = b;
                s0[b] = a;
                // s1 pairs the two edges of f at one vertex: side-0 flag at
                // position i and side-1 flag at position i-1 share vertex v_i
                let prev = (i + k - 1) % k;
                s1[a] = at(fi, prev, 1);
                s1[at(fi, prev, 1)] = a;
            }
        }
        // s2 pairs flags with the same (vertex, edge) across the two faces
        let mut slot: Vec<[usize; 2]> = vec![[usize::MAX; 2]; 2 * edges.len()];
        for fl in 0..n_flags {
            let e = flag_edge[fl];
            let (lo, _hi) = edges[e];
            let side = usize::from(flag_vertex[fl] != lo);
            let s = &mut slot[2 * e + side];
            if s[0] == usize::MAX {
                s[0] = fl;
            } else {
                s[1] = fl;
            }
        }
        for pair in slot {
            debug_assert_ne!(pair[1], usize::MAX);
            s2[pair[0]] = pair[1];
            s2[pair[1]] = pair[0];
        }
        FlagSystem {
            involutions: [s0, s1, s2],
            flag_vertex,
            flag_edge,
            flag_face,
        }
    }

    pub fn n_flags(&self) -> usize {
        self.flag_vertex.len()
    }

    pub fn s(&self, i: usize, flag: usize) -> usize {
        self.involutions[i][flag]
    }

    pub fn vertex(&self, flag: usize) -> usize {
        self.flag_vertex[flag]
    }

    pub fn edge(&self, flag: usize) -> usize {
        self.flag_edge[flag]
    }

    pub fn face(&self, flag: usize) -> usize {
        self.flag_face[flag]
    }

    /// The group generated by the involutions acts transitively on flags of a
    /// connected map.
    pub fn is_connected(&self) -> bool {
        let n = self.n_flags();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(f) = queue.pop_front() {
            for i in 0..3 {
                let g = self.s(i, f);
                if !seen[g] {
                    seen[g] = true;
                    count += 1;
                    queue.push_back(g);
                }
            }
        }
        count == n
    }
}

/// An automorphism as compatible permutations of vertices, edges and faces
/// (internal indices).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MapAutomorphism {
    pub vertex_perm: Vec<usize>,
    pub edge_perm: Vec<usize>,
    pub face_perm: Vec<usize>,
}

impl MapAutomorphism {
    pub fn is_identity(&self) -> bool {
        self.vertex_perm.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn compose(&self, other: &MapAutomorphism) -> MapAutomorphism {
        MapAutomorphism {
            vertex_perm: self
                .vertex_perm
                .iter()
                .map(|&v| other.vertex_perm[v])
                .collect(),
            edge_perm: self.edge_perm.iter().map(|&e| other.edge_perm[e]).collect(),
            face_perm: self.face_perm.iter().map(|&f| other.face_perm[f]).collect(),
        }
    }

    pub fn inverse(&self) -> MapAutomorphism {
        let inv = |p: &[usize]| {
            let mut q = vec![0; p.len()];
            for (i, &v) in p.iter().enumerate() {
                q[v] = i;
            }
            q
        };
        MapAutomorphism {
            vertex_perm: inv(&self.vertex_perm),
            edge_perm: inv(&self.edge_perm),
            face_perm: inv(&self.face_perm),
        }
    }
}

/// The full automorphism group, including orientation-reversing elements.
pub fn automorphism_group(map: &PolyhedralMap) -> Result<Vec<MapAutomorphism>, AutomorphismError> {
    automorphism_group_from_base(map, 0)
}

/// Same group computed by propagating from a chosen base flag; the result is
/// independent of the choice.
pub fn automorphism_group_from_base(
    map: &PolyhedralMap,
    base: usize,
) -> Result<Vec<MapAutomorphism>, AutomorphismError> {
    let flags = FlagSystem::new(map);
    if !flags.is_connected() {
        return Err(AutomorphismError::DisconnectedMap);
    }
    let n = flags.n_flags();
    let base = base % n;
    let mut group = Vec::new();
    for target in 0..n {
        if let Some(img) = propagate(&flags, base, target) {
            if let Some(auto) = extract(map, &flags, &img) {
                group.push(auto);
            }
        }
    }
    group.sort();
    group.dedup();
    Ok(group)
}

/// Deterministic propagation of base -> target along the involutions.
fn propagate(flags: &FlagSystem, base: usize, target: usize) -> Option<Vec<usize>> {
    let n = flags.n_flags();
    let mut img = vec![usize::MAX; n];
    img[base] = target;
    let mut queue = VecDeque::from([base]);
    while let Some(f) = queue.pop_front() {
        for i in 0..3 {
            let g = flags.s(i, f);
            let want = flags.s(i, img[f]);
            if img[g] == usize::MAX {
                img[g] = want;
                queue.push_back(g);
            } else if img[g] != want {
                return None;
            }
        }
    }
    debug_assert!(
        img.iter().all(|&x| x != usize::MAX),
        "flag graph is connected"
    );
    Some(img)
}

/// Turn a consistent flag bijection into vertex/edge/face permutations.
fn extract(map: &PolyhedralMap, flags: &FlagSystem, img: &[usize]) -> Option<MapAutomorphism> {
    let nv = map.n_vertices();
    let ne = map.n_edges();
    let nf = map.n_faces();
    let mut vp = vec![usize::MAX; nv];
    let mut ep = vec![usize::MAX; ne];
    let mut fp = vec![usize::MAX; nf];
    for (f, &g) in img.iter().enumerate() {
        for (perm, a, b) in [
            (&mut vp, flags.vertex(f), flags.vertex(g)),
            (&mut ep, flags.edge(f), flags.edge(g)),
            (&mut fp, flags.face(f), flags.face(g)),
        ] {
            if perm[a] == usize::MAX {
                perm[a] = b;
            } else if perm[a] != b {
                return None;
            }
        }
    }
    let bijective = |p: &[usize]| {
        let mut seen = vec![false; p.len()];
        p.iter()
            .all(|&v| v != usize::MAX && !std::mem::replace(&mut seen[v], true))
    };
    if bijective(&vp) && bijective(&ep) && bijective(&fp) {
        Some(MapAutomorphism {
            vertex_perm: vp,
            edge_perm: ep,
            face_perm: fp,
        })
    } else {
        None
    }
}

fn orbit_partition(n: usize, images: impl Iterator<Item = Vec<usize>>) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        let mut root = x;
        while parent[root] != root {
            root = parent[root];
        }
        let mut cur = x;
        while parent[cur] != root {
            let next = parent[cur];
            parent[cur] = root;
            cur = next;
        }
        root
    }
    for perm in images {
        for (i, &j) in perm.iter().enumerate() {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut orbits: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        let r = find(&mut parent, i);
        orbits[r].push(i);
    }
    orbits.retain(|o| !o.is_empty());
    orbits.sort_by_key(|o| o[0]);
    orbits
}

/// Orbits of the vertex set under the automorphism group, as sorted public ids.
pub fn vertex_orbits(map: &PolyhedralMap) -> Result<Vec<Vec<u32>>, AutomorphismError> {
    let group = automorphism_group(map)?;
    let orbits = orbit_partition(map.n_vertices(), group.into_iter().map(|g| g.vertex_perm));
    Ok(orbits
        .into_iter()
        .map(|o| o.into_iter().map(|i| map.vertex_id(i)).collect())
        .collect())
}

/// Orbits of the face set under the automorphism group (face indices).
pub fn face_orbits(map: &PolyhedralMap) -> Result<Vec<Vec<usize>>, AutomorphismError> {
    let group = automorphism_group(map)?;
    Ok(orbit_partition(
        map.n_faces(),
        group.into_iter().map(|g| g.face_perm),
    ))
}

pub fn is_vertex_transitive(map: &PolyhedralMap) -> Result<bool, AutomorphismError> {
    Ok(vertex_orbits(map)?.len() == 1)
}

pub fn is_face_transitive(map: &PolyhedralMap) -> Result<bool, AutomorphismError> {
    Ok(face_orbits(map)?.len() == 1)
}

/// Map isomorphism by flag propagation across the two flag systems.
pub fn are_isomorphic(a: &PolyhedralMap, b: &PolyhedralMap) -> bool {
    if a.n_vertices() != b.n_vertices() || a.n_edges() != b.n_edges() || a.n_faces() != b.n_faces()
    {
        return false;
    }
    let mut sa: Vec<usize> = a.faces_internal().iter().map(Vec::len).collect();
    let mut sb: Vec<usize> = b.faces_internal().iter().map(Vec::len).collect();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return false;
    }
    let fa = FlagSystem::new(a);
    let fb = FlagSystem::new(b);
    if fa.n_flags() != fb.n_flags() {
        return false;
    }
    if !fa.is_connected() || !fb.is_connected() {
        // fall back only for connected maps; disconnected maps are out of scope
        return false;
    }
    (0..fb.n_flags()).any(|target| propagate_between(&fa, &fb, 0, target))
}

fn propagate_between(fa: &FlagSystem, fb: &FlagSystem, base: usize, target: usize) -> bool {
    let n = fa.n_flags();
    let mut img = vec![usize::MAX; n];
    img[base] = target;
    let mut queue = VecDeque::from([base]);
    while let Some(f) = queue.pop_front() {
        for i in 0..3 {
            let g = fa.s(i, f);
            let want = fb.s(i, img[f]);
            if img[g] == usize::MAX {
                img[g] = want;
                queue.push_back(g);
            } else if img[g] != want {
                return false;
            }
        }
    }
    true
}
