//! Archimedean tilings as data-driven fundamental domains, and their torus
//! quotients by integer translation sublattices.
//!
//! A `TilingSpec` lists the vertex classes of one translation cell and the
//! faces incident to the cell as (class, dx, dy) offset templates. Quotienting
//! by a rank-2 integer sublattice instantiates each template over every coset
//! and validates the result as a polyhedral map.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::classifier::{classify, TypeString};
use crate::map::{build_map, MapError, PolyhedralMap};

/// One face of the fundamental domain: corners as (class, dx, dy).
pub type FaceRule = Vec<(usize, i64, i64)>;

#[derive(Debug, Clone)]
pub struct TilingSpec {
    pub type_string: TypeString,
    pub orbit_classes: usize,
    pub face_rules: Vec<FaceRule>,
}

/// Integer basis of a translation sublattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeBasis {
    pub a: (i64, i64),
    pub b: (i64, i64),
}

impl LatticeBasis {
    pub fn new(a: (i64, i64), b: (i64, i64)) -> Self {
        LatticeBasis { a, b }
    }

    pub fn det(&self) -> i64 {
        self.a.0 * self.b.1 - self.a.1 * self.b.0
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuotientError {
    #[error("basis is degenerate (determinant 0)")]
    DegenerateBasis,
    #[error("quotient by a lattice of determinant {det} is not polyhedral: {source}")]
    QuotientNotPolyhedral {
        det: i64,
        #[source]
        source: MapError,
    },
    #[error("quotient classifies as {got} instead of {expected}")]
    WrongType { expected: TypeString, got: String },
}

/// Reduction of integer cells modulo the sublattice, via a triangular basis.
struct CosetReducer {
    /// (u, 0): the unique lattice vector with zero second coordinate, u > 0
    u: i64,
    /// (wx, g): lattice vector achieving the minimal positive second coordinate
    w: (i64, i64),
}

impl CosetReducer {
    fn new(basis: &LatticeBasis) -> Option<Self> {
        if basis.det() == 0 {
            return None;
        }
        let (a, b) = (basis.a, basis.b);
        // extended gcd on the second coordinates
        let (g, p, q) = egcd(a.1, b.1);
        let w = if g == 0 {
            // both second coordinates zero would make det zero
            unreachable!("det != 0 guarantees a nonzero second coordinate")
        } else {
            (p * a.0 + q * b.0, g)
        };
        let u = (a.0 * b.1 - a.1 * b.0).abs() / g; // = |det| / g
        Some(CosetReducer { u, w })
    }

    fn n_cells(&self) -> usize {
        (self.u * self.w.1) as usize
    }

    /// Canonical representative of (x, y) with 0 <= y < g and 0 <= x < u.
    fn reduce(&self, x: i64, y: i64) -> (i64, i64) {
        let g = self.w.1;
        let k = y.div_euclid(g);
        let x = x - k * self.w.0;
        let y = y - k * g;
        (x.rem_euclid(self.u), y)
    }

    fn index(&self, x: i64, y: i64) -> usize {
        let (x, y) = self.reduce(x, y);
        (y * self.u + x) as usize
    }
}

fn egcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, p, q) = egcd(b, a.rem_euclid(b));
        (g, q, p - q * a.div_euclid(b))
    }
}

/// Quotient of the tiling by the sublattice spanned by the basis.
pub fn torus_quotient(
    spec: &TilingSpec,
    basis: &LatticeBasis,
) -> Result<PolyhedralMap, QuotientError> {
    let reducer = CosetReducer::new(basis).ok_or(QuotientError::DegenerateBasis)?;
    let n_cells = reducer.n_cells();
    let vertex =
        |class: usize, x: i64, y: i64| -> u32 { (class * n_cells + reducer.index(x, y)) as u32 };
    let mut faces = Vec::with_capacity(n_cells * spec.face_rules.len());
    for cy in 0..reducer.w.1 {
        for cx in 0..reducer.u {
            for rule in &spec.face_rules {
                faces.push(
                    rule.iter()
                        .map(|&(c, dx, dy)| vertex(c, cx + dx, cy + dy))
                        .collect::<Vec<u32>>(),
                );
            }
        }
    }
    let map = build_map(&faces).map_err(|source| QuotientError::QuotientNotPolyhedral {
        det: basis.det(),
        source,
    })?;
    let c = classify(&map);
    match c.type_string {
        Some(t) if t == spec.type_string => Ok(map),
        other => Err(QuotientError::WrongType {
            expected: spec.type_string.clone(),
            got: other
                .map(|t| t.to_string())
                .unwrap_or_else(|| "mixed".into()),
        }),
    }
}

/// The built-in fundamental domains. Face templates for the triangular,
/// square and hexagonal tilings are the standard lattice cells; the
/// elongated-triangular, snub-square and trihexagonal templates follow the
/// labelled vertex families u/v/w with cells chosen so the generating
/// translations are one step in x and one step in y.
pub fn builtin_tilings() -> BTreeMap<TypeString, TilingSpec> {
    let specs = [
        // one vertex class, two triangles per cell
        (
            "[3^6]",
            1,
            vec![
                vec![(0, 0, 0), (0, 1, 0), (0, 0, 1)],
                vec![(0, 0, 0), (0, 0, 1), (0, -1, 1)],
            ],
        ),
        // one vertex class, one square per cell
        (
            "[4^4]",
            1,
            vec![vec![(0, 0, 0), (0, 1, 0), (0, 1, 1), (0, 0, 1)]],
        ),
        // two classes (the two triangles of the dual cell), one hexagon per cell
        (
            "[6^3]",
            2,
            vec![vec![
                (0, 0, 0),
                (1, 0, 0),
                (0, -1, 0),
                (1, 0, -1),
                (0, 0, -1),
                (1, 1, -1),
            ]],
        ),
        // rows of squares and triangle strips; class 0 = lower row of the cell
        (
            "[3^3,4^2]",
            2,
            vec![
                vec![(0, 0, 0), (0, 1, 0), (1, 1, 0), (1, 0, 0)],
                vec![(0, 1, 1), (1, 0, 0), (1, 1, 0)],
                vec![(0, 0, 1), (0, 1, 1), (1, 0, 0)],
            ],
        ),
        // snub square: four classes per cell, two squares and four triangles
        (
            "[3^2,4^1,3^1,4^1]",
            4,
            vec![
                vec![(0, 0, 1), (1, 0, 1), (3, 0, 0)],
                vec![(0, 1, 0), (1, 0, 0), (2, 1, 0)],
                vec![(0, 1, 1), (1, 0, 1), (3, 0, 0), (2, 1, 0)],
                vec![(0, 0, 1), (2, 0, 0), (3, 0, 0)],
                vec![(1, 0, 0), (2, 1, 0), (3, 0, 0)],
                vec![(0, 0, 0), (1, 0, 0), (3, 0, 0), (2, 0, 0)],
            ],
        ),
        // trihexagonal: classes u, v, w; one hexagon and two triangles per cell
        (
            "[3^1,6^1,3^1,6^1]",
            3,
            vec![
                vec![(0, 0, 0), (1, 0, 1), (2, 0, 1)],
                vec![(0, 0, 0), (1, 1, 0), (2, 0, 0)],
                vec![
                    (0, 0, 0),
                    (1, 1, 0),
                    (2, 1, 0),
                    (0, 1, 0),
                    (1, 1, 1),
                    (2, 0, 1),
                ],
            ],
        ),
    ];
    specs
        .into_iter()
        .map(|(t, classes, face_rules)| {
            let type_string: TypeString = t.parse().unwrap();
            (
                type_string.clone(),
                TilingSpec {
                    type_string,
                    orbit_classes: classes,
                    face_rules,
                },
            )
        })
        .collect()
}

/// Serialize a quotient with a header recording its provenance.
pub fn quotient_to_text(spec: &TilingSpec, basis: &LatticeBasis, map: &PolyhedralMap) -> String {
    format!(
        "# tiling {} basis {} {} {} {}\n{}",
        spec.type_string,
        basis.a.0,
        basis.a.1,
        basis.b.0,
        basis.b.1,
        map.to_text()
    )
}
