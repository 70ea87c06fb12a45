//! The built-in catalog of example maps: eight on the torus (T1..T8) and ten
//! on the Klein bottle (K1..K10), shipped as data files with their original
//! vertex labels.

use std::sync::OnceLock;

use thiserror::Error;

use crate::classifier::TypeString;
use crate::enumerator::Surface;
use crate::map::PolyhedralMap;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown catalog name {0:?}")]
pub struct UnknownName(pub String);

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub map: PolyhedralMap,
    pub expected_type: TypeString,
    pub surface: Surface,
    pub expected_transitive: bool,
}

const RAW: &[(&str, &str, &str)] = &[
    ("T1", "[3^3,4^2]", include_str!("../catalog/T1.map")),
    ("T2", "[3^2,4^1,3^1,4^1]", include_str!("../catalog/T2.map")),
    ("T3", "[3^1,12^2]", include_str!("../catalog/T3.map")),
    ("T4", "[4^1,6^1,12^1]", include_str!("../catalog/T4.map")),
    ("T5", "[3^1,4^1,6^1,4^1]", include_str!("../catalog/T5.map")),
    ("T6", "[3^1,6^1,3^1,6^1]", include_str!("../catalog/T6.map")),
    ("T7", "[4^1,8^2]", include_str!("../catalog/T7.map")),
    ("T8", "[3^4,6^1]", include_str!("../catalog/T8.map")),
    ("K1", "[3^3,4^2]", include_str!("../catalog/K1.map")),
    ("K2", "[3^2,4^1,3^1,4^1]", include_str!("../catalog/K2.map")),
    ("K3", "[3^1,12^2]", include_str!("../catalog/K3.map")),
    ("K4", "[4^1,6^1,12^1]", include_str!("../catalog/K4.map")),
    ("K5", "[3^1,4^1,6^1,4^1]", include_str!("../catalog/K5.map")),
    ("K6", "[3^1,6^1,3^1,6^1]", include_str!("../catalog/K6.map")),
    ("K7", "[4^1,8^2]", include_str!("../catalog/K7.map")),
    ("K8", "[3^6]", include_str!("../catalog/K8.map")),
    ("K9", "[6^3]", include_str!("../catalog/K9.map")),
    ("K10", "[4^4]", include_str!("../catalog/K10.map")),
];

fn entries() -> &'static Vec<CatalogEntry> {
    static ENTRIES: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    ENTRIES.get_or_init(|| {
        RAW.iter()
            .map(|&(name, t, text)| CatalogEntry {
                name,
                map: PolyhedralMap::parse(text)
                    .unwrap_or_else(|e| panic!("catalog map {name} is invalid: {e}")),
                expected_type: t.parse().unwrap(),
                surface: if name.starts_with('T') {
                    Surface::Torus
                } else {
                    Surface::KleinBottle
                },
                // the only vertex-transitive catalog entry is T1
                expected_transitive: name == "T1",
            })
            .collect()
    })
}

/// All eighteen entries, T1..T8 then K1..K10.
pub fn list() -> &'static [CatalogEntry] {
    entries()
}

pub fn get(name: &str) -> Result<&'static CatalogEntry, UnknownName> {
    entries()
        .iter()
        .find(|e| e.name.eq_ignore_ascii_case(name))
        .ok_or_else(|| UnknownName(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::classify;

    #[test]
    fn all_entries_load_and_classify() {
        for e in list() {
            let c = classify(&e.map);
            assert!(c.semi_equivelar, "{} must be semi-equivelar", e.name);
            assert_eq!(c.type_string.unwrap(), e.expected_type, "{} type", e.name);
            let s = e.map.surface_info();
            assert_eq!(s.euler_characteristic, 0, "{} must have chi 0", e.name);
            assert_eq!(
                s.orientable,
                e.surface == Surface::Torus,
                "{} orientability",
                e.name
            );
        }
    }

    #[test]
    fn vertex_counts_match_figures() {
        let expect = [
            ("T1", 10),
            ("T2", 24),
            ("T3", 72),
            ("T4", 48),
            ("T5", 36),
            ("T6", 24),
            ("T7", 48),
            ("T8", 24),
            ("K1", 24),
            ("K2", 12),
            ("K3", 72),
            ("K4", 48),
            ("K5", 18),
            ("K6", 36),
            ("K7", 36),
            ("K8", 9),
            ("K9", 18),
            ("K10", 9),
        ];
        for (name, n) in expect {
            assert_eq!(get(name).unwrap().map.n_vertices(), n, "{name}");
        }
    }

    #[test]
    fn lookup_is_case_insensitive_and_total() {
        assert!(get("t5").is_ok());
        assert!(get("K11").is_err());
    }
}
