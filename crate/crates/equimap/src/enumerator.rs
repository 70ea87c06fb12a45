//! Enumeration of admissible semi-equivelar types on Euler-characteristic-zero
//! surfaces.
//!
//! The pipeline: solve the vertex equation sum (1/2 - 1/q_i) m_i = 1 in exact
//! rationals, expand each degree multiset into cyclic arrangements, then drop
//! the arrangements excluded by the parity restrictions. The Klein bottle
//! additionally excludes `[3^4,6^1]`, which is taken as an axiom here.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;

use crate::classifier::TypeString;

/// Face-size search bound. The extreme solution is (3,7,42); the sanity sweep
/// in the tests confirms nothing new appears up to 100.
pub const FACE_SIZE_BOUND: u32 = 42;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Surface {
    Torus,
    KleinBottle,
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Surface::Torus => write!(f, "torus"),
            Surface::KleinBottle => write!(f, "klein-bottle"),
        }
    }
}

impl std::str::FromStr for Surface {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "torus" => Ok(Surface::Torus),
            "klein-bottle" | "klein_bottle" | "kleinbottle" | "klein" => Ok(Surface::KleinBottle),
            other => Err(format!("unsupported surface {other:?}")),
        }
    }
}

/// A degree multiset `(q1^m1,...,ql^ml)`: distinct face sizes q_i with
/// multiplicities m_i, ordered by descending m then ascending q.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegreeMultiset {
    pairs: Vec<(u32, u32)>,
}

impl DegreeMultiset {
    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn degree(&self) -> u32 {
        self.pairs.iter().map(|&(_, m)| m).sum()
    }

    /// Exact check of the vertex equation sum (1/2 - 1/q_i) m_i = 1.
    pub fn satisfies_vertex_equation(&self) -> bool {
        let sum: Ratio<i64> = self
            .pairs
            .iter()
            .map(|&(q, m)| {
                (Ratio::new(1, 2) - Ratio::new(1, q as i64)) * Ratio::from_integer(m as i64)
            })
            .sum();
        sum == Ratio::from_integer(1)
    }

    /// The multiset of face sizes with multiplicities expanded.
    pub fn sizes(&self) -> Vec<u32> {
        self.pairs
            .iter()
            .flat_map(|&(q, m)| std::iter::repeat_n(q, m as usize))
            .collect()
    }
}

impl fmt::Display for DegreeMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, (q, m)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{q}^{m}")?;
        }
        write!(f, ")")
    }
}

/// Multisets are sorted by descending multiplicity, then ascending face size.
fn reference_order(pairs: &mut [(u32, u32)]) {
    pairs.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
}

/// All exact solutions of the vertex equation with face sizes up to `bound`.
pub fn solve_vertex_equation_bounded(bound: u32) -> Vec<DegreeMultiset> {
    let mut out = BTreeSet::new();
    // degree d between 3 and 6; q_i >= 3 forces d <= 6
    for d in 3u32..=6 {
        for counts in partitions(d) {
            // assign strictly increasing sizes within equal-count groups to
            // avoid revisiting permutations of the same multiset
            let mut pairs = vec![(0u32, 0u32); counts.len()];
            assign(
                &counts,
                0,
                3,
                bound,
                Ratio::from_integer(1),
                &mut pairs,
                &mut out,
            );
        }
    }
    let result: Vec<DegreeMultiset> = out.into_iter().collect();
    debug_assert!(result.iter().all(DegreeMultiset::satisfies_vertex_equation));
    result
}

/// All exact solutions of the vertex equation (face sizes up to 42).
pub fn solve_vertex_equation() -> Vec<DegreeMultiset> {
    solve_vertex_equation_bounded(FACE_SIZE_BOUND)
}

fn assign(
    counts: &[u32],
    idx: usize,
    min_q: u32,
    bound: u32,
    remaining: Ratio<i64>,
    pairs: &mut Vec<(u32, u32)>,
    out: &mut BTreeSet<DegreeMultiset>,
) {
    if idx == counts.len() {
        if remaining == Ratio::from_integer(0) {
            let mut ps = pairs.clone();
            reference_order(&mut ps);
            // face sizes must be pairwise distinct
            let mut qs: Vec<u32> = ps.iter().map(|&(q, _)| q).collect();
            qs.sort_unstable();
            qs.dedup();
            if qs.len() == ps.len() {
                out.insert(DegreeMultiset { pairs: ps });
            }
        }
        return;
    }
    let m = counts[idx];
    // within a block of equal counts, sizes increase strictly
    let lo = if idx > 0 && counts[idx - 1] == m {
        pairs[idx - 1].0 + 1
    } else {
        3
    };
    for q in lo.max(min_q)..=bound {
        let term = (Ratio::new(1, 2) - Ratio::new(1, q as i64)) * Ratio::from_integer(m as i64);
        if term > remaining {
            break; // terms grow with q
        }
        pairs[idx] = (q, m);
        assign(counts, idx + 1, 3, bound, remaining - term, pairs, out);
    }
    pairs.truncate(counts.len());
}

/// Partitions of n into weakly decreasing positive parts.
fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=max.min(n)).rev() {
            cur.push(part);
            rec(n - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All distinct cyclic arrangements of the multiset, as canonical type strings.
pub fn expand_arrangements(ms: &DegreeMultiset) -> BTreeSet<TypeString> {
    let sizes = ms.sizes();
    let mut out = BTreeSet::new();
    permute_distinct(
        &sizes,
        &mut Vec::new(),
        &mut vec![false; sizes.len()],
        &mut out,
    );
    out
}

fn permute_distinct(
    sizes: &[u32],
    cur: &mut Vec<u32>,
    used: &mut Vec<bool>,
    out: &mut BTreeSet<TypeString>,
) {
    if cur.len() == sizes.len() {
        out.insert(TypeString::canonical(cur).expect("sizes and length already validated"));
        return;
    }
    let mut last = None;
    for i in 0..sizes.len() {
        if used[i] || last == Some(sizes[i]) {
            continue;
        }
        last = Some(sizes[i]);
        used[i] = true;
        cur.push(sizes[i]);
        permute_distinct(sizes, cur, used, out);
        cur.pop();
        used[i] = false;
    }
}

/// The union of arrangements over every solution of the vertex equation.
pub fn all_candidate_types() -> Vec<TypeString> {
    let mut set = BTreeSet::new();
    for ms in solve_vertex_equation() {
        set.extend(expand_arrangements(&ms));
    }
    set.into_iter().collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Restriction {
    /// Some run has n_i = 2 with p_i odd and unique.
    DoubleOddUnique,
    /// Some run has n_i = 1 with p_i odd and unique, and distinct neighbours.
    SingleOddUniqueNeighboursDiffer,
    /// Some run has n_i = 1 with p_i odd and both neighbour sizes unique.
    SingleOddUniqueNeighbours,
}

impl fmt::Display for Restriction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Restriction::DoubleOddUnique => write!(f, "i"),
            Restriction::SingleOddUniqueNeighboursDiffer => write!(f, "ii"),
            Restriction::SingleOddUniqueNeighbours => write!(f, "iii"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub rule: Restriction,
    /// Index of the offending run in the canonical run list.
    pub index: usize,
}

/// First parity restriction violated by a type, if any. Types violating one of
/// these cannot occur as the face-cycle of a semi-equivelar map on any surface.
pub fn violates_restriction(t: &TypeString) -> Option<Violation> {
    let runs = t.runs();
    let k = runs.len();
    let unique = |i: usize| {
        runs.iter()
            .enumerate()
            .all(|(j, &(p, _))| j == i || p != runs[i].0)
    };
    // rule i: n_i = 2, p_i odd, p_i unique among the runs
    for (i, &(p, n)) in runs.iter().enumerate() {
        if n == 2 && p % 2 == 1 && unique(i) {
            return Some(Violation {
                rule: Restriction::DoubleOddUnique,
                index: i,
            });
        }
    }
    // rule ii: n_i = 1, p_i odd and unique, and the neighbouring runs differ
    for (i, &(p, n)) in runs.iter().enumerate() {
        if n == 1 && p % 2 == 1 && unique(i) {
            let prev = runs[(i + k - 1) % k].0;
            let next = runs[(i + 1) % k].0;
            if prev != next {
                return Some(Violation {
                    rule: Restriction::SingleOddUniqueNeighboursDiffer,
                    index: i,
                });
            }
        }
    }
    // rule iii: n_i = 1, p_i odd, and each neighbouring size is unique among
    // the other runs; the neighbours must be distinct runs, so k >= 3
    if k >= 3 {
        for (i, &(p, n)) in runs.iter().enumerate() {
            if n == 1 && p % 2 == 1 {
                let prev = (i + k - 1) % k;
                let next = (i + 1) % k;
                if unique(prev) && unique(next) {
                    return Some(Violation {
                        rule: Restriction::SingleOddUniqueNeighbours,
                        index: i,
                    });
                }
            }
        }
    }
    None
}

/// Admissible semi-equivelar types on the given chi = 0 surface, in canonical
/// order. The torus admits 11 types, the Klein bottle 10.
pub fn admissible_types(surface: Surface) -> Vec<TypeString> {
    let no_346: TypeString = "[3^4,6^1]".parse().unwrap();
    all_candidate_types()
        .into_iter()
        .filter(|t| violates_restriction(t).is_none())
        .filter(|t| surface == Surface::Torus || *t != no_346)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ts(s: &str) -> TypeString {
        s.parse().unwrap()
    }

    #[test]
    fn degree_six_forces_all_triangles() {
        let sols = solve_vertex_equation();
        let d6: Vec<_> = sols.iter().filter(|m| m.degree() == 6).collect();
        assert_eq!(d6.len(), 1);
        assert_eq!(d6[0].pairs(), &[(3, 6)]);
    }

    #[test]
    fn degree_five_has_two_solutions() {
        let sols = solve_vertex_equation();
        let d5: Vec<String> = sols
            .iter()
            .filter(|m| m.degree() == 5)
            .map(|m| m.to_string())
            .collect();
        assert_eq!(d5, ["(3^3,4^2)", "(3^4,6^1)"]);
    }

    #[test]
    fn seventeen_solutions_and_none_beyond_42() {
        assert_eq!(solve_vertex_equation().len(), 17);
        // sanity sweep: no additional solutions with any face size in (42, 100]
        let wide = solve_vertex_equation_bounded(100);
        assert_eq!(wide, solve_vertex_equation());
    }

    #[test]
    fn arrangement_expansion_matches_known_splits() {
        let sols = solve_vertex_equation();
        let m334 = sols.iter().find(|m| m.to_string() == "(3^3,4^2)").unwrap();
        let arr: Vec<String> = expand_arrangements(m334)
            .iter()
            .map(|t| t.to_string())
            .collect();
        assert_eq!(arr, ["[3^3,4^2]", "[3^2,4^1,3^1,4^1]"]);

        let m436 = sols
            .iter()
            .find(|m| m.to_string() == "(4^2,3^1,6^1)")
            .unwrap();
        let arr: Vec<String> = expand_arrangements(m436)
            .iter()
            .map(|t| t.to_string())
            .collect();
        assert_eq!(arr, ["[3^1,4^2,6^1]", "[3^1,4^1,6^1,4^1]"]);

        let m36 = sols.iter().find(|m| m.to_string() == "(3^6)").unwrap();
        assert_eq!(expand_arrangements(m36).len(), 1);
    }

    #[test]
    fn twenty_one_candidate_types() {
        assert_eq!(all_candidate_types().len(), 21);
    }

    #[test]
    fn restriction_examples_from_each_rule() {
        assert_eq!(
            violates_restriction(&ts("[3^2,6^2]")).unwrap().rule,
            Restriction::DoubleOddUnique
        );
        assert_eq!(
            violates_restriction(&ts("[3^1,4^2,6^1]")).unwrap().rule,
            Restriction::SingleOddUniqueNeighboursDiffer
        );
        assert_eq!(
            violates_restriction(&ts("[3^1,4^1,3^1,12^1]"))
                .unwrap()
                .rule,
            Restriction::SingleOddUniqueNeighbours
        );
        assert_eq!(violates_restriction(&ts("[3^6]")), None);
        // the two-run case never triggers rule iii
        assert_eq!(violates_restriction(&ts("[3^1,12^2]")), None);
    }

    #[test]
    fn admissible_counts() {
        assert_eq!(admissible_types(Surface::Torus).len(), 11);
        assert_eq!(admissible_types(Surface::KleinBottle).len(), 10);
    }
}
