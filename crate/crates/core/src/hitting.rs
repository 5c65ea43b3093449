//! Minimal transversals of a hypergraph on at most 64 vertices, edges given
//! as bitmasks. Berge's incremental dualization: process one edge at a time,
//! keeping the current family of minimal transversals.

/// All inclusion-minimal sets meeting every edge. An empty edge admits no
/// transversal; an empty edge list has the single transversal `∅`.
pub(crate) fn minimal_hitting_sets(edges: &[u64]) -> Vec<u64> {
    let edges = minimal_edges(edges);
    if edges.first() == Some(&0) {
        return Vec::new();
    }
    let mut family: Vec<u64> = vec![0];
    for &edge in &edges {
        let (hit, miss): (Vec<u64>, Vec<u64>) = family.iter().partition(|&&h| h & edge != 0);
        if miss.is_empty() {
            continue;
        }
        let mut next = hit.clone();
        for h in miss {
            let mut bits = edge;
            while bits != 0 {
                let v = bits & bits.wrapping_neg();
                bits ^= v;
                let cand = h | v;
                // cand is minimal unless some kept transversal sits strictly inside it
                if !hit.iter().any(|&k| subset(k, cand)) {
                    next.push(cand);
                }
            }
        }
        family = minimal_sets(next);
    }
    family.sort_unstable();
    family
}

/// Drops supersets of other edges; an edge that contains another never
/// changes the transversal family.
fn minimal_edges(edges: &[u64]) -> Vec<u64> {
    minimal_sets(edges.to_vec())
}

fn subset(a: u64, b: u64) -> bool {
    a & b == a
}

fn minimal_sets(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_unstable_by_key(|s| (s.count_ones(), *s));
    sets.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| subset(k, s)) {
            kept.push(s);
        }
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute(edges: &[u64], n: u32) -> Vec<u64> {
        let hits = |s: u64| edges.iter().all(|&e| e & s != 0);
        let all: Vec<u64> = (0..1u64 << n).filter(|&s| hits(s)).collect();
        let mut min: Vec<u64> = all
            .iter()
            .copied()
            .filter(|&s| !all.iter().any(|&t| t != s && t & s == t))
            .collect();
        min.sort_unstable();
        min
    }

    #[test]
    fn small_cases() {
        assert_eq!(minimal_hitting_sets(&[]), vec![0]);
        assert_eq!(minimal_hitting_sets(&[0b1, 0]), Vec::<u64>::new());
        assert_eq!(minimal_hitting_sets(&[0b011, 0b110]), vec![0b010, 0b101]);
    }

    proptest! {
        #[test]
        fn agrees_with_brute_force(edges in prop::collection::vec(1u64..64, 0..7)) {
            prop_assert_eq!(minimal_hitting_sets(&edges), brute(&edges, 6));
        }
    }
}
