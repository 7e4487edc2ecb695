//! Parking functions attached to lattice paths.
//!
//! A sequence of (value, bar) symbols is a parking function for a family
//! when sorting it canonically (by value, unbarred before barred at equal
//! value) yields the area code of a valid path of the family.  The
//! factorization records that path together with the permutation sigma
//! sending code lines back to sequence positions; ties are broken so that
//! earlier sequence positions land on earlier code lines.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::counting::rearrangement_count;
use crate::lattice::{enumerate_paths, AreaCode, CodeEntry, LatticePath, PathSpec};

/// A parking-function witness: the underlying path and the line-to-position
/// permutation (1-indexed positions, listed line by line).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub path: LatticePath,
    pub sigma: Vec<usize>,
}

/// Canonical symbol order: by value, unbarred before barred.
fn symbol_key(e: &(u64, bool)) -> (u64, bool) {
    *e
}

/// Test whether `seq` is a parking function for `spec`; on success return
/// its factorization.
pub fn is_parking(seq: &[(u64, bool)], spec: &PathSpec) -> Option<Factorization> {
    if seq.len() as u64 != spec.height() {
        return None;
    }
    let mut order: Vec<usize> = (0..seq.len()).collect();
    // Stable sort: equal symbols keep position order, so earlier positions
    // map to earlier code lines.
    order.sort_by_key(|&i| symbol_key(&seq[i]));
    let entries: Vec<CodeEntry> = order
        .iter()
        .map(|&i| CodeEntry {
            value: seq[i].0,
            bar: seq[i].1,
        })
        .collect();
    let code = AreaCode {
        spec: *spec,
        entries,
    };
    let path = code.decode().ok()?;
    Some(Factorization {
        path,
        sigma: order.iter().map(|&i| i + 1).collect(),
    })
}

/// All parking functions with a given underlying path: the distinct
/// rearrangements of its area code.
pub fn parking_set(path: &LatticePath) -> Vec<Vec<(u64, bool)>> {
    let symbols = path.encode().pairs();
    distinct_permutations(&symbols)
}

/// Distinct permutations of a sorted multiset, in lexicographic order.
pub fn distinct_permutations<T: Ord + Copy>(sorted: &[T]) -> Vec<Vec<T>> {
    let mut pool: Vec<(T, usize)> = Vec::new();
    for &s in sorted {
        match pool.last_mut() {
            Some((v, m)) if *v == s => *m += 1,
            _ => pool.push((s, 1)),
        }
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(sorted.len());
    fn rec<T: Ord + Copy>(
        pool: &mut Vec<(T, usize)>,
        current: &mut Vec<T>,
        total: usize,
        out: &mut Vec<Vec<T>>,
    ) {
        if current.len() == total {
            out.push(current.clone());
            return;
        }
        for k in 0..pool.len() {
            if pool[k].1 == 0 {
                continue;
            }
            pool[k].1 -= 1;
            current.push(pool[k].0);
            rec(pool, current, total, out);
            current.pop();
            pool[k].1 += 1;
        }
    }
    rec(&mut pool, &mut current, sorted.len(), &mut out);
    out
}

/// Total number of parking functions of a family, summed path by path.
pub fn brute_count_parking(spec: &PathSpec) -> BigUint {
    let mut total = BigUint::zero();
    for path in enumerate_paths(spec) {
        total += rearrangement_count(&path.encode().pairs());
    }
    total
}

/// Occupancy property: at most n - k entries equal to k, for every k.
pub fn check_occupancy_property(values: &[u64], n: u64) -> bool {
    let mut counts = std::collections::BTreeMap::new();
    for &v in values {
        *counts.entry(v).or_insert(0u64) += 1;
    }
    counts.into_iter().all(|(k, c)| k < n && c <= n - k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::count_parking_closed;
    use crate::lattice::PathSpec;
    use num_bigint::BigUint;

    #[test]
    fn factorization_example() {
        // Sequence 0b, 4, 0, 4, 2b over Sch_{5,3}^2 sorts to 0, 0b, 2b, 4, 4.
        let spec = PathSpec::integer_slope(5, 3, 2).unwrap();
        let seq = [(0, true), (4, false), (0, false), (4, false), (2, true)];
        let fact = is_parking(&seq, &spec).expect("sequence parks");
        assert_eq!(fact.sigma, vec![3, 1, 5, 2, 4]);
        assert_eq!(
            fact.path.encode().pairs(),
            vec![(0, false), (0, true), (2, true), (4, false), (4, false)]
        );
        // Swapping the two equal values 4 (positions 2 and 4) is also a
        // valid rearrangement witness for the same path.
        let alt = [3usize, 1, 5, 4, 2];
        let resorted: Vec<(u64, bool)> = alt.iter().map(|&p| seq[p - 1]).collect();
        assert_eq!(resorted, fact.path.encode().pairs());
    }

    #[test]
    fn non_parking_sequence_rejected() {
        let spec = PathSpec::integer_slope(3, 3, 1).unwrap();
        assert!(is_parking(&[(1, false), (1, false), (2, false)], &spec).is_none());
        assert!(is_parking(&[(0, false), (2, false), (2, false)], &spec).is_none());
        assert!(is_parking(&[(0, false), (0, false), (2, false)], &spec).is_some());
    }

    #[test]
    fn parking_set_matches_multinomial() {
        let spec = PathSpec::integer_slope(3, 2, 1).unwrap();
        for path in enumerate_paths(&spec) {
            let set = parking_set(&path);
            assert_eq!(
                BigUint::from(set.len()),
                rearrangement_count(&path.encode().pairs())
            );
            for seq in &set {
                let fact = is_parking(seq, &spec).expect("member parks");
                assert_eq!(fact.path, path);
            }
        }
    }

    #[test]
    fn brute_count_matches_closed_form() {
        for (n, d, r) in [(2, 1, 2), (2, 2, 1), (3, 3, 1), (3, 0, 2)] {
            let spec = PathSpec::integer_slope(n, d, r).unwrap();
            assert_eq!(
                brute_count_parking(&spec),
                count_parking_closed(n, d, r).unwrap(),
                "n={n} d={d} r={r}"
            );
        }
    }

    #[test]
    fn occupancy_examples() {
        assert!(check_occupancy_property(&[0, 0, 1, 2], 4));
        assert!(!check_occupancy_property(&[0, 2, 2], 3));
        // Occupancy alone does not imply parking: (1, 1, 2) satisfies it.
        assert!(check_occupancy_property(&[1, 1, 2], 3));
    }
}
