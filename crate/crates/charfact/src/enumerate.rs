//! Bounded partition enumeration for sweeps and tests.

use crate::partition::Partition;

/// All partitions with `|λ| ≤ max_size` and `ℓ(λ) ≤ max_len`, ordered by
/// size and then lexicographically descending within each size.
pub fn partitions_bounded(max_size: usize, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for n in 0..=max_size {
        out.extend(partitions_of(n, max_len, n));
    }
    out
}

/// All partitions of exactly `n` with at most `max_len` parts and every
/// part at most `max_part`, lexicographically descending.
pub fn partitions_of(n: usize, max_len: usize, max_part: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    gen(n, max_part, max_len, &mut current, &mut out);
    out
}

fn gen(
    rem: usize,
    max_part: usize,
    slots: usize,
    current: &mut Vec<i64>,
    out: &mut Vec<Partition>,
) {
    if rem == 0 {
        out.push(Partition::new(current.iter().copied()).expect("generated parts decrease"));
        return;
    }
    if slots == 0 {
        return;
    }
    let hi = rem.min(max_part);
    for next in (1..=hi).rev() {
        current.push(next as i64);
        gen(rem - next, next, slots - 1, current, out);
        current.pop();
    }
}

/// All partitions contained in `λ`, including the empty one and λ itself.
pub fn subpartitions(lambda: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current: Vec<i64> = Vec::new();
    fn rec(
        lambda: &Partition,
        row: usize,
        prev: i64,
        current: &mut Vec<i64>,
        out: &mut Vec<Partition>,
    ) {
        if row == lambda.len() {
            out.push(Partition::new(current.iter().copied()).expect("contained shape"));
            return;
        }
        let hi = (lambda.part(row) as i64).min(prev);
        for v in (0..=hi).rev() {
            current.push(v);
            rec(lambda, row + 1, v, current, out);
            current.pop();
        }
    }
    rec(lambda, 0, i64::MAX, &mut current, &mut out);
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        // p(0..=10) with unrestricted length
        let expected = [1usize, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(partitions_of(n, n.max(1), n.max(1)).len(), e, "p({n})");
        }
        assert_eq!(
            partitions_bounded(10, 10).len(),
            expected.iter().sum::<usize>()
        );
    }

    #[test]
    fn bounded_length() {
        assert!(partitions_bounded(6, 2).iter().all(|p| p.len() <= 2));
        assert_eq!(partitions_of(4, 2, 4).len(), 3); // 4, 31, 22
    }

    #[test]
    fn subpartition_count_of_rectangle() {
        // sub-shapes of a 2x2 box: lattice paths, C(4,2) = 6
        let lam: Partition = "2,2".parse().unwrap();
        assert_eq!(subpartitions(&lam).len(), 6);
    }
}
