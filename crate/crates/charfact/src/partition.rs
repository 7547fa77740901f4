//! Integer partitions and the beta-set combinatorics driving character
//! factorizations: conjugation, Frobenius coordinates, beta-sets, residue
//! counts, the residue-sorting permutation and its sign, t-cores and
//! t-quotients with the inverse (Littlewood) map, and the composite
//! partition constructors `(λ,−μ)_n`, `(±λ)_n` and the GL_n dual.
//!
//! Partitions are stored canonically with trailing zeros stripped; every
//! operation that depends on a padded length takes it as an explicit
//! argument.

use crate::{Error, Result};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

/// A weakly decreasing sequence of nonnegative integers, stored without
/// trailing zeros. The empty sequence is the empty partition.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

/// Serialized in the comma-separated text form, e.g. "5,2,2,1,1".
impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Partition {
    /// Builds a partition, stripping trailing zeros. Fails if the sequence
    /// increases anywhere or contains a negative entry.
    pub fn new<I>(parts: I) -> Result<Self>
    where
        I: IntoIterator<Item = i64>,
    {
        let mut v: Vec<i64> = parts.into_iter().collect();
        for w in v.windows(2) {
            if w[0] < w[1] {
                return Err(Error::BadPartition(format!(
                    "{:?} is not weakly decreasing",
                    v
                )));
            }
        }
        if v.iter().any(|&p| p < 0) {
            return Err(Error::BadPartition(format!("{:?} has a negative part", v)));
        }
        while v.last() == Some(&0) {
            v.pop();
        }
        Ok(Partition {
            parts: v.into_iter().map(|p| p as u32).collect(),
        })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// The i-th part (0-based), zero beyond the stored length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> u32 {
        self.part(0)
    }

    /// Containment of Young diagrams: every part of `other` fits inside ours.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| other.part(i) <= self.part(i))
    }

    /// The conjugate partition; transposes the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.first() as usize;
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p as usize >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Frobenius rank: the largest k with `λ_k ≥ k`.
    pub fn rank(&self) -> usize {
        (0..self.len())
            .take_while(|&i| self.part(i) as usize > i)
            .count()
    }

    /// Frobenius coordinates `(α | β)` with `α_i = λ_i − i`, `β_i = λ'_i − i`.
    pub fn frobenius(&self) -> FrobeniusCoords {
        let k = self.rank();
        let conj = self.conjugate();
        FrobeniusCoords {
            alpha: (0..k).map(|i| self.part(i) - (i as u32 + 1)).collect(),
            beta: (0..k).map(|i| conj.part(i) - (i as u32 + 1)).collect(),
        }
    }

    /// Shape test `λ = (α | α+1)`: the condition for symplectic cores.
    pub fn is_symplectic_shape(&self) -> bool {
        let f = self.frobenius();
        f.alpha.iter().zip(&f.beta).all(|(a, b)| *b == a + 1)
    }

    /// Shape test `λ = (α+1 | α)`: the condition for orthogonal cores.
    pub fn is_orthogonal_shape(&self) -> bool {
        let f = self.frobenius();
        f.alpha.iter().zip(&f.beta).all(|(a, b)| *a == b + 1)
    }

    /// Beta-set `β_i = λ_i + m − i` of length `m ≥ ℓ(λ)`.
    pub fn beta_set(&self, m: usize) -> Result<BetaSet> {
        if m < self.len() {
            return Err(Error::PadTooSmall { m, len: self.len() });
        }
        let entries = (1..=m)
            .map(|i| self.part(i - 1) as u64 + (m - i) as u64)
            .collect();
        Ok(BetaSet { entries, m })
    }

    /// How many beta-set entries fall in each residue class mod t.
    pub fn residue_counts(&self, m: usize, t: u32) -> Result<Vec<usize>> {
        Ok(self.beta_set(m)?.residue_counts(t))
    }

    /// The permutation sorting the beta-set into residue classes, together
    /// with its inversion count. With `order = None` the classes are taken
    /// in the order 0, 1, …, t−1; otherwise `order` is a strictly
    /// decreasing list of distinguished residues placed first, the rest
    /// following in increasing order.
    pub fn sigma(&self, m: usize, t: u32, order: Option<&[u32]>) -> Result<SigmaPerm> {
        let beta = self.beta_set(m)?;
        let classes = residue_order(t, order)?;
        let mut one_line = Vec::with_capacity(m);
        for r in classes {
            // ascending positions = descending beta values within the class
            for (i, &b) in beta.entries.iter().enumerate() {
                if b % t as u64 == r as u64 {
                    one_line.push(i + 1);
                }
            }
        }
        let inversions = count_inversions(&one_line);
        Ok(SigmaPerm {
            one_line,
            inversions,
        })
    }

    /// Sign of [`Partition::sigma`].
    pub fn sigma_sign(&self, m: usize, t: u32, order: Option<&[u32]>) -> Result<i32> {
        Ok(self.sigma(m, t, order)?.sign())
    }

    /// Smallest multiple of t that can pad this partition's beta-set.
    pub fn default_beta_len(&self, t: u32) -> usize {
        let t = t as usize;
        self.len().div_ceil(t) * t
    }

    /// t-core and t-quotient read off the beta-set of length `m`.
    pub fn core_quotient(&self, t: u32, m: usize) -> Result<CoreQuotient> {
        let beta = self.beta_set(m)?;
        let tt = t as u64;
        let mut by_residue: Vec<Vec<u64>> = vec![Vec::new(); t as usize];
        for &b in &beta.entries {
            by_residue[(b % tt) as usize].push(b / tt);
        }
        // entries arrive in descending order
        let counts: Vec<usize> = by_residue.iter().map(|v| v.len()).collect();

        let mut quotient = Vec::with_capacity(t as usize);
        for reduced in &by_residue {
            let n_i = reduced.len();
            let parts: Vec<i64> = (1..=n_i)
                .map(|j| reduced[j - 1] as i64 - n_i as i64 + j as i64)
                .collect();
            quotient.push(Partition::new(parts).expect("quotient parts are a partition"));
        }

        // Core: replace each residue class by the minimal beta-values with
        // the same residues, then read a partition back off.
        let mut tilde: Vec<u64> = Vec::with_capacity(m);
        for (i, &n_i) in counts.iter().enumerate() {
            for j in 0..n_i as u64 {
                tilde.push(tt * j + i as u64);
            }
        }
        tilde.sort_unstable_by(|a, b| b.cmp(a));
        let core_parts: Vec<i64> = (1..=m)
            .map(|i| tilde[i - 1] as i64 - m as i64 + i as i64)
            .collect();
        let core = Partition::new(core_parts).expect("core parts are a partition");

        Ok(CoreQuotient {
            core,
            quotient,
            t,
            m,
            counts,
        })
    }

    /// t-core with the default beta-set padding; independent of the padding.
    pub fn t_core(&self, t: u32) -> Partition {
        self.core_quotient(t, self.default_beta_len(t))
            .expect("default padding fits")
            .core
    }

    /// t-quotient at an explicit padding `m`; changing m by one rotates the
    /// quotient, so callers that care about labels must fix m.
    pub fn t_quotient(&self, t: u32, m: usize) -> Result<Vec<Partition>> {
        Ok(self.core_quotient(t, m)?.quotient)
    }

    pub fn is_t_core(&self, t: u32) -> bool {
        self.t_core(t) == *self
    }

    /// Dual of a GL_n weight: `λ̂ = (c − λ_n, …, c − λ_1)` with `c = λ_1`.
    pub fn dual(&self, n: usize) -> Result<Partition> {
        if self.len() > n {
            return Err(Error::PadTooSmall {
                m: n,
                len: self.len(),
            });
        }
        let c = self.first() as i64;
        Partition::new((0..n).rev().map(|i| c - self.part(i) as i64))
    }
}

/// `t_core(λ, t)` has symplectic Frobenius shape `(α | α+1)`.
pub fn is_symplectic_core(lambda: &Partition, t: u32) -> bool {
    lambda.t_core(t).is_symplectic_shape()
}

/// `t_core(λ, t)` has orthogonal Frobenius shape `(α+1 | α)`.
pub fn is_orthogonal_core(lambda: &Partition, t: u32) -> bool {
    lambda.t_core(t).is_orthogonal_shape()
}

/// `t_core(λ, t)` is self-conjugate.
pub fn is_self_conjugate_core(lambda: &Partition, t: u32) -> bool {
    lambda.t_core(t).is_self_conjugate()
}

/// The composite partition `(λ,−μ)_n = μ_1 + (λ, 0, …, 0, −rev(μ))` with n
/// entries before canonicalization; requires `n ≥ ℓ(λ) + ℓ(μ)`.
pub fn concat_neg(lambda: &Partition, mu: &Partition, n: usize) -> Result<Partition> {
    if n < lambda.len() + mu.len() {
        return Err(Error::PadTooSmall {
            m: n,
            len: lambda.len() + mu.len(),
        });
    }
    let m1 = mu.first() as i64;
    let parts = (1..=n).map(|i| {
        if i <= lambda.len() {
            m1 + lambda.part(i - 1) as i64
        } else if i > n - mu.len() {
            m1 - mu.part(n - i) as i64
        } else {
            m1
        }
    });
    Partition::new(parts)
}

/// `(±λ)_n = (λ,−λ)_n`; self-dual for GL_n whenever `n ≥ 2ℓ(λ)`.
pub fn plus_minus(lambda: &Partition, n: usize) -> Result<Partition> {
    concat_neg(lambda, lambda, n)
}

/// The staircase `(n, n−1, …, 1)`.
pub fn staircase(n: usize) -> Partition {
    Partition::new((1..=n as i64).rev()).expect("staircase is a partition")
}

/// Inverse of the core/quotient map: rebuilds λ from a t-core and a
/// t-quotient. The padding is chosen as the smallest multiple of t that
/// accommodates both inputs, matching `core_quotient` with the same m.
pub fn littlewood_inverse(core: &Partition, quotient: &[Partition], t: u32) -> Result<Partition> {
    if !core.is_t_core(t) {
        return Err(Error::NotACore);
    }
    if quotient.len() != t as usize {
        return Err(Error::MalformedResidueOrder(format!(
            "quotient must have {} components, got {}",
            t,
            quotient.len()
        )));
    }
    let tt = t as usize;
    let mut blocks = core.len().div_ceil(tt).max(1);
    loop {
        let m = blocks * tt;
        let counts = core.residue_counts(m, t)?;
        if counts.iter().zip(quotient).all(|(&n_i, q)| n_i >= q.len()) {
            let mut beta: Vec<u64> = Vec::with_capacity(m);
            for (i, q) in quotient.iter().enumerate() {
                let n_i = counts[i];
                for j in 1..=n_i {
                    let reduced = q.part(j - 1) as u64 + (n_i - j) as u64;
                    beta.push(t as u64 * reduced + i as u64);
                }
            }
            beta.sort_unstable_by(|a, b| b.cmp(a));
            let parts: Vec<i64> = (1..=m)
                .map(|i| beta[i - 1] as i64 - m as i64 + i as i64)
                .collect();
            return Partition::new(parts);
        }
        blocks += 1;
    }
}

/// Frobenius coordinates `(α | β)`; both arms are strict partitions of the
/// same length, the Frobenius rank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrobeniusCoords {
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
}

impl FrobeniusCoords {
    pub fn rank(&self) -> usize {
        self.alpha.len()
    }

    /// Rebuilds the partition with these coordinates.
    pub fn rebuild(&self) -> Partition {
        let k = self.rank();
        let mut parts: Vec<i64> = (0..k)
            .map(|i| self.alpha[i] as i64 + i as i64 + 1)
            .collect();
        let mut i = k + 1;
        loop {
            let row = (0..k)
                .filter(|&j| self.beta[j] as usize + j + 1 >= i)
                .count();
            if row == 0 {
                break;
            }
            parts.push(row as i64);
            i += 1;
        }
        Partition::new(parts).expect("frobenius rebuild yields a partition")
    }
}

/// Beta-set `β(λ, m)`: strictly decreasing, with `entries[m−1] ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaSet {
    pub entries: Vec<u64>,
    pub m: usize,
}

impl BetaSet {
    /// Partition this beta-set encodes.
    pub fn reconstruct(&self) -> Partition {
        let parts = (1..=self.m).map(|i| self.entries[i - 1] as i64 - (self.m - i) as i64);
        Partition::new(parts).expect("beta set reconstructs a partition")
    }

    pub fn residue_counts(&self, t: u32) -> Vec<usize> {
        let mut counts = vec![0usize; t as usize];
        for &b in &self.entries {
            counts[(b % t as u64) as usize] += 1;
        }
        counts
    }
}

/// The beta-set-sorting permutation in one-line notation (1-based), with
/// its inversion count; the sign is `(−1)^inversions`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaPerm {
    pub one_line: Vec<usize>,
    pub inversions: u64,
}

impl SigmaPerm {
    pub fn sign(&self) -> i32 {
        if self.inversions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// Result of the core/quotient decomposition at modulus t and padding m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreQuotient {
    pub core: Partition,
    pub quotient: Vec<Partition>,
    pub t: u32,
    pub m: usize,
    /// Residue counts `n_i(λ, m)`.
    pub counts: Vec<usize>,
}

impl CoreQuotient {
    /// Quotient component with its index reduced mod t.
    pub fn component(&self, i: i64) -> &Partition {
        let t = self.t as i64;
        &self.quotient[(i.rem_euclid(t)) as usize]
    }
}

fn residue_order(t: u32, order: Option<&[u32]>) -> Result<Vec<u32>> {
    match order {
        None => Ok((0..t).collect()),
        Some(es) => {
            for w in es.windows(2) {
                if w[0] <= w[1] {
                    return Err(Error::MalformedResidueOrder(format!(
                        "{:?} is not strictly decreasing",
                        es
                    )));
                }
            }
            if es.iter().any(|&e| e >= t) {
                return Err(Error::MalformedResidueOrder(format!(
                    "{:?} has entries ≥ {}",
                    es, t
                )));
            }
            let mut classes: Vec<u32> = es.to_vec();
            classes.extend((0..t).filter(|r| !es.contains(r)));
            Ok(classes)
        }
    }
}

fn count_inversions(seq: &[usize]) -> u64 {
    // merge count; sequences here are tiny but this keeps it O(m log m)
    fn rec(v: &mut Vec<usize>) -> u64 {
        let n = v.len();
        if n <= 1 {
            return 0;
        }
        let mut right = v.split_off(n / 2);
        let mut inv = rec(v) + rec(&mut right);
        let mut merged = Vec::with_capacity(n);
        let (mut i, mut j) = (0, 0);
        while i < v.len() && j < right.len() {
            if v[i] <= right[j] {
                merged.push(v[i]);
                i += 1;
            } else {
                inv += (v.len() - i) as u64;
                merged.push(right[j]);
                j += 1;
            }
        }
        merged.extend_from_slice(&v[i..]);
        merged.extend_from_slice(&right[j..]);
        *v = merged;
        inv
    }
    let mut copy = seq.to_vec();
    rec(&mut copy)
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated decreasing integers; the empty string is the empty
    /// partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Vec<i64> = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::BadPartition(format!("{tok:?}: {e}")))
            })
            .collect::<Result<_>>()?;
        Partition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::partitions_bounded;
    use crate::oracle::rim_hook_core;
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("4,2,2,1,1").conjugate(), p("5,3,1,1"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p("3,3").conjugate(), p("2,2,2"));
    }

    #[test]
    fn frobenius_examples() {
        let mu = p("9,8,6,5,4,4,3,2,2,1");
        let f = mu.frobenius();
        assert_eq!(f.alpha, vec![8, 6, 3, 1]);
        assert_eq!(f.beta, vec![9, 7, 4, 2]);
        assert_eq!(f.rebuild(), mu);

        assert_eq!(Partition::empty().frobenius().rank(), 0);

        let f22 = p("2,2").frobenius();
        assert_eq!(
            (f22.alpha.clone(), f22.beta.clone()),
            (vec![1, 0], vec![1, 0])
        );
    }

    #[test]
    fn frobenius_roundtrip_and_self_conjugacy() {
        for lam in partitions_bounded(12, 12) {
            assert_eq!(lam.frobenius().rebuild(), lam, "{lam:?}");
            let f = lam.frobenius();
            assert_eq!(lam.is_self_conjugate(), f.alpha == f.beta, "{lam:?}");
        }
    }

    #[test]
    fn symplectic_and_orthogonal_shapes() {
        assert!(p("2,1").is_self_conjugate());
        assert!(Partition::empty().is_symplectic_shape());
        assert!(is_symplectic_core(&Partition::empty(), 3));
        assert!(is_symplectic_core(&p("9,8,6,5,4,4,3,2,2,1"), 5));
        assert!(p("1,1").is_symplectic_shape());
        assert!(p("2").is_orthogonal_shape());
        assert!(!p("1").is_symplectic_shape());
        assert!(!p("1").is_orthogonal_shape());
    }

    #[test]
    fn beta_set_examples() {
        assert_eq!(
            p("5,2,2,1,1").beta_set(6).unwrap().entries,
            vec![10, 6, 5, 3, 2, 0]
        );
        assert_eq!(
            Partition::empty().beta_set(3).unwrap().entries,
            vec![2, 1, 0]
        );
        assert_eq!(p("2").beta_set(2).unwrap().entries, vec![3, 0]);
        assert!(p("2,1").beta_set(1).is_err());
    }

    #[test]
    fn residue_count_examples() {
        assert_eq!(p("5,2,2,1,1").residue_counts(6, 3).unwrap(), vec![3, 1, 2]);
        assert_eq!(
            Partition::empty().residue_counts(4, 4).unwrap(),
            vec![1, 1, 1, 1]
        );
        assert_eq!(p("2").residue_counts(2, 2).unwrap(), vec![1, 1]);
    }

    #[test]
    fn sigma_worked_example() {
        let sigma = p("5,2,2,1,1").sigma(6, 3, None).unwrap();
        assert_eq!(sigma.one_line, vec![2, 4, 6, 1, 3, 5]);
        assert_eq!(sigma.inversions, 6);
        assert_eq!(sigma.sign(), 1);
    }

    #[test]
    fn sigma_small_cases() {
        // single transposition
        assert_eq!(p("2").sigma(2, 2, None).unwrap().one_line, vec![2, 1]);
        assert_eq!(p("2").sigma_sign(2, 2, None).unwrap(), -1);
        // the empty partition's sign reproduces the closed-form constant of
        // the twisted Schur factorization
        for t in 2u32..=5 {
            for n in 1usize..=3 {
                let expect = if ((t * (t - 1) / 2) as usize * (n * (n + 1) / 2)).is_multiple_of(2) {
                    1
                } else {
                    -1
                };
                assert_eq!(
                    Partition::empty()
                        .sigma_sign(t as usize * n, t, None)
                        .unwrap(),
                    expect,
                    "t={t} n={n}"
                );
            }
        }
    }

    #[test]
    fn sigma_matches_naive_inversion_count() {
        for lam in partitions_bounded(8, 6) {
            for t in 2u32..=4 {
                let m = lam.default_beta_len(t).max(t as usize);
                let sigma = lam.sigma(m, t, None).unwrap();
                let naive = sigma
                    .one_line
                    .iter()
                    .enumerate()
                    .map(|(i, &a)| {
                        sigma.one_line[i + 1..].iter().filter(|&&b| a > b).count() as u64
                    })
                    .sum::<u64>();
                assert_eq!(sigma.inversions, naive);
            }
        }
    }

    #[test]
    fn sigma_rejects_bad_order() {
        assert!(p("2").sigma(4, 3, Some(&[1, 2])).is_err());
        assert!(p("2").sigma(4, 3, Some(&[3])).is_err());
        assert!(p("2").sigma(4, 3, Some(&[2, 0])).is_ok());
    }

    #[test]
    fn core_quotient_examples() {
        let cq = p("2").core_quotient(2, 2).unwrap();
        assert_eq!(cq.core, Partition::empty());
        assert_eq!(cq.quotient, vec![Partition::empty(), p("1")]);

        // fixed points on cores
        for (nu, t) in [(p("2"), 3), (p("2,1"), 2), (p("3,1,1"), 3)] {
            let m = nu.default_beta_len(t);
            let cq = nu.core_quotient(t, m).unwrap();
            assert_eq!(cq.core, nu, "t={t}");
            assert!(cq.quotient.iter().all(|q| q.is_empty()));
        }

        let cq = p("5,2,2,1,1").core_quotient(3, 6).unwrap();
        assert_eq!(cq.core, rim_hook_core(&p("5,2,2,1,1"), 3));
        assert_eq!(
            cq.core.size() + 3 * cq.quotient.iter().map(|q| q.size()).sum::<u64>(),
            11
        );
    }

    #[test]
    fn littlewood_inverse_examples() {
        assert_eq!(
            littlewood_inverse(
                &Partition::empty(),
                &[Partition::empty(), Partition::empty()],
                2
            )
            .unwrap(),
            Partition::empty()
        );
        assert_eq!(
            littlewood_inverse(&Partition::empty(), &[Partition::empty(), p("1")], 2).unwrap(),
            p("2")
        );
        assert!(littlewood_inverse(&p("1,1"), &[Partition::empty(), p("1")], 2).is_err());
    }

    #[test]
    fn littlewood_bijection_roundtrip() {
        for t in [2u32, 3, 4] {
            for lam in partitions_bounded(10, 10) {
                let m = lam.default_beta_len(t);
                let cq = lam.core_quotient(t, m).unwrap();
                assert!(cq.core.is_t_core(t), "core of {lam:?} at t={t}");
                assert_eq!(cq.core, rim_hook_core(&lam, t), "{lam:?} t={t}");
                assert_eq!(
                    cq.core.size() + t as u64 * cq.quotient.iter().map(|q| q.size()).sum::<u64>(),
                    lam.size()
                );
                assert_eq!(
                    littlewood_inverse(&cq.core, &cq.quotient, t).unwrap(),
                    lam,
                    "roundtrip {lam:?} t={t}"
                );
            }
        }
    }

    #[test]
    fn concat_neg_examples() {
        assert_eq!(
            concat_neg(&p("4,1"), &p("2,1,1"), 7).unwrap(),
            p("6,3,2,2,1,1,0")
        );
        assert_eq!(
            concat_neg(&Partition::empty(), &Partition::empty(), 5).unwrap(),
            Partition::empty()
        );
        assert_eq!(concat_neg(&p("1"), &p("1"), 2).unwrap(), p("2"));
        assert!(concat_neg(&p("1"), &p("1"), 1).is_err());
    }

    #[test]
    fn plus_minus_examples() {
        assert_eq!(plus_minus(&p("1"), 2).unwrap(), p("2"));
        assert_eq!(plus_minus(&p("2,1"), 5).unwrap(), p("4,3,2,1"));
        for lam in partitions_bounded(6, 6) {
            let n = 2 * lam.len() + 1;
            let pm = plus_minus(&lam, n).unwrap();
            assert_eq!(pm.dual(n).unwrap(), pm, "(±{lam:?})_{n} is self-dual");
        }
    }

    #[test]
    fn dual_examples() {
        assert_eq!(p("5,2,1,1").dual(4).unwrap(), p("4,4,3"));
        assert_eq!(Partition::empty().dual(3).unwrap(), Partition::empty());
        assert_eq!(p("4,2").dual(3).unwrap(), p("4,2"));
        assert!(p("4,2").dual(1).is_err());
    }

    #[test]
    fn staircase_examples() {
        assert_eq!(staircase(0), Partition::empty());
        assert_eq!(staircase(3), p("3,2,1"));
        for n in 0..=8 {
            assert!(staircase(n).is_self_conjugate());
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("5,2,2,1,1").to_string(), "5,2,2,1,1");
        assert_eq!(p(""), Partition::empty());
        assert_eq!(p("3,0,0"), p("3"));
        assert!("2,3".parse::<Partition>().is_err());
        assert!("-1".parse::<Partition>().is_err());
    }

    proptest! {
        #[test]
        fn conjugate_involutive(parts in proptest::collection::vec(0i64..8, 0..7)) {
            let mut sorted = parts.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            let lam = Partition::new(sorted).unwrap();
            prop_assert!(lam.size() <= 48);
            prop_assert_eq!(lam.conjugate().conjugate(), lam);
        }

        #[test]
        fn beta_set_roundtrip(parts in proptest::collection::vec(0i64..9, 0..6), pad in 0usize..4) {
            let mut sorted = parts.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            let lam = Partition::new(sorted).unwrap();
            let m = lam.len() + pad;
            let beta = lam.beta_set(m).unwrap();
            prop_assert!(beta.entries.windows(2).all(|w| w[0] > w[1]));
            prop_assert_eq!(beta.reconstruct(), lam);
            let counts = beta.residue_counts(3);
            prop_assert_eq!(counts.iter().sum::<usize>(), m);
        }
    }
}
