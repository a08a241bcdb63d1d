//! Integer partitions, multi-indices and the elementary statistics attached
//! to them: centralizer orders, hooks, dimensions, contents and automorphisms.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{HurwitzError, Result};

/// A weakly decreasing list of positive parts. The empty partition is allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition from parts that are already weakly decreasing and positive.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(HurwitzError::InvalidPartition(format!(
                "zero part in {parts:?}"
            )));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(HurwitzError::InvalidPartition(format!(
                "parts not weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_parts<I: IntoIterator<Item = u32>>(parts: I) -> Result<Self> {
        let mut v: Vec<u32> = parts.into_iter().collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v)
    }

    /// The empty partition.
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: u32) -> Self {
        Partition(vec![1; n as usize])
    }

    /// The hook `(r, 1^{n-r})` for `1 <= r <= n`.
    pub fn hook(n: u32, r: u32) -> Self {
        assert!(1 <= r && r <= n, "hook arm {r} out of range for n = {n}");
        let mut v = vec![r];
        v.extend(std::iter::repeat_n(1, (n - r) as usize));
        Partition(v)
    }

    /// The class of a transposition in `S_d`, `(2, 1^{d-2})`.
    pub fn transposition_class(d: u32) -> Self {
        assert!(d >= 2);
        Partition::hook(d, 2)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    /// `|λ|`
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `ℓ(λ)`
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ_i` with 1-based `i`; zero past the last part.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// `m_n(λ)`, the number of parts equal to `n`.
    pub fn multiplicity(&self, n: u32) -> usize {
        self.0.iter().filter(|&&p| p == n).count()
    }

    /// Distinct parts with their multiplicities, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Multiset union `λ ⊔ μ`, re-sorted.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut v = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            if self.0[i] >= other.0[j] {
                v.push(self.0[i]);
                i += 1;
            } else {
                v.push(other.0[j]);
                j += 1;
            }
        }
        v.extend_from_slice(&self.0[i..]);
        v.extend_from_slice(&other.0[j..]);
        Partition(v)
    }

    /// The partition with one extra part inserted.
    pub fn with_part(&self, part: u32) -> Partition {
        assert!(part > 0);
        let pos = self
            .0
            .iter()
            .position(|&p| p < part)
            .unwrap_or(self.0.len());
        let mut v = self.0.clone();
        v.insert(pos, part);
        Partition(v)
    }

    /// Whether every part of `self` is odd.
    pub fn all_parts_odd(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 1)
    }

    /// Parts joined with a separator, exponents expanded.
    pub fn join(&self, sep: &str) -> String {
        self.0
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// Reverse-lexicographic comparison: `(4) < (3,1) < (2,2) < ...` in this order.
    pub fn cmp_rev_lex(&self, other: &Partition) -> std::cmp::Ordering {
        other.0.cmp(&self.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.join(","))
    }
}

/// Parses `"2,1^4"`, `"(3,1)"`, `"3 2 1"` or the empty string.
impl FromStr for Partition {
    type Err = HurwitzError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || HurwitzError::InvalidPartition(format!("cannot parse {s:?}"));
        let t = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .trim();
        if t.is_empty() || t == "∅" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in t.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => (b, e.parse::<usize>().map_err(|_| bad())?),
                None => (tok, 1),
            };
            let p: u32 = base.parse().map_err(|_| bad())?;
            if p == 0 {
                return Err(bad());
            }
            parts.extend(std::iter::repeat_n(p, exp));
        }
        Partition::from_parts(parts)
    }
}

/// An unordered list of positive integers, as used for the arguments of the
/// cut-and-join recursion. Values only depend on the sorted form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.contains(&0) {
            return Err(HurwitzError::InvalidPartition(format!(
                "zero entry in multi-index {entries:?}"
            )));
        }
        Ok(MultiIndex(entries))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl From<&Partition> for MultiIndex {
    fn from(p: &Partition) -> Self {
        MultiIndex(p.parts().to_vec())
    }
}

/// All partitions of `n`, each once, in reverse-lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut cur, &mut out);
    out
}

/// `n!` as a big integer.
pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `binomial(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `z_λ = ∏ n^{m_n} m_n!`, the order of the centralizer of an element of cycle type `λ`.
pub fn z_of(lambda: &Partition) -> BigInt {
    lambda
        .multiplicities()
        .into_iter()
        .fold(BigInt::one(), |acc, (n, m)| {
            acc * BigInt::from(n).pow(m as u32) * factorial(m as u32)
        })
}

/// The transposed partition `λ'`.
pub fn conjugate(lambda: &Partition) -> Partition {
    let width = lambda.part(1);
    let parts = (1..=width)
        .map(|j| lambda.parts().iter().filter(|&&p| p >= j).count() as u32)
        .collect();
    Partition(parts)
}

/// Product of all hook lengths `a + l + 1`.
pub fn hook_product(lambda: &Partition) -> BigInt {
    let conj = conjugate(lambda);
    let mut acc = BigInt::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row as usize {
            let arm = row as usize - j - 1;
            let leg = conj.parts()[j] as usize - i - 1;
            acc *= arm + leg + 1;
        }
    }
    acc
}

/// Dimension of the irreducible representation of `S_{|λ|}` labelled by `λ`.
pub fn dim_irrep(lambda: &Partition) -> BigInt {
    factorial(lambda.size()) / hook_product(lambda)
}

/// Size of the conjugacy class of cycle type `μ`, `|μ|!/z_μ`.
pub fn conj_class_size(mu: &Partition) -> BigInt {
    factorial(mu.size()) / z_of(mu)
}

/// `κ_λ/2 = Σ λ_i(λ_i - 2i + 1)/2`, the content sum of `λ`.
pub fn kappa_half(lambda: &Partition) -> i64 {
    let twice: i64 = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            let p = p as i64;
            p * (p - 2 * (i as i64 + 1) + 1)
        })
        .sum();
    twice / 2
}

/// `n(λ) = Σ (i-1) λ_i`.
pub fn n_stat(lambda: &Partition) -> u64 {
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| i as u64 * p as u64)
        .sum()
}

/// `#Aut(k) = ∏ m_i(k)!`.
pub fn aut_count(k: &MultiIndex) -> BigInt {
    sort_to_partition(k)
        .multiplicities()
        .into_iter()
        .fold(BigInt::one(), |acc, (_, m)| acc * factorial(m as u32))
}

/// Number of simple branch points `2g - 2 + ℓ(k) + |k|`.
pub fn ramification(g: u32, k: &MultiIndex) -> Result<i64> {
    if k.is_empty() {
        return Err(HurwitzError::EmptyProfile);
    }
    Ok(ramification_unchecked(g, k.len(), k.size()))
}

/// Same as [`ramification`] for a partition.
pub fn ramification_of(g: u32, mu: &Partition) -> Result<i64> {
    if mu.is_empty() {
        return Err(HurwitzError::EmptyProfile);
    }
    Ok(ramification_unchecked(g, mu.len(), mu.size()))
}

pub(crate) fn ramification_unchecked(g: u32, len: usize, size: u32) -> i64 {
    2 * g as i64 - 2 + len as i64 + size as i64
}

pub fn sort_to_partition(k: &MultiIndex) -> Partition {
    let mut v = k.entries().to_vec();
    v.sort_unstable_by(|a, b| b.cmp(a));
    Partition(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_small_cases() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(1), vec![p(&[1])]);
        assert_eq!(
            partitions_of(4),
            vec![
                p(&[4]),
                p(&[3, 1]),
                p(&[2, 2]),
                p(&[2, 1, 1]),
                p(&[1, 1, 1, 1])
            ]
        );
    }

    #[test]
    fn enumeration_counts_match_brute_force() {
        // Oracle: count weakly decreasing sequences by filtering all compositions.
        fn count_by_compositions(n: u32) -> usize {
            if n == 0 {
                return 1;
            }
            let mut count = 0;
            for mask in 0u32..(1 << (n - 1)) {
                let mut parts = Vec::new();
                let mut cur = 1;
                for b in 0..n - 1 {
                    if mask & (1 << b) != 0 {
                        parts.push(cur);
                        cur = 1;
                    } else {
                        cur += 1;
                    }
                }
                parts.push(cur);
                if parts.windows(2).all(|w| w[0] >= w[1]) {
                    count += 1;
                }
            }
            count
        }
        for n in 0..=14 {
            let ps = partitions_of(n);
            assert_eq!(ps.len(), count_by_compositions(n), "n = {n}");
            assert!(ps.windows(2).all(|w| w[0].cmp_rev_lex(&w[1]).is_lt()));
            assert!(ps.iter().all(|l| l.size() == n));
        }
    }

    #[test]
    fn z_values() {
        assert_eq!(z_of(&p(&[3])), 3.into());
        assert_eq!(z_of(&p(&[1, 1])), 2.into());
        assert_eq!(z_of(&p(&[2, 1])), 2.into());
        assert_eq!(z_of(&Partition::empty()), 1.into());
    }

    #[test]
    fn conjugate_values() {
        assert_eq!(conjugate(&p(&[2, 1])), p(&[2, 1]));
        assert_eq!(conjugate(&p(&[3])), p(&[1, 1, 1]));
        assert_eq!(conjugate(&Partition::empty()), Partition::empty());
        for n in 0..=12 {
            for l in partitions_of(n) {
                assert_eq!(conjugate(&conjugate(&l)), l);
            }
        }
    }

    #[test]
    fn hooks_and_dimensions() {
        assert_eq!(hook_product(&p(&[2, 1])), 3.into());
        assert_eq!(hook_product(&Partition::empty()), 1.into());
        for n in 1..=8 {
            assert_eq!(hook_product(&Partition::row(n)), factorial(n));
            assert_eq!(dim_irrep(&Partition::column(n)), 1.into());
            for r in 1..=n {
                assert_eq!(
                    dim_irrep(&Partition::hook(n, r)),
                    binomial((n - 1) as u64, (r - 1) as u64)
                );
            }
        }
        assert_eq!(dim_irrep(&p(&[2, 1])), 2.into());
    }

    #[test]
    fn dimension_and_class_sums() {
        for n in 0..=10 {
            let mut classes = BigInt::from(0);
            let mut squares = BigInt::from(0);
            for l in partitions_of(n) {
                assert_eq!(dim_irrep(&l) * hook_product(&l), factorial(n));
                classes += conj_class_size(&l);
                squares += dim_irrep(&l).pow(2);
            }
            assert_eq!(classes, factorial(n));
            assert_eq!(squares, factorial(n));
        }
    }

    #[test]
    fn class_sizes() {
        assert_eq!(conj_class_size(&p(&[2])), 1.into());
        assert_eq!(conj_class_size(&p(&[3])), 2.into());
        assert_eq!(conj_class_size(&p(&[2, 1])), 3.into());
    }

    #[test]
    fn kappa_and_n_stat() {
        assert_eq!(kappa_half(&p(&[2])), 1);
        assert_eq!(kappa_half(&p(&[1, 1])), -1);
        assert_eq!(kappa_half(&Partition::empty()), 0);
        assert_eq!(n_stat(&p(&[2, 1])), 1);
        assert_eq!(n_stat(&Partition::row(5)), 0);
        assert_eq!(n_stat(&p(&[1, 1, 1])), 3);
        for n in 0..=10 {
            for l in partitions_of(n) {
                let c = conjugate(&l);
                assert_eq!(kappa_half(&l) + kappa_half(&c), 0);
                // Content sum over boxes, computed box by box.
                let contents: i64 = l
                    .parts()
                    .iter()
                    .enumerate()
                    .flat_map(|(i, &row)| (0..row as i64).map(move |j| j - i as i64))
                    .sum();
                assert_eq!(kappa_half(&l), contents);
                let alt: u64 = c
                    .parts()
                    .iter()
                    .map(|&m| m as u64 * (m as u64).saturating_sub(1) / 2)
                    .sum();
                assert_eq!(n_stat(&l), alt);
            }
        }
    }

    #[test]
    fn automorphisms_and_sorting() {
        let mi = |v: &[u32]| MultiIndex::new(v.to_vec()).unwrap();
        assert_eq!(aut_count(&mi(&[1, 1])), 2.into());
        assert_eq!(aut_count(&mi(&[3, 1])), 1.into());
        assert_eq!(aut_count(&mi(&[2, 2, 1, 1, 1])), 12.into());
        assert_eq!(aut_count(&mi(&[1, 2, 1, 2, 1])), 12.into());
        assert_eq!(sort_to_partition(&mi(&[1, 3, 2])), p(&[3, 2, 1]));
        assert_eq!(sort_to_partition(&mi(&[])), Partition::empty());
        assert_eq!(sort_to_partition(&mi(&[2, 2])), p(&[2, 2]));
    }

    #[test]
    fn ramification_values() {
        let mi = |v: &[u32]| MultiIndex::new(v.to_vec()).unwrap();
        assert_eq!(ramification(0, &mi(&[1])).unwrap(), 0);
        assert_eq!(ramification(1, &mi(&[3])).unwrap(), 4);
        assert_eq!(ramification(0, &mi(&[2])).unwrap(), 1);
        assert!(matches!(
            ramification(2, &mi(&[])),
            Err(HurwitzError::EmptyProfile)
        ));
    }

    #[test]
    fn parsing() {
        assert_eq!("2,1^4".parse::<Partition>().unwrap(), p(&[2, 1, 1, 1, 1]));
        assert_eq!("(1,3,2)".parse::<Partition>().unwrap(), p(&[3, 2, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("2,x".parse::<Partition>().is_err());
        assert!("0".parse::<Partition>().is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn union_and_insert() {
        assert_eq!(p(&[3, 1]).union(&p(&[2, 1])), p(&[3, 2, 1, 1]));
        assert_eq!(p(&[3, 1]).with_part(2), p(&[3, 2, 1]));
        assert_eq!(Partition::empty().with_part(4), p(&[4]));
    }
}
