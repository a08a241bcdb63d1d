//! Brute-force cover counting in the symmetric group.
//!
//! A degree-`d` cover with `r` simple branch points and one branch point of
//! profile `μ` is a tuple `(τ_1, ..., τ_r, σ)` of transpositions `τ_i` and a
//! permutation `σ` of cycle type `μ` with `τ_r ⋯ τ_1 σ = id`. Its weight is
//! `1/d!`; it is connected when the generated group is transitive.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{HurwitzError, Result};
use crate::partition::{factorial, Partition};
use crate::BigRat;

/// A permutation of `{0, ..., d-1}` stored as its image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(d: usize) -> Self {
        Perm((0..d as u8).collect())
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u8>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let slot = seen.get_mut(i as usize)?;
            if *slot {
                return None;
            }
            *slot = true;
        }
        Some(Perm(images))
    }

    /// The transposition swapping `a` and `b`.
    pub fn transposition(d: usize, a: usize, b: usize) -> Self {
        let mut p = Perm::identity(d);
        p.0.swap(a, b);
        p
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    /// Cycle lengths sorted into a partition.
    pub fn cycle_type(&self) -> Partition {
        let d = self.0.len();
        let mut seen = vec![false; d];
        let mut lens = Vec::new();
        for start in 0..d {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x] as usize;
                len += 1;
            }
            lens.push(len);
        }
        Partition::from_parts(lens).expect("cycle lengths are positive")
    }
}

/// Whether the group generated by `gens` has a single orbit on `{0, ..., d-1}`.
pub fn is_transitive(gens: &[Perm], d: usize) -> bool {
    if d == 0 {
        return true;
    }
    let mut parent: Vec<usize> = (0..d).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for g in gens {
        for (i, &j) in g.images().iter().enumerate() {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j as usize));
            if a != b {
                parent[a] = b;
            }
        }
    }
    let root = find(&mut parent, 0);
    (1..d).all(|i| find(&mut parent, i) == root)
}

/// Every permutation of `S_{|μ|}` with cycle type `μ`.
pub fn enumerate_class(mu: &Partition) -> Vec<Perm> {
    let d = mu.size() as usize;
    let mut out = Vec::new();
    let mut images: Vec<u8> = (0..d as u8).collect();
    heap_permutations(&mut images, d, &mut |p| {
        let perm = Perm(p.to_vec());
        if perm.cycle_type() == *mu {
            out.push(perm);
        }
    });
    out
}

fn heap_permutations(a: &mut [u8], k: usize, visit: &mut impl FnMut(&[u8])) {
    if k <= 1 {
        visit(a);
        return;
    }
    for i in 0..k - 1 {
        heap_permutations(a, k - 1, visit);
        if k.is_multiple_of(2) {
            a.swap(i, k - 1);
        } else {
            a.swap(0, k - 1);
        }
    }
    heap_permutations(a, k - 1, visit);
}

/// Refusal thresholds for the brute-force count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_degree: u32,
    /// Upper bound on `binomial(d,2)^r`, the number of transposition tuples per `σ`.
    pub max_work: u64,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_degree: 6,
            max_work: 100_000_000,
        }
    }
}

impl OracleLimits {
    pub fn check(&self, d: u32, r: u32) -> Result<()> {
        let work = BigInt::from(d as u64 * d.saturating_sub(1) as u64 / 2).pow(r);
        if d > self.max_degree || work > BigInt::from(self.max_work) {
            return Err(HurwitzError::WorkBoundExceeded {
                work: format!("d = {d}, C(d,2)^r = {work}"),
                limit: self.max_work,
            });
        }
        Ok(())
    }
}

/// `(1/d!) · #{(τ_1, ..., τ_r, σ) : τ_r ⋯ τ_1 σ = id}`, optionally restricted
/// to tuples generating a transitive group.
pub fn count_covers_bruteforce(
    d: u32,
    r: u32,
    mu: &Partition,
    connected: bool,
    limits: &OracleLimits,
) -> Result<BigRat> {
    if mu.size() != d {
        return Err(HurwitzError::NotAPartitionOf { mu: mu.clone(), d });
    }
    limits.check(d, r)?;
    let n = d as usize;
    let transpositions: Vec<Perm> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .map(|(a, b)| Perm::transposition(n, a, b))
        .collect();
    let class = enumerate_class(mu);
    // Split on (σ, τ_1) so that classes with few elements still spread out.
    let roots: Vec<(usize, Option<usize>)> = if r == 0 {
        (0..class.len()).map(|s| (s, None)).collect()
    } else {
        (0..class.len())
            .flat_map(|s| (0..transpositions.len()).map(move |t| (s, Some(t))))
            .collect()
    };
    let count: u64 = roots
        .par_iter()
        .map(|&(s, first)| {
            let sigma = &class[s];
            let mut chosen: Vec<usize> = Vec::with_capacity(r as usize);
            let mut hits = 0u64;
            let (product, remaining) = match first {
                Some(t) => {
                    chosen.push(t);
                    (transpositions[t].compose(sigma), r as usize - 1)
                }
                None => (sigma.clone(), 0),
            };
            dfs(
                sigma,
                product,
                remaining,
                &transpositions,
                &mut chosen,
                connected,
                &mut hits,
            );
            hits
        })
        .sum();
    Ok(BigRat::new(BigInt::from(count), factorial(d)))
}

fn dfs(
    sigma: &Perm,
    product: Perm,
    remaining: usize,
    transpositions: &[Perm],
    chosen: &mut Vec<usize>,
    connected: bool,
    hits: &mut u64,
) {
    if remaining == 0 {
        if product.is_identity() {
            if connected {
                let mut gens: Vec<Perm> =
                    chosen.iter().map(|&i| transpositions[i].clone()).collect();
                gens.push(sigma.clone());
                if !is_transitive(&gens, sigma.degree()) {
                    return;
                }
            }
            *hits += 1;
        }
        return;
    }
    for (i, t) in transpositions.iter().enumerate() {
        chosen.push(i);
        dfs(
            sigma,
            t.compose(&product),
            remaining - 1,
            transpositions,
            chosen,
            connected,
            hits,
        );
        chosen.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::conj_class_size;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRat {
        BigRat::new(n.into(), d.into())
    }

    #[test]
    fn transitivity() {
        let cycle = Perm::from_images(vec![1, 2, 3, 0]).unwrap();
        assert!(is_transitive(&[cycle], 4));
        assert!(!is_transitive(&[Perm::identity(3)], 3));
        let t12 = Perm::transposition(4, 0, 1);
        let t34 = Perm::transposition(4, 2, 3);
        assert!(!is_transitive(&[t12, t34], 4));
        assert!(Perm::from_images(vec![0, 0]).is_none());
    }

    #[test]
    fn class_enumeration() {
        assert_eq!(enumerate_class(&p(&[1, 1])), vec![Perm::identity(2)]);
        assert_eq!(
            enumerate_class(&p(&[2])),
            vec![Perm::transposition(2, 0, 1)]
        );
        assert_eq!(enumerate_class(&p(&[3])).len(), 2);
        for n in 1..=6 {
            for mu in crate::partition::partitions_of(n) {
                assert_eq!(
                    BigInt::from(enumerate_class(&mu).len()),
                    conj_class_size(&mu)
                );
            }
        }
    }

    #[test]
    fn small_counts() {
        let lim = OracleLimits::default();
        for connected in [false, true] {
            assert_eq!(
                count_covers_bruteforce(1, 0, &p(&[1]), connected, &lim).unwrap(),
                q(1, 1)
            );
        }
        assert_eq!(
            count_covers_bruteforce(2, 1, &p(&[2]), true, &lim).unwrap(),
            q(1, 2)
        );
        assert_eq!(
            count_covers_bruteforce(3, 2, &p(&[3]), true, &lim).unwrap(),
            q(1, 1)
        );
        assert_eq!(
            count_covers_bruteforce(4, 4, &p(&[3, 1]), true, &lim).unwrap(),
            q(27, 1)
        );
        assert_eq!(
            count_covers_bruteforce(2, 0, &p(&[1, 1]), false, &lim).unwrap(),
            q(1, 2)
        );
        assert_eq!(
            count_covers_bruteforce(2, 0, &p(&[1, 1]), true, &lim).unwrap(),
            q(0, 1)
        );
    }

    #[test]
    fn parity_obstruction() {
        let lim = OracleLimits::default();
        for d in 1..=4 {
            for mu in crate::partition::partitions_of(d) {
                for r in 0..=4u32 {
                    let c = count_covers_bruteforce(d, r, &mu, false, &lim).unwrap();
                    if (r as usize + mu.len() + d as usize) % 2 == 1 {
                        assert_eq!(c, q(0, 1), "d={d} r={r} mu={mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn refuses_large_work() {
        let lim = OracleLimits::default();
        assert!(matches!(
            count_covers_bruteforce(7, 2, &p(&[7]), true, &lim),
            Err(HurwitzError::WorkBoundExceeded { .. })
        ));
        assert!(matches!(
            count_covers_bruteforce(6, 7, &p(&[6]), true, &lim),
            Err(HurwitzError::WorkBoundExceeded { .. })
        ));
        assert!(count_covers_bruteforce(3, 1, &p(&[2]), true, &lim).is_err());
    }
}
