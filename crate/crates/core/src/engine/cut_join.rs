//! The cut-and-join recursion for connected Hurwitz numbers, in the
//! normalization where every right-hand side coefficient is a non-negative
//! integer.
//!
//! For `k = (k_1, ..., k_ℓ)` and `r = r(g, k)`:
//!
//! ```text
//! h_{g,k} = Σ_{i<j} Aut(k')/Aut(k) (k_i + k_j) h_{g,k'}                    (join)
//!         + ½ Σ_i Σ_{α+β=k_i} αβ [ Aut(k'')/Aut(k) h_{g-1,k''}                (cut)
//!             + Σ_{g₁+g₂=g} Σ_{l⊔n=k(î)} Aut(l(α))Aut(n(β))/Aut(k)
//!                 · (r-1)!/(r₁! r₂!) h_{g₁,l(α)} h_{g₂,n(β)} ]                 (split)
//! ```
//!
//! The sums run over positions, ordered pairs `(α, β)` and subsets of the
//! remaining positions. Terms with the same product of Hurwitz numbers are
//! collapsed into one coefficient.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::engine::cache::HurwitzCache;
use crate::error::{HurwitzError, Result};
use crate::partition::{
    aut_count, binomial, factorial, ramification, ramification_unchecked, MultiIndex, Partition,
};
use crate::BigRat;

/// Shape of a right-hand side term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CjCase {
    /// Two distinct part values merge.
    JoinDistinct,
    /// Two equal part values merge.
    JoinEqual,
    /// A part splits into two distinct values, genus drops by one.
    CutDistinct,
    /// A part splits into two equal values, genus drops by one.
    CutEqual,
    /// A part splits and the cover disconnects into two different pieces.
    SplitAsymmetric,
    /// A part splits into two identical pieces `(g₁, l(α)) = (g₂, n(β))`.
    SplitSymmetric,
}

impl CjCase {
    pub fn label(self) -> &'static str {
        match self {
            CjCase::JoinDistinct => "join k_i != k_j",
            CjCase::JoinEqual => "join k_i = k_j",
            CjCase::CutDistinct => "cut alpha != beta",
            CjCase::CutEqual => "cut alpha = beta",
            CjCase::SplitAsymmetric => "split epsilon = 2",
            CjCase::SplitSymmetric => "split epsilon = 1",
        }
    }
}

/// One collapsed right-hand side term: `coeff · Π h_{factor}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CjTerm {
    pub case: CjCase,
    /// Part values of `k` consumed by the move: `[k_i, k_j]` for a join,
    /// `[k_i, α, β]` (α ≤ β) for a cut, `[k_i]` for a split.
    pub source: Vec<u32>,
    /// One key for join and cut, two (sorted) for a split.
    pub factors: Vec<(u32, Partition)>,
    /// Coefficient in the `h` normalization.
    pub coeff: BigRat,
    /// The same term's coefficient in the `H_g(k) = Aut(k)/r! h_{g,k}` form,
    /// i.e. with `r H_g(k)` on the left.
    pub coeff_normalized: BigRat,
}

type TermKey = (CjCase, Vec<u32>, Vec<(u32, Partition)>);

fn aut_of(parts: &[u32]) -> BigInt {
    aut_count(&MultiIndex::new(parts.to_vec()).expect("positive parts"))
}

/// Expands the right-hand side of the recursion for `h_{g,k}`.
///
/// Returns an empty list for the base case `(0, (1))`, whose value is fixed to 1.
pub fn cj_expansion(g: u32, k: &MultiIndex) -> Result<Vec<CjTerm>> {
    let r = ramification(g, k)?;
    let parts = k.entries();
    let ell = parts.len();
    let aut_k = BigRat::from_integer(aut_of(parts));
    let mut acc: BTreeMap<TermKey, (BigRat, BigRat)> = BTreeMap::new();
    let mut push = |key: TermKey, h_coeff: BigRat, factor_auts: BigInt| {
        // H form: coefficient of Π H(factor) is h_coeff · Aut(k)/(r-1)! / Π (Aut/r!)(factor),
        // recovered as h_coeff · Aut(k)/(r-1)! · Π r_f!/Aut_f.
        let mut rf = BigInt::one();
        for (fg, fmu) in &key.2 {
            rf *= factorial(ramification_unchecked(*fg, fmu.len(), fmu.size()) as u32);
        }
        let normalized =
            &h_coeff * &aut_k * BigRat::new(rf, factor_auts * factorial((r - 1) as u32));
        let slot = acc
            .entry(key)
            .or_insert_with(|| (BigRat::zero(), BigRat::zero()));
        slot.0 += h_coeff;
        slot.1 += normalized;
    };
    if r == 0 {
        return Ok(Vec::new());
    }
    let half = BigRat::new(1.into(), 2.into());

    // join
    for i in 0..ell {
        for j in i + 1..ell {
            let (a, b) = (parts[i], parts[j]);
            let mut merged: Vec<u32> = without(parts, &[i, j]);
            merged.push(a + b);
            let aut_m = aut_of(&merged);
            let coeff = BigRat::new(aut_m.clone() * (a + b), aut_of(parts));
            let case = if a == b {
                CjCase::JoinEqual
            } else {
                CjCase::JoinDistinct
            };
            let key = (case, sorted_pair(a, b), vec![(g, sorted(merged))]);
            push(key, coeff, aut_m);
        }
    }

    for i in 0..ell {
        let ki = parts[i];
        let rest = without(parts, &[i]);
        for alpha in 1..ki {
            let beta = ki - alpha;
            let ab = BigRat::from_integer(BigInt::from(alpha as u64 * beta as u64));

            // cut
            if g >= 1 {
                let mut cut = rest.clone();
                cut.push(alpha);
                cut.push(beta);
                let aut_c = aut_of(&cut);
                let coeff = &half * &ab * BigRat::new(aut_c.clone(), aut_of(parts));
                let case = if alpha == beta {
                    CjCase::CutEqual
                } else {
                    CjCase::CutDistinct
                };
                let mut src = vec![ki];
                src.extend(sorted_pair(alpha, beta));
                push((case, src, vec![(g - 1, sorted(cut))]), coeff, aut_c);
            }

            // split: every subset of the remaining positions goes with α
            for mask in 0u64..(1u64 << rest.len()) {
                let mut left = Vec::new();
                let mut right = Vec::new();
                for (t, &p) in rest.iter().enumerate() {
                    if mask & (1 << t) != 0 {
                        left.push(p);
                    } else {
                        right.push(p);
                    }
                }
                left.push(alpha);
                right.push(beta);
                let aut_l = aut_of(&left);
                let aut_r = aut_of(&right);
                let left = sorted(left);
                let right = sorted(right);
                for g1 in 0..=g {
                    let g2 = g - g1;
                    let r1 = ramification_unchecked(g1, left.len(), left.size());
                    let r2 = ramification_unchecked(g2, right.len(), right.size());
                    debug_assert_eq!(r1 + r2, r - 1);
                    let multinom = BigRat::from_integer(binomial((r - 1) as u64, r1 as u64));
                    let coeff =
                        &half * &ab * BigRat::new(aut_l.clone() * &aut_r, aut_of(parts)) * multinom;
                    let a = (g1, left.clone());
                    let b = (g2, right.clone());
                    let case = if a == b {
                        CjCase::SplitSymmetric
                    } else {
                        CjCase::SplitAsymmetric
                    };
                    let factors = if a <= b { vec![a, b] } else { vec![b, a] };
                    push((case, vec![ki], factors), coeff, aut_l.clone() * &aut_r);
                }
            }
        }
    }

    Ok(acc
        .into_iter()
        .map(
            |((case, source, factors), (coeff, coeff_normalized))| CjTerm {
                case,
                source,
                factors,
                coeff,
                coeff_normalized,
            },
        )
        .collect())
}

fn without(parts: &[u32], skip: &[usize]) -> Vec<u32> {
    parts
        .iter()
        .enumerate()
        .filter(|(t, _)| !skip.contains(t))
        .map(|(_, &p)| p)
        .collect()
}

fn sorted(v: Vec<u32>) -> Partition {
    Partition::from_parts(v).expect("positive parts")
}

fn sorted_pair(a: u32, b: u32) -> Vec<u32> {
    if a <= b {
        vec![a, b]
    } else {
        vec![b, a]
    }
}

/// Connected Hurwitz number `h_{g,μ}` by memoized cut-and-join recursion.
pub fn hurwitz_cj(g: u32, mu: &Partition, cache: &HurwitzCache) -> Result<BigRat> {
    if mu.is_empty() {
        return Err(HurwitzError::EmptyProfile);
    }
    Ok(hurwitz_rec(g, mu, cache))
}

/// [`hurwitz_cj`] for an unordered multi-index.
pub fn hurwitz_cj_multi(g: u32, k: &MultiIndex, cache: &HurwitzCache) -> Result<BigRat> {
    hurwitz_cj(g, &crate::partition::sort_to_partition(k), cache)
}

fn hurwitz_rec(g: u32, mu: &Partition, cache: &HurwitzCache) -> BigRat {
    if let Some(v) = cache.get(g, mu) {
        return v;
    }
    let value = if g == 0 && mu.parts() == [1] {
        BigRat::one()
    } else {
        let terms = cj_expansion(g, &MultiIndex::from(mu)).expect("nonempty profile");
        let mut total = BigRat::zero();
        for term in terms {
            let mut prod = term.coeff;
            for (fg, fmu) in &term.factors {
                if prod.is_zero() {
                    break;
                }
                prod *= hurwitz_rec(*fg, fmu, cache);
            }
            total += prod;
        }
        total
    };
    cache
        .insert(g, mu.clone(), value.clone())
        .expect("recursion produced a value conflicting with the cache");
    value
}

/// `H_g(k) = #Aut(k)/r(g,k)! · h_{g,k}`.
#[allow(non_snake_case)]
pub fn h_to_H(g: u32, k: &MultiIndex, h: &BigRat) -> Result<BigRat> {
    let r = ramification(g, k)?;
    if r < 0 {
        return Err(HurwitzError::NegativeRamification(r));
    }
    Ok(h * BigRat::new(aut_count(k), factorial(r as u32)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn mi(parts: &[u32]) -> MultiIndex {
        MultiIndex::new(parts.to_vec()).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRat {
        BigRat::new(n.into(), d.into())
    }

    #[test]
    fn small_values() {
        let c = HurwitzCache::new();
        assert_eq!(hurwitz_cj(0, &p(&[1]), &c).unwrap(), q(1, 1));
        assert_eq!(hurwitz_cj(0, &p(&[2]), &c).unwrap(), q(1, 2));
        assert_eq!(hurwitz_cj(0, &p(&[1, 1]), &c).unwrap(), q(1, 2));
        assert_eq!(hurwitz_cj(0, &p(&[3]), &c).unwrap(), q(1, 1));
        assert_eq!(hurwitz_cj(1, &p(&[2, 1]), &c).unwrap(), q(40, 1));
        assert_eq!(hurwitz_cj(2, &p(&[4]), &c).unwrap(), q(5824, 1));
        assert_eq!(hurwitz_cj(2, &p(&[1, 1, 1]), &c).unwrap(), q(364, 1));
        assert!(hurwitz_cj(0, &Partition::empty(), &c).is_err());
    }

    #[test]
    fn genus_one_one_part_vanishes() {
        let c = HurwitzCache::new();
        for g in 1..=8 {
            assert_eq!(hurwitz_cj(g, &p(&[1]), &c).unwrap(), BigRat::zero());
        }
    }

    #[test]
    fn permutation_invariance() {
        let c = HurwitzCache::new();
        let a = hurwitz_cj_multi(1, &mi(&[1, 3, 2]), &c).unwrap();
        let b = hurwitz_cj_multi(1, &mi(&[2, 1, 3]), &c).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, hurwitz_cj(1, &p(&[3, 2, 1]), &c).unwrap());
    }

    #[test]
    fn normalization() {
        assert_eq!(h_to_H(0, &mi(&[1]), &q(1, 1)).unwrap(), q(1, 1));
        assert_eq!(h_to_H(0, &mi(&[1, 1]), &q(1, 2)).unwrap(), q(1, 2));
        assert_eq!(h_to_H(0, &mi(&[3]), &q(1, 1)).unwrap(), q(1, 2));
        assert!(h_to_H(0, &mi(&[]), &q(1, 1)).is_err());
    }

    #[test]
    fn one_one_expansion() {
        let terms = cj_expansion(0, &mi(&[1, 1])).unwrap();
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].case, CjCase::JoinEqual);
        assert_eq!(terms[0].factors, vec![(0, p(&[2]))]);
        assert_eq!(terms[0].coeff, q(1, 1));
        assert_eq!(terms[0].coeff_normalized, q(2, 1));
    }

    #[test]
    fn base_case_has_no_terms() {
        assert!(cj_expansion(0, &mi(&[1])).unwrap().is_empty());
    }

    /// The H-form coefficients reproduce Fact-style evaluation: r H_g(k) = Σ c Π H.
    #[test]
    fn normalized_form_is_consistent() {
        let c = HurwitzCache::new();
        for (g, parts) in [
            (0u32, vec![3u32, 1]),
            (1, vec![2, 2]),
            (2, vec![3]),
            (1, vec![2, 1, 1]),
        ] {
            let k = mi(&parts);
            let r = ramification(g, &k).unwrap();
            let lhs = BigRat::from_integer(r.into())
                * h_to_H(g, &k, &hurwitz_cj_multi(g, &k, &c).unwrap()).unwrap();
            let mut rhs = BigRat::zero();
            for t in cj_expansion(g, &k).unwrap() {
                let mut prod = t.coeff_normalized.clone();
                for (fg, fmu) in &t.factors {
                    let h = hurwitz_cj(*fg, fmu, &c).unwrap();
                    prod *= h_to_H(*fg, &MultiIndex::from(fmu), &h).unwrap();
                }
                rhs += prod;
            }
            assert_eq!(lhs, rhs, "g={g} k={parts:?}");
        }
    }

    #[test]
    fn every_referenced_key_has_smaller_r() {
        for g in 0..=3u32 {
            for n in 1..=7 {
                for mu in crate::partition::partitions_of(n) {
                    let k = MultiIndex::from(&mu);
                    let r = ramification(g, &k).unwrap();
                    for t in cj_expansion(g, &k).unwrap() {
                        for (fg, fmu) in &t.factors {
                            assert!(crate::partition::ramification_of(*fg, fmu).unwrap() < r);
                        }
                    }
                }
            }
        }
    }
}
