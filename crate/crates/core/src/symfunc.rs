//! Symmetric functions in the power-sum basis: sparse polynomials, characters
//! of the symmetric group, Schur expansions and the cut-and-join operator.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use parking_lot::RwLock;

use crate::error::{HurwitzError, Result};
use crate::partition::{
    conj_class_size, conjugate, dim_irrep, n_stat, partitions_of, z_of, Partition,
};
use crate::BigRat;

/// A polynomial in `p_1, p_2, ...` stored as `Partition -> coefficient of p_μ`.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PowerSumPoly {
    terms: BTreeMap<Partition, BigRat>,
}

impl PowerSumPoly {
    pub fn zero() -> Self {
        PowerSumPoly::default()
    }

    pub fn one() -> Self {
        PowerSumPoly::monomial(Partition::empty(), BigRat::one())
    }

    /// `c · p_μ`
    pub fn monomial(mu: Partition, c: BigRat) -> Self {
        let mut out = PowerSumPoly::zero();
        out.add_term(mu, c);
        out
    }

    /// `p_n`
    pub fn p(n: u32) -> Self {
        PowerSumPoly::monomial(Partition::row(n), BigRat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mu: &Partition) -> BigRat {
        self.terms.get(mu).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRat)> {
        self.terms.iter()
    }

    /// Adds `c · p_μ` in place, pruning a coefficient that cancels to zero.
    pub fn add_term(&mut self, mu: Partition, c: BigRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mu) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return PowerSumPoly::zero();
        }
        PowerSumPoly {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(PowerSumPoly::one(), |acc, _| &acc * self)
    }

    /// Hall inner product, `<p_μ, p_ν> = z_μ δ_{μν}`.
    pub fn hall_inner(&self, other: &PowerSumPoly) -> BigRat {
        let mut acc = BigRat::zero();
        for (mu, a) in &self.terms {
            if let Some(b) = other.terms.get(mu) {
                acc += a * b * BigRat::from_integer(z_of(mu));
            }
        }
        acc
    }
}

/// Coefficient-wise sum.
pub fn poly_add(a: &PowerSumPoly, b: &PowerSumPoly) -> PowerSumPoly {
    let mut out = a.clone();
    for (mu, c) in &b.terms {
        out.add_term(mu.clone(), c.clone());
    }
    out
}

/// Product, extending `p_μ p_ν = p_{μ⊔ν}` bilinearly.
pub fn poly_mul(a: &PowerSumPoly, b: &PowerSumPoly) -> PowerSumPoly {
    let mut out = PowerSumPoly::zero();
    for (mu, x) in &a.terms {
        for (nu, y) in &b.terms {
            out.add_term(mu.union(nu), x * y);
        }
    }
    out
}

impl Add for &PowerSumPoly {
    type Output = PowerSumPoly;
    fn add(self, rhs: &PowerSumPoly) -> PowerSumPoly {
        poly_add(self, rhs)
    }
}

impl Sub for &PowerSumPoly {
    type Output = PowerSumPoly;
    fn sub(self, rhs: &PowerSumPoly) -> PowerSumPoly {
        poly_add(self, &-rhs)
    }
}

impl Neg for &PowerSumPoly {
    type Output = PowerSumPoly;
    fn neg(self) -> PowerSumPoly {
        PowerSumPoly {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }
}

impl Mul for &PowerSumPoly {
    type Output = PowerSumPoly;
    fn mul(self, rhs: &PowerSumPoly) -> PowerSumPoly {
        poly_mul(self, rhs)
    }
}

impl fmt::Display for PowerSumPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mu, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})p{mu}")?;
        }
        Ok(())
    }
}

type CharKey = (Partition, Partition);

fn char_memo() -> &'static RwLock<HashMap<CharKey, i64>> {
    static MEMO: OnceLock<RwLock<HashMap<CharKey, i64>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Irreducible character value `χ^λ_μ` by recursive border-strip removal.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(HurwitzError::SizeMismatch {
            lambda: lambda.clone(),
            mu: mu.clone(),
        });
    }
    Ok(character_rec(lambda, mu.parts()))
}

fn character_rec(lambda: &Partition, mu: &[u32]) -> i64 {
    if mu.is_empty() {
        return 1;
    }
    if lambda.len() <= 1 {
        // Only one way to peel a single row: always a horizontal strip.
        return 1;
    }
    let key = (
        lambda.clone(),
        Partition::new(mu.to_vec()).expect("tail of a partition"),
    );
    if let Some(&v) = char_memo().read().get(&key) {
        return v;
    }
    let k = mu[0];
    let rest = &mu[1..];
    let mut total = 0i64;
    for (shape, height) in remove_border_strips(lambda, k) {
        let term = character_rec(&shape, rest);
        total += if height % 2 == 0 { term } else { -term };
    }
    match char_memo().write().entry(key) {
        Entry::Vacant(v) => {
            v.insert(total);
        }
        Entry::Occupied(o) => assert_eq!(*o.get(), total, "character memo disagreement"),
    }
    total
}

/// Every way to remove a border strip of size `k` from `λ`, with the strip's height.
///
/// Works on the beta-set `{λ_i + ℓ - i}`: a strip of size `k` corresponds to moving
/// one bead from `b` to an empty position `b - k`, the height being the number of
/// beads jumped over.
pub fn remove_border_strips(lambda: &Partition, k: u32) -> Vec<(Partition, u32)> {
    let len = lambda.len() as u32;
    let beads: Vec<u32> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i as u32)
        .collect();
    let mut out = Vec::new();
    for (idx, &b) in beads.iter().enumerate() {
        if b < k {
            continue;
        }
        let target = b - k;
        if beads.contains(&target) {
            continue;
        }
        let height = beads.iter().filter(|&&x| x > target && x < b).count() as u32;
        let mut moved = beads.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = moved
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (len - 1 - i as u32))
            .filter(|&p| p > 0)
            .collect();
        out.push((Partition::new(parts).expect("border strip removal"), height));
    }
    out
}

/// Central character `f_λ(μ) = #C_μ χ^λ_μ / dim λ`.
pub fn frobenius_f(lambda: &Partition, mu: &Partition) -> Result<BigRat> {
    let chi = mn_character(lambda, mu)?;
    Ok(BigRat::new(conj_class_size(mu) * chi, dim_irrep(lambda)))
}

/// The Schur function `s_λ = Σ_μ χ^λ_μ / z_μ p_μ`.
pub fn schur_to_p(lambda: &Partition) -> PowerSumPoly {
    let mut out = PowerSumPoly::zero();
    for mu in partitions_of(lambda.size()) {
        let chi = character_rec(lambda, mu.parts());
        let z = z_of(&mu);
        out.add_term(mu, BigRat::new(BigInt::from(chi), z));
    }
    out
}

/// Applies the cut-and-join operator
/// `½ Σ_{k,l} ((k+l) p_k p_l ∂_{k+l} + k l p_{k+l} ∂_k ∂_l)` term by term.
pub fn cut_and_join_apply(poly: &PowerSumPoly) -> PowerSumPoly {
    cut_and_join_general(poly, &BigRat::one())
}

/// The one-parameter deformation, with the join term weighted by `α` and an
/// extra `(α - 1)/2 Σ k² p_k ∂_k`. Equal to [`cut_and_join_apply`] at `α = 1`.
pub fn cut_and_join_alpha_apply(poly: &PowerSumPoly, alpha: &BigRat) -> PowerSumPoly {
    cut_and_join_general(poly, alpha)
}

fn cut_and_join_general(poly: &PowerSumPoly, alpha: &BigRat) -> PowerSumPoly {
    let half = BigRat::new(1.into(), 2.into());
    let diag = (alpha - BigRat::one()) * &half;
    let mut out = PowerSumPoly::zero();
    for (mu, c) in poly.terms() {
        let parts = mu.parts();
        // join: each unordered pair of positions (i, j) merges into μ_i + μ_j
        for i in 0..parts.len() {
            for j in i + 1..parts.len() {
                let (a, b) = (parts[i], parts[j]);
                let merged = Partition::from_parts(
                    parts
                        .iter()
                        .enumerate()
                        .filter(|&(t, _)| t != i && t != j)
                        .map(|(_, &p)| p)
                        .chain(std::iter::once(a + b)),
                )
                .expect("positive parts");
                out.add_term(merged, c * alpha * BigRat::from_integer((a * b).into()));
            }
        }
        // cut: each position splits into an ordered pair (k, n - k), weight n/2
        for i in 0..parts.len() {
            let n = parts[i];
            if n < 2 {
                continue;
            }
            let rest: Vec<u32> = parts
                .iter()
                .enumerate()
                .filter(|&(t, _)| t != i)
                .map(|(_, &p)| p)
                .collect();
            let w = c * BigRat::new(n.into(), 2.into());
            for k in 1..n {
                let split = Partition::from_parts(rest.iter().copied().chain([k, n - k]))
                    .expect("positive parts");
                out.add_term(split, w.clone());
            }
        }
        if !diag.is_zero() {
            let squares: u64 = parts.iter().map(|&p| p as u64 * p as u64).sum();
            out.add_term(mu.clone(), c * &diag * BigRat::from_integer(squares.into()));
        }
    }
    out
}

/// `ε_λ(α) = α n(λ') - n(λ) + (α - 1)|λ|/2`.
pub fn jack_eigenvalue(lambda: &Partition, alpha: &BigRat) -> BigRat {
    let n_conj = BigRat::from_integer(n_stat(&conjugate(lambda)).into());
    let n_lam = BigRat::from_integer(n_stat(lambda).into());
    let size = BigRat::new(lambda.size().into(), 2.into());
    alpha * n_conj - n_lam + (alpha - BigRat::one()) * size
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::kappa_half;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn pm(parts: &[u32]) -> PowerSumPoly {
        PowerSumPoly::monomial(p(parts), BigRat::one())
    }

    fn q(n: i64, d: i64) -> BigRat {
        BigRat::new(n.into(), d.into())
    }

    #[test]
    fn addition() {
        assert_eq!(&pm(&[1]) + &pm(&[1]), pm(&[1]).scale(&q(2, 1)));
        assert!((&pm(&[2]) + &pm(&[2]).scale(&q(-1, 1))).is_zero());
        let s = &(&pm(&[1]) + &pm(&[2])) + &pm(&[1, 1]);
        assert_eq!(s.len(), 3);
        assert_eq!(s.coeff(&p(&[1, 1])), q(1, 1));
    }

    #[test]
    fn multiplication() {
        assert_eq!(&pm(&[1]) * &pm(&[1]), pm(&[1, 1]));
        assert_eq!(&pm(&[2, 1]) * &pm(&[2]), pm(&[2, 2, 1]));
        let lhs = &(&pm(&[1]) + &pm(&[2])) * &(&pm(&[1]) - &pm(&[2]));
        assert_eq!(lhs, &pm(&[1, 1]) - &pm(&[2, 2]));
    }

    #[test]
    fn characters_small() {
        for n in 1..=6 {
            for mu in partitions_of(n) {
                assert_eq!(mn_character(&Partition::row(n), &mu).unwrap(), 1);
            }
            assert_eq!(
                mn_character(&Partition::column(n), &Partition::column(n)).unwrap(),
                1
            );
        }
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[2, 1])).unwrap(), 0);
        assert!(mn_character(&p(&[2, 1]), &p(&[2])).is_err());
    }

    #[test]
    fn characters_on_full_cycle() {
        for n in 1..=9u32 {
            for lam in partitions_of(n) {
                let chi = mn_character(&lam, &Partition::row(n)).unwrap();
                let is_hook = lam.len() <= 1 || lam.parts()[1] <= 1;
                if is_hook {
                    let r = lam.part(1);
                    let expected = if (n - r) % 2 == 0 { 1 } else { -1 };
                    assert_eq!(chi, expected, "{lam}");
                } else {
                    assert_eq!(chi, 0, "{lam}");
                }
            }
        }
    }

    #[test]
    fn identity_class_gives_dimension() {
        for n in 0..=9 {
            for lam in partitions_of(n) {
                let chi = mn_character(&lam, &Partition::column(n)).unwrap();
                assert_eq!(BigInt::from(chi), dim_irrep(&lam));
            }
        }
    }

    #[test]
    fn central_characters() {
        for n in 1..=7 {
            for lam in partitions_of(n) {
                assert_eq!(
                    frobenius_f(&lam, &Partition::column(n)).unwrap(),
                    BigRat::one()
                );
                if n >= 2 {
                    assert_eq!(
                        frobenius_f(&lam, &Partition::transposition_class(n)).unwrap(),
                        BigRat::from_integer(kappa_half(&lam).into())
                    );
                }
            }
        }
        assert_eq!(frobenius_f(&p(&[2]), &p(&[2])).unwrap(), BigRat::one());
    }

    #[test]
    fn schur_expansions() {
        assert_eq!(schur_to_p(&p(&[1])), pm(&[1]));
        assert_eq!(
            schur_to_p(&p(&[2])),
            &pm(&[1, 1]).scale(&q(1, 2)) + &pm(&[2]).scale(&q(1, 2))
        );
        assert_eq!(
            schur_to_p(&p(&[1, 1])),
            &pm(&[1, 1]).scale(&q(1, 2)) - &pm(&[2]).scale(&q(1, 2))
        );
    }

    #[test]
    fn cut_and_join_examples() {
        assert!(cut_and_join_apply(&pm(&[1])).is_zero());
        assert_eq!(cut_and_join_apply(&pm(&[1, 1])), pm(&[2]));
        assert_eq!(cut_and_join_apply(&pm(&[2])), pm(&[1, 1]));
    }

    #[test]
    fn cut_and_join_preserves_degree() {
        for n in 1..=6 {
            for mu in partitions_of(n) {
                for (nu, _) in cut_and_join_apply(&pm(mu.parts())).terms() {
                    assert_eq!(nu.size(), n);
                }
            }
        }
    }

    #[test]
    fn alpha_deformation() {
        for alpha in [q(1, 1), q(2, 1), q(-3, 7)] {
            assert_eq!(
                cut_and_join_alpha_apply(&pm(&[1]), &alpha),
                pm(&[1]).scale(&((&alpha - BigRat::one()) * q(1, 2)))
            );
        }
        // p_2 at α = 2: cut term p_{(1,1)}, diagonal term (α-1)/2 · 4 · p_2.
        assert_eq!(
            cut_and_join_alpha_apply(&pm(&[2]), &q(2, 1)),
            &pm(&[1, 1]) + &pm(&[2]).scale(&q(2, 1))
        );
        for mu in partitions_of(5) {
            let poly = &pm(mu.parts()) + &pm(&[3, 1]);
            assert_eq!(
                cut_and_join_alpha_apply(&poly, &BigRat::one()),
                cut_and_join_apply(&poly)
            );
        }
        // e_2 = (p_{(1,1)} - p_2)/2 is the Jack function P_{(1,1)} for every α.
        let e2 = &pm(&[1, 1]).scale(&q(1, 2)) - &pm(&[2]).scale(&q(1, 2));
        for alpha in [q(2, 1), q(5, 3)] {
            let ev = jack_eigenvalue(&p(&[1, 1]), &alpha);
            assert_eq!(cut_and_join_alpha_apply(&e2, &alpha), e2.scale(&ev));
        }
    }

    #[test]
    fn jack_eigenvalues() {
        for n in 0..=8 {
            for lam in partitions_of(n) {
                assert_eq!(
                    jack_eigenvalue(&lam, &BigRat::one()),
                    BigRat::from_integer(kappa_half(&lam).into())
                );
            }
        }
        assert_eq!(jack_eigenvalue(&p(&[1]), &q(3, 1)), q(1, 1));
        assert_eq!(
            jack_eigenvalue(&Partition::empty(), &q(3, 1)),
            BigRat::zero()
        );
    }

    #[test]
    fn p1_power_expands_with_dimensions() {
        for n in 0..=6 {
            let p1n = pm(&[1]).pow(n);
            assert_eq!(p1n, pm(&vec![1; n as usize]));
            for lam in partitions_of(n) {
                assert_eq!(
                    p1n.hall_inner(&schur_to_p(&lam)),
                    BigRat::from_integer(dim_irrep(&lam))
                );
            }
        }
    }
}
