//! Truncated generating series in `Q`, divided powers of `β`, and power sums.
//!
//! A [`GenSeries`] stores the coefficient of `Q^d (β^r / r!) p_μ` with `|μ| = d`.
//! Because `β` is kept in divided powers, products pick up `binomial(r, r₁)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{HurwitzError, Result};
use crate::partition::{binomial, Partition};
use crate::BigRat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenSeries {
    d_max: u32,
    r_max: u32,
    /// `μ -> [coefficient at r = 0, 1, ..., r_max]`; `d` is `|μ|`.
    coeffs: BTreeMap<Partition, Vec<BigRat>>,
}

impl GenSeries {
    /// The zero series with the given truncation bounds.
    pub fn zero(d_max: u32, r_max: u32) -> Self {
        GenSeries {
            d_max,
            r_max,
            coeffs: BTreeMap::new(),
        }
    }

    /// The constant series `1`.
    pub fn one(d_max: u32, r_max: u32) -> Self {
        let mut s = GenSeries::zero(d_max, r_max);
        s.set(0, &Partition::empty(), BigRat::one());
        s
    }

    pub fn d_max(&self) -> u32 {
        self.d_max
    }

    pub fn r_max(&self) -> u32 {
        self.r_max
    }

    /// Coefficient of `Q^d β^r/r! p_μ`. Zero outside the bounds or when `|μ| != d`.
    pub fn get(&self, d: u32, r: u32, mu: &Partition) -> BigRat {
        if mu.size() != d || r > self.r_max {
            return BigRat::zero();
        }
        self.coeffs
            .get(mu)
            .map(|v| v[r as usize].clone())
            .unwrap_or_else(BigRat::zero)
    }

    /// Sets the coefficient at `(|μ|, r, μ)`. Entries outside the bounds are dropped.
    pub fn set(&mut self, r: u32, mu: &Partition, value: BigRat) {
        if mu.size() > self.d_max || r > self.r_max {
            return;
        }
        let len = self.r_max as usize + 1;
        if value.is_zero() {
            if let Some(v) = self.coeffs.get_mut(mu) {
                v[r as usize] = value;
                if v.iter().all(Zero::is_zero) {
                    self.coeffs.remove(mu);
                }
            }
            return;
        }
        self.coeffs
            .entry(mu.clone())
            .or_insert_with(|| vec![BigRat::zero(); len])[r as usize] = value;
    }

    fn add_at(&mut self, r: usize, mu: &Partition, value: BigRat) {
        if value.is_zero() {
            return;
        }
        let len = self.r_max as usize + 1;
        let slot = self
            .coeffs
            .entry(mu.clone())
            .or_insert_with(|| vec![BigRat::zero(); len]);
        slot[r] += value;
    }

    fn prune(&mut self) {
        self.coeffs.retain(|_, v| v.iter().any(|c| !c.is_zero()));
    }

    /// Number of nonzero `(d, r, μ)` coefficients.
    pub fn len(&self) -> usize {
        self.coeffs
            .values()
            .map(|v| v.iter().filter(|c| !c.is_zero()).count())
            .sum()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero entries as `(d, r, μ, coefficient)`.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u32, &Partition, &BigRat)> {
        self.coeffs.iter().flat_map(|(mu, v)| {
            v.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(r, c)| (mu.size(), r as u32, mu, c))
        })
    }

    pub fn add(&self, other: &GenSeries) -> GenSeries {
        let mut out = self.truncated(self.d_max.min(other.d_max), self.r_max.min(other.r_max));
        for (_, r, mu, c) in other.entries() {
            if mu.size() <= out.d_max && r <= out.r_max {
                out.add_at(r as usize, mu, c.clone());
            }
        }
        out.prune();
        out
    }

    pub fn scale(&self, c: &BigRat) -> GenSeries {
        let mut out = self.clone();
        for v in out.coeffs.values_mut() {
            for x in v.iter_mut() {
                *x *= c;
            }
        }
        out.prune();
        out
    }

    /// Restricts to smaller bounds.
    pub fn truncated(&self, d_max: u32, r_max: u32) -> GenSeries {
        let mut out = GenSeries::zero(d_max, r_max);
        for (mu, v) in &self.coeffs {
            if mu.size() > d_max {
                continue;
            }
            let w: Vec<BigRat> = (0..=r_max as usize)
                .map(|r| v.get(r).cloned().unwrap_or_else(BigRat::zero))
                .collect();
            if w.iter().any(|c| !c.is_zero()) {
                out.coeffs.insert(mu.clone(), w);
            }
        }
        out
    }

    /// Product with the divided-power rule in `β`:
    /// `(F G)[r, μ] = Σ binomial(r, r₁) F[r₁, μ₁] G[r - r₁, μ₂]` over `μ₁ ⊔ μ₂ = μ`.
    pub fn mul(&self, other: &GenSeries) -> GenSeries {
        let d_max = self.d_max.min(other.d_max);
        let r_max = self.r_max.min(other.r_max);
        let binoms: Vec<Vec<BigRat>> = (0..=r_max as u64)
            .map(|r| {
                (0..=r)
                    .map(|s| BigRat::from_integer(binomial(r, s)))
                    .collect()
            })
            .collect();
        let mut out = GenSeries::zero(d_max, r_max);
        for (mu1, a) in &self.coeffs {
            let d1 = mu1.size();
            if d1 > d_max {
                continue;
            }
            for (mu2, b) in &other.coeffs {
                if d1 + mu2.size() > d_max {
                    continue;
                }
                let mu = mu1.union(mu2);
                let mut acc: Vec<BigRat> = vec![BigRat::zero(); r_max as usize + 1];
                let mut any = false;
                for (r1, x) in a.iter().enumerate().take(r_max as usize + 1) {
                    if x.is_zero() {
                        continue;
                    }
                    for (r2, y) in b.iter().enumerate().take(r_max as usize + 1 - r1) {
                        if y.is_zero() {
                            continue;
                        }
                        let r = r1 + r2;
                        acc[r] += x * y * &binoms[r][r1];
                        any = true;
                    }
                }
                if any {
                    for (r, c) in acc.into_iter().enumerate() {
                        out.add_at(r, &mu, c);
                    }
                }
            }
        }
        out.prune();
        out
    }

    fn constant_term(&self) -> BigRat {
        self.get(0, 0, &Partition::empty())
    }

    /// Sum `Σ_{m≥1} weight(m) X^m`, stopping once the power vanishes.
    /// `X` must have zero constant term, so `X^m = 0` for `m > d_max + r_max`.
    fn power_sum_with(x: &GenSeries, weight: impl Fn(u32) -> BigRat) -> GenSeries {
        let mut out = GenSeries::zero(x.d_max, x.r_max);
        let mut power = x.clone();
        let mut m = 1;
        while !power.is_empty() {
            out = out.add(&power.scale(&weight(m)));
            power = power.mul(x);
            m += 1;
        }
        out
    }
}

/// `log F` for a series with constant term 1, via `log(1 + X) = Σ (-1)^{m+1} X^m / m`.
pub fn series_log(f: &GenSeries) -> Result<GenSeries> {
    let c = f.constant_term();
    if !c.is_one() {
        return Err(HurwitzError::ConstantTerm {
            expected: "1".into(),
            found: c.to_string(),
        });
    }
    let x = f.add(&GenSeries::one(f.d_max, f.r_max).scale(&-BigRat::one()));
    Ok(GenSeries::power_sum_with(&x, |m| {
        let sign = if m % 2 == 1 { 1 } else { -1 };
        BigRat::new(BigInt::from(sign), BigInt::from(m))
    }))
}

/// `exp F` for a series with zero constant term.
pub fn series_exp(f: &GenSeries) -> Result<GenSeries> {
    let c = f.constant_term();
    if !c.is_zero() {
        return Err(HurwitzError::ConstantTerm {
            expected: "0".into(),
            found: c.to_string(),
        });
    }
    let mut fact = BigInt::one();
    let mut weights = vec![BigRat::one()];
    for m in 1..=(f.d_max + f.r_max + 1) {
        fact *= m;
        weights.push(BigRat::new(BigInt::one(), fact.clone()));
    }
    let higher = GenSeries::power_sum_with(f, |m| weights[m as usize].clone());
    Ok(GenSeries::one(f.d_max, f.r_max).add(&higher))
}
