//! Disconnected cover counts `Cov_{d,r}(μ)` by two routes (character sum and
//! operator power), the generating series `τ` built from them, and connected
//! numbers read off `log τ`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{HurwitzError, Result};
use crate::partition::{
    dim_irrep, factorial, kappa_half, partitions_of, ramification_of, z_of, Partition,
};
use crate::series::{series_log, GenSeries};
use crate::symfunc::{cut_and_join_apply, mn_character, PowerSumPoly};
use crate::BigRat;

/// Which formula populates the `τ` series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TauRoute {
    /// `Σ_λ (dim λ/d!) (κ_λ/2)^r χ^λ_μ / z_μ`
    CharSum,
    /// coefficient of `p_μ` in `(D^(2))^r p_1^d / d!`
    Operator,
}

fn check_size(d: u32, mu: &Partition) -> Result<()> {
    if mu.size() != d {
        return Err(HurwitzError::NotAPartitionOf { mu: mu.clone(), d });
    }
    Ok(())
}

/// Weighted count of possibly disconnected degree-`d` covers with `r` simple
/// branch points and profile `μ`, by the Burnside character sum.
pub fn cov_disconnected_charsum(d: u32, r: u32, mu: &Partition) -> Result<BigRat> {
    check_size(d, mu)?;
    let d_fact = factorial(d);
    let z = z_of(mu);
    let mut total = BigRat::zero();
    for lambda in partitions_of(d) {
        let chi = mn_character(&lambda, mu)?;
        if chi == 0 {
            continue;
        }
        let kappa = BigInt::from(kappa_half(&lambda)).pow(r);
        total += BigRat::new(dim_irrep(&lambda) * kappa * chi, &d_fact * &z);
    }
    Ok(total)
}

/// The same count as the coefficient of `p_μ` in `(1/d!) (D^(2))^r p_1^d`.
pub fn cov_disconnected_operator(d: u32, r: u32, mu: &Partition) -> Result<BigRat> {
    check_size(d, mu)?;
    let mut poly = PowerSumPoly::monomial(
        Partition::column(d),
        BigRat::new(BigInt::one(), factorial(d)),
    );
    for _ in 0..r {
        poly = cut_and_join_apply(&poly);
    }
    Ok(poly.coeff(mu))
}

/// `τ = e^{βD^(2)} e^{Q p_1}` truncated at `Q^{d_max}`, `β^{r_max}`, built by
/// repeatedly applying the cut-and-join operator to `p_1^d/d!`.
pub fn tau_series(d_max: u32, r_max: u32) -> GenSeries {
    tau_series_by(d_max, r_max, TauRoute::Operator)
}

pub fn tau_series_by(d_max: u32, r_max: u32, route: TauRoute) -> GenSeries {
    let columns: Vec<Vec<(u32, Partition, BigRat)>> = (0..=d_max)
        .into_par_iter()
        .map(|d| match route {
            TauRoute::Operator => operator_column(d, r_max),
            TauRoute::CharSum => charsum_column(d, r_max),
        })
        .collect();
    let mut out = GenSeries::zero(d_max, r_max);
    for (r, mu, c) in columns.into_iter().flatten() {
        out.set(r, &mu, c);
    }
    out
}

fn operator_column(d: u32, r_max: u32) -> Vec<(u32, Partition, BigRat)> {
    let mut out = Vec::new();
    let mut poly = PowerSumPoly::monomial(
        Partition::column(d),
        BigRat::new(BigInt::one(), factorial(d)),
    );
    for r in 0..=r_max {
        for (mu, c) in poly.terms() {
            out.push((r, mu.clone(), c.clone()));
        }
        if r < r_max {
            poly = cut_and_join_apply(&poly);
        }
    }
    out
}

fn charsum_column(d: u32, r_max: u32) -> Vec<(u32, Partition, BigRat)> {
    let d_fact = factorial(d);
    let lambdas = partitions_of(d);
    let weights: Vec<(BigInt, BigInt)> = lambdas
        .iter()
        .map(|l| (dim_irrep(l), BigInt::from(kappa_half(l))))
        .collect();
    let mut out = Vec::new();
    for mu in partitions_of(d) {
        let denom = &d_fact * z_of(&mu);
        let chis: Vec<i64> = lambdas
            .iter()
            .map(|l| mn_character(l, &mu).expect("same size"))
            .collect();
        for r in 0..=r_max {
            let mut num = BigInt::zero();
            for ((dim, kappa), &chi) in weights.iter().zip(&chis) {
                if chi != 0 {
                    num += dim * kappa.pow(r) * chi;
                }
            }
            if !num.is_zero() {
                out.push((r, mu.clone(), BigRat::new(num, denom.clone())));
            }
        }
    }
    out
}

/// `log τ` with the given bounds; its `(|μ|, r(g,μ), μ)` entry is `h_{g,μ}`.
pub fn connected_series(d_max: u32, r_max: u32, route: TauRoute) -> GenSeries {
    series_log(&tau_series_by(d_max, r_max, route)).expect("tau has constant term 1")
}

/// `h_{g,μ}` as a coefficient of `log τ`.
pub fn connected_from_log(g: u32, mu: &Partition) -> Result<BigRat> {
    connected_from_log_by(g, mu, TauRoute::Operator)
}

pub fn connected_from_log_by(g: u32, mu: &Partition, route: TauRoute) -> Result<BigRat> {
    let r = ramification_of(g, mu)?;
    let r = u32::try_from(r).map_err(|_| HurwitzError::NegativeRamification(r))?;
    let log = connected_series(mu.size(), r, route);
    Ok(read_connected(&log, g, mu))
}

/// Reads `h_{g,μ}` from a precomputed `log τ`; zero if the series is too small.
pub fn read_connected(log: &GenSeries, g: u32, mu: &Partition) -> BigRat {
    match ramification_of(g, mu) {
        Ok(r) if r >= 0 => log.get(mu.size(), r as u32, mu),
        _ => BigRat::zero(),
    }
}
