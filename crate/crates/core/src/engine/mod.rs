//! Hurwitz number computation: cut-and-join recursion, `log τ` by two routes,
//! closed forms, and the persistent memo cache.

pub mod cache;
pub mod closed;
pub mod cut_join;
pub mod disconnected;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

pub use cache::{CacheStats, HurwitzCache};
pub use closed::{
    closed_genus0_onepart, closed_genus0_twopart, closed_onepart, closed_onepart_stirling, f_mp,
    stirling2,
};
pub use cut_join::{cj_expansion, h_to_H, hurwitz_cj, hurwitz_cj_multi, CjCase, CjTerm};
pub use disconnected::{
    connected_from_log, connected_from_log_by, connected_series, cov_disconnected_charsum,
    cov_disconnected_operator, read_connected, tau_series, tau_series_by, TauRoute,
};

use crate::error::{HurwitzError, Result};
use crate::oracle::{count_covers_bruteforce, OracleLimits};
use crate::partition::{partitions_of, ramification_of, Partition};
use crate::BigRat;

/// A computation route for a single `h_{g,μ}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Cj,
    CharSum,
    Operator,
    Closed,
    Oracle,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::Cj => "cj",
            Method::CharSum => "charsum",
            Method::Operator => "operator",
            Method::Closed => "closed",
            Method::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Method {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "cj" => Ok(Method::Cj),
            "charsum" => Ok(Method::CharSum),
            "operator" => Ok(Method::Operator),
            "closed" => Ok(Method::Closed),
            "oracle" => Ok(Method::Oracle),
            other => Err(format!(
                "unknown method {other:?} (expected cj, charsum, operator, closed, oracle)"
            )),
        }
    }
}

/// Computes `h_{g,μ}` by the requested method.
pub fn compute(g: u32, mu: &Partition, method: Method, cache: &HurwitzCache) -> Result<BigRat> {
    let r = ramification_of(g, mu)?;
    match method {
        Method::Cj => hurwitz_cj(g, mu, cache),
        Method::CharSum => connected_from_log_by(g, mu, TauRoute::CharSum),
        Method::Operator => connected_from_log_by(g, mu, TauRoute::Operator),
        Method::Closed => match mu.parts() {
            [n] => Ok(closed_onepart(g, *n)),
            [a, b] if g == 0 => Ok(closed_genus0_twopart(*a, *b)),
            _ => Err(HurwitzError::MethodMismatch {
                method: method.to_string(),
                g,
                mu: mu.clone(),
            }),
        },
        Method::Oracle => {
            count_covers_bruteforce(mu.size(), r as u32, mu, true, &OracleLimits::default())
        }
    }
}

/// All `(g, μ)` with `μ ≠ ∅` and `r(g,μ) <= r_max`, ordered by `(r, g, μ)` with
/// `μ` reverse-lexicographic.
pub fn keys_up_to(r_max: u32) -> Vec<(u32, Partition)> {
    let r_max = r_max as i64;
    let mut keys = Vec::new();
    // r >= 2g - 2 + 2 for nonempty μ, so g <= r_max / 2
    for g in 0..=(r_max / 2) as u32 {
        // r >= 2g - 2 + 1 + n, so n <= r_max - 2g + 1
        let n_max = r_max - 2 * g as i64 + 1;
        for n in 1..=n_max.max(0) as u32 {
            for mu in partitions_of(n) {
                if ramification_of(g, &mu).unwrap() <= r_max {
                    keys.push((g, mu));
                }
            }
        }
    }
    keys.sort_by(|(g1, m1), (g2, m2)| {
        let r1 = ramification_of(*g1, m1).unwrap();
        let r2 = ramification_of(*g2, m2).unwrap();
        r1.cmp(&r2).then(g1.cmp(g2)).then(m1.cmp_rev_lex(m2))
    });
    keys
}

/// Evaluates the recursion for every key, one ramification level at a time so
/// that each level runs in parallel over an already-filled cache.
pub fn compute_all_cj(
    keys: &[(u32, Partition)],
    cache: &HurwitzCache,
) -> Result<BTreeMap<(u32, Partition), BigRat>> {
    let mut levels: BTreeMap<i64, Vec<&(u32, Partition)>> = BTreeMap::new();
    for key in keys {
        levels
            .entry(ramification_of(key.0, &key.1)?)
            .or_default()
            .push(key);
    }
    let mut out = BTreeMap::new();
    for (_, level) in levels {
        let values: Vec<Result<((u32, Partition), BigRat)>> = level
            .par_iter()
            .map(|(g, mu)| hurwitz_cj(*g, mu, cache).map(|v| ((*g, mu.clone()), v)))
            .collect();
        for v in values {
            let (k, v) = v?;
            out.insert(k, v);
        }
    }
    Ok(out)
}
