//! Closed-form values: one-part profiles in every genus, two-part profiles in genus 0.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::partition::{binomial, factorial};
use crate::BigRat;

/// `n^e` as an exact rational, allowing negative exponents.
fn int_pow(n: u32, e: i64) -> BigRat {
    let base = BigInt::from(n);
    if e >= 0 {
        BigRat::from_integer(base.pow(e as u32))
    } else {
        BigRat::new(BigInt::one(), base.pow((-e) as u32))
    }
}

/// `h_{0,(n)} = n^{n-3}`.
pub fn closed_genus0_onepart(n: u32) -> BigRat {
    assert!(n >= 1, "one-part profile needs n >= 1");
    int_pow(n, n as i64 - 3)
}

/// `h_{g,(n)}` as an alternating character sum over hooks:
/// `1/(n!·n) Σ_{s=0}^{n-1} (-1)^s C(n-1,s) (C(n,2) - n s)^{n-1+2g}`.
pub fn closed_onepart(g: u32, n: u32) -> BigRat {
    assert!(n >= 1, "one-part profile needs n >= 1");
    let exp = n - 1 + 2 * g;
    let c2 = BigInt::from(n as u64 * (n as u64 - 1) / 2);
    let mut sum = BigInt::zero();
    for s in 0..n {
        let base = &c2 - BigInt::from(n as u64 * s as u64);
        let term = binomial((n - 1) as u64, s as u64) * base.pow(exp);
        if s % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    BigRat::new(sum, factorial(n) * n)
}

/// The same value through Stirling numbers:
/// `n^{n-3} Σ_{r=0}^{2g} C(n-1+2g, n-1+r) C(n,2)^{2g-r} (-n)^r S(n-1+r, n-1)`.
pub fn closed_onepart_stirling(g: u32, n: u32) -> BigRat {
    assert!(n >= 1, "one-part profile needs n >= 1");
    let top = (n - 1 + 2 * g) as u64;
    let c2 = BigInt::from(n as u64 * (n as u64 - 1) / 2);
    let minus_n = -BigInt::from(n);
    let mut sum = BigInt::zero();
    for r in 0..=2 * g {
        sum += binomial(top, (n - 1 + r) as u64)
            * c2.pow(2 * g - r)
            * minus_n.pow(r)
            * stirling2(n - 1 + r, n - 1);
    }
    int_pow(n, n as i64 - 3) * BigRat::from_integer(sum)
}

/// Stirling number of the second kind, `S(p, m) = m S(p-1, m) + S(p-1, m-1)`.
pub fn stirling2(p: u32, m: u32) -> BigInt {
    if m > p {
        return BigInt::zero();
    }
    // row[j] holds S(i, j) for the current i
    let mut row = vec![BigInt::zero(); m as usize + 1];
    row[0] = BigInt::one();
    for _ in 0..p {
        for j in (1..=m as usize).rev() {
            row[j] = &row[j] * j + &row[j - 1];
        }
        row[0] = BigInt::zero();
    }
    row[m as usize].clone()
}

/// `f_{m,p} = Σ_{s=0}^m C(m,s) (-1)^s s^p`, with `0^0 = 1`.
pub fn f_mp(m: u32, p: u32) -> BigInt {
    let mut sum = BigInt::zero();
    for s in 0..=m {
        let term = binomial(m as u64, s as u64) * BigInt::from(s).pow(p);
        if s % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum
}

/// `h_{0,(a,b)} = 1/σ · (a+b)!/(a+b) · a^a/a! · b^b/b!`, with `σ = 2` iff `a = b`.
pub fn closed_genus0_twopart(a: u32, b: u32) -> BigRat {
    assert!(a >= b && b >= 1, "expected a >= b >= 1, got ({a}, {b})");
    let n = a + b;
    let sigma = if a == b { 2u32 } else { 1 };
    let num = factorial(n) * BigInt::from(a).pow(a) * BigInt::from(b).pow(b);
    let den = BigInt::from(n) * factorial(a) * factorial(b) * sigma;
    BigRat::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRat {
        BigRat::new(n.into(), d.into())
    }

    #[test]
    fn genus0_onepart() {
        assert_eq!(closed_genus0_onepart(1), q(1, 1));
        assert_eq!(closed_genus0_onepart(2), q(1, 2));
        assert_eq!(closed_genus0_onepart(3), q(1, 1));
        assert_eq!(closed_genus0_onepart(4), q(4, 1));
        assert_eq!(closed_genus0_onepart(5), q(25, 1));
    }

    #[test]
    fn onepart_examples() {
        assert_eq!(closed_onepart(1, 3), q(9, 1));
        assert_eq!(closed_onepart(1, 4), q(160, 1));
        assert_eq!(closed_onepart(2, 5), q(328125, 1));
        assert_eq!(closed_onepart(1, 1), q(0, 1));
        assert_eq!(closed_onepart(3, 2), q(1, 2));
        for n in 1..=9 {
            assert_eq!(closed_onepart(0, n), closed_genus0_onepart(n));
        }
    }

    #[test]
    fn two_onepart_forms_agree() {
        for g in 0..=6 {
            for n in 1..=9 {
                assert_eq!(
                    closed_onepart(g, n),
                    closed_onepart_stirling(g, n),
                    "g={g} n={n}"
                );
            }
        }
    }

    #[test]
    fn stirling_values() {
        for p in 0..=8 {
            assert_eq!(stirling2(p, p), BigInt::one());
        }
        assert_eq!(stirling2(3, 2), BigInt::from(3));
        assert_eq!(stirling2(4, 2), BigInt::from(7));
        assert_eq!(stirling2(3, 0), BigInt::zero());
        assert_eq!(stirling2(2, 5), BigInt::zero());
    }

    #[test]
    fn stirling_counts_set_partitions() {
        // Oracle: count restricted growth strings of length p with exactly m blocks.
        fn rgs(p: u32, m: u32) -> u64 {
            fn rec(pos: u32, p: u32, max: u32, m: u32) -> u64 {
                if pos == p {
                    return (max == m) as u64;
                }
                (0..=max.min(m - 1))
                    .map(|b| rec(pos + 1, p, max.max(b + 1), m))
                    .sum()
            }
            if m == 0 {
                return (p == 0) as u64;
            }
            rec(0, p, 0, m)
        }
        for p in 0..=8 {
            for m in 0..=p {
                assert_eq!(stirling2(p, m), BigInt::from(rgs(p, m)), "S({p},{m})");
            }
        }
    }

    #[test]
    fn f_mp_values() {
        assert_eq!(f_mp(3, 2), BigInt::zero());
        assert_eq!(f_mp(3, 3), BigInt::from(-6));
        assert_eq!(f_mp(2, 4), BigInt::from(14));
        for m in 0..=7u32 {
            for p in 0..=10u32 {
                let sign = if m % 2 == 0 { 1 } else { -1 };
                assert_eq!(
                    f_mp(m, p),
                    stirling2(p, m) * factorial(m) * sign,
                    "m={m} p={p}"
                );
            }
        }
    }

    #[test]
    fn genus0_twopart() {
        assert_eq!(closed_genus0_twopart(1, 1), q(1, 2));
        assert_eq!(closed_genus0_twopart(2, 2), q(12, 1));
        assert_eq!(closed_genus0_twopart(3, 2), q(216, 1));
        assert_eq!(closed_genus0_twopart(2, 1), q(4, 1));
        assert_eq!(closed_genus0_twopart(3, 1), q(27, 1));
        assert_eq!(closed_genus0_twopart(4, 1), q(256, 1));
    }
}
