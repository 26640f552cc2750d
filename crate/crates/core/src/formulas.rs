//! Closed-form invariants of codimension-one decompositions, in exact
//! arbitrary-precision integers.
//!
//! For a generic form of degree d in n+1 variables:
//! - `smin`: the least s with `n s - C(d - s + n, n) >= 0`;
//! - `sexp`: the naive parameter count `ceil(C(d+n, n) / (n + C(d+n-1, n-1)))`;
//! - `vsh_dim`, `vsh_degree`: dimension and degree of the variety of
//!   codimension-one decompositions with `smin` summands, the degree being
//!   that of the Chow variety `Delta_{n,s}`.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// `C(m, k)`, zero when `m < k` or `m < 0`.
pub fn binom(m: i64, k: u64) -> BigUint {
    if m < 0 || (m as u64) < k {
        return BigUint::zero();
    }
    let m = m as u64;
    let k = k.min(m - k);
    // each prefix product C(m - k + i, i) is an integer
    (1..=k).fold(BigUint::one(), |acc, i| acc * (m - k + i) / i)
}

fn ceil_div(a: &BigUint, b: &BigUint) -> BigUint {
    Integer::div_ceil(a, b)
}

/// `n s - C(d - s + n, n)`, signed.
pub fn dimension_excess(n: u64, d: u64, s: u64) -> i128 {
    let c = binom(d as i64 - s as i64 + n as i64, n);
    match c.to_i128() {
        Some(c) => (n * s) as i128 - c,
        None => i128::MIN,
    }
}

/// Minimal number of codimension-one summands for a generic form.
pub fn smin(n: u64, d: u64) -> u64 {
    assert!(n >= 1 && d >= 1, "smin needs n >= 1 and d >= 1");
    (1..)
        .find(|&s| dimension_excess(n, d, s) >= 0)
        .expect("s = d + 1 always satisfies the inequality")
}

/// Expected value of [`smin`] from the dimension count.
pub fn sexp(n: u64, d: u64) -> u64 {
    assert!(n >= 1 && d >= 1, "sexp needs n >= 1 and d >= 1");
    let num = binom((d + n) as i64, n);
    let den = BigUint::from(n) + binom((d + n - 1) as i64, n - 1);
    ceil_div(&num, &den).to_u64().expect("sexp fits in u64")
}

/// Lower bound `ceil((d + 1) / 2)` coming from the generating degree of a
/// generic `f^perp`.
pub fn sstar(d: u64) -> u64 {
    (d + 1).div_ceil(2)
}

/// Generic Waring rank (sum of powers of linear forms) of a degree-d form in
/// n+1 variables, with the quadric and the four defective exceptions.
pub fn ah_rank(n: u64, d: u64) -> BigUint {
    match (n, d) {
        (_, 2) => BigUint::from(n + 1),
        (2, 4) => BigUint::from(6u32),
        (3, 4) => BigUint::from(10u32),
        (4, 4) => BigUint::from(15u32),
        (4, 3) => BigUint::from(8u32),
        _ => ceil_div(&binom((n + d) as i64, d), &BigUint::from(n + 1)),
    }
}

pub fn is_defective(n: u64, d: u64) -> bool {
    smin(n, d) != sexp(n, d)
}

/// Closed-form classification for n >= 2: the pair is non-defective exactly
/// when d is 2 or 3, or n = 2 and d is 4, 5, 6 or 8.
pub fn defective_classification(n: u64, d: u64) -> Result<bool> {
    if n < 2 {
        return Err(Error::Domain(format!("classification needs n >= 2, got n = {n}")));
    }
    if d < 2 {
        return Err(Error::Domain(format!("classification needs d >= 2, got d = {d}")));
    }
    let non_defective = matches!(d, 2 | 3) || (n == 2 && matches!(d, 4 | 5 | 6 | 8));
    Ok(!non_defective)
}

/// Dimension `n s` of the variety of totally decomposable degree-s forms.
pub fn chow_dim(n: u64, s: u64) -> u64 {
    n * s
}

/// `prod_{k=1..s} C(n k - 1, n - 1)`: the number of s-tuples of hyperplanes
/// through n s general points.
pub fn chow_degree(n: u64, s: u64) -> BigUint {
    (1..=s).fold(BigUint::one(), |acc, k| acc * binom((n * k) as i64 - 1, n - 1))
}

pub fn vsh_dim(n: u64, d: u64) -> u64 {
    let excess = dimension_excess(n, d, smin(n, d));
    u64::try_from(excess).expect("excess is non-negative at smin")
}

pub fn vsh_degree(n: u64, d: u64) -> BigUint {
    chow_degree(n, smin(n, d))
}

/// Projective dimension of the variety of codimension-one forms:
/// n hyperplane parameters plus the projective fiber `P S_d(n vars)`.
pub fn vhat_dim(n: u64, d: u64) -> BigUint {
    BigUint::from(n) + binom((d + n - 1) as i64, n - 1) - 1u32
}

/// Every invariant for one pair (n, d).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WaringProfile {
    pub n: u64,
    pub d: u64,
    pub smin: u64,
    pub sexp: u64,
    pub sstar: u64,
    #[serde(serialize_with = "decimal")]
    pub ah_rank: BigUint,
    pub defective: bool,
    pub vsh_dim: u64,
    #[serde(serialize_with = "decimal")]
    pub vsh_degree: BigUint,
    pub chow_dim: u64,
    #[serde(serialize_with = "decimal")]
    pub vhat_dim: BigUint,
}

fn decimal<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_str_radix(10))
}

pub fn profile(n: u64, d: u64) -> WaringProfile {
    let s = smin(n, d);
    let e = sexp(n, d);
    WaringProfile {
        n,
        d,
        smin: s,
        sexp: e,
        sstar: sstar(d),
        ah_rank: ah_rank(n, d),
        defective: s != e,
        vsh_dim: vsh_dim(n, d),
        vsh_degree: chow_degree(n, s),
        chow_dim: chow_dim(n, s),
        vhat_dim: vhat_dim(n, d),
    }
}

/// Profiles for every pair in the ranges, sorted by (d, n).
pub fn table(ns: std::ops::RangeInclusive<u64>, ds: std::ops::RangeInclusive<u64>) -> Result<Vec<WaringProfile>> {
    if ns.is_empty() || ds.is_empty() {
        return Err(Error::Domain("empty parameter range".into()));
    }
    if *ns.start() == 0 || *ds.start() == 0 {
        return Err(Error::Domain("n and d start at 1".into()));
    }
    Ok(ds
        .flat_map(|d| ns.clone().map(move |n| profile(n, d)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(s: &str) -> BigUint {
        s.parse().unwrap()
    }

    fn factorial(k: u64) -> BigUint {
        (1..=k).fold(BigUint::one(), |acc, i| acc * i)
    }

    #[test]
    fn binom_matches_pascal_triangle() {
        let mut row = vec![BigUint::one()];
        for m in 0..=150i64 {
            for (k, c) in row.iter().enumerate() {
                assert_eq!(binom(m, k as u64), *c, "C({m}, {k})");
            }
            assert!(binom(m, row.len() as u64).is_zero());
            let mut next = vec![BigUint::one(); row.len() + 1];
            for k in 1..row.len() {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
        }
        assert!(binom(-3, 0).is_zero());
    }

    #[test]
    fn smin_values() {
        assert_eq!(smin(2, 5), 3);
        assert_eq!(smin(3, 34), 28);
        assert_eq!(smin(1, 7), 4);
        assert_eq!(smin(2, 2), 2);
        assert_eq!(smin(2, 8), 5);
        assert_eq!(smin(3, 4), 3);
        assert_eq!(smin(3, 3), 2);
    }

    #[test]
    fn sexp_values() {
        assert_eq!(sexp(2, 4), 3);
        assert_eq!(sexp(2, 3), 2);
        assert_eq!(smin(2, 3), 2);
        for d in 1..40 {
            assert_eq!(sexp(1, d), (d + 2) / 2);
            assert_eq!(sexp(1, d), smin(1, d));
        }
    }

    #[test]
    fn sstar_values() {
        assert_eq!(sstar(5), 3);
        assert_eq!(sstar(8), 5);
        assert_eq!(sstar(8), smin(2, 8));
        assert_eq!(sstar(2), 2);
    }

    #[test]
    fn ah_rank_values() {
        assert_eq!(ah_rank(2, 4), BigUint::from(6u32));
        assert_eq!(ah_rank(3, 4), BigUint::from(10u32));
        assert_eq!(ah_rank(4, 4), BigUint::from(15u32));
        assert_eq!(ah_rank(4, 3), BigUint::from(8u32));
        assert_eq!(ah_rank(2, 5), BigUint::from(7u32));
        assert_eq!(ah_rank(7, 2), BigUint::from(8u32));
    }

    #[test]
    fn defectivity_examples() {
        assert!(!defective_classification(2, 6).unwrap());
        assert!(defective_classification(3, 4).unwrap());
        assert!(defective_classification(2, 7).unwrap());
        assert!(!is_defective(2, 6));
        assert!(is_defective(3, 4));
        assert!(is_defective(2, 7));
        assert!(defective_classification(1, 5).is_err());
        assert!(defective_classification(3, 1).is_err());
    }

    #[test]
    fn chow_degree_values() {
        assert_eq!(chow_degree(2, 3), BigUint::from(15u32));
        assert_eq!(chow_degree(2, 5), BigUint::from(945u32));
        assert_eq!(chow_degree(2, 14), big("213458046676875"));
        assert_eq!(chow_degree(2, 18), big("221643095476699771875"));
        for n in 1..12 {
            assert_eq!(chow_degree(n, 2), binom(2 * n as i64 - 1, n - 1));
            assert_eq!(chow_degree(n, 1), BigUint::one());
        }
    }

    #[test]
    fn vsh_values() {
        assert_eq!((vsh_dim(2, 5), vsh_degree(2, 5)), (0, BigUint::from(15u32)));
        assert_eq!((vsh_dim(2, 20), vsh_degree(2, 20)), (0, big("213458046676875")));
        assert_eq!(vsh_dim(3, 4), 5);
    }

    #[test]
    fn vhat_values() {
        assert_eq!(vhat_dim(2, 3), BigUint::from(5u32));
        assert_eq!(vhat_dim(1, 9), BigUint::one());
        assert_eq!(vhat_dim(2, 2), BigUint::from(4u32));
        assert_eq!(vhat_dim(3, 2), BigUint::from(8u32));
    }

    #[test]
    fn profile_and_table() {
        let p = profile(2, 5);
        assert_eq!((p.smin, p.vsh_dim, p.vsh_degree.clone()), (3, 0, BigUint::from(15u32)));
        assert_eq!(p.chow_dim, 6);
        let t = table(1..=3, 2..=4).unwrap();
        assert_eq!(t.len(), 9);
        assert!(t.windows(2).all(|w| (w[0].d, w[0].n) < (w[1].d, w[1].n)));
        #[allow(clippy::reversed_empty_ranges)]
        let empty = 3..=2;
        assert!(table(empty, 1..=2).is_err());
        let json = serde_json::to_value(profile(2, 20)).unwrap();
        assert_eq!(json["vsh_degree"], "213458046676875");
    }

    /// Oracle: unordered partitions of n s labelled points into s blocks of
    /// size n, counted as (ns)! / ((n!)^s s!).
    #[test]
    fn chow_degree_counts_partitions() {
        for n in 1..=6 {
            for s in 1..=12 {
                let partitions = factorial(n * s) / (factorial(n).pow(s as u32) * factorial(s));
                assert_eq!(chow_degree(n, s), partitions, "n={n} s={s}");
            }
        }
    }

    #[test]
    fn grid_invariants() {
        for n in 1..=30 {
            for d in 1..=60 {
                let s = smin(n, d);
                assert!(s >= sstar(d), "n={n} d={d}");
                assert!(s >= sexp(n, d), "n={n} d={d}");
                assert!(dimension_excess(n, d, s) >= 0);
                if s > 1 {
                    assert!(dimension_excess(n, d, s - 1) < 0);
                }
                assert_eq!(
                    chow_dim(n, s) as i128 - binom((d + n - s) as i64, n).to_i128().unwrap(),
                    vsh_dim(n, d) as i128
                );
            }
        }
    }
}
