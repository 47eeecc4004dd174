//! Exact arithmetic number families: binomial coefficients, Stirling numbers
//! of the second kind, and the chain counts that govern barycentric
//! subdivision. Everything is computed over arbitrary-precision integers;
//! chain entries grow factorially and overflow fixed-width types quickly.
//!
//! The enumeration routines ([`enumerate_strict_chains`],
//! [`enumerate_partitions`]) are deliberately brute-force. They are the
//! independent oracles the fast closed forms are checked against, and they
//! are public so the CLI can run them on demand.

use num::{BigInt, One, Zero};
use std::collections::HashMap;
use std::sync::Mutex;
use std::sync::OnceLock;

/// `p` over `q`, with the convention that out-of-range arguments give 0
/// (in particular negative `p` or `q`, and `q > p`).
pub fn binomial(p: i64, q: i64) -> BigInt {
    if p < 0 || q < 0 || q > p {
        return BigInt::zero();
    }
    let q = q.min(p - q);
    let mut acc = BigInt::one();
    for k in 0..q {
        acc = acc * BigInt::from(p - k) / BigInt::from(k + 1);
    }
    acc
}

/// `n!` for `n >= 0`; negative arguments give 1 (empty product).
pub fn factorial(n: i64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

fn stirling_cache() -> &'static Mutex<HashMap<(i64, i64), BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<(i64, i64), BigInt>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Stirling number of the second kind: the number of `q`-partitions of a
/// `p`-element set, with `S(0,0) = 1` and 0 outside `p >= q >= 1`.
///
/// Computed by the recurrence `S(p,q) = q S(p-1,q) + S(p-1,q-1)` with a
/// process-wide memo table (idempotent fill, safe for concurrent readers).
pub fn stirling2(p: i64, q: i64) -> BigInt {
    if p == 0 && q == 0 {
        return BigInt::one();
    }
    if q < 1 || q > p {
        return BigInt::zero();
    }
    if let Some(v) = stirling_cache().lock().unwrap().get(&(p, q)) {
        return v.clone();
    }
    let v = BigInt::from(q) * stirling2(p - 1, q) + stirling2(p - 1, q - 1);
    stirling_cache()
        .lock()
        .unwrap()
        .entry((p, q))
        .or_insert(v)
        .clone()
}

/// Entry of the anchored chain matrix: the number of strictly increasing
/// chains of nonempty subsets ending exactly at the full vertex set,
/// `(p+1)! S(n+1, p+1)`.
pub fn breve_cad_plus_entry(n: i64, p: i64) -> BigInt {
    factorial(p + 1) * stirling2(n + 1, p + 1)
}

/// Entry of the chain matrix counting all strictly increasing chains of
/// nonempty subsets of an `(n+1)`-vertex set, obtained as a binomially
/// weighted sum of anchored counts.
pub fn cad_plus_entry(n: i64, p: i64) -> BigInt {
    let mut acc = BigInt::zero();
    let lo = p.max(-1);
    if n >= lo {
        for k in lo..=n {
            acc += binomial(n + 1, k + 1) * breve_cad_plus_entry(k, p);
        }
    }
    acc
}

/// Entry of the relaxed chain matrix (first member may repeat the empty
/// set), the cone of the strict-chain row.
pub fn cad_entry(n: i64, p: i64) -> BigInt {
    if p == -1 {
        cad_plus_entry(n, -1)
    } else {
        cad_plus_entry(n, p) + cad_plus_entry(n, p - 1)
    }
}

/// Brute-force oracle: counts chains `∅ ⊂ N_0 ⊂ … ⊂ N_p ⊆ {0..n}` of
/// nonempty, strictly increasing subsets by explicit enumeration. With
/// `anchored` set, the last member must be the full set `{0..n}`.
///
/// `p = -1` counts the single empty chain (1 unanchored; anchored only
/// when `n = -1`). Exponential in `n`; intended for `n <= 12`.
pub fn enumerate_strict_chains(n: i64, p: i64, anchored: bool) -> BigInt {
    if p < -1 {
        return BigInt::zero();
    }
    if p == -1 {
        return if !anchored || n == -1 {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    if n < 0 {
        return BigInt::zero();
    }
    let full: u64 = (1u64 << (n + 1)) - 1;
    let mut count: u64 = 0;
    // stack of (previous set, depth); depth counts members chosen so far
    fn rec(prev: u64, depth: i64, p: i64, full: u64, anchored: bool, count: &mut u64) {
        if depth == p + 1 {
            if !anchored || prev == full {
                *count += 1;
            }
            return;
        }
        // enumerate proper supersets of prev inside full
        let free = full & !prev;
        // iterate nonempty subsets of free
        let mut s = free;
        while s != 0 {
            rec(prev | s, depth + 1, p, full, anchored, count);
            s = (s - 1) & free;
        }
    }
    rec(0, 0, p, full, anchored, &mut count);
    BigInt::from(count)
}

/// Brute-force oracle for [`stirling2`]: counts `q`-partitions of
/// `{1..p}` by enumerating all assignments of elements to blocks.
pub fn enumerate_partitions(p: i64, q: i64) -> BigInt {
    if p == 0 && q == 0 {
        return BigInt::one();
    }
    if q < 1 || q > p {
        return BigInt::zero();
    }
    // assign each of p elements to one of q blocks; count surjective
    // assignments up to block permutation by requiring first-use order
    fn rec(elem: i64, used: i64, p: i64, q: i64) -> u64 {
        if elem == p {
            return if used == q { 1 } else { 0 };
        }
        let mut total = used as u64 * rec(elem + 1, used, p, q);
        if used < q {
            total += rec(elem + 1, used + 1, p, q);
        }
        total
    }
    BigInt::from(rec(0, 0, p, q))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(3, 2), b(3));
        assert_eq!(binomial(5, 7), b(0));
        assert_eq!(binomial(10, 5), b(252));
        assert_eq!(binomial(-1, 0), b(0));
        assert_eq!(binomial(4, -1), b(0));
    }

    #[test]
    fn binomial_product_oracle() {
        // independent product formula p(p-1)…(p-q+1)/q!
        for p in 0..=12i64 {
            for q in 0..=p {
                let mut num = BigInt::one();
                for k in 0..q {
                    num *= b(p - k);
                }
                assert_eq!(binomial(p, q), num / factorial(q));
            }
        }
    }

    #[test]
    fn pascal_recurrence() {
        for p in 1..=20i64 {
            for q in 0..=p {
                assert_eq!(binomial(p, q), binomial(p - 1, q - 1) + binomial(p - 1, q));
            }
        }
    }

    #[test]
    fn stirling_values() {
        assert_eq!(stirling2(0, 0), b(1));
        assert_eq!(stirling2(4, 2), b(7));
        assert_eq!(stirling2(3, 5), b(0));
    }

    #[test]
    fn stirling_partition_oracle() {
        for p in 0..=8i64 {
            for q in 0..=p {
                assert_eq!(stirling2(p, q), enumerate_partitions(p, q), "S({p},{q})");
            }
        }
    }

    #[test]
    fn breve_cad_plus_values() {
        assert_eq!(breve_cad_plus_entry(3, 2), b(36));
        assert_eq!(breve_cad_plus_entry(-1, -1), b(1));
        assert_eq!(
            breve_cad_plus_entry(8, 3),
            enumerate_strict_chains(8, 3, true)
        );
    }

    #[test]
    fn cad_plus_values() {
        assert_eq!(cad_plus_entry(3, 1), b(50));
        assert_eq!(cad_plus_entry(6, 6), b(5040));
        assert_eq!(cad_plus_entry(5, 2), b(2100));
        assert_eq!(enumerate_strict_chains(2, 1, false), b(12));
    }

    #[test]
    fn chain_oracle_matches_closed_forms() {
        for n in -1..=8i64 {
            for p in -1..=n {
                assert_eq!(
                    enumerate_strict_chains(n, p, true),
                    breve_cad_plus_entry(n, p),
                    "anchored ({n},{p})"
                );
                assert_eq!(
                    enumerate_strict_chains(n, p, false),
                    cad_plus_entry(n, p),
                    "unanchored ({n},{p})"
                );
            }
            assert_eq!(enumerate_strict_chains(n, -1, false), b(1));
        }
    }

    #[test]
    fn breve_cad_vanishes_below_diagonal() {
        for p in 0..=6i64 {
            for k in -1..p {
                assert_eq!(breve_cad_plus_entry(k, p), b(0));
            }
        }
    }

    #[test]
    fn cad_cone_relation() {
        // cad[1] = (1,4,5,2)
        assert_eq!(cad_entry(1, -1), b(1));
        assert_eq!(cad_entry(1, 0), b(4));
        assert_eq!(cad_entry(1, 1), b(5));
        assert_eq!(cad_entry(1, 2), b(2));
    }
}
