//! Elementary arithmetic functions: divisor lists, the Mobius function,
//! multi-argument gcd, and the coprime-interval counter `Phi([a,b], n)`.
//!
//! Divisor lists and Mobius values are memoized in shared concurrent caches;
//! the nested sums in [`crate::formulas`] query the same small moduli
//! millions of times.

use std::sync::{Arc, LazyLock};

use dashmap::DashMap;
use num_integer::Integer;

use crate::count::Count;
use crate::error::{Error, Result};

static DIVISOR_CACHE: LazyLock<DashMap<u64, Arc<[u64]>>> = LazyLock::new(DashMap::new);
static MOBIUS_CACHE: LazyLock<DashMap<u64, i8>> = LazyLock::new(DashMap::new);

/// All positive divisors of `n`, in increasing order.
pub fn divisors(n: u64) -> Result<Arc<[u64]>> {
    if n == 0 {
        return Err(Error::ZeroArgument("n"));
    }
    if let Some(hit) = DIVISOR_CACHE.get(&n) {
        return Ok(Arc::clone(&hit));
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    let list: Arc<[u64]> = small.into();
    DIVISOR_CACHE.insert(n, Arc::clone(&list));
    Ok(list)
}

/// The Mobius function: +1 on squarefree values with an even number of
/// prime factors, -1 for an odd number, 0 if a squared prime divides `d`.
pub fn mobius(d: u64) -> Result<i8> {
    if d == 0 {
        return Err(Error::ZeroArgument("d"));
    }
    if let Some(hit) = MOBIUS_CACHE.get(&d) {
        return Ok(*hit);
    }
    let value = mobius_by_factoring(d);
    MOBIUS_CACHE.insert(d, value);
    Ok(value)
}

fn mobius_by_factoring(d: u64) -> i8 {
    let mut rest = d;
    let mut prime_count = 0u32;
    let mut p = 2u64;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            rest /= p;
            if rest.is_multiple_of(p) {
                return 0; // squared factor
            }
            prime_count += 1;
        }
        p += 1;
    }
    if rest > 1 {
        prime_count += 1;
    }
    if prime_count.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// gcd of every value in the sequence. `gcd(a, 0) = a`; the fold
/// short-circuits once the running gcd reaches 1.
pub fn gcd_fold(values: &[u64]) -> Result<u64> {
    if values.is_empty() {
        return Err(Error::EmptyGcd);
    }
    let mut g = 0u64;
    for &v in values {
        g = g.gcd(&v);
        if g == 1 {
            return Ok(1);
        }
    }
    if g == 0 {
        return Err(Error::AllZeroGcd);
    }
    Ok(g)
}

/// Number of integers in `[a, b]` coprime to `n`, computed by the divisor
/// sum `sum_{d|n} mu(d) (floor(b/d) - floor((a-1)/d))`, never by scanning
/// the interval.
pub fn phi_interval(a: u64, b: u64, n: u64) -> Result<Count> {
    if a == 0 {
        return Err(Error::ZeroArgument("a"));
    }
    if n == 0 {
        return Err(Error::ZeroArgument("n"));
    }
    if a > b {
        return Err(Error::IntervalOutOfOrder { a, b });
    }
    let mut total: i128 = 0;
    for &d in divisors(n)?.iter() {
        let mu = mobius(d)?;
        if mu == 0 {
            continue;
        }
        let term = (b / d) as i128 - ((a - 1) / d) as i128;
        total += i128::from(mu) * term;
    }
    debug_assert!(total >= 0);
    Count::new(total as u128)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn phi_scan(a: u64, b: u64, n: u64) -> u128 {
        (a..=b).filter(|&c| c.gcd(&n) == 1).count() as u128
    }

    #[test]
    fn divisors_examples() {
        assert_eq!(divisors(1).unwrap().as_ref(), &[1]);
        assert_eq!(divisors(12).unwrap().as_ref(), &[1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(7).unwrap().as_ref(), &[1, 7]);
        assert!(divisors(0).is_err());
    }

    #[test]
    fn divisor_list_invariants() {
        for n in 1..=400u64 {
            let list = divisors(n).unwrap();
            assert!(list.windows(2).all(|w| w[0] < w[1]));
            assert!(list.iter().all(|&d| n % d == 0));
            assert_eq!(list[0], 1);
            assert_eq!(*list.last().unwrap(), n);
            // product pairing
            for &d in list.iter() {
                assert!(list.contains(&(n / d)));
            }
        }
    }

    #[test]
    fn mobius_examples() {
        assert_eq!(mobius(1).unwrap(), 1);
        assert_eq!(mobius(6).unwrap(), 1);
        assert_eq!(mobius(12).unwrap(), 0);
        assert_eq!(mobius(2).unwrap(), -1);
        assert_eq!(mobius(30).unwrap(), -1);
        assert!(mobius(0).is_err());
    }

    #[test]
    fn mobius_divisor_sum_collapses() {
        // sum_{d|n} mu(d) = [n == 1]
        for n in 1..=500u64 {
            let s: i32 = divisors(n)
                .unwrap()
                .iter()
                .map(|&d| i32::from(mobius(d).unwrap()))
                .sum();
            assert_eq!(s, i32::from(n == 1), "n = {n}");
        }
    }

    #[test]
    fn gcd_fold_examples() {
        assert_eq!(gcd_fold(&[10, 6]).unwrap(), 2);
        assert_eq!(gcd_fold(&[42]).unwrap(), 42);
        assert_eq!(gcd_fold(&[12, 12, 2]).unwrap(), 2);
        assert_eq!(gcd_fold(&[5, 0]).unwrap(), 5);
        assert!(gcd_fold(&[]).is_err());
        assert!(gcd_fold(&[0, 0]).is_err());
    }

    #[test]
    fn phi_interval_examples() {
        assert_eq!(phi_interval(5, 9, 1).unwrap().get(), 5);
        assert_eq!(phi_interval(3, 10, 6).unwrap().get(), 2);
        assert_eq!(phi_interval(1, 12, 12).unwrap().get(), 4);
        assert!(phi_interval(4, 3, 5).is_err());
        assert!(phi_interval(1, 2, 0).is_err());
        assert!(phi_interval(0, 2, 3).is_err());
    }

    #[test]
    fn phi_interval_matches_scan_small_grid() {
        for n in 1..=40u64 {
            for a in 1..=30u64 {
                for b in a..=30u64 {
                    assert_eq!(
                        phi_interval(a, b, n).unwrap().get(),
                        phi_scan(a, b, n),
                        "a={a} b={b} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn phi_full_interval_is_totient() {
        // Phi([1,n], n) = phi(n), via the factorization formula.
        for n in 1..=10_000u64 {
            let mut tot = n;
            let mut rest = n;
            let mut p = 2u64;
            while p * p <= rest {
                if rest % p == 0 {
                    while rest % p == 0 {
                        rest /= p;
                    }
                    tot = tot / p * (p - 1);
                }
                p += 1;
            }
            if rest > 1 {
                tot = tot / rest * (rest - 1);
            }
            assert_eq!(phi_interval(1, n, n).unwrap().get(), u128::from(tot));
        }
    }

    proptest! {
        #[test]
        fn phi_interval_additivity(a in 1u64..200, len1 in 0u64..100, len2 in 1u64..100, n in 1u64..500) {
            let b = a + len1;
            let c = b + len2;
            let left = phi_interval(a, b, n).unwrap().get();
            let right = phi_interval(b + 1, c, n).unwrap().get();
            let whole = phi_interval(a, c, n).unwrap().get();
            prop_assert_eq!(left + right, whole);
        }
    }
}
