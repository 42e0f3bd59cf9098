//! Exact counting of partitions, relatively prime partitions, and
//! partitions relatively prime to a modulus, via finite Mobius-weighted
//! nested sums.
//!
//! The central routine is a variable-depth recursion: each level fixes one
//! part (bounded below by the previous part, above by what the remaining
//! slots can absorb) and folds it into a running gcd modulus; with two
//! parts left, a closed-form divisor sum over that modulus finishes the
//! count. Everything else is lifted from this kernel: summing over the
//! smallest part gives exact-k counts, over k gives totals, and over the
//! divisors of n converts relatively-prime counts into unrestricted ones.

use dashmap::DashMap;
use num_integer::Integer;
use rayon::prelude::*;

use crate::arith::{divisors, mobius};
use crate::count::{add_raw, Count};
use crate::error::{Error, Result};

/// Which gcd condition the counted partitions must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoprimalityClass {
    /// No gcd condition.
    Unrestricted,
    /// Parts have collective gcd 1.
    RelPrime,
    /// Parts together with `m` have gcd 1.
    RelPrimeTo(u64),
}

/// Constraint on the smallest part of a partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmallestPart {
    /// Smallest part is exactly `l`.
    Exact(u64),
    /// No part is smaller than `l`.
    AtLeast(u64),
}

/// One query against the counting functions: partitions of `n`, optionally
/// into exactly `parts` parts, optionally with a smallest-part constraint,
/// under a coprimality class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartitionQuery {
    pub n: u64,
    pub parts: Option<u64>,
    pub smallest: Option<SmallestPart>,
    pub class: CoprimalityClass,
}

/// State of the nested-sum recursion: `remaining` still to distribute over
/// `parts_left` parts, each at least `min_part`, with `gcd_acc` the gcd of
/// n, the modulus, and every part fixed so far.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct EvalFrame {
    remaining: u64,
    parts_left: u64,
    min_part: u64,
    gcd_acc: u64,
}

/// Evaluator for the counting formulas, with an optional memo cache on
/// recursion frames (off by default; the formulas share massive
/// substructure, so the cache changes the complexity class).
#[derive(Debug, Default)]
pub struct Evaluator {
    memo: Option<DashMap<EvalFrame, u128>>,
}

fn require_positive(value: u64, name: &'static str) -> Result<()> {
    if value == 0 {
        Err(Error::ZeroArgument(name))
    } else {
        Ok(())
    }
}

/// Closed form for partitions of `n` into two parts, both at least `l`,
/// relatively prime to `modulus`:
/// `sum_{d | gcd(n, modulus)} mu(d) (floor(n/2d) - floor((l-1)/d))`.
/// Returns 0 when `n < 2` or `l > floor(n/2)`.
fn two_part_ge(n: u64, l: u64, modulus: u64) -> Result<u128> {
    if n < 2 || l > n / 2 {
        return Ok(0);
    }
    let g = n.gcd(&modulus);
    let mut total: i128 = 0;
    for &d in divisors(g)?.iter() {
        let mu = mobius(d)?;
        if mu == 0 {
            continue;
        }
        let term = (n / (2 * d)) as i128 - ((l - 1) / d) as i128;
        total += i128::from(mu) * term;
    }
    debug_assert!(total >= 0, "two-part divisor sum went negative");
    Ok(total as u128)
}

impl Evaluator {
    /// Evaluator with the frame cache enabled or disabled.
    pub fn new(memo: bool) -> Self {
        Evaluator {
            memo: memo.then(DashMap::new),
        }
    }

    pub fn memo_enabled(&self) -> bool {
        self.memo.is_some()
    }

    /// p_{Psi(gcd_acc)}(remaining, parts_left, >= min_part), for
    /// parts_left >= 2. The recursion that realizes the nested sums: one
    /// part per level, closed by the two-part divisor sum.
    fn min_part_frames(&self, frame: EvalFrame) -> Result<u128> {
        let EvalFrame {
            remaining,
            parts_left,
            min_part,
            gcd_acc,
        } = frame;
        debug_assert!(parts_left >= 2 && min_part >= 1);
        if remaining < parts_left.saturating_mul(min_part) {
            return Ok(0);
        }
        if parts_left == 2 {
            return two_part_ge(remaining, min_part, gcd_acc);
        }
        if let Some(cache) = &self.memo {
            if let Some(hit) = cache.get(&frame) {
                return Ok(*hit);
            }
        }
        let mut total: u128 = 0;
        for part in min_part..=remaining / parts_left {
            let child = EvalFrame {
                remaining: remaining - part,
                parts_left: parts_left - 1,
                min_part: part,
                // gcd 1 is absorbing; skip the fold once reached
                gcd_acc: if gcd_acc == 1 { 1 } else { gcd_acc.gcd(&part) },
            };
            total = add_raw(total, self.min_part_frames(child)?, "nested-sum accumulation")?;
        }
        if let Some(cache) = &self.memo {
            cache.insert(frame, total);
        }
        Ok(total)
    }

    /// p_{Psi(m)}(n, 2, >= l): partitions of n into two parts, both at
    /// least l, relatively prime to m. Returns 0 when l > floor(n/2).
    pub fn count_two_parts_min(&self, n: u64, l: u64, m: u64) -> Result<Count> {
        if n < 2 {
            return Err(Error::InvalidQuery {
                field: "n",
                reason: format!("two-part counts need n >= 2, got {n}"),
            });
        }
        require_positive(l, "l")?;
        require_positive(m, "m")?;
        Count::new(two_part_ge(n, l, m)?)
    }

    /// p_{Psi(m)}(n, k, l): partitions of n into exactly k parts with
    /// smallest part exactly l, relatively prime to m. Returns 0 when
    /// k > n or l > floor(n/k).
    pub fn count_exact_smallest(&self, n: u64, k: u64, l: u64, m: u64) -> Result<Count> {
        require_positive(n, "n")?;
        require_positive(k, "k")?;
        require_positive(l, "l")?;
        require_positive(m, "m")?;
        if k > n || l > n / k {
            return Ok(Count::ZERO);
        }
        let raw = match k {
            1 => u128::from(l == n && n.gcd(&m) == 1),
            2 => {
                // exact smallest = (min >= l) - (min >= l+1)
                let ge_l = two_part_ge(n, l, m)?;
                let ge_next = two_part_ge(n, l + 1, m)?;
                ge_l - ge_next
            }
            _ => {
                let frame = EvalFrame {
                    remaining: n - l,
                    parts_left: k - 1,
                    min_part: l,
                    gcd_acc: n.gcd(&m).gcd(&l),
                };
                self.min_part_frames(frame)?
            }
        };
        Count::new(raw)
    }

    /// p_{Psi}(n, k, l): relatively prime partitions with exact smallest
    /// part l. Same as `count_exact_smallest` with modulus n.
    pub fn count_relprime_exact_smallest(&self, n: u64, k: u64, l: u64) -> Result<Count> {
        require_positive(n, "n")?;
        self.count_exact_smallest(n, k, l, n)
    }

    /// p_{Psi(m)}(n, k, >= l): smallest part at least l, by summing the
    /// exact-smallest counts over l..floor(n/k).
    pub fn count_min_part(&self, n: u64, k: u64, l: u64, m: u64) -> Result<Count> {
        require_positive(n, "n")?;
        require_positive(k, "k")?;
        require_positive(l, "l")?;
        require_positive(m, "m")?;
        if k > n || l > n / k {
            return Ok(Count::ZERO);
        }
        let mut total = Count::ZERO;
        for j in l..=n / k {
            total = total.checked_add(self.count_exact_smallest(n, k, j, m)?)?;
        }
        Ok(total)
    }

    /// p_{Psi(m)}(n, k): partitions of n into exactly k parts relatively
    /// prime to m, summing over the smallest part i0 = 1..floor(n/k).
    pub fn count_with_k_parts_relprime_to_m(&self, n: u64, k: u64, m: u64) -> Result<Count> {
        require_positive(n, "n")?;
        require_positive(k, "k")?;
        require_positive(m, "m")?;
        if k > n {
            return Ok(Count::ZERO);
        }
        let mut total = Count::ZERO;
        for smallest in 1..=n / k {
            total = total.checked_add(self.count_exact_smallest(n, k, smallest, m)?)?;
        }
        Ok(total)
    }

    /// p_{Psi}(n, k): relatively prime partitions into exactly k parts.
    pub fn count_with_k_parts_relprime(&self, n: u64, k: u64) -> Result<Count> {
        require_positive(n, "n")?;
        self.count_with_k_parts_relprime_to_m(n, k, n)
    }

    /// p(n, k): unrestricted partitions into exactly k parts, lifted from
    /// the relatively prime counts over the divisors of n.
    pub fn count_with_k_parts(&self, n: u64, k: u64) -> Result<Count> {
        require_positive(n, "n")?;
        require_positive(k, "k")?;
        if k > n {
            return Ok(Count::ZERO);
        }
        let raw = divisors(n)?
            .par_iter()
            .map(|&d| Ok(self.count_with_k_parts_relprime(d, k)?.get()))
            .try_reduce(|| 0u128, |a, b| add_raw(a, b, "divisor sum"))?;
        Count::new(raw)
    }

    /// p_{Psi(m)}(n): partitions of n relatively prime to m, summing the
    /// exact-k counts over k = 1..n.
    pub fn count_relprime_to_m(&self, n: u64, m: u64) -> Result<Count> {
        require_positive(n, "n")?;
        require_positive(m, "m")?;
        let raw = (1..=n)
            .into_par_iter()
            .map(|k| Ok(self.count_with_k_parts_relprime_to_m(n, k, m)?.get()))
            .try_reduce(|| 0u128, |a, b| add_raw(a, b, "part-count sum"))?;
        Count::new(raw)
    }

    /// p_{Psi}(n): relatively prime partitions of n.
    pub fn count_relprime(&self, n: u64) -> Result<Count> {
        require_positive(n, "n")?;
        self.count_relprime_to_m(n, n)
    }

    /// p(n): all partitions of n, as the divisor sum of the relatively
    /// prime counts. Evaluated entirely through the nested-sum machinery.
    pub fn count_all(&self, n: u64) -> Result<Count> {
        require_positive(n, "n")?;
        let raw = divisors(n)?
            .par_iter()
            .map(|&d| Ok(self.count_relprime(d)?.get()))
            .try_reduce(|| 0u128, |a, b| add_raw(a, b, "divisor sum"))?;
        Count::new(raw)
    }

    /// Dispatch front door: route a query to the matching operation.
    pub fn evaluate(&self, query: &PartitionQuery) -> Result<Count> {
        require_positive(query.n, "n")?;
        if let Some(k) = query.parts {
            require_positive(k, "parts")?;
        }
        let n = query.n;
        match (query.parts, query.smallest, query.class) {
            (_, Some(SmallestPart::Exact(0) | SmallestPart::AtLeast(0)), _) => {
                Err(Error::ZeroArgument("smallest"))
            }
            (_, _, CoprimalityClass::RelPrimeTo(0)) => Err(Error::ZeroArgument("m")),
            (None, Some(_), _) => Err(Error::InvalidQuery {
                field: "smallest",
                reason: "a smallest-part constraint requires `parts`".into(),
            }),
            (None, None, CoprimalityClass::Unrestricted) => self.count_all(n),
            (None, None, CoprimalityClass::RelPrime) => self.count_relprime(n),
            (None, None, CoprimalityClass::RelPrimeTo(m)) => self.count_relprime_to_m(n, m),
            (Some(k), None, CoprimalityClass::Unrestricted) => self.count_with_k_parts(n, k),
            (Some(k), None, CoprimalityClass::RelPrime) => self.count_with_k_parts_relprime(n, k),
            (Some(k), None, CoprimalityClass::RelPrimeTo(m)) => {
                self.count_with_k_parts_relprime_to_m(n, k, m)
            }
            (Some(k), Some(SmallestPart::Exact(l)), class) => {
                let m = match class {
                    CoprimalityClass::Unrestricted => 1,
                    CoprimalityClass::RelPrime => n,
                    CoprimalityClass::RelPrimeTo(m) => m,
                };
                self.count_exact_smallest(n, k, l, m)
            }
            (Some(k), Some(SmallestPart::AtLeast(l)), class) => {
                let m = match class {
                    CoprimalityClass::Unrestricted => 1,
                    CoprimalityClass::RelPrime => n,
                    CoprimalityClass::RelPrimeTo(m) => m,
                };
                self.count_min_part(n, k, l, m)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use proptest::prelude::*;

    fn ev() -> Evaluator {
        Evaluator::new(false)
    }

    fn oracle_count(
        n: u64,
        parts: Option<u64>,
        smallest: Option<SmallestPart>,
        class: CoprimalityClass,
    ) -> u128 {
        oracle::count_oracle(&PartitionQuery {
            n,
            parts,
            smallest,
            class,
        })
        .unwrap()
        .get()
    }

    #[test]
    fn two_parts_min_examples() {
        let e = ev();
        assert_eq!(e.count_two_parts_min(10, 2, 6).unwrap().get(), 2);
        assert_eq!(e.count_two_parts_min(7, 1, 1).unwrap().get(), 3);
        assert_eq!(e.count_two_parts_min(8, 1, 8).unwrap().get(), 2);
        // l beyond floor(n/2) is the zero convention, not an error
        assert_eq!(e.count_two_parts_min(10, 6, 3).unwrap().get(), 0);
        assert!(e.count_two_parts_min(1, 1, 1).is_err());
        assert!(e.count_two_parts_min(10, 0, 1).is_err());
        assert!(e.count_two_parts_min(10, 1, 0).is_err());
    }

    #[test]
    fn exact_smallest_examples() {
        let e = ev();
        assert_eq!(e.count_exact_smallest(12, 3, 2, 12).unwrap().get(), 2);
        assert_eq!(e.count_exact_smallest(9, 3, 1, 6).unwrap().get(), 4);
        assert_eq!(e.count_exact_smallest(5, 5, 1, 7).unwrap().get(), 1);
        assert!(e.count_exact_smallest(5, 0, 1, 1).is_err());
    }

    #[test]
    fn relprime_exact_smallest_examples() {
        let e = ev();
        assert_eq!(e.count_relprime_exact_smallest(12, 3, 2).unwrap().get(), 2);
        assert_eq!(e.count_relprime_exact_smallest(4, 2, 2).unwrap().get(), 0);
        // single part n: gcd(n, n) = n, so only n = 1 qualifies
        assert_eq!(e.count_relprime_exact_smallest(1, 1, 1).unwrap().get(), 1);
        for n in 2..=12 {
            assert_eq!(e.count_relprime_exact_smallest(n, 1, n).unwrap().get(), 0);
        }
    }

    #[test]
    fn min_part_examples() {
        let e = ev();
        assert_eq!(e.count_min_part(10, 2, 2, 6).unwrap().get(), 2);
        assert_eq!(
            e.count_min_part(10, 2, 2, 6).unwrap(),
            e.count_two_parts_min(10, 2, 6).unwrap()
        );
        assert_eq!(e.count_min_part(12, 3, 2, 12).unwrap().get(), 3);
        // m = 1, min part 1 is the unrestricted p(n, k)
        for n in 1..=15u64 {
            for k in 1..=n {
                assert_eq!(
                    e.count_min_part(n, k, 1, 1).unwrap(),
                    e.count_with_k_parts(n, k).unwrap()
                );
            }
        }
    }

    #[test]
    fn k_parts_relprime_to_m_examples() {
        let e = ev();
        assert_eq!(e.count_with_k_parts_relprime_to_m(4, 2, 2).unwrap().get(), 1);
        assert_eq!(e.count_with_k_parts_relprime_to_m(6, 3, 1).unwrap().get(), 3);
        assert_eq!(e.count_with_k_parts_relprime_to_m(5, 6, 4).unwrap().get(), 0);
    }

    #[test]
    fn k_parts_relprime_examples() {
        let e = ev();
        assert_eq!(e.count_with_k_parts_relprime(6, 3).unwrap().get(), 2);
        assert_eq!(e.count_with_k_parts_relprime(7, 2).unwrap().get(), 3);
        assert_eq!(e.count_with_k_parts_relprime(1, 1).unwrap().get(), 1);
    }

    #[test]
    fn k_parts_examples() {
        let e = ev();
        assert_eq!(e.count_with_k_parts(5, 2).unwrap().get(), 2);
        assert_eq!(e.count_with_k_parts(9, 4).unwrap().get(), 6);
        for n in 1..=20 {
            assert_eq!(e.count_with_k_parts(n, n).unwrap().get(), 1);
        }
    }

    #[test]
    fn relprime_to_m_examples() {
        let e = ev();
        assert_eq!(e.count_relprime_to_m(4, 2).unwrap().get(), 3);
        assert_eq!(e.count_relprime_to_m(6, 6).unwrap().get(), 7);
        // m = 1 removes the gcd condition
        for n in 1..=15 {
            assert_eq!(
                e.count_relprime_to_m(n, 1).unwrap(),
                e.count_all(n).unwrap()
            );
        }
    }

    #[test]
    fn relprime_examples() {
        let e = ev();
        assert_eq!(e.count_relprime(6).unwrap().get(), 7);
        assert_eq!(e.count_relprime(1).unwrap().get(), 1);
        assert_eq!(e.count_relprime(7).unwrap().get(), 14);
    }

    #[test]
    fn count_all_examples() {
        let e = ev();
        assert_eq!(e.count_all(1).unwrap().get(), 1);
        assert_eq!(e.count_all(6).unwrap().get(), 11);
        assert_eq!(e.count_all(10).unwrap().get(), 42);
        assert!(e.count_all(0).is_err());
    }

    #[test]
    fn evaluate_dispatch() {
        let e = ev();
        let q = PartitionQuery {
            n: 6,
            parts: None,
            smallest: None,
            class: CoprimalityClass::Unrestricted,
        };
        assert_eq!(e.evaluate(&q).unwrap().get(), 11);

        let q = PartitionQuery {
            n: 10,
            parts: Some(2),
            smallest: Some(SmallestPart::AtLeast(2)),
            class: CoprimalityClass::RelPrimeTo(6),
        };
        assert_eq!(e.evaluate(&q).unwrap().get(), 2);

        let q = PartitionQuery {
            n: 5,
            parts: Some(6),
            smallest: None,
            class: CoprimalityClass::Unrestricted,
        };
        assert_eq!(e.evaluate(&q).unwrap().get(), 0);

        let bad = PartitionQuery {
            n: 5,
            parts: None,
            smallest: Some(SmallestPart::Exact(1)),
            class: CoprimalityClass::Unrestricted,
        };
        match e.evaluate(&bad) {
            Err(Error::InvalidQuery { field, .. }) => assert_eq!(field, "smallest"),
            other => panic!("expected InvalidQuery, got {other:?}"),
        }
    }

    #[test]
    fn memoized_matches_unmemoized() {
        let plain = Evaluator::new(false);
        let memo = Evaluator::new(true);
        for n in 1..=18u64 {
            assert_eq!(plain.count_all(n).unwrap(), memo.count_all(n).unwrap());
            for k in 1..=n {
                assert_eq!(
                    plain.count_with_k_parts_relprime(n, k).unwrap(),
                    memo.count_with_k_parts_relprime(n, k).unwrap()
                );
            }
        }
    }

    #[test]
    fn recursion_step_identity() {
        // p_{Psi(m)}(n,k,l) = p_{Psi(gcd(m,l))}(n-l, k-1, >= l) for k > 1
        let e = ev();
        for n in 2..=18u64 {
            for m in 1..=8u64 {
                for k in 2..=n {
                    for l in 1..=n / k {
                        let lhs = e.count_exact_smallest(n, k, l, m).unwrap();
                        let rhs = e
                            .count_min_part(n - l, k - 1, l, m.gcd(&l))
                            .unwrap();
                        assert_eq!(lhs, rhs, "n={n} k={k} l={l} m={m}");
                    }
                }
            }
        }
    }

    #[test]
    fn monotone_in_n() {
        let e = Evaluator::new(true);
        let mut prev = Count::ZERO;
        for n in 1..=30u64 {
            let cur = e.count_all(n).unwrap();
            assert!(cur > prev, "p({n}) not above p({})", n - 1);
            prev = cur;
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn matches_oracle_on_random_queries(
            n in 1u64..=16,
            k in 1u64..=8,
            l in 1u64..=5,
            m in 1u64..=10,
            shape in 0u8..5,
        ) {
            let e = ev();
            let (parts, smallest, class) = match shape {
                0 => (None, None, CoprimalityClass::RelPrimeTo(m)),
                1 => (Some(k), None, CoprimalityClass::RelPrimeTo(m)),
                2 => (Some(k), Some(SmallestPart::Exact(l)), CoprimalityClass::RelPrimeTo(m)),
                3 => (Some(k), Some(SmallestPart::AtLeast(l)), CoprimalityClass::RelPrime),
                _ => (Some(k), None, CoprimalityClass::Unrestricted),
            };
            let query = PartitionQuery { n, parts, smallest, class };
            let fast = e.evaluate(&query).unwrap();
            let slow = oracle_count(n, parts, smallest, class);
            prop_assert_eq!(fast.get(), slow);
        }
    }
}
