//! Classical recurrences and inversion identities: a second independent
//! oracle for the nested-sum formulas and the baseline for benchmarking.
//!
//! Also home of the verification suites driven by `partcount verify`.

use num_integer::Integer;

use crate::arith::{divisors, gcd_fold, mobius, phi_interval};
use crate::count::{add_signed, Count};
use crate::error::{Error, Result};
use crate::formulas::{CoprimalityClass, Evaluator, PartitionQuery, SmallestPart};
use crate::oracle;

/// Table of p(0..=max_n). Index 0 holds the internal convention p(0) = 1;
/// the public counting surface rejects n = 0.
#[derive(Debug, Clone)]
pub struct CountTable {
    values: Vec<Count>,
}

impl CountTable {
    pub fn max_n(&self) -> u64 {
        (self.values.len() - 1) as u64
    }

    pub fn get(&self, n: u64) -> Count {
        self.values[n as usize]
    }
}

/// p(n) for n = 0..=max_n via Euler's pentagonal-number recurrence.
pub fn p_table_pentagonal(max_n: u64) -> Result<CountTable> {
    if max_n == 0 {
        return Err(Error::ZeroArgument("max_n"));
    }
    let len = max_n as usize + 1;
    let mut values = vec![Count::ZERO; len];
    values[0] = Count::ONE;
    for n in 1..len {
        let mut acc: i128 = 0;
        let mut j: usize = 1;
        loop {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > n {
                break;
            }
            let sign: i128 = if j % 2 == 1 { 1 } else { -1 };
            acc = add_signed(acc, sign * values[n - g1].get() as i128, "pentagonal sum")
                .map_err(|_| overflow_at(n))?;
            let g2 = j * (3 * j + 1) / 2;
            if g2 <= n {
                acc = add_signed(acc, sign * values[n - g2].get() as i128, "pentagonal sum")
                    .map_err(|_| overflow_at(n))?;
            }
            j += 1;
        }
        debug_assert!(acc >= 0);
        values[n] = Count::new(acc as u128).map_err(|_| overflow_at(n))?;
    }
    Ok(CountTable { values })
}

fn overflow_at(n: usize) -> Error {
    Error::Overflow {
        context: format!("pentagonal table at n = {n}"),
    }
}

/// Table of p(n, k) for 0 <= n <= max_n, 0 <= k <= max_k, via the
/// dynamic program p(n, k) = p(n-1, k-1) + p(n-k, k).
#[derive(Debug, Clone)]
pub struct PartsTable {
    max_n: u64,
    max_k: u64,
    values: Vec<Count>,
}

impl PartsTable {
    pub fn max_n(&self) -> u64 {
        self.max_n
    }

    pub fn max_k(&self) -> u64 {
        self.max_k
    }

    pub fn get(&self, n: u64, k: u64) -> Count {
        if k > n {
            return Count::ZERO;
        }
        self.values[(n * (self.max_k + 1) + k) as usize]
    }
}

pub fn p_nk_table(max_n: u64, max_k: u64) -> Result<PartsTable> {
    if max_n == 0 {
        return Err(Error::ZeroArgument("max_n"));
    }
    if max_k == 0 {
        return Err(Error::ZeroArgument("max_k"));
    }
    let width = max_k as usize + 1;
    let mut values = vec![Count::ZERO; (max_n as usize + 1) * width];
    values[0] = Count::ONE; // p(0, 0) = 1
    for n in 1..=max_n as usize {
        for k in 1..=max_k.min(n as u64) as usize {
            let take_one = values[(n - 1) * width + (k - 1)];
            let shrink = if n >= k {
                values[(n - k) * width + k]
            } else {
                Count::ZERO
            };
            values[n * width + k] = take_one.checked_add(shrink)?;
        }
    }
    Ok(PartsTable {
        max_n,
        max_k,
        values,
    })
}

/// p_Psi(n) by Mobius inversion over a pentagonal p-table:
/// `sum_{d|n} mu(d) p(n/d)`.
pub fn relprime_by_inversion(n: u64) -> Result<Count> {
    if n == 0 {
        return Err(Error::ZeroArgument("n"));
    }
    let table = p_table_pentagonal(n)?;
    let mut acc: i128 = 0;
    for &d in divisors(n)?.iter() {
        let mu = mobius(d)?;
        if mu == 0 {
            continue;
        }
        acc = add_signed(
            acc,
            i128::from(mu) * table.get(n / d).get() as i128,
            "relprime inversion",
        )?;
    }
    if acc < 0 {
        return Err(Error::NegativeInversion { n });
    }
    Count::new(acc as u128)
}

/// p_Psi(n, k) by Mobius inversion over the p(n, k) table.
pub fn relprime_nk_by_inversion(n: u64, k: u64) -> Result<Count> {
    if n == 0 {
        return Err(Error::ZeroArgument("n"));
    }
    if k == 0 {
        return Err(Error::ZeroArgument("k"));
    }
    let table = p_nk_table(n, k)?;
    let mut acc: i128 = 0;
    for &d in divisors(n)?.iter() {
        let mu = mobius(d)?;
        if mu == 0 {
            continue;
        }
        acc = add_signed(
            acc,
            i128::from(mu) * table.get(n / d, k).get() as i128,
            "relprime inversion",
        )?;
    }
    if acc < 0 {
        return Err(Error::NegativeInversion { n });
    }
    Count::new(acc as u128)
}

/// Hardy-Ramanujan asymptotic `e^{pi sqrt(2n/3)} / (4 n sqrt(3))`.
/// Diagnostic only; the only floating point in the crate.
pub fn hardy_ramanujan_estimate(n: u64) -> f64 {
    let nf = n as f64;
    (std::f64::consts::PI * (2.0 * nf / 3.0).sqrt()).exp() / (4.0 * nf * 3.0f64.sqrt())
}

/// Result of one verification check.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub cases: u64,
    pub failure: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Structured pass/fail report from a verification suite.
#[derive(Debug, Clone, Default)]
pub struct CheckReport {
    pub checks: Vec<CheckResult>,
}

impl CheckReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.passed())
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.checks.extend(other.checks);
    }
}

struct Check {
    name: String,
    cases: u64,
    failure: Option<String>,
}

impl Check {
    fn new(name: &str) -> Self {
        Check {
            name: name.to_string(),
            cases: 0,
            failure: None,
        }
    }

    fn expect_eq(&mut self, lhs: Count, rhs: Count, site: impl Fn() -> String) {
        self.cases += 1;
        if self.failure.is_none() && lhs != rhs {
            self.failure = Some(format!("{}: {} != {}", site(), lhs, rhs));
        }
    }

    fn expect_eq_signed(&mut self, lhs: Count, rhs: i128, site: impl Fn() -> String) {
        self.cases += 1;
        if self.failure.is_none() && (rhs < 0 || lhs.get() != rhs as u128) {
            self.failure = Some(format!("{}: {} != {}", site(), lhs, rhs));
        }
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            name: self.name,
            cases: self.cases,
            failure: self.failure,
        }
    }
}

/// Exhaustively check the eight relating identities on the grid
/// n <= max_n, m <= max_m, all valid k and l, comparing the nested-sum
/// formulas against the enumerator and the classical recurrences.
pub fn identity_suite(max_n: u64, max_m: u64) -> Result<CheckReport> {
    if max_n < 2 {
        return Err(Error::InvalidQuery {
            field: "max_n",
            reason: "identity suite needs max_n >= 2".into(),
        });
    }
    if max_m == 0 {
        return Err(Error::ZeroArgument("max_m"));
    }
    let ev = Evaluator::new(true);
    let p_table = p_table_pentagonal(max_n)?;
    let pk_table = p_nk_table(max_n, max_n)?;

    let mut c1 = Check::new("1: modulus n collapses to the relprime count");
    let mut c2 = Check::new("2: p(n) = sum_{d|n} p_psi(d) and its inversion");
    let mut c3 = Check::new("3: p(n,k) = sum_{d|n} p_psi(d,k) and its inversion");
    let mut c4 = Check::new("4: p(n,k,l) = sum_{d|(n,l)} p_psi(n/d,k,l/d) and its inversion");
    let mut c5 = Check::new("5: summing over k recovers the totals");
    let mut c6 = Check::new("6: summing over the smallest part recovers p(n,k)");
    let mut c7 = Check::new("7: peeling the smallest part steps the recursion");
    let mut c8 = Check::new("8: min-part counts are suffix sums of exact-smallest counts");

    for n in 1..=max_n {
        // (1) whole-n level
        c1.expect_eq(
            ev.count_relprime_to_m(n, n)?,
            ev.count_relprime(n)?,
            || format!("n={n}"),
        );

        // (2) divisor sum against the pentagonal table, plus inversion
        let mut sum2 = Count::ZERO;
        for &d in divisors(n)?.iter() {
            sum2 = sum2.checked_add(ev.count_relprime(d)?)?;
        }
        c2.expect_eq(p_table.get(n), sum2, || format!("n={n} divisor sum"));
        c2.expect_eq(ev.count_relprime(n)?, relprime_by_inversion(n)?, || {
            format!("n={n} inversion")
        });

        // (5) sum over k, unrestricted side against the table
        let mut sum5 = Count::ZERO;
        for k in 1..=n {
            sum5 = sum5.checked_add(ev.count_with_k_parts(n, k)?)?;
        }
        c5.expect_eq(p_table.get(n), sum5, || format!("n={n} sum over k"));

        for m in 1..=max_m {
            // (5) modulus side against the enumerator
            let mut sum5m = Count::ZERO;
            for k in 1..=n {
                sum5m = sum5m.checked_add(ev.count_with_k_parts_relprime_to_m(n, k, m)?)?;
            }
            let direct = oracle::count_oracle(&PartitionQuery {
                n,
                parts: None,
                smallest: None,
                class: CoprimalityClass::RelPrimeTo(m),
            })?;
            c5.expect_eq(direct, sum5m, || format!("n={n} m={m} sum over k"));
        }

        for k in 1..=n {
            c1.expect_eq(
                ev.count_with_k_parts_relprime_to_m(n, k, n)?,
                ev.count_with_k_parts_relprime(n, k)?,
                || format!("n={n} k={k}"),
            );

            // (3) divisor sum against the DP table, plus inversion
            let mut sum3 = Count::ZERO;
            for &d in divisors(n)?.iter() {
                sum3 = sum3.checked_add(ev.count_with_k_parts_relprime(d, k)?)?;
            }
            c3.expect_eq(pk_table.get(n, k), sum3, || format!("n={n} k={k} divisor sum"));
            c3.expect_eq(
                ev.count_with_k_parts_relprime(n, k)?,
                relprime_nk_by_inversion(n, k)?,
                || format!("n={n} k={k} inversion"),
            );

            for l in 1..=n / k {
                c1.expect_eq(
                    ev.count_exact_smallest(n, k, l, n)?,
                    ev.count_relprime_exact_smallest(n, k, l)?,
                    || format!("n={n} k={k} l={l}"),
                );

                // (4) terms with d not dividing l vanish
                let mut sum4 = Count::ZERO;
                for &d in divisors(n)?.iter() {
                    if l % d == 0 {
                        sum4 = sum4
                            .checked_add(ev.count_relprime_exact_smallest(n / d, k, l / d)?)?;
                    }
                }
                c4.expect_eq(ev.count_exact_smallest(n, k, l, 1)?, sum4, || {
                    format!("n={n} k={k} l={l} divisor sum")
                });
                let mut inv4: i128 = 0;
                for &d in divisors(n)?.iter() {
                    if l % d != 0 {
                        continue;
                    }
                    let mu = mobius(d)?;
                    if mu == 0 {
                        continue;
                    }
                    inv4 = add_signed(
                        inv4,
                        i128::from(mu)
                            * ev.count_exact_smallest(n / d, k, l / d, 1)?.get() as i128,
                        "identity 4 inversion",
                    )?;
                }
                c4.expect_eq_signed(
                    ev.count_relprime_exact_smallest(n, k, l)?,
                    inv4,
                    || format!("n={n} k={k} l={l} inversion"),
                );

                for m in 1..=max_m {
                    // (7) recursion step, k > 1
                    if k > 1 {
                        c7.expect_eq(
                            ev.count_exact_smallest(n, k, l, m)?,
                            ev.count_min_part(n - l, k - 1, l, gcd_fold(&[m, l])?)?,
                            || format!("n={n} k={k} l={l} m={m}"),
                        );
                    }

                    // (8) min-part as a suffix sum, against the enumerator
                    let direct = oracle::count_oracle(&PartitionQuery {
                        n,
                        parts: Some(k),
                        smallest: Some(SmallestPart::AtLeast(l)),
                        class: CoprimalityClass::RelPrimeTo(m),
                    })?;
                    let mut sum8 = Count::ZERO;
                    for j in l..=n / k {
                        sum8 = sum8.checked_add(ev.count_exact_smallest(n, k, j, m)?)?;
                    }
                    c8.expect_eq(direct, sum8, || format!("n={n} k={k} l={l} m={m}"));
                    c8.expect_eq(direct, ev.count_min_part(n, k, l, m)?, || {
                        format!("n={n} k={k} l={l} m={m} (direct op)")
                    });
                }
            }

            for m in 1..=max_m {
                // (6) sum over the smallest part, against the enumerator
                let direct = oracle::count_oracle(&PartitionQuery {
                    n,
                    parts: Some(k),
                    smallest: None,
                    class: CoprimalityClass::RelPrimeTo(m),
                })?;
                let mut sum6 = Count::ZERO;
                for l in 1..=n / k {
                    sum6 = sum6.checked_add(ev.count_exact_smallest(n, k, l, m)?)?;
                }
                c6.expect_eq(direct, sum6, || format!("n={n} k={k} m={m}"));
                c6.expect_eq(direct, ev.count_with_k_parts_relprime_to_m(n, k, m)?, || {
                    format!("n={n} k={k} m={m} (direct op)")
                });
            }
        }
    }

    Ok(CheckReport {
        checks: vec![
            c1.finish(),
            c2.finish(),
            c3.finish(),
            c4.finish(),
            c5.finish(),
            c6.finish(),
            c7.finish(),
            c8.finish(),
        ],
    })
}

/// Master equivalence grid: every formula operation against the
/// brute-force enumerator, for n <= max_n, all valid k and l, and
/// m in {1..=max_m} plus m = n.
pub fn oracle_equivalence_suite(max_n: u64, max_m: u64) -> Result<CheckReport> {
    if max_n == 0 {
        return Err(Error::ZeroArgument("max_n"));
    }
    if max_m == 0 {
        return Err(Error::ZeroArgument("max_m"));
    }
    let ev = Evaluator::new(true);

    let mut totals = Check::new("totals: p(n), p_psi(n), p_psi_m(n)");
    let mut with_k = Check::new("exact k parts: p(n,k), p_psi(n,k), p_psi_m(n,k)");
    let mut exact_l = Check::new("exact smallest part: p_psi_m(n,k,l) and relprime variant");
    let mut min_l = Check::new("min part: p_psi_m(n,k,>=l) and the two-part closed form");

    for n in 1..=max_n {
        let oracle_of = |parts: Option<u64>, smallest: Option<SmallestPart>, class| {
            oracle::count_oracle(&PartitionQuery {
                n,
                parts,
                smallest,
                class,
            })
        };

        totals.expect_eq(
            ev.count_all(n)?,
            oracle_of(None, None, CoprimalityClass::Unrestricted)?,
            || format!("p({n})"),
        );
        totals.expect_eq(
            ev.count_relprime(n)?,
            oracle_of(None, None, CoprimalityClass::RelPrime)?,
            || format!("p_psi({n})"),
        );

        let mut ms: Vec<u64> = (1..=max_m).collect();
        if !ms.contains(&n) {
            ms.push(n);
        }

        for &m in &ms {
            totals.expect_eq(
                ev.count_relprime_to_m(n, m)?,
                oracle_of(None, None, CoprimalityClass::RelPrimeTo(m))?,
                || format!("p_psi_m({n}) m={m}"),
            );
        }

        for k in 1..=n {
            with_k.expect_eq(
                ev.count_with_k_parts(n, k)?,
                oracle_of(Some(k), None, CoprimalityClass::Unrestricted)?,
                || format!("p({n},{k})"),
            );
            with_k.expect_eq(
                ev.count_with_k_parts_relprime(n, k)?,
                oracle_of(Some(k), None, CoprimalityClass::RelPrime)?,
                || format!("p_psi({n},{k})"),
            );
            for &m in &ms {
                with_k.expect_eq(
                    ev.count_with_k_parts_relprime_to_m(n, k, m)?,
                    oracle_of(Some(k), None, CoprimalityClass::RelPrimeTo(m))?,
                    || format!("p_psi_m({n},{k}) m={m}"),
                );
                for l in 1..=n / k {
                    exact_l.expect_eq(
                        ev.count_exact_smallest(n, k, l, m)?,
                        oracle_of(
                            Some(k),
                            Some(SmallestPart::Exact(l)),
                            CoprimalityClass::RelPrimeTo(m),
                        )?,
                        || format!("p_psi_m({n},{k},{l}) m={m}"),
                    );
                    min_l.expect_eq(
                        ev.count_min_part(n, k, l, m)?,
                        oracle_of(
                            Some(k),
                            Some(SmallestPart::AtLeast(l)),
                            CoprimalityClass::RelPrimeTo(m),
                        )?,
                        || format!("p_psi_m({n},{k},>={l}) m={m}"),
                    );
                    if k == 2 {
                        min_l.expect_eq(
                            ev.count_two_parts_min(n, l, m)?,
                            ev.count_min_part(n, 2, l, m)?,
                            || format!("two-part closed form n={n} l={l} m={m}"),
                        );
                    }
                }
            }
            for l in 1..=n / k {
                exact_l.expect_eq(
                    ev.count_relprime_exact_smallest(n, k, l)?,
                    oracle_of(
                        Some(k),
                        Some(SmallestPart::Exact(l)),
                        CoprimalityClass::RelPrime,
                    )?,
                    || format!("p_psi({n},{k},{l})"),
                );
            }
        }
    }

    Ok(CheckReport {
        checks: vec![
            totals.finish(),
            with_k.finish(),
            exact_l.finish(),
            min_l.finish(),
        ],
    })
}

/// Phi-interval grid: the divisor-sum formula against a direct gcd scan
/// for 1 <= a <= b <= max_bound, 1 <= n <= max_n.
pub fn phi_scan_suite(max_bound: u64, max_n: u64) -> Result<CheckReport> {
    if max_bound == 0 {
        return Err(Error::ZeroArgument("max_bound"));
    }
    if max_n == 0 {
        return Err(Error::ZeroArgument("max_n"));
    }
    let mut check = Check::new("phi_interval equals the direct gcd scan");
    for n in 1..=max_n {
        // prefix[x] = #{c <= x : gcd(c, n) = 1}, built by scanning
        let mut prefix = vec![0u128; max_bound as usize + 1];
        for c in 1..=max_bound {
            prefix[c as usize] = prefix[c as usize - 1] + u128::from(c.gcd(&n) == 1);
        }
        for a in 1..=max_bound {
            for b in a..=max_bound {
                let scanned = prefix[b as usize] - prefix[a as usize - 1];
                check.expect_eq(
                    phi_interval(a, b, n)?,
                    Count::new(scanned)?,
                    || format!("a={a} b={b} n={n}"),
                );
            }
        }
    }
    Ok(CheckReport {
        checks: vec![check.finish()],
    })
}
