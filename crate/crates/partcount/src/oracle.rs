//! Brute-force constrained partition enumerator: the independent ground
//! truth every counting formula is tested against at small scale.
//!
//! Enumeration streams partitions in descending-lex order, largest part
//! first. This module is never consulted by `formulas` at runtime.

use num_integer::Integer;

use crate::count::Count;
use crate::error::{Error, Result};
use crate::formulas::{CoprimalityClass, PartitionQuery, SmallestPart};

/// A partition: non-increasing positive parts summing to the queried n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn sum(&self) -> u64 {
        self.parts.iter().sum()
    }
}

/// Constraints for [`enumerate`]. At most one of `min_part` /
/// `exact_smallest` may be set.
#[derive(Debug, Clone, Copy, Default)]
pub struct Constraints {
    pub parts: Option<u64>,
    pub min_part: Option<u64>,
    pub exact_smallest: Option<u64>,
}

impl Constraints {
    fn validate(&self) -> Result<()> {
        if self.min_part.is_some() && self.exact_smallest.is_some() {
            return Err(Error::InvalidQuery {
                field: "smallest",
                reason: "min_part and exact_smallest are mutually exclusive".into(),
            });
        }
        if self.parts == Some(0) || self.min_part == Some(0) || self.exact_smallest == Some(0) {
            return Err(Error::ZeroArgument("constraint"));
        }
        Ok(())
    }

    fn lower_bound(&self) -> u64 {
        self.min_part.or(self.exact_smallest).unwrap_or(1)
    }
}

/// Visit every partition of `n` satisfying `constraints`, exactly once, in
/// lexicographically decreasing part order. Constant memory per yield.
pub fn for_each_partition<F: FnMut(&[u64])>(
    n: u64,
    constraints: &Constraints,
    mut visit: F,
) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroArgument("n"));
    }
    constraints.validate()?;
    let lo = constraints.lower_bound();
    let exact = constraints.exact_smallest;
    let mut buf = Vec::new();
    descend(n, n, constraints.parts, lo, &mut buf, &mut |parts| {
        if let Some(l) = exact {
            if *parts.last().expect("nonempty partition") != l {
                return;
            }
        }
        debug_assert_eq!(parts.iter().sum::<u64>(), n);
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p >= 1));
        visit(parts);
    });
    Ok(())
}

fn descend<F: FnMut(&[u64])>(
    remaining: u64,
    max_part: u64,
    slots: Option<u64>,
    lo: u64,
    buf: &mut Vec<u64>,
    visit: &mut F,
) {
    if remaining == 0 {
        if slots.unwrap_or(0) == 0 && !buf.is_empty() {
            visit(buf);
        }
        return;
    }
    let Some(hi) = part_upper_bound(remaining, max_part, slots, lo) else {
        return;
    };
    for v in (lo..=hi).rev() {
        // a leftover smaller than the bound can never be completed
        if slots.is_none() && remaining - v > 0 && remaining - v < lo {
            continue;
        }
        if let Some(s) = slots {
            // the s-1 remaining slots must be able to absorb the leftover
            let left = remaining - v;
            if left < (s - 1) * lo || left > (s - 1) * v {
                continue;
            }
        }
        buf.push(v);
        descend(remaining - v, v, slots.map(|s| s - 1), lo, buf, visit);
        buf.pop();
    }
}

fn part_upper_bound(remaining: u64, max_part: u64, slots: Option<u64>, lo: u64) -> Option<u64> {
    let mut hi = max_part.min(remaining);
    if let Some(s) = slots {
        if s == 0 || remaining < s * lo {
            return None;
        }
        hi = hi.min(remaining - (s - 1) * lo);
    }
    (hi >= lo).then_some(hi)
}

/// Collect the full enumeration. Convenience over [`for_each_partition`]
/// for tests and golden files.
pub fn enumerate(n: u64, constraints: &Constraints) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for_each_partition(n, constraints, |parts| {
        out.push(Partition {
            parts: parts.to_vec(),
        });
    })?;
    Ok(out)
}

/// Count partitions matching the query by exhaustive enumeration plus a
/// gcd filter over the parts (and the modulus, when one applies).
pub fn count_oracle(query: &PartitionQuery) -> Result<Count> {
    let modulus: Option<u64> = match query.class {
        CoprimalityClass::Unrestricted => None,
        CoprimalityClass::RelPrime => Some(query.n),
        CoprimalityClass::RelPrimeTo(m) => {
            if m == 0 {
                return Err(Error::ZeroArgument("m"));
            }
            Some(m)
        }
    };
    let constraints = Constraints {
        parts: query.parts,
        min_part: match query.smallest {
            Some(SmallestPart::AtLeast(l)) => Some(l),
            _ => None,
        },
        exact_smallest: match query.smallest {
            Some(SmallestPart::Exact(l)) => Some(l),
            _ => None,
        },
    };
    let mut total: u128 = 0;
    for_each_partition(query.n, &constraints, |parts| {
        let keep = match modulus {
            None => true,
            Some(m) => parts.iter().fold(m, |g, &p| g.gcd(&p)) == 1,
        };
        if keep {
            total += 1;
        }
    })?;
    Count::new(total)
}

/// JSON export of an enumeration as an array of integer arrays.
pub fn partitions_to_json(partitions: &[Partition]) -> String {
    let raw: Vec<&[u64]> = partitions.iter().map(|p| p.parts()).collect();
    serde_json::to_string(&raw).expect("serializing integer arrays cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn parts_of(n: u64, c: &Constraints) -> Vec<Vec<u64>> {
        enumerate(n, c)
            .unwrap()
            .into_iter()
            .map(|p| p.parts().to_vec())
            .collect()
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(
            parts_of(
                4,
                &Constraints {
                    parts: Some(2),
                    ..Default::default()
                }
            ),
            vec![vec![3, 1], vec![2, 2]]
        );
        assert_eq!(
            parts_of(
                5,
                &Constraints {
                    parts: Some(5),
                    ..Default::default()
                }
            ),
            vec![vec![1, 1, 1, 1, 1]]
        );
        assert_eq!(
            parts_of(
                6,
                &Constraints {
                    parts: Some(3),
                    exact_smallest: Some(1),
                    ..Default::default()
                }
            ),
            vec![vec![4, 1, 1], vec![3, 2, 1]]
        );
    }

    #[test]
    fn contradictory_constraints_yield_empty() {
        assert!(parts_of(
            5,
            &Constraints {
                parts: Some(6),
                ..Default::default()
            }
        )
        .is_empty());
        assert!(parts_of(
            5,
            &Constraints {
                parts: Some(2),
                min_part: Some(4),
                ..Default::default()
            }
        )
        .is_empty());
    }

    #[test]
    fn both_smallest_constraints_rejected() {
        let c = Constraints {
            parts: None,
            min_part: Some(2),
            exact_smallest: Some(2),
        };
        assert!(enumerate(6, &c).is_err());
    }

    #[test]
    fn descending_lex_no_duplicates() {
        for n in 1..=18u64 {
            let all = parts_of(n, &Constraints::default());
            for w in all.windows(2) {
                assert!(w[0] > w[1], "order violated at n={n}: {:?}", w);
            }
            let set: HashSet<_> = all.iter().cloned().collect();
            assert_eq!(set.len(), all.len());
        }
    }

    #[test]
    fn unconstrained_counts_match_known_p() {
        // p(1)..p(12)
        let expected = [1u128, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
        for (i, &e) in expected.iter().enumerate() {
            let n = i as u64 + 1;
            assert_eq!(parts_of(n, &Constraints::default()).len() as u128, e);
        }
    }

    #[test]
    fn count_oracle_examples() {
        let q = PartitionQuery {
            n: 6,
            parts: None,
            smallest: None,
            class: CoprimalityClass::RelPrime,
        };
        assert_eq!(count_oracle(&q).unwrap().get(), 7);

        let q = PartitionQuery {
            n: 4,
            parts: None,
            smallest: None,
            class: CoprimalityClass::RelPrimeTo(2),
        };
        assert_eq!(count_oracle(&q).unwrap().get(), 3);

        let q = PartitionQuery {
            n: 1,
            parts: None,
            smallest: None,
            class: CoprimalityClass::Unrestricted,
        };
        assert_eq!(count_oracle(&q).unwrap().get(), 1);
    }

    #[test]
    fn json_export_shape() {
        let all = enumerate(
            4,
            &Constraints {
                parts: Some(2),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(partitions_to_json(&all), "[[3,1],[2,2]]");
    }
}
