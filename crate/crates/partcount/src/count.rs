//! Exact unsigned counts with checked arithmetic.
//!
//! Every counting function in this crate returns a [`Count`]. Arithmetic on
//! counts never wraps: an operation that would exceed the capacity reports
//! [`Error::Overflow`] instead of producing a wrong value.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU32, Ordering};

use crate::error::{Error, Result};

// Capacity in bits. 128 in normal builds; tests may lower it to force the
// overflow path at small inputs. Process-global, so a test that lowers it
// must run in its own test binary.
static CAPACITY_BITS: AtomicU32 = AtomicU32::new(128);

/// Lower (or restore) the capacity of `Count` for the whole process.
///
/// Testing hook only. `bits` must be in `1..=128`.
pub fn set_capacity_bits(bits: u32) {
    assert!((1..=128).contains(&bits), "capacity bits out of range");
    CAPACITY_BITS.store(bits, Ordering::Relaxed);
}

/// Largest value a `Count` may currently hold.
pub fn capacity() -> u128 {
    match CAPACITY_BITS.load(Ordering::Relaxed) {
        128 => u128::MAX,
        b => (1u128 << b) - 1,
    }
}

/// An exact nonnegative count. All arithmetic is overflow-checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Count(u128);

impl Count {
    pub const ZERO: Count = Count(0);
    pub const ONE: Count = Count(1);

    pub fn new(value: u128) -> Result<Count> {
        if value > capacity() {
            return Err(Error::Overflow {
                context: format!("constructing count {value}"),
            });
        }
        Ok(Count(value))
    }

    pub fn get(self) -> u128 {
        self.0
    }

    pub fn checked_add(self, rhs: Count) -> Result<Count> {
        match self.0.checked_add(rhs.0) {
            Some(v) if v <= capacity() => Ok(Count(v)),
            _ => Err(Error::Overflow {
                context: format!("{} + {}", self.0, rhs.0),
            }),
        }
    }

    /// Subtraction is only used where the math guarantees a nonnegative
    /// difference; underflow is therefore an internal-consistency error.
    pub fn checked_sub(self, rhs: Count) -> Result<Count> {
        self.0
            .checked_sub(rhs.0)
            .map(Count)
            .ok_or_else(|| Error::Overflow {
                context: format!("{} - {}", self.0, rhs.0),
            })
    }

    pub fn checked_mul(self, rhs: Count) -> Result<Count> {
        match self.0.checked_mul(rhs.0) {
            Some(v) if v <= capacity() => Ok(Count(v)),
            _ => Err(Error::Overflow {
                context: format!("{} * {}", self.0, rhs.0),
            }),
        }
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Count {
    type Err = Error;

    fn from_str(s: &str) -> Result<Count> {
        let v = s.parse::<u128>().map_err(|_| Error::InvalidQuery {
            field: "value",
            reason: format!("`{s}` is not a decimal count"),
        })?;
        Count::new(v)
    }
}

/// Checked addition on raw `u128` count values, respecting the capacity.
pub(crate) fn add_raw(a: u128, b: u128, context: &str) -> Result<u128> {
    match a.checked_add(b) {
        Some(v) if v <= capacity() => Ok(v),
        _ => Err(Error::Overflow {
            context: context.to_string(),
        }),
    }
}

/// Checked signed addition for Mobius-weighted intermediates. The magnitude
/// bound mirrors the unsigned capacity.
pub(crate) fn add_signed(a: i128, b: i128, context: &str) -> Result<i128> {
    let cap = capacity();
    match a.checked_add(b) {
        Some(v) if v.unsigned_abs() <= cap => Ok(v),
        _ => Err(Error::Overflow {
            context: context.to_string(),
        }),
    }
}
