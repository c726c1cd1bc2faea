//! Overflow-checked exact integers and binomial coefficients.

use std::fmt;
use std::iter::Sum;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("arithmetic overflow in exact count")]
    Overflow,
}

/// Signed 128-bit count. Every arithmetic operation is checked; overflow is
/// reported as [`CountError::Overflow`] and never wraps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExactCount(i128);

impl ExactCount {
    pub const ZERO: ExactCount = ExactCount(0);

    pub const fn new(value: i128) -> Self {
        ExactCount(value)
    }

    pub const fn get(self) -> i128 {
        self.0
    }

    pub fn checked_add(self, rhs: ExactCount) -> Result<ExactCount, CountError> {
        self.0.checked_add(rhs.0).map(ExactCount).ok_or(CountError::Overflow)
    }

    pub fn checked_sub(self, rhs: ExactCount) -> Result<ExactCount, CountError> {
        self.0.checked_sub(rhs.0).map(ExactCount).ok_or(CountError::Overflow)
    }

    pub fn checked_mul(self, rhs: ExactCount) -> Result<ExactCount, CountError> {
        self.0.checked_mul(rhs.0).map(ExactCount).ok_or(CountError::Overflow)
    }

    pub fn signum(self) -> i32 {
        self.0.signum() as i32
    }
}

impl From<i128> for ExactCount {
    fn from(v: i128) -> Self {
        ExactCount(v)
    }
}

impl From<usize> for ExactCount {
    fn from(v: usize) -> Self {
        ExactCount(v as i128)
    }
}

impl fmt::Display for ExactCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for ExactCount {
    type Err = std::num::ParseIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.trim().parse::<i128>().map(ExactCount)
    }
}

/// Sums with overflow checking. Callers that need the error should use
/// [`try_sum`]; this impl panics on overflow.
impl Sum for ExactCount {
    fn sum<I: Iterator<Item = ExactCount>>(iter: I) -> Self {
        try_sum(iter).expect("ExactCount sum overflowed")
    }
}

pub fn try_sum<I: IntoIterator<Item = ExactCount>>(iter: I) -> Result<ExactCount, CountError> {
    iter.into_iter()
        .try_fold(ExactCount::ZERO, |acc, x| acc.checked_add(x))
}

// Serialized as a decimal string: 128-bit values do not survive JSON numbers.
impl Serialize for ExactCount {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for ExactCount {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Rows of Pascal's triangle are memoized up to this order.
pub const PASCAL_LIMIT: usize = 128;

fn pascal() -> &'static Vec<Vec<i128>> {
    static TABLE: OnceLock<Vec<Vec<i128>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut rows: Vec<Vec<i128>> = Vec::with_capacity(PASCAL_LIMIT + 1);
        for n in 0..=PASCAL_LIMIT {
            let mut row = vec![1i128; n + 1];
            for k in 1..n {
                // C(128, 64) ~ 2.4e37 still fits in i128.
                row[k] = rows[n - 1][k - 1]
                    .checked_add(rows[n - 1][k])
                    .expect("Pascal row up to 128 fits in i128");
            }
            rows.push(row);
        }
        rows
    })
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> Result<ExactCount, CountError> {
    if k > n {
        return Ok(ExactCount::ZERO);
    }
    if n <= PASCAL_LIMIT {
        return Ok(ExactCount(pascal()[n][k]));
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 1..=k {
        // acc * (n - k + i) / i is exact at every step
        acc = acc
            .checked_mul((n - k + i) as i128)
            .ok_or(CountError::Overflow)?
            / i as i128;
    }
    Ok(ExactCount(acc))
}
