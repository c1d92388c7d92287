use std::fmt;

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, FromPrimitive};

use crate::error::{Error, Result};

/// Exact integer scalar used for counting.
///
/// Counting results are exact by contract: a fixed-width counter such as
/// [`Count64`](crate::Count64) or [`Count128`](crate::Count128) reports
/// overflow as an error, while [`BigCount`](crate::BigCount) never
/// overflows. Anything satisfying the bounds works.
pub trait Count: Integer + CheckedAdd + CheckedMul + FromPrimitive + Clone + fmt::Debug {}

impl<T> Count for T where T: Integer + CheckedAdd + CheckedMul + FromPrimitive + Clone + fmt::Debug {}

/// Binomial coefficient under the extended convention: `binom(a, b)` is
/// zero whenever `b < 0` or `b > a`, so boundary terms of layer sums
/// vanish without re-indexing.
///
/// The value is built multiplicatively with exact stepwise division; a
/// product that exceeds the counter type is reported as
/// [`Error::CountOverflow`].
///
/// ```
/// use levelgraph::{binom, Count64};
/// assert_eq!(binom::<Count64>(5, 2).unwrap(), 10);
/// assert_eq!(binom::<Count64>(3, -1).unwrap(), 0);
/// ```
pub fn binom<C: Count>(a: i64, b: i64) -> Result<C> {
    if b < 0 || b > a {
        return Ok(C::zero());
    }
    let b = b.min(a - b);
    let mut result = C::one();
    for step in 1..=b {
        let factor = C::from_i64(a - b + step).ok_or(Error::CountOverflow)?;
        let divisor = C::from_i64(step).ok_or(Error::CountOverflow)?;
        result = result.checked_mul(&factor).ok_or(Error::CountOverflow)?;
        // Exact: the running value is binom(a - b + step, step).
        result = result / divisor;
    }
    Ok(result)
}
