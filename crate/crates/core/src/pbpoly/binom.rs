use crate::error::{Error, Result};

/// Binomial coefficient extended to all integer arguments.
///
/// Returns `n! / (m! (n - m)!)` when `0 <= m <= n` and `0` otherwise, so
/// terms such as `C(0, 1)` or `C(1, 2)` vanish inside gadget formulas.
pub fn binom(n: i64, m: i64) -> Result<i64> {
    if n < 0 || m < 0 || m > n {
        return Ok(0);
    }
    let k = m.min(n - m);
    let mut acc: i128 = 1;
    for i in 1..=k {
        // acc == C(n - k + i - 1, i - 1) here; each step stays exact.
        acc = acc * i128::from(n - k + i) / i128::from(i);
        if acc > i128::from(i64::MAX) {
            return Err(Error::Overflow);
        }
    }
    Ok(acc as i64)
}
