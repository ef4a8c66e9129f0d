//! Constants of the two symmetric-block gadgets.
//!
//! For `P = P_n^(m)` and `l` the number of ones among its variables:
//!
//! ```text
//!  P(x) = L * sum_{i<j} x_i x_j + min_w sum_i w_i (a_i + b_i * l)     (positive)
//! -P(x) =                         min_w sum_i w_i (a_i + b_i * l)     (negative)
//! ```

use crate::error::{Error, Result};
use crate::pbpoly::binom;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GadgetKind {
    PositiveSymmetric,
    NegativeSymmetric,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionCoefficients {
    pub kind: GadgetKind,
    pub n: usize,
    pub m: usize,
    /// Weight `L` on the complete quadratic shell; zero for the negative gadget.
    pub shell: i64,
    /// Number of auxiliary variables `d`.
    pub aux: usize,
    /// `a_1..a_d`.
    pub constants: Vec<i64>,
    /// `b_1..b_d`.
    pub slopes: Vec<i64>,
}

fn check_degrees(n: usize, m: usize) -> Result<()> {
    if !(n > m && m > 2) {
        return Err(Error::InvalidDegree(format!(
            "symmetric gadget needs n > m > 2, got n = {n}, m = {m}"
        )));
    }
    Ok(())
}

fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

impl ReductionCoefficients {
    /// Gadget for `+P_n^(m)`: `L = C(n-2, m-2)`, `d = floor((n-1)/2)`,
    /// one progression per pair of negative entries of `C(l,m) - L C(l,2)`.
    pub fn positive(n: usize, m: usize) -> Result<Self> {
        check_degrees(n, m)?;
        let (n_, m_) = (n as i64, m as i64);
        let shell = binom(n_ - 2, m_ - 2)?;
        let aux = (n - 1) / 2;
        let mut constants = Vec::with_capacity(aux);
        let mut slopes = Vec::with_capacity(aux);
        for i in 1..=aux as i64 {
            let hi = binom(2 * i, m_ - 1)?;
            let lo = binom(2 * i - 2, m_ - 1)?;
            let a = add(
                add(mul(4 * i - 1, shell)?, -mul(2 * i, hi)?)?,
                add(mul(2 * i, lo)?, binom(2 * i - 2, m_ - 2)?)?,
            )?;
            let b = add(add(-mul(2, shell)?, hi)?, -lo)?;
            constants.push(a);
            slopes.push(b);
        }
        Ok(ReductionCoefficients {
            kind: GadgetKind::PositiveSymmetric,
            n,
            m,
            shell,
            aux,
            constants,
            slopes,
        })
    }

    /// Gadget for `-P_n^(m)`: `d = floor((n-m+2)/2)` and the constants
    /// depend on `m` alone.
    pub fn negative(n: usize, m: usize) -> Result<Self> {
        check_degrees(n, m)?;
        let m_ = m as i64;
        let aux = (n - m + 2) / 2;
        let mut constants = Vec::with_capacity(aux);
        let mut slopes = Vec::with_capacity(aux);
        for i in 1..=aux as i64 {
            let a = mul(
                m_ - 1,
                add(binom(m_ + 2 * i - 1, m_)?, -binom(m_ + 2 * i - 3, m_)?)?,
            )?;
            let b = add(
                binom(m_ + 2 * i - 4, m_ - 1)?,
                -binom(m_ + 2 * i - 2, m_ - 1)?,
            )?;
            constants.push(a);
            slopes.push(b);
        }
        Ok(ReductionCoefficients {
            kind: GadgetKind::NegativeSymmetric,
            n,
            m,
            shell: 0,
            aux,
            constants,
            slopes,
        })
    }

    /// `sum_i min(0, a_i + b_i * l)`, the gadget's contribution at ones-count `l`.
    pub fn progression_min_sum(&self, l: i64) -> i64 {
        self.constants
            .iter()
            .zip(&self.slopes)
            .map(|(&a, &b)| (a + b * l).min(0))
            .sum()
    }
}
