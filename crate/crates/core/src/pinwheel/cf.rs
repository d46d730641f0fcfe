//! Continued fractions evaluated over the projective line Q u {inf}, so the
//! evaluation is total: `1/0 = inf` and `x - 1/inf = x`. The classical
//! "drop the last two terms when c_p = 0" rule is then a theorem rather than
//! a special case, and the tests treat it as one.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A point of the projective line over the rationals: a reduced rational or
/// the single point at infinity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ExtRational {
    Finite(BigRational),
    Infinity,
}

impl ExtRational {
    pub fn from_int(n: i64) -> Self {
        ExtRational::Finite(BigRational::from(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        ExtRational::Finite(BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExtRational::Finite(x) if x.is_zero())
    }

    /// `c - 1/self`, the atomic continued-fraction step.
    fn step(&self, c: i64) -> ExtRational {
        let c = BigRational::from(BigInt::from(c));
        match self {
            ExtRational::Infinity => ExtRational::Finite(c),
            ExtRational::Finite(x) if x.is_zero() => ExtRational::Infinity,
            ExtRational::Finite(x) => ExtRational::Finite(c - x.recip()),
        }
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRational::Finite(x) if x.denom().is_one() => write!(f, "{}", x.numer()),
            ExtRational::Finite(x) => write!(f, "{x}"),
            ExtRational::Infinity => write!(f, "inf"),
        }
    }
}

/// Evaluates `[c_1, ..., c_p] = c_1 - 1/(c_2 - 1/(... - 1/c_p))` right to
/// left over the projective rationals. The empty sequence evaluates to
/// infinity, which makes `[c] = c` and the drop-two rule come out of the
/// arithmetic itself.
pub fn continued_fraction(c_seq: &[i64]) -> ExtRational {
    let mut acc = ExtRational::Infinity;
    for &c in c_seq.iter().rev() {
        acc = acc.step(c);
    }
    acc
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CfError {
    TooShort { len: usize },
}

impl fmt::Display for CfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CfError::TooShort { len } => {
                write!(f, "cyclic continued fractions need at least 3 terms, got {len}")
            }
        }
    }
}

/// True iff all `k` cyclic continued fractions of the sequence vanish: the
/// fraction of the first `k - 1` terms, and of every rotation. This is the
/// sufficient closure criterion for a `k`-component pinwheel; whenever it
/// returns true, [`monodromy_check`](super::monodromy_check) on the same
/// sequence yields plus or minus the identity (cross-checked in tests).
pub fn cyclic_cf_all_zero(a_seq: &[i64]) -> Result<bool, CfError> {
    let k = a_seq.len();
    if k < 3 {
        return Err(CfError::TooShort { len: k });
    }
    for start in 0..k {
        let rotated: Vec<i64> = (0..k - 1).map(|i| a_seq[(start + i) % k]).collect();
        if !continued_fraction(&rotated).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
