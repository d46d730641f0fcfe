//! Effect of `p/q` torus surgery on first homology, in the two cases with a
//! clean statement: a nullhomologous torus contributes a `Z/p` summand, and
//! `1/q` surgery along a nullhomologous curve changes nothing. Anything else
//! is rejected rather than extrapolated.

use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TorusKind {
    /// The torus itself is nullhomologous.
    Nullhomologous,
    /// The surgery curve on the boundary is nullhomologous in the complement.
    CurveNullhomologous,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurgeryH1Error {
    NotCoprime { p: i64, q: i64 },
    Unsupported { kind: TorusKind, p: i64, q: i64 },
}

impl fmt::Display for SurgeryH1Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurgeryH1Error::NotCoprime { p, q } => write!(f, "surgery slope {p}/{q} not reduced"),
            SurgeryH1Error::Unsupported { kind, p, q } => {
                write!(f, "no homology statement for {kind:?} surgery with slope {p}/{q}")
            }
        }
    }
}

/// New invariant-factor list after a `p/q` surgery. Factors are appended:
/// `0` for a free summand when `p = 0`, nothing when `|p| = 1`.
pub fn surgery_h1(
    h1_factors: &[i64],
    p: i64,
    q: i64,
    kind: TorusKind,
) -> Result<Vec<i64>, SurgeryH1Error> {
    if p.gcd(&q) != 1 {
        return Err(SurgeryH1Error::NotCoprime { p, q });
    }
    let mut out = h1_factors.to_vec();
    match kind {
        TorusKind::Nullhomologous => {
            if p.abs() != 1 {
                out.push(p.abs());
            }
            Ok(out)
        }
        TorusKind::CurveNullhomologous => {
            if p == 1 {
                Ok(out)
            } else {
                Err(SurgeryH1Error::Unsupported { kind, p, q })
            }
        }
    }
}
