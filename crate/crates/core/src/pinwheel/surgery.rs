//! Betti-number bookkeeping for the standard surgeries on Bing tori. Each
//! single torus surgery raises `b_1`, `b^+` and `b^-` by one, leaving the
//! Euler characteristic and signature fixed; a Bing pair applies two.

use core::fmt;

/// Betti data tracked through surgery, with `b_3 = b_1` (closed oriented
/// model). Construct through [`SurgeryInvariants::from_betti`] so that the
/// derived Euler characteristic and signature stay consistent.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SurgeryInvariants {
    pub b1: u32,
    pub b_plus: u32,
    pub b_minus: u32,
    pub euler: i64,
    pub signature: i64,
}

impl SurgeryInvariants {
    pub fn from_betti(b1: u32, b_plus: u32, b_minus: u32) -> Self {
        let euler = 2 - 2 * i64::from(b1) + i64::from(b_plus) + i64::from(b_minus);
        let signature = i64::from(b_plus) - i64::from(b_minus);
        SurgeryInvariants { b1, b_plus, b_minus, euler, signature }
    }
}

impl fmt::Display for SurgeryInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "b1 = {}, b+ = {}, b- = {}, e = {}, sign = {}",
            self.b1, self.b_plus, self.b_minus, self.euler, self.signature
        )
    }
}

/// Applies `bing_pairs` Bing pairs of standard torus surgeries (two single
/// surgeries per pair). Asserts the Euler/signature invariance it claims.
pub fn apply_standard_surgeries(inv: SurgeryInvariants, bing_pairs: u32) -> SurgeryInvariants {
    let single = 2 * bing_pairs;
    let out = SurgeryInvariants::from_betti(
        inv.b1 + single,
        inv.b_plus + single,
        inv.b_minus + single,
    );
    assert_eq!(out.euler, inv.euler, "surgery must preserve the Euler characteristic");
    assert_eq!(out.signature, inv.signature, "surgery must preserve the signature");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_pairs_from_cp2_3bar_betti() {
        let start = SurgeryInvariants::from_betti(0, 1, 3);
        assert_eq!(start.euler, 6);
        let q3 = apply_standard_surgeries(start, 3);
        assert_eq!((q3.b1, q3.b_plus, q3.b_minus), (6, 7, 9));
        assert_eq!(q3.euler, 6);
        assert_eq!(q3.signature, -2);
    }

    #[test]
    fn four_pairs_from_s2xs2_betti() {
        // Ends at the betti data of a genus-2 by genus-2 product surface.
        let q = apply_standard_surgeries(SurgeryInvariants::from_betti(0, 1, 1), 4);
        assert_eq!((q.b1, q.b_plus, q.b_minus), (8, 9, 9));
        assert_eq!(q.euler, 4);
        assert_eq!(q.signature, 0);
    }

    #[test]
    fn zero_pairs_is_a_no_op() {
        let inv = SurgeryInvariants::from_betti(2, 3, 5);
        assert_eq!(apply_standard_surgeries(inv, 0), inv);
    }
}
