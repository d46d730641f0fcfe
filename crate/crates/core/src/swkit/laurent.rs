//! Integer Laurent polynomials in one variable `t`, the affine surgery
//! family `f_inf + n * f_0`, and the coefficient-size invariant that
//! separates the members of such a family.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Finitely supported integer coefficients indexed by the exponent of `t`;
/// zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn term(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(coeff.into(), exp);
        p
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        LaurentPoly::term(c, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, coeff: BigInt, exp: i64) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn add(&self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(c.clone(), e);
        }
        out
    }

    pub fn scale(&self, by: impl Into<BigInt>) -> LaurentPoly {
        let by = by.into();
        let mut out = LaurentPoly::zero();
        for (&e, c) in &self.terms {
            out.add_term(c * &by, e);
        }
        out
    }

    pub fn sub(&self, rhs: &LaurentPoly) -> LaurentPoly {
        self.add(&rhs.scale(-1))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// Largest absolute coefficient; zero for the zero polynomial.
    pub fn max_abs_coeff(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Highest power first.
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let coeff_is_one = mag == BigInt::from(1);
            match (e, coeff_is_one) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}t")?,
                (_, true) => write!(f, "t^{e}")?,
                (_, false) => write!(f, "{mag}t^{e}")?,
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentParseError {
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for LaurentParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "laurent parse error at {}: {}", self.offset, self.message)
    }
}

impl core::str::FromStr for LaurentPoly {
    type Err = LaurentParseError;

    /// Parses sums of `c*t^k` terms, e.g. `t^-1 - t`, `3t^-1 - 3t`,
    /// `2t^3 - 5 + 2t^-3`, `0`. The `*` is optional.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let chars: alloc::vec::Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = |offset: usize, message: &str| LaurentParseError {
            offset,
            message: message.to_string(),
        };
        if chars.is_empty() {
            return Err(err(0, "empty input"));
        }
        let mut out = LaurentPoly::zero();
        let mut i = 0usize;
        let mut first = true;
        while i < chars.len() {
            let mut sign = 1i64;
            if chars[i] == '+' || chars[i] == '-' {
                if chars[i] == '-' {
                    sign = -1;
                }
                i += 1;
            } else if !first {
                return Err(err(i, "expected `+` or `-` between terms"));
            }
            first = false;
            let mut digits = String::new();
            while i < chars.len() && chars[i].is_ascii_digit() {
                digits.push(chars[i]);
                i += 1;
            }
            if i < chars.len() && chars[i] == '*' {
                i += 1;
            }
            let coeff: BigInt = if digits.is_empty() {
                BigInt::from(1)
            } else {
                digits.parse().map_err(|_| err(i, "bad coefficient"))?
            };
            let exp: i64;
            if i < chars.len() && chars[i] == 't' {
                i += 1;
                if i < chars.len() && chars[i] == '^' {
                    i += 1;
                    let mut es = String::new();
                    if i < chars.len() && (chars[i] == '-' || chars[i] == '+') {
                        es.push(chars[i]);
                        i += 1;
                    }
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        es.push(chars[i]);
                        i += 1;
                    }
                    exp = es.parse().map_err(|_| err(i, "bad exponent"))?;
                } else {
                    exp = 1;
                }
            } else {
                if digits.is_empty() {
                    return Err(err(i, "expected a coefficient or `t`"));
                }
                exp = 0;
            }
            out.add_term(coeff * sign, exp);
        }
        Ok(out)
    }
}

/// The surgery family `f_inf + n * f_0`, affine in the surgery parameter.
pub fn mms_family(f_inf: &LaurentPoly, f_zero: &LaurentPoly, n: i64) -> LaurentPoly {
    f_inf.add(&f_zero.scale(n))
}

/// The diffeomorphism-separating size: the largest absolute coefficient.
pub fn distinguishing_invariant(f: &LaurentPoly) -> BigInt {
    f.max_abs_coeff()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn twist_family() {
        let f0 = poly("t^-1 - t");
        let f = mms_family(&LaurentPoly::zero(), &f0, 3);
        assert_eq!(f, poly("3t^-1 - 3t"));
        assert_eq!(distinguishing_invariant(&f), BigInt::from(3));
    }

    #[test]
    fn n_zero_returns_the_base() {
        let f = poly("t^2 - 2 + t^-2");
        assert_eq!(mms_family(&f, &poly("t - t^-1"), 0), f);
    }

    #[test]
    fn scalar_family_matches_one_plus_n() {
        let one = LaurentPoly::constant(1);
        for n in 0..5 {
            assert_eq!(mms_family(&one, &one, n), LaurentPoly::constant(1 + n));
        }
    }

    #[test]
    fn invariant_examples() {
        assert_eq!(distinguishing_invariant(&LaurentPoly::zero()), BigInt::from(0));
        assert_eq!(distinguishing_invariant(&poly("2t^3 - 5 + 2t^-3")), BigInt::from(5));
    }

    #[test]
    fn display_round_trip() {
        for s in ["t^-1 - t", "3t^-1 - 3t", "2t^3 - 5 + 2t^-3", "0", "-t + 4", "7"] {
            let p = poly(s);
            assert_eq!(poly(&p.to_string()), p, "{s}");
        }
    }

    #[test]
    fn family_members_distinct_for_one_to_one_hundred() {
        let f0 = poly("t^-1 - t");
        let mut seen = alloc::vec::Vec::new();
        for n in 1..=100 {
            let inv = distinguishing_invariant(&mms_family(&LaurentPoly::zero(), &f0, n));
            assert!(!seen.contains(&inv));
            seen.push(inv);
        }
    }

    proptest! {
        /// The family is affine: consecutive members differ by exactly f_0.
        #[test]
        fn family_is_affine(
            finf in proptest::collection::vec((-5i64..=5, -4i64..=4), 0..5),
            f0 in proptest::collection::vec((-5i64..=5, -4i64..=4), 0..5),
            n in -20i64..=20,
        ) {
            let build = |v: &alloc::vec::Vec<(i64, i64)>| {
                let mut p = LaurentPoly::zero();
                for &(c, e) in v {
                    p.add_term(BigInt::from(c), e);
                }
                p
            };
            let finf = build(&finf);
            let f0 = build(&f0);
            let step = mms_family(&finf, &f0, n + 1).sub(&mms_family(&finf, &f0, n));
            prop_assert_eq!(step, f0);
        }

        /// Eventually strictly monotone in n once f_0 is nonzero.
        #[test]
        fn invariant_eventually_monotone(
            c in 1i64..=4,
            e in -3i64..=3,
        ) {
            let f0 = LaurentPoly::term(c, e);
            let finf = LaurentPoly::term(1, 0);
            let mut prev = BigInt::from(-1);
            for n in 10..=100 {
                let inv = distinguishing_invariant(&mms_family(&finf, &f0, n));
                prop_assert!(inv > prev, "n = {n}");
                prev = inv;
            }
        }
    }
}
