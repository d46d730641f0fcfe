//! Triviality verification: abelianization first (a cheap necessary
//! condition), then bounded coset enumeration. A budget exhaustion is
//! reported as inconclusive, never as a claim either way.

use alloc::vec::Vec;

use num_bigint::BigInt;

use super::abelian::abelianization;
use super::coset::{todd_coxeter, EnumResult};
use super::word::Presentation;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TrivialityVerdict {
    /// The coset table closed with a single coset.
    Trivial,
    /// The abelianization is already nontrivial; its invariant factors are
    /// the witness.
    NontrivialH1(Vec<BigInt>),
    /// Trivial abelianization but the table closed on more than one coset:
    /// a finite perfect group of the reported order.
    FinitePerfect { order: usize },
    /// The enumeration hit its budget.
    Inconclusive { cosets_used: usize, limit: usize },
}

pub fn verify_trivial(p: &Presentation, max_cosets: usize) -> TrivialityVerdict {
    let h1 = abelianization(p);
    if !h1.is_empty() {
        return TrivialityVerdict::NontrivialH1(h1);
    }
    match todd_coxeter(p, max_cosets) {
        EnumResult::Finite { order: 1 } => TrivialityVerdict::Trivial,
        EnumResult::Finite { order } => TrivialityVerdict::FinitePerfect { order },
        EnumResult::Inconclusive { cosets_used, limit } => {
            TrivialityVerdict::Inconclusive { cosets_used, limit }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgroups::families::{
        build_family_presentation, build_family_presentation_with, CommutatorConvention,
        FamilyParams, XiMode,
    };
    use crate::fpgroups::parse::parse_presentation;

    const LIMIT: usize = 1_000_000;

    #[test]
    fn free_abelian_is_caught_by_h1() {
        let p = parse_presentation("gens: a b ; rels: [a,b]").unwrap();
        match verify_trivial(&p, LIMIT) {
            TrivialityVerdict::NontrivialH1(factors) => {
                assert_eq!(factors, [BigInt::from(0), BigInt::from(0)]);
            }
            other => panic!("expected NontrivialH1, got {other:?}"),
        }
    }

    #[test]
    fn perfect_but_not_trivial_is_distinguished() {
        let p = parse_presentation("gens: a b ; rels: a^2, b^3, (a b)^5").unwrap();
        assert_eq!(verify_trivial(&p, LIMIT), TrivialityVerdict::FinitePerfect { order: 60 });
    }

    #[test]
    fn k3_families_are_trivial() {
        for n in 1..=3 {
            let p = build_family_presentation(FamilyParams::new(3, n)).unwrap();
            assert_eq!(verify_trivial(&p, LIMIT), TrivialityVerdict::Trivial, "n = {n}");
        }
    }

    #[test]
    fn k2_family_spot_checks() {
        for (n, kappa) in [(1, 0), (2, -2), (3, 2)] {
            let p = build_family_presentation(FamilyParams::with_kappa(2, n, kappa)).unwrap();
            assert_eq!(
                verify_trivial(&p, LIMIT),
                TrivialityVerdict::Trivial,
                "n = {n}, kappa = {kappa}"
            );
        }
    }

    #[test]
    fn k4_and_k7_spot_checks() {
        let p = build_family_presentation(FamilyParams::with_kappa(4, 2, 1)).unwrap();
        assert_eq!(verify_trivial(&p, LIMIT), TrivialityVerdict::Trivial);
        let p = build_family_presentation(FamilyParams::new(7, 3)).unwrap();
        assert_eq!(verify_trivial(&p, LIMIT), TrivialityVerdict::Trivial);
    }

    #[test]
    fn equivalent_relator_spellings_enumerate_identically() {
        // b1 [a1^-1, b2] = 1 and b1 = [b2, a1^-1] expand to the same
        // normal closure; the enumerations must agree coset for coset.
        for n in 1..=3 {
            let via_product = parse_presentation(&alloc::format!(
                "gens: a1 b1 b2 ; rels: b1 [a1^-1, b2]^{n}, [a1, b2] b1"
            ))
            .unwrap();
            let via_equation = parse_presentation(&alloc::format!(
                "gens: a1 b1 b2 ; rels: b1 ([b2, a1^-1]^{n})^-1, [a1, b2] b1"
            ))
            .unwrap();
            assert_eq!(
                crate::fpgroups::todd_coxeter(&via_product, 10_000),
                crate::fpgroups::todd_coxeter(&via_equation, 10_000),
                "n = {n}"
            );
        }
    }

    #[test]
    fn xi_modes_agree() {
        for (k, n, kappa) in [(2, 1, 1), (2, 2, -1), (4, 1, 2), (4, 3, 0)] {
            let expanded = build_family_presentation_with(
                FamilyParams::with_kappa(k, n, kappa),
                CommutatorConvention::default(),
                XiMode::Expanded,
            )
            .unwrap();
            let generators = build_family_presentation_with(
                FamilyParams::with_kappa(k, n, kappa),
                CommutatorConvention::default(),
                XiMode::Generators,
            )
            .unwrap();
            assert_eq!(
                verify_trivial(&expanded, LIMIT),
                verify_trivial(&generators, LIMIT),
                "k = {k}, n = {n}, kappa = {kappa}"
            );
        }
    }

    #[test]
    fn opposite_commutator_convention_spot_checks() {
        for (k, n, kappa) in [(3, 2, None), (7, 4, None), (2, 1, Some(-2)), (4, 2, Some(2))] {
            let params = FamilyParams { k, n, kappa };
            let p = build_family_presentation_with(
                params,
                CommutatorConvention::InverseUv,
                XiMode::Expanded,
            )
            .unwrap();
            assert_eq!(
                verify_trivial(&p, LIMIT),
                TrivialityVerdict::Trivial,
                "k = {k}, n = {n}, kappa = {kappa:?}"
            );
        }
    }
}
