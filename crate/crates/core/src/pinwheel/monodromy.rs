//! Gluing matrices for circle-bundle interfaces and the monodromy test for
//! closing a cyclic sum of components around a central torus.

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::zlin::{mat2_product, MatZ2};

/// Interface regluing between adjacent components: `[[0, 1], [-1, 0]]`.
pub fn gluing_phi() -> MatZ2 {
    MatZ2::new(0, 1, -1, 0)
}

/// Tubular-neighborhood gluing for an interface surface of self-intersection
/// `m` on the outgoing side: `[[1, m], [0, -1]]`.
pub fn gluing_alpha(m: i64) -> MatZ2 {
    MatZ2::new(1, m, 0, -1)
}

/// Tubular-neighborhood gluing for an interface surface of self-intersection
/// `n` on the incoming side: `[[-1, 0], [n, 1]]`.
pub fn gluing_beta(n: i64) -> MatZ2 {
    MatZ2::new(-1, 0, n, 1)
}

/// Per-step boundary monodromy `[[a, 1], [-1, 0]]`, where `a = n_i + m_(i+1)`
/// is the sum of adjacent interface self-intersections. Equals
/// `gluing_alpha(m)^-1 * gluing_phi() * gluing_beta(n)` for any split
/// `a = n + m`, which the tests verify exhaustively.
pub fn theta(a: i64) -> MatZ2 {
    MatZ2::new(a, 1, -1, 0)
}

/// Outcome of the cyclic monodromy product. Either sign of the identity
/// certifies that the components close up into a pinwheel (the minus case
/// after flipping one gluing by the boundary reflection).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MonodromyClass {
    PlusId,
    MinusId,
    Neither(MatZ2),
}

impl MonodromyClass {
    pub fn certifies_existence(&self) -> bool {
        !matches!(self, MonodromyClass::Neither(_))
    }
}

/// Classifies the product `theta(a_k) * ... * theta(a_1)` of the step
/// monodromies of a cyclic self-intersection sequence.
pub fn monodromy_check(a_seq: &[i64]) -> MonodromyClass {
    assert!(!a_seq.is_empty(), "monodromy_check requires a nonempty sequence");
    let factors: Vec<MatZ2> = a_seq.iter().map(|&a| theta(a)).collect();
    let product = mat2_product(&factors);
    if product.is_identity() {
        MonodromyClass::PlusId
    } else if product.is_minus_identity() {
        MonodromyClass::MinusId
    } else {
        MonodromyClass::Neither(product)
    }
}

/// Closed polynomial form of the 4-step monodromy product
/// `theta(a4) * theta(a3) * theta(a2) * theta(a1)`.
///
/// The four polynomials are `1 - a2 a3`, `a1 + a3 - a1 a2 a3`,
/// `-a2 - a4 + a2 a3 a4` and `1 - a1 a2 - a1 a4 - a3 a4 + a1 a2 a3 a4`;
/// in the basis ordering of [`theta`] they occupy the positions `d`, `c`,
/// `b`, `a` respectively (the classical display lists them with the two
/// basis vectors swapped). The tests confirm the equality exhaustively.
pub fn closed_form_product4(a: [i64; 4]) -> MatZ2 {
    let [a1, a2, a3, a4] = a.map(BigInt::from);
    MatZ2 {
        a: BigInt::from(1) - &a1 * &a2 - &a1 * &a4 - &a3 * &a4 + &a1 * &a2 * &a3 * &a4,
        b: -&a2 - &a4 + &a2 * &a3 * &a4,
        c: &a1 + &a3 - &a1 * &a2 * &a3,
        d: BigInt::from(1) - &a2 * &a3,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gluing_matrices_match_their_definitions() {
        assert_eq!(gluing_phi(), MatZ2::new(0, 1, -1, 0));
        assert_eq!(gluing_alpha(0), MatZ2::new(1, 0, 0, -1));
        assert_eq!(gluing_beta(0), MatZ2::new(-1, 0, 0, 1));
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta(-1), MatZ2::new(-1, 1, -1, 0));
        assert_eq!(theta(0), MatZ2::new(0, 1, -1, 0));
        assert_eq!(theta(5), MatZ2::new(5, 1, -1, 0));
    }

    #[test]
    fn theta_factors_through_the_gluings() {
        // theta(n + m) = alpha(m)^-1 * phi * beta(n), exhaustively for small m, n.
        for m in -50i64..=50 {
            for n in -50i64..=50 {
                let composed =
                    gluing_alpha(m).inverse().mul(&gluing_phi()).mul(&gluing_beta(n));
                assert_eq!(composed, theta(n + m), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn threefold_sum_condition() {
        assert_eq!(monodromy_check(&[-1, -1, -1]), MonodromyClass::PlusId);
    }

    #[test]
    fn fourfold_sum_condition() {
        assert_eq!(monodromy_check(&[0, 0, 0, 0]), MonodromyClass::PlusId);
    }

    #[test]
    fn alternating_2_1_sequence_is_minus_identity() {
        assert_eq!(monodromy_check(&[-2, -1, -2, -1]), MonodromyClass::MinusId);
        // Independent oracle: the closed polynomial form of the product.
        assert!(closed_form_product4([-2, -1, -2, -1]).is_minus_identity());
    }

    #[test]
    fn neither_case_reports_the_product() {
        match monodromy_check(&[1]) {
            MonodromyClass::Neither(m) => assert_eq!(m, theta(1)),
            other => panic!("expected Neither, got {other:?}"),
        }
    }

    #[test]
    fn closed_form_matches_product_for_small_entries() {
        for a1 in -10i64..=10 {
            for a2 in -10i64..=10 {
                for a3 in -10i64..=10 {
                    for a4 in -10i64..=10 {
                        let product = mat2_product(&[theta(a1), theta(a2), theta(a3), theta(a4)]);
                        assert_eq!(
                            product,
                            closed_form_product4([a1, a2, a3, a4]),
                            "a = ({a1}, {a2}, {a3}, {a4})"
                        );
                    }
                }
            }
        }
    }
}
