//! Abelianization: the relator exponent-sum matrix in Smith normal form.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::word::Presentation;
use crate::zlin::{smith_normal_form, IntMatrix};

/// Invariant factors of the abelianized group, in divisibility order with
/// trivial factors dropped and one `0` per free summand. The empty list is
/// the trivial group.
pub fn abelianization(p: &Presentation) -> Vec<BigInt> {
    let ngens = p.generators().len();
    let nrels = p.relators().len();
    let mut m = IntMatrix::zero(nrels.max(1), ngens);
    for (i, r) in p.relators().iter().enumerate() {
        for (j, sum) in r.exponent_sums(ngens).into_iter().enumerate() {
            m.set(i, j, sum);
        }
    }
    let snf = smith_normal_form(&m);
    let diag = snf.diagonal();
    let rank = diag.iter().filter(|d| !d.is_zero()).count();
    let mut factors: Vec<BigInt> =
        diag.into_iter().filter(|d| !d.is_zero() && !d.is_one()).collect();
    for _ in 0..ngens - rank {
        factors.push(BigInt::zero());
    }
    factors
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgroups::parse::parse_presentation;

    fn factors(text: &str) -> Vec<i64> {
        abelianization(&parse_presentation(text).unwrap())
            .iter()
            .map(|x| i64::try_from(x).unwrap())
            .collect()
    }

    #[test]
    fn free_abelian_rank_two() {
        assert_eq!(factors("gens: a b ; rels: [a,b]"), [0, 0]);
    }

    #[test]
    fn cyclic_three() {
        assert_eq!(factors("gens: a ; rels: a^3"), [3]);
    }

    #[test]
    fn trivializing_relators() {
        assert_eq!(factors("gens: a b ; rels: a, b"), [] as [i64; 0]);
    }

    #[test]
    fn mixed_torsion_and_free() {
        assert_eq!(factors("gens: a b c ; rels: a^2, [b, c]"), [2, 0, 0]);
        assert_eq!(factors("gens: a b ; rels: a^2 b^4, a^2"), [2, 4]);
    }
}
