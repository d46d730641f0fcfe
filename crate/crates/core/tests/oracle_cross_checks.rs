//! Cross-module checks against independently written oracles: a naive
//! full-box scan for basic classes, the closed polynomial form for 4-step
//! monodromies, and direct form analysis for torus-action classification.

use pinwheel_forge_core::pinwheel::{
    closed_form_product4, cyclic_cf_all_zero, monodromy_check, theta, MonodromyClass,
};
use pinwheel_forge_core::swkit::{
    enumerate_basic_classes, k2_constraints, k3_constraints, AdjConstraint, CharClass, OddLattice,
};
use pinwheel_forge_core::torus_actions::{
    classify_action, random_valid_orbit_data, sphere_geometry, SplitMix64,
};
use pinwheel_forge_core::zlin::mat2_product;

/// Oracle: scan every integer vector in the box (all parities), recompute
/// the pairing longhand, and apply the definitions directly.
fn basic_classes_oracle(
    rank: usize,
    constraints: &[(Vec<i64>, u32)],
    c_square: i64,
    bound: i64,
) -> Vec<Vec<i64>> {
    fn pairing(x: &[i64], y: &[i64]) -> i64 {
        let mut acc = 0;
        for i in 0..x.len() {
            let sign = if i == 0 { 1 } else { -1 };
            acc += sign * x[i] * y[i];
        }
        acc
    }
    let mut found = Vec::new();
    let side = (2 * bound + 1) as usize;
    let total = side.pow(rank as u32);
    for code in 0..total {
        let mut v = vec![0i64; rank];
        let mut rest = code;
        for slot in v.iter_mut() {
            *slot = (rest % side) as i64 - bound;
            rest /= side;
        }
        if v.iter().any(|c| c % 2 == 0) {
            continue; // not characteristic in the odd diagonal lattice
        }
        if pairing(&v, &v) != c_square {
            continue;
        }
        let ok = constraints.iter().all(|(s, g)| {
            pairing(&v, s).abs() + pairing(s, s) <= 2 * i64::from(*g) - 2
        });
        if ok {
            found.push(v);
        }
    }
    found.sort();
    found
}

#[test]
fn shipped_constraint_sets_match_the_oracle() {
    for (lattice, constraints, c_square) in [k3_constraints(), k2_constraints()] {
        let got = enumerate_basic_classes(&lattice, &constraints, c_square, 5).unwrap();
        let raw: Vec<(Vec<i64>, u32)> =
            constraints.iter().map(|c| (c.surface.coeffs.clone(), c.genus)).collect();
        let expected = basic_classes_oracle(lattice.rank, &raw, c_square, 5);
        let got_coeffs: Vec<Vec<i64>> = got.classes.iter().map(|c| c.coeffs.clone()).collect();
        assert_eq!(got_coeffs, expected);
    }
}

#[test]
fn random_constraint_sets_match_the_oracle() {
    let mut rng = SplitMix64::new(0xbeef);
    for _ in 0..60 {
        let rank = 2 + (rng.below(3) as usize);
        let lattice = OddLattice::new(rank);
        let ncon = 1 + rng.below(3) as usize;
        let mut constraints = Vec::new();
        let mut raw = Vec::new();
        for _ in 0..ncon {
            let coeffs: Vec<i64> =
                (0..rank).map(|_| (rng.below(5) as i64) - 2).collect();
            let genus = rng.below(4) as u32;
            raw.push((coeffs.clone(), genus));
            constraints.push(AdjConstraint::new(CharClass::new(coeffs), genus));
        }
        let c_square = (rng.below(17) as i64) - 8;
        let bound = 3;
        let got = enumerate_basic_classes(&lattice, &constraints, c_square, bound).unwrap();
        let expected = basic_classes_oracle(rank, &raw, c_square, bound);
        let got_coeffs: Vec<Vec<i64>> = got.classes.iter().map(|c| c.coeffs.clone()).collect();
        assert_eq!(got_coeffs, expected, "rank {rank}, c^2 {c_square}, constraints {raw:?}");
    }
}

#[test]
fn four_step_scan_certificates_and_closed_forms() {
    let mut certified = 0usize;
    for a1 in -6i64..=6 {
        for a2 in -6i64..=6 {
            for a3 in -6i64..=6 {
                for a4 in -6i64..=6 {
                    let seq = [a1, a2, a3, a4];
                    let product =
                        mat2_product(&[theta(a1), theta(a2), theta(a3), theta(a4)]);
                    assert_eq!(product, closed_form_product4(seq), "{seq:?}");
                    if cyclic_cf_all_zero(&seq).unwrap() {
                        assert!(
                            monodromy_check(&seq).certifies_existence(),
                            "vanishing cyclic fractions but open monodromy at {seq:?}"
                        );
                        certified += 1;
                    }
                }
            }
        }
    }
    // The criterion is not vacuous on this range: besides the periodic
    // solutions there is a (0, x, 0, -x) family for every x.
    assert!(certified > 20, "only {certified} certified sequences");
}

#[test]
fn classification_betti_agrees_with_the_form_report() {
    let mut rng = SplitMix64::new(0xcafe);
    for round in 0..300 {
        let k = 3 + (round % 6) as usize; // up to 8 pairs
        let d = random_valid_orbit_data(&mut rng, k);
        let config = sphere_geometry(&d).unwrap();
        assert_eq!(config.b2(), k as i64 - 2);
        let c = classify_action(&d).unwrap();
        let (b_plus, b_minus) = c.betti();
        assert_eq!(b_plus + b_minus, k as i64 - 2, "{d}");
        match monodromy_check(&config.self_ints) {
            MonodromyClass::Neither(m) => {
                panic!("self-intersection steps of {d} do not close: {m}")
            }
            _ => {}
        }
    }
}
