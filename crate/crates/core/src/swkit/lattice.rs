//! The odd lattice `<1> + (rank-1) <-1>` with basis `h, e1, ..., e_(rank-1)`,
//! characteristic classes written `a h - sum b_i e_i`, and the exhaustive
//! basic-class search under generalized adjunction constraints.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// The diagonal odd lattice of signature `2 - rank`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct OddLattice {
    pub rank: usize,
}

impl OddLattice {
    pub fn new(rank: usize) -> Self {
        assert!(rank >= 1);
        OddLattice { rank }
    }

    pub fn signature(&self) -> i64 {
        2 - self.rank as i64
    }
}

/// An integer class `coeffs[0] * h - sum_i coeffs[i] * e_i`. The same
/// storage convention serves surfaces and characteristic classes; the
/// pairing of two classes is `a a' - sum b_i b_i'` either way.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct CharClass {
    pub coeffs: Vec<i64>,
}

impl CharClass {
    pub fn new(coeffs: Vec<i64>) -> Self {
        CharClass { coeffs }
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn dot(&self, other: &CharClass) -> i64 {
        assert_eq!(self.coeffs.len(), other.coeffs.len(), "rank mismatch");
        let mut acc = self.coeffs[0] * other.coeffs[0];
        for i in 1..self.coeffs.len() {
            acc -= self.coeffs[i] * other.coeffs[i];
        }
        acc
    }

    pub fn square(&self) -> i64 {
        self.dot(self)
    }

    pub fn negated(&self) -> CharClass {
        CharClass::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn minus(&self, other: &CharClass) -> CharClass {
        CharClass::new(
            self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        )
    }

    /// Characteristic for the diagonal odd form: every coefficient odd.
    pub fn is_characteristic(&self) -> bool {
        self.coeffs.iter().all(|c| c % 2 != 0)
    }
}

impl fmt::Display for CharClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, &c) in self.coeffs.iter().enumerate() {
            // Stored as a h - sum b_i e_i: the printed coefficient of e_i is -b_i.
            let printed = if i == 0 { c } else { -c };
            if printed == 0 {
                continue;
            }
            let label = if i == 0 { String::from("h") } else { format!("e{i}") };
            let mag = printed.abs();
            if wrote {
                write!(f, " {} ", if printed < 0 { "-" } else { "+" })?;
            } else if printed < 0 {
                write!(f, "-")?;
            }
            if mag == 1 {
                write!(f, "{label}")?;
            } else {
                write!(f, "{mag}{label}")?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// An embedded-surface constraint: the class it represents and its genus.
/// A basic class `k` must satisfy `|k . S| + S . S <= 2g - 2`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AdjConstraint {
    pub surface: CharClass,
    pub genus: u32,
}

impl AdjConstraint {
    pub fn new(surface: CharClass, genus: u32) -> Self {
        AdjConstraint { surface, genus }
    }

    pub fn bound(&self) -> i64 {
        2 * i64::from(self.genus) - 2 - self.surface.square()
    }

    pub fn admits(&self, class: &CharClass) -> bool {
        class.dot(&self.surface).abs() <= self.bound()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SwError {
    EmptyConstraints,
    BadBound(i64),
    RankMismatch { lattice: usize, class: usize },
    NotNegationClosed(CharClass),
}

impl fmt::Display for SwError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SwError::EmptyConstraints => write!(f, "constraint list must be nonempty"),
            SwError::BadBound(b) => write!(f, "coefficient bound must be positive, got {b}"),
            SwError::RankMismatch { lattice, class } => {
                write!(f, "class rank {class} does not match lattice rank {lattice}")
            }
            SwError::NotNegationClosed(c) => {
                write!(f, "class list is not closed under negation (missing -({c}))")
            }
        }
    }
}

/// Result of [`enumerate_basic_classes`]: the classes found in the box, and
/// any coordinates the constraint set provably fails to confine within the
/// box (in which case the enumeration is exhaustive only for the box).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicClassSearch {
    pub classes: Vec<CharClass>,
    pub unconfined: Vec<usize>,
}

/// Interval propagation: from `|k . S| <= bound(S)` derive per-coordinate
/// bounds, iterating so that constraints mixing several coordinates sharpen
/// once their partners are bounded. Returns `None` entries for coordinates
/// never pinned down.
fn confinement_bounds(rank: usize, constraints: &[AdjConstraint]) -> Vec<Option<i64>> {
    let mut bounds: Vec<Option<i64>> = vec![None; rank];
    for _ in 0..=rank {
        let mut changed = false;
        for c in constraints {
            let b = c.bound();
            if b < 0 {
                // Unsatisfiable constraint: everything is (vacuously) confined.
                return vec![Some(0); rank];
            }
            for j in 0..rank {
                let wj = c.surface.coeffs[j];
                if wj == 0 {
                    continue;
                }
                let mut slack: i64 = b;
                let mut ok = true;
                for l in 0..rank {
                    if l == j {
                        continue;
                    }
                    let wl = c.surface.coeffs[l];
                    if wl == 0 {
                        continue;
                    }
                    match bounds[l] {
                        Some(bl) => slack += wl.abs() * bl,
                        None => {
                            ok = false;
                            break;
                        }
                    }
                }
                if !ok {
                    continue;
                }
                let candidate = slack / wj.abs();
                if bounds[j].map_or(true, |cur| candidate < cur) {
                    bounds[j] = Some(candidate);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    bounds
}

/// Exhaustively searches the box `|coeff| <= bound` for characteristic
/// classes of the prescribed square satisfying every adjunction constraint.
/// Output is sorted lexicographically and closed under negation (the
/// constraints are symmetric under it). `unconfined` names the coordinates
/// the constraints do not pin inside the box.
pub fn enumerate_basic_classes(
    lattice: &OddLattice,
    constraints: &[AdjConstraint],
    c_square: i64,
    bound: i64,
) -> Result<BasicClassSearch, SwError> {
    if constraints.is_empty() {
        return Err(SwError::EmptyConstraints);
    }
    if bound < 1 {
        return Err(SwError::BadBound(bound));
    }
    for c in constraints {
        if c.surface.rank() != lattice.rank {
            return Err(SwError::RankMismatch { lattice: lattice.rank, class: c.surface.rank() });
        }
    }

    let rank = lattice.rank;
    let odd_values: Vec<i64> = {
        let mut v: Vec<i64> = (-bound..=bound).filter(|x| x % 2 != 0).collect();
        v.sort_unstable();
        v
    };

    let mut classes = Vec::new();
    let mut coeffs = vec![0i64; rank];
    fn walk(
        odd_values: &[i64],
        coeffs: &mut Vec<i64>,
        depth: usize,
        constraints: &[AdjConstraint],
        c_square: i64,
        out: &mut Vec<CharClass>,
    ) {
        if depth == coeffs.len() {
            let class = CharClass::new(coeffs.clone());
            if class.square() == c_square && constraints.iter().all(|c| c.admits(&class)) {
                out.push(class);
            }
            return;
        }
        for &v in odd_values {
            coeffs[depth] = v;
            walk(odd_values, coeffs, depth + 1, constraints, c_square, out);
        }
    }
    walk(&odd_values, &mut coeffs, 0, constraints, c_square, &mut classes);
    classes.sort();

    let bounds = confinement_bounds(rank, constraints);
    let unconfined = (0..rank)
        .filter(|&j| bounds[j].map_or(true, |bj| bj > bound))
        .collect();

    Ok(BasicClassSearch { classes, unconfined })
}

/// Minimality witness: either no two classes differ by a square `-4` class,
/// or the offending pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinimalityOutcome {
    Minimal { difference_squares: Vec<i64> },
    PossiblyNonminimal { pair: (CharClass, CharClass) },
}

/// Scans ordered pairs of distinct basic classes for a difference of square
/// `-4`, the numerical footprint of a (-1)-sphere. Requires the list closed
/// under negation, which is how real basic-class sets arrive.
pub fn minimality_check(classes: &[CharClass]) -> Result<MinimalityOutcome, SwError> {
    for c in classes {
        if !classes.iter().any(|d| d == &c.negated()) {
            return Err(SwError::NotNegationClosed(c.clone()));
        }
    }
    let mut squares = Vec::new();
    for x in classes {
        for y in classes {
            if x == y {
                continue;
            }
            let d = x.minus(y).square();
            if d == -4 {
                return Ok(MinimalityOutcome::PossiblyNonminimal {
                    pair: (x.clone(), y.clone()),
                });
            }
            if !squares.contains(&d) {
                squares.push(d);
            }
        }
    }
    squares.sort_unstable();
    Ok(MinimalityOutcome::Minimal { difference_squares: squares })
}

/// The constraint set for the three-fold-blowup family: genus-2 surfaces on
/// `h - e_i`, tori on each `e_i`, and a genus-3 surface on `h`.
pub fn k3_constraints() -> (OddLattice, Vec<AdjConstraint>, i64) {
    let lattice = OddLattice::new(4);
    let mut constraints = Vec::new();
    for i in 1..=3 {
        let mut s = vec![0i64; 4];
        s[0] = 1;
        s[i] = 1; // h - e_i
        constraints.push(AdjConstraint::new(CharClass::new(s), 2));
    }
    for i in 1..=3 {
        let mut s = vec![0i64; 4];
        s[i] = -1; // e_i
        constraints.push(AdjConstraint::new(CharClass::new(s), 1));
    }
    constraints.push(AdjConstraint::new(CharClass::new(vec![1, 0, 0, 0]), 3));
    (lattice, constraints, 6)
}

/// The constraint set for the two-fold-blowup family.
pub fn k2_constraints() -> (OddLattice, Vec<AdjConstraint>, i64) {
    let lattice = OddLattice::new(3);
    let constraints = vec![
        AdjConstraint::new(CharClass::new(vec![1, 1, 0]), 2),  // h - e1
        AdjConstraint::new(CharClass::new(vec![1, 0, 1]), 2),  // h - e2
        AdjConstraint::new(CharClass::new(vec![0, -1, 0]), 1), // e1
        AdjConstraint::new(CharClass::new(vec![1, 0, 0]), 3),  // h
    ];
    (lattice, constraints, 7)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn class(coeffs: &[i64]) -> CharClass {
        CharClass::new(coeffs.to_vec())
    }

    #[test]
    fn display_form() {
        assert_eq!(class(&[3, 1, 1, 1]).to_string(), "3h - e1 - e2 - e3");
        assert_eq!(class(&[-3, -1, -1, -1]).to_string(), "-3h + e1 + e2 + e3");
        assert_eq!(class(&[1, -2, 0]).to_string(), "h + 2e1");
        assert_eq!(class(&[0, 0]).to_string(), "0");
    }

    #[test]
    fn k3_search_finds_exactly_the_pair() {
        let (lattice, constraints, c_square) = k3_constraints();
        let found = enumerate_basic_classes(&lattice, &constraints, c_square, 5).unwrap();
        assert_eq!(found.classes, vec![class(&[-3, -1, -1, -1]), class(&[3, 1, 1, 1])]);
        assert!(found.unconfined.is_empty());
        assert!(found.classes.iter().all(|c| c.square() == 6));
    }

    #[test]
    fn k2_search_finds_exactly_the_pair() {
        let (lattice, constraints, c_square) = k2_constraints();
        let found = enumerate_basic_classes(&lattice, &constraints, c_square, 5).unwrap();
        assert_eq!(found.classes, vec![class(&[-3, -1, -1]), class(&[3, 1, 1])]);
        assert!(found.unconfined.is_empty());
        assert_eq!(found.classes[1].to_string(), "3h - e1 - e2");
    }

    #[test]
    fn wrong_square_parity_is_empty() {
        // Characteristic squares are congruent to the signature mod 8.
        let lattice = OddLattice::new(3);
        let constraints = vec![AdjConstraint::new(class(&[1, 0, 0]), 3)];
        let found = enumerate_basic_classes(&lattice, &constraints, 6, 5).unwrap();
        assert!(found.classes.is_empty());
    }

    #[test]
    fn unconfined_coordinate_is_reported() {
        let lattice = OddLattice::new(3);
        // Only h is constrained; e1 and e2 roam free.
        let constraints = vec![AdjConstraint::new(class(&[1, 0, 0]), 3)];
        let found = enumerate_basic_classes(&lattice, &constraints, -1, 3).unwrap();
        assert_eq!(found.unconfined, vec![1, 2]);
    }

    #[test]
    fn empty_constraints_and_bad_bound_are_rejected() {
        let lattice = OddLattice::new(2);
        assert_eq!(
            enumerate_basic_classes(&lattice, &[], 0, 5),
            Err(SwError::EmptyConstraints)
        );
        let constraints = vec![AdjConstraint::new(class(&[1, 0]), 1)];
        assert_eq!(
            enumerate_basic_classes(&lattice, &constraints, 0, 0),
            Err(SwError::BadBound(0))
        );
    }

    #[test]
    fn minimality_of_the_k3_pair() {
        let classes = vec![class(&[3, 1, 1, 1]), class(&[-3, -1, -1, -1])];
        match minimality_check(&classes).unwrap() {
            MinimalityOutcome::Minimal { difference_squares } => {
                assert_eq!(difference_squares, vec![24]);
            }
            other => panic!("expected Minimal, got {other:?}"),
        }
    }

    #[test]
    fn blowup_pair_is_flagged() {
        // kappa +- e with e^2 = -1: difference 2e has square -4.
        let classes = vec![
            class(&[3, 1, 1, 0]),
            class(&[3, 1, 1, 2]),
            class(&[-3, -1, -1, 0]),
            class(&[-3, -1, -1, -2]),
        ];
        match minimality_check(&classes).unwrap() {
            MinimalityOutcome::PossiblyNonminimal { pair } => {
                assert_eq!(pair.0.minus(&pair.1).square(), -4);
            }
            other => panic!("expected PossiblyNonminimal, got {other:?}"),
        }
    }

    #[test]
    fn single_pair_far_apart_is_minimal() {
        // (2 kappa)^2 = -8 here, so the pair does not trip the -4 witness.
        let classes = vec![class(&[1, 1, 1, 1]), class(&[-1, -1, -1, -1])];
        match minimality_check(&classes).unwrap() {
            MinimalityOutcome::Minimal { difference_squares } => {
                assert_eq!(difference_squares, vec![-8]);
            }
            other => panic!("expected Minimal, got {other:?}"),
        }
    }

    #[test]
    fn negation_closure_is_enforced() {
        let classes = vec![class(&[3, 1, 1])];
        assert!(matches!(minimality_check(&classes), Err(SwError::NotNegationClosed(_))));
    }

    proptest! {
        /// Characteristic classes have square congruent to the signature mod 8,
        /// so every enumerated class does.
        #[test]
        fn enumerated_squares_match_signature_mod_8(
            rank in 2usize..=4,
            c_square in -16i64..=16,
        ) {
            let lattice = OddLattice::new(rank);
            let mut constraints = alloc::vec![
                AdjConstraint::new(CharClass::new({
                    let mut s = alloc::vec![0i64; rank];
                    s[0] = 1;
                    s
                }), 3),
            ];
            for i in 1..rank {
                let mut s = alloc::vec![0i64; rank];
                s[i] = -1;
                constraints.push(AdjConstraint::new(CharClass::new(s), 1));
            }
            let found = enumerate_basic_classes(&lattice, &constraints, c_square, 3).unwrap();
            let sig = lattice.signature();
            for c in &found.classes {
                prop_assert!(c.is_characteristic());
                prop_assert_eq!((c.square() - sig).rem_euclid(8), 0);
            }
            // Negation closure.
            for c in &found.classes {
                prop_assert!(found.classes.contains(&c.negated()));
            }
        }
    }
}
