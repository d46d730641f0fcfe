//! Canonical-genus feasibility for the pinwheel surgery technique. The
//! surgered model's canonical class has genus `10 - k`, while every surgered
//! component raises the achievable genus by two from the base value one, and
//! the technique can never land below genus three.

use core::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FeasibilityReport {
    pub k: u32,
    pub surgered_components: u32,
    /// Genus the construction must realize: `10 - k`.
    pub required_genus: i64,
    /// Least genus the surgery count can produce: `1 + 2 * surgered`.
    pub lower_bound: i64,
    pub feasible: bool,
    /// Whether the required genus clears the global floor of three.
    pub meets_global_bound: bool,
}

impl fmt::Display for FeasibilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "k = {}: required genus {}, lower bound {}, {}",
            self.k,
            self.required_genus,
            self.lower_bound,
            if self.feasible { "feasible" } else { "infeasible" }
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenusError {
    KOutOfRange(u32),
    NoSurgeredComponents,
}

impl fmt::Display for GenusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenusError::KOutOfRange(k) => write!(f, "k must lie in 2..=9, got {k}"),
            GenusError::NoSurgeredComponents => write!(f, "need at least one surgered component"),
        }
    }
}

pub fn canonical_genus_feasibility(
    k: u32,
    surgered_components: u32,
) -> Result<FeasibilityReport, GenusError> {
    if !(2..=9).contains(&k) {
        return Err(GenusError::KOutOfRange(k));
    }
    if surgered_components == 0 {
        return Err(GenusError::NoSurgeredComponents);
    }
    let required_genus = 10 - i64::from(k);
    let lower_bound = 1 + 2 * i64::from(surgered_components);
    Ok(FeasibilityReport {
        k,
        surgered_components,
        required_genus,
        lower_bound,
        feasible: required_genus >= lower_bound,
        meets_global_bound: required_genus >= 3,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_blowups_three_components() {
        let r = canonical_genus_feasibility(3, 3).unwrap();
        assert_eq!((r.required_genus, r.lower_bound), (7, 7));
        assert!(r.feasible);
    }

    #[test]
    fn eight_blowups_cannot_work() {
        let r = canonical_genus_feasibility(8, 1).unwrap();
        assert_eq!(r.required_genus, 2);
        assert_eq!(r.lower_bound, 3);
        assert!(!r.feasible);
        assert!(!r.meets_global_bound);
    }

    #[test]
    fn seven_blowups_single_component_is_tight() {
        let r = canonical_genus_feasibility(7, 1).unwrap();
        assert_eq!((r.required_genus, r.lower_bound), (3, 3));
        assert!(r.feasible);
        assert!(r.meets_global_bound);
    }

    #[test]
    fn out_of_range_inputs() {
        assert_eq!(canonical_genus_feasibility(1, 1), Err(GenusError::KOutOfRange(1)));
        assert_eq!(canonical_genus_feasibility(10, 1), Err(GenusError::KOutOfRange(10)));
        assert_eq!(canonical_genus_feasibility(4, 0), Err(GenusError::NoSurgeredComponents));
    }

    #[test]
    fn monotone_in_k_and_surgeries() {
        // Raising k or the surgered count never flips infeasible to feasible.
        for k in 2..=8u32 {
            for s in 1..=4u32 {
                let here = canonical_genus_feasibility(k, s).unwrap().feasible;
                let more_k = canonical_genus_feasibility(k + 1, s).unwrap().feasible;
                let more_s = canonical_genus_feasibility(k, s + 1).unwrap().feasible;
                assert!(!(!here && more_k), "k = {k}, s = {s}");
                assert!(!(!here && more_s), "k = {k}, s = {s}");
            }
        }
    }
}
