//! Orbit data and what it determines: the invariant-sphere configuration,
//! the intersection form, and a pinwheel structure.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::pinwheel::{
    monodromy_check, Certification, InterfaceSurface, MonodromyClass, Pinwheel, PinwheelComponent,
    TargetInvariants,
};
use crate::validate::ValidationReport;
use crate::zlin::{gram_analyze, FormReport, IntMatrix, MatZ2, Parity};

/// A cyclic sequence of coprime integer pairs labelling the isotropy circles
/// over the boundary segments of the orbit disk. Valid data has every
/// adjacent determinant equal to plus or minus one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrbitData {
    pub pairs: Vec<(i64, i64)>,
}

impl OrbitData {
    pub fn new(pairs: Vec<(i64, i64)>) -> Self {
        OrbitData { pairs }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Determinant `p_r q_s - p_s q_r` of the pairs at positions `r`, `s`
    /// (cyclic).
    pub fn det(&self, r: usize, s: usize) -> i64 {
        let k = self.pairs.len();
        let (pr, qr) = self.pairs[r % k];
        let (ps, qs) = self.pairs[s % k];
        pr * qs - ps * qr
    }

    pub fn rotated(&self, by: usize) -> OrbitData {
        let k = self.pairs.len();
        OrbitData::new((0..k).map(|i| self.pairs[(i + by) % k]).collect())
    }

    pub fn reversed(&self) -> OrbitData {
        let mut pairs = self.pairs.clone();
        pairs.reverse();
        OrbitData::new(pairs)
    }
}

impl fmt::Display for OrbitData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (p, q)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "({p},{q})")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDataParseError {
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for OrbitDataParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "orbit data parse error at byte {}: {}", self.offset, self.message)
    }
}

/// Parses the semicolon-separated `(p,q)` text form, e.g.
/// `(1,-1);(0,1);(1,-1);(2,-1)`. Whitespace is ignored everywhere.
pub fn parse_orbit_data(text: &str) -> Result<OrbitData, OrbitDataParseError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut pairs = Vec::new();
    if compact.is_empty() {
        return Ok(OrbitData::new(pairs));
    }
    for (i, chunk) in compact.split(';').enumerate() {
        let err = |message: &str| OrbitDataParseError { offset: i, message: message.to_string() };
        let inner = chunk
            .strip_prefix('(')
            .and_then(|c| c.strip_suffix(')'))
            .ok_or_else(|| err("expected a parenthesized pair like (p,q)"))?;
        let (p, q) = inner.split_once(',').ok_or_else(|| err("expected two comma-separated integers"))?;
        let p = p.parse::<i64>().map_err(|_| err("bad integer"))?;
        let q = q.parse::<i64>().map_err(|_| err("bad integer"))?;
        pairs.push((p, q));
    }
    Ok(OrbitData::new(pairs))
}

/// Itemized check of the orbit-data conditions: coprimality of each pair and
/// adjacent determinants of absolute value one, cyclically.
pub fn validate_orbit_data(d: &OrbitData) -> ValidationReport {
    let mut report = ValidationReport::new();
    let k = d.len();
    report.push("pair count", k >= 2, format!("{k} pairs (need at least 2)"));
    if k < 2 {
        return report;
    }
    for (i, (p, q)) in d.pairs.iter().enumerate() {
        let g = p.gcd(q);
        report.push(format!("gcd at index {i}"), g == 1, format!("gcd({p},{q}) = {g}"));
    }
    for i in 0..k {
        let det = d.det(i, (i + 1) % k);
        report.push(
            format!("adjacent determinant at index {i}"),
            det.abs() == 1,
            format!("det = {det}"),
        );
    }
    report
}

/// The invariant-sphere configuration over the orbit-space boundary:
/// self-intersections and adjacent intersection numbers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SphereConfig {
    /// `A_i^2 = D(i-1,i) * D(i,i+1) * D(i-1,i+1)`, the literal triple
    /// product of adjacent determinants.
    pub self_ints: Vec<i64>,
    /// `A_(i-1) . A_i = D(i-1,i)`, each of absolute value one.
    pub adjacents: Vec<i64>,
}

impl SphereConfig {
    pub fn count(&self) -> usize {
        self.self_ints.len()
    }

    /// Second betti number of the closed manifold: two less than the number
    /// of fixed points.
    pub fn b2(&self) -> i64 {
        self.count() as i64 - 2
    }
}

#[derive(Clone, Debug)]
pub enum OrbitError {
    Invalid(ValidationReport),
    TooFewPairs { got: usize, need: usize },
    RankMismatch { expected: usize, got: usize },
    EvenFormWithSignature(i64),
    MonodromyNotClosed(MatZ2),
}

impl fmt::Display for OrbitError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitError::Invalid(report) => {
                write!(f, "invalid orbit data:")?;
                for item in report.failures() {
                    write!(f, " [{}: {}]", item.label, item.detail)?;
                }
                Ok(())
            }
            OrbitError::TooFewPairs { got, need } => {
                write!(f, "need at least {need} pairs, got {got}")
            }
            OrbitError::RankMismatch { expected, got } => {
                write!(f, "gram rank {got} does not equal fixed-point count minus two ({expected})")
            }
            OrbitError::EvenFormWithSignature(s) => {
                write!(f, "even intersection form with nonzero signature {s} cannot occur here")
            }
            OrbitError::MonodromyNotClosed(m) => {
                write!(f, "synthesized pinwheel has monodromy {m}, not plus/minus identity")
            }
        }
    }
}

fn ensure_valid(d: &OrbitData) -> Result<(), OrbitError> {
    let report = validate_orbit_data(d);
    if report.passed() {
        Ok(())
    } else {
        Err(OrbitError::Invalid(report))
    }
}

/// Sphere self-intersections and adjacencies of valid orbit data.
pub fn sphere_geometry(d: &OrbitData) -> Result<SphereConfig, OrbitError> {
    ensure_valid(d)?;
    let k = d.len();
    let mut self_ints = Vec::with_capacity(k);
    let mut adjacents = Vec::with_capacity(k);
    for i in 0..k {
        let prev = (i + k - 1) % k;
        let next = (i + 1) % k;
        self_ints.push(d.det(prev, i) * d.det(i, next) * d.det(prev, next));
        adjacents.push(d.det(prev, i));
    }
    Ok(SphereConfig { self_ints, adjacents })
}

/// The diffeomorphism type determined by the intersection form: a sphere, or
/// a connected sum of projective planes (both orientations) or twisted
/// products.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ClassificationResult {
    pub cp2_count: usize,
    pub cp2bar_count: usize,
    pub s2xs2_count: usize,
}

impl ClassificationResult {
    pub fn s4() -> Self {
        ClassificationResult { cp2_count: 0, cp2bar_count: 0, s2xs2_count: 0 }
    }

    pub fn is_s4(&self) -> bool {
        self.cp2_count == 0 && self.cp2bar_count == 0 && self.s2xs2_count == 0
    }

    /// Mirror manifold: both projective-plane orientations swap.
    pub fn mirrored(&self) -> Self {
        ClassificationResult {
            cp2_count: self.cp2bar_count,
            cp2bar_count: self.cp2_count,
            s2xs2_count: self.s2xs2_count,
        }
    }

    pub fn betti(&self) -> (i64, i64) {
        (
            (self.cp2_count + self.s2xs2_count) as i64,
            (self.cp2bar_count + self.s2xs2_count) as i64,
        )
    }
}

impl fmt::Display for ClassificationResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_s4() {
            return write!(f, "S4");
        }
        let mut first = true;
        for (count, label) in [
            (self.cp2_count, "CP2"),
            (self.cp2bar_count, "CP2bar"),
            (self.s2xs2_count, "S2xS2"),
        ] {
            if count == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{count} x {label}")?;
            first = false;
        }
        Ok(())
    }
}

/// Assembles the cyclic Gram matrix of the sphere configuration: diagonal
/// self-intersections, adjacent intersection numbers next to the diagonal.
///
/// The raw adjacent determinants are not mutually coherent orientations:
/// flipping one sphere's orientation negates its two incident determinants
/// (a congruence), and in the orientation fixed by the triple-product
/// self-intersections the coherent pairing of adjacent spheres is the
/// negated determinant. With the literal signs the matrix of data like
/// `(1,0);(1,-1);(0,1)` would have full rank instead of `k - 2`.
///
/// With two fixed points the two spheres meet in both of them with opposite
/// signs, so the off-diagonal entry cancels to zero.
pub fn gram_matrix(d: &OrbitData) -> Result<IntMatrix, OrbitError> {
    let config = sphere_geometry(d)?;
    let k = config.count();
    let mut g = IntMatrix::zero(k, k);
    for i in 0..k {
        g.set(i, i, config.self_ints[i]);
    }
    if k == 2 {
        let total = -(d.det(0, 1) + d.det(1, 0));
        g.set(0, 1, total);
        g.set(1, 0, total);
    } else {
        for i in 0..k {
            let next = (i + 1) % k;
            g.set(i, next, -config.adjacents[next]);
            g.set(next, i, -config.adjacents[next]);
        }
    }
    Ok(g)
}

/// Classifies the manifold of valid orbit data from rank, signature and
/// parity of its sphere Gram form.
pub fn classify_action(d: &OrbitData) -> Result<ClassificationResult, OrbitError> {
    let g = gram_matrix(d)?;
    let report: FormReport = gram_analyze(&g).expect("gram matrix is symmetric by construction");
    let expected = d.len() - 2;
    if report.rank != expected {
        return Err(OrbitError::RankMismatch { expected, got: report.rank });
    }
    if report.rank == 0 {
        return Ok(ClassificationResult::s4());
    }
    match report.parity {
        Parity::Odd => {
            let rank = report.rank as i64;
            let plus = (rank + report.signature) / 2;
            let minus = (rank - report.signature) / 2;
            Ok(ClassificationResult {
                cp2_count: plus as usize,
                cp2bar_count: minus as usize,
                s2xs2_count: 0,
            })
        }
        Parity::Even => {
            if report.signature != 0 {
                return Err(OrbitError::EvenFormWithSignature(report.signature));
            }
            Ok(ClassificationResult { cp2_count: 0, cp2bar_count: 0, s2xs2_count: report.rank / 2 })
        }
    }
}

/// Synthesizes a pinwheel structure from a torus action by barycentric
/// subdivision of the orbit polygon: the component over the `i`-th edge is a
/// ruled surface minus a fiber and a section, with the section interface
/// carrying the sphere self-intersection `r_i = A_i^2` and the fiber
/// interface carrying zero.
///
/// The sign of `r_i` is the literal triple-determinant product; with that
/// convention the step sequence is a rotation of `{r_i}` and the monodromy
/// product always closes, which is checked and surfaced as an error rather
/// than assumed.
pub fn barycentric_pinwheel(d: &OrbitData) -> Result<Pinwheel, OrbitError> {
    ensure_valid(d)?;
    if d.len() < 3 {
        return Err(OrbitError::TooFewPairs { got: d.len(), need: 3 });
    }
    let config = sphere_geometry(d)?;
    let classification = classify_action(d)?;
    let (b_plus, b_minus) = classification.betti();

    let components: Vec<PinwheelComponent> = config
        .self_ints
        .iter()
        .map(|&r| {
            PinwheelComponent::new(
                &format!("B{}", r.unsigned_abs()),
                InterfaceSurface::new(0, r),
                InterfaceSurface::new(0, 0),
                1,
            )
            .with_htc()
        })
        .collect();

    let pinwheel = Pinwheel {
        components,
        certification: Certification::Matrix,
        target: TargetInvariants {
            euler: 2 + b_plus + b_minus,
            b_plus,
            b_minus,
            b1: 0,
        },
        surgered_pairs: Some(0),
    };

    match monodromy_check(&pinwheel.step_sequence()) {
        MonodromyClass::Neither(m) => Err(OrbitError::MonodromyNotClosed(m)),
        _ => Ok(pinwheel),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pinwheel::validate_pinwheel;
    use crate::torus_actions::sampling::{random_valid_orbit_data, SplitMix64};
    use proptest::prelude::*;

    fn ruled_example() -> OrbitData {
        OrbitData::new(alloc::vec![(1, -1), (0, 1), (1, -1), (2, -1)])
    }

    #[test]
    fn ruled_example_is_valid() {
        assert!(validate_orbit_data(&ruled_example()).passed());
    }

    #[test]
    fn gcd_violation_is_flagged() {
        let report = validate_orbit_data(&OrbitData::new(alloc::vec![(2, 4), (1, 0)]));
        assert!(!report.passed());
        assert!(report.failures().any(|i| i.label.contains("gcd at index 0")));
    }

    #[test]
    fn determinant_violation_names_the_index() {
        let report = validate_orbit_data(&OrbitData::new(alloc::vec![(1, 0), (2, 1), (1, 0)]));
        assert!(!report.passed());
        // det of ((2,1),(1,0)) is -1, fine; det of ((1,0),(1,0)) wraps and is 0.
        assert!(report.failures().any(|i| i.label.contains("adjacent determinant")));
    }

    #[test]
    fn ruled_example_sphere_geometry() {
        let config = sphere_geometry(&ruled_example()).unwrap();
        assert_eq!(config.self_ints, [-2, 0, 2, 0]);
        assert_eq!(config.b2(), 2);
        assert!(config.adjacents.iter().all(|a| a.abs() == 1));
    }

    #[test]
    fn ruled_example_classifies_as_twisted_product() {
        let c = classify_action(&ruled_example()).unwrap();
        assert_eq!(c, ClassificationResult { cp2_count: 0, cp2bar_count: 0, s2xs2_count: 1 });
        assert_eq!(c.to_string(), "1 x S2xS2");
    }

    #[test]
    fn two_pair_data_is_a_sphere() {
        let d = OrbitData::new(alloc::vec![(1, 0), (0, 1)]);
        assert!(classify_action(&d).unwrap().is_s4());
    }

    #[test]
    fn projective_plane_triangle() {
        // Standard coordinate action; with this orientation all three
        // spheres get self-intersection -1.
        let d = OrbitData::new(alloc::vec![(0, 1), (1, 0), (1, -1)]);
        let config = sphere_geometry(&d).unwrap();
        assert_eq!(config.self_ints, [-1, -1, -1]);
        let c = classify_action(&d).unwrap();
        assert_eq!(c, ClassificationResult { cp2_count: 0, cp2bar_count: 1, s2xs2_count: 0 });
        let r = classify_action(&d.reversed()).unwrap();
        assert_eq!(r, c.mirrored());
    }

    #[test]
    fn barycentric_ruled_example() {
        let p = barycentric_pinwheel(&ruled_example()).unwrap();
        let names: Vec<_> = p.components.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, ["B2", "B0", "B2", "B0"]);
        assert!(validate_pinwheel(&p).passed());
        assert_eq!(p.euler_sum(), 4);
    }

    #[test]
    fn barycentric_all_zero_gives_the_four_b0_pinwheel() {
        // A twisted-product action with four zero-square spheres.
        let d = OrbitData::new(alloc::vec![(1, 0), (0, 1), (-1, 0), (0, -1)]);
        let config = sphere_geometry(&d).unwrap();
        assert_eq!(config.self_ints, [0, 0, 0, 0]);
        let p = barycentric_pinwheel(&d).unwrap();
        let catalog = crate::pinwheel::catalog_lookup("s2xs2").unwrap().pinwheel;
        assert_eq!(p, catalog);
    }

    #[test]
    fn barycentric_rejects_two_pairs() {
        let d = OrbitData::new(alloc::vec![(1, 0), (0, 1)]);
        assert!(matches!(barycentric_pinwheel(&d), Err(OrbitError::TooFewPairs { .. })));
    }

    #[test]
    fn hirzebruch_action_matches_the_catalog_entry() {
        let d = OrbitData::new(alloc::vec![(1, 0), (0, 1), (-1, 1), (0, -1)]);
        let config = sphere_geometry(&d).unwrap();
        assert_eq!(config.self_ints, [0, 1, 0, -1]);
        let p = barycentric_pinwheel(&d).unwrap();
        let catalog = crate::pinwheel::catalog_lookup("cp2_k1").unwrap().pinwheel;
        assert_eq!(p, catalog);
    }

    #[test]
    fn parse_round_trip() {
        let d = parse_orbit_data(" (1, -1) ; (0,1);(1,-1) ;(2,-1)").unwrap();
        assert_eq!(d, ruled_example());
        assert_eq!(parse_orbit_data(&d.to_string()).unwrap(), d);
        assert!(parse_orbit_data("(1,2);(3)").is_err());
    }

    #[test]
    fn random_data_rank_and_synthesis() {
        let mut rng = SplitMix64::new(0x5eed_0001);
        for round in 0..400 {
            let d = random_valid_orbit_data(&mut rng, 3 + (round % 4));
            assert!(validate_orbit_data(&d).passed(), "round {round}: {d}");
            let g = gram_matrix(&d).unwrap();
            let report = gram_analyze(&g).unwrap();
            assert_eq!(report.rank, d.len() - 2, "round {round}: {d}");
            let p = barycentric_pinwheel(&d).unwrap_or_else(|e| panic!("round {round}: {d}: {e}"));
            assert!(validate_pinwheel(&p).passed(), "round {round}: {d}");
        }
    }

    #[test]
    fn classification_is_rotation_invariant_and_reversal_mirrors() {
        let mut rng = SplitMix64::new(0x5eed_0002);
        for round in 0..200 {
            let d = random_valid_orbit_data(&mut rng, 3 + (round % 4));
            let base = classify_action(&d).unwrap();
            for by in 1..d.len() {
                assert_eq!(classify_action(&d.rotated(by)).unwrap(), base, "{d} rotated {by}");
            }
            assert_eq!(classify_action(&d.reversed()).unwrap(), base.mirrored(), "{d} reversed");
        }
    }

    proptest! {
        /// Even self-intersection whenever the adjacent determinants agree in
        /// sign and the long determinant is even, straight from the formula.
        #[test]
        fn self_intersection_parity(seed in any::<u64>(), k in 3usize..=6) {
            let mut rng = SplitMix64::new(seed);
            let d = random_valid_orbit_data(&mut rng, k);
            let config = sphere_geometry(&d).unwrap();
            for i in 0..d.len() {
                let prev = (i + d.len() - 1) % d.len();
                let next = (i + 1) % d.len();
                let long = d.det(prev, next);
                if d.det(prev, i) == d.det(i, next) && long % 2 == 0 {
                    prop_assert_eq!(config.self_ints[i] % 2, 0);
                    prop_assert_eq!(config.self_ints[i], long * d.det(prev, i) * d.det(i, next));
                }
            }
        }
    }
}
