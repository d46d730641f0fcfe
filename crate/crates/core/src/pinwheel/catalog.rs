//! Catalog of the pinwheel structures the toolkit knows about: the toric
//! models, the rational-surface families, and the surgered symplectic
//! models. Component Euler characteristics and interface data are recorded
//! from their sources and cross-checked structurally, never re-derived.
//! Entries whose component interiors exist only in diagrams are flagged
//! incomplete rather than guessed.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::pinwheel::structure::{
    Certification, InterfaceSurface, Pinwheel, PinwheelComponent, TargetInvariants,
};

/// A named catalog slot. `incomplete` carries the reason when the recorded
/// component list is known to be partial.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub manifold: &'static str,
    pub pinwheel: Pinwheel,
    pub incomplete: Option<&'static str>,
}

pub const CATALOG_NAMES: [&str; 17] = [
    "cp2", "cp2_k1", "s2xs2", "cp2_k2", "cp2_k3", "cp2_k4", "cp2_k5", "cp2_k6", "cp2_k7",
    "cp2_k8", "cp2_k9", "q2_model", "q3_model", "q4_model", "q6_model", "q7_model", "q9_model",
];

fn comp(name: &str, s: (u32, i64), t: (u32, i64), euler: i64) -> PinwheelComponent {
    PinwheelComponent::new(
        name,
        InterfaceSurface::new(s.0, s.1),
        InterfaceSurface::new(t.0, t.1),
        euler,
    )
}

fn target(euler: i64, b_plus: i64, b_minus: i64, b1: i64) -> TargetInvariants {
    TargetInvariants { euler, b_plus, b_minus, b1 }
}

fn entry(
    name: &'static str,
    manifold: &'static str,
    components: Vec<PinwheelComponent>,
    certification: Certification,
    target: TargetInvariants,
    surgered_pairs: Option<u32>,
) -> CatalogEntry {
    CatalogEntry {
        name,
        manifold,
        pinwheel: Pinwheel { components, certification, target, surgered_pairs },
        incomplete: None,
    }
}

fn external(cite: &str) -> Certification {
    Certification::External(cite.to_string())
}

/// All catalog entries, in the fixed order of [`CATALOG_NAMES`].
pub fn catalog() -> Vec<CatalogEntry> {
    let handle_calculus = "handle calculus on the assembled diagram";
    let symplectic_sum = "symplectic sum of the surgered components";

    vec![
        // Three coordinate-ball components around the central torus of the
        // standard torus action; closes by the all-(-1) monodromy product.
        entry(
            "cp2",
            "CP2",
            vec![
                comp("B1", (0, 0), (0, -1), 1).with_htc(),
                comp("B1", (0, 0), (0, -1), 1).with_htc(),
                comp("B1", (0, 0), (0, -1), 1).with_htc(),
            ],
            Certification::Matrix,
            target(3, 1, 0, 0),
            Some(0),
        ),
        // Hirzebruch-surface torus action, via the barycentric rule; the
        // sphere self-intersections (0, 1, 0, -1) become section interfaces.
        entry(
            "cp2_k1",
            "CP2 # CP2bar",
            vec![
                comp("B0", (0, 0), (0, 0), 1).with_htc(),
                comp("B1", (0, 1), (0, 0), 1).with_htc(),
                comp("B0", (0, 0), (0, 0), 1).with_htc(),
                comp("B1", (0, -1), (0, 0), 1).with_htc(),
            ],
            Certification::Matrix,
            target(4, 1, 1, 0),
            Some(0),
        ),
        entry(
            "s2xs2",
            "S2 x S2",
            vec![
                comp("B0", (0, 0), (0, 0), 1).with_htc(),
                comp("B0", (0, 0), (0, 0), 1).with_htc(),
                comp("B0", (0, 0), (0, 0), 1).with_htc(),
                comp("B0", (0, 0), (0, 0), 1).with_htc(),
            ],
            Certification::Matrix,
            target(4, 1, 1, 0),
            Some(0),
        ),
        entry(
            "cp2_k2",
            "CP2 # 2 CP2bar",
            vec![
                comp("I0'", (0, -1), (0, -1), 2).with_htc().with_surgered_pairs(1),
                comp("B1#CP2bar", (0, -1), (0, 0), 2).with_htc().with_surgered_pairs(1),
                comp("B0", (0, 0), (0, 0), 1).with_htc().with_surgered_pairs(1),
            ],
            external("handle calculus: slides, cancellations, two blowdowns and one anti-blowdown"),
            target(5, 1, 2, 0),
            Some(3),
        ),
        // The cp2 structure blown up once inside each ball.
        entry(
            "cp2_k3",
            "CP2 # 3 CP2bar",
            vec![
                comp("B1#CP2bar", (0, 0), (0, -1), 2).with_htc().with_surgered_pairs(1),
                comp("B1#CP2bar", (0, 0), (0, -1), 2).with_htc().with_surgered_pairs(1),
                comp("B1#CP2bar", (0, 0), (0, -1), 2).with_htc().with_surgered_pairs(1),
            ],
            Certification::Matrix,
            target(6, 1, 3, 0),
            Some(3),
        ),
        entry(
            "cp2_k4",
            "CP2 # 4 CP2bar",
            vec![
                comp("I0'", (0, -1), (0, -1), 2).with_htc().with_surgered_pairs(1),
                comp("K0", (0, 2), (0, 0), 1).with_push_through(),
                comp("B3#3CP2bar", (0, -3), (0, 0), 4).with_htc().with_surgered_pairs(1),
            ],
            external(handle_calculus),
            target(7, 1, 4, 0),
            Some(2),
        ),
        CatalogEntry {
            incomplete: Some("component interiors are recorded only diagrammatically"),
            ..entry(
                "cp2_k5",
                "CP2 # 5 CP2bar",
                vec![],
                external(handle_calculus),
                target(8, 1, 5, 0),
                None,
            )
        },
        entry(
            "cp2_k6",
            "CP2 # 6 CP2bar",
            vec![
                comp("I0'", (0, -1), (0, -1), 2).with_htc().with_surgered_pairs(1),
                comp("K0", (0, 2), (0, 0), 1).with_push_through(),
                comp("L(0,-3)", (0, 0), (0, -3), 6).with_push_through(),
            ],
            external(handle_calculus),
            target(9, 1, 6, 0),
            Some(1),
        ),
        entry(
            "cp2_k7",
            "CP2 # 7 CP2bar",
            vec![
                comp("K1", (0, 3), (0, -1), 1).with_push_through(),
                comp("K4", (0, 6), (0, -4), 1).with_push_through(),
                comp("B7#7CP2bar", (0, -7), (0, 0), 8).with_htc().with_surgered_pairs(1),
            ],
            external(handle_calculus),
            target(10, 1, 7, 0),
            Some(1),
        ),
        CatalogEntry {
            incomplete: Some("only two components are described in text; the rest is diagram-only"),
            ..entry(
                "cp2_k8",
                "CP2 # 8 CP2bar",
                vec![
                    comp("L(-1,-3)", (0, -1), (0, -3), 7).with_push_through(),
                    comp("W", (0, 0), (0, 0), 2),
                ],
                external(handle_calculus),
                target(11, 1, 8, 0),
                None,
            )
        },
        CatalogEntry {
            incomplete: Some("only the rational-ball component is described in text"),
            ..entry(
                "cp2_k9",
                "CP2 # 9 CP2bar",
                vec![comp("K0", (0, 2), (0, 0), 1).with_push_through()],
                external(handle_calculus),
                target(12, 1, 9, 0),
                Some(1),
            )
        },
        entry(
            "q2_model",
            "Q2 model",
            vec![
                comp("T4#CP2bar-(T_IT,T_IS)", (1, -1), (1, -1), 2).with_surgered_pairs(1),
                comp("T4#CP2bar-(That_T,T_S)", (1, -1), (1, 0), 2).with_surgered_pairs(1),
                comp("T4-(T_T,T_S)", (1, 0), (1, 0), 1).with_surgered_pairs(1),
            ],
            external(symplectic_sum),
            target(5, 7, 8, 6),
            Some(3),
        ),
        entry(
            "q3_model",
            "Q3 model",
            vec![
                comp("T4#CP2bar-(That_T,T_S)", (1, -1), (1, 0), 2).with_surgered_pairs(1),
                comp("T4#CP2bar-(That_T,T_S)", (1, -1), (1, 0), 2).with_surgered_pairs(1),
                comp("T4#CP2bar-(That_T,T_S)", (1, -1), (1, 0), 2).with_surgered_pairs(1),
            ],
            Certification::Matrix,
            target(6, 7, 9, 6),
            Some(3),
        ),
        entry(
            "q4_model",
            "Q4 model",
            vec![
                comp("T4#CP2bar-(T_IT,T_IS)", (1, -1), (1, -1), 2).with_surgered_pairs(1),
                comp("T2xS2-(T_S+F,T_S-)", (1, 2), (1, 0), 1),
                comp("T4#3CP2bar-(T_T3,T_S)", (1, -3), (1, 0), 4).with_surgered_pairs(1),
            ],
            external(symplectic_sum),
            target(7, 5, 8, 4),
            Some(2),
        ),
        entry(
            "q6_model",
            "Q6 model",
            vec![
                comp("T4#CP2bar-(T_IT,T_IS)", (1, -1), (1, -1), 2).with_surgered_pairs(1),
                comp("T2xS2-(T_S+F,T_S-)", (1, 2), (1, 0), 1),
                comp("F1(1)#5CP2bar-(T_S+F-E123,T_S--E45)", (1, 0), (1, -3), 6),
            ],
            external(symplectic_sum),
            target(9, 3, 8, 2),
            Some(1),
        ),
        entry(
            "q7_model",
            "Q7 model",
            vec![
                comp("F1(1)-(T_S+F,T_S-)", (1, 3), (1, -1), 1),
                comp("F4(1)-(T_S+F,T_S-)", (1, 6), (1, -4), 1),
                comp("T4#7CP2bar-(T_T7,T_S)", (1, -7), (1, 0), 8).with_surgered_pairs(1),
            ],
            external(symplectic_sum),
            target(10, 3, 9, 2),
            Some(1),
        ),
        CatalogEntry {
            incomplete: Some("derived from a diagram-only structure; one component recorded"),
            ..entry(
                "q9_model",
                "Q9 model",
                vec![comp("T2xS2-(T_S+F,T_S-)", (1, 2), (1, 0), 1)],
                external(symplectic_sum),
                target(12, 3, 11, 2),
                Some(1),
            )
        },
    ]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownCatalogName(pub String);

impl core::fmt::Display for UnknownCatalogName {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "unknown catalog name: {}", self.0)
    }
}

pub fn catalog_lookup(name: &str) -> Result<CatalogEntry, UnknownCatalogName> {
    catalog()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| UnknownCatalogName(name.to_string()))
}
