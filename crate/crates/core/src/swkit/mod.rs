//! Gauge-theoretic bookkeeping: basic-class enumeration under adjunction
//! constraints in the odd unimodular lattice, minimality detection, the
//! affine surgery families of invariants, surgery effects on first homology,
//! and the canonical-genus feasibility bound.

mod genus;
mod hom;
mod lattice;
mod laurent;

pub use genus::{canonical_genus_feasibility, FeasibilityReport, GenusError};
pub use hom::{surgery_h1, SurgeryH1Error, TorusKind};
pub use lattice::{
    enumerate_basic_classes, k2_constraints, k3_constraints, minimality_check, AdjConstraint,
    BasicClassSearch, CharClass, MinimalityOutcome, OddLattice, SwError,
};
pub use laurent::{distinguishing_invariant, mms_family, LaurentParseError, LaurentPoly};
