//! Pinwheel decompositions: the gluing-matrix monodromy test, cyclic
//! continued fractions, handle trading and pushing through, standard-surgery
//! betti bookkeeping, and a catalog of known structures.

mod catalog;
mod cf;
mod monodromy;
mod structure;
mod surgery;

pub use catalog::{catalog, catalog_lookup, CatalogEntry, CATALOG_NAMES};
pub use cf::{continued_fraction, cyclic_cf_all_zero, CfError, ExtRational};
pub use monodromy::{
    closed_form_product4, gluing_alpha, gluing_beta, gluing_phi, monodromy_check, theta,
    MonodromyClass,
};
pub use structure::{
    handle_trade, push_through, validate_pinwheel, Certification, InterfaceSurface, Pinwheel,
    PinwheelComponent, PinwheelError, TargetInvariants,
};
pub use surgery::{apply_standard_surgeries, SurgeryInvariants};
