//! Finitely presented groups: a word/presentation model with a small text
//! DSL, abelianization through Smith normal form, bounded Todd-Coxeter coset
//! enumeration, and builders for the surgered-pinwheel fundamental-group
//! families.

mod abelian;
mod coset;
mod families;
mod parse;
mod verify;
mod word;

pub use abelian::abelianization;
pub use coset::{todd_coxeter, EnumResult};
pub use families::{
    build_family_presentation, build_family_presentation_with, CommutatorConvention,
    FamilyBuildError, FamilyParams, XiMode,
};
pub use parse::{parse_presentation, ParseError};
pub use verify::{verify_trivial, TrivialityVerdict};
pub use word::{Presentation, Word};
