//! Exhaustive checkers for self-selective voting rules on small universes.
//!
//! Profiles are strict rankings of a few alternatives by a fixed number of
//! voters. Rules are evaluated on every admissible profile up to a size bound,
//! so each verdict is exact for that finite universe.

pub mod axioms;
pub mod error;
pub mod profiles;
pub mod rules;
pub mod selfselect;
pub mod theorems;

pub use axioms::{check, Axiom, CheckOptions, Verdict, Witness};
pub use error::{Error, Result};
pub use profiles::{
    enumerate_profiles, parse_profile, Alt, AlternativeSet, DomainKind, Permutation, ProfileSpace,
    StrictProfile, Universe, WeakProfile,
};
pub use rules::{OrbitTable, RuleConstraints, RuleSpec, VotingRule};
pub use selfselect::{
    check_binary_ss, check_universal_ss, self_selection_at, RuleSlotSet, SsOptions, SsVerdict,
};
