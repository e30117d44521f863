//! Shared inputs for the criterion benches.

use ssvote_core::rules::{borda_tb, condorcet_rule, dictatorship};
use ssvote_core::{DomainKind, ProfileSpace, StrictProfile, Universe, VotingRule};

/// Rules whose self-selectivity check has to walk the whole universe.
pub fn passing_rules(universe: &Universe) -> Vec<VotingRule> {
    match universe.domain {
        DomainKind::Unrestricted => vec![dictatorship(1).unwrap()],
        DomainKind::Condorcet => vec![condorcet_rule()],
    }
}

/// A rule that fails early, for comparison.
pub fn failing_rule() -> VotingRule {
    borda_tb(3).unwrap()
}

/// Every admissible profile with `tau` alternatives.
pub fn all_profiles(universe: &Universe, tau: usize) -> Vec<StrictProfile> {
    ProfileSpace::new(universe.n, tau, universe.domain)
        .unwrap()
        .iter()
        .collect()
}
