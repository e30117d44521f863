//! Voting rules: deterministic maps from admissible profiles to alternatives.

mod sample;
mod spec;
mod table;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::profiles::{Alt, DomainKind, StrictProfile, Universe};

pub use sample::{random_neutral_rule, random_pairwise_rule, RuleConstraints};
pub use spec::RuleSpec;
pub use table::OrbitTable;

type Evaluator = dyn Fn(&StrictProfile) -> Result<Alt> + Send + Sync;

#[derive(Clone)]
enum RuleKind {
    Dictatorship(usize),
    Condorcet,
    Plurality { tie_break: usize },
    Borda { tie_break: usize },
    Table(Arc<OrbitTable>),
    Custom(Arc<Evaluator>),
}

/// A named voting rule with a declared admissible domain.
///
/// Voter numbers passed to the constructors are 1-based.
#[derive(Clone)]
pub struct VotingRule {
    name: String,
    domain: DomainKind,
    kind: RuleKind,
}

impl VotingRule {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn domain(&self) -> DomainKind {
        self.domain
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// The orbit table backing a table rule.
    pub fn table(&self) -> Option<&OrbitTable> {
        match &self.kind {
            RuleKind::Table(t) => Some(t),
            _ => None,
        }
    }

    /// A rule backed by an arbitrary closure. Nothing about it is assumed;
    /// the checkers find out.
    pub fn custom<F>(name: impl Into<String>, domain: DomainKind, f: F) -> Self
    where
        F: Fn(&StrictProfile) -> Result<Alt> + Send + Sync + 'static,
    {
        VotingRule {
            name: name.into(),
            domain,
            kind: RuleKind::Custom(Arc::new(f)),
        }
    }

    pub fn evaluate(&self, profile: &StrictProfile) -> Result<Alt> {
        if !self.domain.admits(profile) {
            return Err(self.undefined(profile, "no strong Condorcet winner"));
        }
        if profile.size() == 1 {
            return Ok(Alt(0));
        }
        let chosen = match &self.kind {
            RuleKind::Dictatorship(i) => profile.top(self.voter(profile, *i)?),
            RuleKind::Condorcet => profile
                .condorcet_winner()
                .ok_or_else(|| self.undefined(profile, "no strong Condorcet winner"))?,
            RuleKind::Plurality { tie_break } => {
                let tie = self.voter(profile, *tie_break)?;
                let mut firsts = vec![0usize; profile.size()];
                for v in 0..profile.voters() {
                    firsts[profile.top(v).index()] += 1;
                }
                unique_argmax(&firsts).unwrap_or_else(|| profile.top(tie))
            }
            RuleKind::Borda { tie_break } => {
                let tie = self.voter(profile, *tie_break)?;
                unique_argmax(&borda_scores(profile)).unwrap_or_else(|| profile.top(tie))
            }
            RuleKind::Table(table) => table.lookup(profile).map_err(|e| match e {
                Error::MissingOrbit { .. } | Error::SizeOutOfRange { .. } => {
                    self.undefined(profile, &e.to_string())
                }
                e => e,
            })?,
            RuleKind::Custom(f) => f(profile)?,
        };
        if chosen.index() >= profile.size() {
            return Err(self.undefined(profile, "rule returned a foreign alternative"));
        }
        Ok(chosen)
    }

    fn voter(&self, profile: &StrictProfile, number: usize) -> Result<usize> {
        if number == 0 || number > profile.voters() {
            Err(Error::VoterOutOfRange {
                voter: number,
                n: profile.voters(),
            })
        } else {
            Ok(number - 1)
        }
    }

    fn undefined(&self, profile: &StrictProfile, reason: &str) -> Error {
        Error::Domain {
            rule: self.name.clone(),
            profile: profile.to_string(),
            reason: reason.to_string(),
        }
    }
}

impl fmt::Debug for VotingRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("VotingRule")
            .field("name", &self.name)
            .field("domain", &self.domain)
            .finish()
    }
}

fn unique_argmax(scores: &[usize]) -> Option<Alt> {
    let max = *scores.iter().max()?;
    let mut winners = scores.iter().enumerate().filter(|(_, &s)| s == max);
    let (first, _) = winners.next()?;
    winners.next().is_none().then(|| Alt::from_index(first))
}

/// Borda counts with scoring vector `(τ, τ-1, …, 1)`.
pub fn borda_scores(profile: &StrictProfile) -> Vec<usize> {
    let tau = profile.size();
    let mut scores = vec![0usize; tau];
    for v in 0..profile.voters() {
        for (pos, a) in profile.ranking(v).enumerate() {
            scores[a.index()] += tau - pos;
        }
    }
    scores
}

/// `δ_i`: voter `i`'s top alternative, everywhere.
pub fn dictatorship(voter: usize) -> Result<VotingRule> {
    if voter == 0 {
        return Err(Error::VoterOutOfRange { voter, n: 0 });
    }
    Ok(VotingRule {
        name: format!("dict:{voter}"),
        domain: DomainKind::Unrestricted,
        kind: RuleKind::Dictatorship(voter),
    })
}

/// The Condorcet rule, defined on profiles with a strong Condorcet winner.
pub fn condorcet_rule() -> VotingRule {
    VotingRule {
        name: "condorcet".into(),
        domain: DomainKind::Condorcet,
        kind: RuleKind::Condorcet,
    }
}

/// Plurality; ties go to voter `tie_break`'s top alternative.
pub fn plurality_tb(tie_break: usize) -> Result<VotingRule> {
    if tie_break == 0 {
        return Err(Error::VoterOutOfRange { voter: 0, n: 0 });
    }
    Ok(VotingRule {
        name: format!("plurality:{tie_break}"),
        domain: DomainKind::Unrestricted,
        kind: RuleKind::Plurality { tie_break },
    })
}

/// Borda count; ties go to voter `tie_break`'s top alternative.
pub fn borda_tb(tie_break: usize) -> Result<VotingRule> {
    if tie_break == 0 {
        return Err(Error::VoterOutOfRange { voter: 0, n: 0 });
    }
    Ok(VotingRule {
        name: format!("borda:{tie_break}"),
        domain: DomainKind::Unrestricted,
        kind: RuleKind::Borda { tie_break },
    })
}

/// A neutral rule given by one value per relabeling orbit.
pub fn table_rule(table: OrbitTable, name: impl Into<String>) -> VotingRule {
    VotingRule {
        name: name.into(),
        domain: table.domain(),
        kind: RuleKind::Table(Arc::new(table)),
    }
}

/// Default plurality and Borda tie-break voters: voter 1 and voter 4
/// (the last voter when there are fewer than four).
pub fn default_tie_breaks(n: usize) -> (usize, usize) {
    (1, n.min(4))
}

/// The named rules applicable to `universe`: every dictatorship, tie-broken
/// plurality and Borda, and the Condorcet rule on the Condorcet domain.
pub fn catalog(universe: &Universe) -> Vec<VotingRule> {
    let (p, b) = default_tie_breaks(universe.n);
    let mut rules: Vec<VotingRule> = (1..=universe.n)
        .map(|i| dictatorship(i).expect("voter numbers start at 1"))
        .collect();
    rules.push(plurality_tb(p).expect("valid tie-break"));
    rules.push(borda_tb(b).expect("valid tie-break"));
    if universe.domain == DomainKind::Condorcet {
        rules.push(condorcet_rule());
    }
    rules
}
