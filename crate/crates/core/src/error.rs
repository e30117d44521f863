use thiserror::Error;

/// Errors raised while building profiles, evaluating rules or running checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid alternative set: {0}")]
    AlternativeSet(String),

    #[error("invalid ranking for voter {voter}: {reason}")]
    Ranking { voter: usize, reason: String },

    #[error("profile has no voters")]
    NoVoters,

    #[error("not a bijection: {0}")]
    NotBijection(String),

    #[error("unknown alternative `{0}`")]
    UnknownAlternative(String),

    #[error("empty restriction")]
    EmptyRestriction,

    #[error("voter {voter} out of range for {n} voters")]
    VoterOutOfRange { voter: usize, n: usize },

    #[error("invalid universe: {0}")]
    Universe(String),

    #[error("size {tau} is outside the range 1..={tau_max}")]
    SizeOutOfRange { tau: usize, tau_max: usize },

    /// The rule is not defined at the given profile.
    #[error("rule `{rule}` is undefined ({reason}) at profile:\n{profile}")]
    Domain {
        rule: String,
        profile: String,
        reason: String,
    },

    #[error("no orbit table entry for size {tau}, key {key}")]
    MissingOrbit { tau: usize, key: String },

    #[error("constraints unsatisfiable at size {tau}, orbit {key}")]
    Unsatisfiable { tau: usize, key: String },

    #[error("parse error on line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("unknown rule spec `{0}`")]
    RuleSpec(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("{0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
