use std::path::PathBuf;
use std::str::FromStr;

use super::{
    borda_tb, condorcet_rule, dictatorship, plurality_tb, random_neutral_rule,
    random_pairwise_rule, table_rule, OrbitTable, RuleConstraints, VotingRule,
};
use crate::error::{Error, Result};
use crate::profiles::Universe;

/// A textual rule reference: `dict:<i>`, `condorcet`, `plurality:<i>`,
/// `borda:<i>`, `table:<path>`, `random:<seed>[:u][:a]` or
/// `pairwise:<seed>[:u][:a]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RuleSpec {
    Dictatorship(usize),
    Condorcet,
    Plurality(usize),
    Borda(usize),
    Table(PathBuf),
    Random {
        seed: u64,
        constraints: RuleConstraints,
    },
    Pairwise {
        seed: u64,
        constraints: RuleConstraints,
    },
}

impl FromStr for RuleSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::RuleSpec(s.to_string());
        let voter = |v: &str| v.parse::<usize>().ok().filter(|&i| i >= 1).ok_or_else(bad);
        let (head, rest) = s.split_once(':').unwrap_or((s, ""));
        match head {
            "condorcet" if rest.is_empty() => Ok(RuleSpec::Condorcet),
            "dict" => Ok(RuleSpec::Dictatorship(voter(rest)?)),
            "plurality" => Ok(RuleSpec::Plurality(voter(rest)?)),
            "borda" => Ok(RuleSpec::Borda(voter(rest)?)),
            "table" if !rest.is_empty() => Ok(RuleSpec::Table(PathBuf::from(rest))),
            "random" | "pairwise" => {
                let mut parts = rest.split(':');
                let seed = parts
                    .next()
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(bad)?;
                let mut constraints = RuleConstraints::NONE;
                for flag in parts {
                    match flag {
                        "u" => constraints.unanimous = true,
                        "a" => constraints.anonymous = true,
                        _ => return Err(bad()),
                    }
                }
                Ok(if head == "random" {
                    RuleSpec::Random { seed, constraints }
                } else {
                    RuleSpec::Pairwise { seed, constraints }
                })
            }
            _ => Err(bad()),
        }
    }
}

impl RuleSpec {
    /// Instantiates the rule; sampled rules are materialized on `universe`.
    pub fn build(&self, universe: &Universe) -> Result<VotingRule> {
        match self {
            RuleSpec::Dictatorship(i) => dictatorship(*i),
            RuleSpec::Condorcet => Ok(condorcet_rule()),
            RuleSpec::Plurality(i) => plurality_tb(*i),
            RuleSpec::Borda(i) => borda_tb(*i),
            RuleSpec::Table(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                let table = OrbitTable::parse(&text)?;
                Ok(table_rule(table, format!("table:{}", path.display())))
            }
            RuleSpec::Random { seed, constraints } => {
                random_neutral_rule(*seed, universe, *constraints)
            }
            RuleSpec::Pairwise { seed, constraints } => {
                random_pairwise_rule(*seed, universe, *constraints)
            }
        }
    }
}
