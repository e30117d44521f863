use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::VotingRule;
use crate::error::{Error, Result};
use crate::profiles::{
    orbit_key, parse_orbit_key, Alt, DomainKind, ProfileSpace, StrictProfile, Universe,
};

/// One chosen alternative per relabeling orbit, keyed by the orbit's
/// canonical representative.
///
/// A profile `P = μ⁻¹·rep` evaluates to `μ⁻¹(table[rep])`, so every table rule
/// is neutral by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitTable {
    voters: usize,
    domain: DomainKind,
    entries: BTreeMap<usize, BTreeMap<Vec<u8>, Alt>>,
}

impl OrbitTable {
    pub fn new(voters: usize, domain: DomainKind) -> Self {
        OrbitTable {
            voters,
            domain,
            entries: BTreeMap::new(),
        }
    }

    pub fn voters(&self) -> usize {
        self.voters
    }

    pub fn domain(&self) -> DomainKind {
        self.domain
    }

    /// Sizes with at least one entry.
    pub fn sizes(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.entries.values().map(BTreeMap::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Sets the value at a canonical representative.
    pub fn insert(&mut self, rep: &StrictProfile, value: Alt) -> Result<()> {
        if !rep.is_canonical() {
            return Err(Error::Precondition(format!(
                "table keys must be canonical representatives, got {}",
                rep.index_key()
            )));
        }
        if rep.voters() != self.voters {
            return Err(Error::Precondition(format!(
                "table has {} voters, representative has {}",
                self.voters,
                rep.voters()
            )));
        }
        if value.index() >= rep.size() {
            return Err(Error::UnknownAlternative(format!("#{}", value.0)));
        }
        self.entries
            .entry(rep.size())
            .or_default()
            .insert(rep.raw().to_vec(), value);
        Ok(())
    }

    pub fn get(&self, rep: &StrictProfile) -> Option<Alt> {
        self.entries.get(&rep.size())?.get(rep.raw()).copied()
    }

    /// The closure value at an arbitrary profile.
    pub fn lookup(&self, profile: &StrictProfile) -> Result<Alt> {
        let (rep, mu) = profile.canonical_representative();
        let tau = profile.size();
        let value = self
            .entries
            .get(&tau)
            .and_then(|m| m.get(rep.raw()))
            .ok_or_else(|| Error::MissingOrbit {
                tau,
                key: rep.index_key(),
            })?;
        Ok(Alt::from_index(mu.inverse().apply(value.index())))
    }

    /// Tabulates `rule` on every admissible orbit of `universe`.
    pub fn from_rule(rule: &VotingRule, universe: &Universe) -> Result<Self> {
        let mut table = OrbitTable::new(universe.n, universe.domain);
        for tau in universe.sizes() {
            let space = ProfileSpace::new(universe.n, tau, universe.domain)?;
            for rep in space.representatives() {
                let value = rule.evaluate(&rep)?;
                table.insert(&rep, value)?;
            }
        }
        Ok(table)
    }

    /// Errors with the first admissible orbit of `universe` lacking an entry.
    pub fn check_complete(&self, universe: &Universe) -> Result<()> {
        for tau in universe.sizes() {
            let space = ProfileSpace::new(universe.n, tau, universe.domain)?;
            let missing = space.representatives().find(|r| self.get(r).is_none());
            if let Some(rep) = missing {
                return Err(Error::MissingOrbit {
                    tau,
                    key: rep.index_key(),
                });
            }
        }
        Ok(())
    }

    /// Every `(representative, value)` pair, smallest size first.
    pub fn iter(&self) -> impl Iterator<Item = (StrictProfile, Alt)> + '_ {
        self.entries.iter().flat_map(|(&tau, m)| {
            m.iter().map(move |(order, &v)| {
                (
                    StrictProfile::from_raw(
                        crate::profiles::AlternativeSet::canonical(tau),
                        order.clone(),
                    ),
                    v,
                )
            })
        })
    }

    /// Serializes as `voters:`/`domain:` headers then `<orbit key> -> <label>` lines.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "voters: {}", self.voters).unwrap();
        writeln!(out, "domain: {}", self.domain).unwrap();
        for (&tau, m) in &self.entries {
            for (order, value) in m {
                writeln!(out, "{} -> a{}", orbit_key(tau, order), value.index() + 1).unwrap();
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut voters = None;
        let mut domain = DomainKind::Unrestricted;
        let mut table: Option<OrbitTable> = None;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |reason: String| Error::Parse {
                line: i + 1,
                reason,
            };
            if let Some(rest) = line.strip_prefix("voters:") {
                voters = Some(
                    rest.trim()
                        .parse::<usize>()
                        .map_err(|e| err(e.to_string()))?,
                );
                continue;
            }
            if let Some(rest) = line.strip_prefix("domain:") {
                domain = rest.trim().parse().map_err(|e: Error| err(e.to_string()))?;
                continue;
            }
            let (key, label) = line
                .split_once("->")
                .ok_or_else(|| err(format!("expected `<key> -> <label>`, got `{line}`")))?;
            let (tau, order) = parse_orbit_key(key.trim())
                .ok_or_else(|| err(format!("bad key `{}`", key.trim())))?;
            let label = label.trim();
            let value = label
                .strip_prefix('a')
                .and_then(|d| d.parse::<usize>().ok())
                .filter(|&d| d >= 1 && d <= tau)
                .ok_or_else(|| err(format!("bad alternative `{label}` for size {tau}")))?;
            let n = order.len() / tau;
            if voters.is_some_and(|v| v != n) {
                return Err(err(format!("key has {n} voters")));
            }
            let t = table.get_or_insert_with(|| OrbitTable::new(n, domain));
            if t.voters != n {
                return Err(err(format!(
                    "key has {n} voters, earlier keys {}",
                    t.voters
                )));
            }
            let rep =
                StrictProfile::from_raw(crate::profiles::AlternativeSet::canonical(tau), order);
            t.insert(&rep, Alt::from_index(value - 1))
                .map_err(|e| err(e.to_string()))?;
        }
        let mut table = match (table, voters) {
            (Some(t), _) => t,
            (None, Some(n)) => OrbitTable::new(n, domain),
            (None, None) => {
                return Err(Error::Parse {
                    line: 0,
                    reason: "empty orbit table".into(),
                })
            }
        };
        table.domain = domain;
        Ok(table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profiles::Permutation;
    use crate::rules::{dictatorship, table_rule};

    #[test]
    fn voter_one_top_table_is_dictatorship_one() {
        let u = Universe::unrestricted(3, 3).unwrap();
        let mut table = OrbitTable::new(3, DomainKind::Unrestricted);
        for tau in u.sizes() {
            let space = ProfileSpace::new(3, tau, u.domain).unwrap();
            for rep in space.representatives() {
                table.insert(&rep, rep.top(0)).unwrap();
            }
        }
        table.check_complete(&u).unwrap();
        let rule = table_rule(table, "top1");
        let dict = dictatorship(1).unwrap();
        for tau in u.sizes() {
            for p in ProfileSpace::new(3, tau, u.domain).unwrap().iter() {
                assert_eq!(rule.evaluate(&p).unwrap(), dict.evaluate(&p).unwrap());
            }
        }
    }

    #[test]
    fn table_rules_are_relabel_equivariant() {
        let u = Universe::unrestricted(3, 3).unwrap();
        // Arbitrary but fixed values: voter 3's bottom.
        let mut table = OrbitTable::new(3, u.domain);
        for tau in u.sizes() {
            for rep in ProfileSpace::new(3, tau, u.domain)
                .unwrap()
                .representatives()
            {
                table.insert(&rep, rep.bottom(2)).unwrap();
            }
        }
        let rule = table_rule(table, "t");
        for tau in u.sizes() {
            let all = Permutation::all(tau);
            for p in ProfileSpace::new(3, tau, u.domain).unwrap().iter() {
                let chosen = rule.evaluate(&p).unwrap();
                for mu in &all {
                    let moved = rule.evaluate(&p.relabel(mu).unwrap()).unwrap();
                    assert_eq!(moved.index(), mu.apply(chosen.index()));
                }
            }
        }
    }

    #[test]
    fn single_alternative_table() {
        let u = Universe::unrestricted(2, 1).unwrap();
        let table = OrbitTable::from_rule(&dictatorship(2).unwrap(), &u).unwrap();
        assert_eq!(table.len(), 1);
        assert_eq!(table.iter().next().unwrap().1, Alt(0));
    }

    #[test]
    fn missing_entry_and_text_round_trip() {
        let u = Universe::condorcet(3, 2).unwrap();
        let table = OrbitTable::from_rule(&crate::rules::condorcet_rule(), &u).unwrap();
        let text = table.to_text();
        assert!(text.starts_with("voters: 3\ndomain: condorcet\n"));
        assert_eq!(OrbitTable::parse(&text).unwrap(), table);

        let bigger = Universe::condorcet(3, 3).unwrap();
        assert!(matches!(
            table.check_complete(&bigger),
            Err(Error::MissingOrbit { tau: 3, .. })
        ));
        assert!(OrbitTable::parse("0,1/1,0 -> a3").is_err());
        assert!(OrbitTable::parse("1,0/1,0 -> a1").is_err());
    }
}
