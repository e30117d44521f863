//! Exhaustive, witness-producing checkers for the classical axioms.
//!
//! Every checker walks the universe's admissible profiles size by size in
//! enumeration order and reports the first violation it meets, so verdicts and
//! witnesses do not depend on the number of worker threads.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::profiles::{Alt, Permutation, ProfileSpace, StrictProfile, Universe};
use crate::rules::VotingRule;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    Unanimity,
    Dictatorship,
    Anonymity,
    Neutrality,
    Iia,
    Pareto,
    Sigma2,
    PairwiseConsistency,
}

impl Axiom {
    pub const ALL: [Axiom; 8] = [
        Axiom::Unanimity,
        Axiom::Dictatorship,
        Axiom::Anonymity,
        Axiom::Neutrality,
        Axiom::Iia,
        Axiom::Pareto,
        Axiom::Sigma2,
        Axiom::PairwiseConsistency,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Axiom::Unanimity => "unanimity",
            Axiom::Dictatorship => "dictatorship",
            Axiom::Anonymity => "anonymity",
            Axiom::Neutrality => "neutrality",
            Axiom::Iia => "iia",
            Axiom::Pareto => "pareto",
            Axiom::Sigma2 => "sigma2",
            Axiom::PairwiseConsistency => "pairwise-consistency",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Axiom {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Axiom::ALL
            .into_iter()
            .find(|a| a.as_str() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown axiom `{s}`")))
    }
}

/// Quantifier settings shared by the checkers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CheckOptions {
    /// Quantify over every permutation instead of adjacent transpositions.
    pub full_group: bool,
}

/// A concrete counterexample. Alternatives are indices into `profile`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Unanimity {
        profile: StrictProfile,
        common_top: Alt,
        chosen: Alt,
    },
    /// One eliminating profile per voter: the rule did not pick that voter's top.
    Dictatorship {
        eliminations: Vec<(usize, StrictProfile, Alt)>,
    },
    Anonymity {
        profile: StrictProfile,
        permutation: Permutation,
        chosen: Alt,
        permuted_choice: Alt,
    },
    Neutrality {
        profile: StrictProfile,
        relabeling: Permutation,
        chosen: Alt,
        relabeled_choice: Alt,
    },
    Iia {
        profile: StrictProfile,
        removed: Vec<Alt>,
        chosen: Alt,
        restricted_choice: Alt,
    },
    Pareto {
        profile: StrictProfile,
        chosen: Alt,
        dominating: Alt,
    },
    Sigma2 {
        profile: StrictProfile,
        chosen: Alt,
        majority: Alt,
    },
    PairwiseConsistency {
        profile: StrictProfile,
        rival: Alt,
        chosen: Alt,
        restricted_choice: Alt,
    },
}

impl Witness {
    /// The profile the violation happens at (the first one for dictatorship).
    pub fn profile(&self) -> Option<&StrictProfile> {
        match self {
            Witness::Unanimity { profile, .. }
            | Witness::Anonymity { profile, .. }
            | Witness::Neutrality { profile, .. }
            | Witness::Iia { profile, .. }
            | Witness::Pareto { profile, .. }
            | Witness::Sigma2 { profile, .. }
            | Witness::PairwiseConsistency { profile, .. } => Some(profile),
            Witness::Dictatorship { eliminations } => eliminations.first().map(|(_, p, _)| p),
        }
    }

    /// Re-evaluates `rule` on the witness data; true iff the violation reproduces.
    pub fn recheck(&self, rule: &VotingRule) -> Result<bool> {
        Ok(match self {
            Witness::Unanimity {
                profile,
                common_top,
                chosen,
            } => {
                profile.common_top() == Some(*common_top)
                    && rule.evaluate(profile)? == *chosen
                    && chosen != common_top
            }
            Witness::Dictatorship { eliminations } => {
                let mut voters: Vec<usize> = eliminations.iter().map(|e| e.0).collect();
                voters.sort_unstable();
                let n = eliminations.first().map_or(0, |e| e.1.voters());
                voters == (1..=n).collect::<Vec<_>>()
                    && eliminations.iter().try_fold(true, |ok, (i, p, c)| {
                        Ok::<_, Error>(ok && rule.evaluate(p)? == *c && p.top(i - 1) != *c)
                    })?
            }
            Witness::Anonymity {
                profile,
                permutation,
                chosen,
                permuted_choice,
            } => {
                rule.evaluate(profile)? == *chosen
                    && rule.evaluate(&profile.permute_voters(permutation)?)? == *permuted_choice
                    && chosen != permuted_choice
            }
            Witness::Neutrality {
                profile,
                relabeling,
                chosen,
                relabeled_choice,
            } => {
                rule.evaluate(profile)? == *chosen
                    && rule.evaluate(&profile.relabel(relabeling)?)? == *relabeled_choice
                    && relabeling.apply(chosen.index()) != relabeled_choice.index()
            }
            Witness::Iia {
                profile,
                removed,
                chosen,
                restricted_choice,
            } => {
                let keep: Vec<Alt> = profile
                    .alternatives()
                    .alts()
                    .filter(|a| !removed.contains(a))
                    .collect();
                rule.evaluate(profile)? == *chosen
                    && !removed.contains(chosen)
                    && evaluate_restricted(rule, profile, &keep)? == *restricted_choice
                    && chosen != restricted_choice
            }
            Witness::Pareto {
                profile,
                chosen,
                dominating,
            } => {
                rule.evaluate(profile)? == *chosen
                    && (0..profile.voters()).all(|v| profile.prefers(v, *dominating, *chosen))
            }
            Witness::Sigma2 {
                profile,
                chosen,
                majority,
            } => {
                profile.size() == 2
                    && profile.condorcet_winner() == Some(*majority)
                    && rule.evaluate(profile)? == *chosen
                    && chosen != majority
            }
            Witness::PairwiseConsistency {
                profile,
                rival,
                chosen,
                restricted_choice,
            } => {
                let mut keep = [*chosen, *rival];
                keep.sort();
                rule.evaluate(profile)? == *chosen
                    && evaluate_restricted(rule, profile, &keep)? == *restricted_choice
                    && chosen != restricted_choice
            }
        })
    }

    pub fn to_json(&self) -> Value {
        let l = |p: &StrictProfile, a: &Alt| p.label(*a).to_string();
        match self {
            Witness::Unanimity {
                profile,
                common_top,
                chosen,
            } => json!({
                "profile": profile.to_string(),
                "common_top": l(profile, common_top),
                "chosen": l(profile, chosen),
            }),
            Witness::Dictatorship { eliminations } => json!({
                "eliminations": eliminations.iter().map(|(i, p, c)| json!({
                    "voter": i,
                    "profile": p.to_string(),
                    "voter_top": l(p, &p.top(i - 1)),
                    "chosen": l(p, c),
                })).collect::<Vec<_>>(),
            }),
            Witness::Anonymity {
                profile,
                permutation,
                chosen,
                permuted_choice,
            } => json!({
                "profile": profile.to_string(),
                "voter_permutation": permutation.images().iter().map(|i| i + 1).collect::<Vec<_>>(),
                "chosen": l(profile, chosen),
                "permuted_choice": l(profile, permuted_choice),
            }),
            Witness::Neutrality {
                profile,
                relabeling,
                chosen,
                relabeled_choice,
            } => json!({
                "profile": profile.to_string(),
                "relabeling": profile.alternatives().alts()
                    .map(|a| format!("{}->{}", l(profile, &a), profile.label(Alt::from_index(relabeling.apply(a.index())))))
                    .collect::<Vec<_>>(),
                "chosen": l(profile, chosen),
                "relabeled_choice": l(profile, relabeled_choice),
            }),
            Witness::Iia {
                profile,
                removed,
                chosen,
                restricted_choice,
            } => json!({
                "profile": profile.to_string(),
                "removed": removed.iter().map(|a| l(profile, a)).collect::<Vec<_>>(),
                "chosen": l(profile, chosen),
                "restricted_choice": l(profile, restricted_choice),
            }),
            Witness::Pareto {
                profile,
                chosen,
                dominating,
            } => json!({
                "profile": profile.to_string(),
                "chosen": l(profile, chosen),
                "dominating": l(profile, dominating),
            }),
            Witness::Sigma2 {
                profile,
                chosen,
                majority,
            } => json!({
                "profile": profile.to_string(),
                "chosen": l(profile, chosen),
                "majority": l(profile, majority),
            }),
            Witness::PairwiseConsistency {
                profile,
                rival,
                chosen,
                restricted_choice,
            } => json!({
                "profile": profile.to_string(),
                "rival": l(profile, rival),
                "chosen": l(profile, chosen),
                "restricted_choice": l(profile, restricted_choice),
            }),
        }
    }
}

/// The outcome of one axiom check on one universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub axiom: Axiom,
    pub rule: String,
    pub universe: Universe,
    pub holds: bool,
    pub witness: Option<Witness>,
    /// For dictatorship: the least dictator, when there is one.
    pub dictator: Option<usize>,
}

impl Verdict {
    fn from_search(
        axiom: Axiom,
        rule: &VotingRule,
        universe: &Universe,
        witness: Option<Witness>,
    ) -> Self {
        Verdict {
            axiom,
            rule: rule.name().to_string(),
            universe: *universe,
            holds: witness.is_none(),
            witness,
            dictator: None,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "axiom": self.axiom,
            "rule": self.rule,
            "universe": self.universe,
            "holds": self.holds,
        });
        if let Some(d) = self.dictator {
            v["dictator"] = json!(d);
        }
        if let Some(w) = &self.witness {
            v["witness"] = w.to_json();
        }
        v
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} ({}, {})",
            self.axiom,
            if self.holds { "holds" } else { "FAILS" },
            self.rule,
            self.universe
        )?;
        if let Some(d) = self.dictator {
            write!(f, " dictator=voter {d}")?;
        }
        if let Some(w) = &self.witness {
            let json = w.to_json();
            if let Some(obj) = json.as_object() {
                for (k, v) in obj {
                    match v {
                        Value::String(s) if s.contains('\n') => {
                            write!(f, "\n  {k}:")?;
                            for line in s.lines() {
                                write!(f, "\n    {line}")?;
                            }
                        }
                        other => write!(f, "\n  {k}: {other}")?,
                    }
                }
            }
        }
        Ok(())
    }
}

/// Evaluates `rule` on `profile` restricted to `keep` (sorted ascending) and
/// maps the choice back to `profile`'s indices.
pub fn evaluate_restricted(
    rule: &VotingRule,
    profile: &StrictProfile,
    keep: &[Alt],
) -> Result<Alt> {
    let restricted = profile.restrict(keep)?;
    let choice = rule.evaluate(&restricted)?;
    Ok(keep[choice.index()])
}

/// Runs `probe` over every admissible profile of the given sizes and returns
/// the first witness (or error) in enumeration order.
fn search<F>(
    universe: &Universe,
    sizes: impl IntoIterator<Item = usize>,
    probe: F,
) -> Result<Option<Witness>>
where
    F: Fn(&StrictProfile) -> Result<Option<Witness>> + Sync + Send,
{
    for tau in sizes {
        let space = ProfileSpace::new(universe.n, tau, universe.domain)?;
        if let Some(found) = space.find_first(|p| probe(&p).transpose()) {
            return found.map(Some);
        }
    }
    Ok(None)
}

fn group(len: usize, opts: CheckOptions) -> Vec<Permutation> {
    if opts.full_group {
        Permutation::all(len)
    } else {
        Permutation::adjacent_transpositions(len)
    }
}

pub fn check_unanimity(rule: &VotingRule, universe: &Universe) -> Result<Verdict> {
    let witness = search(universe, universe.sizes(), |p| {
        let Some(top) = p.common_top() else {
            return Ok(None);
        };
        let chosen = rule.evaluate(p)?;
        Ok((chosen != top).then(|| Witness::Unanimity {
            profile: p.clone(),
            common_top: top,
            chosen,
        }))
    })?;
    Ok(Verdict::from_search(
        Axiom::Unanimity,
        rule,
        universe,
        witness,
    ))
}

/// The least voter whose top the rule always picks, if any.
pub fn check_dictatorship(rule: &VotingRule, universe: &Universe) -> Result<Option<usize>> {
    Ok(dictatorship_verdict(rule, universe)?.dictator)
}

pub fn dictatorship_verdict(rule: &VotingRule, universe: &Universe) -> Result<Verdict> {
    let mut alive: Vec<Option<(StrictProfile, Alt)>> = vec![None; universe.n];
    let mut remaining = universe.n;
    'sizes: for tau in universe.sizes() {
        let space = ProfileSpace::new(universe.n, tau, universe.domain)?;
        for p in space.iter() {
            let chosen = rule.evaluate(&p)?;
            for (v, slot) in alive.iter_mut().enumerate() {
                if slot.is_none() && p.top(v) != chosen {
                    *slot = Some((p.clone(), chosen));
                    remaining -= 1;
                }
            }
            if remaining == 0 {
                break 'sizes;
            }
        }
    }
    let dictator = alive.iter().position(Option::is_none).map(|v| v + 1);
    let witness = dictator.is_none().then(|| Witness::Dictatorship {
        eliminations: alive
            .into_iter()
            .enumerate()
            .map(|(v, e)| {
                let (p, c) = e.expect("every voter eliminated");
                (v + 1, p, c)
            })
            .collect(),
    });
    Ok(Verdict {
        axiom: Axiom::Dictatorship,
        rule: rule.name().to_string(),
        universe: *universe,
        holds: dictator.is_some(),
        witness,
        dictator,
    })
}

pub fn check_anonymity(rule: &VotingRule, universe: &Universe) -> Result<Verdict> {
    check_anonymity_with(rule, universe, CheckOptions::default())
}

pub fn check_anonymity_with(
    rule: &VotingRule,
    universe: &Universe,
    opts: CheckOptions,
) -> Result<Verdict> {
    let perms = group(universe.n, opts);
    let witness = search(universe, universe.sizes(), |p| {
        let chosen = rule.evaluate(p)?;
        for pi in &perms {
            let permuted_choice = rule.evaluate(&p.permute_voters(pi)?)?;
            if permuted_choice != chosen {
                return Ok(Some(Witness::Anonymity {
                    profile: p.clone(),
                    permutation: pi.clone(),
                    chosen,
                    permuted_choice,
                }));
            }
        }
        Ok(None)
    })?;
    Ok(Verdict::from_search(
        Axiom::Anonymity,
        rule,
        universe,
        witness,
    ))
}

pub fn check_neutrality(rule: &VotingRule, universe: &Universe) -> Result<Verdict> {
    check_neutrality_with(rule, universe, CheckOptions::default())
}

pub fn check_neutrality_with(
    rule: &VotingRule,
    universe: &Universe,
    opts: CheckOptions,
) -> Result<Verdict> {
    let mut witness = None;
    for tau in universe.sizes() {
        let mus = group(tau, opts);
        witness = search(universe, [tau], |p| {
            let chosen = rule.evaluate(p)?;
            for mu in &mus {
                let relabeled_choice = rule.evaluate(&p.relabel(mu)?)?;
                if relabeled_choice.index() != mu.apply(chosen.index()) {
                    return Ok(Some(Witness::Neutrality {
                        profile: p.clone(),
                        relabeling: mu.clone(),
                        chosen,
                        relabeled_choice,
                    }));
                }
            }
            Ok(None)
        })?;
        if witness.is_some() {
            break;
        }
    }
    Ok(Verdict::from_search(
        Axiom::Neutrality,
        rule,
        universe,
        witness,
    ))
}

/// Removing any set of losers keeps the winner. Restrictions that leave the
/// admissible domain are skipped.
pub fn check_iia(rule: &VotingRule, universe: &Universe) -> Result<Verdict> {
    let witness = search(universe, universe.sizes(), |p| {
        let chosen = rule.evaluate(p)?;
        let losers: Vec<Alt> = p.alternatives().alts().filter(|&a| a != chosen).collect();
        for mask in 1u64..(1u64 << losers.len()) {
            let removed: Vec<Alt> = losers
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &a)| a)
                .collect();
            let keep: Vec<Alt> = p
                .alternatives()
                .alts()
                .filter(|a| !removed.contains(a))
                .collect();
            let restricted = p.restrict(&keep)?;
            if !universe.domain.admits(&restricted) {
                continue;
            }
            let restricted_choice = keep[rule.evaluate(&restricted)?.index()];
            if restricted_choice != chosen {
                return Ok(Some(Witness::Iia {
                    profile: p.clone(),
                    removed,
                    chosen,
                    restricted_choice,
                }));
            }
        }
        Ok(None)
    })?;
    Ok(Verdict::from_search(Axiom::Iia, rule, universe, witness))
}

pub fn check_pareto(rule: &VotingRule, universe: &Universe) -> Result<Verdict> {
    let witness = search(universe, universe.sizes(), |p| {
        let chosen = rule.evaluate(p)?;
        let dominating = p
            .alternatives()
            .alts()
            .find(|&x| (0..p.voters()).all(|v| p.prefers(v, x, chosen)));
        Ok(dominating.map(|dominating| Witness::Pareto {
            profile: p.clone(),
            chosen,
            dominating,
        }))
    })?;
    Ok(Verdict::from_search(Axiom::Pareto, rule, universe, witness))
}

/// On two alternatives, the strict-majority alternative is chosen. Profiles
/// without a strict majority are outside the quantifier.
pub fn check_sigma2(rule: &VotingRule, universe: &Universe) -> Result<Verdict> {
    if universe.tau_max < 2 {
        return Err(Error::Precondition("sigma2 needs tau_max >= 2".into()));
    }
    let witness = search(universe, [2], |p| {
        let Some(majority) = p.condorcet_winner() else {
            return Ok(None);
        };
        let chosen = rule.evaluate(p)?;
        Ok((chosen != majority).then(|| Witness::Sigma2 {
            profile: p.clone(),
            chosen,
            majority,
        }))
    })?;
    Ok(Verdict::from_search(Axiom::Sigma2, rule, universe, witness))
}

/// `σ(P|{σ(P), y}) = σ(P)` for every `y`, where the pair restriction is admissible.
pub fn check_pairwise_consistency(rule: &VotingRule, universe: &Universe) -> Result<Verdict> {
    let witness = search(universe, universe.sizes(), |p| {
        let chosen = rule.evaluate(p)?;
        for rival in p.alternatives().alts().filter(|&y| y != chosen) {
            let mut keep = [chosen, rival];
            keep.sort();
            let restricted = p.restrict(&keep)?;
            if !universe.domain.admits(&restricted) {
                continue;
            }
            let restricted_choice = keep[rule.evaluate(&restricted)?.index()];
            if restricted_choice != chosen {
                return Ok(Some(Witness::PairwiseConsistency {
                    profile: p.clone(),
                    rival,
                    chosen,
                    restricted_choice,
                }));
            }
        }
        Ok(None)
    })?;
    Ok(Verdict::from_search(
        Axiom::PairwiseConsistency,
        rule,
        universe,
        witness,
    ))
}

/// Dispatches to the checker for `axiom`.
pub fn check(
    axiom: Axiom,
    rule: &VotingRule,
    universe: &Universe,
    opts: CheckOptions,
) -> Result<Verdict> {
    match axiom {
        Axiom::Unanimity => check_unanimity(rule, universe),
        Axiom::Dictatorship => dictatorship_verdict(rule, universe),
        Axiom::Anonymity => check_anonymity_with(rule, universe, opts),
        Axiom::Neutrality => check_neutrality_with(rule, universe, opts),
        Axiom::Iia => check_iia(rule, universe),
        Axiom::Pareto => check_pareto(rule, universe),
        Axiom::Sigma2 => check_sigma2(rule, universe),
        Axiom::PairwiseConsistency => check_pairwise_consistency(rule, universe),
    }
}
