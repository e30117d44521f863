//! Binary and universal self-selectivity.
//!
//! Voters rank a finite set of rules by the alternatives those rules pick at a
//! profile `P`. A rule set is represented by its outcome vector: slot 0 is the
//! rule under test and slot `s` carries the alternative rival `s` selects at
//! `P`. Every outcome vector is realized by some tuple of distinct neutral
//! rivals (the relabeling action on strict profiles is free), so quantifying
//! over outcome vectors is the same as quantifying over rival rules.
//! [`binary_ss_oracle`] evaluates the two-rule case against an explicit rival
//! instead, as an independent cross-check.
//!
//! A compatible profile over slots is evaluated by transporting it onto the
//! canonical alternative set `a1..am` (slot `s` becomes `a{s+1}`) and mapping
//! the choice back; for a neutral rule any other bijection gives the same slot.

use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::profiles::{
    next_permutation, Alt, AlternativeSet, DomainKind, Permutation, ProfileSpace, StrictProfile,
    Universe, WeakProfile,
};
use crate::rules::VotingRule;

/// Slot 0 is the rule under test; slots `1..m` are rivals. Each slot holds the
/// alternative its rule selects at the base profile. Outcomes may repeat.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RuleSlotSet {
    outcomes: Vec<Alt>,
}

impl RuleSlotSet {
    pub fn new(outcomes: Vec<Alt>) -> Result<Self> {
        if outcomes.len() < 2 {
            return Err(Error::Precondition(
                "a rule set needs at least two slots".into(),
            ));
        }
        if outcomes.len() > crate::profiles::MAX_ALTERNATIVES {
            return Err(Error::Precondition("too many slots".into()));
        }
        Ok(RuleSlotSet { outcomes })
    }

    pub fn binary(sigma: Alt, rival: Alt) -> Self {
        RuleSlotSet {
            outcomes: vec![sigma, rival],
        }
    }

    pub fn len(&self) -> usize {
        self.outcomes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.outcomes.is_empty()
    }

    pub fn outcomes(&self) -> &[Alt] {
        &self.outcomes
    }

    pub fn all_equal(&self) -> bool {
        self.outcomes.iter().all(|&o| o == self.outcomes[0])
    }

    /// `sigma`, `r1`, `r2`, …
    pub fn labels(&self) -> AlternativeSet {
        slot_labels(self.len())
    }

    /// `slots: sigma->x, r1->y`
    pub fn describe(&self, profile: &StrictProfile) -> String {
        let labels = self.labels();
        let parts: Vec<String> = self
            .outcomes
            .iter()
            .enumerate()
            .map(|(s, &o)| format!("{}->{}", labels.labels()[s], profile.label(o)))
            .collect();
        format!("slots: {}", parts.join(", "))
    }

    fn validate(&self, profile: &StrictProfile) -> Result<()> {
        match self.outcomes.iter().find(|o| o.index() >= profile.size()) {
            Some(o) => Err(Error::UnknownAlternative(format!("#{}", o.0))),
            None => Ok(()),
        }
    }
}

fn slot_labels(m: usize) -> AlternativeSet {
    AlternativeSet::new((0..m).map(|s| {
        if s == 0 {
            "sigma".to_string()
        } else {
            format!("r{s}")
        }
    }))
    .expect("slot labels are valid")
}

/// Voters' weak preferences over rule slots induced by a profile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedWeakProfile(WeakProfile);

impl InducedWeakProfile {
    pub fn weak_profile(&self) -> &WeakProfile {
        &self.0
    }
}

impl fmt::Display for InducedWeakProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// Slot `s` weakly beats slot `t` for voter `i` iff `outcome(s)` is at least as
/// high as `outcome(t)` in `P_i`; slots with equal outcomes are tied.
pub fn induce_weak_profile(
    profile: &StrictProfile,
    slots: &RuleSlotSet,
) -> Result<InducedWeakProfile> {
    slots.validate(profile)?;
    let orders = (0..profile.voters())
        .map(|v| {
            profile
                .ranking(v)
                .map(|alt| {
                    (0..slots.len())
                        .filter(|&s| slots.outcomes[s] == alt)
                        .map(Alt::from_index)
                        .collect::<Vec<_>>()
                })
                .filter(|class| !class.is_empty())
                .collect()
        })
        .collect();
    Ok(InducedWeakProfile(WeakProfile::new(
        slots.labels(),
        orders,
    )?))
}

/// Strict profiles over the slots compatible with `weak` and admissible under
/// `domain`, each once, voter 1 varying slowest.
pub fn linearizations(weak: &InducedWeakProfile, domain: DomainKind) -> Linearizations {
    let w = &weak.0;
    let options: Vec<Vec<Vec<u8>>> = (0..w.voters())
        .map(|v| {
            let mut orders: Vec<Vec<u8>> = vec![Vec::new()];
            for class in w.classes(v) {
                let mut class_orders = Vec::new();
                let mut perm: Vec<u8> = class.iter().map(|a| a.0).collect();
                perm.sort_unstable();
                loop {
                    class_orders.push(perm.clone());
                    if !next_permutation(&mut perm) {
                        break;
                    }
                }
                orders = orders
                    .iter()
                    .flat_map(|prefix| {
                        class_orders.iter().map(move |tail| {
                            let mut o = prefix.clone();
                            o.extend_from_slice(tail);
                            o
                        })
                    })
                    .collect();
            }
            orders
        })
        .collect();
    let total = options.iter().map(|o| o.len() as u64).product();
    Linearizations {
        alts: w.alternatives().clone(),
        options,
        domain,
        next: 0,
        total,
    }
}

/// Iterator returned by [`linearizations`].
pub struct Linearizations {
    alts: AlternativeSet,
    options: Vec<Vec<Vec<u8>>>,
    domain: DomainKind,
    next: u64,
    total: u64,
}

impl Linearizations {
    /// Number of compatible profiles before the admissibility filter.
    pub fn unfiltered_len(&self) -> u64 {
        self.total
    }
}

impl Iterator for Linearizations {
    type Item = StrictProfile;

    fn next(&mut self) -> Option<StrictProfile> {
        while self.next < self.total {
            let mut index = self.next;
            self.next += 1;
            let mut picks = vec![0usize; self.options.len()];
            for (v, opts) in self.options.iter().enumerate().rev() {
                picks[v] = (index % opts.len() as u64) as usize;
                index /= opts.len() as u64;
            }
            let order: Vec<u8> = picks
                .iter()
                .enumerate()
                .flat_map(|(v, &k)| self.options[v][k].iter().copied())
                .collect();
            let profile = StrictProfile::from_raw(self.alts.clone(), order);
            if self.domain.admits(&profile) {
                return Some(profile);
            }
        }
        None
    }
}

/// Evaluates `rule` on a profile over slots by transporting it with `beta`
/// onto `a1..am` and pulling the choice back: `β⁻¹(σ(βQ))`.
pub fn evaluate_transported(
    rule: &VotingRule,
    slot_profile: &StrictProfile,
    beta: &Permutation,
) -> Result<Alt> {
    let moved = slot_profile.transport(beta)?;
    let chosen = rule.evaluate(&moved)?;
    Ok(Alt::from_index(beta.inverse().apply(chosen.index())))
}

fn evaluate_slots(rule: &VotingRule, slot_profile: &StrictProfile) -> Result<Alt> {
    rule.evaluate(&slot_profile.with_canonical_labels())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SsOptions {
    /// Treat an empty compatible set as self-selection instead of failure.
    pub vacuous_pass: bool,
    /// Skip rule sets where some rival picks the same alternative as the rule.
    pub skip_same_outcome: bool,
    /// On the unrestricted domain, accept rule sets whose outcomes all coincide
    /// without evaluating; a neutral rule always selects itself there.
    pub same_outcome_fast_path: bool,
}

impl Default for SsOptions {
    fn default() -> Self {
        SsOptions {
            vacuous_pass: false,
            skip_same_outcome: false,
            same_outcome_fast_path: true,
        }
    }
}

/// Every admissible compatible profile with the slot it elects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelectionDetail {
    pub compatible: Vec<(StrictProfile, Alt)>,
    pub selected: bool,
}

/// Evaluates the rule on every admissible compatible profile.
pub fn selection_detail(
    rule: &VotingRule,
    profile: &StrictProfile,
    slots: &RuleSlotSet,
    domain: DomainKind,
    opts: SsOptions,
) -> Result<SelectionDetail> {
    let weak = induce_weak_profile(profile, slots)?;
    let compatible = linearizations(&weak, domain)
        .map(|q| {
            let chosen = evaluate_slots(rule, &q)?;
            Ok((q, chosen))
        })
        .collect::<Result<Vec<_>>>()?;
    let selected = if compatible.is_empty() {
        opts.vacuous_pass
    } else {
        compatible.iter().any(|(_, c)| c.index() == 0)
    };
    Ok(SelectionDetail {
        compatible,
        selected,
    })
}

/// Whether some admissible compatible profile elects slot 0.
pub fn self_selection_at(
    rule: &VotingRule,
    profile: &StrictProfile,
    slots: &RuleSlotSet,
    domain: DomainKind,
    opts: SsOptions,
) -> Result<bool> {
    if opts.same_outcome_fast_path && domain == DomainKind::Unrestricted && slots.all_equal() {
        slots.validate(profile)?;
        return Ok(true);
    }
    let weak = induce_weak_profile(profile, slots)?;
    let mut any = false;
    for q in linearizations(&weak, domain) {
        any = true;
        if evaluate_slots(rule, &q)?.index() == 0 {
            return Ok(true);
        }
    }
    Ok(!any && opts.vacuous_pass)
}

/// Binary self-selection at `profile` against an explicit rival rule. Builds the two-slot
/// compatible profiles directly from the two outcomes, without going through
/// weak profiles or [`linearizations`].
pub fn binary_ss_oracle(
    rule: &VotingRule,
    profile: &StrictProfile,
    rival: &VotingRule,
    domain: DomainKind,
) -> Result<bool> {
    if rule.name() == rival.name() {
        return Err(Error::Precondition(format!(
            "rival must differ from `{}`",
            rule.name()
        )));
    }
    let own = rule.evaluate(profile)?;
    let theirs = rival.evaluate(profile)?;
    let n = profile.voters();
    // Per voter: Some(true) = rule's outcome strictly higher, None = tied.
    let fixed: Vec<Option<bool>> = (0..n)
        .map(|v| (own != theirs).then(|| profile.prefers(v, own, theirs)))
        .collect();
    let free: Vec<usize> = (0..n).filter(|&v| fixed[v].is_none()).collect();
    let alts = AlternativeSet::canonical(2);
    for mask in 0u64..(1u64 << free.len()) {
        let rule_first: Vec<bool> = (0..n)
            .map(|v| match fixed[v] {
                Some(b) => b,
                None => {
                    let k = free.iter().position(|&f| f == v).unwrap();
                    mask & (1 << (free.len() - 1 - k)) == 0
                }
            })
            .collect();
        let supporters = rule_first.iter().filter(|&&b| b).count();
        let admissible = match domain {
            DomainKind::Unrestricted => true,
            DomainKind::Condorcet => 2 * supporters != n,
        };
        if !admissible {
            continue;
        }
        let rankings: Vec<Vec<Alt>> = rule_first
            .iter()
            .map(|&b| {
                if b {
                    vec![Alt(0), Alt(1)]
                } else {
                    vec![Alt(1), Alt(0)]
                }
            })
            .collect();
        let q = StrictProfile::new(alts.clone(), &rankings)?;
        if rule.evaluate(&q)? == Alt(0) {
            return Ok(true);
        }
    }
    Ok(false)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SsKind {
    BinarySs,
    UniversalSs,
}

/// A failing base profile and rule set, with every compatible profile the rule
/// was evaluated on. An empty list means no admissible compatible profile exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SsWitness {
    pub profile: StrictProfile,
    pub slots: RuleSlotSet,
    pub compatible: Vec<(StrictProfile, Alt)>,
}

impl SsWitness {
    pub fn empty_compatible(&self) -> bool {
        self.compatible.is_empty()
    }

    /// Recomputes the compatible set and the rule's choices.
    pub fn recheck(&self, rule: &VotingRule, domain: DomainKind, opts: SsOptions) -> Result<bool> {
        let detail = selection_detail(rule, &self.profile, &self.slots, domain, opts)?;
        Ok(!detail.selected
            && detail.compatible == self.compatible
            && rule.evaluate(&self.profile)? == self.slots.outcomes[0])
    }

    pub fn to_json(&self) -> Value {
        let labels = self.slots.labels();
        json!({
            "profile": self.profile.to_string(),
            "slots": self.slots.describe(&self.profile),
            "empty_compatible": self.empty_compatible(),
            "compatible": self.compatible.iter().map(|(q, c)| json!({
                "profile": q.to_string(),
                "chosen": labels.label(*c),
            })).collect::<Vec<_>>(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SsVerdict {
    pub kind: SsKind,
    pub rule: String,
    pub universe: Universe,
    pub k: Option<usize>,
    pub holds: bool,
    pub witness: Option<SsWitness>,
}

impl SsVerdict {
    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "axiom": self.kind,
            "rule": self.rule,
            "universe": self.universe,
            "holds": self.holds,
        });
        if let Some(k) = self.k {
            v["k"] = json!(k);
        }
        if let Some(w) = &self.witness {
            v["witness"] = w.to_json();
        }
        v
    }
}

impl fmt::Display for SsVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            SsKind::BinarySs => "binary-ss",
            SsKind::UniversalSs => "universal-ss",
        };
        write!(
            f,
            "{name}: {} ({}, {}",
            if self.holds { "holds" } else { "FAILS" },
            self.rule,
            self.universe
        )?;
        if let Some(k) = self.k {
            write!(f, ", k={k}")?;
        }
        write!(f, ")")?;
        if let Some(w) = &self.witness {
            writeln!(f)?;
            writeln!(f, "  profile:")?;
            for line in w.profile.to_string().lines() {
                writeln!(f, "    {line}")?;
            }
            write!(f, "  {}", w.slots.describe(&w.profile))?;
            if w.empty_compatible() {
                write!(f, "\n  no admissible compatible profile")?;
            }
            let labels = w.slots.labels();
            for (q, c) in &w.compatible {
                write!(f, "\n  compatible profile electing {}:", labels.label(*c))?;
                for line in q.to_string().lines() {
                    write!(f, "\n    {line}")?;
                }
            }
        }
        Ok(())
    }
}

fn check_slots(
    rule: &VotingRule,
    universe: &Universe,
    m: usize,
    opts: SsOptions,
) -> Result<Option<SsWitness>> {
    for tau in universe.sizes() {
        let space = ProfileSpace::new(universe.n, tau, universe.domain)?;
        let found = space.find_first(|p| {
            let probe = || -> Result<Option<SsWitness>> {
                let own = rule.evaluate(&p)?;
                let vectors = (tau as u64).pow((m - 1) as u32);
                for code in 0..vectors {
                    let mut outcomes = vec![own; m];
                    let mut c = code;
                    for s in (1..m).rev() {
                        outcomes[s] = Alt::from_index((c % tau as u64) as usize);
                        c /= tau as u64;
                    }
                    if opts.skip_same_outcome && outcomes[1..].contains(&own) {
                        continue;
                    }
                    let slots = RuleSlotSet { outcomes };
                    if !self_selection_at(rule, &p, &slots, universe.domain, opts)? {
                        let detail = selection_detail(rule, &p, &slots, universe.domain, opts)?;
                        return Ok(Some(SsWitness {
                            profile: p.clone(),
                            slots,
                            compatible: detail.compatible,
                        }));
                    }
                }
                Ok(None)
            };
            probe().transpose()
        });
        if let Some(found) = found {
            return found.map(Some);
        }
    }
    Ok(None)
}

/// Every admissible profile, every single rival outcome.
pub fn check_binary_ss(
    rule: &VotingRule,
    universe: &Universe,
    opts: SsOptions,
) -> Result<SsVerdict> {
    if universe.tau_max < 2 {
        return Err(Error::Precondition(
            "binary self-selectivity needs tau_max >= 2 to evaluate two-rule profiles".into(),
        ));
    }
    let witness = check_slots(rule, universe, 2, opts)?;
    Ok(SsVerdict {
        kind: SsKind::BinarySs,
        rule: rule.name().to_string(),
        universe: *universe,
        k: None,
        holds: witness.is_none(),
        witness,
    })
}

/// Rule sets of every size `2..=k`. Sizes are the outermost loop, so the
/// `k = 2` pass reproduces [`check_binary_ss`] witness for witness.
pub fn check_universal_ss(
    rule: &VotingRule,
    universe: &Universe,
    k: usize,
    opts: SsOptions,
) -> Result<SsVerdict> {
    if k < 2 {
        return Err(Error::Precondition(format!(
            "k must be at least 2, got {k}"
        )));
    }
    if k > universe.tau_max {
        return Err(Error::Precondition(format!(
            "k = {k} exceeds tau_max = {}; rules are undefined on the transported profiles",
            universe.tau_max
        )));
    }
    let mut witness = None;
    for m in 2..=k {
        witness = check_slots(rule, universe, m, opts)?;
        if witness.is_some() {
            break;
        }
    }
    Ok(SsVerdict {
        kind: SsKind::UniversalSs,
        rule: rule.name().to_string(),
        universe: *universe,
        k: Some(k),
        holds: witness.is_none(),
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profiles::parse_profile;
    use crate::rules::{borda_tb, condorcet_rule, dictatorship, plurality_tb};

    fn example_p() -> StrictProfile {
        parse_profile(
            "alternatives: x y z w\n\
             voter: x > y > z > w\nvoter: x > y > z > w\nvoter: x > y > z > w\n\
             voter: y > z > w > x\nvoter: y > z > w > x\n",
        )
        .unwrap()
    }

    fn example_p_prime() -> StrictProfile {
        parse_profile(
            "alternatives: x y z w\n\
             voter: x > y > w > z\nvoter: x > y > z > w\nvoter: y > w > z > x\n\
             voter: z > y > w > x\nvoter: w > y > z > x\n",
        )
        .unwrap()
    }

    fn tops(p: &StrictProfile) -> Vec<String> {
        (0..p.voters())
            .map(|v| p.label(p.top(v)).to_string())
            .collect()
    }

    #[test]
    fn induced_profiles_of_the_example() {
        let (x, y) = (Alt(0), Alt(1));
        let w = induce_weak_profile(&example_p(), &RuleSlotSet::binary(x, y)).unwrap();
        let lin: Vec<_> = linearizations(&w, DomainKind::Unrestricted).collect();
        assert_eq!(lin.len(), 1);
        assert_eq!(tops(&lin[0]), ["sigma", "sigma", "sigma", "r1", "r1"]);

        let w = induce_weak_profile(&example_p_prime(), &RuleSlotSet::binary(x, y)).unwrap();
        let lin: Vec<_> = linearizations(&w, DomainKind::Unrestricted).collect();
        assert_eq!(lin.len(), 1);
        assert_eq!(tops(&lin[0]), ["sigma", "sigma", "r1", "r1", "r1"]);
    }

    #[test]
    fn equal_outcomes_are_indifferent() {
        let p = example_p();
        let w = induce_weak_profile(&p, &RuleSlotSet::binary(Alt(2), Alt(2))).unwrap();
        for v in 0..5 {
            assert_eq!(w.weak_profile().classes(v).len(), 1);
        }
        assert!(induce_weak_profile(&p, &RuleSlotSet::binary(Alt(0), Alt(7))).is_err());
    }

    #[test]
    fn linearization_counts() {
        let alts = AlternativeSet::canonical(2);
        let base3 = StrictProfile::new(alts.clone(), &vec![vec![Alt(0), Alt(1)]; 3]).unwrap();
        let w = induce_weak_profile(&base3, &RuleSlotSet::binary(Alt(0), Alt(0))).unwrap();
        assert_eq!(linearizations(&w, DomainKind::Unrestricted).count(), 8);
        let base2 = StrictProfile::new(alts, &vec![vec![Alt(0), Alt(1)]; 2]).unwrap();
        let w = induce_weak_profile(&base2, &RuleSlotSet::binary(Alt(1), Alt(1))).unwrap();
        let lin: Vec<_> = linearizations(&w, DomainKind::Condorcet).collect();
        assert_eq!(lin.len(), 2);
        assert!(lin.iter().all(|q| q.common_top().is_some()));
    }

    #[test]
    fn example_one_self_selection() {
        let opts = SsOptions::default();
        let dom = DomainKind::Unrestricted;
        let plurality = plurality_tb(1).unwrap();
        let borda = borda_tb(4).unwrap();
        let slots = RuleSlotSet::binary(Alt(0), Alt(1));
        assert!(self_selection_at(&plurality, &example_p(), &slots, dom, opts).unwrap());
        let borda_slots = RuleSlotSet::binary(Alt(1), Alt(0));
        assert!(!self_selection_at(&borda, &example_p(), &borda_slots, dom, opts).unwrap());
        assert!(!self_selection_at(&plurality, &example_p_prime(), &slots, dom, opts).unwrap());

        assert!(binary_ss_oracle(&plurality, &example_p(), &borda, dom).unwrap());
        assert!(!binary_ss_oracle(&borda, &example_p(), &plurality, dom).unwrap());
        assert!(binary_ss_oracle(&borda, &example_p(), &borda, dom).is_err());
    }

    #[test]
    fn binary_and_universal_small_cases() {
        let opts = SsOptions::default();
        let u = Universe::unrestricted(3, 3).unwrap();
        for i in 1..=3 {
            let d = dictatorship(i).unwrap();
            assert!(check_binary_ss(&d, &u, opts).unwrap().holds);
            assert!(check_universal_ss(&d, &u, 3, opts).unwrap().holds);
        }
        let cu = Universe::condorcet(3, 3).unwrap();
        assert!(check_binary_ss(&condorcet_rule(), &cu, opts).unwrap().holds);

        let b = borda_tb(3).unwrap();
        let bin = check_binary_ss(&b, &u, opts).unwrap();
        let uni = check_universal_ss(&b, &u, 2, opts).unwrap();
        assert!(!bin.holds);
        assert_eq!(bin.witness, uni.witness);
        assert!(bin.witness.unwrap().recheck(&b, u.domain, opts).unwrap());
    }

    #[test]
    fn universal_preconditions() {
        let u = Universe::unrestricted(3, 2).unwrap();
        let d = dictatorship(1).unwrap();
        let opts = SsOptions::default();
        assert!(matches!(
            check_universal_ss(&d, &u, 3, opts),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            check_universal_ss(&d, &u, 1, opts),
            Err(Error::Precondition(_))
        ));
        let u1 = Universe::unrestricted(3, 1).unwrap();
        assert!(check_binary_ss(&d, &u1, opts).is_err());
    }

    #[test]
    fn empty_compatible_set_on_even_condorcet_domain() {
        // Two voters who disagree on the only pair of outcomes: the unique
        // compatible profile is a tie, which has no strong Condorcet winner.
        let alts = AlternativeSet::canonical(3);
        let p = StrictProfile::new(
            alts,
            &[vec![Alt(0), Alt(1), Alt(2)], vec![Alt(1), Alt(0), Alt(2)]],
        )
        .unwrap();
        let slots = RuleSlotSet::binary(Alt(0), Alt(1));
        let d = dictatorship(1).unwrap();
        let strict = SsOptions::default();
        let vacuous = SsOptions {
            vacuous_pass: true,
            ..strict
        };
        assert!(!self_selection_at(&d, &p, &slots, DomainKind::Condorcet, strict).unwrap());
        assert!(self_selection_at(&d, &p, &slots, DomainKind::Condorcet, vacuous).unwrap());
        let detail = selection_detail(&d, &p, &slots, DomainKind::Condorcet, strict).unwrap();
        assert!(detail.compatible.is_empty() && !detail.selected);
    }
}
