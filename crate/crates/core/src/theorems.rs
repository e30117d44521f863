//! Verification campaigns: the worked plurality/Borda example replayed exactly,
//! and the main equivalences exercised exhaustively or over seeded rule samples
//! on a truncated universe.
//!
//! Every campaign returns a [`CampaignReport`] instead of panicking; a failed
//! check carries the witness or the mismatch that caused it.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use serde_json::{json, Value};

use crate::axioms::{self, Axiom, CheckOptions};
use crate::error::{Error, Result};
use crate::profiles::{
    parse_profile, Alt, AlternativeSet, DomainKind, ProfileSpace, StrictProfile, Universe,
};
use crate::rules::{
    borda_scores, borda_tb, catalog, condorcet_rule, dictatorship, plurality_tb,
    random_neutral_rule, random_pairwise_rule, table_rule, OrbitTable, RuleConstraints, VotingRule,
};
use crate::selfselect::{
    check_binary_ss, check_universal_ss, induce_weak_profile, linearizations, selection_detail,
    self_selection_at, RuleSlotSet, SsOptions, SsVerdict,
};

/// One named assertion of a campaign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    /// The statement this check belongs to; summaries are grouped by it.
    pub statement: String,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// What a campaign learned about a single rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleResult {
    pub rule: String,
    pub axioms: BTreeMap<Axiom, bool>,
    pub binary: Option<SsVerdict>,
    pub universal: Option<SsVerdict>,
    pub k: Option<usize>,
}

impl RuleResult {
    fn new(rule: &VotingRule) -> Self {
        RuleResult {
            rule: rule.name().to_string(),
            axioms: BTreeMap::new(),
            binary: None,
            universal: None,
            k: None,
        }
    }

    fn to_json(&self) -> Value {
        let mut v = json!({
            "rule": self.rule,
            "axioms": self.axioms.iter().map(|(a, h)| (a.to_string(), json!(h))).collect::<serde_json::Map<_, _>>(),
        });
        if let Some(b) = &self.binary {
            v["binary_ss"] = b.to_json();
        }
        if let Some(u) = &self.universal {
            v["universal_ss"] = u.to_json();
        }
        if let Some(k) = self.k {
            v["k"] = json!(k);
        }
        v
    }
}

#[derive(Clone, Debug)]
pub struct CampaignReport {
    pub campaign: String,
    pub universe: Option<Universe>,
    pub rules: Vec<RuleResult>,
    pub checks: Vec<Check>,
    pub seeds: Vec<u64>,
    pub elapsed: Duration,
}

impl CampaignReport {
    fn new(campaign: &str, universe: Option<Universe>, seeds: &[u64]) -> Self {
        CampaignReport {
            campaign: campaign.to_string(),
            universe,
            rules: Vec::new(),
            checks: Vec::new(),
            seeds: seeds.to_vec(),
            elapsed: Duration::ZERO,
        }
    }

    fn check(
        &mut self,
        statement: &str,
        name: impl Into<String>,
        passed: bool,
        detail: impl Into<String>,
    ) {
        self.checks.push(Check {
            statement: statement.to_string(),
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// One boolean per statement: whether all its checks passed.
    pub fn summary(&self) -> BTreeMap<String, bool> {
        let mut out = BTreeMap::new();
        for c in &self.checks {
            *out.entry(c.statement.clone()).or_insert(true) &= c.passed;
        }
        out
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn rule(&self, name: &str) -> Option<&RuleResult> {
        self.rules.iter().find(|r| r.rule == name)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "campaign": self.campaign,
            "universe": self.universe,
            "passed": self.passed(),
            "summary": self.summary(),
            "checks": self.checks.iter().map(|c| json!({
                "statement": c.statement,
                "name": c.name,
                "passed": c.passed,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
            "rules": self.rules.iter().map(RuleResult::to_json).collect::<Vec<_>>(),
            "seeds": self.seeds,
            "elapsed_ms": self.elapsed.as_millis() as u64,
        })
    }
}

impl fmt::Display for CampaignReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "campaign {}", self.campaign)?;
        if let Some(u) = &self.universe {
            write!(f, " on {u}")?;
        }
        writeln!(
            f,
            ": {} ({} rules, {} seeds, {:.2?})",
            if self.passed() { "PASS" } else { "FAIL" },
            self.rules.len(),
            self.seeds.len(),
            self.elapsed
        )?;
        let summary = self.summary();
        let mut seen = Vec::new();
        for c in &self.checks {
            if !seen.contains(&&c.statement) {
                seen.push(&c.statement);
            }
        }
        for statement in seen {
            let ok = summary[statement];
            writeln!(f, "  [{}] {statement}", if ok { "ok" } else { "FAIL" })?;
            for c in self.checks.iter().filter(|c| &c.statement == statement) {
                write!(
                    f,
                    "    {:<4} {}",
                    if c.passed { "ok" } else { "FAIL" },
                    c.name
                )?;
                if !c.detail.is_empty() && (!c.passed || !c.detail.contains('\n')) {
                    for (i, line) in c.detail.lines().enumerate() {
                        if i == 0 {
                            write!(f, ": {line}")?;
                        } else {
                            write!(f, "\n           {line}")?;
                        }
                    }
                }
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

fn timed(report: &mut CampaignReport, start: Instant) {
    report.elapsed = start.elapsed();
}

fn verdict_detail(v: &SsVerdict) -> String {
    v.to_string()
}

const EXAMPLE_P: &str = "\
alternatives: x y z w
voter: x > y > z > w
voter: x > y > z > w
voter: x > y > z > w
voter: y > z > w > x
voter: y > z > w > x
";

const EXAMPLE_P_PRIME: &str = "\
alternatives: x y z w
voter: x > y > w > z
voter: x > y > z > w
voter: y > w > z > x
voter: z > y > w > x
voter: w > y > z > x
";

const INDUCED_P: &str = "\
alternatives: p b
voter: p > b
voter: p > b
voter: p > b
voter: b > p
voter: b > p
";

const INDUCED_P_PRIME: &str = "\
alternatives: p b
voter: p > b
voter: p > b
voter: b > p
voter: b > p
voter: b > p
";

/// Recomputes the five-voter plurality/Borda example from its two strict
/// profiles and compares every intermediate value.
pub fn replay_example1() -> Result<CampaignReport> {
    let start = Instant::now();
    let mut report = CampaignReport::new("example1", Some(Universe::unrestricted(5, 4)?), &[]);
    let plurality = plurality_tb(1)?;
    let borda = borda_tb(4)?;
    let rule_set = AlternativeSet::new(["p", "b"])?;

    for (tag, base_text, induced_text, counts, expect_rules, loser) in [
        ("P", EXAMPLE_P, INDUCED_P, [14, 17, 12, 7], "p", &borda),
        (
            "P'",
            EXAMPLE_P_PRIME,
            INDUCED_P_PRIME,
            [11, 16, 11, 12],
            "b",
            &plurality,
        ),
    ] {
        let base = parse_profile(base_text)?;
        let expected_induced = parse_profile(induced_text)?;
        let x = base.alternatives().lookup("x")?;
        let y = base.alternatives().lookup("y")?;
        let st = "example";

        let p_choice = plurality.evaluate(&base)?;
        report.check(
            st,
            format!("p({tag}) = x"),
            p_choice == x,
            format!("computed {}", base.label(p_choice)),
        );
        let b_choice = borda.evaluate(&base)?;
        report.check(
            st,
            format!("b({tag}) = y"),
            b_choice == y,
            format!("computed {}", base.label(b_choice)),
        );
        let scores = borda_scores(&base);
        report.check(
            st,
            format!("Borda counts at {tag} = {counts:?}"),
            scores == counts,
            format!("computed {scores:?}"),
        );

        // Slot 0 is p, slot 1 is b.
        let slots = RuleSlotSet::binary(p_choice, b_choice);
        let weak = induce_weak_profile(&base, &slots)?;
        let compatible: Vec<StrictProfile> = linearizations(&weak, DomainKind::Unrestricted)
            .map(|q| q.with_labels(rule_set.clone()))
            .collect::<Result<_>>()?;
        let unique = compatible.len() == 1;
        let matches = unique && compatible[0] == expected_induced;
        let diff = if matches {
            String::new()
        } else {
            let computed: Vec<String> = compatible.iter().map(ToString::to_string).collect();
            format!(
                "expected:\n{expected_induced}computed:\n{}",
                computed.join("--\n")
            )
        };
        report.check(
            st,
            format!("unique compatible profile at {tag} matches the expected one"),
            matches,
            diff,
        );
        if !unique {
            continue;
        }
        let induced = &compatible[0];
        let want = rule_set.lookup(expect_rules)?;
        for (name, rule) in [("p", &plurality), ("b", &borda)] {
            let got = rule.evaluate(induced)?;
            report.check(
                st,
                format!("{name}(induced {tag}) = {expect_rules}"),
                got == want,
                format!("computed {}", induced.label(got)),
            );
        }

        // The losing rule, in slot 0, against the other rule's outcome.
        let (own, rival) = if std::ptr::eq(loser, &borda) {
            (b_choice, p_choice)
        } else {
            (p_choice, b_choice)
        };
        let loser_slots = RuleSlotSet::binary(own, rival);
        let selects = self_selection_at(
            loser,
            &base,
            &loser_slots,
            DomainKind::Unrestricted,
            SsOptions::default(),
        )?;
        report.check(
            st,
            format!("{} does not select itself at {tag}", loser.name()),
            !selects,
            loser_slots.describe(&base),
        );
    }
    timed(&mut report, start);
    Ok(report)
}

/// Which sampler and constraints a seeded rule uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SampleKind {
    Random(RuleConstraints),
    Pairwise(RuleConstraints),
}

/// Builds one rule per `(seed, kind)` pair, cycling through `kinds`.
pub fn sample_rules(
    universe: &Universe,
    seeds: &[u64],
    kinds: &[SampleKind],
) -> Result<Vec<VotingRule>> {
    seeds
        .iter()
        .enumerate()
        .map(|(i, &seed)| match kinds[i % kinds.len()] {
            SampleKind::Random(c) => random_neutral_rule(seed, universe, c),
            SampleKind::Pairwise(c) => random_pairwise_rule(seed, universe, c),
        })
        .collect()
}

/// `base, base+1, …` (`count` seeds).
pub fn seed_range(base: u64, count: usize) -> Vec<u64> {
    (0..count as u64).map(|i| base + i).collect()
}

/// Binary and universal verdicts agree, with identical witnesses, for every
/// catalog rule and every sampled neutral rule.
pub fn verify_theorem1(universe: &Universe, seeds: &[u64], k: usize) -> Result<CampaignReport> {
    if k < 2 || k > universe.tau_max {
        return Err(Error::Precondition(format!(
            "theorem1 needs 2 <= k <= tau_max, got k = {k}, tau_max = {}",
            universe.tau_max
        )));
    }
    let start = Instant::now();
    let mut report = CampaignReport::new("theorem1", Some(*universe), seeds);
    let opts = SsOptions::default();
    let mut rules = catalog(universe);
    rules.extend(sample_rules(
        universe,
        seeds,
        &[
            SampleKind::Random(RuleConstraints::NONE),
            SampleKind::Random(RuleConstraints::UNANIMOUS),
            SampleKind::Pairwise(RuleConstraints::UNANIMOUS),
        ],
    )?);

    let mut agree = 0;
    let mut disagreements = Vec::new();
    for rule in &rules {
        let binary = check_binary_ss(rule, universe, opts)?;
        let universal = check_universal_ss(rule, universe, k, opts)?;
        if binary.holds == universal.holds && binary.witness == universal.witness {
            agree += 1;
        } else {
            disagreements.push(format!("{}\n{binary}\n{universal}", rule.name()));
        }
        let mut r = RuleResult::new(rule);
        r.binary = Some(binary);
        r.universal = Some(universal);
        r.k = Some(k);
        report.rules.push(r);
    }
    report.check(
        "binary iff universal",
        format!("verdicts and witnesses agree on {} rules", rules.len()),
        disagreements.is_empty(),
        if disagreements.is_empty() {
            format!("{agree} agreements")
        } else {
            disagreements.join("\n")
        },
    );

    let passing: Vec<&str> = report
        .rules
        .iter()
        .filter(|r| r.binary.as_ref().is_some_and(|b| b.holds))
        .map(|r| r.rule.as_str())
        .collect();
    report.check(
        "binary iff universal",
        "rules passing both checks",
        true,
        format!(
            "{} of {}: {}",
            passing.len(),
            rules.len(),
            passing.join(", ")
        ),
    );
    if universe.domain == DomainKind::Unrestricted {
        for i in 1..=universe.n {
            let name = format!("dict:{i}");
            let holds = report.rule(&name).is_some_and(|r| {
                r.binary.as_ref().is_some_and(|b| b.holds)
                    && r.universal.as_ref().is_some_and(|u| u.holds)
            });
            report.check(
                "binary iff universal",
                format!("{name} holds under both"),
                holds,
                "",
            );
        }
    }
    timed(&mut report, start);
    Ok(report)
}

fn require_tau3(universe: &Universe, campaign: &str) -> Result<()> {
    if universe.tau_max < 3 {
        return Err(Error::Precondition(format!(
            "{campaign} needs tau_max >= 3; with at most two alternatives non-dictatorial rules \
             such as odd-n majority survive the truncation"
        )));
    }
    Ok(())
}

/// Dictatorships pass; every unanimous neutral non-dictatorial rule fails.
pub fn verify_corollary1(universe: &Universe, seeds: &[u64]) -> Result<CampaignReport> {
    if universe.domain != DomainKind::Unrestricted {
        return Err(Error::Precondition(
            "corollary1 needs the unrestricted domain".into(),
        ));
    }
    require_tau3(universe, "corollary1")?;
    let start = Instant::now();
    let mut report = CampaignReport::new("corollary1", Some(*universe), seeds);
    let opts = SsOptions::default();

    for i in 1..=universe.n {
        let rule = dictatorship(i)?;
        let v = check_binary_ss(&rule, universe, opts)?;
        report.check(
            "dictatorships are binary self-selective",
            rule.name(),
            v.holds,
            verdict_detail(&v),
        );
        let mut r = RuleResult::new(&rule);
        r.binary = Some(v);
        report.rules.push(r);
    }

    let mut candidates: Vec<VotingRule> = catalog(universe)
        .into_iter()
        .filter(|r| !r.name().starts_with("dict:"))
        .collect();
    candidates.extend(sample_rules(
        universe,
        seeds,
        &[
            SampleKind::Random(RuleConstraints::UNANIMOUS),
            SampleKind::Pairwise(RuleConstraints::UNANIMOUS),
        ],
    )?);

    let statement = "unanimous neutral non-dictatorial rules fail";
    let (mut tested, mut skipped) = (0, Vec::new());
    for rule in &candidates {
        let mut r = RuleResult::new(rule);
        let unanimous = axioms::check_unanimity(rule, universe)?.holds;
        let neutral = axioms::check_neutrality(rule, universe)?.holds;
        let dictator = axioms::check_dictatorship(rule, universe)?;
        r.axioms.insert(Axiom::Unanimity, unanimous);
        r.axioms.insert(Axiom::Neutrality, neutral);
        r.axioms.insert(Axiom::Dictatorship, dictator.is_some());
        if !unanimous || !neutral || dictator.is_some() {
            skipped.push(rule.name().to_string());
            report.rules.push(r);
            continue;
        }
        tested += 1;
        let v = check_binary_ss(rule, universe, opts)?;
        if v.holds {
            report.check(statement, rule.name(), false, verdict_detail(&v));
        }
        r.binary = Some(v);
        report.rules.push(r);
    }
    report.check(
        statement,
        format!("{tested} rules tested"),
        tested > 0,
        format!(
            "skipped (hypotheses fail): {}",
            if skipped.is_empty() {
                "none".into()
            } else {
                skipped.join(", ")
            }
        ),
    );
    for name in ["plurality:1", "borda:"] {
        if let Some(r) = report.rules.iter().find(|r| r.rule.starts_with(name)) {
            let failed = r
                .binary
                .as_ref()
                .is_some_and(|b| !b.holds && b.witness.is_some());
            let detail = r.binary.as_ref().map(verdict_detail).unwrap_or_default();
            report.check(
                statement,
                format!("{} fails with a witness", r.rule),
                failed,
                detail,
            );
        }
    }
    timed(&mut report, start);
    Ok(report)
}

fn require_condorcet(universe: &Universe, campaign: &str) -> Result<()> {
    if universe.domain != DomainKind::Condorcet {
        return Err(Error::Precondition(format!(
            "{campaign} needs the condorcet domain"
        )));
    }
    if universe.n.is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "{campaign} needs an odd number of voters; with even n two-alternative ties leave \
             some compatible sets empty"
        )));
    }
    require_tau3(universe, campaign)
}

/// Whether two neutral rules agree on every admissible profile of `universe`.
pub fn same_on_universe(a: &VotingRule, b: &VotingRule, universe: &Universe) -> Result<bool> {
    for tau in universe.sizes() {
        for rep in ProfileSpace::new(universe.n, tau, universe.domain)?.representatives() {
            if a.evaluate(&rep)? != b.evaluate(&rep)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A perturbation of a table rule: its table with one orbit's value changed.
#[derive(Clone, Debug)]
pub struct Perturbation {
    pub rule: VotingRule,
    pub representative: StrictProfile,
    pub original: Alt,
    pub value: Alt,
}

/// Every single-orbit perturbation of `rule` on `universe`.
pub fn perturbations(rule: &VotingRule, universe: &Universe) -> Result<Vec<Perturbation>> {
    let base = OrbitTable::from_rule(rule, universe)?;
    let mut out = Vec::new();
    for (rep, original) in base.iter() {
        for value in rep.alternatives().alts().filter(|&a| a != original) {
            let mut table = base.clone();
            table.insert(&rep, value)?;
            let name = format!(
                "{}~{}->a{}",
                rule.name(),
                rep.index_key(),
                value.index() + 1
            );
            out.push(Perturbation {
                rule: table_rule(table, name),
                representative: rep.clone(),
                original,
                value,
            });
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum SsCheck {
    Binary,
    Universal(usize),
}

impl SsCheck {
    fn run(self, rule: &VotingRule, universe: &Universe) -> Result<SsVerdict> {
        match self {
            SsCheck::Binary => check_binary_ss(rule, universe, SsOptions::default()),
            SsCheck::Universal(k) => check_universal_ss(rule, universe, k, SsOptions::default()),
        }
    }

    fn store(self, r: &mut RuleResult, v: SsVerdict) {
        match self {
            SsCheck::Binary => r.binary = Some(v),
            SsCheck::Universal(k) => {
                r.universal = Some(v);
                r.k = Some(k);
            }
        }
    }
}

/// Statements (b) to (d) shared by the binary and universal Condorcet campaigns.
fn condorcet_uniqueness(
    report: &mut CampaignReport,
    universe: &Universe,
    seeds: &[u64],
    how: SsCheck,
) -> Result<()> {
    let c = condorcet_rule();
    let label = match how {
        SsCheck::Binary => "binary".to_string(),
        SsCheck::Universal(k) => format!("universal (k={k})"),
    };

    let v = how.run(&c, universe)?;
    report.check(
        &format!("condorcet is {label} self-selective"),
        "condorcet",
        v.holds,
        verdict_detail(&v),
    );
    let mut r = RuleResult::new(&c);
    how.store(&mut r, v);
    report.rules.push(r);

    let statement = format!("unanimous neutral anonymous rules other than condorcet fail {label}");
    let sampled = sample_rules(
        universe,
        seeds,
        &[
            SampleKind::Random(RuleConstraints::UNANIMOUS_ANONYMOUS),
            SampleKind::Pairwise(RuleConstraints::UNANIMOUS_ANONYMOUS),
        ],
    )?;
    let (mut tested, mut equal_to_c) = (0, 0);
    for rule in &sampled {
        let mut r = RuleResult::new(rule);
        if same_on_universe(rule, &c, universe)? {
            equal_to_c += 1;
            report.rules.push(r);
            continue;
        }
        tested += 1;
        let v = how.run(rule, universe)?;
        if v.holds {
            report.check(&statement, rule.name(), false, verdict_detail(&v));
        }
        how.store(&mut r, v);
        report.rules.push(r);
    }
    report.check(
        &statement,
        format!("{tested} sampled rules differing from condorcet tested"),
        tested > 0,
        format!("{equal_to_c} samples coincide with condorcet and were skipped"),
    );

    let statement = format!("single-orbit perturbations of condorcet fail {label}");
    let mut perturbed = 0;
    let mut sigma2_members = 0;
    for p in perturbations(&c, universe)? {
        perturbed += 1;
        let v = how.run(&p.rule, universe)?;
        if v.holds || v.witness.is_none() {
            report.check(&statement, p.rule.name(), false, verdict_detail(&v));
        }
        let mut r = RuleResult::new(&p.rule);
        // Perturbations above two alternatives keep majority on pairs.
        let in_sigma2 = p.representative.size() >= 3;
        r.axioms.insert(Axiom::Sigma2, in_sigma2);
        how.store(&mut r, v);
        report.rules.push(r);

        if in_sigma2 {
            sigma2_members += 1;
            let base = &p.representative;
            let slots = RuleSlotSet::binary(p.value, p.original);
            let detail =
                selection_detail(&p.rule, base, &slots, universe.domain, SsOptions::default())?;
            let unique_rival = detail.compatible.len() == 1 && detail.compatible[0].1 == Alt(1);
            if !unique_rival || detail.selected {
                report.check(
                    "majority on pairs plus self-selection forces condorcet",
                    p.rule.name(),
                    false,
                    format!(
                        "{base}{}\ncompatible profiles: {}",
                        slots.describe(base),
                        detail.compatible.len()
                    ),
                );
            }
        }
    }
    report.check(
        &statement,
        format!("{perturbed} perturbations tested"),
        perturbed > 0,
        "",
    );
    report.check(
        "majority on pairs plus self-selection forces condorcet",
        format!("{sigma2_members} pair-majority perturbations have a unique compatible profile electing the rival"),
        sigma2_members > 0,
        "",
    );
    Ok(())
}

/// The Condorcet rule is unanimous, neutral, anonymous and binary
/// self-selective; every other sampled or perturbed candidate fails.
pub fn verify_theorem2(universe: &Universe, seeds: &[u64]) -> Result<CampaignReport> {
    require_condorcet(universe, "theorem2")?;
    let start = Instant::now();
    let mut report = CampaignReport::new("theorem2", Some(*universe), seeds);
    let c = condorcet_rule();
    for axiom in [Axiom::Unanimity, Axiom::Neutrality, Axiom::Anonymity] {
        let v = axioms::check(axiom, &c, universe, CheckOptions::default())?;
        report.check(
            "condorcet is unanimous, neutral and anonymous",
            axiom.to_string(),
            v.holds,
            v.to_string(),
        );
    }
    condorcet_uniqueness(&mut report, universe, seeds, SsCheck::Binary)?;
    timed(&mut report, start);
    Ok(report)
}

/// [`verify_theorem2`]'s self-selectivity statements with the universal check.
pub fn verify_corollary2(universe: &Universe, seeds: &[u64], k: usize) -> Result<CampaignReport> {
    require_condorcet(universe, "corollary2")?;
    if k < 2 || k > universe.tau_max {
        return Err(Error::Precondition(format!(
            "corollary2 needs 2 <= k <= tau_max, got k = {k}, tau_max = {}",
            universe.tau_max
        )));
    }
    let start = Instant::now();
    let mut report = CampaignReport::new("corollary2", Some(*universe), seeds);
    condorcet_uniqueness(&mut report, universe, seeds, SsCheck::Universal(k))?;
    timed(&mut report, start);
    Ok(report)
}

/// Implications between axioms over the catalog and sampled rules:
/// neutral rules failing IIA fail binary self-selectivity; unanimity and IIA
/// give Pareto; neutrality, anonymity, IIA and Pareto give majority on pairs;
/// on the Condorcet domain, majority on pairs with binary self-selectivity
/// leaves only the Condorcet rule.
pub fn verify_claims(universe: &Universe, seeds: &[u64]) -> Result<CampaignReport> {
    require_tau3(universe, "claims")?;
    let start = Instant::now();
    let mut report = CampaignReport::new("claims", Some(*universe), seeds);
    let opts = SsOptions::default();
    let mut kinds = vec![
        SampleKind::Random(RuleConstraints::UNANIMOUS),
        SampleKind::Pairwise(RuleConstraints::UNANIMOUS),
        SampleKind::Random(RuleConstraints::NONE),
    ];
    if universe.domain == DomainKind::Condorcet {
        kinds.push(SampleKind::Pairwise(RuleConstraints::UNANIMOUS_ANONYMOUS));
        kinds.push(SampleKind::Random(RuleConstraints::UNANIMOUS_ANONYMOUS));
    }
    let mut rules = catalog(universe);
    rules.extend(sample_rules(universe, seeds, &kinds)?);
    let c = condorcet_rule();

    let mut hypotheses = BTreeMap::<&str, usize>::new();
    let mut note = |report: &mut CampaignReport,
                    statement: &'static str,
                    rule: &str,
                    holds: bool,
                    detail: String| {
        *hypotheses.entry(statement).or_default() += 1;
        if !holds {
            report.check(statement, rule.to_string(), false, detail);
        }
    };
    const IIA_SS: &str = "neutral rules failing IIA fail binary self-selectivity";
    const PARETO: &str = "unanimity and IIA imply Pareto";
    const SIGMA2: &str = "neutrality, anonymity, IIA and Pareto imply majority on pairs";
    const UNIQUE: &str = "majority on pairs and binary self-selectivity imply condorcet";

    for rule in &rules {
        let mut r = RuleResult::new(rule);
        let mut verdicts = BTreeMap::new();
        for axiom in [
            Axiom::Unanimity,
            Axiom::Neutrality,
            Axiom::Anonymity,
            Axiom::Iia,
            Axiom::Pareto,
            Axiom::Sigma2,
        ] {
            let v = axioms::check(axiom, rule, universe, CheckOptions::default())?;
            r.axioms.insert(axiom, v.holds);
            verdicts.insert(axiom, v);
        }
        let holds = |a: Axiom| verdicts[&a].holds;
        let binary = check_binary_ss(rule, universe, opts)?;

        if holds(Axiom::Neutrality) && !holds(Axiom::Iia) {
            let detail = format!("{}\n{binary}", verdicts[&Axiom::Iia]);
            note(&mut report, IIA_SS, rule.name(), !binary.holds, detail);
        }
        if holds(Axiom::Unanimity) && holds(Axiom::Iia) {
            note(
                &mut report,
                PARETO,
                rule.name(),
                holds(Axiom::Pareto),
                verdicts[&Axiom::Pareto].to_string(),
            );
        }
        if holds(Axiom::Neutrality)
            && holds(Axiom::Anonymity)
            && holds(Axiom::Iia)
            && holds(Axiom::Pareto)
        {
            note(
                &mut report,
                SIGMA2,
                rule.name(),
                holds(Axiom::Sigma2),
                verdicts[&Axiom::Sigma2].to_string(),
            );
        }
        if universe.domain == DomainKind::Condorcet && holds(Axiom::Sigma2) && binary.holds {
            let same = same_on_universe(rule, &c, universe)?;
            note(&mut report, UNIQUE, rule.name(), same, binary.to_string());
        }
        r.binary = Some(binary);
        report.rules.push(r);
    }
    let mut statements = vec![IIA_SS, PARETO, SIGMA2];
    if universe.domain == DomainKind::Condorcet {
        statements.push(UNIQUE);
    }
    for statement in statements {
        let n = hypotheses.get(statement).copied().unwrap_or(0);
        report.check(
            statement,
            format!("hypotheses met by {n} of {} rules", rules.len()),
            true,
            "",
        );
    }
    timed(&mut report, start);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_one_replays() {
        let report = replay_example1().unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(report.checks.len(), 14);
    }

    #[test]
    fn preconditions() {
        let u2 = Universe::unrestricted(3, 2).unwrap();
        assert!(matches!(
            verify_corollary1(&u2, &[]),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            verify_claims(&u2, &[]),
            Err(Error::Precondition(_))
        ));
        let cu = Universe::condorcet(3, 3).unwrap();
        assert!(verify_corollary1(&cu, &[]).is_err());
        let even = Universe::condorcet(4, 3).unwrap();
        assert!(verify_theorem2(&even, &[]).is_err());
        assert!(verify_theorem2(&Universe::unrestricted(3, 3).unwrap(), &[]).is_err());
        assert!(verify_corollary2(&cu, &[], 4).is_err());
        assert!(verify_theorem1(&cu, &[], 4).is_err());
    }

    #[test]
    fn perturbation_count_on_condorcet_domain() {
        let cu = Universe::condorcet(3, 3).unwrap();
        // 4 pair orbits with one alternative value each, 34 triple orbits with two.
        assert_eq!(
            perturbations(&condorcet_rule(), &cu).unwrap().len(),
            4 + 34 * 2
        );
    }

    #[test]
    fn small_theorem1_campaign_is_reproducible() {
        let u = Universe::unrestricted(3, 3).unwrap();
        let seeds = seed_range(0, 6);
        let a = verify_theorem1(&u, &seeds, 3).unwrap();
        let b = verify_theorem1(&u, &seeds, 3).unwrap();
        assert!(a.passed(), "{a}");
        let strip = |r: &CampaignReport| {
            let mut v = r.to_json();
            v["elapsed_ms"] = json!(0);
            v
        };
        assert_eq!(strip(&a), strip(&b));
    }
}
