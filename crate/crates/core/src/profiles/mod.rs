//! Preference profiles over finite alternative sets.
//!
//! Alternatives are referred to by index (`Alt`) everywhere; labels only matter
//! for parsing and printing. A [`StrictProfile`] stores one linear order per
//! voter, most preferred first. Three group actions act on profiles:
//! relabeling of alternatives ([`StrictProfile::relabel`]), permutation of
//! voters ([`StrictProfile::permute_voters`]) and restriction to a subset of
//! alternatives ([`StrictProfile::restrict`]).

mod enumerate;
mod format;
mod permutation;

use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::error::{Error, Result};

pub use enumerate::{enumerate_profiles, ProfileSpace};
pub use format::parse_profile;
pub use permutation::Permutation;
pub(crate) use permutation::{factorial, next_permutation};

/// Largest alternative set we accept; indices are stored as bytes.
pub const MAX_ALTERNATIVES: usize = 64;

/// Index of an alternative inside its [`AlternativeSet`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Alt(pub u8);

impl Alt {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn from_index(i: usize) -> Alt {
        debug_assert!(i < MAX_ALTERNATIVES);
        Alt(i as u8)
    }
}

/// A finite, ordered set of uniquely labelled alternatives.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlternativeSet(Arc<[String]>);

impl AlternativeSet {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::AlternativeSet("no alternatives".into()));
        }
        if labels.len() > MAX_ALTERNATIVES {
            return Err(Error::AlternativeSet(format!(
                "{} alternatives exceeds the limit of {MAX_ALTERNATIVES}",
                labels.len()
            )));
        }
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty()
                || label
                    .chars()
                    .any(|c| c.is_whitespace() || matches!(c, '>' | '#' | ',' | ':'))
            {
                return Err(Error::AlternativeSet(format!("bad label `{label}`")));
            }
            if labels[..i].contains(label) {
                return Err(Error::AlternativeSet(format!("duplicate label `{label}`")));
            }
        }
        Ok(AlternativeSet(labels.into()))
    }

    /// `a1 .. aτ`. Shared for small sizes.
    pub fn canonical(size: usize) -> Self {
        static CACHE: OnceLock<Vec<AlternativeSet>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| (1..=12).map(Self::build_canonical).collect());
        match cache.get(size.wrapping_sub(1)) {
            Some(set) => set.clone(),
            None => Self::build_canonical(size),
        }
    }

    fn build_canonical(size: usize) -> Self {
        AlternativeSet::new((1..=size).map(|i| format!("a{i}"))).expect("canonical labels")
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn label(&self, alt: Alt) -> &str {
        &self.0[alt.index()]
    }

    pub fn labels(&self) -> &[String] {
        &self.0
    }

    pub fn find(&self, label: &str) -> Option<Alt> {
        self.0.iter().position(|l| l == label).map(Alt::from_index)
    }

    pub fn lookup(&self, label: &str) -> Result<Alt> {
        self.find(label)
            .ok_or_else(|| Error::UnknownAlternative(label.to_string()))
    }

    pub fn alts(&self) -> impl Iterator<Item = Alt> + Clone {
        (0..self.len()).map(Alt::from_index)
    }
}

impl fmt::Debug for AlternativeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// Which profiles a universe (and a rule) admits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DomainKind {
    /// Every strict profile.
    Unrestricted,
    /// Strict profiles with a strong Condorcet winner.
    Condorcet,
}

impl DomainKind {
    pub fn admits(self, profile: &StrictProfile) -> bool {
        match self {
            DomainKind::Unrestricted => true,
            DomainKind::Condorcet => profile.condorcet_winner().is_some(),
        }
    }

    /// Whether every profile admissible here is admissible under `other`.
    pub fn within(self, other: DomainKind) -> bool {
        other == DomainKind::Unrestricted || self == other
    }

    pub fn as_str(self) -> &'static str {
        match self {
            DomainKind::Unrestricted => "unrestricted",
            DomainKind::Condorcet => "condorcet",
        }
    }
}

impl std::str::FromStr for DomainKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "unrestricted" => Ok(DomainKind::Unrestricted),
            "condorcet" => Ok(DomainKind::Condorcet),
            other => Err(Error::Universe(format!("unknown domain `{other}`"))),
        }
    }
}

impl fmt::Display for DomainKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The finite test domain: `n` voters, alternative sets of size `1..=tau_max`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Universe {
    pub n: usize,
    pub tau_max: usize,
    pub domain: DomainKind,
}

impl Universe {
    pub fn new(n: usize, tau_max: usize, domain: DomainKind) -> Result<Self> {
        if n < 2 {
            return Err(Error::Universe(format!("need at least 2 voters, got {n}")));
        }
        if tau_max < 1 {
            return Err(Error::Universe("tau_max must be at least 1".into()));
        }
        if tau_max > MAX_ALTERNATIVES {
            return Err(Error::Universe(format!("tau_max {tau_max} too large")));
        }
        Ok(Universe { n, tau_max, domain })
    }

    pub fn unrestricted(n: usize, tau_max: usize) -> Result<Self> {
        Self::new(n, tau_max, DomainKind::Unrestricted)
    }

    pub fn condorcet(n: usize, tau_max: usize) -> Result<Self> {
        Self::new(n, tau_max, DomainKind::Condorcet)
    }

    pub fn sizes(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.tau_max
    }

    pub fn check_size(&self, tau: usize) -> Result<()> {
        if tau == 0 || tau > self.tau_max {
            Err(Error::SizeOutOfRange {
                tau,
                tau_max: self.tau_max,
            })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} tau<={} {}", self.n, self.tau_max, self.domain)
    }
}

/// One strict ranking per voter.
///
/// Rankings are stored flattened, voter by voter, so the derived ordering is
/// the lexicographic order used for orbit representatives.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StrictProfile {
    alts: AlternativeSet,
    order: Vec<u8>,
}

impl StrictProfile {
    /// Builds and validates a profile. Every ranking must list each alternative once.
    pub fn new(alts: AlternativeSet, rankings: &[Vec<Alt>]) -> Result<Self> {
        if rankings.is_empty() {
            return Err(Error::NoVoters);
        }
        let tau = alts.len();
        let mut order = Vec::with_capacity(tau * rankings.len());
        for (voter, ranking) in rankings.iter().enumerate() {
            let mut seen = vec![false; tau];
            for &alt in ranking {
                let fail = |reason: String| Error::Ranking {
                    voter: voter + 1,
                    reason,
                };
                if alt.index() >= tau {
                    return Err(fail(format!("alternative index {} out of range", alt.0)));
                }
                if std::mem::replace(&mut seen[alt.index()], true) {
                    return Err(fail(format!("duplicate `{}`", alts.label(alt))));
                }
            }
            if ranking.len() != tau {
                let missing: Vec<&str> = alts
                    .alts()
                    .filter(|a| !seen[a.index()])
                    .map(|a| alts.label(a))
                    .collect();
                return Err(Error::Ranking {
                    voter: voter + 1,
                    reason: format!("missing {}", missing.join(", ")),
                });
            }
            order.extend(ranking.iter().map(|a| a.0));
        }
        Ok(StrictProfile { alts, order })
    }

    /// Builds a profile from label rankings, e.g. `[["x", "y"], ["y", "x"]]`.
    pub fn from_labels<S: AsRef<str>>(alts: AlternativeSet, rankings: &[Vec<S>]) -> Result<Self> {
        let mut indexed = Vec::with_capacity(rankings.len());
        for (voter, ranking) in rankings.iter().enumerate() {
            let ranking = ranking
                .iter()
                .map(|l| {
                    alts.find(l.as_ref()).ok_or_else(|| Error::Ranking {
                        voter: voter + 1,
                        reason: format!("unknown alternative `{}`", l.as_ref()),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            indexed.push(ranking);
        }
        Self::new(alts, &indexed)
    }

    /// Unchecked constructor for internal generators.
    pub(crate) fn from_raw(alts: AlternativeSet, order: Vec<u8>) -> Self {
        debug_assert!(!order.is_empty() && order.len().is_multiple_of(alts.len()));
        StrictProfile { alts, order }
    }

    pub fn voters(&self) -> usize {
        self.order.len() / self.alts.len()
    }

    pub fn size(&self) -> usize {
        self.alts.len()
    }

    pub fn alternatives(&self) -> &AlternativeSet {
        &self.alts
    }

    pub fn label(&self, alt: Alt) -> &str {
        self.alts.label(alt)
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.order
    }

    pub(crate) fn raw_ranking(&self, voter: usize) -> &[u8] {
        let tau = self.size();
        &self.order[voter * tau..(voter + 1) * tau]
    }

    /// Voter `voter`'s ranking (0-based voter), most preferred first.
    pub fn ranking(&self, voter: usize) -> impl ExactSizeIterator<Item = Alt> + '_ {
        self.raw_ranking(voter).iter().map(|&a| Alt(a))
    }

    pub fn rankings(&self) -> Vec<Vec<Alt>> {
        (0..self.voters())
            .map(|v| self.ranking(v).collect())
            .collect()
    }

    pub fn top(&self, voter: usize) -> Alt {
        Alt(self.raw_ranking(voter)[0])
    }

    pub fn bottom(&self, voter: usize) -> Alt {
        Alt(*self.raw_ranking(voter).last().expect("nonempty ranking"))
    }

    /// The alternative every voter ranks first, if there is one.
    pub fn common_top(&self) -> Option<Alt> {
        let top = self.top(0);
        (1..self.voters())
            .all(|v| self.top(v) == top)
            .then_some(top)
    }

    pub fn position(&self, voter: usize, alt: Alt) -> usize {
        self.raw_ranking(voter)
            .iter()
            .position(|&a| a == alt.0)
            .expect("every ranking is total")
    }

    /// `x P_voter y`.
    pub fn prefers(&self, voter: usize, x: Alt, y: Alt) -> bool {
        x != y && self.position(voter, x) < self.position(voter, y)
    }

    /// The profile `μP`: `μ(x)` beats `μ(y)` for voter `i` iff `x` beats `y`.
    pub fn relabel(&self, mu: &Permutation) -> Result<StrictProfile> {
        if mu.len() != self.size() {
            return Err(Error::NotBijection(format!(
                "relabeling on {} alternatives applied to a profile over {}",
                mu.len(),
                self.size()
            )));
        }
        Ok(self.relabel_unchecked(mu))
    }

    pub(crate) fn relabel_unchecked(&self, mu: &Permutation) -> StrictProfile {
        let order = self
            .order
            .iter()
            .map(|&a| mu.apply(a as usize) as u8)
            .collect();
        StrictProfile {
            alts: self.alts.clone(),
            order,
        }
    }

    /// The profile `πP`, whose voter `i` holds `P_{π(i)}`.
    pub fn permute_voters(&self, pi: &Permutation) -> Result<StrictProfile> {
        if pi.len() != self.voters() {
            return Err(Error::NotBijection(format!(
                "voter permutation on {} voters applied to a profile with {}",
                pi.len(),
                self.voters()
            )));
        }
        let mut order = Vec::with_capacity(self.order.len());
        for i in 0..self.voters() {
            order.extend_from_slice(self.raw_ranking(pi.apply(i)));
        }
        Ok(StrictProfile {
            alts: self.alts.clone(),
            order,
        })
    }

    /// Restriction to `keep`, relative order preserved.
    ///
    /// The result's alternative set lists the kept labels in their original
    /// index order, so new index `j` is the `j`-th smallest kept alternative.
    pub fn restrict(&self, keep: &[Alt]) -> Result<StrictProfile> {
        if keep.is_empty() {
            return Err(Error::EmptyRestriction);
        }
        let tau = self.size();
        let mut new_index = vec![u8::MAX; tau];
        for &alt in keep {
            if alt.index() >= tau {
                return Err(Error::UnknownAlternative(format!("#{}", alt.0)));
            }
            new_index[alt.index()] = 0;
        }
        let mut labels = Vec::new();
        for (i, slot) in new_index.iter_mut().enumerate() {
            if *slot == 0 {
                *slot = labels.len() as u8;
                labels.push(self.alts.labels()[i].clone());
            }
        }
        let alts = AlternativeSet(labels.into());
        let order = self
            .order
            .iter()
            .filter_map(|&a| {
                let j = new_index[a as usize];
                (j != u8::MAX).then_some(j)
            })
            .collect();
        Ok(StrictProfile { alts, order })
    }

    /// Restriction to a set given by labels.
    pub fn restrict_labels<S: AsRef<str>>(&self, keep: &[S]) -> Result<StrictProfile> {
        let keep = keep
            .iter()
            .map(|l| self.alts.lookup(l.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        self.restrict(&keep)
    }

    /// `βP` for a bijection `β` from this profile's set onto `A_τ`; the result
    /// carries the canonical labels `a1..aτ`.
    pub fn transport(&self, beta: &Permutation) -> Result<StrictProfile> {
        let mut moved = self.relabel(beta)?;
        moved.alts = AlternativeSet::canonical(self.size());
        Ok(moved)
    }

    /// Same rankings, canonical labels (transport by the identity).
    pub fn with_canonical_labels(&self) -> StrictProfile {
        StrictProfile {
            alts: AlternativeSet::canonical(self.size()),
            order: self.order.clone(),
        }
    }

    /// Same rankings under a different label set of the same size.
    pub fn with_labels(&self, alts: AlternativeSet) -> Result<StrictProfile> {
        if alts.len() != self.size() {
            return Err(Error::AlternativeSet(format!(
                "expected {} labels, got {}",
                self.size(),
                alts.len()
            )));
        }
        Ok(StrictProfile {
            alts,
            order: self.order.clone(),
        })
    }

    pub fn pairwise_tally(&self) -> PairwiseTally {
        let tau = self.size();
        let mut counts = vec![0u32; tau * tau];
        for v in 0..self.voters() {
            let ranking = self.raw_ranking(v);
            for (i, &x) in ranking.iter().enumerate() {
                for &y in &ranking[i + 1..] {
                    counts[x as usize * tau + y as usize] += 1;
                }
            }
        }
        PairwiseTally {
            size: tau,
            voters: self.voters(),
            counts,
        }
    }

    /// The strong Condorcet winner: beats every other alternative by a strict majority.
    pub fn condorcet_winner(&self) -> Option<Alt> {
        let tally = self.pairwise_tally();
        self.alts.alts().find(|&x| {
            self.alts
                .alts()
                .all(|y| y == x || tally.strict_majority(x, y))
        })
    }

    /// The lexicographically least profile in the relabeling orbit, and the
    /// unique `μ` with `μP` equal to it.
    ///
    /// The least profile starts with the ranking `0 < 1 < … < τ-1`; exactly one
    /// relabeling sends voter 1's ranking there because the action is free.
    pub fn canonical_representative(&self) -> (StrictProfile, Permutation) {
        let mut images = vec![0usize; self.size()];
        for (rank, &a) in self.raw_ranking(0).iter().enumerate() {
            images[a as usize] = rank;
        }
        let mu = Permutation::new(images).expect("ranking is a permutation");
        (self.relabel_unchecked(&mu), mu)
    }

    pub fn is_canonical(&self) -> bool {
        self.raw_ranking(0)
            .iter()
            .enumerate()
            .all(|(i, &a)| a as usize == i)
    }

    /// Label-free key of the index rankings, e.g. `0,1,2/2,0,1`. Orbit tables key
    /// canonical representatives this way.
    pub fn index_key(&self) -> String {
        orbit_key(self.size(), &self.order)
    }
}

pub(crate) fn orbit_key(tau: usize, order: &[u8]) -> String {
    order
        .chunks(tau)
        .map(|r| {
            r.iter()
                .map(|a| a.to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join("/")
}

/// Parses an [`orbit_key`] back into (size, flattened order).
pub(crate) fn parse_orbit_key(key: &str) -> Option<(usize, Vec<u8>)> {
    let mut tau = None;
    let mut order = Vec::new();
    for ranking in key.split('/') {
        let start = order.len();
        for a in ranking.split(',') {
            order.push(a.trim().parse::<u8>().ok()?);
        }
        let len = order.len() - start;
        match tau {
            None => tau = Some(len),
            Some(t) if t != len => return None,
            _ => {}
        }
    }
    let tau = tau?;
    let valid = order.chunks(tau).all(|r| {
        let mut seen = vec![false; tau];
        r.iter()
            .all(|&a| (a as usize) < tau && !std::mem::replace(&mut seen[a as usize], true))
    });
    valid.then_some((tau, order))
}

impl fmt::Display for StrictProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "alternatives: {}", self.alts.labels().join(" "))?;
        for v in 0..self.voters() {
            let labels: Vec<&str> = self.ranking(v).map(|a| self.label(a)).collect();
            writeln!(f, "voter: {}", labels.join(" > "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for StrictProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rankings: Vec<String> = (0..self.voters())
            .map(|v| {
                self.ranking(v)
                    .map(|a| self.label(a))
                    .collect::<Vec<_>>()
                    .join(">")
            })
            .collect();
        write!(f, "StrictProfile[{}]", rankings.join(", "))
    }
}

impl Serialize for StrictProfile {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// `counts(x, y)` = number of voters ranking `x` above `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairwiseTally {
    size: usize,
    voters: usize,
    counts: Vec<u32>,
}

impl PairwiseTally {
    pub fn get(&self, x: Alt, y: Alt) -> usize {
        self.counts[x.index() * self.size + y.index()] as usize
    }

    pub fn voters(&self) -> usize {
        self.voters
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// `n(x, y) > n/2`.
    pub fn strict_majority(&self, x: Alt, y: Alt) -> bool {
        2 * self.get(x, y) > self.voters
    }
}

/// One ordered partition into indifference classes per voter.
#[derive(Clone, PartialEq, Eq)]
pub struct WeakProfile {
    alts: AlternativeSet,
    orders: Vec<Vec<Vec<Alt>>>,
}

impl WeakProfile {
    pub fn new(alts: AlternativeSet, orders: Vec<Vec<Vec<Alt>>>) -> Result<Self> {
        if orders.is_empty() {
            return Err(Error::NoVoters);
        }
        for (voter, classes) in orders.iter().enumerate() {
            let mut seen = vec![false; alts.len()];
            let fail = |reason: &str| Error::Ranking {
                voter: voter + 1,
                reason: reason.to_string(),
            };
            for class in classes {
                if class.is_empty() {
                    return Err(fail("empty indifference class"));
                }
                for &a in class {
                    if a.index() >= alts.len() || std::mem::replace(&mut seen[a.index()], true) {
                        return Err(fail(
                            "indifference classes overlap or use unknown alternatives",
                        ));
                    }
                }
            }
            if seen.iter().any(|s| !s) {
                return Err(fail("indifference classes do not cover every alternative"));
            }
        }
        Ok(WeakProfile { alts, orders })
    }

    pub fn voters(&self) -> usize {
        self.orders.len()
    }

    pub fn alternatives(&self) -> &AlternativeSet {
        &self.alts
    }

    /// Voter `voter`'s indifference classes, best first.
    pub fn classes(&self, voter: usize) -> &[Vec<Alt>] {
        &self.orders[voter]
    }

    fn class_of(&self, voter: usize, alt: Alt) -> usize {
        self.orders[voter]
            .iter()
            .position(|c| c.contains(&alt))
            .expect("classes cover the set")
    }

    /// `x R_voter y`.
    pub fn weakly_prefers(&self, voter: usize, x: Alt, y: Alt) -> bool {
        self.class_of(voter, x) <= self.class_of(voter, y)
    }

    /// Whether `strict` can be obtained by ordering each indifference class.
    pub fn is_compatible(&self, strict: &StrictProfile) -> bool {
        strict.voters() == self.voters()
            && strict.size() == self.alts.len()
            && (0..self.voters()).all(|v| {
                let r = strict.raw_ranking(v);
                r.windows(2)
                    .all(|w| self.weakly_prefers(v, Alt(w[0]), Alt(w[1])))
            })
    }
}

impl fmt::Display for WeakProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "alternatives: {}", self.alts.labels().join(" "))?;
        for classes in &self.orders {
            let parts: Vec<String> = classes
                .iter()
                .map(|c| {
                    c.iter()
                        .map(|&a| self.alts.label(a))
                        .collect::<Vec<_>>()
                        .join(" ~ ")
                })
                .collect();
            writeln!(f, "voter: {}", parts.join(" > "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for WeakProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn example_p() -> StrictProfile {
        let alts = AlternativeSet::new(["x", "y", "z", "w"]).unwrap();
        StrictProfile::from_labels(
            alts,
            &[
                vec!["x", "y", "z", "w"],
                vec!["x", "y", "z", "w"],
                vec!["x", "y", "z", "w"],
                vec!["y", "z", "w", "x"],
                vec!["y", "z", "w", "x"],
            ],
        )
        .unwrap()
    }

    fn example_p_prime() -> StrictProfile {
        let alts = AlternativeSet::new(["x", "y", "z", "w"]).unwrap();
        StrictProfile::from_labels(
            alts,
            &[
                vec!["x", "y", "w", "z"],
                vec!["x", "y", "z", "w"],
                vec!["y", "w", "z", "x"],
                vec!["z", "y", "w", "x"],
                vec!["w", "y", "z", "x"],
            ],
        )
        .unwrap()
    }

    #[test]
    fn make_profile_validates() {
        let p = example_p();
        assert_eq!(p.voters(), 5);
        assert_eq!(p.size(), 4);

        let alts = AlternativeSet::new(["x", "y"]).unwrap();
        let dup = StrictProfile::from_labels(alts.clone(), &[vec!["x", "x", "y"]]);
        assert!(matches!(dup, Err(Error::Ranking { voter: 1, .. })));
        let missing = StrictProfile::from_labels(alts.clone(), &[vec!["x"]]);
        assert!(matches!(missing, Err(Error::Ranking { .. })));
        let none: [Vec<&str>; 0] = [];
        assert_eq!(
            StrictProfile::from_labels(alts, &none),
            Err(Error::NoVoters)
        );

        let single = AlternativeSet::new(["only"]).unwrap();
        let p = StrictProfile::from_labels(single, &vec![vec!["only"]; 4]).unwrap();
        assert_eq!(p.condorcet_winner(), Some(Alt(0)));
    }

    #[test]
    fn alternative_set_rejects_bad_labels() {
        assert!(AlternativeSet::new(["x", "x"]).is_err());
        assert!(AlternativeSet::new(["a b"]).is_err());
        assert!(AlternativeSet::new(Vec::<String>::new()).is_err());
        assert_eq!(AlternativeSet::canonical(3).labels(), ["a1", "a2", "a3"]);
    }

    #[test]
    fn relabel_swap() {
        let p = example_p();
        let mu = Permutation::transposition(4, 0, 1);
        let q = p.relabel(&mu).unwrap();
        let first: Vec<&str> = q.ranking(0).map(|a| q.label(a)).collect();
        assert_eq!(first, ["y", "x", "z", "w"]);
        assert_eq!(p.relabel(&Permutation::identity(4)).unwrap(), p);
        assert!(p.relabel(&Permutation::identity(3)).is_err());
    }

    #[test]
    fn permute_voters_swaps_columns() {
        let p = example_p();
        let pi = Permutation::transposition(5, 0, 3);
        let q = p.permute_voters(&pi).unwrap();
        let first: Vec<&str> = q.ranking(0).map(|a| q.label(a)).collect();
        assert_eq!(first, ["y", "z", "w", "x"]);
        assert!(p.permute_voters(&Permutation::identity(4)).is_err());
    }

    #[test]
    fn restrict_to_pair() {
        let p = example_p();
        let r = p.restrict_labels(&["x", "y"]).unwrap();
        assert_eq!(r.alternatives().labels(), ["x", "y"]);
        let tops: Vec<&str> = (0..5).map(|v| r.label(r.top(v))).collect();
        assert_eq!(tops, ["x", "x", "x", "y", "y"]);
        assert_eq!(p.restrict_labels(&["x", "y", "z", "w"]).unwrap(), p);
        assert_eq!(p.restrict(&[]), Err(Error::EmptyRestriction));
        assert!(p.restrict_labels(&["q"]).is_err());
    }

    #[test]
    fn transport_of_induced_profile() {
        let alts = AlternativeSet::new(["p", "b"]).unwrap();
        let t2 = StrictProfile::from_labels(
            alts,
            &[
                vec!["p", "b"],
                vec!["p", "b"],
                vec!["p", "b"],
                vec!["b", "p"],
                vec!["b", "p"],
            ],
        )
        .unwrap();
        let moved = t2.transport(&Permutation::identity(2)).unwrap();
        let tops: Vec<&str> = (0..5).map(|v| moved.label(moved.top(v))).collect();
        assert_eq!(tops, ["a1", "a1", "a1", "a2", "a2"]);
        assert!(t2.transport(&Permutation::identity(3)).is_err());
    }

    #[test]
    fn tallies_and_condorcet_winners() {
        let p = example_p();
        let t = p.pairwise_tally();
        assert_eq!(t.get(Alt(0), Alt(1)), 3);
        assert_eq!(t.get(Alt(1), Alt(0)), 2);
        assert_eq!(p.condorcet_winner().map(|a| p.label(a)), Some("x"));

        let q = example_p_prime();
        let t = q.pairwise_tally();
        assert_eq!(
            (
                t.get(Alt(1), Alt(0)),
                t.get(Alt(1), Alt(2)),
                t.get(Alt(1), Alt(3))
            ),
            (3, 4, 4)
        );
        assert_eq!(q.condorcet_winner().map(|a| q.label(a)), Some("y"));

        let alts = AlternativeSet::new(["x", "y"]).unwrap();
        let tied = StrictProfile::from_labels(alts, &[vec!["x", "y"], vec!["y", "x"]]).unwrap();
        assert_eq!(tied.condorcet_winner(), None);
    }

    #[test]
    fn unanimous_tally() {
        let alts = AlternativeSet::canonical(3);
        let p = StrictProfile::new(alts, &vec![vec![Alt(2), Alt(0), Alt(1)]; 4]).unwrap();
        let t = p.pairwise_tally();
        assert_eq!(t.get(Alt(2), Alt(0)), 4);
        assert_eq!(t.get(Alt(0), Alt(1)), 4);
        assert_eq!(t.get(Alt(1), Alt(2)), 0);
        assert_eq!(p.common_top(), Some(Alt(2)));
    }

    #[test]
    fn canonical_representative_basics() {
        let p = example_p_prime();
        let (rep, mu) = p.canonical_representative();
        assert!(rep.is_canonical());
        assert_eq!(p.relabel(&mu).unwrap(), rep);

        let single =
            StrictProfile::new(AlternativeSet::canonical(1), &vec![vec![Alt(0)]; 3]).unwrap();
        let (rep, mu) = single.canonical_representative();
        assert_eq!(rep, single);
        assert!(mu.is_identity());
    }

    #[test]
    fn orbit_keys_round_trip() {
        let p = example_p_prime();
        let key = p.index_key();
        assert_eq!(key, "0,1,3,2/0,1,2,3/1,3,2,0/2,1,3,0/3,1,2,0");
        assert_eq!(parse_orbit_key(&key), Some((4, p.raw().to_vec())));
        assert_eq!(parse_orbit_key("0,1/0"), None);
        assert_eq!(parse_orbit_key("0,0/1,0"), None);
    }

    #[test]
    fn weak_profile_validation_and_compatibility() {
        let alts = AlternativeSet::canonical(3);
        let w =
            WeakProfile::new(alts.clone(), vec![vec![vec![Alt(0), Alt(1)], vec![Alt(2)]]]).unwrap();
        let a = StrictProfile::new(alts.clone(), &[vec![Alt(1), Alt(0), Alt(2)]]).unwrap();
        let b = StrictProfile::new(alts.clone(), &[vec![Alt(2), Alt(0), Alt(1)]]).unwrap();
        assert!(w.is_compatible(&a));
        assert!(!w.is_compatible(&b));
        assert!(WeakProfile::new(alts.clone(), vec![vec![vec![Alt(0)], vec![Alt(2)]]]).is_err());
        assert!(
            WeakProfile::new(alts, vec![vec![vec![Alt(0), Alt(1)], vec![Alt(1), Alt(2)]]]).is_err()
        );
    }
}
