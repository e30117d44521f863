use rayon::prelude::*;

use super::permutation::all_sequences;
use super::{factorial, AlternativeSet, DomainKind, StrictProfile, Universe};
use crate::error::{Error, Result};

/// All admissible profiles of one size in a universe.
///
/// Profiles are addressed by a mixed-radix index: voter 1 is the most
/// significant digit and each digit picks a ranking in lexicographic order.
/// Condorcet admissibility is a filter over the unrestricted index space.
#[derive(Clone, Debug)]
pub struct ProfileSpace {
    voters: usize,
    alts: AlternativeSet,
    domain: DomainKind,
    rankings: Vec<Vec<u8>>,
    raw_len: u64,
}

/// The admissible profiles of size `tau` in `universe`.
pub fn enumerate_profiles(universe: &Universe, tau: usize) -> Result<ProfileSpace> {
    universe.check_size(tau)?;
    ProfileSpace::new(universe.n, tau, universe.domain)
}

impl ProfileSpace {
    pub fn new(voters: usize, tau: usize, domain: DomainKind) -> Result<Self> {
        if voters == 0 {
            return Err(Error::NoVoters);
        }
        let per_voter = factorial(tau) as u64;
        let raw_len = (0..voters)
            .try_fold(1u64, |acc, _| acc.checked_mul(per_voter))
            .ok_or_else(|| {
                Error::Universe(format!("({tau}!)^{voters} profiles do not fit in 64 bits"))
            })?;
        let rankings = all_sequences(tau)
            .into_iter()
            .map(|r| r.into_iter().map(|a| a as u8).collect())
            .collect();
        Ok(ProfileSpace {
            voters,
            alts: AlternativeSet::canonical(tau),
            domain,
            rankings,
            raw_len,
        })
    }

    pub fn voters(&self) -> usize {
        self.voters
    }

    pub fn size(&self) -> usize {
        self.alts.len()
    }

    pub fn domain(&self) -> DomainKind {
        self.domain
    }

    /// Number of indices, admissible or not: `(τ!)^n`.
    pub fn raw_len(&self) -> u64 {
        self.raw_len
    }

    /// Number of indices whose voter 1 ranks `a1 > a2 > …`; these are exactly
    /// the canonical orbit representatives and form a prefix of the index space.
    pub fn canonical_len(&self) -> u64 {
        self.raw_len / self.rankings.len() as u64
    }

    /// The profile at `index` regardless of admissibility.
    pub fn decode(&self, mut index: u64) -> StrictProfile {
        let tau = self.size();
        let base = self.rankings.len() as u64;
        let mut order = vec![0u8; tau * self.voters];
        for v in (0..self.voters).rev() {
            let digit = (index % base) as usize;
            index /= base;
            order[v * tau..(v + 1) * tau].copy_from_slice(&self.rankings[digit]);
        }
        StrictProfile::from_raw(self.alts.clone(), order)
    }

    /// The admissible profile at `index`, if it is admissible.
    pub fn get(&self, index: u64) -> Option<StrictProfile> {
        let p = self.decode(index);
        self.domain.admits(&p).then_some(p)
    }

    pub fn iter(&self) -> impl Iterator<Item = StrictProfile> + '_ {
        (0..self.raw_len).filter_map(move |i| self.get(i))
    }

    /// Admissible canonical orbit representatives, in enumeration order.
    pub fn representatives(&self) -> impl Iterator<Item = StrictProfile> + '_ {
        (0..self.canonical_len()).filter_map(move |i| self.get(i))
    }

    pub fn count(&self) -> u64 {
        match self.domain {
            DomainKind::Unrestricted => self.raw_len,
            DomainKind::Condorcet => self.iter().count() as u64,
        }
    }

    /// Applies `f` to admissible profiles across worker threads and returns the
    /// result for the earliest profile (in enumeration order) where `f` yields
    /// `Some`, independent of scheduling.
    pub fn find_first<T, F>(&self, f: F) -> Option<T>
    where
        T: Send,
        F: Fn(StrictProfile) -> Option<T> + Sync + Send,
    {
        let len = usize::try_from(self.raw_len).expect("profile space fits in memory indices");
        (0..len)
            .into_par_iter()
            .with_min_len(64)
            .find_map_first(|i| self.get(i as u64).and_then(&f))
    }
}
