//! Seeded generators of neutral table rules.

use std::collections::{HashMap, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{table_rule, OrbitTable, VotingRule};
use crate::error::{Error, Result};
use crate::profiles::{Alt, Permutation, ProfileSpace, StrictProfile, Universe};

/// Axioms a sampled rule must satisfy by construction.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct RuleConstraints {
    pub unanimous: bool,
    pub anonymous: bool,
}

impl RuleConstraints {
    pub const NONE: Self = RuleConstraints {
        unanimous: false,
        anonymous: false,
    };
    pub const UNANIMOUS: Self = RuleConstraints {
        unanimous: true,
        anonymous: false,
    };
    pub const UNANIMOUS_ANONYMOUS: Self = RuleConstraints {
        unanimous: true,
        anonymous: true,
    };

    fn suffix(self) -> String {
        let mut s = String::new();
        if self.unanimous {
            s.push_str(":u");
        }
        if self.anonymous {
            s.push_str(":a");
        }
        s
    }
}

/// A reproducible random neutral rule on `universe`: one uniformly drawn value
/// per orbit (per joint voter-and-relabeling orbit when anonymous), among the
/// values the constraints allow.
pub fn random_neutral_rule(
    seed: u64,
    universe: &Universe,
    constraints: RuleConstraints,
) -> Result<VotingRule> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let table = build_table(universe, constraints, &mut rng, |_, _| None)?;
    Ok(table_rule(
        table,
        format!("random:{seed}{}", constraints.suffix()),
    ))
}

/// Like [`random_neutral_rule`] up to two alternatives; on larger sets each
/// orbit takes the alternative that wins every pairwise restriction under the
/// two-alternative part, when one exists, and a random allowed value otherwise.
///
/// Such rules satisfy independence of irrelevant alternatives whenever every
/// profile has a pairwise winner, which makes them useful hypotheses for the
/// implication sweeps.
pub fn random_pairwise_rule(
    seed: u64,
    universe: &Universe,
    constraints: RuleConstraints,
) -> Result<VotingRule> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let table = build_table(universe, constraints, &mut rng, pairwise_winner)?;
    Ok(table_rule(
        table,
        format!("pairwise:{seed}{}", constraints.suffix()),
    ))
}

fn pairwise_winner(table: &OrbitTable, rep: &StrictProfile) -> Option<Alt> {
    if rep.size() < 3 {
        return None;
    }
    let alts: Vec<Alt> = rep.alternatives().alts().collect();
    alts.iter().copied().find(|&x| {
        alts.iter().all(|&y| {
            if x == y {
                return true;
            }
            let (lo, hi) = if x < y { (x, y) } else { (y, x) };
            let pair = rep.restrict(&[lo, hi]).expect("valid pair");
            match table.lookup(&pair) {
                Ok(w) => (if w.index() == 0 { lo } else { hi }) == x,
                Err(_) => false,
            }
        })
    })
}

/// A relabeling orbit together with how its value follows from the value at
/// the root of its joint orbit: `value(rep) = transform(value(root))`.
struct Member {
    rep: StrictProfile,
    transform: Permutation,
}

fn build_table<F>(
    universe: &Universe,
    constraints: RuleConstraints,
    rng: &mut ChaCha8Rng,
    preferred: F,
) -> Result<OrbitTable>
where
    F: Fn(&OrbitTable, &StrictProfile) -> Option<Alt>,
{
    let mut table = OrbitTable::new(universe.n, universe.domain);
    for tau in universe.sizes() {
        let space = ProfileSpace::new(universe.n, tau, universe.domain)?;
        let reps: Vec<StrictProfile> = space.representatives().collect();
        let index: HashMap<&[u8], usize> =
            reps.iter().enumerate().map(|(i, r)| (r.raw(), i)).collect();
        let mut done = vec![false; reps.len()];

        for root in 0..reps.len() {
            if done[root] {
                continue;
            }
            let (members, links) = if constraints.anonymous {
                joint_orbit(&reps, &index, root)
            } else {
                let identity = Permutation::identity(tau);
                let m = vec![(root, identity)];
                (m, Vec::new())
            };
            let members: Vec<Member> = members
                .into_iter()
                .map(|(i, transform)| {
                    done[i] = true;
                    Member {
                        rep: reps[i].clone(),
                        transform,
                    }
                })
                .collect();

            let allowed: Vec<usize> = (0..tau)
                .filter(|&v| links.iter().all(|(a, b)| a.apply(v) == b.apply(v)))
                .filter(|&v| {
                    !constraints.unanimous
                        || members.iter().all(|m| match m.rep.common_top() {
                            Some(top) => m.transform.apply(v) == top.index(),
                            None => true,
                        })
                })
                .collect();
            if allowed.is_empty() {
                return Err(Error::Unsatisfiable {
                    tau,
                    key: reps[root].index_key(),
                });
            }
            let value = match preferred(&table, &reps[root]) {
                Some(p) if allowed.contains(&p.index()) => p.index(),
                _ => allowed[rng.random_range(0..allowed.len())],
            };
            for m in &members {
                table.insert(&m.rep, Alt::from_index(m.transform.apply(value)))?;
            }
        }
    }
    Ok(table)
}

/// Breadth-first search over the orbits reachable from `root` by permuting
/// voters. Returns each member with its transform, plus pairs of transforms
/// that must agree on the root value (from cycles in the search).
#[allow(clippy::type_complexity)]
fn joint_orbit(
    reps: &[StrictProfile],
    index: &HashMap<&[u8], usize>,
    root: usize,
) -> (Vec<(usize, Permutation)>, Vec<(Permutation, Permutation)>) {
    let tau = reps[root].size();
    let voters = reps[root].voters();
    let swaps = Permutation::adjacent_transpositions(voters);
    let mut transforms: HashMap<usize, Permutation> = HashMap::new();
    transforms.insert(root, Permutation::identity(tau));
    let mut order = vec![root];
    let mut links = Vec::new();
    let mut queue = VecDeque::from([root]);

    while let Some(cur) = queue.pop_front() {
        let g = transforms[&cur].clone();
        for pi in &swaps {
            let swapped = reps[cur].permute_voters(pi).expect("voter count matches");
            let (next_rep, mu) = swapped.canonical_representative();
            // σ(next) = μ(σ(πR)) = μ(σ(R)) by anonymity and neutrality.
            let next_g = mu.compose(&g);
            let next = index[next_rep.raw()];
            match transforms.get(&next) {
                Some(existing) => {
                    if *existing != next_g {
                        links.push((existing.clone(), next_g));
                    }
                }
                None => {
                    transforms.insert(next, next_g);
                    order.push(next);
                    queue.push_back(next);
                }
            }
        }
    }
    let members = order
        .into_iter()
        .map(|i| {
            let g = transforms.remove(&i).expect("visited");
            (i, g)
        })
        .collect();
    (members, links)
}
