use proptest::prelude::*;

use ssvote_core::profiles::PairwiseTally;
use ssvote_core::rules::{borda_tb, dictatorship, plurality_tb};
use ssvote_core::selfselect::{induce_weak_profile, linearizations, RuleSlotSet};
use ssvote_core::{parse_profile, Alt, AlternativeSet, DomainKind, Permutation, StrictProfile};

fn permutation(size: usize) -> impl Strategy<Value = Permutation> {
    Just((0..size).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn profile_with(
    voters: std::ops::RangeInclusive<usize>,
    sizes: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = StrictProfile> {
    (voters, sizes).prop_flat_map(|(n, tau)| {
        prop::collection::vec(
            Just((0..tau as u8).map(Alt).collect::<Vec<_>>()).prop_shuffle(),
            n,
        )
        .prop_map(move |rankings| {
            StrictProfile::new(AlternativeSet::canonical(tau), &rankings).unwrap()
        })
    })
}

fn profile() -> impl Strategy<Value = StrictProfile> {
    profile_with(2..=6, 1..=5)
}

fn with_relabelings(count: usize) -> impl Strategy<Value = (StrictProfile, Vec<Permutation>)> {
    profile().prop_flat_map(move |p| {
        let tau = p.size();
        (Just(p), prop::collection::vec(permutation(tau), count))
    })
}

fn with_voter_perms(
    count: usize,
) -> impl Strategy<Value = (StrictProfile, Vec<Permutation>, Permutation)> {
    profile().prop_flat_map(move |p| {
        let (n, tau) = (p.voters(), p.size());
        (
            Just(p),
            prop::collection::vec(permutation(n), count),
            permutation(tau),
        )
    })
}

fn majority_winner(p: &StrictProfile) -> Option<Alt> {
    let n = p.voters();
    let alts: Vec<Alt> = p.alternatives().alts().collect();
    alts.iter().copied().find(|&x| {
        alts.iter()
            .all(|&y| x == y || 2 * (0..n).filter(|&v| p.prefers(v, x, y)).count() > n)
    })
}

proptest! {
    #[test]
    fn relabeling_is_a_group_action((p, mus) in with_relabelings(2)) {
        let (mu, nu) = (&mus[0], &mus[1]);
        let stepwise = p.relabel(mu).unwrap().relabel(nu).unwrap();
        prop_assert_eq!(stepwise, p.relabel(&nu.compose(mu)).unwrap());
        prop_assert_eq!(p.relabel(&mu.inverse()).unwrap().relabel(mu).unwrap(), p);
    }

    #[test]
    fn voter_permutation_is_an_action((p, pis, mu) in with_voter_perms(2)) {
        let (pi, rho) = (&pis[0], &pis[1]);
        let moved = p.permute_voters(pi).unwrap();
        for i in 0..p.voters() {
            prop_assert_eq!(moved.rankings()[i].clone(), p.rankings()[pi.apply(i)].clone());
        }
        let twice = moved.permute_voters(rho).unwrap();
        prop_assert_eq!(twice, p.permute_voters(&pi.compose(rho)).unwrap());
        // Relabeling and voter permutation commute.
        prop_assert_eq!(
            p.relabel(&mu).unwrap().permute_voters(pi).unwrap(),
            p.permute_voters(pi).unwrap().relabel(&mu).unwrap()
        );
    }

    #[test]
    fn tallies_are_complementary(p in profile()) {
        let t: PairwiseTally = p.pairwise_tally();
        for x in p.alternatives().alts() {
            for y in p.alternatives().alts().filter(|&y| y != x) {
                prop_assert_eq!(t.get(x, y) + t.get(y, x), p.voters());
                prop_assert_eq!(t.strict_majority(x, y), 2 * t.get(x, y) > p.voters());
            }
        }
        prop_assert_eq!(p.condorcet_winner(), majority_winner(&p));
    }

    #[test]
    fn canonical_representative_is_an_orbit_invariant((p, mus) in with_relabelings(1)) {
        let (rep, mu) = p.canonical_representative();
        prop_assert!(rep.is_canonical());
        prop_assert_eq!(&p.relabel(&mu).unwrap(), &rep);
        let moved = p.relabel(&mus[0]).unwrap();
        prop_assert_eq!(moved.canonical_representative().0, rep.clone());
        prop_assert_eq!(moved.canonical_representative().0.index_key(), rep.index_key());
    }

    #[test]
    fn restriction_composes(p in profile(), outer in any::<u8>(), inner in any::<u8>()) {
        let tau = p.size();
        let keep: Vec<Alt> = (0..tau).filter(|i| outer >> i & 1 == 1).map(Alt::from_index).collect();
        prop_assume!(!keep.is_empty());
        let sub: Vec<usize> = (0..keep.len()).filter(|i| inner >> i & 1 == 1).collect();
        prop_assume!(!sub.is_empty());
        let once = p.restrict(&sub.iter().map(|&i| keep[i]).collect::<Vec<_>>()).unwrap();
        let twice = p.restrict(&keep).unwrap()
            .restrict(&sub.iter().map(|&i| Alt::from_index(i)).collect::<Vec<_>>())
            .unwrap();
        prop_assert_eq!(once.rankings(), twice.rankings());
        prop_assert_eq!(once.alternatives(), twice.alternatives());
    }

    #[test]
    fn transport_round_trips((p, mus) in with_relabelings(1)) {
        let beta = &mus[0];
        let moved = p.transport(beta).unwrap();
        prop_assert_eq!(moved.alternatives(), &AlternativeSet::canonical(p.size()));
        let back = moved.transport(&beta.inverse()).unwrap().with_labels(p.alternatives().clone()).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn text_format_round_trips(p in profile()) {
        prop_assert_eq!(parse_profile(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn catalog_rules_are_neutral((p, mus) in with_relabelings(1)) {
        let mu = &mus[0];
        let moved = p.relabel(mu).unwrap();
        for rule in [dictatorship(1).unwrap(), plurality_tb(2).unwrap(), borda_tb(2).unwrap()] {
            let chosen = rule.evaluate(&p).unwrap();
            prop_assert_eq!(rule.evaluate(&moved).unwrap().index(), mu.apply(chosen.index()));
        }
    }

    #[test]
    fn linearizations_are_exactly_the_compatible_profiles(
        p in profile_with(2..=4, 1..=4),
        raw in prop::collection::vec(any::<u8>(), 2..=3),
    ) {
        let outcomes: Vec<Alt> = raw.iter().map(|&r| Alt(r % p.size() as u8)).collect();
        let slots = RuleSlotSet::new(outcomes.clone()).unwrap();
        let weak = induce_weak_profile(&p, &slots).unwrap();
        let lin: Vec<StrictProfile> = linearizations(&weak, DomainKind::Unrestricted).collect();
        let expected: usize = (0..p.voters())
            .map(|v| weak.weak_profile().classes(v).iter().map(|c| (1..=c.len()).product::<usize>()).product::<usize>())
            .product();
        prop_assert_eq!(lin.len(), expected);
        for q in &lin {
            prop_assert!(weak.weak_profile().is_compatible(q));
            for v in 0..p.voters() {
                for s in 0..slots.len() {
                    for t in 0..slots.len() {
                        let (a, b) = (outcomes[s], outcomes[t]);
                        if a != b && p.prefers(v, a, b) {
                            prop_assert!(q.prefers(v, Alt::from_index(s), Alt::from_index(t)));
                        }
                    }
                }
            }
        }
        let condorcet = linearizations(&weak, DomainKind::Condorcet).count();
        prop_assert_eq!(condorcet, lin.iter().filter(|q| q.condorcet_winner().is_some()).count());
    }
}
