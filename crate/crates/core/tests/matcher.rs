mod common;

use common::*;
use proptest::prelude::*;
use vincular_core::characterize::{
    check_a_characterization, check_b_characterization, contains_a_pattern, contains_b_pattern,
};
use vincular_core::{
    contains, find_occurrences, first_occurrence, Occurrence, PatternSet, Permutation,
    VincularPattern,
};

fn hosts_up_to(n: usize) -> impl Iterator<Item = Permutation> {
    (0..=n).flat_map(|k| {
        all_perms(k)
            .into_iter()
            .map(|v| Permutation::new(v).unwrap())
    })
}

#[test]
fn engine_matches_naive_for_all_small_patterns() {
    let patterns: Vec<_> = all_patterns(4)
        .into_iter()
        .map(|(l, g)| (VincularPattern::new(l.clone(), g.clone()).unwrap(), l, g))
        .collect();
    assert_eq!(patterns.len(), 1 + 4 + 24 + 192);
    let mut checked = 0usize;
    for host in hosts_up_to(7) {
        for (pattern, letters, glued) in &patterns {
            let got = find_occurrences(&host, pattern);
            let want = naive_occurrences(host.values(), letters, glued);
            let got_pos: Vec<Vec<usize>> = got.iter().map(|o| o.positions().to_vec()).collect();
            assert_eq!(got_pos, want, "host {host} pattern {pattern}");
            assert_eq!(contains(&host, pattern), !want.is_empty());
            assert_eq!(
                first_occurrence(&host, pattern).map(|o| o.positions().to_vec()),
                want.first().cloned()
            );
            checked += 1;
        }
    }
    assert_eq!(checked, 5914 * 221);
}

#[test]
fn every_reported_occurrence_satisfies_the_definition() {
    let patterns: Vec<_> = all_patterns(4);
    for host in hosts_up_to(6) {
        for (letters, glued) in &patterns {
            let pattern = VincularPattern::new(letters.clone(), glued.clone()).unwrap();
            for occ in find_occurrences(&host, &pattern) {
                let pos = occ.positions();
                assert_eq!(pos.len(), letters.len());
                assert!(pos.windows(2).all(|w| w[0] < w[1]));
                for (i, &g) in glued.iter().enumerate() {
                    if g {
                        assert_eq!(pos[i + 1], pos[i] + 1);
                    }
                }
                assert!(order_isomorphic(&occ.values_in(&host).unwrap(), letters));
            }
        }
    }
}

#[test]
fn characterizations_match_pattern_membership() {
    let a = PatternSet::a();
    let b = PatternSet::b();
    for host in hosts_up_to(7) {
        let a_occ: Vec<Occurrence> = a.iter().flat_map(|p| find_occurrences(&host, p)).collect();
        let b_occ: Vec<Occurrence> = b.iter().flat_map(|p| find_occurrences(&host, p)).collect();
        for pos in subsets(host.len(), 4) {
            let occ = Occurrence::new(pos.iter().map(|p| p + 1).collect()).unwrap();
            assert_eq!(
                check_a_characterization(&host, &occ).unwrap(),
                a_occ.contains(&occ),
                "A at {occ} in {host}"
            );
            assert_eq!(
                check_b_characterization(&host, &occ).unwrap(),
                b_occ.contains(&occ),
                "B at {occ} in {host}"
            );
        }
        assert_eq!(contains_a_pattern(host.values()), !a_occ.is_empty());
        assert_eq!(contains_b_pattern(host.values()), !b_occ.is_empty());
    }
}

fn arb_perm() -> impl Strategy<Value = Vec<u32>> {
    (0usize..14).prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
}

fn arb_pattern() -> impl Strategy<Value = (Vec<u32>, Vec<bool>)> {
    (1usize..=9).prop_flat_map(|k| {
        (
            Just((1..=k as u32).collect::<Vec<_>>()).prop_shuffle(),
            proptest::collection::vec(any::<bool>(), k - 1),
        )
    })
}

proptest! {
    #[test]
    fn permutation_text_round_trips(values in arb_perm()) {
        let p = Permutation::new(values).unwrap();
        let canonical = p.to_string();
        prop_assert_eq!(Permutation::parse(&canonical).unwrap(), p.clone());
        prop_assert_eq!(Permutation::parse(&p.to_comma_string()).unwrap().to_string(), canonical);
    }

    #[test]
    fn pattern_text_round_trips((letters, glued) in arb_pattern()) {
        let p = VincularPattern::new(letters, glued).unwrap();
        let text = p.to_string();
        prop_assert_eq!(VincularPattern::parse(&text).unwrap(), p);
    }

    #[test]
    fn larger_hosts_agree_with_naive(values in arb_perm(), (letters, glued) in arb_pattern()) {
        prop_assume!(letters.len() <= 5);
        let host = Permutation::new(values).unwrap();
        let pattern = VincularPattern::new(letters.clone(), glued.clone()).unwrap();
        let got: Vec<Vec<usize>> = find_occurrences(&host, &pattern)
            .iter()
            .map(|o| o.positions().to_vec())
            .collect();
        prop_assert_eq!(got, naive_occurrences(host.values(), &letters, &glued));
    }
}
