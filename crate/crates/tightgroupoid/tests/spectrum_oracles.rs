//! Filter taxonomy and spectra against brute-force definitions.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tightgroupoid::bits::{self, Set};
use tightgroupoid::generators::{self, random_relation};
use tightgroupoid::spectrum::{
    enumerate_points, is_locally_tight, is_tight, locally_tight_spectrum, tight_spectrum, trapping,
    PointKind,
};
use tightgroupoid::TransRel;

fn above_oracle(rel: &TransRel, t: Set) -> Set {
    (0..rel.len())
        .filter(|&x| bits::iter(t).any(|y| rel.precedes(y, x)))
        .fold(0, |a, x| a | bits::bit(x))
}

fn filter_oracle(rel: &TransRel, t: Set) -> bool {
    t != 0
        && above_oracle(rel, t) == t
        && bits::iter(t).all(|a| {
            bits::iter(t).all(|b| bits::iter(t).any(|c| rel.precedes(c, a) && rel.precedes(c, b)))
        })
}

fn compact_oracle(rel: &TransRel, q: Set, r: Set) -> bool {
    let n = rel.len();
    let down = |s: Set| {
        (0..n)
            .filter(|&x| bits::iter(s).any(|y| rel.precedes(x, y)))
            .fold(0, |a, x| a | bits::bit(x))
    };
    bits::subsets(down(r)).any(|f| {
        bits::iter(down(q)).all(|x| (0..n).any(|z| rel.precedes(z, x) && bits::has(down(f), z)))
    })
}

fn meet_oracle(rel: &TransRel, f: Set) -> Set {
    (0..rel.len())
        .filter(|&x| bits::iter(f).all(|y| rel.precedes(x, y)))
        .fold(0, |a, x| a | bits::bit(x))
}

/// Every finite `F ⊆ T` is tried, not just `T` itself.
fn tight_oracle(rel: &TransRel, t: Set) -> bool {
    above_oracle(rel, t) == t
        && bits::subsets(t).all(|f| !compact_oracle(rel, meet_oracle(rel, f), rel.full() & !t))
}

fn locally_tight_oracle(rel: &TransRel, t: Set) -> bool {
    bits::iter(t).all(|x| {
        let (sub, map) = rel.restrict(rel.below(x));
        let local = (0..sub.len())
            .filter(|&i| bits::has(t, map[i]))
            .fold(0, |a, i| a | bits::bit(i));
        tight_oracle(&sub, local)
    })
}

fn sample(n: usize, seed: u64) -> TransRel {
    random_relation(n, &mut ChaCha8Rng::seed_from_u64(seed))
}

fn sorted(mut v: Vec<Set>) -> Vec<Set> {
    v.sort();
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn tightness_matches_definitions(n in 1usize..=5, seed: u64, t: u64) {
        let rel = sample(n, seed);
        let t = t & rel.full();
        prop_assert_eq!(is_tight(&rel, t), tight_oracle(&rel, t));
        prop_assert_eq!(is_locally_tight(&rel, t), locally_tight_oracle(&rel, t));
    }

    #[test]
    fn enumerated_points_match_brute_force(n in 1usize..=5, seed: u64) {
        let rel = sample(n, seed);
        let all: Vec<Set> = bits::subsets(rel.full()).collect();
        let filters: Vec<Set> = all.iter().copied().filter(|&t| filter_oracle(&rel, t)).collect();
        let lt: Vec<Set> = filters.iter().copied().filter(|&t| locally_tight_oracle(&rel, t)).collect();
        let ultra: Vec<Set> = filters
            .iter()
            .copied()
            .filter(|&t| filters.iter().all(|&f| f == t || !bits::within(t, f)))
            .collect();
        let tight: Vec<Set> = all.iter().copied().filter(|&t| tight_oracle(&rel, t)).collect();
        prop_assert_eq!(sorted(enumerate_points(&rel, PointKind::Filters).unwrap()), sorted(filters));
        prop_assert_eq!(sorted(enumerate_points(&rel, PointKind::LocallyTightFilters).unwrap()), sorted(lt.clone()));
        prop_assert_eq!(sorted(enumerate_points(&rel, PointKind::Ultrafilters).unwrap()), sorted(ultra.clone()));
        prop_assert_eq!(sorted(enumerate_points(&rel, PointKind::TightSubsets).unwrap()), sorted(tight));
        // Ultrafilters are dense among locally tight filters: each of them is locally tight.
        prop_assert!(ultra.iter().all(|u| lt.contains(u)));
    }

    #[test]
    fn locally_tight_spectrum_is_locally_compact_and_locally_hausdorff(n in 1usize..=5, seed: u64) {
        let spec = locally_tight_spectrum(&sample(n, seed)).unwrap();
        prop_assert!(spec.space.locally_compact());
        prop_assert!(spec.space.locally_hausdorff());
    }
}

#[test]
fn powerset_three_has_three_points() {
    let rel = generators::powerset(3).unwrap();
    let brute = bits::subsets(rel.full())
        .filter(|&t| filter_oracle(&rel, t) && locally_tight_oracle(&rel, t))
        .count();
    assert_eq!(brute, 3);
    assert_eq!(locally_tight_spectrum(&rel).unwrap().points.len(), 3);
}

#[test]
fn diamond_has_two_points() {
    let rel = generators::diamond();
    let brute = bits::subsets(rel.full())
        .filter(|&t| filter_oracle(&rel, t) && locally_tight_oracle(&rel, t))
        .count();
    assert_eq!(brute, 2);
    assert_eq!(locally_tight_spectrum(&rel).unwrap().points.len(), 2);
}

#[test]
fn binary_trees_have_one_point_per_leaf() {
    for d in 1..=3 {
        let rel = generators::tree(2, d).unwrap();
        let spec = locally_tight_spectrum(&rel).unwrap();
        assert_eq!(spec.points.len(), 1 << d);
        let ultra = enumerate_points(&rel, PointKind::Ultrafilters).unwrap();
        assert_eq!(sorted(ultra), sorted(spec.points.clone()));
        assert!(trapping(&rel));
    }
}

#[test]
fn partial_bijection_units_have_two_points() {
    let og = generators::isym(2).unwrap();
    let (units, _) = og.rel.restrict(og.g.units());
    assert_eq!(units.len(), 3);
    let spec = locally_tight_spectrum(&units).unwrap();
    assert_eq!(spec.points.len(), 2);
    let brute = bits::subsets(units.full())
        .filter(|&t| filter_oracle(&units, t) && locally_tight_oracle(&units, t))
        .count();
    assert_eq!(brute, 2);
}

#[test]
fn bi_pseudobases_have_matching_spectra() {
    for rel in [generators::powerset(3).unwrap(), generators::diamond(), generators::chain(4).unwrap()] {
        let lt = locally_tight_spectrum(&rel).unwrap();
        let t = tight_spectrum(&rel).unwrap();
        assert_eq!(lt.points, t.points);
        assert!(lt.space.is_hausdorff());
    }
}
