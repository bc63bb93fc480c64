//! Cover relations and axiom checks against direct quantifier evaluation.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tightgroupoid::bits::{self, Set};
use tightgroupoid::generators::random_relation;
use tightgroupoid::{classify, TransRel};

fn prec(rel: &TransRel, a: usize, b: usize) -> bool {
    rel.precedes(a, b)
}

/// `{x : x ≺ some member of s}`, written out element by element.
fn down_oracle(rel: &TransRel, s: Set) -> Set {
    (0..rel.len())
        .filter(|&x| bits::iter(s).any(|y| prec(rel, x, y)))
        .fold(0, |a, x| a | bits::bit(x))
}

fn dense_oracle(rel: &TransRel, q: Set, r: Set) -> bool {
    let n = rel.len();
    (0..n).all(|x| {
        !bits::iter(q).any(|y| prec(rel, x, y))
            || (0..n).any(|z| prec(rel, z, x) && bits::iter(r).any(|w| prec(rel, z, w)))
    })
}

fn compact_oracle(rel: &TransRel, q: Set, r: Set) -> bool {
    bits::subsets(rel.full())
        .filter(|&f| bits::within(f, down_oracle(rel, r)))
        .any(|f| dense_oracle(rel, q, f))
}

fn pseudobasis_oracle(rel: &TransRel) -> bool {
    let n = rel.len();
    (0..n).all(|p| {
        (0..n).all(|pp| !prec(rel, pp, p) || compact_oracle(rel, rel.below(pp), rel.below(p)))
    })
}

fn bi_oracle(rel: &TransRel, bounded: impl Fn(usize, usize) -> bool) -> bool {
    let n = rel.len();
    for r in 0..n {
        for s in 0..n {
            if !bounded(r, s) {
                continue;
            }
            for rr in bits::iter(rel.below(r)) {
                for ss in bits::iter(rel.below(s)) {
                    let lhs = rel.below(rr) & rel.below(ss);
                    let rhs = rel.below(r) & rel.below(s);
                    if !compact_oracle(rel, lhs, rhs) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn lower_oracle(rel: &TransRel, a: usize, b: usize) -> bool {
    (0..rel.len()).all(|x| !prec(rel, x, a) || prec(rel, x, b))
}

fn sample(n: usize, seed: u64) -> TransRel {
    random_relation(n, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Arbitrary transitive relations, round or not.
fn arbitrary(n: usize, bits_: u64) -> TransRel {
    let names: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    let below = (0..n).map(|q| (bits_ >> (q * n)) & bits::full(n)).collect();
    TransRel::from_below(names, below, true).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn covers_match_definitions(n in 1usize..=5, seed: u64, q: u64, r: u64) {
        let rel = sample(n, seed);
        let (q, r) = (q & rel.full(), r & rel.full());
        prop_assert_eq!(rel.refines(q, r), bits::within(q, down_oracle(&rel, r)));
        prop_assert_eq!(rel.dense_cover(q, r), dense_oracle(&rel, q, r));
        prop_assert_eq!(rel.compact_cover(q, r), compact_oracle(&rel, q, r));
        prop_assert_eq!(rel.disjoint(q, r), down_oracle(&rel, q) & down_oracle(&rel, r) == 0);
    }

    #[test]
    fn classify_matches_quantifiers(n in 1usize..=4, code: u64) {
        let rel = arbitrary(n, code);
        let rep = classify(&rel);
        prop_assert_eq!(rep.round, (0..n).all(|p| rel.below(p) != 0));
        prop_assert_eq!(rep.pseudobasis, pseudobasis_oracle(&rel));
        prop_assert_eq!(rep.bi_pseudobasis, bi_oracle(&rel, |_, _| true));
        let local = bi_oracle(&rel, |r, s| {
            (0..n).any(|p| lower_oracle(&rel, r, p) && lower_oracle(&rel, s, p))
        });
        prop_assert_eq!(rep.local_bi_pseudobasis, local);
        prop_assert!(!rep.bi_pseudobasis || rep.local_bi_pseudobasis);
        prop_assert!(!rep.local_bi_pseudobasis || rep.pseudobasis);
        prop_assert!(rep.equivalent_form_agrees);
    }

    /// Roundness alone forces every axiom on a finite carrier.
    #[test]
    fn finite_round_relations_satisfy_every_axiom(n in 1usize..=6, seed: u64) {
        let rep = classify(&sample(n, seed));
        prop_assert!(rep.all());
    }

    #[test]
    fn lower_preorder_is_cone_inclusion(n in 1usize..=5, seed: u64) {
        let rel = sample(n, seed);
        let lo = rel.lower_preorder();
        for a in 0..n {
            prop_assert!(lo.precedes(a, a));
            for b in 0..n {
                prop_assert_eq!(lo.precedes(a, b), lower_oracle(&rel, a, b));
            }
        }
    }

    #[test]
    fn shortcut_agrees_with_subset_search(n in 1usize..=8, seed: u64, q: u64, r: u64) {
        let rel = sample(n, seed);
        let (q, r) = (q & rel.full(), r & rel.full());
        prop_assert_eq!(rel.compact_cover(q, r), rel.compact_cover_brute(q, r));
    }
}
