//! The reduced equivalence conditions against literal quantifier evaluation.

use tightgroupoid::bits::{self, Set};
use tightgroupoid::harness::{all_relations, sample_relations};
use tightgroupoid::spectrum::{
    c_meet_preserving, c_trapping, finite_c_meet_preserving, finite_meet_preserving, trapping,
};
use tightgroupoid::TransRel;

fn down(rel: &TransRel, s: Set) -> Set {
    (0..rel.len())
        .filter(|&x| bits::iter(s).any(|y| rel.precedes(x, y)))
        .fold(0, |a, x| a | bits::bit(x))
}

fn up(rel: &TransRel, s: Set) -> Set {
    (0..rel.len())
        .filter(|&x| bits::iter(s).any(|y| rel.precedes(y, x)))
        .fold(0, |a, x| a | bits::bit(x))
}

fn meet(rel: &TransRel, f: Set) -> Set {
    (0..rel.len())
        .filter(|&x| bits::iter(f).all(|y| rel.precedes(x, y)))
        .fold(0, |a, x| a | bits::bit(x))
}

fn perp(rel: &TransRel, g: Set) -> Set {
    (0..rel.len())
        .filter(|&x| down(rel, bits::bit(x)) & down(rel, g) == 0)
        .fold(0, |a, x| a | bits::bit(x))
}

fn dense(rel: &TransRel, q: Set, r: Set) -> bool {
    let target = down(rel, r);
    bits::iter(down(rel, q)).all(|x| rel.below(x) & target != 0)
}

fn compact(rel: &TransRel, q: Set, r: Set) -> bool {
    bits::subsets(down(rel, r)).any(|f| dense(rel, q, f))
}

fn subsets(rel: &TransRel) -> Vec<Set> {
    bits::subsets(rel.full()).collect()
}

fn finite_meet_literal(rel: &TransRel) -> bool {
    let all = subsets(rel);
    all.iter().all(|&f| {
        all.iter().all(|&g| g == 0 || !bits::within(g, up(rel, f)) || compact(rel, meet(rel, f), meet(rel, g)))
    })
}

fn c_meet_literal(rel: &TransRel) -> bool {
    let all = subsets(rel);
    all.iter().all(|&q| {
        all.iter().all(|&r| {
            !compact(rel, q, r)
                || all.iter().all(|&s| !compact(rel, q, s) || compact(rel, q, down(rel, r) & down(rel, s)))
        })
    })
}

/// Families of at most two subsets.
fn small_families(rel: &TransRel) -> Vec<Vec<Set>> {
    let all = subsets(rel);
    let mut out: Vec<Vec<Set>> = all.iter().map(|&a| vec![a]).collect();
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            out.push(vec![all[i], all[j]]);
        }
    }
    out
}

fn finite_c_meet_small(rel: &TransRel) -> bool {
    let fams = small_families(rel);
    let cap = |fam: &[Set]| fam.iter().fold(rel.full(), |acc, &q| acc & down(rel, q));
    fams.iter().all(|phi| {
        fams.iter().all(|psi| {
            let hyp = psi.iter().all(|&r| phi.iter().any(|&q| compact(rel, q, r)));
            !hyp || compact(rel, cap(phi), cap(psi))
        })
    })
}

fn trapping_literal(rel: &TransRel) -> bool {
    let n = rel.len();
    let pr = |a: usize, b: usize| rel.precedes(a, b);
    (0..n).all(|p| {
        (0..n).all(|q| {
            (0..n).all(|r| {
                !(pr(q, p) && pr(r, p))
                    || (0..n).all(|qq| {
                        (0..n).all(|rr| {
                            !(pr(qq, q) && pr(rr, r))
                                || compact(
                                    rel,
                                    down(rel, bits::bit(qq)) & perp(rel, bits::bit(r)),
                                    down(rel, bits::bit(q)) & perp(rel, bits::bit(rr)),
                                )
                        })
                    })
            })
        })
    })
}

fn c_trapping_literal(rel: &TransRel) -> bool {
    let all = subsets(rel);
    (0..rel.len()).all(|p| {
        let under: Vec<Set> = all.iter().copied().filter(|&q| bits::within(q, rel.below(p))).collect();
        under.iter().all(|&q| {
            under.iter().all(|&r| {
                all.iter().filter(|&&qq| compact(rel, qq, q)).all(|&qq| {
                    all.iter().filter(|&&rr| compact(rel, rr, r)).all(|&rr| {
                        compact(rel, down(rel, qq) & perp(rel, r), down(rel, q) & perp(rel, rr))
                    })
                })
            })
        })
    })
}

fn corpus() -> Vec<TransRel> {
    let mut rels: Vec<TransRel> = (1..=3).flat_map(all_relations).collect();
    rels.extend(sample_relations(4, 40, 11));
    rels
}

#[test]
fn meet_conditions_match_literal_forms() {
    for rel in corpus() {
        assert_eq!(finite_meet_preserving(&rel).unwrap(), finite_meet_literal(&rel), "{rel:?}");
        assert_eq!(c_meet_preserving(&rel).unwrap(), c_meet_literal(&rel), "{rel:?}");
    }
}

#[test]
fn finite_family_condition_is_sound_on_small_families() {
    for rel in (1..=3).flat_map(all_relations) {
        if finite_c_meet_preserving(&rel).unwrap() {
            assert!(finite_c_meet_small(&rel), "{rel:?}");
        }
    }
}

#[test]
fn trapping_conditions_match_literal_forms() {
    for rel in corpus() {
        assert_eq!(trapping(&rel), trapping_literal(&rel), "{rel:?}");
    }
    for rel in (1..=3).flat_map(all_relations) {
        assert_eq!(c_trapping(&rel).unwrap(), c_trapping_literal(&rel), "{rel:?}");
    }
}
