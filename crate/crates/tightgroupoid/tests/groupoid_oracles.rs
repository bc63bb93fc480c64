//! Partial bijections modelled directly, used to check the ordered groupoid
//! tables and the coset predicates.

use proptest::prelude::*;
use tightgroupoid::bits::{self, Set};
use tightgroupoid::coset::{coset_groupoid, is_atlas, is_coset, is_unit_directed, up_closure};
use tightgroupoid::generators;
use tightgroupoid::groupoid::OrderedGroupoid;
use tightgroupoid::tight::act;

/// Image word: entry `x` is the image of `x`.
type Pb = Vec<Option<usize>>;

fn parse(name: &str) -> Pb {
    name.chars().map(|c| c.to_digit(10).map(|d| d as usize - 1)).collect()
}

fn compose(p: &Pb, q: &Pb) -> Pb {
    q.iter().map(|x| x.and_then(|y| p[y])).collect()
}

fn inverse(p: &Pb) -> Pb {
    let mut out = vec![None; p.len()];
    for (x, y) in p.iter().enumerate() {
        if let Some(y) = y {
            out[*y] = Some(x);
        }
    }
    out
}

fn dom(p: &Pb) -> Vec<bool> {
    p.iter().map(Option::is_some).collect()
}

fn ran(p: &Pb) -> Vec<bool> {
    dom(&inverse(p))
}

fn below(p: &Pb, q: &Pb) -> bool {
    p.iter().zip(q).all(|(a, b)| a.is_none() || a == b)
}

/// Keeps the arrows of `p` starting in `keep`.
fn restrict_dom(p: &Pb, keep: &[bool]) -> Pb {
    p.iter().zip(keep).map(|(x, k)| if *k { *x } else { None }).collect()
}

fn restrict_ran(p: &Pb, keep: &[bool]) -> Pb {
    p.iter().map(|x| x.filter(|y| keep[*y])).collect()
}

struct Model {
    og: OrderedGroupoid,
    pbs: Vec<Pb>,
}

impl Model {
    fn new(n: usize) -> Self {
        let og = generators::isym(n).unwrap();
        let pbs = og.g.names().iter().map(|s| parse(s)).collect();
        Model { og, pbs }
    }

    fn index(&self, p: &Pb) -> Option<usize> {
        self.pbs.iter().position(|q| q == p)
    }

    fn set(&self, a: Set) -> Vec<&Pb> {
        bits::iter(a).map(|i| &self.pbs[i]).collect()
    }

    fn directed(&self, units: &[Pb]) -> bool {
        units.iter().all(|a| units.iter().all(|b| units.iter().any(|c| below(c, a) && below(c, b))))
    }

    fn unit_directed(&self, a: Set) -> bool {
        let mem = self.set(a);
        let idn = |d: Vec<bool>| -> Pb { d.iter().enumerate().map(|(i, k)| k.then_some(i)).collect() };
        let srcs: Vec<Pb> = mem.iter().map(|p| idn(dom(p))).collect();
        let rngs: Vec<Pb> = mem.iter().map(|p| idn(ran(p))).collect();
        if !self.directed(&srcs) || !self.directed(&rngs) {
            return false;
        }
        let inside = |p: Pb| self.index(&p).is_some_and(|i| bits::has(a, i));
        for x in &mem {
            for y in &mem {
                let (dx, dy) = (dom(x), dom(y));
                if dy.iter().zip(&dx).all(|(b, a)| !b || *a) && !inside(restrict_dom(x, &dy)) {
                    return false;
                }
                let (rx, ry) = (ran(x), ran(y));
                if ry.iter().zip(&rx).all(|(b, a)| !b || *a) && !inside(restrict_ran(x, &ry)) {
                    return false;
                }
            }
        }
        true
    }

    fn atlas(&self, a: Set) -> bool {
        let mem = self.set(a);
        self.unit_directed(a)
            && mem.iter().all(|x| {
                mem.iter().all(|y| {
                    mem.iter().all(|z| {
                        // x y⁻¹ z is defined in the groupoid iff the domains of x
                        // and y agree and the ranges of y and z agree.
                        if dom(x) != dom(y) || ran(y) != ran(z) {
                            return true;
                        }
                        let p = compose(&compose(x, &inverse(y)), z);
                        self.index(&p).is_some_and(|i| bits::has(a, i))
                    })
                })
            })
    }

    fn coset(&self, a: Set) -> bool {
        let up = (0..self.pbs.len())
            .filter(|&j| bits::iter(a).any(|i| below(&self.pbs[i], &self.pbs[j])))
            .all(|j| bits::has(a, j));
        self.atlas(a) && up
    }
}

#[test]
fn tables_match_partial_bijections() {
    for n in 1..=3 {
        let m = Model::new(n);
        let g = &m.og.g;
        for (i, p) in m.pbs.iter().enumerate() {
            assert!(p.iter().any(Option::is_some), "the zero is dropped");
            assert_eq!(m.index(&inverse(p)), Some(g.inv(i)));
            for (j, q) in m.pbs.iter().enumerate() {
                let expect = (dom(p) == ran(q)).then(|| m.index(&compose(p, q)).unwrap());
                assert_eq!(g.mul(i, j), expect);
                assert_eq!(m.og.rel.precedes(i, j), below(p, q));
            }
        }
    }
    assert_eq!(Model::new(2).pbs.len(), 6);
    assert_eq!(Model::new(3).pbs.len(), 33);
}

#[test]
fn coset_predicates_exhaustive_on_two_points() {
    let m = Model::new(2);
    for a in bits::subsets(m.og.g.full()).filter(|&a| a != 0) {
        assert_eq!(is_unit_directed(&m.og, a), m.unit_directed(a), "{a:b}");
        assert_eq!(is_atlas(&m.og, a), m.atlas(a), "{a:b}");
        assert_eq!(is_coset(&m.og, a), m.coset(a), "{a:b}");
    }
}

#[test]
fn identity_and_swap_form_a_coset_that_is_not_a_filter() {
    let m = Model::new(2);
    let a = m.og.rel.subset(&["12", "21"]).unwrap();
    assert!(is_coset(&m.og, a));
    assert!(!tightgroupoid::spectrum::is_filter(&m.og.rel, a));
    assert_eq!(up_closure(&m.og, a).unwrap(), a);
}

#[test]
fn coset_product_of_two_atoms() {
    let m = Model::new(2);
    let cg = coset_groupoid(&m.og).unwrap();
    let find = |names: &[&str]| {
        let s = m.og.rel.subset(names).unwrap();
        cg.cosets.iter().position(|&c| c == s).unwrap()
    };
    let a = find(&["2-", "21"]);
    let b = find(&["-1", "21"]);
    assert_eq!(cg.groupoid.mul(a, b), Some(find(&["-2", "12"])));
    assert!(cg.filters_ideal && cg.unit_characterisation);
}

#[test]
fn swap_moves_the_first_point_filter() {
    let m = Model::new(2);
    let swap = m.og.g.index_of("21").unwrap();
    let t = m.og.rel.subset(&["2-", "21"]).unwrap();
    let moved = act(&m.og, swap, t).unwrap();
    assert_eq!(moved, m.og.rel.subset(&["1-", "12"]).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn coset_predicates_sampled_on_three_points(a in 1u64..(1u64 << 33)) {
        let m = Model::new(3);
        prop_assert_eq!(is_unit_directed(&m.og, a), m.unit_directed(a));
        prop_assert_eq!(is_atlas(&m.og, a), m.atlas(a));
        prop_assert_eq!(is_coset(&m.og, a), m.coset(a));
    }

    #[test]
    fn closures_of_seeds_are_cosets(seed in 1u64..(1u64 << 33), k in 1u32..4) {
        let m = Model::new(3);
        // Thin the seed to at most k members so the closure is often proper.
        let small = bits::iter(seed).take(k as usize).fold(0, |acc, i| acc | bits::bit(i));
        let c = tightgroupoid::coset::closure(&m.og, small);
        prop_assert!(bits::within(small, c));
        if m.unit_directed(c) {
            prop_assert_eq!(is_coset(&m.og, c), m.coset(c));
        }
    }
}
