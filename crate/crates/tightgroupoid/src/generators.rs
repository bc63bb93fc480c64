//! Built-in example structures, random instances and generator specs.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::bits::{self, Set, CAP};
use crate::error::{Error, Result};
use crate::groupoid::{
    canonical_order, semigroup_to_ordered_groupoid, FiniteGroupoid, InverseSemigroup,
    OrderedGroupoid,
};
use crate::order::TransRel;

/// `a ≺ a ≺ p`.
pub fn arrow() -> TransRel {
    TransRel::build(&["a", "p"], &[("a", "a"), ("a", "p")], false).expect("arrow is transitive")
}

/// Reflexive order with `a, b` below both `p` and `q`.
pub fn diamond() -> TransRel {
    let pairs = [
        ("a", "a"),
        ("b", "b"),
        ("p", "p"),
        ("q", "q"),
        ("a", "p"),
        ("a", "q"),
        ("b", "p"),
        ("b", "q"),
    ];
    TransRel::build(&["a", "b", "p", "q"], &pairs, false).expect("diamond is transitive")
}

/// Nonempty subsets of `{1..n}` under inclusion, named by their digits.
pub fn powerset(n: usize) -> Result<TransRel> {
    if n == 0 || n > 6 {
        return Err(Error::BadGenerator(format!("powerset:{n}")));
    }
    let sets: Vec<u32> = (1..(1u32 << n)).collect();
    let name = |m: u32| (0..n).filter(|i| m >> i & 1 == 1).map(|i| (i + 1).to_string()).collect::<String>();
    let names = sets.iter().map(|&m| name(m)).collect();
    let below = sets
        .iter()
        .map(|&q| {
            sets.iter()
                .enumerate()
                .filter(|(_, &p)| p & q == p)
                .fold(0, |acc, (j, _)| acc | bits::bit(j))
        })
        .collect();
    TransRel::from_below(names, below, false)
}

/// Reflexive chain `c1 ≤ c2 ≤ … ≤ cn`.
pub fn chain(n: usize) -> Result<TransRel> {
    if n == 0 || n > CAP {
        return Err(Error::BadGenerator(format!("chain:{n}")));
    }
    let names = (1..=n).map(|i| format!("c{i}")).collect();
    let below = (0..n).map(|i| bits::full(i + 1)).collect();
    TransRel::from_below(names, below, false)
}

/// The `b`-ary tree of depth `d`: strict descendants lie below their
/// ancestors and leaves carry self-loops so that the relation is round.
pub fn tree(b: usize, d: usize) -> Result<TransRel> {
    let bad = || Error::BadGenerator(format!("tree:{b}:{d}"));
    if !(2..=10).contains(&b) || d == 0 {
        return Err(bad());
    }
    let mut words: Vec<String> = vec![String::new()];
    let mut level = vec![String::new()];
    for _ in 0..d {
        let mut next = Vec::new();
        for w in &level {
            for c in 0..b {
                next.push(format!("{w}{c}"));
            }
        }
        words.extend(next.iter().cloned());
        if words.len() > CAP {
            return Err(Error::TooLarge { size: words.len(), cap: CAP });
        }
        level = next;
    }
    let names: Vec<String> = words.iter().map(|w| format!("r{w}")).collect();
    let below = words
        .iter()
        .map(|q| {
            words
                .iter()
                .enumerate()
                .filter(|(_, p)| (p.len() > q.len() && p.starts_with(q.as_str())) || (p.len() == d && *p == q))
                .fold(0, |acc, (j, _)| acc | bits::bit(j))
        })
        .collect();
    TransRel::from_below(names, below, false)
}

/// A partial bijection of `{1..n}` as its image word, `0` for undefined.
type PartialMap = Vec<u8>;

fn map_name(m: &PartialMap) -> String {
    m.iter()
        .map(|&x| if x == 0 { '-' } else { char::from(b'0' + x) })
        .collect()
}

fn all_partial_bijections(n: usize) -> Vec<PartialMap> {
    let mut out = Vec::new();
    let mut cur = vec![0u8; n];
    fn rec(i: usize, n: usize, used: u32, cur: &mut PartialMap, out: &mut Vec<PartialMap>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        cur[i] = 0;
        rec(i + 1, n, used, cur, out);
        for y in 1..=n as u8 {
            if used >> y & 1 == 0 {
                cur[i] = y;
                rec(i + 1, n, used | 1 << y, cur, out);
            }
        }
        cur[i] = 0;
    }
    rec(0, n, 0, &mut cur, &mut out);
    out
}

/// `(pq)(x) = p(q(x))`.
fn compose(p: &PartialMap, q: &PartialMap) -> PartialMap {
    q.iter()
        .map(|&y| if y == 0 { 0 } else { p[y as usize - 1] })
        .collect()
}

fn invert(p: &PartialMap) -> PartialMap {
    let mut out = vec![0; p.len()];
    for (x, &y) in p.iter().enumerate() {
        if y != 0 {
            out[y as usize - 1] = x as u8 + 1;
        }
    }
    out
}

fn semigroup_of_maps(maps: &[PartialMap]) -> Result<InverseSemigroup> {
    let names: Vec<String> = maps.iter().map(map_name).collect();
    let pos = |m: &PartialMap| maps.iter().position(|x| x == m).expect("closed under products");
    let table = maps
        .iter()
        .map(|p| maps.iter().map(|q| pos(&compose(p, q))).collect())
        .collect();
    let zero = maps.iter().position(|m| m.iter().all(|&x| x == 0));
    InverseSemigroup::new(names, table, None, zero)
}

/// The symmetric inverse monoid on `n` points with its zero.
pub fn isym_semigroup(n: usize) -> Result<InverseSemigroup> {
    if n == 0 {
        return Err(Error::BadGenerator(format!("isym:{n}")));
    }
    // Σ C(n,k)² k! partial bijections; the carrier drops the zero.
    let size = (0..=n).fold(0usize, |acc, k| {
        let c = (0..k).fold(1usize, |c, i| c.saturating_mul(n - i) / (i + 1));
        let f = (1..=k).fold(1usize, |f, i| f.saturating_mul(i));
        acc.saturating_add(c.saturating_mul(c).saturating_mul(f))
    });
    if size > CAP + 1 {
        return Err(Error::TooLarge { size, cap: CAP + 1 });
    }
    let mut maps = all_partial_bijections(n);
    maps.sort_by_key(map_name);
    semigroup_of_maps(&maps)
}

/// Nonzero partial bijections of `{1..n}` under restriction, as an
/// ordered groupoid with product defined when source meets range.
pub fn isym(n: usize) -> Result<OrderedGroupoid> {
    let s = isym_semigroup(n)?;
    let rel = canonical_order(&s, true)?;
    semigroup_to_ordered_groupoid(&s, &rel)
}

/// The pair groupoid on `{1..n}` with the equality order.
pub fn pair_groupoid(n: usize) -> Result<OrderedGroupoid> {
    if n == 0 || n * n > CAP {
        return Err(Error::BadGenerator(format!("pair:{n}")));
    }
    let idx = |i: usize, j: usize| i * n + j;
    let names: Vec<String> = (0..n)
        .flat_map(|i| (0..n).map(move |j| format!("({},{})", i + 1, j + 1)))
        .collect();
    let mut prod = vec![vec![None; n * n]; n * n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                prod[idx(i, j)][idx(j, k)] = Some(idx(i, k));
            }
        }
    }
    let inv = (0..n).flat_map(|i| (0..n).map(move |j| idx(j, i))).collect();
    let g = FiniteGroupoid::new(names.clone(), prod, inv)?;
    let below = (0..n * n).map(bits::bit).collect();
    let rel = TransRel::from_below(names, below, false)?;
    OrderedGroupoid::new(g, rel)
}

/// A random transitive round relation on `n` elements named `x1..xn`.
pub fn random_relation<R: Rng>(n: usize, rng: &mut R) -> TransRel {
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    loop {
        let density = rng.gen_range(0.15..0.6);
        let below: Vec<Set> = (0..n)
            .map(|_| {
                (0..n)
                    .filter(|_| rng.gen_bool(density))
                    .fold(0, |acc, j| acc | bits::bit(j))
            })
            .collect();
        let rel = TransRel::from_below(names.clone(), below, true).expect("closure always succeeds");
        if rel.is_round() {
            return rel;
        }
    }
}

/// A random ordered groupoid from the inverse subsemigroup of the
/// symmetric inverse monoid on three points generated by one to three
/// random elements, ordered canonically.
pub fn random_ordered_groupoid<R: Rng>(rng: &mut R) -> Result<OrderedGroupoid> {
    let all = all_partial_bijections(3);
    loop {
        let k = rng.gen_range(1..=3);
        let gens: Vec<PartialMap> = all.choose_multiple(rng, k).cloned().collect();
        let mut set: BTreeSet<PartialMap> = BTreeSet::new();
        set.insert(vec![0; 3]);
        for g in &gens {
            set.insert(g.clone());
            set.insert(invert(g));
        }
        loop {
            let cur: Vec<PartialMap> = set.iter().cloned().collect();
            let before = set.len();
            for p in &cur {
                for q in &cur {
                    set.insert(compose(p, q));
                }
            }
            if set.len() == before {
                break;
            }
        }
        if set.len() < 2 {
            continue;
        }
        let mut maps: Vec<PartialMap> = set.into_iter().collect();
        maps.sort_by_key(map_name);
        let s = semigroup_of_maps(&maps)?;
        let rel = canonical_order(&s, true)?;
        return semigroup_to_ordered_groupoid(&s, &rel);
    }
}

/// A generator spec: `arrow`, `diamond`, `powerset:n`, `chain:n`,
/// `tree:b:d` or `isym:n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorSpec {
    Arrow,
    Diamond,
    Powerset(usize),
    Chain(usize),
    Tree(usize, usize),
    Isym(usize),
}

/// What a generator produces.
#[derive(Debug, Clone)]
pub enum Generated {
    Relation(TransRel),
    Groupoid(OrderedGroupoid),
}

impl FromStr for GeneratorSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadGenerator(s.to_string());
        let parts: Vec<&str> = s.split(':').collect();
        let num = |i: usize| -> Result<usize> { parts.get(i).ok_or_else(bad)?.parse().map_err(|_| bad()) };
        let spec = match (parts[0], parts.len()) {
            ("arrow", 1) => GeneratorSpec::Arrow,
            ("diamond", 1) => GeneratorSpec::Diamond,
            ("powerset", 2) => GeneratorSpec::Powerset(num(1)?),
            ("chain", 2) => GeneratorSpec::Chain(num(1)?),
            ("tree", 3) => GeneratorSpec::Tree(num(1)?, num(2)?),
            ("isym", 2) => GeneratorSpec::Isym(num(1)?),
            _ => return Err(bad()),
        };
        let ok = match spec {
            GeneratorSpec::Powerset(n) | GeneratorSpec::Chain(n) | GeneratorSpec::Isym(n) => n >= 1,
            GeneratorSpec::Tree(b, d) => b >= 2 && d >= 1,
            _ => true,
        };
        if ok {
            Ok(spec)
        } else {
            Err(bad())
        }
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSpec::Arrow => write!(f, "arrow"),
            GeneratorSpec::Diamond => write!(f, "diamond"),
            GeneratorSpec::Powerset(n) => write!(f, "powerset:{n}"),
            GeneratorSpec::Chain(n) => write!(f, "chain:{n}"),
            GeneratorSpec::Tree(b, d) => write!(f, "tree:{b}:{d}"),
            GeneratorSpec::Isym(n) => write!(f, "isym:{n}"),
        }
    }
}

impl GeneratorSpec {
    pub fn generate(self) -> Result<Generated> {
        Ok(match self {
            GeneratorSpec::Arrow => Generated::Relation(arrow()),
            GeneratorSpec::Diamond => Generated::Relation(diamond()),
            GeneratorSpec::Powerset(n) => Generated::Relation(powerset(n)?),
            GeneratorSpec::Chain(n) => Generated::Relation(chain(n)?),
            GeneratorSpec::Tree(b, d) => Generated::Relation(tree(b, d)?),
            GeneratorSpec::Isym(n) => Generated::Groupoid(isym(n)?),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn sizes() {
        assert_eq!(powerset(3).unwrap().len(), 7);
        assert_eq!(chain(4).unwrap().len(), 4);
        assert_eq!(tree(2, 2).unwrap().len(), 7);
        assert_eq!(isym_semigroup(2).unwrap().len(), 7);
        assert_eq!(isym_semigroup(3).unwrap().len(), 34);
        assert_eq!(isym(3).unwrap().len(), 33);
        assert!(matches!(isym_semigroup(4), Err(Error::TooLarge { .. })));
        assert_eq!(pair_groupoid(3).unwrap().len(), 9);
    }

    #[test]
    fn tree_leaves_are_reflexive() {
        let t = tree(2, 1).unwrap();
        assert_eq!(t.names(), &["r", "r0", "r1"]);
        assert_eq!(t.pairs(), vec![(1, 0), (1, 1), (2, 0), (2, 2)]);
    }

    #[test]
    fn compose_applies_right_factor_first() {
        let p = vec![2, 0];
        let q = vec![0, 1];
        assert_eq!(compose(&p, &q), vec![0, 2]);
        assert_eq!(invert(&vec![2, 0]), vec![0, 1]);
    }

    #[test]
    fn spec_grammar() {
        for s in ["arrow", "diamond", "powerset:3", "chain:2", "tree:2:3", "isym:2"] {
            assert_eq!(s.parse::<GeneratorSpec>().unwrap().to_string(), s);
        }
        for s in ["", "tree:1:2", "tree:2:0", "isym:0", "isym", "powerset:x", "arrow:1", "cube"] {
            assert!(s.parse::<GeneratorSpec>().is_err(), "{s}");
        }
    }

    #[test]
    fn random_instances_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=5 {
            let r = random_relation(n, &mut rng);
            assert!(r.is_round());
        }
        for _ in 0..5 {
            let og = random_ordered_groupoid(&mut rng).unwrap();
            assert!(!og.is_empty());
        }
    }
}
