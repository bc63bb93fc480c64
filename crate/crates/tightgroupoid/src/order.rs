//! Finite transitive relations: cones, refinement, dense and compact covers,
//! disjointness, formal meets and the pseudobasis axioms.

use std::collections::BTreeMap;

use crate::bits::{self, Set, CAP};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// `Q^≻`, everything strictly related below some member.
    Below,
    /// `Q^≺`, everything strictly related above some member.
    Above,
}

/// A finite carrier with a transitive relation `≺`.
///
/// `below[p]` caches `p^≻ = {x : x ≺ p}` and `above[p]` caches
/// `p^≺ = {x : p ≺ x}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransRel {
    names: Vec<String>,
    index: BTreeMap<String, usize>,
    below: Vec<Set>,
    above: Vec<Set>,
}

impl TransRel {
    /// Builds a relation from named elements and `(lower, upper)` pairs.
    pub fn build<S: AsRef<str>>(elements: &[S], pairs: &[(S, S)], close: bool) -> Result<Self> {
        let names: Vec<String> = elements.iter().map(|e| e.as_ref().to_string()).collect();
        let index = index_names(&names)?;
        let mut below = vec![0; names.len()];
        for (a, b) in pairs {
            let ia = *index
                .get(a.as_ref())
                .ok_or_else(|| Error::UnknownElement(a.as_ref().to_string()))?;
            let ib = *index
                .get(b.as_ref())
                .ok_or_else(|| Error::UnknownElement(b.as_ref().to_string()))?;
            below[ib] |= bits::bit(ia);
        }
        Self::from_below_indexed(names, index, below, close)
    }

    /// Builds a relation from `below` cones given as index sets.
    pub fn from_below(names: Vec<String>, below: Vec<Set>, close: bool) -> Result<Self> {
        let index = index_names(&names)?;
        Self::from_below_indexed(names, index, below, close)
    }

    fn from_below_indexed(
        names: Vec<String>,
        index: BTreeMap<String, usize>,
        mut below: Vec<Set>,
        close: bool,
    ) -> Result<Self> {
        let n = names.len();
        if close {
            loop {
                let mut changed = false;
                for c in 0..n {
                    let mut acc = below[c];
                    for b in bits::iter(below[c]) {
                        acc |= below[b];
                    }
                    if acc != below[c] {
                        below[c] = acc;
                        changed = true;
                    }
                }
                if !changed {
                    break;
                }
            }
        } else {
            for c in 0..n {
                for b in bits::iter(below[c]) {
                    let missing = below[b] & !below[c];
                    if missing != 0 {
                        let a = missing.trailing_zeros() as usize;
                        return Err(Error::NotTransitive(
                            names[a].clone(),
                            names[b].clone(),
                            names[c].clone(),
                        ));
                    }
                }
            }
        }
        let mut above = vec![0; n];
        for (c, &bc) in below.iter().enumerate() {
            for b in bits::iter(bc) {
                above[b] |= bits::bit(c);
            }
        }
        Ok(TransRel { names, index, below, above })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    /// The index set of the named elements.
    pub fn subset<S: AsRef<str>>(&self, names: &[S]) -> Result<Set> {
        let mut s = 0;
        for n in names {
            s |= bits::bit(self.index_of(n.as_ref())?);
        }
        Ok(s)
    }

    pub fn names_of(&self, s: Set) -> Vec<String> {
        bits::iter(s).map(|i| self.names[i].clone()).collect()
    }

    pub fn full(&self) -> Set {
        bits::full(self.len())
    }

    /// `a ≺ b`.
    #[inline]
    pub fn precedes(&self, a: usize, b: usize) -> bool {
        bits::has(self.below[b], a)
    }

    #[inline]
    pub fn below(&self, p: usize) -> Set {
        self.below[p]
    }

    #[inline]
    pub fn above(&self, p: usize) -> Set {
        self.above[p]
    }

    /// `(lower, upper)` index pairs in lexicographic index order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.len() {
            for b in bits::iter(self.above[a]) {
                out.push((a, b));
            }
        }
        out
    }

    pub fn cone(&self, q: Set, dir: Direction) -> Set {
        match dir {
            Direction::Below => self.down(q),
            Direction::Above => self.up(q),
        }
    }

    /// `Q^≻`.
    #[inline]
    pub fn down(&self, q: Set) -> Set {
        bits::iter(q).fold(0, |acc, x| acc | self.below[x])
    }

    /// `Q^≺`.
    #[inline]
    pub fn up(&self, q: Set) -> Set {
        bits::iter(q).fold(0, |acc, x| acc | self.above[x])
    }

    /// `Q ≺ R`, i.e. `Q ⊆ R^≻`.
    pub fn refines(&self, q: Set, r: Set) -> bool {
        bits::within(q, self.down(r))
    }

    /// `Q 𝖣 R`: everything below `Q` has something below it that is below `R`.
    #[inline]
    pub fn dense_cover(&self, q: Set, r: Set) -> bool {
        let target = self.down(r);
        bits::iter(self.down(q)).all(|x| self.below[x] & target != 0)
    }

    /// `Q 𝖢 R`, evaluated with the largest admissible refinement `F = R^≻`.
    #[inline]
    pub fn compact_cover(&self, q: Set, r: Set) -> bool {
        self.dense_cover(q, self.down(r))
    }

    /// `Q 𝖢 R` by trying every `F ⊆ R^≻`.
    pub fn compact_cover_brute(&self, q: Set, r: Set) -> bool {
        bits::subsets(self.down(r)).any(|f| self.dense_cover(q, f))
    }

    /// The largest `Q'` with `Q' 𝖢 R`, namely `{x : {x} 𝖢 R}`.
    pub fn covered_by(&self, r: Set) -> Set {
        let target = self.down(self.down(r));
        (0..self.len())
            .filter(|&x| bits::iter(self.below[x]).all(|y| self.below[y] & target != 0))
            .fold(0, |acc, x| acc | bits::bit(x))
    }

    /// `Q ⊥ R`.
    pub fn disjoint(&self, q: Set, r: Set) -> bool {
        self.down(q) & self.down(r) == 0
    }

    /// `G^⊥ = {q : G ⊥ q}`.
    pub fn perp(&self, g: Set) -> Set {
        let dg = self.down(g);
        (0..self.len())
            .filter(|&x| self.below[x] & dg == 0)
            .fold(0, |acc, x| acc | bits::bit(x))
    }

    /// The formal meet `⋂_{q∈Q} q^≻`; the empty meet is the whole carrier.
    pub fn meet(&self, q: Set) -> Set {
        bits::iter(q).fold(self.full(), |acc, x| acc & self.below[x])
    }

    /// `p ≼ q ⇔ p^≻ ⊆ q^≻`.
    pub fn lower_le(&self, p: usize, q: usize) -> bool {
        bits::within(self.below[p], self.below[q])
    }

    pub fn lower_preorder(&self) -> TransRel {
        let n = self.len();
        let below = (0..n)
            .map(|q| {
                (0..n)
                    .filter(|&p| self.lower_le(p, q))
                    .fold(0, |acc, p| acc | bits::bit(p))
            })
            .collect();
        TransRel::from_below_indexed(self.names.clone(), self.index.clone(), below, false)
            .expect("inclusion of cones is transitive")
    }

    pub fn is_round(&self) -> bool {
        self.below.iter().all(|&b| b != 0)
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.len()).all(|p| self.precedes(p, p))
    }

    /// The relation restricted to `universe`, reindexed; also returns the
    /// original index of each new element.
    pub fn restrict(&self, universe: Set) -> (TransRel, Vec<usize>) {
        let keep: Vec<usize> = bits::iter(universe).collect();
        let mut pos = vec![usize::MAX; self.len()];
        for (j, &i) in keep.iter().enumerate() {
            pos[i] = j;
        }
        let names = keep.iter().map(|&i| self.names[i].clone()).collect();
        let below = keep
            .iter()
            .map(|&i| bits::iter(self.below[i] & universe).fold(0, |acc, x| acc | bits::bit(pos[x])))
            .collect();
        let rel = TransRel::from_below(names, below, false).expect("restriction stays transitive");
        (rel, keep)
    }

    /// Same relation with elements reordered by name.
    pub fn sorted(&self) -> TransRel {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by(|&a, &b| self.names[a].cmp(&self.names[b]));
        let mut pos = vec![0; self.len()];
        for (j, &i) in order.iter().enumerate() {
            pos[i] = j;
        }
        let names = order.iter().map(|&i| self.names[i].clone()).collect();
        let below = order
            .iter()
            .map(|&i| bits::iter(self.below[i]).fold(0, |acc, x| acc | bits::bit(pos[x])))
            .collect();
        TransRel::from_below(names, below, false).expect("reordering keeps transitivity")
    }

    fn tuple(&self, xs: &[usize]) -> Vec<String> {
        xs.iter().map(|&i| self.names[i].clone()).collect()
    }
}

fn index_names(names: &[String]) -> Result<BTreeMap<String, usize>> {
    if names.len() > CAP {
        return Err(Error::TooLarge { size: names.len(), cap: CAP });
    }
    let mut index = BTreeMap::new();
    for (i, n) in names.iter().enumerate() {
        if n.is_empty() || index.insert(n.clone(), i).is_some() {
            return Err(Error::DuplicateElement(n.clone()));
        }
    }
    Ok(index)
}

/// Outcome of evaluating the axioms on a relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub round: bool,
    pub pseudobasis: bool,
    pub bi_pseudobasis: bool,
    pub local_bi_pseudobasis: bool,
    /// Whether the local axiom agrees with its form stated through `≺`
    /// (pseudobasis plus the bounded meet condition).
    pub equivalent_form_agrees: bool,
    pub witnesses: BTreeMap<String, Vec<String>>,
}

impl AxiomReport {
    pub fn all(&self) -> bool {
        self.round && self.pseudobasis && self.bi_pseudobasis && self.local_bi_pseudobasis
    }
}

/// Evaluates roundness and the three pseudobasis axioms by direct
/// quantification.
pub fn classify(rel: &TransRel) -> AxiomReport {
    let n = rel.len();
    let mut witnesses = BTreeMap::new();

    let round = match (0..n).find(|&p| rel.below(p) == 0) {
        Some(p) => {
            witnesses.insert("round".into(), rel.tuple(&[p]));
            false
        }
        None => true,
    };

    let pseudobasis = match pseudobasis_witness(rel) {
        Some(w) => {
            witnesses.insert("pseudobasis".into(), rel.tuple(&w));
            false
        }
        None => true,
    };

    let bi = match bi_witness(rel, |_, _| true) {
        Some(w) => {
            witnesses.insert("bi_pseudobasis".into(), rel.tuple(&w));
            false
        }
        None => true,
    };

    let lower = rel.lower_preorder();
    let local = match bi_witness(rel, |r, s| {
        (0..n).any(|p| lower.precedes(r, p) && lower.precedes(s, p))
    }) {
        Some(w) => {
            witnesses.insert("local_bi_pseudobasis".into(), rel.tuple(&w));
            false
        }
        None => true,
    };

    let strict_local = bi_witness(rel, |r, s| (0..n).any(|p| rel.precedes(r, p) && rel.precedes(s, p)));
    let equivalent = pseudobasis && strict_local.is_none();

    AxiomReport {
        round,
        pseudobasis,
        bi_pseudobasis: bi,
        local_bi_pseudobasis: local,
        equivalent_form_agrees: equivalent == local,
        witnesses,
    }
}

fn pseudobasis_witness(rel: &TransRel) -> Option<Vec<usize>> {
    for p in 0..rel.len() {
        for pp in bits::iter(rel.below(p)) {
            if !rel.compact_cover(rel.below(pp), rel.below(p)) {
                return Some(vec![pp, p]);
            }
        }
    }
    None
}

/// Searches `r' ≺ r`, `s' ≺ s` with `(r, s)` admitted by `bounded` and
/// `r'^≻ ∩ s'^≻ 𝖢 r^≻ ∩ s^≻` failing.
fn bi_witness(rel: &TransRel, bounded: impl Fn(usize, usize) -> bool) -> Option<Vec<usize>> {
    let n = rel.len();
    for r in 0..n {
        for s in r..n {
            if !bounded(r, s) {
                continue;
            }
            let target = rel.below(r) & rel.below(s);
            for rp in bits::iter(rel.below(r)) {
                for sp in bits::iter(rel.below(s)) {
                    if !rel.compact_cover(rel.below(rp) & rel.below(sp), target) {
                        return Some(vec![rp, r, sp, s]);
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn arrow() -> TransRel {
        generators::arrow()
    }

    fn diamond() -> TransRel {
        generators::diamond()
    }

    #[test]
    fn build_rejects_missing_composite() {
        let err = TransRel::build(&["a", "b", "c"], &[("a", "b"), ("b", "c")], false).unwrap_err();
        match err {
            Error::NotTransitive(a, b, c) => assert_eq!((a.as_str(), b.as_str(), c.as_str()), ("a", "b", "c")),
            e => panic!("unexpected {e}"),
        }
    }

    #[test]
    fn build_closes_when_asked() {
        let rel = TransRel::build(&["a", "b", "c"], &[("a", "b"), ("b", "c")], true).unwrap();
        assert_eq!(rel.pairs(), vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn build_rejects_bad_names() {
        assert!(matches!(
            TransRel::build(&["a", "a"], &[], false),
            Err(Error::DuplicateElement(_))
        ));
        assert!(matches!(
            TransRel::build(&["a"], &[("a", "z")], false),
            Err(Error::UnknownElement(_))
        ));
    }

    #[test]
    fn cones_on_small_examples() {
        let a = arrow();
        let p = a.subset(&["p"]).unwrap();
        assert_eq!(a.names_of(a.cone(p, Direction::Below)), vec!["a"]);
        assert_eq!(a.cone(0, Direction::Above), 0);
        let d = diamond();
        let p = d.subset(&["p"]).unwrap();
        assert_eq!(d.names_of(d.down(p)), vec!["a", "b", "p"]);
    }

    #[test]
    fn refinement_examples() {
        let d = diamond();
        assert!(d.refines(d.subset(&["a", "b"]).unwrap(), d.subset(&["p"]).unwrap()));
        assert!(d.refines(0, d.subset(&["q"]).unwrap()));
        let a = arrow();
        assert!(!a.refines(a.subset(&["p"]).unwrap(), a.subset(&["a"]).unwrap()));
    }

    #[test]
    fn cover_examples() {
        let d = diamond();
        let s = |x: &[&str]| d.subset(x).unwrap();
        assert!(d.dense_cover(s(&["p"]), s(&["a", "b"])));
        assert!(d.dense_cover(0, 0));
        let a = arrow();
        assert!(!a.dense_cover(a.subset(&["a"]).unwrap(), 0));
        assert!(d.compact_cover(s(&["p"]), s(&["a", "b"])));
        assert!(d.compact_cover_brute(s(&["p"]), s(&["a", "b"])));
        assert!(d.compact_cover(0, 0));
        assert!(!d.compact_cover(s(&["a"]), s(&["b"])));
        assert!(!d.compact_cover_brute(s(&["a"]), s(&["b"])));
    }

    #[test]
    fn disjointness_and_meets() {
        let d = diamond();
        let s = |x: &[&str]| d.subset(x).unwrap();
        assert!(d.disjoint(s(&["a"]), s(&["b"])));
        assert_eq!(d.names_of(d.perp(s(&["a"]))), vec!["b"]);
        assert!(d.disjoint(0, s(&["p", "q"])));
        assert_eq!(d.names_of(d.meet(s(&["p", "q"]))), vec!["a", "b"]);
        assert_eq!(d.names_of(d.meet(s(&["a"]))), vec!["a"]);
        assert_eq!(d.meet(0), d.full());
    }

    #[test]
    fn lower_preorder_examples() {
        let a = arrow().lower_preorder();
        assert!(a.precedes(0, 1) && a.precedes(1, 0) && a.precedes(0, 0) && a.precedes(1, 1));
        let single = TransRel::build(&["x"], &[("x", "x")], false).unwrap();
        assert_eq!(single.lower_preorder().pairs(), vec![(0, 0)]);
        let p3 = generators::powerset(3).unwrap();
        let lp = p3.lower_preorder();
        assert_eq!(lp.pairs(), p3.pairs());
    }

    #[test]
    fn classify_examples() {
        let r = classify(&diamond());
        assert!(r.all() && r.equivalent_form_agrees);
        let r = classify(&arrow());
        assert!(r.all() && r.equivalent_form_agrees);
        let xy = TransRel::build(&["x", "y"], &[("x", "y")], false).unwrap();
        let r = classify(&xy);
        assert!(!r.round);
        assert_eq!(r.witnesses["round"], vec!["x"]);
    }
}
