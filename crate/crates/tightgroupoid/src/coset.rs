//! Unit-directed sets, atlases and cosets of an ordered groupoid, and the
//! groupoid of nonempty cosets.

use crate::bits::{self, Set};
use crate::error::{Error, Result};
use crate::groupoid::{FiniteGroupoid, OrderedGroupoid, Side};
use crate::laws::LawReport;
use crate::spectrum::{is_directed, is_filter, is_locally_tight, point_label, BRUTE_CAP};

/// Classification of a subset of an ordered groupoid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CosetKind {
    pub unit_directed: bool,
    pub atlas: bool,
    pub coset: bool,
    pub filter: bool,
}

/// `A^≺`.
pub fn up(og: &OrderedGroupoid, a: Set) -> Set {
    og.rel.up(a)
}

/// `AB` over composable pairs.
pub fn mul(og: &OrderedGroupoid, a: Set, b: Set) -> Set {
    og.g.set_mul(a, b)
}

/// `A⁻¹`.
pub fn inv(og: &OrderedGroupoid, a: Set) -> Set {
    og.g.set_inv(a)
}

/// `(A⁻¹A)^≺`.
pub fn source_unit(og: &OrderedGroupoid, a: Set) -> Set {
    up(og, mul(og, inv(og, a), a))
}

/// `(AA⁻¹)^≺`.
pub fn range_unit(og: &OrderedGroupoid, a: Set) -> Set {
    up(og, mul(og, a, inv(og, a)))
}

/// `(AB)^≺`.
pub fn up_mul(og: &OrderedGroupoid, a: Set, b: Set) -> Set {
    up(og, mul(og, a, b))
}

fn restriction_closed(og: &OrderedGroupoid, a: Set) -> bool {
    let g = &og.g;
    for x in bits::iter(a) {
        for y in bits::iter(a) {
            if og.rel.precedes(g.s(y), g.s(x)) {
                match og.restrict(Side::Source, g.s(y), x) {
                    Ok(q) if bits::has(a, q) => {}
                    _ => return false,
                }
            }
            if og.rel.precedes(g.r(y), g.r(x)) {
                match og.restrict(Side::Range, g.r(y), x) {
                    Ok(q) if bits::has(a, q) => {}
                    _ => return false,
                }
            }
        }
    }
    true
}

pub fn is_unit_directed(og: &OrderedGroupoid, a: Set) -> bool {
    is_directed(&og.rel, og.g.r_img(a))
        && is_directed(&og.rel, og.g.s_img(a))
        && restriction_closed(og, a)
}

pub fn is_atlas(og: &OrderedGroupoid, a: Set) -> bool {
    is_unit_directed(og, a) && bits::within(mul(og, mul(og, a, inv(og, a)), a), a)
}

pub fn is_coset(og: &OrderedGroupoid, a: Set) -> bool {
    is_atlas(og, a) && bits::within(up(og, a), a)
}

pub fn subset_kind(og: &OrderedGroupoid, a: Set) -> CosetKind {
    let unit_directed = is_unit_directed(og, a);
    let atlas = unit_directed && bits::within(mul(og, mul(og, a, inv(og, a)), a), a);
    let coset = atlas && bits::within(up(og, a), a);
    CosetKind { unit_directed, atlas, coset, filter: is_filter(&og.rel, a) }
}

/// `A^≺` for an atlas `A`; the result is checked to be a coset.
pub fn up_closure(og: &OrderedGroupoid, a: Set) -> Result<Set> {
    if !is_atlas(og, a) {
        return Err(Error::NotAtlas(point_label(&og.rel, a)));
    }
    let c = up(og, a);
    if !is_coset(og, c) {
        return Err(Error::GroupoidLawViolation(format!(
            "up-closure {} of an atlas is not a coset",
            point_label(&og.rel, c)
        )));
    }
    Ok(c)
}

/// Smallest superset closed under up-closure, the restriction clauses and
/// `AA⁻¹A`.
pub fn closure(og: &OrderedGroupoid, seed: Set) -> Set {
    let g = &og.g;
    let mut a = seed;
    loop {
        let mut next = a | up(og, a) | mul(og, mul(og, a, inv(og, a)), a);
        for x in bits::iter(a) {
            for y in bits::iter(a) {
                if og.rel.precedes(g.s(y), g.s(x)) {
                    if let Ok(q) = og.restrict(Side::Source, g.s(y), x) {
                        next |= bits::bit(q);
                    }
                }
                if og.rel.precedes(g.r(y), g.r(x)) {
                    if let Ok(q) = og.restrict(Side::Range, g.r(y), x) {
                        next |= bits::bit(q);
                    }
                }
            }
        }
        if next == a {
            return a;
        }
        a = next;
    }
}

/// Laws holding for a single subset `A`, each vacuous unless `A` has the
/// class the law assumes.
pub fn coset_laws(og: &OrderedGroupoid, a: Set) -> LawReport {
    let g = &og.g;
    let rel = &og.rel;
    let kind = subset_kind(og, a);
    let mut rep = LawReport::default();
    let ua = up(og, a);
    let aa = mul(og, a, inv(og, a));
    let aaa = mul(og, aa, a);

    if kind.unit_directed {
        rep.push("up_products_range", bits::within(mul(og, ua, inv(og, ua)), up(og, aa)));
        rep.push("up_products_triple", bits::within(mul(og, up(og, aa), ua), up(og, aaa)));
        rep.push("up_range_identity", up(og, mul(og, ua, inv(og, ua))) == up(og, aa));
        rep.push(
            "up_triple_identity",
            up(og, mul(og, mul(og, ua, inv(og, ua)), ua)) == up(og, aaa),
        );
        let su = source_unit(og, a);
        let (mut cap, mut minus) = (true, true);
        for x in bits::iter(a) {
            let bx = rel.below(x);
            let bs = rel.below(g.s(x));
            cap &= g.s_img(bx & ua) == bs & su;
            minus &= g.s_img(bx & !ua) == bs & !su;
        }
        rep.push("source_of_cone_inside", cap);
        rep.push("source_of_cone_outside", minus);
    }

    if kind.atlas {
        rep.push("atlas_up_is_coset", is_coset(og, ua));
        rep.push(
            "atlas_times_cone",
            (0..g.len()).all(|x| is_atlas(og, mul(og, a, rel.below(x)))),
        );
    }

    if kind.coset && a != 0 {
        let mut unit_product = true;
        for e in bits::iter(up(og, g.s_img(a)) & g.units()) {
            let ae = mul(og, a, rel.below(e));
            unit_product &= up(og, ae) == a;
            unit_product &= range_unit(og, a) == up(og, mul(og, ae, inv(og, a)));
        }
        rep.push("coset_unit_product", unit_product);
        let is_unit = range_unit(og, a) == a && source_unit(og, a) == a;
        rep.push("unit_iff_meets_units", is_unit == (a & g.units() != 0));
        let (su, ru) = (source_unit(og, a), range_unit(og, a));
        rep.push("units_are_cosets", is_coset(og, su) && is_coset(og, ru));
        let f = is_filter(rel, a);
        rep.push(
            "filters_form_ideal",
            f == is_filter(rel, su) && f == is_filter(rel, ru),
        );
        if f {
            let lt = is_locally_tight(rel, a);
            rep.push(
                "locally_tight_form_ideal",
                lt == (is_filter(rel, su) && is_locally_tight(rel, su))
                    && lt == (is_filter(rel, ru) && is_locally_tight(rel, ru)),
            );
        }
    }
    if kind.filter {
        rep.push("filter_is_coset", kind.coset);
    }
    rep
}

/// Laws for a pair of cosets whose product is defined.
pub fn coset_pair_laws(og: &OrderedGroupoid, a: Set, b: Set) -> LawReport {
    let mut rep = LawReport::default();
    if a == 0 || b == 0 || !is_coset(og, a) || !is_coset(og, b) || source_unit(og, a) != range_unit(og, b) {
        return rep;
    }
    let ab = mul(og, a, b);
    let mut ok = true;
    for x in bits::iter(b) {
        let axb = mul(og, a, og.rel.below(x));
        ok &= axb != 0 && bits::within(axb, ab) && bits::within(ab, up(og, axb));
    }
    rep.push("coset_products", ok);
    let p = up(og, ab);
    rep.push("product_is_coset", is_coset(og, p));
    rep.push("product_source", source_unit(og, p) == source_unit(og, b));
    rep.push("product_range", range_unit(og, p) == range_unit(og, a));
    rep
}

/// The groupoid of nonempty cosets.
#[derive(Debug, Clone)]
pub struct CosetGroupoid {
    pub cosets: Vec<Set>,
    pub groupoid: FiniteGroupoid,
    /// Indices of the cosets that are filters.
    pub filters: Set,
    /// Whether the filters satisfy the ideal law.
    pub filters_ideal: bool,
    /// Whether units are exactly the cosets meeting the units of `G`.
    pub unit_characterisation: bool,
}

/// Every nonempty coset, by scanning all subsets.
pub fn enumerate_cosets(og: &OrderedGroupoid) -> Result<Vec<Set>> {
    if og.len() > BRUTE_CAP {
        return Err(Error::TooLarge { size: og.len(), cap: BRUTE_CAP });
    }
    let mut out: Vec<Set> = bits::subsets(og.g.full())
        .filter(|&a| a != 0 && is_coset(og, a))
        .collect();
    out.sort_by(|&x, &y| bits::count(x).cmp(&bits::count(y)).then(x.cmp(&y)));
    Ok(out)
}

pub fn coset_groupoid(og: &OrderedGroupoid) -> Result<CosetGroupoid> {
    let cosets = enumerate_cosets(og)?;
    let pos = |s: Set| cosets.iter().position(|&c| c == s);
    let names: Vec<String> = cosets.iter().map(|&c| point_label(&og.rel, c)).collect();
    let n = cosets.len();
    let mut prod = vec![vec![None; n]; n];
    for (i, &a) in cosets.iter().enumerate() {
        for (j, &b) in cosets.iter().enumerate() {
            if source_unit(og, a) == range_unit(og, b) {
                let c = up_mul(og, a, b);
                prod[i][j] = Some(pos(c).ok_or_else(|| {
                    Error::GroupoidLawViolation(format!("product {} is not a coset", point_label(&og.rel, c)))
                })?);
            }
        }
    }
    let inv = cosets
        .iter()
        .map(|&a| {
            let b = inv(og, a);
            pos(b).ok_or_else(|| {
                Error::GroupoidLawViolation(format!("inverse {} is not a coset", point_label(&og.rel, b)))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let groupoid = FiniteGroupoid::new(names, prod, inv)
        .map_err(|e| Error::GroupoidLawViolation(e.to_string()))?;
    let filters = cosets
        .iter()
        .enumerate()
        .filter(|(_, &a)| is_filter(&og.rel, a))
        .fold(0, |acc, (i, _)| acc | bits::bit(i));
    let filters_ideal = (0..n).all(|i| {
        let f = bits::has(filters, i);
        f == bits::has(filters, groupoid.s(i)) && f == bits::has(filters, groupoid.r(i))
    });
    let unit_characterisation =
        (0..n).all(|i| groupoid.is_unit(i) == (cosets[i] & og.g.units() != 0));
    Ok(CosetGroupoid { cosets, groupoid, filters, filters_ideal, unit_characterisation })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn subset_kind_examples() {
        let og = generators::isym(2).unwrap();
        let s = |names: &[&str]| og.rel.subset(names).unwrap();
        let k = subset_kind(&og, s(&["2-", "21"]));
        assert!(k.coset && k.filter);
        let k = subset_kind(&og, s(&["12", "21"]));
        assert!(k.coset && !k.filter);
        let k = subset_kind(&og, 0);
        assert!(k.unit_directed && k.coset);
        assert_eq!(up_closure(&og, s(&["2-"])).unwrap(), s(&["2-", "21"]));
        let k = subset_kind(&og, s(&["1-", "-2"]));
        assert!(!k.unit_directed);
        assert!(matches!(up_closure(&og, s(&["1-", "-2"])), Err(Error::NotAtlas(_))));
    }

    #[test]
    fn coset_groupoid_of_isym2() {
        let og = generators::isym(2).unwrap();
        let cg = coset_groupoid(&og).unwrap();
        assert!(cg.filters_ideal && cg.unit_characterisation);
        let s = |names: &[&str]| og.rel.subset(names).unwrap();
        let find = |x: Set| cg.cosets.iter().position(|&c| c == x).unwrap();
        let a = find(s(&["2-", "21"]));
        let b = find(s(&["-1", "21"]));
        let c = cg.groupoid.mul(a, b).unwrap();
        assert_eq!(cg.cosets[c], s(&["-2", "12"]));
    }

    #[test]
    fn single_unit_groupoid_has_one_coset() {
        let og = generators::pair_groupoid(1).unwrap();
        let cg = coset_groupoid(&og).unwrap();
        assert_eq!(cg.cosets, vec![1]);
    }
}
