//! Finite groupoids, ordered groupoids, inverse semigroups with their
//! canonical order, and downward closed bisections.

use std::collections::{BTreeMap, BTreeSet};

use crate::bits::{self, Set, CAP};
use crate::error::{Error, Result};
use crate::laws::LawReport;
use crate::order::TransRel;

/// A finite groupoid given by its partial product and inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroupoid {
    names: Vec<String>,
    index: BTreeMap<String, usize>,
    prod: Vec<Vec<Option<usize>>>,
    inv: Vec<usize>,
    src: Vec<usize>,
    rng: Vec<usize>,
    units: Set,
}

impl FiniteGroupoid {
    /// Validates the groupoid laws; `prod[a][b]` is `ab` when defined.
    pub fn new(names: Vec<String>, prod: Vec<Vec<Option<usize>>>, inv: Vec<usize>) -> Result<Self> {
        let n = names.len();
        if n > CAP {
            return Err(Error::TooLarge { size: n, cap: CAP });
        }
        let mut index = BTreeMap::new();
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateElement(name.clone()));
            }
        }
        if prod.len() != n || prod.iter().any(|row| row.len() != n) || inv.len() != n {
            return Err(Error::Format("product table or inverse has the wrong size".into()));
        }
        if prod.iter().flatten().flatten().any(|&c| c >= n) || inv.iter().any(|&c| c >= n) {
            return Err(Error::Format("product or inverse refers to a missing element".into()));
        }
        for p in 0..n {
            if inv[inv[p]] != p {
                return Err(Error::BadInverse(format!("inverse of `{}` is not an involution", names[p])));
            }
        }
        let mut rng = vec![0; n];
        let mut src = vec![0; n];
        for p in 0..n {
            rng[p] = prod[p][inv[p]]
                .ok_or_else(|| Error::BadInverse(format!("`{0}`·`{0}`⁻¹ is undefined", names[p])))?;
            src[p] = prod[inv[p]][p]
                .ok_or_else(|| Error::BadInverse(format!("`{0}`⁻¹·`{0}` is undefined", names[p])))?;
        }
        let units: Set = rng.iter().chain(src.iter()).fold(0, |acc, &e| acc | bits::bit(e));
        for e in bits::iter(units) {
            for (q, row) in prod.iter().enumerate() {
                let bad = prod[e][q].is_some_and(|c| c != q) || row[e].is_some_and(|c| c != q);
                if bad {
                    return Err(Error::BadInverse(format!("unit `{}` is not neutral", names[e])));
                }
            }
        }
        for p in 0..n {
            for q in 0..n {
                let composable = src[p] == rng[q];
                if composable != prod[p][q].is_some() {
                    return Err(Error::ProductDomainMismatch(format!(
                        "`{}`·`{}` is {} but the source and range {}",
                        names[p],
                        names[q],
                        if prod[p][q].is_some() { "defined" } else { "undefined" },
                        if composable { "agree" } else { "differ" }
                    )));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let Some(ab) = prod[a][b] else { continue };
                for c in 0..n {
                    let Some(bc) = prod[b][c] else { continue };
                    if prod[ab][c] != prod[a][bc] || prod[ab][c].is_none() {
                        return Err(Error::NotAssociative(
                            names[a].clone(),
                            names[b].clone(),
                            names[c].clone(),
                        ));
                    }
                }
            }
        }
        Ok(FiniteGroupoid { names, index, prod, inv, src, rng, units })
    }

    pub fn build<S: AsRef<str>>(elements: &[S], product: &[(S, S, S)], inverse: &[(S, S)]) -> Result<Self> {
        let names: Vec<String> = elements.iter().map(|e| e.as_ref().to_string()).collect();
        let mut index = BTreeMap::new();
        for (i, n) in names.iter().enumerate() {
            if index.insert(n.clone(), i).is_some() {
                return Err(Error::DuplicateElement(n.clone()));
            }
        }
        let idx = |s: &S| {
            index
                .get(s.as_ref())
                .copied()
                .ok_or_else(|| Error::UnknownElement(s.as_ref().to_string()))
        };
        let n = names.len();
        let mut prod = vec![vec![None; n]; n];
        for (a, b, c) in product {
            let (a, b, c) = (idx(a)?, idx(b)?, idx(c)?);
            if prod[a][b].is_some_and(|old| old != c) {
                return Err(Error::Format(format!(
                    "product `{}`·`{}` declared twice",
                    names[a], names[b]
                )));
            }
            prod[a][b] = Some(c);
        }
        let mut inv = vec![usize::MAX; n];
        for (a, b) in inverse {
            let (a, b) = (idx(a)?, idx(b)?);
            inv[a] = b;
        }
        if let Some(p) = inv.iter().position(|&i| i == usize::MAX) {
            return Err(Error::BadInverse(format!("no inverse declared for `{}`", names[p])));
        }
        Self::new(names, prod, inv)
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

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> Option<usize> {
        self.prod[a][b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// `s(p) = p⁻¹p`.
    #[inline]
    pub fn s(&self, a: usize) -> usize {
        self.src[a]
    }

    /// `r(p) = pp⁻¹`.
    #[inline]
    pub fn r(&self, a: usize) -> usize {
        self.rng[a]
    }

    pub fn units(&self) -> Set {
        self.units
    }

    pub fn is_unit(&self, a: usize) -> bool {
        bits::has(self.units, a)
    }

    pub fn full(&self) -> Set {
        bits::full(self.len())
    }

    pub fn set_inv(&self, a: Set) -> Set {
        bits::iter(a).fold(0, |acc, x| acc | bits::bit(self.inv[x]))
    }

    /// `AB` over the composable pairs.
    pub fn set_mul(&self, a: Set, b: Set) -> Set {
        let mut out = 0;
        for x in bits::iter(a) {
            for y in bits::iter(b) {
                if let Some(z) = self.prod[x][y] {
                    out |= bits::bit(z);
                }
            }
        }
        out
    }

    pub fn s_img(&self, a: Set) -> Set {
        bits::iter(a).fold(0, |acc, x| acc | bits::bit(self.src[x]))
    }

    pub fn r_img(&self, a: Set) -> Set {
        bits::iter(a).fold(0, |acc, x| acc | bits::bit(self.rng[x]))
    }

    /// `(a, b, ab)` for every composable pair.
    pub fn product_triples(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.len() {
            for b in 0..self.len() {
                if let Some(c) = self.prod[a][b] {
                    out.push((a, b, c));
                }
            }
        }
        out
    }

    /// Connected components as unit sets, each with its arrows.
    pub fn components(&self) -> Vec<Set> {
        let mut comp: Vec<usize> = (0..self.len()).collect();
        fn find(c: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while c[x] != x {
                c[x] = c[c[x]];
                x = c[x];
            }
            x
        }
        for a in 0..self.len() {
            let (x, y) = (find(&mut comp, self.src[a]), find(&mut comp, self.rng[a]));
            comp[x] = y;
            let (x, y) = (find(&mut comp, a), find(&mut comp, self.rng[a]));
            comp[x] = y;
        }
        let mut groups: BTreeMap<usize, Set> = BTreeMap::new();
        for a in 0..self.len() {
            let root = find(&mut comp, a);
            *groups.entry(root).or_default() |= bits::bit(a);
        }
        let mut out: Vec<Set> = groups.into_values().collect();
        out.sort_by_key(|s| s.trailing_zeros());
        out
    }
}

/// Results of the ordered groupoid axioms in both forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedReport {
    pub product: bool,
    pub inverse: bool,
    pub support: bool,
    pub product_preserved: bool,
    pub inverse_preserved: bool,
    pub support_reflected: bool,
    /// The two forms give the same verdict.
    pub forms_agree: bool,
    pub witnesses: BTreeMap<String, Vec<String>>,
}

impl OrderedReport {
    pub fn all(&self) -> bool {
        self.product && self.inverse && self.support
    }
}

fn same_carrier(g: &FiniteGroupoid, rel: &TransRel) -> Result<()> {
    if g.names() != rel.names() {
        return Err(Error::Format("order and groupoid list different elements".into()));
    }
    Ok(())
}

pub fn check_ordered(g: &FiniteGroupoid, rel: &TransRel) -> Result<OrderedReport> {
    same_carrier(g, rel)?;
    let n = g.len();
    let name = |xs: &[usize]| xs.iter().map(|&x| g.name(x).to_string()).collect::<Vec<_>>();
    let mut w = BTreeMap::new();

    let mut product = true;
    'prod: for (p, q, pq) in g.product_triples() {
        let mut reached = 0;
        for pp in bits::iter(rel.below(p)) {
            for qq in bits::iter(rel.below(q)) {
                if let Some(c) = g.mul(pp, qq) {
                    reached |= bits::bit(c);
                }
            }
        }
        if reached != rel.below(pq) {
            product = false;
            let r = (reached ^ rel.below(pq)).trailing_zeros() as usize;
            w.insert("product".into(), name(&[r, p, q]));
            break 'prod;
        }
    }

    let mut inverse = true;
    let mut support = true;
    for p in 0..n {
        let inv_below = g.set_inv(rel.below(p));
        if inverse && inv_below != rel.below(g.inv(p)) {
            inverse = false;
            let r = (inv_below ^ rel.below(g.inv(p))).trailing_zeros() as usize;
            w.insert("inverse".into(), name(&[r, p]));
        }
        let ranges = g.r_img(rel.below(p));
        if support && ranges != rel.below(g.r(p)) {
            support = false;
            let r = (ranges ^ rel.below(g.r(p))).trailing_zeros() as usize;
            w.insert("support".into(), name(&[r, p]));
        }
    }

    let mut product_preserved = true;
    'pp: for (p, q, pq) in g.product_triples() {
        for pp in bits::iter(rel.below(p)) {
            for qq in bits::iter(rel.below(q)) {
                if let Some(c) = g.mul(pp, qq) {
                    if !rel.precedes(c, pq) {
                        product_preserved = false;
                        w.insert("product_preserved".into(), name(&[pp, p, qq, q]));
                        break 'pp;
                    }
                }
            }
        }
    }

    let mut inverse_preserved = true;
    let mut support_reflected = true;
    for p in 0..n {
        for q in bits::iter(rel.below(p)) {
            if inverse_preserved && !rel.precedes(g.inv(q), g.inv(p)) {
                inverse_preserved = false;
                w.insert("inverse_preserved".into(), name(&[q, p]));
            }
        }
        for r in bits::iter(rel.below(g.r(p))) {
            let hit = bits::iter(rel.below(p)).any(|q| g.r(q) == r);
            if support_reflected && !hit {
                support_reflected = false;
                w.insert("support_reflected".into(), name(&[r, p]));
            }
        }
    }

    let full = product && inverse && support;
    let reduced = product_preserved && inverse_preserved && support_reflected;
    Ok(OrderedReport {
        product,
        inverse,
        support,
        product_preserved,
        inverse_preserved,
        support_reflected,
        forms_agree: full == reduced,
        witnesses: w,
    })
}

/// A groupoid with a transitive relation satisfying the ordered axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedGroupoid {
    pub g: FiniteGroupoid,
    pub rel: TransRel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Range,
    Source,
}

impl OrderedGroupoid {
    pub fn new(g: FiniteGroupoid, rel: TransRel) -> Result<Self> {
        let report = check_ordered(&g, &rel)?;
        if !report.all() {
            return Err(Error::AxiomViolation(format!(
                "not an ordered groupoid: {:?}",
                report.witnesses
            )));
        }
        Ok(OrderedGroupoid { g, rel })
    }

    pub fn len(&self) -> usize {
        self.g.len()
    }

    pub fn is_empty(&self) -> bool {
        self.g.is_empty()
    }

    /// `ₑ|p` or `p|ₑ`: the unique `q ≺ p` with `r(q) = e` or `s(q) = e`.
    pub fn restrict(&self, side: Side, e: usize, p: usize) -> Result<usize> {
        let (end, of): (fn(&FiniteGroupoid, usize) -> usize, usize) = match side {
            Side::Range => (FiniteGroupoid::r, self.g.r(p)),
            Side::Source => (FiniteGroupoid::s, self.g.s(p)),
        };
        if !self.rel.precedes(e, of) {
            return Err(Error::PreconditionFailed(format!(
                "`{}` is not below `{}`",
                self.g.name(e),
                self.g.name(of)
            )));
        }
        let mut found = bits::iter(self.rel.below(p)).filter(|&q| end(&self.g, q) == e);
        match (found.next(), found.next()) {
            (Some(q), None) => Ok(q),
            (None, _) => Err(Error::NonUnique(format!(
                "nothing below `{}` with end `{}`",
                self.g.name(p),
                self.g.name(e)
            ))),
            (Some(a), Some(b)) => Err(Error::NonUnique(format!(
                "`{}` and `{}` both restrict `{}`",
                self.g.name(a),
                self.g.name(b),
                self.g.name(p)
            ))),
        }
    }

    /// `p|ₑ` when defined.
    pub fn restrict_source(&self, p: usize, e: usize) -> Option<usize> {
        self.restrict(Side::Source, e, p).ok()
    }

    /// `ₑ|p` when defined.
    pub fn restrict_range(&self, e: usize, p: usize) -> Option<usize> {
        self.restrict(Side::Range, e, p).ok()
    }
}

/// Source-image laws for `Q, R ≺ p`.
pub fn source_image_laws(og: &OrderedGroupoid, p: usize, q: Set, r: Set) -> LawReport {
    let g = &og.g;
    let rel = &og.rel;
    let bp = rel.below(p);
    debug_assert!(bits::within(q, bp) && bits::within(r, bp));
    let (sq, sr) = (g.s_img(q), g.s_img(r));
    let qi = g.set_inv(q);
    let mut rep = LawReport::default();
    rep.push(
        "source_products",
        sq == g.set_mul(qi, q)
            && sq == g.set_mul(qi, bp)
            && sq == g.set_mul(rel.below(g.inv(p)), q),
    );
    rep.push("source_complement", g.s_img(bp & !q) == rel.below(g.s(p)) & !sq);
    rep.push("source_cone", g.s_img(rel.down(q)) == rel.down(sq));
    rep.push("disjoint_transfer", rel.disjoint(q, r) == rel.disjoint(sq, sr));
    rep.push("dense_transfer", rel.dense_cover(q, r) == rel.dense_cover(sq, sr));
    rep.push("compact_transfer", rel.compact_cover(q, r) == rel.compact_cover(sq, sr));
    rep
}

/// Structural laws of an ordered groupoid that hold for every instance.
pub fn ordered_laws(og: &OrderedGroupoid) -> LawReport {
    let g = &og.g;
    let rel = &og.rel;
    let mut rep = LawReport::default();
    rep.push("units_down_closed", bits::within(rel.down(g.units()), g.units()));
    let unique = (0..g.len()).all(|p| {
        bits::iter(rel.below(g.r(p))).all(|e| {
            bits::count(bits::iter(rel.below(p)).filter(|&q| g.r(q) == e).fold(0, |a, q| a | bits::bit(q))) == 1
        })
    });
    rep.push("restriction_unique", unique);
    rep
}

/// An inverse semigroup given by its full table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseSemigroup {
    names: Vec<String>,
    index: BTreeMap<String, usize>,
    table: Vec<Vec<usize>>,
    star: Vec<usize>,
    zero: Option<usize>,
}

impl InverseSemigroup {
    /// Validates the table; `star` is derived and, when given, cross-checked.
    pub fn new(
        names: Vec<String>,
        table: Vec<Vec<usize>>,
        star: Option<Vec<usize>>,
        zero: Option<usize>,
    ) -> Result<Self> {
        let n = names.len();
        let mut index = BTreeMap::new();
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateElement(name.clone()));
            }
        }
        if table.len() != n || table.iter().any(|row| row.len() != n || row.iter().any(|&c| c >= n)) {
            return Err(Error::Format("semigroup table must be total and square".into()));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::NotAssociative(
                            names[a].clone(),
                            names[b].clone(),
                            names[c].clone(),
                        ));
                    }
                }
            }
        }
        let mut derived = vec![0; n];
        for g in 0..n {
            let cands: Vec<usize> = (0..n)
                .filter(|&x| table[table[g][x]][g] == g && table[table[x][g]][x] == x)
                .collect();
            match cands.as_slice() {
                [x] => derived[g] = *x,
                [] => return Err(Error::BadInverse(format!("`{}` has no inverse", names[g]))),
                _ => return Err(Error::BadInverse(format!("`{}` has several inverses", names[g]))),
            }
        }
        if let Some(given) = star {
            if given != derived {
                return Err(Error::BadInverse("declared involution disagrees with the table".into()));
            }
        }
        let idem: Vec<usize> = (0..n).filter(|&e| table[e][e] == e).collect();
        for &e in &idem {
            for &f in &idem {
                if table[e][f] != table[f][e] {
                    return Err(Error::BadInverse(format!(
                        "idempotents `{}` and `{}` do not commute",
                        names[e], names[f]
                    )));
                }
            }
        }
        if let Some(z) = zero {
            if z >= n || (0..n).any(|x| table[z][x] != z || table[x][z] != z) {
                return Err(Error::Format("declared zero is not absorbing".into()));
            }
        }
        Ok(InverseSemigroup { names, index, table, star: derived, zero })
    }

    pub fn build<S: AsRef<str>>(elements: &[S], table: &[Vec<S>], zero: Option<&str>) -> Result<Self> {
        let names: Vec<String> = elements.iter().map(|e| e.as_ref().to_string()).collect();
        let lookup = |s: &str| {
            names
                .iter()
                .position(|n| n == s)
                .ok_or_else(|| Error::UnknownElement(s.to_string()))
        };
        let mut t = Vec::with_capacity(table.len());
        for row in table {
            t.push(row.iter().map(|c| lookup(c.as_ref())).collect::<Result<Vec<_>>>()?);
        }
        let z = zero.map(lookup).transpose()?;
        Self::new(names, t, None, z)
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

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn star(&self, a: usize) -> usize {
        self.star[a]
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    /// `p ≤ q ⇔ pp⁻¹ = qp⁻¹`.
    pub fn leq(&self, p: usize, q: usize) -> bool {
        let pi = self.star[p];
        self.mul(p, pi) == self.mul(q, pi)
    }

    /// `p ≤ q ⇔ p = pp⁻¹q`.
    pub fn leq_alt(&self, p: usize, q: usize) -> bool {
        self.mul(self.mul(p, self.star[p]), q) == p
    }
}

/// The canonical order, optionally with the zero removed.
pub fn canonical_order(s: &InverseSemigroup, drop_zero: bool) -> Result<TransRel> {
    let n = s.len();
    for p in 0..n {
        for q in 0..n {
            if s.leq(p, q) != s.leq_alt(p, q) {
                return Err(Error::CharacterisationMismatch(
                    s.name(p).to_string(),
                    s.name(q).to_string(),
                ));
            }
        }
    }
    let keep: Vec<usize> = (0..n)
        .filter(|&x| !(drop_zero && Some(x) == s.zero()))
        .collect();
    let names = keep.iter().map(|&x| s.name(x).to_string()).collect();
    let below = keep
        .iter()
        .map(|&q| {
            keep.iter()
                .enumerate()
                .filter(|(_, &p)| s.leq(p, q))
                .fold(0, |acc, (j, _)| acc | bits::bit(j))
        })
        .collect();
    TransRel::from_below(names, below, false)
}

/// `S^≻` as an ordered groupoid under the product restricted to
/// `p⁻¹p = qq⁻¹`.
///
/// When `rel` omits the zero of `S`, the premises are checked on the
/// extension with `0` below everything and the zero is left out of the
/// carrier.
pub fn semigroup_to_ordered_groupoid(s: &InverseSemigroup, rel: &TransRel) -> Result<OrderedGroupoid> {
    let n = s.len();
    let mut pos = vec![None; n];
    for (j, name) in rel.names().iter().enumerate() {
        pos[s.index_of(name)?] = Some(j);
    }
    let extended = match s.zero() {
        Some(z) => pos[z].is_none(),
        None => false,
    };
    if let Some(x) = (0..n).find(|&x| pos[x].is_none() && Some(x) != s.zero()) {
        return Err(Error::Format(format!(
            "order omits the nonzero element `{}`",
            s.name(x)
        )));
    }
    let prec = |a: usize, b: usize| -> bool {
        match (pos[a], pos[b]) {
            (Some(i), Some(j)) => rel.precedes(i, j),
            _ => extended && Some(a) == s.zero(),
        }
    };
    for p in 0..n {
        for q in 0..n {
            if !prec(p, q) {
                continue;
            }
            if !s.leq(p, q) {
                return Err(Error::PremiseViolation(format!(
                    "`{}` ≺ `{}` but not `{}` ≤ `{}`",
                    s.name(p),
                    s.name(q),
                    s.name(p),
                    s.name(q)
                )));
            }
            if !prec(s.star(p), s.star(q)) {
                return Err(Error::PremiseViolation(format!(
                    "inverse not preserved on `{}` ≺ `{}`",
                    s.name(p),
                    s.name(q)
                )));
            }
            for pp in 0..n {
                for qq in 0..n {
                    if prec(pp, qq) && !prec(s.mul(p, pp), s.mul(q, qq)) {
                        return Err(Error::PremiseViolation(format!(
                            "product not preserved on `{}` ≺ `{}`, `{}` ≺ `{}`",
                            s.name(p),
                            s.name(q),
                            s.name(pp),
                            s.name(qq)
                        )));
                    }
                }
            }
        }
    }
    let carrier: Vec<usize> = (0..n)
        .filter(|&x| (0..n).any(|y| prec(x, y)))
        .filter(|&x| !(extended && Some(x) == s.zero()))
        .collect();
    let mut at = vec![usize::MAX; n];
    for (j, &x) in carrier.iter().enumerate() {
        at[x] = j;
    }
    let names: Vec<String> = carrier.iter().map(|&x| s.name(x).to_string()).collect();
    let m = carrier.len();
    let mut prod = vec![vec![None; m]; m];
    for (i, &p) in carrier.iter().enumerate() {
        for (j, &q) in carrier.iter().enumerate() {
            if s.mul(s.star(p), p) == s.mul(q, s.star(q)) {
                let c = s.mul(p, q);
                if at[c] == usize::MAX {
                    return Err(Error::PremiseViolation(format!(
                        "`{}`·`{}` leaves the carrier",
                        s.name(p),
                        s.name(q)
                    )));
                }
                prod[i][j] = Some(at[c]);
            }
        }
    }
    let inv = carrier
        .iter()
        .map(|&x| {
            let i = at[s.star(x)];
            if i == usize::MAX {
                Err(Error::PremiseViolation(format!("inverse of `{}` leaves the carrier", s.name(x))))
            } else {
                Ok(i)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let g = FiniteGroupoid::new(names.clone(), prod, inv)?;
    let below = carrier
        .iter()
        .map(|&q| {
            carrier
                .iter()
                .enumerate()
                .filter(|(_, &p)| prec(p, q))
                .fold(0, |acc, (j, _)| acc | bits::bit(j))
        })
        .collect();
    let order = TransRel::from_below(names, below, false)?;
    OrderedGroupoid::new(g, order)
        .map_err(|e| Error::AxiomViolation(format!("bridge produced no ordered groupoid: {e}")))
}

/// Largest number of bisections enumerated.
pub const BISECTION_CAP: usize = 1 << 16;

/// Downward closed bisections with setwise product and inclusion.
#[derive(Debug, Clone)]
pub struct BisectionSemigroup {
    pub members: Vec<Set>,
    /// Laws of `p ↦ p^≻`.
    pub laws: LawReport,
    /// Whether `p ↦ p^≻` is injective.
    pub injective: bool,
    /// Whether `p^≻ ≺≺ q^≻` implies `p ≺ q`.
    pub converse: bool,
}

impl BisectionSemigroup {
    pub fn index_of(&self, b: Set) -> Option<usize> {
        self.members.binary_search(&b).ok()
    }
}

/// `B ≺≺ C ⇔ B ≺ c` for some `c ∈ C`.
pub fn strongly_below(og: &OrderedGroupoid, b: Set, c: Set) -> bool {
    bits::iter(c).any(|x| bits::within(b, og.rel.below(x)))
}

/// Sets on which `r` and `s` are both injective.
pub fn is_bisection(g: &FiniteGroupoid, b: Set) -> bool {
    let inner_ok = |x: Set| bits::within(x, g.units());
    inner_ok(g.set_mul(g.set_inv(b), b)) && inner_ok(g.set_mul(b, g.set_inv(b)))
}

pub fn bisection_semigroup(og: &OrderedGroupoid) -> Result<BisectionSemigroup> {
    let g = &og.g;
    let n = g.len();
    let mut found = Vec::new();
    let mut stack = vec![(0usize, 0 as Set, 0 as Set, 0 as Set)];
    while let Some((i, b, rs, ss)) = stack.pop() {
        if i == n {
            if bits::within(og.rel.down(b), b) {
                found.push(b);
                if found.len() > BISECTION_CAP {
                    return Err(Error::TooLarge { size: found.len(), cap: BISECTION_CAP });
                }
            }
            continue;
        }
        stack.push((i + 1, b, rs, ss));
        let (r, s) = (bits::bit(g.r(i)), bits::bit(g.s(i)));
        if rs & r == 0 && ss & s == 0 {
            stack.push((i + 1, b | bits::bit(i), rs | r, ss | s));
        }
    }
    found.sort();
    let members = found;
    let set: BTreeSet<Set> = members.iter().copied().collect();

    let mut laws = LawReport::default();
    let cone = |p: usize| og.rel.below(p);
    laws.push("cones_are_bisections", (0..n).all(|p| set.contains(&cone(p))));
    laws.push(
        "closed_under_product",
        members.iter().all(|&b| members.iter().all(|&c| set.contains(&g.set_mul(b, c)))),
    );
    laws.push(
        "closed_under_inverse",
        members.iter().all(|&b| set.contains(&g.set_inv(b))),
    );
    laws.push("cone_inverse", (0..n).all(|p| cone(g.inv(p)) == g.set_inv(cone(p))));
    laws.push(
        "cone_product",
        g.product_triples()
            .into_iter()
            .all(|(p, q, pq)| cone(pq) == g.set_mul(cone(p), cone(q))),
    );
    laws.push(
        "cone_order",
        og.rel
            .pairs()
            .into_iter()
            .all(|(p, q)| strongly_below(og, cone(p), cone(q))),
    );
    let cones: BTreeSet<Set> = (0..n).map(cone).collect();
    let injective = cones.len() == n;
    let converse = (0..n).all(|p| {
        (0..n).all(|q| !strongly_below(og, cone(p), cone(q)) || og.rel.precedes(p, q))
    });
    Ok(BisectionSemigroup { members, laws, injective, converse })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn pair_groupoid_is_valid() {
        let og = generators::pair_groupoid(2).unwrap();
        let g = &og.g;
        assert_eq!(g.len(), 4);
        let units: Vec<&str> = bits::iter(g.units()).map(|u| g.name(u)).collect();
        assert_eq!(units, vec!["(1,1)", "(2,2)"]);
    }

    #[test]
    fn one_element_group() {
        let g = FiniteGroupoid::build(&["e"], &[("e", "e", "e")], &[("e", "e")]).unwrap();
        assert_eq!(g.units(), 1);
    }

    #[test]
    fn undeclared_domain_is_rejected() {
        let els = ["(1,1)", "(1,2)", "(2,1)", "(2,2)"];
        let mut prod = vec![
            ("(1,1)", "(1,1)", "(1,1)"),
            ("(1,1)", "(1,2)", "(1,2)"),
            ("(1,2)", "(2,1)", "(1,1)"),
            ("(1,2)", "(2,2)", "(1,2)"),
            ("(2,1)", "(1,1)", "(2,1)"),
            ("(2,1)", "(1,2)", "(2,2)"),
            ("(2,2)", "(2,1)", "(2,1)"),
            ("(2,2)", "(2,2)", "(2,2)"),
        ];
        let inv = [
            ("(1,1)", "(1,1)"),
            ("(1,2)", "(2,1)"),
            ("(2,1)", "(1,2)"),
            ("(2,2)", "(2,2)"),
        ];
        assert!(FiniteGroupoid::build(&els, &prod, &inv).is_ok());
        prod.push(("(1,2)", "(1,2)", "(1,2)"));
        assert!(matches!(
            FiniteGroupoid::build(&els, &prod, &inv),
            Err(Error::ProductDomainMismatch(_))
        ));
    }

    #[test]
    fn ordered_axioms_examples() {
        let og = generators::isym(2).unwrap();
        let r = check_ordered(&og.g, &og.rel).unwrap();
        assert!(r.all() && r.forms_agree);
        let pg = generators::pair_groupoid(2).unwrap();
        assert!(check_ordered(&pg.g, &pg.rel).unwrap().all());
        let n = og.g.len();
        let full = TransRel::from_below(og.g.names().to_vec(), vec![bits::full(n); n], false).unwrap();
        let r = check_ordered(&og.g, &full).unwrap();
        assert!(!r.support_reflected && r.forms_agree);
        assert!(r.witnesses.contains_key("support_reflected"));
    }

    #[test]
    fn restriction_examples() {
        let og = generators::isym(2).unwrap();
        let i = |s: &str| og.g.index_of(s).unwrap();
        assert_eq!(og.restrict(Side::Range, i("1-"), i("21")).unwrap(), i("-1"));
        assert_eq!(og.restrict(Side::Source, i("1-"), i("21")).unwrap(), i("2-"));
        let p = i("21");
        assert_eq!(og.restrict(Side::Range, og.g.r(p), p).unwrap(), p);
        assert!(matches!(
            og.restrict(Side::Range, i("21"), i("1-")),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn canonical_order_examples() {
        let s = generators::isym_semigroup(2).unwrap();
        let rel = canonical_order(&s, true).unwrap();
        assert_eq!(rel.len(), 6);
        for atom in ["1-", "2-", "-1", "-2"] {
            let a = rel.index_of(atom).unwrap();
            assert_eq!(bits::count(rel.below(a)), 1);
        }
        let id = rel.index_of("12").unwrap();
        assert_eq!(rel.names_of(rel.below(id)), vec!["-2", "1-", "12"]);

        let semi = InverseSemigroup::build(&["0", "e"], &[vec!["0", "0"], vec!["0", "e"]], Some("0")).unwrap();
        let rel = canonical_order(&semi, true).unwrap();
        assert_eq!(rel.pairs(), vec![(0, 0)]);
    }

    #[test]
    fn invalid_tables_are_rejected() {
        let bad = InverseSemigroup::build(&["a", "b"], &[vec!["a", "a"], vec!["b", "b"]], None);
        assert!(bad.is_err());
        let group = InverseSemigroup::build(&["e", "x"], &[vec!["e", "x"], vec!["x", "e"]], Some("e"));
        assert!(matches!(group, Err(Error::Format(_))));
    }

    #[test]
    fn bridge_examples() {
        let s = generators::isym_semigroup(2).unwrap();
        let rel = canonical_order(&s, true).unwrap();
        let og = semigroup_to_ordered_groupoid(&s, &rel).unwrap();
        assert_eq!(og.len(), 6);
        assert_eq!(bits::count(og.g.units()), 3);

        let names: Vec<String> = s.names().iter().filter(|n| *n != "--").cloned().collect();
        let below = (0..names.len()).map(bits::bit).collect();
        let eq = TransRel::from_below(names, below, false).unwrap();
        let og = semigroup_to_ordered_groupoid(&s, &eq).unwrap();
        assert!(og.rel.pairs().iter().all(|(a, b)| a == b));
    }

    #[test]
    fn semilattice_bridge_has_only_units() {
        let names: Vec<String> = (0..8u32).map(|m| format!("s{m}")).collect();
        let table: Vec<Vec<usize>> = (0..8).map(|a| (0..8).map(|b| a & b).collect()).collect();
        let s = InverseSemigroup::new(names, table, None, Some(0)).unwrap();
        let rel = canonical_order(&s, true).unwrap();
        let og = semigroup_to_ordered_groupoid(&s, &rel).unwrap();
        assert_eq!(og.g.units(), og.g.full());
    }

    #[test]
    fn premise_violation_is_reported() {
        let s = generators::isym_semigroup(2).unwrap();
        let names: Vec<String> = s.names().iter().filter(|n| *n != "--").cloned().collect();
        let n = names.len();
        let full = TransRel::from_below(names, vec![bits::full(n); n], false).unwrap();
        assert!(matches!(
            semigroup_to_ordered_groupoid(&s, &full),
            Err(Error::PremiseViolation(_))
        ));
    }

    #[test]
    fn bisection_examples() {
        let pg = generators::pair_groupoid(2).unwrap();
        let b = bisection_semigroup(&pg).unwrap();
        assert_eq!(b.members.len(), 7);
        assert!(b.laws.all());

        let e = FiniteGroupoid::build(&["e"], &[("e", "e", "e")], &[("e", "e")]).unwrap();
        let og = OrderedGroupoid::new(e, TransRel::build(&["e"], &[("e", "e")], false).unwrap()).unwrap();
        let b = bisection_semigroup(&og).unwrap();
        assert_eq!(b.members, vec![0, 1]);

        let og = generators::isym(2).unwrap();
        let b = bisection_semigroup(&og).unwrap();
        assert!(b.laws.all(), "{:?}", b.laws.failures());
        assert!(b.injective);
    }
}
