//! The locally tight groupoid of an ordered groupoid, its étale structure,
//! the germ model and recovery of a groupoid from a family of bisections.

use std::collections::BTreeMap;

use crate::bits::{self, Set};
use crate::coset::{inv, mul, source_unit, range_unit, up};
use crate::error::{Error, Result};
use crate::groupoid::{FiniteGroupoid, OrderedGroupoid, Side};
use crate::laws::LawReport;
use crate::order::{classify, TransRel};
use crate::spectrum::{is_filter, is_locally_tight, locally_tight_spectrum, point_label, SpectrumSpace};
use crate::topology::{
    check_concrete_clbp, image, is_bijection, is_homeomorphism, is_open_map,
    FiniteSpace, NamedFamily,
};

/// A finite topological groupoid with raw tables, so that a broken model
/// can still be inspected.
#[derive(Debug, Clone)]
pub struct GroupoidModel {
    pub names: Vec<String>,
    pub prod: Vec<Vec<Option<usize>>>,
    pub inv: Vec<usize>,
    pub space: FiniteSpace,
    pub named: Vec<(String, Set)>,
    pub units: Set,
}

impl GroupoidModel {
    pub fn from_groupoid(g: &FiniteGroupoid, space: FiniteSpace, named: Vec<(String, Set)>) -> Self {
        let n = g.len();
        GroupoidModel {
            names: g.names().to_vec(),
            prod: (0..n).map(|a| (0..n).map(|b| g.mul(a, b)).collect()).collect(),
            inv: (0..n).map(|a| g.inv(a)).collect(),
            space,
            named,
            units: g.units(),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Validates the tables as a groupoid.
    pub fn groupoid(&self) -> Result<FiniteGroupoid> {
        FiniteGroupoid::new(self.names.clone(), self.prod.clone(), self.inv.clone())
    }

    pub fn set_inv(&self, a: Set) -> Set {
        image(&self.inv, a)
    }

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

    /// `x⁻¹x` when defined.
    pub fn source(&self, x: usize) -> Option<usize> {
        self.prod[self.inv[x]][x]
    }

    pub fn range(&self, x: usize) -> Option<usize> {
        self.prod[x][self.inv[x]]
    }
}

/// `(g^≻T)^≺` for a locally tight filter `T` with `s(g) ∈ r[T]^≺`.
pub fn act(og: &OrderedGroupoid, g: usize, t: Set) -> Result<Set> {
    let rel = &og.rel;
    if t == 0 || !is_filter(rel, t) || !is_locally_tight(rel, t) {
        return Err(Error::PreconditionFailed(format!(
            "{} is not a nonempty locally tight filter",
            point_label(rel, t)
        )));
    }
    if !bits::has(rel.up(og.g.r_img(t)), og.g.s(g)) {
        return Err(Error::PreconditionFailed(format!(
            "s({}) is not above the ranges of {}",
            og.g.name(g),
            point_label(rel, t)
        )));
    }
    let out = up(og, mul(og, rel.below(g), t));
    if out == 0 || !is_filter(rel, out) || !is_locally_tight(rel, out) {
        return Err(Error::GroupoidLawViolation(format!(
            "action of {} on {} gives {}, not a locally tight filter",
            og.g.name(g),
            point_label(rel, t),
            point_label(rel, out)
        )));
    }
    Ok(out)
}

/// `ℒ(G)` with the data used to build it.
#[derive(Debug, Clone)]
pub struct LocallyTightGroupoid {
    pub og: OrderedGroupoid,
    pub spectrum: SpectrumSpace,
    pub model: GroupoidModel,
}

pub fn locally_tight_groupoid(og: &OrderedGroupoid) -> Result<LocallyTightGroupoid> {
    let spectrum = locally_tight_spectrum(&og.rel)?;
    let pts = &spectrum.points;
    let n = pts.len();
    let names: Vec<String> = (0..n).map(|i| spectrum.label(i)).collect();
    let missing = |what: &str, s: Set| {
        Error::GroupoidLawViolation(format!("{what} {} is not a point", point_label(&og.rel, s)))
    };
    let mut prod = vec![vec![None; n]; n];
    for i in 0..n {
        for j in 0..n {
            if source_unit(og, pts[i]) == range_unit(og, pts[j]) {
                let c = up(og, mul(og, pts[i], pts[j]));
                prod[i][j] = Some(spectrum.point_index(c).ok_or_else(|| missing("product", c))?);
            }
        }
    }
    let invs = pts
        .iter()
        .map(|&t| {
            let u = inv(og, t);
            spectrum.point_index(u).ok_or_else(|| missing("inverse", u))
        })
        .collect::<Result<Vec<_>>>()?;
    let g = FiniteGroupoid::new(names, prod, invs).map_err(|e| Error::GroupoidLawViolation(e.to_string()))?;
    let expected_units = (0..n)
        .filter(|&i| pts[i] & og.g.units() != 0)
        .fold(0, |acc, i| acc | bits::bit(i));
    if g.units() != expected_units {
        return Err(Error::GroupoidLawViolation(
            "units are not the filters meeting the units of G".into(),
        ));
    }
    let model = GroupoidModel::from_groupoid(&g, spectrum.space.clone(), spectrum.generators.clone());
    Ok(LocallyTightGroupoid { og: og.clone(), spectrum, model })
}

/// Checks the étale groupoid structure of `ℒ(G)` on its current tables.
pub fn verify_etale(lt: &LocallyTightGroupoid) -> LawReport {
    let m = &lt.model;
    let sp = &m.space;
    let n = m.len();
    let og = &lt.og;
    let spec = &lt.spectrum;
    let mut rep = LawReport::default();

    rep.push("groupoid_laws", m.groupoid().is_ok());
    let inv_ok = m.inv.len() == n && m.inv.iter().all(|&x| x < n);
    rep.push("inverse_homeomorphism", inv_ok && is_homeomorphism(sp, sp, &m.inv));

    let composable = |i: usize, j: usize| source_unit(og, spec.points[i]) == range_unit(og, spec.points[j]);
    let mut product_continuous = true;
    for i in 0..n {
        for j in 0..n {
            if !composable(i, j) {
                continue;
            }
            let Some(c) = m.prod[i][j] else {
                product_continuous = false;
                continue;
            };
            let mut img = 0;
            for x in bits::iter(sp.nbhd(i)) {
                for y in bits::iter(sp.nbhd(j)) {
                    if composable(x, y) {
                        match m.prod[x][y] {
                            Some(z) => img |= bits::bit(z),
                            None => product_continuous = false,
                        }
                    }
                }
            }
            product_continuous &= bits::within(img, sp.nbhd(c));
        }
    }
    rep.push("product_continuous", product_continuous);

    let src: Option<Vec<usize>> = (0..n).map(|x| m.source(x)).collect();
    let src_open = src.as_ref().is_some_and(|s| is_open_map(sp, sp, s));
    rep.push("source_open", src_open);

    let mut s_image = true;
    if let Some(s) = &src {
        for po in spec.pair_opens() {
            let lhs = image(s, po.points);
            let rhs = spec.o_pair(og.g.s(po.p), og.g.s(po.q), og.g.s_img(po.f));
            s_image &= lhs == rhs;
        }
    } else {
        s_image = false;
    }
    rep.push("source_image_of_pair_opens", s_image);

    rep.push("locally_compact", sp.locally_compact());
    rep.push("locally_hausdorff", sp.locally_hausdorff());

    let mut inverse_law = true;
    let mut product_law = true;
    for p in 0..og.len() {
        inverse_law &= m.set_inv(spec.o(p)) == spec.o(og.g.inv(p));
        for q in 0..og.len() {
            if let Some(pq) = og.g.mul(p, q) {
                product_law &= m.set_mul(spec.o(p), spec.o(q)) == spec.o(pq);
            }
        }
    }
    rep.push("cone_opens_inverse", inverse_law);
    rep.push("cone_opens_product", product_law);
    rep
}

/// Étale checks on a bare groupoid model: continuity of the structure maps
/// through minimal neighbourhoods, openness of the source map and the local
/// topological properties.
pub fn model_laws(m: &GroupoidModel) -> LawReport {
    let sp = &m.space;
    let n = m.len();
    let mut rep = LawReport::default();
    rep.push("groupoid_laws", m.groupoid().is_ok());
    rep.push("inverse_homeomorphism", is_homeomorphism(sp, sp, &m.inv));
    let mut product_continuous = true;
    for i in 0..n {
        for j in 0..n {
            let Some(c) = m.prod[i][j] else { continue };
            let mut img = 0;
            for x in bits::iter(sp.nbhd(i)) {
                for y in bits::iter(sp.nbhd(j)) {
                    if let Some(z) = m.prod[x][y] {
                        img |= bits::bit(z);
                    }
                }
            }
            product_continuous &= bits::within(img, sp.nbhd(c));
        }
    }
    rep.push("product_continuous", product_continuous);
    let src: Option<Vec<usize>> = (0..n).map(|x| m.source(x)).collect();
    rep.push("source_open", src.is_some_and(|s| is_open_map(sp, sp, &s)));
    rep.push("units_open", sp.is_open(m.units));
    rep.push("locally_compact", sp.locally_compact());
    rep.push("locally_hausdorff", sp.locally_hausdorff());
    rep
}

/// Searches for a groupoid isomorphism that is also a homeomorphism.
pub fn find_isomorphism(a: &GroupoidModel, b: &GroupoidModel) -> Option<Vec<usize>> {
    let n = a.len();
    if n != b.len() || bits::count(a.units) != bits::count(b.units) {
        return None;
    }
    let ga = a.groupoid().ok()?;
    let gb = b.groupoid().ok()?;
    let sig = |g: &FiniteGroupoid, x: usize| {
        (
            g.is_unit(x),
            g.inv(x) == x,
            (0..g.len()).filter(|&y| g.mul(x, y).is_some()).count(),
        )
    };
    let mut map = vec![usize::MAX; n];
    let mut used = 0 as Set;
    fn consistent(ga: &FiniteGroupoid, gb: &FiniteGroupoid, map: &[usize], x: usize) -> bool {
        let fx = map[x];
        if map[ga.inv(x)] != usize::MAX && map[ga.inv(x)] != gb.inv(fx) {
            return false;
        }
        for y in 0..ga.len() {
            let fy = map[y];
            if fy == usize::MAX {
                continue;
            }
            for (p, q, fp, fq) in [(x, y, fx, fy), (y, x, fy, fx)] {
                match (ga.mul(p, q), gb.mul(fp, fq)) {
                    (None, None) => {}
                    (Some(c), Some(d)) => {
                        if map[c] != usize::MAX && map[c] != d {
                            return false;
                        }
                    }
                    _ => return false,
                }
            }
        }
        true
    }
    #[allow(clippy::too_many_arguments)]
    fn search(
        i: usize,
        ga: &FiniteGroupoid,
        gb: &FiniteGroupoid,
        a: &GroupoidModel,
        b: &GroupoidModel,
        sig: &dyn Fn(&FiniteGroupoid, usize) -> (bool, bool, usize),
        map: &mut Vec<usize>,
        used: &mut Set,
    ) -> bool {
        if i == ga.len() {
            let full = (0..ga.len()).all(|x| {
                (0..ga.len()).all(|y| ga.mul(x, y).map(|c| map[c]) == gb.mul(map[x], map[y]))
            });
            return full && is_homeomorphism(&a.space, &b.space, map);
        }
        for y in 0..gb.len() {
            if bits::has(*used, y) || sig(ga, i) != sig(gb, y) {
                continue;
            }
            map[i] = y;
            *used |= bits::bit(y);
            if consistent(ga, gb, map, i) && search(i + 1, ga, gb, a, b, sig, map, used) {
                return true;
            }
            *used &= !bits::bit(y);
            map[i] = usize::MAX;
        }
        false
    }
    if search(0, &ga, &gb, a, b, &sig, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

/// Whether `map` is a groupoid isomorphism and a homeomorphism.
pub fn is_isomorphism(a: &GroupoidModel, b: &GroupoidModel, map: &[usize]) -> bool {
    let n = a.len();
    is_bijection(map, b.len())
        && (0..n).all(|x| map[a.inv[x]] == b.inv[map[x]])
        && (0..n).all(|x| (0..n).all(|y| a.prod[x][y].map(|c| map[c]) == b.prod[map[x]][map[y]]))
        && is_homeomorphism(&a.space, &b.space, map)
}

/// The pair groupoid on `{1..n}` as a discrete model.
pub fn pair_model(n: usize) -> Result<GroupoidModel> {
    let og = crate::generators::pair_groupoid(n)?;
    let space = FiniteSpace::discrete(og.g.names().to_vec())?;
    Ok(GroupoidModel::from_groupoid(&og.g, space, Vec::new()))
}

/// The groupoid of germs over the locally tight spectrum of the units.
#[derive(Debug, Clone)]
pub struct GermGroupoid {
    pub unit_rel: TransRel,
    /// `unit_index[i]` is the element of `G` behind unit `i`.
    pub unit_index: Vec<usize>,
    pub unit_spectrum: SpectrumSpace,
    /// Germ representatives `(g, T)` with `T` a unit spectrum point.
    pub germs: Vec<(usize, usize)>,
    /// The germ index of every `(g, T)` with `s(g) ∈ T`.
    pub classes: BTreeMap<(usize, usize), usize>,
    pub model: GroupoidModel,
    /// `[g,T] ↦ (g^≻T)^≺` into the locally tight groupoid.
    pub map: Vec<usize>,
    pub isomorphism: bool,
    /// Basic opens `Θ(g, O^{d,e}_F)` land on the matching pair opens.
    pub transport: bool,
    pub lt: LocallyTightGroupoid,
}

impl GermGroupoid {
    pub fn holds(&self) -> bool {
        self.isomorphism && self.transport
    }

    /// The germ `[g, T]`.
    pub fn germ(&self, g: usize, t: usize) -> Option<usize> {
        self.classes.get(&(g, t)).copied()
    }
}

pub fn germ_groupoid(og: &OrderedGroupoid) -> Result<GermGroupoid> {
    let lt = locally_tight_groupoid(og)?;
    let g = &og.g;
    let (unit_rel, unit_index) = og.rel.restrict(g.units());
    let report = classify(&unit_rel);
    if !(report.round && report.local_bi_pseudobasis) {
        return Err(Error::AxiomViolation(format!(
            "units are not a local bi-pseudobasis: {:?}",
            report.witnesses
        )));
    }
    let unit_spectrum = locally_tight_spectrum(&unit_rel)?;
    let lift = |t: Set| bits::iter(t).fold(0, |acc, i| acc | bits::bit(unit_index[i]));
    let unit_pos = |x: usize| unit_index.iter().position(|&u| u == x);
    let lower = |s: Set| -> Set {
        bits::iter(s).filter_map(unit_pos).fold(0, |acc, i| acc | bits::bit(i))
    };
    let upts: Vec<Set> = unit_spectrum.points.iter().map(|&t| lift(t)).collect();

    // Pairs (g, T) with s(g) ∈ T, grouped by agreement on a restriction.
    let mut classes: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut germs: Vec<(usize, usize)> = Vec::new();
    let mut members: Vec<Vec<usize>> = Vec::new();
    for (ti, &t) in upts.iter().enumerate() {
        let dom: Vec<usize> = (0..g.len()).filter(|&x| bits::has(t, g.s(x))).collect();
        let mut parent: Vec<usize> = (0..dom.len()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for a in 0..dom.len() {
            for b in a + 1..dom.len() {
                let agree = bits::iter(t).any(|e| {
                    matches!(
                        (og.restrict(Side::Source, e, dom[a]), og.restrict(Side::Source, e, dom[b])),
                        (Ok(x), Ok(y)) if x == y
                    )
                });
                if agree {
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    parent[ra.max(rb)] = ra.min(rb);
                }
            }
        }
        let mut local: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (a, &g) in dom.iter().enumerate() {
            let r = find(&mut parent, a);
            local.entry(r).or_default().push(g);
        }
        for (_, mem) in local {
            let rep = mem[0];
            germs.push((rep, ti));
            members.push(mem);
        }
    }
    let mut order: Vec<usize> = (0..germs.len()).collect();
    order.sort_by_key(|&i| germs[i]);
    let germs: Vec<(usize, usize)> = order.iter().map(|&i| germs[i]).collect();
    let members: Vec<Vec<usize>> = order.iter().map(|&i| members[i].clone()).collect();
    for (k, mem) in members.iter().enumerate() {
        for &x in mem {
            classes.insert((x, germs[k].1), k);
        }
    }
    let class_of = |x: usize, t: usize| classes.get(&(x, t)).copied();

    // β_h(U) = (h^≻ U h⁻¹^≻)^≺ inside the units.
    let beta = |h: usize, u: usize| -> Option<usize> {
        let b = og.rel.below(h);
        let img = mul(og, mul(og, b, upts[u]), inv(og, b));
        let t = up(og, img) & g.units();
        unit_spectrum.point_index(lower(t))
    };
    let fail = |what: String| Error::GroupoidLawViolation(what);
    let n = germs.len();
    let names: Vec<String> = germs
        .iter()
        .map(|&(x, t)| format!("[{},{}]", g.name(x), point_label(&og.rel, upts[t])))
        .collect();
    let mut prod = vec![vec![None; n]; n];
    let mut invs = vec![0; n];
    for a in 0..n {
        let (x, t) = germs[a];
        let bt = beta(x, t).ok_or_else(|| fail(format!("β of {} is not a point", names[a])))?;
        invs[a] = class_of(g.inv(x), bt).ok_or_else(|| fail(format!("no inverse germ for {}", names[a])))?;
        for b in 0..n {
            let (y, u) = germs[b];
            if beta(y, u) != Some(t) {
                continue;
            }
            let mut result = None;
            for &xx in &members[a] {
                for &yy in &members[b] {
                    if let Some(z) = g.mul(xx, yy) {
                        let c = class_of(z, u)
                            .ok_or_else(|| fail(format!("{}·{} leaves the germs", names[a], names[b])))?;
                        if result.is_some_and(|r| r != c) {
                            return Err(fail(format!("{}·{} depends on representatives", names[a], names[b])));
                        }
                        result = Some(c);
                    }
                }
            }
            prod[a][b] = Some(result.ok_or_else(|| fail(format!("{}·{} has no composable representatives", names[a], names[b])))?);
        }
    }
    let groupoid = FiniteGroupoid::new(names.clone(), prod, invs).map_err(|e| fail(e.to_string()))?;

    // Θ(g, N) for minimal neighbourhoods N inside O^{s(g)}.
    let mut gens = Vec::new();
    for x in 0..g.len() {
        for t in 0..upts.len() {
            if class_of(x, t).is_none() {
                continue;
            }
            let nb = unit_spectrum.space.nbhd(t);
            let theta = bits::iter(nb)
                .filter_map(|t2| class_of(x, t2))
                .fold(0, |acc, k| acc | bits::bit(k));
            gens.push(theta);
        }
    }
    let space = FiniteSpace::from_generators(names, &gens)?;
    let model = GroupoidModel::from_groupoid(&groupoid, space, Vec::new());

    // [g,T] ↦ (g^≻T)^≺, well defined over each class.
    let mut map = Vec::with_capacity(n);
    let mut well_defined = true;
    for (k, mem) in members.iter().enumerate() {
        let t = upts[germs[k].1];
        let imgs: Vec<Option<usize>> = mem
            .iter()
            .map(|&x| lt.spectrum.point_index(up(og, mul(og, og.rel.below(x), t))))
            .collect();
        well_defined &= imgs.iter().all(|i| *i == imgs[0]);
        map.push(imgs[0].ok_or_else(|| {
            Error::IsomorphismFailure(format!("{} maps outside the locally tight groupoid", model.names[k]))
        })?);
    }
    let isomorphism = well_defined && is_isomorphism(&model, &lt.model, &map);

    let mut transport = true;
    for x in 0..g.len() {
        let Some(sx) = unit_pos(g.s(x)) else { continue };
        for e in bits::iter(unit_rel.below(sx)) {
            let be = unit_rel.below(e);
            let fs: Vec<Set> = if bits::count(be) <= 6 {
                bits::subsets(be).collect()
            } else {
                bits::small_subsets(be, 2)
            };
            for d in bits::iter(be) {
                for &f in &fs {
                    let o = unit_spectrum.o_pair(d, e, f);
                    let theta = bits::iter(o)
                        .filter_map(|t| class_of(x, t))
                        .fold(0, |acc, k| acc | bits::bit(k));
                    let r = |u: usize| og.restrict(Side::Source, unit_index[u], x);
                    let (Ok(xd), Ok(xe)) = (r(d), r(e)) else {
                        transport = false;
                        continue;
                    };
                    let mut xf = 0;
                    for u in bits::iter(f) {
                        match r(u) {
                            Ok(q) => xf |= bits::bit(q),
                            Err(_) => transport = false,
                        }
                    }
                    transport &= image(&map, theta) == lt.spectrum.o_pair(xd, xe, xf);
                }
            }
        }
    }

    Ok(GermGroupoid { unit_rel, unit_index, unit_spectrum, germs, classes, model, map, isomorphism, transport, lt })
}

/// A family of named bisections of a groupoid model with a declared
/// partial product and inverse.
#[derive(Debug, Clone)]
pub struct BisectionFamily {
    pub x: GroupoidModel,
    pub named: Vec<(String, Set)>,
    pub product: Vec<(usize, usize, usize)>,
    pub inverse: Vec<(usize, usize)>,
}

/// Verdict of recovering a groupoid from a family of bisections.
#[derive(Debug, Clone)]
pub struct GroupoidRecovery {
    pub lt: LocallyTightGroupoid,
    /// `map[x]` is the point `T_x`.
    pub map: Vec<usize>,
    pub homeomorphism: bool,
    pub inverse_law: bool,
    /// Composability matches on both sides.
    pub composable_law: bool,
    /// `T_{xy} = (T_xT_y)^⋐`.
    pub product_law: bool,
}

impl GroupoidRecovery {
    pub fn holds(&self) -> bool {
        self.homeomorphism && self.inverse_law && self.composable_law && self.product_law
    }
}

/// The ordered groupoid formed by a bisection family under `⊆`.
pub fn family_groupoid(fam: &BisectionFamily) -> Result<OrderedGroupoid> {
    let xg = fam.x.groupoid()?;
    let sets: Vec<Set> = fam.named.iter().map(|(_, s)| *s).collect();
    let names: Vec<String> = fam.named.iter().map(|(n, _)| n.clone()).collect();
    let k = sets.len();
    for (i, &b) in sets.iter().enumerate() {
        if b == 0 || !fam.x.space.is_open(b) || !crate::groupoid::is_bisection(&xg, b) {
            return Err(Error::AxiomViolation(format!("`{}` is not a nonempty open bisection", names[i])));
        }
    }
    let mut prod = vec![vec![None; k]; k];
    for &(a, b, c) in &fam.product {
        if xg.set_mul(sets[a], sets[b]) != sets[c] {
            return Err(Error::AxiomViolation(format!(
                "declared product `{}`·`{}` = `{}` is not the setwise product",
                names[a], names[b], names[c]
            )));
        }
        prod[a][b] = Some(c);
    }
    let mut invs = vec![usize::MAX; k];
    for &(a, b) in &fam.inverse {
        if xg.set_inv(sets[a]) != sets[b] {
            return Err(Error::AxiomViolation(format!(
                "declared inverse of `{}` is not its setwise inverse",
                names[a]
            )));
        }
        invs[a] = b;
    }
    if let Some(a) = invs.iter().position(|&i| i == usize::MAX) {
        return Err(Error::AxiomViolation(format!("no inverse declared for `{}`", names[a])));
    }
    let g = FiniteGroupoid::new(names.clone(), prod, invs)
        .map_err(|e| Error::AxiomViolation(format!("family is not a groupoid: {e}")))?;
    let below = sets
        .iter()
        .map(|&q| {
            sets.iter()
                .enumerate()
                .filter(|(_, &p)| fam.x.space.compact_containment(p, q))
                .fold(0, |acc, (j, _)| acc | bits::bit(j))
        })
        .collect();
    let rel = TransRel::from_below(names, below, false)?;
    OrderedGroupoid::new(g, rel)
        .map_err(|e| Error::AxiomViolation(format!("family is not an ordered subgroupoid: {e}")))
}

pub fn groupoid_recovery(fam: &BisectionFamily) -> Result<GroupoidRecovery> {
    let og = family_groupoid(fam)?;
    let nf = NamedFamily::new(fam.x.space.clone(), fam.named.clone())?;
    let concrete = check_concrete_clbp(&nf);
    if !concrete.all() {
        return Err(Error::AxiomViolation(format!(
            "family fails the concrete axioms: {:?}",
            concrete.witnesses
        )));
    }
    let lt = locally_tight_groupoid(&og)?;
    let x = &fam.x;
    let map = (0..x.len())
        .map(|p| {
            lt.spectrum.point_index(nf.point_filter(p)).ok_or_else(|| {
                Error::IsomorphismFailure(format!("T_{} is not a locally tight filter", x.names[p]))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let homeomorphism = is_homeomorphism(&x.space, &lt.model.space, &map);
    let n = x.len();
    let inverse_law = (0..n).all(|p| map[x.inv[p]] == lt.model.inv[map[p]]);
    let composable_law = (0..n).all(|p| {
        (0..n).all(|q| x.prod[p][q].is_some() == lt.model.prod[map[p]][map[q]].is_some())
    });
    let product_law = (0..n).all(|p| {
        (0..n).all(|q| match x.prod[p][q] {
            Some(pq) => lt.model.prod[map[p]][map[q]] == Some(map[pq]),
            None => true,
        })
    });
    Ok(GroupoidRecovery { lt, map, homeomorphism, inverse_law, composable_law, product_law })
}

/// The pair groupoid on `{1..n}`, discrete, with every nonempty partial
/// injection as a bisection and the product of bisections defined when
/// sources and ranges agree.
pub fn pair_bisection_family(n: usize) -> Result<BisectionFamily> {
    let x = pair_model(n)?;
    let g = x.groupoid()?;
    let mut sets: Vec<Set> = bits::subsets(g.full())
        .filter(|&b| b != 0 && crate::groupoid::is_bisection(&g, b))
        .collect();
    sets.sort_by(|&a, &b| bits::count(a).cmp(&bits::count(b)).then(a.cmp(&b)));
    let named: Vec<(String, Set)> = sets
        .iter()
        .map(|&b| {
            let mut v: Vec<&str> = bits::iter(b).map(|e| g.name(e)).collect();
            v.sort();
            (v.join(""), b)
        })
        .collect();
    let pos = |s: Set| sets.iter().position(|&b| b == s);
    let mut product = Vec::new();
    for (i, &a) in sets.iter().enumerate() {
        for (j, &b) in sets.iter().enumerate() {
            if g.s_img(a) == g.r_img(b) {
                let c = pos(g.set_mul(a, b)).expect("partial injections compose");
                product.push((i, j, c));
            }
        }
    }
    let inverse = sets
        .iter()
        .enumerate()
        .map(|(i, &a)| (i, pos(g.set_inv(a)).expect("inverse is a bisection")))
        .collect();
    Ok(BisectionFamily { x, named, product, inverse })
}
