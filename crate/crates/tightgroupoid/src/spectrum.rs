//! Filters, tight and locally tight subsets, the two spectra as finite
//! spaces, and the equivalence theorems relating them to the axioms.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::bits::{self, Set, CAP};
use crate::error::{Error, Result};
pub use crate::laws::LawReport;
use crate::order::{classify, TransRel};
use crate::topology::FiniteSpace;

/// Largest carrier for which subsets are enumerated exhaustively.
pub const BRUTE_CAP: usize = 20;

/// Largest family of distinct down-sets the reductions will enumerate.
pub const DOWNSET_CAP: usize = 1 << 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FilterClass {
    pub round_upset: bool,
    pub directed: bool,
    pub filter: bool,
    pub centred: bool,
    pub ultrafilter: bool,
    pub tight: bool,
    pub locally_tight: bool,
}

pub fn is_directed(rel: &TransRel, t: Set) -> bool {
    bits::iter(t).all(|a| {
        bits::iter(t).all(|b| rel.below(a) & rel.below(b) & t != 0)
    })
}

/// A nonempty directed up-set.
pub fn is_filter(rel: &TransRel, t: Set) -> bool {
    t != 0 && bits::within(rel.up(t), t) && is_directed(rel, t)
}

/// Every finite subset has a nonempty formal meet; on a finite carrier this
/// is the meet of the whole set.
pub fn is_centred(rel: &TransRel, t: Set) -> bool {
    rel.meet(t) != 0
}

/// All filters. A nonempty finite filter is `s^≺` for some `s ≺ s`.
pub fn filters(rel: &TransRel) -> Vec<Set> {
    let set: BTreeSet<Set> = (0..rel.len())
        .filter(|&s| rel.precedes(s, s))
        .map(|s| rel.above(s))
        .collect();
    sort_points(rel, set.into_iter().collect())
}

pub fn is_ultrafilter(rel: &TransRel, t: Set) -> bool {
    is_filter(rel, t) && filters(rel).iter().all(|&f| f == t || !bits::within(t, f))
}

/// `T` is tight inside the down-closed `universe`.
pub fn tight_in(rel: &TransRel, universe: Set, t: Set) -> bool {
    bits::within(t, universe)
        && rel.up(t) & universe == t
        && !rel.compact_cover(universe & rel.meet(t), universe & !t)
}

pub fn is_tight(rel: &TransRel, t: Set) -> bool {
    tight_in(rel, rel.full(), t)
}

pub fn is_locally_tight(rel: &TransRel, t: Set) -> bool {
    bits::iter(t).all(|x| tight_in(rel, rel.below(x), t & rel.below(x)))
}

pub fn subset_class(rel: &TransRel, t: Set) -> FilterClass {
    let round_upset = rel.up(t) == t;
    let directed = is_directed(rel, t);
    let filter = is_filter(rel, t);
    FilterClass {
        round_upset,
        directed,
        filter,
        centred: is_centred(rel, t),
        ultrafilter: filter && is_ultrafilter(rel, t),
        tight: is_tight(rel, t),
        locally_tight: is_locally_tight(rel, t),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointKind {
    Filters,
    Ultrafilters,
    TightSubsets,
    LocallyTightFilters,
    MaxCentredFilters,
}

fn require_round(rel: &TransRel) -> Result<()> {
    match (0..rel.len()).find(|&p| rel.below(p) == 0) {
        Some(p) => Err(Error::NotRound(rel.name(p).to_string())),
        None => Ok(()),
    }
}

fn require_brute(rel: &TransRel) -> Result<()> {
    if rel.len() > BRUTE_CAP {
        return Err(Error::TooLarge { size: rel.len(), cap: BRUTE_CAP });
    }
    Ok(())
}

/// Sorts subsets by their sorted member names.
pub fn sort_points(rel: &TransRel, mut pts: Vec<Set>) -> Vec<Set> {
    let key = |t: &Set| {
        let mut v = rel.names_of(*t);
        v.sort();
        v
    };
    pts.sort_by_key(key);
    pts.dedup();
    pts
}

pub fn enumerate_points(rel: &TransRel, kind: PointKind) -> Result<Vec<Set>> {
    require_round(rel)?;
    let fs = filters(rel);
    let out = match kind {
        PointKind::Filters => fs,
        PointKind::Ultrafilters => {
            let ultra = fs
                .iter()
                .copied()
                .filter(|&t| fs.iter().all(|&f| f == t || !bits::within(t, f)))
                .collect();
            sort_points(rel, ultra)
        }
        PointKind::LocallyTightFilters => fs
            .into_iter()
            .filter(|&t| is_locally_tight(rel, t))
            .collect(),
        PointKind::TightSubsets => {
            require_brute(rel)?;
            let all = bits::subsets(rel.full()).filter(|&t| is_tight(rel, t)).collect();
            sort_points(rel, all)
        }
        PointKind::MaxCentredFilters => {
            require_brute(rel)?;
            let out = fs
                .into_iter()
                .filter(|&t| {
                    bits::subsets(rel.full() & !t).all(|extra| {
                        let s = t | extra;
                        extra == 0 || rel.up(s) != s || !is_centred(rel, s)
                    })
                })
                .collect();
            sort_points(rel, out)
        }
    };
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    Tight,
    LocallyTight,
}

impl Flavor {
    pub fn as_str(self) -> &'static str {
        match self {
            Flavor::Tight => "tight",
            Flavor::LocallyTight => "locally_tight",
        }
    }
}

impl FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tight" => Ok(Flavor::Tight),
            "locally_tight" | "locally-tight" => Ok(Flavor::LocallyTight),
            _ => Err(Error::Format(format!("unknown spectrum kind `{s}`"))),
        }
    }
}

/// A named basic open `O^{p,q}_F` of the locally tight spectrum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairOpen {
    pub p: usize,
    pub q: usize,
    pub f: Set,
    pub points: Set,
}

/// A spectrum as a finite space together with its named generating opens.
#[derive(Debug, Clone)]
pub struct SpectrumSpace {
    pub flavor: Flavor,
    pub rel: TransRel,
    pub points: Vec<Set>,
    pub generators: Vec<(String, Set)>,
    pub space: FiniteSpace,
}

pub fn point_label(rel: &TransRel, t: Set) -> String {
    let mut v = rel.names_of(t);
    v.sort();
    format!("{{{}}}", v.join(","))
}

fn set_label(rel: &TransRel, s: Set) -> String {
    let mut v = rel.names_of(s);
    v.sort();
    v.join(",")
}

impl SpectrumSpace {
    pub fn point_index(&self, t: Set) -> Option<usize> {
        self.points.iter().position(|&p| p == t)
    }

    pub fn label(&self, i: usize) -> String {
        point_label(&self.rel, self.points[i])
    }

    fn collect(&self, pred: impl Fn(Set) -> bool) -> Set {
        self.points
            .iter()
            .enumerate()
            .filter(|(_, &t)| pred(t))
            .fold(0, |acc, (i, _)| acc | bits::bit(i))
    }

    /// `O^p`, the points containing `p`.
    pub fn o(&self, p: usize) -> Set {
        self.collect(|t| bits::has(t, p))
    }

    /// `O^{p,q}_F = {T : p ∈ T, F 𝖢 q^≻∖T}`.
    pub fn o_pair(&self, p: usize, q: usize, f: Set) -> Set {
        let rel = &self.rel;
        self.collect(|t| bits::has(t, p) && rel.compact_cover(f, rel.below(q) & !t))
    }

    /// `N^p_R = {T : p ∈ T, R 𝖢 P∖T}`.
    pub fn n(&self, p: usize, r: Set) -> Set {
        let rel = &self.rel;
        self.collect(|t| bits::has(t, p) && rel.compact_cover(r, !t & rel.full()))
    }

    pub fn pair_name(&self, po: &PairOpen) -> String {
        format!(
            "O^{{{},{}}}_{{{}}}",
            self.rel.name(po.p),
            self.rel.name(po.q),
            set_label(&self.rel, po.f)
        )
    }

    /// The named pair basis: every `p, F ≺ q`, with all `F` when `q^≻` has
    /// at most ten members and `|F| ≤ 2` otherwise.
    pub fn pair_opens(&self) -> Vec<PairOpen> {
        let rel = &self.rel;
        let mut out = Vec::new();
        for q in 0..rel.len() {
            let bq = rel.below(q);
            let fs: Vec<Set> = if bits::count(bq) <= 10 {
                bits::subsets(bq).collect()
            } else {
                bits::small_subsets(bq, 2)
            };
            for p in bits::iter(bq) {
                for &f in &fs {
                    out.push(PairOpen { p, q, f, points: self.o_pair(p, q, f) });
                }
            }
        }
        out
    }

    /// The largest `F ≺ t` with `F 𝖢 t^≻∖T`.
    pub fn max_f(&self, t: usize, point: Set) -> Set {
        let rel = &self.rel;
        let rest = rel.below(t) & !point;
        bits::iter(rel.below(t))
            .filter(|&f| rel.compact_cover(bits::bit(f), rest))
            .fold(0, |acc, f| acc | bits::bit(f))
    }

    pub fn ultrafilter_points(&self) -> Set {
        self.collect(|t| is_ultrafilter(&self.rel, t))
    }
}

/// `ℒ(P)`: nonempty locally tight filters, generated by `O^p` and `O^p_r`
/// for `{r} 𝖢 {p}`. Larger `R` add nothing, as `O^p_R = ⋂_{r∈R} O^p_r`.
pub fn locally_tight_spectrum(rel: &TransRel) -> Result<SpectrumSpace> {
    let report = classify(rel);
    if !(report.round && report.local_bi_pseudobasis) {
        return Err(Error::AxiomViolation(format!(
            "locally tight spectrum needs a local bi-pseudobasis: {:?}",
            report.witnesses
        )));
    }
    let points = enumerate_points(rel, PointKind::LocallyTightFilters)?;
    let mut spec = SpectrumSpace {
        flavor: Flavor::LocallyTight,
        rel: rel.clone(),
        points,
        generators: Vec::new(),
        space: FiniteSpace::from_generators(Vec::new(), &[])?,
    };
    let mut gens = Vec::new();
    for p in 0..rel.len() {
        gens.push((format!("O^{{{}}}", rel.name(p)), spec.o(p)));
        for r in 0..rel.len() {
            if rel.compact_cover(bits::bit(r), bits::bit(p)) {
                let set = spec.collect(|t| {
                    bits::has(t, p) && rel.compact_cover(bits::bit(r), rel.below(p) & !t)
                });
                gens.push((format!("O^{{{}}}_{{{}}}", rel.name(p), rel.name(r)), set));
            }
        }
    }
    finish(&mut spec, gens)?;
    Ok(spec)
}

/// `𝒯(P)`: all tight subsets, generated by `N^p` and `N^p_r`.
pub fn tight_spectrum(rel: &TransRel) -> Result<SpectrumSpace> {
    let report = classify(rel);
    if !(report.round && report.pseudobasis) {
        return Err(Error::AxiomViolation(format!(
            "tight spectrum needs a pseudobasis: {:?}",
            report.witnesses
        )));
    }
    let points = enumerate_points(rel, PointKind::TightSubsets)?;
    let mut spec = SpectrumSpace {
        flavor: Flavor::Tight,
        rel: rel.clone(),
        points,
        generators: Vec::new(),
        space: FiniteSpace::from_generators(Vec::new(), &[])?,
    };
    let mut gens = Vec::new();
    for p in 0..rel.len() {
        gens.push((format!("N^{{{}}}", rel.name(p)), spec.n(p, 0)));
        for r in 0..rel.len() {
            gens.push((
                format!("N^{{{}}}_{{{}}}", rel.name(p), rel.name(r)),
                spec.n(p, bits::bit(r)),
            ));
        }
    }
    finish(&mut spec, gens)?;
    Ok(spec)
}

fn finish(spec: &mut SpectrumSpace, gens: Vec<(String, Set)>) -> Result<()> {
    if spec.points.len() > CAP {
        return Err(Error::TooLarge { size: spec.points.len(), cap: CAP });
    }
    let names = (0..spec.points.len()).map(|i| spec.label(i)).collect();
    let sets: Vec<Set> = gens.iter().map(|(_, s)| *s).collect();
    spec.space = FiniteSpace::from_generators(names, &sets)?;
    spec.generators = gens;
    Ok(())
}

/// Distinct values of `Q^≻` for `Q ⊆ within`, each with a representative `Q`.
pub fn down_sets(rel: &TransRel, within: Set) -> Result<Vec<(Set, Set)>> {
    let mut seen: BTreeMap<Set, Set> = BTreeMap::new();
    seen.insert(0, 0);
    let mut frontier = vec![(0, 0)];
    while let Some((d, q)) = frontier.pop() {
        for x in bits::iter(within) {
            let nd = d | rel.below(x);
            if let std::collections::btree_map::Entry::Vacant(e) = seen.entry(nd) {
                e.insert(q | bits::bit(x));
                if seen.len() > DOWNSET_CAP {
                    return Err(Error::TooLarge { size: seen.len(), cap: DOWNSET_CAP });
                }
                frontier.push((nd, q | bits::bit(x)));
            }
        }
    }
    Ok(seen.into_iter().collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem {
    Meet,
    Trapping,
    Hausdorff,
}

impl Theorem {
    pub fn as_str(self) -> &'static str {
        match self {
            Theorem::Meet => "meet",
            Theorem::Trapping => "trapping",
            Theorem::Hausdorff => "hausdorff",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "meet" => Ok(Theorem::Meet),
            "trapping" => Ok(Theorem::Trapping),
            "hausdorff" => Ok(Theorem::Hausdorff),
            _ => Err(Error::Format(format!("unknown theorem `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub theorem: Theorem,
    pub conditions: Vec<(String, bool)>,
    pub consistent: bool,
}

impl EquivalenceReport {
    fn new(theorem: Theorem, conditions: Vec<(&str, bool)>) -> Self {
        let consistent = conditions.windows(2).all(|w| w[0].1 == w[1].1);
        EquivalenceReport {
            theorem,
            conditions: conditions.into_iter().map(|(n, b)| (n.to_string(), b)).collect(),
            consistent,
        }
    }
}

pub fn verify_equivalence(rel: &TransRel, theorem: Theorem) -> Result<EquivalenceReport> {
    let report = classify(rel);
    let ok = match theorem {
        Theorem::Meet => report.round && report.pseudobasis,
        _ => report.round && report.local_bi_pseudobasis,
    };
    if !ok {
        return Err(Error::PreconditionFailed(format!(
            "{theorem} theorem needs {}",
            if theorem == Theorem::Meet { "a pseudobasis" } else { "a local bi-pseudobasis" }
        )));
    }
    let conds = match theorem {
        Theorem::Meet => vec![
            ("bi_pseudobasis", report.bi_pseudobasis),
            ("tight_implies_filter", tight_implies_filter(rel)?),
            ("finite_meet_preserving", finite_meet_preserving(rel)?),
            ("c_meet_preserving", c_meet_preserving(rel)?),
            ("finite_c_meet_preserving", finite_c_meet_preserving(rel)?),
        ],
        Theorem::Trapping => {
            let spec = locally_tight_spectrum(rel)?;
            vec![
                ("o_p_basis", o_p_basis(&spec)),
                ("locally_tight_implies_ultrafilter", locally_tight_implies_ultrafilter(&spec)),
                ("trapping", trapping(rel)),
                ("c_trapping", c_trapping(rel)?),
            ]
        }
        Theorem::Hausdorff => {
            let spec = locally_tight_spectrum(rel)?;
            let tight = tight_spectrum(rel)?;
            vec![
                ("spectra_coincide", spectra_coincide(&spec, &tight)),
                ("locally_tight_hausdorff", spec.space.is_hausdorff()),
                ("bi_pseudobasis", report.bi_pseudobasis),
            ]
        }
    };
    Ok(EquivalenceReport::new(theorem, conds))
}

/// Every tight subset is a filter.
pub fn tight_implies_filter(rel: &TransRel) -> Result<bool> {
    require_brute(rel)?;
    Ok(bits::subsets(rel.full()).all(|t| !is_tight(rel, t) || is_filter(rel, t)))
}

/// `∅ ≠ G ⊆ F^≺ ⇒ F̂ 𝖢 Ĝ`; for fixed `F` the hardest `G` is `F^≺`.
pub fn finite_meet_preserving(rel: &TransRel) -> Result<bool> {
    require_brute(rel)?;
    Ok(bits::subsets(rel.full()).all(|f| {
        let g = rel.up(f);
        g == 0 || rel.compact_cover(rel.meet(f), rel.meet(g))
    }))
}

/// `Q 𝖢 R, Q 𝖢 S ⇒ Q 𝖢 R^≻ ∩ S^≻`; the hardest `Q` is the largest one
/// covered by both.
pub fn c_meet_preserving(rel: &TransRel) -> Result<bool> {
    let reps: Vec<Set> = down_sets(rel, rel.full())?.into_iter().map(|(_, q)| q).collect();
    let cov: Vec<Set> = reps.iter().map(|&r| rel.covered_by(r)).collect();
    for (i, &r) in reps.iter().enumerate() {
        for (j, &s) in reps.iter().enumerate().skip(i) {
            if !rel.compact_cover(cov[i] & cov[j], rel.down(r) & rel.down(s)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// For nonempty finite `Φ, Ψ` with each `R ∈ Ψ` covered by some `Q ∈ Φ`,
/// `⋂ Q^≻ 𝖢 ⋂ R^≻`. For fixed `Φ` the hardest `Ψ` takes every covered `R`,
/// so it suffices to check all intersections of pairs `(Q^≻, K_Q)` with
/// `K_Q = ⋂ {R^≻ : Q 𝖢 R}`.
pub fn finite_c_meet_preserving(rel: &TransRel) -> Result<bool> {
    let reps = down_sets(rel, rel.full())?;
    let mut base = BTreeSet::new();
    for &(dq, q) in &reps {
        let covered: Vec<Set> = reps
            .iter()
            .filter(|&&(_, r)| rel.compact_cover(q, r))
            .map(|&(dr, _)| dr)
            .collect();
        if covered.is_empty() {
            continue;
        }
        let k = covered.iter().fold(rel.full(), |acc, &d| acc & d);
        base.insert((dq, k));
    }
    let base: Vec<(Set, Set)> = base.into_iter().collect();
    let mut all: BTreeSet<(Set, Set)> = base.iter().copied().collect();
    let mut frontier: Vec<(Set, Set)> = base.clone();
    while let Some((x, k)) = frontier.pop() {
        for &(y, l) in &base {
            let pair = (x & y, k & l);
            if all.insert(pair) {
                if all.len() > DOWNSET_CAP {
                    return Err(Error::TooLarge { size: all.len(), cap: DOWNSET_CAP });
                }
                frontier.push(pair);
            }
        }
    }
    Ok(all.iter().all(|&(x, k)| rel.compact_cover(x, k)))
}

/// `(O^p)` is a basis: each minimal neighbourhood is some `O^p`.
pub fn o_p_basis(spec: &SpectrumSpace) -> bool {
    (0..spec.points.len()).all(|i| {
        bits::iter(spec.points[i]).any(|p| spec.o(p) == spec.space.nbhd(i))
    })
}

pub fn locally_tight_implies_ultrafilter(spec: &SpectrumSpace) -> bool {
    spec.points.iter().all(|&t| is_ultrafilter(&spec.rel, t))
}

/// `q' ≺ q ≺ p, r' ≺ r ≺ p ⇒ q'^≻ ∩ r^⊥ 𝖢 q^≻ ∩ r'^⊥`.
pub fn trapping(rel: &TransRel) -> bool {
    (0..rel.len()).all(|p| {
        bits::iter(rel.below(p)).all(|q| {
            bits::iter(rel.below(p)).all(|r| {
                let perp_r = rel.perp(bits::bit(r));
                bits::iter(rel.below(q)).all(|qq| {
                    bits::iter(rel.below(r)).all(|rr| {
                        rel.compact_cover(
                            rel.below(qq) & perp_r,
                            rel.below(q) & rel.perp(bits::bit(rr)),
                        )
                    })
                })
            })
        })
    })
}

/// `Q' 𝖢 Q ≺ p, R' 𝖢 R ≺ p ⇒ Q'^≻ ∩ R^⊥ 𝖢 Q^≻ ∩ R'^⊥`; the hardest
/// `Q'` and `R'` are the largest sets covered by `Q` and `R`.
pub fn c_trapping(rel: &TransRel) -> Result<bool> {
    for p in 0..rel.len() {
        let reps: Vec<Set> = down_sets(rel, rel.below(p))?.into_iter().map(|(_, q)| q).collect();
        let cov: Vec<Set> = reps.iter().map(|&r| rel.covered_by(r)).collect();
        for (i, &q) in reps.iter().enumerate() {
            let left = rel.down(cov[i]);
            for (j, &r) in reps.iter().enumerate() {
                if !rel.compact_cover(left & rel.perp(r), rel.down(q) & rel.perp(cov[j])) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Same points and the same topology.
pub fn spectra_coincide(lt: &SpectrumSpace, t: &SpectrumSpace) -> bool {
    if lt.points.len() != t.points.len() {
        return false;
    }
    let map: Option<Vec<usize>> = lt.points.iter().map(|&p| t.point_index(p)).collect();
    match map {
        Some(m) => crate::topology::is_homeomorphism(&lt.space, &t.space, &m),
        None => false,
    }
}

/// Checks the structural laws of the locally tight spectrum of a local
/// bi-pseudobasis, plus the tight-spectrum laws that apply to `rel`.
pub fn spectrum_laws(rel: &TransRel) -> Result<LawReport> {
    let axioms = classify(rel);
    let spec = locally_tight_spectrum(rel)?;
    let sp = &spec.space;
    let mut rep = LawReport::default();

    let ultra: Vec<Set> = enumerate_points(rel, PointKind::Ultrafilters)?;
    rep.push("ultrafilters_locally_tight", ultra.iter().all(|&u| is_locally_tight(rel, u)));

    let ultra_pts = spec.ultrafilter_points();
    rep.push(
        "ultrafilters_dense",
        (0..spec.points.len()).all(|i| sp.nbhd(i) & ultra_pts != 0),
    );
    rep.push(
        "ultrafilter_neighbourhood_base",
        bits::iter(ultra_pts).all(|i| bits::iter(spec.points[i]).any(|u| spec.o(u) == sp.nbhd(i))),
    );

    rep.push(
        "pair_neighbourhood_base",
        spec.points.iter().enumerate().all(|(i, &t)| {
            bits::iter(t).all(|top| {
                let f = spec.max_f(top, t);
                bits::iter(rel.below(top) & t).any(|p| spec.o_pair(p, top, f) == sp.nbhd(i))
            })
        }),
    );
    rep.push(
        "pair_basis",
        spec.generators.iter().all(|&(_, w)| {
            bits::iter(w).all(|i| {
                let t = spec.points[i];
                bits::iter(t).any(|q| {
                    let f = spec.max_f(q, t);
                    bits::iter(rel.below(q) & t).any(|p| {
                        let o = spec.o_pair(p, q, f);
                        bits::has(o, i) && bits::within(o, w)
                    })
                })
            })
        }),
    );

    let mut transfer = true;
    let mut hausdorff_o = true;
    for p in 0..rel.len() {
        hausdorff_o &= sp.hausdorff_subspace(spec.o(p));
        for q in bits::iter(rel.below(p)) {
            for r in bits::iter(rel.below(p)) {
                let c = rel.compact_cover(bits::bit(q), bits::bit(r));
                transfer &= c == sp.compact_containment(spec.o(q), spec.o(r));
            }
        }
    }
    rep.push("compact_containment_transfer", transfer);
    rep.push("o_p_hausdorff", hausdorff_o);
    let props = sp.props();
    rep.push("locally_compact", props.locally_compact);
    rep.push("locally_hausdorff", props.locally_hausdorff);

    let filters_ok = filters(rel).into_iter().all(|t| {
        let lt = is_locally_tight(rel, t);
        bits::iter(t).all(|x| tight_in(rel, rel.below(x), t & rel.below(x)) == lt)
    });
    rep.push("filter_initial_segment", filters_ok);

    if rel.len() <= BRUTE_CAP {
        let tight = tight_spectrum(rel)?;
        let mc = enumerate_points(rel, PointKind::MaxCentredFilters)?;
        let mc_pts: Option<Vec<usize>> = mc.iter().map(|&t| tight.point_index(t)).collect();
        let dense = match mc_pts {
            Some(idx) => {
                let s = bits::from_indices(idx);
                (0..tight.points.len()).all(|i| tight.space.nbhd(i) & s != 0)
            }
            None => false,
        };
        rep.push("max_centred_dense", dense);

        if axioms.bi_pseudobasis {
            let local_global = (0..rel.len()).all(|p| {
                bits::subsets(rel.below(p)).all(|t| {
                    t == 0 || !tight_in(rel, rel.below(p), t) || is_tight(rel, rel.up(t) | t)
                })
            });
            rep.push("local_to_global", local_global);
        }
    }
    Ok(rep)
}
