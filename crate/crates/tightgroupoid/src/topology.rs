//! Finite topological spaces, compact containment, the concrete local
//! bi-pseudobasis axioms and recovery of a space from its named opens.

use std::collections::BTreeMap;

use crate::bits::{self, Set, CAP};
use crate::error::{Error, Result};
use crate::order::{classify, TransRel};
use crate::spectrum::{self, SpectrumSpace};

/// Largest open family [`FiniteSpace::opens`] will materialise.
pub const OPEN_CAP: usize = 1 << 16;

/// A finite space stored by the minimal open neighbourhood of each point.
///
/// Every finite topology is determined by these: a set is open iff it
/// contains the minimal neighbourhood of each of its points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSpace {
    names: Vec<String>,
    nbhd: Vec<Set>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpaceProps {
    pub hausdorff: bool,
    pub locally_hausdorff: bool,
    pub locally_compact: bool,
}

impl FiniteSpace {
    /// The topology generated by `gens` as a subbasis, with the whole space
    /// added as an open.
    pub fn from_generators(names: Vec<String>, gens: &[Set]) -> Result<Self> {
        check_names(&names)?;
        let full = bits::full(names.len());
        let nbhd = (0..names.len())
            .map(|x| {
                gens.iter()
                    .filter(|&&g| bits::has(g, x))
                    .fold(full, |acc, &g| acc & g)
            })
            .collect();
        Ok(FiniteSpace { names, nbhd })
    }

    pub fn from_basis<S: AsRef<str>>(points: &[S], basis: &[Vec<S>]) -> Result<Self> {
        let names: Vec<String> = points.iter().map(|p| p.as_ref().to_string()).collect();
        check_names(&names)?;
        let index: BTreeMap<&str, usize> =
            names.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
        let mut gens = Vec::with_capacity(basis.len());
        for b in basis {
            let mut s = 0;
            for p in b {
                let i = index
                    .get(p.as_ref())
                    .ok_or_else(|| Error::UnknownPoint(p.as_ref().to_string()))?;
                s |= bits::bit(*i);
            }
            gens.push(s);
        }
        Self::from_generators(names, &gens)
    }

    pub fn discrete(names: Vec<String>) -> Result<Self> {
        let gens: Vec<Set> = (0..names.len()).map(bits::bit).collect();
        Self::from_generators(names, &gens)
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

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownPoint(name.to_string()))
    }

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

    /// The smallest open set containing `x`.
    #[inline]
    pub fn nbhd(&self, x: usize) -> Set {
        self.nbhd[x]
    }

    pub fn is_open(&self, w: Set) -> bool {
        bits::iter(w).all(|x| bits::within(self.nbhd[x], w))
    }

    pub fn interior(&self, w: Set) -> Set {
        bits::iter(w)
            .filter(|&x| bits::within(self.nbhd[x], w))
            .fold(0, |acc, x| acc | bits::bit(x))
    }

    /// Every open set, sorted; errors past [`OPEN_CAP`].
    pub fn opens(&self) -> Result<Vec<Set>> {
        let mut seen = std::collections::BTreeSet::new();
        seen.insert(0);
        let mut frontier = vec![0];
        while let Some(w) = frontier.pop() {
            for x in 0..self.len() {
                let v = w | self.nbhd[x];
                if seen.insert(v) {
                    if seen.len() > OPEN_CAP {
                        return Err(Error::TooLarge { size: seen.len(), cap: OPEN_CAP });
                    }
                    frontier.push(v);
                }
            }
        }
        seen.insert(self.full());
        Ok(seen.into_iter().collect())
    }

    pub fn is_hausdorff(&self) -> bool {
        self.hausdorff_subspace(self.full())
    }

    /// Whether `s` is Hausdorff in the subspace topology.
    pub fn hausdorff_subspace(&self, s: Set) -> bool {
        let pts: Vec<usize> = bits::iter(s).collect();
        pts.iter().enumerate().all(|(i, &x)| {
            pts[i + 1..]
                .iter()
                .all(|&y| self.nbhd[x] & self.nbhd[y] & s == 0)
        })
    }

    /// Some open neighbourhood of each point is a Hausdorff subspace. The
    /// minimal neighbourhood is the only candidate needed, as subspaces of
    /// Hausdorff spaces are Hausdorff.
    pub fn locally_hausdorff(&self) -> bool {
        (0..self.len()).all(|x| self.hausdorff_subspace(self.nbhd[x]))
    }

    /// Every open cover of `c` by minimal neighbourhoods has a finite
    /// subcover; this is how compactness is witnessed on a finite carrier.
    pub fn is_compact(&self, c: Set) -> bool {
        let mut covered = 0;
        for x in bits::iter(c) {
            if !bits::has(covered, x) {
                covered |= self.nbhd[x];
            }
        }
        bits::within(c, covered)
    }

    /// Each point has a neighbourhood base of compact sets.
    pub fn locally_compact(&self) -> bool {
        (0..self.len()).all(|x| {
            let u = self.nbhd[x];
            self.is_compact(u) && bits::within(u, self.interior(u))
        })
    }

    pub fn props(&self) -> SpaceProps {
        SpaceProps {
            hausdorff: self.is_hausdorff(),
            locally_hausdorff: self.locally_hausdorff(),
            locally_compact: self.locally_compact(),
        }
    }

    /// `O ⋐ N` by searching for a compact `C` with `O ⊆ C ⊆ N`.
    pub fn compact_containment(&self, o: Set, n: Set) -> bool {
        if !bits::within(o, n) {
            return false;
        }
        bits::subsets(n & !o).any(|extra| self.is_compact(o | extra))
    }

    /// `O ⋐ N` using that every subset of a finite space is compact.
    pub fn compact_containment_shortcut(&self, o: Set, n: Set) -> bool {
        bits::within(o, n)
    }

    /// The subspace on `s`, reindexed in increasing order.
    pub fn subspace(&self, s: Set) -> FiniteSpace {
        let keep: Vec<usize> = bits::iter(s).collect();
        let names = keep.iter().map(|&i| self.names[i].clone()).collect();
        let nbhd = keep
            .iter()
            .map(|&i| {
                keep.iter()
                    .enumerate()
                    .filter(|(_, &j)| bits::has(self.nbhd[i], j))
                    .fold(0, |acc, (k, _)| acc | bits::bit(k))
            })
            .collect();
        FiniteSpace { names, nbhd }
    }
}

fn check_names(names: &[String]) -> Result<()> {
    if names.len() > CAP {
        return Err(Error::TooLarge { size: names.len(), cap: CAP });
    }
    let mut seen = std::collections::BTreeSet::new();
    for n in names {
        if n.is_empty() || !seen.insert(n) {
            return Err(Error::DuplicateElement(n.clone()));
        }
    }
    Ok(())
}

pub fn image(map: &[usize], s: Set) -> Set {
    bits::iter(s).fold(0, |acc, x| acc | bits::bit(map[x]))
}

/// Continuity of `map` checked on minimal neighbourhoods.
pub fn is_continuous(src: &FiniteSpace, dst: &FiniteSpace, map: &[usize]) -> bool {
    (0..src.len()).all(|x| bits::within(image(map, src.nbhd(x)), dst.nbhd(map[x])))
}

/// Images of opens are open.
pub fn is_open_map(src: &FiniteSpace, dst: &FiniteSpace, map: &[usize]) -> bool {
    (0..src.len()).all(|x| dst.is_open(image(map, src.nbhd(x))))
}

pub fn is_bijection(map: &[usize], target_len: usize) -> bool {
    map.len() == target_len && image(map, bits::full(map.len())) == bits::full(target_len)
}

/// A bijection transporting minimal neighbourhoods exactly.
pub fn is_homeomorphism(src: &FiniteSpace, dst: &FiniteSpace, map: &[usize]) -> bool {
    is_bijection(map, dst.len())
        && (0..src.len()).all(|x| image(map, src.nbhd(x)) == dst.nbhd(map[x]))
}

/// Named nonempty opens of a space.
#[derive(Debug, Clone)]
pub struct NamedFamily {
    pub space: FiniteSpace,
    pub names: Vec<String>,
    pub sets: Vec<Set>,
}

impl NamedFamily {
    pub fn new(space: FiniteSpace, named: Vec<(String, Set)>) -> Result<Self> {
        let mut names = Vec::with_capacity(named.len());
        let mut sets = Vec::with_capacity(named.len());
        let mut seen = std::collections::BTreeSet::new();
        for (n, s) in named {
            if !seen.insert(n.clone()) {
                return Err(Error::DuplicateElement(n));
            }
            if s == 0 {
                return Err(Error::BadNamedSet(n, "empty".into()));
            }
            if !bits::within(s, space.full()) || !space.is_open(s) {
                return Err(Error::BadNamedSet(n, "not open".into()));
            }
            names.push(n);
            sets.push(s);
        }
        if names.len() > CAP {
            return Err(Error::TooLarge { size: names.len(), cap: CAP });
        }
        Ok(NamedFamily { space, names, sets })
    }

    /// Indices of the named sets containing `x`.
    pub fn point_filter(&self, x: usize) -> Set {
        self.sets
            .iter()
            .enumerate()
            .filter(|(_, &s)| bits::has(s, x))
            .fold(0, |acc, (i, _)| acc | bits::bit(i))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConcreteReport {
    pub locally_hausdorff: bool,
    pub cover: bool,
    pub point_filter: bool,
    pub dense: bool,
    pub separating: bool,
    pub witnesses: BTreeMap<String, Vec<String>>,
}

impl ConcreteReport {
    pub fn all(&self) -> bool {
        self.locally_hausdorff && self.cover && self.point_filter && self.dense && self.separating
    }
}

pub fn check_concrete_clbp(fam: &NamedFamily) -> ConcreteReport {
    let sp = &fam.space;
    let mut witnesses = BTreeMap::new();

    let locally_hausdorff = match fam.sets.iter().position(|&s| !sp.hausdorff_subspace(s)) {
        Some(i) => {
            witnesses.insert("locally_hausdorff".into(), vec![fam.names[i].clone()]);
            false
        }
        None => true,
    };

    let cover = match (0..sp.len()).find(|&x| fam.point_filter(x) == 0) {
        Some(x) => {
            witnesses.insert("cover".into(), vec![sp.name(x).to_string()]);
            false
        }
        None => true,
    };

    let mut point_filter = true;
    'pf: for x in 0..sp.len() {
        let tx = fam.point_filter(x);
        if tx == 0 {
            point_filter = false;
            witnesses.insert("point_filter".into(), vec![sp.name(x).to_string()]);
            break;
        }
        for i in bits::iter(tx) {
            for j in bits::iter(tx) {
                let lower = bits::iter(tx).any(|k| {
                    sp.compact_containment(fam.sets[k], fam.sets[i])
                        && sp.compact_containment(fam.sets[k], fam.sets[j])
                });
                if !lower {
                    point_filter = false;
                    witnesses.insert(
                        "point_filter".into(),
                        vec![sp.name(x).to_string(), fam.names[i].clone(), fam.names[j].clone()],
                    );
                    break 'pf;
                }
            }
        }
        for (k, &s) in fam.sets.iter().enumerate() {
            let above = bits::iter(tx).any(|i| sp.compact_containment(fam.sets[i], s));
            if above && !bits::has(s, x) {
                point_filter = false;
                witnesses.insert(
                    "point_filter".into(),
                    vec![sp.name(x).to_string(), fam.names[k].clone()],
                );
                break 'pf;
            }
        }
    }

    let dense = match (0..sp.len())
        .find(|&x| !fam.sets.iter().any(|&s| bits::within(s, sp.nbhd(x))))
    {
        Some(x) => {
            witnesses.insert("dense".into(), vec![sp.name(x).to_string()]);
            false
        }
        None => true,
    };

    let mut separating = true;
    'sep: for x in 0..sp.len() {
        for y in x + 1..sp.len() {
            if fam.point_filter(x) == fam.point_filter(y) {
                separating = false;
                witnesses.insert(
                    "separating".into(),
                    vec![sp.name(x).to_string(), sp.name(y).to_string()],
                );
                break 'sep;
            }
        }
    }

    ConcreteReport { locally_hausdorff, cover, point_filter, dense, separating, witnesses }
}

/// The relation `⋐` between the named sets.
pub fn induced_relation(fam: &NamedFamily) -> TransRel {
    let n = fam.sets.len();
    let below = (0..n)
        .map(|j| {
            (0..n)
                .filter(|&i| fam.space.compact_containment(fam.sets[i], fam.sets[j]))
                .fold(0, |acc, i| acc | bits::bit(i))
        })
        .collect();
    TransRel::from_below(fam.names.clone(), below, false)
        .expect("compact containment is transitive")
}

/// Result of recovering a space from a concrete local bi-pseudobasis.
#[derive(Debug, Clone)]
pub struct Recovery {
    pub relation: TransRel,
    pub spectrum: SpectrumSpace,
    /// `map[x]` is the spectrum point `T_x`, when it is one.
    pub map: Vec<Option<usize>>,
    pub bijective: bool,
    pub homeomorphism: bool,
}

impl Recovery {
    pub fn holds(&self) -> bool {
        self.bijective && self.homeomorphism
    }
}

pub fn recovery(fam: &NamedFamily) -> Result<Recovery> {
    let report = check_concrete_clbp(fam);
    if !report.all() {
        return Err(Error::AxiomViolation(format!(
            "concrete axioms fail: {:?}",
            report.witnesses
        )));
    }
    let relation = induced_relation(fam);
    let axioms = classify(&relation);
    if !(axioms.round && axioms.local_bi_pseudobasis) {
        return Err(Error::AxiomViolation(format!(
            "induced relation is not a local bi-pseudobasis: {:?}",
            axioms.witnesses
        )));
    }
    let spectrum = spectrum::locally_tight_spectrum(&relation)?;
    let map: Vec<Option<usize>> = (0..fam.space.len())
        .map(|x| spectrum.point_index(fam.point_filter(x)))
        .collect();
    let total: Option<Vec<usize>> = map.iter().copied().collect();
    let (bijective, homeomorphism) = match &total {
        Some(m) => (
            is_bijection(m, spectrum.points.len()),
            is_homeomorphism(&fam.space, &spectrum.space, m),
        ),
        None => (false, false),
    };
    Ok(Recovery { relation, spectrum, map, bijective, homeomorphism })
}

/// The family `(O^p)` on the locally tight spectrum of `rel`.
pub fn spectrum_family(spec: &SpectrumSpace) -> Result<NamedFamily> {
    let named = (0..spec.rel.len())
        .map(|p| (spec.rel.name(p).to_string(), spec.o(p)))
        .collect();
    NamedFamily::new(spec.space.clone(), named)
}

/// Materialises `(O^p)` over the locally tight spectrum and checks the
/// concrete axioms on it.
pub fn abstract_to_concrete_check(rel: &TransRel) -> Result<ConcreteReport> {
    let spec = spectrum::locally_tight_spectrum(rel)?;
    let fam = spectrum_family(&spec).map_err(|e| Error::AxiomViolation(e.to_string()))?;
    let report = check_concrete_clbp(&fam);
    if !report.all() {
        return Err(Error::AxiomViolation(format!(
            "family (O^p) fails the concrete axioms: {:?}",
            report.witnesses
        )));
    }
    Ok(report)
}
