//! JSON documents for every structure, canonical emission and DOT export.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::bits::{self, Set};
use crate::error::{Error, Result};
use crate::generators::{Generated, GeneratorSpec};
use crate::groupoid::{FiniteGroupoid, InverseSemigroup, OrderedGroupoid};
use crate::order::TransRel;
use crate::spectrum::SpectrumSpace;
use crate::tight::{BisectionFamily, GroupoidModel};
use crate::topology::{FiniteSpace, NamedFamily};

type Pair = (String, String);
type Triple = (String, String, String);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderDoc {
    pub elements: Vec<String>,
    pub pairs: Vec<Pair>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub close: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceDoc {
    pub points: Vec<String>,
    pub basis: Vec<Vec<String>>,
    #[serde(default)]
    pub family: BTreeMap<String, Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupoidDoc {
    pub elements: Vec<String>,
    pub product: Vec<Triple>,
    pub inverse: Vec<Pair>,
    pub order: Vec<Pair>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupDoc {
    pub elements: Vec<String>,
    pub table: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zero: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumDoc {
    pub flavor: String,
    pub points: Vec<Vec<String>>,
    pub opens: BTreeMap<String, Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopologyDoc {
    pub basis: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelDoc {
    pub elements: Vec<String>,
    pub product: Vec<Triple>,
    pub inverse: Vec<Pair>,
    pub topology: TopologyDoc,
    pub units: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyDoc {
    pub groupoid: ModelDoc,
    pub family: BTreeMap<String, Vec<String>>,
    pub product: Vec<Triple>,
    pub inverse: Vec<Pair>,
}

/// Every file format, tagged by `kind`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Document {
    Order(OrderDoc),
    Space(SpaceDoc),
    OrderedGroupoid(GroupoidDoc),
    InverseSemigroup(SemigroupDoc),
    Spectrum(SpectrumDoc),
    GroupoidModel(ModelDoc),
    BisectionFamily(FamilyDoc),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Order(_) => "order",
            Document::Space(_) => "space",
            Document::OrderedGroupoid(_) => "ordered_groupoid",
            Document::InverseSemigroup(_) => "inverse_semigroup",
            Document::Spectrum(_) => "spectrum",
            Document::GroupoidModel(_) => "groupoid_model",
            Document::BisectionFamily(_) => "bisection_family",
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Pretty JSON with a trailing newline.
    pub fn emit(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialise");
        s.push('\n');
        s
    }
}

fn sorted_names(names: impl IntoIterator<Item = String>) -> Vec<String> {
    let mut v: Vec<String> = names.into_iter().collect();
    v.sort();
    v
}

fn names_of(names: &[String], s: Set) -> Vec<String> {
    sorted_names(bits::iter(s).map(|i| names[i].clone()))
}

pub fn relation_doc(rel: &TransRel) -> OrderDoc {
    let mut pairs: Vec<Pair> = rel
        .pairs()
        .into_iter()
        .map(|(a, b)| (rel.name(a).to_string(), rel.name(b).to_string()))
        .collect();
    pairs.sort();
    OrderDoc { elements: sorted_names(rel.names().to_vec()), pairs, close: None }
}

/// Builds the relation; `close` forces transitive closure.
pub fn relation_from_doc(doc: &OrderDoc, close: bool) -> Result<TransRel> {
    TransRel::build(&doc.elements, &doc.pairs, close || doc.close.unwrap_or(false))
}

fn product_triples(g: &FiniteGroupoid) -> Vec<Triple> {
    let mut v: Vec<Triple> = g
        .product_triples()
        .into_iter()
        .map(|(a, b, c)| (g.name(a).to_string(), g.name(b).to_string(), g.name(c).to_string()))
        .collect();
    v.sort();
    v
}

fn inverse_pairs(g: &FiniteGroupoid) -> Vec<Pair> {
    let mut v: Vec<Pair> = (0..g.len())
        .map(|a| (g.name(a).to_string(), g.name(g.inv(a)).to_string()))
        .collect();
    v.sort();
    v
}

pub fn groupoid_doc(og: &OrderedGroupoid) -> GroupoidDoc {
    GroupoidDoc {
        elements: sorted_names(og.g.names().to_vec()),
        product: product_triples(&og.g),
        inverse: inverse_pairs(&og.g),
        order: relation_doc(&og.rel).pairs,
    }
}

/// The groupoid and its relation, without checking the ordered axioms.
pub fn groupoid_parts(doc: &GroupoidDoc) -> Result<(FiniteGroupoid, TransRel)> {
    let g = FiniteGroupoid::build(&doc.elements, &doc.product, &doc.inverse)?;
    let rel = TransRel::build(&doc.elements, &doc.order, false)?;
    Ok((g, rel))
}

/// Sorts every list in a groupoid document.
pub fn canonical_groupoid_doc(mut doc: GroupoidDoc) -> GroupoidDoc {
    doc.elements.sort();
    doc.product.sort();
    doc.product.dedup();
    doc.inverse.sort();
    doc.inverse.dedup();
    doc.order.sort();
    doc.order.dedup();
    doc
}

pub fn groupoid_from_doc(doc: &GroupoidDoc) -> Result<OrderedGroupoid> {
    let (g, rel) = groupoid_parts(doc)?;
    OrderedGroupoid::new(g, rel)
}

pub fn semigroup_doc(s: &InverseSemigroup) -> SemigroupDoc {
    SemigroupDoc {
        elements: s.names().to_vec(),
        table: s
            .table()
            .iter()
            .map(|row| row.iter().map(|&c| s.name(c).to_string()).collect())
            .collect(),
        zero: s.zero().map(|z| s.name(z).to_string()),
    }
}

pub fn semigroup_from_doc(doc: &SemigroupDoc) -> Result<InverseSemigroup> {
    InverseSemigroup::build(&doc.elements, &doc.table, doc.zero.as_deref())
}

fn basis_names(space: &FiniteSpace) -> Vec<Vec<String>> {
    let mut sets: Vec<Set> = (0..space.len()).map(|x| space.nbhd(x)).collect();
    sets.sort();
    sets.dedup();
    let mut v: Vec<Vec<String>> = sets.iter().map(|&s| names_of(space.names(), s)).collect();
    v.sort();
    v
}

pub fn space_doc(fam: &NamedFamily) -> SpaceDoc {
    SpaceDoc {
        points: sorted_names(fam.space.names().to_vec()),
        basis: basis_names(&fam.space),
        family: fam
            .names
            .iter()
            .zip(&fam.sets)
            .map(|(n, &s)| (n.clone(), names_of(fam.space.names(), s)))
            .collect(),
    }
}

pub fn space_from_doc(doc: &SpaceDoc) -> Result<NamedFamily> {
    let space = FiniteSpace::from_basis(&doc.points, &doc.basis)?;
    let named = doc
        .family
        .iter()
        .map(|(n, pts)| Ok((n.clone(), space.subset(pts)?)))
        .collect::<Result<Vec<_>>>()?;
    NamedFamily::new(space, named)
}

pub fn spectrum_doc(spec: &SpectrumSpace) -> SpectrumDoc {
    SpectrumDoc {
        flavor: spec.flavor.as_str().to_string(),
        points: spec.points.iter().map(|&t| names_of(spec.rel.names(), t)).collect(),
        opens: spec
            .generators
            .iter()
            .map(|(n, s)| (n.clone(), bits::iter(*s).collect()))
            .collect(),
    }
}

pub fn model_doc(m: &GroupoidModel) -> ModelDoc {
    let mut product: Vec<Triple> = Vec::new();
    for a in 0..m.len() {
        for b in 0..m.len() {
            if let Some(c) = m.prod[a][b] {
                product.push((m.names[a].clone(), m.names[b].clone(), m.names[c].clone()));
            }
        }
    }
    product.sort();
    let mut inverse: Vec<Pair> = (0..m.len())
        .map(|a| (m.names[a].clone(), m.names[m.inv[a]].clone()))
        .collect();
    inverse.sort();
    ModelDoc {
        elements: sorted_names(m.names.clone()),
        product,
        inverse,
        topology: TopologyDoc { basis: basis_names(&m.space) },
        units: names_of(&m.names, m.units),
    }
}

pub fn model_from_doc(doc: &ModelDoc) -> Result<GroupoidModel> {
    let g = FiniteGroupoid::build(&doc.elements, &doc.product, &doc.inverse)?;
    let space = FiniteSpace::from_basis(&doc.elements, &doc.topology.basis)?;
    let model = GroupoidModel::from_groupoid(&g, space, Vec::new());
    if names_of(&model.names, model.units) != sorted_names(doc.units.clone()) {
        return Err(Error::Format("declared units differ from the units of the product".into()));
    }
    Ok(model)
}

pub fn family_doc(fam: &BisectionFamily) -> FamilyDoc {
    let name = |i: usize| fam.named[i].0.clone();
    let mut product: Vec<Triple> = fam.product.iter().map(|&(a, b, c)| (name(a), name(b), name(c))).collect();
    product.sort();
    let mut inverse: Vec<Pair> = fam.inverse.iter().map(|&(a, b)| (name(a), name(b))).collect();
    inverse.sort();
    FamilyDoc {
        groupoid: model_doc(&fam.x),
        family: fam
            .named
            .iter()
            .map(|(n, s)| (n.clone(), names_of(&fam.x.names, *s)))
            .collect(),
        product,
        inverse,
    }
}

pub fn family_from_doc(doc: &FamilyDoc) -> Result<BisectionFamily> {
    let x = model_from_doc(&doc.groupoid)?;
    let named: Vec<(String, Set)> = doc
        .family
        .iter()
        .map(|(n, pts)| Ok((n.clone(), x.space.subset(pts)?)))
        .collect::<Result<Vec<_>>>()?;
    let idx = |s: &str| {
        named
            .iter()
            .position(|(n, _)| n == s)
            .ok_or_else(|| Error::UnknownElement(s.to_string()))
    };
    let product = doc
        .product
        .iter()
        .map(|(a, b, c)| Ok((idx(a)?, idx(b)?, idx(c)?)))
        .collect::<Result<Vec<_>>>()?;
    let inverse = doc
        .inverse
        .iter()
        .map(|(a, b)| Ok((idx(a)?, idx(b)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(BisectionFamily { x, named, product, inverse })
}

/// A structure loaded from a file or a generator spec.
#[derive(Debug, Clone)]
pub enum Loaded {
    Relation(TransRel),
    Groupoid(GroupoidDoc),
    Semigroup(InverseSemigroup),
    Space(NamedFamily),
    Spectrum(SpectrumDoc),
    Model(GroupoidModel),
    Family(BisectionFamily),
}

/// Runs a generator spec.
pub fn load_generator(spec: &str) -> Result<Loaded> {
    Ok(match spec.parse::<GeneratorSpec>()?.generate()? {
        Generated::Relation(r) => Loaded::Relation(r),
        Generated::Groupoid(og) => Loaded::Groupoid(groupoid_doc(&og)),
    })
}

/// Reads `input` as a file when one exists, else as a generator spec.
pub fn load(input: &str, close: bool) -> Result<Loaded> {
    let path = Path::new(input);
    if !path.exists() {
        let looks_like_path = input.contains(['.', '/', '\\']);
        if input.parse::<GeneratorSpec>().is_ok() || !looks_like_path {
            return load_generator(input);
        }
    }
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{input}: {e}"))))?;
    Ok(match Document::parse(&text)? {
        Document::Order(d) => Loaded::Relation(relation_from_doc(&d, close)?),
        Document::Space(d) => Loaded::Space(space_from_doc(&d)?),
        Document::OrderedGroupoid(d) => {
            groupoid_parts(&d)?;
            Loaded::Groupoid(d)
        }
        Document::InverseSemigroup(d) => Loaded::Semigroup(semigroup_from_doc(&d)?),
        Document::Spectrum(d) => Loaded::Spectrum(d),
        Document::GroupoidModel(d) => Loaded::Model(model_from_doc(&d)?),
        Document::BisectionFamily(d) => Loaded::Family(family_from_doc(&d)?),
    })
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// One digraph per connected component: units as boxes, other arrows as
/// edges from source to range labelled by name.
pub fn model_dot(m: &GroupoidModel) -> Result<String> {
    let g = m.groupoid()?;
    let mut out = String::new();
    for (k, comp) in g.components().into_iter().enumerate() {
        out.push_str(&format!("digraph component_{k} {{\n"));
        for u in bits::iter(comp & g.units()) {
            out.push_str(&format!("  {} [shape=box];\n", quote(g.name(u))));
        }
        for x in bits::iter(comp & !g.units()) {
            out.push_str(&format!(
                "  {} -> {} [label={}];\n",
                quote(g.name(g.s(x))),
                quote(g.name(g.r(x))),
                quote(g.name(x))
            ));
        }
        out.push_str("}\n");
    }
    Ok(out)
}

/// The relation as a digraph with an edge `a -> b` for each `a ≺ b`.
pub fn relation_dot(rel: &TransRel) -> String {
    let doc = relation_doc(rel);
    let mut out = String::from("digraph relation {\n");
    for e in &doc.elements {
        out.push_str(&format!("  {};\n", quote(e)));
    }
    for (a, b) in &doc.pairs {
        out.push_str(&format!("  {} -> {};\n", quote(a), quote(b)));
    }
    out.push_str("}\n");
    out
}
