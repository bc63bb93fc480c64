//! Command-line front end.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use tightgroupoid::groupoid::{
    canonical_order, check_ordered, ordered_laws, semigroup_to_ordered_groupoid, OrderedGroupoid,
};
use tightgroupoid::harness::{self, DEFAULT_MAX_SIZE, DEFAULT_SAMPLES, DEFAULT_SEED};
use tightgroupoid::io::{self, Document, GroupoidDoc, Loaded};
use tightgroupoid::laws::LawReport;
use tightgroupoid::spectrum::{locally_tight_spectrum, tight_spectrum, Theorem};
use tightgroupoid::tight::{germ_groupoid, groupoid_recovery, locally_tight_groupoid, model_laws, verify_etale};
use tightgroupoid::topology::{abstract_to_concrete_check, check_concrete_clbp, recovery, spectrum_family};
use tightgroupoid::{classify, Error, Result};

const TREE_NOTE: &str = "Generator specs: arrow, diamond, powerset:n, chain:n, tree:b:d, isym:n. \
The tree generator truncates at depth d and gives each leaf a self-loop so the relation stays round.";

#[derive(Parser)]
#[command(name = "tg", about = "Locally tight spectra and groupoids of finite ordered structures", after_help = TREE_NOTE)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    LocallyTight,
    Tight,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremArg {
    Meet,
    Trapping,
    Hausdorff,
}

impl From<TheoremArg> for Theorem {
    fn from(t: TheoremArg) -> Self {
        match t {
            TheoremArg::Meet => Theorem::Meet,
            TheoremArg::Trapping => Theorem::Trapping,
            TheoremArg::Hausdorff => Theorem::Hausdorff,
        }
    }
}

#[derive(Subcommand)]
enum Verb {
    /// Evaluate the axioms of a relation, ordered groupoid, inverse semigroup, space or model.
    Check {
        input: String,
        #[arg(long)]
        close: bool,
    },
    /// Emit the tight or locally tight spectrum of a relation.
    Spectrum {
        input: String,
        #[arg(long, value_enum, default_value = "locally-tight")]
        kind: Kind,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        close: bool,
    },
    /// Build the locally tight groupoid of an ordered groupoid or inverse semigroup.
    Groupoid {
        input: String,
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the germ groupoid and check its isomorphism to the locally tight groupoid.
    Germs {
        input: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recover a space from a named family or a groupoid from a bisection family.
    Recover {
        input: String,
        #[arg(long)]
        close: bool,
    },
    /// Run an equivalence suite over exhaustive and seeded relations.
    Equiv {
        #[arg(long, value_enum)]
        theorem: Option<TheoremArg>,
        #[arg(long, default_value_t = DEFAULT_MAX_SIZE)]
        max_size: usize,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED, value_parser = parse_seed)]
        seed: u64,
    },
    /// Write a generated structure file.
    Example {
        #[arg(long)]
        name: String,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Re-emit a structure in canonical JSON or DOT form.
    Export {
        input: String,
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        close: bool,
    },
}

/// Largest size the sampled harness accepts.
const HARNESS_MAX: usize = 6;

fn parse_seed(s: &str) -> std::result::Result<u64, String> {
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|e| e.to_string())
}

/// Text to print and whether every checked property held.
struct Outcome {
    text: String,
    ok: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, ok: true }
    }
}

fn flag(out: &mut String, name: &str, v: bool) {
    let _ = writeln!(out, "{name}: {v}");
}

fn laws(out: &mut String, section: &str, rep: &LawReport) {
    let _ = writeln!(out, "[{section}]");
    for (n, v) in &rep.laws {
        flag(out, n, *v);
    }
}

fn witnesses(out: &mut String, w: &std::collections::BTreeMap<String, Vec<String>>) {
    for (k, v) in w {
        let _ = writeln!(out, "witness {k}: {}", v.join(" "));
    }
}

fn relation_text(out: &mut String, rel: &tightgroupoid::TransRel) -> bool {
    let r = classify(rel);
    let _ = writeln!(out, "[relation]");
    flag(out, "round", r.round);
    flag(out, "pseudobasis", r.pseudobasis);
    flag(out, "bi_pseudobasis", r.bi_pseudobasis);
    flag(out, "local_bi_pseudobasis", r.local_bi_pseudobasis);
    flag(out, "equivalent_form_agrees", r.equivalent_form_agrees);
    witnesses(out, &r.witnesses);
    r.all() && r.equivalent_form_agrees
}

fn ordered_text(out: &mut String, og_doc: &GroupoidDoc) -> Result<bool> {
    let (g, rel) = io::groupoid_parts(og_doc)?;
    let r = check_ordered(&g, &rel)?;
    let _ = writeln!(out, "[ordered_groupoid]");
    flag(out, "product", r.product);
    flag(out, "inverse", r.inverse);
    flag(out, "support", r.support);
    flag(out, "product_preserved", r.product_preserved);
    flag(out, "inverse_preserved", r.inverse_preserved);
    flag(out, "support_reflected", r.support_reflected);
    flag(out, "forms_agree", r.forms_agree);
    witnesses(out, &r.witnesses);
    let mut ok = r.all() && r.forms_agree;
    ok &= relation_text(out, &rel);
    if r.all() {
        let og = OrderedGroupoid::new(g, rel)?;
        let rep = ordered_laws(&og);
        laws(out, "ordered_laws", &rep);
        ok &= rep.all();
    }
    Ok(ok)
}

/// The ordered groupoid of an inverse semigroup under its natural order
/// with the zero removed.
fn bridge(s: &tightgroupoid::groupoid::InverseSemigroup) -> Result<OrderedGroupoid> {
    let rel = canonical_order(s, true)?;
    semigroup_to_ordered_groupoid(s, &rel)
}

fn ordered_groupoid(loaded: Loaded) -> Result<OrderedGroupoid> {
    match loaded {
        Loaded::Groupoid(d) => io::groupoid_from_doc(&d),
        Loaded::Semigroup(s) => bridge(&s),
        _ => Err(Error::Format("expected an ordered groupoid or inverse semigroup".into())),
    }
}

fn check(input: &str, close: bool) -> Result<Outcome> {
    let mut out = String::new();
    let ok = match io::load(input, close)? {
        Loaded::Relation(rel) => relation_text(&mut out, &rel),
        Loaded::Groupoid(d) => ordered_text(&mut out, &d)?,
        Loaded::Semigroup(s) => match bridge(&s) {
            Ok(og) => {
                flag(&mut out, "bridge", true);
                ordered_text(&mut out, &io::groupoid_doc(&og))?
            }
            Err(e @ Error::PremiseViolation(_)) => {
                flag(&mut out, "bridge", false);
                let _ = writeln!(out, "reason: {e}");
                false
            }
            Err(e) => return Err(e),
        },
        Loaded::Space(fam) => {
            let r = check_concrete_clbp(&fam);
            let _ = writeln!(out, "[concrete_family]");
            flag(&mut out, "locally_hausdorff", r.locally_hausdorff);
            flag(&mut out, "cover", r.cover);
            flag(&mut out, "point_filter", r.point_filter);
            flag(&mut out, "dense", r.dense);
            flag(&mut out, "separating", r.separating);
            witnesses(&mut out, &r.witnesses);
            r.all()
        }
        Loaded::Model(m) => {
            let rep = model_laws(&m);
            laws(&mut out, "groupoid_model", &rep);
            rep.all()
        }
        Loaded::Family(fam) => {
            let rep = groupoid_recovery(&fam)?;
            recovery_text(&mut out, &rep);
            rep.holds()
        }
        Loaded::Spectrum(_) => {
            return Err(Error::Format("spectrum files carry no axioms to check".into()))
        }
    };
    Ok(Outcome { text: out, ok })
}

fn spectrum(input: &str, kind: Kind, close: bool) -> Result<Outcome> {
    let rel = match io::load(input, close)? {
        Loaded::Relation(rel) => rel,
        Loaded::Groupoid(d) => io::groupoid_parts(&d)?.1,
        _ => return Err(Error::Format("expected a relation or ordered groupoid".into())),
    };
    let spec = match kind {
        Kind::LocallyTight => locally_tight_spectrum(&rel)?,
        Kind::Tight => tight_spectrum(&rel)?,
    };
    Ok(Outcome::ok(Document::Spectrum(io::spectrum_doc(&spec)).emit()))
}

fn groupoid(input: &str, dot: bool) -> Result<Outcome> {
    let og = ordered_groupoid(io::load(input, false)?)?;
    let lt = locally_tight_groupoid(&og)?;
    let rep = verify_etale(&lt);
    if !rep.all() {
        eprintln!("etale checks failed: {}", rep.failures().join(", "));
    }
    let text = if dot {
        io::model_dot(&lt.model)?
    } else {
        Document::GroupoidModel(io::model_doc(&lt.model)).emit()
    };
    Ok(Outcome { text, ok: rep.all() })
}

fn germs(input: &str, out_path: Option<&PathBuf>) -> Result<(Outcome, Option<String>)> {
    let og = ordered_groupoid(io::load(input, false)?)?;
    let gg = germ_groupoid(&og)?;
    let mut out = String::new();
    let _ = writeln!(out, "units: {}", gg.unit_spectrum.points.len());
    let _ = writeln!(out, "germs: {}", gg.model.len());
    for name in &gg.model.names {
        let _ = writeln!(out, "  {name}");
    }
    flag(&mut out, "isomorphism", gg.isomorphism);
    flag(&mut out, "transport", gg.transport);
    let file = out_path.map(|_| Document::GroupoidModel(io::model_doc(&gg.model)).emit());
    Ok((Outcome { text: out, ok: gg.holds() }, file))
}

fn recovery_text(out: &mut String, rep: &tightgroupoid::tight::GroupoidRecovery) {
    let _ = writeln!(out, "[groupoid_recovery]");
    flag(out, "homeomorphism", rep.homeomorphism);
    flag(out, "inverse_law", rep.inverse_law);
    flag(out, "composable_law", rep.composable_law);
    flag(out, "product_law", rep.product_law);
}

fn recover(input: &str, close: bool) -> Result<Outcome> {
    let mut out = String::new();
    let ok = match io::load(input, close)? {
        Loaded::Space(fam) => {
            let r = recovery(&fam)?;
            let _ = writeln!(out, "[space_recovery]");
            let _ = writeln!(out, "points: {}", r.spectrum.points.len());
            flag(&mut out, "bijective", r.bijective);
            flag(&mut out, "homeomorphism", r.homeomorphism);
            r.holds()
        }
        Loaded::Relation(rel) => {
            let c = abstract_to_concrete_check(&rel)?;
            let fam = spectrum_family(&locally_tight_spectrum(&rel)?)?;
            let r = recovery(&fam)?;
            let _ = writeln!(out, "[relation_recovery]");
            flag(&mut out, "concrete", c.all());
            flag(&mut out, "homeomorphism", r.homeomorphism);
            c.all() && r.holds()
        }
        Loaded::Family(fam) => {
            let rep = groupoid_recovery(&fam)?;
            recovery_text(&mut out, &rep);
            rep.holds()
        }
        _ => return Err(Error::Format("expected a relation, space or bisection family".into())),
    };
    Ok(Outcome { text: out, ok })
}

fn equiv(theorem: Option<TheoremArg>, max_size: usize, samples: usize, seed: u64) -> Result<Outcome> {
    if max_size == 0 || max_size > HARNESS_MAX {
        return Err(Error::Format(format!("--max-size must lie in 1..={HARNESS_MAX}")));
    }
    let rels = harness::instances(max_size, samples, seed);
    let theorems: Vec<Theorem> = match theorem {
        Some(t) => vec![t.into()],
        None => vec![Theorem::Meet, Theorem::Trapping, Theorem::Hausdorff],
    };
    let mut out = String::new();
    let mut ok = true;
    for t in theorems {
        let rep = harness::run_equivalence(t, &rels)?;
        if theorem.is_none() {
            let _ = write!(out, "{t}: ");
        }
        let _ = writeln!(
            out,
            "checked {} instances, {} inconsistencies",
            rep.checked,
            rep.inconsistencies.len()
        );
        for (rel, r) in &rep.inconsistencies {
            let conds: Vec<String> = r.conditions.iter().map(|(n, v)| format!("{n}={v}")).collect();
            let _ = writeln!(out, "witness: {}", conds.join(" "));
            out.push_str(&Document::Order(io::relation_doc(rel)).emit());
        }
        ok &= rep.passed();
    }
    Ok(Outcome { text: out, ok })
}

fn example(name: &str) -> Result<String> {
    let doc = match io::load_generator(name)? {
        Loaded::Relation(rel) => Document::Order(io::relation_doc(&rel)),
        Loaded::Groupoid(d) => Document::OrderedGroupoid(d),
        _ => unreachable!("generators yield relations or groupoids"),
    };
    Ok(doc.emit())
}

fn export(input: &str, dot: bool, close: bool) -> Result<String> {
    let loaded = io::load(input, close)?;
    if dot {
        return match loaded {
            Loaded::Relation(rel) => Ok(io::relation_dot(&rel)),
            Loaded::Model(m) => io::model_dot(&m),
            _ => Err(Error::Format("DOT export covers relations and groupoid models".into())),
        };
    }
    let doc = match loaded {
        Loaded::Relation(rel) => Document::Order(io::relation_doc(&rel)),
        Loaded::Groupoid(d) => Document::OrderedGroupoid(io::canonical_groupoid_doc(d)),
        Loaded::Semigroup(s) => Document::InverseSemigroup(io::semigroup_doc(&s)),
        Loaded::Space(fam) => Document::Space(io::space_doc(&fam)),
        Loaded::Spectrum(d) => Document::Spectrum(d),
        Loaded::Model(m) => Document::GroupoidModel(io::model_doc(&m)),
        Loaded::Family(f) => Document::BisectionFamily(io::family_doc(&f)),
    };
    Ok(doc.emit())
}

fn write_or_print(text: &str, out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    match cli.verb {
        Verb::Check { input, close } => {
            let o = check(&input, close)?;
            print!("{}", o.text);
            Ok(o.ok)
        }
        Verb::Spectrum { input, kind, out, close } => {
            let o = spectrum(&input, kind, close)?;
            write_or_print(&o.text, out.as_ref())?;
            Ok(o.ok)
        }
        Verb::Groupoid { input, dot, out } => {
            let o = groupoid(&input, dot)?;
            write_or_print(&o.text, out.as_ref())?;
            Ok(o.ok)
        }
        Verb::Germs { input, out } => {
            let (o, file) = germs(&input, out.as_ref())?;
            if let (Some(p), Some(f)) = (out.as_ref(), file) {
                std::fs::write(p, f)?;
            }
            print!("{}", o.text);
            Ok(o.ok)
        }
        Verb::Recover { input, close } => {
            let o = recover(&input, close)?;
            print!("{}", o.text);
            Ok(o.ok)
        }
        Verb::Equiv { theorem, max_size, samples, seed } => {
            let o = equiv(theorem, max_size, samples, seed)?;
            print!("{}", o.text);
            Ok(o.ok)
        }
        Verb::Example { name, emit } => {
            let text = example(&name)?;
            write_or_print(&text, emit.as_ref())?;
            Ok(true)
        }
        Verb::Export { input, dot, out, close } => {
            let text = export(&input, dot, close)?;
            write_or_print(&text, out.as_ref())?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_input_error() { 2 } else { 1 })
        }
    }
}
