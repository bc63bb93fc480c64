//! Classifies the built-in relations against the pseudobasis axioms.

use tightgroupoid::classify;
use tightgroupoid::generators::GeneratorSpec;
use tightgroupoid::generators::Generated;

fn main() -> tightgroupoid::Result<()> {
    for spec in ["arrow", "diamond", "powerset:3", "chain:4", "tree:2:3"] {
        let Generated::Relation(rel) = spec.parse::<GeneratorSpec>()?.generate()? else {
            continue;
        };
        let r = classify(&rel);
        println!(
            "{spec:12} round={} pseudobasis={} bi={} local_bi={}",
            r.round, r.pseudobasis, r.bi_pseudobasis, r.local_bi_pseudobasis
        );
    }
    Ok(())
}
