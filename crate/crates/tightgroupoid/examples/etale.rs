//! Builds the locally tight groupoid of partial bijections and matches it
//! with the pair groupoid.

use tightgroupoid::generators;
use tightgroupoid::tight::{find_isomorphism, locally_tight_groupoid, pair_model, verify_etale};

fn main() -> tightgroupoid::Result<()> {
    for n in 1..=3 {
        let lt = locally_tight_groupoid(&generators::isym(n)?)?;
        let rep = verify_etale(&lt);
        let iso = find_isomorphism(&lt.model, &pair_model(n)?).is_some();
        println!(
            "isym:{n}: {} arrows, etale checks pass: {}, isomorphic to pair groupoid: {iso}",
            lt.model.len(),
            rep.all()
        );
    }
    Ok(())
}
