//! Recovers the pair groupoid from its family of partial-injection bisections.
//! With an argument, writes the family file there.

use tightgroupoid::io::{self, Document};
use tightgroupoid::tight::{groupoid_recovery, pair_bisection_family};

fn main() -> tightgroupoid::Result<()> {
    for n in [2, 3] {
        let fam = pair_bisection_family(n)?;
        let rec = groupoid_recovery(&fam)?;
        println!(
            "pair groupoid on {n} points: {} bisections, recovery holds: {}",
            fam.named.len(),
            rec.holds()
        );
    }
    if let Some(path) = std::env::args().nth(1) {
        let fam = pair_bisection_family(2)?;
        std::fs::write(path, Document::BisectionFamily(io::family_doc(&fam)).emit())?;
    }
    Ok(())
}
