//! Runs all three equivalence suites over the default instance set.

use std::time::Instant;

use tightgroupoid::harness::{self, DEFAULT_MAX_SIZE, DEFAULT_SAMPLES, DEFAULT_SEED};
use tightgroupoid::spectrum::Theorem;

fn main() -> tightgroupoid::Result<()> {
    let start = Instant::now();
    let rels = harness::instances(DEFAULT_MAX_SIZE, DEFAULT_SAMPLES, DEFAULT_SEED);
    for theorem in [Theorem::Meet, Theorem::Trapping, Theorem::Hausdorff] {
        let rep = harness::run_equivalence(theorem, &rels)?;
        println!(
            "{theorem}: checked {} instances, skipped {}, {} inconsistencies",
            rep.checked,
            rep.skipped,
            rep.inconsistencies.len()
        );
    }
    let s = harness::survey(&rels);
    println!("local but not global bi-pseudobases: {}", s.local_not_bi);
    println!("spectra differing: {}", s.spectra_differ);
    eprintln!("elapsed {:.2?}", start.elapsed());
    Ok(())
}
