//! Turns a relation into its spectrum family and recovers the space from it.

use tightgroupoid::generators;
use tightgroupoid::spectrum::locally_tight_spectrum;
use tightgroupoid::topology::{abstract_to_concrete_check, recovery, spectrum_family};

fn main() -> tightgroupoid::Result<()> {
    for (name, rel) in [("diamond", generators::diamond()), ("tree:2:2", generators::tree(2, 2)?)] {
        let concrete = abstract_to_concrete_check(&rel)?;
        let fam = spectrum_family(&locally_tight_spectrum(&rel)?)?;
        let rec = recovery(&fam)?;
        println!(
            "{name}: cone opens form a concrete family: {}, recovered space homeomorphic: {}",
            concrete.all(),
            rec.holds()
        );
    }
    Ok(())
}
