//! Prints the locally tight and tight spectra of a few relations.

use tightgroupoid::generators;
use tightgroupoid::spectrum::{locally_tight_spectrum, tight_spectrum};

fn main() -> tightgroupoid::Result<()> {
    let rels = [
        ("powerset:3", generators::powerset(3)?),
        ("diamond", generators::diamond()),
        ("tree:2:3", generators::tree(2, 3)?),
    ];
    for (name, rel) in rels {
        let lt = locally_tight_spectrum(&rel)?;
        let t = tight_spectrum(&rel)?;
        println!("{name}: {} locally tight filters, {} tight subsets", lt.points.len(), t.points.len());
        for i in 0..lt.points.len() {
            println!("  {}", lt.label(i));
        }
        println!("  hausdorff: {}", lt.space.is_hausdorff());
    }
    Ok(())
}
