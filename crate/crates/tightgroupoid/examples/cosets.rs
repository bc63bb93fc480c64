//! Enumerates the cosets of the partial bijections on two points.

use tightgroupoid::coset::coset_groupoid;
use tightgroupoid::generators;

fn main() -> tightgroupoid::Result<()> {
    let og = generators::isym(2)?;
    let cg = coset_groupoid(&og)?;
    for (i, name) in cg.groupoid.names().iter().enumerate() {
        let unit = if cg.groupoid.is_unit(i) { " unit" } else { "" };
        let filter = if tightgroupoid::bits::has(cg.filters, i) { " filter" } else { "" };
        println!("{name}{unit}{filter}");
    }
    println!("filters form an ideal: {}", cg.filters_ideal);
    println!("units are the cosets meeting units: {}", cg.unit_characterisation);
    Ok(())
}
