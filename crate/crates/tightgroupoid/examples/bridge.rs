//! Builds the ordered groupoid of partial bijections and checks its laws.

use tightgroupoid::bits;
use tightgroupoid::generators;
use tightgroupoid::groupoid::{bisection_semigroup, check_ordered, ordered_laws, source_image_laws};

fn main() -> tightgroupoid::Result<()> {
    let og = generators::isym(2)?;
    println!("elements: {}", og.g.names().join(" "));
    println!("ordered axioms: {}", check_ordered(&og.g, &og.rel)?.all());
    println!("ordered laws: {}", ordered_laws(&og).all());
    let mut source_laws = true;
    for p in 0..og.len() {
        let below = og.rel.below(p);
        for q in bits::subsets(below) {
            for r in bits::subsets(below) {
                source_laws &= source_image_laws(&og, p, q, r).all();
            }
        }
    }
    println!("source image laws: {source_laws}");
    let bs = bisection_semigroup(&og)?;
    println!("down-closed bisections: {}, laws hold: {}", bs.members.len(), bs.laws.all());
    Ok(())
}
