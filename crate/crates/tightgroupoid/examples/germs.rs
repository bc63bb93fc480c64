//! Builds the germ groupoid and checks it against the locally tight groupoid.

use tightgroupoid::generators;
use tightgroupoid::tight::germ_groupoid;

fn main() -> tightgroupoid::Result<()> {
    for n in [2, 3] {
        let gg = germ_groupoid(&generators::isym(n)?)?;
        println!("isym:{n}: {} germs over {} unit points", gg.model.len(), gg.unit_spectrum.points.len());
        for name in gg.model.names.iter().take(6) {
            println!("  {name}");
        }
        println!("  isomorphism: {}, transport: {}", gg.isomorphism, gg.transport);
    }
    Ok(())
}
