//! Boolean functions supported on half of the trace cells, and where their
//! duals live.

use bentkit::analyze::constant_on;
use bentkit::boolfun::{bent_dual, PairingSpec};
use bentkit::construct::psap;
use bentkit::gf::make_field;
use bentkit::spread::{GammaCells, Side};

fn main() -> bentkit::Result<()> {
    let field = make_field(6, None)?;
    let p = PairingSpec::trace(&field);
    let sub = field.subfield_elements(2)?;
    let b_cells = GammaCells::new(&field, 2, Side::B)?;
    let refined = b_cells.refined_partition();
    for i in 0..4 {
        for j in i + 1..4 {
            for hyper in [false, true] {
                let f = psap(&field, 2, &[sub[i], sub[j]], hyper, Side::A)?;
                let dual = bent_dual(&f, &p)?.expect("bent");
                let on: Vec<String> = refined
                    .labels()
                    .iter()
                    .zip(refined.cells())
                    .filter(|(_, c)| dual.get(c[0]))
                    .map(|(l, _)| l.to_string())
                    .collect();
                println!(
                    "S = {{{}, {}}} hyper {hyper}: weight {}, dual on {on:?} (constant on cells: {})",
                    sub[i],
                    sub[j],
                    f.weight(),
                    constant_on(&dual, &refined)?
                );
            }
        }
    }
    Ok(())
}
