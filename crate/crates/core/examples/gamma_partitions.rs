//! The partitions by relative trace of the slopes of `U_s` and `V_s`, and the
//! functions taking one value per cell.

use bentkit::boolfun::PairingSpec;
use bentkit::construct::{default_pi, partition_bent};
use bentkit::gf::make_field;
use bentkit::groupfun::{is_group_bent, GroupSpec};
use bentkit::spread::{preimage_partition, GammaCells, Side};

fn main() -> bentkit::Result<()> {
    let (m, k) = (6, 2);
    let field = make_field(m, None)?;
    let p = PairingSpec::trace(&field);
    let pi = default_pi(&field, k)?;
    for side in [Side::A, Side::B] {
        let cells = GammaCells::new(&field, k, side)?;
        let sizes: Vec<usize> = cells.partition().cells().iter().map(Vec::len).collect();
        println!(
            "{side:?}: hyperplane {} points, cells {sizes:?}",
            cells.hyper().len()
        );
        for group in [GroupSpec::cyclic(k), GroupSpec::elementary(k)] {
            for u in 0..group.size() {
                let f = partition_bent(&field, k, side, &pi, &group, u)?;
                let same = preimage_partition(&f).len();
                println!(
                    "  {:?} u_label {u}: bent {}, {same} preimages",
                    group.orders(),
                    is_group_bent(&f, &p)?
                );
            }
        }
    }
    Ok(())
}
