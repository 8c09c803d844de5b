//! Functions from the Desarguesian spread of GF(2^4)^2 into several 2-groups,
//! with punctured subspaces (I) or one value on whole subspaces (II).

use bentkit::boolfun::PairingSpec;
use bentkit::construct::{spread_construction, Assignment, SpreadVariant};
use bentkit::gf::make_field;
use bentkit::groupfun::{is_group_bent, GroupSpec};
use bentkit::spread::desarguesian;

fn main() -> bentkit::Result<()> {
    let field = make_field(4, None)?;
    let spread = desarguesian(&field);
    let p = PairingSpec::dot(8);
    println!("{} subspaces", spread.len());
    for orders in [vec![2], vec![4], vec![2, 2], vec![8], vec![4, 2], vec![16]] {
        let group = GroupSpec::new(orders.clone())?;
        for variant in [SpreadVariant::I, SpreadVariant::II] {
            let asg = Assignment::sequential(&group, variant, 4, 1)?;
            let f = spread_construction(spread.cells(), 8, &group, variant, &asg)?;
            let weight = f.values().iter().filter(|&&v| v != 0).count();
            println!(
                "{orders:?} {variant:?}: support {weight}, bent {}",
                is_group_bent(&f, &p)?
            );
        }
    }
    Ok(())
}
