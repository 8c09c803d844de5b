//! Majority of three Maiorana-McFarland functions and its dual, for every
//! triple over GF(4)^*. Triples of three distinct elements add up to zero and
//! do not give a bent function.

use bentkit::boolfun::{bent_dual, PairingSpec};
use bentkit::construct::{carlet, CarletKind, ExponentPair};
use bentkit::gf::make_field;

fn main() -> bentkit::Result<()> {
    let field = make_field(6, None)?;
    let pair = ExponentPair::new(6, 2)?;
    let p = PairingSpec::trace(&field);
    let nonzero: Vec<_> = field.subfield_elements(2)?.into_iter().skip(1).collect();
    for &a in &nonzero {
        for &b in &nonzero {
            for &c in &nonzero {
                let g = carlet(&field, &pair, [a, b, c], CarletKind::G)?;
                let star = carlet(&field, &pair, [a, b, c], CarletKind::GStar)?;
                let verdict = match bent_dual(&g, &p)? {
                    Some(d) if d == star => "bent, dual matches",
                    Some(_) => "bent, dual differs",
                    None => "not bent",
                };
                println!(
                    "({a}, {b}, {c}): sum {}, {verdict}",
                    field.add(field.add(a, b), c)
                );
            }
        }
    }
    Ok(())
}
