//! Brute force against closed form for the double character sums over
//! `{s : Tr^m_k(s) = gamma} x GF(2^m)^*`.

use bentkit::analyze::{CharacterSums, SumKind};
use bentkit::gf::make_field;

fn main() -> bentkit::Result<()> {
    let field = make_field(6, None)?;
    let sums = CharacterSums::new(&field, 2)?;
    let gammas = field.subfield_elements(2)?;
    let u = field.element(3)?;
    let v = field.element(17)?;
    for kind in [SumKind::Omega, SumKind::Upsilon] {
        for &g in &gammas {
            println!(
                "{kind:?} gamma={g}: brute {} closed {}",
                sums.brute(kind, u, v, g)?,
                sums.closed(kind, u, v, g)?
            );
        }
    }
    Ok(())
}
