//! Bentness of a Z_(2^k)-valued function through the Boolean components of
//! `2^t f`, compared with the transform.

use bentkit::boolfun::PairingSpec;
use bentkit::construct::{trace_family, ExponentPair, TraceVariant};
use bentkit::gf::make_field;
use bentkit::groupfun::{
    affine_space_check, affine_space_check_at, is_generalized_bent, GroupFunction,
};

fn main() -> bentkit::Result<()> {
    let field = make_field(6, None)?;
    let pair = ExponentPair::new(6, 2)?;
    let p = PairingSpec::trace(&field);
    let f1 = trace_family(&field, &pair, TraceVariant::F1, &field.subfield_basis(2)?)?;
    println!("f1: {:?}", affine_space_check(&f1, &p)?);

    // break one value and look again
    let mut values = f1.values().to_vec();
    values[77] = (values[77] + 1) % 4;
    let g = GroupFunction::new(12, f1.group().clone(), values)?;
    for t in 0..2 {
        let report = affine_space_check_at(&g, &p, t)?;
        let direct = is_generalized_bent(&g.scale(1 << t), &p)?;
        println!("t = {t}: transform {direct}, components {report:?}");
    }
    Ok(())
}
