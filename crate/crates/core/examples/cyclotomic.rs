use bentkit::cyclo::{unit_root, CycloInt};

/// Exact arithmetic in Z[zeta_8] and the integer test behind |H|^2 = 2^n.
fn main() -> bentkit::Result<()> {
    let z = unit_root(3, 1);
    let one_plus = &CycloInt::from_integer(3, 1) + &z;
    println!("(1 + z)^2 = {:?}", (&one_plus * &one_plus).coeffs());
    println!(
        "|1 + z|^2 = {:?} ~ {:?}",
        one_plus.norm_sq().coeffs(),
        one_plus.norm_sq().to_complex()
    );

    // 1 + i + i^2 + .. sums over characters of Z_4
    let sum = (0..4).fold(CycloInt::zero(3), |acc, t| &acc + &unit_root(3, 2 * t));
    println!("sum of the fourth roots of unity: {:?}", sum.as_integer());

    // (1 + i)(1 - i) = 2 is an integer, (1 + i)^2 = 2i is not
    let a = CycloInt::from_coeffs(2, vec![1, 1])?;
    let b = a.conj();
    println!(
        "(1+i)(1-i) = {:?}, (1+i)^2 = {:?}",
        a.try_mul(&b)?.as_integer(),
        a.try_mul(&a)?.as_integer()
    );
    Ok(())
}
