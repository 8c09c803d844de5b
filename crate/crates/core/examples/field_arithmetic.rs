//! Arithmetic in GF(2^m): the default modulus, powers, relative traces and a
//! basis of the subfield GF(2^k).
//!
//! cargo run --example field_arithmetic -- 6 2

use bentkit::gf::{make_field, mod_inverse, FieldElement};

fn main() -> bentkit::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<u32>().expect("integer argument"));
    let m = args.next().unwrap_or(6);
    let k = args.next().unwrap_or(2);
    let field = make_field(m, None)?;
    println!("GF(2^{m}) modulo {:#x}", field.modulus());

    let g = field.primitive_element();
    println!("primitive element {g}, order {:?}", field.order(g));
    let a = field.element(0b101)?;
    let b = field.inv(a);
    println!("{a} * {b} = {}", field.mul(a, b));
    println!(
        "0^0 = {} (every power of zero is zero)",
        field.pow(FieldElement::ZERO, 0)
    );

    let basis = field.subfield_basis(k)?;
    println!(
        "basis of GF(2^{k}): {:?}",
        basis
            .elements()
            .iter()
            .map(|x| x.value())
            .collect::<Vec<_>>()
    );
    for x in field.elements().take(8) {
        println!(
            "Tr_{k}({x}) = {}   Tr({x}) = {}",
            field.trace(x, k)?,
            field.abs_trace(x)
        );
    }

    let order = field.group_order();
    let e = (1i64 << m) - (1 << k) - 2;
    match mod_inverse(e, order) {
        Some(d) => println!("e = {e}, d = e^-1 mod {order} = {d}"),
        None => println!("e = {e} is not invertible modulo {order}"),
    }
    Ok(())
}
