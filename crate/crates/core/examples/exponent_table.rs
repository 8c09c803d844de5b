//! Which cyclotomic classes of exponents admit a triple with
//! `(b0 + b1 + b2)^-e = b0^-e + b1^-e + b2^-e`.
//!
//! cargo run --release --example exponent_table -- 4 10

use bentkit::analyze::{classify_exponents, triple_condition};
use bentkit::gf::make_field;

fn main() -> bentkit::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<u32>().expect("integer argument"));
    let lo = args.next().unwrap_or(4);
    let hi = args.next().unwrap_or(8);
    for n in lo..=hi {
        let t = classify_exponents(n)?;
        println!(
            "n = {n}: {} fulfil, not fulfilling {:?}",
            t.fulfilled.len(),
            t.not_fulfilled
        );
    }
    let field = make_field(6, None)?;
    let (_, witness) = triple_condition(&field, 58);
    println!("first witness for e = 58: {witness:?}");
    Ok(())
}
