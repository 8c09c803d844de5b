//! The trace families `f1(x, y) = sum_i 2^i Tr(alpha_i x y^d)` and
//! `f2(x, y) = sum_i 2^i Tr(alpha_i^-e x^e y)` into Z_(2^k), checked exactly.
//!
//! cargo run --release --example zbent_trace_families -- 9 3

use std::time::Instant;

use bentkit::analyze::{constant_on, constant_on_cells};
use bentkit::boolfun::{anf_degree, PairingSpec};
use bentkit::construct::{trace_family, ExponentPair, TraceVariant};
use bentkit::gf::make_field;
use bentkit::groupfun::is_group_bent;
use bentkit::spread::{desarguesian, gamma_partition, Side};

fn main() -> bentkit::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<u32>().expect("integer argument"));
    let m = args.next().unwrap_or(6);
    let k = args.next().unwrap_or(2);
    let field = make_field(m, None)?;
    let pair = ExponentPair::new(m, k)?;
    let basis = field.subfield_basis(k)?;
    let p = PairingSpec::trace(&field);
    println!("m = {m}, k = {k}, e = {}, d = {}", pair.e(), pair.d());

    for (name, variant, side) in [
        ("f1", TraceVariant::F1, Side::B),
        ("f2", TraceVariant::F2, Side::A),
    ] {
        let start = Instant::now();
        let f = trace_family(&field, &pair, variant, &basis)?;
        let bent = is_group_bent(&f, &p)?;
        let degrees: Vec<u32> = f
            .components()?
            .iter()
            .map(|c| anf_degree(c).degree)
            .collect();
        let spread = constant_on_cells(&f, 2 * m, &desarguesian(&field).punctured_cells())?;
        let gamma = constant_on(&f, &gamma_partition(&field, k, side)?)?;
        println!(
            "{name}: Z_{}-bent {bent}, component degrees {degrees:?}, constant on the spread {spread}, \
             on its trace cells {gamma} ({:.2?})",
            1u32 << k,
            start.elapsed()
        );
    }
    Ok(())
}
