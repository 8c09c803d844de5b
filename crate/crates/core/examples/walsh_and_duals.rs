//! Walsh spectra, duals and algebraic degree of a Maiorana-McFarland function
//! under the dot product and under the trace pairing.

use bentkit::boolfun::{anf_degree, bent_dual, walsh_spectrum, PairingSpec, TruthTable};
use bentkit::gf::make_field;

fn main() -> bentkit::Result<()> {
    let h = 4;
    let n = 2 * h;
    // x . pi(y), pi a bit rotation
    let pi = |y: usize| ((y << 1) | (y >> (h - 1))) & ((1 << h) - 1);
    let f = TruthTable::from_fn(n, |i| {
        ((i >> h) & pi(i & ((1 << h) - 1))).count_ones() % 2 == 1
    });

    let dot = PairingSpec::dot(n);
    let spec = walsh_spectrum(&f, &dot)?;
    println!(
        "weight {}, Parseval sum {}, flat {}",
        f.weight(),
        spec.parseval_sum(),
        spec.is_flat()
    );
    println!("first spectrum values {:?}", &spec.values()[..8]);

    let dual = bent_dual(&f, &dot)?.expect("bent");
    println!(
        "dual weight {}, dual of dual is f: {}",
        dual.weight(),
        bent_dual(&dual, &dot)?.as_ref() == Some(&f)
    );
    println!("degree {}", anf_degree(&f).degree);

    let field = make_field(h, None)?;
    let trace = PairingSpec::trace(&field);
    let other = bent_dual(&f, &trace)?.expect("bentness does not depend on the pairing");
    println!("trace-pairing dual weight {}", other.weight());

    let random = TruthTable::from_fn(n, |i| (i * 2654435761usize) >> 7 & 1 == 1);
    println!("a hashed table is bent: {}", random.is_bent(&dot)?);
    Ok(())
}
