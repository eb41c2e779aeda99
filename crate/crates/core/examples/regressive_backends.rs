//! The four regressive product backends side by side.

use degen_pga::regressive::{proportionality, vee, Backend};
use degen_pga::{Multivector, Signature};

fn show(sig: Signature, a: &str, b: &str) -> degen_pga::Result<()> {
    let x = Multivector::parse_blade(sig, a)?;
    let y = Multivector::parse_blade(sig, b)?;
    println!("{a} & {b} in {sig}");
    let reference = vee(&x, &y, Backend::Poincare)?;
    for backend in Backend::ALL {
        match vee(&x, &y, backend) {
            Ok(v) => {
                let ratio = proportionality(&v, &reference, 1e-12);
                println!("  {:>8}: {v}   (ratio to j: {ratio:?})", backend.name());
            }
            Err(e) => println!("  {:>8}: {e}", backend.name()),
        }
    }
    Ok(())
}

fn main() -> degen_pga::Result<()> {
    let pga = Signature::pga3();
    show(pga, "e123", "e032")?;
    show(pga, "e0", "e123")?;
    show(Signature::euclidean(4)?, "e123", "e032")?;
    Ok(())
}
