//! The complement, dual coordinate and polarity maps on the basis of (3,0,1).

use degen_pga::duality::{hodge, poincare, polarity, raise};
use degen_pga::{Multivector, Signature};

fn main() {
    let sig = Signature::pga3();
    println!("{:>6} {:>8} {:>8} {:>8} {:>8}", "blade", "H", "J", "P", "R");
    for b in sig.blades() {
        let x = Multivector::blade(sig, b, 1.0);
        println!(
            "{:>6} {:>8} {:>8} {:>8} {:>8}",
            b.name(),
            hodge(&x).to_string(),
            poincare(&x).to_string(),
            polarity(&x).to_string(),
            raise(&x).to_string(),
        );
    }
    println!();
    println!("P loses every blade that contains e0; H and J do not.");
}
