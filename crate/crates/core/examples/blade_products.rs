//! Geometric, outer and inner products in plane-based PGA.
//!
//! Run with `cargo run --example blade_products`.

use degen_pga::{Multivector, Signature};

fn main() -> degen_pga::Result<()> {
    let sig = Signature::pga3();
    let e = |name: &str| Multivector::parse_blade(sig, name);

    let (e0, e1, e2) = (e("e0")?, e("e1")?, e("e2")?);
    println!("signature      {sig}");
    println!("e0 * e0      = {}", e0.gp(&e0)?);
    println!("e1 * e1      = {}", e1.gp(&e1)?);
    println!("e1 * e2      = {}", e1.gp(&e2)?);
    println!("e2 ^ e1      = {}", e2.op(&e1)?);

    // Two planes meet in a line.
    let x = e1.clone() + e0.scale(2.0);
    let y = e2.clone() - e0;
    let line = x.op(&y)?;
    println!("(e1 + 2e0) ^ (e2 - e0) = {line}");
    println!("grade {:?}", line.grade());

    let i = Multivector::pseudoscalar(sig);
    println!("I * I        = {}", i.gp(&i)?);
    println!("e12 . e12    = {}", e("e12")?.ip(&e("e12")?)?);
    Ok(())
}
