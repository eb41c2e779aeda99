//! Tagged multivectors: the unified dual map and mixed-algebra products.

use degen_pga::dualflag::{dual, gp_tagged, vee_tagged, wedge_tagged};
use degen_pga::{DualityConfig, Multivector, Signature, TaggedMultivector};

fn main() -> degen_pga::Result<()> {
    let sig = Signature::pga3();
    let g = |s: &str| Multivector::parse_blade(sig, s).map(TaggedMultivector::primal);
    let strict = DualityConfig::strict();

    let plane = g("e0")?;
    let point = dual(&plane, &strict);
    println!(
        "D(e0) = {point}  [{}]",
        point.describe().unwrap_or_default()
    );
    println!("D(D(e0)) = {}", dual(&point, &strict));

    let line = wedge_tagged(&g("e1")?, &g("e2")?, &strict)?;
    println!(
        "e1 ^ e2 = {line}  [{}]",
        line.describe().unwrap_or_default()
    );
    let spear = dual(&line, &strict);
    println!(
        "D(e12) = {spear}  [{}]",
        spear.describe().unwrap_or_default()
    );

    // Joining two points in the dual algebra is a wedge there.
    let p = dual(&g("e123")?, &strict);
    let q = dual(&g("e032")?, &strict);
    println!("join in G*: {}", wedge_tagged(&p, &q, &strict)?);
    // The regressive product of G* is the meet of the G elements.
    let (a, b) = (dual(&g("e1")?, &strict), dual(&g("e2")?, &strict));
    println!("{a} & {b} in G* = {}", vee_tagged(&a, &b, &strict)?);

    match gp_tagged(&g("e1")?, &point, &strict) {
        Ok(v) => println!("strict e1 * D(e0) = {v}"),
        Err(e) => println!("strict e1 * D(e0): {e}"),
    }
    let lenient = DualityConfig::lenient();
    println!(
        "lenient e1 * D(e0) = {}",
        gp_tagged(&g("e1")?, &point, &lenient)?
    );
    println!(
        "untagged e1 * D(e0) = {}",
        gp_tagged(&g("e1")?, &point, &DualityConfig::disabled())?
    );
    Ok(())
}
