//! Vector coordinates in a frame, with and without a metric.
//!
//! The reciprocal frame needs an invertible pseudoscalar. The canonical dual
//! basis needs only the outer product, so it also works in (3,0,1).

use degen_pga::frames::{coords_via_dual_basis, coords_via_reciprocal, Frame};
use degen_pga::{Multivector, Signature};

fn main() -> degen_pga::Result<()> {
    let euclid = Signature::euclidean(2)?;
    let frame = Frame::from_rows(euclid, &[vec![1.0, 0.0], vec![1.0, 1.0]])?;
    let b = Multivector::vector(euclid, &[2.0, 3.0])?;
    println!("frame {{e0, e0 + e1}} in {euclid}");
    println!(
        "  reciprocal frame : {:?}",
        coords_via_reciprocal(&b, &frame)?
    );
    println!(
        "  dual basis       : {:?}",
        coords_via_dual_basis(&b, &frame)?
    );

    let null = Signature::from_pqr(1, 0, 1)?;
    let frame = Frame::from_rows(null, &[vec![1.0, 0.0], vec![1.0, 1.0]])?;
    let dual: Vec<String> = frame
        .canonical_dual_basis()
        .iter()
        .map(|v| v.to_string())
        .collect();
    println!("frame {{e0, e0 + e1}} in {null}");
    println!("  canonical dual basis {{{}}}", dual.join(", "));
    let b = Multivector::vector(null, &[2.0, 3.0])?;
    let c = coords_via_dual_basis(&b, &frame)?;
    println!("  dual basis       : {c:?} -> {}", frame.combine(&c));
    match coords_via_reciprocal(&b, &frame) {
        Ok(c) => println!("  reciprocal frame : {c:?}"),
        Err(e) => println!("  reciprocal frame : {e}"),
    }
    Ok(())
}
