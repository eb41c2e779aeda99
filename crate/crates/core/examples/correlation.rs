//! Outermorphisms: a shear as a collineation, the naturality of J, and a
//! diagonal correlation sending lines of G to lines of G*.

use degen_pga::duality::hodge;
use degen_pga::outermorphism::{naturality_check, Outermorphism};
use degen_pga::{Multivector, Signature, TaggedMultivector};
use nalgebra::DMatrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> degen_pga::Result<()> {
    let plane = Signature::from_pqr(1, 0, 1)?;
    let shear = Outermorphism::collineation(DMatrix::from_row_slice(2, 2, &[1.0, 1.0, 0.0, 1.0]))?;
    let e0 = Multivector::basis_vector(plane, 0);
    println!("H(L e0) = {}", hodge(&shear.apply_payload(&e0)?));
    println!("L(H e0) = {}", shear.apply_payload(&hodge(&e0))?);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let report = naturality_check(&shear, plane, 50, &mut rng)?;
    println!(
        "J residual {:.1e}, H residual {:.1e}",
        report.j_residual, report.h_residual
    );

    let sig = Signature::pga3();
    let m = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![1.0, 2.0, 3.0, 4.0]));
    let inertia = Outermorphism::correlation(m)?;
    let bivectors = inertia.grade_matrix(sig, 2)?;
    println!("grade-2 matrix of diag(1,2,3,4):");
    println!("{}", bivectors.to_string().trim_matches('\n'));
    let line = TaggedMultivector::primal(Multivector::parse_blade(sig, "e12")?);
    println!("{} -> {}", line, inertia.apply(&line)?);
    Ok(())
}
