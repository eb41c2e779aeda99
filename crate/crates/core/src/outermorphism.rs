//! Outermorphisms generated by linear maps on 1-vectors.
//!
//! A map whose source and target carry the same tag is a collineation; one
//! that switches between `G` and `G*` is a correlation. A diagonal
//! correlation restricted to bivectors is the familiar diagonal form of an
//! inertia-like operator from lines in `G` to lines in `G*`.

use nalgebra::DMatrix;
use rand::Rng;

use crate::dualflag::TaggedMultivector;
use crate::duality::{hodge, poincare};
use crate::error::{Error, Result};
use crate::multivector::Multivector;
use crate::signature::{BasisBlade, Signature};

#[derive(Clone, Debug, PartialEq)]
pub struct Outermorphism {
    /// Column `j` holds the coordinates of the image of `e_j`.
    matrix: DMatrix<f64>,
    source_dual: bool,
    target_dual: bool,
}

impl Outermorphism {
    pub fn new(matrix: DMatrix<f64>, source_dual: bool, target_dual: bool) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::MatrixShape {
                rows: matrix.nrows(),
                cols: matrix.ncols(),
                dim: matrix.nrows(),
            });
        }
        Ok(Outermorphism {
            matrix,
            source_dual,
            target_dual,
        })
    }

    /// `G → G`.
    pub fn collineation(matrix: DMatrix<f64>) -> Result<Self> {
        Self::new(matrix, false, false)
    }

    /// `G → G*`.
    pub fn correlation(matrix: DMatrix<f64>) -> Result<Self> {
        Self::new(matrix, false, true)
    }

    pub fn identity(dim: usize) -> Self {
        Outermorphism {
            matrix: DMatrix::identity(dim, dim),
            source_dual: false,
            target_dual: false,
        }
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn source_dual(&self) -> bool {
        self.source_dual
    }

    pub fn target_dual(&self) -> bool {
        self.target_dual
    }

    pub fn is_correlation(&self) -> bool {
        self.source_dual != self.target_dual
    }

    pub fn determinant(&self) -> f64 {
        self.matrix.determinant()
    }

    /// Inverse map, with source and target swapped.
    pub fn inverse(&self) -> Result<Self> {
        let inv = self
            .matrix
            .clone()
            .try_inverse()
            .ok_or(Error::SingularMatrix)?;
        Self::new(inv, self.target_dual, self.source_dual)
    }

    /// The contragredient `L^{-T}` with the given tags.
    pub fn contragredient(&self, source_dual: bool, target_dual: bool) -> Result<Self> {
        let inv = self
            .matrix
            .clone()
            .try_inverse()
            .ok_or(Error::SingularMatrix)?;
        Self::new(inv.transpose(), source_dual, target_dual)
    }

    fn check_dim(&self, sig: Signature) -> Result<()> {
        if self.dim() != sig.dim() {
            return Err(Error::MatrixShape {
                rows: self.matrix.nrows(),
                cols: self.matrix.ncols(),
                dim: sig.dim(),
            });
        }
        Ok(())
    }

    fn image_of_generator(&self, sig: Signature, j: usize) -> Multivector {
        let coords: Vec<f64> = self.matrix.column(j).iter().copied().collect();
        Multivector::vector(sig, &coords).expect("dimension checked")
    }

    /// Extends the map to a payload: scalars are fixed, 1-vectors go through
    /// the matrix, and a blade maps to the wedge of the images of its factors.
    pub fn apply_payload(&self, x: &Multivector) -> Result<Multivector> {
        let sig = x.sig();
        self.check_dim(sig)?;
        let images: Vec<Multivector> = (0..sig.dim())
            .map(|j| self.image_of_generator(sig, j))
            .collect();
        let mut out = Multivector::zero(sig);
        for (blade, c) in x.terms() {
            let image = blade
                .indices()
                .try_fold(Multivector::scalar(sig, 1.0), |acc, i| acc.op(&images[i]))?;
            out = out.try_add(&image.scale(c))?;
        }
        Ok(out)
    }

    /// Applies the map to a tagged value, whose tag must be the source tag.
    pub fn apply(&self, x: &TaggedMultivector) -> Result<TaggedMultivector> {
        if x.is_dual() != self.source_dual {
            return Err(Error::TagMismatch {
                expected: self.source_dual,
                found: x.is_dual(),
            });
        }
        Ok(TaggedMultivector::new(
            self.apply_payload(x.payload())?,
            self.target_dual,
        ))
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn compose(&self, first: &Outermorphism) -> Result<Outermorphism> {
        if first.target_dual != self.source_dual {
            return Err(Error::TagMismatch {
                expected: self.source_dual,
                found: first.target_dual,
            });
        }
        if first.dim() != self.dim() {
            return Err(Error::MatrixShape {
                rows: first.matrix.nrows(),
                cols: first.matrix.ncols(),
                dim: self.dim(),
            });
        }
        Self::new(
            &self.matrix * &first.matrix,
            first.source_dual,
            self.target_dual,
        )
    }

    /// Matrix of the map on grade-`k` blades, in ascending blade order.
    pub fn grade_matrix(&self, sig: Signature, k: usize) -> Result<DMatrix<f64>> {
        self.check_dim(sig)?;
        let blades: Vec<BasisBlade> = sig.blades().filter(|b| b.grade() == k).collect();
        let mut m = DMatrix::zeros(blades.len(), blades.len());
        for (col, &blade) in blades.iter().enumerate() {
            let image = self.apply_payload(&Multivector::blade(sig, blade, 1.0))?;
            for (row, &target) in blades.iter().enumerate() {
                m[(row, col)] = image.coeff(target);
            }
        }
        Ok(m)
    }
}

/// Free-function form of [`Outermorphism::apply`].
pub fn om_apply(map: &Outermorphism, x: &TaggedMultivector) -> Result<TaggedMultivector> {
    map.apply(x)
}

/// Free-function form of [`Outermorphism::compose`]: `second ∘ first`.
pub fn om_compose(second: &Outermorphism, first: &Outermorphism) -> Result<Outermorphism> {
    second.compose(first)
}

#[derive(Clone, Debug, PartialEq)]
pub struct NaturalityReport {
    pub trials: usize,
    pub determinant: f64,
    /// Largest coefficient error of `J(L x) - det(L) L^{-T}(J x)`.
    pub j_residual: f64,
    /// Largest coefficient error of `H(L x) - L(H x)`.
    pub h_residual: f64,
}

impl NaturalityReport {
    pub fn j_natural(&self, tol: f64) -> bool {
        self.j_residual <= tol
    }

    pub fn h_commutes(&self, tol: f64) -> bool {
        self.h_residual <= tol
    }
}

/// Checks `J(ΛL x) = det(L) Λ(L^{-T}) J(x)` on random `x`, and reports how
/// far `H` is from commuting with `ΛL`.
pub fn naturality_check<R: Rng + ?Sized>(
    map: &Outermorphism,
    sig: Signature,
    trials: usize,
    rng: &mut R,
) -> Result<NaturalityReport> {
    if map.is_correlation() || map.source_dual {
        return Err(Error::TagMismatch {
            expected: false,
            found: map.source_dual || map.target_dual,
        });
    }
    map.check_dim(sig)?;
    let det = map.determinant();
    let dual_side = map.contragredient(true, true)?;
    let mut j_residual: f64 = 0.0;
    let mut h_residual: f64 = 0.0;
    for _ in 0..trials {
        let coeffs = (0..sig.blade_count())
            .map(|_| rng.random_range(-1.0..1.0))
            .collect();
        let x = Multivector::from_coeffs(sig, coeffs)?;
        let mapped = map.apply_payload(&x)?;
        let lhs = poincare(&mapped);
        let rhs = dual_side.apply(&poincare(&x))?;
        j_residual = j_residual.max(lhs.payload().max_abs_diff(&rhs.payload().scale(det)));
        let h_lhs = hodge(&mapped);
        let h_rhs = map.apply_payload(&hodge(&x))?;
        h_residual = h_residual.max(h_lhs.max_abs_diff(&h_rhs));
    }
    Ok(NaturalityReport {
        trials,
        determinant: det,
        j_residual,
        h_residual,
    })
}
