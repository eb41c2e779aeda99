//! Coordinates of 1-vectors with respect to an arbitrary basis.
//!
//! Two routes are provided. The metric route builds the reciprocal frame and
//! needs an invertible pseudoscalar. The metric-free route builds the
//! canonical dual basis of `(n-1)`-vectors, `e_i ∧ e*_j = δ_i^j I_f`, and
//! reads coordinates off wedge products, so it also works when the metric is
//! degenerate.
//!
//! `I_f = e_1 ∧ … ∧ e_n` is the frame's own pseudoscalar. Both routes
//! normalise by it, which makes them valid for frames that are not
//! unimodular. For unimodular frames `I_f` is the algebra pseudoscalar.
//!
//! The coordinate `b̂_i` is defined by `b ∧ e*_i = b̂_i I_f`.

use crate::error::{Error, Result};
use crate::multivector::Multivector;
use crate::signature::Signature;

/// An ordered basis of 1-vectors, checked for linear independence.
#[derive(Clone, Debug, PartialEq)]
pub struct Frame {
    sig: Signature,
    vectors: Vec<Multivector>,
}

impl Frame {
    pub fn new(sig: Signature, vectors: Vec<Multivector>) -> Result<Self> {
        if vectors.len() != sig.dim() {
            return Err(Error::InvalidFrame(format!(
                "expected {} vectors, got {}",
                sig.dim(),
                vectors.len()
            )));
        }
        let mut scale = 1.0;
        for v in &vectors {
            if v.sig() != sig {
                return Err(Error::SignatureMismatch {
                    left: sig,
                    right: v.sig(),
                });
            }
            if v.terms().any(|(b, _)| b.grade() != 1) {
                return Err(Error::InvalidFrame(format!("{v} is not a 1-vector")));
            }
            scale *= v.coeffs().iter().map(|c| c * c).sum::<f64>().sqrt();
        }
        let frame = Frame { sig, vectors };
        let volume = frame.volume();
        if volume == 0.0 || volume.abs() <= 1e-12 * scale {
            return Err(Error::SingularFrame);
        }
        Ok(frame)
    }

    /// The standard basis `e_0, …, e_{n-1}`.
    pub fn standard(sig: Signature) -> Self {
        let vectors = (0..sig.dim())
            .map(|i| Multivector::basis_vector(sig, i))
            .collect();
        Frame { sig, vectors }
    }

    /// Builds a frame from coordinate rows, one row per basis vector.
    pub fn from_rows(sig: Signature, rows: &[Vec<f64>]) -> Result<Self> {
        let vectors = rows
            .iter()
            .map(|r| Multivector::vector(sig, r))
            .collect::<Result<Vec<_>>>()?;
        Self::new(sig, vectors)
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn vectors(&self) -> &[Multivector] {
        &self.vectors
    }

    /// `e_1 ∧ … ∧ e_n`.
    pub fn pseudoscalar(&self) -> Multivector {
        wedge_all(self.sig, self.vectors.iter())
    }

    /// Coefficient of the frame pseudoscalar on the algebra pseudoscalar,
    /// i.e. the determinant of the coordinate matrix.
    pub fn volume(&self) -> f64 {
        self.pseudoscalar().coeff(self.sig.pseudoscalar_blade())
    }

    /// `(-1)^i` times the wedge of all vectors except the one at position `i`.
    fn complement_wedge(&self, i: usize) -> Multivector {
        let rest = self
            .vectors
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, v)| v);
        let w = wedge_all(self.sig, rest);
        if i.is_multiple_of(2) {
            w
        } else {
            -w
        }
    }

    /// Reciprocal frame `e^i = (-1)^i (e_0 ∧ … ê_i … ∧ e_{n-1}) · I_f⁻¹`
    /// with 0-based positions, so that `e^i · e_j = δ^i_j`.
    pub fn reciprocal(&self) -> Result<Frame> {
        if self.sig.is_degenerate() {
            return Err(Error::DegenerateMetric);
        }
        let i_f = self.pseudoscalar();
        let norm = i_f.gp(&i_f)?.scalar_part();
        if norm == 0.0 {
            return Err(Error::DegenerateMetric);
        }
        let i_f_inv = i_f.scale(1.0 / norm);
        let vectors = (0..self.vectors.len())
            .map(|i| self.complement_wedge(i).ip(&i_f_inv))
            .collect::<Result<Vec<_>>>()?;
        Ok(Frame {
            sig: self.sig,
            vectors,
        })
    }

    /// Canonical dual basis `e*_i = (-1)^i e_0 ∧ … ê_i … ∧ e_{n-1}`.
    /// Metric-free.
    pub fn canonical_dual_basis(&self) -> Vec<Multivector> {
        (0..self.vectors.len())
            .map(|i| self.complement_wedge(i))
            .collect()
    }

    /// Recombines coordinates into `Σ c_i e_i`.
    pub fn combine(&self, coords: &[f64]) -> Multivector {
        self.vectors
            .iter()
            .zip(coords)
            .fold(Multivector::zero(self.sig), |acc, (v, &c)| acc + v * c)
    }
}

fn wedge_all<'a>(sig: Signature, vectors: impl Iterator<Item = &'a Multivector>) -> Multivector {
    vectors.fold(Multivector::scalar(sig, 1.0), |acc, v| {
        acc.op(v).expect("frame vectors share one signature")
    })
}

fn check_vector(b: &Multivector, f: &Frame) -> Result<()> {
    if b.sig() != f.sig() {
        return Err(Error::SignatureMismatch {
            left: f.sig(),
            right: b.sig(),
        });
    }
    if let Some((blade, _)) = b.terms().find(|(blade, _)| blade.grade() != 1) {
        return Err(Error::GradeOutOfRange {
            grade: blade.grade(),
            dim: f.sig().dim(),
        });
    }
    Ok(())
}

/// `b_i = e^i · b` using the reciprocal frame.
pub fn coords_via_reciprocal(b: &Multivector, f: &Frame) -> Result<Vec<f64>> {
    check_vector(b, f)?;
    f.reciprocal()?
        .vectors()
        .iter()
        .map(|r| Ok(r.ip(b)?.scalar_part()))
        .collect()
}

/// `b̂_i` from `b ∧ e*_i = b̂_i I_f`, as a ratio of pseudoscalar coefficients.
pub fn coords_via_dual_basis(b: &Multivector, f: &Frame) -> Result<Vec<f64>> {
    check_vector(b, f)?;
    let top = f.sig().pseudoscalar_blade();
    let volume = f.volume();
    f.canonical_dual_basis()
        .iter()
        .map(|d| Ok(b.op(d)?.coeff(top) / volume))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn blade(sig: Signature, name: &str) -> Multivector {
        Multivector::parse_blade(sig, name).unwrap()
    }

    #[test]
    fn orthonormal_frame_is_self_reciprocal() {
        let sig = Signature::euclidean(4).unwrap();
        let f = Frame::standard(sig);
        assert_eq!(f.reciprocal().unwrap(), f);
    }

    #[test]
    fn reciprocal_of_sheared_frame_is_kronecker() {
        let sig = Signature::euclidean(4).unwrap();
        let f = Frame::from_rows(
            sig,
            &[
                vec![1.0, 0.0, 0.0, 0.0],
                vec![1.0, 1.0, 0.0, 0.0],
                vec![0.0, 0.0, 1.0, 0.0],
                vec![0.0, 0.0, 0.0, 1.0],
            ],
        )
        .unwrap();
        let r = f.reciprocal().unwrap();
        for (i, ri) in r.vectors().iter().enumerate() {
            for (j, ej) in f.vectors().iter().enumerate() {
                let expected = if i == j { 1.0 } else { 0.0 };
                assert_eq!(ri.ip(ej).unwrap().scalar_part(), expected);
            }
        }
    }

    #[test]
    fn reciprocal_fails_in_degenerate_metric() {
        let f = Frame::standard(Signature::pga3());
        assert_eq!(f.reciprocal(), Err(Error::DegenerateMetric));
        let b = blade(Signature::pga3(), "e2");
        assert_eq!(coords_via_reciprocal(&b, &f), Err(Error::DegenerateMetric));
    }

    #[test]
    fn two_dimensional_dual_bases() {
        let sig = Signature::from_pqr(1, 0, 1).unwrap();
        let (e0, e1) = (blade(sig, "e0"), blade(sig, "e1"));
        let standard = Frame::standard(sig);
        assert_eq!(standard.canonical_dual_basis(), vec![e1.clone(), -&e0]);
        let sheared = Frame::new(sig, vec![e0.clone(), &e0 + &e1]).unwrap();
        assert_eq!(sheared.canonical_dual_basis(), vec![&e0 + &e1, -&e0]);
        assert_ne!(
            standard.canonical_dual_basis()[0],
            sheared.canonical_dual_basis()[0]
        );
    }

    #[test]
    fn pga_standard_dual_basis() {
        let sig = Signature::pga3();
        let expected: Vec<_> = ["e123", "e032", "e013", "e021"]
            .iter()
            .map(|n| blade(sig, n))
            .collect();
        assert_eq!(Frame::standard(sig).canonical_dual_basis(), expected);
    }

    #[test]
    fn dual_basis_coordinates() {
        let sig = Signature::pga3();
        let f = Frame::standard(sig);
        assert_eq!(
            coords_via_dual_basis(&blade(sig, "e2"), &f).unwrap(),
            vec![0.0, 0.0, 1.0, 0.0]
        );
        for sig in [
            Signature::from_pqr(1, 0, 1).unwrap(),
            Signature::euclidean(2).unwrap(),
        ] {
            let (e0, e1) = (blade(sig, "e0"), blade(sig, "e1"));
            let f = Frame::new(sig, vec![e0.clone(), &e0 + &e1]).unwrap();
            let b = &e0 * 2.0 + &e1 * 3.0;
            assert_eq!(coords_via_dual_basis(&b, &f).unwrap(), vec![-1.0, 3.0]);
        }
        let sig = Signature::euclidean(2).unwrap();
        let (e0, e1) = (blade(sig, "e0"), blade(sig, "e1"));
        let f = Frame::new(sig, vec![e0.clone(), &e0 + &e1]).unwrap();
        let b = &e0 * 2.0 + &e1 * 3.0;
        assert_eq!(coords_via_reciprocal(&b, &f).unwrap(), vec![-1.0, 3.0]);
    }

    #[test]
    fn construction_errors() {
        let sig = Signature::pga3();
        let e0 = blade(sig, "e0");
        let dup = vec![e0.clone(), e0.clone(), blade(sig, "e2"), blade(sig, "e3")];
        assert_eq!(Frame::new(sig, dup), Err(Error::SingularFrame));
        assert!(matches!(
            Frame::new(sig, vec![e0.clone()]),
            Err(Error::InvalidFrame(_))
        ));
        let bad = vec![
            blade(sig, "e01"),
            blade(sig, "e1"),
            blade(sig, "e2"),
            blade(sig, "e3"),
        ];
        assert!(matches!(Frame::new(sig, bad), Err(Error::InvalidFrame(_))));
    }

    #[test]
    fn non_unimodular_frame() {
        let sig = Signature::pga3();
        let f = Frame::from_rows(
            sig,
            &[
                vec![2.0, 0.0, 0.0, 0.0],
                vec![0.0, 1.0, 1.0, 0.0],
                vec![0.0, 0.0, 3.0, 0.0],
                vec![1.0, 0.0, 0.0, -1.0],
            ],
        )
        .unwrap();
        let i_f = f.pseudoscalar();
        for (i, ei) in f.vectors().iter().enumerate() {
            for (j, dj) in f.canonical_dual_basis().iter().enumerate() {
                let expected = if i == j {
                    i_f.clone()
                } else {
                    Multivector::zero(sig)
                };
                assert_eq!(ei.op(dj).unwrap(), expected);
            }
        }
        let b = Multivector::vector(sig, &[1.0, -2.0, 5.0, 4.0]).unwrap();
        let coords = coords_via_dual_basis(&b, &f).unwrap();
        assert!(f.combine(&coords).approx_eq(&b, 1e-12));
    }
}
