use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::signature::{blade_mul, reorder_sign, BasisBlade, Signature};

/// Dense multivector: one coefficient per basis blade, indexed by blade mask.
#[derive(Clone, PartialEq, Debug)]
pub struct Multivector {
    sig: Signature,
    coeffs: Vec<f64>,
}

impl Multivector {
    pub fn zero(sig: Signature) -> Self {
        Multivector {
            sig,
            coeffs: vec![0.0; sig.blade_count()],
        }
    }

    pub fn scalar(sig: Signature, value: f64) -> Self {
        Self::blade(sig, BasisBlade::SCALAR, value)
    }

    /// `coeff * e_blade`. Panics if the blade does not belong to `sig`.
    pub fn blade(sig: Signature, blade: BasisBlade, coeff: f64) -> Self {
        assert!(sig.contains(blade), "blade {blade} not in {sig}");
        let mut mv = Self::zero(sig);
        mv.coeffs[blade.index()] = coeff;
        mv
    }

    /// The 1-vector `e_i`. Panics if `i` is out of range.
    pub fn basis_vector(sig: Signature, i: usize) -> Self {
        Self::blade(sig, BasisBlade::generator(i), 1.0)
    }

    /// All generators in ascending order with coefficient `+1`.
    pub fn pseudoscalar(sig: Signature) -> Self {
        Self::blade(sig, sig.pseudoscalar_blade(), 1.0)
    }

    /// Grade-1 element with the given coordinates on `e_0 .. e_{n-1}`.
    pub fn vector(sig: Signature, coords: &[f64]) -> Result<Self> {
        if coords.len() != sig.dim() {
            return Err(Error::GradeOutOfRange {
                grade: coords.len(),
                dim: sig.dim(),
            });
        }
        let mut mv = Self::zero(sig);
        for (i, &c) in coords.iter().enumerate() {
            mv.coeffs[1 << i] = c;
        }
        Ok(mv)
    }

    pub fn from_coeffs(sig: Signature, coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.len() != sig.blade_count() {
            return Err(Error::InvalidSignature(format!(
                "expected {} coefficients, got {}",
                sig.blade_count(),
                coeffs.len()
            )));
        }
        Ok(Multivector { sig, coeffs })
    }

    /// Parses a single blade name such as `e032` or `1`, resolving a
    /// non-canonical index order into a sign.
    pub fn parse_blade(sig: Signature, name: &str) -> Result<Self> {
        if name == "1" {
            return Ok(Self::scalar(sig, 1.0));
        }
        let digits = name
            .strip_prefix('e')
            .ok_or_else(|| Error::InvalidSignature(format!("not a blade name: {name}")))?;
        let mut indices = Vec::with_capacity(digits.len());
        for ch in digits.chars() {
            let d = ch
                .to_digit(10)
                .ok_or_else(|| Error::InvalidSignature(format!("not a blade name: {name}")))?
                as usize;
            if d >= sig.dim() {
                return Err(Error::UnknownGenerator {
                    index: d,
                    dim: sig.dim(),
                });
            }
            indices.push(d);
        }
        match BasisBlade::from_indices(&indices) {
            Some((sign, blade)) => Ok(Self::blade(sig, blade, sign as f64)),
            None => Ok(Self::zero(sig)),
        }
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeff(&self, blade: BasisBlade) -> f64 {
        self.coeffs[blade.index()]
    }

    pub fn set_coeff(&mut self, blade: BasisBlade, value: f64) {
        self.coeffs[blade.index()] = value;
    }

    pub fn scalar_part(&self) -> f64 {
        self.coeffs[0]
    }

    /// Non-zero terms in ascending blade order.
    pub fn terms(&self) -> impl Iterator<Item = (BasisBlade, f64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0.0)
            .map(|(i, &c)| (BasisBlade::from_mask(i as u32), c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0.0)
    }

    /// The single grade present, or `None` for zero and mixed-grade values.
    pub fn grade(&self) -> Option<usize> {
        let mut grades = self.terms().map(|(b, _)| b.grade());
        let first = grades.next()?;
        grades.all(|g| g == first).then_some(first)
    }

    pub fn max_abs_diff(&self, other: &Multivector) -> f64 {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Multivector, tol: f64) -> bool {
        self.sig == other.sig && self.max_abs_diff(other) <= tol
    }

    fn check_sig(&self, other: &Multivector) -> Result<()> {
        if self.sig != other.sig {
            return Err(Error::SignatureMismatch {
                left: self.sig,
                right: other.sig,
            });
        }
        Ok(())
    }

    /// Bilinear extension of a blade-level product `(a, b) -> (sign, out)`.
    fn product<F>(&self, other: &Multivector, blade_product: F) -> Result<Multivector>
    where
        F: Fn(BasisBlade, BasisBlade) -> Option<(f64, BasisBlade)>,
    {
        self.check_sig(other)?;
        let mut out = Multivector::zero(self.sig);
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                if let Some((sign, blade)) = blade_product(a, b) {
                    out.coeffs[blade.index()] += sign * x * y;
                }
            }
        }
        Ok(out)
    }

    /// Geometric product.
    pub fn gp(&self, other: &Multivector) -> Result<Multivector> {
        let sig = self.sig;
        self.product(other, |a, b| {
            let (sign, out) = blade_mul(a, b, &sig);
            (sign != 0).then_some((sign as f64, out))
        })
    }

    /// Outer (wedge) product. Never consults the metric.
    pub fn op(&self, other: &Multivector) -> Result<Multivector> {
        self.product(other, |a, b| {
            (a.mask() & b.mask() == 0).then(|| {
                (
                    reorder_sign(a, b) as f64,
                    BasisBlade::from_mask(a.mask() | b.mask()),
                )
            })
        })
    }

    /// Generalized inner product: for blades of grades `j` and `k`, the
    /// grade-`|j-k|` part of their geometric product.
    pub fn ip(&self, other: &Multivector) -> Result<Multivector> {
        let sig = self.sig;
        self.product(other, |a, b| {
            let (sign, out) = blade_mul(a, b, &sig);
            (sign != 0 && out.grade() == a.grade().abs_diff(b.grade()))
                .then_some((sign as f64, out))
        })
    }

    pub fn grade_project(&self, k: usize) -> Result<Multivector> {
        if k > self.sig.dim() {
            return Err(Error::GradeOutOfRange {
                grade: k,
                dim: self.sig.dim(),
            });
        }
        let mut out = self.clone();
        for (i, c) in out.coeffs.iter_mut().enumerate() {
            if (i as u32).count_ones() as usize != k {
                *c = 0.0;
            }
        }
        Ok(out)
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(BasisBlade, f64) -> f64) -> Multivector {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| f(BasisBlade::from_mask(i as u32), c))
            .collect();
        Multivector {
            sig: self.sig,
            coeffs,
        }
    }

    pub fn scale(&self, factor: f64) -> Multivector {
        self.map_coeffs(|_, c| c * factor)
    }

    pub fn try_add(&self, other: &Multivector) -> Result<Multivector> {
        self.check_sig(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Multivector {
            sig: self.sig,
            coeffs,
        })
    }

    pub fn try_sub(&self, other: &Multivector) -> Result<Multivector> {
        self.try_add(&other.scale(-1.0))
    }

    /// Formats the value as a sum of blades. Dual-algebra blades are written
    /// with a caret (`e^03`), and the dual scalar unit as a bare `e^`.
    pub(crate) fn write_terms(&self, f: &mut fmt::Formatter<'_>, dual: bool) -> fmt::Result {
        let mut first = true;
        for (blade, c) in self.terms() {
            let name = match (dual, blade == BasisBlade::SCALAR) {
                (false, true) => String::new(),
                (false, false) => blade.name(),
                (true, true) => "e^".to_string(),
                (true, false) => format!("e^{}", &blade.name()[1..]),
            };
            let magnitude = if first { c } else { c.abs() };
            if !first {
                f.write_str(if c < 0.0 { " - " } else { " + " })?;
            }
            first = false;
            if name.is_empty() {
                f.write_str(&format_scalar(magnitude))?;
            } else if magnitude == 1.0 {
                f.write_str(&name)?;
            } else if magnitude == -1.0 {
                write!(f, "-{name}")?;
            } else {
                write!(f, "{}*{name}", format_scalar(magnitude))?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Integers without a decimal point, everything else as the shortest
/// round-trip decimal.
pub(crate) fn format_scalar(x: f64) -> String {
    if x == 0.0 {
        "0".to_string()
    } else {
        format!("{x}")
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_terms(f, false)
    }
}

impl Add for &Multivector {
    type Output = Multivector;

    /// Panics on signature mismatch; see [`Multivector::try_add`].
    fn add(self, rhs: &Multivector) -> Multivector {
        self.try_add(rhs).expect("signature mismatch")
    }
}

impl Add for Multivector {
    type Output = Multivector;

    fn add(self, rhs: Multivector) -> Multivector {
        &self + &rhs
    }
}

impl Sub for &Multivector {
    type Output = Multivector;

    fn sub(self, rhs: &Multivector) -> Multivector {
        self.try_sub(rhs).expect("signature mismatch")
    }
}

impl Sub for Multivector {
    type Output = Multivector;

    fn sub(self, rhs: Multivector) -> Multivector {
        &self - &rhs
    }
}

impl Neg for &Multivector {
    type Output = Multivector;

    fn neg(self) -> Multivector {
        self.scale(-1.0)
    }
}

impl Neg for Multivector {
    type Output = Multivector;

    fn neg(self) -> Multivector {
        self.scale(-1.0)
    }
}

impl Mul<f64> for &Multivector {
    type Output = Multivector;

    fn mul(self, rhs: f64) -> Multivector {
        self.scale(rhs)
    }
}

impl Mul<f64> for Multivector {
    type Output = Multivector;

    fn mul(self, rhs: f64) -> Multivector {
        self.scale(rhs)
    }
}
