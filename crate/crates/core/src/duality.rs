//! Duality maps built from one signed-complement table.
//!
//! For every basis blade `e_I` the table stores the sign `σ_I` for which
//! `e_I ∧ σ_I e_{Iᶜ} = I`. The right complement (Hodge map) `H` and the
//! dual coordinate (Poincaré) map `J` are both the linear extension of
//! `e_I ↦ σ_I e_{Iᶜ}`. They differ only in where the result lives: `H`
//! stays in `G`, `J` lands in the dual algebra `G*`, which has the same
//! signature and is marked by the `is_dual` tag.
//!
//! The metric polarity `P(X) = X I` is provided alongside. It agrees with
//! `H` up to a per-blade sign when the metric is non-degenerate and loses
//! information when it is not.

use std::sync::OnceLock;

use crate::dualflag::TaggedMultivector;
use crate::error::{Error, Result};
use crate::multivector::Multivector;
use crate::signature::{reorder_sign, BasisBlade, Signature, MAX_DIM};

/// Signed complements of every basis blade of an `n`-generator algebra.
///
/// The table depends only on the generator count, never on the metric.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplementTable {
    dim: usize,
    signs: Vec<i8>,
}

impl ComplementTable {
    pub fn new(dim: usize) -> Self {
        let full = (1u32 << dim) - 1;
        let signs = (0..=full)
            .map(|m| reorder_sign(BasisBlade::from_mask(m), BasisBlade::from_mask(full ^ m)))
            .collect();
        ComplementTable { dim, signs }
    }

    /// Shared table for `sig`, built on first use.
    pub fn for_signature(sig: &Signature) -> &'static ComplementTable {
        static TABLES: [OnceLock<ComplementTable>; MAX_DIM + 1] =
            [const { OnceLock::new() }; MAX_DIM + 1];
        TABLES[sig.dim()].get_or_init(|| ComplementTable::new(sig.dim()))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn full(&self) -> u32 {
        (1u32 << self.dim) - 1
    }

    /// `(σ_I, Iᶜ)` for the blade `I`.
    pub fn entry(&self, blade: BasisBlade) -> (i8, BasisBlade) {
        (
            self.signs[blade.index()],
            BasisBlade::from_mask(self.full() ^ blade.mask()),
        )
    }

    /// `e_I ↦ σ_I e_{Iᶜ}`, extended linearly.
    pub fn apply(&self, x: &Multivector) -> Multivector {
        let mut out = Multivector::zero(x.sig());
        for (blade, c) in x.terms() {
            let (sign, target) = self.entry(blade);
            out.set_coeff(target, sign as f64 * c);
        }
        out
    }

    /// Exact inverse of [`ComplementTable::apply`].
    pub fn apply_inv(&self, x: &Multivector) -> Multivector {
        let mut out = Multivector::zero(x.sig());
        for (blade, c) in x.terms() {
            let (_, source) = self.entry(blade);
            let (sign, _) = self.entry(source);
            out.set_coeff(source, sign as f64 * c);
        }
        out
    }
}

fn table(x: &Multivector) -> &'static ComplementTable {
    ComplementTable::for_signature(&x.sig())
}

/// Metric polarity `P(X) = X I` (right multiplication by the pseudoscalar).
pub fn polarity(x: &Multivector) -> Multivector {
    x.gp(&Multivector::pseudoscalar(x.sig()))
        .expect("pseudoscalar shares the signature")
}

/// Right complement with respect to the standard basis. Stays in `G`.
pub fn hodge(x: &Multivector) -> Multivector {
    table(x).apply(x)
}

/// Inverse of [`hodge`]; on grade `k` this is `(-1)^{k(n-k)} H`.
pub fn hodge_inv(x: &Multivector) -> Multivector {
    table(x).apply_inv(x)
}

/// Dual coordinate map `J: G → G*`. Same coefficients as [`hodge`], tagged
/// as an element of the dual algebra.
pub fn poincare(x: &Multivector) -> TaggedMultivector {
    TaggedMultivector::dual(hodge(x))
}

/// `J⁻¹: G* → G`. Rejects values that are not tagged as dual.
pub fn poincare_inv(x: &TaggedMultivector) -> Result<Multivector> {
    if !x.is_dual() {
        return Err(Error::TagMismatch {
            expected: true,
            found: false,
        });
    }
    Ok(hodge_inv(x.payload()))
}

/// `R = J ∘ H⁻¹`. In standard coordinates it keeps the coefficients and
/// only moves the value into `G*`.
pub fn raise(x: &Multivector) -> TaggedMultivector {
    poincare(&hodge_inv(x))
}

/// `J⁻¹(R(X))`, which satisfies `left_complement(X) ∧ X = I` on basis blades.
pub fn left_complement(x: &Multivector) -> Multivector {
    poincare_inv(&raise(x)).expect("raise always yields a dual value")
}

/// Gram matrix of the bilinear form `X ∧ H(Y) = ⟨X, Y⟩_H I` on the
/// standard 1-vectors.
pub fn hodge_gram(sig: Signature) -> Vec<Vec<f64>> {
    let top = sig.pseudoscalar_blade();
    (0..sig.dim())
        .map(|i| {
            let x = Multivector::basis_vector(sig, i);
            (0..sig.dim())
                .map(|j| {
                    let y = Multivector::basis_vector(sig, j);
                    x.op(&hodge(&y)).expect("same signature").coeff(top)
                })
                .collect()
        })
        .collect()
}
