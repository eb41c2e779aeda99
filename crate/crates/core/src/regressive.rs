//! The regressive product `X ∨ Y`, which is the join in a plane-based
//! algebra.
//!
//! Four routes are implemented:
//!
//! * [`vee_metric`]: `I⁻¹ (I Y ∧ I X)`; needs an invertible pseudoscalar.
//! * [`vee_shuffle`]: the Grassmann-Cayley shuffle formula over the factors
//!   of each blade, weighted by bracket determinants. Metric-free and
//!   independent of the complement table.
//! * [`vee_j`]: `J⁻¹(J X ∧* J Y)` through the dual algebra.
//! * [`vee_h`]: `H⁻¹(H X ∧ H Y)` within one algebra.
//!
//! The last three agree exactly. The metric route agrees with them up to a
//! non-zero scalar per blade pair. Blade pairs with `j + k < n` contribute
//! zero.

use std::fmt;
use std::str::FromStr;

use crate::duality::{hodge, hodge_inv, poincare, poincare_inv};
use crate::error::{Error, Result};
use crate::multivector::Multivector;
use crate::signature::BasisBlade;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Backend {
    Metric,
    Shuffle,
    #[default]
    Poincare,
    Hodge,
}

impl Backend {
    pub const ALL: [Backend; 4] = [
        Backend::Metric,
        Backend::Shuffle,
        Backend::Poincare,
        Backend::Hodge,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Backend::Metric => "metric",
            Backend::Shuffle => "shuffle",
            Backend::Poincare => "j",
            Backend::Hodge => "h",
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Backend {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "metric" => Ok(Backend::Metric),
            "shuffle" => Ok(Backend::Shuffle),
            "j" | "J" => Ok(Backend::Poincare),
            "h" | "H" => Ok(Backend::Hodge),
            other => Err(format!(
                "unknown backend `{other}` (expected metric|shuffle|j|h)"
            )),
        }
    }
}

fn check_sig(x: &Multivector, y: &Multivector) -> Result<()> {
    if x.sig() != y.sig() {
        return Err(Error::SignatureMismatch {
            left: x.sig(),
            right: y.sig(),
        });
    }
    Ok(())
}

/// `I⁻¹ (I Y ∧ I X)`. Note the reversed argument order inside.
pub fn vee_metric(x: &Multivector, y: &Multivector) -> Result<Multivector> {
    check_sig(x, y)?;
    let sig = x.sig();
    if sig.is_degenerate() {
        return Err(Error::DegenerateMetric);
    }
    let i = Multivector::pseudoscalar(sig);
    let i_sq = i.gp(&i)?.scalar_part();
    let i_inv = i.scale(1.0 / i_sq);
    i_inv.gp(&i.gp(y)?.op(&i.gp(x)?)?)
}

/// Sign of the permutation taking `seq` to ascending order, or 0 if an
/// entry repeats. For basis 1-vectors this is the bracket determinant.
fn bracket(seq: &[usize]) -> i32 {
    let mut sign = 1;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] == seq[j] {
                return 0;
            }
            if seq[i] > seq[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// Shuffle product of two basis blades as `(coefficient, blade)`.
///
/// Sums over the ascending `(n-k)`-subsets `S` of the first blade's factor
/// positions: `sign(S, Sᶜ) · [a_S, b] · a_{Sᶜ}`. Enumerating ordered subsets
/// instead of all permutations absorbs the factorial normalisation.
fn shuffle_blades(a: BasisBlade, b: BasisBlade, n: usize) -> Option<(i32, BasisBlade)> {
    let fa: Vec<usize> = a.indices().collect();
    let fb: Vec<usize> = b.indices().collect();
    let (j, k) = (fa.len(), fb.len());
    if j + k < n {
        return None;
    }
    let take = n - k;
    let mut total = 0i32;
    let mut result = BasisBlade::SCALAR;
    for subset in 0u32..(1 << j) {
        if subset.count_ones() as usize != take {
            continue;
        }
        let chosen: Vec<usize> = (0..j).filter(|p| subset & (1 << p) != 0).collect();
        let rest: Vec<usize> = (0..j).filter(|p| subset & (1 << p) == 0).collect();
        // shuffle sign: inversions between chosen and remaining positions
        let inversions = chosen
            .iter()
            .map(|&c| rest.iter().filter(|&&r| r < c).count())
            .sum::<usize>();
        let shuffle_sign = if inversions % 2 == 0 { 1 } else { -1 };
        let mut seq: Vec<usize> = chosen.iter().map(|&p| fa[p]).collect();
        seq.extend(&fb);
        let det = bracket(&seq);
        if det == 0 {
            continue;
        }
        let mask = rest.iter().fold(0u32, |m, &p| m | 1 << fa[p]);
        // every surviving term has the same remaining blade: the factors of
        // `a` not in the complement of `b`
        result = BasisBlade::from_mask(mask);
        total += shuffle_sign * det;
    }
    (total != 0).then_some((total, result))
}

/// Shuffle (Grassmann-Cayley) product, extended bilinearly.
pub fn vee_shuffle(x: &Multivector, y: &Multivector) -> Result<Multivector> {
    check_sig(x, y)?;
    let n = x.sig().dim();
    let mut out = Multivector::zero(x.sig());
    for (a, ca) in x.terms() {
        for (b, cb) in y.terms() {
            if let Some((coeff, blade)) = shuffle_blades(a, b, n) {
                let prev = out.coeff(blade);
                out.set_coeff(blade, prev + coeff as f64 * ca * cb);
            }
        }
    }
    Ok(out)
}

/// `J⁻¹(J X ∧* J Y)`. The dual values never leave this function.
pub fn vee_j(x: &Multivector, y: &Multivector) -> Result<Multivector> {
    check_sig(x, y)?;
    let (jx, jy) = (poincare(x), poincare(y));
    let wedge = jx.payload().op(jy.payload())?;
    poincare_inv(&crate::TaggedMultivector::dual(wedge))
}

/// `H⁻¹(H X ∧ H Y)`.
pub fn vee_h(x: &Multivector, y: &Multivector) -> Result<Multivector> {
    check_sig(x, y)?;
    Ok(hodge_inv(&hodge(x).op(&hodge(y))?))
}

/// Dispatches to the chosen backend.
pub fn vee(x: &Multivector, y: &Multivector, backend: Backend) -> Result<Multivector> {
    match backend {
        Backend::Metric => vee_metric(x, y),
        Backend::Shuffle => vee_shuffle(x, y),
        Backend::Poincare => vee_j(x, y),
        Backend::Hodge => vee_h(x, y),
    }
}

/// If `x = λ y` for a single non-zero `λ`, returns it. Two zeros count as
/// proportional with `λ = 1`.
pub fn proportionality(x: &Multivector, y: &Multivector, tol: f64) -> Option<f64> {
    if x.sig() != y.sig() {
        return None;
    }
    if x.is_zero() && y.is_zero() {
        return Some(1.0);
    }
    let (blade, yc) = y.terms().max_by(|a, b| a.1.abs().total_cmp(&b.1.abs()))?;
    let ratio = x.coeff(blade) / yc;
    if ratio == 0.0 || !ratio.is_finite() {
        return None;
    }
    x.approx_eq(&y.scale(ratio), tol).then_some(ratio)
}
