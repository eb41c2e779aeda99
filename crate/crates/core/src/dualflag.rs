//! Multivectors tagged with an `is_dual` bit.
//!
//! A value with `is_dual == false` lives in the primary algebra `G`
//! (plane-based in euclidean PGA, where `∧` is meet). A value with
//! `is_dual == true` lives in `G*` (point-based, `∧` is join). Both algebras
//! share one signature, so products on matching tags use the ordinary
//! product tables.
//!
//! The unified dual map [`dual`] dispatches on the tag: `J` for primal
//! values, `J⁻¹` for dual ones, and always flips the bit. Mixed-tag products
//! are rejected in [`DualityMode::Strict`] and resolved by promotion in
//! [`DualityMode::Lenient`]. With tagging disabled every operation acts on
//! the payload alone.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::duality::{hodge, hodge_inv};
use crate::error::{Error, Result};
use crate::multivector::Multivector;
use crate::regressive::{self, Backend};

#[derive(Clone, Debug, PartialEq)]
pub struct TaggedMultivector {
    mv: Multivector,
    is_dual: bool,
}

impl TaggedMultivector {
    pub fn new(mv: Multivector, is_dual: bool) -> Self {
        TaggedMultivector { mv, is_dual }
    }

    /// An element of `G`.
    pub fn primal(mv: Multivector) -> Self {
        Self::new(mv, false)
    }

    /// An element of `G*`.
    pub fn dual(mv: Multivector) -> Self {
        Self::new(mv, true)
    }

    pub fn is_dual(&self) -> bool {
        self.is_dual
    }

    pub fn payload(&self) -> &Multivector {
        &self.mv
    }

    pub fn into_payload(self) -> Multivector {
        self.mv
    }

    pub fn map(&self, f: impl FnOnce(&Multivector) -> Multivector) -> Self {
        Self::new(f(&self.mv), self.is_dual)
    }

    /// Geometric reading of a homogeneous value, e.g. `"line as axis (plane
    /// pencil)"` for a bivector of `G`.
    pub fn describe(&self) -> Option<String> {
        let n = self.mv.sig().dim();
        let k = self.mv.grade()?;
        if k == 0 {
            return Some("scalar".to_string());
        }
        if k == n {
            return Some("pseudoscalar".to_string());
        }
        // projective dimension: meet of k hyperplanes, or join of k points
        let dim = if self.is_dual { k - 1 } else { n - 1 - k };
        let name = match dim {
            0 => "point".to_string(),
            1 => "line".to_string(),
            d if d == n - 2 => "plane".to_string(),
            d => format!("{d}-dimensional subspace"),
        };
        if k == 1 {
            return Some(name);
        }
        let form = match (self.is_dual, dim) {
            (false, 1) => "axis (plane pencil)",
            (false, 0) => "plane bundle",
            (false, _) => "intersection of planes",
            (true, 1) => "spear (point range)",
            (true, d) if d == n - 2 => "point field",
            (true, _) => "join of points",
        };
        Some(format!("{name} as {form}"))
    }
}

impl fmt::Display for TaggedMultivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.mv.write_terms(f, self.is_dual)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum DualityMode {
    /// Mixed-tag products are errors.
    #[default]
    Strict,
    /// Mixed-tag products promote one argument with the dual map first.
    Lenient,
}

impl FromStr for DualityMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "strict" => Ok(DualityMode::Strict),
            "lenient" => Ok(DualityMode::Lenient),
            other => Err(format!(
                "unknown duality mode `{other}` (expected strict|lenient)"
            )),
        }
    }
}

impl fmt::Display for DualityMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DualityMode::Strict => "strict",
            DualityMode::Lenient => "lenient",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DualityConfig {
    pub mode: DualityMode,
    /// When false, tags are ignored and every result is primal.
    pub enabled: bool,
    /// Algebra that lenient promotion converts into. `false` is `G`.
    pub promote_to_dual: bool,
}

impl Default for DualityConfig {
    fn default() -> Self {
        DualityConfig::strict()
    }
}

static GLOBAL_CONFIG: OnceLock<DualityConfig> = OnceLock::new();

impl DualityConfig {
    pub const fn strict() -> Self {
        DualityConfig {
            mode: DualityMode::Strict,
            enabled: true,
            promote_to_dual: false,
        }
    }

    pub const fn lenient() -> Self {
        DualityConfig {
            mode: DualityMode::Lenient,
            enabled: true,
            promote_to_dual: false,
        }
    }

    pub const fn disabled() -> Self {
        DualityConfig {
            mode: DualityMode::Strict,
            enabled: false,
            promote_to_dual: false,
        }
    }

    /// Process-wide configuration; strict with tagging enabled unless
    /// [`DualityConfig::install_global`] ran first.
    pub fn global() -> DualityConfig {
        *GLOBAL_CONFIG.get_or_init(DualityConfig::default)
    }

    /// Sets the process-wide configuration. Write-once: fails with the
    /// already-installed value if called again or after [`DualityConfig::global`].
    pub fn install_global(self) -> std::result::Result<(), DualityConfig> {
        GLOBAL_CONFIG.set(self).map_err(|_| Self::global())
    }
}

/// The unified dual map: `J` on primal values, `J⁻¹` on dual values, tag
/// flipped. With tagging disabled it is the plain complement map on the
/// payload and the tag stays primal.
pub fn dual(x: &TaggedMultivector, cfg: &DualityConfig) -> TaggedMultivector {
    if !cfg.enabled {
        return TaggedMultivector::primal(hodge(&x.mv));
    }
    if x.is_dual {
        TaggedMultivector::primal(hodge_inv(&x.mv))
    } else {
        TaggedMultivector::dual(hodge(&x.mv))
    }
}

/// Brings two tagged values into one algebra according to `cfg`.
/// Returns the two payloads and the common tag.
pub fn align(
    a: &TaggedMultivector,
    b: &TaggedMultivector,
    cfg: &DualityConfig,
) -> Result<(Multivector, Multivector, bool)> {
    if !cfg.enabled {
        return Ok((a.mv.clone(), b.mv.clone(), false));
    }
    if a.is_dual == b.is_dual {
        return Ok((a.mv.clone(), b.mv.clone(), a.is_dual));
    }
    match cfg.mode {
        DualityMode::Strict => Err(Error::DualityMismatch {
            left: a.is_dual,
            right: b.is_dual,
        }),
        DualityMode::Lenient => {
            let target = cfg.promote_to_dual;
            let promote = |x: &TaggedMultivector| {
                if x.is_dual == target {
                    x.mv.clone()
                } else {
                    dual(x, cfg).mv
                }
            };
            Ok((promote(a), promote(b), target))
        }
    }
}

/// Geometric product in the algebra named by the tags.
pub fn gp_tagged(
    a: &TaggedMultivector,
    b: &TaggedMultivector,
    cfg: &DualityConfig,
) -> Result<TaggedMultivector> {
    let (x, y, tag) = align(a, b, cfg)?;
    Ok(TaggedMultivector::new(x.gp(&y)?, tag))
}

/// Outer product in the algebra named by the tags: meet in `G`, join in `G*`.
pub fn wedge_tagged(
    a: &TaggedMultivector,
    b: &TaggedMultivector,
    cfg: &DualityConfig,
) -> Result<TaggedMultivector> {
    let (x, y, tag) = align(a, b, cfg)?;
    Ok(TaggedMultivector::new(x.op(&y)?, tag))
}

pub fn add_tagged(
    a: &TaggedMultivector,
    b: &TaggedMultivector,
    cfg: &DualityConfig,
) -> Result<TaggedMultivector> {
    let (x, y, tag) = align(a, b, cfg)?;
    Ok(TaggedMultivector::new(x.try_add(&y)?, tag))
}

/// Regressive product with the default backend. See [`vee_tagged_with`].
pub fn vee_tagged(
    a: &TaggedMultivector,
    b: &TaggedMultivector,
    cfg: &DualityConfig,
) -> Result<TaggedMultivector> {
    vee_tagged_with(a, b, cfg, Backend::default())
}

/// Regressive product in the algebra named by the tags.
///
/// Primal values use `backend` directly. Dual values are mapped to `G` with
/// the dual map, wedged there and mapped back, so the regressive product of
/// `G*` is the meet of the corresponding `G` elements.
pub fn vee_tagged_with(
    a: &TaggedMultivector,
    b: &TaggedMultivector,
    cfg: &DualityConfig,
    backend: Backend,
) -> Result<TaggedMultivector> {
    let (x, y, tag) = align(a, b, cfg)?;
    if !tag {
        return Ok(TaggedMultivector::new(
            regressive::vee(&x, &y, backend)?,
            tag,
        ));
    }
    let meet = hodge_inv(&x).op(&hodge_inv(&y))?;
    Ok(TaggedMultivector::dual(hodge(&meet)))
}
