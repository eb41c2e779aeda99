//! A duality-neutral geometric algebra kernel for projective geometric
//! algebras with degenerate metrics, centred on plane-based euclidean PGA
//! with signature (3,0,1).
//!
//! The crate provides:
//!
//! * exact blade arithmetic and the geometric, outer and inner products over
//!   any diagonal signature with up to [`MAX_DIM`] generators ([`Signature`],
//!   [`BasisBlade`], [`Multivector`]);
//! * reciprocal frames and metric-free canonical dual bases ([`frames`]);
//! * the duality maps: metric polarity, Hodge (right complement), Poincaré
//!   (dual coordinate map) and the index raiser ([`duality`]);
//! * four interchangeable regressive-product backends ([`regressive`]);
//! * multivectors tagged with an `is_dual` bit, the unified dual map and
//!   strict/lenient mixed-algebra products ([`dualflag`]);
//! * outermorphisms covering collineations and correlations
//!   ([`outermorphism`]);
//! * an expression calculator and table generator ([`cli`]).
//!
//! ```
//! use degen_pga::{regressive, Multivector, Signature};
//!
//! let sig = Signature::pga3();
//! let point = Multivector::parse_blade(sig, "e123").unwrap();
//! let other = Multivector::parse_blade(sig, "e032").unwrap();
//! let line = regressive::vee_j(&point, &other).unwrap();
//! assert_eq!(line, Multivector::parse_blade(sig, "e23").unwrap());
//! ```

pub mod cli;
pub mod dualflag;
pub mod duality;
mod error;
pub mod frames;
mod multivector;
pub mod outermorphism;
pub mod regressive;
mod signature;

pub use dualflag::{DualityConfig, DualityMode, TaggedMultivector};
pub use error::{Error, Result};
pub use multivector::Multivector;
pub use signature::{blade_mul, BasisBlade, Signature, MAX_DIM};
