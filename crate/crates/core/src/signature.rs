use std::fmt;

use crate::error::{Error, Result};

/// Largest supported generator count. Multivectors are stored densely, so an
/// algebra of this size has 256 coefficients.
pub const MAX_DIM: usize = 8;

/// Per-generator metric squares of a diagonal signature.
///
/// Generator `i` squares to `squares()[i]`, which is one of `+1`, `-1` or `0`.
/// The generator order is whatever the caller supplies; [`Signature::from_pqr`]
/// and [`Signature::pga3`] place the null generators first so that the
/// degenerate generator of euclidean PGA is `e0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    squares: [i8; MAX_DIM],
    dim: u8,
}

impl Signature {
    pub fn new(squares: &[i8]) -> Result<Self> {
        if squares.is_empty() || squares.len() > MAX_DIM {
            return Err(Error::InvalidSignature(format!(
                "generator count must be between 1 and {MAX_DIM}, got {}",
                squares.len()
            )));
        }
        let mut stored = [0i8; MAX_DIM];
        for (slot, &sq) in stored.iter_mut().zip(squares) {
            if !matches!(sq, -1..=1) {
                return Err(Error::InvalidSignature(format!(
                    "generator squares must be +1, -1 or 0, got {sq}"
                )));
            }
            *slot = sq;
        }
        Ok(Signature {
            squares: stored,
            dim: squares.len() as u8,
        })
    }

    /// Signature with `p` positive, `q` negative and `r` null generators.
    /// Null generators come first, then positive, then negative ones.
    pub fn from_pqr(p: usize, q: usize, r: usize) -> Result<Self> {
        let squares: Vec<i8> = std::iter::repeat_n(0, r)
            .chain(std::iter::repeat_n(1, p))
            .chain(std::iter::repeat_n(-1, q))
            .collect();
        Self::new(&squares)
    }

    /// Plane-based euclidean PGA, (3,0,1) with `e0² = 0`.
    pub fn pga3() -> Self {
        Self::new(&[0, 1, 1, 1]).expect("static signature")
    }

    /// All generators square to `+1`.
    pub fn euclidean(dim: usize) -> Result<Self> {
        Self::from_pqr(dim, 0, 0)
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn squares(&self) -> &[i8] {
        &self.squares[..self.dim()]
    }

    pub fn square(&self, generator: usize) -> i8 {
        self.squares()[generator]
    }

    /// Number of basis blades, `2^n`.
    pub fn blade_count(&self) -> usize {
        1 << self.dim
    }

    pub fn pseudoscalar_blade(&self) -> BasisBlade {
        BasisBlade((1u32 << self.dim) - 1)
    }

    pub fn contains(&self, blade: BasisBlade) -> bool {
        blade.0 < (1u32 << self.dim)
    }

    pub fn is_degenerate(&self) -> bool {
        self.squares().contains(&0)
    }

    /// `(p, q, r)` counts of positive, negative and null generators.
    pub fn counts(&self) -> (usize, usize, usize) {
        let sq = self.squares();
        let count = |v: i8| sq.iter().filter(|&&s| s == v).count();
        (count(1), count(-1), count(0))
    }

    /// All basis blades in ascending mask order.
    pub fn blades(&self) -> impl Iterator<Item = BasisBlade> {
        (0..1u32 << self.dim).map(BasisBlade)
    }
}

impl fmt::Debug for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Signature({self})")
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, q, r) = self.counts();
        write!(f, "({p},{q},{r})[")?;
        for (i, sq) in self.squares().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{sq}")?;
        }
        f.write_str("]")
    }
}

/// A basis blade, stored as a bitmask over generator indices. The factors
/// are always taken in ascending index order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct BasisBlade(u32);

impl BasisBlade {
    pub const SCALAR: BasisBlade = BasisBlade(0);

    pub const fn from_mask(mask: u32) -> Self {
        BasisBlade(mask)
    }

    pub const fn generator(index: usize) -> Self {
        BasisBlade(1 << index)
    }

    pub const fn mask(self) -> u32 {
        self.0
    }

    pub const fn index(self) -> usize {
        self.0 as usize
    }

    pub const fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn has_generator(self, index: usize) -> bool {
        self.0 & (1 << index) != 0
    }

    /// Generator indices in ascending order.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.0 & (1 << i) != 0)
    }

    /// Resolves a product of generators given in arbitrary order, as in
    /// `e032`, to `sign * canonical blade`. Returns `None` when an index
    /// repeats.
    pub fn from_indices(indices: &[usize]) -> Option<(i8, BasisBlade)> {
        let mut mask = 0u32;
        let mut inversions = 0usize;
        for (pos, &i) in indices.iter().enumerate() {
            if i >= 32 || mask & (1 << i) != 0 {
                return None;
            }
            mask |= 1 << i;
            inversions += indices[..pos].iter().filter(|&&j| j > i).count();
        }
        let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
        Some((sign, BasisBlade(mask)))
    }

    /// `"1"` for the scalar blade, otherwise `e` followed by the indices.
    pub fn name(self) -> String {
        if self.0 == 0 {
            return "1".to_string();
        }
        let mut s = String::from("e");
        for i in self.indices() {
            s.push_str(&i.to_string());
        }
        s
    }
}

impl fmt::Display for BasisBlade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Sign picked up when the factors of `a` followed by those of `b` are
/// reordered into ascending order, ignoring repeated generators.
pub(crate) fn reorder_sign(a: BasisBlade, b: BasisBlade) -> i8 {
    let mut a = a.0 >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b.0).count_ones();
        a >>= 1;
    }
    if swaps.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Geometric product of two basis blades: `e_a e_b = sign * e_out`.
///
/// The sign is the reordering parity times the squares of the shared
/// generators, so it is `0` exactly when a shared generator is null.
pub fn blade_mul(a: BasisBlade, b: BasisBlade, sig: &Signature) -> (i8, BasisBlade) {
    let mut sign = reorder_sign(a, b);
    let shared = BasisBlade(a.0 & b.0);
    for i in shared.indices() {
        sign *= sig.square(i);
    }
    (sign, BasisBlade(a.0 ^ b.0))
}
