//! The first-neighbourhood nilpotent algebra and infinitesimal simplices.
//!
//! An infinitesimal `n`-simplex in `Q^m` is modelled by vertex displacements
//! built from generators `ε[a,i]` (slot `a = 1..n`, coordinate `i = 1..m`)
//! subject to
//!
//! * `ε[a,i]·ε[a,j] = 0`
//! * `ε[a,i]·ε[b,j] = -ε[b,i]·ε[a,j]` for `a ≠ b`.
//!
//! A product of generators with distinct slots is therefore alternating in
//! the coordinate assignment, and the normal monomials of degree `k` are
//! pairs (k-subset of slots, k-subset of coordinates), paired in increasing
//! order. Both subsets are stored as bitmasks.
//!
//! A context may carry a second, independent generator family (written
//! `η[b,j]`) with no relations to the first, and a number of auxiliary
//! polynomial variables used as symbolic base points or parameters.

mod element;
mod point;
mod simplex;

pub use element::{weil_mul, WeilElement};
pub use point::{apply_poly_map, InfPoint};
pub use simplex::{affine_combination, generic_simplex, pipe_vertices, InfSimplex};

use std::fmt;

use crate::error::{Error, Result};

/// Size of one generator family: `slots` simplex vertices beyond the base,
/// `coords` ambient coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Family {
    pub slots: u8,
    pub coords: u8,
}

const MAX_FAMILY: u8 = 16;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct WeilContext {
    primary: Family,
    inner: Option<Family>,
    aux: u8,
}

impl WeilContext {
    /// The algebra of an infinitesimal `n`-simplex in `m`-space.
    pub fn new(simplex_slots: usize, coord_count: usize) -> Result<Self> {
        Ok(WeilContext {
            primary: family(simplex_slots, coord_count)?,
            inner: None,
            aux: 0,
        })
    }

    /// Same generators, `aux` auxiliary polynomial variables.
    pub fn with_aux(self, aux: usize) -> Self {
        WeilContext {
            aux: u8::try_from(aux).expect("auxiliary variable count fits in u8"),
            ..self
        }
    }

    /// Adjoins an independent inner generator family.
    pub fn tensor(self, simplex_slots: usize, coord_count: usize) -> Result<Self> {
        if self.inner.is_some() {
            return Err(Error::Unsupported(
                "only one inner generator family is supported".into(),
            ));
        }
        Ok(WeilContext {
            inner: Some(family(simplex_slots, coord_count)?),
            ..self
        })
    }

    pub fn slots(&self) -> usize {
        self.primary.slots as usize
    }

    pub fn coords(&self) -> usize {
        self.primary.coords as usize
    }

    pub fn aux(&self) -> usize {
        self.aux as usize
    }

    pub fn inner(&self) -> Option<Family> {
        self.inner
    }

    pub fn family(&self, index: usize) -> Option<Family> {
        match index {
            0 => Some(self.primary),
            1 => self.inner,
            _ => None,
        }
    }

    /// Whether `m` is a normal monomial over this context's generators.
    pub fn admits(&self, m: &NilMonomial) -> bool {
        m.parts.iter().enumerate().all(|(f, &(s, c))| {
            if s == 0 && c == 0 {
                return true;
            }
            let Some(fam) = self.family(f) else {
                return false;
            };
            s.count_ones() == c.count_ones()
                && u32::from(s) >> fam.slots == 0
                && u32::from(c) >> fam.coords == 0
        })
    }

    /// Whether every element of `other` is also an element of `self`.
    pub fn extends(&self, other: &WeilContext) -> bool {
        self.primary == other.primary
            && (other.inner.is_none() || other.inner == self.inner)
            && self.aux >= other.aux
    }
}

fn family(slots: usize, coords: usize) -> Result<Family> {
    if coords == 0 {
        return Err(Error::Dimension {
            what: "coordinate count (must be at least 1)",
            expected: 1,
            found: 0,
        });
    }
    if slots > MAX_FAMILY as usize || coords > MAX_FAMILY as usize {
        return Err(Error::Unsupported(format!(
            "generator family {slots}x{coords} exceeds {MAX_FAMILY}x{MAX_FAMILY}"
        )));
    }
    Ok(Family {
        slots: slots as u8,
        coords: coords as u8,
    })
}

impl fmt::Display for WeilContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W({},{})", self.primary.slots, self.primary.coords)?;
        if let Some(inner) = self.inner {
            write!(f, "⊗W({},{})", inner.slots, inner.coords)?;
        }
        if self.aux > 0 {
            write!(f, "[{} aux]", self.aux)?;
        }
        Ok(())
    }
}

/// A normal monomial: per family, a slot set and an equally sized
/// coordinate set (bit `k` stands for index `k+1`).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct NilMonomial {
    parts: [(u16, u16); 2],
}

impl NilMonomial {
    /// The empty monomial, i.e. the unit.
    pub const ONE: NilMonomial = NilMonomial {
        parts: [(0, 0), (0, 0)],
    };

    pub fn generator(family: usize, slot: usize, coord: usize) -> Self {
        let mut m = NilMonomial::ONE;
        m.parts[family] = (1 << (slot - 1), 1 << (coord - 1));
        m
    }

    /// From explicit slot and coordinate sets of one family.
    pub fn from_sets(family: usize, slots: &[usize], coords: &[usize]) -> Option<Self> {
        let mask = |xs: &[usize]| -> Option<u16> {
            let mut m = 0u16;
            for &x in xs {
                let bit = 1u16.checked_shl(u32::try_from(x.checked_sub(1)?).ok()?)?;
                if m & bit != 0 {
                    return None;
                }
                m |= bit;
            }
            Some(m)
        };
        let (s, c) = (mask(slots)?, mask(coords)?);
        if s.count_ones() != c.count_ones() {
            return None;
        }
        let mut m = NilMonomial::ONE;
        m.parts[family] = (s, c);
        Some(m)
    }

    pub fn is_one(&self) -> bool {
        *self == NilMonomial::ONE
    }

    pub fn degree(&self) -> u32 {
        self.parts.iter().map(|(s, _)| s.count_ones()).sum()
    }

    /// `(slot, coordinate)` pairs of one family in normal order.
    pub fn pairs(&self, family: usize) -> Vec<(usize, usize)> {
        let (s, c) = self.parts[family];
        bits(s).into_iter().zip(bits(c)).collect()
    }

    /// Product of normal monomials: `None` when it vanishes, otherwise the
    /// normal monomial and whether a sign flip occurred.
    pub fn mul(&self, other: &NilMonomial) -> Option<(NilMonomial, bool)> {
        let mut out = NilMonomial::ONE;
        let mut negative = false;
        for f in 0..2 {
            let (s1, c1) = self.parts[f];
            let (s2, c2) = other.parts[f];
            if s1 & s2 != 0 || c1 & c2 != 0 {
                return None;
            }
            negative ^= merge_parity(s1, s2) ^ merge_parity(c1, c2);
            out.parts[f] = (s1 | s2, c1 | c2);
        }
        Some((out, negative))
    }
}

/// Parity of the shuffle that sorts the concatenation of two disjoint
/// increasing index lists.
fn merge_parity(a: u16, b: u16) -> bool {
    let mut inversions = 0u32;
    let mut rest = b;
    while rest != 0 {
        let y = rest.trailing_zeros();
        rest &= rest - 1;
        inversions += (u32::from(a) >> (y + 1)).count_ones();
    }
    inversions % 2 == 1
}

fn bits(mask: u16) -> Vec<usize> {
    (0..16).filter(|k| mask >> k & 1 == 1).map(|k| k + 1).collect()
}

impl fmt::Display for NilMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (family, symbol) in [(0, "ε"), (1, "η")] {
            for (a, i) in self.pairs(family) {
                write!(f, "{symbol}[{a},{i}]")?;
            }
        }
        Ok(())
    }
}
