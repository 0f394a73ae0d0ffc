//! Cubical structure on infinitesimal parallelepipeda and on polynomial
//! singular cubes: faces, degeneracies, transpositions, reversions,
//! subdivision and boundary shells.
//!
//! Operator indices are 1-based as in the usual cubical notation, and
//! `alpha` is 0 or 1. Vertices of an `n`-cube are labelled by integers
//! `0..2^n`, bit `a-1` of the label being the `a`-th cube coordinate.

mod cube;
mod pipe;
pub mod relations;
mod shell;

pub use cube::SingularCube;
pub use pipe::{AffinePoint, InfPipeCell, Pipe, RationalPipe};
pub use relations::RelationCheck;
pub use shell::{boundary_shell, Shell};

use std::fmt;

use crate::algebra::Rational;
use crate::error::{check_index, Error, Result};

/// Something with the operators of a cubical set with transpositions and
/// reversions, plus subdivision along a direction.
pub trait CubicalCell: Clone + PartialEq + fmt::Debug {
    fn cube_dim(&self) -> usize;

    /// `∂^alpha_i`, for `1 ≤ i ≤ dim`.
    fn face(&self, alpha: u8, i: usize) -> Result<Self>;

    /// `ε_i`, for `1 ≤ i ≤ dim + 1`.
    fn degeneracy(&self, i: usize) -> Result<Self>;

    /// `σ_i`, exchanging directions `i` and `i+1`.
    fn transposition(&self, i: usize) -> Result<Self>;

    /// `ρ_i`, reflecting direction `i`.
    fn reversion(&self, i: usize) -> Result<Self>;

    /// The two halves obtained by cutting direction `i` at parameter `s`.
    fn subdivide(&self, i: usize, s: &Rational) -> Result<(Self, Self)>;
}

/// One structure operator, for table-driven callers.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CubeOp {
    Face(u8, usize),
    Degeneracy(usize),
    Transposition(usize),
    Reversion(usize),
}

impl fmt::Display for CubeOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CubeOp::Face(a, i) => write!(f, "d{a}_{i}"),
            CubeOp::Degeneracy(i) => write!(f, "e_{i}"),
            CubeOp::Transposition(i) => write!(f, "s_{i}"),
            CubeOp::Reversion(i) => write!(f, "r_{i}"),
        }
    }
}

pub fn apply_op<C: CubicalCell>(c: &C, op: CubeOp) -> Result<C> {
    match op {
        CubeOp::Face(a, i) => c.face(a, i),
        CubeOp::Degeneracy(i) => c.degeneracy(i),
        CubeOp::Transposition(i) => c.transposition(i),
        CubeOp::Reversion(i) => c.reversion(i),
    }
}

pub fn pipe_face(p: &InfPipeCell, alpha: u8, i: usize) -> Result<InfPipeCell> {
    p.face(alpha, i)
}

pub fn pipe_symmetry(p: &InfPipeCell, op: CubeOp) -> Result<InfPipeCell> {
    match op {
        CubeOp::Face(..) => Err(Error::Unsupported("a face is not a symmetry".into())),
        _ => apply_op(p, op),
    }
}

pub fn cube_structure(f: &SingularCube, op: CubeOp) -> Result<SingularCube> {
    apply_op(f, op)
}

pub fn subdivide<C: CubicalCell>(c: &C, i: usize, s: &Rational) -> Result<(C, C)> {
    c.subdivide(i, s)
}

pub(crate) fn check_alpha(alpha: u8) -> Result<()> {
    if alpha <= 1 {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange {
            what: "face side (0 or 1)",
            index: alpha as usize,
            max: 1,
        })
    }
}

pub(crate) fn check_face(alpha: u8, i: usize, dim: usize) -> Result<()> {
    check_alpha(alpha)?;
    check_index("face direction", i, dim)
}
