use std::fmt;
use std::marker::PhantomData;

use super::CubicalGroupoid;
use crate::cubical::{AffinePoint, CubicalCell, InfPipeCell, Pipe};
use crate::error::{check_index, Error, Result};

/// Composition of parallelepipeda: `P +_i P'` keeps the corners of `P`
/// except the `i`-th, which is taken from `P'`.
pub trait PipeCompose: CubicalCell {
    fn replace_vertex(&self, i: usize, from: &Self) -> Self;

    /// The cell with `∂^0_i = a` whose `i`-th vertex is the base of `b`.
    fn fill_candidate(a: &Self, b: &Self, i: usize) -> Self;
}

impl<P: AffinePoint> PipeCompose for Pipe<P> {
    fn replace_vertex(&self, i: usize, from: &Self) -> Self {
        let mut v = self.vertices().to_vec();
        v[i] = from.vertices()[i].clone();
        Pipe::new(v)
    }

    fn fill_candidate(a: &Self, b: &Self, i: usize) -> Self {
        let mut v = a.vertices().to_vec();
        v.insert(i, b.vertices()[0].clone());
        Pipe::new(v)
    }
}

impl PipeCompose for InfPipeCell {
    fn replace_vertex(&self, i: usize, from: &Self) -> Self {
        let mut v = self.vertices().to_vec();
        v[i] = from.vertices()[i].clone();
        InfPipeCell::new(
            crate::weil::InfSimplex::new_unchecked(v).expect("same shape as the operands"),
        )
    }

    fn fill_candidate(a: &Self, b: &Self, i: usize) -> Self {
        let mut v = a.vertices().to_vec();
        v.insert(i, b.vertices()[0].clone());
        InfPipeCell::new(
            crate::weil::InfSimplex::new_unchecked(v).expect("same shape as the operands"),
        )
    }
}

/// `P +_i P'`, defined when `∂^1_i P = ∂^0_i P'`.
pub fn pipe_compose<C: PipeCompose>(p: &C, q: &C, i: usize) -> Result<C> {
    if p.cube_dim() != q.cube_dim() {
        return Err(Error::Composition("pipes of different dimensions".into()));
    }
    check_index("composition direction", i, p.cube_dim())?;
    if p.face(1, i)? != q.face(0, i)? {
        return Err(Error::Composition(format!(
            "d1_{i} of the first pipe differs from d0_{i} of the second"
        )));
    }
    Ok(p.replace_vertex(i, q))
}

/// The unique pipe with `∂^0_i = a` and `∂^1_i = b`, if any. The first
/// face fixes every vertex but `x_i`, the second fixes `x_i` as its base;
/// the remaining constraints are then checked.
pub fn pipe_fill<C: PipeCompose>(a: &C, b: &C, i: usize) -> Result<Option<C>> {
    if a.cube_dim() != b.cube_dim() {
        return Err(Error::Composition("faces of different dimensions".into()));
    }
    check_index("fill direction", i, a.cube_dim() + 1)?;
    let c = C::fill_candidate(a, b, i);
    Ok((c.face(1, i)? == *b).then_some(c))
}

/// Parallelepipeda of one carrier as an untruncated cubical groupoid;
/// the inverse in direction `i` is the reversion `ρ_i`.
pub struct PipeGroupoid<C>(PhantomData<C>);

impl<C> PipeGroupoid<C> {
    pub fn new() -> Self {
        PipeGroupoid(PhantomData)
    }
}

impl<C> Default for PipeGroupoid<C> {
    fn default() -> Self {
        Self::new()
    }
}

impl<C> fmt::Debug for PipeGroupoid<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PipeGroupoid")
    }
}

impl<C: PipeCompose> CubicalGroupoid for PipeGroupoid<C> {
    type Cell = C;

    fn top_dim(&self) -> Option<usize> {
        None
    }

    fn dim(&self, c: &C) -> usize {
        c.cube_dim()
    }

    fn face(&self, c: &C, alpha: u8, i: usize) -> Result<C> {
        c.face(alpha, i)
    }

    fn degeneracy(&self, c: &C, i: usize) -> Result<C> {
        c.degeneracy(i)
    }

    fn compose(&self, x: &C, y: &C, i: usize) -> Result<C> {
        pipe_compose(x, y, i)
    }

    fn inverse(&self, c: &C, i: usize) -> Result<C> {
        c.reversion(i)
    }
}
