//! Cubical groupoids: the free groupoid on a graph, constant groupoids
//! `M_n(A)`, shell groupoids `G'` and `G''`, pipe groupoids, and the
//! folding maps used to express curvature.
//!
//! Composition of arrows is written in diagrammatic order throughout:
//! `compose(x, y, i)` is `x +_i y`, defined when `∂^1_i x = ∂^0_i y`, and
//! for 1-cells means "first `x`, then `y`".

mod constant;
mod coskeleton;
mod crossed;
mod folding;
mod free;
mod group;
mod group_pipe;
pub mod laws;
mod pipes;

pub use constant::{ConstantCell, ConstantGroupoid};
pub use coskeleton::{bsh_gamma, CoskCell, Coskeleton};
pub use crossed::{check_cr_trivial, crossed_extract, is_totally_degenerate, CrossedPart};
pub use folding::{
    cube1_steps, cube_r_factors, cube_r_product, folding_cube, folding_hal, folding_square,
    square_loop, verify_30_letter, CUBE_EDGES,
};
pub use free::{Arrow, FreeCell, FreeGroupoid, Graph, Letter};
pub use group::{AdditiveRationals, AdditiveWeil, FreeGroup, Group};
pub use group_pipe::GroupPipe;
pub use pipes::{pipe_compose, pipe_fill, PipeCompose, PipeGroupoid};

use std::fmt;

use crate::error::{Error, Result};

/// A cubical groupoid: a cubical set whose `n`-cells carry `n` partial
/// compositions with inverses, compatible with faces and degeneracies.
pub trait CubicalGroupoid {
    type Cell: Clone + PartialEq + fmt::Debug;

    /// Highest dimension in which cells exist, if the groupoid is
    /// truncated.
    fn top_dim(&self) -> Option<usize>;

    fn dim(&self, c: &Self::Cell) -> usize;

    fn face(&self, c: &Self::Cell, alpha: u8, i: usize) -> Result<Self::Cell>;

    fn degeneracy(&self, c: &Self::Cell, i: usize) -> Result<Self::Cell>;

    /// `x +_i y`.
    fn compose(&self, x: &Self::Cell, y: &Self::Cell, i: usize) -> Result<Self::Cell>;

    /// `-_i c`.
    fn inverse(&self, c: &Self::Cell, i: usize) -> Result<Self::Cell>;
}

/// Checks the bookkeeping condition `∂^1_i x = ∂^0_i y`.
pub fn check_composable<G: CubicalGroupoid>(
    g: &G,
    x: &G::Cell,
    y: &G::Cell,
    i: usize,
) -> Result<()> {
    let (dx, dy) = (g.dim(x), g.dim(y));
    if dx != dy {
        return Err(Error::Composition(format!(
            "cells of dimensions {dx} and {dy}"
        )));
    }
    crate::error::check_index("composition direction", i, dx)?;
    if g.face(x, 1, i)? != g.face(y, 0, i)? {
        return Err(Error::Composition(format!(
            "d1_{i} of the first cell differs from d0_{i} of the second"
        )));
    }
    Ok(())
}

/// Composes 1-cells along a path, first arrow first.
pub fn compose_path<G: CubicalGroupoid>(g: &G, arrows: &[G::Cell]) -> Result<G::Cell> {
    let (first, rest) = arrows
        .split_first()
        .ok_or_else(|| Error::Composition("empty path".into()))?;
    rest.iter()
        .try_fold(first.clone(), |acc, a| g.compose(&acc, a, 1))
}

/// The vertex `∂^0_1 ⋯ ∂^0_1 c` or, with `alpha = 1`, the opposite one.
pub fn corner_vertex<G: CubicalGroupoid>(g: &G, c: &G::Cell, alpha: u8) -> Result<G::Cell> {
    let mut v = c.clone();
    while g.dim(&v) > 0 {
        v = g.face(&v, alpha, 1)?;
    }
    Ok(v)
}

/// `ε_1 ⋯ ε_1 v`, the totally degenerate `k`-cell at vertex `v`.
pub fn total_degeneracy<G: CubicalGroupoid>(g: &G, v: &G::Cell, k: usize) -> Result<G::Cell> {
    (0..k).try_fold(v.clone(), |acc, _| g.degeneracy(&acc, 1))
}

#[cfg(test)]
mod tests;
