use std::fmt;

use super::{check_face, CubicalCell};
use crate::algebra::Rational;
use crate::error::{check_index, Result};
use crate::weil::{InfPoint, InfSimplex};

/// Points supporting the two affine combinations used by the pipe
/// operators.
pub trait AffinePoint: Clone + PartialEq + fmt::Debug {
    /// `self - base + other`.
    fn translate(&self, base: &Self, other: &Self) -> Self;

    /// `base + s·(self - base)`.
    fn lerp_from(&self, base: &Self, s: &Rational) -> Self;
}

impl AffinePoint for Vec<Rational> {
    fn translate(&self, base: &Self, other: &Self) -> Self {
        self.iter()
            .zip(base)
            .zip(other)
            .map(|((x, b), o)| x - b + o)
            .collect()
    }

    fn lerp_from(&self, base: &Self, s: &Rational) -> Self {
        self.iter().zip(base).map(|(x, b)| b + s * (x - b)).collect()
    }
}

impl AffinePoint for InfPoint {
    fn translate(&self, base: &Self, other: &Self) -> Self {
        InfPoint::translate(self, base, other).expect("pipe vertices share a context")
    }

    fn lerp_from(&self, base: &Self, s: &Rational) -> Self {
        let d = self.sub(base).expect("pipe vertices share a context");
        base.add(&d.scale(s)).expect("pipe vertices share a context")
    }
}

fn face<P: AffinePoint>(v: &[P], alpha: u8, i: usize) -> Vec<P> {
    if alpha == 0 {
        let mut out = v.to_vec();
        out.remove(i);
        return out;
    }
    let mut out = vec![v[i].clone()];
    out.extend(
        (1..v.len())
            .filter(|&j| j != i)
            .map(|j| v[j].translate(&v[0], &v[i])),
    );
    out
}

fn degeneracy<P: AffinePoint>(v: &[P], i: usize) -> Vec<P> {
    let mut out = v.to_vec();
    out.insert(i, v[0].clone());
    out
}

fn transposition<P: AffinePoint>(v: &[P], i: usize) -> Vec<P> {
    let mut out = v.to_vec();
    out.swap(i, i + 1);
    out
}

fn reversion<P: AffinePoint>(v: &[P], i: usize) -> Vec<P> {
    let mut out = vec![v[i].clone()];
    out.extend((1..v.len()).map(|j| {
        if j == i {
            v[0].clone()
        } else {
            v[j].translate(&v[0], &v[i])
        }
    }));
    out
}

fn subdivide<P: AffinePoint>(v: &[P], i: usize, s: &Rational) -> (Vec<P>, Vec<P>) {
    let xs = v[i].lerp_from(&v[0], s);
    let mut first = v.to_vec();
    first[i] = xs.clone();
    let mut second = vec![xs.clone()];
    second.extend((1..v.len()).map(|j| {
        if j == i {
            v[i].clone()
        } else {
            v[j].translate(&v[0], &xs)
        }
    }));
    (first, second)
}

/// A parallelepipedum `P(x0; x1, …, xn)` given by its base vertex and the
/// `n` adjacent vertices, over any affine point type. No neighbour
/// condition is imposed.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Pipe<P> {
    vertices: Vec<P>,
}

pub type RationalPipe = Pipe<Vec<Rational>>;

impl<P: AffinePoint> Pipe<P> {
    pub fn new(vertices: Vec<P>) -> Self {
        assert!(!vertices.is_empty(), "a pipe needs a base vertex");
        Pipe { vertices }
    }

    pub fn vertices(&self) -> &[P] {
        &self.vertices
    }

    /// All `2^n` corners in label order.
    pub fn corners(&self) -> Vec<P> {
        let n = self.vertices.len() - 1;
        let x0 = &self.vertices[0];
        (0..1usize << n)
            .map(|label| {
                let mut p = x0.clone();
                for a in 1..=n {
                    if label >> (a - 1) & 1 == 1 {
                        p = self.vertices[a].translate(x0, &p);
                    }
                }
                p
            })
            .collect()
    }
}

impl<P: AffinePoint> CubicalCell for Pipe<P> {
    fn cube_dim(&self) -> usize {
        self.vertices.len() - 1
    }

    fn face(&self, alpha: u8, i: usize) -> Result<Self> {
        check_face(alpha, i, self.cube_dim())?;
        Ok(Pipe::new(face(&self.vertices, alpha, i)))
    }

    fn degeneracy(&self, i: usize) -> Result<Self> {
        check_index("degeneracy index", i, self.cube_dim() + 1)?;
        Ok(Pipe::new(degeneracy(&self.vertices, i)))
    }

    fn transposition(&self, i: usize) -> Result<Self> {
        check_index("transposition index", i, self.cube_dim().saturating_sub(1))?;
        Ok(Pipe::new(transposition(&self.vertices, i)))
    }

    fn reversion(&self, i: usize) -> Result<Self> {
        check_index("reversion index", i, self.cube_dim())?;
        Ok(Pipe::new(reversion(&self.vertices, i)))
    }

    fn subdivide(&self, i: usize, s: &Rational) -> Result<(Self, Self)> {
        check_index("subdivision direction", i, self.cube_dim())?;
        let (a, b) = subdivide(&self.vertices, i, s);
        Ok((Pipe::new(a), Pipe::new(b)))
    }
}

/// An infinitesimal parallelepipedum: a pipe whose defining vertices form
/// an infinitesimal simplex. Every operator forms affine combinations of
/// mutual neighbours, so results stay infinitesimal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct InfPipeCell {
    simplex: InfSimplex,
}

impl InfPipeCell {
    pub fn new(simplex: InfSimplex) -> Self {
        InfPipeCell { simplex }
    }

    pub fn simplex(&self) -> &InfSimplex {
        &self.simplex
    }

    pub fn vertices(&self) -> &[InfPoint] {
        self.simplex.vertices()
    }

    pub fn corners(&self) -> Vec<InfPoint> {
        self.simplex.pipe_vertices()
    }

    fn wrap(vertices: Vec<InfPoint>) -> Self {
        InfPipeCell {
            simplex: InfSimplex::new_unchecked(vertices).expect("operators keep the shape"),
        }
    }
}

impl From<InfSimplex> for InfPipeCell {
    fn from(s: InfSimplex) -> Self {
        InfPipeCell::new(s)
    }
}

impl CubicalCell for InfPipeCell {
    fn cube_dim(&self) -> usize {
        self.simplex.dim()
    }

    fn face(&self, alpha: u8, i: usize) -> Result<Self> {
        check_face(alpha, i, self.cube_dim())?;
        Ok(Self::wrap(face(self.vertices(), alpha, i)))
    }

    fn degeneracy(&self, i: usize) -> Result<Self> {
        check_index("degeneracy index", i, self.cube_dim() + 1)?;
        Ok(Self::wrap(degeneracy(self.vertices(), i)))
    }

    fn transposition(&self, i: usize) -> Result<Self> {
        check_index("transposition index", i, self.cube_dim().saturating_sub(1))?;
        Ok(Self::wrap(transposition(self.vertices(), i)))
    }

    fn reversion(&self, i: usize) -> Result<Self> {
        check_index("reversion index", i, self.cube_dim())?;
        Ok(Self::wrap(reversion(self.vertices(), i)))
    }

    fn subdivide(&self, i: usize, s: &Rational) -> Result<(Self, Self)> {
        check_index("subdivision direction", i, self.cube_dim())?;
        let (a, b) = subdivide(self.vertices(), i, s);
        Ok((Self::wrap(a), Self::wrap(b)))
    }
}

impl fmt::Display for InfPipeCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.simplex.fmt(f)
    }
}
