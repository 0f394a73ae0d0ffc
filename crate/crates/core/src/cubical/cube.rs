use std::fmt;

use super::{check_face, CubicalCell};
use crate::algebra::rational::one;
use crate::algebra::{Poly, PolyMap, Rational};
use crate::error::{check_index, Result};

/// A polynomial singular cube `f: Q^k -> Q^m`. All structure operators are
/// exact precompositions with affine maps of the parameter cube.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SingularCube {
    map: PolyMap,
}

impl SingularCube {
    pub fn new(map: PolyMap) -> Self {
        SingularCube { map }
    }

    pub fn identity(k: usize) -> Self {
        SingularCube::new(PolyMap::identity(k))
    }

    /// The affine cube `[[x0, …, xk]]` spanned by rational vertices.
    pub fn from_vertices(vertices: &[Vec<Rational>]) -> Result<Self> {
        Ok(SingularCube::new(PolyMap::affine_simplex(vertices)?))
    }

    pub fn map(&self) -> &PolyMap {
        &self.map
    }

    pub fn into_map(self) -> PolyMap {
        self.map
    }

    pub fn dim(&self) -> usize {
        self.map.source_dim()
    }

    pub fn target_dim(&self) -> usize {
        self.map.target_dim()
    }

    pub fn corners(&self) -> Vec<Vec<Rational>> {
        self.map.corner_images()
    }

    /// `self ∘ g`.
    pub fn precompose(&self, g: &PolyMap) -> Result<SingularCube> {
        Ok(SingularCube::new(self.map.compose(g)?))
    }

    /// `g ∘ self`.
    pub fn postcompose(&self, g: &PolyMap) -> Result<SingularCube> {
        Ok(SingularCube::new(g.compose(&self.map)?))
    }

    /// Precomposes with the map replacing coordinate `i` by `offset + scale·t_i`.
    fn reparametrize(&self, i: usize, offset: &Rational, scale: &Rational) -> Result<Self> {
        let k = self.dim();
        let comps = (0..k)
            .map(|j| {
                if j + 1 == i {
                    &Poly::constant(k, offset.clone()) + &Poly::var(k, j).scale(scale)
                } else {
                    Poly::var(k, j)
                }
            })
            .collect();
        self.precompose(&PolyMap::new(k, comps)?)
    }
}

impl CubicalCell for SingularCube {
    fn cube_dim(&self) -> usize {
        self.dim()
    }

    /// Precomposes with `(t1, …, t_{k-1}) ↦ (t1, …, t_{i-1}, alpha, t_i, …)`.
    fn face(&self, alpha: u8, i: usize) -> Result<Self> {
        let k = self.dim();
        check_face(alpha, i, k)?;
        let comps = (0..k)
            .map(|j| match (j + 1).cmp(&i) {
                std::cmp::Ordering::Less => Poly::var(k - 1, j),
                std::cmp::Ordering::Equal => Poly::constant(k - 1, Rational::from_integer(alpha.into())),
                std::cmp::Ordering::Greater => Poly::var(k - 1, j - 1),
            })
            .collect();
        self.precompose(&PolyMap::new(k - 1, comps)?)
    }

    /// Precomposes with the projection forgetting `t_i`.
    fn degeneracy(&self, i: usize) -> Result<Self> {
        let k = self.dim();
        check_index("degeneracy index", i, k + 1)?;
        let comps = (0..k)
            .map(|j| Poly::var(k + 1, if j + 1 < i { j } else { j + 1 }))
            .collect();
        self.precompose(&PolyMap::new(k + 1, comps)?)
    }

    fn transposition(&self, i: usize) -> Result<Self> {
        let k = self.dim();
        check_index("transposition index", i, k.saturating_sub(1))?;
        let comps = (0..k)
            .map(|j| {
                let src = if j + 1 == i {
                    j + 1
                } else if j == i {
                    j - 1
                } else {
                    j
                };
                Poly::var(k, src)
            })
            .collect();
        self.precompose(&PolyMap::new(k, comps)?)
    }

    /// Precomposes with `t_i ↦ 1 - t_i`.
    fn reversion(&self, i: usize) -> Result<Self> {
        check_index("reversion index", i, self.dim())?;
        self.reparametrize(i, &one(), &-one())
    }

    /// `(f∘h, f∘k)` with `h: t_i ↦ s·t_i` and `k: t_i ↦ s + (1-s)·t_i`.
    fn subdivide(&self, i: usize, s: &Rational) -> Result<(Self, Self)> {
        check_index("subdivision direction", i, self.dim())?;
        let zero = Rational::from_integer(0.into());
        Ok((
            self.reparametrize(i, &zero, s)?,
            self.reparametrize(i, s, &(one() - s))?,
        ))
    }
}

impl fmt::Display for SingularCube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.map)
    }
}
