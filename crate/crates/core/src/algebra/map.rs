//! Polynomial maps `Q^k -> Q^m`.

use std::fmt;

use num_traits::{One, Zero};

use super::poly::Poly;
use super::rational::Rational;
use super::Algebra;
use crate::error::{check_dim, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PolyMap {
    source_dim: usize,
    components: Vec<Poly>,
}

impl PolyMap {
    pub fn new(source_dim: usize, components: Vec<Poly>) -> Result<Self> {
        for c in &components {
            check_dim("map component variable count", source_dim, c.nvars())?;
        }
        Ok(PolyMap {
            source_dim,
            components,
        })
    }

    pub fn identity(n: usize) -> Self {
        PolyMap {
            source_dim: n,
            components: (0..n).map(|i| Poly::var(n, i)).collect(),
        }
    }

    /// The affine map `t ↦ offset + matrix·t`; `matrix` is given by rows.
    pub fn affine(offset: &[Rational], matrix: &[Vec<Rational>]) -> Result<Self> {
        check_dim("affine matrix rows", offset.len(), matrix.len())?;
        let k = matrix.first().map_or(0, Vec::len);
        let components = offset
            .iter()
            .zip(matrix)
            .map(|(o, row)| {
                check_dim("affine matrix columns", k, row.len())?;
                let mut p = Poly::constant(k, o.clone());
                for (j, a) in row.iter().enumerate() {
                    p = &p + &Poly::var(k, j).scale(a);
                }
                Ok(p)
            })
            .collect::<Result<Vec<_>>>()?;
        PolyMap::new(k, components)
    }

    /// The affine singular cube `[[x0, …, xk]]`:
    /// `(s_1, …, s_k) ↦ (1 - Σ s_a)·x0 + Σ s_a·x_a`.
    pub fn affine_simplex(vertices: &[Vec<Rational>]) -> Result<Self> {
        let (x0, rest) = vertices
            .split_first()
            .ok_or_else(|| crate::Error::Unsupported("a simplex needs a vertex".into()))?;
        let matrix: Vec<Vec<Rational>> = (0..x0.len())
            .map(|i| {
                rest.iter()
                    .map(|xa| {
                        check_dim("simplex vertex", x0.len(), xa.len())?;
                        Ok(&xa[i] - &x0[i])
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        if rest.is_empty() {
            return PolyMap::new(
                0,
                x0.iter().map(|c| Poly::constant(0, c.clone())).collect(),
            );
        }
        PolyMap::affine(x0, &matrix)
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Poly] {
        &self.components
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &PolyMap) -> Result<PolyMap> {
        compose_maps(self, inner)
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Vec<Rational>> {
        self.components.iter().map(|c| c.eval(point)).collect()
    }

    pub fn eval_in<A: Algebra>(&self, ctx: &A::Ctx, point: &[A]) -> Result<Vec<A>> {
        self.components.iter().map(|c| c.eval_in(ctx, point)).collect()
    }

    /// Jacobian matrix: entry `[i][j]` is `∂f_i/∂t_j`.
    pub fn jacobian(&self) -> Vec<Vec<Poly>> {
        self.components
            .iter()
            .map(|c| {
                (0..self.source_dim)
                    .map(|j| c.partial_derivative(j).expect("in range"))
                    .collect()
            })
            .collect()
    }

    pub fn total_degree(&self) -> u32 {
        self.components
            .iter()
            .map(Poly::total_degree)
            .max()
            .unwrap_or(0)
    }

    /// Images of the `2^k` unit-cube corners, indexed by the binary label
    /// whose bit `a-1` is the `a`-th coordinate.
    pub fn corner_images(&self) -> Vec<Vec<Rational>> {
        (0..1usize << self.source_dim)
            .map(|label| {
                let t: Vec<Rational> = (0..self.source_dim)
                    .map(|a| {
                        if label >> a & 1 == 1 {
                            Rational::one()
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect();
                self.eval(&t).expect("corner has the source dimension")
            })
            .collect()
    }
}

/// Exact composite `g ∘ f`.
pub fn compose_maps(g: &PolyMap, f: &PolyMap) -> Result<PolyMap> {
    check_dim("composition (inner target vs outer source)", g.source_dim, f.target_dim())?;
    let components = g
        .components
        .iter()
        .map(|c| c.eval_in(&f.source_dim, &f.components))
        .collect::<Result<Vec<_>>>()?;
    PolyMap::new(f.source_dim, components)
}

impl fmt::Display for PolyMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}
