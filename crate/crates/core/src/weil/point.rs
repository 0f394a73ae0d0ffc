use std::fmt;

use num_traits::One;

use super::{WeilContext, WeilElement};
use crate::algebra::{PolyMap, Rational};
use crate::error::{check_dim, Error, Result};

/// A point of `Q^m` displaced by nilpotent amounts: one Weil element per
/// coordinate, all in one context.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct InfPoint {
    ctx: WeilContext,
    coords: Vec<WeilElement>,
}

impl InfPoint {
    pub fn new(ctx: WeilContext, coords: Vec<WeilElement>) -> Result<Self> {
        for c in &coords {
            if c.context() != ctx {
                return Err(Error::ContextMismatch(format!(
                    "coordinate in {} for a point in {ctx}",
                    c.context()
                )));
            }
        }
        Ok(InfPoint { ctx, coords })
    }

    /// A rational point with no displacement.
    pub fn from_rational(ctx: WeilContext, p: &[Rational]) -> Self {
        InfPoint {
            ctx,
            coords: p
                .iter()
                .map(|c| WeilElement::constant(ctx, c.clone()))
                .collect(),
        }
    }

    /// The point whose coordinates are the first `dim` auxiliary variables.
    pub fn symbolic(ctx: WeilContext, dim: usize) -> Result<Self> {
        if ctx.aux() < dim {
            return Err(Error::Dimension {
                what: "auxiliary variables for a symbolic point",
                expected: dim,
                found: ctx.aux(),
            });
        }
        Ok(InfPoint {
            ctx,
            coords: (0..dim).map(|k| WeilElement::aux_var(ctx, k)).collect(),
        })
    }

    pub fn context(&self) -> WeilContext {
        self.ctx
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[WeilElement] {
        &self.coords
    }

    /// The rational coordinates, if the point carries no displacement and
    /// no auxiliary variables.
    pub fn as_rational(&self) -> Option<Vec<Rational>> {
        self.coords.iter().map(WeilElement::as_rational).collect()
    }

    fn zip_with<F>(&self, other: &InfPoint, f: F) -> Result<InfPoint>
    where
        F: Fn(&WeilElement, &WeilElement) -> Result<WeilElement>,
    {
        check_dim("point dimension", self.dim(), other.dim())?;
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch(format!("{} vs {}", self.ctx, other.ctx)));
        }
        Ok(InfPoint {
            ctx: self.ctx,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| f(a, b))
                .collect::<Result<_>>()?,
        })
    }

    pub fn add(&self, other: &InfPoint) -> Result<InfPoint> {
        self.zip_with(other, |a, b| a.try_add(b))
    }

    pub fn sub(&self, other: &InfPoint) -> Result<InfPoint> {
        self.zip_with(other, |a, b| a.try_add(&-b))
    }

    pub fn scale(&self, t: &Rational) -> InfPoint {
        InfPoint {
            ctx: self.ctx,
            coords: self.coords.iter().map(|c| c.scale(t)).collect(),
        }
    }

    pub fn scale_by(&self, t: &WeilElement) -> Result<InfPoint> {
        Ok(InfPoint {
            ctx: self.ctx,
            coords: self
                .coords
                .iter()
                .map(|c| c.try_mul(t))
                .collect::<Result<_>>()?,
        })
    }

    /// `self - base + other`, the fourth vertex of a parallelogram.
    pub fn translate(&self, base: &InfPoint, other: &InfPoint) -> Result<InfPoint> {
        self.sub(base)?.add(other)
    }

    /// `self` and `other` are first-order neighbours: every product of two
    /// coordinates of their difference vanishes.
    pub fn is_neighbour(&self, other: &InfPoint) -> Result<bool> {
        let d = self.sub(other)?;
        for i in 0..d.dim() {
            for j in i..d.dim() {
                if !d.coords[i].try_mul(&d.coords[j])?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Affine combination `Σ t_k·x_k`; the weights must sum to exactly 1.
    pub fn affine_combination(points: &[&InfPoint], weights: &[Rational]) -> Result<InfPoint> {
        check_dim("affine weights", points.len(), weights.len())?;
        let total: Rational = weights.iter().sum();
        if !total.is_one() {
            return Err(Error::AffineViolation(crate::algebra::format_rational(&total)));
        }
        let first = points[0];
        let mut acc = first.scale(&weights[0]);
        for (p, w) in points.iter().zip(weights).skip(1) {
            acc = acc.add(&p.scale(w))?;
        }
        Ok(acc)
    }

    pub fn embed(&self, ctx: WeilContext) -> Result<InfPoint> {
        Ok(InfPoint {
            ctx,
            coords: self
                .coords
                .iter()
                .map(|c| c.embed(ctx))
                .collect::<Result<_>>()?,
        })
    }

    pub fn substitute_aux(&self, var: usize, value: &Rational) -> Result<InfPoint> {
        Ok(InfPoint {
            ctx: self.ctx,
            coords: self
                .coords
                .iter()
                .map(|c| c.substitute_aux(var, value))
                .collect::<Result<_>>()?,
        })
    }
}

/// Coordinatewise substitution of the point into a polynomial map.
pub fn apply_poly_map(f: &PolyMap, x: &InfPoint) -> Result<InfPoint> {
    check_dim("map source vs point", f.source_dim(), x.dim())?;
    Ok(InfPoint {
        ctx: x.ctx,
        coords: f.eval_in(&x.ctx, &x.coords)?,
    })
}

impl fmt::Display for InfPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}
