use std::fmt;

use super::{InfPoint, WeilContext, WeilElement};
use crate::algebra::{PolyMap, Rational};
use crate::error::{check_dim, Error, Result};

/// An infinitesimal simplex `(x0, …, xn)`: all vertices are pairwise
/// neighbours. The same data describes the parallelepipedum
/// `P(x0; x1, …, xn)` and the singular cube `[[x0, …, xn]]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct InfSimplex {
    vertices: Vec<InfPoint>,
}

impl InfSimplex {
    /// Validates the neighbour condition for every pair of vertices.
    pub fn new(vertices: Vec<InfPoint>) -> Result<Self> {
        let s = InfSimplex::new_unchecked(vertices)?;
        for a in 0..s.vertices.len() {
            for b in a + 1..s.vertices.len() {
                if !s.vertices[a].is_neighbour(&s.vertices[b])? {
                    return Err(Error::NotNeighbours { a, b });
                }
            }
        }
        Ok(s)
    }

    /// Checks shape only (shared context and dimension). Used when the
    /// neighbour condition holds by construction.
    pub(crate) fn new_unchecked(vertices: Vec<InfPoint>) -> Result<Self> {
        let first = vertices
            .first()
            .ok_or_else(|| Error::Unsupported("a simplex needs at least one vertex".into()))?;
        for v in &vertices {
            check_dim("simplex vertex dimension", first.dim(), v.dim())?;
            if v.context() != first.context() {
                return Err(Error::ContextMismatch(format!(
                    "{} vs {}",
                    v.context(),
                    first.context()
                )));
            }
        }
        Ok(InfSimplex { vertices })
    }

    /// The generic `n`-simplex at a rational base point: `x_a = p + ε[a,·]`.
    pub fn generic(p: &[Rational], n: usize) -> Result<Self> {
        let ctx = WeilContext::new(n, p.len())?;
        let base = InfPoint::from_rational(ctx, p);
        InfSimplex::generic_at(&base, 0, &vec![crate::algebra::rational::one(); n])
    }

    /// The generic `n`-simplex at the symbolic base point `(y1, …, ym)`,
    /// the `y` being auxiliary polynomial variables.
    pub fn generic_symbolic(m: usize, n: usize) -> Result<Self> {
        let ctx = WeilContext::new(n, m)?.with_aux(m);
        let base = InfPoint::symbolic(ctx, m)?;
        InfSimplex::generic_at(&base, 0, &vec![crate::algebra::rational::one(); n])
    }

    /// `x_a = base + t_a·g[a,·]` using generator family `family` of the
    /// base point's context; one slot per scale factor.
    pub fn generic_at(base: &InfPoint, family: usize, scales: &[Rational]) -> Result<Self> {
        let ctx = base.context();
        let fam = ctx
            .family(family)
            .ok_or_else(|| Error::ContextMismatch(format!("{ctx} has no family {family}")))?;
        if (fam.slots as usize) < scales.len() || (fam.coords as usize) < base.dim() {
            return Err(Error::ContextMismatch(format!(
                "{ctx} family {family} is too small for a {}-simplex in dimension {}",
                scales.len(),
                base.dim()
            )));
        }
        let mut vertices = vec![base.clone()];
        for (a, t) in scales.iter().enumerate() {
            let disp = (1..=base.dim())
                .map(|i| Ok(WeilElement::generator(ctx, family, a + 1, i)?.scale(t)))
                .collect::<Result<Vec<_>>>()?;
            vertices.push(base.add(&InfPoint::new(ctx, disp)?)?);
        }
        InfSimplex::new_unchecked(vertices)
    }

    /// The generic simplex with per-vertex rational scaling `t_a·ε[a,·]`.
    pub fn scaled(p: &[Rational], scales: &[Rational]) -> Result<Self> {
        let ctx = WeilContext::new(scales.len(), p.len())?;
        InfSimplex::generic_at(&InfPoint::from_rational(ctx, p), 0, scales)
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn ambient_dim(&self) -> usize {
        self.vertices[0].dim()
    }

    pub fn context(&self) -> WeilContext {
        self.vertices[0].context()
    }

    pub fn vertices(&self) -> &[InfPoint] {
        &self.vertices
    }

    pub fn base(&self) -> &InfPoint {
        &self.vertices[0]
    }

    pub fn into_vertices(self) -> Vec<InfPoint> {
        self.vertices
    }

    /// `x_a - x0` for `a = 1..=n`.
    pub fn displacement(&self, a: usize) -> Result<InfPoint> {
        crate::error::check_index("simplex vertex", a, self.dim())?;
        self.vertices[a].sub(&self.vertices[0])
    }

    pub fn affine_combination(&self, coeffs: &[Rational]) -> Result<InfPoint> {
        let pts: Vec<&InfPoint> = self.vertices.iter().collect();
        InfPoint::affine_combination(&pts, coeffs)
    }

    /// Applies a polynomial map vertexwise; the result is re-validated.
    pub fn map(&self, f: &PolyMap) -> Result<InfSimplex> {
        let vs = self
            .vertices
            .iter()
            .map(|v| super::apply_poly_map(f, v))
            .collect::<Result<Vec<_>>>()?;
        InfSimplex::new(vs)
    }

    pub fn embed(&self, ctx: WeilContext) -> Result<InfSimplex> {
        InfSimplex::new_unchecked(
            self.vertices
                .iter()
                .map(|v| v.embed(ctx))
                .collect::<Result<_>>()?,
        )
    }

    pub fn substitute_aux(&self, var: usize, value: &Rational) -> Result<InfSimplex> {
        InfSimplex::new(
            self.vertices
                .iter()
                .map(|v| v.substitute_aux(var, value))
                .collect::<Result<_>>()?,
        )
    }

    pub fn pipe_vertices(&self) -> Vec<InfPoint> {
        parallelepiped_vertices(&self.vertices).expect("vertices share a context")
    }
}

pub fn generic_simplex(p: &[Rational], n: usize) -> Result<InfSimplex> {
    InfSimplex::generic(p, n)
}

pub fn affine_combination(s: &InfSimplex, coeffs: &[Rational]) -> Result<InfPoint> {
    s.affine_combination(coeffs)
}

/// The `2^n` vertices of `P(x0; x1, …, xn)`: the vertex with binary label
/// `L` is `x0 + Σ_{bit a-1 of L set} (x_a - x0)`.
pub fn pipe_vertices(s: &InfSimplex) -> Vec<InfPoint> {
    s.pipe_vertices()
}

pub(crate) fn parallelepiped_vertices(vertices: &[InfPoint]) -> Result<Vec<InfPoint>> {
    let n = vertices.len() - 1;
    let x0 = &vertices[0];
    let disps = vertices[1..]
        .iter()
        .map(|x| x.sub(x0))
        .collect::<Result<Vec<_>>>()?;
    (0..1usize << n)
        .map(|label| {
            let mut p = x0.clone();
            for (a, d) in disps.iter().enumerate() {
                if label >> a & 1 == 1 {
                    p = p.add(d)?;
                }
            }
            Ok(p)
        })
        .collect()
}

impl fmt::Display for InfSimplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P({}", self.vertices[0])?;
        for (k, v) in self.vertices[1..].iter().enumerate() {
            write!(f, "{}{v}", if k == 0 { "; " } else { ", " })?;
        }
        write!(f, ")")
    }
}
