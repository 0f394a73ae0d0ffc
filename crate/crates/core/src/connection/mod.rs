//! Connections: maps from infinitesimal pipes to cells of a cubical
//! groupoid that commute with faces, degeneracies and reversions.
//!
//! A connection of dimension `n` assigns a `k`-cell to every `k`-pipe for
//! `k ≤ n`. Its formal curvature extends it one dimension up into the
//! coskeleton, sending an `(n+1)`-pipe to the shell of values on its faces;
//! folding that shell gives the curvature.

mod form;
mod rule;

pub use form::{connection_to_form, form_to_connection, FormConnection, MnQ};
pub use rule::{cube_diagram_connection, edge_table_connection, RuleConnection};

use crate::cubical::{CubicalCell, InfPipeCell, RelationCheck, Shell};
use crate::error::{check_dim, Error, Result};
use crate::groupoid::{
    folding_cube, folding_hal, folding_square, CoskCell, Coskeleton, CubicalGroupoid, FreeCell,
    FreeGroupoid,
};
use crate::weil::WeilElement;

pub type CellOf<C> = <<C as Connection>::Target as CubicalGroupoid>::Cell;

pub trait Connection {
    type Target: CubicalGroupoid;

    fn dim(&self) -> usize;

    fn target(&self) -> &Self::Target;

    /// `∇(P)` for a `k`-pipe with `k ≤ dim()`.
    fn eval(&self, p: &InfPipeCell) -> Result<CellOf<Self>>;
}

fn check_pipe_dim(what: &'static str, max: usize, p: &InfPipeCell) -> Result<()> {
    if p.cube_dim() > max {
        return Err(Error::Dimension {
            what,
            expected: max,
            found: p.cube_dim(),
        });
    }
    Ok(())
}

/// The morphism laws on one pipe `P` of dimension `k ≤ n`:
/// `∇(∂^α_i P) = ∂^α_i ∇(P)`, `∇(ρ_i P) = -_i ∇(P)` and, below the top
/// dimension, `∇(ε_i P) = ε_i ∇(P)`.
pub fn check_morphism<C: Connection>(conn: &C, p: &InfPipeCell) -> Result<Vec<RelationCheck>> {
    check_pipe_dim("pipe dimension for a morphism check", conn.dim(), p)?;
    let g = conn.target();
    let k = p.cube_dim();
    let v = conn.eval(p)?;
    let mut out = Vec::new();
    let mut push = |name: String, lhs: Result<CellOf<C>>, rhs: Result<CellOf<C>>| {
        let pass = matches!((lhs, rhs), (Ok(a), Ok(b)) if a == b);
        out.push(RelationCheck { name, pass });
    };
    for i in 1..=k {
        for a in 0..2u8 {
            push(
                format!("∇ d{a}_{i} = d{a}_{i} ∇"),
                p.face(a, i).and_then(|f| conn.eval(&f)),
                g.face(&v, a, i),
            );
        }
        push(
            format!("∇ r_{i} = -_{i} ∇"),
            p.reversion(i).and_then(|r| conn.eval(&r)),
            g.inverse(&v, i),
        );
    }
    if k < conn.dim() {
        for i in 1..=k + 1 {
            push(
                format!("∇ e_{i} = e_{i} ∇"),
                p.degeneracy(i).and_then(|d| conn.eval(&d)),
                g.degeneracy(&v, i),
            );
        }
    }
    Ok(out)
}

/// `∇(P) = ∇(P') +_i ∇(P'')` for the subdivision of `P` at `s`.
pub fn check_subdivision<C: Connection>(
    conn: &C,
    p: &InfPipeCell,
    i: usize,
    s: &crate::algebra::Rational,
) -> Result<bool> {
    let (p1, p2) = p.subdivide(i, s)?;
    let glued = conn.target().compose(&conn.eval(&p1)?, &conn.eval(&p2)?, i)?;
    Ok(glued == conn.eval(p)?)
}

/// The formal curvature of an `n`-connection: the same values up to
/// dimension `n`, and on an `(n+1)`-pipe the shell of values on its faces.
pub struct FormalCurvature<'a, C: Connection> {
    conn: &'a C,
    cosk: Coskeleton<C::Target>,
}

impl<'a, C: Connection> FormalCurvature<'a, C>
where
    C::Target: Clone,
{
    pub fn new(conn: &'a C) -> Result<Self> {
        Ok(FormalCurvature {
            conn,
            cosk: Coskeleton::new(conn.target().clone())?,
        })
    }

    pub fn connection(&self) -> &C {
        self.conn
    }

    /// The shell on an `(n+1)`-pipe, unwrapped.
    pub fn shell(&self, p: &InfPipeCell) -> Result<Shell<CellOf<C>>> {
        check_dim("formal curvature pipe", self.conn.dim() + 1, p.cube_dim())?;
        match self.eval(p)? {
            CoskCell::Shell(sh) => Ok(sh),
            CoskCell::Base(_) => unreachable!("top pipes give shells"),
        }
    }
}

impl<C: Connection> Connection for FormalCurvature<'_, C>
where
    C::Target: Clone,
{
    type Target = Coskeleton<C::Target>;

    fn dim(&self) -> usize {
        self.conn.dim() + 1
    }

    fn target(&self) -> &Self::Target {
        &self.cosk
    }

    fn eval(&self, p: &InfPipeCell) -> Result<CellOf<Self>> {
        check_pipe_dim("pipe dimension", self.dim(), p)?;
        if p.cube_dim() <= self.conn.dim() {
            return Ok(CoskCell::Base(self.conn.eval(p)?));
        }
        let faces = (1..=p.cube_dim())
            .map(|i| Ok([self.conn.eval(&p.face(0, i)?)?, self.conn.eval(&p.face(1, i)?)?]))
            .collect::<Result<Vec<_>>>()?;
        self.cosk.shell(faces)
    }
}

/// Target groupoids with an implemented folding of top shells.
pub trait Folding: CubicalGroupoid {
    type Value: Clone + PartialEq + std::fmt::Debug;

    fn fold(&self, sh: &Shell<Self::Cell>) -> Result<Self::Value>;

    /// The value of a flat shell.
    fn is_flat(&self, v: &Self::Value) -> bool;
}

impl Folding for FreeGroupoid {
    type Value = FreeCell;

    fn fold(&self, sh: &Shell<FreeCell>) -> Result<FreeCell> {
        folding_square(self, sh)
    }

    fn is_flat(&self, v: &FreeCell) -> bool {
        matches!(v, FreeCell::Arrow(a) if a.is_identity())
    }
}

impl Folding for MnQ {
    type Value = WeilElement;

    fn fold(&self, sh: &Shell<Self::Cell>) -> Result<WeilElement> {
        Ok(folding_hal(self, sh)?.1)
    }

    fn is_flat(&self, v: &WeilElement) -> bool {
        v.is_zero()
    }
}

/// Curvature of `∇` on an `(n+1)`-pipe: the folded formal curvature.
pub fn curvature<C>(conn: &C, p: &InfPipeCell) -> Result<<C::Target as Folding>::Value>
where
    C: Connection,
    C::Target: Folding + Clone,
{
    let fc = FormalCurvature::new(conn)?;
    conn.target().fold(&fc.shell(p)?)
}

pub fn is_flat_on<C>(conn: &C, p: &InfPipeCell) -> Result<bool>
where
    C: Connection,
    C::Target: Folding + Clone,
{
    Ok(conn.target().is_flat(&curvature(conn, p)?))
}

/// Bianchi identity for a connection into `M_n(Q)` on an `(n+2)`-pipe:
/// the signed face sum of curvatures vanishes, as does `d_c d_c ω`.
pub fn verify_bianchi_form(conn: &FormConnection, p: &InfPipeCell) -> Result<Vec<RelationCheck>> {
    check_dim("Bianchi pipe", conn.dim() + 2, p.cube_dim())?;
    let ctx = conn.context();
    let mut sum = WeilElement::zero(ctx);
    for i in 1..=p.cube_dim() {
        let diff = curvature(conn, &p.face(1, i)?)?.try_sub(&curvature(conn, &p.face(0, i)?)?)?;
        sum = if i % 2 == 1 { sum.try_sub(&diff)? } else { sum.try_add(&diff)? };
    }
    let dd = crate::forms::Coboundary(crate::forms::Coboundary(conn.form()));
    use crate::forms::CombinatorialForm;
    Ok(vec![
        RelationCheck {
            name: "signed face sum of curvatures".into(),
            pass: sum.is_zero(),
        },
        RelationCheck {
            name: "d_c d_c ω".into(),
            pass: dd.eval_pipe(p)?.is_zero(),
        },
    ])
}

/// Bianchi identity for a 1-connection into a free groupoid on a 3-pipe:
/// the 30-letter composite of its edge values reduces to the identity at
/// the last corner.
pub fn verify_bianchi_free<C>(conn: &C, p: &InfPipeCell) -> Result<RelationCheck>
where
    C: Connection<Target = FreeGroupoid>,
{
    check_dim("Bianchi pipe", 3, p.cube_dim())?;
    check_dim("connection dimension", 1, conn.dim())?;
    let corners = p.corners();
    let mut edges = std::collections::BTreeMap::new();
    for name in crate::groupoid::CUBE_EDGES {
        let b = name.as_bytes();
        let (a, c) = ((b[0] - b'0') as usize, (b[1] - b'0') as usize);
        let edge = InfPipeCell::new(crate::weil::InfSimplex::new(vec![
            corners[a].clone(),
            corners[c].clone(),
        ])?);
        edges.insert(name.to_string(), conn.eval(&edge)?);
    }
    let folded = folding_cube(conn.target(), &edges)?;
    let last = conn.eval(&InfPipeCell::new(crate::weil::InfSimplex::new(vec![corners[7].clone()])?))?;
    let pass = match (&folded, &last) {
        (FreeCell::Arrow(a), FreeCell::Vertex(v)) => a.is_identity() && a.source() == *v,
        _ => false,
    };
    Ok(RelationCheck {
        name: "30-letter composite of edge values".into(),
        pass,
    })
}

/// The folded formal curvature of a form
/// connection equals the cubical coboundary of its form.
pub fn curvature_is_coboundary(conn: &FormConnection, p: &InfPipeCell) -> Result<bool> {
    Ok(curvature(conn, p)? == crate::forms::d_cubical(conn.form(), p)?)
}

#[cfg(test)]
mod tests;
