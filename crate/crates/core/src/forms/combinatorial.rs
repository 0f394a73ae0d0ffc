use super::{permutations, ClassicalForm};
use crate::algebra::{Poly, Rational};
use crate::cubical::{CubicalCell, InfPipeCell, RelationCheck};
use crate::error::{check_dim, Error, Result};
use crate::weil::{InfPoint, InfSimplex, WeilElement};

/// A function from infinitesimal `n`-pipes to the Weil algebra.
pub trait CombinatorialForm {
    fn degree(&self) -> usize;
    fn eval_pipe(&self, p: &InfPipeCell) -> Result<WeilElement>;
}

impl<F: CombinatorialForm + ?Sized> CombinatorialForm for &F {
    fn degree(&self) -> usize {
        (**self).degree()
    }
    fn eval_pipe(&self, p: &InfPipeCell) -> Result<WeilElement> {
        (**self).eval_pipe(p)
    }
}

impl CombinatorialForm for ClassicalForm {
    fn degree(&self) -> usize {
        ClassicalForm::degree(self)
    }
    fn eval_pipe(&self, p: &InfPipeCell) -> Result<WeilElement> {
        eval_vertices(self, p.vertices())
    }
}

/// The cubical coboundary of a combinatorial form, itself a form.
#[derive(Clone, Debug)]
pub struct Coboundary<F>(pub F);

impl<F: CombinatorialForm> CombinatorialForm for Coboundary<F> {
    fn degree(&self) -> usize {
        self.0.degree() + 1
    }
    fn eval_pipe(&self, p: &InfPipeCell) -> Result<WeilElement> {
        d_cubical(&self.0, p)
    }
}

fn check_degree(what: &'static str, degree: usize, p: &InfPipeCell) -> Result<()> {
    check_dim(what, degree, p.cube_dim())
}

fn eval_vertices(omega: &ClassicalForm, vertices: &[InfPoint]) -> Result<WeilElement> {
    let k = omega.degree();
    check_dim("form degree vs simplex dimension", k, vertices.len() - 1)?;
    let x0 = &vertices[0];
    check_dim("form vs ambient dimension", omega.dim(), x0.dim())?;
    let ctx = x0.context();
    let disps = vertices[1..]
        .iter()
        .map(|x| x.sub(x0))
        .collect::<Result<Vec<_>>>()?;
    let perms = permutations(k);
    let mut acc = WeilElement::zero(ctx);
    for (axes, c) in omega.terms() {
        let cx = c.eval_in(&ctx, x0.coords())?;
        let mut det = WeilElement::zero(ctx);
        for (p, odd) in &perms {
            let mut prod = WeilElement::constant(ctx, crate::algebra::rational::one());
            for (a, &r) in p.iter().enumerate() {
                prod = prod.try_mul(&disps[a].coords()[axes[r] - 1])?;
                if prod.is_zero() {
                    break;
                }
            }
            det = if *odd { det.try_add(&-&prod)? } else { det.try_add(&prod)? };
        }
        acc = acc.try_add(&cx.try_mul(&det)?)?;
    }
    Ok(acc)
}

/// `ω(x0, …, xk) = Σ_I c_I(x0)·det((x_a - x0)_I)`.
pub fn eval_comb(omega: &ClassicalForm, s: &InfSimplex) -> Result<WeilElement> {
    eval_vertices(omega, s.vertices())
}

/// Volume of an infinitesimal `m`-simplex in `Q^m`: `det(x_a - x0)`.
pub fn vol(s: &InfSimplex) -> Result<WeilElement> {
    check_dim("volume needs a top-dimensional simplex", s.ambient_dim(), s.dim())?;
    eval_comb(&ClassicalForm::volume(s.ambient_dim()), s)
}

/// The density `θ̂` of a top-degree form, `θ(P) = θ̂(x0)·vol(P)`.
pub fn theta_hat(theta: &ClassicalForm) -> Result<Poly> {
    if theta.degree() != theta.dim() {
        return Err(Error::Unsupported(format!(
            "density needs a top-degree form, got degree {} on Q^{}",
            theta.degree(),
            theta.dim()
        )));
    }
    Ok(theta.coefficient(&(1..=theta.dim()).collect::<Vec<_>>()))
}

/// `dω(P) = Σ_{i=1}^{n+1} (-1)^i {ω(∂^1_i P) - ω(∂^0_i P)}` for an
/// `(n+1)`-pipe `P`.
pub fn d_cubical<F: CombinatorialForm + ?Sized>(omega: &F, p: &InfPipeCell) -> Result<WeilElement> {
    check_degree("coboundary needs an (n+1)-pipe", omega.degree() + 1, p)?;
    let mut acc = WeilElement::zero(p.simplex().context());
    for i in 1..=p.cube_dim() {
        let diff = omega
            .eval_pipe(&p.face(1, i)?)?
            .try_sub(&omega.eval_pipe(&p.face(0, i)?)?)?;
        acc = if i % 2 == 1 { acc.try_sub(&diff)? } else { acc.try_add(&diff)? };
    }
    Ok(acc)
}

/// The same face sum with the opposite orientation of every face,
/// `Σ (-1)^i {ω(∂^0_i P) - ω(∂^1_i P)}`.
pub fn d_cubical_hw<F: CombinatorialForm + ?Sized>(omega: &F, p: &InfPipeCell) -> Result<WeilElement> {
    Ok(-&d_cubical(omega, p)?)
}

/// `d_c(ω)(P) / (n+1)`, `n` the degree of `ω`.
pub fn d_simplicial<F: CombinatorialForm + ?Sized>(omega: &F, p: &InfPipeCell) -> Result<WeilElement> {
    let n1 = Rational::from_integer((omega.degree() + 1).into());
    Ok(d_cubical(omega, p)?.scale(&n1.recip()))
}

/// The simplicial cochain coboundary `Σ_{j=0}^{n+1} (-1)^j ω(x0, …, x̂_j, …)`.
pub fn simplicial_coboundary<F: CombinatorialForm + ?Sized>(
    omega: &F,
    s: &InfSimplex,
) -> Result<WeilElement> {
    check_dim("coboundary needs an (n+1)-simplex", omega.degree() + 1, s.dim())?;
    let mut acc = WeilElement::zero(s.context());
    for j in 0..s.vertices().len() {
        let mut vs = s.vertices().to_vec();
        vs.remove(j);
        let face = InfPipeCell::new(InfSimplex::new_unchecked(vs)?);
        let v = omega.eval_pipe(&face)?;
        acc = if j % 2 == 1 { acc.try_sub(&v)? } else { acc.try_add(&v)? };
    }
    Ok(acc)
}

/// Alternation and degeneracy laws of a combinatorial `n`-form on `p`:
/// `ω(ρ_i P) = -ω(P)`, `ω(σ_i P) = -ω(P)` and `ω(ε_i ∂^0_i P) = 0`.
pub fn check_form_symmetries<F: CombinatorialForm + ?Sized>(
    omega: &F,
    p: &InfPipeCell,
) -> Result<Vec<RelationCheck>> {
    let n = omega.degree();
    check_degree("symmetries need an n-pipe", n, p)?;
    let v = omega.eval_pipe(p)?;
    let neg = -&v;
    let mut out = Vec::new();
    for i in 1..=n {
        out.push(RelationCheck {
            name: format!("ω(r_{i} P) = -ω(P)"),
            pass: omega.eval_pipe(&p.reversion(i)?)? == neg,
        });
    }
    for i in 1..n {
        out.push(RelationCheck {
            name: format!("ω(s_{i} P) = -ω(P)"),
            pass: omega.eval_pipe(&p.transposition(i)?)? == neg,
        });
    }
    for i in 1..=n {
        let degenerate = p.face(0, i)?.degeneracy(i)?;
        out.push(RelationCheck {
            name: format!("ω(e_{i} d0_{i} P) = 0"),
            pass: omega.eval_pipe(&degenerate)?.is_zero(),
        });
    }
    Ok(out)
}
