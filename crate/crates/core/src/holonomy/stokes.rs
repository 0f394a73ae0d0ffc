use super::{integrate_along_pipe, integrate_form, FormIntegral, SurfaceIntegral};
use crate::algebra::Rational;
use crate::connection::{Connection, FormConnection};
use crate::cubical::{CubicalCell, InfPipeCell, RelationCheck, SingularCube};
use crate::error::{check_dim, Error, Result};
use crate::forms::{eval_comb, orientation_sign, ClassicalForm};
use crate::groupoid::{folding_hal, AdditiveRationals, ConstantCell, ConstantGroupoid, Coskeleton};

/// `M_n(Q)` over rational points, the home of integrated connections.
pub type HolonomyGroupoid = ConstantGroupoid<Vec<Rational>, AdditiveRationals>;

pub fn holonomy_groupoid(n: usize) -> HolonomyGroupoid {
    ConstantGroupoid::new(n, AdditiveRationals).expect("rationals are abelian")
}

fn cell_of(
    omega: &ClassicalForm,
    g: &HolonomyGroupoid,
    f: &SingularCube,
) -> Result<ConstantCell<Vec<Rational>, Rational>> {
    let value = if f.dim() == omega.degree() {
        Some(integrate_form(omega, f)?.value)
    } else {
        None
    };
    g.cell(f.corners(), value)
}

/// `∫∇` on a singular cube of dimension at most `n`: its corner images,
/// and on `n`-cubes the integral of the generating form.
pub fn holonomy_cell(
    conn: &FormConnection,
    f: &SingularCube,
) -> Result<ConstantCell<Vec<Rational>, Rational>> {
    if f.dim() > conn.dim() {
        return Err(Error::Dimension {
            what: "cube dimension for a holonomy cell",
            expected: conn.dim(),
            found: f.dim(),
        });
    }
    cell_of(conn.form(), &holonomy_groupoid(conn.dim()), f)
}

/// `Σ_{i=1}^{n+1} (-1)^i {Ω(∂^1_i f) - Ω(∂^0_i f)}` for an `(n+1)`-cube.
pub fn boundary_functional<S: SurfaceIntegral + ?Sized>(omega: &S, f: &SingularCube) -> Result<Rational> {
    check_dim("boundary functional cube", omega.degree() + 1, f.dim())?;
    let mut total = Rational::from_integer(0.into());
    for i in 1..=f.dim() {
        let diff = omega.integrate(&f.face(1, i)?)? - omega.integrate(&f.face(0, i)?)?;
        if i % 2 == 1 {
            total -= diff;
        } else {
            total += diff;
        }
    }
    Ok(total)
}

/// Subdivision additivity at `(i, s)` and the sign flips under every
/// transposition and reversion.
pub fn verify_subdivision_and_alternation<S: SurfaceIntegral + ?Sized>(
    omega: &S,
    f: &SingularCube,
    i: usize,
    s: &Rational,
) -> Result<Vec<RelationCheck>> {
    let whole = omega.integrate(f)?;
    let (f1, f2) = f.subdivide(i, s)?;
    let mut out = vec![RelationCheck {
        name: format!("Ω(f) = Ω(f') + Ω(f'') at i={i}, s={s}"),
        pass: omega.integrate(&f1)? + omega.integrate(&f2)? == whole,
    }];
    for j in 1..f.dim() {
        out.push(RelationCheck {
            name: format!("Ω(f s_{j}) = -Ω(f)"),
            pass: omega.integrate(&f.transposition(j)?)? == -whole.clone(),
        });
    }
    for j in 1..=f.dim() {
        out.push(RelationCheck {
            name: format!("Ω(f r_{j}) = -Ω(f)"),
            pass: omega.integrate(&f.reversion(j)?)? == -whole.clone(),
        });
    }
    Ok(out)
}

/// The boundary functional of `Ω` is again additive under subdivision.
pub fn check_boundary_subdivision<S: SurfaceIntegral + ?Sized>(
    omega: &S,
    f: &SingularCube,
    i: usize,
    s: &Rational,
) -> Result<bool> {
    let (f1, f2) = f.subdivide(i, s)?;
    Ok(boundary_functional(omega, &f1)? + boundary_functional(omega, &f2)?
        == boundary_functional(omega, f)?)
}

/// `∫_{[[x0,…,xn]]} ω = ω(P)` on an infinitesimal pipe.
pub fn verify_prop_ib(omega: &ClassicalForm, p: &InfPipeCell) -> Result<RelationCheck> {
    let integral = integrate_along_pipe(omega, p)?;
    Ok(RelationCheck {
        name: format!("∫ over the {}-pipe equals ω(P)", p.cube_dim()),
        pass: integral == eval_comb(omega, p.simplex())?,
    })
}

/// On an infinitesimal `(n+1)`-pipe, the face integrals of the form agree
/// with the shell the formal curvature assigns.
pub fn pre_stokes_commutes(conn: &FormConnection, p: &InfPipeCell) -> Result<bool> {
    check_dim("pre-Stokes pipe", conn.dim() + 1, p.cube_dim())?;
    for i in 1..=p.cube_dim() {
        for a in 0..2u8 {
            let face = p.face(a, i)?;
            let cell = conn.eval(&face)?;
            if cell.value() != Some(&integrate_along_pipe(conn.form(), &face)?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Both sides of Stokes' theorem on one `(n+1)`-cube, exactly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StokesRecord {
    pub case: String,
    /// `∫_f` of the form `s(n)·dω` matching the cubical coboundary.
    pub lhs: Rational,
    /// The alternating sum of face integrals.
    pub rhs: Rational,
    /// The alternating-sum folding of the shell of face holonomies.
    pub shell_fold: Rational,
    pub pass: bool,
}

pub fn verify_stokes(omega: &ClassicalForm, f: &SingularCube, case: &str) -> Result<StokesRecord> {
    let n = omega.degree();
    check_dim("Stokes cube", n + 1, f.dim())?;
    let sign = orientation_sign(n)
        .ok_or_else(|| Error::Unsupported(format!("no measured orientation sign for degree {n}")))?;
    let lhs = integrate_form(&omega.d_classical().scale(&sign), f)?.value;
    let rhs = boundary_functional(&FormIntegral(omega.clone()), f)?;

    let g = holonomy_groupoid(n);
    let faces = (1..=f.dim())
        .map(|i| Ok([cell_of(omega, &g, &f.face(0, i)?)?, cell_of(omega, &g, &f.face(1, i)?)?]))
        .collect::<Result<Vec<_>>>()?;
    let cosk = Coskeleton::new(g.clone())?;
    let shell = cosk.shell(faces)?;
    let (_, shell_fold) = folding_hal(&g, shell.shell()?)?;

    let pass = lhs == rhs && shell_fold == lhs;
    Ok(StokesRecord {
        case: case.to_string(),
        lhs,
        rhs,
        shell_fold,
        pass,
    })
}
