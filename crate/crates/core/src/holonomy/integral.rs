use crate::algebra::{Poly, Rational};
use crate::cubical::{CubicalCell, InfPipeCell, SingularCube};
use crate::error::{check_dim, Error, Result};
use crate::forms::{permutations, theta_hat, ClassicalForm};
use crate::weil::WeilElement;

/// One antiderivative step: `result = F|_{var=1} - F|_{var=0}` with
/// `∂F/∂var = integrand`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntegrationStep {
    pub var: usize,
    pub integrand: Poly,
    pub antiderivative: Poly,
    pub result: Poly,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntegralResult {
    pub value: Rational,
    pub trace: Vec<IntegrationStep>,
}

impl IntegralResult {
    /// Replays the trace: every step differentiates back to its integrand,
    /// evaluates correctly at the endpoints and feeds the next step.
    pub fn verify_trace(&self) -> bool {
        let mut prev: Option<&Poly> = None;
        for s in &self.trace {
            if prev.is_some_and(|p| p != &s.integrand) {
                return false;
            }
            let ok = (|| -> Result<bool> {
                let at1 = s.antiderivative.substitute(s.var, &Rational::from_integer(1.into()))?;
                let at0 = s.antiderivative.substitute(s.var, &Rational::from_integer(0.into()))?;
                Ok(s.antiderivative.partial_derivative(s.var)? == s.integrand
                    && &at1 - &at0 == s.result)
            })();
            if ok != Ok(true) {
                return false;
            }
            prev = Some(&s.result);
        }
        match prev {
            Some(p) => p.as_constant().as_ref() == Some(&self.value),
            None => true,
        }
    }
}

/// The density of `f*ω` on the parameter cube.
fn density(omega: &ClassicalForm, f: &SingularCube) -> Result<Poly> {
    check_dim("form degree vs cube dimension", omega.degree(), f.dim())?;
    theta_hat(&omega.pullback(f.map())?)
}

/// `∫_f ω`, integrating the parameters in the order `t_n, …, t_1`.
pub fn integrate_form(omega: &ClassicalForm, f: &SingularCube) -> Result<IntegralResult> {
    let order: Vec<usize> = (0..f.dim()).rev().collect();
    integrate_form_in_order(omega, f, &order)
}

pub fn integrate_form_in_order(
    omega: &ClassicalForm,
    f: &SingularCube,
    order: &[usize],
) -> Result<IntegralResult> {
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (0..f.dim()).collect::<Vec<_>>() {
        return Err(Error::Unsupported(format!(
            "integration order {order:?} is not a permutation of the {} parameters",
            f.dim()
        )));
    }
    let mut p = density(omega, f)?;
    let mut trace = Vec::new();
    for &var in order {
        let antiderivative = p.antiderivative(var)?;
        let result = antiderivative.substitute(var, &Rational::from_integer(1.into()))?;
        trace.push(IntegrationStep {
            var,
            integrand: p,
            antiderivative,
            result: result.clone(),
        });
        p = result;
    }
    let value = p
        .as_constant()
        .ok_or_else(|| Error::Unsupported("integral did not reduce to a constant".into()))?;
    Ok(IntegralResult { value, trace })
}

/// A functional on singular `n`-cubes, such as `f ↦ ∫_f ω`.
pub trait SurfaceIntegral {
    fn degree(&self) -> usize;
    fn integrate(&self, f: &SingularCube) -> Result<Rational>;
}

/// `Ω = ∫ω`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FormIntegral(pub ClassicalForm);

impl SurfaceIntegral for FormIntegral {
    fn degree(&self) -> usize {
        self.0.degree()
    }

    fn integrate(&self, f: &SingularCube) -> Result<Rational> {
        Ok(integrate_form(&self.0, f)?.value)
    }
}

/// `∫` of `ω` along the infinitesimal cube `[[x0, …, xn]]`, with Weil
/// coefficients: `t ↦ x0 + Σ t_a (x_a - x0)` is pulled back with the `t_a`
/// as fresh auxiliary variables, which are then integrated out
/// coefficientwise.
pub fn integrate_along_pipe(omega: &ClassicalForm, p: &InfPipeCell) -> Result<WeilElement> {
    let n = p.cube_dim();
    check_dim("form degree vs pipe dimension", omega.degree(), n)?;
    let s = p.simplex();
    check_dim("form vs ambient dimension", omega.dim(), s.ambient_dim())?;
    let ctx = s.context();
    let base_aux = ctx.aux();
    let wide = ctx.with_aux(base_aux + n);
    let s = s.embed(wide)?;
    let disps = (1..=n).map(|a| s.displacement(a)).collect::<Result<Vec<_>>>()?;
    let mut y = s.base().clone();
    for (a, d) in disps.iter().enumerate() {
        y = y.add(&d.scale_by(&WeilElement::aux_var(wide, base_aux + a))?)?;
    }
    // θ̂(t) = Σ_I c_I(y(t))·det((d_a)_{I_r})
    let perms = permutations(n);
    let mut integrand = WeilElement::zero(wide);
    for (axes, c) in omega.terms() {
        let mut det = WeilElement::zero(wide);
        for (perm, odd) in &perms {
            let mut prod = WeilElement::constant(wide, Rational::from_integer(1.into()));
            for (a, &r) in perm.iter().enumerate() {
                prod = prod.try_mul(&disps[a].coords()[axes[r] - 1])?;
            }
            det = if *odd { det.try_sub(&prod)? } else { det.try_add(&prod)? };
        }
        integrand = integrand.try_add(&c.eval_in(&wide, y.coords())?.try_mul(&det)?)?;
    }
    integrand.map_coefficients(ctx, |q| {
        let mut q = q.clone();
        for a in (0..n).rev() {
            q = q.integrate_unit(base_aux + a)?;
        }
        q.truncate_vars(base_aux)
    })
}
