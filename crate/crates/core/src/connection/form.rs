use super::Connection;
use crate::algebra::Rational;
use crate::cubical::{CubicalCell, InfPipeCell};
use crate::error::{Error, Result};
use crate::forms::{increasing_tuples, ClassicalForm, CombinatorialForm};
use crate::groupoid::{AdditiveWeil, ConstantCell, ConstantGroupoid};
use crate::weil::{InfPoint, InfSimplex, NilMonomial, WeilContext, WeilElement};

/// `M_n(Q)` over infinitesimal points, values in one Weil context.
pub type MnQ = ConstantGroupoid<InfPoint, AdditiveWeil>;

/// The `n`-connection into `M_n(Q)` generated by an `n`-form: lower pipes
/// go to their corner families, `n`-pipes also carry `ω(P)`.
#[derive(Clone, Debug)]
pub struct FormConnection {
    form: ClassicalForm,
    target: MnQ,
}

impl FormConnection {
    pub fn new(form: ClassicalForm, ctx: WeilContext) -> Result<Self> {
        if ctx.coords() < form.dim() {
            return Err(Error::ContextMismatch(format!(
                "{ctx} has fewer than {} coordinates",
                form.dim()
            )));
        }
        let target = ConstantGroupoid::new(form.degree(), AdditiveWeil { ctx })?;
        Ok(FormConnection { form, target })
    }

    /// Context with room for generic `(n+2)`-pipes at a symbolic base, so
    /// curvature and Bianchi checks can run.
    pub fn symbolic(form: ClassicalForm) -> Result<Self> {
        let ctx = WeilContext::new(form.degree() + 2, form.dim())?.with_aux(form.dim() + 1);
        FormConnection::new(form, ctx)
    }

    pub fn form(&self) -> &ClassicalForm {
        &self.form
    }

    pub fn context(&self) -> WeilContext {
        self.target.group().ctx
    }

    /// The generic `k`-pipe at the symbolic base `(y1, …, ym)`.
    pub fn generic_pipe(&self, k: usize) -> Result<InfPipeCell> {
        generic_pipe(self.context(), self.form.dim(), k)
    }
}

pub(super) fn generic_pipe(ctx: WeilContext, m: usize, k: usize) -> Result<InfPipeCell> {
    let base = InfPoint::symbolic(ctx, m)?;
    Ok(InfSimplex::generic_at(&base, 0, &vec![crate::algebra::rational::one(); k])?.into())
}

impl Connection for FormConnection {
    type Target = MnQ;

    fn dim(&self) -> usize {
        self.form.degree()
    }

    fn target(&self) -> &MnQ {
        &self.target
    }

    fn eval(&self, p: &InfPipeCell) -> Result<ConstantCell<InfPoint, WeilElement>> {
        if p.simplex().context() != self.context() {
            return Err(Error::ContextMismatch(format!(
                "pipe in {}, connection in {}",
                p.simplex().context(),
                self.context()
            )));
        }
        let k = p.cube_dim();
        let value = if k == self.dim() {
            Some(self.form.eval_pipe(p)?)
        } else {
            None
        };
        self.target.cell(p.corners(), value)
    }
}

pub fn form_to_connection(form: &ClassicalForm) -> Result<FormConnection> {
    FormConnection::symbolic(form.clone())
}

/// Recovers the form of a connection into `M_n(Q)` on `Q^m` from its value
/// on the generic `n`-pipe, `Σ_I n!·c_I(y)·ε[1,I1]⋯ε[n,In]`. Fails when
/// that value is not of this shape.
pub fn connection_to_form<C>(conn: &C, m: usize) -> Result<ClassicalForm>
where
    C: Connection<Target = MnQ>,
{
    let n = conn.dim();
    let ctx = conn.target().group().ctx;
    let p = generic_pipe(ctx, m, n)?;
    let cell = conn.eval(&p)?;
    let value = cell
        .value()
        .ok_or_else(|| Error::Unsupported("top cell without a value".into()))?;
    let nfact = Rational::from_integer((1..=n as i64).product::<i64>().into());
    let slots: Vec<usize> = (1..=n).collect();
    let mut terms = Vec::new();
    for axes in increasing_tuples(m, n) {
        let mono = NilMonomial::from_sets(0, &slots, &axes)
            .ok_or_else(|| Error::Unsupported(format!("no monomial for axes {axes:?}")))?;
        let c = value.coeff(&mono).truncate_vars(m)?;
        terms.push((axes, c.scale(&nfact.recip())));
    }
    let form = ClassicalForm::new(m, n, terms)?;
    if &form.eval_pipe(&p)? != value {
        return Err(Error::Unsupported(
            "connection values are not those of a classical form".into(),
        ));
    }
    Ok(form)
}
