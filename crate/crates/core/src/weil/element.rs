use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Family, NilMonomial, WeilContext};
use crate::algebra::{format_rational, Algebra, Poly, Rational};
use crate::error::{Error, Result};

/// An element of the first-neighbourhood algebra: a finite combination of
/// normal monomials in the generators `ε[a,i]`, with coefficients that are
/// polynomials in the context's auxiliary variables (constants when the
/// context has none).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WeilElement {
    ctx: WeilContext,
    terms: BTreeMap<NilMonomial, Poly>,
}

impl WeilElement {
    pub fn zero(ctx: WeilContext) -> Self {
        WeilElement {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ctx: WeilContext, c: Rational) -> Self {
        WeilElement::from_poly(ctx, Poly::constant(ctx.aux(), c))
    }

    /// Embeds a polynomial in the auxiliary variables as a base (non-nilpotent) value.
    pub fn from_poly(ctx: WeilContext, p: Poly) -> Self {
        assert_eq!(p.nvars(), ctx.aux(), "coefficient ring mismatch");
        let mut e = WeilElement::zero(ctx);
        e.add_term(NilMonomial::ONE, p);
        e
    }

    /// The auxiliary variable `y_{k+1}` as a base value.
    pub fn aux_var(ctx: WeilContext, k: usize) -> Self {
        WeilElement::from_poly(ctx, Poly::var(ctx.aux(), k))
    }

    /// The generator `ε[slot, coord]` of the primary family (or of the inner
    /// family when `family` is 1). Slots and coordinates start at 1.
    pub fn generator(ctx: WeilContext, family: usize, slot: usize, coord: usize) -> Result<Self> {
        let fam: Family = ctx.family(family).ok_or_else(|| {
            Error::ContextMismatch(format!("context has no generator family {family}"))
        })?;
        crate::error::check_index("generator slot", slot, fam.slots as usize)?;
        crate::error::check_index("generator coordinate", coord, fam.coords as usize)?;
        let mut e = WeilElement::zero(ctx);
        e.add_term(
            NilMonomial::generator(family, slot, coord),
            Poly::one(ctx.aux()),
        );
        Ok(e)
    }

    /// Builds an element from explicit normal monomials.
    pub fn from_terms<I>(ctx: WeilContext, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (NilMonomial, Poly)>,
    {
        let mut e = WeilElement::zero(ctx);
        for (m, c) in terms {
            if !ctx.admits(&m) {
                return Err(Error::ContextMismatch(format!(
                    "monomial {m} is not a normal monomial of {ctx}"
                )));
            }
            if c.nvars() != ctx.aux() {
                return Err(Error::Dimension {
                    what: "Weil coefficient variable count",
                    expected: ctx.aux(),
                    found: c.nvars(),
                });
            }
            e.add_term(m, c);
        }
        Ok(e)
    }

    fn add_term(&mut self, m: NilMonomial, c: Poly) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn context(&self) -> WeilContext {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NilMonomial, &Poly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &NilMonomial) -> Poly {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| Poly::zero(self.ctx.aux()))
    }

    /// The non-nilpotent part.
    pub fn base(&self) -> Poly {
        self.coeff(&NilMonomial::ONE)
    }

    /// The element minus its base part.
    pub fn nilpotent_part(&self) -> WeilElement {
        let mut e = self.clone();
        e.terms.remove(&NilMonomial::ONE);
        e
    }

    /// `Some(c)` when the element is the rational constant `c`.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self
                .terms
                .get(&NilMonomial::ONE)
                .and_then(Poly::as_constant),
            _ => None,
        }
    }

    /// Highest monomial degree present.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(NilMonomial::degree).max().unwrap_or(0)
    }

    fn same_context(&self, other: &Self) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch(format!("{} vs {}", self.ctx, other.ctx)))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_context(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    /// Product reduced to normal form.
    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_context(other)?;
        let mut out = WeilElement::zero(self.ctx);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if let Some((m, negative)) = m1.mul(m2) {
                    let c = c1 * c2;
                    out.add_term(m, if negative { -&c } else { c });
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return WeilElement::zero(self.ctx);
        }
        WeilElement {
            ctx: self.ctx,
            terms: self.terms.iter().map(|(m, p)| (*m, p.scale(c))).collect(),
        }
    }

    pub fn scale_poly(&self, p: &Poly) -> Self {
        let mut out = WeilElement::zero(self.ctx);
        for (m, c) in &self.terms {
            out.add_term(*m, c * p);
        }
        out
    }

    /// Re-expresses the element in a larger context: more auxiliary
    /// variables appended, and/or an inner generator family adjoined.
    pub fn embed(&self, ctx: WeilContext) -> Result<Self> {
        if !ctx.extends(&self.ctx) {
            return Err(Error::ContextMismatch(format!(
                "{ctx} does not extend {}",
                self.ctx
            )));
        }
        let extra = ctx.aux() - self.ctx.aux();
        Ok(WeilElement {
            ctx,
            terms: self
                .terms
                .iter()
                .map(|(m, p)| (*m, p.extend_vars(extra)))
                .collect(),
        })
    }

    /// Applies `f` to every coefficient, landing in `ctx` (whose generator
    /// families must agree with the current ones).
    pub fn map_coefficients<F>(&self, ctx: WeilContext, f: F) -> Result<Self>
    where
        F: Fn(&Poly) -> Result<Poly>,
    {
        let mut out = WeilElement::zero(ctx);
        for (m, c) in &self.terms {
            let p = f(c)?;
            if p.nvars() != ctx.aux() {
                return Err(Error::Dimension {
                    what: "mapped coefficient variable count",
                    expected: ctx.aux(),
                    found: p.nvars(),
                });
            }
            out.add_term(*m, p);
        }
        Ok(out)
    }

    /// Substitutes a rational for an auxiliary variable (the count is kept).
    pub fn substitute_aux(&self, var: usize, value: &Rational) -> Result<Self> {
        self.map_coefficients(self.ctx, |p| p.substitute(var, value))
    }
}

/// Normal-form product of two Weil elements.
pub fn weil_mul(u: &WeilElement, v: &WeilElement) -> Result<WeilElement> {
    u.try_mul(v)
}

impl Algebra for WeilElement {
    type Ctx = WeilContext;

    fn constant(ctx: &WeilContext, c: &Rational) -> Self {
        WeilElement::constant(*ctx, c.clone())
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &Rational) -> Self {
        WeilElement::scale(self, c)
    }
    fn is_null(&self) -> bool {
        WeilElement::is_zero(self)
    }
}

impl<'a> Add<&'a WeilElement> for &'a WeilElement {
    type Output = WeilElement;
    fn add(self, rhs: &WeilElement) -> WeilElement {
        self.try_add(rhs).expect("Weil elements from different contexts")
    }
}

impl<'a> Sub<&'a WeilElement> for &'a WeilElement {
    type Output = WeilElement;
    fn sub(self, rhs: &WeilElement) -> WeilElement {
        self + &(-rhs)
    }
}

impl Neg for &WeilElement {
    type Output = WeilElement;
    fn neg(self) -> WeilElement {
        WeilElement {
            ctx: self.ctx,
            terms: self.terms.iter().map(|(m, p)| (*m, -p)).collect(),
        }
    }
}

impl<'a> Mul<&'a WeilElement> for &'a WeilElement {
    type Output = WeilElement;
    fn mul(self, rhs: &WeilElement) -> WeilElement {
        self.try_mul(rhs).expect("Weil elements from different contexts")
    }
}

impl fmt::Display for WeilElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            match c.as_constant() {
                Some(r) if m.is_one() => write!(f, "{}", format_rational(&r))?,
                Some(r) if r.is_one() => write!(f, "{m}")?,
                Some(r) => write!(f, "{}·{m}", format_rational(&r))?,
                None if m.is_one() => write!(f, "({c})")?,
                None => write!(f, "({c})·{m}")?,
            }
        }
        Ok(())
    }
}
