//! Exact scalars, polynomials and polynomial maps.

mod map;
mod poly;
pub mod rational;

pub use map::{compose_maps, PolyMap};
pub use poly::{Exponent, Poly};
pub use rational::{format_rational, parse_rational, Rational};

use num_traits::Zero;

/// A commutative unital algebra over the rationals, in which polynomials
/// can be evaluated. `Ctx` carries whatever is needed to build constants
/// (a variable count, a Weil context, ...).
pub trait Algebra: Clone + PartialEq {
    type Ctx;

    fn constant(ctx: &Self::Ctx, c: &Rational) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, c: &Rational) -> Self;
    fn is_null(&self) -> bool;
}

impl Algebra for Rational {
    type Ctx = ();

    fn constant(_: &(), c: &Rational) -> Self {
        c.clone()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &Rational) -> Self {
        self * c
    }
    fn is_null(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// Substitutes `point` into `p` inside the algebra `A`.
pub fn poly_eval_in_algebra<A: Algebra>(
    p: &Poly,
    ctx: &A::Ctx,
    point: &[A],
) -> crate::Result<A> {
    p.eval_in(ctx, point)
}

pub fn antiderivative(p: &Poly, var: usize) -> crate::Result<Poly> {
    p.antiderivative(var)
}

pub fn partial_derivative(p: &Poly, var: usize) -> crate::Result<Poly> {
    p.partial_derivative(var)
}

pub fn iterated_unit_integral(p: &Poly) -> Rational {
    p.iterated_unit_integral()
}
