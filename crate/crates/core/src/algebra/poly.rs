//! Sparse multivariate polynomials over the rationals.
//!
//! Variables are indexed from 0 in the API and printed as `x1, x2, ...`.
//! Terms are kept in a `BTreeMap` keyed by graded-lexicographic exponent
//! tuples with zero coefficients never stored, so structural equality is
//! polynomial equality.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{format_rational, Rational};
use super::Algebra;
use crate::error::{check_dim, Error, Result};

/// Exponent tuple ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Exponent(pub Vec<u32>);

impl Exponent {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Exponent, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, Rational::one())
    }

    /// The coordinate function `x_{i+1}`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable {i} out of range for {nvars} variables");
        let mut e = vec![0; nvars];
        e[i] = 1;
        Poly::monomial(e, Rational::one())
    }

    pub fn monomial(exps: Vec<u32>, c: Rational) -> Self {
        let mut p = Poly::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing
    /// repeated exponents.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = Poly::zero(nvars);
        for (e, c) in terms {
            check_dim("exponent tuple length", nvars, e.len())?;
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(Exponent(exps)) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.0.as_slice(), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms
            .get(&Exponent(exps.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// The constant term.
    pub fn constant_term(&self) -> Rational {
        self.coeff(&vec![0; self.nvars])
    }

    /// `Some(c)` when the polynomial is the constant `c`.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                (e.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Exponent::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e.0[var]).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.clone(), v * c))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    fn check_var(&self, var: usize) -> Result<()> {
        if var < self.nvars {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                what: "polynomial variable",
                index: var + 1,
                max: self.nvars,
            })
        }
    }

    /// Exact formal partial derivative in `var`.
    pub fn partial_derivative(&self, var: usize) -> Result<Poly> {
        self.check_var(var)?;
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            let k = e.0[var];
            if k == 0 {
                continue;
            }
            let mut ne = e.0.clone();
            ne[var] -= 1;
            out.add_term(ne, c * Rational::from_integer(k.into()));
        }
        Ok(out)
    }

    /// Antiderivative in `var` with the integration constant fixed to zero:
    /// every term of the result has positive degree in `var`.
    pub fn antiderivative(&self, var: usize) -> Result<Poly> {
        self.check_var(var)?;
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut ne = e.0.clone();
            ne[var] += 1;
            out.add_term(ne.clone(), c / Rational::from_integer(ne[var].into()));
        }
        Ok(out)
    }

    /// Substitutes the constant `value` for `var`; the variable count is kept.
    pub fn substitute(&self, var: usize, value: &Rational) -> Result<Poly> {
        self.check_var(var)?;
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut ne = e.0.clone();
            let k = std::mem::replace(&mut ne[var], 0);
            let mut v = c.clone();
            for _ in 0..k {
                v *= value;
            }
            out.add_term(ne, v);
        }
        Ok(out)
    }

    /// `∫_0^1 p d(var)`, as a polynomial no longer depending on `var`.
    pub fn integrate_unit(&self, var: usize) -> Result<Poly> {
        let f = self.antiderivative(var)?;
        // F(0) = 0 because the constant is fixed to zero.
        f.substitute(var, &Rational::one())
    }

    /// `∫_0^1 … ∫_0^1 p`, integrating in the order x_n, …, x_1.
    pub fn iterated_unit_integral(&self) -> Rational {
        let order: Vec<usize> = (0..self.nvars).rev().collect();
        self.iterated_unit_integral_in_order(&order)
            .expect("all variables are in range")
    }

    /// Iterated unit integral with an explicit order of integration.
    pub fn iterated_unit_integral_in_order(&self, order: &[usize]) -> Result<Rational> {
        let mut p = self.clone();
        for &v in order {
            p = p.integrate_unit(v)?;
        }
        p.as_constant().ok_or_else(|| {
            Error::Unsupported("integration order does not cover every variable".into())
        })
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        self.eval_in(&(), point)
    }

    /// Substitutes `point` into the polynomial inside any commutative
    /// unital algebra over the rationals.
    pub fn eval_in<A: Algebra>(&self, ctx: &A::Ctx, point: &[A]) -> Result<A> {
        check_dim("evaluation point", self.nvars, point.len())?;
        let mut powers: Vec<Vec<A>> = point
            .iter()
            .enumerate()
            .map(|(i, x)| {
                let mut v = vec![A::constant(ctx, &Rational::one())];
                for _ in 0..self.degree_in(i) {
                    let next = v.last().unwrap().mul(x);
                    v.push(next);
                }
                v
            })
            .collect();
        if self.nvars == 0 {
            powers.clear();
        }
        let mut acc = A::constant(ctx, &Rational::zero());
        for (e, c) in &self.terms {
            let mut t = A::constant(ctx, c);
            for (i, &k) in e.0.iter().enumerate() {
                if k > 0 {
                    t = t.mul(&powers[i][k as usize]);
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Appends `extra` fresh variables after the existing ones.
    pub fn extend_vars(&self, extra: usize) -> Poly {
        Poly {
            nvars: self.nvars + extra,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut ne = e.0.clone();
                    ne.resize(self.nvars + extra, 0);
                    (Exponent(ne), c.clone())
                })
                .collect(),
        }
    }

    /// Drops trailing variables down to `nvars`; fails if any of them occurs.
    pub fn truncate_vars(&self, nvars: usize) -> Result<Poly> {
        if nvars > self.nvars {
            return Err(Error::Dimension {
                what: "truncated variable count",
                expected: self.nvars,
                found: nvars,
            });
        }
        let mut out = Poly::zero(nvars);
        for (e, c) in &self.terms {
            if e.0[nvars..].iter().any(|&k| k > 0) {
                return Err(Error::Unsupported(
                    "cannot drop a variable the polynomial depends on".into(),
                ));
            }
            out.add_term(e.0[..nvars].to_vec(), c.clone());
        }
        Ok(out)
    }

    /// Renames variables: variable `i` becomes variable `map[i]` in a ring
    /// of `nvars` variables.
    pub fn remap_vars(&self, nvars: usize, map: &[usize]) -> Poly {
        assert_eq!(map.len(), self.nvars);
        let mut out = Poly::zero(nvars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; nvars];
            for (i, &k) in e.0.iter().enumerate() {
                ne[map[i]] += k;
            }
            out.add_term(ne, c.clone());
        }
        out
    }
}

impl Algebra for Poly {
    type Ctx = usize;

    fn constant(nvars: &usize, c: &Rational) -> Self {
        Poly::constant(*nvars, c.clone())
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &Rational) -> Self {
        Poly::scale(self, c)
    }
    fn is_null(&self) -> bool {
        Poly::is_zero(self)
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "adding polynomials in different rings");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.0.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "multiplying polynomials in different rings");
        let mut out = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<u32> = e1.0.iter().zip(&e2.0).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}", format_rational(c))?;
            for (i, &p) in e.0.iter().enumerate() {
                match p {
                    0 => {}
                    1 => write!(f, "*x{}", i + 1)?,
                    _ => write!(f, "*x{}^{}", i + 1, p)?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn x(n: usize, i: usize) -> Poly {
        Poly::var(n, i)
    }

    #[test]
    fn eval_over_rationals() {
        let p = &x(2, 0) * &x(2, 1);
        assert_eq!(p.eval(&[int(2), int(3)]).unwrap(), int(6));
        assert!(p.eval(&[int(2)]).is_err());
    }

    #[test]
    fn antiderivative_power_rule() {
        let p = x(1, 0).pow(2);
        assert_eq!(
            p.antiderivative(0).unwrap(),
            Poly::monomial(vec![3], rat(1, 3))
        );
        assert!(Poly::zero(1).antiderivative(0).unwrap().is_zero());
        // x1*x2 in x2 -> x1*x2^2/2
        let q = &x(2, 0) * &x(2, 1);
        let a = q.antiderivative(1).unwrap();
        assert_eq!(a, Poly::monomial(vec![1, 2], rat(1, 2)));
        assert_eq!(a.partial_derivative(1).unwrap(), q);
    }

    #[test]
    fn iterated_integrals() {
        assert_eq!(Poly::constant(2, int(3)).iterated_unit_integral(), int(3));
        assert_eq!(x(2, 0).iterated_unit_integral(), rat(1, 2));
        assert_eq!((&x(2, 0) * &x(2, 1)).iterated_unit_integral(), rat(1, 4));
    }

    #[test]
    fn partial_derivatives() {
        assert_eq!(
            x(1, 0).pow(2).partial_derivative(0).unwrap(),
            x(1, 0).scale(&int(2))
        );
        assert!(Poly::constant(2, int(5))
            .partial_derivative(1)
            .unwrap()
            .is_zero());
        assert!(x(2, 0).partial_derivative(2).is_err());
    }

    #[test]
    fn partial_derivative_matches_difference_quotient() {
        // x1*x2^2 is quadratic in x2, so the symmetric difference quotient is exact.
        let p = &x(2, 0) * &x(2, 1).pow(2);
        let d = p.partial_derivative(1).unwrap();
        assert_eq!(d, (&x(2, 0) * &x(2, 1)).scale(&int(2)));
        let h = rat(1, 7);
        for (a, b) in [(int(1), int(2)), (rat(-3, 2), rat(5, 3)), (int(0), int(-4))] {
            let plus = p.eval(&[a.clone(), &b + &h]).unwrap();
            let minus = p.eval(&[a.clone(), &b - &h]).unwrap();
            let quotient = (plus - minus) / (&h * int(2));
            assert_eq!(quotient, d.eval(&[a, b]).unwrap());
        }
    }

    #[test]
    fn zero_coefficients_are_never_stored() {
        let p = &x(2, 0) - &x(2, 0);
        assert!(p.is_zero());
        assert_eq!(p, Poly::zero(2));
    }

    #[test]
    fn display_is_readable() {
        let p = &x(2, 0).pow(2).scale(&rat(3, 2)) + &Poly::constant(2, int(1));
        assert_eq!(p.to_string(), "3/2*x1^2 + 1/1");
    }
}
