use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;

use super::permutations;
use crate::algebra::{Poly, PolyMap};
use crate::error::{check_dim, Error, Result};

/// Strictly increasing `k`-tuples from `1..=m`, in lexicographic order.
pub fn increasing_tuples(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=m {
            cur.push(i);
            rec(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, m, k, &mut Vec::new(), &mut out);
    out
}

/// `Σ_I c_I dx_I` on `Q^m`, keyed by strictly increasing 1-based axes.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ClassicalForm {
    dim: usize,
    degree: usize,
    terms: BTreeMap<Vec<usize>, Poly>,
}

impl ClassicalForm {
    pub fn zero(dim: usize, degree: usize) -> Self {
        ClassicalForm {
            dim,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Repeated axis tuples are summed; zero coefficients are dropped.
    pub fn new(dim: usize, degree: usize, terms: Vec<(Vec<usize>, Poly)>) -> Result<Self> {
        if degree > dim {
            return Err(Error::Dimension {
                what: "form degree (at most the ambient dimension)",
                expected: dim,
                found: degree,
            });
        }
        let mut form = ClassicalForm::zero(dim, degree);
        for (axes, poly) in terms {
            check_dim("form axes", degree, axes.len())?;
            check_dim("coefficient variables", dim, poly.nvars())?;
            if axes.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Unsupported(format!(
                    "axes {axes:?} are not strictly increasing"
                )));
            }
            if let Some(&bad) = axes.iter().find(|&&i| i == 0 || i > dim) {
                return Err(Error::IndexOutOfRange {
                    what: "form axis",
                    index: bad,
                    max: dim,
                });
            }
            form.add_term(axes, &poly);
        }
        Ok(form)
    }

    fn add_term(&mut self, axes: Vec<usize>, poly: &Poly) {
        let sum = match self.terms.get(&axes) {
            Some(c) => c + poly,
            None => poly.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&axes);
        } else {
            self.terms.insert(axes, sum);
        }
    }

    /// `c·dx1∧…∧dxm`.
    pub fn top(dim: usize, c: Poly) -> Result<Self> {
        ClassicalForm::new(dim, dim, vec![((1..=dim).collect(), c)])
    }

    pub fn volume(dim: usize) -> Self {
        ClassicalForm::top(dim, Poly::one(dim)).expect("well-formed")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Poly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, axes: &[usize]) -> Poly {
        self.terms
            .get(axes)
            .cloned()
            .unwrap_or_else(|| Poly::zero(self.dim))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &crate::algebra::Rational) -> Self {
        let mut out = ClassicalForm::zero(self.dim, self.degree);
        for (axes, p) in &self.terms {
            out.add_term(axes.clone(), &p.scale(c));
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_dim("form dimension", self.dim, other.dim)?;
        check_dim("form degree", self.degree, other.degree)?;
        let mut out = self.clone();
        for (axes, p) in &other.terms {
            out.add_term(axes.clone(), p);
        }
        Ok(out)
    }

    /// Exterior derivative `Σ_I Σ_j ∂c_I/∂x_j dx_j ∧ dx_I`.
    pub fn d_classical(&self) -> ClassicalForm {
        let mut out = ClassicalForm::zero(self.dim, self.degree + 1);
        for (axes, c) in &self.terms {
            for j in 1..=self.dim {
                if axes.contains(&j) {
                    continue;
                }
                let dc = c.partial_derivative(j - 1).expect("axis in range");
                if dc.is_zero() {
                    continue;
                }
                let before = axes.iter().filter(|&&i| i < j).count();
                let mut merged = axes.clone();
                merged.insert(before, j);
                let signed = if before % 2 == 1 { -&dc } else { dc };
                out.add_term(merged, &signed);
            }
        }
        out
    }

    /// The classical pullback `f*ω` along `f: Q^k -> Q^m`.
    pub fn pullback(&self, f: &PolyMap) -> Result<ClassicalForm> {
        check_dim("map target vs form dimension", self.dim, f.target_dim())?;
        let k = f.source_dim();
        if self.degree > k {
            return Ok(ClassicalForm::zero(k, self.degree));
        }
        let jac = f.jacobian();
        let perms = permutations(self.degree);
        let mut out = ClassicalForm::zero(k, self.degree);
        for (axes, c) in &self.terms {
            let cf = c.eval_in(&k, f.components())?;
            for cols in increasing_tuples(k, self.degree) {
                // det of the minor (rows axes, columns cols) of the Jacobian
                let mut minor = Poly::zero(k);
                for (p, odd) in &perms {
                    let mut prod = Poly::one(k);
                    for (r, &pc) in p.iter().enumerate() {
                        prod = &prod * &jac[axes[r] - 1][cols[pc] - 1];
                    }
                    minor = if *odd { &minor - &prod } else { &minor + &prod };
                }
                out.add_term(cols, &(&cf * &minor));
            }
        }
        Ok(out)
    }
}

impl fmt::Display for ClassicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (axes, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            let d: Vec<String> = axes.iter().map(|i| format!("dx{i}")).collect();
            write!(f, "({c})")?;
            if !d.is_empty() {
                write!(f, " {}", d.join("∧"))?;
            }
        }
        Ok(())
    }
}

/// Random `degree`-form on `Q^dim` with coefficients of total degree at
/// most `max_degree`.
pub fn random_form<R: Rng>(rng: &mut R, dim: usize, degree: usize, max_degree: u32) -> ClassicalForm {
    let mut terms = Vec::new();
    for axes in increasing_tuples(dim, degree) {
        if rng.gen_bool(0.75) {
            terms.push((axes, crate::random::poly(rng, dim, max_degree, 3)));
        }
    }
    ClassicalForm::new(dim, degree, terms).expect("axes are increasing and in range")
}
