use std::fmt;
use std::marker::PhantomData;

use super::{check_composable, CubicalGroupoid, Group};
use crate::error::{check_index, Error, Result};

/// A cell of `M_n(A)`: points at the `2^k` corners (label order) and, in
/// the top dimension `k = n`, an element of `A`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ConstantCell<P, E> {
    verts: Vec<P>,
    value: Option<E>,
}

impl<P, E> ConstantCell<P, E> {
    pub fn verts(&self) -> &[P] {
        &self.verts
    }

    pub fn value(&self) -> Option<&E> {
        self.value.as_ref()
    }

    pub fn dim(&self) -> usize {
        self.verts.len().trailing_zeros() as usize
    }

    /// The corner with the highest label.
    pub fn last_vertex(&self) -> &P {
        self.verts.last().expect("cells have at least one corner")
    }
}

impl<P: fmt::Display, E: fmt::Display> fmt::Display for ConstantCell<P, E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.verts.iter().enumerate() {
            write!(f, "{}{v}", if k > 0 { ", " } else { "" })?;
        }
        write!(f, "]")?;
        if let Some(a) = &self.value {
            write!(f, " : {a}")?;
        }
        Ok(())
    }
}

fn remove_bit(label: usize, bit: usize) -> usize {
    (label & ((1 << bit) - 1)) | (label >> (bit + 1)) << bit
}

/// The constant `n`-cubical groupoid on a set of points: cells in
/// dimension `k < n` are corner families, `n`-cells additionally carry an
/// element of `A`, composition adds those elements.
#[derive(Clone, Debug)]
pub struct ConstantGroupoid<P, G: Group> {
    n: usize,
    group: G,
    _points: PhantomData<P>,
}

impl<P: Clone + PartialEq + fmt::Debug, G: Group> ConstantGroupoid<P, G> {
    /// A non-abelian value group is only allowed for `n ≤ 1`.
    pub fn new(n: usize, group: G) -> Result<Self> {
        if n > 1 && !group.is_abelian() {
            return Err(Error::Unsupported(
                "constant groupoids of dimension above 1 need an abelian value group".into(),
            ));
        }
        Ok(ConstantGroupoid {
            n,
            group,
            _points: PhantomData,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn group(&self) -> &G {
        &self.group
    }

    pub fn cell(&self, verts: Vec<P>, value: Option<G::Elem>) -> Result<ConstantCell<P, G::Elem>> {
        if !verts.len().is_power_of_two() {
            return Err(Error::Dimension {
                what: "corner count (must be a power of two)",
                expected: verts.len().next_power_of_two(),
                found: verts.len(),
            });
        }
        let k = verts.len().trailing_zeros() as usize;
        if k > self.n {
            return Err(Error::Unsupported(format!(
                "M_{} has no cells of dimension {k}",
                self.n
            )));
        }
        if (k == self.n) != value.is_some() {
            return Err(Error::Unsupported(format!(
                "a {k}-cell of M_{} {} a value",
                self.n,
                if k == self.n { "needs" } else { "cannot carry" }
            )));
        }
        Ok(ConstantCell { verts, value })
    }

    /// Top cell with the given corners and value.
    pub fn top_cell(&self, verts: Vec<P>, value: G::Elem) -> Result<ConstantCell<P, G::Elem>> {
        self.cell(verts, Some(value))
    }

    pub fn point(&self, p: P) -> ConstantCell<P, G::Elem> {
        ConstantCell {
            verts: vec![p],
            value: (self.n == 0).then(|| self.group.identity()),
        }
    }

    fn value_at(&self, k: usize) -> Option<G::Elem> {
        (k == self.n).then(|| self.group.identity())
    }

    /// The connection `γ_i`: a `(k+1)`-cell with `∂^0_i = ∂^0_{i+1} = c`
    /// and the other two faces in direction `i`, `i+1` degenerate; its value
    /// is the identity.
    pub fn gamma(&self, c: &ConstantCell<P, G::Elem>, i: usize) -> Result<ConstantCell<P, G::Elem>> {
        let k = c.dim();
        check_index("connection direction", i, k)?;
        if k + 1 > self.n {
            return Err(Error::Unsupported("connection above the top dimension".into()));
        }
        let verts = (0..1usize << (k + 1))
            .map(|l| {
                let merged = (l >> (i - 1) & 1) | (l >> i & 1);
                let rest = remove_bit(l, i);
                let old = (rest & !(1 << (i - 1))) | merged << (i - 1);
                c.verts[old].clone()
            })
            .collect();
        Ok(ConstantCell {
            verts,
            value: self.value_at(k + 1),
        })
    }
}

impl<P: Clone + PartialEq + fmt::Debug, G: Group> CubicalGroupoid for ConstantGroupoid<P, G> {
    type Cell = ConstantCell<P, G::Elem>;

    fn top_dim(&self) -> Option<usize> {
        Some(self.n)
    }

    fn dim(&self, c: &Self::Cell) -> usize {
        c.dim()
    }

    fn face(&self, c: &Self::Cell, alpha: u8, i: usize) -> Result<Self::Cell> {
        let k = c.dim();
        crate::cubical::check_face(alpha, i, k)?;
        let verts = (0..1usize << (k - 1))
            .map(|l| {
                let low = l & ((1 << (i - 1)) - 1);
                let high = l >> (i - 1);
                c.verts[low | (alpha as usize) << (i - 1) | high << i].clone()
            })
            .collect();
        Ok(ConstantCell {
            verts,
            value: self.value_at(k - 1),
        })
    }

    fn degeneracy(&self, c: &Self::Cell, i: usize) -> Result<Self::Cell> {
        let k = c.dim();
        check_index("degeneracy index", i, k + 1)?;
        if k + 1 > self.n {
            return Err(Error::Unsupported(format!(
                "M_{} has no cells of dimension {}",
                self.n,
                k + 1
            )));
        }
        let verts = (0..1usize << (k + 1))
            .map(|l| c.verts[remove_bit(l, i - 1)].clone())
            .collect();
        Ok(ConstantCell {
            verts,
            value: self.value_at(k + 1),
        })
    }

    fn compose(&self, x: &Self::Cell, y: &Self::Cell, i: usize) -> Result<Self::Cell> {
        check_composable(self, x, y, i)?;
        let verts = (0..x.verts.len())
            .map(|l| {
                if l >> (i - 1) & 1 == 0 {
                    x.verts[l].clone()
                } else {
                    y.verts[l].clone()
                }
            })
            .collect();
        let value = match (&x.value, &y.value) {
            (Some(a), Some(b)) => Some(self.group.op(a, b)?),
            _ => None,
        };
        Ok(ConstantCell { verts, value })
    }

    fn inverse(&self, c: &Self::Cell, i: usize) -> Result<Self::Cell> {
        check_index("inverse direction", i, c.dim())?;
        let verts = (0..c.verts.len())
            .map(|l| c.verts[l ^ 1 << (i - 1)].clone())
            .collect();
        Ok(ConstantCell {
            verts,
            value: c.value.as_ref().map(|a| self.group.inverse(a)),
        })
    }
}
