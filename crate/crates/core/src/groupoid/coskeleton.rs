use super::{check_composable, CubicalGroupoid};
use crate::cubical::Shell;
use crate::error::{check_index, Error, Result};

/// Cells of `G'`: cells of `G`, plus shells of top cells of `G` one
/// dimension higher.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum CoskCell<C> {
    Base(C),
    Shell(Shell<C>),
}

impl<C> CoskCell<C> {
    pub fn base(&self) -> Result<&C> {
        match self {
            CoskCell::Base(c) => Ok(c),
            CoskCell::Shell(_) => Err(Error::Unsupported("expected a base cell, got a shell".into())),
        }
    }

    pub fn shell(&self) -> Result<&Shell<C>> {
        match self {
            CoskCell::Shell(s) => Ok(s),
            CoskCell::Base(_) => Err(Error::Unsupported("expected a shell, got a base cell".into())),
        }
    }
}

/// The shell groupoid `G'` of an `n`-truncated cubical groupoid `G`: it
/// agrees with `G` up to dimension `n` and its `(n+1)`-cells are all
/// shells, composed facewise.
#[derive(Clone, Debug)]
pub struct Coskeleton<G> {
    inner: G,
    n: usize,
}

impl<G: CubicalGroupoid> Coskeleton<G> {
    pub fn new(inner: G) -> Result<Self> {
        let n = inner.top_dim().ok_or_else(|| {
            Error::Unsupported("the shell groupoid needs a truncated groupoid".into())
        })?;
        Ok(Coskeleton { inner, n })
    }

    pub fn inner(&self) -> &G {
        &self.inner
    }

    /// Builds an `(n+1)`-cell from its faces, checking adjacency.
    pub fn shell(&self, faces: Vec<[G::Cell; 2]>) -> Result<CoskCell<G::Cell>> {
        if faces.len() != self.n + 1 {
            return Err(Error::Dimension {
                what: "shell directions",
                expected: self.n + 1,
                found: faces.len(),
            });
        }
        for [a, b] in &faces {
            for c in [a, b] {
                if self.inner.dim(c) != self.n {
                    return Err(Error::Dimension {
                        what: "shell face dimension",
                        expected: self.n,
                        found: self.inner.dim(c),
                    });
                }
            }
        }
        let sh = Shell::with_face_op(faces, |c: &G::Cell, a, i| self.inner.face(c, a, i))?;
        Ok(CoskCell::Shell(sh))
    }

    /// The boundary shell of a top cell of `G`.
    pub fn boundary(&self, c: &G::Cell) -> Result<CoskCell<G::Cell>> {
        let k = self.inner.dim(c);
        if k == 0 {
            return Err(Error::Unsupported("a point has no boundary shell".into()));
        }
        let faces = (1..=k)
            .map(|i| Ok([self.inner.face(c, 0, i)?, self.inner.face(c, 1, i)?]))
            .collect::<Result<Vec<_>>>()?;
        let sh = Shell::with_face_op(faces, |c: &G::Cell, a, i| self.inner.face(c, a, i))?;
        Ok(CoskCell::Shell(sh))
    }

    fn faces_by<F>(&self, f: F) -> Result<CoskCell<G::Cell>>
    where
        F: Fn(u8, usize) -> Result<G::Cell>,
    {
        let faces = (1..=self.n + 1)
            .map(|j| Ok([f(0, j)?, f(1, j)?]))
            .collect::<Result<Vec<_>>>()?;
        self.shell(faces)
    }
}

impl<G: CubicalGroupoid> CubicalGroupoid for Coskeleton<G> {
    type Cell = CoskCell<G::Cell>;

    fn top_dim(&self) -> Option<usize> {
        Some(self.n + 1)
    }

    fn dim(&self, c: &Self::Cell) -> usize {
        match c {
            CoskCell::Base(c) => self.inner.dim(c),
            CoskCell::Shell(s) => s.dim(),
        }
    }

    fn face(&self, c: &Self::Cell, alpha: u8, i: usize) -> Result<Self::Cell> {
        match c {
            CoskCell::Base(c) => Ok(CoskCell::Base(self.inner.face(c, alpha, i)?)),
            CoskCell::Shell(s) => Ok(CoskCell::Base(s.face(alpha, i)?.clone())),
        }
    }

    fn degeneracy(&self, c: &Self::Cell, i: usize) -> Result<Self::Cell> {
        let c = c.base()?;
        let k = self.inner.dim(c);
        if k < self.n {
            return Ok(CoskCell::Base(self.inner.degeneracy(c, i)?));
        }
        check_index("degeneracy index", i, k + 1)?;
        let g = &self.inner;
        self.faces_by(|a, j| match j.cmp(&i) {
            std::cmp::Ordering::Equal => Ok(c.clone()),
            std::cmp::Ordering::Less => g.degeneracy(&g.face(c, a, j)?, i - 1),
            std::cmp::Ordering::Greater => g.degeneracy(&g.face(c, a, j - 1)?, i),
        })
    }

    fn compose(&self, x: &Self::Cell, y: &Self::Cell, i: usize) -> Result<Self::Cell> {
        match (x, y) {
            (CoskCell::Base(a), CoskCell::Base(b)) => Ok(CoskCell::Base(self.inner.compose(a, b, i)?)),
            (CoskCell::Shell(sx), CoskCell::Shell(sy)) => {
                check_composable(self, x, y, i)?;
                self.faces_by(|a, j| {
                    if j == i {
                        Ok(if a == 0 { sx.face(0, i)? } else { sy.face(1, i)? }.clone())
                    } else {
                        let i2 = if j < i { i - 1 } else { i };
                        self.inner.compose(sx.face(a, j)?, sy.face(a, j)?, i2)
                    }
                })
            }
            _ => Err(Error::Composition("cells of different dimensions".into())),
        }
    }

    fn inverse(&self, c: &Self::Cell, i: usize) -> Result<Self::Cell> {
        match c {
            CoskCell::Base(b) => Ok(CoskCell::Base(self.inner.inverse(b, i)?)),
            CoskCell::Shell(s) => {
                check_index("inverse direction", i, s.dim())?;
                self.faces_by(|a, j| {
                    if j == i {
                        Ok(s.face(1 - a, i)?.clone())
                    } else {
                        let i2 = if j < i { i - 1 } else { i };
                        self.inner.inverse(s.face(a, j)?, i2)
                    }
                })
            }
        }
    }
}

/// The square `γ(g)` of a 1-groupoid: `∂^0_1 = ∂^0_2 = g`, and
/// `∂^1_1 = ∂^1_2` the identity at the target of `g`.
pub fn bsh_gamma<G: CubicalGroupoid>(g: &Coskeleton<G>, arrow: &G::Cell) -> Result<CoskCell<G::Cell>> {
    let inner = g.inner();
    if inner.top_dim() != Some(1) || inner.dim(arrow) != 1 {
        return Err(Error::Unsupported("γ is defined here for arrows of 1-groupoids".into()));
    }
    let id = inner.degeneracy(&inner.face(arrow, 1, 1)?, 1)?;
    g.shell(vec![[arrow.clone(), id.clone()], [arrow.clone(), id]])
}
