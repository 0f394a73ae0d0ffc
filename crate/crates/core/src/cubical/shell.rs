use super::CubicalCell;
use crate::error::{Error, Result};

/// A family of `2(n+1)` cells of dimension `n` indexed by `(alpha, i)`,
/// `i = 1..=n+1`, whose faces match like those of an `(n+1)`-cell.
/// Adjacency is checked when the shell is built.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Shell<C> {
    faces: Vec<[C; 2]>,
}

impl<C: Clone + PartialEq + std::fmt::Debug> Shell<C> {
    /// Builds a shell, checking `∂^a_i F(b,j) = ∂^b_{j-1} F(a,i)` for all
    /// `i < j` with the supplied face operator.
    pub fn with_face_op<F>(faces: Vec<[C; 2]>, face_of: F) -> Result<Self>
    where
        F: Fn(&C, u8, usize) -> Result<C>,
    {
        if faces.is_empty() {
            return Err(Error::Adjacency("a shell needs at least one direction".into()));
        }
        let shell = Shell { faces };
        let n1 = shell.dim();
        for j in 2..=n1 {
            for i in 1..j {
                for a in 0..2u8 {
                    for b in 0..2u8 {
                        let lhs = face_of(&shell.faces[j - 1][b as usize], a, i)?;
                        let rhs = face_of(&shell.faces[i - 1][a as usize], b, j - 1)?;
                        if lhs != rhs {
                            return Err(Error::Adjacency(format!(
                                "d{a}_{i} of face ({b},{j}) differs from d{b}_{} of face ({a},{i})",
                                j - 1
                            )));
                        }
                    }
                }
            }
        }
        Ok(shell)
    }

    /// Dimension of the cell the shell would bound.
    pub fn dim(&self) -> usize {
        self.faces.len()
    }

    pub fn face(&self, alpha: u8, i: usize) -> Result<&C> {
        super::check_face(alpha, i, self.dim())?;
        Ok(&self.faces[i - 1][alpha as usize])
    }

    /// Faces as `[∂^0_i, ∂^1_i]` for `i = 1..=dim`.
    pub fn faces(&self) -> &[[C; 2]] {
        &self.faces
    }

    pub fn into_faces(self) -> Vec<[C; 2]> {
        self.faces
    }
}

impl<C: CubicalCell> Shell<C> {
    pub fn new(faces: Vec<[C; 2]>) -> Result<Self> {
        Shell::with_face_op(faces, |c: &C, a, i| c.face(a, i))
    }
}

/// The boundary shell of a cell of positive dimension.
pub fn boundary_shell<C: CubicalCell>(c: &C) -> Result<Shell<C>> {
    let n1 = c.cube_dim();
    if n1 == 0 {
        return Err(Error::Unsupported("a point has no boundary shell".into()));
    }
    let faces = (1..=n1)
        .map(|i| Ok([c.face(0, i)?, c.face(1, i)?]))
        .collect::<Result<Vec<_>>>()?;
    Shell::new(faces).map_err(|e| Error::Adjacency(format!("face operators are inconsistent: {e}")))
}
