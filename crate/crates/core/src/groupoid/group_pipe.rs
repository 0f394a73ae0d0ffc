use super::Group;
use crate::cubical::check_face;
use crate::error::{check_index, Result};

/// A parallelepipedum in a group: base `x0` and adjacent corners `x_a`.
/// The corner for a set `H = {h1 < … < hk}` is
/// `x_{h1}·x0⁻¹·x_{h2}·x0⁻¹ ⋯ x0⁻¹·x_{hk}`, which in additive notation
/// is `x_{h1} - x0 + x_{h2} - … + x_{hk}`.
#[derive(Clone, Debug)]
pub struct GroupPipe<G: Group> {
    group: G,
    vertices: Vec<G::Elem>,
}

impl<G: Group> PartialEq for GroupPipe<G> {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices
    }
}

impl<G: Group> GroupPipe<G> {
    pub fn new(group: G, vertices: Vec<G::Elem>) -> Self {
        assert!(!vertices.is_empty(), "a pipe needs a base vertex");
        GroupPipe { group, vertices }
    }

    pub fn group(&self) -> &G {
        &self.group
    }

    pub fn vertices(&self) -> &[G::Elem] {
        &self.vertices
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    /// `x_H` for the set `H` given as a bit label (bit `a-1` for `a`).
    pub fn corner(&self, label: usize) -> Result<G::Elem> {
        let g = &self.group;
        let x0_inv = g.inverse(&self.vertices[0]);
        let mut acc: Option<G::Elem> = None;
        for a in 1..=self.dim() {
            if label >> (a - 1) & 1 == 1 {
                acc = Some(match acc {
                    None => self.vertices[a].clone(),
                    Some(p) => g.op(&g.op(&p, &x0_inv)?, &self.vertices[a])?,
                });
            }
        }
        Ok(acc.unwrap_or_else(|| self.vertices[0].clone()))
    }

    pub fn corners(&self) -> Result<Vec<G::Elem>> {
        (0..1usize << self.dim()).map(|l| self.corner(l)).collect()
    }

    fn with(&self, vertices: Vec<G::Elem>) -> Self {
        GroupPipe::new(self.group.clone(), vertices)
    }

    /// `∂^0_i` omits `x_i`; `∂^1_i` is based at `x_i` with corners
    /// `x_{{j,i}}`.
    pub fn face(&self, alpha: u8, i: usize) -> Result<Self> {
        check_face(alpha, i, self.dim())?;
        if alpha == 0 {
            let mut v = self.vertices.clone();
            v.remove(i);
            return Ok(self.with(v));
        }
        let mut v = vec![self.vertices[i].clone()];
        for j in (1..=self.dim()).filter(|&j| j != i) {
            v.push(self.corner(1 << (j - 1) | 1 << (i - 1))?);
        }
        Ok(self.with(v))
    }

    pub fn degeneracy(&self, i: usize) -> Result<Self> {
        check_index("degeneracy index", i, self.dim() + 1)?;
        let mut v = self.vertices.clone();
        v.insert(i, self.vertices[0].clone());
        Ok(self.with(v))
    }

    pub fn transposition(&self, i: usize) -> Result<Self> {
        check_index("transposition index", i, self.dim().saturating_sub(1))?;
        let mut v = self.vertices.clone();
        v.swap(i, i + 1);
        Ok(self.with(v))
    }
}
