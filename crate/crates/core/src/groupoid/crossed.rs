use super::{corner_vertex, total_degeneracy, CoskCell, Coskeleton, CubicalGroupoid, FreeCell, FreeGroupoid};
use crate::error::Result;

/// An element of the crossed complex of a cubical groupoid: a `k`-cell,
/// `k ≥ 2`, all of whose faces except `∂^0_1` are totally degenerate.
#[derive(Clone, PartialEq, Debug)]
pub struct CrossedPart<C> {
    pub level: usize,
    /// The vertex at which the degenerate faces sit.
    pub base: C,
    pub cell: C,
    /// `δ = ∂^0_1`.
    pub boundary: C,
}

pub fn is_totally_degenerate<G: CubicalGroupoid>(g: &G, c: &G::Cell) -> Result<bool> {
    let v = corner_vertex(g, c, 0)?;
    Ok(total_degeneracy(g, &v, g.dim(c))? == *c)
}

fn crossed_part<G: CubicalGroupoid>(g: &G, c: &G::Cell) -> Result<Option<CrossedPart<G::Cell>>> {
    let k = g.dim(c);
    if k < 2 {
        return Ok(None);
    }
    for i in 1..=k {
        for a in 0..2u8 {
            if (a, i) != (0, 1) && !is_totally_degenerate(g, &g.face(c, a, i)?)? {
                return Ok(None);
            }
        }
    }
    Ok(Some(CrossedPart {
        level: k,
        base: corner_vertex(g, c, 1)?,
        cell: c.clone(),
        boundary: g.face(c, 0, 1)?,
    }))
}

/// The crossed-complex elements among the given cells.
pub fn crossed_extract<'a, G, I>(g: &G, cells: I) -> Result<Vec<CrossedPart<G::Cell>>>
where
    G: CubicalGroupoid,
    G::Cell: 'a,
    I: IntoIterator<Item = &'a G::Cell>,
{
    let mut out = Vec::new();
    for c in cells {
        if let Some(p) = crossed_part(g, c)? {
            out.push(p);
        }
    }
    Ok(out)
}

/// For the free groupoid `G` (a 1-groupoid), checks that every 3-cell of
/// `G''` in the crossed complex is the zero element: with `∂^0_1` ranging
/// over all squares whose edges come from `sample` and the other five
/// faces totally degenerate at a vertex, adjacency holds only for the
/// totally degenerate square. Also requires that zero element to exist.
pub fn check_cr_trivial(g: &FreeGroupoid, sample: &[super::Arrow]) -> Result<bool> {
    let g1 = Coskeleton::new(g.clone())?;
    let g2 = Coskeleton::new(g1.clone())?;
    let edges: Vec<FreeCell> = sample.iter().cloned().map(FreeCell::Arrow).collect();
    for v in 0..g.graph().vertices().len() {
        let vertex = CoskCell::Base(FreeCell::Vertex(v));
        let degenerate = total_degeneracy(&g1, &vertex, 2)?;
        let zero = total_degeneracy(&g2, &CoskCell::Base(vertex.clone()), 3)?;
        let zero_found = crossed_extract(&g2, [&zero])?.len() == 1;
        if !zero_found {
            return Ok(false);
        }
        for a in &edges {
            for b in &edges {
                for c in &edges {
                    for d in &edges {
                        let Ok(square) = g1.shell(vec![[c.clone(), b.clone()], [a.clone(), d.clone()]])
                        else {
                            continue;
                        };
                        let mut faces = vec![[square.clone(), degenerate.clone()]];
                        faces.extend((0..2).map(|_| [degenerate.clone(), degenerate.clone()]));
                        if g2.shell(faces).is_ok() && square != degenerate {
                            return Ok(false);
                        }
                    }
                }
            }
        }
    }
    Ok(true)
}
