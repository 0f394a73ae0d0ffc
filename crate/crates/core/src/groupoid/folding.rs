use std::collections::BTreeMap;
use std::fmt;

use super::{compose_path, ConstantCell, ConstantGroupoid, CubicalGroupoid, Group};
use crate::cubical::Shell;
use crate::error::{Error, Result};

/// Edge names of the 3-cube, each from the smaller label to the larger.
pub const CUBE_EDGES: [&str; 12] = [
    "01", "02", "04", "13", "15", "23", "26", "37", "45", "46", "57", "67",
];

/// The cyclic composite of a square `b⁻¹·a⁻¹·c·d`, an endo-arrow at the
/// last corner, where `a = ∂^0_2` (first corner to the one in direction
/// 1), `b = ∂^1_1`, `c = ∂^0_1`, `d = ∂^1_2`. It is an identity exactly
/// when the square commutes.
pub fn folding_square<G: CubicalGroupoid>(g: &G, sh: &Shell<G::Cell>) -> Result<G::Cell> {
    if sh.dim() != 2 || g.dim(sh.face(0, 1)?) != 1 {
        return Err(Error::Unsupported("folding needs a 2-shell of arrows".into()));
    }
    let a = sh.face(0, 2)?;
    let b = sh.face(1, 1)?;
    let c = sh.face(0, 1)?;
    let d = sh.face(1, 2)?;
    compose_path(g, &[g.inverse(b, 1)?, g.inverse(a, 1)?, c.clone(), d.clone()])
}

/// Vertices visited by the 30-letter word, starting and ending at 7.
const CUBE1_PATH: [u8; 31] = [
    7, 6, 4, 5, 7, 5, 4, 0, 1, 5, 7, 5, 1, 3, 7, 3, 1, 0, 2, 3, 7, 3, 2, 6, 7, 6, 2, 0, 4, 6, 7,
];

/// The 30 steps `(from, to)` of the 30-letter word.
pub fn cube1_steps() -> Vec<(u8, u8)> {
    CUBE1_PATH.windows(2).map(|w| (w[0], w[1])).collect()
}

fn step<G: CubicalGroupoid>(
    g: &G,
    edges: &BTreeMap<String, G::Cell>,
    from: u8,
    to: u8,
) -> Result<G::Cell> {
    let (lo, hi) = (from.min(to), from.max(to));
    let name = format!("{lo}{hi}");
    let e = edges
        .get(&name)
        .ok_or_else(|| Error::Unsupported(format!("missing cube edge {name}")))?;
    if from < to {
        Ok(e.clone())
    } else {
        g.inverse(e, 1)
    }
}

fn path<G: CubicalGroupoid>(g: &G, edges: &BTreeMap<String, G::Cell>, vs: &[u8]) -> Result<G::Cell> {
    let arrows = vs
        .windows(2)
        .map(|w| step(g, edges, w[0], w[1]))
        .collect::<Result<Vec<_>>>()?;
    compose_path(g, &arrows)
}

fn check_cube_edges<G: CubicalGroupoid>(g: &G, edges: &BTreeMap<String, G::Cell>) -> Result<()> {
    for name in CUBE_EDGES {
        let e = edges
            .get(name)
            .ok_or_else(|| Error::Unsupported(format!("missing cube edge {name}")))?;
        if g.dim(e) != 1 {
            return Err(Error::Unsupported(format!("cube edge {name} is not an arrow")));
        }
    }
    // the 12 arrows must chain like the cube graph: the corners shared by
    // two edges have to agree
    let corner = |name: &str, alpha: u8| g.face(&edges[name], alpha, 1);
    let mut at: BTreeMap<u8, G::Cell> = BTreeMap::new();
    for name in CUBE_EDGES {
        let b = name.as_bytes();
        for (alpha, label) in [(0u8, b[0] - b'0'), (1u8, b[1] - b'0')] {
            let v = corner(name, alpha)?;
            match at.get(&label) {
                Some(w) if *w != v => {
                    return Err(Error::Composition(format!(
                        "edges meeting at corner {label} disagree (edge {name})"
                    )))
                }
                _ => {
                    at.insert(label, v);
                }
            }
        }
    }
    Ok(())
}

/// Evaluates the 30-letter word on twelve arrows labelling the edges of
/// the 3-cube. The result is an endo-arrow at corner 7.
pub fn folding_cube<G: CubicalGroupoid>(g: &G, edges: &BTreeMap<String, G::Cell>) -> Result<G::Cell> {
    check_cube_edges(g, edges)?;
    path(g, edges, &CUBE1_PATH)
}

/// `R(x; y, z)`: the cyclic composite `u→y→x→z→u` of the square of the
/// cube with first corner `x` and neighbours `y`, `z`, based at the
/// opposite corner `u = y | z`.
pub fn square_loop<G: CubicalGroupoid>(
    g: &G,
    edges: &BTreeMap<String, G::Cell>,
    x: u8,
    y: u8,
    z: u8,
) -> Result<G::Cell> {
    path(g, edges, &[y | z, y, x, z, y | z])
}

/// The six face loops of the regrouped word, with their labels and the
/// conjugating edges (`None` when the loop already sits at corner 7).
pub fn cube_r_factors<G: CubicalGroupoid>(
    g: &G,
    edges: &BTreeMap<String, G::Cell>,
) -> Result<Vec<(String, G::Cell, Option<G::Cell>)>> {
    check_cube_edges(g, edges)?;
    let specs: [((u8, u8, u8), Option<&str>); 6] = [
        ((4, 6, 5), None),
        ((0, 4, 1), Some("57")),
        ((1, 5, 3), None),
        ((0, 1, 2), Some("37")),
        ((2, 3, 6), None),
        ((0, 2, 4), Some("67")),
    ];
    specs
        .iter()
        .map(|&((x, y, z), conj)| {
            Ok((
                format!("R({x};{y},{z})"),
                square_loop(g, edges, x, y, z)?,
                conj.map(|c| edges[c].clone()),
            ))
        })
        .collect()
}

/// The product of the six face loops, each conjugated into corner 7 as
/// `e⁻¹·R·e`; letter for letter the 30-letter word.
pub fn cube_r_product<G: CubicalGroupoid>(g: &G, edges: &BTreeMap<String, G::Cell>) -> Result<G::Cell> {
    let mut parts = Vec::new();
    for (_, r, conj) in cube_r_factors(g, edges)? {
        match conj {
            Some(e) => parts.push(compose_path(g, &[g.inverse(&e, 1)?, r, e])?),
            None => parts.push(r),
        }
    }
    compose_path(g, &parts)
}

/// Whether the 30-letter word reduces to the identity at corner 7 in the
/// free groupoid on the cube graph.
pub fn verify_30_letter() -> bool {
    use super::{FreeCell, FreeGroupoid};
    let g = FreeGroupoid::cube3();
    let edges: BTreeMap<String, FreeCell> = CUBE_EDGES
        .iter()
        .map(|n| (n.to_string(), FreeCell::Arrow(g.edge_arrow(n).expect("cube edge"))))
        .collect();
    match folding_cube(&g, &edges) {
        Ok(FreeCell::Arrow(a)) => a.is_identity() && a.source() == 7,
        _ => false,
    }
}

/// Folding of an `(n+1)`-shell of `M_n(A)` for abelian `A`: the last
/// corner and `Σ_i (-1)^i (a^1_i - a^0_i)`.
pub fn folding_hal<P, G>(
    g: &ConstantGroupoid<P, G>,
    sh: &Shell<ConstantCell<P, G::Elem>>,
) -> Result<(P, G::Elem)>
where
    P: Clone + PartialEq + fmt::Debug,
    G: Group,
{
    let group = g.group();
    if !group.is_abelian() {
        return Err(Error::Unsupported("the alternating face sum needs an abelian group".into()));
    }
    if sh.dim() != g.n() + 1 {
        return Err(Error::Dimension {
            what: "shell dimension",
            expected: g.n() + 1,
            found: sh.dim(),
        });
    }
    let mut total = group.identity();
    for i in 1..=sh.dim() {
        let val = |a: u8| -> Result<G::Elem> {
            sh.face(a, i)?
                .value()
                .cloned()
                .ok_or_else(|| Error::Unsupported("shell face without a value".into()))
        };
        let term = group.op(&val(1)?, &group.inverse(&val(0)?))?;
        let signed = if i % 2 == 0 { term } else { group.inverse(&term) };
        total = group.op(&total, &signed)?;
    }
    let last = sh.face(1, sh.dim())?.last_vertex().clone();
    Ok((last, total))
}
