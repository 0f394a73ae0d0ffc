use std::collections::BTreeMap;
use std::fmt;

use super::{check_morphism, CellOf, Connection};
use crate::cubical::{CubicalCell, InfPipeCell};
use crate::error::{check_dim, Error, Result};
use crate::groupoid::{CubicalGroupoid, CUBE_EDGES};
use crate::weil::{InfPoint, InfSimplex};

type Rule<G> = Box<dyn Fn(&G, &InfPipeCell) -> Result<<G as CubicalGroupoid>::Cell>>;

/// A connection given by an arbitrary rule. It is admitted only after the
/// morphism laws pass on every sample pipe and all of their faces.
pub struct RuleConnection<G: CubicalGroupoid> {
    n: usize,
    target: G,
    rule: Rule<G>,
}

impl<G: CubicalGroupoid> fmt::Debug for RuleConnection<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RuleConnection(dim {})", self.n)
    }
}

impl<G: CubicalGroupoid> RuleConnection<G> {
    pub fn new<F>(n: usize, target: G, rule: F, samples: &[InfPipeCell]) -> Result<Self>
    where
        F: Fn(&G, &InfPipeCell) -> Result<G::Cell> + 'static,
    {
        if samples.is_empty() {
            return Err(Error::Unsupported("a rule connection needs sample pipes".into()));
        }
        let conn = RuleConnection {
            n,
            target,
            rule: Box::new(rule),
        };
        let mut pending: Vec<InfPipeCell> = samples.to_vec();
        while let Some(p) = pending.pop() {
            let failed: Vec<String> = check_morphism(&conn, &p)?
                .into_iter()
                .filter(|c| !c.pass)
                .map(|c| c.name)
                .collect();
            if !failed.is_empty() {
                return Err(Error::Unsupported(format!(
                    "not a morphism on {p}: {}",
                    failed.join(", ")
                )));
            }
            for i in 1..=p.cube_dim() {
                pending.push(p.face(0, i)?);
                pending.push(p.face(1, i)?);
            }
        }
        Ok(conn)
    }
}

impl<G: CubicalGroupoid> Connection for RuleConnection<G> {
    type Target = G;

    fn dim(&self) -> usize {
        self.n
    }

    fn target(&self) -> &G {
        &self.target
    }

    fn eval(&self, p: &InfPipeCell) -> Result<CellOf<Self>> {
        if p.cube_dim() > self.n {
            return Err(Error::Dimension {
                what: "pipe dimension",
                expected: self.n,
                found: p.cube_dim(),
            });
        }
        (self.rule)(&self.target, p)
    }
}

/// A 1-connection defined on finitely many points and edges: degenerate
/// edges go to identities and reversed edges to inverses. Validated on the
/// listed edges.
pub fn edge_table_connection<G>(
    target: G,
    vertices: Vec<(InfPoint, G::Cell)>,
    edges: Vec<((InfPoint, InfPoint), G::Cell)>,
) -> Result<RuleConnection<G>>
where
    G: CubicalGroupoid + 'static,
{
    let samples = edges
        .iter()
        .map(|((x, y), _)| Ok(InfSimplex::new(vec![x.clone(), y.clone()])?.into()))
        .collect::<Result<Vec<InfPipeCell>>>()?;
    let vmap: Vec<(InfPoint, G::Cell)> = vertices;
    let emap: Vec<((InfPoint, InfPoint), G::Cell)> = edges;
    let rule = move |g: &G, p: &InfPipeCell| -> Result<G::Cell> {
        let v = p.vertices();
        let vertex = |x: &InfPoint| {
            vmap.iter()
                .find(|(y, _)| y == x)
                .map(|(_, c)| c.clone())
                .ok_or_else(|| Error::Unsupported(format!("no value at point {x}")))
        };
        match v.len() {
            1 => vertex(&v[0]),
            2 if v[0] == v[1] => g.degeneracy(&vertex(&v[0])?, 1),
            2 => {
                for ((x, y), c) in &emap {
                    if *x == v[0] && *y == v[1] {
                        return Ok(c.clone());
                    }
                    if *x == v[1] && *y == v[0] {
                        return g.inverse(c, 1);
                    }
                }
                Err(Error::Unsupported(format!("no value on edge {p}")))
            }
            _ => Err(Error::Unsupported("edge tables define 1-connections".into())),
        }
    };
    RuleConnection::new(1, target, rule, &samples)
}

/// The 1-connection on the edge diagram of a 3-pipe: corner `L` goes to
/// `vertex_cells[L]` and the edge between corners `a < b` to
/// `edge_values["ab"]`.
pub fn cube_diagram_connection<G>(
    p: &InfPipeCell,
    target: G,
    vertex_cells: Vec<G::Cell>,
    edge_values: &BTreeMap<String, G::Cell>,
) -> Result<RuleConnection<G>>
where
    G: CubicalGroupoid + 'static,
{
    check_dim("cube diagram pipe", 3, p.cube_dim())?;
    check_dim("cube diagram vertices", 8, vertex_cells.len())?;
    let corners = p.corners();
    let vertices = corners.iter().cloned().zip(vertex_cells).collect();
    let edges = CUBE_EDGES
        .iter()
        .map(|name| {
            let b = name.as_bytes();
            let (a, c) = ((b[0] - b'0') as usize, (b[1] - b'0') as usize);
            let v = edge_values
                .get(*name)
                .ok_or_else(|| Error::Unsupported(format!("missing cube edge {name}")))?;
            Ok(((corners[a].clone(), corners[c].clone()), v.clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    edge_table_connection(target, vertices, edges)
}
