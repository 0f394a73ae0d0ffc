use std::collections::BTreeMap;

use super::CubicalGroupoid;
use crate::error::{check_index, Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Edge {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A directed multigraph with named vertices and edges.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    edge_index: BTreeMap<String, usize>,
}

impl Graph {
    pub fn new<I, S>(vertices: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Graph {
            vertices: vertices.into_iter().map(Into::into).collect(),
            ..Graph::default()
        }
    }

    pub fn add_edge(&mut self, name: &str, source: usize, target: usize) -> Result<usize> {
        for v in [source, target] {
            if v >= self.vertices.len() {
                return Err(Error::IndexOutOfRange {
                    what: "graph vertex",
                    index: v,
                    max: self.vertices.len().saturating_sub(1),
                });
            }
        }
        if self.edge_index.contains_key(name) {
            return Err(Error::Unsupported(format!("duplicate edge name {name:?}")));
        }
        self.edges.push(Edge {
            name: name.to_string(),
            source,
            target,
        });
        self.edge_index.insert(name.to_string(), self.edges.len() - 1);
        Ok(self.edges.len() - 1)
    }

    /// The 1-skeleton of the 3-cube: vertices `0..8` named by their binary
    /// labels, one edge `"ab"` from `a` to `b` for each pair of labels
    /// differing in one bit, `a < b`.
    pub fn cube3() -> Self {
        let mut g = Graph::new((0..8).map(|v| v.to_string()));
        for a in 0..8usize {
            for bit in 0..3 {
                let b = a | 1 << bit;
                if b != a {
                    g.add_edge(&format!("{a}{b}"), a, b).expect("cube vertices exist");
                }
            }
        }
        g
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::Unsupported(format!("unknown vertex {name:?}")))
    }

    pub fn edge_index(&self, name: &str) -> Result<usize> {
        self.edge_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::Unsupported(format!("unknown edge {name:?}")))
    }
}

/// An edge traversed forwards or backwards.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter {
    pub edge: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn fwd(edge: usize) -> Self {
        Letter { edge, inverse: false }
    }

    pub fn inv(edge: usize) -> Self {
        Letter { edge, inverse: true }
    }

    pub fn flipped(self) -> Self {
        Letter {
            inverse: !self.inverse,
            ..self
        }
    }
}

/// An arrow of a free groupoid: a freely reduced, chaining word.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Arrow {
    source: usize,
    target: usize,
    word: Vec<Letter>,
}

impl Arrow {
    pub fn identity(v: usize) -> Self {
        Arrow {
            source: v,
            target: v,
            word: Vec::new(),
        }
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn word(&self) -> &[Letter] {
        &self.word
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn inverse(&self) -> Arrow {
        Arrow {
            source: self.target,
            target: self.source,
            word: self.word.iter().rev().map(|l| l.flipped()).collect(),
        }
    }
}

/// Cells of the free groupoid viewed as a 1-truncated cubical groupoid.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum FreeCell {
    Vertex(usize),
    Arrow(Arrow),
}

impl FreeCell {
    pub fn arrow(&self) -> Result<&Arrow> {
        match self {
            FreeCell::Arrow(a) => Ok(a),
            FreeCell::Vertex(_) => Err(Error::Composition("expected an arrow, got a vertex".into())),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FreeGroupoid {
    graph: Graph,
}

impl FreeGroupoid {
    pub fn new(graph: Graph) -> Self {
        FreeGroupoid { graph }
    }

    pub fn cube3() -> Self {
        FreeGroupoid::new(Graph::cube3())
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    fn endpoints(&self, l: Letter) -> Result<(usize, usize)> {
        let e = self.graph.edges.get(l.edge).ok_or(Error::IndexOutOfRange {
            what: "edge",
            index: l.edge,
            max: self.graph.edges.len().saturating_sub(1),
        })?;
        Ok(if l.inverse {
            (e.target, e.source)
        } else {
            (e.source, e.target)
        })
    }

    /// Checks that `raw` chains from `start`, then cancels adjacent inverse
    /// pairs with a stack; the result is the unique reduced form.
    pub fn word_reduce(&self, start: usize, raw: &[Letter]) -> Result<Arrow> {
        if start >= self.graph.vertices.len() {
            return Err(Error::IndexOutOfRange {
                what: "graph vertex",
                index: start,
                max: self.graph.vertices.len().saturating_sub(1),
            });
        }
        let mut at = start;
        let mut stack: Vec<Letter> = Vec::with_capacity(raw.len());
        for (k, &l) in raw.iter().enumerate() {
            let (s, t) = self.endpoints(l)?;
            if s != at {
                return Err(Error::Composition(format!(
                    "letter {k} ({}) starts at {} but the word is at {}",
                    self.format_letter(l),
                    self.graph.vertices[s],
                    self.graph.vertices[at]
                )));
            }
            at = t;
            if stack.last() == Some(&l.flipped()) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        Ok(Arrow {
            source: start,
            target: at,
            word: stack,
        })
    }

    pub fn generator(&self, edge: usize) -> Result<Arrow> {
        let (s, _) = self.endpoints(Letter::fwd(edge))?;
        self.word_reduce(s, &[Letter::fwd(edge)])
    }

    pub fn edge_arrow(&self, name: &str) -> Result<Arrow> {
        self.generator(self.graph.edge_index(name)?)
    }

    /// `a` followed by `b`.
    pub fn then(&self, a: &Arrow, b: &Arrow) -> Result<Arrow> {
        if a.target != b.source {
            return Err(Error::Composition(format!(
                "arrow ends at {} but the next starts at {}",
                self.graph.vertices[a.target], self.graph.vertices[b.source]
            )));
        }
        let mut raw = a.word.clone();
        raw.extend_from_slice(&b.word);
        self.word_reduce(a.source, &raw)
    }

    pub fn format_letter(&self, l: Letter) -> String {
        match self.graph.edges.get(l.edge) {
            Some(e) => format!("{}{}", e.name, if l.inverse { "⁻¹" } else { "" }),
            None => format!("?{}", l.edge),
        }
    }

    pub fn format_word(&self, a: &Arrow) -> String {
        if a.word.is_empty() {
            return format!("id_{}", self.graph.vertices[a.source]);
        }
        a.word
            .iter()
            .map(|&l| self.format_letter(l))
            .collect::<Vec<_>>()
            .join("·")
    }
}

impl CubicalGroupoid for FreeGroupoid {
    type Cell = FreeCell;

    fn top_dim(&self) -> Option<usize> {
        Some(1)
    }

    fn dim(&self, c: &FreeCell) -> usize {
        match c {
            FreeCell::Vertex(_) => 0,
            FreeCell::Arrow(_) => 1,
        }
    }

    fn face(&self, c: &FreeCell, alpha: u8, i: usize) -> Result<FreeCell> {
        let a = c.arrow()?;
        crate::cubical::check_face(alpha, i, 1)?;
        Ok(FreeCell::Vertex(if alpha == 0 { a.source } else { a.target }))
    }

    fn degeneracy(&self, c: &FreeCell, i: usize) -> Result<FreeCell> {
        match c {
            FreeCell::Vertex(v) => {
                check_index("degeneracy index", i, 1)?;
                Ok(FreeCell::Arrow(Arrow::identity(*v)))
            }
            FreeCell::Arrow(_) => Err(Error::Unsupported(
                "the free groupoid has no cells above dimension 1".into(),
            )),
        }
    }

    fn compose(&self, x: &FreeCell, y: &FreeCell, i: usize) -> Result<FreeCell> {
        check_index("composition direction", i, 1)?;
        Ok(FreeCell::Arrow(self.then(x.arrow()?, y.arrow()?)?))
    }

    fn inverse(&self, c: &FreeCell, i: usize) -> Result<FreeCell> {
        check_index("inverse direction", i, 1)?;
        Ok(FreeCell::Arrow(c.arrow()?.inverse()))
    }
}
