use std::fmt;

use super::free::{Arrow, FreeGroupoid, Graph, Letter};
use crate::algebra::Rational;
use crate::error::Result;
use crate::weil::{WeilContext, WeilElement};

/// A group whose elements may need context (a Weil context, a set of
/// generators) to build the identity.
pub trait Group: Clone + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn identity(&self) -> Self::Elem;

    /// The product "first `a`, then `b`"; written additively when abelian.
    fn op(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;

    fn inverse(&self, a: &Self::Elem) -> Self::Elem;

    fn is_abelian(&self) -> bool;
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct AdditiveRationals;

impl Group for AdditiveRationals {
    type Elem = Rational;

    fn identity(&self) -> Rational {
        Rational::from_integer(0.into())
    }

    fn op(&self, a: &Rational, b: &Rational) -> Result<Rational> {
        Ok(a + b)
    }

    fn inverse(&self, a: &Rational) -> Rational {
        -a
    }

    fn is_abelian(&self) -> bool {
        true
    }
}

/// Weil elements of one context under addition.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct AdditiveWeil {
    pub ctx: WeilContext,
}

impl Group for AdditiveWeil {
    type Elem = WeilElement;

    fn identity(&self) -> WeilElement {
        WeilElement::zero(self.ctx)
    }

    fn op(&self, a: &WeilElement, b: &WeilElement) -> Result<WeilElement> {
        a.try_add(b)
    }

    fn inverse(&self, a: &WeilElement) -> WeilElement {
        -a
    }

    fn is_abelian(&self) -> bool {
        true
    }
}

/// The free group on named generators: the free groupoid on a graph with
/// one vertex and one loop per generator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FreeGroup {
    groupoid: FreeGroupoid,
}

impl FreeGroup {
    pub fn new<S: AsRef<str>>(generators: &[S]) -> Self {
        let mut graph = Graph::new(["*"]);
        for g in generators {
            graph.add_edge(g.as_ref(), 0, 0).expect("the single vertex exists");
        }
        FreeGroup {
            groupoid: FreeGroupoid::new(graph),
        }
    }

    pub fn generator(&self, k: usize) -> Arrow {
        self.groupoid.generator(k).expect("generator index in range")
    }

    pub fn generator_named(&self, name: &str) -> Result<Arrow> {
        self.groupoid.edge_arrow(name)
    }

    pub fn word(&self, letters: &[Letter]) -> Result<Arrow> {
        self.groupoid.word_reduce(0, letters)
    }

    pub fn groupoid(&self) -> &FreeGroupoid {
        &self.groupoid
    }

    pub fn format(&self, a: &Arrow) -> String {
        self.groupoid.format_word(a)
    }
}

impl Group for FreeGroup {
    type Elem = Arrow;

    fn identity(&self) -> Arrow {
        Arrow::identity(0)
    }

    fn op(&self, a: &Arrow, b: &Arrow) -> Result<Arrow> {
        self.groupoid.then(a, b)
    }

    fn inverse(&self, a: &Arrow) -> Arrow {
        a.inverse()
    }

    fn is_abelian(&self) -> bool {
        self.groupoid.graph().edges().is_empty()
    }
}
