//! Seeded generators for randomized verification cases.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::rational::rat;
use crate::algebra::{Poly, PolyMap, Rational};
use crate::groupoid::{Arrow, FreeGroupoid, Graph, Letter};

pub type CaseRng = ChaCha8Rng;

pub fn rng(seed: u64) -> CaseRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small rational with numerator in `-5..=5` and denominator in `1..=4`.
pub fn rational<R: Rng>(rng: &mut R) -> Rational {
    rat(rng.gen_range(-5..=5), rng.gen_range(1..=4))
}

pub fn nonzero_rational<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let r = rational(rng);
        if r != Rational::from_integer(0.into()) {
            return r;
        }
    }
}

pub fn point<R: Rng>(rng: &mut R, dim: usize) -> Vec<Rational> {
    (0..dim).map(|_| rational(rng)).collect()
}

/// Random polynomial of total degree at most `max_degree` with up to
/// `max_terms` terms.
pub fn poly<R: Rng>(rng: &mut R, nvars: usize, max_degree: u32, max_terms: usize) -> Poly {
    let mut p = Poly::zero(nvars);
    let terms = rng.gen_range(1..=max_terms.max(1));
    for _ in 0..terms {
        let deg = rng.gen_range(0..=max_degree);
        let mut exps = vec![0u32; nvars];
        if nvars > 0 {
            for _ in 0..deg {
                exps[rng.gen_range(0..nvars)] += 1;
            }
        }
        p = &p + &Poly::monomial(exps, rational(rng));
    }
    p
}

pub fn poly_map<R: Rng>(rng: &mut R, source: usize, target: usize, max_degree: u32) -> PolyMap {
    PolyMap::new(
        source,
        (0..target).map(|_| poly(rng, source, max_degree, 4)).collect(),
    )
    .expect("components built in the source ring")
}

/// Random affine map `Q^source -> Q^target`.
pub fn affine_map<R: Rng>(rng: &mut R, source: usize, target: usize) -> PolyMap {
    poly_map(rng, source, target, 1)
}

/// A free groupoid on `v` vertices: tree edges `t{k}: v0 → vk` plus
/// `extra` random edges `e{k}`.
pub fn random_graph<R: Rng>(rng: &mut R, v: usize, extra: usize) -> FreeGroupoid {
    let mut g = Graph::new((0..v).map(|k| format!("v{k}")));
    for k in 1..v {
        g.add_edge(&format!("t{k}"), 0, k).expect("fresh edge name");
    }
    for k in 0..extra {
        let (a, b) = (rng.gen_range(0..v), rng.gen_range(0..v));
        g.add_edge(&format!("e{k}"), a, b).expect("fresh edge name");
    }
    FreeGroupoid::new(g)
}

/// A random chaining word from `start`, and the vertex where it ends.
pub fn random_walk<R: Rng>(rng: &mut R, g: &FreeGroupoid, start: usize, len: usize) -> (Vec<Letter>, usize) {
    let mut at = start;
    let mut w = Vec::new();
    for _ in 0..len {
        let options: Vec<Letter> = g
            .graph()
            .edges()
            .iter()
            .enumerate()
            .flat_map(|(k, e)| {
                let mut o = vec![];
                if e.source == at {
                    o.push(Letter::fwd(k));
                }
                if e.target == at {
                    o.push(Letter::inv(k));
                }
                o
            })
            .collect();
        let l = options[rng.gen_range(0..options.len())];
        let e = &g.graph().edges()[l.edge];
        at = if l.inverse { e.source } else { e.target };
        w.push(l);
    }
    (w, at)
}

/// A random arrow `x → y`: a random walk, then back to `y` along the tree.
pub fn random_arrow<R: Rng>(rng: &mut R, g: &FreeGroupoid, x: usize, y: usize) -> Arrow {
    let len = rng.gen_range(0..5);
    let (mut w, end) = random_walk(rng, g, x, len);
    if end != 0 {
        w.push(Letter::inv(g.graph().edge_index(&format!("t{end}")).expect("tree edge")));
    }
    if y != 0 {
        w.push(Letter::fwd(g.graph().edge_index(&format!("t{y}")).expect("tree edge")));
    }
    g.word_reduce(x, &w).expect("walk chains")
}
