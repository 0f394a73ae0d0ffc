//! Groupoid laws evaluated on concrete cells, reported one check each.

use super::CubicalGroupoid;
use crate::cubical::RelationCheck;
use crate::error::Result;

fn check(name: String, r: Result<bool>) -> RelationCheck {
    RelationCheck {
        name,
        pass: r.unwrap_or(false),
    }
}

/// `(x +_i y) +_i z = x +_i (y +_i z)`.
pub fn associativity<G: CubicalGroupoid>(g: &G, x: &G::Cell, y: &G::Cell, z: &G::Cell, i: usize) -> RelationCheck {
    check(
        format!("associativity in direction {i}"),
        (|| {
            let l = g.compose(&g.compose(x, y, i)?, z, i)?;
            let r = g.compose(x, &g.compose(y, z, i)?, i)?;
            Ok(l == r)
        })(),
    )
}

/// `ε_i ∂^0_i x +_i x = x = x +_i ε_i ∂^1_i x`.
pub fn identities<G: CubicalGroupoid>(g: &G, x: &G::Cell, i: usize) -> RelationCheck {
    check(
        format!("identities in direction {i}"),
        (|| {
            let left = g.degeneracy(&g.face(x, 0, i)?, i)?;
            let right = g.degeneracy(&g.face(x, 1, i)?, i)?;
            Ok(g.compose(&left, x, i)? == *x && g.compose(x, &right, i)? == *x)
        })(),
    )
}

/// `x +_i (-_i x) = ε_i ∂^0_i x` and `(-_i x) +_i x = ε_i ∂^1_i x`.
pub fn inverses<G: CubicalGroupoid>(g: &G, x: &G::Cell, i: usize) -> RelationCheck {
    check(
        format!("inverses in direction {i}"),
        (|| {
            let inv = g.inverse(x, i)?;
            Ok(g.compose(x, &inv, i)? == g.degeneracy(&g.face(x, 0, i)?, i)?
                && g.compose(&inv, x, i)? == g.degeneracy(&g.face(x, 1, i)?, i)?)
        })(),
    )
}

/// `(x +_i y) +_j (z +_i w) = (x +_j z) +_i (y +_j w)`.
pub fn interchange<G: CubicalGroupoid>(
    g: &G,
    [x, y, z, w]: [&G::Cell; 4],
    i: usize,
    j: usize,
) -> RelationCheck {
    check(
        format!("interchange of directions {i} and {j}"),
        (|| {
            let l = g.compose(&g.compose(x, y, i)?, &g.compose(z, w, i)?, j)?;
            let r = g.compose(&g.compose(x, z, j)?, &g.compose(y, w, j)?, i)?;
            Ok(l == r)
        })(),
    )
}

/// Faces of a composite: `∂^a_j (x +_i y) = ∂^a_j x +_{i'} ∂^a_j y` for
/// `j ≠ i`, and the two ends in direction `i`.
pub fn composite_faces<G: CubicalGroupoid>(g: &G, x: &G::Cell, y: &G::Cell, i: usize) -> RelationCheck {
    check(
        format!("faces of a composite in direction {i}"),
        (|| {
            let c = g.compose(x, y, i)?;
            if g.face(&c, 0, i)? != g.face(x, 0, i)? || g.face(&c, 1, i)? != g.face(y, 1, i)? {
                return Ok(false);
            }
            for j in (1..=g.dim(x)).filter(|&j| j != i) {
                let i2 = if j < i { i - 1 } else { i };
                for a in 0..2 {
                    let expect = g.compose(&g.face(x, a, j)?, &g.face(y, a, j)?, i2)?;
                    if g.face(&c, a, j)? != expect {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        })(),
    )
}
