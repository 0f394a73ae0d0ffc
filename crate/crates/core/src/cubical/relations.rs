//! The standard relation list among cubical operators, evaluated on a
//! concrete cell. Each relation is reported separately so a failure names
//! the offending identity.

use super::{CubeOp, CubicalCell};
use crate::algebra::Rational;
use crate::error::Result;

use CubeOp::{Degeneracy as E, Face as D, Reversion as R, Transposition as S};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RelationCheck {
    pub name: String,
    pub pass: bool,
}

/// Applies `ops` right to left, so `[d0_1, d1_2]` means `d0_1(d1_2(c))`.
fn word<C: CubicalCell>(c: &C, ops: &[CubeOp]) -> Result<C> {
    ops.iter().rev().try_fold(c.clone(), |acc, &op| super::apply_op(&acc, op))
}

fn show(ops: &[CubeOp]) -> String {
    if ops.is_empty() {
        return "id".into();
    }
    ops.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

struct Collector<'a, C> {
    cell: &'a C,
    out: Vec<RelationCheck>,
}

impl<C: CubicalCell> Collector<'_, C> {
    fn rel(&mut self, lhs: &[CubeOp], rhs: &[CubeOp]) {
        let pass = match (word(self.cell, lhs), word(self.cell, rhs)) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        };
        self.out.push(RelationCheck {
            name: format!("{} = {}", show(lhs), show(rhs)),
            pass,
        });
    }
}

/// Face/degeneracy relations on a `k`-cell.
pub fn cubical_relations<C: CubicalCell>(c: &C) -> Vec<RelationCheck> {
    let k = c.cube_dim();
    let mut col = Collector { cell: c, out: Vec::new() };
    for j in 1..=k {
        for i in 1..j {
            for a in 0..2 {
                for b in 0..2 {
                    col.rel(&[D(a, i), D(b, j)], &[D(b, j - 1), D(a, i)]);
                }
            }
        }
    }
    for j in 1..=k + 1 {
        for i in 1..=k + 1 {
            for a in 0..2 {
                match i.cmp(&j) {
                    std::cmp::Ordering::Less if k >= 1 => {
                        col.rel(&[D(a, i), E(j)], &[E(j - 1), D(a, i)])
                    }
                    std::cmp::Ordering::Equal => col.rel(&[D(a, i), E(j)], &[]),
                    std::cmp::Ordering::Greater => {
                        col.rel(&[D(a, i), E(j)], &[E(j), D(a, i - 1)])
                    }
                    _ => {}
                }
            }
        }
    }
    for j in 1..=k + 1 {
        for i in 1..=j {
            col.rel(&[E(i), E(j)], &[E(j + 1), E(i)]);
        }
    }
    col.out
}

/// Transposition relations: involution, braid and commutation, and
/// compatibility with faces and degeneracies.
pub fn transposition_relations<C: CubicalCell>(c: &C) -> Vec<RelationCheck> {
    let k = c.cube_dim();
    let mut col = Collector { cell: c, out: Vec::new() };
    for i in 1..k {
        col.rel(&[S(i), S(i)], &[]);
        if i + 1 < k {
            col.rel(&[S(i), S(i + 1), S(i)], &[S(i + 1), S(i), S(i + 1)]);
        }
        for j in i + 2..k {
            col.rel(&[S(i), S(j)], &[S(j), S(i)]);
        }
        for a in 0..2 {
            col.rel(&[D(a, i), S(i)], &[D(a, i + 1)]);
            col.rel(&[D(a, i + 1), S(i)], &[D(a, i)]);
            for j in 1..i {
                col.rel(&[D(a, j), S(i)], &[S(i - 1), D(a, j)]);
            }
            for j in i + 2..=k {
                col.rel(&[D(a, j), S(i)], &[S(i), D(a, j)]);
            }
        }
    }
    // σ_i on the (k+1)-cell ε_j c
    for i in 1..=k {
        col.rel(&[S(i), E(i)], &[E(i + 1)]);
        col.rel(&[S(i), E(i + 1)], &[E(i)]);
        for j in 1..i {
            col.rel(&[S(i), E(j)], &[E(j), S(i - 1)]);
        }
        for j in i + 2..=k + 1 {
            col.rel(&[S(i), E(j)], &[E(j), S(i)]);
        }
    }
    col.out
}

/// Reversion relations: involution, commutation, and compatibility with
/// faces, degeneracies and transpositions.
pub fn reversion_relations<C: CubicalCell>(c: &C) -> Vec<RelationCheck> {
    let k = c.cube_dim();
    let mut col = Collector { cell: c, out: Vec::new() };
    let shifted = |i: usize, j: usize| if j < i { i - 1 } else { i };
    for i in 1..=k {
        col.rel(&[R(i), R(i)], &[]);
        for j in i + 1..=k {
            col.rel(&[R(i), R(j)], &[R(j), R(i)]);
        }
        for a in 0..2 {
            col.rel(&[D(a, i), R(i)], &[D(1 - a, i)]);
            for j in (1..=k).filter(|&j| j != i) {
                col.rel(&[D(a, j), R(i)], &[R(shifted(i, j)), D(a, j)]);
            }
        }
    }
    for i in 1..=k + 1 {
        col.rel(&[R(i), E(i)], &[E(i)]);
        for j in (1..=k + 1).filter(|&j| j != i) {
            col.rel(&[R(i), E(j)], &[E(j), R(shifted(i, j))]);
        }
    }
    for i in 1..k {
        col.rel(&[S(i), R(i)], &[R(i + 1), S(i)]);
        col.rel(&[S(i), R(i + 1)], &[R(i), S(i)]);
        for j in (1..=k).filter(|&j| j != i && j != i + 1) {
            col.rel(&[S(i), R(j)], &[R(j), S(i)]);
        }
    }
    col.out
}

pub fn all_relations<C: CubicalCell>(c: &C) -> Vec<RelationCheck> {
    let mut out = cubical_relations(c);
    out.extend(transposition_relations(c));
    out.extend(reversion_relations(c));
    out
}

/// The three gluing equations of a subdivision in direction `i` at `s`,
/// and propagation to every face `∂^a_j`, `j ≠ i`: the face subdivides in
/// direction `i - [j < i]` into the corresponding faces of the halves.
pub fn subdivision_relations<C: CubicalCell>(c: &C, i: usize, s: &Rational) -> Vec<RelationCheck> {
    let mut out = Vec::new();
    let mut push = |name: String, pass: Result<bool>| {
        out.push(RelationCheck {
            name,
            pass: pass.unwrap_or(false),
        })
    };
    let halves = c.subdivide(i, s);
    let Ok((f1, f2)) = halves else {
        push(format!("subdivide({i}) defined"), Ok(false));
        return out;
    };
    push(
        format!("d1_{i} f' = d0_{i} f''"),
        (|| Ok(f1.face(1, i)? == f2.face(0, i)?))(),
    );
    push(
        format!("d0_{i} f' = d0_{i} f"),
        (|| Ok(f1.face(0, i)? == c.face(0, i)?))(),
    );
    push(
        format!("d1_{i} f'' = d1_{i} f"),
        (|| Ok(f2.face(1, i)? == c.face(1, i)?))(),
    );
    for j in (1..=c.cube_dim()).filter(|&j| j != i) {
        let i2 = if j < i { i - 1 } else { i };
        for a in 0..2 {
            push(
                format!("d{a}_{j} subdivides in direction {i2}"),
                (|| {
                    let (g1, g2) = c.face(a, j)?.subdivide(i2, s)?;
                    Ok(g1 == f1.face(a, j)? && g2 == f2.face(a, j)?)
                })(),
            );
        }
    }
    out
}
