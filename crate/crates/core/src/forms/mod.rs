//! Differential forms with polynomial coefficients, evaluated on
//! infinitesimal parallelepipeda as combinatorial forms.
//!
//! A classical `k`-form `Σ c_I dx_I` on `Q^m` determines the combinatorial
//! form `ω(x0, …, xk) = Σ c_I(x0)·det((x_a - x0)_I)`, computed exactly in
//! the Weil algebra. Coordinate axes are 1-based (`dx1`, `dx2`, …).
//!
//! The cubical coboundary is `dω(P) = Σ_i (-1)^i {ω(∂^1_i P) - ω(∂^0_i P)}`.
//! Under the correspondence above it equals `s(n)·(classical dω)` with the
//! orientation sign [`orientation_sign`] `= -1`, measured for `n ≤ 3`.

mod classical;
mod combinatorial;

pub use classical::{increasing_tuples, random_form, ClassicalForm};
pub use combinatorial::{
    check_form_symmetries, d_cubical, d_cubical_hw, d_simplicial, eval_comb, simplicial_coboundary,
    theta_hat, vol, Coboundary, CombinatorialForm,
};

use crate::algebra::Rational;

/// Measured values of `s(n)` in `d_cubical(ω) = s(n)·eval(dω)`, for the
/// degree `n` of `ω`.
pub const ORIENTATION_TABLE: [(usize, i64); 4] = [(0, -1), (1, -1), (2, -1), (3, -1)];

/// `s(n)` from [`ORIENTATION_TABLE`]; `None` outside the measured range.
pub fn orientation_sign(n: usize) -> Option<Rational> {
    ORIENTATION_TABLE
        .iter()
        .find(|(k, _)| *k == n)
        .map(|(_, s)| Rational::from_integer((*s).into()))
}

/// Signed permutations of `0..k` (sign `true` when odd), by insertion.
pub fn permutations(k: usize) -> Vec<(Vec<usize>, bool)> {
    let mut out = vec![(Vec::new(), false)];
    for x in 0..k {
        let mut next = Vec::new();
        for (p, odd) in &out {
            // inserting x at position j passes over p.len() - j larger-index slots
            for j in 0..=p.len() {
                let mut q = p.clone();
                q.insert(j, x);
                next.push((q, odd ^ ((p.len() - j) % 2 == 1)));
            }
        }
        out = next;
    }
    out
}
