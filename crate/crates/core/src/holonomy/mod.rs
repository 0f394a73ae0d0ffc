//! Exact integration of forms over polynomial singular cubes, the
//! integrated connection in `M_n(Q)`, and both forms of Stokes' theorem.
//!
//! `∫_f ω` is the iterated unit integral of the density `θ̂` of `f*ω`.
//! Boundary sums use the same alternating convention as the cubical
//! coboundary, `Σ_i (-1)^i {Ω(∂^1_i f) - Ω(∂^0_i f)}`.

mod integral;
mod stokes;

pub use integral::{
    integrate_along_pipe, integrate_form, integrate_form_in_order, FormIntegral, IntegralResult,
    IntegrationStep, SurfaceIntegral,
};
pub use stokes::{
    boundary_functional, check_boundary_subdivision, holonomy_cell, holonomy_groupoid,
    pre_stokes_commutes, verify_prop_ib, verify_stokes, verify_subdivision_and_alternation,
    HolonomyGroupoid, StokesRecord,
};
