//! Exact construction of the fixed field of Aut(F_q(x)/F_q).
//!
//! The fixed field is `F_q(f_m)` with `m = q² - 1` and `f_m` the sum of
//! `φ(x)^m` over all Möbius maps φ. This crate builds the field arithmetic,
//! polynomials, rational functions and the group from scratch, computes `f_m`
//! three independent ways and checks the supporting identities exactly.

pub mod error;
pub mod field;
pub mod fixed;
pub mod identities;
pub mod moebius;
pub mod poly;
pub mod ratfunc;
pub mod record;
pub mod verify;

pub use error::{Error, Result};
pub use field::{make_field, Elem, Field};
pub use fixed::{
    build_report, build_report_with, closed_form_generator, f_k_direct, f_k_factored, generator,
    generator_closed_form, is_invariant, power_sum, power_sum_formula, GeneratorReport, GeneratorSpecs,
    Method,
};
pub use moebius::{closure, enumerate_group, group_generators, MoebiusMap};
pub use poly::Polynomial;
pub use ratfunc::RationalFunction;
