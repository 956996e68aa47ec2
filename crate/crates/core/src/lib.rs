//! Exact symbolic engine for non-standard (1+1) quantum groups: deformed
//! Hopf algebras, their universal R-matrices, graded contractions, a
//! matrix realization and the Poisson–Lie layer, all checked order by
//! order with exact rational coefficients.

#![no_std]
extern crate alloc;

pub mod coeffring;
pub mod cpoly;
pub mod controls;
pub mod hopf;
pub mod matrep;
pub mod models;
pub mod poisson;
pub mod ncalg;
pub mod report;
pub mod rmatrix;
