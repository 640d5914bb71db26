//! Exact Kauffman-bracket skein engine.
//!
//! Computes the colored Jones polynomial of singular link diagrams by the
//! trivalent-graph expansion of the Masbaum-Vogel evaluation scheme, evaluates
//! the closed form for the singular torus family `ST(k,l)`, and extracts and
//! verifies tails (stabilized `q`-series) of the resulting invariants,
//! including the false theta function identity they imply.
//!
//! Module map:
//! - [`qpoly`]: sparse Laurent polynomials in `A` over big rationals, rational
//!   functions, truncated `q`-series (`q = A^4`).
//! - [`coeff`]: closed-form skein coefficients (quantum integers, `Delta_n`,
//!   `theta`, `lambda`, `Tet`, `6j`, bubble).
//! - [`tl_oracle`]: brute-force Temperley-Lieb ground truth (Jones-Wenzl
//!   projectors via the Wenzl recursion, direct diagram/graph expansion).
//! - [`diagram`]: singular link diagrams and colored trivalent graphs with
//!   planar rotation systems; JSON parser and validator.
//! - [`evaluate`]: crossing/singular-vertex expansion into graph sums and the
//!   recoupling-based reduction of planar trivalent graphs to scalars.
//! - [`families`]: the `ST(k,l)` closed formula and diagram generator.
//! - [`tails`]: tail normalization, stabilization detection, closed-form
//!   candidate series, false theta functions, and the adjudication report.
//! - [`cache`]: persistence for the coefficient memo tables.
//! - [`cli`]: command-line front end.

pub mod cache;
pub mod cli;
pub mod coeff;
pub mod diagram;
pub mod evaluate;
pub mod families;
pub mod fixtures;
pub mod qpoly;
pub mod tails;
pub mod tl_oracle;
