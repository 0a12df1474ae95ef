//! Numerical toolkit for non-asymptotic entanglement distillation.
//!
//! The crate is organised around a small set of subsystems:
//!
//! - [`qmat`]: dense complex Hermitian operators with bipartite structure,
//!   eigendecomposition, partial transpose and the entropic functionals
//!   (relative entropy, its variance, coherent information).
//! - [`conic`]: a dense primal-dual interior-point SDP solver for linear
//!   matrix inequalities over Hermitian variables, plus an exact
//!   big-rational simplex LP solver.
//! - [`distill`]: the one-shot PPT-assisted distillation SDPs, the
//!   hypothesis-testing relative entropy and the appendix SDP pair.
//! - [`rains`]: a cutting-plane algorithm bracketing the Rains bound.
//! - [`iso`]: exact-arithmetic pipeline for isotropic states (coefficient
//!   formula, n-copy linear program, closed-form bounds).
//! - [`secord`]: second-order upper/lower rate expansions.
//! - [`fitkit`]: least-squares fitting of finite-copy rate curves.
//!
//! All public rates are in bits unless a name says otherwise; the Rains
//! machinery works in nats internally and converts at its boundary.

pub mod conic;
pub mod distill;
pub mod fitkit;
pub mod iso;
pub mod qmat;
pub mod rains;
pub mod secord;

pub(crate) mod par;
