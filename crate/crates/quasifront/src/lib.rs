//! Transition-region asymptotics for Bessel and Lommel functions.
//!
//! Near the quasi-front `ct = n` a cylinder function switches between
//! oscillatory and decaying behaviour. This crate evaluates the exact
//! functions (Bessel J_n, Lommel s_{0,n}, Airy Ai, Scorer Gi, and their
//! derivatives), the Nicholson-type Airy/Scorer approximants F1–F4 that
//! describe them uniformly through that region, and the analysis tooling
//! that quantifies how good the approximants are: peak-amplitude error
//! tables, figure data series, amplitude/width scaling laws, and a
//! large-order agreement check.
//!
//! See the `examples/` directory for one runnable example per capability,
//! and the `quasifront` binary for the CSV/JSON command-line front end.

pub mod analysis;
pub mod asymptotics;
pub mod error;
pub mod lattice;
pub(crate) mod quad;
pub mod special;

pub use asymptotics::{
    f1_bessel, f2_bessel_prime, f3_lommel, f4_lommel_prime, olver_two_term_j,
    olver_two_term_jprime, z_coord, TransitionCoord,
};
pub use error::{Error, Result};
pub use lattice::{u_exact, u_quasifront, v_exact, v_quasifront, LatticeParams};
pub use special::EvalResult;
pub use special::{airy_ai, airy_ai_prime, scorer_gi, scorer_gi_prime};
pub use special::{bessel_j, bessel_j_prime, lommel_s0, lommel_s0_prime};
