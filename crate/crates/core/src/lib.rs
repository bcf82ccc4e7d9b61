//! Exact Hilbert depth of squarefree monomial ideals and their quotients.
//!
//! The Hilbert depth of a quotient `J/I` of squarefree monomial ideals is read
//! off from the α-vector (counts of squarefree monomials per degree in
//! `J \ I`) through the alternating transform
//!
//! ```text
//! β_k^q = Σ_{j=0..k} (-1)^(k-j) C(q-j, k-j) α_j
//! ```
//!
//! as the largest `q` whose whole row `β_0^q..β_q^q` is nonnegative.
//!
//! Modules:
//!
//! * [`combinatorics`]: exact binomials, Macaulay cascades, Kruskal–Katona bounds.
//! * [`ideal`]: squarefree monomials/ideals, the ideal file format, α-vectors.
//! * [`hilbert`]: β-tables and the Hilbert depth search.
//! * [`family`]: closed forms for `I_{n,m} = (x_1⋯x_m) ∩ (x_{m+1},…,x_n)`.
//! * [`verify`]: brute-force oracles, lemma certification over the relaxed
//!   α-polytope, helper-function tables and randomized campaigns.
//!
//! Data-parallel loops go through [`Execution`]; with the `parallel` feature
//! (on by default) they run on rayon, otherwise everything is sequential.
//! Results never depend on the execution mode.

mod bigser;
pub mod combinatorics;
mod error;
mod exec;
pub mod family;
pub mod hilbert;
pub mod ideal;
pub mod verify;

pub use error::{Error, Result};
pub use exec::Execution;
