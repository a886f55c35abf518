//! Counting representations `n = a + b` with `a·b = t·P(m, c)`, where `P(m, c)`
//! is the `c`-th `m`-gonal number.
//!
//! The crate is layered bottom-up:
//!
//! - [`arith`]: primality, factorization, divisor counts, Kronecker symbol.
//! - [`polygonal`]: `P(m, c)` and its exact inverse.
//! - [`repcount`]: brute-force oracles for `r_{m,t}(n)` and the companion count
//!   `r'_{m,t}(n)` of solutions to `2(m-2)n² + t(m-4)² = 2(m-2)x² + t·y²`, plus the
//!   maps between the two solution sets.
//! - [`qforms`]: positive-definite binary quadratic forms (reduction, class
//!   numbers, representation counts, Dirichlet's divisor sum, class functionals).
//! - [`closedform`]: divisor-function closed forms for the supported `(m, t)`
//!   families and the prime-set characterizations of unsolvable `n`.
//! - [`harness`]: verification suites tying every closed form to an oracle.

pub mod arith;
pub mod closedform;
pub mod error;
pub mod harness;
pub mod polygonal;
pub mod qforms;
pub mod repcount;

pub use error::{Error, Result};
pub use polygonal::Family;
