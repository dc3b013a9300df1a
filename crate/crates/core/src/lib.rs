//! SAT workbench for multicolor Ramsey-avoidance problems.
//!
//! The pipeline: describe forbidden patterns per color ([`graphs`]), compile
//! the avoidance problem to CNF ([`encode`]) — optionally restricted to block
//! Cayley colorings over a finite group ([`groups`]) or strengthened with
//! lex-leader symmetry breaking — decide it with the built-in CDCL solver or
//! an external DIMACS solver ([`solve`]), independently verify any witness
//! coloring ([`verify`]), and enumerate critical colorings up to isomorphism
//! ([`enumerate`]). The [`cli`] module ties these into reproducible runs.

pub mod cli;
pub mod encode;
pub mod graphs;
pub mod groups;
pub mod solve;

mod util;
