//! Exact computation in NCSym, the Hopf algebra of symmetric functions in
//! noncommuting variables, written in the power-sum (set partition) basis.
//!
//! The crate is organised bottom-up:
//!
//! * [`combinatorics`]: set partitions, set compositions, standardization,
//!   atomic splittings and the action `γ[A]` of a composition on a partition.
//! * [`freeword`]: words over finite sets, quasi-shuffles, Lyndon words and
//!   Hall bracketings.
//! * [`hopf`]: the Hopf structure itself, the antipode (three independent
//!   routes), primitive generators and the Hall basis of primitives.
//! * [`verify`]: exhaustive checks of the Hopf axioms and of the structural
//!   results, shared by the CLI and the test suites.
//!
//! Coefficients are arbitrary-precision integers throughout.

pub mod cli;
pub mod combinatorics;
mod error;
pub mod freeword;
pub mod hopf;
pub mod linear;
pub mod verify;

pub use combinatorics::{AtomicFactorization, SetComposition, SetPartition};
pub use error::{Error, Result};
pub use freeword::Word;
pub use hopf::{NCSymElement, TensorElement};
pub use linear::LinComb;
