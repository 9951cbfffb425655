//! Semiring-polymorphic dynamic programming.
//!
//! Recurrences are written once against [`Semiring`] and evaluated in any
//! semiring: counting, probability, tropical, Boolean, tupled Viterbi, or
//! the [`Generator`] semiring that enumerates every solution. Constraints
//! that fold over a finite algebra are handled by running the same
//! recurrence in a [`Lifted`] semiring and projecting onto the accepted
//! constraint values.
//!
//! ```
//! use semiring_dp::dp::combinations;
//! use semiring_dp::semiring::{Count, Counting, MinPlus};
//!
//! assert_eq!(combinations(4, 2, &Counting, |_| Count::ONE), Count::Finite(6));
//! let x = [3.0, 1.0, 4.0, 1.0];
//! assert_eq!(combinations(4, 2, &MinPlus, |n| x[n - 1]), 2.0);
//! ```

pub mod dp;
pub mod error;
pub mod lifting;
pub mod oracle;
pub mod regression;
pub mod semiring;
pub mod verify;

pub use error::{DpError, Result};
pub use lifting::{Acceptance, ConstraintAlgebra, Lifted, LiftedVector};
pub use oracle::{Generator, PathSet};
pub use semiring::{Selective, Semiring};
