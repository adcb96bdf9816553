//! Continued fractions, additively indecomposable integers and universal
//! diagonal quadratic forms over real quadratic fields `Q(√D)`, together
//! with the L-value machinery that links partial quotients to the
//! principal-class zeta function.

pub mod analytic;
pub mod approx;
pub mod arith;
pub mod contfrac;
pub mod error;
pub mod indecomp;
pub mod interval;
pub mod quadfield;
pub mod sieve;
pub mod universal;

pub use approx::Approx;
pub use contfrac::{CFExpansion, Convergent, Surd};
pub use error::{Error, Result};
pub use quadfield::{Embedding, FieldCtx, FieldElem, QuadInt};
