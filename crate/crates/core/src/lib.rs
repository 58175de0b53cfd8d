//! Exact combinatorics of Harder-Narasimhan / Yang-Mills stratifications of
//! spaces of connections on bundles over surfaces.
//!
//! * [`arith`]: checked integer and rational arithmetic, `[r]_n`, strict ceiling.
//! * [`strata`]: admissible sequences, convex paths, codimension, critical values.
//! * [`poset`]: dominance order, bounded enumeration, minimal covers, linear extensions.
//! * [`connectivity`]: minimum stratum codimension and connectivity of the
//!   minimum critical set, orientable and non-orientable.
//! * [`oracle`]: naive brute-force verifiers used to cross-check everything above.

pub mod arith;
pub mod connectivity;
pub mod error;
pub mod oracle;
pub mod poset;
pub mod strata;

pub use arith::{ceil_strict, gcd, residue, Rational};
pub use error::{Error, Result};
pub use strata::{AdmissibleSequence, Block, CodimensionReport, ConvexPath};
