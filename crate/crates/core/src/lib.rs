//! Exact combinatorics of tangent cones to Schubert varieties in the
//! Grassmannian.
//!
//! Everything is organized around a dominating pair `v <= w` in `I(d, n)`:
//!
//! - [`grassmann`]: index tuples, the componentwise Bruhat order, duality;
//! - [`roots`]: the coordinate boxes of `v`, chains, domination, depth, and
//!   the distinguished subsets attached to indices above `v`;
//! - [`bijection`]: the mutually inverse contraction/expansion moves and
//!   their lifts to a degree-preserving bijection between dominated
//!   monomials and standard monomials;
//! - [`standard`]: descending index sequences and their enumeration;
//! - [`hilbert`]: the Hilbert function (direct count and
//!   inclusion-exclusion) and the multiplicity;
//! - [`paths`]: the non-intersecting lattice-path picture and renderers;
//! - [`minors`]: the generic-matrix minors, the four term orders, and the
//!   Groebner view of the tangent-cone ideal.
//!
//! All computations are exact; results are deterministic for fixed inputs.
//! Deep enumerations honor the `SCHUBERT_NODE_BUDGET` environment variable
//! (see [`budget`]).

pub mod bijection;
pub mod budget;
pub mod error;
pub mod grassmann;
pub mod hilbert;
pub mod minors;
pub mod paths;
pub mod roots;
pub mod standard;

pub use error::{Error, Result};
pub use grassmann::GrassmannIndex;
pub use roots::{Root, RootMonomial, VChain};
pub use standard::StandardMonomial;
