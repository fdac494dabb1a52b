//! Hermite normal forms of square matrices over the ring of differential
//! polynomials `Q(t)[D; δ]`.
//!
//! Two independent algorithms compute the pair `(U, H)` with `U·A = H`:
//!
//! * [`matrix::hermite_elimination`] eliminates column by column with 2×2
//!   unimodular transforms built from the right Euclidean algorithm;
//! * [`linsys::hermite_via_linsys`] reduces the problem to linear systems
//!   over `Q(t)`, finds the diagonal degrees by binary search and solves
//!   once more at those degrees.
//!
//! Both return the same canonical pair for full-rank input.

pub mod error;
pub mod field;
pub mod ftlinalg;
pub mod linsys;
pub mod matrix;
pub mod ore;
pub mod text;

pub use error::{Error, Result};
pub use field::{BigRat, Degree, Derivation, RatFun, TPoly};
pub use ftlinalg::{FtMatrix, SolveOutcome};
pub use linsys::{hermite_via_linsys, EncodedSystem, LinsysOptions, LinsysStats};
pub use matrix::{hermite_elimination, DegreeProfile, HermiteResult, OreMatrix};
pub use ore::{GcrdResult, OrePoly};
