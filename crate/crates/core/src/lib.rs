//! Exact projective double spaces over four-dimensional kinematic algebras.
//!
//! Two families of algebras are supported: quaternion skew fields over the
//! rationals, and purely inseparable quartic extensions of GF(2)(s, t).
//! From the product on H the crate builds the projective space on H, its
//! left and right parallelisms, the orbits of lines through the point F·1
//! under inner automorphisms, and every Clifford-like parallelism obtained by
//! tagging those orbits left or right. All arithmetic is exact.

pub mod algebra;
pub mod cliffordlike;
pub mod error;
pub mod geometry;
pub mod linalg;
pub mod orbits;
pub mod parallel;
pub mod scalar;
pub mod text;

pub use algebra::{
    AlteredAlgebra, FourAlgebra, QuarticExtension, Quaternion, QuaternionAlgebra, SideTag, TableAlgebra,
};
pub use cliffordlike::{build_parallelism, CliffordLikeParallelism, FixVerdict, PropTwoVerdict};
pub use error::{Error, Result};
pub use geometry::Subspace;
pub use linalg::LinearMap;
pub use orbits::OrbitKey;
pub use parallel::DsOutcome;
pub use scalar::{F2RatFun, Field, Rational};
