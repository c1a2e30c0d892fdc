//! Exact Steinberg algebras of finite discrete groupoids.
//!
//! The crate builds the convolution algebra `A_K(G)` of a finite groupoid
//! over the rationals or a prime field, constructs and certifies minimal
//! left ideals at units with finite isotropy, computes the socle and its
//! decomposition into matrix blocks, and checks all of it against a
//! brute-force oracle. A graph frontend handles line points of finite
//! directed graphs (the Leavitt path algebra case).

pub mod algebra;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod field;
pub mod format;
pub mod graph;
pub mod groupoid;
pub mod ideal;
pub mod limits;
pub mod linalg;
pub mod oracle;
pub mod socle;

pub use algebra::{AlgebraElement, Bisection, SteinbergAlgebra};
pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use groupoid::{ElementId, FiniteGroupoid, IsotropyGroup, OrbitClass, RawGroupoid};
pub use ideal::LeftIdeal;
