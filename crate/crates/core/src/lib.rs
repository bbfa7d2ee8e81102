//! Exact computer algebra for ideals in multivariate polynomial rings over
//! ZZ and QQ: Groebner bases (reduced over QQ, strong over ZZ), ideal
//! arithmetic (sum, intersection, quotient, saturation, elimination),
//! polynomial matrices, ring maps with kernels, and scheme-theoretic
//! invariants (Hilbert series, dimension, degree, Rees/blow-up ideals, flat
//! limits).
//!
//! Everything is exact: coefficients are arbitrary-precision integers or
//! rationals, and all values are immutable after construction.

pub mod error;
pub mod geometry;
pub mod groebner;
pub mod ideal;
pub mod matrix;
pub mod monomial;
pub mod poly;
pub mod ring;
pub mod ringmap;
pub mod scalar;

pub use error::{Error, Result};
pub use geometry::HilbertSeries;
pub use groebner::{BasisKind, GroebnerBasis};
pub use ideal::Ideal;
pub use matrix::PolyMatrix;
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{parse_polynomial, Polynomial};
pub use ring::Ring;
pub use ringmap::{MapTarget, QuotientRing, RingMap};
pub use scalar::{Domain, Scalar};
