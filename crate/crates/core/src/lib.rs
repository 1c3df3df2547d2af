//! Exact-arithmetic machinery for bounding the size of point sets with few
//! distinct distances inside real algebraic sets.
//!
//! Everything is computed over arbitrary-precision rationals: multivariate
//! polynomials with lex/deglex term orders, Buchberger's algorithm and reduced
//! Gröbner bases, affine Hilbert functions via standard-monomial counting,
//! vanishing ideals of finite point sets (Buchberger–Möller), closed-form
//! distance-set bounds, and exact rank/inertia checks of evaluation matrices
//! on concrete configurations.

pub mod bounds;
pub mod groebner;
pub mod hilbert;
pub mod matrix;
pub mod monomial;
pub mod parse;
pub mod points;
pub mod polynomial;
pub mod rational;
pub mod verify;

pub use monomial::{Monomial, TermOrder};
pub use points::PointSet;
pub use polynomial::Polynomial;
pub use rational::Rational;
