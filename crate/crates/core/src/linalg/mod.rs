//! Exact linear algebra over any [`Field`](crate::scalar::Field).

mod matrix;
mod minpoly;
mod poly;
mod subspace;

pub use matrix::Matrix;
pub use minpoly::{minimal_polynomial, minimal_polynomial_of_element};
pub use poly::Poly;
pub use subspace::Subspace;
