//! Finite-dimensional algebras, coalgebras, Hopf algebras, bilinear forms on
//! them, comodule algebras, and cocycle deformation.

mod algebra;
mod antipode;
mod coalgebra;
mod comodule;
mod data;
mod deform;
mod forms;
mod verify;

pub use crate::sparse::{TensorVector, Vector};
pub use algebra::{tensor_mul, FiniteAlgebra};
pub use antipode::solve_antipode;
pub use coalgebra::FiniteCoalgebra;
pub use comodule::{check_comodule_algebra_morphism, ComoduleAlgebra, MorphismKind};
pub use data::HopfAlgebraData;
pub use deform::{deform_comodule_algebra, deform_hopf};
pub use forms::{convolution_inverse, q_exponential, BilinearForm, LinearFunctional};
pub use verify::{verify_algebra, verify_coalgebra, verify_hopf, verify_hopf_2cocycle};
