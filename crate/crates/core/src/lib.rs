pub mod cyclofield;
pub mod error;
pub mod export;
pub mod hopf;
pub mod linalg;
pub mod polyid;
pub mod report;
pub mod sample;
pub mod scalar;
pub mod sparse;
pub mod suite;
pub mod uqsl2;
pub mod zoo;

pub use cyclofield::{CyclotomicField, CyclotomicNumber};
pub use error::{Error, Result};
pub use scalar::{Field, Rational};

pub type Cyclo = CyclotomicNumber;
