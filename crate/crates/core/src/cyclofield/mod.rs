//! Exact arithmetic in `Q(q) = Q[t]/(Φ_N(t))`.

mod field;
mod number;
mod qnum;
mod text;

pub use field::{cyclotomic_polynomial, CyclotomicField};
pub use number::CyclotomicNumber;
pub use qnum::{q_binomial, q_factorial, q_int, QBinomials};
pub use text::parse;
