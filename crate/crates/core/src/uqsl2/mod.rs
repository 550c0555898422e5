//! `gr(u_q(sl2))`, its Hopf 2-cocycle `σ`, and `u_q(sl2)` as the deformation.

mod context;
mod gr;
mod sigma;
mod uq;

pub use context::Sl2Context;
pub(crate) use gr::pbw_labels;
pub use gr::{build_gr_uq, closed_form_comul, gr_uq_in, monomial_label, PbwIndex};
pub use sigma::{
    build_dual_functionals, build_sigma, sigma_in, sigma_via_exponential, verify_dual_relations,
    verify_exponential_addition, DualFunctionals,
};
pub use uq::{build_uq, uq_from_parts, verify_uq_relations};
