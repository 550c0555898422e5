//! Comodule-algebra families over `gr(u_q)` and their deformations over
//! `u_q`, with filtrations, invariants and Morita predicates.

mod a4;
mod build;
mod classify;
mod filtration;
mod morita;
mod params;
mod presentation;

pub use a4::{
    a4_params_from_uv, embed_a4_into_uq, non_semisimple_condition, one_dim_reps_a4, render_poly,
    semisimplicity_a4, uq_linear_element, verify_min_pol_lemma, verify_semisimplicity_boundary,
    A4Embedding, MinPolComparison,
};
pub use build::{build_family, deform_family, FamilyShape};
pub use classify::{
    classify, divisors, ClassificationTable, DInvariantEntry, DimensionEntry, FamilyEntry,
    ParamDomain, ParamSlot,
};
pub use filtration::{
    is_right_h_simple, loewy_filtration, morita_invariant_d, EvidenceTier, LoewyFiltration,
    MoritaInvariantD, SimplicityEvidence,
};
pub use morita::{
    canonical_params, generator_map, iso_conjugation, iso_l3n_shift, iso_l4_conjugation,
    iso_l4_scaling, iso_l4_to_l2, iso_rank_one_to_l4, morita_equivalent_params,
    verify_stated_isomorphisms, GeneratorImages,
};
pub use params::{FamilyParams, FamilyTag};
pub use presentation::{
    verify_deformed_algebra, verify_deformed_presentation, verify_family_relations,
};
