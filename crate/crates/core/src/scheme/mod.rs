//! Binoid schemes glued from affine charts, and the π₀/π₁ pipeline over
//! their Čech poset.

mod diagram;
mod document;
mod pipeline;

pub use diagram::{load_scheme, load_scheme_with_budget, SchemeDiagram, Section};
pub use document::{
    index_set_key, parse_index_set, parse_restriction_key, RestrictionDocument, SchemeDocument, SectionDocument,
};
pub use pipeline::{
    fundamental_groupoid, fundamental_groupoid_detailed, fundamental_groupoid_of, pi0_scheme, point_label,
    realization_functor, FundamentalGroupoid, Pi0Summary, Realization,
};
