//! Presented groupoids, functors, poset colimits and group presentations.

mod conditions;
mod diagram;
mod functor;
mod presentation;
mod skeleton;

pub use conditions::{check_colimit_conditions, check_condition, required_conditions, ConditionCheck, ConditionReport};
pub use diagram::{nontrivial_relators, Colimit, DiagramArrow, DiagramNode, PosetDiagram};
pub use functor::{stretch, GroupoidFunctor};
pub use presentation::{free_reduce, inverse_word, GenIso, GroupoidPresentation, GroupoidRelation, Letter, UnionFind, Word};
pub use skeleton::{skeletonize, skeletonize_with_budget, ComponentGroup, GroupPresentationResult, DEFAULT_TIETZE_BUDGET};
