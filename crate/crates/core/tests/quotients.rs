mod common;

use common::quotients;

#[test]
fn corpus_is_tame() {
    quotients::corpus_is_tame().unwrap();
}

#[test]
fn idempotents_agree_with_squaring_oracle() {
    quotients::idempotents_agree().unwrap();
}

#[test]
fn rees_quotient_idempotent_map() {
    quotients::rees_quotient_idempotent_map().unwrap();
}

#[test]
fn reduction_keeps_units() {
    quotients::reduction_keeps_units().unwrap();
}

#[test]
fn booleanization_under_quotients() {
    quotients::booleanization_under_quotients().unwrap();
}

#[test]
fn spec_shrinks_under_quotients() {
    quotients::spec_shrinks_under_quotients().unwrap();
}

#[test]
fn components_have_trivial_idempotents() {
    quotients::components_have_trivial_idempotents().unwrap();
}

#[test]
fn normal_forms_are_stable() {
    quotients::normal_forms_are_stable().unwrap();
}
