//! Randomized property suites, 1000 cases each.

mod common;

const CASES: u32 = 1000;

#[test]
fn ring_axioms() {
    common::ring_axioms(CASES).unwrap();
}

#[test]
fn series_remultiplication() {
    common::series_remultiplication(CASES).unwrap();
}

#[test]
fn projection_independence() {
    common::projection_independence(CASES).unwrap();
}

#[test]
fn inversion_set_size_equals_length() {
    common::inversion_sets(CASES).unwrap();
}

#[test]
fn harmonic_product() {
    common::harmonic_product(CASES).unwrap();
}

#[test]
fn basis_order_invariance() {
    common::basis_order_invariance(CASES).unwrap();
}
