mod common;

use common::random_linear::{check_random_bundles, monoid_tables};

/// Labelled monoids on `0..n` with identity `0`. Order 3 has seven classes;
/// the ones without a non-trivial automorphism fixing `1` are labelled twice:
/// Z/3 (1), C2 with a zero (2), 1 + left zero (1), 1 + right zero (1),
/// a^2 = 0 (2), a^2 = a with a zero (2), 1 + C2 (2).
#[test]
fn monoid_table_counts() {
    let counts: Vec<usize> = (1..=3).map(|n| monoid_tables(n).len()).collect();
    assert_eq!(counts, vec![1, 2, 11]);
}

#[test]
fn canonical_law_passes_on_random_bundles() {
    let (checked, resampled) = check_random_bundles(7, 120);
    assert_eq!(checked, 120);
    assert!(
        resampled >= 10,
        "only {resampled} bundles had a sampled action"
    );
}
