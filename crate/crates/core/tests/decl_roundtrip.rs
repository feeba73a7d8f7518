mod common;

use actlift::decl::Declaration;
use common::{fixture_path, load};

const ALL: [&str; 11] = [
    "dangling_reference",
    "group_z2",
    "identity_chain3",
    "linear_f3",
    "mutated_law",
    "product_const_one",
    "product_support",
    "swap_const_one",
    "top_max_chain2",
    "top_max_chain3",
    "top_min_chain3",
];

#[test]
fn every_fixture_roundtrips() {
    for name in ALL.iter().filter(|n| **n != "dangling_reference") {
        let d = load(name);
        let text = d.to_toml();
        let again = Declaration::parse(&text).unwrap_or_else(|e| panic!("{name}: {e}\n{text}"));
        assert_eq!(again, d, "{name}");
        // the canonical form is a fixed point
        assert_eq!(again.to_toml(), text, "{name}");
    }
}

#[test]
fn dangling_reference_fails_to_resolve() {
    assert!(Declaration::load(fixture_path("dangling_reference")).is_err());
}

#[test]
fn generated_fixtures_are_canonical() {
    // files written by the declaration_files example are already in
    // canonical form, apart from the leading comment
    for name in [
        "group_z2",
        "product_support",
        "product_const_one",
        "swap_const_one",
        "linear_f3",
    ] {
        let text = std::fs::read_to_string(fixture_path(name)).unwrap();
        let body: String = text
            .lines()
            .skip_while(|l| l.starts_with('#') || l.is_empty())
            .map(|l| format!("{l}\n"))
            .collect();
        assert_eq!(load(name).to_toml(), body, "{name}");
    }
}

#[test]
fn enumerated_sections_reload() {
    use actlift::distlaw::{enumerate_laws, enumerate_strict_lifts, Caps};
    let mut d = load("top_max_chain3");
    let (a, t) = (
        d.actions["self"].value.clone(),
        d.monads["Top"].value.clone(),
    );
    let laws = enumerate_laws(&a, &t, Caps::default()).unwrap();
    let lifts = enumerate_strict_lifts(&a, &t, Caps::default()).unwrap();
    d.insert_law("found", "self", "Top", &laws[0]);
    d.insert_lift("found_lift", "self", "Top", &lifts[0]);
    let back = Declaration::parse(&d.to_toml()).unwrap();
    assert_eq!(back.law("found").unwrap().unwrap(), laws[0]);
    assert_eq!(back.lift("found_lift").unwrap(), lifts[0]);
}
