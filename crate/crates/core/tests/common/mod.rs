#![allow(dead_code)]

pub mod mutate;
pub mod oracle;
pub mod random_linear;

use std::path::PathBuf;

use actlift::decl::Declaration;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(format!("{name}.toml"))
}

pub fn load(name: &str) -> Declaration {
    Declaration::load(fixture_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// Fixtures on which every check passes.
pub const PASSING: [&str; 9] = [
    "group_z2",
    "identity_chain3",
    "linear_f3",
    "product_const_one",
    "product_support",
    "swap_const_one",
    "top_max_chain2",
    "top_max_chain3",
    "top_min_chain3",
];

/// The bijection suite: fixture, and the number of laws worked out by hand.
pub const BIJECTION: [(&str, usize); 8] = [
    ("identity_chain3", 1),
    ("top_max_chain2", 1),
    ("top_max_chain3", 1),
    ("top_min_chain3", 0),
    ("group_z2", 1),
    ("product_support", 1),
    ("product_const_one", 0),
    ("swap_const_one", 1),
];
