//! Builds declarations from library instances and prints them in the file
//! format. The set-like and linear fixtures under `fixtures/` were produced
//! this way:
//!
//!     cargo run --example declaration_files -- --write fixtures
//!
//! With a name argument only that declaration is printed.

use std::sync::Arc;

use actlift::decl::{Declaration, LinearEntry};
use actlift::distlaw::{enumerate_laws, enumerate_strict_lifts, Caps};
use actlift::instances::{const_one, group_instance, product_action, support_monad, swap_action};
use actlift::linear::LinearBundle;
use actlift::Result;

/// Declares the instance together with every law and strict lift found by
/// enumeration.
fn with_solutions(
    header: &str,
    action: actlift::action::MonoidalAction,
    monad: actlift::monad::Monad,
) -> Result<String> {
    let mut d = Declaration::from_instance(&action, &monad);
    let (action, monad) = (Arc::new(action), Arc::new(monad));
    for (i, l) in enumerate_laws(&action, &monad, Caps::default())?
        .iter()
        .enumerate()
    {
        d.insert_law(&format!("l{i}"), "act", "T", l);
    }
    for (i, lift) in enumerate_strict_lifts(&action, &monad, Caps::default())?
        .iter()
        .enumerate()
    {
        d.insert_lift(&format!("lift{i}"), "act", "T", lift);
    }
    Ok(format!("{header}\n\n{}", d.to_toml()))
}

fn declaration(name: &str) -> Result<String> {
    match name {
        "group_z2" => {
            let (action, monad) = group_instance();
            with_solutions("# Z/2 acting on itself, monad (Id, s, s).", action, monad)
        }
        "product_support" => {
            let (sets, action) = product_action();
            let monad = support_monad(&sets);
            with_solutions(
                "# Sets {0,1,2} under X x q for the 2-chain with min; support monad.",
                action,
                monad,
            )
        }
        "product_const_one" => {
            let (sets, action) = product_action();
            let monad = const_one(&sets);
            with_solutions("# Sets {0,1,2} under X x q for the 2-chain with min; constant monad at 1.\n# No law: T(X x 0) = 1 has no map to 0.", action, monad)
        }
        "swap_const_one" => {
            let (sets, action) = swap_action();
            let monad = const_one(&sets);
            with_solutions("# Sets {1,2} with discrete Z/2 acting by conjugation with the swap; constant monad at 1.", action, monad)
        }
        "linear_f3" => {
            let mut d = Declaration::default();
            d.linear
                .insert("f3".into(), LinearEntry::Prime(LinearBundle::f3_example()));
            Ok(format!(
                "# B = F3[C2], A = F3[x]/(x^2) with x |-> -x, M = A.\n\n{}",
                d.to_toml()
            ))
        }
        _ => Err(actlift::Error::Declaration(format!(
            "no declaration named `{name}`"
        ))),
    }
}

const NAMES: [&str; 5] = [
    "group_z2",
    "product_support",
    "product_const_one",
    "swap_const_one",
    "linear_f3",
];

fn main() -> Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match args.as_slice() {
        [flag, dir] if flag == "--write" => {
            for name in NAMES {
                let path = std::path::Path::new(dir).join(format!("{name}.toml"));
                std::fs::write(&path, declaration(name)?).expect("fixture directory is writable");
                println!("wrote {}", path.display());
            }
        }
        [name] => print!("{}", declaration(name)?),
        _ => {
            println!("available: {}", NAMES.join(", "));
            print!("{}", declaration("group_z2")?);
        }
    }
    Ok(())
}
