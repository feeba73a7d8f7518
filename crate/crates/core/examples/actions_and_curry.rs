//! Right actions of a monoidal category on a category: checking the action
//! axioms, currying `- <> Q` into an endofunctor, and the monad induced by
//! a monoid object.

use std::sync::Arc;

use actlift::action::{check_action, curry_action, monad_from_monoid, self_action};
use actlift::category::ObjId;
use actlift::instances::{max_action, max_monoidal, min_action};
use actlift::monad::check_monad;
use actlift::monoidal::MonoidObject;
use actlift::Result;

fn main() -> Result<()> {
    // The 3-chain (with max) acting on the 4-chain by m <> q = max(m, phi q).
    let phi = [0, 1, 3];
    let action = max_action(4, 3, &phi)?;
    println!(
        "max action, phi = {phi:?}: axioms hold: {}",
        check_action(&action).is_pass()
    );
    for q in 0..3 {
        let curried = curry_action(&action, ObjId(q))?;
        let images: Vec<usize> = (0..4).map(|m| curried.obj(ObjId(m)).0).collect();
        println!("  - <> {q} sends 0..4 to {images:?}");
    }

    let min = min_action(3, 3)?;
    println!("min action: axioms hold: {}", check_action(&min).is_pass());

    // Each monoid B gives the monad - <> B. Under max every object is a
    // monoid, and the monad is m |-> max(m, phi b).
    for b in 0..3 {
        let monoid = MonoidObject::unique(&action.monoidal, ObjId(b))?;
        let t = monad_from_monoid(&action, &monoid)?;
        let images: Vec<usize> = (0..4).map(|m| t.t(ObjId(m)).0).collect();
        println!(
            "  monad from monoid {b}: {images:?}, laws hold: {}",
            check_monad(&t).is_pass()
        );
    }

    // A monoidal category acts on itself.
    let c = Arc::new(max_monoidal(3));
    let s = self_action(&c);
    println!(
        "self action of (chain 3, max): axioms hold: {}",
        check_action(&s).is_pass()
    );

    Ok(())
}
