//! Eilenberg-Moore categories of a few small monads: which objects carry
//! modules, the free modules, and the adjunction data that comes with them.

use std::sync::Arc;

use actlift::category::ObjId;
use actlift::instances::{
    chain, const_one, const_top, group_instance, product_action, support_monad,
};
use actlift::monad::{check_em, em_category, Monad};
use actlift::Result;

fn describe(name: &str, t: Monad) -> Result<()> {
    let t = Arc::new(t);
    let em = em_category(&t)?;
    let base = t.cat();
    println!(
        "{name}: {} modules, {} module maps, EM laws hold: {}",
        em.num_modules(),
        em.underlying.len(),
        check_em(&em).is_pass()
    );
    for x in base.objects() {
        let free = em.module(em.free_id(x));
        let on: Vec<&str> = em
            .modules_on(x)
            .iter()
            .map(|&i| em.base.object_name(i))
            .collect();
        println!(
            "  {:<4} carries {:<32} free module ({}, {})",
            base.object_name(x),
            format!("{on:?}"),
            base.object_name(free.carrier),
            base.morphism_name(free.nu)
        );
    }
    Ok(())
}

fn main() -> Result<()> {
    // On a poset the modules of a closure operator are its fixed points.
    let c4 = Arc::new(chain(4));
    describe(
        "closure c = [1, 1, 3, 3] on the 4-chain",
        Monad::thin(c4.clone(), [1, 1, 3, 3].map(ObjId).to_vec())?,
    )?;
    describe("constant top on the 4-chain", const_top(c4))?;

    let (_, t) = group_instance();
    describe("Z/2 with mu = eta = generator", t)?;

    let (sets, _) = product_action();
    describe("support monad on small sets", support_monad(&sets))?;
    describe("constant one-point monad", const_one(&sets))?;
    Ok(())
}
