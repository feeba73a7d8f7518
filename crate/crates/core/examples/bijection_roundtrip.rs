//! Laws and strict lifts of an action to the Eilenberg-Moore category are in
//! bijection. Both sides are enumerated independently and matched here.

use std::sync::Arc;

use actlift::distlaw::{law_from_lift, lift_from_law, verify_bijection, Caps};
use actlift::instances::{
    chain, const_one, const_top, group_instance, max_action, product_action, support_monad,
    swap_action,
};
use actlift::monad::em_category;
use actlift::Result;

fn main() -> Result<()> {
    let (product_sets, product) = product_action();
    let (swap_sets, swap) = swap_action();
    let (group, group_t) = group_instance();
    let cases = vec![
        (
            "const top, 3-chain, max",
            max_action(3, 3, &[0, 1, 2])?,
            const_top(Arc::new(chain(3))),
        ),
        ("Z/2 on itself", group, group_t),
        (
            "product with support",
            product.clone(),
            support_monad(&product_sets),
        ),
        ("product with one point", product, const_one(&product_sets)),
        ("swap with one point", swap, const_one(&swap_sets)),
    ];
    for (name, action, monad) in cases {
        let (action, monad) = (Arc::new(action), Arc::new(monad));
        let b = verify_bijection(&action, &monad, Caps::default())?;
        println!(
            "{name:<24} laws {}  lifts {}  verified {}",
            b.law_count(),
            b.lift_count(),
            b.is_verified()
        );
        let em = Arc::new(em_category(&monad)?);
        for l in &b.laws {
            let lift = lift_from_law(l, &em)?;
            let table: Vec<&str> = lift
                .tilde
                .act
                .obj_table()
                .iter()
                .map(|&x| em.base.object_name(x))
                .collect();
            println!("  lifted object table {table:?}");
            assert_eq!(&law_from_lift(&lift)?, l);
        }
    }
    Ok(())
}
