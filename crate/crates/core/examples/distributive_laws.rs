//! Distributive laws between an action and a monad: searching for them,
//! checking a hand-made family, and reading the witnesses when one fails.

use std::sync::Arc;

use actlift::category::ObjId;
use actlift::distlaw::{check_distlaw, enumerate_laws, law_existence, Caps, DistributiveLaw};
use actlift::instances::{chain, const_top, group_instance, max_action, min_action};
use actlift::monad::Monad;
use actlift::Result;

fn main() -> Result<()> {
    // Constant top on the 3-chain under max: the unique components work.
    let action = Arc::new(max_action(3, 3, &[0, 1, 2])?);
    let top = Arc::new(const_top(Arc::new(chain(3))));
    let l = DistributiveLaw::unique(action.clone(), top.clone())?;
    println!(
        "const top, max action: D1-D4 hold: {}",
        check_distlaw(&l).is_pass()
    );

    // Under min there is not even a candidate: T(m min q) = top is never
    // below T(m) min q = q for q below the top.
    let min = Arc::new(min_action(3, 3)?);
    let report = law_existence(&min, &top);
    println!(
        "const top, min action: {} empty candidate hom-set(s)",
        report.violations.len()
    );
    if let Some(v) = report.first() {
        println!("  e.g. {v}");
    }

    // Closures on the 3-chain against the max action with phi = [0, 1]:
    // a law exists iff c(max(m, phi q)) <= max(c m, phi q).
    for c in [[0, 1, 2], [1, 1, 2], [0, 2, 2], [2, 2, 2]] {
        let t = Arc::new(Monad::thin(Arc::new(chain(3)), c.map(ObjId).to_vec())?);
        let a = Arc::new(max_action(3, 2, &[0, 1])?);
        let laws = enumerate_laws(&a, &t, Caps::default())?;
        println!("  closure {c:?}: {} law(s)", laws.len());
    }

    // Z/2 acting on itself with the monad (Id, g, g). The identity family
    // is the only law; with the generator as component all four axioms fail.
    let (action, monad) = group_instance();
    let (action, monad) = (Arc::new(action), Arc::new(monad));
    let laws = enumerate_laws(&action, &monad, Caps::default())?;
    println!("Z/2 instance: {} law(s)", laws.len());
    let g = action.c().morphism_named("g1")?;
    let bent = laws[0].with_component(ObjId(0), ObjId(0), g);
    let report = check_distlaw(&bent);
    println!("  with l = g1: {:?}", report.laws());
    for v in report.violations.iter().take(2) {
        println!("    {v}");
    }
    Ok(())
}
