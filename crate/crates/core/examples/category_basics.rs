//! Building small categories by hand and from the shipped families, checking
//! the category laws, and taking opposites.

use actlift::category::{check_category, opposite, FinCategory, ObjId};
use actlift::instances::{chain, cyclic_group, finset};
use actlift::Result;

fn summary(name: &str, c: &FinCategory) {
    let status = if check_category(c).is_pass() {
        "ok"
    } else {
        "BROKEN"
    };
    println!(
        "{name:<12} {} objects, {} morphisms, largest hom-set {}, thin: {}  [{status}]",
        c.num_objects(),
        c.num_morphisms(),
        c.max_hom_size(),
        c.is_thin()
    );
}

fn main() -> Result<()> {
    // The walking arrow with an idempotent on its target.
    let mut b = FinCategory::builder();
    let x = b.object("x");
    let y = b.object("y");
    let f = b.morphism("f", x, y);
    let e = b.morphism("e", y, y);
    b.compose(e, f, f).compose(e, e, e);
    let arrow = b.build()?;
    summary("arrow+e", &arrow);
    println!("  e . f = {}", arrow.morphism_name(arrow.compose(e, f)?));

    summary("chain 4", &chain(4));
    summary("Z/3", &cyclic_group(3));
    // sets of size 0, 1, 2
    let fs = finset(3);
    summary("finset 3", &fs);
    let op = opposite(&fs);
    summary("finset 3 op", &op);
    assert_eq!(opposite(&op), fs);
    let (one, two) = (ObjId(1), ObjId(2));
    println!(
        "  |Hom(1, 2)| = {}, and in the opposite |Hom(2, 1)| = {}",
        fs.hom(one, two).len(),
        op.hom(two, one).len()
    );

    // Break one composite: g . g = g in Z/2 gives ({0,1}, max), still a
    // monoid, so the laws hold. In Z/3 the same kind of edit breaks them.
    let z3 = cyclic_group(3);
    let g1 = z3.morphism_named("g1")?;
    let broken = z3.with_comp_entry(g1, g1, Some(g1));
    let report = check_category(&broken);
    println!(
        "Z/3 with g1 . g1 = g1: {} violation(s)",
        report.violations.len()
    );
    if let Some(v) = report.first() {
        println!("  first: {v}");
    }
    Ok(())
}
