//! Monoidal structures on chains and on Z/n, monoid objects in them, and
//! what the pentagon and triangle checks say when a structure map is
//! replaced.

use actlift::category::ObjId;
use actlift::instances::{cyclic_monoidal, discrete_cyclic_monoidal, max_monoidal, min_monoidal};
use actlift::monoidal::{check_monoid, check_monoidal, MonoidObject, MonoidalCategory};

fn monoids(name: &str, c: &MonoidalCategory) {
    let cat = &c.base;
    let mut found = Vec::new();
    for b in cat.objects() {
        for &m in cat.hom(c.t(b, b), b) {
            for &e in cat.hom(c.unit, b) {
                let monoid = MonoidObject::new(c, b, m, e).expect("endpoints fit");
                if check_monoid(c, &monoid).is_pass() {
                    found.push(format!(
                        "({}, {}, {})",
                        cat.object_name(b),
                        cat.morphism_name(m),
                        cat.morphism_name(e)
                    ));
                }
            }
        }
    }
    println!(
        "{name:<18} coherent: {:<5} monoids: {}",
        check_monoidal(c).is_pass(),
        found.join(" ")
    );
}

fn main() {
    monoids("chain 3, max", &max_monoidal(3));
    monoids("chain 3, min", &min_monoidal(3));
    monoids("Z/3 (one object)", &cyclic_monoidal(3));
    monoids("Z/3 (discrete)", &discrete_cyclic_monoidal(3));

    // With one object every associator is an element of the group. The
    // generator is still natural, but the pentagon needs a.a = a.a.a.
    let c = cyclic_monoidal(2);
    let x = ObjId(0);
    let g = c.base.morphism_named("g1").expect("generator");
    let bent = c.with_assoc(x, x, x, g);
    let report = check_monoidal(&bent);
    println!(
        "\nZ/2 with associator g1: {} violation(s)",
        report.violations.len()
    );
    for v in report.violations.iter().take(3) {
        println!("  {v}");
    }

    // the triangle alone, by moving the right unitor
    let bent = c.with_runit(x, g);
    println!(
        "Z/2 with right unitor g1: laws violated {:?}",
        check_monoidal(&bent).laws()
    );

    // The trivial monoid lives on the unit of any monoidal category.
    let min = min_monoidal(3);
    let trivial = MonoidObject::trivial(&min).expect("unitor is invertible");
    println!(
        "trivial monoid of (chain 3, min) sits on {}",
        min.base.object_name(trivial.carrier)
    );
}
