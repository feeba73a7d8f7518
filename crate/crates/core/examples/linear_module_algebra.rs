//! The linear picture: a bialgebra `B`, a `B`-module algebra `A`, and the
//! law `a (x) v (x) q |-> sum (q1 |> a) (x) v (x) q0` for the monad
//! `A (x) -` and the action `- (x) Q` of `B`-comodules.
//!
//! Runs the full suite on the F3 example, then repeats it over the
//! rationals with `Z/2` acting on `Q[x]/(x^2)` by `x |-> -x`, and finally
//! shows what a broken action does to the law.

use actlift::linear::{
    canonical_law, check_linear_distlaw, check_module_algebra, run_linear_suite, Algebra,
    BialgebraBundle, CanonicalLaw, Comodule, Field, LeftAModule, LinMap, LinearBundle,
    ModuleAlgebra, Rationals,
};
use actlift::Result;

fn print_suite<F: Field>(title: &str, bundle: &LinearBundle<F>) {
    println!("{title}");
    for c in run_linear_suite(bundle) {
        let status = if c.report.is_pass() { "ok" } else { "FAIL" };
        println!("  {status:<4} {}", c.name);
    }
}

fn main() -> Result<()> {
    let f3 = LinearBundle::f3_example();
    print_suite("B = F3[C2], A = F3[x]/(x^2), M = A", &f3);
    let (b, a) = (&f3.bialgebra, &f3.algebra);
    println!("law at V = M, Q = B (rows are the codomain):");
    print!(
        "{}",
        canonical_law(b, a, 2, &Comodule::regular(b)).to_text()
    );

    let q = Rationals;
    let b = BialgebraBundle::cyclic_group(&q, 2);
    let alg = Algebra::truncated_polynomial(&q, 2);
    let sign = LinMap::from_ints(&q, 2, 4, &[1, 0, 1, 0, 0, 1, 0, -1]);
    let a = ModuleAlgebra::new(&b, alg.clone(), sign)?;
    let bundle = LinearBundle {
        module: LeftAModule::free(&alg, 1),
        comodules: vec![
            ("B".into(), Comodule::regular(&b)),
            ("k".into(), Comodule::trivial(&b)),
        ],
        bialgebra: b.clone(),
        algebra: a,
    };
    print_suite("\nsame shape over Q, M = A (x) k", &bundle);

    // g |> x = 1: g no longer acts by an algebra map, nor squares to 1.
    let bad = ModuleAlgebra::new(
        &b,
        alg,
        LinMap::from_ints(&q, 2, 4, &[1, 0, 0, 1, 0, 1, 0, 0]),
    )?;
    println!(
        "\ng |> x = 1: module-algebra laws violated {:?}",
        check_module_algebra(&b, &bad).laws()
    );
    let law = CanonicalLaw {
        bialgebra: &b,
        algebra: &bad,
    };
    let reg = Comodule::regular(&b);
    let report = check_linear_distlaw(&law, &b, &bad, 1, &reg, &reg);
    println!("  and the law fails {:?}", report.laws());
    Ok(())
}
