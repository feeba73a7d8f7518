//! Exact linear algebra over small fields: bialgebras, comodules, module
//! algebras, and the distributive law between the comodule action and the
//! monad `A (x) -`.

pub mod field;
pub mod hopf;
pub mod law;
pub mod linmap;

pub use field::{Field, PrimeField, Rationals};
pub use hopf::{
    check_algebra, check_bialgebra, check_comodule, check_left_module, check_module_algebra,
    tensor_comodule, Algebra, BialgebraBundle, Comodule, LeftAModule, ModuleAlgebra,
};
pub use law::{
    canonical_law, check_lb_compatibility, check_lb_monad, check_lifted_action,
    check_linear_distlaw, check_tensor_monad, lb_module, lifted_action_map, CanonicalLaw,
    LawFamily,
};
pub use linmap::{permute_factors, swap, LinMap};

use crate::report::{Report, Violation};

/// Everything needed to run the linear checks end to end: a bialgebra, a
/// module algebra over it, a left module over that algebra, and named
/// comodules.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearBundle<F: Field> {
    pub bialgebra: BialgebraBundle<F>,
    pub algebra: ModuleAlgebra<F>,
    pub module: LeftAModule<F>,
    pub comodules: Vec<(String, Comodule<F>)>,
}

impl LinearBundle<PrimeField> {
    /// `B = F3[C2]`, `A = F3[x]/(x^2)` with `g |> x = -x`, `M = A`, and the
    /// comodules `B` (by `Delta`) and `k`.
    pub fn f3_example() -> Self {
        let f = PrimeField::new(3).expect("3 is prime");
        let b = BialgebraBundle::cyclic_group(&f, 2);
        let a = Algebra::truncated_polynomial(&f, 2);
        let action = LinMap::from_ints(&f, 2, 4, &[1, 0, 1, 0, 0, 1, 0, 2]);
        let algebra = ModuleAlgebra::new(&b, a.clone(), action).expect("shapes");
        LinearBundle {
            module: LeftAModule::regular(&a),
            comodules: vec![
                ("B".into(), Comodule::regular(&b)),
                ("k".into(), Comodule::trivial(&b)),
            ],
            bialgebra: b,
            algebra,
        }
    }
}

/// One named group of checks and its outcome.
#[derive(Debug, Clone)]
pub struct LinearCheck {
    pub name: String,
    pub report: Report,
}

/// Runs every structure check, then the law, lifted-action and `L_B`
/// checks for every ordered pair of comodules. Later checks are skipped when
/// an input structure fails.
pub fn run_linear_suite<F: Field>(bundle: &LinearBundle<F>) -> Vec<LinearCheck> {
    let b = &bundle.bialgebra;
    let alg = &bundle.algebra;
    let mut out = Vec::new();
    let mut push = |name: String, report: Report| {
        let ok = report.is_pass();
        out.push(LinearCheck { name, report });
        ok
    };
    let mut ok = push("bialgebra".into(), check_bialgebra(b));
    ok &= push("module-algebra".into(), check_module_algebra(b, alg));
    ok &= push(
        "module".into(),
        check_left_module(&alg.algebra, &bundle.module),
    );
    for (name, q) in &bundle.comodules {
        ok &= push(format!("comodule {name}"), check_comodule(b, q));
    }
    if !ok {
        let mut r = Report::new();
        r.push(Violation::new(
            crate::report::Law::Malformed,
            "input structures fail; law checks skipped",
        ));
        push("law".into(), r);
        return out;
    }
    push(
        "tensor-monad".into(),
        check_tensor_monad(&alg.algebra, bundle.module.dim),
    );
    let law = CanonicalLaw {
        bialgebra: b,
        algebra: alg,
    };
    for (n1, q1) in &bundle.comodules {
        for (n2, q2) in &bundle.comodules {
            push(
                format!("law V={} Q={n1} Q'={n2}", bundle.module.dim),
                check_linear_distlaw(&law, b, alg, bundle.module.dim, q1, q2),
            );
        }
        push(
            format!("lifted-action Q={n1}"),
            check_lifted_action(b, alg, &bundle.module, q1),
        );
    }
    push("lb-monad".into(), check_lb_monad(b, alg, &bundle.module));
    let (n, right) = lb_module(b, alg, &bundle.module);
    push(
        "lb-compatibility".into(),
        check_lb_compatibility(b, alg, &n, &right),
    );
    out
}
