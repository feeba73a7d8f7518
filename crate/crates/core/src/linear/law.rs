//! The distributive law of a comodule action over the monad `A (x) -`, and
//! the structures built from it.
//!
//! Here `T(V) = A (x) V`, `mu_V = m_A (x) V`, `eta_V = eta_A (x) V`, the
//! action is `V <> Q = V (x) Q`, and `psi`, `u` are the flat-index
//! identifications, so they appear as identity matrices.

use crate::report::{Law, Report, Violation};

use super::field::Field;
use super::hopf::{
    check_left_module, matrix_eq, tensor_comodule, Algebra, BialgebraBundle, Comodule, LeftAModule,
    ModuleAlgebra,
};
use super::linmap::{permute_factors, LinMap};

/// A family of maps `l^Q_V : A (x) V (x) Q -> A (x) V (x) Q`, indexed by the
/// dimension of `V` and the comodule `Q`.
pub trait LawFamily<F: Field> {
    fn component(&self, v_dim: usize, q: &Comodule<F>) -> LinMap<F>;
}

impl<F: Field, G: Fn(usize, &Comodule<F>) -> LinMap<F>> LawFamily<F> for G {
    fn component(&self, v_dim: usize, q: &Comodule<F>) -> LinMap<F> {
        self(v_dim, q)
    }
}

/// `a (x) v (x) q |-> sum (q1 |> a) (x) v (x) q0`.
pub fn canonical_law<F: Field>(
    b: &BialgebraBundle<F>,
    alg: &ModuleAlgebra<F>,
    v_dim: usize,
    q: &Comodule<F>,
) -> LinMap<F> {
    let f = b.field();
    let a = alg.dim();
    let (ia, iv, iq) = (
        LinMap::identity(f, a),
        LinMap::identity(f, v_dim),
        LinMap::identity(f, q.dim),
    );
    let coact = LinMap::kron_all(&[&ia, &iv, &q.coaction]);
    let bring_b_forward = permute_factors(f, &[a, v_dim, q.dim, b.dim], &[3, 0, 1, 2]);
    let act = LinMap::kron_all(&[&alg.action, &iv, &iq]);
    LinMap::chain(&[&act, &bring_b_forward, &coact])
}

#[derive(Debug, Clone, Copy)]
pub struct CanonicalLaw<'a, F: Field> {
    pub bialgebra: &'a BialgebraBundle<F>,
    pub algebra: &'a ModuleAlgebra<F>,
}

impl<F: Field> LawFamily<F> for CanonicalLaw<'_, F> {
    fn component(&self, v_dim: usize, q: &Comodule<F>) -> LinMap<F> {
        canonical_law(self.bialgebra, self.algebra, v_dim, q)
    }
}

/// Matrix forms of binaturality in `V` and of D1-D4 at `(V, Q)`, with `Q'`
/// supplying the second comodule for D2.
pub fn check_linear_distlaw<F: Field>(
    law: &dyn LawFamily<F>,
    b: &BialgebraBundle<F>,
    alg: &ModuleAlgebra<F>,
    v_dim: usize,
    q: &Comodule<F>,
    q2: &Comodule<F>,
) -> Report {
    let f = b.field();
    let a = alg.dim();
    let n = a * v_dim * q.dim;
    let mut report = Report::new();
    let l = law.component(v_dim, q);
    if l.rows() != n || l.cols() != n {
        report.push(Violation::new(
            Law::ComponentTyping,
            "l^Q_V is not A(x)V(x)Q -> A(x)V(x)Q",
        ));
        return report;
    }
    let id = |k: usize| LinMap::identity(f, k);
    let m_a = &alg.algebra.mult;
    let eta_a = &alg.algebra.unit;

    for i in 0..v_dim {
        for j in 0..v_dim {
            let mut e = LinMap::zeros(f, v_dim, v_dim);
            e.set(i, j, f.one());
            let t = LinMap::kron_all(&[&id(a), &e, &id(q.dim)]);
            if t.compose(&l) != l.compose(&t) {
                report.push(
                    Violation::new(Law::Naturality, "l not natural in V")
                        .with("row", i.to_string())
                        .with("col", j.to_string()),
                );
            }
        }
    }

    // D1: (mu_V (x) Q) . l^Q_{TV} . T(l^Q_V) = l^Q_V . mu_{V(x)Q}
    let l_tv = law.component(a * v_dim, q);
    let lhs = LinMap::chain(&[
        &LinMap::kron_all(&[m_a, &id(v_dim * q.dim)]),
        &l_tv,
        &id(a).kron(&l),
    ]);
    let rhs = l.compose(&m_a.kron(&id(v_dim * q.dim)));
    matrix_eq(&mut report, Law::D1, "compatibility with mu", &lhs, &rhs);

    // D2: l^{Q(x)Q'}_V = (l^Q_V (x) Q') . l^{Q'}_{V(x)Q}
    let qq = tensor_comodule(b, q, q2);
    let lhs = law.component(v_dim, &qq);
    let rhs = l
        .kron(&id(q2.dim))
        .compose(&law.component(v_dim * q.dim, q2));
    matrix_eq(&mut report, Law::D2, "compatibility with psi", &lhs, &rhs);

    // D3: l^Q_V . eta_{V(x)Q} = eta_V (x) Q
    let eta = eta_a.kron(&id(v_dim * q.dim));
    matrix_eq(
        &mut report,
        Law::D3,
        "compatibility with eta",
        &l.compose(&eta),
        &eta,
    );

    // D4: l^k_V = id
    let l_unit = law.component(v_dim, &Comodule::trivial(b));
    matrix_eq(
        &mut report,
        Law::D4,
        "compatibility with u",
        &l_unit,
        &id(a * v_dim),
    );
    report
}

/// The lifted action on `M (x) Q`:
/// `a (x) m (x) q |-> sum ((q1 |> a) |> m) (x) q0`, by direct summation over
/// structure constants.
pub fn lifted_action_map<F: Field>(
    b: &BialgebraBundle<F>,
    alg: &ModuleAlgebra<F>,
    m: &LeftAModule<F>,
    q: &Comodule<F>,
) -> LeftAModule<F> {
    let f = b.field();
    let (da, dm, dq, db) = (alg.dim(), m.dim, q.dim, b.dim);
    let mut act = LinMap::zeros(f, dm * dq, da * dm * dq);
    for i in 0..da {
        for j in 0..dm {
            for k in 0..dq {
                let col = (i * dm + j) * dq + k;
                for k2 in 0..dq {
                    for beta in 0..db {
                        let rho = q.coaction.get(k2 * db + beta, k);
                        if f.is_zero(rho) {
                            continue;
                        }
                        for i2 in 0..da {
                            let tri = alg.action.get(i2, beta * da + i);
                            if f.is_zero(tri) {
                                continue;
                            }
                            let coef = f.mul(rho, tri);
                            for j2 in 0..dm {
                                let nu = m.act.get(j2, i2 * dm + j);
                                if f.is_zero(nu) {
                                    continue;
                                }
                                let row = j2 * dq + k2;
                                let x = f.add(act.get(row, col), &f.mul(&coef, nu));
                                act.set(row, col, x);
                            }
                        }
                    }
                }
            }
        }
    }
    LeftAModule { dim: dm * dq, act }
}

/// The lifted module is a module and its structure map is
/// `(nu (x) Q) . l^Q_M`.
pub fn check_lifted_action<F: Field>(
    b: &BialgebraBundle<F>,
    alg: &ModuleAlgebra<F>,
    m: &LeftAModule<F>,
    q: &Comodule<F>,
) -> Report {
    let lifted = lifted_action_map(b, alg, m, q);
    let mut report = check_left_module(&alg.algebra, &lifted);
    let composite = m
        .act
        .kron(&LinMap::identity(b.field(), q.dim))
        .compose(&canonical_law(b, alg, m.dim, q));
    matrix_eq(
        &mut report,
        Law::LiftedStructure,
        "lifted action = (nu (x) Q) . l",
        &lifted.act,
        &composite,
    );
    report
}

/// Monad laws of `A (x) -` at `V`, as matrix identities.
pub fn check_tensor_monad<F: Field>(alg: &Algebra<F>, v_dim: usize) -> Report {
    let f = alg.field();
    let a = alg.dim;
    let iv = LinMap::identity(f, v_dim);
    let ia = LinMap::identity(f, a);
    let mu = alg.mult.kron(&iv);
    let mut report = Report::new();
    let lhs = mu.compose(&LinMap::kron_all(&[&ia, &alg.mult, &iv]));
    let rhs = mu.compose(&LinMap::kron_all(&[&alg.mult, &ia, &iv]));
    matrix_eq(
        &mut report,
        Law::MonadAssociativity,
        "mu . T(mu) = mu . mu_T",
        &lhs,
        &rhs,
    );
    let id = LinMap::identity(f, a * v_dim);
    let left = mu.compose(&LinMap::kron_all(&[&alg.unit, &ia, &iv]));
    let right = mu.compose(&LinMap::kron_all(&[&ia, &alg.unit, &iv]));
    matrix_eq(&mut report, Law::MonadUnit, "mu . eta_T = id", &left, &id);
    matrix_eq(&mut report, Law::MonadUnit, "mu . T(eta) = id", &right, &id);
    report
}

/// The module `(M (x) B, nu^B)` together with the right action
/// `id_M (x) m_B`.
pub fn lb_module<F: Field>(
    b: &BialgebraBundle<F>,
    alg: &ModuleAlgebra<F>,
    m: &LeftAModule<F>,
) -> (LeftAModule<F>, LinMap<F>) {
    let lifted = lifted_action_map(b, alg, m, &Comodule::regular(b));
    let right = LinMap::identity(b.field(), m.dim).kron(&b.mult);
    (lifted, right)
}

/// The monad `_ <~> B` on lifted modules: multiplication `id_M (x) m_B` and
/// unit `id_M (x) eta_B` are module maps and satisfy the monad laws.
pub fn check_lb_monad<F: Field>(
    b: &BialgebraBundle<F>,
    alg: &ModuleAlgebra<F>,
    m: &LeftAModule<F>,
) -> Report {
    let f = b.field();
    let reg = Comodule::regular(b);
    let (dm, db, da) = (m.dim, b.dim, alg.dim());
    let once = lifted_action_map(b, alg, m, &reg);
    let twice = lifted_action_map(b, alg, &once, &reg);
    let id = |k: usize| LinMap::identity(f, k);
    let mu = id(dm).kron(&b.mult);
    let eta = id(dm).kron(&b.unit);
    let mut report = Report::new();
    matrix_eq(
        &mut report,
        Law::ModuleMorphism,
        "id_M (x) m_B is a module map",
        &mu.compose(&twice.act),
        &once.act.compose(&id(da).kron(&mu)),
    );
    matrix_eq(
        &mut report,
        Law::ModuleMorphism,
        "id_M (x) eta_B is a module map",
        &eta.compose(&m.act),
        &once.act.compose(&id(da).kron(&eta)),
    );
    let lhs = mu.compose(&mu.kron(&id(db)));
    let rhs = mu.compose(&id(dm * db).kron(&b.mult));
    matrix_eq(
        &mut report,
        Law::MonadAssociativity,
        "mu . L(mu) = mu . mu_L",
        &lhs,
        &rhs,
    );
    let unit_l = mu.compose(&id(dm * db).kron(&b.unit));
    let unit_r = mu.compose(&LinMap::kron_all(&[&id(dm), &b.unit, &id(db)]));
    matrix_eq(
        &mut report,
        Law::MonadUnit,
        "mu . eta_L = id",
        &unit_l,
        &id(dm * db),
    );
    matrix_eq(
        &mut report,
        Law::MonadUnit,
        "mu . L(eta) = id",
        &unit_r,
        &id(dm * db),
    );
    report
}

/// Right `B`-module laws for `right`, and
/// `a |> (n <| h) = [(h2 |> a) |> n] <| h1`.
pub fn check_lb_compatibility<F: Field>(
    b: &BialgebraBundle<F>,
    alg: &ModuleAlgebra<F>,
    n: &LeftAModule<F>,
    right: &LinMap<F>,
) -> Report {
    let f = b.field();
    let (dn, db, da) = (n.dim, b.dim, alg.dim());
    let mut report = Report::new();
    if right.rows() != dn || right.cols() != dn * db {
        report.push(Violation::new(
            Law::Malformed,
            "right action has the wrong shape",
        ));
        return report;
    }
    let id = |k: usize| LinMap::identity(f, k);
    matrix_eq(
        &mut report,
        Law::ModuleAssociativity,
        "(n <| h) <| h' = n <| hh'",
        &right.compose(&right.kron(&id(db))),
        &right.compose(&id(dn).kron(&b.mult)),
    );
    matrix_eq(
        &mut report,
        Law::ModuleUnit,
        "n <| 1 = n",
        &right.compose(&id(dn).kron(&b.unit)),
        &id(dn),
    );
    let lhs = n.act.compose(&id(da).kron(right));
    let split = LinMap::kron_all(&[&id(da), &id(dn), &b.comult]);
    let shuffle = permute_factors(f, &[da, dn, db, db], &[3, 0, 1, 2]);
    let rhs = LinMap::chain(&[
        right,
        &n.act.kron(&id(db)),
        &LinMap::kron_all(&[&alg.action, &id(dn), &id(db)]),
        &shuffle,
        &split,
    ]);
    matrix_eq(
        &mut report,
        Law::Compatibility,
        "a |> (n <| h) = [(h2 |> a) |> n] <| h1",
        &lhs,
        &rhs,
    );
    report
}
