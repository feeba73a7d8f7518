//! Strict lifts of an action to the Eilenberg-Moore category, and the two
//! constructions relating them to distributive laws.

use std::sync::Arc;

use crate::action::{CFunctor, MonoidalAction};
use crate::category::{commutes, ObjId};
use crate::error::{Error, Result};
use crate::functor::{same_cat, Bifunctor};
use crate::monad::{check_tmodule, is_module_map, EMCategory, TModule};
use crate::report::{Law, Report, Violation};

use super::{check_distlaw, index_pairs, DistributiveLaw};

/// An action on the Eilenberg-Moore category together with the action it
/// is meant to lift.
#[derive(Debug, Clone)]
pub struct LiftedAction {
    pub tilde: Arc<MonoidalAction>,
    pub em: Arc<EMCategory>,
    pub base_action: Arc<MonoidalAction>,
    /// Result of [`check_strict_lift`] at construction; empty when `U` is a
    /// strict C-functor.
    pub strict_witness: Report,
}

impl PartialEq for LiftedAction {
    fn eq(&self, other: &Self) -> bool {
        self.tilde == other.tilde
    }
}

impl Eq for LiftedAction {}

impl LiftedAction {
    /// Builds the lifted action from its object table
    /// `table[i * k + q] = module_i <~> Q`. A strict lift along the faithful
    /// forgetful functor has no other freedom: each morphism, `psi~` and `u~`
    /// component is the unique module map over the corresponding base
    /// morphism.
    pub fn from_object_table(
        base_action: Arc<MonoidalAction>,
        em: Arc<EMCategory>,
        table: Vec<ObjId>,
    ) -> Result<Self> {
        let c = base_action.monoidal.clone();
        let k = c.num_objects();
        let e = em.base.clone();
        if table.len() != e.num_objects() * k || table.iter().any(|x| x.0 >= e.num_objects()) {
            return Err(Error::Malformed(
                "lift object table has the wrong shape".into(),
            ));
        }
        let obj = |i: ObjId, q: ObjId| table[i.0 * k + q.0];
        let missing = |what: &str, i: ObjId| {
            Error::Malformed(format!(
                "{what} at `{}` is not a module map",
                e.object_name(i)
            ))
        };
        let act = Bifunctor::from_fn(e.clone(), c.base.clone(), e.clone(), obj, |f, g| {
            let (s, t) = (e.source(f), e.target(f));
            let under = base_action.a(em.underlying[f.0], g);
            em.morphism_between(obj(s, c.base.source(g)), obj(t, c.base.target(g)), under)
                .ok_or_else(|| missing("action on a morphism", s))
        })?;
        let mut psi = Vec::with_capacity(e.num_objects() * k * k);
        let mut unit_u = Vec::with_capacity(e.num_objects());
        for i in e.objects() {
            let carrier = em.module(i).carrier;
            for q in c.base.objects() {
                for q2 in c.base.objects() {
                    let from = obj(i, c.t(q, q2));
                    let to = obj(obj(i, q), q2);
                    let under = base_action.psi_at(carrier, q, q2);
                    psi.push(
                        em.morphism_between(from, to, under)
                            .ok_or_else(|| missing("psi", i))?,
                    );
                }
            }
            let under = base_action.u_at(carrier);
            unit_u.push(
                em.morphism_between(i, obj(i, c.unit), under)
                    .ok_or_else(|| missing("u", i))?,
            );
        }
        let tilde = MonoidalAction::new(c, e, act, psi, unit_u)?;
        let strict_witness = check_strict_lift(&tilde, &em, &base_action);
        Ok(LiftedAction {
            tilde: Arc::new(tilde),
            em,
            base_action,
            strict_witness,
        })
    }

    pub fn object_table(&self) -> &[ObjId] {
        self.tilde.act.obj_table()
    }

    /// `U` with identity comparison, as a C-functor into the base action.
    pub fn forgetful_c_functor(&self) -> CFunctor {
        CFunctor::strict(
            self.tilde.clone(),
            self.base_action.clone(),
            self.em.forgetful.clone(),
        )
    }
}

/// The lifted module structure `nu^Q = (nu <> Q) . l^Q_M`.
pub fn lifted_module(l: &DistributiveLaw, module: &TModule, q: ObjId) -> Result<TModule> {
    let a = &l.action;
    let nu = a.cat.compose(a.al(module.nu, q), l.at(module.carrier, q))?;
    Ok(TModule {
        carrier: a.o(module.carrier, q),
        nu,
    })
}

/// Strict lift induced by a distributive law: `(M,nu) <~> Q = (M<>Q, nu^Q)`.
pub fn lift_from_law(l: &DistributiveLaw, em: &Arc<EMCategory>) -> Result<LiftedAction> {
    if !Arc::ptr_eq(&em.monad, &l.monad) && *em.monad != *l.monad {
        return Err(Error::LawInvalid(
            "Eilenberg-Moore category of a different monad".into(),
        ));
    }
    let report = check_distlaw(l);
    if let Some(v) = report.first() {
        return Err(Error::LawInvalid(v.to_string()));
    }
    let k = l.action.monoidal.num_objects();
    let mut table = Vec::with_capacity(em.num_modules() * k);
    for i in em.base.objects() {
        let module = em.module(i);
        for q in l.action.c().objects() {
            let lifted =
                lifted_module(l, &module, q).map_err(|e| Error::LawInvalid(e.to_string()))?;
            let id = em.module_id(&lifted).ok_or_else(|| {
                Error::LawInvalid(format!(
                    "lifted structure on `{}` is not a module",
                    l.action.cat.object_name(lifted.carrier)
                ))
            })?;
            table.push(id);
        }
    }
    LiftedAction::from_object_table(l.action.clone(), em.clone(), table)
        .map_err(|e| Error::LawInvalid(e.to_string()))
}

/// Distributive law recovered from a strict lift:
/// `l^Q_M = U(eps_{FM <~> Q}) . T(eta_M <> Q)`.
pub fn law_from_lift(lift: &LiftedAction) -> Result<DistributiveLaw> {
    let em = &lift.em;
    let t = &em.monad;
    let base = &lift.base_action;
    let cat = t.cat();
    let mut comps = Vec::new();
    for (m, q) in index_pairs(base) {
        let z = lift.tilde.o(em.free_id(m), q);
        let hat_mu = em.forgetful.mor(em.counit.at(z));
        let first = t.tm(base.al(t.eta_at(m), q));
        comps.push(cat.compose(hat_mu, first)?);
    }
    DistributiveLaw::new(base.clone(), t.clone(), comps)
}

/// The equalities making `U` a strict C-functor: on objects and morphisms
/// `U(X <~> Q) = U(X) <> Q`, and `U(u~) = u`, `U(psi~) = psi`.
pub fn check_strict_lift(
    candidate: &MonoidalAction,
    em: &EMCategory,
    base: &MonoidalAction,
) -> Report {
    let mut report = Report::new();
    if !same_cat(&candidate.cat, &em.base) {
        report.push(Violation::new(
            Law::StrictLift,
            "candidate does not act on the Eilenberg-Moore category",
        ));
        return report;
    }
    if !(Arc::ptr_eq(&candidate.monoidal, &base.monoidal) || candidate.monoidal == base.monoidal) {
        report.push(Violation::new(
            Law::StrictLift,
            "candidate is over a different monoidal category",
        ));
        return report;
    }
    let (e, u) = (&em.base, &em.forgetful);
    let c_cat = &base.monoidal.base;
    for i in e.objects() {
        for q in c_cat.objects() {
            if u.obj(candidate.o(i, q)) != base.o(u.obj(i), q) {
                report.push(
                    Violation::new(Law::StrictLift, "U(X <~> Q) != U(X) <> Q")
                        .with("X", e.object_name(i))
                        .with("Q", c_cat.object_name(q)),
                );
            }
            for q2 in c_cat.objects() {
                if u.mor(candidate.psi_at(i, q, q2)) != base.psi_at(u.obj(i), q, q2) {
                    report.push(
                        Violation::new(Law::StrictLift, "U(psi~) != psi")
                            .with("X", e.object_name(i))
                            .with("Q", c_cat.object_name(q))
                            .with("Q'", c_cat.object_name(q2)),
                    );
                }
            }
        }
        if u.mor(candidate.u_at(i)) != base.u_at(u.obj(i)) {
            report.push(Violation::new(Law::StrictLift, "U(u~) != u").with("X", e.object_name(i)));
        }
    }
    if !report.is_pass() {
        return report;
    }
    for f in e.morphisms() {
        for g in c_cat.morphisms() {
            if u.mor(candidate.a(f, g)) != base.a(u.mor(f), g) {
                report.push(
                    Violation::new(Law::StrictLift, "U(f <~> g) != U(f) <> g")
                        .with("f", e.morphism_name(f))
                        .with("g", c_cat.morphism_name(g)),
                );
            }
        }
    }
    report
}

/// For every module `(M, nu)`: the structure of `(M,nu) <~> Q` equals
/// `(nu <> Q) . l^Q_M`.
pub fn check_lifted_structure(lift: &LiftedAction, l: &DistributiveLaw) -> Report {
    let mut report = Report::new();
    let (em, base) = (&lift.em, &lift.base_action);
    let cat = &base.cat;
    for i in em.base.objects() {
        let module = em.module(i);
        for q in base.c().objects() {
            let hat = em.module(lift.tilde.o(i, q)).nu;
            let formula = cat
                .compose(base.al(module.nu, q), l.at(module.carrier, q))
                .ok();
            if formula != Some(hat) {
                report.push(
                    Violation::new(
                        Law::LiftedStructure,
                        "lifted structure differs from (nu <> Q) . l^Q_M",
                    )
                    .with("module", em.base.object_name(i))
                    .with("Q", base.c().object_name(q)),
                );
            }
        }
    }
    report
}

/// Lemmas of the law-to-lift direction, checked directly on module
/// structures: lifted modules are modules, `f <> Q` is a module map, and
/// `u_M`, `psi_M` are module maps between the lifted modules.
pub fn check_lift_lemmas(l: &DistributiveLaw, em: &EMCategory) -> Report {
    let t = &*l.monad;
    let a = &*l.action;
    let c = &a.monoidal;
    let mut report = Report::new();
    let lifted = |m: &TModule, q: ObjId| lifted_module(l, m, q).ok();
    for i in em.base.objects() {
        let module = em.module(i);
        let name = em.base.object_name(i);
        for q in c.base.objects() {
            let qn = c.base.object_name(q);
            let Some(mq) = lifted(&module, q) else {
                report.push(
                    Violation::new(Law::LiftedModule, "nu^Q undefined")
                        .with("module", name)
                        .with("Q", qn),
                );
                continue;
            };
            let r = check_tmodule(t, &mq);
            if !r.is_pass() {
                report.push(
                    Violation::new(Law::LiftedModule, "(M<>Q, nu^Q) is not a module")
                        .with("module", name)
                        .with("Q", qn),
                );
            }
            for q2 in c.base.objects() {
                let from = lifted(&module, c.t(q, q2));
                let to = lifted(&mq, q2);
                let ok = match (from, to) {
                    (Some(from), Some(to)) => {
                        is_module_map(t, a.psi_at(module.carrier, q, q2), &from, &to)
                    }
                    _ => false,
                };
                if !ok {
                    report.push(
                        Violation::new(
                            Law::ModuleMorphism,
                            "psi is not a module map between lifted modules",
                        )
                        .with("module", name)
                        .with("Q", qn)
                        .with("Q'", c.base.object_name(q2)),
                    );
                }
            }
        }
        let ok = lifted(&module, c.unit)
            .is_some_and(|to| is_module_map(t, a.u_at(module.carrier), &module, &to));
        if !ok {
            report.push(
                Violation::new(Law::ModuleMorphism, "u_M is not a module map").with("module", name),
            );
        }
    }
    for f in em.base.morphisms() {
        let (from, to) = (em.module(em.base.source(f)), em.module(em.base.target(f)));
        for q in c.base.objects() {
            let ok = match (lifted(&from, q), lifted(&to, q)) {
                (Some(x), Some(y)) => is_module_map(t, a.al(em.underlying[f.0], q), &x, &y),
                _ => false,
            };
            if !ok {
                report.push(
                    Violation::new(Law::ModuleMorphism, "f <> Q is not a module map")
                        .with("f", em.base.morphism_name(f))
                        .with("Q", c.base.object_name(q)),
                );
            }
        }
    }
    report
}

/// Lemmas of the lift-to-law direction: the recovered family is a
/// distributive law (naturality and D1-D4), the lifted structure maps factor
/// through the law, and the adjunction triangle used for D3 holds at every
/// `FM <~> Q`.
pub fn check_unlift_lemmas(lift: &LiftedAction) -> Report {
    let mut report = Report::new();
    let l = match law_from_lift(lift) {
        Ok(l) => l,
        Err(e) => {
            report.push(Violation::new(Law::Malformed, e.to_string()));
            return report;
        }
    };
    report.extend(check_distlaw(&l));
    report.extend(check_lifted_structure(lift, &l));
    let em = &lift.em;
    let t = &em.monad;
    let cat = t.cat();
    for (m, q) in index_pairs(&lift.base_action) {
        let z = lift.tilde.o(em.free_id(m), q);
        let uz = em.forgetful.obj(z);
        let eps = em.forgetful.mor(em.counit.at(z));
        if !commutes(cat, &[eps, t.eta_at(uz)], &[cat.id(uz)]) {
            report.push(
                Violation::new(
                    Law::AdjunctionTriangle,
                    "U(eps_Z) . eta_UZ != id at Z = FM <~> Q",
                )
                .with("M", cat.object_name(m))
                .with("Q", lift.base_action.c().object_name(q)),
            );
        }
    }
    report
}
