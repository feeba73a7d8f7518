//! Right actions of a monoidal category on a category, C-functors, and the
//! monads induced by monoid objects.

use std::sync::Arc;

use crate::category::{commutes, FinCategory, MorId, ObjId};
use crate::error::{Error, Result};
use crate::functor::{check_bifunctor, check_nat_trans, same_cat, Bifunctor, Functor, NatTrans};
use crate::monad::Monad;
use crate::monoidal::{MonoidObject, MonoidalCategory};
use crate::report::{Law, Report, Violation};

/// `(M, act, psi, u)` with `act : M x C -> M`,
/// `psi^{X,Y}_M : M<>(X (x) Y) -> (M<>X)<>Y` and `u_M : M -> M<>1`.
#[derive(Debug, Clone)]
pub struct MonoidalAction {
    pub monoidal: Arc<MonoidalCategory>,
    pub cat: Arc<FinCategory>,
    pub act: Bifunctor,
    /// `psi[(m * k + x) * k + y]`, `k = |Ob C|`.
    pub psi: Vec<MorId>,
    pub unit_u: Vec<MorId>,
}

impl PartialEq for MonoidalAction {
    fn eq(&self, other: &Self) -> bool {
        self.psi == other.psi
            && self.unit_u == other.unit_u
            && self.act == other.act
            && (Arc::ptr_eq(&self.monoidal, &other.monoidal) || self.monoidal == other.monoidal)
    }
}

impl Eq for MonoidalAction {}

impl MonoidalAction {
    pub fn new(
        monoidal: Arc<MonoidalCategory>,
        cat: Arc<FinCategory>,
        act: Bifunctor,
        psi: Vec<MorId>,
        unit_u: Vec<MorId>,
    ) -> Result<Self> {
        if !same_cat(&act.left, &cat)
            || !same_cat(&act.cod, &cat)
            || !same_cat(&act.right, &monoidal.base)
        {
            return Err(Error::Malformed(
                "action bifunctor must be M x C -> M".into(),
            ));
        }
        let (nm, k) = (cat.num_objects(), monoidal.num_objects());
        if psi.len() != nm * k * k || unit_u.len() != nm {
            return Err(Error::Malformed(
                "action coherence tables have the wrong size".into(),
            ));
        }
        if psi
            .iter()
            .chain(&unit_u)
            .any(|m| m.0 >= cat.num_morphisms())
        {
            return Err(Error::Malformed(
                "action coherence component out of range".into(),
            ));
        }
        Ok(MonoidalAction {
            monoidal,
            cat,
            act,
            psi,
            unit_u,
        })
    }

    /// Strict action: `psi` and `u` are identities (typing checked later).
    pub fn strict(
        monoidal: Arc<MonoidalCategory>,
        cat: Arc<FinCategory>,
        act: Bifunctor,
    ) -> Result<Self> {
        let mut psi = Vec::new();
        for m in cat.objects() {
            for x in monoidal.base.objects() {
                for y in monoidal.base.objects() {
                    psi.push(cat.id(act.obj(m, monoidal.t(x, y))));
                }
            }
        }
        let unit_u = cat.objects().map(|m| cat.id(m)).collect();
        MonoidalAction::new(monoidal, cat, act, psi, unit_u)
    }

    pub fn c(&self) -> &FinCategory {
        &self.monoidal.base
    }

    /// `M <> Q`.
    pub fn o(&self, m: ObjId, q: ObjId) -> ObjId {
        self.act.obj(m, q)
    }

    /// `f <> g`.
    pub fn a(&self, f: MorId, g: MorId) -> MorId {
        self.act.mor(f, g)
    }

    /// `f <> Q`.
    pub fn al(&self, f: MorId, q: ObjId) -> MorId {
        self.act.mor_left(f, q)
    }

    /// `M <> g`.
    pub fn ar(&self, m: ObjId, g: MorId) -> MorId {
        self.act.mor_right(m, g)
    }

    fn pidx(&self, m: ObjId, x: ObjId, y: ObjId) -> usize {
        let k = self.monoidal.num_objects();
        (m.0 * k + x.0) * k + y.0
    }

    pub fn psi_at(&self, m: ObjId, x: ObjId, y: ObjId) -> MorId {
        self.psi[self.pidx(m, x, y)]
    }

    pub fn u_at(&self, m: ObjId) -> MorId {
        self.unit_u[m.0]
    }

    pub fn psi_inverse(&self, m: ObjId, x: ObjId, y: ObjId) -> Result<MorId> {
        let p = self.psi_at(m, x, y);
        self.cat
            .inverse(p)
            .ok_or_else(|| Error::NotInvertible(self.cat.morphism_name(p).to_owned()))
    }

    pub fn with_psi(&self, m: ObjId, x: ObjId, y: ObjId, value: MorId) -> Self {
        let mut out = self.clone();
        let i = out.pidx(m, x, y);
        out.psi[i] = value;
        out
    }

    pub fn with_u(&self, m: ObjId, value: MorId) -> Self {
        let mut out = self.clone();
        out.unit_u[m.0] = value;
        out
    }

    pub fn with_act(&self, act: Bifunctor) -> Self {
        MonoidalAction {
            act,
            ..self.clone()
        }
    }
}

pub fn check_action(action: &MonoidalAction) -> Report {
    let mut report = check_bifunctor(&action.act);
    if !report.is_pass() {
        return report;
    }
    let (m_cat, c) = (&action.cat, &action.monoidal);
    let c_cat = &c.base;
    let one = c.unit;
    let ms: Vec<ObjId> = m_cat.objects().collect();
    let qs: Vec<ObjId> = c_cat.objects().collect();
    let mname = |m: ObjId| m_cat.object_name(m).to_owned();
    let qname = |q: ObjId| c_cat.object_name(q).to_owned();

    for &m in &ms {
        for &x in &qs {
            for &y in &qs {
                let p = action.psi_at(m, x, y);
                if m_cat.source(p) != action.o(m, c.t(x, y))
                    || m_cat.target(p) != action.o(action.o(m, x), y)
                {
                    report.push(
                        Violation::new(Law::ComponentTyping, "psi component has wrong endpoints")
                            .with("M", mname(m))
                            .with("X", qname(x))
                            .with("Y", qname(y)),
                    );
                }
            }
        }
        let u = action.u_at(m);
        if m_cat.source(u) != m || m_cat.target(u) != action.o(m, one) {
            report.push(
                Violation::new(Law::ComponentTyping, "u_M is not M -> M<>1").with("M", mname(m)),
            );
        }
    }
    if !report.is_pass() {
        return report;
    }

    for (i, &p) in action.psi.iter().chain(&action.unit_u).enumerate() {
        if !m_cat.is_iso(p) {
            let family = if i < action.psi.len() { "psi" } else { "u" };
            report.push(
                Violation::new(
                    Law::Isomorphism,
                    "action coherence component is not invertible",
                )
                .with("family", family)
                .with("component", m_cat.morphism_name(p)),
            );
        }
    }

    // naturality of psi in M, X, Y separately, and of u in M
    for f in m_cat.morphisms() {
        let (s, t) = (m_cat.source(f), m_cat.target(f));
        for &x in &qs {
            for &y in &qs {
                let lhs = [action.psi_at(t, x, y), action.al(f, c.t(x, y))];
                let rhs = [action.al(action.al(f, x), y), action.psi_at(s, x, y)];
                if !commutes(m_cat, &lhs, &rhs) {
                    report.push(
                        Violation::new(Law::Naturality, "psi not natural in M")
                            .with("f", m_cat.morphism_name(f))
                            .with("X", qname(x))
                            .with("Y", qname(y)),
                    );
                }
            }
        }
        if !commutes(
            m_cat,
            &[action.u_at(t), f],
            &[action.al(f, one), action.u_at(s)],
        ) {
            report.push(
                Violation::new(Law::Naturality, "u not natural").with("f", m_cat.morphism_name(f)),
            );
        }
    }
    for g in c_cat.morphisms() {
        let (s, t) = (c_cat.source(g), c_cat.target(g));
        for &m in &ms {
            for &y in &qs {
                let id_y = c_cat.id(y);
                // slot X
                let lhs = [action.psi_at(m, t, y), action.ar(m, c.tm(g, id_y))];
                let rhs = [action.al(action.ar(m, g), y), action.psi_at(m, s, y)];
                if !commutes(m_cat, &lhs, &rhs) {
                    report.push(
                        Violation::new(Law::Naturality, "psi not natural in X")
                            .with("g", c_cat.morphism_name(g))
                            .with("M", mname(m))
                            .with("Y", qname(y)),
                    );
                }
                // slot Y (here y plays X)
                let lhs = [action.psi_at(m, y, t), action.ar(m, c.tm(id_y, g))];
                let rhs = [action.ar(action.o(m, y), g), action.psi_at(m, y, s)];
                if !commutes(m_cat, &lhs, &rhs) {
                    report.push(
                        Violation::new(Law::Naturality, "psi not natural in Y")
                            .with("g", c_cat.morphism_name(g))
                            .with("M", mname(m))
                            .with("X", qname(y)),
                    );
                }
            }
        }
    }

    for &m in &ms {
        for &x in &qs {
            for &y in &qs {
                for &z in &qs {
                    let Ok(a_inv) = c.assoc_inverse(x, y, z) else {
                        report.push(
                            Violation::new(
                                Law::Isomorphism,
                                "associator of the acting category is not invertible",
                            )
                            .with("X", qname(x))
                            .with("Y", qname(y))
                            .with("Z", qname(z)),
                        );
                        continue;
                    };
                    let lhs = [
                        action.al(action.psi_at(m, x, y), z),
                        action.psi_at(m, c.t(x, y), z),
                        action.ar(m, a_inv),
                    ];
                    let rhs = [
                        action.psi_at(action.o(m, x), y, z),
                        action.psi_at(m, x, c.t(y, z)),
                    ];
                    if !commutes(m_cat, &lhs, &rhs) {
                        report.push(
                            Violation::new(Law::ActionPentagon, "action pentagon does not commute")
                                .with("M", mname(m))
                                .with("X", qname(x))
                                .with("Y", qname(y))
                                .with("Z", qname(z)),
                        );
                    }
                }
            }
            let q = x;
            // psi^{1,Q}_M . (M <> lambda_Q) = u_M <> Q
            if !commutes(
                m_cat,
                &[action.psi_at(m, one, q), action.ar(m, c.lunit_at(q))],
                &[action.al(action.u_at(m), q)],
            ) {
                report.push(
                    Violation::new(Law::ActionUnit, "unit triangle through lambda fails")
                        .with("M", mname(m))
                        .with("Q", qname(q)),
                );
            }
            // psi^{Q,1}_M . (M <> rho_Q) = u_{M<>Q}
            if !commutes(
                m_cat,
                &[action.psi_at(m, q, one), action.ar(m, c.runit_at(q))],
                &[action.u_at(action.o(m, q))],
            ) {
                report.push(
                    Violation::new(Law::ActionUnit, "unit triangle through rho fails")
                        .with("M", mname(m))
                        .with("Q", qname(q)),
                );
            }
        }
    }
    report
}

/// A monoidal category acting on its own underlying category by the tensor.
pub fn self_action(c: &Arc<MonoidalCategory>) -> MonoidalAction {
    MonoidalAction {
        monoidal: c.clone(),
        cat: c.base.clone(),
        act: c.tensor.clone(),
        psi: c.assoc.clone(),
        unit_u: c.runit.clone(),
    }
}

/// The endofunctor `_ <> Q`.
pub fn curry_action(action: &MonoidalAction, q: ObjId) -> Result<Functor> {
    if q.0 >= action.monoidal.num_objects() {
        return Err(Error::UnknownObject(format!("#{}", q.0)));
    }
    Ok(action.act.fix_right(q))
}

/// `psi^{Q,Q'}` as a transformation `_<>(Q (x) Q') => (_<>Q)<>Q'`.
pub fn psi_transformation(action: &MonoidalAction, q: ObjId, q2: ObjId) -> Result<NatTrans> {
    let source = curry_action(action, action.monoidal.t(q, q2))?;
    let target = curry_action(action, q2)?.after(&curry_action(action, q)?)?;
    let components = action
        .cat
        .objects()
        .map(|m| action.psi_at(m, q, q2))
        .collect();
    NatTrans::new(source, target, components)
}

/// `u` as a transformation `Id => _<>1`.
pub fn unit_transformation(action: &MonoidalAction) -> Result<NatTrans> {
    let target = curry_action(action, action.monoidal.unit)?;
    NatTrans::new(
        Functor::identity(action.cat.clone()),
        target,
        action.unit_u.clone(),
    )
}

/// A functor `F : source.cat -> target.cat` between two categories acted on
/// by the same monoidal category, with `zeta_{M,Q} : F(M)<>Q -> F(M<~>Q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CFunctor {
    pub source: Arc<MonoidalAction>,
    pub target: Arc<MonoidalAction>,
    pub functor: Functor,
    /// `zeta[m * k + q]`.
    pub zeta: Vec<MorId>,
}

impl CFunctor {
    /// Identity comparison: `zeta_{M,Q} = id_{F(M<~>Q)}`.
    pub fn strict(
        source: Arc<MonoidalAction>,
        target: Arc<MonoidalAction>,
        functor: Functor,
    ) -> Self {
        let mut zeta = Vec::new();
        for m in source.cat.objects() {
            for q in source.c().objects() {
                zeta.push(target.cat.id(functor.obj(source.o(m, q))));
            }
        }
        CFunctor {
            source,
            target,
            functor,
            zeta,
        }
    }

    pub fn zeta_at(&self, m: ObjId, q: ObjId) -> MorId {
        self.zeta[m.0 * self.source.monoidal.num_objects() + q.0]
    }

    pub fn is_strict(&self) -> bool {
        self.zeta.iter().all(|&z| self.target.cat.is_identity(z))
    }

    pub fn with_zeta(&self, m: ObjId, q: ObjId, value: MorId) -> Self {
        let mut out = self.clone();
        let k = out.source.monoidal.num_objects();
        out.zeta[m.0 * k + q.0] = value;
        out
    }
}

pub fn check_c_functor(cf: &CFunctor) -> Report {
    let (src, tgt, f) = (&cf.source, &cf.target, &cf.functor);
    let mut report = Report::new();
    if !(Arc::ptr_eq(&src.monoidal, &tgt.monoidal) || src.monoidal == tgt.monoidal) {
        report.push(Violation::new(
            Law::Malformed,
            "actions are over different monoidal categories",
        ));
        return report;
    }
    let (sm, tm) = (&src.cat, &tgt.cat);
    let c = &src.monoidal;
    let c_cat = &c.base;
    let qs: Vec<ObjId> = c_cat.objects().collect();
    for m in sm.objects() {
        for &q in &qs {
            let z = cf.zeta_at(m, q);
            if tm.source(z) != tgt.o(f.obj(m), q) || tm.target(z) != f.obj(src.o(m, q)) {
                report.push(
                    Violation::new(Law::ComponentTyping, "zeta component has wrong endpoints")
                        .with("M", sm.object_name(m))
                        .with("Q", c_cat.object_name(q)),
                );
            } else if !tm.is_iso(z) {
                report.push(
                    Violation::new(Law::Isomorphism, "zeta component is not invertible")
                        .with("M", sm.object_name(m))
                        .with("Q", c_cat.object_name(q)),
                );
            }
        }
    }
    if !report.is_pass() {
        return report;
    }
    // binaturality
    for h in sm.morphisms() {
        let (s, t) = (sm.source(h), sm.target(h));
        for &q in &qs {
            if !commutes(
                tm,
                &[cf.zeta_at(t, q), tgt.al(f.mor(h), q)],
                &[f.mor(src.al(h, q)), cf.zeta_at(s, q)],
            ) {
                report.push(
                    Violation::new(Law::Naturality, "zeta not natural in M")
                        .with("h", sm.morphism_name(h))
                        .with("Q", c_cat.object_name(q)),
                );
            }
        }
    }
    for g in c_cat.morphisms() {
        let (s, t) = (c_cat.source(g), c_cat.target(g));
        for m in sm.objects() {
            if !commutes(
                tm,
                &[cf.zeta_at(m, t), tgt.ar(f.obj(m), g)],
                &[f.mor(src.ar(m, g)), cf.zeta_at(m, s)],
            ) {
                report.push(
                    Violation::new(Law::Naturality, "zeta not natural in Q")
                        .with("g", c_cat.morphism_name(g))
                        .with("M", sm.object_name(m)),
                );
            }
        }
    }
    for m in sm.objects() {
        let fm = f.obj(m);
        // zeta_{M,1} . u_{F(M)} = F(u~_M)
        if !commutes(
            tm,
            &[cf.zeta_at(m, c.unit), tgt.u_at(fm)],
            &[f.mor(src.u_at(m))],
        ) {
            report.push(
                Violation::new(Law::CFunctorUnit, "unit triangle fails")
                    .with("M", sm.object_name(m)),
            );
        }
        for &q in &qs {
            for &q2 in &qs {
                let lhs = [
                    cf.zeta_at(src.o(m, q), q2),
                    tgt.al(cf.zeta_at(m, q), q2),
                    tgt.psi_at(fm, q, q2),
                ];
                let rhs = [f.mor(src.psi_at(m, q, q2)), cf.zeta_at(m, c.t(q, q2))];
                if !commutes(tm, &lhs, &rhs) {
                    report.push(
                        Violation::new(Law::CFunctorHexagon, "psi compatibility fails")
                            .with("M", sm.object_name(m))
                            .with("Q", c_cat.object_name(q))
                            .with("Q'", c_cat.object_name(q2)),
                    );
                }
            }
        }
    }
    report
}

/// The monad `_ <> B` induced by a monoid object `B`, with
/// `mu_M = (M <> m) . (psi^{B,B}_M)^{-1}` and `eta_M = (M <> e) . u_M`.
pub fn monad_from_monoid(action: &MonoidalAction, b: &MonoidObject) -> Result<Monad> {
    let cat = &action.cat;
    let functor = curry_action(action, b.carrier)?;
    let mut mu = Vec::new();
    let mut eta = Vec::new();
    for m in cat.objects() {
        let inv = action.psi_inverse(m, b.carrier, b.carrier)?;
        mu.push(cat.compose(action.ar(m, b.mult), inv)?);
        eta.push(cat.compose(action.ar(m, b.unit_mor), action.u_at(m))?);
    }
    let tt = functor.after(&functor)?;
    let mu = NatTrans::new(tt, functor.clone(), mu)?;
    let eta = NatTrans::new(Functor::identity(cat.clone()), functor.clone(), eta)?;
    Monad::new(functor, mu, Some(eta))
}

/// Checks that `psi^{Q,Q'}` is a natural isomorphism for every pair.
pub fn check_psi_transformations(action: &MonoidalAction) -> Report {
    let mut report = Report::new();
    let c_cat = action.c();
    for q in c_cat.objects() {
        for q2 in c_cat.objects() {
            match psi_transformation(action, q, q2) {
                Ok(t) => report.extend(check_nat_trans(&t)),
                Err(e) => report.push(Violation::new(Law::Malformed, e.to_string())),
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distlaw::{lift_from_law, DistributiveLaw};
    use crate::functor::check_nat_trans;
    use crate::instances::{
        chain, const_top, cyclic_monoidal, discrete_cyclic_monoidal, group_instance, max_action,
        max_monoidal, min_monoidal, product_action, swap_action,
    };
    use crate::monad::em_category;
    use crate::monoidal::MonoidObject;

    #[test]
    fn self_actions_pass() {
        for c in [
            max_monoidal(3),
            min_monoidal(2),
            cyclic_monoidal(2),
            discrete_cyclic_monoidal(3),
        ] {
            let a = self_action(&Arc::new(c));
            assert!(check_action(&a).is_pass(), "{}", check_action(&a));
            assert!(check_psi_transformations(&a).is_pass());
        }
    }

    #[test]
    fn max_action_on_chain() {
        let a = max_action(2, 2, &[0, 1]).unwrap();
        assert!(check_action(&a).is_pass());
        let l1 = curry_action(&a, ObjId(1)).unwrap();
        assert_eq!(l1.obj(ObjId(0)), ObjId(1));
        assert_eq!(l1.obj(ObjId(1)), ObjId(1));
    }

    #[test]
    fn set_like_actions_pass() {
        assert!(check_action(&product_action().1).is_pass());
        assert!(check_action(&swap_action().1).is_pass());
        assert!(check_action(&group_instance().0).is_pass());
    }

    #[test]
    fn non_invertible_unit_fails() {
        let (sets, a) = swap_action();
        let two = sets.object_of_size(2).unwrap();
        let collapse = sets.function(two, two, &[0, 0]).unwrap();
        let report = check_action(&a.with_u(two, collapse));
        assert!(!report.is_pass());
        assert!(report.has(Law::Isomorphism), "{report}");
    }

    #[test]
    fn unit_is_natural_iso_to_identity() {
        let (_, a) = product_action();
        let u = unit_transformation(&a).unwrap();
        assert!(check_nat_trans(&u).is_pass());
        assert!(u.components.iter().all(|&m| a.cat.is_iso(m)));
    }

    #[test]
    fn identity_and_forgetful_c_functors() {
        let a = Arc::new(max_action(3, 3, &[0, 1, 2]).unwrap());
        let id = CFunctor::strict(a.clone(), a.clone(), Functor::identity(a.cat.clone()));
        assert!(check_c_functor(&id).is_pass());

        let t = Arc::new(const_top(a.cat.clone()));
        let em = Arc::new(em_category(&t).unwrap());
        let l = DistributiveLaw::unique(a.clone(), t).unwrap();
        let lift = lift_from_law(&l, &em).unwrap();
        let u = lift.forgetful_c_functor();
        assert!(u.is_strict());
        assert!(check_c_functor(&u).is_pass());
    }

    #[test]
    fn perturbed_zeta_fails() {
        let (sets, a) = swap_action();
        let a = Arc::new(a);
        let id = CFunctor::strict(a.clone(), a.clone(), Functor::identity(a.cat.clone()));
        let two = sets.object_of_size(2).unwrap();
        let flip = sets.function(two, two, &[1, 0]).unwrap();
        assert!(!check_c_functor(&id.with_zeta(two, ObjId(0), flip)).is_pass());
    }

    #[test]
    fn monads_from_monoids() {
        let c = Arc::new(max_monoidal(2));
        let a = self_action(&c);
        let trivial = monad_from_monoid(&a, &MonoidObject::trivial(&c).unwrap()).unwrap();
        assert_eq!(trivial.functor, Functor::identity(a.cat.clone()));
        assert!(crate::monad::check_monad(&trivial).is_pass());

        let top = monad_from_monoid(&a, &MonoidObject::unique(&c, ObjId(1)).unwrap()).unwrap();
        assert_eq!(top, const_top(Arc::new(chain(2))));
    }
}
