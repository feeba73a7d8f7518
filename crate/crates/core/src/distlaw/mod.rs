//! Distributive laws between a monoidal action and a monad.
//!
//! A law is a family `l^Q_M : T(M<>Q) -> TM<>Q`, natural in both variables,
//! subject to four diagrams: compatibility with `mu` (D1), with `psi` (D2),
//! with `eta` (D3) and with `u` (D4). [`lift`] turns laws into actions on
//! the Eilenberg-Moore category and back; [`enumerate`] searches both sides
//! exhaustively.

pub mod enumerate;
pub mod lift;

use std::sync::Arc;

use crate::action::MonoidalAction;
use crate::category::{commutes, MorId, ObjId};
use crate::error::{Error, Result};
use crate::functor::same_cat;
use crate::monad::Monad;
use crate::report::{Law, Report, Violation};

pub use enumerate::{
    enumerate_laws, enumerate_strict_lifts, verify_bijection, BijectionReport, Caps,
};
pub use lift::{
    check_lift_lemmas, check_lifted_structure, check_strict_lift, check_unlift_lemmas,
    law_from_lift, lift_from_law, LiftedAction,
};

#[derive(Debug, Clone)]
pub struct DistributiveLaw {
    pub action: Arc<MonoidalAction>,
    pub monad: Arc<Monad>,
    /// `components[m * k + q] = l^Q_M`.
    pub components: Vec<MorId>,
}

impl PartialEq for DistributiveLaw {
    fn eq(&self, other: &Self) -> bool {
        self.components == other.components
            && (Arc::ptr_eq(&self.action, &other.action) || self.action == other.action)
            && (Arc::ptr_eq(&self.monad, &other.monad) || self.monad == other.monad)
    }
}

impl Eq for DistributiveLaw {}

impl DistributiveLaw {
    pub fn new(
        action: Arc<MonoidalAction>,
        monad: Arc<Monad>,
        components: Vec<MorId>,
    ) -> Result<Self> {
        if !same_cat(&action.cat, monad.cat()) {
            return Err(Error::Malformed(
                "action and monad live on different categories".into(),
            ));
        }
        let n = action.cat.num_objects() * action.monoidal.num_objects();
        if components.len() != n || components.iter().any(|m| m.0 >= action.cat.num_morphisms()) {
            return Err(Error::Malformed(
                "law component table has the wrong shape".into(),
            ));
        }
        Ok(DistributiveLaw {
            action,
            monad,
            components,
        })
    }

    /// Identity components; well typed only when `T(M<>Q) = TM<>Q`.
    pub fn identity(action: Arc<MonoidalAction>, monad: Arc<Monad>) -> Result<Self> {
        let comps = index_pairs(&action)
            .map(|(m, q)| action.cat.id(monad.t(action.o(m, q))))
            .collect();
        DistributiveLaw::new(action, monad, comps)
    }

    /// Every component is the unique morphism of its type.
    pub fn unique(action: Arc<MonoidalAction>, monad: Arc<Monad>) -> Result<Self> {
        let comps = index_pairs(&action)
            .map(|(m, q)| {
                let (s, t) = law_endpoints(&action, &monad, m, q);
                action.cat.unique_morphism(s, t, "law component")
            })
            .collect::<Result<_>>()?;
        DistributiveLaw::new(action, monad, comps)
    }

    pub fn at(&self, m: ObjId, q: ObjId) -> MorId {
        self.components[m.0 * self.action.monoidal.num_objects() + q.0]
    }

    pub fn with_component(&self, m: ObjId, q: ObjId, value: MorId) -> Self {
        let mut out = self.clone();
        let k = out.action.monoidal.num_objects();
        out.components[m.0 * k + q.0] = value;
        out
    }
}

/// `(M, Q)` pairs in lexicographic order.
pub(crate) fn index_pairs(action: &MonoidalAction) -> impl Iterator<Item = (ObjId, ObjId)> + '_ {
    let k = action.monoidal.num_objects();
    action
        .cat
        .objects()
        .flat_map(move |m| (0..k).map(move |q| (m, ObjId(q))))
}

/// `(T(M<>Q), TM<>Q)`.
pub fn law_endpoints(action: &MonoidalAction, monad: &Monad, m: ObjId, q: ObjId) -> (ObjId, ObjId) {
    (monad.t(action.o(m, q)), action.o(monad.t(m), q))
}

/// Reports every index `(M, Q)` whose candidate hom-set is empty, so that no
/// family of components can exist at all.
pub fn law_existence(action: &MonoidalAction, monad: &Monad) -> Report {
    let mut report = Report::new();
    let cat = &action.cat;
    for (m, q) in index_pairs(action) {
        let (s, t) = law_endpoints(action, monad, m, q);
        if cat.hom(s, t).is_empty() {
            report.push(
                Violation::new(Law::NonExistent, "no morphism T(M<>Q) -> TM<>Q")
                    .with("M", cat.object_name(m))
                    .with("Q", action.c().object_name(q))
                    .with("source", cat.object_name(s))
                    .with("target", cat.object_name(t)),
            );
        }
    }
    report
}

pub fn check_distlaw(l: &DistributiveLaw) -> Report {
    let (action, t) = (&*l.action, &*l.monad);
    let cat = &action.cat;
    let c = &action.monoidal;
    let c_cat = &c.base;
    let mut report = Report::new();
    let wit = |v: Violation, m: ObjId, q: ObjId| {
        v.with("M", cat.object_name(m))
            .with("Q", c_cat.object_name(q))
    };
    for (m, q) in index_pairs(action) {
        let comp = l.at(m, q);
        let (s, tg) = law_endpoints(action, t, m, q);
        if cat.source(comp) != s || cat.target(comp) != tg {
            report.push(wit(
                Violation::new(Law::ComponentTyping, "l^Q_M is not T(M<>Q) -> TM<>Q"),
                m,
                q,
            ));
        }
    }
    if !report.is_pass() {
        return report;
    }

    for f in cat.morphisms() {
        let (m, n) = (cat.source(f), cat.target(f));
        for q in c_cat.objects() {
            let lhs = [l.at(n, q), t.tm(action.al(f, q))];
            let rhs = [action.al(t.tm(f), q), l.at(m, q)];
            if !commutes(cat, &lhs, &rhs) {
                report.push(
                    Violation::new(Law::Naturality, "l not natural in M")
                        .with("f", cat.morphism_name(f))
                        .with("Q", c_cat.object_name(q)),
                );
            }
        }
    }
    for g in c_cat.morphisms() {
        let (q, q2) = (c_cat.source(g), c_cat.target(g));
        for m in cat.objects() {
            let lhs = [l.at(m, q2), t.tm(action.ar(m, g))];
            let rhs = [action.ar(t.t(m), g), l.at(m, q)];
            if !commutes(cat, &lhs, &rhs) {
                report.push(
                    Violation::new(Law::Naturality, "l not natural in Q")
                        .with("g", c_cat.morphism_name(g))
                        .with("M", cat.object_name(m)),
                );
            }
        }
    }

    let unital = t.is_unital();
    for (m, q) in index_pairs(action) {
        let tm = t.t(m);
        // D1: (mu_M <> Q) . l^Q_{TM} . T(l^Q_M) = l^Q_M . mu_{M<>Q}
        let lhs = [action.al(t.mu_at(m), q), l.at(tm, q), t.tm(l.at(m, q))];
        let rhs = [l.at(m, q), t.mu_at(action.o(m, q))];
        if !commutes(cat, &lhs, &rhs) {
            report.push(wit(
                Violation::new(Law::D1, "compatibility with mu fails"),
                m,
                q,
            ));
        }
        // D2: psi_{TM} . l^{Q(x)Q'}_M = (l^Q_M <> Q') . l^{Q'}_{M<>Q} . T(psi_M)
        for q2 in c_cat.objects() {
            let lhs = [action.psi_at(tm, q, q2), l.at(m, c.t(q, q2))];
            let rhs = [
                action.al(l.at(m, q), q2),
                l.at(action.o(m, q), q2),
                t.tm(action.psi_at(m, q, q2)),
            ];
            if !commutes(cat, &lhs, &rhs) {
                report.push(
                    wit(
                        Violation::new(Law::D2, "compatibility with psi fails"),
                        m,
                        q,
                    )
                    .with("Q'", c_cat.object_name(q2)),
                );
            }
        }
        // D3: l^Q_M . eta_{M<>Q} = eta_M <> Q
        if unital
            && !commutes(
                cat,
                &[l.at(m, q), t.eta_at(action.o(m, q))],
                &[action.al(t.eta_at(m), q)],
            )
        {
            report.push(wit(
                Violation::new(Law::D3, "compatibility with eta fails"),
                m,
                q,
            ));
        }
    }
    // D4: l^1_M . T(u_M) = u_{TM}
    for m in cat.objects() {
        let lhs = [l.at(m, c.unit), t.tm(action.u_at(m))];
        if !commutes(cat, &lhs, &[action.u_at(t.t(m))]) {
            report.push(
                Violation::new(Law::D4, "compatibility with u fails").with("M", cat.object_name(m)),
            );
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;
    use crate::monad::em_category;

    fn arcs(a: MonoidalAction, t: Monad) -> (Arc<MonoidalAction>, Arc<Monad>) {
        (Arc::new(a), Arc::new(t))
    }

    #[test]
    fn identity_monad_identity_law() {
        let (a, t) = instances::max_action(3, 2, &[0, 1])
            .map(|a| {
                let cat = a.cat.clone();
                (a, Monad::identity(cat))
            })
            .unwrap();
        let (a, t) = arcs(a, t);
        let l = DistributiveLaw::identity(a.clone(), t.clone()).unwrap();
        assert!(check_distlaw(&l).is_pass());
        let laws = enumerate_laws(&a, &t, Caps::default()).unwrap();
        assert_eq!(laws, vec![l]);
    }

    #[test]
    fn const_top_max_unique_law() {
        let a = instances::max_action(2, 2, &[0, 1]).unwrap();
        let t = instances::const_top(a.cat.clone());
        let (a, t) = arcs(a, t);
        let l = DistributiveLaw::unique(a.clone(), t.clone()).unwrap();
        assert!(check_distlaw(&l).is_pass());
        let em = Arc::new(em_category(&t).unwrap());
        assert_eq!(em.num_modules(), 1);
        let lift = lift_from_law(&l, &em).unwrap();
        assert!(lift.strict_witness.is_pass());
        assert_eq!(lift.object_table(), &[ObjId(0), ObjId(0)]);
        assert_eq!(law_from_lift(&lift).unwrap(), l);
    }

    #[test]
    fn min_action_has_no_law() {
        let a = instances::min_action(2, 2).unwrap();
        let t = instances::const_top(a.cat.clone());
        let r = law_existence(&a, &t);
        assert!(r.has(Law::NonExistent));
        let v = r.first().unwrap();
        assert!(v.witness.contains(&("Q".to_owned(), "0".to_owned())));
        let (a, t) = arcs(a, t);
        assert!(enumerate_laws(&a, &t, Caps::default()).unwrap().is_empty());
        assert!(enumerate_strict_lifts(&a, &t, Caps::default())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn set_like_bijections() {
        let (sets, a) = instances::product_action();
        let cases = vec![
            (a.clone(), instances::support_monad(&sets), 1),
            (a, instances::const_one(&sets), 0),
            {
                let (sets, a) = instances::swap_action();
                (a, instances::const_one(&sets), 1)
            },
            {
                let (a, t) = instances::group_instance();
                (a, t, 1)
            },
        ];
        for (a, t, expected) in cases {
            let (a, t) = arcs(a, t);
            let b = verify_bijection(&a, &t, Caps::default()).unwrap();
            assert!(b.is_verified(), "{}", b.report);
            assert_eq!(b.law_count(), expected);
            assert_eq!(b.lift_count(), expected);
        }
    }

    #[test]
    fn caps_are_enforced() {
        let a = instances::max_action(4, 4, &[0, 1, 2, 3]).unwrap();
        let t = instances::const_top(a.cat.clone());
        let (a, t) = arcs(a, t);
        let small = Caps {
            index: 15,
            ..Caps::default()
        };
        assert!(matches!(
            enumerate_laws(&a, &t, small),
            Err(Error::CapExceeded { .. })
        ));
        let small = Caps {
            em: 0,
            ..Caps::default()
        };
        assert!(matches!(
            enumerate_strict_lifts(&a, &t, small),
            Err(Error::CapExceeded { .. })
        ));
    }
}
