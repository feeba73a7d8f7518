//! Exhaustive enumeration of distributive laws and of strict lifts, and the
//! comparison between the two lists.
//!
//! Both searches are plain backtracking over index tuples in lexicographic
//! order; a constraint is evaluated as soon as every variable it mentions is
//! assigned. The strict-lift search never calls [`lift_from_law`], so the two
//! counts are independent.

use std::sync::Arc;

use serde::Serialize;

use crate::action::{check_action, MonoidalAction};
use crate::category::{commutes, MorId, ObjId};
use crate::error::{Error, Result};
use crate::monad::{em_category, EMCategory, Monad};
use crate::report::{Law, Report, Violation};

use super::lift::{law_from_lift, lift_from_law, LiftedAction};
use super::{check_distlaw, index_pairs, law_endpoints, DistributiveLaw};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Caps {
    /// Bound on `|Ob M| * |Ob C|`.
    pub index: usize,
    /// Bound on every candidate hom-set.
    pub hom: usize,
    /// Bound on the number of Eilenberg-Moore objects.
    pub em: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            index: 16,
            hom: 8,
            em: 32,
        }
    }
}

fn cap(what: &str, value: usize, cap: usize) -> Result<()> {
    if value > cap {
        Err(Error::CapExceeded {
            what: what.into(),
            value,
            cap,
        })
    } else {
        Ok(())
    }
}

#[derive(Debug, Clone, Copy)]
enum LawConstraint {
    NatM { f: MorId, q: ObjId },
    NatQ { g: MorId, m: ObjId },
    D1 { m: ObjId, q: ObjId },
    D2 { m: ObjId, q: ObjId, q2: ObjId },
}

struct LawSearch<'a> {
    action: &'a MonoidalAction,
    monad: &'a Monad,
    k: usize,
    domains: Vec<Vec<MorId>>,
    /// Constraints grouped by the largest variable they mention.
    due: Vec<Vec<LawConstraint>>,
    assign: Vec<MorId>,
    found: Vec<Vec<MorId>>,
}

impl LawSearch<'_> {
    fn var(&self, m: ObjId, q: ObjId) -> usize {
        m.0 * self.k + q.0
    }

    fn vars(&self, c: LawConstraint) -> Vec<usize> {
        let (a, t) = (self.action, self.monad);
        match c {
            LawConstraint::NatM { f, q } => {
                vec![self.var(a.cat.source(f), q), self.var(a.cat.target(f), q)]
            }
            LawConstraint::NatQ { g, m } => {
                vec![self.var(m, a.c().source(g)), self.var(m, a.c().target(g))]
            }
            LawConstraint::D1 { m, q } => vec![self.var(m, q), self.var(t.t(m), q)],
            LawConstraint::D2 { m, q, q2 } => vec![
                self.var(m, a.monoidal.t(q, q2)),
                self.var(m, q),
                self.var(a.o(m, q), q2),
            ],
        }
    }

    fn holds(&self, c: LawConstraint) -> bool {
        let (a, t) = (self.action, self.monad);
        let cat = &a.cat;
        let l = |m: ObjId, q: ObjId| self.assign[self.var(m, q)];
        match c {
            LawConstraint::NatM { f, q } => {
                let (m, n) = (cat.source(f), cat.target(f));
                commutes(
                    cat,
                    &[l(n, q), t.tm(a.al(f, q))],
                    &[a.al(t.tm(f), q), l(m, q)],
                )
            }
            LawConstraint::NatQ { g, m } => {
                let (q, q2) = (a.c().source(g), a.c().target(g));
                commutes(
                    cat,
                    &[l(m, q2), t.tm(a.ar(m, g))],
                    &[a.ar(t.t(m), g), l(m, q)],
                )
            }
            LawConstraint::D1 { m, q } => commutes(
                cat,
                &[a.al(t.mu_at(m), q), l(t.t(m), q), t.tm(l(m, q))],
                &[l(m, q), t.mu_at(a.o(m, q))],
            ),
            LawConstraint::D2 { m, q, q2 } => commutes(
                cat,
                &[a.psi_at(t.t(m), q, q2), l(m, a.monoidal.t(q, q2))],
                &[
                    a.al(l(m, q), q2),
                    l(a.o(m, q), q2),
                    t.tm(a.psi_at(m, q, q2)),
                ],
            ),
        }
    }

    fn run(&mut self, v: usize) {
        if v == self.domains.len() {
            self.found.push(self.assign.clone());
            return;
        }
        for idx in 0..self.domains[v].len() {
            self.assign[v] = self.domains[v][idx];
            if self.due[v].iter().all(|&c| self.holds(c)) {
                self.run(v + 1);
            }
        }
    }
}

/// Every family of components passing [`check_distlaw`], in lexicographic
/// order of the component table.
pub fn enumerate_laws(
    action: &Arc<MonoidalAction>,
    monad: &Arc<Monad>,
    caps: Caps,
) -> Result<Vec<DistributiveLaw>> {
    let (a, t) = (&**action, &**monad);
    let cat = &a.cat;
    let k = a.monoidal.num_objects();
    cap("index count", cat.num_objects() * k, caps.index)?;
    let c = &a.monoidal;
    let mut domains = Vec::new();
    for (m, q) in index_pairs(a) {
        let (s, tg) = law_endpoints(a, t, m, q);
        let hom = cat.hom(s, tg);
        cap("candidate hom-set size", hom.len(), caps.hom)?;
        let dom = hom
            .iter()
            .copied()
            .filter(|&l| {
                let d3 = !t.is_unital()
                    || commutes(cat, &[l, t.eta_at(a.o(m, q))], &[a.al(t.eta_at(m), q)]);
                let d4 = q != c.unit || commutes(cat, &[l, t.tm(a.u_at(m))], &[a.u_at(t.t(m))]);
                d3 && d4
            })
            .collect();
        domains.push(dom);
    }
    let mut search = LawSearch {
        action: a,
        monad: t,
        k,
        due: vec![Vec::new(); domains.len()],
        assign: vec![MorId(0); domains.len()],
        domains,
        found: Vec::new(),
    };
    let mut constraints = Vec::new();
    for q in c.base.objects() {
        constraints.extend(cat.morphisms().map(|f| LawConstraint::NatM { f, q }));
    }
    for m in cat.objects() {
        constraints.extend(c.base.morphisms().map(|g| LawConstraint::NatQ { g, m }));
        for q in c.base.objects() {
            constraints.push(LawConstraint::D1 { m, q });
            constraints.extend(c.base.objects().map(|q2| LawConstraint::D2 { m, q, q2 }));
        }
    }
    for con in constraints {
        let last = search.vars(con).into_iter().max().unwrap_or(0);
        search.due[last].push(con);
    }
    search.run(0);
    let mut laws = Vec::new();
    for comps in search.found {
        let l = DistributiveLaw::new(action.clone(), monad.clone(), comps)?;
        if check_distlaw(&l).is_pass() {
            laws.push(l);
        }
    }
    Ok(laws)
}

struct LiftSearch<'a> {
    action: &'a MonoidalAction,
    em: &'a EMCategory,
    k: usize,
    domains: Vec<Vec<ObjId>>,
    /// Pairs `(f~, g)` grouped by the larger of their two variables.
    mor_due: Vec<Vec<(MorId, MorId)>>,
    assign: Vec<Option<ObjId>>,
    found: Vec<Vec<ObjId>>,
}

impl LiftSearch<'_> {
    fn get(&self, i: ObjId, q: ObjId) -> Option<ObjId> {
        self.assign[i.0 * self.k + q.0]
    }

    fn mor_ok(&self, f: MorId, g: MorId) -> bool {
        let (e, c) = (&self.em.base, self.action.c());
        let from = self.get(e.source(f), c.source(g));
        let to = self.get(e.target(f), c.target(g));
        match (from, to) {
            (Some(x), Some(y)) => {
                let under = self.action.a(self.em.underlying[f.0], g);
                self.em.morphism_between(x, y, under).is_some()
            }
            _ => true,
        }
    }

    /// `psi~` at `(i, q, q2)` must exist once its three entries are known;
    /// the third entry depends on the choice at `(i, q)`.
    fn psi_ok(&self, i: ObjId, q: ObjId, q2: ObjId) -> bool {
        let c = &self.action.monoidal;
        let Some(mid) = self.get(i, q) else {
            return true;
        };
        let (Some(from), Some(to)) = (self.get(i, c.t(q, q2)), self.get(mid, q2)) else {
            return true;
        };
        let under = self.action.psi_at(self.em.module(i).carrier, q, q2);
        self.em.morphism_between(from, to, under).is_some()
    }

    fn run(&mut self, v: usize) {
        if v == self.domains.len() {
            self.found
                .push(self.assign.iter().map(|x| x.expect("complete")).collect());
            return;
        }
        let c = &self.action.monoidal;
        let (i, q) = (ObjId(v / self.k), ObjId(v % self.k));
        for idx in 0..self.domains[v].len() {
            self.assign[v] = Some(self.domains[v][idx]);
            let unit_ok = q != c.unit || {
                let under = self.action.u_at(self.em.module(i).carrier);
                self.em
                    .morphism_between(i, self.domains[v][idx], under)
                    .is_some()
            };
            let ok = unit_ok
                && self.mor_due[v].iter().all(|&(f, g)| self.mor_ok(f, g))
                && self.em.base.objects().all(|j| {
                    c.base
                        .objects()
                        .all(|a| c.base.objects().all(|b| self.psi_ok(j, a, b)))
                });
            if ok {
                self.run(v + 1);
            }
        }
        self.assign[v] = None;
    }
}

/// Every action on the Eilenberg-Moore category that `U` carries strictly
/// onto `action`, found by choosing, for each module `X` and object `Q`, a
/// module structure on `U(X) <> Q`.
pub fn enumerate_strict_lifts(
    action: &Arc<MonoidalAction>,
    monad: &Arc<Monad>,
    caps: Caps,
) -> Result<Vec<LiftedAction>> {
    let em = build_em(action, monad, caps)?;
    enumerate_strict_lifts_in(action, &em)
}

fn build_em(action: &MonoidalAction, monad: &Arc<Monad>, caps: Caps) -> Result<Arc<EMCategory>> {
    cap(
        "index count",
        action.cat.num_objects() * action.monoidal.num_objects(),
        caps.index,
    )?;
    let em = em_category(monad)?;
    cap("Eilenberg-Moore object count", em.num_modules(), caps.em)?;
    Ok(Arc::new(em))
}

fn enumerate_strict_lifts_in(
    action: &Arc<MonoidalAction>,
    em: &Arc<EMCategory>,
) -> Result<Vec<LiftedAction>> {
    let k = action.monoidal.num_objects();
    let e = &em.base;
    let c = action.c();
    let mut domains = Vec::new();
    for i in e.objects() {
        for q in c.objects() {
            domains.push(em.modules_on(action.o(em.module(i).carrier, q)));
        }
    }
    let mut mor_due = vec![Vec::new(); domains.len()];
    for f in e.morphisms() {
        for g in c.morphisms() {
            let a = e.source(f).0 * k + c.source(g).0;
            let b = e.target(f).0 * k + c.target(g).0;
            mor_due[a.max(b)].push((f, g));
        }
    }
    let mut search = LiftSearch {
        action,
        em,
        k,
        assign: vec![None; domains.len()],
        domains,
        mor_due,
        found: Vec::new(),
    };
    search.run(0);
    let mut lifts = Vec::new();
    for table in search.found {
        let Ok(lift) = LiftedAction::from_object_table(action.clone(), em.clone(), table) else {
            continue;
        };
        if lift.strict_witness.is_pass() && check_action(&lift.tilde).is_pass() {
            lifts.push(lift);
        }
    }
    Ok(lifts)
}

/// Outcome of comparing the two enumerations.
#[derive(Debug, Clone)]
pub struct BijectionReport {
    pub laws: Vec<DistributiveLaw>,
    pub lifts: Vec<LiftedAction>,
    /// `Roundtrip` violations; empty iff the correspondence is verified.
    pub report: Report,
}

impl BijectionReport {
    pub fn law_count(&self) -> usize {
        self.laws.len()
    }

    pub fn lift_count(&self) -> usize {
        self.lifts.len()
    }

    pub fn is_verified(&self) -> bool {
        self.report.is_pass()
    }
}

/// Enumerates both sides and checks equal counts, both roundtrip identities,
/// and that each construction lands in the other side's list.
pub fn verify_bijection(
    action: &Arc<MonoidalAction>,
    monad: &Arc<Monad>,
    caps: Caps,
) -> Result<BijectionReport> {
    let laws = enumerate_laws(action, monad, caps)?;
    let em = build_em(action, monad, caps)?;
    let lifts = enumerate_strict_lifts_in(action, &em)?;
    let mut report = Report::new();
    if laws.len() != lifts.len() {
        report.push(
            Violation::new(Law::Roundtrip, "law and lift counts differ")
                .with("laws", laws.len().to_string())
                .with("lifts", lifts.len().to_string()),
        );
    }
    for (n, l) in laws.iter().enumerate() {
        let lift = match lift_from_law(l, &em) {
            Ok(lift) => lift,
            Err(err) => {
                report.push(
                    Violation::new(Law::Roundtrip, err.to_string()).with("law", n.to_string()),
                );
                continue;
            }
        };
        if law_from_lift(&lift).ok().as_ref() != Some(l) {
            report.push(
                Violation::new(Law::Roundtrip, "law_from_lift(lift_from_law(l)) != l")
                    .with("law", n.to_string()),
            );
        }
        if !lifts.contains(&lift) {
            report.push(
                Violation::new(Law::Roundtrip, "lift of law not among enumerated lifts")
                    .with("law", n.to_string()),
            );
        }
    }
    for (n, lift) in lifts.iter().enumerate() {
        let back = law_from_lift(lift).and_then(|l| lift_from_law(&l, &em).map(|x| (l, x)));
        match back {
            Ok((l, again)) => {
                if again != *lift {
                    report.push(
                        Violation::new(Law::Roundtrip, "lift_from_law(law_from_lift(L)) != L")
                            .with("lift", n.to_string()),
                    );
                }
                if !laws.contains(&l) {
                    report.push(
                        Violation::new(Law::Roundtrip, "law of lift not among enumerated laws")
                            .with("lift", n.to_string()),
                    );
                }
            }
            Err(err) => report
                .push(Violation::new(Law::Roundtrip, err.to_string()).with("lift", n.to_string())),
        }
    }
    Ok(BijectionReport {
        laws,
        lifts,
        report,
    })
}
