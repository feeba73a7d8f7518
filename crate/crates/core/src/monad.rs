//! Monads on a finite category, their modules, and the Eilenberg-Moore
//! category with its forgetful and free functors and counit.

use std::collections::HashMap;
use std::sync::Arc;

use crate::category::{commutes, opposite, FinCategory, MorId, MorphismData, ObjId};
use crate::error::{Error, Result};
use crate::functor::{check_functor, check_nat_trans, Functor, NatTrans};
use crate::report::{Law, Report, Violation};

/// Hard limit on the number of base morphisms for module enumeration.
pub const MAX_BASE_MORPHISMS: usize = 64;

/// `(T, mu, eta)`; `eta` is absent for a nonunital monad.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monad {
    pub functor: Functor,
    pub mu: NatTrans,
    pub eta: Option<NatTrans>,
}

impl Monad {
    pub fn new(functor: Functor, mu: NatTrans, eta: Option<NatTrans>) -> Result<Self> {
        if !functor.is_endo() {
            return Err(Error::IncompatibleFunctors(
                "monad functor must be an endofunctor".into(),
            ));
        }
        let tt = functor.after(&functor)?;
        if mu.source != tt || mu.target != functor {
            return Err(Error::IncompatibleFunctors("mu must be T.T => T".into()));
        }
        if let Some(eta) = &eta {
            if eta.source != Functor::identity(functor.dom.clone()) || eta.target != functor {
                return Err(Error::IncompatibleFunctors("eta must be Id => T".into()));
            }
        }
        Ok(Monad { functor, mu, eta })
    }

    /// Builds `T`, `mu` and `eta` from tables of morphism ids.
    pub fn from_tables(functor: Functor, mu: Vec<MorId>, eta: Option<Vec<MorId>>) -> Result<Self> {
        let cat = functor.dom.clone();
        let tt = functor.after(&functor)?;
        let mu = NatTrans::new(tt, functor.clone(), mu)?;
        let eta = eta
            .map(|e| NatTrans::new(Functor::identity(cat), functor.clone(), e))
            .transpose()?;
        Monad::new(functor, mu, eta)
    }

    pub fn identity(cat: Arc<FinCategory>) -> Self {
        let id = Functor::identity(cat);
        let tt = id.after(&id).expect("identity composes");
        let comps: Vec<MorId> = id.dom.objects().map(|x| id.dom.id(x)).collect();
        Monad {
            mu: NatTrans {
                source: tt,
                target: id.clone(),
                components: comps.clone(),
            },
            eta: Some(NatTrans {
                source: id.clone(),
                target: id.clone(),
                components: comps,
            }),
            functor: id,
        }
    }

    /// Monad on a thin category given by its object map; every structure map
    /// is the unique morphism of its type. On a poset this succeeds exactly
    /// for closure operators.
    pub fn thin(cat: Arc<FinCategory>, obj_map: Vec<ObjId>) -> Result<Self> {
        let functor = Functor::from_object_map_thin(cat.clone(), cat.clone(), obj_map)?;
        let mu = cat
            .objects()
            .map(|x| {
                let tx = functor.obj(x);
                cat.unique_morphism(functor.obj(tx), tx, "mu")
            })
            .collect::<Result<Vec<_>>>()?;
        let eta = cat
            .objects()
            .map(|x| cat.unique_morphism(x, functor.obj(x), "eta"))
            .collect::<Result<Vec<_>>>()?;
        Monad::from_tables(functor, mu, Some(eta))
    }

    pub fn cat(&self) -> &Arc<FinCategory> {
        &self.functor.dom
    }

    pub fn is_unital(&self) -> bool {
        self.eta.is_some()
    }

    pub fn t(&self, x: ObjId) -> ObjId {
        self.functor.obj(x)
    }

    pub fn tm(&self, f: MorId) -> MorId {
        self.functor.mor(f)
    }

    pub fn mu_at(&self, x: ObjId) -> MorId {
        self.mu.at(x)
    }

    /// # Panics
    /// On a nonunital monad.
    pub fn eta_at(&self, x: ObjId) -> MorId {
        self.eta.as_ref().expect("monad has a unit").at(x)
    }

    pub fn nonunital(&self) -> Monad {
        Monad {
            eta: None,
            ..self.clone()
        }
    }

    pub fn with_mu(&self, x: ObjId, m: MorId) -> Self {
        Monad {
            mu: self.mu.with_component(x, m),
            ..self.clone()
        }
    }

    pub fn with_eta(&self, x: ObjId, m: MorId) -> Self {
        Monad {
            eta: self.eta.as_ref().map(|e| e.with_component(x, m)),
            ..self.clone()
        }
    }
}

pub fn check_monad(t: &Monad) -> Report {
    let mut report = check_functor(&t.functor);
    report.extend(check_nat_trans(&t.mu));
    if let Some(eta) = &t.eta {
        report.extend(check_nat_trans(eta));
    }
    if !report.is_pass() {
        return report;
    }
    let cat = t.cat();
    for x in cat.objects() {
        let tx = t.t(x);
        if !commutes(
            cat,
            &[t.mu_at(x), t.tm(t.mu_at(x))],
            &[t.mu_at(x), t.mu_at(tx)],
        ) {
            report.push(
                Violation::new(Law::MonadAssociativity, "mu . T(mu) != mu . mu_T")
                    .with("M", cat.object_name(x)),
            );
        }
        if t.is_unital() {
            let id = cat.id(tx);
            if !commutes(cat, &[t.mu_at(x), t.eta_at(tx)], &[id]) {
                report.push(
                    Violation::new(Law::MonadUnit, "mu . eta_T != id")
                        .with("M", cat.object_name(x)),
                );
            }
            if !commutes(cat, &[t.mu_at(x), t.tm(t.eta_at(x))], &[id]) {
                report.push(
                    Violation::new(Law::MonadUnit, "mu . T(eta) != id")
                        .with("M", cat.object_name(x)),
                );
            }
        }
    }
    report
}

/// Comonad data `(T, delta : T => TT, counit : T => Id)`, validated as a
/// monad on the opposite category.
#[derive(Debug, Clone)]
pub struct Comonad {
    pub functor: Functor,
    pub delta: Vec<MorId>,
    pub counit: Vec<MorId>,
}

impl Comonad {
    pub fn to_opposite_monad(&self) -> Result<Monad> {
        let op = Arc::new(opposite(&self.functor.dom));
        let functor = Functor::new(
            op.clone(),
            op,
            self.functor.obj_map.clone(),
            self.functor.mor_map.clone(),
        )?;
        Monad::from_tables(functor, self.delta.clone(), Some(self.counit.clone()))
    }
}

pub fn check_comonad(c: &Comonad) -> Report {
    match c.to_opposite_monad() {
        Ok(m) => check_monad(&m),
        Err(e) => {
            let mut r = Report::new();
            r.push(Violation::new(Law::Malformed, e.to_string()));
            r
        }
    }
}

/// A module `(M, nu : TM -> M)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TModule {
    pub carrier: ObjId,
    pub nu: MorId,
}

pub fn check_tmodule(t: &Monad, module: &TModule) -> Report {
    let cat = t.cat();
    let mut report = Report::new();
    let (m, nu) = (module.carrier, module.nu);
    let name = format!("({},{})", cat.object_name(m), cat.morphism_name(nu));
    if cat.source(nu) != t.t(m) || cat.target(nu) != m {
        report.push(Violation::new(Law::ComponentTyping, "nu is not TM -> M").with("module", name));
        return report;
    }
    if !commutes(cat, &[nu, t.tm(nu)], &[nu, t.mu_at(m)]) {
        report.push(
            Violation::new(Law::ModuleAssociativity, "nu . T(nu) != nu . mu_M")
                .with("module", name.clone()),
        );
    }
    if t.is_unital() && !commutes(cat, &[nu, t.eta_at(m)], &[cat.id(m)]) {
        report.push(Violation::new(Law::ModuleUnit, "nu . eta_M != id_M").with("module", name));
    }
    report
}

/// Whether `f : M -> N` intertwines `(M, nu)` and `(N, xi)`.
pub fn is_module_map(t: &Monad, f: MorId, from: &TModule, to: &TModule) -> bool {
    let cat = t.cat();
    cat.source(f) == from.carrier
        && cat.target(f) == to.carrier
        && commutes(cat, &[to.nu, t.tm(f)], &[f, from.nu])
}

pub fn free_module(t: &Monad, m: ObjId) -> Result<TModule> {
    if m.0 >= t.cat().num_objects() {
        return Err(Error::UnknownObject(format!("#{}", m.0)));
    }
    Ok(TModule {
        carrier: t.t(m),
        nu: t.mu_at(m),
    })
}

/// The Eilenberg-Moore category: every module and every module map, with
/// `U`, `F` and the counit `eps : F.U => Id`.
#[derive(Debug, Clone)]
pub struct EMCategory {
    pub monad: Arc<Monad>,
    pub base: Arc<FinCategory>,
    pub modules: Vec<TModule>,
    /// Underlying base morphism of each EM morphism.
    pub underlying: Vec<MorId>,
    pub forgetful: Functor,
    pub free: Functor,
    pub counit: NatTrans,
    module_index: HashMap<TModule, ObjId>,
    mor_index: HashMap<(ObjId, ObjId, MorId), MorId>,
}

impl EMCategory {
    pub fn module(&self, x: ObjId) -> TModule {
        self.modules[x.0]
    }

    pub fn module_id(&self, m: &TModule) -> Option<ObjId> {
        self.module_index.get(m).copied()
    }

    /// EM morphism `from -> to` with the given underlying map.
    pub fn morphism_between(&self, from: ObjId, to: ObjId, f: MorId) -> Option<MorId> {
        self.mor_index.get(&(from, to, f)).copied()
    }

    /// Modules with the given carrier, in index order.
    pub fn modules_on(&self, carrier: ObjId) -> Vec<ObjId> {
        self.base
            .objects()
            .filter(|&x| self.modules[x.0].carrier == carrier)
            .collect()
    }

    pub fn num_modules(&self) -> usize {
        self.modules.len()
    }

    /// Index of the free module `(TM, mu_M)`.
    pub fn free_id(&self, m: ObjId) -> ObjId {
        self.free.obj(m)
    }
}

fn module_name(cat: &FinCategory, m: &TModule) -> String {
    format!(
        "({},{})",
        cat.object_name(m.carrier),
        cat.morphism_name(m.nu)
    )
}

pub fn em_category(t: &Arc<Monad>) -> Result<EMCategory> {
    let cat = t.cat().clone();
    if !t.is_unital() {
        return Err(Error::NonUnital("the Eilenberg-Moore category".into()));
    }
    if cat.num_morphisms() > MAX_BASE_MORPHISMS {
        return Err(Error::CapExceeded {
            what: "base morphisms for module enumeration".into(),
            value: cat.num_morphisms(),
            cap: MAX_BASE_MORPHISMS,
        });
    }
    let mut modules = Vec::new();
    for m in cat.objects() {
        for &nu in cat.hom(t.t(m), m) {
            let candidate = TModule { carrier: m, nu };
            if check_tmodule(t, &candidate).is_pass() {
                modules.push(candidate);
            }
        }
    }
    let module_index: HashMap<TModule, ObjId> = modules
        .iter()
        .enumerate()
        .map(|(i, m)| (*m, ObjId(i)))
        .collect();
    let names: Vec<String> = modules.iter().map(|m| module_name(&cat, m)).collect();

    let mut morphisms = Vec::new();
    let mut underlying = Vec::new();
    let mut mor_index = HashMap::new();
    let mut identity = vec![MorId(0); modules.len()];
    for (i, from) in modules.iter().enumerate() {
        for (j, to) in modules.iter().enumerate() {
            for &f in cat.hom(from.carrier, to.carrier) {
                if is_module_map(t, f, from, to) {
                    let id = MorId(morphisms.len());
                    if i == j && f == cat.id(from.carrier) {
                        identity[i] = id;
                    }
                    morphisms.push(MorphismData {
                        name: format!("{}:{}->{}", cat.morphism_name(f), names[i], names[j]),
                        source: ObjId(i),
                        target: ObjId(j),
                    });
                    underlying.push(f);
                    mor_index.insert((ObjId(i), ObjId(j), f), id);
                }
            }
        }
    }
    let mut comp = Vec::new();
    for (b, mb) in morphisms.iter().enumerate() {
        for (a, ma) in morphisms.iter().enumerate() {
            if ma.target != mb.source {
                continue;
            }
            let h = cat.compose(underlying[b], underlying[a])?;
            if let Some(&ab) = mor_index.get(&(ma.source, mb.target, h)) {
                comp.push((MorId(b), MorId(a), ab));
            }
        }
    }
    let base = Arc::new(FinCategory::from_parts(names, morphisms, identity, comp)?);

    let forgetful = Functor::new(
        base.clone(),
        cat.clone(),
        modules.iter().map(|m| m.carrier).collect(),
        underlying.clone(),
    )?;
    let free_obj = cat
        .objects()
        .map(|m| {
            module_index
                .get(&TModule {
                    carrier: t.t(m),
                    nu: t.mu_at(m),
                })
                .copied()
                .ok_or_else(|| {
                    Error::Malformed(format!(
                        "free module on `{}` is not a module",
                        cat.object_name(m)
                    ))
                })
        })
        .collect::<Result<Vec<_>>>()?;
    let free_mor = cat
        .morphisms()
        .map(|f| {
            let key = (
                free_obj[cat.source(f).0],
                free_obj[cat.target(f).0],
                t.tm(f),
            );
            mor_index.get(&key).copied().ok_or_else(|| {
                Error::Malformed(format!("T({}) is not a module map", cat.morphism_name(f)))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let free = Functor::new(cat.clone(), base.clone(), free_obj, free_mor)?;
    let fu = free.after(&forgetful)?;
    let counit_components = base
        .objects()
        .map(|x| {
            let m = modules[x.0];
            mor_index
                .get(&(fu.obj(x), x, m.nu))
                .copied()
                .ok_or_else(|| Error::Malformed("counit component is not a module map".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let counit = NatTrans::new(fu, Functor::identity(base.clone()), counit_components)?;
    Ok(EMCategory {
        monad: t.clone(),
        base,
        modules,
        underlying,
        forgetful,
        free,
        counit,
        module_index,
        mor_index,
    })
}

/// Post-construction invariants of an Eilenberg-Moore category.
pub fn check_em(em: &EMCategory) -> Report {
    let t = &em.monad;
    let cat = t.cat();
    let mut report = crate::category::check_category(&em.base);
    report.extend(check_functor(&em.forgetful));
    report.extend(check_functor(&em.free));
    match em.forgetful.after(&em.free) {
        Ok(uf) if uf == t.functor => {}
        _ => report.push(Violation::new(
            Law::ForgetfulFree,
            "U.F differs from T as tables",
        )),
    }
    let mut seen = HashMap::new();
    for f in em.base.morphisms() {
        let key = (em.base.source(f), em.base.target(f), em.underlying[f.0]);
        if seen.insert(key, f).is_some() {
            report.push(
                Violation::new(Law::ForgetfulFree, "U is not faithful")
                    .with("f", em.base.morphism_name(f)),
            );
        }
    }
    report.extend(check_nat_trans(&em.counit));
    for z in em.base.objects() {
        let m = em.module(z);
        let eps = em.forgetful.mor(em.counit.at(z));
        if eps != m.nu {
            report.push(
                Violation::new(Law::Counit, "U(eps_(M,nu)) != nu")
                    .with("Z", em.base.object_name(z)),
            );
        }
        if !commutes(cat, &[eps, t.eta_at(m.carrier)], &[cat.id(m.carrier)]) {
            report.push(
                Violation::new(Law::AdjunctionTriangle, "U(eps_Z) . eta_UZ != id")
                    .with("Z", em.base.object_name(z)),
            );
        }
    }
    // free modules with their module maps form a subcategory
    let free: Vec<ObjId> = cat.objects().map(|m| em.free_id(m)).collect();
    for &a in &free {
        for &b in &free {
            for &c in &free {
                for &g in em.base.hom(b, c) {
                    for &f in em.base.hom(a, b) {
                        if em.base.compose(g, f).is_err() {
                            report.push(
                                Violation::new(
                                    Law::Malformed,
                                    "free-module maps not closed under composition",
                                )
                                .with("g", em.base.morphism_name(g))
                                .with("f", em.base.morphism_name(f)),
                            );
                        }
                    }
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{chain, closure_operators, const_top, monotone_maps};

    #[test]
    fn identity_and_nonunital() {
        let c = Arc::new(chain(3));
        let id = Monad::identity(c.clone());
        assert!(check_monad(&id).is_pass());
        let top = const_top(c);
        let nu = top.nonunital();
        assert!(!nu.is_unital());
        assert!(check_monad(&nu).is_pass());
        assert!(matches!(
            em_category(&Arc::new(nu)),
            Err(Error::NonUnital(_))
        ));
    }

    #[test]
    fn poset_monads_are_closure_operators() {
        let c = Arc::new(chain(3));
        let closures = closure_operators(3);
        for map in monotone_maps(3, 3) {
            let objs = map.iter().map(|&y| ObjId(y)).collect();
            let is_closure = closures.contains(&map);
            match Monad::thin(c.clone(), objs) {
                Ok(t) => assert_eq!(check_monad(&t).is_pass(), is_closure, "{map:?}"),
                Err(_) => assert!(!is_closure, "{map:?}"),
            }
        }
    }

    #[test]
    fn modules_of_const_top() {
        let c = Arc::new(chain(2));
        let t = Arc::new(const_top(c.clone()));
        let top = TModule {
            carrier: ObjId(1),
            nu: c.id(ObjId(1)),
        };
        assert!(check_tmodule(&t, &top).is_pass());
        // TM = 1 and there is no map 1 -> 0
        assert!(c.hom(t.t(ObjId(0)), ObjId(0)).is_empty());
        assert_eq!(free_module(&t, ObjId(0)).unwrap(), top);

        let em = em_category(&t).unwrap();
        assert_eq!(em.base.num_objects(), 1);
        assert_eq!(em.base.num_morphisms(), 1);
        assert!(check_em(&em).is_pass());
    }

    #[test]
    fn identity_monad_em_is_base() {
        let c = Arc::new(chain(3));
        let t = Arc::new(Monad::identity(c.clone()));
        for m in c.objects() {
            let free = free_module(&t, m).unwrap();
            assert_eq!(
                free,
                TModule {
                    carrier: m,
                    nu: c.id(m)
                }
            );
            assert!(check_tmodule(&t, &free).is_pass());
        }
        let em = em_category(&t).unwrap();
        assert_eq!(em.base.num_objects(), c.num_objects());
        assert_eq!(em.base.num_morphisms(), c.num_morphisms());
        assert!(check_em(&em).is_pass());
    }
}
