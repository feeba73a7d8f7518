//! Declaration files: named sections for categories, functors, monoidal
//! structures, monoids, actions, monads, laws, lifts and linear bundles,
//! cross-referenced by name. The concrete syntax is TOML; the grammar is
//! documented in `FORMAT.md` at the repository root.
//!
//! [`Declaration::parse`] resolves every reference and builds the
//! structures; [`Declaration::to_toml`] writes the canonical explicit form,
//! which parses back to an equal declaration.

pub mod raw;

use std::collections::{BTreeMap, HashMap};
use std::path::Path;
use std::sync::Arc;

use crate::action::{monad_from_monoid, self_action, MonoidalAction};
use crate::category::{FinCategory, MorId, MorphismData, ObjId};
use crate::distlaw::{DistributiveLaw, LiftedAction};
use crate::error::{Error, Result};
use crate::functor::{Bifunctor, Functor};
use crate::instances::{self, SetCategory};
use crate::linear::{
    Algebra, BialgebraBundle, Comodule, Field, LeftAModule, LinMap, LinearBundle, ModuleAlgebra,
    PrimeField, Rationals,
};
use crate::monad::{em_category, EMCategory, Monad};
use crate::monoidal::{MonoidObject, MonoidalCategory};

use raw::*;

#[derive(Debug, Clone, PartialEq)]
pub struct FunctorEntry {
    pub dom: String,
    pub cod: String,
    pub functor: Functor,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MonoidalEntry {
    pub category: String,
    pub value: Arc<MonoidalCategory>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MonoidEntry {
    pub monoidal: String,
    pub value: MonoidObject,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ActionEntry {
    pub monoidal: String,
    pub category: String,
    pub value: Arc<MonoidalAction>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MonadEntry {
    pub category: String,
    pub value: Arc<Monad>,
}

/// A law section. `components` is `None` when the section asks for the
/// unique morphisms and some candidate hom-set is empty.
#[derive(Debug, Clone, PartialEq)]
pub struct LawEntry {
    pub action: String,
    pub monad: String,
    pub components: Option<Vec<MorId>>,
}

/// A lift section: the object table of an action on the Eilenberg-Moore
/// category, `table[module * k + q]`.
#[derive(Debug, Clone)]
pub struct LiftEntry {
    pub action: String,
    pub monad: String,
    pub em: Arc<EMCategory>,
    pub table: Vec<ObjId>,
}

impl PartialEq for LiftEntry {
    fn eq(&self, other: &Self) -> bool {
        self.action == other.action && self.monad == other.monad && self.table == other.table
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum LinearEntry {
    Prime(LinearBundle<PrimeField>),
    Rational(LinearBundle<Rationals>),
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Declaration {
    pub categories: BTreeMap<String, Arc<FinCategory>>,
    pub functors: BTreeMap<String, FunctorEntry>,
    pub monoidal: BTreeMap<String, MonoidalEntry>,
    pub monoids: BTreeMap<String, MonoidEntry>,
    pub actions: BTreeMap<String, ActionEntry>,
    pub monads: BTreeMap<String, MonadEntry>,
    pub laws: BTreeMap<String, LawEntry>,
    pub lifts: BTreeMap<String, LiftEntry>,
    pub linear: BTreeMap<String, LinearEntry>,
}

fn decl_err(msg: impl Into<String>) -> Error {
    Error::Declaration(msg.into())
}

fn lookup<'a, T>(map: &'a BTreeMap<String, T>, kind: &str, name: &str) -> Result<&'a T> {
    map.get(name)
        .ok_or_else(|| decl_err(format!("unknown {kind} `{name}`")))
}

/// Names may not contain whitespace or the separators `, = . : |`, nor `->`.
fn check_name(name: &str) -> Result<()> {
    let bad = name.is_empty()
        || name.contains("->")
        || name
            .chars()
            .any(|c| c.is_whitespace() || ",=.:|".contains(c));
    if bad {
        return Err(decl_err(format!("invalid name `{name}`")));
    }
    Ok(())
}

/// `"a, b = c"` -> `(["a", "b"], "c")`.
fn split_entry(entry: &str, arity: usize) -> Result<(Vec<&str>, &str)> {
    let (lhs, rhs) = entry
        .split_once('=')
        .ok_or_else(|| decl_err(format!("entry `{entry}` has no `=`")))?;
    let args: Vec<&str> = lhs.split(',').map(str::trim).collect();
    if args.len() != arity {
        return Err(decl_err(format!(
            "entry `{entry}` needs {arity} argument(s)"
        )));
    }
    Ok((args, rhs.trim()))
}

/// Parses a list of `args = value` entries into a dense table indexed by the
/// argument tuple, requiring every index exactly once.
fn dense_table<T: Copy>(
    entries: &[String],
    dims: &[usize],
    parse_arg: impl Fn(usize, &str) -> Result<usize>,
    parse_value: impl Fn(&str) -> Result<T>,
    what: &str,
) -> Result<Vec<T>> {
    let total: usize = dims.iter().product();
    let mut out: Vec<Option<T>> = vec![None; total];
    for e in entries {
        let (args, value) = split_entry(e, dims.len())?;
        let mut idx = 0;
        for (slot, a) in args.iter().enumerate() {
            idx = idx * dims[slot] + parse_arg(slot, a)?;
        }
        if out[idx].is_some() {
            return Err(decl_err(format!("duplicate {what} entry `{e}`")));
        }
        out[idx] = Some(parse_value(value)?);
    }
    out.into_iter()
        .enumerate()
        .map(|(i, x)| x.ok_or_else(|| decl_err(format!("{what} table misses entry #{i}"))))
        .collect()
}

fn preset(spec: &str) -> Result<FinCategory> {
    let mut it = spec.split_whitespace();
    let kind = it.next().unwrap_or_default();
    let arg = it.collect::<Vec<_>>().join(" ");
    let n = || {
        arg.parse::<usize>()
            .map_err(|_| decl_err(format!("bad preset argument in `{spec}`")))
    };
    match kind {
        "chain" => Ok(instances::chain(n()?)),
        "discrete" => Ok(instances::discrete(n()?)),
        "cyclic" => Ok(instances::cyclic_group(n()?)),
        "finset" => Ok(instances::finset(n()?)),
        "sets" => {
            let sizes = arg
                .split(',')
                .map(|s| s.trim().parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| decl_err(format!("bad size list in `{spec}`")))?;
            Ok((*SetCategory::new(&sizes).cat).clone())
        }
        _ => Err(decl_err(format!("unknown category preset `{spec}`"))),
    }
}

fn resolve_category(raw: &RawCategory) -> Result<FinCategory> {
    if let Some(p) = &raw.preset {
        let extra = !raw.objects.is_empty()
            || !raw.morphisms.is_empty()
            || raw.identities.is_some()
            || !raw.compose.is_empty()
            || raw.auto_units.is_some();
        if extra {
            return Err(decl_err("a preset category takes no other fields"));
        }
        return preset(p);
    }
    let mut objects: HashMap<&str, ObjId> = HashMap::new();
    for (i, o) in raw.objects.iter().enumerate() {
        check_name(o)?;
        if objects.insert(o.as_str(), ObjId(i)).is_some() {
            return Err(decl_err(format!("duplicate object `{o}`")));
        }
    }
    let obj = |name: &str| {
        objects
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownObject(name.to_owned()))
    };
    let mut morphisms = Vec::new();
    let mut identity = Vec::new();
    if raw.identities.is_none() {
        for (i, o) in raw.objects.iter().enumerate() {
            identity.push(MorId(morphisms.len()));
            morphisms.push(MorphismData {
                name: format!("id_{o}"),
                source: ObjId(i),
                target: ObjId(i),
            });
        }
    }
    for m in &raw.morphisms {
        let (name, ends) = m
            .split_once(':')
            .ok_or_else(|| decl_err(format!("morphism `{m}` is not `name: A -> B`")))?;
        let (s, t) = ends
            .split_once("->")
            .ok_or_else(|| decl_err(format!("morphism `{m}` is not `name: A -> B`")))?;
        let name = name.trim();
        check_name(name)?;
        morphisms.push(MorphismData {
            name: name.to_owned(),
            source: obj(s.trim())?,
            target: obj(t.trim())?,
        });
    }
    let mut mor_index: HashMap<&str, MorId> = HashMap::new();
    for (i, m) in morphisms.iter().enumerate() {
        if mor_index.insert(m.name.as_str(), MorId(i)).is_some() {
            return Err(decl_err(format!("duplicate morphism `{}`", m.name)));
        }
    }
    let mor = |name: &str| {
        mor_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownMorphism(name.to_owned()))
    };
    if let Some(ids) = &raw.identities {
        identity = vec![MorId(usize::MAX); raw.objects.len()];
        for (o, m) in ids {
            identity[obj(o)?.0] = mor(m)?;
        }
        if identity.iter().any(|m| m.0 == usize::MAX) {
            return Err(decl_err("identities table does not cover every object"));
        }
    }
    let mut comp: BTreeMap<(MorId, MorId), MorId> = BTreeMap::new();
    for e in &raw.compose {
        let (lhs, h) = e
            .split_once('=')
            .ok_or_else(|| decl_err(format!("composition `{e}` is not `g . f = h`")))?;
        let (g, f) = lhs
            .split_once('.')
            .ok_or_else(|| decl_err(format!("composition `{e}` is not `g . f = h`")))?;
        let key = (mor(g.trim())?, mor(f.trim())?);
        if comp.insert(key, mor(h.trim())?).is_some() {
            return Err(decl_err(format!("duplicate composition entry `{e}`")));
        }
    }
    if raw.auto_units.unwrap_or(true) {
        for (i, m) in morphisms.iter().enumerate() {
            let f = MorId(i);
            comp.entry((identity[m.target.0], f)).or_insert(f);
            comp.entry((f, identity[m.source.0])).or_insert(f);
        }
    }
    FinCategory::from_parts(
        raw.objects.clone(),
        morphisms,
        identity,
        comp.into_iter().map(|((g, f), h)| (g, f, h)),
    )
}

fn serialize_category(cat: &FinCategory) -> RawCategory {
    let name = |m: MorId| cat.morphism_name(m).to_owned();
    RawCategory {
        preset: None,
        objects: cat.object_names().to_vec(),
        morphisms: cat
            .morphisms()
            .map(|f| {
                format!(
                    "{}: {} -> {}",
                    cat.morphism_name(f),
                    cat.object_name(cat.source(f)),
                    cat.object_name(cat.target(f))
                )
            })
            .collect(),
        identities: Some(
            cat.objects()
                .map(|x| (cat.object_name(x).to_owned(), name(cat.id(x))))
                .collect(),
        ),
        compose: cat
            .comp_entries()
            .into_iter()
            .map(|(g, f, h)| format!("{} . {} = {}", name(g), name(f), name(h)))
            .collect(),
        auto_units: Some(false),
    }
}

/// Resolution of `"identity"`, `"thin"`, or explicit entries for a family of
/// components indexed by object tuples.
fn component_family(
    table: &Table,
    cat: &FinCategory,
    index_dims: &[usize],
    parse_arg: impl Fn(usize, &str) -> Result<usize>,
    endpoints: impl Fn(&[usize]) -> (ObjId, ObjId),
    what: &str,
) -> Result<Vec<MorId>> {
    let total: usize = index_dims.iter().product();
    let unflatten = |mut i: usize| {
        let mut idx = vec![0; index_dims.len()];
        for k in (0..index_dims.len()).rev() {
            idx[k] = i % index_dims[k];
            i /= index_dims[k];
        }
        idx
    };
    match table {
        Table::Rule(r) if r == "identity" => Ok((0..total)
            .map(|i| cat.id(endpoints(&unflatten(i)).0))
            .collect()),
        Table::Rule(r) if r == "thin" => (0..total)
            .map(|i| {
                let (s, t) = endpoints(&unflatten(i));
                cat.unique_morphism(s, t, what)
            })
            .collect(),
        Table::Rule(r) => Err(decl_err(format!("unknown rule `{r}` for {what}"))),
        Table::Entries(es) => {
            dense_table(es, index_dims, parse_arg, |v| cat.morphism_named(v), what)
        }
    }
}

fn obj_entries<'a>(cats: &[&'a FinCategory]) -> impl Fn(usize, &str) -> Result<usize> + 'a {
    let cats = cats.to_vec();
    move |slot, name| cats[slot].object(name).map(|x| x.0)
}

fn mor_entries<'a>(cats: Vec<&'a FinCategory>) -> impl Fn(usize, &str) -> Result<usize> + 'a {
    move |slot, name| cats[slot].morphism_named(name).map(|x| x.0)
}

impl Declaration {
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| decl_err(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawFile = toml::from_str(text).map_err(|e| decl_err(e.to_string()))?;
        Self::from_raw(&raw)
    }

    pub fn from_raw(raw: &RawFile) -> Result<Self> {
        let mut d = Declaration::default();
        for (name, c) in &raw.category {
            let cat = resolve_category(c).map_err(|e| ctx("category", name, e))?;
            d.categories.insert(name.clone(), Arc::new(cat));
        }
        for (name, f) in &raw.functor {
            let entry = d.resolve_functor(f).map_err(|e| ctx("functor", name, e))?;
            d.functors.insert(name.clone(), entry);
        }
        for (name, m) in &raw.monoidal {
            let entry = d
                .resolve_monoidal(m)
                .map_err(|e| ctx("monoidal", name, e))?;
            d.monoidal.insert(name.clone(), entry);
        }
        for (name, m) in &raw.monoid {
            let entry = d.resolve_monoid(m).map_err(|e| ctx("monoid", name, e))?;
            d.monoids.insert(name.clone(), entry);
        }
        for (name, a) in &raw.action {
            let entry = d.resolve_action(a).map_err(|e| ctx("action", name, e))?;
            d.actions.insert(name.clone(), entry);
        }
        for (name, m) in &raw.monad {
            let entry = d.resolve_monad(m).map_err(|e| ctx("monad", name, e))?;
            d.monads.insert(name.clone(), entry);
        }
        for (name, l) in &raw.law {
            let entry = d.resolve_law(l).map_err(|e| ctx("law", name, e))?;
            d.laws.insert(name.clone(), entry);
        }
        for (name, l) in &raw.lift {
            let entry = d.resolve_lift(l).map_err(|e| ctx("lift", name, e))?;
            d.lifts.insert(name.clone(), entry);
        }
        for (name, l) in &raw.linear {
            let entry = resolve_linear(l).map_err(|e| ctx("linear", name, e))?;
            d.linear.insert(name.clone(), entry);
        }
        Ok(d)
    }

    fn category(&self, name: &str) -> Result<&Arc<FinCategory>> {
        lookup(&self.categories, "category", name)
    }

    fn resolve_functor(&self, f: &RawFunctor) -> Result<FunctorEntry> {
        let (dom, cod) = (
            self.category(&f.dom)?.clone(),
            self.category(&f.cod)?.clone(),
        );
        let obj_map: Vec<ObjId> = dense_table(
            &f.objects,
            &[dom.num_objects()],
            |_, a| dom.object(a).map(|x| x.0),
            |v| cod.object(v),
            "object map",
        )?;
        let functor = match &f.morphisms {
            Table::Rule(r) if r == "thin" => {
                Functor::from_object_map_thin(dom.clone(), cod.clone(), obj_map)?
            }
            Table::Rule(r) => return Err(decl_err(format!("unknown rule `{r}` for a functor"))),
            Table::Entries(es) => {
                let mor_map = dense_table(
                    es,
                    &[dom.num_morphisms()],
                    |_, a| dom.morphism_named(a).map(|x| x.0),
                    |v| cod.morphism_named(v),
                    "morphism map",
                )?;
                Functor::new(dom.clone(), cod.clone(), obj_map, mor_map)?
            }
        };
        Ok(FunctorEntry {
            dom: f.dom.clone(),
            cod: f.cod.clone(),
            functor,
        })
    }

    fn resolve_monoidal(&self, m: &RawMonoidal) -> Result<MonoidalEntry> {
        let cat = self.category(&m.category)?.clone();
        let k = cat.num_objects();
        let unit = cat.object(&m.unit)?;
        let objs = obj_entries(&[&cat, &cat]);
        let table: Vec<ObjId> = dense_table(
            &m.tensor_objects,
            &[k, k],
            &objs,
            |v| cat.object(v),
            "tensor object",
        )?;
        let tobj = |x: ObjId, y: ObjId| table[x.0 * k + y.0];
        let tensor = match &m.tensor_morphisms {
            Table::Rule(r) if r == "thin" => {
                Bifunctor::from_object_fn_thin(cat.clone(), cat.clone(), cat.clone(), tobj)?
            }
            Table::Rule(r) => return Err(decl_err(format!("unknown rule `{r}` for a tensor"))),
            Table::Entries(es) => {
                let n = cat.num_morphisms();
                let mt: Vec<MorId> = dense_table(
                    es,
                    &[n, n],
                    mor_entries(vec![&cat, &cat]),
                    |v| cat.morphism_named(v),
                    "tensor morphism",
                )?;
                Bifunctor::from_fn(cat.clone(), cat.clone(), cat.clone(), tobj, |f, g| {
                    Ok(mt[f.0 * n + g.0])
                })?
            }
        };
        let t = |x: usize, y: usize| tobj(ObjId(x), ObjId(y));
        let assoc = component_family(
            &m.assoc,
            &cat,
            &[k, k, k],
            obj_entries(&[&cat, &cat, &cat]),
            |i| (t(i[0], t(i[1], i[2]).0), t(t(i[0], i[1]).0, i[2])),
            "associator",
        )?;
        let runit = component_family(
            &m.runit,
            &cat,
            &[k],
            obj_entries(&[&cat]),
            |i| (ObjId(i[0]), t(i[0], unit.0)),
            "right unitor",
        )?;
        let lunit = component_family(
            &m.lunit,
            &cat,
            &[k],
            obj_entries(&[&cat]),
            |i| (ObjId(i[0]), t(unit.0, i[0])),
            "left unitor",
        )?;
        let value =
            MonoidalCategory::new(cat.clone(), tensor, unit, assoc, runit, lunit, m.strict)?;
        Ok(MonoidalEntry {
            category: m.category.clone(),
            value: Arc::new(value),
        })
    }

    fn resolve_monoid(&self, m: &RawMonoid) -> Result<MonoidEntry> {
        let c = &lookup(&self.monoidal, "monoidal category", &m.monoidal)?.value;
        let cat = &c.base;
        let carrier = cat.object(&m.carrier)?;
        let mult = if m.mult == "thin" {
            cat.unique_morphism(c.t(carrier, carrier), carrier, "monoid multiplication")?
        } else {
            cat.morphism_named(&m.mult)?
        };
        let unit = if m.unit == "thin" {
            cat.unique_morphism(c.unit, carrier, "monoid unit")?
        } else {
            cat.morphism_named(&m.unit)?
        };
        Ok(MonoidEntry {
            monoidal: m.monoidal.clone(),
            value: MonoidObject::new(c, carrier, mult, unit)?,
        })
    }

    fn resolve_action(&self, a: &RawAction) -> Result<ActionEntry> {
        let mentry = lookup(&self.monoidal, "monoidal category", &a.monoidal)?;
        let c = mentry.value.clone();
        if a.self_action {
            let extra = !a.act_objects.is_empty()
                || a.act_morphisms.is_some()
                || a.psi.is_some()
                || a.unit.is_some();
            if extra || a.category.as_ref().is_some_and(|x| *x != mentry.category) {
                return Err(decl_err("a self-action takes only `monoidal`"));
            }
            return Ok(ActionEntry {
                monoidal: a.monoidal.clone(),
                category: mentry.category.clone(),
                value: Arc::new(self_action(&c)),
            });
        }
        let cat_name = a
            .category
            .clone()
            .ok_or_else(|| decl_err("action needs `category`"))?;
        let cat = self.category(&cat_name)?.clone();
        let cc = c.base.clone();
        let (nm, k) = (cat.num_objects(), cc.num_objects());
        let objs = obj_entries(&[&cat, &cc]);
        let table: Vec<ObjId> = dense_table(
            &a.act_objects,
            &[nm, k],
            &objs,
            |v| cat.object(v),
            "action object",
        )?;
        let aobj = |m: ObjId, q: ObjId| table[m.0 * k + q.0];
        let act = match a
            .act_morphisms
            .as_ref()
            .ok_or_else(|| decl_err("action needs `act_morphisms`"))?
        {
            Table::Rule(r) if r == "thin" => {
                Bifunctor::from_object_fn_thin(cat.clone(), cc.clone(), cat.clone(), aobj)?
            }
            Table::Rule(r) => return Err(decl_err(format!("unknown rule `{r}` for an action"))),
            Table::Entries(es) => {
                let n2 = cc.num_morphisms();
                let mt: Vec<MorId> = dense_table(
                    es,
                    &[cat.num_morphisms(), n2],
                    mor_entries(vec![&cat, &cc]),
                    |v| cat.morphism_named(v),
                    "action morphism",
                )?;
                Bifunctor::from_fn(cat.clone(), cc.clone(), cat.clone(), aobj, |f, g| {
                    Ok(mt[f.0 * n2 + g.0])
                })?
            }
        };
        let o = |m: usize, q: usize| aobj(ObjId(m), ObjId(q));
        let psi_t = a
            .psi
            .as_ref()
            .ok_or_else(|| decl_err("action needs `psi`"))?;
        let psi = component_family(
            psi_t,
            &cat,
            &[nm, k, k],
            obj_entries(&[&cat, &cc, &cc]),
            |i| {
                (
                    o(i[0], c.t(ObjId(i[1]), ObjId(i[2])).0),
                    o(o(i[0], i[1]).0, i[2]),
                )
            },
            "psi",
        )?;
        let unit_t = a
            .unit
            .as_ref()
            .ok_or_else(|| decl_err("action needs `unit`"))?;
        let unit_u = component_family(
            unit_t,
            &cat,
            &[nm],
            obj_entries(&[&cat]),
            |i| (ObjId(i[0]), o(i[0], c.unit.0)),
            "u",
        )?;
        Ok(ActionEntry {
            monoidal: a.monoidal.clone(),
            category: cat_name,
            value: Arc::new(MonoidalAction::new(c, cat.clone(), act, psi, unit_u)?),
        })
    }

    fn resolve_monad(&self, m: &RawMonad) -> Result<MonadEntry> {
        if let (Some(action), Some(monoid)) = (&m.action, &m.monoid) {
            let extra = m.category.is_some()
                || !m.objects.is_empty()
                || m.morphisms.is_some()
                || m.mu.is_some()
                || m.eta.is_some();
            if extra {
                return Err(decl_err(
                    "a monad from a monoid takes only `action` and `monoid`",
                ));
            }
            let a = lookup(&self.actions, "action", action)?;
            let b = lookup(&self.monoids, "monoid", monoid)?;
            if b.monoidal != a.monoidal {
                return Err(decl_err(
                    "monoid and action live over different monoidal categories",
                ));
            }
            return Ok(MonadEntry {
                category: a.category.clone(),
                value: Arc::new(monad_from_monoid(&a.value, &b.value)?),
            });
        }
        if m.action.is_some() || m.monoid.is_some() {
            return Err(decl_err("`action` and `monoid` must be given together"));
        }
        let cat_name = m
            .category
            .clone()
            .ok_or_else(|| decl_err("monad needs `category`"))?;
        let cat = self.category(&cat_name)?.clone();
        let n = cat.num_objects();
        let obj_map: Vec<ObjId> = dense_table(
            &m.objects,
            &[n],
            |_, a| cat.object(a).map(|x| x.0),
            |v| cat.object(v),
            "object map",
        )?;
        let functor = match m
            .morphisms
            .as_ref()
            .ok_or_else(|| decl_err("monad needs `morphisms`"))?
        {
            Table::Rule(r) if r == "thin" => {
                Functor::from_object_map_thin(cat.clone(), cat.clone(), obj_map.clone())?
            }
            Table::Rule(r) => {
                return Err(decl_err(format!("unknown rule `{r}` for a monad functor")))
            }
            Table::Entries(es) => {
                let mm = dense_table(
                    es,
                    &[cat.num_morphisms()],
                    |_, a| cat.morphism_named(a).map(|x| x.0),
                    |v| cat.morphism_named(v),
                    "morphism map",
                )?;
                Functor::new(cat.clone(), cat.clone(), obj_map.clone(), mm)?
            }
        };
        let t = |x: usize| obj_map[x];
        let mu_t = m.mu.as_ref().ok_or_else(|| decl_err("monad needs `mu`"))?;
        let mu = component_family(
            mu_t,
            &cat,
            &[n],
            |_, a| cat.object(a).map(|x| x.0),
            |i| (t(t(i[0]).0), t(i[0])),
            "mu",
        )?;
        let eta = m
            .eta
            .as_ref()
            .map(|e| {
                component_family(
                    e,
                    &cat,
                    &[n],
                    |_, a| cat.object(a).map(|x| x.0),
                    |i| (ObjId(i[0]), t(i[0])),
                    "eta",
                )
            })
            .transpose()?;
        Ok(MonadEntry {
            category: cat_name,
            value: Arc::new(Monad::from_tables(functor, mu, eta)?),
        })
    }

    fn action_and_monad(&self, action: &str, monad: &str) -> Result<(&ActionEntry, &MonadEntry)> {
        let a = lookup(&self.actions, "action", action)?;
        let t = lookup(&self.monads, "monad", monad)?;
        if a.category != t.category {
            return Err(decl_err(format!(
                "action `{action}` and monad `{monad}` live on different categories"
            )));
        }
        Ok((a, t))
    }

    fn resolve_law(&self, l: &RawLaw) -> Result<LawEntry> {
        let (a, t) = self.action_and_monad(&l.action, &l.monad)?;
        let (action, monad) = (&a.value, &t.value);
        let cat = &action.cat;
        let (nm, k) = (cat.num_objects(), action.monoidal.num_objects());
        let ends =
            |i: &[usize]| crate::distlaw::law_endpoints(action, monad, ObjId(i[0]), ObjId(i[1]));
        let components = match &l.components {
            Table::Rule(r) if r == "thin" => {
                let inhabited = (0..nm * k).all(|i| {
                    let (s, t) = ends(&[i / k, i % k]);
                    !cat.hom(s, t).is_empty()
                });
                if inhabited {
                    Some(component_family(
                        &l.components,
                        cat,
                        &[nm, k],
                        |_, _| Ok(0),
                        ends,
                        "law component",
                    )?)
                } else {
                    None
                }
            }
            other => Some(component_family(
                other,
                cat,
                &[nm, k],
                obj_entries(&[cat, action.c()]),
                ends,
                "law component",
            )?),
        };
        Ok(LawEntry {
            action: l.action.clone(),
            monad: l.monad.clone(),
            components,
        })
    }

    fn resolve_lift(&self, l: &RawLift) -> Result<LiftEntry> {
        let (a, t) = self.action_and_monad(&l.action, &l.monad)?;
        let em = Arc::new(em_category(&t.value)?);
        let e = em.base.clone();
        let c = a.value.c();
        let k = c.num_objects();
        let mut table = vec![None; e.num_objects() * k];
        for entry in &l.objects {
            let i = e.object(&entry.module)?;
            let q = c.object(&entry.q)?;
            let r = e.object(&entry.result)?;
            if table[i.0 * k + q.0].replace(r).is_some() {
                return Err(decl_err(format!(
                    "duplicate lift entry for ({}, {})",
                    entry.module, entry.q
                )));
            }
        }
        let table = table
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| decl_err("lift table does not cover every (module, Q) pair"))?;
        Ok(LiftEntry {
            action: l.action.clone(),
            monad: l.monad.clone(),
            em,
            table,
        })
    }

    /// The law of a law section; `None` when it was declared as `"thin"` but
    /// some candidate hom-set is empty.
    pub fn law(&self, name: &str) -> Result<Option<DistributiveLaw>> {
        let entry = lookup(&self.laws, "law", name)?;
        let (a, t) = self.action_and_monad(&entry.action, &entry.monad)?;
        entry
            .components
            .clone()
            .map(|c| DistributiveLaw::new(a.value.clone(), t.value.clone(), c))
            .transpose()
    }

    /// Builds the lifted action of a lift section.
    pub fn lift(&self, name: &str) -> Result<LiftedAction> {
        let entry = lookup(&self.lifts, "lift", name)?;
        let a = lookup(&self.actions, "action", &entry.action)?;
        LiftedAction::from_object_table(a.value.clone(), entry.em.clone(), entry.table.clone())
    }

    /// A declaration holding one action and one monad on the same category,
    /// under the names `M` (acted-on category), `C` (acting category and its
    /// monoidal structure), `act` and `T`.
    pub fn from_instance(action: &MonoidalAction, monad: &Monad) -> Self {
        let mut d = Declaration::default();
        let same = action.cat == action.monoidal.base;
        d.categories.insert("M".into(), action.cat.clone());
        let c_name = if same { "M" } else { "C" };
        d.categories
            .insert(c_name.into(), action.monoidal.base.clone());
        d.monoidal.insert(
            "C".into(),
            MonoidalEntry {
                category: c_name.into(),
                value: action.monoidal.clone(),
            },
        );
        d.actions.insert(
            "act".into(),
            ActionEntry {
                monoidal: "C".into(),
                category: "M".into(),
                value: Arc::new(action.clone()),
            },
        );
        d.monads.insert(
            "T".into(),
            MonadEntry {
                category: "M".into(),
                value: Arc::new(monad.clone()),
            },
        );
        d
    }

    /// Adds a law section for `law`, referring to the named action and monad.
    pub fn insert_law(&mut self, name: &str, action: &str, monad: &str, law: &DistributiveLaw) {
        self.laws.insert(
            name.to_owned(),
            LawEntry {
                action: action.to_owned(),
                monad: monad.to_owned(),
                components: Some(law.components.clone()),
            },
        );
    }

    /// Adds a lift section for `lift`, referring to the named action and monad.
    pub fn insert_lift(&mut self, name: &str, action: &str, monad: &str, lift: &LiftedAction) {
        self.lifts.insert(
            name.to_owned(),
            LiftEntry {
                action: action.to_owned(),
                monad: monad.to_owned(),
                em: lift.em.clone(),
                table: lift.object_table().to_vec(),
            },
        );
    }

    pub fn to_raw(&self) -> RawFile {
        let mut raw = RawFile::default();
        for (name, c) in &self.categories {
            raw.category.insert(name.clone(), serialize_category(c));
        }
        for (name, f) in &self.functors {
            let (dom, cod) = (&f.functor.dom, &f.functor.cod);
            raw.functor.insert(
                name.clone(),
                RawFunctor {
                    dom: f.dom.clone(),
                    cod: f.cod.clone(),
                    objects: dom
                        .objects()
                        .map(|x| {
                            format!(
                                "{} = {}",
                                dom.object_name(x),
                                cod.object_name(f.functor.obj(x))
                            )
                        })
                        .collect(),
                    morphisms: Table::Entries(
                        dom.morphisms()
                            .map(|g| {
                                format!(
                                    "{} = {}",
                                    dom.morphism_name(g),
                                    cod.morphism_name(f.functor.mor(g))
                                )
                            })
                            .collect(),
                    ),
                },
            );
        }
        for (name, m) in &self.monoidal {
            raw.monoidal.insert(name.clone(), serialize_monoidal(m));
        }
        for (name, b) in &self.monoids {
            let cat = &self.monoidal[&b.monoidal].value.base;
            raw.monoid.insert(
                name.clone(),
                RawMonoid {
                    monoidal: b.monoidal.clone(),
                    carrier: cat.object_name(b.value.carrier).to_owned(),
                    mult: cat.morphism_name(b.value.mult).to_owned(),
                    unit: cat.morphism_name(b.value.unit_mor).to_owned(),
                },
            );
        }
        for (name, a) in &self.actions {
            raw.action.insert(name.clone(), serialize_action(a));
        }
        for (name, t) in &self.monads {
            raw.monad.insert(name.clone(), serialize_monad(t));
        }
        for (name, l) in &self.laws {
            let a = &self.actions[&l.action].value;
            let components = match &l.components {
                None => Table::Rule("thin".into()),
                Some(c) => Table::Entries(
                    crate::distlaw::index_pairs(a)
                        .map(|(m, q)| {
                            let k = a.monoidal.num_objects();
                            format!(
                                "{}, {} = {}",
                                a.cat.object_name(m),
                                a.c().object_name(q),
                                a.cat.morphism_name(c[m.0 * k + q.0])
                            )
                        })
                        .collect(),
                ),
            };
            raw.law.insert(
                name.clone(),
                RawLaw {
                    action: l.action.clone(),
                    monad: l.monad.clone(),
                    components,
                },
            );
        }
        for (name, l) in &self.lifts {
            let c = self.actions[&l.action].value.c().clone();
            let e = &l.em.base;
            let k = c.num_objects();
            let objects = e
                .objects()
                .flat_map(|i| c.objects().map(move |q| (i, q)))
                .map(|(i, q)| RawLiftEntry {
                    module: e.object_name(i).to_owned(),
                    q: c.object_name(q).to_owned(),
                    result: e.object_name(l.table[i.0 * k + q.0]).to_owned(),
                })
                .collect();
            raw.lift.insert(
                name.clone(),
                RawLift {
                    action: l.action.clone(),
                    monad: l.monad.clone(),
                    objects,
                },
            );
        }
        for (name, l) in &self.linear {
            let r = match l {
                LinearEntry::Prime(b) => serialize_linear(b),
                LinearEntry::Rational(b) => serialize_linear(b),
            };
            raw.linear.insert(name.clone(), r);
        }
        raw
    }

    /// Canonical explicit form.
    pub fn to_toml(&self) -> String {
        toml::to_string(&self.to_raw()).expect("declarations serialize")
    }
}

fn ctx(kind: &str, name: &str, e: Error) -> Error {
    match e {
        Error::CapExceeded { .. } => e,
        Error::Declaration(msg) => decl_err(format!("{kind} `{name}`: {msg}")),
        e => decl_err(format!("{kind} `{name}`: {e}")),
    }
}

fn entries_1(cat: &FinCategory, comps: &[MorId], names: impl Fn(usize) -> String) -> Table {
    Table::Entries(
        comps
            .iter()
            .enumerate()
            .map(|(i, &m)| format!("{} = {}", names(i), cat.morphism_name(m)))
            .collect(),
    )
}

fn serialize_monoidal(m: &MonoidalEntry) -> RawMonoidal {
    let c = &m.value;
    let cat = &c.base;
    let (k, n) = (cat.num_objects(), cat.num_morphisms());
    let on = |x: usize| cat.object_name(ObjId(x)).to_owned();
    let mn = |f: usize| cat.morphism_name(MorId(f)).to_owned();
    RawMonoidal {
        category: m.category.clone(),
        unit: on(c.unit.0),
        tensor_objects: (0..k * k)
            .map(|i| {
                format!(
                    "{}, {} = {}",
                    on(i / k),
                    on(i % k),
                    on(c.t(ObjId(i / k), ObjId(i % k)).0)
                )
            })
            .collect(),
        tensor_morphisms: Table::Entries(
            (0..n * n)
                .map(|i| {
                    format!(
                        "{}, {} = {}",
                        mn(i / n),
                        mn(i % n),
                        mn(c.tm(MorId(i / n), MorId(i % n)).0)
                    )
                })
                .collect(),
        ),
        assoc: entries_1(cat, &c.assoc, |i| {
            format!("{}, {}, {}", on(i / (k * k)), on(i / k % k), on(i % k))
        }),
        runit: entries_1(cat, &c.runit, on),
        lunit: entries_1(cat, &c.lunit, on),
        strict: c.strict,
    }
}

fn serialize_action(a: &ActionEntry) -> RawAction {
    let act = &a.value;
    let (cat, c) = (&act.cat, act.c());
    let (nm, k) = (cat.num_objects(), c.num_objects());
    let (n1, n2) = (cat.num_morphisms(), c.num_morphisms());
    let on = |x: usize| cat.object_name(ObjId(x)).to_owned();
    let qn = |x: usize| c.object_name(ObjId(x)).to_owned();
    RawAction {
        monoidal: a.monoidal.clone(),
        category: Some(a.category.clone()),
        self_action: false,
        act_objects: (0..nm * k)
            .map(|i| {
                format!(
                    "{}, {} = {}",
                    on(i / k),
                    qn(i % k),
                    on(act.o(ObjId(i / k), ObjId(i % k)).0)
                )
            })
            .collect(),
        act_morphisms: Some(Table::Entries(
            (0..n1 * n2)
                .map(|i| {
                    let (f, g) = (MorId(i / n2), MorId(i % n2));
                    format!(
                        "{}, {} = {}",
                        cat.morphism_name(f),
                        c.morphism_name(g),
                        cat.morphism_name(act.a(f, g))
                    )
                })
                .collect(),
        )),
        psi: Some(entries_1(cat, &act.psi, |i| {
            format!("{}, {}, {}", on(i / (k * k)), qn(i / k % k), qn(i % k))
        })),
        unit: Some(entries_1(cat, &act.unit_u, on)),
    }
}

fn serialize_monad(t: &MonadEntry) -> RawMonad {
    let m = &t.value;
    let cat = m.cat();
    let on = |x: usize| cat.object_name(ObjId(x)).to_owned();
    RawMonad {
        category: Some(t.category.clone()),
        objects: cat
            .objects()
            .map(|x| format!("{} = {}", cat.object_name(x), cat.object_name(m.t(x))))
            .collect(),
        morphisms: Some(Table::Entries(
            cat.morphisms()
                .map(|f| format!("{} = {}", cat.morphism_name(f), cat.morphism_name(m.tm(f))))
                .collect(),
        )),
        mu: Some(entries_1(cat, &m.mu.components, on)),
        eta: m.eta.as_ref().map(|e| entries_1(cat, &e.components, on)),
        action: None,
        monoid: None,
    }
}

fn matrix<F: Field>(
    field: &F,
    m: &Matrix,
    rows: usize,
    cols: usize,
    what: &str,
) -> Result<LinMap<F>> {
    let parsed = m
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| match x {
                    Scalar::Int(n) => Ok(field.from_i64(*n)),
                    Scalar::Text(s) => field
                        .parse(s)
                        .ok_or_else(|| decl_err(format!("bad scalar `{s}` in {what}"))),
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let lm = LinMap::from_rows(field, parsed)?;
    if lm.rows() != rows || lm.cols() != cols {
        return Err(decl_err(format!(
            "{what} is {}x{}, expected {rows}x{cols}",
            lm.rows(),
            lm.cols()
        )));
    }
    Ok(lm)
}

fn resolve_bundle<F: Field>(field: &F, l: &RawLinear) -> Result<LinearBundle<F>> {
    let rb = &l.bialgebra;
    let d = rb.dim;
    let bialgebra = BialgebraBundle::new(
        d,
        matrix(field, &rb.mult, d, d * d, "bialgebra mult")?,
        matrix(field, &rb.unit, d, 1, "bialgebra unit")?,
        matrix(field, &rb.comult, d * d, d, "bialgebra comult")?,
        matrix(field, &rb.counit, 1, d, "bialgebra counit")?,
    )?;
    let ra = &l.algebra;
    let a = ra.dim;
    let alg = Algebra::new(
        a,
        matrix(field, &ra.mult, a, a * a, "algebra mult")?,
        matrix(field, &ra.unit, a, 1, "algebra unit")?,
    )?;
    let algebra = ModuleAlgebra::new(
        &bialgebra,
        alg.clone(),
        matrix(field, &ra.action, a, d * a, "algebra action")?,
    )?;
    let module = LeftAModule::new(
        &alg,
        l.module.dim,
        matrix(
            field,
            &l.module.act,
            l.module.dim,
            a * l.module.dim,
            "module action",
        )?,
    )?;
    let comodules = l
        .comodules
        .iter()
        .map(|(name, q)| {
            let co = matrix(field, &q.coaction, q.dim * d, q.dim, "coaction")?;
            Ok((name.clone(), Comodule::new(&bialgebra, q.dim, co)?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LinearBundle {
        bialgebra,
        algebra,
        module,
        comodules,
    })
}

fn resolve_linear(l: &RawLinear) -> Result<LinearEntry> {
    if l.field == "Q" {
        return Ok(LinearEntry::Rational(resolve_bundle(&Rationals, l)?));
    }
    let p = l
        .field
        .strip_prefix('F')
        .and_then(|p| p.parse::<u64>().ok())
        .ok_or_else(|| decl_err(format!("unknown field `{}`", l.field)))?;
    Ok(LinearEntry::Prime(resolve_bundle(&PrimeField::new(p)?, l)?))
}

fn write_matrix<F: Field>(m: &LinMap<F>) -> Matrix {
    (0..m.rows())
        .map(|r| {
            m.row(r)
                .iter()
                .map(|x| {
                    let s = m.field.format(x);
                    s.parse::<i64>().map(Scalar::Int).unwrap_or(Scalar::Text(s))
                })
                .collect()
        })
        .collect()
}

fn serialize_linear<F: Field>(b: &LinearBundle<F>) -> RawLinear {
    let bi = &b.bialgebra;
    RawLinear {
        field: bi.field().name(),
        bialgebra: RawBialgebra {
            dim: bi.dim,
            mult: write_matrix(&bi.mult),
            unit: write_matrix(&bi.unit),
            comult: write_matrix(&bi.comult),
            counit: write_matrix(&bi.counit),
        },
        algebra: RawModuleAlgebra {
            dim: b.algebra.dim(),
            mult: write_matrix(&b.algebra.algebra.mult),
            unit: write_matrix(&b.algebra.algebra.unit),
            action: write_matrix(&b.algebra.action),
        },
        module: RawModule {
            dim: b.module.dim,
            act: write_matrix(&b.module.act),
        },
        comodules: b
            .comodules
            .iter()
            .map(|(n, q)| {
                (
                    n.clone(),
                    RawComodule {
                        dim: q.dim,
                        coaction: write_matrix(&q.coaction),
                    },
                )
            })
            .collect(),
    }
}
