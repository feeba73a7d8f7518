//! Functors, natural transformations, bifunctors and the Godement product.

use std::sync::Arc;

use crate::category::{FinCategory, MorId, ObjId};
use crate::error::{Error, Result};
use crate::report::{Law, Report, Violation};

pub(crate) fn same_cat(a: &Arc<FinCategory>, b: &Arc<FinCategory>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[derive(Debug, Clone)]
pub struct Functor {
    pub dom: Arc<FinCategory>,
    pub cod: Arc<FinCategory>,
    pub obj_map: Vec<ObjId>,
    pub mor_map: Vec<MorId>,
}

impl PartialEq for Functor {
    fn eq(&self, other: &Self) -> bool {
        self.obj_map == other.obj_map
            && self.mor_map == other.mor_map
            && same_cat(&self.dom, &other.dom)
            && same_cat(&self.cod, &other.cod)
    }
}

impl Eq for Functor {}

impl Functor {
    pub fn new(
        dom: Arc<FinCategory>,
        cod: Arc<FinCategory>,
        obj_map: Vec<ObjId>,
        mor_map: Vec<MorId>,
    ) -> Result<Self> {
        if obj_map.len() != dom.num_objects() || mor_map.len() != dom.num_morphisms() {
            return Err(Error::Malformed(
                "functor tables do not cover the domain".into(),
            ));
        }
        if obj_map.iter().any(|x| x.0 >= cod.num_objects())
            || mor_map.iter().any(|f| f.0 >= cod.num_morphisms())
        {
            return Err(Error::Malformed(
                "functor table entry outside the codomain".into(),
            ));
        }
        Ok(Functor {
            dom,
            cod,
            obj_map,
            mor_map,
        })
    }

    pub fn identity(cat: Arc<FinCategory>) -> Self {
        Functor {
            obj_map: cat.objects().collect(),
            mor_map: cat.morphisms().collect(),
            dom: cat.clone(),
            cod: cat,
        }
    }

    pub fn constant(dom: Arc<FinCategory>, cod: Arc<FinCategory>, x: ObjId) -> Self {
        Functor {
            obj_map: vec![x; dom.num_objects()],
            mor_map: vec![cod.id(x); dom.num_morphisms()],
            dom,
            cod,
        }
    }

    /// Object map given; each morphism goes to the unique morphism between the
    /// image endpoints. Fails when such a hom-set is empty or ambiguous.
    pub fn from_object_map_thin(
        dom: Arc<FinCategory>,
        cod: Arc<FinCategory>,
        obj_map: Vec<ObjId>,
    ) -> Result<Self> {
        let mor_map = dom
            .morphisms()
            .map(|f| {
                cod.unique_morphism(
                    obj_map[dom.source(f).0],
                    obj_map[dom.target(f).0],
                    "functor image",
                )
            })
            .collect::<Result<_>>()?;
        Functor::new(dom, cod, obj_map, mor_map)
    }

    pub fn obj(&self, x: ObjId) -> ObjId {
        self.obj_map[x.0]
    }

    pub fn mor(&self, f: MorId) -> MorId {
        self.mor_map[f.0]
    }

    pub fn is_endo(&self) -> bool {
        same_cat(&self.dom, &self.cod)
    }

    /// `self . inner`.
    pub fn after(&self, inner: &Functor) -> Result<Functor> {
        if !same_cat(&inner.cod, &self.dom) {
            return Err(Error::IncompatibleFunctors(
                "codomain of the inner functor is not the domain of the outer".into(),
            ));
        }
        Ok(Functor {
            dom: inner.dom.clone(),
            cod: self.cod.clone(),
            obj_map: inner.obj_map.iter().map(|&x| self.obj(x)).collect(),
            mor_map: inner.mor_map.iter().map(|&f| self.mor(f)).collect(),
        })
    }

    pub fn with_mor_entry(&self, f: MorId, value: MorId) -> Self {
        let mut out = self.clone();
        out.mor_map[f.0] = value;
        out
    }

    pub fn with_obj_entry(&self, x: ObjId, value: ObjId) -> Self {
        let mut out = self.clone();
        out.obj_map[x.0] = value;
        out
    }
}

pub fn check_functor(functor: &Functor) -> Report {
    let (dom, cod) = (&functor.dom, &functor.cod);
    let mut report = Report::new();
    for f in dom.morphisms() {
        let image = functor.mor(f);
        if cod.source(image) != functor.obj(dom.source(f))
            || cod.target(image) != functor.obj(dom.target(f))
        {
            report.push(
                Violation::new(Law::FunctorEndpoints, "image morphism has wrong endpoints")
                    .with("f", dom.morphism_name(f))
                    .with("F(f)", cod.morphism_name(image)),
            );
        }
    }
    for x in dom.objects() {
        if functor.mor(dom.id(x)) != cod.id(functor.obj(x)) {
            report.push(
                Violation::new(Law::FunctorIdentity, "F(id_X) != id_F(X)")
                    .with("X", dom.object_name(x)),
            );
        }
    }
    for (g, f, gf) in dom.comp_entries() {
        if dom.target(f) != dom.source(g) {
            continue;
        }
        let image = cod.compose(functor.mor(g), functor.mor(f)).ok();
        if image != Some(functor.mor(gf)) {
            report.push(
                Violation::new(Law::FunctorComposition, "F(g.f) != F(g).F(f)")
                    .with("g", dom.morphism_name(g))
                    .with("f", dom.morphism_name(f)),
            );
        }
    }
    report
}

/// A family of components `source(X) -> target(X)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatTrans {
    pub source: Functor,
    pub target: Functor,
    pub components: Vec<MorId>,
}

impl NatTrans {
    pub fn new(source: Functor, target: Functor, components: Vec<MorId>) -> Result<Self> {
        if !same_cat(&source.dom, &target.dom) || !same_cat(&source.cod, &target.cod) {
            return Err(Error::IncompatibleFunctors(
                "natural transformation between functors with different (co)domains".into(),
            ));
        }
        if components.len() != source.dom.num_objects() {
            return Err(Error::Malformed(
                "component family does not cover the domain".into(),
            ));
        }
        if components.iter().any(|m| m.0 >= source.cod.num_morphisms()) {
            return Err(Error::Malformed("component outside the codomain".into()));
        }
        Ok(NatTrans {
            source,
            target,
            components,
        })
    }

    pub fn identity(functor: &Functor) -> Self {
        NatTrans {
            components: functor
                .dom
                .objects()
                .map(|x| functor.cod.id(functor.obj(x)))
                .collect(),
            source: functor.clone(),
            target: functor.clone(),
        }
    }

    pub fn at(&self, x: ObjId) -> MorId {
        self.components[x.0]
    }

    pub fn dom(&self) -> &Arc<FinCategory> {
        &self.source.dom
    }

    pub fn cod(&self) -> &Arc<FinCategory> {
        &self.source.cod
    }

    /// `self . first`, componentwise.
    pub fn vertical(&self, first: &NatTrans) -> Result<NatTrans> {
        if first.target != self.source {
            return Err(Error::IncompatibleFunctors(
                "vertical composite needs matching middle functor".into(),
            ));
        }
        let cod = self.cod();
        let components = self
            .dom()
            .objects()
            .map(|x| cod.compose(self.at(x), first.at(x)))
            .collect::<Result<_>>()?;
        NatTrans::new(first.source.clone(), self.target.clone(), components)
    }

    pub fn with_component(&self, x: ObjId, m: MorId) -> Self {
        let mut out = self.clone();
        out.components[x.0] = m;
        out
    }
}

pub fn check_nat_trans(alpha: &NatTrans) -> Report {
    let (dom, cod) = (alpha.dom(), alpha.cod());
    let (f_src, f_tgt) = (&alpha.source, &alpha.target);
    let mut report = Report::new();
    for x in dom.objects() {
        let c = alpha.at(x);
        if cod.source(c) != f_src.obj(x) || cod.target(c) != f_tgt.obj(x) {
            report.push(
                Violation::new(Law::ComponentTyping, "component has wrong endpoints")
                    .with("X", dom.object_name(x))
                    .with("component", cod.morphism_name(c)),
            );
        }
    }
    if !report.is_pass() {
        return report;
    }
    for f in dom.morphisms() {
        let (x, y) = (dom.source(f), dom.target(f));
        let lhs = cod.compose(alpha.at(y), f_src.mor(f)).ok();
        let rhs = cod.compose(f_tgt.mor(f), alpha.at(x)).ok();
        if lhs.is_none() || lhs != rhs {
            report.push(
                Violation::new(Law::Naturality, "naturality square does not commute")
                    .with("f", dom.morphism_name(f)),
            );
        }
    }
    report
}

/// Godement product of `outer: g => g'` and `inner: f => f'`, a
/// transformation `g.f => g'.f'`. Both composite formulas are evaluated; a
/// disagreement is reported as [`Error::InterchangeFailure`].
pub fn godement_product(outer: &NatTrans, inner: &NatTrans) -> Result<NatTrans> {
    if !same_cat(inner.cod(), outer.dom()) {
        return Err(Error::IncompatibleFunctors(
            "inner codomain differs from outer domain".into(),
        ));
    }
    let cat = outer.cod();
    let (f, f2) = (&inner.source, &inner.target);
    let (g, g2) = (&outer.source, &outer.target);
    let mut components = Vec::with_capacity(inner.dom().num_objects());
    for m in inner.dom().objects() {
        let first = cat.compose(g2.mor(inner.at(m)), outer.at(f.obj(m)))?;
        let second = cat.compose(outer.at(f2.obj(m)), g.mor(inner.at(m)))?;
        if first != second {
            return Err(Error::InterchangeFailure(
                inner.dom().object_name(m).to_owned(),
            ));
        }
        components.push(first);
    }
    NatTrans::new(g.after(f)?, g2.after(f2)?, components)
}

/// `G(alpha)`: whiskering on the left by a functor.
pub fn whisker_left(functor: &Functor, alpha: &NatTrans) -> Result<NatTrans> {
    godement_product(&NatTrans::identity(functor), alpha)
}

/// `alpha_F`: whiskering on the right by a functor.
pub fn whisker_right(alpha: &NatTrans, functor: &Functor) -> Result<NatTrans> {
    godement_product(alpha, &NatTrans::identity(functor))
}

/// A functor of two variables `left x right -> cod`, tabulated on pairs.
#[derive(Debug, Clone)]
pub struct Bifunctor {
    pub left: Arc<FinCategory>,
    pub right: Arc<FinCategory>,
    pub cod: Arc<FinCategory>,
    obj_map: Vec<ObjId>,
    mor_map: Vec<MorId>,
}

impl PartialEq for Bifunctor {
    fn eq(&self, other: &Self) -> bool {
        self.obj_map == other.obj_map
            && self.mor_map == other.mor_map
            && same_cat(&self.left, &other.left)
            && same_cat(&self.right, &other.right)
            && same_cat(&self.cod, &other.cod)
    }
}

impl Eq for Bifunctor {}

impl Bifunctor {
    pub fn from_fn(
        left: Arc<FinCategory>,
        right: Arc<FinCategory>,
        cod: Arc<FinCategory>,
        obj: impl Fn(ObjId, ObjId) -> ObjId,
        mor: impl Fn(MorId, MorId) -> Result<MorId>,
    ) -> Result<Self> {
        let mut obj_map = Vec::with_capacity(left.num_objects() * right.num_objects());
        for x in left.objects() {
            for y in right.objects() {
                let z = obj(x, y);
                if z.0 >= cod.num_objects() {
                    return Err(Error::Malformed("bifunctor object outside codomain".into()));
                }
                obj_map.push(z);
            }
        }
        let mut mor_map = Vec::with_capacity(left.num_morphisms() * right.num_morphisms());
        for f in left.morphisms() {
            for g in right.morphisms() {
                let h = mor(f, g)?;
                if h.0 >= cod.num_morphisms() {
                    return Err(Error::Malformed(
                        "bifunctor morphism outside codomain".into(),
                    ));
                }
                mor_map.push(h);
            }
        }
        Ok(Bifunctor {
            left,
            right,
            cod,
            obj_map,
            mor_map,
        })
    }

    /// Object table given; morphisms go to the unique morphism between image
    /// endpoints.
    pub fn from_object_fn_thin(
        left: Arc<FinCategory>,
        right: Arc<FinCategory>,
        cod: Arc<FinCategory>,
        obj: impl Fn(ObjId, ObjId) -> ObjId,
    ) -> Result<Self> {
        let (l, r, c) = (left.clone(), right.clone(), cod.clone());
        Bifunctor::from_fn(left, right, cod, &obj, |f, g| {
            let s = obj(l.source(f), r.source(g));
            let t = obj(l.target(f), r.target(g));
            c.unique_morphism(s, t, "bifunctor image")
        })
    }

    pub fn obj(&self, x: ObjId, y: ObjId) -> ObjId {
        self.obj_map[x.0 * self.right.num_objects() + y.0]
    }

    pub fn mor(&self, f: MorId, g: MorId) -> MorId {
        self.mor_map[f.0 * self.right.num_morphisms() + g.0]
    }

    /// `f (x) Y` with the identity in the right slot.
    pub fn mor_left(&self, f: MorId, y: ObjId) -> MorId {
        self.mor(f, self.right.id(y))
    }

    /// `X (x) g` with the identity in the left slot.
    pub fn mor_right(&self, x: ObjId, g: MorId) -> MorId {
        self.mor(self.left.id(x), g)
    }

    /// The functor `_ (x) y`.
    pub fn fix_right(&self, y: ObjId) -> Functor {
        Functor {
            dom: self.left.clone(),
            cod: self.cod.clone(),
            obj_map: self.left.objects().map(|x| self.obj(x, y)).collect(),
            mor_map: self.left.morphisms().map(|f| self.mor_left(f, y)).collect(),
        }
    }

    /// The functor `x (x) _`.
    pub fn fix_left(&self, x: ObjId) -> Functor {
        Functor {
            dom: self.right.clone(),
            cod: self.cod.clone(),
            obj_map: self.right.objects().map(|y| self.obj(x, y)).collect(),
            mor_map: self
                .right
                .morphisms()
                .map(|g| self.mor_right(x, g))
                .collect(),
        }
    }

    pub fn with_obj_entry(&self, x: ObjId, y: ObjId, value: ObjId) -> Self {
        let mut out = self.clone();
        let k = out.right.num_objects();
        out.obj_map[x.0 * k + y.0] = value;
        out
    }

    pub fn with_mor_entry(&self, f: MorId, g: MorId, value: MorId) -> Self {
        let mut out = self.clone();
        let n = out.right.num_morphisms();
        out.mor_map[f.0 * n + g.0] = value;
        out
    }

    pub fn obj_table(&self) -> &[ObjId] {
        &self.obj_map
    }

    pub fn mor_table(&self) -> &[MorId] {
        &self.mor_map
    }
}

pub fn check_bifunctor(b: &Bifunctor) -> Report {
    let (l, r, c) = (&b.left, &b.right, &b.cod);
    let mut report = Report::new();
    for f in l.morphisms() {
        for g in r.morphisms() {
            let h = b.mor(f, g);
            if c.source(h) != b.obj(l.source(f), r.source(g))
                || c.target(h) != b.obj(l.target(f), r.target(g))
            {
                report.push(
                    Violation::new(
                        Law::FunctorEndpoints,
                        "image of a morphism pair has wrong endpoints",
                    )
                    .with("f", l.morphism_name(f))
                    .with("g", r.morphism_name(g)),
                );
            }
        }
    }
    for x in l.objects() {
        for y in r.objects() {
            if b.mor(l.id(x), r.id(y)) != c.id(b.obj(x, y)) {
                report.push(
                    Violation::new(Law::FunctorIdentity, "id (x) id is not an identity")
                        .with("X", l.object_name(x))
                        .with("Y", r.object_name(y)),
                );
            }
        }
    }
    if !report.is_pass() {
        return report;
    }
    let lc: Vec<_> = l
        .comp_entries()
        .into_iter()
        .filter(|&(g, f, _)| l.target(f) == l.source(g))
        .collect();
    let rc: Vec<_> = r
        .comp_entries()
        .into_iter()
        .filter(|&(g, f, _)| r.target(f) == r.source(g))
        .collect();
    for &(f2, f1, f21) in &lc {
        for &(g2, g1, g21) in &rc {
            let composite = c.compose(b.mor(f2, g2), b.mor(f1, g1)).ok();
            if composite != Some(b.mor(f21, g21)) {
                report.push(
                    Violation::new(
                        Law::FunctorComposition,
                        "(f'.f) (x) (g'.g) != (f' (x) g').(f (x) g)",
                    )
                    .with("f'", l.morphism_name(f2))
                    .with("f", l.morphism_name(f1))
                    .with("g'", r.morphism_name(g2))
                    .with("g", r.morphism_name(g1)),
                );
            }
        }
    }
    report
}
