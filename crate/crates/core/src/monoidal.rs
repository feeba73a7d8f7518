//! Monoidal structure on a finite category and monoid objects.
//!
//! Coherence data is oriented with the unit comparisons pointing away from
//! `X`: `rho_X : X -> X (x) 1` and `lambda_X : X -> 1 (x) X`; the associator
//! is `a_{X,Y,Z} : X (x) (Y (x) Z) -> (X (x) Y) (x) Z`.

use std::sync::Arc;

use crate::category::{commutes, FinCategory, MorId, ObjId};
use crate::error::{Error, Result};
use crate::functor::{check_bifunctor, same_cat, Bifunctor, Functor};
use crate::report::{Law, Report, Violation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidalCategory {
    pub base: Arc<FinCategory>,
    pub tensor: Bifunctor,
    pub unit: ObjId,
    /// `assoc[(x * k + y) * k + z]`.
    pub assoc: Vec<MorId>,
    pub runit: Vec<MorId>,
    pub lunit: Vec<MorId>,
    pub strict: bool,
}

impl MonoidalCategory {
    pub fn new(
        base: Arc<FinCategory>,
        tensor: Bifunctor,
        unit: ObjId,
        assoc: Vec<MorId>,
        runit: Vec<MorId>,
        lunit: Vec<MorId>,
        strict: bool,
    ) -> Result<Self> {
        let k = base.num_objects();
        if !same_cat(&tensor.left, &base)
            || !same_cat(&tensor.right, &base)
            || !same_cat(&tensor.cod, &base)
        {
            return Err(Error::Malformed(
                "tensor must be an endo-bifunctor of the base".into(),
            ));
        }
        if unit.0 >= k || assoc.len() != k * k * k || runit.len() != k || lunit.len() != k {
            return Err(Error::Malformed(
                "monoidal coherence tables have the wrong size".into(),
            ));
        }
        let n = base.num_morphisms();
        if assoc.iter().chain(&runit).chain(&lunit).any(|m| m.0 >= n) {
            return Err(Error::Malformed("coherence component out of range".into()));
        }
        Ok(MonoidalCategory {
            base,
            tensor,
            unit,
            assoc,
            runit,
            lunit,
            strict,
        })
    }

    /// Strict structure: every coherence component is an identity. Whether
    /// those identities are well typed is left to [`check_monoidal`].
    pub fn strict(base: Arc<FinCategory>, tensor: Bifunctor, unit: ObjId) -> Result<Self> {
        let mut assoc = Vec::new();
        for x in base.objects() {
            for y in base.objects() {
                for z in base.objects() {
                    assoc.push(base.id(tensor.obj(x, tensor.obj(y, z))));
                }
            }
        }
        let ids: Vec<MorId> = base.objects().map(|x| base.id(x)).collect();
        MonoidalCategory::new(base, tensor, unit, assoc, ids.clone(), ids, true)
    }

    pub fn num_objects(&self) -> usize {
        self.base.num_objects()
    }

    pub fn t(&self, x: ObjId, y: ObjId) -> ObjId {
        self.tensor.obj(x, y)
    }

    pub fn tm(&self, f: MorId, g: MorId) -> MorId {
        self.tensor.mor(f, g)
    }

    fn aidx(&self, x: ObjId, y: ObjId, z: ObjId) -> usize {
        let k = self.num_objects();
        (x.0 * k + y.0) * k + z.0
    }

    pub fn assoc_at(&self, x: ObjId, y: ObjId, z: ObjId) -> MorId {
        self.assoc[self.aidx(x, y, z)]
    }

    pub fn runit_at(&self, x: ObjId) -> MorId {
        self.runit[x.0]
    }

    pub fn lunit_at(&self, x: ObjId) -> MorId {
        self.lunit[x.0]
    }

    pub fn assoc_inverse(&self, x: ObjId, y: ObjId, z: ObjId) -> Result<MorId> {
        let a = self.assoc_at(x, y, z);
        self.base
            .inverse(a)
            .ok_or_else(|| Error::NotInvertible(self.base.morphism_name(a).to_owned()))
    }

    pub fn with_assoc(&self, x: ObjId, y: ObjId, z: ObjId, m: MorId) -> Self {
        let mut out = self.clone();
        let i = out.aidx(x, y, z);
        out.assoc[i] = m;
        out
    }

    pub fn with_runit(&self, x: ObjId, m: MorId) -> Self {
        let mut out = self.clone();
        out.runit[x.0] = m;
        out
    }

    pub fn with_lunit(&self, x: ObjId, m: MorId) -> Self {
        let mut out = self.clone();
        out.lunit[x.0] = m;
        out
    }

    fn name(&self, x: ObjId) -> &str {
        self.base.object_name(x)
    }
}

pub fn check_monoidal(c: &MonoidalCategory) -> Report {
    let mut report = check_bifunctor(&c.tensor);
    if !report.is_pass() {
        return report;
    }
    let cat = &c.base;
    let one = c.unit;
    let objs: Vec<ObjId> = cat.objects().collect();

    // typing
    for &x in &objs {
        for &y in &objs {
            for &z in &objs {
                let a = c.assoc_at(x, y, z);
                if cat.source(a) != c.t(x, c.t(y, z)) || cat.target(a) != c.t(c.t(x, y), z) {
                    report.push(
                        Violation::new(
                            Law::ComponentTyping,
                            "associator component has wrong endpoints",
                        )
                        .with("X", c.name(x))
                        .with("Y", c.name(y))
                        .with("Z", c.name(z)),
                    );
                }
            }
        }
        let r = c.runit_at(x);
        if cat.source(r) != x || cat.target(r) != c.t(x, one) {
            report.push(
                Violation::new(Law::ComponentTyping, "rho_X is not X -> X (x) 1")
                    .with("X", c.name(x)),
            );
        }
        let l = c.lunit_at(x);
        if cat.source(l) != x || cat.target(l) != c.t(one, x) {
            report.push(
                Violation::new(Law::ComponentTyping, "lambda_X is not X -> 1 (x) X")
                    .with("X", c.name(x)),
            );
        }
    }
    if !report.is_pass() {
        return report;
    }

    for (i, &m) in c.assoc.iter().chain(&c.runit).chain(&c.lunit).enumerate() {
        if !cat.is_iso(m) {
            let family = if i < c.assoc.len() {
                "assoc"
            } else if i < c.assoc.len() + c.runit.len() {
                "runit"
            } else {
                "lunit"
            };
            report.push(
                Violation::new(Law::Isomorphism, "coherence component is not invertible")
                    .with("family", family)
                    .with("component", cat.morphism_name(m)),
            );
        }
        if c.strict && !cat.is_identity(m) {
            report.push(
                Violation::new(
                    Law::Strictness,
                    "strict structure with a non-identity coherence component",
                )
                .with("component", cat.morphism_name(m)),
            );
        }
    }

    // naturality of the associator, one variable at a time
    let id = |x: ObjId| cat.id(x);
    for f in cat.morphisms() {
        let (s, t) = (cat.source(f), cat.target(f));
        for &u in &objs {
            for &v in &objs {
                let slots = [
                    (
                        c.assoc_at(t, u, v),
                        c.tm(f, id(c.t(u, v))),
                        c.tm(c.tm(f, id(u)), id(v)),
                        c.assoc_at(s, u, v),
                    ),
                    (
                        c.assoc_at(u, t, v),
                        c.tm(id(u), c.tm(f, id(v))),
                        c.tm(c.tm(id(u), f), id(v)),
                        c.assoc_at(u, s, v),
                    ),
                    (
                        c.assoc_at(u, v, t),
                        c.tm(id(u), c.tm(id(v), f)),
                        c.tm(id(c.t(u, v)), f),
                        c.assoc_at(u, v, s),
                    ),
                ];
                for (slot, (a_t, before, after, a_s)) in slots.into_iter().enumerate() {
                    if !commutes(cat, &[a_t, before], &[after, a_s]) {
                        report.push(
                            Violation::new(Law::Naturality, "associator not natural")
                                .with("slot", (slot + 1).to_string())
                                .with("f", cat.morphism_name(f))
                                .with("U", c.name(u))
                                .with("V", c.name(v)),
                        );
                    }
                }
            }
        }
        if !commutes(cat, &[c.tm(f, id(one)), c.runit_at(s)], &[c.runit_at(t), f]) {
            report.push(
                Violation::new(Law::Naturality, "rho not natural").with("f", cat.morphism_name(f)),
            );
        }
        if !commutes(cat, &[c.tm(id(one), f), c.lunit_at(s)], &[c.lunit_at(t), f]) {
            report.push(
                Violation::new(Law::Naturality, "lambda not natural")
                    .with("f", cat.morphism_name(f)),
            );
        }
    }

    for &x in &objs {
        for &y in &objs {
            for &z in &objs {
                for &w in &objs {
                    let lhs = [c.assoc_at(c.t(x, y), z, w), c.assoc_at(x, y, c.t(z, w))];
                    let rhs = [
                        c.tm(c.assoc_at(x, y, z), id(w)),
                        c.assoc_at(x, c.t(y, z), w),
                        c.tm(id(x), c.assoc_at(y, z, w)),
                    ];
                    if !commutes(cat, &lhs, &rhs) {
                        report.push(
                            Violation::new(Law::Pentagon, "pentagon does not commute")
                                .with("X", c.name(x))
                                .with("Y", c.name(y))
                                .with("Z", c.name(z))
                                .with("W", c.name(w)),
                        );
                    }
                }
            }
            // a_{X,1,Y} . (X (x) lambda_Y) = rho_X (x) Y
            let lhs = [c.assoc_at(x, one, y), c.tm(id(x), c.lunit_at(y))];
            let rhs = [c.tm(c.runit_at(x), id(y))];
            if !commutes(cat, &lhs, &rhs) {
                report.push(
                    Violation::new(Law::Triangle, "triangle does not commute")
                        .with("X", c.name(x))
                        .with("Y", c.name(y)),
                );
            }
        }
    }
    report
}

/// A monoid `(B, m : B (x) B -> B, e : 1 -> B)` in a monoidal category.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonoidObject {
    pub carrier: ObjId,
    pub mult: MorId,
    pub unit_mor: MorId,
}

impl MonoidObject {
    /// Checks only the endpoints of the structure maps.
    pub fn new(c: &MonoidalCategory, carrier: ObjId, mult: MorId, unit_mor: MorId) -> Result<Self> {
        let cat = &c.base;
        let bb = c.t(carrier, carrier);
        if cat.source(mult) != bb || cat.target(mult) != carrier {
            return Err(Error::Malformed(format!(
                "multiplication `{}` is not B (x) B -> B",
                cat.morphism_name(mult)
            )));
        }
        if cat.source(unit_mor) != c.unit || cat.target(unit_mor) != carrier {
            return Err(Error::Malformed(format!(
                "unit `{}` is not 1 -> B",
                cat.morphism_name(unit_mor)
            )));
        }
        Ok(MonoidObject {
            carrier,
            mult,
            unit_mor,
        })
    }

    /// Monoid whose structure maps are the unique morphisms of their type.
    pub fn unique(c: &MonoidalCategory, carrier: ObjId) -> Result<Self> {
        let cat = &c.base;
        let mult = cat.unique_morphism(c.t(carrier, carrier), carrier, "monoid multiplication")?;
        let unit_mor = cat.unique_morphism(c.unit, carrier, "monoid unit")?;
        Ok(MonoidObject {
            carrier,
            mult,
            unit_mor,
        })
    }

    /// The unit object with the inverse of `rho_1` as multiplication.
    pub fn trivial(c: &MonoidalCategory) -> Result<Self> {
        let cat = &c.base;
        let r = c.runit_at(c.unit);
        let mult = cat
            .inverse(r)
            .ok_or_else(|| Error::NotInvertible(cat.morphism_name(r).to_owned()))?;
        MonoidObject::new(c, c.unit, mult, cat.id(c.unit))
    }
}

pub fn check_monoid(c: &MonoidalCategory, b: &MonoidObject) -> Report {
    let cat = &c.base;
    let mut report = Report::new();
    let x = b.carrier;
    let id_b = cat.id(x);
    // m . (m (x) B) . a_{B,B,B} = m . (B (x) m)
    let lhs = [b.mult, c.tm(b.mult, id_b), c.assoc_at(x, x, x)];
    let rhs = [b.mult, c.tm(id_b, b.mult)];
    if !commutes(cat, &lhs, &rhs) {
        report.push(
            Violation::new(
                Law::MonoidAssociativity,
                "monoid multiplication is not associative",
            )
            .with("B", cat.object_name(x)),
        );
    }
    if !commutes(
        cat,
        &[b.mult, c.tm(id_b, b.unit_mor), c.runit_at(x)],
        &[id_b],
    ) {
        report.push(
            Violation::new(Law::MonoidUnit, "right unit law fails").with("B", cat.object_name(x)),
        );
    }
    if !commutes(
        cat,
        &[b.mult, c.tm(b.unit_mor, id_b), c.lunit_at(x)],
        &[id_b],
    ) {
        report.push(
            Violation::new(Law::MonoidUnit, "left unit law fails").with("B", cat.object_name(x)),
        );
    }
    report
}

/// Lax monoidal functor data. Only naturality of `chi` and the endpoints of
/// `chi` and `xi` are checked; the remaining coherence is not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidalFunctorData {
    pub source: Arc<MonoidalCategory>,
    pub target: Arc<MonoidalCategory>,
    pub functor: Functor,
    /// `chi[x * k + y] : F(x) (x)' F(y) -> F(x (x) y)`.
    pub chi: Vec<MorId>,
    /// `xi[x] : F(x) (x)' 1' -> F(x (x) 1)`.
    pub xi: Vec<MorId>,
}

pub fn check_monoidal_functor_data(data: &MonoidalFunctorData) -> Report {
    let (a, b, f) = (&data.source, &data.target, &data.functor);
    let cat = &b.base;
    let k = a.num_objects();
    let mut report = Report::new();
    if data.chi.len() != k * k || data.xi.len() != k {
        report.push(Violation::new(
            Law::Malformed,
            "chi/xi tables have the wrong size",
        ));
        return report;
    }
    let chi = |x: ObjId, y: ObjId| data.chi[x.0 * k + y.0];
    for x in a.base.objects() {
        for y in a.base.objects() {
            let m = chi(x, y);
            if cat.source(m) != b.t(f.obj(x), f.obj(y)) || cat.target(m) != f.obj(a.t(x, y)) {
                report.push(
                    Violation::new(Law::ComponentTyping, "chi component has wrong endpoints")
                        .with("X", a.base.object_name(x))
                        .with("Y", a.base.object_name(y)),
                );
            }
        }
        let m = data.xi[x.0];
        if cat.source(m) != b.t(f.obj(x), b.unit) || cat.target(m) != f.obj(a.t(x, a.unit)) {
            report.push(
                Violation::new(Law::ComponentTyping, "xi component has wrong endpoints")
                    .with("X", a.base.object_name(x)),
            );
        }
    }
    if !report.is_pass() {
        return report;
    }
    for g in a.base.morphisms() {
        let (s, t) = (a.base.source(g), a.base.target(g));
        for y in a.base.objects() {
            let id_y = a.base.id(y);
            let left = commutes(
                cat,
                &[chi(t, y), b.tm(f.mor(g), cat.id(f.obj(y)))],
                &[f.mor(a.tm(g, id_y)), chi(s, y)],
            );
            let right = commutes(
                cat,
                &[chi(y, t), b.tm(cat.id(f.obj(y)), f.mor(g))],
                &[f.mor(a.tm(id_y, g)), chi(y, s)],
            );
            if !left || !right {
                report.push(
                    Violation::new(Law::Naturality, "chi not natural")
                        .with("g", a.base.morphism_name(g))
                        .with("Y", a.base.object_name(y)),
                );
            }
        }
    }
    report
}
