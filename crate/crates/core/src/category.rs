//! Finite categories with explicit composition tables.
//!
//! Everything is tabulated: objects and morphisms are indices, identities are
//! a total map, and composition is a partial table that may be arbitrary.
//! [`check_category`] decides whether a table actually is a category, so
//! deliberately broken tables are representable.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::report::{Law, Report, Violation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ObjId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MorId(pub usize);

impl fmt::Display for ObjId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

impl fmt::Display for MorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismData {
    pub name: String,
    pub source: ObjId,
    pub target: ObjId,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCategory {
    objects: Vec<String>,
    morphisms: Vec<MorphismData>,
    identity: Vec<MorId>,
    /// `comp[g * n + f]` is `g . f` when defined.
    comp: Vec<Option<MorId>>,
    /// `homs[x * k + y]` lists morphisms `x -> y` in index order.
    homs: Vec<Vec<MorId>>,
}

impl FinCategory {
    /// Assembles a category from raw tables. Only index ranges are validated;
    /// the category laws are left to [`check_category`].
    pub fn from_parts(
        objects: Vec<String>,
        morphisms: Vec<MorphismData>,
        identity: Vec<MorId>,
        comp: impl IntoIterator<Item = (MorId, MorId, MorId)>,
    ) -> Result<Self> {
        let k = objects.len();
        let n = morphisms.len();
        if identity.len() != k {
            return Err(Error::Malformed(format!(
                "identity map has {} entries for {k} objects",
                identity.len()
            )));
        }
        for m in &morphisms {
            if m.source.0 >= k || m.target.0 >= k {
                return Err(Error::Malformed(format!(
                    "morphism `{}` has an endpoint out of range",
                    m.name
                )));
            }
        }
        if let Some(bad) = identity.iter().find(|m| m.0 >= n) {
            return Err(Error::Malformed(format!("identity {bad} out of range")));
        }
        let mut table = vec![None; n * n];
        for (g, f, h) in comp {
            if g.0 >= n || f.0 >= n || h.0 >= n {
                return Err(Error::Malformed(format!(
                    "composition entry ({g}, {f}) -> {h} out of range"
                )));
            }
            table[g.0 * n + f.0] = Some(h);
        }
        let mut cat = FinCategory {
            objects,
            morphisms,
            identity,
            comp: table,
            homs: Vec::new(),
        };
        cat.rebuild_homs();
        Ok(cat)
    }

    pub fn builder() -> CategoryBuilder {
        CategoryBuilder::default()
    }

    fn rebuild_homs(&mut self) {
        let k = self.objects.len();
        let mut homs = vec![Vec::new(); k * k];
        for (i, m) in self.morphisms.iter().enumerate() {
            homs[m.source.0 * k + m.target.0].push(MorId(i));
        }
        self.homs = homs;
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_morphisms(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = ObjId> + Clone {
        (0..self.objects.len()).map(ObjId)
    }

    pub fn morphisms(&self) -> impl Iterator<Item = MorId> + Clone {
        (0..self.morphisms.len()).map(MorId)
    }

    pub fn object_name(&self, x: ObjId) -> &str {
        &self.objects[x.0]
    }

    pub fn morphism_name(&self, f: MorId) -> &str {
        &self.morphisms[f.0].name
    }

    pub fn morphism(&self, f: MorId) -> &MorphismData {
        &self.morphisms[f.0]
    }

    pub fn source(&self, f: MorId) -> ObjId {
        self.morphisms[f.0].source
    }

    pub fn target(&self, f: MorId) -> ObjId {
        self.morphisms[f.0].target
    }

    pub fn id(&self, x: ObjId) -> MorId {
        self.identity[x.0]
    }

    pub fn hom(&self, x: ObjId, y: ObjId) -> &[MorId] {
        &self.homs[x.0 * self.objects.len() + y.0]
    }

    pub fn find_object(&self, name: &str) -> Option<ObjId> {
        self.objects.iter().position(|o| o == name).map(ObjId)
    }

    pub fn find_morphism(&self, name: &str) -> Option<MorId> {
        self.morphisms
            .iter()
            .position(|m| m.name == name)
            .map(MorId)
    }

    pub fn object(&self, name: &str) -> Result<ObjId> {
        self.find_object(name)
            .ok_or_else(|| Error::UnknownObject(name.to_owned()))
    }

    pub fn morphism_named(&self, name: &str) -> Result<MorId> {
        self.find_morphism(name)
            .ok_or_else(|| Error::UnknownMorphism(name.to_owned()))
    }

    /// Raw table lookup, ignoring endpoints.
    pub fn comp_entry(&self, g: MorId, f: MorId) -> Option<MorId> {
        self.comp[g.0 * self.morphisms.len() + f.0]
    }

    /// `g . f`.
    pub fn compose(&self, g: MorId, f: MorId) -> Result<MorId> {
        if self.target(f) != self.source(g) {
            return Err(self.undefined(g, f));
        }
        self.comp_entry(g, f).ok_or_else(|| self.undefined(g, f))
    }

    fn undefined(&self, g: MorId, f: MorId) -> Error {
        Error::CompositionUndefined {
            g: self.morphism_name(g).to_owned(),
            f: self.morphism_name(f).to_owned(),
        }
    }

    /// Composes a path written in diagram order reversed: `[h, g, f]` is
    /// `h . g . f`.
    pub fn compose_all(&self, path: &[MorId]) -> Result<MorId> {
        let (&last, rest) = path
            .split_last()
            .ok_or_else(|| Error::Malformed("empty composition path".into()))?;
        rest.iter()
            .rev()
            .try_fold(last, |acc, &g| self.compose(g, acc))
    }

    pub fn is_identity(&self, f: MorId) -> bool {
        self.identity[self.source(f).0] == f
    }

    /// Two-sided inverse, searched in the table.
    pub fn inverse(&self, f: MorId) -> Option<MorId> {
        let (x, y) = (self.source(f), self.target(f));
        self.hom(y, x).iter().copied().find(|&g| {
            self.compose(g, f).ok() == Some(self.id(x))
                && self.compose(f, g).ok() == Some(self.id(y))
        })
    }

    pub fn is_iso(&self, f: MorId) -> bool {
        self.inverse(f).is_some()
    }

    /// Unique morphism `x -> y`, or an error naming `role`.
    pub fn unique_morphism(&self, x: ObjId, y: ObjId, role: &str) -> Result<MorId> {
        match self.hom(x, y) {
            [m] => Ok(*m),
            [] => Err(Error::NoMorphism {
                role: role.to_owned(),
                source_obj: self.object_name(x).to_owned(),
                target_obj: self.object_name(y).to_owned(),
            }),
            many => Err(Error::AmbiguousMorphism {
                role: role.to_owned(),
                source_obj: self.object_name(x).to_owned(),
                target_obj: self.object_name(y).to_owned(),
                count: many.len(),
            }),
        }
    }

    /// Copy with one composition entry replaced.
    pub fn with_comp_entry(&self, g: MorId, f: MorId, value: Option<MorId>) -> Self {
        let mut out = self.clone();
        let n = out.morphisms.len();
        out.comp[g.0 * n + f.0] = value;
        out
    }

    /// Copy with the identity of `x` reassigned.
    pub fn with_identity(&self, x: ObjId, m: MorId) -> Self {
        let mut out = self.clone();
        out.identity[x.0] = m;
        out
    }

    /// All defined composition entries `(g, f, g . f)` in index order.
    pub fn comp_entries(&self) -> Vec<(MorId, MorId, MorId)> {
        let n = self.morphisms.len();
        self.comp
            .iter()
            .enumerate()
            .filter_map(|(i, h)| h.map(|h| (MorId(i / n), MorId(i % n), h)))
            .collect()
    }

    pub fn object_names(&self) -> &[String] {
        &self.objects
    }

    pub fn morphism_data(&self) -> &[MorphismData] {
        &self.morphisms
    }

    pub fn identities(&self) -> &[MorId] {
        &self.identity
    }

    /// True when every hom-set has at most one element.
    pub fn is_thin(&self) -> bool {
        self.homs.iter().all(|h| h.len() <= 1)
    }

    pub fn max_hom_size(&self) -> usize {
        self.homs.iter().map(Vec::len).max().unwrap_or(0)
    }
}

/// Endpoints swapped and the composition table transposed. Names are kept,
/// so `opposite(opposite(c)) == c` holds as table equality.
pub fn opposite(cat: &FinCategory) -> FinCategory {
    let morphisms = cat
        .morphisms
        .iter()
        .map(|m| MorphismData {
            name: m.name.clone(),
            source: m.target,
            target: m.source,
        })
        .collect();
    let comp = cat.comp_entries().into_iter().map(|(g, f, h)| (f, g, h));
    FinCategory::from_parts(cat.objects.clone(), morphisms, cat.identity.clone(), comp)
        .expect("opposite preserves index ranges")
}

pub fn check_category(cat: &FinCategory) -> Report {
    let mut report = Report::new();
    let n = cat.num_morphisms();
    for x in cat.objects() {
        let i = cat.id(x);
        if cat.source(i) != x || cat.target(i) != x {
            report.push(
                Violation::new(
                    Law::IdentityTyping,
                    "identity does not have both endpoints at its object",
                )
                .with("object", cat.object_name(x))
                .with("identity", cat.morphism_name(i)),
            );
        }
    }
    for g in cat.morphisms() {
        for f in cat.morphisms() {
            let entry = cat.comp[g.0 * n + f.0];
            let composable = cat.target(f) == cat.source(g);
            match (composable, entry) {
                (true, None) => report.push(
                    Violation::new(
                        Law::CompositionMissing,
                        "composable pair has no table entry",
                    )
                    .with("g", cat.morphism_name(g))
                    .with("f", cat.morphism_name(f)),
                ),
                (false, Some(h)) => report.push(
                    Violation::new(
                        Law::CompositionTyping,
                        "entry defined for a non-composable pair",
                    )
                    .with("g", cat.morphism_name(g))
                    .with("f", cat.morphism_name(f))
                    .with("g.f", cat.morphism_name(h)),
                ),
                (true, Some(h)) => {
                    if cat.source(h) != cat.source(f) || cat.target(h) != cat.target(g) {
                        report.push(
                            Violation::new(Law::CompositionTyping, "composite has wrong endpoints")
                                .with("g", cat.morphism_name(g))
                                .with("f", cat.morphism_name(f))
                                .with("g.f", cat.morphism_name(h)),
                        );
                    }
                }
                (false, None) => {}
            }
        }
    }
    for f in cat.morphisms() {
        let left = cat.compose(cat.id(cat.target(f)), f).ok();
        if left != Some(f) {
            report
                .push(Violation::new(Law::LeftUnit, "id . f != f").with("f", cat.morphism_name(f)));
        }
        let right = cat.compose(f, cat.id(cat.source(f))).ok();
        if right != Some(f) {
            report.push(
                Violation::new(Law::RightUnit, "f . id != f").with("f", cat.morphism_name(f)),
            );
        }
    }
    let outs: Vec<Vec<MorId>> = cat.objects().map(|x| cat.hom_from(x)).collect();
    for f in cat.morphisms() {
        for &g in &outs[cat.target(f).0] {
            let Ok(gf) = cat.compose(g, f) else { continue };
            for &h in &outs[cat.target(g).0] {
                let Ok(hg) = cat.compose(h, g) else { continue };
                let lhs = cat.compose(h, gf).ok();
                let rhs = cat.compose(hg, f).ok();
                if lhs != rhs {
                    report.push(
                        Violation::new(Law::Associativity, "h.(g.f) != (h.g).f")
                            .with("h", cat.morphism_name(h))
                            .with("g", cat.morphism_name(g))
                            .with("f", cat.morphism_name(f)),
                    );
                }
            }
        }
    }
    report
}

impl FinCategory {
    /// Morphisms with the given source, in index order.
    pub fn hom_from(&self, x: ObjId) -> Vec<MorId> {
        self.morphisms().filter(|&m| self.source(m) == x).collect()
    }
}

/// Incremental construction; each object gets an identity `id_<name>`, and
/// unit-law entries are filled in on [`CategoryBuilder::build`] unless
/// already present.
#[derive(Debug, Default)]
pub struct CategoryBuilder {
    objects: Vec<String>,
    morphisms: Vec<MorphismData>,
    identity: Vec<MorId>,
    comp: HashMap<(MorId, MorId), MorId>,
}

impl CategoryBuilder {
    pub fn object(&mut self, name: impl Into<String>) -> ObjId {
        let name = name.into();
        let x = ObjId(self.objects.len());
        let id = MorId(self.morphisms.len());
        self.morphisms.push(MorphismData {
            name: format!("id_{name}"),
            source: x,
            target: x,
        });
        self.objects.push(name);
        self.identity.push(id);
        x
    }

    pub fn morphism(&mut self, name: impl Into<String>, source: ObjId, target: ObjId) -> MorId {
        let f = MorId(self.morphisms.len());
        self.morphisms.push(MorphismData {
            name: name.into(),
            source,
            target,
        });
        f
    }

    /// Records `g . f = h`.
    pub fn compose(&mut self, g: MorId, f: MorId, h: MorId) -> &mut Self {
        self.comp.insert((g, f), h);
        self
    }

    pub fn build(self) -> Result<FinCategory> {
        let CategoryBuilder {
            objects,
            morphisms,
            identity,
            mut comp,
        } = self;
        for (i, m) in morphisms.iter().enumerate() {
            let f = MorId(i);
            if let Some(&id_t) = identity.get(m.target.0) {
                comp.entry((id_t, f)).or_insert(f);
            }
            if let Some(&id_s) = identity.get(m.source.0) {
                comp.entry((f, id_s)).or_insert(f);
            }
        }
        let mut entries: Vec<_> = comp.into_iter().map(|((g, f), h)| (g, f, h)).collect();
        entries.sort();
        FinCategory::from_parts(objects, morphisms, identity, entries)
    }
}

/// Whether two composable paths (each written outermost first) have the same
/// composite. Ill-typed paths never commute.
pub(crate) fn commutes(cat: &FinCategory, lhs: &[MorId], rhs: &[MorId]) -> bool {
    match (cat.compose_all(lhs), cat.compose_all(rhs)) {
        (Ok(a), Ok(b)) => a == b,
        _ => false,
    }
}
