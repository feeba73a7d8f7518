//! Small stock structures: chains, discrete categories, cyclic groups,
//! finite-set categories, and the monoidal structures, actions and monads
//! built on them that the examples, fixtures and tests share.

use std::sync::Arc;

use crate::action::MonoidalAction;
use crate::category::{FinCategory, MorId, MorphismData, ObjId};
use crate::error::Result;
use crate::functor::{Bifunctor, Functor};
use crate::monad::Monad;
use crate::monoidal::MonoidalCategory;

/// The poset `0 < 1 < ... < n-1`; the morphism `i -> j` is named `i<j`.
pub fn chain(n: usize) -> FinCategory {
    let mut b = FinCategory::builder();
    let objs: Vec<ObjId> = (0..n).map(|i| b.object(i.to_string())).collect();
    let mut arrow = vec![vec![None; n]; n];
    for i in 0..n {
        arrow[i][i] = Some(MorId(i));
        for j in i + 1..n {
            arrow[i][j] = Some(b.morphism(format!("{i}<{j}"), objs[i], objs[j]));
        }
    }
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                let (f, g, h) = (
                    arrow[i][j].unwrap(),
                    arrow[j][k].unwrap(),
                    arrow[i][k].unwrap(),
                );
                b.compose(g, f, h);
            }
        }
    }
    b.build().expect("chain tables are in range")
}

/// `n` objects and identities only.
pub fn discrete(n: usize) -> FinCategory {
    let mut b = FinCategory::builder();
    for i in 0..n {
        b.object(i.to_string());
    }
    b.build().expect("discrete tables are in range")
}

/// One object `*` with morphisms `g0, ..., g{n-1}` composing as `Z/n`.
pub fn cyclic_group(n: usize) -> FinCategory {
    let star = ObjId(0);
    let morphisms = (0..n)
        .map(|i| MorphismData {
            name: format!("g{i}"),
            source: star,
            target: star,
        })
        .collect();
    let comp = (0..n).flat_map(|a| (0..n).map(move |b| (MorId(a), MorId(b), MorId((a + b) % n))));
    FinCategory::from_parts(vec!["*".into()], morphisms, vec![MorId(0)], comp)
        .expect("group tables are in range")
}

/// Finite sets `{0, ..., s-1}` for each listed size, with all functions.
#[derive(Debug, Clone)]
pub struct SetCategory {
    pub cat: Arc<FinCategory>,
    pub sizes: Vec<usize>,
    /// Image list of each morphism.
    pub funcs: Vec<Vec<usize>>,
}

impl SetCategory {
    pub fn new(sizes: &[usize]) -> Self {
        let mut morphisms = Vec::new();
        let mut funcs = Vec::new();
        let mut identity = vec![MorId(0); sizes.len()];
        for (si, &s) in sizes.iter().enumerate() {
            for (ti, &t) in sizes.iter().enumerate() {
                for f in all_functions(s, t) {
                    if si == ti && f.iter().enumerate().all(|(x, &y)| x == y) {
                        identity[si] = MorId(morphisms.len());
                    }
                    let imgs: String = f.iter().map(|y| y.to_string()).collect();
                    morphisms.push(MorphismData {
                        name: format!("{s}>{t}/{imgs}"),
                        source: ObjId(si),
                        target: ObjId(ti),
                    });
                    funcs.push(f);
                }
            }
        }
        let n = morphisms.len();
        let mut comp = Vec::new();
        for g in 0..n {
            for f in 0..n {
                if morphisms[f].target == morphisms[g].source {
                    let h: Vec<usize> = funcs[f].iter().map(|&x| funcs[g][x]).collect();
                    let (s, t) = (morphisms[f].source, morphisms[g].target);
                    let hid = (0..n)
                        .find(|&m| {
                            morphisms[m].source == s && morphisms[m].target == t && funcs[m] == h
                        })
                        .expect("composite is a function");
                    comp.push((MorId(g), MorId(f), MorId(hid)));
                }
            }
        }
        let objects = sizes.iter().map(|s| s.to_string()).collect();
        let cat = FinCategory::from_parts(objects, morphisms, identity, comp)
            .expect("set tables are in range");
        SetCategory {
            cat: Arc::new(cat),
            sizes: sizes.to_vec(),
            funcs,
        }
    }

    pub fn object_of_size(&self, s: usize) -> Option<ObjId> {
        self.sizes.iter().position(|&x| x == s).map(ObjId)
    }

    pub fn size(&self, x: ObjId) -> usize {
        self.sizes[x.0]
    }

    /// The morphism `s -> t` with the given images.
    pub fn function(&self, s: ObjId, t: ObjId, images: &[usize]) -> Option<MorId> {
        self.cat
            .hom(s, t)
            .iter()
            .copied()
            .find(|m| self.funcs[m.0] == images)
    }
}

fn all_functions(s: usize, t: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..s {
        out = out
            .into_iter()
            .flat_map(|f| {
                (0..t).map(move |y| {
                    let mut g = f.clone();
                    g.push(y);
                    g
                })
            })
            .collect();
    }
    out
}

/// Sets of size `0..n` and all functions between them.
pub fn finset(n: usize) -> FinCategory {
    let sizes: Vec<usize> = (0..n).collect();
    (*SetCategory::new(&sizes).cat).clone()
}

/// Strict monoidal structure on a thin category from its object table.
pub fn thin_monoidal(
    cat: Arc<FinCategory>,
    tensor: impl Fn(ObjId, ObjId) -> ObjId,
    unit: ObjId,
) -> Result<MonoidalCategory> {
    let t = Bifunctor::from_object_fn_thin(cat.clone(), cat.clone(), cat.clone(), tensor)?;
    MonoidalCategory::strict(cat, t, unit)
}

/// `n`-chain with `max`, unit `0`.
pub fn max_monoidal(n: usize) -> MonoidalCategory {
    thin_monoidal(Arc::new(chain(n)), |x, y| x.max(y), ObjId(0)).expect("max is a bifunctor")
}

/// `n`-chain with `min`, unit the top element.
pub fn min_monoidal(n: usize) -> MonoidalCategory {
    thin_monoidal(Arc::new(chain(n)), |x, y| x.min(y), ObjId(n - 1)).expect("min is a bifunctor")
}

/// `Z/n` as a one-object strict monoidal category: the tensor of morphisms is
/// their product in the group.
pub fn cyclic_monoidal(n: usize) -> MonoidalCategory {
    let cat = Arc::new(cyclic_group(n));
    let c = cat.clone();
    let t = Bifunctor::from_fn(
        cat.clone(),
        cat.clone(),
        cat.clone(),
        |_, _| ObjId(0),
        move |f, g| c.compose(f, g),
    )
    .expect("abelian group tensor");
    MonoidalCategory::strict(cat, t, ObjId(0)).expect("strict tables")
}

/// `Z/n` as a discrete strict monoidal category.
pub fn discrete_cyclic_monoidal(n: usize) -> MonoidalCategory {
    let cat = Arc::new(discrete(n));
    let c = cat.clone();
    let t = Bifunctor::from_fn(
        cat.clone(),
        cat.clone(),
        cat.clone(),
        |x, y| ObjId((x.0 + y.0) % n),
        move |f, g| Ok(c.id(ObjId((c.source(f).0 + c.source(g).0) % n))),
    )
    .expect("discrete tensor");
    MonoidalCategory::strict(cat, t, ObjId(0)).expect("strict tables")
}

/// Strict action of a thin monoidal category on a thin category.
pub fn thin_action(
    monoidal: Arc<MonoidalCategory>,
    cat: Arc<FinCategory>,
    act: impl Fn(ObjId, ObjId) -> ObjId,
) -> Result<MonoidalAction> {
    let b = Bifunctor::from_object_fn_thin(cat.clone(), monoidal.base.clone(), cat.clone(), act)?;
    MonoidalAction::strict(monoidal, cat, b)
}

/// `m <> q = max(m, phi(q))` of the `k`-chain (with `max`) on the `n`-chain.
/// `phi` must be monotone with `phi(0) = 0`.
pub fn max_action(n: usize, k: usize, phi: &[usize]) -> Result<MonoidalAction> {
    let phi = phi.to_vec();
    thin_action(
        Arc::new(max_monoidal(k)),
        Arc::new(chain(n)),
        move |m, q| ObjId(m.0.max(phi[q.0])),
    )
}

/// `m <> q = min(m, q)` of the `k`-chain (with `min`) on the `n`-chain.
pub fn min_action(n: usize, k: usize) -> Result<MonoidalAction> {
    thin_action(Arc::new(min_monoidal(k)), Arc::new(chain(n)), |m, q| {
        ObjId(m.0.min(q.0))
    })
}

/// The constant monad at the top of the `n`-chain.
pub fn const_top(cat: Arc<FinCategory>) -> Monad {
    let top = ObjId(cat.num_objects() - 1);
    Monad::thin(cat.clone(), vec![top; cat.num_objects()]).expect("top is a closure")
}

/// Every monotone, inflationary, idempotent self-map of `0..n`.
pub fn closure_operators(n: usize) -> Vec<Vec<usize>> {
    monotone_maps(n, n)
        .into_iter()
        .filter(|c| (0..n).all(|i| c[i] >= i && c[c[i]] == c[i]))
        .collect()
}

/// Every monotone map `0..k -> 0..n`.
pub fn monotone_maps(k: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|f: Vec<usize>| {
                let lo = f.last().copied().unwrap_or(0);
                (lo..n).map(move |y| {
                    let mut g = f.clone();
                    g.push(y);
                    g
                })
            })
            .collect();
    }
    out
}

/// `Z/2` acting on itself by multiplication, with the monad `(Id, s, s)`
/// where `s` is the generator.
pub fn group_instance() -> (MonoidalAction, Monad) {
    let c = Arc::new(cyclic_monoidal(2));
    let cat = Arc::new(cyclic_group(2));
    let cc = cat.clone();
    let act = Bifunctor::from_fn(
        cat.clone(),
        c.base.clone(),
        cat.clone(),
        |_, _| ObjId(0),
        move |f, g| cc.compose(f, g),
    )
    .expect("group action");
    let action = MonoidalAction::strict(c, cat.clone(), act).expect("strict action");
    let s = MorId(1);
    let monad =
        Monad::from_tables(Functor::identity(cat), vec![s], Some(vec![s])).expect("monad tables");
    (action, monad)
}

/// Sets of size at most 2 acted on by the 2-chain with `min` (unit `1`):
/// `X <> q = X x {0..q-1}`.
pub fn product_action() -> (SetCategory, MonoidalAction) {
    let sets = SetCategory::new(&[0, 1, 2]);
    let c = Arc::new(min_monoidal(2));
    let cat = sets.cat.clone();
    let empty = sets.object_of_size(0).expect("empty set");
    let obj = |x: ObjId, q: ObjId| if q.0 == 0 { empty } else { x };
    let (s2, c2) = (sets.clone(), c.clone());
    let act = Bifunctor::from_fn(
        cat.clone(),
        c.base.clone(),
        cat.clone(),
        obj,
        move |f, g| {
            let (qs, qt) = (c2.base.source(g), c2.base.target(g));
            let (x, y) = (obj(s2.cat.source(f), qs), obj(s2.cat.target(f), qt));
            if qs.0 == 0 {
                Ok(s2.function(x, y, &[]).expect("empty function"))
            } else {
                Ok(f)
            }
        },
    )
    .expect("product action");
    let action = MonoidalAction::strict(c, cat, act).expect("strict action");
    (sets, action)
}

/// `X |-> min(|X|, 1)` on a set category containing sizes 0 and 1.
pub fn support_monad(sets: &SetCategory) -> Monad {
    let zero = sets.object_of_size(0).expect("empty set");
    let one = sets.object_of_size(1).expect("singleton");
    let map = sets
        .cat
        .objects()
        .map(|x| if sets.size(x) == 0 { zero } else { one })
        .collect();
    Monad::thin(sets.cat.clone(), map).expect("support is idempotent")
}

/// The constant monad at the singleton.
pub fn const_one(sets: &SetCategory) -> Monad {
    let one = sets.object_of_size(1).expect("singleton");
    Monad::thin(sets.cat.clone(), vec![one; sets.sizes.len()]).expect("terminal object")
}

/// Sets of size 1 and 2 acted on by discrete `Z/2`, the generator acting on
/// morphisms by conjugation with the swap.
pub fn swap_action() -> (SetCategory, MonoidalAction) {
    let sets = SetCategory::new(&[1, 2]);
    let c = Arc::new(discrete_cyclic_monoidal(2));
    let cat = sets.cat.clone();
    let s2 = sets.clone();
    let swap = |size: usize, x: usize| if size == 2 { 1 - x } else { x };
    let act = Bifunctor::from_fn(
        cat.clone(),
        c.base.clone(),
        cat.clone(),
        |x, _| x,
        move |f, g| {
            if g.0 == 0 {
                return Ok(f);
            }
            let (x, y) = (s2.cat.source(f), s2.cat.target(f));
            let (sx, sy) = (s2.size(x), s2.size(y));
            let imgs: Vec<usize> = (0..sx)
                .map(|i| swap(sy, s2.funcs[f.0][swap(sx, i)]))
                .collect();
            Ok(s2.function(x, y, &imgs).expect("conjugate is a function"))
        },
    )
    .expect("swap action");
    let action = MonoidalAction::strict(c, cat, act).expect("strict action");
    (sets, action)
}
