mod common;

use std::sync::Arc;

use actlift::action::check_action;
use actlift::category::{check_category, opposite, FinCategory, MorId, ObjId};
use actlift::decl::Declaration;
use actlift::distlaw::{enumerate_laws, law_existence, verify_bijection, Caps};
use actlift::functor::{godement_product, Functor, NatTrans};
use actlift::instances::{
    chain, closure_operators, cyclic_group, max_action, max_monoidal, min_monoidal,
};
use actlift::linear::{Field, LinMap, PrimeField, Rationals};
use actlift::monad::{check_monad, em_category, Monad};
use actlift::monoidal::{check_monoid, MonoidObject};
use common::oracle::{closures, fixed_points, max_type_actions, monotone_maps, poset_law_count};
use common::random_linear::monoid_tables;
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::sample::select;

/// Thin category of the reflexive-transitive closure of `edges` on `0..n`.
fn preorder(n: usize, edges: &[(usize, usize)]) -> FinCategory {
    let mut le = vec![vec![false; n]; n];
    for (i, row) in le.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(a, b) in edges {
        le[a % n][b % n] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                le[i][j] |= le[i][k] && le[k][j];
            }
        }
    }
    let mut b = FinCategory::builder();
    let objs: Vec<ObjId> = (0..n).map(|i| b.object(format!("x{i}"))).collect();
    let mut hom = vec![vec![None; n]; n];
    for (i, row) in hom.iter_mut().enumerate() {
        row[i] = Some(MorId(i));
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && le[i][j] {
                hom[i][j] = Some(b.morphism(format!("x{i}<x{j}"), objs[i], objs[j]));
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if let (Some(f), Some(g), Some(h)) = (hom[i][j], hom[j][k], hom[i][k]) {
                    b.compose(g, f, h);
                }
            }
        }
    }
    b.build().unwrap()
}

/// One-object category of a monoid table with identity `0`.
fn monoid_category(t: &[Vec<usize>]) -> FinCategory {
    let mut b = FinCategory::builder();
    let x = b.object("*");
    let ms: Vec<MorId> = std::iter::once(MorId(0))
        .chain((1..t.len()).map(|i| b.morphism(format!("m{i}"), x, x)))
        .collect();
    for g in 0..t.len() {
        for f in 0..t.len() {
            b.compose(ms[g], ms[f], ms[t[g][f]]);
        }
    }
    b.build().unwrap()
}

fn small_category() -> impl Strategy<Value = FinCategory> {
    prop_oneof![
        (
            1usize..=4,
            prop::collection::vec((0usize..4, 0usize..4), 0..6)
        )
            .prop_map(|(n, e)| preorder(n, &e)),
        (1usize..=3)
            .prop_flat_map(|n| select(monoid_tables(n)))
            .prop_map(|t| monoid_category(&t)),
        (1usize..=4).prop_map(cyclic_group),
    ]
}

/// Natural transformation between monotone maps `f <= g` of a chain.
fn chain_nat(cat: &Arc<FinCategory>, f: &[usize], g: &[usize]) -> NatTrans {
    let obj = |v: &[usize]| v.iter().map(|&i| ObjId(i)).collect::<Vec<_>>();
    let ff = Functor::from_object_map_thin(cat.clone(), cat.clone(), obj(f)).unwrap();
    let gg = Functor::from_object_map_thin(cat.clone(), cat.clone(), obj(g)).unwrap();
    let comps = (0..f.len())
        .map(|i| {
            cat.unique_morphism(ObjId(f[i]), ObjId(g[i]), "component")
                .unwrap()
        })
        .collect();
    NatTrans::new(ff, gg, comps).unwrap()
}

/// Two monotone self-maps of `0..n` with `lo <= hi` pointwise.
fn monotone_pair(n: usize) -> impl Strategy<Value = (Vec<usize>, Vec<usize>)> {
    let maps = monotone_maps(n, n);
    (select(maps.clone()), select(maps)).prop_filter_map("need lo <= hi", |(a, b)| {
        if a.iter().zip(&b).all(|(x, y)| x <= y) {
            Some((a, b))
        } else if b.iter().zip(&a).all(|(x, y)| x <= y) {
            Some((b, a))
        } else {
            None
        }
    })
}

fn closure_and_action() -> impl Strategy<Value = (Vec<usize>, Vec<usize>)> {
    (1usize..=4, 1usize..=4)
        .prop_flat_map(|(n, k)| (select(closures(n)), select(max_type_actions(n, k))))
}

fn matrix<F: Field>(f: F, rows: usize, cols: usize, entries: Vec<i64>) -> LinMap<F> {
    LinMap::from_ints(&f, rows, cols, &entries[..rows * cols])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn opposite_is_an_involution(c in small_category()) {
        prop_assert!(check_category(&c).is_pass());
        let op = opposite(&c);
        prop_assert!(check_category(&op).is_pass(), "{}", check_category(&op));
        prop_assert_eq!(opposite(&op), c);
    }

    #[test]
    fn godement_product_is_associative_and_unital(
        (a, b, g) in (1usize..=4).prop_flat_map(|n| (monotone_pair(n), monotone_pair(n), monotone_pair(n)))
    ) {
        let n = a.0.len();
        let cat = Arc::new(chain(n));
        let (x, y, z) = (chain_nat(&cat, &a.0, &a.1), chain_nat(&cat, &b.0, &b.1), chain_nat(&cat, &g.0, &g.1));
        let left = godement_product(&godement_product(&x, &y).unwrap(), &z).unwrap();
        let right = godement_product(&x, &godement_product(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        let id = NatTrans::identity(&Functor::identity(cat));
        prop_assert_eq!(&godement_product(&id, &x).unwrap(), &x);
        prop_assert_eq!(&godement_product(&x, &id).unwrap(), &x);
    }

    #[test]
    fn godement_in_an_abelian_group((n, a, b, c) in (1usize..=4).prop_flat_map(|n| (Just(n), 0..n, 0..n, 0..n))) {
        let cat = Arc::new(cyclic_group(n));
        let id = Functor::identity(cat.clone());
        let t = |i: usize| NatTrans::new(id.clone(), id.clone(), vec![MorId(i)]).unwrap();
        let ab = godement_product(&t(a), &t(b)).unwrap();
        prop_assert_eq!(ab.at(ObjId(0)), cat.compose(MorId(a), MorId(b)).unwrap());
        let left = godement_product(&ab, &t(c)).unwrap();
        let right = godement_product(&t(a), &godement_product(&t(b), &t(c)).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn poset_criterion_matches_the_order_oracle((c, phi) in closure_and_action()) {
        let (n, k) = (c.len(), phi.len());
        let action = Arc::new(max_action(n, k, &phi).unwrap());
        prop_assert!(check_action(&action).is_pass());
        let monad = Arc::new(Monad::thin(Arc::new(chain(n)), c.iter().map(|&i| ObjId(i)).collect()).unwrap());
        prop_assert!(check_monad(&monad).is_pass());
        let expected = poset_law_count(&c, &phi);
        let laws = enumerate_laws(&action, &monad, Caps::default()).unwrap();
        prop_assert_eq!(laws.len(), expected, "closure {:?}, phi {:?}", c, phi);
        prop_assert_eq!(law_existence(&action, &monad).is_pass(), expected == 1);
        prop_assert_eq!(em_category(&monad).unwrap().num_modules(), fixed_points(&c));
        let bij = verify_bijection(&action, &monad, Caps::default()).unwrap();
        prop_assert!(bij.is_verified(), "{}", bij.report);
        prop_assert_eq!(bij.lift_count(), expected);
    }

    #[test]
    fn instances_survive_serialization((c, phi) in closure_and_action()) {
        let n = c.len();
        let action = max_action(n, phi.len(), &phi).unwrap();
        let monad = Monad::thin(Arc::new(chain(n)), c.iter().map(|&i| ObjId(i)).collect()).unwrap();
        let d = Declaration::from_instance(&action, &monad);
        let text = d.to_toml();
        let back = Declaration::parse(&text).unwrap();
        prop_assert_eq!(&back, &d);
        prop_assert_eq!(back.to_toml(), text);
    }

    #[test]
    fn kronecker_mixed_product_over_q(
        dims in (1usize..=3, 1usize..=3, 1usize..=3, 1usize..=3, 1usize..=3, 1usize..=3),
        entries in prop::collection::vec(-4i64..=4, 4 * 9),
    ) {
        let (p, q, r, s, t, u) = dims;
        let a = matrix(Rationals, p, q, entries[0..].to_vec());
        let b = matrix(Rationals, r, s, entries[9..].to_vec());
        let c = matrix(Rationals, q, t, entries[18..].to_vec());
        let d = matrix(Rationals, s, u, entries[27..].to_vec());
        prop_assert_eq!(a.kron(&b).compose(&c.kron(&d)), a.compose(&c).kron(&b.compose(&d)));
    }

    #[test]
    fn inverse_is_two_sided_over_f5(entries in prop::collection::vec(0i64..5, 9), n in 1usize..=3) {
        let f = PrimeField::new(5).unwrap();
        let m = matrix(f, n, n, entries);
        if let Some(inv) = m.inverse() {
            prop_assert_eq!(m.compose(&inv), LinMap::identity(&f, n));
            prop_assert_eq!(inv.compose(&m), LinMap::identity(&f, n));
        }
    }
}

#[test]
fn closure_enumerations_agree() {
    for n in 1..=4 {
        let mut lib = closure_operators(n);
        lib.sort();
        assert_eq!(lib, closures(n));
    }
    // Closure operators on an n-chain are determined by their fixed-point
    // sets, which must contain the top: 2^(n-1) of them.
    assert_eq!(
        (1..=4).map(|n| closures(n).len()).collect::<Vec<_>>(),
        vec![1, 2, 4, 8]
    );
}

/// Under `max` (unit the bottom) every object of a chain is a monoid; under
/// `min` (unit the top) only the top is, since `1 -> B` needs `top <= B`.
#[test]
fn monoids_in_chains() {
    for n in 1..=4 {
        let max = max_monoidal(n);
        let min = min_monoidal(n);
        for b in 0..n {
            let m = MonoidObject::unique(&max, ObjId(b)).unwrap();
            assert!(check_monoid(&max, &m).is_pass());
            match MonoidObject::unique(&min, ObjId(b)) {
                Ok(m) => {
                    assert_eq!(b, n - 1);
                    assert!(check_monoid(&min, &m).is_pass());
                }
                Err(_) => assert!(b < n - 1),
            }
        }
    }
}

#[test]
fn rationals_are_exact() {
    let q = Rationals;
    let third = BigRational::new(1.into(), 3.into());
    let sum = q.add(&q.add(&third, &third), &third);
    assert_eq!(sum, q.one());
}
