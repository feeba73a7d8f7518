//! Random bialgebra / module-algebra / comodule bundles over small prime
//! fields. Each bundle is built from a known-valid family and then carried
//! through random changes of basis, so the structure constants are dense and
//! unrelated to the library's own constructors.

use actlift::linear::{
    check_bialgebra, check_comodule, check_linear_distlaw, check_module_algebra, tensor_comodule,
    Algebra, BialgebraBundle, CanonicalLaw, Comodule, Field, LinMap, ModuleAlgebra, PrimeField,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct RandomBundle {
    pub field: PrimeField,
    pub description: String,
    pub bialgebra: BialgebraBundle<PrimeField>,
    pub algebra: ModuleAlgebra<PrimeField>,
    pub comodules: Vec<Comodule<PrimeField>>,
    pub v_dim: usize,
}

/// Unital associative tables on `0..n` with identity `0`.
pub fn monoid_tables(n: usize) -> Vec<Vec<Vec<usize>>> {
    let free: Vec<(usize, usize)> = (1..n).flat_map(|a| (1..n).map(move |b| (a, b))).collect();
    let mut out = Vec::new();
    let total = n.pow(free.len() as u32);
    for code in 0..total {
        let mut t: Vec<Vec<usize>> = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        if a == 0 {
                            b
                        } else if b == 0 {
                            a
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        let mut c = code;
        for &(a, b) in &free {
            t[a][b] = c % n;
            c /= n;
        }
        let assoc = (0..n).all(|a| (0..n).all(|b| (0..n).all(|d| t[t[a][b]][d] == t[a][t[b][d]])));
        if assoc {
            out.push(t);
        }
    }
    out
}

fn random_invertible<R: Rng>(
    rng: &mut R,
    f: &PrimeField,
    n: usize,
) -> (LinMap<PrimeField>, LinMap<PrimeField>) {
    loop {
        let rows = (0..n)
            .map(|_| (0..n).map(|_| rng.gen_range(0..f.p())).collect())
            .collect();
        let m = LinMap::from_rows(f, rows).expect("square");
        if let Some(inv) = m.inverse() {
            return (m, inv);
        }
    }
}

/// `S` acting on `k^S` by `(b |> f)(y) = f(y b)`; in the indicator basis
/// `b |> e_x = sum_{y b = x} e_y`.
fn function_algebra(
    f: &PrimeField,
    b: &BialgebraBundle<PrimeField>,
    table: &[Vec<usize>],
) -> ModuleAlgebra<PrimeField> {
    let n = table.len();
    let alg = Algebra::diagonal(f, n);
    let action = LinMap::from_columns(f, n, n * n, |col| {
        let (s, x) = (col / n, col % n);
        (0..n)
            .map(|y| if table[y][s] == x { f.one() } else { f.zero() })
            .collect()
    });
    ModuleAlgebra::new(b, alg, action).expect("shapes")
}

/// `Z/m` acting on `k[x]/(x^n)` by `g^j |> x^i = z^{ij} x^i`.
fn scaled_polynomial(
    f: &PrimeField,
    m: usize,
    n: usize,
    z: u64,
) -> (BialgebraBundle<PrimeField>, ModuleAlgebra<PrimeField>) {
    let b = BialgebraBundle::cyclic_group(f, m);
    let alg = Algebra::truncated_polynomial(f, n);
    let pow = |e: usize| (0..e).fold(f.one(), |acc, _| f.mul(&acc, &z));
    let action = LinMap::from_columns(f, n, m * n, |col| {
        let (j, i) = (col / n, col % n);
        (0..n)
            .map(|r| if r == i { pow(i * j) } else { f.zero() })
            .collect()
    });
    let alg = ModuleAlgebra::new(&b, alg, action).expect("shapes");
    (b, alg)
}

/// `S`-graded space: `e_i |-> e_i (x) s_i`.
fn graded<R: Rng>(
    rng: &mut R,
    f: &PrimeField,
    b: &BialgebraBundle<PrimeField>,
    dim: usize,
) -> Comodule<PrimeField> {
    let degrees: Vec<usize> = (0..dim).map(|_| rng.gen_range(0..b.dim)).collect();
    let co = LinMap::from_columns(f, dim * b.dim, dim, |i| {
        (0..dim * b.dim)
            .map(|r| {
                if r == i * b.dim + degrees[i] {
                    f.one()
                } else {
                    f.zero()
                }
            })
            .collect()
    });
    Comodule::new(b, dim, co).expect("shape")
}

fn change_algebra_basis(
    alg: &ModuleAlgebra<PrimeField>,
    b: &BialgebraBundle<PrimeField>,
    p: &LinMap<PrimeField>,
    pinv: &LinMap<PrimeField>,
) -> ModuleAlgebra<PrimeField> {
    let f = b.field();
    let a = &alg.algebra;
    let mult = LinMap::chain(&[pinv, &a.mult, &p.kron(p)]);
    let unit = pinv.compose(&a.unit);
    let action = LinMap::chain(&[pinv, &alg.action, &LinMap::identity(f, b.dim).kron(p)]);
    ModuleAlgebra::new(b, Algebra::new(a.dim, mult, unit).expect("shapes"), action).expect("shapes")
}

fn change_comodule_basis(
    b: &BialgebraBundle<PrimeField>,
    q: &Comodule<PrimeField>,
    p: &LinMap<PrimeField>,
    pinv: &LinMap<PrimeField>,
) -> Comodule<PrimeField> {
    let co = LinMap::chain(&[
        &pinv.kron(&LinMap::identity(b.field(), b.dim)),
        &q.coaction,
        p,
    ]);
    Comodule::new(b, q.dim, co).expect("shape")
}

/// Carries every structure through a basis change `r` of `B`.
fn change_bialgebra_basis(x: &mut RandomBundle, r: &LinMap<PrimeField>, rinv: &LinMap<PrimeField>) {
    let f = x.field;
    let b = &x.bialgebra;
    let nb = BialgebraBundle::new(
        b.dim,
        LinMap::chain(&[rinv, &b.mult, &r.kron(r)]),
        rinv.compose(&b.unit),
        LinMap::chain(&[&rinv.kron(rinv), &b.comult, r]),
        b.counit.compose(r),
    )
    .expect("shapes");
    let a = &x.algebra;
    let action = a.action.compose(&r.kron(&LinMap::identity(&f, a.dim())));
    x.algebra = ModuleAlgebra::new(&nb, a.algebra.clone(), action).expect("shapes");
    x.comodules = x
        .comodules
        .iter()
        .map(|q| {
            let co = LinMap::identity(&f, q.dim).kron(rinv).compose(&q.coaction);
            Comodule::new(&nb, q.dim, co).expect("shape")
        })
        .collect();
    x.bialgebra = nb;
}

pub fn random_bundle<R: Rng>(rng: &mut R) -> RandomBundle {
    let p = *[2u64, 3, 5].choose(rng).unwrap();
    let f = PrimeField::new(p).unwrap();
    let roots: Vec<(usize, u64)> = (2..=3usize)
        .flat_map(|m| {
            (1..p)
                .filter(move |&z| (0..m).fold(1u64, |acc, _| acc * z % p) == 1)
                .map(move |z| (m, z))
        })
        .collect();
    let (description, bialgebra, algebra, monoid) = match rng.gen_range(0..4) {
        0 => {
            let n = rng.gen_range(1..=3);
            let b = BialgebraBundle::ground(&f);
            let alg = if rng.gen_bool(0.5) {
                Algebra::truncated_polynomial(&f, n)
            } else {
                Algebra::diagonal(&f, n)
            };
            (
                format!("k acting trivially on a {n}-dim algebra"),
                b.clone(),
                ModuleAlgebra::trivial(&b, alg),
                None,
            )
        }
        1 => {
            let n = rng.gen_range(1..=3);
            let tables = monoid_tables(n);
            let t = tables.choose(rng).unwrap().clone();
            let b = BialgebraBundle::monoid(&f, &t, 0).unwrap();
            let an = rng.gen_range(1..=3);
            let alg = if rng.gen_bool(0.5) {
                Algebra::truncated_polynomial(&f, an)
            } else {
                Algebra::diagonal(&f, an)
            };
            (
                format!("monoid {t:?} acting trivially"),
                b.clone(),
                ModuleAlgebra::trivial(&b, alg),
                Some(t),
            )
        }
        2 => {
            let n = rng.gen_range(1..=3);
            let tables = monoid_tables(n);
            let t = tables.choose(rng).unwrap().clone();
            let b = BialgebraBundle::monoid(&f, &t, 0).unwrap();
            let alg = function_algebra(&f, &b, &t);
            (
                format!("monoid {t:?} on its function algebra"),
                b,
                alg,
                Some(t),
            )
        }
        _ => match roots.choose(rng) {
            Some(&(m, z)) => {
                let n = rng.gen_range(1..=3);
                let (b, alg) = scaled_polynomial(&f, m, n, z);
                let t: Vec<Vec<usize>> = (0..m)
                    .map(|a| (0..m).map(|c| (a + c) % m).collect())
                    .collect();
                (
                    format!("Z/{m} scaling k[x]/(x^{n}) by {z}"),
                    b,
                    alg,
                    Some(t),
                )
            }
            None => {
                let b = BialgebraBundle::cyclic_group(&f, 2);
                let t = vec![vec![0, 1], vec![1, 0]];
                let alg = function_algebra(&f, &b, &t);
                ("Z/2 on its function algebra".to_owned(), b, alg, Some(t))
            }
        },
    };
    let mut comodules = vec![Comodule::trivial(&bialgebra)];
    if bialgebra.dim <= 3 {
        comodules.push(Comodule::regular(&bialgebra));
    }
    if monoid.is_some() {
        let d = rng.gen_range(1..=3);
        comodules.push(graded(rng, &f, &bialgebra, d));
    }
    comodules.push(Comodule::trivial_of_dim(&bialgebra, rng.gen_range(1..=2)));
    let small: Vec<Comodule<PrimeField>> =
        comodules.iter().filter(|q| q.dim == 1).cloned().collect();
    if let (Some(q1), Some(q2)) = (small.choose(rng), comodules.choose(rng)) {
        let t = tensor_comodule(&bialgebra, q1, q2);
        if t.dim <= 3 {
            comodules.push(t);
        }
    }
    let (pa, pa_inv) = random_invertible(rng, &f, algebra.dim());
    let algebra = change_algebra_basis(&algebra, &bialgebra, &pa, &pa_inv);
    let comodules = comodules
        .iter()
        .map(|q| {
            let (p, pinv) = random_invertible(rng, &f, q.dim);
            change_comodule_basis(&bialgebra, q, &p, &pinv)
        })
        .collect();
    let mut x = RandomBundle {
        field: f,
        description: format!("{description} over F{p}"),
        bialgebra,
        algebra,
        comodules,
        v_dim: rng.gen_range(1..=3),
    };
    let (r, rinv) = random_invertible(rng, &f, x.bialgebra.dim);
    change_bialgebra_basis(&mut x, &r, &rinv);
    if let Some(q) = sample_comodule(rng, &x.bialgebra, 200) {
        x.comodules.push(q);
    }
    if x.algebra.dim() * x.algebra.dim() * x.bialgebra.dim <= 8 {
        if let Some(alg) = sample_action(rng, &x.bialgebra, &x.algebra.algebra, 400) {
            x.algebra = alg;
            x.description.push_str(", action resampled");
        }
    }
    x
}

fn random_matrix<R: Rng>(
    rng: &mut R,
    f: &PrimeField,
    rows: usize,
    cols: usize,
) -> LinMap<PrimeField> {
    LinMap::from_rows(
        f,
        (0..rows)
            .map(|_| (0..cols).map(|_| rng.gen_range(0..f.p())).collect())
            .collect(),
    )
    .expect("rectangular")
}

/// Rejection sampling: a uniformly random coaction on a line or a plane,
/// kept if it passes the comodule checks.
pub fn sample_comodule<R: Rng>(
    rng: &mut R,
    b: &BialgebraBundle<PrimeField>,
    tries: usize,
) -> Option<Comodule<PrimeField>> {
    let f = b.field();
    let dim = rng.gen_range(1..=2);
    (0..tries).find_map(|_| {
        let q = Comodule::new(b, dim, random_matrix(rng, f, dim * b.dim, dim)).ok()?;
        check_comodule(b, &q).is_pass().then_some(q)
    })
}

/// Rejection sampling: a uniformly random action `B (x) A -> A`, kept if
/// it makes `A` a module algebra.
pub fn sample_action<R: Rng>(
    rng: &mut R,
    b: &BialgebraBundle<PrimeField>,
    a: &Algebra<PrimeField>,
    tries: usize,
) -> Option<ModuleAlgebra<PrimeField>> {
    let f = b.field();
    (0..tries).find_map(|_| {
        let alg =
            ModuleAlgebra::new(b, a.clone(), random_matrix(rng, f, a.dim, b.dim * a.dim)).ok()?;
        check_module_algebra(b, &alg).is_pass().then_some(alg)
    })
}

/// Returns the number of bundles checked and how many had a resampled
/// action.
pub fn check_random_bundles(seed: u64, want: usize) -> (usize, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut checked, mut resampled) = (0, 0);
    while checked < want {
        let x = random_bundle(&mut rng);
        let b = &x.bialgebra;
        let inputs_ok = check_bialgebra(b).is_pass()
            && check_module_algebra(b, &x.algebra).is_pass()
            && x.comodules.iter().all(|q| check_comodule(b, q).is_pass());
        assert!(
            inputs_ok,
            "generator produced invalid input: {}",
            x.description
        );
        assert!(b.dim <= 3 && x.algebra.dim() <= 3 && x.v_dim <= 3);
        let law = CanonicalLaw {
            bialgebra: b,
            algebra: &x.algebra,
        };
        for q in &x.comodules {
            assert!(q.dim <= 3);
            for q2 in x.comodules.iter().take(3) {
                let r = check_linear_distlaw(&law, b, &x.algebra, x.v_dim, q, q2);
                assert!(r.is_pass(), "{}: {r}", x.description);
            }
        }
        checked += 1;
        resampled += usize::from(x.description.ends_with("resampled"));
    }
    (checked, resampled)
}
