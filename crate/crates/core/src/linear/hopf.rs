//! Algebras, bialgebras, comodules, module algebras and modules, all given
//! by structure-constant matrices.

use crate::error::{Error, Result};
use crate::report::{Law, Report, Violation};

use super::field::Field;
use super::linmap::{swap, LinMap};

fn id<F: Field>(f: &F, n: usize) -> LinMap<F> {
    LinMap::identity(f, n)
}

fn expect_eq<F: Field>(
    report: &mut Report,
    law: Law,
    what: &str,
    lhs: &LinMap<F>,
    rhs: &LinMap<F>,
) {
    if lhs != rhs {
        let at = (0..lhs.rows())
            .flat_map(|r| (0..lhs.cols()).map(move |c| (r, c)))
            .find(|&(r, c)| lhs.get(r, c) != rhs.get(r, c));
        let mut v = Violation::new(law, format!("{what} fails"));
        if let Some((r, c)) = at {
            v = v
                .with("row", r.to_string())
                .with("col", c.to_string())
                .with("lhs", lhs.field.format(lhs.get(r, c)))
                .with("rhs", rhs.field.format(rhs.get(r, c)));
        }
        report.push(v);
    }
}

pub(crate) fn shape<F: Field>(m: &LinMap<F>, rows: usize, cols: usize, what: &str) -> Result<()> {
    if m.rows() != rows || m.cols() != cols {
        return Err(Error::Malformed(format!(
            "{what} is {}x{}, expected {rows}x{cols}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

/// `(A, m : A (x) A -> A, eta : k -> A)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Algebra<F: Field> {
    pub dim: usize,
    pub mult: LinMap<F>,
    pub unit: LinMap<F>,
}

impl<F: Field> Algebra<F> {
    pub fn new(dim: usize, mult: LinMap<F>, unit: LinMap<F>) -> Result<Self> {
        shape(&mult, dim, dim * dim, "multiplication")?;
        shape(&unit, dim, 1, "unit")?;
        Ok(Algebra { dim, mult, unit })
    }

    pub fn field(&self) -> &F {
        &self.mult.field
    }

    /// `k[x]/(x^n)` in the basis `1, x, ..., x^{n-1}`.
    pub fn truncated_polynomial(field: &F, n: usize) -> Self {
        let mult = LinMap::from_columns(field, n, n * n, |c| {
            let (i, j) = (c / n, c % n);
            (0..n)
                .map(|r| {
                    if r == i + j {
                        field.one()
                    } else {
                        field.zero()
                    }
                })
                .collect()
        });
        let unit = LinMap::from_columns(field, n, 1, |_| {
            (0..n).map(|r| basis(field, r == 0)).collect()
        });
        Algebra { dim: n, mult, unit }
    }

    /// `k^n` with componentwise product.
    pub fn diagonal(field: &F, n: usize) -> Self {
        let mult = LinMap::from_columns(field, n, n * n, |c| {
            let (i, j) = (c / n, c % n);
            (0..n).map(|r| basis(field, i == j && r == i)).collect()
        });
        let unit = LinMap::from_columns(field, n, 1, |_| vec![field.one(); n]);
        Algebra { dim: n, mult, unit }
    }

    /// `k[M]` for a monoid given by its multiplication table.
    pub fn monoid(field: &F, table: &[Vec<usize>], identity: usize) -> Result<Self> {
        let n = table.len();
        if table
            .iter()
            .any(|row| row.len() != n || row.iter().any(|&x| x >= n))
            || identity >= n
        {
            return Err(Error::Malformed("monoid table is not square".into()));
        }
        let mult = LinMap::from_columns(field, n, n * n, |c| {
            let prod = table[c / n][c % n];
            (0..n).map(|r| basis(field, r == prod)).collect()
        });
        let unit = LinMap::from_columns(field, n, 1, |_| {
            (0..n).map(|r| basis(field, r == identity)).collect()
        });
        Ok(Algebra { dim: n, mult, unit })
    }
}

fn basis<F: Field>(field: &F, on: bool) -> F::Elem {
    if on {
        field.one()
    } else {
        field.zero()
    }
}

pub fn check_algebra<F: Field>(a: &Algebra<F>) -> Report {
    let f = a.field();
    let n = a.dim;
    let mut report = Report::new();
    let lhs = a.mult.compose(&a.mult.kron(&id(f, n)));
    let rhs = a.mult.compose(&id(f, n).kron(&a.mult));
    expect_eq(
        &mut report,
        Law::AlgebraAssociativity,
        "m(m (x) 1) = m(1 (x) m)",
        &lhs,
        &rhs,
    );
    expect_eq(
        &mut report,
        Law::AlgebraUnit,
        "m(eta (x) 1) = 1",
        &a.mult.compose(&a.unit.kron(&id(f, n))),
        &id(f, n),
    );
    expect_eq(
        &mut report,
        Law::AlgebraUnit,
        "m(1 (x) eta) = 1",
        &a.mult.compose(&id(f, n).kron(&a.unit)),
        &id(f, n),
    );
    report
}

/// Bialgebra structure constants on `k^dim`.
#[derive(Debug, Clone, PartialEq)]
pub struct BialgebraBundle<F: Field> {
    pub dim: usize,
    pub mult: LinMap<F>,
    pub unit: LinMap<F>,
    pub comult: LinMap<F>,
    pub counit: LinMap<F>,
}

impl<F: Field> BialgebraBundle<F> {
    pub fn new(
        dim: usize,
        mult: LinMap<F>,
        unit: LinMap<F>,
        comult: LinMap<F>,
        counit: LinMap<F>,
    ) -> Result<Self> {
        shape(&mult, dim, dim * dim, "multiplication")?;
        shape(&unit, dim, 1, "unit")?;
        shape(&comult, dim * dim, dim, "comultiplication")?;
        shape(&counit, 1, dim, "counit")?;
        Ok(BialgebraBundle {
            dim,
            mult,
            unit,
            comult,
            counit,
        })
    }

    pub fn field(&self) -> &F {
        &self.mult.field
    }

    pub fn algebra(&self) -> Algebra<F> {
        Algebra {
            dim: self.dim,
            mult: self.mult.clone(),
            unit: self.unit.clone(),
        }
    }

    /// `k` itself.
    pub fn ground(field: &F) -> Self {
        let one = id(field, 1);
        BialgebraBundle {
            dim: 1,
            mult: one.clone(),
            unit: one.clone(),
            comult: one.clone(),
            counit: one,
        }
    }

    /// Monoid bialgebra `k[M]`: `Delta(g) = g (x) g`, `eps(g) = 1`.
    pub fn monoid(field: &F, table: &[Vec<usize>], identity: usize) -> Result<Self> {
        let alg = Algebra::monoid(field, table, identity)?;
        let n = alg.dim;
        let comult = LinMap::from_columns(field, n * n, n, |g| {
            (0..n * n).map(|r| basis(field, r == g * n + g)).collect()
        });
        let counit = LinMap::from_columns(field, 1, n, |_| vec![field.one()]);
        Ok(BialgebraBundle {
            dim: n,
            mult: alg.mult,
            unit: alg.unit,
            comult,
            counit,
        })
    }

    /// The group bialgebra of `Z/n`.
    pub fn cyclic_group(field: &F, n: usize) -> Self {
        let table: Vec<Vec<usize>> = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        Self::monoid(field, &table, 0).expect("group table")
    }
}

pub fn check_bialgebra<F: Field>(b: &BialgebraBundle<F>) -> Report {
    let f = b.field();
    let n = b.dim;
    let i = id(f, n);
    let mut report = check_algebra(&b.algebra());
    let lhs = b.comult.kron(&i).compose(&b.comult);
    let rhs = i.kron(&b.comult).compose(&b.comult);
    expect_eq(
        &mut report,
        Law::CoalgebraCoassociativity,
        "(D (x) 1)D = (1 (x) D)D",
        &lhs,
        &rhs,
    );
    expect_eq(
        &mut report,
        Law::CoalgebraCounit,
        "(e (x) 1)D = 1",
        &b.counit.kron(&i).compose(&b.comult),
        &i,
    );
    expect_eq(
        &mut report,
        Law::CoalgebraCounit,
        "(1 (x) e)D = 1",
        &i.kron(&b.counit).compose(&b.comult),
        &i,
    );
    let middle = LinMap::kron_all(&[&i, &swap(f, n, n), &i]);
    let lhs = b.comult.compose(&b.mult);
    let rhs = LinMap::chain(&[&b.mult.kron(&b.mult), &middle, &b.comult.kron(&b.comult)]);
    expect_eq(
        &mut report,
        Law::BialgebraCompatibility,
        "D m = (m (x) m)(1 (x) s (x) 1)(D (x) D)",
        &lhs,
        &rhs,
    );
    expect_eq(
        &mut report,
        Law::BialgebraCompatibility,
        "D eta = eta (x) eta",
        &b.comult.compose(&b.unit),
        &b.unit.kron(&b.unit),
    );
    expect_eq(
        &mut report,
        Law::BialgebraCompatibility,
        "e m = e (x) e",
        &b.counit.compose(&b.mult),
        &b.counit.kron(&b.counit),
    );
    expect_eq(
        &mut report,
        Law::BialgebraCompatibility,
        "e eta = 1",
        &b.counit.compose(&b.unit),
        &id(f, 1),
    );
    report
}

/// Right comodule `rho : Q -> Q (x) B`.
#[derive(Debug, Clone, PartialEq)]
pub struct Comodule<F: Field> {
    pub dim: usize,
    pub coaction: LinMap<F>,
}

impl<F: Field> Comodule<F> {
    pub fn new(b: &BialgebraBundle<F>, dim: usize, coaction: LinMap<F>) -> Result<Self> {
        shape(&coaction, dim * b.dim, dim, "coaction")?;
        Ok(Comodule { dim, coaction })
    }

    /// `k` with `rho = eta_B`.
    pub fn trivial(b: &BialgebraBundle<F>) -> Self {
        Comodule {
            dim: 1,
            coaction: b.unit.clone(),
        }
    }

    /// `B` with `rho = Delta`.
    pub fn regular(b: &BialgebraBundle<F>) -> Self {
        Comodule {
            dim: b.dim,
            coaction: b.comult.clone(),
        }
    }

    /// `k^dim` with `q |-> q (x) 1`.
    pub fn trivial_of_dim(b: &BialgebraBundle<F>, dim: usize) -> Self {
        Comodule {
            dim,
            coaction: id(b.field(), dim).kron(&b.unit),
        }
    }
}

pub fn check_comodule<F: Field>(b: &BialgebraBundle<F>, q: &Comodule<F>) -> Report {
    let mut report = Report::new();
    if q.coaction.rows() != q.dim * b.dim || q.coaction.cols() != q.dim {
        report.push(Violation::new(
            Law::Malformed,
            "coaction has the wrong shape",
        ));
        return report;
    }
    let f = b.field();
    let (iq, ib) = (id(f, q.dim), id(f, b.dim));
    let lhs = q.coaction.kron(&ib).compose(&q.coaction);
    let rhs = iq.kron(&b.comult).compose(&q.coaction);
    expect_eq(
        &mut report,
        Law::ComoduleCoassociativity,
        "(rho (x) 1)rho = (1 (x) D)rho",
        &lhs,
        &rhs,
    );
    expect_eq(
        &mut report,
        Law::ComoduleCounit,
        "(1 (x) e)rho = 1",
        &iq.kron(&b.counit).compose(&q.coaction),
        &iq,
    );
    report
}

/// `Q (x) Q'` with `q (x) q' |-> q0 (x) q'0 (x) q1 q'1`.
pub fn tensor_comodule<F: Field>(
    b: &BialgebraBundle<F>,
    q: &Comodule<F>,
    q2: &Comodule<F>,
) -> Comodule<F> {
    let f = b.field();
    let (iq, iq2, ib) = (id(f, q.dim), id(f, q2.dim), id(f, b.dim));
    let shuffle = LinMap::kron_all(&[&iq, &swap(f, b.dim, q2.dim), &ib]);
    let multiply = LinMap::kron_all(&[&iq, &iq2, &b.mult]);
    let coaction = LinMap::chain(&[&multiply, &shuffle, &q.coaction.kron(&q2.coaction)]);
    Comodule {
        dim: q.dim * q2.dim,
        coaction,
    }
}

/// An algebra `A` with a left `B`-action `B (x) A -> A`.
#[derive(Debug, Clone, PartialEq)]
pub struct ModuleAlgebra<F: Field> {
    pub algebra: Algebra<F>,
    pub action: LinMap<F>,
}

impl<F: Field> ModuleAlgebra<F> {
    pub fn new(b: &BialgebraBundle<F>, algebra: Algebra<F>, action: LinMap<F>) -> Result<Self> {
        shape(
            &action,
            algebra.dim,
            b.dim * algebra.dim,
            "module-algebra action",
        )?;
        Ok(ModuleAlgebra { algebra, action })
    }

    /// `b |> a = eps(b) a`.
    pub fn trivial(b: &BialgebraBundle<F>, algebra: Algebra<F>) -> Self {
        let action = b.counit.kron(&id(b.field(), algebra.dim));
        ModuleAlgebra { algebra, action }
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim
    }
}

pub fn check_module_algebra<F: Field>(b: &BialgebraBundle<F>, a: &ModuleAlgebra<F>) -> Report {
    let mut report = check_algebra(&a.algebra);
    if a.action.rows() != a.dim() || a.action.cols() != b.dim * a.dim() {
        report.push(Violation::new(Law::Malformed, "action has the wrong shape"));
        return report;
    }
    let f = b.field();
    let (n, ia, ib) = (a.dim(), id(f, a.dim()), id(f, b.dim));
    let act = &a.action;
    let m = &a.algebra.mult;
    expect_eq(
        &mut report,
        Law::ModuleAlgebra,
        "h |> (h' |> a) = (hh') |> a",
        &act.compose(&ib.kron(act)),
        &act.compose(&b.mult.kron(&ia)),
    );
    expect_eq(
        &mut report,
        Law::ModuleAlgebra,
        "1 |> a = a",
        &act.compose(&b.unit.kron(&ia)),
        &ia,
    );
    let lhs = act.compose(&ib.kron(m));
    let shuffle = LinMap::kron_all(&[&ib, &swap(f, b.dim, n), &ia]);
    let rhs = LinMap::chain(&[m, &act.kron(act), &shuffle, &b.comult.kron(&ia.kron(&ia))]);
    expect_eq(
        &mut report,
        Law::ModuleAlgebra,
        "b |> (aa') = (b1 |> a)(b2 |> a')",
        &lhs,
        &rhs,
    );
    expect_eq(
        &mut report,
        Law::ModuleAlgebra,
        "b |> 1 = eps(b) 1",
        &act.compose(&ib.kron(&a.algebra.unit)),
        &a.algebra.unit.compose(&b.counit),
    );
    report
}

/// A left `A`-module `A (x) M -> M`.
#[derive(Debug, Clone, PartialEq)]
pub struct LeftAModule<F: Field> {
    pub dim: usize,
    pub act: LinMap<F>,
}

impl<F: Field> LeftAModule<F> {
    pub fn new(a: &Algebra<F>, dim: usize, act: LinMap<F>) -> Result<Self> {
        shape(&act, dim, a.dim * dim, "module action")?;
        Ok(LeftAModule { dim, act })
    }

    pub fn regular(a: &Algebra<F>) -> Self {
        LeftAModule {
            dim: a.dim,
            act: a.mult.clone(),
        }
    }

    /// The free module `A (x) V`.
    pub fn free(a: &Algebra<F>, v_dim: usize) -> Self {
        LeftAModule {
            dim: a.dim * v_dim,
            act: a.mult.kron(&id(a.field(), v_dim)),
        }
    }
}

pub fn check_left_module<F: Field>(a: &Algebra<F>, m: &LeftAModule<F>) -> Report {
    let mut report = Report::new();
    if m.act.rows() != m.dim || m.act.cols() != a.dim * m.dim {
        report.push(Violation::new(
            Law::Malformed,
            "module action has the wrong shape",
        ));
        return report;
    }
    let f = a.field();
    let (ia, im) = (id(f, a.dim), id(f, m.dim));
    expect_eq(
        &mut report,
        Law::ModuleAssociativity,
        "a |> (a' |> m) = (aa') |> m",
        &m.act.compose(&ia.kron(&m.act)),
        &m.act.compose(&a.mult.kron(&im)),
    );
    expect_eq(
        &mut report,
        Law::ModuleUnit,
        "1 |> m = m",
        &m.act.compose(&a.unit.kron(&im)),
        &im,
    );
    report
}

pub(crate) fn matrix_eq<F: Field>(
    report: &mut Report,
    law: Law,
    what: &str,
    lhs: &LinMap<F>,
    rhs: &LinMap<F>,
) {
    if (lhs.rows(), lhs.cols()) != (rhs.rows(), rhs.cols()) {
        report.push(Violation::new(law, format!("{what}: shapes differ")));
    } else {
        expect_eq(report, law, what, lhs, rhs);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::field::{PrimeField, Rationals};

    fn f3() -> PrimeField {
        PrimeField::new(3).unwrap()
    }

    #[test]
    fn group_bialgebra_and_ground() {
        let f = f3();
        assert!(check_bialgebra(&BialgebraBundle::cyclic_group(&f, 2)).is_pass());
        assert!(check_bialgebra(&BialgebraBundle::ground(&f)).is_pass());
        assert!(check_bialgebra(&BialgebraBundle::ground(&Rationals)).is_pass());
    }

    #[test]
    fn perturbed_comult_fails() {
        let f = f3();
        let b = BialgebraBundle::cyclic_group(&f, 2);
        for r in 0..4 {
            for c in 0..2 {
                let mut bad = b.clone();
                let x = f.add(bad.comult.get(r, c), &1);
                bad.comult.set(r, c, x);
                let rep = check_bialgebra(&bad);
                assert!(
                    rep.has(Law::CoalgebraCoassociativity)
                        || rep.has(Law::BialgebraCompatibility)
                        || rep.has(Law::CoalgebraCounit),
                    "{rep}"
                );
            }
        }
    }

    #[test]
    fn sign_action_is_module_algebra() {
        let f = f3();
        let b = BialgebraBundle::cyclic_group(&f, 2);
        let a = Algebra::truncated_polynomial(&f, 2);
        // columns: 1(x)1, 1(x)x, g(x)1, g(x)x
        let act = LinMap::from_ints(&f, 2, 4, &[1, 0, 1, 0, 0, 1, 0, 2]);
        let ma = ModuleAlgebra::new(&b, a.clone(), act).unwrap();
        assert!(check_module_algebra(&b, &ma).is_pass());
        assert!(check_module_algebra(&b, &ModuleAlgebra::trivial(&b, a)).is_pass());
    }

    #[test]
    fn shifted_action_fails_over_f2() {
        let f = PrimeField::new(2).unwrap();
        let b = BialgebraBundle::cyclic_group(&f, 2);
        let a = Algebra::truncated_polynomial(&f, 2);
        // g |> 1 = 1, g |> x = x + 1
        let act = LinMap::from_ints(&f, 2, 4, &[1, 0, 1, 1, 0, 1, 0, 1]);
        let ma = ModuleAlgebra::new(&b, a, act).unwrap();
        assert!(check_module_algebra(&b, &ma).has(Law::ModuleAlgebra));
    }

    #[test]
    fn comodule_tensor() {
        let f = f3();
        let b = BialgebraBundle::cyclic_group(&f, 2);
        let q = Comodule::regular(&b);
        assert!(check_comodule(&b, &q).is_pass());
        let qq = tensor_comodule(&b, &q, &q);
        assert!(check_comodule(&b, &qq).is_pass());
        assert_eq!(tensor_comodule(&b, &q, &Comodule::trivial(&b)), q);
        let left = tensor_comodule(&b, &tensor_comodule(&b, &q, &q), &q);
        let right = tensor_comodule(&b, &q, &tensor_comodule(&b, &q, &q));
        assert_eq!(left, right);
    }

    #[test]
    fn algebras_and_modules() {
        let f = Rationals;
        for a in [
            Algebra::truncated_polynomial(&f, 3),
            Algebra::diagonal(&f, 3),
        ] {
            assert!(check_algebra(&a).is_pass());
            assert!(check_left_module(&a, &LeftAModule::regular(&a)).is_pass());
            assert!(check_left_module(&a, &LeftAModule::free(&a, 2)).is_pass());
        }
    }
}
