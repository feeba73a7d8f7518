//! Single-entry mutations of a declaration's explicit tables.

use actlift::decl::raw::{RawFile, Scalar, Table};
use actlift::decl::Declaration;

pub struct Mutant {
    pub label: String,
    pub raw: RawFile,
}

/// Replaces the right-hand side of entry `i`.
fn rewrite(entries: &[String], i: usize, value: &str) -> Vec<String> {
    let mut out = entries.to_vec();
    let (lhs, _) = out[i].rsplit_once('=').expect("entry has =");
    out[i] = format!("{} = {value}", lhs.trim_end());
    out
}

fn rhs(entry: &str) -> &str {
    entry.rsplit_once('=').expect("entry has =").1.trim()
}

fn table_mutants(
    out: &mut Vec<Mutant>,
    base: &RawFile,
    label: &str,
    entries: &[String],
    pool: &[String],
    set: impl Fn(&mut RawFile, Vec<String>),
) {
    for (i, e) in entries.iter().enumerate() {
        for v in pool.iter().filter(|v| v.as_str() != rhs(e)) {
            let mut raw = base.clone();
            set(&mut raw, rewrite(entries, i, v));
            out.push(Mutant {
                label: format!("{label}[{i}] -> {v}"),
                raw,
            });
        }
    }
}

fn entries(t: &Table) -> &[String] {
    match t {
        Table::Entries(e) => e,
        Table::Rule(_) => &[],
    }
}

fn bump(s: &Scalar, p: i64) -> Scalar {
    match s {
        Scalar::Int(n) => Scalar::Int((n + 1).rem_euclid(p)),
        Scalar::Text(t) => Scalar::Text(format!("{t}+1")),
    }
}

/// Every single-entry mutation of the canonical explicit form of `d`: one
/// table value replaced by another name of the same kind, or one matrix
/// entry increased by one.
pub fn all_mutants(d: &Declaration) -> Vec<Mutant> {
    let base = d.to_raw();
    let mut out = Vec::new();
    let morphisms = |cat: &str| -> Vec<String> {
        let c = &d.categories[cat];
        c.morphisms()
            .map(|f| c.morphism_name(f).to_owned())
            .collect()
    };
    let objects = |cat: &str| -> Vec<String> { d.categories[cat].object_names().to_vec() };

    for (name, c) in &base.category {
        let n = name.clone();
        table_mutants(
            &mut out,
            &base,
            &format!("category.{n}.compose"),
            &c.compose,
            &morphisms(name),
            |r, v| {
                r.category.get_mut(&n).unwrap().compose = v;
            },
        );
        let ids: Vec<(String, String)> = c
            .identities
            .clone()
            .unwrap_or_default()
            .into_iter()
            .collect();
        for (obj, m) in &ids {
            for v in morphisms(name).into_iter().filter(|v| v != m) {
                let mut raw = base.clone();
                raw.category
                    .get_mut(name)
                    .unwrap()
                    .identities
                    .as_mut()
                    .unwrap()
                    .insert(obj.clone(), v.clone());
                out.push(Mutant {
                    label: format!("category.{name}.identities[{obj}] -> {v}"),
                    raw,
                });
            }
        }
    }
    for (name, m) in &base.monoidal {
        let (n, cat) = (name.clone(), m.category.clone());
        let l = |f: &str| format!("monoidal.{n}.{f}");
        table_mutants(
            &mut out,
            &base,
            &l("tensor_objects"),
            &m.tensor_objects,
            &objects(&cat),
            |r, v| {
                r.monoidal.get_mut(&n).unwrap().tensor_objects = v;
            },
        );
        let mors = morphisms(&cat);
        table_mutants(
            &mut out,
            &base,
            &l("tensor_morphisms"),
            entries(&m.tensor_morphisms),
            &mors,
            |r, v| {
                r.monoidal.get_mut(&n).unwrap().tensor_morphisms = Table::Entries(v);
            },
        );
        table_mutants(
            &mut out,
            &base,
            &l("assoc"),
            entries(&m.assoc),
            &mors,
            |r, v| {
                r.monoidal.get_mut(&n).unwrap().assoc = Table::Entries(v);
            },
        );
        table_mutants(
            &mut out,
            &base,
            &l("runit"),
            entries(&m.runit),
            &mors,
            |r, v| {
                r.monoidal.get_mut(&n).unwrap().runit = Table::Entries(v);
            },
        );
        table_mutants(
            &mut out,
            &base,
            &l("lunit"),
            entries(&m.lunit),
            &mors,
            |r, v| {
                r.monoidal.get_mut(&n).unwrap().lunit = Table::Entries(v);
            },
        );
    }
    for (name, a) in &base.action {
        let (n, cat) = (
            name.clone(),
            a.category
                .clone()
                .expect("canonical form names the category"),
        );
        let l = |f: &str| format!("action.{n}.{f}");
        table_mutants(
            &mut out,
            &base,
            &l("act_objects"),
            &a.act_objects,
            &objects(&cat),
            |r, v| {
                r.action.get_mut(&n).unwrap().act_objects = v;
            },
        );
        let mors = morphisms(&cat);
        let am = a.act_morphisms.as_ref().map(entries).unwrap_or_default();
        table_mutants(&mut out, &base, &l("act_morphisms"), am, &mors, |r, v| {
            r.action.get_mut(&n).unwrap().act_morphisms = Some(Table::Entries(v));
        });
        table_mutants(
            &mut out,
            &base,
            &l("psi"),
            a.psi.as_ref().map(entries).unwrap_or_default(),
            &mors,
            |r, v| {
                r.action.get_mut(&n).unwrap().psi = Some(Table::Entries(v));
            },
        );
        table_mutants(
            &mut out,
            &base,
            &l("unit"),
            a.unit.as_ref().map(entries).unwrap_or_default(),
            &mors,
            |r, v| {
                r.action.get_mut(&n).unwrap().unit = Some(Table::Entries(v));
            },
        );
    }
    for (name, t) in &base.monad {
        let (n, cat) = (
            name.clone(),
            t.category
                .clone()
                .expect("canonical form names the category"),
        );
        let l = |f: &str| format!("monad.{n}.{f}");
        table_mutants(
            &mut out,
            &base,
            &l("objects"),
            &t.objects,
            &objects(&cat),
            |r, v| {
                r.monad.get_mut(&n).unwrap().objects = v;
            },
        );
        let mors = morphisms(&cat);
        let tm = t.morphisms.as_ref().map(entries).unwrap_or_default();
        table_mutants(&mut out, &base, &l("morphisms"), tm, &mors, |r, v| {
            r.monad.get_mut(&n).unwrap().morphisms = Some(Table::Entries(v));
        });
        table_mutants(
            &mut out,
            &base,
            &l("mu"),
            t.mu.as_ref().map(entries).unwrap_or_default(),
            &mors,
            |r, v| {
                r.monad.get_mut(&n).unwrap().mu = Some(Table::Entries(v));
            },
        );
        table_mutants(
            &mut out,
            &base,
            &l("eta"),
            t.eta.as_ref().map(entries).unwrap_or_default(),
            &mors,
            |r, v| {
                r.monad.get_mut(&n).unwrap().eta = Some(Table::Entries(v));
            },
        );
    }
    for (name, law) in &base.law {
        let n = name.clone();
        let cat = d.actions[&law.action].category.clone();
        table_mutants(
            &mut out,
            &base,
            &format!("law.{n}"),
            entries(&law.components),
            &morphisms(&cat),
            |r, v| {
                r.law.get_mut(&n).unwrap().components = Table::Entries(v);
            },
        );
    }
    for (name, lift) in &base.lift {
        let em = &d.lifts[name].em.base;
        let pool: Vec<String> = em.object_names().to_vec();
        for (i, e) in lift.objects.iter().enumerate() {
            for v in pool.iter().filter(|v| **v != e.result) {
                let mut raw = base.clone();
                raw.lift.get_mut(name).unwrap().objects[i].result = v.clone();
                out.push(Mutant {
                    label: format!("lift.{name}[{i}] -> {v}"),
                    raw,
                });
            }
        }
    }
    for (name, lin) in &base.linear {
        let p: i64 = lin.field.trim_start_matches('F').parse().unwrap_or(0);
        let mut push = |what: &str, get: &dyn Fn(&mut RawFile) -> &mut Vec<Vec<Scalar>>| {
            let mut probe = base.clone();
            let shape: Vec<usize> = get(&mut probe).iter().map(Vec::len).collect();
            for (r, &len) in shape.iter().enumerate() {
                for c in 0..len {
                    let mut raw = base.clone();
                    let m = get(&mut raw);
                    m[r][c] = bump(&m[r][c], p);
                    out.push(Mutant {
                        label: format!("linear.{name}.{what}[{r},{c}]"),
                        raw,
                    });
                }
            }
        };
        let n = name.clone();
        push("bialgebra.mult", &|r| {
            &mut r.linear.get_mut(&n).unwrap().bialgebra.mult
        });
        push("bialgebra.unit", &|r| {
            &mut r.linear.get_mut(&n).unwrap().bialgebra.unit
        });
        push("bialgebra.comult", &|r| {
            &mut r.linear.get_mut(&n).unwrap().bialgebra.comult
        });
        push("bialgebra.counit", &|r| {
            &mut r.linear.get_mut(&n).unwrap().bialgebra.counit
        });
        push("algebra.mult", &|r| {
            &mut r.linear.get_mut(&n).unwrap().algebra.mult
        });
        push("algebra.unit", &|r| {
            &mut r.linear.get_mut(&n).unwrap().algebra.unit
        });
        push("algebra.action", &|r| {
            &mut r.linear.get_mut(&n).unwrap().algebra.action
        });
        push("module.act", &|r| {
            &mut r.linear.get_mut(&n).unwrap().module.act
        });
        for q in lin.comodules.keys() {
            let q = q.clone();
            push(&format!("comodule.{q}"), &|r| {
                &mut r
                    .linear
                    .get_mut(&n)
                    .unwrap()
                    .comodules
                    .get_mut(&q)
                    .unwrap()
                    .coaction
            });
        }
    }
    out
}

/// Independent check that the `module.act` of a linear section is a left
/// module over its algebra, by explicit index sums mod `p`.
pub fn linear_module_is_valid(raw: &RawFile, name: &str) -> bool {
    let lin = &raw.linear[name];
    let p: i64 = match lin.field.trim_start_matches('F').parse() {
        Ok(p) => p,
        Err(_) => return false,
    };
    let int = |s: &Scalar| match s {
        Scalar::Int(n) => Some(n.rem_euclid(p)),
        Scalar::Text(_) => None,
    };
    let mat = |m: &Vec<Vec<Scalar>>| {
        m.iter()
            .map(|r| r.iter().map(int).collect::<Option<Vec<i64>>>())
            .collect::<Option<Vec<_>>>()
    };
    let (Some(mult), Some(unit), Some(act)) = (
        mat(&lin.algebra.mult),
        mat(&lin.algebra.unit),
        mat(&lin.module.act),
    ) else {
        return false;
    };
    let (a, d) = (lin.algebra.dim, lin.module.dim);
    // act(x, e_m) as a vector, for x given by coordinates in A
    let act_vec = |x: &[i64], v: &[i64]| -> Vec<i64> {
        (0..d)
            .map(|r| {
                let mut s = 0;
                for i in 0..a {
                    for m in 0..d {
                        s += x[i] * v[m] * act[r][i * d + m];
                    }
                }
                s.rem_euclid(p)
            })
            .collect()
    };
    let e = |k: usize, n: usize| (0..n).map(|i| i64::from(i == k)).collect::<Vec<i64>>();
    for i in 0..a {
        for j in 0..a {
            let prod: Vec<i64> = (0..a).map(|r| mult[r][i * a + j]).collect();
            for m in 0..d {
                let lhs = act_vec(&prod, &e(m, d));
                let rhs = act_vec(&e(i, a), &act_vec(&e(j, a), &e(m, d)));
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    let one: Vec<i64> = unit.iter().map(|r| r[0]).collect();
    (0..d).all(|m| act_vec(&one, &e(m, d)) == e(m, d))
}

#[derive(Debug, Default)]
pub struct MutationSummary {
    pub total: usize,
    /// Refused while resolving the declaration (exit status 2).
    pub rejected: usize,
    /// Resolved, then failed at least one check (exit status 1).
    pub caught: usize,
    /// Passed every check and were independently confirmed to be valid
    /// structures, so there is nothing to detect.
    pub equivalent: Vec<String>,
    /// Passed every check without such a confirmation.
    pub survived: Vec<String>,
}

/// Runs every single-entry mutant of `d` through resolution and all checks.
pub fn run_mutants(d: &Declaration) -> MutationSummary {
    use actlift::cli::check_declaration;
    use actlift::distlaw::Caps;
    let mut s = MutationSummary::default();
    for m in all_mutants(d) {
        s.total += 1;
        match Declaration::from_raw(&m.raw) {
            Err(_) => s.rejected += 1,
            Ok(md) if !check_declaration(&md, None, Caps::default()).passed() => s.caught += 1,
            Ok(_) => {
                let linear_module = m.label.starts_with("linear.")
                    && m.label.contains(".module.act[")
                    && m.raw
                        .linear
                        .keys()
                        .all(|n| linear_module_is_valid(&m.raw, n));
                if linear_module {
                    s.equivalent.push(m.label);
                } else {
                    s.survived.push(m.label);
                }
            }
        }
    }
    s
}
