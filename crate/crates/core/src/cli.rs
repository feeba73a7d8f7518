//! Command surface of the `actlift` binary.
//!
//! Every command produces a [`RunReport`]; the binary renders it as text or
//! JSON and exits with its [`Status`]. Output is deterministic for a fixed
//! file and caps unless `--timing on` is given.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::action::check_action;
use crate::category::check_category;
use crate::decl::raw::RawFile;
use crate::decl::{Declaration, LinearEntry};
use crate::distlaw::{
    check_distlaw, check_lift_lemmas, check_unlift_lemmas, law_existence, law_from_lift,
    lift_from_law, verify_bijection, Caps,
};
use crate::error::Error;
use crate::functor::check_functor;
use crate::linear::{canonical_law, run_linear_suite, Comodule, Field, LinearBundle};
use crate::monad::{check_monad, em_category, EMCategory, Monad};
use crate::monoidal::{check_monoid, check_monoidal};
use crate::report::{Law, Report, Violation};

#[derive(Debug, Parser)]
#[command(
    name = "actlift",
    version,
    about = "Check monoidal actions, monads, distributive laws and lifted actions"
)]
pub struct Cli {
    /// Enumeration caps, e.g. `index=16,hom=8,em=32`; omitted keys keep their defaults.
    #[arg(long, global = true, value_parser = parse_caps, default_value = "index=16,hom=8,em=32")]
    pub caps: Caps,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, global = true, value_enum, default_value_t = Toggle::On)]
    pub witnesses: Toggle,
    /// Report wall time. Off by default so that output is byte-stable.
    #[arg(long, global = true, value_enum, default_value_t = Toggle::Off)]
    pub timing: Toggle,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Toggle {
    On,
    Off,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check one section (`name` or `kind.name`), or every section.
    Check {
        file: PathBuf,
        target: Option<String>,
    },
    /// Build the lifted action of a law and print it as a lift section.
    Lift { file: PathBuf, law: String },
    /// Recover the law of a strict lift and print it as a law section.
    Unlift { file: PathBuf, lift: String },
    /// Enumerate laws and strict lifts independently and compare them.
    Roundtrip {
        file: PathBuf,
        #[arg(long)]
        action: Option<String>,
        #[arg(long)]
        monad: Option<String>,
        /// Print every law and lift found, as declaration sections.
        #[arg(long)]
        emit: bool,
    },
    /// Run the linear suite on the built-in F3 instance or on a file's linear sections.
    LinearDemo { file: Option<PathBuf> },
}

fn parse_caps(s: &str) -> Result<Caps, String> {
    let mut caps = Caps::default();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| format!("`{part}` is not key=value"))?;
        let value: usize = value
            .trim()
            .parse()
            .map_err(|_| format!("`{value}` is not a number"))?;
        match key.trim() {
            "index" => caps.index = value,
            "hom" => caps.hom = value,
            "em" => caps.em = value,
            other => return Err(format!("unknown cap `{other}`")),
        }
    }
    Ok(caps)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Violation,
    Malformed,
    CapExceeded,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Pass => 0,
            Status::Violation => 1,
            Status::Malformed => 2,
            Status::CapExceeded => 3,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub violation_count: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<Violation>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub status: Status,
    pub exit_code: u8,
    pub checks: Vec<CheckOutcome>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub counts: BTreeMap<String, usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub emitted: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
}

impl RunReport {
    fn new(command: &str) -> Self {
        RunReport {
            command: command.to_owned(),
            status: Status::Pass,
            exit_code: 0,
            checks: Vec::new(),
            counts: BTreeMap::new(),
            emitted: None,
            error: None,
            wall_ms: None,
        }
    }

    fn check(&mut self, name: impl Into<String>, report: Report) {
        self.checks.push(CheckOutcome {
            name: name.into(),
            passed: report.is_pass(),
            violation_count: report.violations.len(),
            violations: report.violations,
        });
    }

    fn fail(&mut self, e: Error) {
        self.status = match e {
            Error::CapExceeded { .. } => Status::CapExceeded,
            _ => Status::Malformed,
        };
        self.error = Some(e.to_string());
    }

    fn finish(mut self) -> Self {
        if self.error.is_none() && self.checks.iter().any(|c| !c.passed) {
            self.status = Status::Violation;
        }
        self.exit_code = self.status.code();
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn render(&self, format: Format, witnesses: Toggle) -> String {
        let mut r = self.clone();
        if witnesses == Toggle::Off {
            r.checks.iter_mut().for_each(|c| c.violations.clear());
        }
        match format {
            Format::Machine => serde_json::to_string_pretty(&r).expect("reports serialize") + "\n",
            Format::Text => r.to_text(),
        }
    }

    fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            if c.passed {
                out += &format!("ok    {}\n", c.name);
                continue;
            }
            let s = if c.violation_count == 1 { "" } else { "s" };
            out += &format!("FAIL  {}  ({} violation{s})\n", c.name, c.violation_count);
            for v in &c.violations {
                out += &format!("      {v}\n");
            }
        }
        for (k, v) in &self.counts {
            out += &format!("{k}: {v}\n");
        }
        if let Some(e) = &self.error {
            out += &format!("error: {e}\n");
        }
        if let Some(t) = &self.emitted {
            out += "\n";
            out += t;
            if !t.ends_with('\n') {
                out += "\n";
            }
        }
        if let Some(ms) = self.wall_ms {
            out += &format!("wall time: {ms:.1} ms\n");
        }
        out += &format!("status: {}\n", self.exit_code);
        out
    }
}

/// Parses `args` (including the program name), runs the command, prints the
/// report and returns the exit code.
pub fn main_from<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let report = run(&cli);
    print!("{}", report.render(cli.format, cli.witnesses));
    ExitCode::from(report.exit_code)
}

pub fn run(cli: &Cli) -> RunReport {
    let start = Instant::now();
    let mut report = match &cli.command {
        Command::Check { file, target } => with_decl("check", file, |d, r| {
            run_check(d, target.as_deref(), cli.caps, r)
        }),
        Command::Lift { file, law } => {
            with_decl("lift", file, |d, r| run_lift(d, law, cli.caps, r))
        }
        Command::Unlift { file, lift } => with_decl("unlift", file, |d, r| run_unlift(d, lift, r)),
        Command::Roundtrip {
            file,
            action,
            monad,
            emit,
        } => with_decl("roundtrip", file, |d, r| {
            run_roundtrip(d, action.as_deref(), monad.as_deref(), *emit, cli.caps, r)
        }),
        Command::LinearDemo { file: None } => {
            let mut r = RunReport::new("linear-demo");
            linear_demo("f3", &LinearBundle::f3_example(), &mut r);
            r
        }
        Command::LinearDemo { file: Some(file) } => with_decl("linear-demo", file, |d, r| {
            if d.linear.is_empty() {
                return Err(Error::Declaration("file has no linear section".into()));
            }
            for (name, entry) in &d.linear {
                match entry {
                    LinearEntry::Prime(b) => linear_demo(name, b, r),
                    LinearEntry::Rational(b) => linear_demo(name, b, r),
                }
            }
            Ok(())
        }),
    };
    if cli.timing == Toggle::On {
        report.wall_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    report.finish()
}

/// Runs the checks of `check FILE [TARGET]` on an already loaded declaration.
pub fn check_declaration(d: &Declaration, target: Option<&str>, caps: Caps) -> RunReport {
    let mut r = RunReport::new("check");
    if let Err(e) = run_check(d, target, caps, &mut r) {
        r.fail(e);
    }
    r.finish()
}

fn with_decl(
    command: &str,
    file: &PathBuf,
    body: impl FnOnce(&Declaration, &mut RunReport) -> crate::Result<()>,
) -> RunReport {
    let mut r = RunReport::new(command);
    let result = Declaration::load(file).and_then(|d| body(&d, &mut r));
    if let Err(e) = result {
        r.fail(e);
    }
    r
}

fn em_within_caps(monad: &Arc<Monad>, caps: Caps) -> crate::Result<Arc<EMCategory>> {
    let em = em_category(monad)?;
    let n = em.base.num_objects();
    if n > caps.em {
        return Err(Error::CapExceeded {
            what: "Eilenberg-Moore objects".into(),
            value: n,
            cap: caps.em,
        });
    }
    Ok(Arc::new(em))
}

const KINDS: [&str; 9] = [
    "category", "functor", "monoidal", "monoid", "action", "monad", "law", "lift", "linear",
];

fn section_names<'a>(d: &'a Declaration, kind: &str) -> Vec<&'a String> {
    match kind {
        "category" => d.categories.keys().collect(),
        "functor" => d.functors.keys().collect(),
        "monoidal" => d.monoidal.keys().collect(),
        "monoid" => d.monoids.keys().collect(),
        "action" => d.actions.keys().collect(),
        "monad" => d.monads.keys().collect(),
        "law" => d.laws.keys().collect(),
        "lift" => d.lifts.keys().collect(),
        "linear" => d.linear.keys().collect(),
        _ => Vec::new(),
    }
}

fn run_check(
    d: &Declaration,
    target: Option<&str>,
    caps: Caps,
    r: &mut RunReport,
) -> crate::Result<()> {
    let mut targets: Vec<(&str, &str)> = Vec::new();
    for kind in KINDS {
        for name in section_names(d, kind) {
            let selected = match target {
                None => true,
                Some(t) => {
                    t == name
                        || t.split_once('.')
                            .is_some_and(|(k, n)| k == kind && n == name)
                }
            };
            if selected {
                targets.push((kind, name));
            }
        }
    }
    if targets.is_empty() {
        return Err(Error::Declaration(match target {
            Some(t) => format!("no section named `{t}`"),
            None => "file declares nothing".into(),
        }));
    }
    for (kind, name) in targets {
        check_section(d, kind, name, caps, r)?;
    }
    Ok(())
}

fn check_section(
    d: &Declaration,
    kind: &str,
    name: &str,
    caps: Caps,
    r: &mut RunReport,
) -> crate::Result<()> {
    let label = format!("{kind}.{name}");
    match kind {
        "category" => r.check(label, check_category(&d.categories[name])),
        "functor" => r.check(label, check_functor(&d.functors[name].functor)),
        "monoidal" => r.check(label, check_monoidal(&d.monoidal[name].value)),
        "monoid" => {
            let b = &d.monoids[name];
            r.check(
                label,
                check_monoid(&d.monoidal[&b.monoidal].value, &b.value),
            );
        }
        "action" => r.check(label, check_action(&d.actions[name].value)),
        "monad" => r.check(label, check_monad(&d.monads[name].value)),
        "law" => {
            let entry = &d.laws[name];
            match d.law(name)? {
                None => {
                    let (a, t) = (
                        &d.actions[&entry.action].value,
                        &d.monads[&entry.monad].value,
                    );
                    r.check(label, law_existence(a, t));
                }
                Some(l) => {
                    let report = check_distlaw(&l);
                    let pass = report.is_pass();
                    r.check(label.clone(), report);
                    if pass && l.monad.is_unital() {
                        let em = em_within_caps(&l.monad, caps)?;
                        r.check(format!("{label} lift lemmas"), check_lift_lemmas(&l, &em));
                    }
                }
            }
        }
        "lift" => {
            let entry = &d.lifts[name];
            if entry.em.base.num_objects() > caps.em {
                return Err(Error::CapExceeded {
                    what: "Eilenberg-Moore objects".into(),
                    value: entry.em.base.num_objects(),
                    cap: caps.em,
                });
            }
            match d.lift(name) {
                Err(e) => {
                    let mut rep = Report::new();
                    rep.push(Violation::new(Law::StrictLift, e.to_string()));
                    r.check(label, rep);
                }
                Ok(lift) => {
                    let mut rep = lift.strict_witness.clone();
                    rep.extend(check_action(&lift.tilde));
                    let pass = rep.is_pass();
                    r.check(label.clone(), rep);
                    if pass {
                        r.check(format!("{label} unlift lemmas"), check_unlift_lemmas(&lift));
                    }
                }
            }
        }
        "linear" => match &d.linear[name] {
            LinearEntry::Prime(b) => linear_checks(name, b, r),
            LinearEntry::Rational(b) => linear_checks(name, b, r),
        },
        _ => unreachable!("kinds are fixed"),
    }
    Ok(())
}

fn linear_checks<F: Field>(name: &str, bundle: &LinearBundle<F>, r: &mut RunReport) {
    for c in run_linear_suite(bundle) {
        r.check(format!("linear.{name} {}", c.name), c.report);
    }
}

fn linear_demo<F: Field>(name: &str, bundle: &LinearBundle<F>, r: &mut RunReport) {
    linear_checks(name, bundle, r);
    if r.checks.iter().any(|c| !c.passed) {
        return;
    }
    let (b, a) = (&bundle.bialgebra, &bundle.algebra);
    let v = bundle.module.dim;
    let l = canonical_law(b, a, v, &Comodule::regular(b));
    let text = format!(
        "# {name}: law component at V = M ({v}), Q = B ({}); {}x{} over {}, rows = codomain\n{}",
        b.dim,
        l.rows(),
        l.cols(),
        b.field().name(),
        l.to_text()
    );
    r.emitted = Some(match r.emitted.take() {
        Some(prev) => format!("{prev}\n{text}"),
        None => text,
    });
}

/// Serializes just the named law and lift sections of `d`.
fn sections_toml(d: &Declaration, laws: &[String], lifts: &[String]) -> String {
    let full = d.to_raw();
    let mut raw = RawFile::default();
    for n in laws {
        raw.law.insert(n.clone(), full.law[n].clone());
    }
    for n in lifts {
        raw.lift.insert(n.clone(), full.lift[n].clone());
    }
    toml::to_string(&raw).expect("sections serialize")
}

fn run_lift(d: &Declaration, name: &str, caps: Caps, r: &mut RunReport) -> crate::Result<()> {
    let entry = d
        .laws
        .get(name)
        .ok_or_else(|| Error::Declaration(format!("unknown law `{name}`")))?;
    let Some(l) = d.law(name)? else {
        let (a, t) = (
            &d.actions[&entry.action].value,
            &d.monads[&entry.monad].value,
        );
        r.check(format!("law.{name}"), law_existence(a, t));
        return Ok(());
    };
    let report = check_distlaw(&l);
    if !report.is_pass() {
        r.check(format!("law.{name}"), report);
        return Ok(());
    }
    let em = em_within_caps(&l.monad, caps)?;
    let lift = lift_from_law(&l, &em)?;
    let mut lemmas = check_lift_lemmas(&l, &em);
    lemmas.extend(lift.strict_witness.clone());
    r.check(format!("lift of law.{name}"), lemmas);
    let out = format!("{name}_lift");
    let mut d2 = d.clone();
    d2.insert_lift(&out, &entry.action, &entry.monad, &lift);
    r.emitted = Some(sections_toml(&d2, &[], &[out]));
    Ok(())
}

fn run_unlift(d: &Declaration, name: &str, r: &mut RunReport) -> crate::Result<()> {
    let entry = d
        .lifts
        .get(name)
        .ok_or_else(|| Error::Declaration(format!("unknown lift `{name}`")))?;
    let lift = match d.lift(name) {
        Ok(lift) => lift,
        Err(e) => {
            let mut rep = Report::new();
            rep.push(Violation::new(Law::StrictLift, e.to_string()));
            r.check(format!("lift.{name}"), rep);
            return Ok(());
        }
    };
    if !lift.strict_witness.is_pass() {
        r.check(format!("lift.{name}"), lift.strict_witness.clone());
        return Ok(());
    }
    let law = law_from_lift(&lift)?;
    r.check(format!("law of lift.{name}"), check_unlift_lemmas(&lift));
    let out = format!("{name}_law");
    let mut d2 = d.clone();
    d2.insert_law(&out, &entry.action, &entry.monad, &law);
    r.emitted = Some(sections_toml(&d2, &[out], &[]));
    Ok(())
}

fn pick<'a, T>(
    map: &'a BTreeMap<String, T>,
    given: Option<&'a str>,
    kind: &str,
) -> crate::Result<&'a str> {
    match given {
        Some(n) if map.contains_key(n) => Ok(n),
        Some(n) => Err(Error::Declaration(format!("unknown {kind} `{n}`"))),
        None if map.len() == 1 => Ok(map.keys().next().expect("one entry")),
        None => Err(Error::Declaration(format!(
            "file has {} {kind} sections; name one with --{kind}",
            map.len()
        ))),
    }
}

fn run_roundtrip(
    d: &Declaration,
    action: Option<&str>,
    monad: Option<&str>,
    emit: bool,
    caps: Caps,
    r: &mut RunReport,
) -> crate::Result<()> {
    let a_name = pick(&d.actions, action, "action")?;
    let t_name = pick(&d.monads, monad, "monad")?;
    let (a, t) = (&d.actions[a_name], &d.monads[t_name]);
    if a.category != t.category {
        return Err(Error::Declaration(format!(
            "action `{a_name}` and monad `{t_name}` live on different categories"
        )));
    }
    let bij = verify_bijection(&a.value, &t.value, caps)?;
    r.counts.insert("laws".into(), bij.law_count());
    r.counts.insert("lifts".into(), bij.lift_count());
    r.check(format!("bijection {a_name}/{t_name}"), bij.report.clone());
    if emit {
        let mut d2 = d.clone();
        let mut laws = Vec::new();
        let mut lifts = Vec::new();
        for (i, l) in bij.laws.iter().enumerate() {
            let n = format!("enum_law{i}");
            d2.insert_law(&n, a_name, t_name, l);
            laws.push(n);
        }
        for (i, lift) in bij.lifts.iter().enumerate() {
            let n = format!("enum_lift{i}");
            d2.insert_lift(&n, a_name, t_name, lift);
            lifts.push(n);
        }
        r.emitted = Some(sections_toml(&d2, &laws, &lifts));
    }
    Ok(())
}
