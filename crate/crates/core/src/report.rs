//! Check reports shared by every checker and by the CLI.
//!
//! A [`Report`] is a list of [`Violation`]s; an empty report means the
//! structure passed. Witnesses name the objects and morphisms involved so
//! that test assertions and CLI output read the same data.

use std::fmt;

use serde::Serialize;

/// Which law or diagram a violation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Law {
    // categories and functors
    Malformed,
    IdentityTyping,
    CompositionTyping,
    CompositionMissing,
    Associativity,
    LeftUnit,
    RightUnit,
    FunctorEndpoints,
    FunctorIdentity,
    FunctorComposition,
    ComponentTyping,
    Naturality,
    // monoidal structure
    Isomorphism,
    Pentagon,
    Triangle,
    Strictness,
    MonoidAssociativity,
    MonoidUnit,
    // actions and C-functors
    ActionPentagon,
    ActionUnit,
    CFunctorUnit,
    CFunctorHexagon,
    // monads and modules
    MonadAssociativity,
    MonadUnit,
    ModuleAssociativity,
    ModuleUnit,
    ModuleMorphism,
    ForgetfulFree,
    Counit,
    AdjunctionTriangle,
    // distributive laws and lifts
    NonExistent,
    D1,
    D2,
    D3,
    D4,
    StrictLift,
    LiftedModule,
    LiftedStructure,
    Roundtrip,
    // linear layer
    AlgebraAssociativity,
    AlgebraUnit,
    CoalgebraCoassociativity,
    CoalgebraCounit,
    BialgebraCompatibility,
    ComoduleCoassociativity,
    ComoduleCounit,
    ModuleAlgebra,
    Compatibility,
    MatrixEquality,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self)
            .ok()
            .and_then(|v| v.as_str().map(str::to_owned))
            .unwrap_or_default();
        f.write_str(&s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub law: Law,
    /// Named roles and the object or morphism names that filled them.
    pub witness: Vec<(String, String)>,
    pub message: String,
}

impl Violation {
    pub fn new(law: Law, message: impl Into<String>) -> Self {
        Violation {
            law,
            witness: Vec::new(),
            message: message.into(),
        }
    }

    pub fn with(mut self, role: &str, value: impl Into<String>) -> Self {
        self.witness.push((role.to_owned(), value.into()));
        self
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.law)?;
        for (role, value) in &self.witness {
            write!(f, " {role}={value}")?;
        }
        if !self.message.is_empty() {
            write!(f, ": {}", self.message)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_pass(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }

    pub fn extend(&mut self, other: Report) {
        self.violations.extend(other.violations);
    }

    pub fn has(&self, law: Law) -> bool {
        self.violations.iter().any(|v| v.law == law)
    }

    pub fn laws(&self) -> Vec<Law> {
        let mut laws: Vec<Law> = self.violations.iter().map(|v| v.law).collect();
        laws.sort();
        laws.dedup();
        laws
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_pass() {
            return f.write_str("pass");
        }
        writeln!(f, "{} violation(s)", self.violations.len())?;
        for v in &self.violations {
            writeln!(f, "  {v}")?;
        }
        Ok(())
    }
}
