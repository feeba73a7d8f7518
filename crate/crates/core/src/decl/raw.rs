//! On-disk shape of a declaration file, as read and written by serde.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawFile {
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub category: BTreeMap<String, RawCategory>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub functor: BTreeMap<String, RawFunctor>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub monoidal: BTreeMap<String, RawMonoidal>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub monoid: BTreeMap<String, RawMonoid>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub action: BTreeMap<String, RawAction>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub monad: BTreeMap<String, RawMonad>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub law: BTreeMap<String, RawLaw>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub lift: BTreeMap<String, RawLift>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub linear: BTreeMap<String, RawLinear>,
}

/// Either a rule name (`"thin"`, `"identity"`) or explicit entries.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Table {
    Rule(String),
    Entries(Vec<String>),
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawCategory {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub objects: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub morphisms: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub identities: Option<BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub compose: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub auto_units: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawFunctor {
    pub dom: String,
    pub cod: String,
    pub objects: Vec<String>,
    pub morphisms: Table,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawMonoidal {
    pub category: String,
    pub unit: String,
    pub tensor_objects: Vec<String>,
    pub tensor_morphisms: Table,
    pub assoc: Table,
    pub runit: Table,
    pub lunit: Table,
    #[serde(default)]
    pub strict: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawMonoid {
    pub monoidal: String,
    pub carrier: String,
    /// A morphism name or `"thin"`.
    pub mult: String,
    pub unit: String,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawAction {
    pub monoidal: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub category: Option<String>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub self_action: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub act_objects: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub act_morphisms: Option<Table>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub psi: Option<Table>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Table>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawMonad {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub category: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub objects: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub morphisms: Option<Table>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<Table>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eta: Option<Table>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub monoid: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawLaw {
    pub action: String,
    pub monad: String,
    pub components: Table,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawLiftEntry {
    pub module: String,
    pub q: String,
    pub result: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawLift {
    pub action: String,
    pub monad: String,
    pub objects: Vec<RawLiftEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Int(i64),
    Text(String),
}

pub type Matrix = Vec<Vec<Scalar>>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawBialgebra {
    pub dim: usize,
    pub mult: Matrix,
    pub unit: Matrix,
    pub comult: Matrix,
    pub counit: Matrix,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawModuleAlgebra {
    pub dim: usize,
    pub mult: Matrix,
    pub unit: Matrix,
    pub action: Matrix,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawModule {
    pub dim: usize,
    pub act: Matrix,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawComodule {
    pub dim: usize,
    pub coaction: Matrix,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawLinear {
    pub field: String,
    pub bialgebra: RawBialgebra,
    pub algebra: RawModuleAlgebra,
    pub module: RawModule,
    pub comodules: BTreeMap<String, RawComodule>,
}
