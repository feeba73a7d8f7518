use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("composition undefined: {g} . {f}")]
    CompositionUndefined { g: String, f: String },

    #[error("unknown object `{0}`")]
    UnknownObject(String),

    #[error("unknown morphism `{0}`")]
    UnknownMorphism(String),

    #[error("incompatible functors: {0}")]
    IncompatibleFunctors(String),

    #[error("godement product formulas disagree at object `{0}`")]
    InterchangeFailure(String),

    #[error("morphism `{0}` has no two-sided inverse")]
    NotInvertible(String),

    #[error("no morphism {source_obj} -> {target_obj} for {role}")]
    NoMorphism {
        role: String,
        source_obj: String,
        target_obj: String,
    },

    #[error("hom-set {source_obj} -> {target_obj} has {count} elements; expected exactly one for {role}")]
    AmbiguousMorphism {
        role: String,
        source_obj: String,
        target_obj: String,
        count: usize,
    },

    #[error("monad is nonunital; {0} needs a unit")]
    NonUnital(String),

    #[error("distributive law invalid: {0}")]
    LawInvalid(String),

    #[error("cap exceeded: {what} is {value}, cap {cap}")]
    CapExceeded {
        what: String,
        value: usize,
        cap: usize,
    },

    #[error("malformed structure: {0}")]
    Malformed(String),

    #[error("declaration error: {0}")]
    Declaration(String),
}
