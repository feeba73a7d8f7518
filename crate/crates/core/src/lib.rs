//! Finite monoidal categories acting on finite categories, monads and their
//! Eilenberg-Moore categories, and distributive laws between the two, all
//! checked by explicit table computation.

pub mod action;
pub mod category;
pub mod cli;
pub mod decl;
pub mod distlaw;
pub mod error;
pub mod functor;
pub mod instances;
pub mod linear;
pub mod monad;
pub mod monoidal;
pub mod report;

pub use error::{Error, Result};
pub use report::{Law, Report, Violation};
