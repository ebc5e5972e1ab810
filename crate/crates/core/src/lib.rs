pub mod cli;
pub mod disjunctive;
pub mod domain;
pub mod error;
pub mod horn;
pub mod lparse;
pub mod oracle;
pub mod semantics;
pub mod stable;
pub mod textio;
pub mod translate;

pub use error::{Error, Result};
