//! Text syntax for the four program dialects, printing, and JSON output.
//!
//! ```text
//! % acp: constraint atoms
//! 1{b,c} :- not(1{e}).
//! 2{p1=1,p2=2}3 :- TABLE[a,b: {a}, {a,b}], EVEN{c,d}.
//! :- a, b.
//!
//! % lparse: weighted literals
//! 1{a=2, not(b)=1}2 :- 0{c=1}0.
//!
//! % normal and disjunctive
//! a :- b, not(c).
//! a | b :- not(c).
//! ```
//!
//! Printing is canonical, and parsing printed text gives back the same
//! structure.

mod json;
mod lexer;
mod parser;

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use crate::disjunctive::DProgram;
use crate::domain::Program;
use crate::error::ParseError;
use crate::lparse::LProgram;
use crate::translate::NormalProgram;

pub use json::{computation_json, emit_json, interpretation_json, interpretations_json};

use parser::Parser;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Dialect {
    Acp,
    Lparse,
    Normal,
    Disjunctive,
}

impl Dialect {
    /// `.acp`, `.lp`, `.nlp` and `.dlp`.
    pub fn from_path(path: &Path) -> Option<Dialect> {
        match path.extension()?.to_str()? {
            "acp" => Some(Dialect::Acp),
            "lp" => Some(Dialect::Lparse),
            "nlp" => Some(Dialect::Normal),
            "dlp" => Some(Dialect::Disjunctive),
            _ => None,
        }
    }
}

impl fmt::Display for Dialect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Dialect::Acp => "acp",
            Dialect::Lparse => "lparse",
            Dialect::Normal => "normal",
            Dialect::Disjunctive => "disjunctive",
        })
    }
}

impl FromStr for Dialect {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "acp" => Ok(Dialect::Acp),
            "lparse" => Ok(Dialect::Lparse),
            "normal" => Ok(Dialect::Normal),
            "disjunctive" => Ok(Dialect::Disjunctive),
            other => Err(format!("unknown dialect {other}")),
        }
    }
}

/// Line and column of the first character of a clause and just past its dot.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub start: (usize, usize),
    pub end: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Parsed {
    Acp(Program),
    Lparse(LProgram),
    Normal(NormalProgram),
    Disjunctive(DProgram),
}

impl Parsed {
    pub fn dialect(&self) -> Dialect {
        match self {
            Parsed::Acp(_) => Dialect::Acp,
            Parsed::Lparse(_) => Dialect::Lparse,
            Parsed::Normal(_) => Dialect::Normal,
            Parsed::Disjunctive(_) => Dialect::Disjunctive,
        }
    }
}

impl fmt::Display for Parsed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parsed::Acp(p) => p.fmt(f),
            Parsed::Lparse(p) => p.fmt(f),
            Parsed::Normal(p) => p.fmt(f),
            Parsed::Disjunctive(p) => p.fmt(f),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SourceProgram {
    pub dialect: Dialect,
    pub text: String,
    pub parsed: Parsed,
    /// One span per clause, in order.
    pub spans: Vec<Span>,
}

pub fn parse(dialect: Dialect, text: &str) -> Result<SourceProgram, ParseError> {
    let mut p = Parser::new(text)?;
    let (parsed, spans) = match dialect {
        Dialect::Acp => {
            let (prog, spans) = p.acp_program()?;
            (Parsed::Acp(prog), spans)
        }
        Dialect::Lparse => {
            let (prog, spans) = p.lparse_program()?;
            (Parsed::Lparse(prog), spans)
        }
        Dialect::Normal => {
            let (prog, spans) = p.normal_program()?;
            (Parsed::Normal(prog), spans)
        }
        Dialect::Disjunctive => {
            let (prog, spans) = p.disjunctive_program()?;
            (Parsed::Disjunctive(prog), spans)
        }
    };
    Ok(SourceProgram {
        dialect,
        text: text.to_string(),
        parsed,
        spans,
    })
}

pub fn parse_acp(text: &str) -> Result<Program, ParseError> {
    Ok(Parser::new(text)?.acp_program()?.0)
}

pub fn parse_lparse(text: &str) -> Result<LProgram, ParseError> {
    Ok(Parser::new(text)?.lparse_program()?.0)
}

pub fn parse_normal(text: &str) -> Result<NormalProgram, ParseError> {
    Ok(Parser::new(text)?.normal_program()?.0)
}

pub fn parse_disjunctive(text: &str) -> Result<DProgram, ParseError> {
    Ok(Parser::new(text)?.disjunctive_program()?.0)
}

/// Canonical text, one clause per line.
pub fn print(p: &Parsed) -> String {
    p.to_string()
}
