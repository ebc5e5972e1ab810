use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;

use super::lexer::{tokenize, Tok, Token};
use super::Span;
use crate::disjunctive::{DClause, DProgram};
use crate::domain::{Atom, AtomSet, Clause, ConstraintAtom, Literal, Program, Rational};
use crate::error::{Error, ParseError, ParseErrorKind};
use crate::lparse::{LAtom, LClause, LLiteral, LProgram, WeightedLiteralSet};
use crate::translate::{NormalClause, NormalProgram};

type PResult<T> = Result<T, ParseError>;

pub(super) struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    pub(super) fn new(text: &str) -> PResult<Self> {
        Ok(Parser {
            toks: tokenize(text)?,
            pos: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, offset: usize) -> &Tok {
        let i = (self.pos + offset).min(self.toks.len() - 1);
        &self.toks[i].tok
    }

    fn here(&self) -> (usize, usize) {
        let t = &self.toks[self.pos];
        (t.line, t.column)
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error_at(&self, (line, column): (usize, usize), kind: ParseErrorKind) -> ParseError {
        ParseError { line, column, kind }
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        self.error_at(
            self.here(),
            ParseErrorKind::Syntax(format!("expected {wanted}, found {}", self.peek().describe())),
        )
    }

    fn expect(&mut self, tok: Tok) -> PResult<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(&tok.describe()))
        }
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == tok {
            self.bump();
            true
        } else {
            false
        }
    }

    pub(super) fn at_end(&self) -> bool {
        *self.peek() == Tok::Eof
    }

    fn is_not(&self) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == "not") && *self.peek_at(1) == Tok::LParen
    }

    fn ident(&mut self) -> PResult<Atom> {
        match self.peek().clone() {
            Tok::Ident(s) if s == "not" => Err(self.error_at(
                self.here(),
                ParseErrorKind::Syntax("`not` is reserved and cannot name an atom".into()),
            )),
            Tok::Ident(s) => {
                self.bump();
                Ok(Atom::new(&s))
            }
            _ => Err(self.unexpected("an atom")),
        }
    }

    fn int(&mut self) -> PResult<u64> {
        match *self.peek() {
            Tok::Int(n) => {
                self.bump();
                Ok(n)
            }
            _ => Err(self.unexpected("an integer")),
        }
    }

    fn rational(&mut self) -> PResult<Rational> {
        let at = self.here();
        let negative = self.eat(&Tok::Minus);
        let numer = self.int()?;
        let denom = if self.eat(&Tok::Slash) { self.int()? } else { 1 };
        if denom == 0 {
            return Err(self.error_at(at, ParseErrorKind::Invalid("zero denominator".into())));
        }
        let numer = BigInt::from(numer);
        let r = Rational::new(if negative { -numer } else { numer }, BigInt::from(denom));
        Ok(r)
    }

    /// `{a, b, …}` with no repeats; the opening brace is next.
    fn atom_set(&mut self) -> PResult<AtomSet> {
        self.expect(Tok::LBrace)?;
        let mut set = AtomSet::new();
        if !self.eat(&Tok::RBrace) {
            loop {
                let at = self.here();
                let a = self.ident()?;
                if !set.insert(a.clone()) {
                    return Err(self.error_at(at, ParseErrorKind::DuplicateAtom(a.to_string())));
                }
                if self.eat(&Tok::RBrace) {
                    break;
                }
                self.expect(Tok::Comma)?;
            }
        }
        Ok(set)
    }

    /// Comma-separated atoms up to (not including) `end`.
    fn atom_list_until(&mut self, end: &Tok) -> PResult<AtomSet> {
        let mut set = AtomSet::new();
        if self.peek() == end {
            return Ok(set);
        }
        loop {
            let at = self.here();
            let a = self.ident()?;
            if !set.insert(a.clone()) {
                return Err(self.error_at(at, ParseErrorKind::DuplicateAtom(a.to_string())));
            }
            if self.peek() == end {
                return Ok(set);
            }
            self.expect(Tok::Comma)?;
        }
    }

    /// `[a, b: {…}, {…}]` for tables and containment atoms.
    fn family(&mut self) -> PResult<(AtomSet, BTreeSet<AtomSet>)> {
        self.expect(Tok::LBracket)?;
        let atoms = self.atom_list_until(&Tok::Colon)?;
        self.expect(Tok::Colon)?;
        let mut sets = BTreeSet::new();
        if !self.eat(&Tok::RBracket) {
            loop {
                sets.insert(self.atom_set()?);
                if self.eat(&Tok::RBracket) {
                    break;
                }
                self.expect(Tok::Comma)?;
            }
        }
        Ok((atoms, sets))
    }

    /// The weight after `=`, rejecting a sign.
    fn weight(&mut self, atom: &str) -> PResult<u64> {
        if *self.peek() == Tok::Minus {
            return Err(self.error_at(self.here(), ParseErrorKind::NegativeWeight(atom.to_string())));
        }
        self.int()
    }

    fn rational_weights(&mut self) -> PResult<BTreeMap<Atom, Rational>> {
        self.expect(Tok::LBrace)?;
        let mut weights = BTreeMap::new();
        if !self.eat(&Tok::RBrace) {
            loop {
                let at = self.here();
                let a = self.ident()?;
                self.expect(Tok::Eq)?;
                let w = self.rational()?;
                if weights.insert(a.clone(), w).is_some() {
                    return Err(self.error_at(at, ParseErrorKind::DuplicateAtom(a.to_string())));
                }
                if self.eat(&Tok::RBrace) {
                    break;
                }
                self.expect(Tok::Comma)?;
            }
        }
        Ok(weights)
    }

    /// An optional upper bound after a closing brace.
    fn upper_bound(&mut self) -> PResult<Option<Option<u64>>> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Some(Some(n)))
            }
            Tok::Keyword(k) if k == "INF" => {
                self.bump();
                Ok(Some(None))
            }
            _ => Ok(None),
        }
    }

    fn lift(&self, at: (usize, usize), e: Error) -> ParseError {
        let kind = match e {
            Error::BoundInversion { lower, upper } => ParseErrorKind::BoundInversion { lower, upper },
            Error::DuplicateAtom(a) => ParseErrorKind::DuplicateAtom(a),
            Error::NegativeWeight { atom, .. } => ParseErrorKind::NegativeWeight(atom),
            other => ParseErrorKind::Invalid(other.to_string()),
        };
        self.error_at(at, kind)
    }

    fn acp_atom(&mut self) -> PResult<ConstraintAtom> {
        let at = self.here();
        match self.peek().clone() {
            Tok::Keyword(k) => {
                self.bump();
                match k.as_str() {
                    "FALSE" => Ok(ConstraintAtom::inconsistent()),
                    "TABLE" => {
                        let (atoms, sets) = self.family()?;
                        ConstraintAtom::table(atoms, sets).map_err(|e| self.lift(at, e))
                    }
                    "CONTAINS" => {
                        let (atoms, sets) = self.family()?;
                        ConstraintAtom::containment(atoms, sets).map_err(|e| self.lift(at, e))
                    }
                    "EVEN" => Ok(ConstraintAtom::even(self.atom_set()?)),
                    "ODD" => Ok(ConstraintAtom::odd(self.atom_set()?)),
                    "MAX" | "PROD" => {
                        self.expect(Tok::LParen)?;
                        let lower = self.rational()?;
                        self.expect(Tok::RParen)?;
                        let weights = self.rational_weights()?;
                        if k == "MAX" {
                            Ok(ConstraintAtom::maximum(lower, weights))
                        } else {
                            ConstraintAtom::product(lower, weights).map_err(|e| self.lift(at, e))
                        }
                    }
                    other => Err(self.error_at(
                        at,
                        ParseErrorKind::Syntax(format!("unknown keyword `{other}`")),
                    )),
                }
            }
            Tok::Ident(_) => Ok(ConstraintAtom::pb(self.ident()?)),
            Tok::Int(_) | Tok::LBrace => {
                let lower = if let Tok::Int(n) = *self.peek() {
                    self.bump();
                    n
                } else {
                    0
                };
                self.expect(Tok::LBrace)?;
                let mut pairs = Vec::new();
                let mut weighted = false;
                if !self.eat(&Tok::RBrace) {
                    loop {
                        let a = self.ident()?;
                        let w = if self.eat(&Tok::Eq) {
                            weighted = true;
                            self.weight(a.name())?
                        } else {
                            1
                        };
                        pairs.push((a, w));
                        if self.eat(&Tok::RBrace) {
                            break;
                        }
                        self.expect(Tok::Comma)?;
                    }
                }
                let weights = crate::domain::collect_weights(pairs).map_err(|e| self.lift(at, e))?;
                match self.upper_bound()? {
                    Some(upper) => ConstraintAtom::weight_range(lower, upper, weights)
                        .map_err(|e| self.lift(at, e)),
                    None if weighted => Ok(ConstraintAtom::weight(lower, weights)),
                    None => Ok(ConstraintAtom::cardinality(lower, weights.into_keys())),
                }
            }
            _ => Err(self.unexpected("a constraint atom")),
        }
    }

    fn acp_literal(&mut self) -> PResult<Literal> {
        if self.is_not() {
            self.bump();
            self.bump();
            let a = self.acp_atom()?;
            self.expect(Tok::RParen)?;
            Ok(Literal::neg(a))
        } else {
            Ok(Literal::pos(self.acp_atom()?))
        }
    }

    /// `:- body .` or `.` after a head; returns the (possibly empty) body.
    fn body<T>(&mut self, mut item: impl FnMut(&mut Self) -> PResult<T>) -> PResult<Vec<T>> {
        let mut body = Vec::new();
        if self.eat(&Tok::Neck) && *self.peek() != Tok::Dot {
            loop {
                body.push(item(self)?);
                if !self.eat(&Tok::Comma) {
                    break;
                }
            }
        }
        self.expect(Tok::Dot)?;
        Ok(body)
    }

    fn span<T>(&mut self, f: impl FnOnce(&mut Self) -> PResult<T>) -> PResult<(T, Span)> {
        let start = self.here();
        let value = f(self)?;
        let end_tok = &self.toks[self.pos.saturating_sub(1)];
        Ok((
            value,
            Span {
                start,
                end: (end_tok.line, end_tok.column + 1),
            },
        ))
    }

    fn acp_clause(&mut self) -> PResult<Clause> {
        let head = if *self.peek() == Tok::Neck {
            ConstraintAtom::inconsistent()
        } else {
            self.acp_atom()?
        };
        let body = self.body(Self::acp_literal)?;
        Ok(Clause::new(head, body))
    }

    fn l_entry(&mut self) -> PResult<LLiteral> {
        if self.is_not() {
            self.bump();
            self.bump();
            let a = self.ident()?;
            self.expect(Tok::RParen)?;
            Ok(LLiteral::neg(a))
        } else {
            Ok(LLiteral::pos(self.ident()?))
        }
    }

    fn l_atom(&mut self) -> PResult<LAtom> {
        let at = self.here();
        match self.peek() {
            Tok::Ident(_) => {
                let lit = self.l_entry()?;
                let weights = WeightedLiteralSet::new(BTreeMap::from([(lit, 1)]));
                Ok(LAtom::new(1, None, weights).expect("no upper bound"))
            }
            Tok::Int(_) | Tok::LBrace => {
                let lower = if let Tok::Int(n) = *self.peek() {
                    self.bump();
                    n
                } else {
                    0
                };
                self.expect(Tok::LBrace)?;
                let mut pairs = Vec::new();
                if !self.eat(&Tok::RBrace) {
                    loop {
                        let lit = self.l_entry()?;
                        let w = if self.eat(&Tok::Eq) {
                            self.weight(lit.atom.name())?
                        } else {
                            1
                        };
                        pairs.push((lit, w));
                        if self.eat(&Tok::RBrace) {
                            break;
                        }
                        self.expect(Tok::Comma)?;
                    }
                }
                let weights = WeightedLiteralSet::from_pairs(pairs).map_err(|e| self.lift(at, e))?;
                let upper = self.upper_bound()?.flatten();
                LAtom::new(lower, upper, weights).map_err(|e| self.lift(at, e))
            }
            _ => Err(self.unexpected("an l-atom")),
        }
    }

    fn l_clause(&mut self) -> PResult<LClause> {
        let head = if *self.peek() == Tok::Neck {
            LAtom::falsum()
        } else {
            self.l_atom()?
        };
        let body = self.body(Self::l_atom)?;
        Ok(LClause::new(head, body))
    }

    /// `a` or `not(a)` in a normal or disjunctive body.
    fn plain_literal(&mut self) -> PResult<(Atom, bool)> {
        if self.is_not() {
            self.bump();
            self.bump();
            let a = self.ident()?;
            self.expect(Tok::RParen)?;
            Ok((a, true))
        } else {
            Ok((self.ident()?, false))
        }
    }

    fn plain_body(&mut self) -> PResult<(Vec<Atom>, Vec<Atom>)> {
        let lits = self.body(Self::plain_literal)?;
        let (neg, pos): (Vec<_>, Vec<_>) = lits.into_iter().partition(|(_, n)| *n);
        Ok((
            pos.into_iter().map(|(a, _)| a).collect(),
            neg.into_iter().map(|(a, _)| a).collect(),
        ))
    }

    fn normal_clause(&mut self) -> PResult<NormalClause> {
        let head = if *self.peek() == Tok::Neck {
            None
        } else {
            Some(self.ident()?)
        };
        let (pos, neg) = self.plain_body()?;
        Ok(NormalClause::new(head, pos, neg))
    }

    fn disjunctive_clause(&mut self) -> PResult<DClause> {
        let mut head = BTreeSet::new();
        if *self.peek() != Tok::Neck {
            loop {
                let at = self.here();
                let a = self.ident()?;
                if !head.insert(a.clone()) {
                    return Err(self.error_at(at, ParseErrorKind::DuplicateAtom(a.to_string())));
                }
                if !self.eat(&Tok::Pipe) {
                    break;
                }
            }
        }
        let (pos, neg) = self.plain_body()?;
        Ok(DClause::new(head, pos, neg))
    }

    fn clauses<T>(&mut self, mut clause: impl FnMut(&mut Self) -> PResult<T>) -> PResult<(Vec<T>, Vec<Span>)> {
        let mut out = Vec::new();
        let mut spans = Vec::new();
        while !self.at_end() {
            let (c, s) = self.span(&mut clause)?;
            out.push(c);
            spans.push(s);
        }
        Ok((out, spans))
    }

    pub(super) fn acp_program(&mut self) -> PResult<(Program, Vec<Span>)> {
        let (clauses, spans) = self.clauses(Self::acp_clause)?;
        Ok((Program::new(clauses), spans))
    }

    pub(super) fn lparse_program(&mut self) -> PResult<(LProgram, Vec<Span>)> {
        let (clauses, spans) = self.clauses(Self::l_clause)?;
        Ok((LProgram::new(clauses), spans))
    }

    pub(super) fn normal_program(&mut self) -> PResult<(NormalProgram, Vec<Span>)> {
        let (clauses, spans) = self.clauses(Self::normal_clause)?;
        Ok((NormalProgram::new(clauses), spans))
    }

    pub(super) fn disjunctive_program(&mut self) -> PResult<(DProgram, Vec<Span>)> {
        let (clauses, spans) = self.clauses(Self::disjunctive_clause)?;
        Ok((DProgram::new(clauses), spans))
    }
}
