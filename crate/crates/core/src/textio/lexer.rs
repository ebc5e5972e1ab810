use crate::domain::FRESH_SIGIL;
use crate::error::{ParseError, ParseErrorKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(super) enum Tok {
    Ident(String),
    Keyword(String),
    Int(u64),
    Neck,
    Colon,
    Comma,
    Dot,
    Eq,
    Pipe,
    Slash,
    Minus,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    LParen,
    RParen,
    Eof,
}

impl Tok {
    pub(super) fn describe(&self) -> String {
        match self {
            Tok::Ident(s) | Tok::Keyword(s) => format!("`{s}`"),
            Tok::Int(n) => format!("`{n}`"),
            Tok::Eof => "end of input".into(),
            other => {
                let s = match other {
                    Tok::Neck => ":-",
                    Tok::Colon => ":",
                    Tok::Comma => ",",
                    Tok::Dot => ".",
                    Tok::Eq => "=",
                    Tok::Pipe => "|",
                    Tok::Slash => "/",
                    Tok::Minus => "-",
                    Tok::LBrace => "{",
                    Tok::RBrace => "}",
                    Tok::LBracket => "[",
                    Tok::RBracket => "]",
                    Tok::LParen => "(",
                    _ => ")",
                };
                format!("`{s}`")
            }
        }
    }
}

#[derive(Clone, Debug)]
pub(super) struct Token {
    pub tok: Tok,
    pub line: usize,
    pub column: usize,
}

pub(super) fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut column) = (0, 1, 1);
    let error = |line, column, msg: String| ParseError {
        line,
        column,
        kind: ParseErrorKind::Syntax(msg),
    };
    while i < chars.len() {
        let c = chars[i];
        let (start_line, start_column, start) = (line, column, i);
        if c == '\n' {
            i += 1;
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            column += 1;
            continue;
        }
        if c == '%' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        let tok = if c.is_ascii_lowercase() || (c == FRESH_SIGIL && chars.get(i + 1).is_some_and(char::is_ascii_lowercase)) {
            i += 1;
            while i < chars.len() && (chars[i].is_ascii_lowercase() || chars[i].is_ascii_digit() || chars[i] == '_') {
                i += 1;
            }
            Tok::Ident(chars[start..i].iter().collect())
        } else if c.is_ascii_uppercase() {
            while i < chars.len() && chars[i].is_ascii_uppercase() {
                i += 1;
            }
            Tok::Keyword(chars[start..i].iter().collect())
        } else if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            let n = digits
                .parse()
                .map_err(|_| error(start_line, start_column, format!("integer {digits} is too large")))?;
            Tok::Int(n)
        } else if c == ':' && chars.get(i + 1) == Some(&'-') {
            i += 2;
            Tok::Neck
        } else {
            let tok = match c {
                ':' => Tok::Colon,
                ',' => Tok::Comma,
                '.' => Tok::Dot,
                '=' => Tok::Eq,
                '|' => Tok::Pipe,
                '/' => Tok::Slash,
                '-' => Tok::Minus,
                '{' => Tok::LBrace,
                '}' => Tok::RBrace,
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                other => return Err(error(line, column, format!("unexpected character `{other}`"))),
            };
            i += 1;
            tok
        };
        column += i - start;
        out.push(Token {
            tok,
            line: start_line,
            column: start_column,
        });
    }
    out.push(Token {
        tok: Tok::Eof,
        line,
        column,
    });
    Ok(out)
}
