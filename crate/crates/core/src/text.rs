//! Tokenizer shared by the field-element and polynomial parsers.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
pub(crate) struct Token {
    pub tok: Tok,
    /// 1-based column of the first character.
    pub column: usize,
}

pub(crate) fn parse_error(column: usize, message: impl Into<String>) -> Error {
    Error::Parse { column, message: message.into() }
}

pub(crate) fn tokenize(s: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                out.push(Token { tok: Tok::Int(chars[start..i].iter().collect()), column });
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Token { tok: Tok::Ident(chars[start..i].iter().collect()), column });
                continue;
            }
            other => return Err(parse_error(column, format!("unexpected character '{other}'"))),
        };
        out.push(Token { tok, column });
        i += 1;
    }
    Ok(out)
}

/// Cursor over a token slice.
pub(crate) struct Cursor<'a> {
    toks: &'a [Token],
    pos: usize,
    end_column: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(toks: &'a [Token], source_len: usize) -> Self {
        Cursor { toks, pos: 0, end_column: source_len + 1 }
    }

    pub fn peek(&self) -> Option<&'a Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    pub fn next(&mut self) -> Option<&'a Tok> {
        let t = self.toks.get(self.pos).map(|t| &t.tok);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    pub fn column(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_column, |t| t.column)
    }

    pub fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    pub fn expect_nat(&mut self) -> Result<u64> {
        let column = self.column();
        match self.next() {
            Some(Tok::Int(s)) => s.parse::<u64>().map_err(|_| parse_error(column, format!("exponent {s} too large"))),
            _ => Err(parse_error(column, "expected a natural number")),
        }
    }
}

/// Reduces a decimal literal modulo `p` without overflowing.
pub(crate) fn int_mod(digits: &str, p: u64) -> u64 {
    digits.bytes().fold(0u64, |acc, b| ((acc as u128 * 10 + (b - b'0') as u128) % p as u128) as u64)
}
