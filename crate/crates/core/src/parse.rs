//! Text input: rings and ideals, derivations, and monomial maps.
//!
//! ```text
//! input   ::= "ring" var ("," var)* ";" ideal
//! ideal   ::= gen ("," gen)*
//! gen     ::= factor ("*" factor)* | "1"
//! factor  ::= var ("^" posint)?
//! deriv   ::= ["-"] term (("+" | "-") term)*
//! term    ::= [rational "*"] (factor "*")* "d_" var (("*" factor)*)
//! map     ::= var "=" gen (";" var "=" gen)* [";"]
//! ```
//!
//! Whitespace is insignificant. Errors carry 1-based line and column.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::chart::MonomialMap;
use crate::derivation::GradedDerivation;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::linalg::{parse_q, Q};
use crate::ring::{ExponentVector, RingContext};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    /// `d_x` or `∂x`.
    Partial(String),
    Int(String),
    Sym(char),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, column);
        if c == '\n' {
            line += 1;
            column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            i += 1;
            continue;
        }
        let start = i;
        if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            column += i - start;
            let tok = match word.strip_prefix("d_") {
                Some(rest) if !rest.is_empty() => Tok::Partial(rest.to_string()),
                _ => Tok::Ident(word),
            };
            out.push(Token { tok, line: l0, column: c0 });
        } else if c == '∂' {
            i += 1;
            let s = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            if s == i {
                return Err(syntax(l0, c0, "expected a variable name after `∂`"));
            }
            column += i - start;
            out.push(Token {
                tok: Tok::Partial(chars[s..i].iter().collect()),
                line: l0,
                column: c0,
            });
        } else if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            column += i - start;
            out.push(Token {
                tok: Tok::Int(chars[start..i].iter().collect()),
                line: l0,
                column: c0,
            });
        } else if "^*,;=+-/".contains(c) {
            i += 1;
            column += 1;
            out.push(Token {
                tok: Tok::Sym(c),
                line: l0,
                column: c0,
            });
        } else {
            return Err(syntax(l0, c0, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn new(text: &str) -> Result<Self> {
        let toks = lex(text)?;
        let line = text.lines().count().max(1);
        let column = text.lines().last().map_or(0, |l| l.chars().count()) + 1;
        Ok(Self {
            toks,
            pos: 0,
            end: (line, column),
        })
    }

    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.pos)
    }

    fn here(&self) -> (usize, usize) {
        self.peek().map_or(self.end, |t| (t.line, t.column))
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn at_sym(&self, c: char) -> bool {
        matches!(self.peek(), Some(Token { tok: Tok::Sym(s), .. }) if *s == c)
    }

    fn expect_sym(&mut self, c: char) -> Result<()> {
        if self.at_sym(c) {
            self.pos += 1;
            Ok(())
        } else {
            let (l, col) = self.here();
            Err(syntax(l, col, format!("expected `{c}`")))
        }
    }

    fn done(&self) -> bool {
        self.pos >= self.toks.len()
    }

    fn expect_end(&self) -> Result<()> {
        if self.done() {
            Ok(())
        } else {
            let (l, c) = self.here();
            Err(syntax(l, c, "unexpected trailing input"))
        }
    }

    fn ident(&mut self) -> Result<(String, usize, usize)> {
        match self.next() {
            Some(Token {
                tok: Tok::Ident(name),
                line,
                column,
            }) => Ok((name, line, column)),
            Some(t) => Err(syntax(t.line, t.column, "expected a variable name")),
            None => Err(syntax(self.end.0, self.end.1, "expected a variable name")),
        }
    }

    fn posint(&mut self) -> Result<u32> {
        if self.at_sym('-') {
            let (line, column) = self.here();
            return Err(Error::NegativeExponent { line, column });
        }
        match self.next() {
            Some(Token {
                tok: Tok::Int(s),
                line,
                column,
            }) => s.parse().map_err(|_| syntax(line, column, "exponent is too large")),
            Some(t) => Err(syntax(t.line, t.column, "expected an exponent")),
            None => Err(syntax(self.end.0, self.end.1, "expected an exponent")),
        }
    }

    fn lookup(ctx: &RingContext, name: String, line: usize, column: usize) -> Result<usize> {
        ctx.index_of(&name)
            .ok_or(Error::UnknownVariable { name, line, column })
    }

    /// `var ("^" posint)?`, accumulated into `exp`.
    fn factor(&mut self, ctx: &RingContext, exp: &mut [u32]) -> Result<()> {
        let (name, line, column) = self.ident()?;
        let i = Self::lookup(ctx, name, line, column)?;
        let e = if self.at_sym('^') {
            self.pos += 1;
            self.posint()?
        } else {
            1
        };
        exp[i] = exp[i]
            .checked_add(e)
            .ok_or_else(|| syntax(line, column, "exponent is too large"))?;
        Ok(())
    }

    fn monomial(&mut self, ctx: &RingContext) -> Result<Vec<u32>> {
        let mut exp = vec![0; ctx.n()];
        if let Some(Token { tok: Tok::Int(s), .. }) = self.peek() {
            if s == "1" {
                self.pos += 1;
                return Ok(exp);
            }
            let (l, c) = self.here();
            return Err(syntax(l, c, "only the constant 1 may appear as a generator"));
        }
        self.factor(ctx, &mut exp)?;
        while self.at_sym('*') {
            self.pos += 1;
            self.factor(ctx, &mut exp)?;
        }
        Ok(exp)
    }

    fn ring_header(&mut self) -> Result<RingContext> {
        let (kw, line, column) = self.ident()?;
        if kw != "ring" {
            return Err(syntax(line, column, "expected `ring`"));
        }
        let mut names = vec![self.ident()?];
        while self.at_sym(',') {
            self.pos += 1;
            names.push(self.ident()?);
        }
        self.expect_sym(';')?;
        let plain: Vec<&str> = names.iter().map(|(n, _, _)| n.as_str()).collect();
        RingContext::new(&plain).map_err(|e| match e {
            Error::InvalidRing(msg) => syntax(line, column, msg),
            other => other,
        })
    }

    fn ideal(&mut self, ctx: &RingContext) -> Result<MonomialIdeal> {
        let mut gens = vec![ExponentVector::new(self.monomial(ctx)?)];
        while self.at_sym(',') {
            self.pos += 1;
            gens.push(ExponentVector::new(self.monomial(ctx)?));
        }
        self.expect_end()?;
        MonomialIdeal::new(ctx, gens)
    }
}

/// `ring x, y; x^10, x^8*y` into a ring and its canonical ideal.
pub fn parse_ring_and_ideal(text: &str) -> Result<(RingContext, MonomialIdeal)> {
    let mut p = Parser::new(text)?;
    let ctx = p.ring_header()?;
    let ideal = p.ideal(&ctx)?;
    Ok((ctx, ideal))
}

/// Ideal text over an already declared ring.
pub fn parse_ideal(ctx: &RingContext, text: &str) -> Result<MonomialIdeal> {
    Parser::new(text)?.ideal(ctx)
}

/// `ring x, y;` on its own, or a bare `x, y` list.
pub fn parse_ring(text: &str) -> Result<RingContext> {
    let trimmed = text.trim();
    let mut p = Parser::new(trimmed)?;
    if trimmed.starts_with("ring") && trimmed.ends_with(';') {
        let ctx = p.ring_header()?;
        p.expect_end()?;
        return Ok(ctx);
    }
    let mut names = vec![p.ident()?];
    while p.at_sym(',') {
        p.pos += 1;
        names.push(p.ident()?);
    }
    p.expect_end()?;
    let plain: Vec<&str> = names.iter().map(|(n, _, _)| n.as_str()).collect();
    RingContext::new(&plain)
}

/// A derivation such as `x*d_x - 2/3*y^2*d_y`, split into homogeneous pieces.
///
/// Pieces are returned in lex order of degree; an input that cancels to
/// zero yields an empty list.
pub fn parse_derivation(ctx: &RingContext, text: &str) -> Result<Vec<GradedDerivation>> {
    let mut p = Parser::new(text)?;
    let n = ctx.n();
    let mut pieces: BTreeMap<Vec<i64>, Vec<Q>> = BTreeMap::new();
    let mut negative = false;
    if p.at_sym('-') {
        p.pos += 1;
        negative = true;
    } else if p.at_sym('+') {
        p.pos += 1;
    }
    loop {
        let (line, column) = p.here();
        let mut coeff = Q::from_integer(1.into());
        if let Some(Token { tok: Tok::Int(num), .. }) = p.peek().cloned() {
            p.pos += 1;
            let mut text = num;
            if p.at_sym('/') {
                p.pos += 1;
                match p.next() {
                    Some(Token { tok: Tok::Int(den), .. }) => text = format!("{text}/{den}"),
                    _ => return Err(syntax(line, column, "expected a denominator")),
                }
            }
            coeff = parse_q(&text).ok_or_else(|| syntax(line, column, "invalid coefficient"))?;
            if !p.at_sym('*') {
                return Err(syntax(line, column, "a coefficient must be followed by `*`"));
            }
            p.pos += 1;
        }
        if negative {
            coeff = -coeff;
        }
        let mut exp = vec![0u32; n];
        let mut slot: Option<usize> = None;
        loop {
            match p.peek().cloned() {
                Some(Token {
                    tok: Tok::Partial(name),
                    line: l,
                    column: c,
                }) => {
                    p.pos += 1;
                    if slot.is_some() {
                        return Err(syntax(l, c, "a term may contain only one partial derivative"));
                    }
                    slot = Some(Parser::lookup(ctx, name, l, c)?);
                }
                Some(_) => p.factor(ctx, &mut exp)?,
                None => return Err(syntax(p.end.0, p.end.1, "expected a term")),
            }
            if p.at_sym('*') {
                p.pos += 1;
            } else {
                break;
            }
        }
        let Some(i) = slot else {
            return Err(syntax(line, column, "term has no partial derivative `d_<var>`"));
        };
        let mut degree: Vec<i64> = exp.iter().map(|&e| i64::from(e)).collect();
        degree[i] -= 1;
        pieces.entry(degree).or_insert_with(|| vec![Q::zero(); n])[i] += coeff;
        if p.at_sym('+') || p.at_sym('-') {
            negative = p.at_sym('-');
            p.pos += 1;
        } else {
            break;
        }
    }
    p.expect_end()?;
    pieces
        .into_iter()
        .filter(|(_, c)| c.iter().any(|x| !x.is_zero()))
        .map(|(b, c)| GradedDerivation::new(b, c))
        .collect()
}

/// `y1 = x1; y2 = x1^2*x2`. The source ring is the left-hand sides in order.
/// Without an explicit target ring, target variables are taken in order of
/// first appearance.
pub fn parse_map(text: &str, target: Option<&RingContext>) -> Result<MonomialMap> {
    let mut p = Parser::new(text)?;
    let mut bindings: Vec<(String, Vec<(String, u32, usize, usize)>)> = Vec::new();
    let mut first_seen: Vec<String> = Vec::new();
    while !p.done() {
        let (lhs, _, _) = p.ident()?;
        p.expect_sym('=')?;
        let mut factors = Vec::new();
        loop {
            let (name, line, column) = p.ident()?;
            let e = if p.at_sym('^') {
                p.pos += 1;
                p.posint()?
            } else {
                1
            };
            if !first_seen.contains(&name) {
                first_seen.push(name.clone());
            }
            factors.push((name, e, line, column));
            if p.at_sym('*') {
                p.pos += 1;
            } else {
                break;
            }
        }
        bindings.push((lhs, factors));
        if p.at_sym(';') {
            p.pos += 1;
        } else {
            p.expect_end()?;
        }
    }
    if bindings.is_empty() {
        let (l, c) = p.here();
        return Err(syntax(l, c, "empty map"));
    }
    let source_names: Vec<&str> = bindings.iter().map(|(s, _)| s.as_str()).collect();
    let source = RingContext::new(&source_names).map_err(|e| match e {
        Error::InvalidRing(msg) => Error::InvalidMap(msg),
        other => other,
    })?;
    let target = match target {
        Some(t) => t.clone(),
        None => RingContext::new(&first_seen).map_err(|e| match e {
            Error::InvalidRing(msg) => Error::InvalidMap(msg),
            other => other,
        })?,
    };
    let mut rows = Vec::new();
    for (_, factors) in bindings {
        let mut row = vec![0u32; target.n()];
        for (name, e, line, column) in factors {
            let j = Parser::lookup(&target, name, line, column)?;
            row[j] += e;
        }
        rows.push(row);
    }
    MonomialMap::new(&source, &target, rows)
}
