//! Recursive-descent parser for the ASCII formula grammar.
//!
//! Precedence, tightest first: `~`, `&`, `|`, then `->` and `=>` (right
//! associative). A quantifier's scope extends as far right as possible.
//! Identifiers declared as constants are constants; undeclared identifiers in
//! term position are variables.

use super::ast::{Formula, Term};
use super::signature::{Signature, SymbolKind, KEYWORDS};
use super::SyntaxError;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    LParen,
    RParen,
    Comma,
    Dot,
    Tilde,
    Amp,
    Bar,
    Arrow,
    StrongArrow,
    Equals,
    NotEquals,
    StrongEquals,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Tilde => "`~`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Bar => "`|`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::StrongArrow => "`=>`".into(),
            Tok::Equals => "`=`".into(),
            Tok::NotEquals => "`!=`".into(),
            Tok::StrongEquals => "`==`".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, SyntaxError> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        let next = chars.get(i + 1).map(|&(_, c)| c);
        let col = text[..pos].chars().count() + 1;
        let (tok, width) = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '(' => (Tok::LParen, 1),
            ')' => (Tok::RParen, 1),
            ',' => (Tok::Comma, 1),
            '.' => (Tok::Dot, 1),
            '~' => (Tok::Tilde, 1),
            '&' => (Tok::Amp, 1),
            '|' => (Tok::Bar, 1),
            '-' if next == Some('>') => (Tok::Arrow, 2),
            '=' if next == Some('>') => (Tok::StrongArrow, 2),
            '=' if next == Some('=') => (Tok::StrongEquals, 2),
            '=' => (Tok::Equals, 1),
            '!' if next == Some('=') => (Tok::NotEquals, 2),
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut j = i;
                while j < chars.len()
                    && (chars[j].1.is_ascii_alphanumeric()
                        || chars[j].1 == '_'
                        || chars[j].1 == '\'')
                {
                    j += 1;
                }
                let end = chars.get(j).map_or(text.len(), |&(p, _)| p);
                out.push((Tok::Ident(text[pos..end].to_owned()), col));
                i = j;
                continue;
            }
            other => {
                return Err(SyntaxError::Parse {
                    column: col,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        out.push((tok, col));
        i += width;
    }
    Ok(out)
}

struct Parser<'s> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end_column: usize,
    sig: &'s Signature,
}

impl<'s> Parser<'s> {
    fn new(text: &str, sig: &'s Signature) -> Result<Self, SyntaxError> {
        Ok(Parser {
            toks: tokenize(text)?,
            pos: 0,
            end_column: text.chars().count() + 1,
            sig,
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn column(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_column, |&(_, c)| c)
    }

    fn error(&self, message: impl Into<String>) -> SyntaxError {
        SyntaxError::Parse {
            column: self.column(),
            message: message.into(),
        }
    }

    fn unexpected(&self, wanted: &str) -> SyntaxError {
        match self.peek() {
            Some(t) => self.error(format!("expected {wanted}, found {}", t.describe())),
            None => self.error(format!("expected {wanted}, found end of input")),
        }
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<(), SyntaxError> {
        if self.eat(&tok) {
            Ok(())
        } else {
            Err(self.unexpected(&tok.describe()))
        }
    }

    fn at_end(&self) -> bool {
        self.pos == self.toks.len()
    }

    fn ident(&mut self) -> Result<String, SyntaxError> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.unexpected("an identifier")),
        }
    }

    fn formula(&mut self) -> Result<Formula, SyntaxError> {
        let lhs = self.disjunction()?;
        if self.eat(&Tok::Arrow) {
            Ok(Formula::implies(lhs, self.formula()?))
        } else if self.eat(&Tok::StrongArrow) {
            Ok(Formula::strong_implies(lhs, self.formula()?))
        } else {
            Ok(lhs)
        }
    }

    fn disjunction(&mut self) -> Result<Formula, SyntaxError> {
        let mut acc = self.conjunction()?;
        while self.eat(&Tok::Bar) {
            acc = Formula::or(acc, self.conjunction()?);
        }
        Ok(acc)
    }

    fn conjunction(&mut self) -> Result<Formula, SyntaxError> {
        let mut acc = self.unary()?;
        while self.eat(&Tok::Amp) {
            acc = Formula::and(acc, self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Formula, SyntaxError> {
        if self.eat(&Tok::Tilde) {
            return Ok(Formula::not(self.unary()?));
        }
        self.primary()
    }

    fn bound_variable(&mut self) -> Result<String, SyntaxError> {
        let col = self.column();
        let x = self.ident()?;
        if KEYWORDS.contains(&x.as_str()) || self.sig.kind_of(&x).is_some() {
            return Err(SyntaxError::Parse {
                column: col,
                message: format!("`{x}` is a declared symbol and cannot be bound"),
            });
        }
        Ok(x)
    }

    fn quantified(&mut self, universal: bool) -> Result<Formula, SyntaxError> {
        let mut vars = vec![self.bound_variable()?];
        while self.eat(&Tok::Comma) {
            vars.push(self.bound_variable()?);
        }
        self.expect(Tok::Dot)?;
        let body = self.formula()?;
        Ok(if universal {
            Formula::forall_many(&vars, body)
        } else {
            Formula::exists_many(&vars, body)
        })
    }

    fn parenthesized_formula(&mut self) -> Result<Formula, SyntaxError> {
        self.expect(Tok::LParen)?;
        let f = self.formula()?;
        self.expect(Tok::RParen)?;
        Ok(f)
    }

    fn parenthesized_term(&mut self) -> Result<Term, SyntaxError> {
        self.expect(Tok::LParen)?;
        let t = self.term()?;
        self.expect(Tok::RParen)?;
        Ok(t)
    }

    fn primary(&mut self) -> Result<Formula, SyntaxError> {
        let name = match self.peek() {
            Some(Tok::LParen) => return self.parenthesized_formula(),
            Some(Tok::Ident(s)) => s.clone(),
            _ => return Err(self.unexpected("a formula")),
        };
        match name.as_str() {
            "true" => {
                self.pos += 1;
                return Ok(Formula::truth());
            }
            "false" => {
                self.pos += 1;
                return Ok(Formula::Falsum);
            }
            "forall" | "exists" => {
                self.pos += 1;
                return self.quantified(name == "forall");
            }
            "des" | "cons" | "det" => {
                self.pos += 1;
                let a = self.parenthesized_formula()?;
                return Ok(match name.as_str() {
                    "des" => Formula::des(a),
                    "cons" => Formula::cons(a),
                    _ => Formula::det(a),
                });
            }
            "def" => {
                self.pos += 1;
                return Ok(Formula::defined(self.parenthesized_term()?));
            }
            _ => {}
        }
        match self.sig.kind_of(&name) {
            Some(SymbolKind::Predicate(arity)) => {
                self.pos += 1;
                let args = self.arguments()?;
                if args.len() != arity {
                    return Err(SyntaxError::Arity {
                        symbol: name,
                        expected: arity,
                        found: args.len(),
                    });
                }
                Ok(Formula::Atom(name, args))
            }
            Some(SymbolKind::Proposition) => {
                self.pos += 1;
                Ok(Formula::Prop(name))
            }
            _ => self.equation(),
        }
    }

    fn equation(&mut self) -> Result<Formula, SyntaxError> {
        let lhs = self.term()?;
        let op = self.peek().cloned();
        match op {
            Some(Tok::Equals) => {
                self.pos += 1;
                Ok(Formula::eq(lhs, self.term()?))
            }
            Some(Tok::NotEquals) => {
                self.pos += 1;
                Ok(Formula::not_equal(lhs, self.term()?))
            }
            Some(Tok::StrongEquals) => {
                self.pos += 1;
                Ok(Formula::strong_equal(lhs, self.term()?))
            }
            _ => Err(self.unexpected("`=`, `!=` or `==` after a term")),
        }
    }

    fn arguments(&mut self) -> Result<Vec<Term>, SyntaxError> {
        self.expect(Tok::LParen)?;
        let mut args = vec![self.term()?];
        while self.eat(&Tok::Comma) {
            args.push(self.term()?);
        }
        self.expect(Tok::RParen)?;
        Ok(args)
    }

    fn term(&mut self) -> Result<Term, SyntaxError> {
        let col = self.column();
        let name = self.ident()?;
        if KEYWORDS.contains(&name.as_str()) {
            return Err(SyntaxError::Parse {
                column: col,
                message: format!("expected a term, found keyword `{name}`"),
            });
        }
        match self.sig.kind_of(&name) {
            Some(SymbolKind::Constant) => Ok(Term::Const(name)),
            Some(SymbolKind::Function(arity)) => {
                let args = self.arguments()?;
                if args.len() != arity {
                    return Err(SyntaxError::Arity {
                        symbol: name,
                        expected: arity,
                        found: args.len(),
                    });
                }
                Ok(Term::App(name, args))
            }
            Some(_) => Err(SyntaxError::Parse {
                column: col,
                message: format!("`{name}` is a predicate symbol, expected a term"),
            }),
            None if self.peek() == Some(&Tok::LParen) => Err(SyntaxError::Undeclared(name)),
            None => Ok(Term::Var(name)),
        }
    }
}

pub fn parse_formula(text: &str, sig: &Signature) -> Result<Formula, SyntaxError> {
    let mut p = Parser::new(text, sig)?;
    let f = p.formula()?;
    if !p.at_end() {
        return Err(p.unexpected("end of formula"));
    }
    Ok(f)
}

pub fn parse_term(text: &str, sig: &Signature) -> Result<Term, SyntaxError> {
    let mut p = Parser::new(text, sig)?;
    let t = p.term()?;
    if !p.at_end() {
        return Err(p.unexpected("end of term"));
    }
    Ok(t)
}

/// A comma-separated, possibly empty, list of formulas. Commas inside a
/// quantifier prefix belong to the quantifier.
pub fn parse_formula_list(text: &str, sig: &Signature) -> Result<Vec<Formula>, SyntaxError> {
    let mut p = Parser::new(text, sig)?;
    let mut out = Vec::new();
    if p.at_end() {
        return Ok(out);
    }
    loop {
        out.push(p.formula()?);
        if p.at_end() {
            return Ok(out);
        }
        p.expect(Tok::Comma)?;
    }
}

/// A comma-separated list of distinct variable names, e.g. a query head.
pub fn parse_variable_list(text: &str, sig: &Signature) -> Result<Vec<String>, SyntaxError> {
    let mut p = Parser::new(text, sig)?;
    let mut out: Vec<String> = Vec::new();
    if p.at_end() {
        return Ok(out);
    }
    loop {
        let col = p.column();
        let x = p.bound_variable()?;
        if out.contains(&x) {
            return Err(SyntaxError::Parse {
                column: col,
                message: format!("variable `{x}` listed twice"),
            });
        }
        out.push(x);
        if p.at_end() {
            return Ok(out);
        }
        p.expect(Tok::Comma)?;
    }
}
