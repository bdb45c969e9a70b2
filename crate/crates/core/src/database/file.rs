//! The line-oriented database file format.
//!
//! ```text
//! # comments run to the end of the line
//! const a b c d            # nil is always present
//! pred P/3
//! fact P(a,b,nil)
//! constraint forall x,y,z,y',z'. P(x,y,z) & P(x,y',z') => y = y'
//! query q(x) :- exists y,z. P(x,y,z)
//! ```
//!
//! Declarations are read first, so facts, constraints and queries may
//! appear anywhere in the file.

use crate::query::Query;
use crate::syntax::{parse_formula, parse_variable_list, Signature, SyntaxError};

use super::{Database, DatabaseError, Fact, FactBase, RelationalLanguage};

#[derive(Clone, Debug)]
pub struct DatabaseFile {
    pub database: Database,
    pub queries: Vec<Query>,
}

impl DatabaseFile {
    pub fn query(&self, name: &str) -> Option<&Query> {
        self.queries.iter().find(|q| q.name() == name)
    }
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

fn parse_error(line: usize, message: impl Into<String>) -> DatabaseError {
    DatabaseError::Parse {
        line,
        message: message.into(),
    }
}

fn syntax(line: usize) -> impl Fn(SyntaxError) -> DatabaseError {
    move |source| DatabaseError::Syntax { line, source }
}

pub fn parse_database_file(text: &str) -> Result<DatabaseFile, DatabaseError> {
    let lines: Vec<(usize, &str, &str)> = text
        .lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let line = strip_comment(raw);
            if line.is_empty() {
                return None;
            }
            let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            Some((i + 1, keyword, rest.trim()))
        })
        .collect();

    let mut sig = Signature::with_nil();
    for &(n, keyword, rest) in &lines {
        match keyword {
            "const" => {
                for c in rest.split_whitespace() {
                    sig.add_constant(c).map_err(syntax(n))?;
                }
            }
            "pred" => {
                for decl in rest.split_whitespace() {
                    let (name, arity) = decl.split_once('/').ok_or_else(|| {
                        parse_error(n, format!("expected NAME/ARITY, found `{decl}`"))
                    })?;
                    let arity: usize = arity
                        .parse()
                        .map_err(|_| parse_error(n, format!("`{arity}` is not an arity")))?;
                    sig.add_predicate(name, arity).map_err(syntax(n))?;
                }
            }
            "fact" | "constraint" | "query" => {}
            other => return Err(parse_error(n, format!("unknown declaration `{other}`"))),
        }
    }
    let lang = RelationalLanguage::new(sig)?;
    let sig = lang.signature();

    let mut basis = FactBase::new();
    let mut constraints = Vec::new();
    let mut queries: Vec<Query> = Vec::new();
    for &(n, keyword, rest) in &lines {
        match keyword {
            "fact" => {
                let f = parse_formula(rest, sig).map_err(syntax(n))?;
                let fact = Fact::from_formula(&f).ok_or_else(|| {
                    let undeclared: Vec<String> = f.free_vars().into_iter().collect();
                    if undeclared.is_empty() {
                        parse_error(n, format!("`{rest}` is not an atom"))
                    } else {
                        parse_error(
                            n,
                            format!("undeclared constant(s) {} in fact", undeclared.join(", ")),
                        )
                    }
                })?;
                basis.insert(fact);
            }
            "constraint" => constraints.push(parse_formula(rest, sig).map_err(syntax(n))?),
            "query" => {
                let (head, body) = rest
                    .split_once(":-")
                    .ok_or_else(|| parse_error(n, "expected `query NAME(VARS) :- FORMULA`"))?;
                let head = head.trim();
                let (name, vars) = match head.split_once('(') {
                    Some((name, vars)) => {
                        let vars = vars
                            .strip_suffix(')')
                            .ok_or_else(|| parse_error(n, "unclosed query head"))?;
                        (
                            name.trim(),
                            parse_variable_list(vars, sig).map_err(syntax(n))?,
                        )
                    }
                    None => (head, Vec::new()),
                };
                if name.is_empty() || queries.iter().any(|q| q.name() == name) {
                    return Err(DatabaseError::InvalidQuery(format!(
                        "line {n}: missing or duplicate query name `{name}`"
                    )));
                }
                let body = parse_formula(body, sig).map_err(syntax(n))?;
                queries.push(Query::new(name, vars, body)?);
            }
            _ => {}
        }
    }
    Ok(DatabaseFile {
        database: Database::new(lang, basis, constraints)?,
        queries,
    })
}
