//! Text format for derivations.
//!
//! ```text
//! # comments start with a hash
//! const a b
//! pred P/1
//! func f/1
//! prop p q
//! 1. Id[P(a)] : P(a) |- P(a)
//! 2. hyp : p |- q
//! 3. or-R[P(a) | q] from 1 : P(a) |- P(a) | q
//! ```
//!
//! Witnesses are separated by `;`. Declarations may appear anywhere but
//! apply to the whole file.

use super::derivation::{Derivation, Justification, Step};
use super::rules::{RuleInstance, RuleName, Witness, WitnessKind};
use super::sequent::Sequent;
use super::ProofError;
use crate::syntax::{
    parse_formula, parse_formula_list, parse_term, parse_variable_list, Signature,
};

#[derive(Clone, Debug)]
pub struct ProofFile {
    pub signature: Signature,
    pub derivation: Derivation,
}

fn parse_error(line: usize, message: impl Into<String>) -> ProofError {
    ProofError::Parse {
        line,
        message: message.into(),
    }
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

fn declare(sig: &mut Signature, keyword: &str, rest: &str, line: usize) -> Result<(), ProofError> {
    for item in rest.split_whitespace() {
        let result = match keyword {
            "const" => sig.add_constant(item),
            "prop" => sig.add_proposition(item),
            _ => {
                let (name, arity) = item.split_once('/').ok_or_else(|| {
                    parse_error(line, format!("expected NAME/ARITY, got `{item}`"))
                })?;
                let arity: usize = arity
                    .parse()
                    .map_err(|_| parse_error(line, format!("bad arity in `{item}`")))?;
                if keyword == "pred" {
                    sig.add_predicate(name, arity)
                } else {
                    sig.add_function(name, arity)
                }
            }
        };
        result.map_err(|e| parse_error(line, e.to_string()))?;
    }
    Ok(())
}

pub fn parse_sequent(text: &str, sig: &Signature) -> Result<Sequent, String> {
    let (l, r) = text.split_once("|-").ok_or("a sequent needs `|-`")?;
    if r.contains("|-") {
        return Err("a sequent has exactly one `|-`".to_owned());
    }
    let left = parse_formula_list(l, sig).map_err(|e| e.to_string())?;
    let right = parse_formula_list(r, sig).map_err(|e| e.to_string())?;
    Ok(Sequent::new(left, right))
}

fn parse_witness(kind: WitnessKind, text: &str, sig: &Signature) -> Result<Witness, String> {
    let text = text.trim();
    match kind {
        WitnessKind::FormulaW => parse_formula(text, sig).map(Witness::Formula),
        WitnessKind::TermW => parse_term(text, sig).map(Witness::Term),
        WitnessKind::Variable => match parse_variable_list(text, sig) {
            Ok(mut xs) if xs.len() == 1 => return Ok(Witness::Variable(xs.remove(0))),
            Ok(_) => return Err(format!("expected a single variable, got `{text}`")),
            Err(e) => Err(e),
        },
    }
    .map_err(|e| format!("witness `{text}`: {e}"))
}

fn parse_justification(head: &str, sig: &Signature) -> Result<Justification, String> {
    let head = head.trim();
    if head == "hyp" {
        return Ok(Justification::Hypothesis);
    }
    let (rule_text, rest) = match (head.find('['), head.rfind(']')) {
        (Some(open), Some(close)) if open < close => (
            &head[..open],
            Some((&head[open + 1..close], &head[close + 1..])),
        ),
        (None, None) => match head.split_once(char::is_whitespace) {
            Some((r, rest)) => (r, Some(("", rest))),
            None => (head, Some(("", ""))),
        },
        _ => return Err("unbalanced `[` `]`".to_owned()),
    };
    let rule: RuleName = rule_text.trim().parse()?;
    let (witness_text, tail) = rest.expect("always set");
    let kinds = rule.witness_kinds();
    let parts: Vec<&str> = if witness_text.trim().is_empty() {
        Vec::new()
    } else {
        witness_text.split(';').collect()
    };
    if parts.len() != kinds.len() {
        return Err(format!(
            "{rule} takes {} witness(es), got {}",
            kinds.len(),
            parts.len()
        ));
    }
    let witnesses = kinds
        .iter()
        .zip(parts)
        .map(|(&k, t)| parse_witness(k, t, sig))
        .collect::<Result<Vec<_>, _>>()?;
    let tail = tail.trim();
    let premises = if tail.is_empty() {
        Vec::new()
    } else {
        let list = tail
            .strip_prefix("from")
            .ok_or_else(|| format!("expected `from`, got `{tail}`"))?;
        list.split(',')
            .map(|n| {
                n.trim()
                    .parse::<usize>()
                    .map_err(|_| format!("bad premise index `{}`", n.trim()))
            })
            .collect::<Result<Vec<_>, _>>()?
    };
    Ok(Justification::Rule {
        instance: RuleInstance::new(rule, witnesses),
        premises,
    })
}

pub fn parse_proof_file(text: &str) -> Result<ProofFile, ProofError> {
    let mut signature = Signature::new();
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip_comment(l)))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let mut step_lines = Vec::new();
    for &(n, line) in &lines {
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        if matches!(keyword, "const" | "pred" | "func" | "prop") {
            declare(&mut signature, keyword, rest, n)?;
        } else {
            step_lines.push((n, line));
        }
    }
    let mut derivation = Derivation::new();
    for (n, line) in step_lines {
        let (index, rest) = line
            .split_once('.')
            .ok_or_else(|| parse_error(n, "expected `<index>. <justification> : <sequent>`"))?;
        let index: usize = index
            .trim()
            .parse()
            .map_err(|_| parse_error(n, format!("bad step index `{}`", index.trim())))?;
        if index != derivation.len() + 1 {
            return Err(parse_error(
                n,
                format!(
                    "step {index} out of order, expected {}",
                    derivation.len() + 1
                ),
            ));
        }
        let (head, sequent) = rest
            .split_once(':')
            .ok_or_else(|| parse_error(n, "missing `:` before the sequent"))?;
        let justification = parse_justification(head, &signature).map_err(|m| parse_error(n, m))?;
        let sequent = parse_sequent(sequent, &signature).map_err(|m| parse_error(n, m))?;
        derivation.steps.push(Step {
            sequent,
            justification,
        });
    }
    if derivation.is_empty() {
        return Err(ProofError::Empty);
    }
    Ok(ProofFile {
        signature,
        derivation,
    })
}
