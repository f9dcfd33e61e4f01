//! Words over named generators: `a^2*b*t^-1`, with `e` the empty word.

use crate::error::{Error, Result};
use crate::group::table::GroupTable;

/// A parsed word: a sequence of (generator name, exponent) terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    pub terms: Vec<(String, i64)>,
}

impl Word {
    pub fn parse(text: &str) -> Result<Word> {
        parse_word_at(text, 1, 1)
    }

    /// Evaluates the word in `g` using its named generators.
    pub fn eval(&self, g: &GroupTable) -> Result<usize> {
        let mut acc = 0;
        for (name, exp) in &self.terms {
            let x = g
                .generator(name)
                .ok_or_else(|| Error::Parse { line: 0, column: 0, message: format!("unknown generator `{name}`") })?;
            let base = if *exp < 0 { g.inv(x) } else { x };
            acc = g.mul(acc, g.pow(base, exp.unsigned_abs() as usize));
        }
        Ok(acc)
    }
}

/// Parses a word; `line` and `column` locate the text for error messages.
pub fn parse_word_at(text: &str, line: usize, column: usize) -> Result<Word> {
    let err = |offset: usize, message: String| Error::Parse { line, column: column + offset, message };
    let trimmed = text.trim();
    let lead = text.len() - text.trim_start().len();
    if trimmed.is_empty() {
        return Err(err(0, "empty word".into()));
    }
    if trimmed == "e" {
        return Ok(Word { terms: Vec::new() });
    }
    let mut terms = Vec::new();
    let mut offset = lead;
    for raw in trimmed.split('*') {
        let term = raw.trim();
        let at = offset + (raw.len() - raw.trim_start().len());
        offset += raw.len() + 1;
        let (name, exp) = match term.split_once('^') {
            Some((n, e)) => {
                let e = e.trim().parse::<i64>().map_err(|_| err(at, format!("bad exponent in `{term}`")))?;
                (n.trim(), e)
            }
            None => (term, 1),
        };
        let valid = name.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
            && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !valid {
            return Err(err(at, format!("bad generator name `{name}`")));
        }
        if name == "e" {
            continue;
        }
        terms.push((name.to_string(), exp));
    }
    Ok(Word { terms })
}

/// Evaluates a word given as text.
pub fn eval_word(g: &GroupTable, text: &str) -> Result<usize> {
    Word::parse(text)?.eval(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::construct::{cyclic_named, direct_product};
    use crate::group::table::DEFAULT_CAP;

    #[test]
    fn parses_terms_and_exponents() {
        let w = Word::parse("a^2 * b*t^-1").unwrap();
        assert_eq!(w.terms, vec![("a".into(), 2), ("b".into(), 1), ("t".into(), -1)]);
        assert!(Word::parse("e").unwrap().terms.is_empty());
        assert!(Word::parse("a^x").is_err());
        assert!(Word::parse("2a").is_err());
        assert!(Word::parse("").is_err());
    }

    #[test]
    fn error_reports_column() {
        match parse_word_at("a * 3b", 4, 10) {
            Err(Error::Parse { line: 4, column, .. }) => assert_eq!(column, 14),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn evaluates_in_product_group() {
        let a = cyclic_named(3, "a").unwrap();
        let b = cyclic_named(4, "b").unwrap();
        let g = direct_product(&a, &b, DEFAULT_CAP).unwrap();
        let x = eval_word(&g, "a^2*b^3").unwrap();
        assert_eq!(g.element_order(x), 12);
        assert_eq!(eval_word(&g, "a^3").unwrap(), 0);
        assert_eq!(eval_word(&g, "b^-1").unwrap(), eval_word(&g, "b^3").unwrap());
        assert!(eval_word(&g, "c").is_err());
    }
}
